#include "filiform/table_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace filiform {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(std::move(t));
  return tokens;
}

int parse_index(const std::string& token, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string(what) + " must be a positive integer, got '" + token + "'");
  }
}

bool plain_digits(const std::string& t) {
  if (t.empty()) return false;
  for (char ch : t)
    if (ch < '0' || ch > '9') return false;
  return true;
}

Rational parse_value(const std::string& token, int line_no) {
  const auto slash = token.find('/');
  std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  const bool neg = !num.empty() && num.front() == '-';
  if (neg) num.erase(0, 1);
  // the sign sits on the numerator and the fraction is already reduced;
  // anything else is treated as a typo rather than silently normalized
  if (!plain_digits(num) || !plain_digits(den))
    throw ParseError(line_no, "malformed rational '" + token + "'");
  mpz_class n(num, 10), d(den, 10);
  if (sgn(d) == 0) throw ParseError(line_no, "zero denominator in '" + token + "'");
  if (sgn(n) == 0) throw ParseError(line_no, "zero entries are not stored; drop the line");
  if (gcd(n, d) != 1)
    throw ParseError(line_no, "value '" + token + "' is not in lowest terms");
  if (neg) n = -n;
  return Rational(std::move(n), std::move(d));
}

// shared line loop; entry_arity is 3 for tables, 2 for sequences
template <typename Store>
void parse_lines(std::istream& in, std::size_t entry_arity, Store store) {
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != entry_arity)
      throw ParseError(line_no, "expected " + std::to_string(entry_arity) + " fields, got " +
                                    std::to_string(tokens.size()));
    store(tokens, line_no);
  }
}

}  // namespace

ParamTable parse_table(std::istream& in) {
  ParamTable table;
  parse_lines(in, 3, [&](const std::vector<std::string>& t, int line_no) {
    const int j = parse_index(t[0], line_no, "row index j");
    const int s = parse_index(t[1], line_no, "column index s");
    if (!table.get(j, s).is_zero())
      throw ParseError(line_no, "duplicate entry (" + t[0] + ", " + t[1] + ")");
    table.set(j, s, parse_value(t[2], line_no));
  });
  return table;
}

MetabelianSeq parse_seq(std::istream& in) {
  MetabelianSeq seq;
  parse_lines(in, 2, [&](const std::vector<std::string>& t, int line_no) {
    const int s = parse_index(t[0], line_no, "index s");
    if (!seq.get(s).is_zero()) throw ParseError(line_no, "duplicate entry " + t[0]);
    seq.set(s, parse_value(t[1], line_no));
  });
  return seq;
}

std::string format_table(const ParamTable& table) {
  std::string out;
  for (const auto& [key, v] : table.entries)
    out += std::to_string(key.first) + " " + std::to_string(key.second) + " " + v.str() + "\n";
  return out;
}

std::string format_seq(const MetabelianSeq& seq) {
  std::string out;
  for (const auto& [s, v] : seq.entries) out += std::to_string(s) + " " + v.str() + "\n";
  return out;
}

}  // namespace filiform
