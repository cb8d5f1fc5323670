// filiform: exact computations in truncated infinite filiform Lie algebras.
//
// Verbs (all work modulo L^{N+1}, N given by --trunc):
//   bracket  [e_k, e_m] from a parameter table
//   jacobi   Jacobi violations of a table, or the symbolic conditions
//   series   derived series and abelianity threshold
//   canon    canonical form of a metabelian sequence
//   iso      isomorphism of two metabelian sequences over C
//   gen      named tables: m0 | witt | wittk <k>
//
// Tables and sequences are plain text ("j s p/q" / "s p/q", # comments);
// "-" reads standard input. Reports are deterministic; header lines start
// with '#' so gen output pipes straight back in.
//
// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 root obstruction.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "filiform/classify.hpp"
#include "filiform/generators.hpp"
#include "filiform/jacobi.hpp"
#include "filiform/series.hpp"
#include "filiform/table_io.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse_error = 2;
constexpr int exit_domain_error = 3;
constexpr int exit_root_obstruction = 4;

struct RootObstructionExit {};

filiform::ParamTable load_table(const std::string& path) {
  if (path == "-") return filiform::parse_table(std::cin);
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open '" + path + "'");
  return filiform::parse_table(in);
}

filiform::MetabelianSeq load_seq(const std::string& path) {
  if (path == "-") return filiform::parse_seq(std::cin);
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open '" + path + "'");
  return filiform::parse_seq(in);
}

void print_header(const std::string& what) { std::cout << "# filiform " << what << "\n"; }

void cmd_bracket(const std::string& file, int n, int k, int m) {
  const auto table = load_table(file);
  print_header("bracket --trunc " + std::to_string(n) + " --pair " + std::to_string(k) + " " +
               std::to_string(m));
  std::cout << to_string(filiform::bracket_basis(k, m, table, n)) << "\n";
}

void cmd_jacobi(const std::string& file, int n, bool symbolic) {
  if (symbolic) {
    print_header("jacobi --symbolic --trunc " + std::to_string(n));
    const auto polys = filiform::jacobi_polynomials(n);
    std::cout << "polynomials: " << polys.size() << "\n";
    for (const auto& p : polys) std::cout << to_string(p) << "\n";
    return;
  }
  const auto table = load_table(file);
  print_header("jacobi --trunc " + std::to_string(n));
  const auto report = filiform::jacobi_check(table, n);
  if (report.ok()) {
    std::cout << "OK up to degree " << n << "\n";
    return;
  }
  std::cout << "violations: " << report.violations.size() << "\n";
  for (const auto& [key, residual] : report.violations) {
    auto name = [](int sym) {
      return sym == filiform::symbol_a ? std::string("a") : "e_" + std::to_string(sym);
    };
    std::cout << "(" << name(key[0]) << ", " << name(key[1]) << ", " << name(key[2])
              << "): " << to_string(residual) << "\n";
  }
}

void cmd_series(const std::string& file, int n) {
  const auto table = load_table(file);
  print_header("series --trunc " + std::to_string(n));
  const auto series = filiform::derived_series(table, n);
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::cout << "derived[" << i + 1 << "] dim=" << series[i].size();
    if (!series[i].empty()) {
      std::cout << ":";
      for (const auto& v : series[i]) std::cout << " " << to_string(v) << ";";
    }
    std::cout << "\n";
  }
  // smallest k with span{e_k..e_N} abelian, from the highest violating pair
  int threshold = 2;
  for (int i = n - 1; i >= 2; --i) {
    bool clean = true;
    for (int j = i + 1; j <= n && clean; ++j)
      clean = filiform::bracket_basis(i, j, table, n).is_zero();
    if (!clean) {
      threshold = i + 1;
      break;
    }
  }
  if (threshold > n)
    std::cout << "abelian from: none <= " << n << "\n";
  else
    std::cout << "abelian from: k=" << threshold << "\n";
}

void cmd_canon(const std::string& file, int n) {
  const auto seq = load_seq(file);
  print_header("canon --trunc " + std::to_string(n));
  const auto result = filiform::canonicalize(seq, n);
  if (result.obstructed()) {
    std::cout << to_string(result.obstruction()) << "\n";
    throw RootObstructionExit{};
  }
  std::cout << to_string(result.form()) << " (up to degree " << result.horizon << ")\n";
}

void cmd_iso(const std::string& file1, const std::string& file2, int n) {
  if (file1 == "-" && file2 == "-") throw std::domain_error("only one input may be standard input");
  const auto seq1 = load_seq(file1);
  const auto seq2 = load_seq(file2);
  print_header("iso --trunc " + std::to_string(n));
  if (filiform::iso_equivalent(seq1, seq2, n))
    std::cout << "ISOMORPHIC\n";
  else
    std::cout << "NOT ISOMORPHIC (up to degree " << n << ")\n";
}

void cmd_gen(const std::string& name, int k, int n) {
  filiform::ParamTable table;
  if (name == "m0")
    table = filiform::m0(n);
  else if (name == "witt")
    table = filiform::witt_positive(n);
  else if (name == "wittk")
    table = filiform::witt_subalgebra(k, n);
  else
    throw std::domain_error("unknown generator '" + name + "' (expected m0 | witt | wittk)");
  print_header("gen " + name + (name == "wittk" ? " " + std::to_string(k) : "") + " --trunc " +
               std::to_string(n));
  std::cout << "# entries: " << table.entries.size() << "\n" << filiform::format_table(table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bracket, Jacobi, and classification computations for "
               "truncated infinite filiform Lie algebras"};
  app.require_subcommand(1);

  auto add_trunc = [](CLI::App* cmd, int& n) {
    cmd->add_option("--trunc", n, "truncation degree N (compute modulo L^{N+1})")
        ->required()
        ->check(CLI::Range(3, 200));
  };

  int n = 0;
  std::string file1, file2, gen_name;
  int pair_k = 0, pair_m = 0, wittk_k = 2;
  bool symbolic = false;

  auto* bracket = app.add_subcommand("bracket", "print [e_k, e_m] for a parameter table");
  bracket->add_option("table", file1, "table file, or - for stdin")->required();
  add_trunc(bracket, n);
  auto* pair = bracket->add_option("--pair", "basis indices k m");
  pair->required()->expected(2);

  auto* jacobi = app.add_subcommand("jacobi", "report Jacobi violations, or the symbolic conditions");
  jacobi->add_option("table", file1, "table file, or - for stdin");
  add_trunc(jacobi, n);
  jacobi->add_flag("--symbolic", symbolic, "emit the quadratic polynomial conditions instead");

  auto* series = app.add_subcommand("series", "derived series and abelianity threshold");
  series->add_option("table", file1, "table file, or - for stdin")->required();
  add_trunc(series, n);

  auto* canon = app.add_subcommand("canon", "canonical form of a metabelian sequence");
  canon->add_option("seq", file1, "sequence file, or - for stdin")->required();
  add_trunc(canon, n);

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two metabelian sequences over C");
  iso->add_option("seq1", file1, "first sequence file, or - for stdin")->required();
  iso->add_option("seq2", file2, "second sequence file, or - for stdin")->required();
  add_trunc(iso, n);

  auto* gen = app.add_subcommand("gen", "emit a named table: m0 | witt | wittk <k>");
  gen->add_option("name", gen_name, "m0 | witt | wittk")->required();
  gen->add_option("k", wittk_k, "subalgebra parameter for wittk (>= 2)");
  add_trunc(gen, n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bracket->parsed()) {
      const auto values = pair->results();
      pair_k = std::stoi(values[0]);
      pair_m = std::stoi(values[1]);
      if (pair_k < 1 || pair_k > n || pair_m < 1 || pair_m > n)
        throw std::domain_error("--pair indices must lie in 1..N");
      cmd_bracket(file1, n, pair_k, pair_m);
    } else if (jacobi->parsed()) {
      if (!symbolic && file1.empty()) throw std::domain_error("jacobi needs a table file (or --symbolic)");
      cmd_jacobi(file1, n, symbolic);
    } else if (series->parsed()) {
      cmd_series(file1, n);
    } else if (canon->parsed()) {
      cmd_canon(file1, n);
    } else if (iso->parsed()) {
      cmd_iso(file1, file2, n);
    } else if (gen->parsed()) {
      cmd_gen(gen_name, wittk_k, n);
    }
  } catch (const filiform::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const RootObstructionExit&) {
    return exit_root_obstruction;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_domain_error;
  }
  return exit_ok;
}
