// Command-line front end for the Ferrers graph invariant library.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ferrers/chromatic.hpp"
#include "ferrers/csf.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/selftest.hpp"
#include "ferrers/trees.hpp"

namespace {

using nlohmann::json;
using namespace ferrers;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

struct GraphInput {
  std::string partition_text;
  std::string word_text;
  std::string format = "text";

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--partition", partition_text,
                              "partition, comma-separated, largest first");
    auto* w = cmd->add_option("--word", word_text, "ab-word over {a,b}");
    p->excludes(w);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  bool has_input() const {
    return !partition_text.empty() || !word_text.empty();
  }

  Partition partition() const {
    if (!partition_text.empty()) return Partition::parse(partition_text);
    if (!word_text.empty()) return ABWord::parse(word_text).to_partition();
    throw ParseError("exactly one of --partition / --word is required");
  }

  ABWord word() const {
    if (!word_text.empty()) return ABWord::parse(word_text);
    return ABWord::from_partition(partition());
  }

  void emit(const json& out) const {
    if (format == "json") {
      std::cout << out.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : out.items()) {
      if (out.size() > 1) std::cout << key << ": ";
      if (value.is_string()) {
        std::cout << value.get<std::string>() << "\n";
      } else {
        std::cout << value.dump() << "\n";
      }
    }
  }
};

std::vector<Rational> parse_values(const std::string& text) {
  std::vector<Rational> values;
  if (text.empty()) return values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    values.push_back(parse_rational(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

Assignment parse_assignment(const std::string& x_text,
                            const std::string& y_text,
                            const FerrersGraph& g) {
  const auto xs = parse_values(x_text);
  const auto ys = parse_values(y_text);
  if (static_cast<int>(xs.size()) != g.row_count() ||
      static_cast<int>(ys.size()) != g.col_count()) {
    throw ParseError("need " + std::to_string(g.row_count()) +
                     " x-values and " + std::to_string(g.col_count()) +
                     " y-values");
  }
  Assignment a;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    a[Variable::x(static_cast<int>(i))] = xs[i];
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    a[Variable::y(static_cast<int>(j))] = ys[j];
  }
  return a;
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

int env_box_limit(int fallback) {
  if (const char* env = std::getenv("FERRERS_MAX_BOXES")) {
    return std::atoi(env);
  }
  return fallback;
}

ResourceGuard env_guard(ResourceGuard guard) {
  guard.max_boxes = env_box_limit(guard.max_boxes);
  return guard;
}

/// Vertex name "u3" or "v1" to the flat id used by the oracles.
int parse_vertex(const std::string& name, const FerrersGraph& g) {
  if (name.size() < 2 || (name[0] != 'u' && name[0] != 'v')) {
    throw ParseError("vertex must look like u0 or v2: '" + name + "'");
  }
  const int index = std::atoi(name.c_str() + 1);
  return name[0] == 'u' ? g.u_vertex(index) : g.v_vertex(index);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact enumerative invariants of Ferrers graphs"};
  app.require_subcommand(1);

  GraphInput input;
  std::string x_text;
  std::string y_text;
  std::optional<long long> eval_at;
  std::string basis = "p";
  std::string specialize_text;
  int threads = 1;
  int oracle_t = 2;
  std::string sink_name;
  int given_row = 0;
  std::string oracle_values;

  auto* info = app.add_subcommand("info", "shape summary");
  auto* trees_cmd = app.add_subcommand("trees", "spanning tree count");
  auto* weighted = app.add_subcommand(
      "weighted-trees", "weighted spanning tree sum at a point");
  weighted->add_option("--x", x_text, "x_0..x_n values")->required();
  weighted->add_option("--y", y_text, "y_0..y_m values")->required();
  auto* vertebrates = app.add_subcommand("vertebrates", "vertebrate count");
  auto* rooks = app.add_subcommand("rooks", "non-attacking rook placements");
  auto* hamiltonian =
      app.add_subcommand("hamiltonian", "Hamiltonian path count (n = m)");
  auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial");
  chromatic->add_option("--eval", eval_at, "evaluate at t");
  chromatic->add_option("--threads", threads, "split the 2^m sum");
  auto* excedance_cmd =
      app.add_subcommand("excedance", "excedance set statistic [w]");
  auto* csf = app.add_subcommand("csf", "chromatic symmetric function");
  csf->add_option("--basis", basis, "expansion basis")
      ->check(CLI::IsMember({"p", "m"}));
  csf->add_option("--specialize", specialize_text,
                  "evaluate at the given variable values");
  csf->add_option("--threads", threads, "split the 2^boxes sum");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "brute-force oracle counterparts");
  oracle_cmd->require_subcommand(1);
  auto* o_spanning =
      oracle_cmd->add_subcommand("spanning-count", "Kirchhoff determinant");
  auto* o_trees =
      oracle_cmd->add_subcommand("trees", "exhaustive spanning tree count");
  auto* o_ham =
      oracle_cmd->add_subcommand("hamiltonian", "DFS Hamiltonian paths");
  auto* o_bij = oracle_cmd->add_subcommand("bijections",
                                           "permissible bijections (n = m)");
  auto* o_chrom =
      oracle_cmd->add_subcommand("chromatic", "proper coloring count");
  o_chrom->add_option("--t", oracle_t, "number of colors")->required();
  auto* o_chrom_poly = oracle_cmd->add_subcommand(
      "chromatic-poly", "interpolated chromatic polynomial");
  auto* o_exc =
      oracle_cmd->add_subcommand("excedance", "S_{|w|+1} enumeration");
  auto* o_sink = oracle_cmd->add_subcommand(
      "acyclic-sink", "acyclic orientations with a unique given sink");
  o_sink->add_option("--sink", sink_name, "vertex, e.g. u0 or v2")
      ->required();
  auto* o_pattern = oracle_cmd->add_subcommand(
      "coloring-row", "red-blue patterns with a given all-red row");
  o_pattern->add_option("--row", given_row, "distinguished row")->required();
  auto* o_csf = oracle_cmd->add_subcommand(
      "csf", "specialized CSF over proper colorings");
  o_csf->add_option("--values", oracle_values, "variable values")->required();

  auto* selftest =
      app.add_subcommand("selftest", "run the cross-validation suite");

  for (CLI::App* cmd :
       {info, trees_cmd, weighted, vertebrates, rooks, hamiltonian, chromatic,
        excedance_cmd, csf, o_spanning, o_trees, o_ham, o_bij, o_chrom,
        o_chrom_poly, o_exc, o_sink, o_pattern, o_csf}) {
    input.attach(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (selftest->parsed()) {
    bool all_passed = true;
    for (const CheckResult& result : run_selftest()) {
      all_passed = all_passed && result.passed;
      std::cout << (result.passed ? "PASS" : "FAIL") << "  " << result.name
                << " (" << result.checks << " checks)";
      if (!result.passed) std::cout << " -- " << result.detail;
      std::cout << "\n";
    }
    return all_passed ? kExitOk : 1;
  }

  if (!input.has_input()) {
    std::cerr << "error: exactly one of --partition / --word is required\n";
    return kExitUsage;
  }

  const Partition p = input.partition();
  const ABWord w = input.word();
  const FerrersGraph g{p};
  json out;

  if (info->parsed()) {
    out["partition"] = partition_to_json(p);
    out["dual"] = partition_to_json(p.conjugate());
    out["word"] = w.str();
    out["u_degrees"] = partition_to_json(p);
    out["v_degrees"] = partition_to_json(p.conjugate());
    out["boxes"] = p.boxes();
  } else if (trees_cmd->parsed()) {
    out["trees"] = spanning_tree_count(g).str();
  } else if (weighted->parsed()) {
    const Assignment a = parse_assignment(x_text, y_text, g);
    out["weighted_trees"] =
        rational_str(weighted_spanning_sum(g).evaluate(a));
  } else if (vertebrates->parsed()) {
    out["vertebrates"] = vertebrate_count(g).str();
  } else if (rooks->parsed()) {
    out["rooks"] = rook_count(g).str();
  } else if (hamiltonian->parsed()) {
    out["hamiltonian_paths"] = hamiltonian_path_count(g).str();
  } else if (chromatic->parsed()) {
    const IntPolynomial chi = chromatic_polynomial(w, threads);
    out["chromatic"] = polynomial_to_json(chi);
    if (eval_at) out["value"] = chi.evaluate(BigInt(*eval_at)).str();
  } else if (excedance_cmd->parsed()) {
    out["excedance"] = excedance_statistic(w).str();
  } else if (csf->parsed()) {
    SymmetricExpansion expansion;
    if (basis == "p") {
      expansion = csf_p_basis(g, env_box_limit(24), threads);
    } else {
      const auto& parts = p.parts();
      for (int part : parts) {
        if (part != parts.front()) {
          throw DomainError(
              "m-basis expansion applies to complete bipartite shapes "
              "(rectangular partitions) only");
        }
      }
      expansion = csf_complete_bipartite_m_basis(p.rows(), p.cols());
    }
    out["basis"] = basis;
    out["expansion"] = expansion_to_json(expansion);
    if (!specialize_text.empty()) {
      const auto values = parse_values(specialize_text);
      const Rational value = basis == "p" ? specialize_p(expansion, values)
                                          : specialize_m(expansion, values);
      out["value"] = rational_str(value);
    }
  } else if (o_spanning->parsed()) {
    out["trees"] = oracle::spanning_count_matrix_tree(g).str();
  } else if (o_trees->parsed()) {
    out["trees"] = std::to_string(
        oracle::spanning_trees_enumerate(g, env_guard({.max_boxes = 10}))
            .size());
  } else if (o_ham->parsed()) {
    out["hamiltonian_paths"] = oracle::hamiltonian_paths(g).str();
  } else if (o_bij->parsed()) {
    out["bijections"] = oracle::permissible_bijections(g).str();
  } else if (o_chrom->parsed()) {
    out["colorings"] = oracle::chromatic_value(g, oracle_t).str();
  } else if (o_chrom_poly->parsed()) {
    out["chromatic"] = polynomial_to_json(oracle::chromatic_poly(g));
  } else if (o_exc->parsed()) {
    out["excedance"] = oracle::excedance(w).str();
  } else if (o_sink->parsed()) {
    out["orientations"] =
        oracle::acyclic_unique_sink(g, parse_vertex(sink_name, g),
                                    env_guard({}))
            .str();
  } else if (o_pattern->parsed()) {
    out["patterns"] =
        oracle::coloring_corollary(p, given_row, env_guard({})).str();
  } else if (o_csf->parsed()) {
    out["value"] = rational_str(
        oracle::csf_specialized(g, parse_values(oracle_values)));
  }

  input.emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}
