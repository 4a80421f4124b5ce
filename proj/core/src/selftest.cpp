#include "ferrers/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "ferrers/chromatic.hpp"
#include "ferrers/csf.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/series.hpp"
#include "ferrers/trees.hpp"

namespace ferrers {

namespace {

struct Checker {
  CheckResult result;

  explicit Checker(std::string name) { result.name = std::move(name); }

  template <typename Describe>
  void expect(bool condition, Describe&& describe) {
    ++result.checks;
    if (!condition && result.detail.empty()) {
      result.detail = describe();
    }
  }

  CheckResult finish() {
    result.passed = result.detail.empty();
    return result;
  }
};

std::vector<Rational> ones(int t) {
  return std::vector<Rational>(t, Rational(1));
}

Assignment random_assignment(int n, int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Assignment a;
  for (int i = 0; i <= n; ++i) {
    a[Variable::x(i)] = Rational(num(rng), den(rng));
  }
  for (int j = 0; j <= m; ++j) {
    a[Variable::y(j)] = Rational(num(rng), den(rng));
  }
  return a;
}

CheckResult check_figure_round_trip() {
  Checker c("figure-1 round trip (4,4,2) <-> (3,3,2,2) <-> babba");
  const Partition p = Partition::parse("4,4,2");
  c.expect(p.conjugate() == Partition({3, 3, 2, 2}),
           [] { return std::string("conjugate of (4,4,2) wrong"); });
  c.expect(ABWord::from_partition(p).str() == "babba",
           [] { return std::string("word of (4,4,2) is not babba"); });
  c.expect(ABWord::parse("babba").to_partition() == p,
           [] { return std::string("partition of babba is not (4,4,2)"); });
  c.expect(p.conjugate().conjugate() == p,
           [] { return std::string("double conjugate broken"); });
  return c.finish();
}

CheckResult check_complete_bipartite_tau() {
  Checker c("tau(K_{n+1,m+1}) = (m+1)^n (n+1)^m, n,m <= 4");
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const FerrersGraph g{Partition(std::vector<int>(n + 1, m + 1))};
      const BigInt expected = big_pow(m + 1, n) * big_pow(n + 1, m);
      c.expect(spanning_tree_count(g) == expected, [&] {
        return "formula mismatch at n=" + std::to_string(n) +
               " m=" + std::to_string(m);
      });
      if (n <= 3 && m <= 3) {
        c.expect(oracle::spanning_count_matrix_tree(g) == expected, [&] {
          return "matrix-tree mismatch at n=" + std::to_string(n) +
                 " m=" + std::to_string(m);
        });
      }
    }
  }
  return c.finish();
}

CheckResult check_tau_all_shapes() {
  Checker c("tau formula = matrix-tree = enumeration, shapes <= 9 boxes");
  for (const Partition& p : all_partitions_up_to(9)) {
    const FerrersGraph g{p};
    const BigInt closed = spanning_tree_count(g);
    c.expect(closed == oracle::spanning_count_matrix_tree(g),
             [&] { return "matrix-tree mismatch for " + p.str(); });
    c.expect(closed ==
                 BigInt(oracle::spanning_trees_enumerate(g).size()),
             [&] { return "enumeration mismatch for " + p.str(); });
  }
  return c.finish();
}

CheckResult check_weighted_sum_and_ratio() {
  Checker c("Sigma(G) factored = enumerated, ratio identity, <= 8 boxes");
  std::mt19937 rng(20240817);
  for (const Partition& p : all_partitions_up_to(8)) {
    const FerrersGraph g{p};
    const FactoredWeightedSum sigma = weighted_spanning_sum(g);
    const int n = p.rows() - 1;
    const int m = p.cols() - 1;
    for (int round = 0; round < 3; ++round) {
      const Assignment a = random_assignment(n, m, rng);
      c.expect(sigma.evaluate(a) ==
                   oracle::weighted_spanning_sum_enumerated(g, a),
               [&] { return "Sigma mismatch for " + p.str(); });
    }
    // every single-edge extension of this shape that stays <= 8 boxes
    for (int i = 1; i <= n; ++i) {
      const int j = p.parts()[i];
      if (p.parts()[i - 1] <= j || p.boxes() + 1 > 8) continue;
      std::vector<int> grown = p.parts();
      ++grown[i];
      const FerrersGraph bigger{Partition(grown)};
      const RatioFactors ratio = edge_addition_ratio(g, i, j);
      const FactoredWeightedSum sigma_bigger =
          weighted_spanning_sum(bigger);
      for (int round = 0; round < 3; ++round) {
        const Assignment a = random_assignment(n, m, rng);
        const Rational lhs = sigma_bigger.evaluate(a) *
                             ratio.den_x.evaluate(a) *
                             ratio.den_y.evaluate(a);
        const Rational rhs = sigma.evaluate(a) *
                             ratio.num_x.evaluate(a) *
                             ratio.num_y.evaluate(a);
        c.expect(lhs == rhs, [&] {
          return "ratio identity fails for " + p.str() + " + (u" +
                 std::to_string(i) + ",v" + std::to_string(j) + ")";
        });
      }
    }
  }
  return c.finish();
}

CheckResult check_hamiltonian() {
  Checker c("Hamiltonian: formula = rook^2 = DFS = bijections, n = m <= 3");
  for (const Partition& p : all_partitions_up_to(16)) {
    if (p.rows() != p.cols() || p.rows() > 4) continue;
    const FerrersGraph g{p};
    const BigInt rooks = rook_count(g);
    const BigInt closed = hamiltonian_path_count(g);
    c.expect(closed == rooks * rooks,
             [&] { return "rook square mismatch for " + p.str(); });
    c.expect(closed == oracle::hamiltonian_paths(g),
             [&] { return "DFS mismatch for " + p.str(); });
    c.expect(closed == oracle::permissible_bijections(g),
             [&] { return "bijection mismatch for " + p.str(); });
    c.expect(rook_count(FerrersGraph{p.conjugate()}) == rooks,
             [&] { return "dual rook formula mismatch for " + p.str(); });
  }
  return c.finish();
}

CheckResult check_chromatic() {
  Checker c("chi(w) = coloring counts, Stirling case, both recursions");
  for (const ABWord& w : all_words_up_to(7)) {
    const IntPolynomial chi = chromatic_polynomial(w);
    const FerrersGraph g{w.to_partition()};
    for (int t = 0; t <= 5; ++t) {
      c.expect(chi.evaluate(t) == oracle::chromatic_value(g, t), [&] {
        return "chi mismatch for word '" + w.str() + "' at t=" +
               std::to_string(t);
      });
    }
  }
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const ABWord w =
          ABWord::parse(std::string(m, 'b') + std::string(n, 'a'));
      c.expect(chromatic_complete_bipartite(n, m) == chromatic_polynomial(w),
               [&] {
                 return "Stirling form mismatch at n=" + std::to_string(n) +
                        " m=" + std::to_string(m);
               });
    }
  }
  for (const ABWord& w : all_words_up_to(5)) {
    for (int k = 1; k <= 4; ++k) {
      c.expect(chromatic_recursion_check(w, k), [&] {
        return "chromatic recursion fails for w='" + w.str() +
               "' k=" + std::to_string(k);
      });
    }
  }
  for (const ABWord& u : all_words_up_to(5)) {
    for (const ABWord& v : all_words_up_to(5 - u.length())) {
      c.expect(excedance_recursion_check(u, v), [&] {
        return "excedance recursion fails for u='" + u.str() + "' v='" +
               v.str() + "'";
      });
    }
  }
  return c.finish();
}

CheckResult check_excedance() {
  Checker c("[w] = brute enumeration and linear coefficient, |w| <= 7");
  for (const ABWord& w : all_words_up_to(7)) {
    const BigInt stat = excedance_statistic(w);
    c.expect(stat == oracle::excedance(w),
             [&] { return "[w] mismatch for '" + w.str() + "'"; });
    c.expect(stat == linear_coefficient_statistic(w), [&] {
      return "linear coefficient mismatch for '" + w.str() + "'";
    });
  }
  const ABWord ba = ABWord::parse("ba");
  c.expect(excedance_statistic(ba) == 3,
           [] { return std::string("[ba] != 3"); });
  c.expect(chromatic_polynomial(ba) == IntPolynomial({0, -3, 6, -4, 1}),
           [] { return std::string("chi(ba) != t^4-4t^3+6t^2-3t"); });
  return c.finish();
}

CheckResult check_greene_zaslavsky() {
  Checker c("[w] = unique-sink orientations = red-blue patterns, |w| <= 5");
  for (const ABWord& w : all_words_up_to(5)) {
    const BigInt stat = excedance_statistic(w);
    const Partition p = w.to_partition();
    const FerrersGraph g{p};
    for (int vertex = 0; vertex < g.vertex_count(); ++vertex) {
      c.expect(oracle::acyclic_unique_sink(g, vertex) == stat, [&] {
        return "orientation count mismatch for '" + w.str() + "' sink " +
               std::to_string(vertex);
      });
    }
    for (int row = 0; row < p.rows(); ++row) {
      c.expect(oracle::coloring_corollary(p, row) == stat, [&] {
        return "pattern count mismatch for '" + w.str() + "' row " +
               std::to_string(row);
      });
    }
  }
  return c.finish();
}

CheckResult check_csf() {
  Checker c("CSF p-basis vs chi, oracle, duality, hook, m-basis");
  std::mt19937 rng(5683);
  std::uniform_int_distribution<int> small(0, 3);
  for (const Partition& p : all_partitions_up_to(9)) {
    const FerrersGraph g{p};
    const PBasisExpansion x = csf_p_basis(g);
    const IntPolynomial chi =
        chromatic_polynomial(ABWord::from_partition(p));
    for (int t = 0; t <= 4; ++t) {
      c.expect(specialize_p(x, ones(t)) == Rational(chi.evaluate(t)), [&] {
        return "CSF specialization != chi for " + p.str() + " t=" +
               std::to_string(t);
      });
    }
    // all-blue term
    c.expect(x.coefficient(PartitionKey(g.vertex_count(), 1)) == 1, [&] {
      return "p_1^V coefficient not +1 for " + p.str();
    });
    if (p.boxes() <= 8) {
      for (int k = 1; k <= 3; ++k) {
        std::vector<Rational> values;
        for (int i = 0; i < k; ++i) values.emplace_back(small(rng));
        c.expect(specialize_p(x, values) ==
                     oracle::csf_specialized(g, values),
                 [&] { return "CSF oracle mismatch for " + p.str(); });
      }
    }
  }
  for (const Partition& p : all_partitions_up_to(10)) {
    c.expect(csf_p_basis(FerrersGraph{p}) ==
                 csf_p_basis(FerrersGraph{p.conjugate()}),
             [&] { return "duality fails for " + p.str(); });
  }
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n + m <= 5; ++n) {
      std::vector<int> hook{m + 1};
      hook.insert(hook.end(), n, 1);
      c.expect(csf_hook_p_basis(m, n) ==
                   csf_p_basis(FerrersGraph{Partition(hook)}),
               [&] {
                 return "hook corollary fails at m=" + std::to_string(m) +
                        " n=" + std::to_string(n);
               });
    }
  }
  std::uniform_int_distribution<int> num(1, 5);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const MBasisExpansion mb = csf_complete_bipartite_m_basis(n, m);
      const PBasisExpansion pb =
          csf_p_basis(FerrersGraph{Partition(std::vector<int>(n, m))});
      for (int round = 0; round < 3; ++round) {
        std::vector<Rational> values;
        for (int i = 0; i < 3; ++i) {
          values.emplace_back(Rational(num(rng), num(rng)));
        }
        c.expect(specialize_m(mb, values) == specialize_p(pb, values), [&] {
          return "m-basis vs p-basis mismatch at n=" + std::to_string(n) +
                 " m=" + std::to_string(m);
        });
      }
    }
  }
  return c.finish();
}

CheckResult check_egf() {
  Checker c("EGF coefficients match specialized X_{K_{n,m}}, n,m <= 3");
  std::vector<std::vector<Rational>> variable_lists{{}};
  for (int length = 1; length <= 3; ++length) {
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : variable_lists) {
      if (static_cast<int>(prefix.size()) != length - 1) {
        next.push_back(prefix);
        continue;
      }
      next.push_back(prefix);
      for (int value = 0; value <= 2; ++value) {
        auto extended = prefix;
        extended.emplace_back(value);
        next.push_back(extended);
      }
    }
    variable_lists = std::move(next);
  }
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& values : variable_lists) {
        c.expect(egf_coefficient_check(n, m, values), [&] {
          std::ostringstream out;
          out << "EGF mismatch at n=" << n << " m=" << m << " vars=(";
          for (const auto& v : values) out << v << ",";
          out << ")";
          return out.str();
        });
      }
    }
  }
  return c.finish();
}

}  // namespace

std::vector<Partition> all_partitions_up_to(int max_boxes) {
  std::vector<Partition> result;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (!current.empty()) result.emplace_back(current);
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(max_boxes, max_boxes);
  return result;
}

std::vector<ABWord> all_words_up_to(int max_length) {
  std::vector<ABWord> words;
  for (int length = 0; length <= max_length; ++length) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length);
         ++mask) {
      std::string letters(length, 'a');
      for (int i = 0; i < length; ++i) {
        if ((mask >> i) & 1u) letters[i] = 'b';
      }
      words.push_back(ABWord::parse(letters));
    }
  }
  return words;
}

std::vector<CheckResult> run_selftest() {
  return {check_figure_round_trip(), check_complete_bipartite_tau(),
          check_tau_all_shapes(),    check_weighted_sum_and_ratio(),
          check_hamiltonian(),       check_chromatic(),
          check_excedance(),         check_greene_zaslavsky(),
          check_csf(),               check_egf()};
}

}  // namespace ferrers
