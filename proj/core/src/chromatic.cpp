#include "ferrers/chromatic.hpp"

#include <bit>
#include <future>
#include <string>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

// One term of the R_m sum: the r-vector is read off the increment mask.
IntPolynomial chromatic_term(const std::vector<int>& runs,
                             std::uint64_t mask) {
  const int m = static_cast<int>(runs.size()) - 1;
  const IntPolynomial t = IntPolynomial::t();
  IntPolynomial term = t;
  const int first_exp = runs[0] + (m == 0 ? 1 : 0);
  term *= IntPolynomial::linear(-1, 1).pow(first_exp);  // (t - r_0)^{n_0}
  int prev = 1;
  for (int i = 1; i <= m; ++i) {
    const int increment = static_cast<int>((mask >> (i - 1)) & 1u);
    const int ri = prev + increment;
    const IntPolynomial fi =
        increment ? IntPolynomial::linear(-prev, 1)   // t - r_{i-1}
                  : IntPolynomial::constant(prev);    // r_{i-1}
    term *= fi;
    const int exp = (i == m) ? runs[i] + 1 : runs[i];
    term *= IntPolynomial::linear(-ri, 1).pow(exp);
    prev = ri;
  }
  return term;
}

IntPolynomial chromatic_mask_range(const std::vector<int>& runs,
                                   std::uint64_t begin, std::uint64_t end) {
  IntPolynomial sum;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    sum += chromatic_term(runs, mask);
  }
  return sum;
}

}  // namespace

std::vector<RVector> enumerate_r_vectors(int m) {
  if (m < 0) throw DomainError("m must be non-negative");
  std::vector<RVector> vectors;
  vectors.reserve(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    RVector r;
    r.entries.resize(m + 1);
    r.entries[0] = 1;
    for (int i = 0; i < m; ++i) {
      r.entries[i + 1] = r.entries[i] + static_cast<int>((mask >> i) & 1u);
    }
    vectors.push_back(std::move(r));
  }
  return vectors;
}

int h_statistic(const RVector& r) {
  int flat = 0;
  for (std::size_t i = 0; i + 1 < r.entries.size(); ++i) {
    if (r.entries[i + 1] == r.entries[i]) ++flat;
  }
  return flat;
}

BigInt excedance_statistic(const ABWord& w) {
  const std::vector<int> runs = w.run_counts();
  const int m = w.b_count();
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int h = m - std::popcount(mask);
    BigInt term = 1;
    int r = 1;
    for (int i = 0; i <= m; ++i) {
      if (i > 0) r += static_cast<int>((mask >> (i - 1)) & 1u);
      term *= big_pow(r, static_cast<unsigned>(runs[i] + 1));
    }
    total += (h % 2 == 0) ? term : -term;
  }
  return total;
}

IntPolynomial chromatic_polynomial_direct(const ABWord& w, int threads) {
  const std::vector<int> runs = w.run_counts();
  const int m = w.b_count();
  const std::uint64_t count = std::uint64_t{1} << m;
  if (threads <= 1 || count < 16) {
    return chromatic_mask_range(runs, 0, count);
  }
  const std::uint64_t chunk = (count + threads - 1) / threads;
  std::vector<std::future<IntPolynomial>> futures;
  for (std::uint64_t begin = 0; begin < count; begin += chunk) {
    const std::uint64_t end = std::min(begin + chunk, count);
    futures.push_back(std::async(std::launch::async, chromatic_mask_range,
                                 std::cref(runs), begin, end));
  }
  IntPolynomial sum;
  for (auto& f : futures) sum += f.get();
  return sum;
}

IntPolynomial chromatic_polynomial(const ABWord& w, int threads) {
  const Partition p = w.to_partition();
  const ABWord dual_word = ABWord::from_partition(p.conjugate());
  const ABWord& use = dual_word.b_count() < w.b_count() ? dual_word : w;
  return chromatic_polynomial_direct(use, threads);
}

BigInt stirling2(int m, int k) {
  if (m < 0 || k < 0 || k > m) {
    throw DomainError("stirling2 requires 0 <= k <= m");
  }
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

IntPolynomial chromatic_complete_bipartite(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("n, m must be non-negative");
  const IntPolynomial t = IntPolynomial::t();
  IntPolynomial sum;
  for (int k = 1; k <= m + 1; ++k) {
    IntPolynomial falling = IntPolynomial::constant(1);
    for (int i = 0; i < k; ++i) {
      falling *= IntPolynomial::linear(-i, 1);
    }
    sum += IntPolynomial::constant(stirling2(m + 1, k)) * falling *
           IntPolynomial::linear(-k, 1).pow(n + 1);
  }
  return sum;
}

BigInt linear_coefficient_statistic(const ABWord& w) {
  const BigInt linear = chromatic_polynomial(w).coefficient(1);
  return (w.length() % 2 == 0) ? -linear : linear;
}

bool chromatic_recursion_check(const ABWord& w, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  const std::string base = w.str();
  auto chi_with_suffix = [&](const std::string& suffix) {
    return chromatic_polynomial(ABWord::parse(base + suffix));
  };
  const IntPolynomial lhs =
      chi_with_suffix("b" + std::string(k - 1, 'a'));
  IntPolynomial rhs =
      IntPolynomial::t() * chi_with_suffix(std::string(k - 1, 'a'));
  for (int i = 0; i <= k - 1; ++i) {
    const BigInt coeff = binomial(k, i);
    const IntPolynomial term =
        IntPolynomial::constant(coeff) * chi_with_suffix(std::string(i, 'a'));
    if ((k - i) % 2 == 0) {
      rhs += term;
    } else {
      rhs -= term;
    }
  }
  return lhs == rhs;
}

bool excedance_recursion_check(const ABWord& u, const ABWord& v) {
  auto stat = [&](const std::string& middle) {
    return excedance_statistic(ABWord::parse(u.str() + middle + v.str()));
  };
  return stat("ba") == stat("ab") + stat("a") + stat("b");
}

}  // namespace ferrers
