#include "ferrers/csf.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <string>

#include "ferrers/errors.hpp"
#include "ferrers/series.hpp"

namespace ferrers {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

std::vector<std::pair<int, int>> box_list(const Partition& p) {
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.parts()[i]; ++j) boxes.emplace_back(i, j);
  }
  return boxes;
}

PBasisExpansion csf_mask_range(
    const std::vector<std::pair<int, int>>& boxes, int rows, int cols,
    std::uint64_t begin, std::uint64_t end) {
  const int lines = rows + cols;
  PBasisExpansion expansion;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    UnionFind dsu(lines);
    std::uint64_t touched = 0;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if ((mask >> b) & 1u) {
        const auto [i, j] = boxes[b];
        dsu.unite(i, rows + j);
        touched |= std::uint64_t{1} << i;
        touched |= std::uint64_t{1} << (rows + j);
      }
    }
    PartitionKey key;
    std::vector<int> size_by_root(lines, 0);
    for (int node = 0; node < lines; ++node) {
      if ((touched >> node) & 1u) ++size_by_root[dsu.find(node)];
    }
    for (int node = 0; node < lines; ++node) {
      if (size_by_root[node] > 0) key.push_back(size_by_root[node]);
    }
    const int blank = lines - std::popcount(touched);
    key.insert(key.end(), blank, 1);
    expansion.add(std::move(key),
                  std::popcount(mask) % 2 == 0 ? 1 : -1);
  }
  return expansion;
}

}  // namespace

Constitution constitution(const RBColoring& coloring, const Partition& p) {
  const int rows = p.rows();
  const int cols = p.cols();
  UnionFind dsu(rows + cols);
  std::vector<bool> touched(rows + cols, false);
  for (const auto& [i, j] : coloring.red_boxes) {
    if (i < 0 || i >= rows || j < 0 || j >= p.parts()[i]) {
      throw DomainError("red box (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") is outside the diagram");
    }
    dsu.unite(i, rows + j);
    touched[i] = true;
    touched[rows + j] = true;
  }
  std::vector<int> root_to_constituent(rows + cols, -1);
  Constitution result;
  for (int node = 0; node < rows + cols; ++node) {
    if (!touched[node]) {
      ++result.blank_lines;
      continue;
    }
    const int root = dsu.find(node);
    if (root_to_constituent[root] < 0) {
      root_to_constituent[root] =
          static_cast<int>(result.constituents.size());
      result.constituents.emplace_back();
    }
    auto& constituent = result.constituents[root_to_constituent[root]];
    if (node < rows) {
      constituent.rows.push_back(node);
    } else {
      constituent.cols.push_back(node - rows);
    }
  }
  return result;
}

PBasisExpansion csf_p_basis(const FerrersGraph& g, int box_limit,
                            int threads) {
  const Partition& p = g.partition();
  const auto boxes = box_list(p);
  if (static_cast<int>(boxes.size()) > box_limit) {
    throw ResourceError("diagram has " + std::to_string(boxes.size()) +
                        " boxes; the 2^boxes enumeration is limited to " +
                        std::to_string(box_limit));
  }
  const std::uint64_t count = std::uint64_t{1} << boxes.size();
  if (threads <= 1 || count < 64) {
    return csf_mask_range(boxes, p.rows(), p.cols(), 0, count);
  }
  const std::uint64_t chunk = (count + threads - 1) / threads;
  std::vector<std::future<PBasisExpansion>> futures;
  for (std::uint64_t begin = 0; begin < count; begin += chunk) {
    futures.push_back(std::async(std::launch::async, csf_mask_range,
                                 std::cref(boxes), p.rows(), p.cols(), begin,
                                 std::min(begin + chunk, count)));
  }
  PBasisExpansion expansion;
  for (auto& f : futures) expansion += f.get();
  return expansion;
}

PBasisExpansion csf_hook_p_basis(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("m, n must be non-negative");
  PBasisExpansion expansion;
  for (int i = 0; i <= m + n; ++i) {
    const int sign = (i % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= i; ++j) {
      const int k = i - j;
      if (j > m || k > n) continue;
      PartitionKey key{j + 1, k + 1};
      key.insert(key.end(), m + n - i, 1);
      expansion.add(std::move(key), sign * binomial(m, j) * binomial(n, k));
    }
    PartitionKey key{i + 2};
    key.insert(key.end(), m + n - i, 1);
    expansion.add(std::move(key), -sign * binomial(m + n, i));
  }
  return expansion;
}

std::vector<std::vector<int>> enumerate_set_partitions(int n) {
  std::vector<std::vector<int>> partitions;
  std::vector<int> rgs(n, 0);
  // restricted growth: rgs[i] <= 1 + max(rgs[0..i-1])
  auto recurse = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == n) {
      partitions.push_back(rgs);
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[pos] = label;
      self(self, pos + 1, std::max(max_label, label));
    }
  };
  if (n == 0) {
    partitions.push_back({});
  } else {
    recurse(recurse, 0, -1);
  }
  return partitions;
}

namespace {

BigInt bell_number(int n) {
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const BigInt& value : row) next.push_back(next.back() + value);
    row = std::move(next);
  }
  return row.front();
}

std::vector<int> block_sizes(const std::vector<int>& rgs) {
  std::vector<int> sizes;
  for (int label : rgs) {
    if (label >= static_cast<int>(sizes.size())) sizes.resize(label + 1, 0);
    ++sizes[label];
  }
  return sizes;
}

}  // namespace

MBasisExpansion csf_complete_bipartite_m_basis(int n, int m,
                                               long long pair_limit) {
  if (n < 1 || m < 1) throw DomainError("K_{n,m} requires n, m >= 1");
  if (bell_number(n) * bell_number(m) > pair_limit) {
    throw ResourceError("Bell(" + std::to_string(n) + ") * Bell(" +
                        std::to_string(m) +
                        ") exceeds the set-partition pair limit " +
                        std::to_string(pair_limit));
  }
  const auto partitions_u = enumerate_set_partitions(n);
  const auto partitions_v = enumerate_set_partitions(m);
  MBasisExpansion expansion;
  for (const auto& sigma : partitions_u) {
    const auto sizes_u = block_sizes(sigma);
    for (const auto& tau : partitions_v) {
      PartitionKey mu = sizes_u;
      for (int size : block_sizes(tau)) mu.push_back(size);
      // multiplicity factorials r_1! r_2! ... of the merged partition
      std::sort(mu.begin(), mu.end());
      BigInt coeff = 1;
      std::size_t i = 0;
      while (i < mu.size()) {
        std::size_t j = i;
        while (j < mu.size() && mu[j] == mu[i]) ++j;
        coeff *= factorial(static_cast<unsigned>(j - i));
        i = j;
      }
      expansion.add(std::move(mu), coeff);
    }
  }
  return expansion;
}

bool egf_coefficient_check(int n, int m,
                           std::span<const Rational> var_values) {
  if (n < 0 || m < 0) throw DomainError("n, m must be non-negative");
  const BivariateSeries series = series_product_egf(var_values, n, m);
  const Rational lhs = series.coefficient(n, m) * Rational(factorial(n)) *
                       Rational(factorial(m));
  Rational rhs;
  if (n == 0 || m == 0) {
    // edgeless graph: X = p_1^{n+m}
    Rational sum = 0;
    for (const Rational& v : var_values) sum += v;
    rhs = rat_pow(sum, static_cast<unsigned>(n + m));
  } else {
    const FerrersGraph g{Partition(std::vector<int>(n, m))};
    rhs = specialize_p(csf_p_basis(g), var_values);
  }
  return lhs == rhs;
}

}  // namespace ferrers
