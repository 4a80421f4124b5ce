#include "ferrers/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ferrers::oracle {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ResourceError(message);
}

Rational assigned(const Assignment& assignment, const Variable& v) {
  auto it = assignment.find(v);
  if (it == assignment.end()) {
    throw DomainError("assignment is missing variable " + v.str());
  }
  return it->second;
}

EdgeSet all_boxes(const FerrersGraph& g) {
  EdgeSet boxes;
  for (int i = 0; i < g.row_count(); ++i) {
    for (int j = 0; j < g.partition().parts()[i]; ++j) {
      boxes.emplace_back(i, j);
    }
  }
  return boxes;
}

/// Flat adjacency lists; u_i -> i, v_j -> row_count + j.
std::vector<std::vector<int>> adjacency(const FerrersGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [i, j] : all_boxes(g)) {
    adj[g.u_vertex(i)].push_back(g.v_vertex(j));
    adj[g.v_vertex(j)].push_back(g.u_vertex(i));
  }
  return adj;
}

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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

BigInt det_bareiss(std::vector<std::vector<BigInt>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt spanning_count_matrix_tree(const FerrersGraph& g,
                                  ResourceGuard guard) {
  const int vertices = g.vertex_count();
  require(vertices <= guard.max_vertices,
          "matrix-tree oracle limited to " +
              std::to_string(guard.max_vertices) + " vertices, got " +
              std::to_string(vertices));
  std::vector<std::vector<BigInt>> laplacian(
      vertices, std::vector<BigInt>(vertices, 0));
  for (const auto& [i, j] : all_boxes(g)) {
    const int u = g.u_vertex(i);
    const int v = g.v_vertex(j);
    laplacian[u][u] += 1;
    laplacian[v][v] += 1;
    laplacian[u][v] -= 1;
    laplacian[v][u] -= 1;
  }
  std::vector<std::vector<BigInt>> minor(vertices - 1,
                                         std::vector<BigInt>(vertices - 1));
  for (int r = 1; r < vertices; ++r) {
    for (int c = 1; c < vertices; ++c) minor[r - 1][c - 1] = laplacian[r][c];
  }
  return det_bareiss(std::move(minor));
}

std::vector<EdgeSet> spanning_trees_enumerate(const FerrersGraph& g,
                                              ResourceGuard guard) {
  require(g.edge_count() <= guard.max_boxes,
          "tree enumeration limited to " + std::to_string(guard.max_boxes) +
              " edges, got " + std::to_string(g.edge_count()));
  const EdgeSet edges = all_boxes(g);
  const int vertices = g.vertex_count();
  const int tree_edges = vertices - 1;
  std::vector<EdgeSet> trees;
  EdgeSet chosen;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == tree_edges) {
      UnionFind dsu(vertices);
      for (const auto& [i, j] : chosen) {
        if (!dsu.unite(g.u_vertex(i), g.v_vertex(j))) return;
      }
      trees.push_back(chosen);  // acyclic with V-1 edges: spanning tree
      return;
    }
    const std::size_t needed = tree_edges - chosen.size();
    for (std::size_t e = from; e + needed <= edges.size() + 0u; ++e) {
      chosen.push_back(edges[e]);
      choose(e + 1);
      chosen.pop_back();
    }
  };
  choose(0);
  return trees;
}

Rational weighted_spanning_sum_enumerated(const FerrersGraph& g,
                                          const Assignment& assignment,
                                          ResourceGuard guard) {
  Rational total = 0;
  for (const EdgeSet& tree : spanning_trees_enumerate(g, guard)) {
    Rational weight = 1;
    for (const auto& [i, j] : tree) {
      weight *= assigned(assignment, Variable::x(i));
      weight *= assigned(assignment, Variable::y(j));
    }
    total += weight;
  }
  return total;
}

BigInt hamiltonian_paths(const FerrersGraph& g, ResourceGuard guard) {
  const int vertices = g.vertex_count();
  require(vertices <= guard.max_vertices,
          "Hamiltonian oracle limited to " +
              std::to_string(guard.max_vertices) + " vertices, got " +
              std::to_string(vertices));
  const auto adj = adjacency(g);
  const std::uint32_t full = (std::uint32_t{1} << vertices) - 1;
  BigInt count = 0;
  std::function<void(int, int, std::uint32_t)> extend =
      [&](int start, int current, std::uint32_t visited) {
        if (visited == full) {
          // a path equals its reversal: keep the endpoint-ordered copy
          if (start < current) ++count;
          return;
        }
        for (int next : adj[current]) {
          if ((visited >> next) & 1u) continue;
          extend(start, next, visited | (std::uint32_t{1} << next));
        }
      };
  for (int start = 0; start < vertices; ++start) {
    extend(start, start, std::uint32_t{1} << start);
  }
  return count;
}

BigInt permissible_bijections(const FerrersGraph& g, ResourceGuard guard) {
  if (g.row_count() != g.col_count()) {
    throw DomainError("permissible bijections require n = m");
  }
  const int size = g.row_count();
  require(size <= guard.max_vertices,
          "bijection oracle limited to " +
              std::to_string(guard.max_vertices) + " rows, got " +
              std::to_string(size));
  // edges only cross the bipartition, so pi maps U to V and V to U
  std::vector<int> image(size);
  std::iota(image.begin(), image.end(), 0);
  BigInt maps_u_to_v = 0;
  do {
    bool ok = true;
    for (int i = 0; i < size && ok; ++i) ok = g.edge(i, image[i]);
    if (ok) ++maps_u_to_v;
  } while (std::next_permutation(image.begin(), image.end()));
  std::iota(image.begin(), image.end(), 0);
  BigInt maps_v_to_u = 0;
  do {
    bool ok = true;
    for (int j = 0; j < size && ok; ++j) ok = g.edge(image[j], j);
    if (ok) ++maps_v_to_u;
  } while (std::next_permutation(image.begin(), image.end()));
  return maps_u_to_v * maps_v_to_u;
}

BigInt chromatic_value(const FerrersGraph& g, int t, ResourceGuard guard) {
  if (t < 0) throw DomainError("color count must be non-negative");
  require(t <= guard.max_colorings,
          "coloring oracle limited to " +
              std::to_string(guard.max_colorings) + " colors, got " +
              std::to_string(t));
  const int vertices = g.vertex_count();
  require(vertices <= guard.max_vertices,
          "coloring oracle limited to " +
              std::to_string(guard.max_vertices) + " vertices, got " +
              std::to_string(vertices));
  const auto adj = adjacency(g);
  // color the v side first; u vertices then only see colored neighbors
  std::vector<int> order;
  for (int j = 0; j < g.col_count(); ++j) order.push_back(g.v_vertex(j));
  for (int i = 0; i < g.row_count(); ++i) order.push_back(g.u_vertex(i));
  std::vector<int> position(vertices);
  for (int p = 0; p < vertices; ++p) position[order[p]] = p;
  std::vector<int> color(vertices, 0);
  BigInt count = 0;
  std::function<void(int)> assign = [&](int p) {
    if (p == vertices) {
      ++count;
      return;
    }
    const int vertex = order[p];
    for (int c = 1; c <= t; ++c) {
      bool ok = true;
      for (int neighbor : adj[vertex]) {
        if (position[neighbor] < p && color[neighbor] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[vertex] = c;
        assign(p + 1);
      }
    }
  };
  assign(0);
  return count;
}

IntPolynomial chromatic_poly(const FerrersGraph& g, ResourceGuard guard) {
  const int vertices = g.vertex_count();
  require(vertices <= guard.max_vertices,
          "interpolation oracle limited to " +
              std::to_string(guard.max_vertices) + " vertices, got " +
              std::to_string(vertices));
  ResourceGuard value_guard = guard;
  value_guard.max_colorings = vertices;
  std::vector<BigInt> samples;
  for (int t = 0; t <= vertices; ++t) {
    samples.push_back(chromatic_value(g, t, value_guard));
  }
  // Newton forward differences at the integer nodes 0..vertices
  std::vector<BigInt> diffs = samples;
  std::vector<BigInt> leading;
  for (std::size_t level = 0; level < samples.size(); ++level) {
    leading.push_back(diffs.front());
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
      diffs[i] = diffs[i + 1] - diffs[i];
    }
    diffs.pop_back();
  }
  std::vector<Rational> poly{0};
  std::vector<Rational> falling{1};  // t(t-1)..(t-k+1) / k!
  for (std::size_t k = 0; k < leading.size(); ++k) {
    if (poly.size() < falling.size()) poly.resize(falling.size(), 0);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      poly[i] += Rational(leading[k]) * falling[i];
    }
    // multiply by (t - k) / (k + 1)
    std::vector<Rational> next(falling.size() + 1, 0);
    const Rational divisor(static_cast<int>(k) + 1);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i] / divisor;
      next[i] -= falling[i] * Rational(static_cast<int>(k)) / divisor;
    }
    falling = std::move(next);
  }
  std::vector<BigInt> coeffs;
  for (const Rational& c : poly) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw std::logic_error("interpolated chromatic polynomial not integral");
    }
    coeffs.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt excedance(const ABWord& w, ResourceGuard guard) {
  const int k = w.length();
  require(k <= guard.max_perm_degree,
          "excedance oracle limited to words of length " +
              std::to_string(guard.max_perm_degree) + ", got " +
              std::to_string(k));
  std::vector<int> perm(k + 1);
  std::iota(perm.begin(), perm.end(), 1);
  const std::string& word = w.str();
  BigInt count = 0;
  do {
    bool match = true;
    for (int i = 0; i < k && match; ++i) {
      const char letter = perm[i] <= i + 1 ? 'a' : 'b';
      match = letter == word[i];
    }
    if (match) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

bool has_directed_cycle(const std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> visit = [&](int v) -> bool {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && visit(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0 && visit(v)) return true;
  }
  return false;
}

}  // namespace

BigInt acyclic_unique_sink(const FerrersGraph& g, int sink_vertex,
                           ResourceGuard guard) {
  require(g.edge_count() <= guard.max_boxes,
          "orientation oracle limited to " +
              std::to_string(guard.max_boxes) + " edges, got " +
              std::to_string(g.edge_count()));
  if (sink_vertex < 0 || sink_vertex >= g.vertex_count()) {
    throw DomainError("sink vertex out of range");
  }
  const EdgeSet edges = all_boxes(g);
  const auto& lambda = g.partition().parts();
  const int rows = g.row_count();
  const int cols = g.col_count();
  auto edge_index = [&](int i, int j) {
    // row-major position of box (i, j)
    long long idx = 0;
    for (int r = 0; r < i; ++r) idx += lambda[r];
    return static_cast<std::size_t>(idx + j);
  };
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size());
       ++mask) {
    // bit e set: edge e oriented v -> u
    auto toward_u = [&](int i, int j) {
      return ((mask >> edge_index(i, j)) & 1u) != 0;
    };
    bool four_cycle = false;
    for (int i = 0; i < rows && !four_cycle; ++i) {
      for (int p = i + 1; p < rows && !four_cycle; ++p) {
        for (int j = 0; j < lambda[p] && !four_cycle; ++j) {
          for (int q = j + 1; q < lambda[p]; ++q) {
            // all four boxes exist since (p, q) does
            const bool cycle_a = !toward_u(i, j) && toward_u(p, j) &&
                                 !toward_u(p, q) && toward_u(i, q);
            const bool cycle_b = toward_u(i, j) && !toward_u(p, j) &&
                                 toward_u(p, q) && !toward_u(i, q);
            if (cycle_a || cycle_b) {
              four_cycle = true;
              break;
            }
          }
        }
      }
    }
    std::vector<std::vector<int>> out(g.vertex_count());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      if ((mask >> e) & 1u) {
        out[g.v_vertex(j)].push_back(g.u_vertex(i));
      } else {
        out[g.u_vertex(i)].push_back(g.v_vertex(j));
      }
    }
    const bool cyclic = has_directed_cycle(out);
    if (cyclic != four_cycle) {
      throw std::logic_error(
          "directed 4-cycle shortcut disagrees with full cycle detection");
    }
    if (cyclic) continue;
    int sinks = 0;
    bool sink_matches = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (out[v].empty()) {
        ++sinks;
        if (v == sink_vertex) sink_matches = true;
      }
    }
    if (sinks == 1 && sink_matches) ++count;
  }
  (void)cols;
  return count;
}

BigInt coloring_corollary(const Partition& p, int given_row,
                          ResourceGuard guard) {
  require(p.boxes() <= guard.max_boxes,
          "pattern oracle limited to " + std::to_string(guard.max_boxes) +
              " boxes, got " + std::to_string(p.boxes()));
  if (given_row < 0 || given_row >= p.rows()) {
    throw DomainError("row index out of range");
  }
  const auto& lambda = p.parts();
  const int rows = p.rows();
  const int cols = p.cols();
  std::vector<std::vector<std::size_t>> index(rows);
  std::size_t boxes = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < lambda[i]; ++j) index[i].push_back(boxes++);
  }
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << boxes); ++mask) {
    auto red = [&](int i, int j) {
      return ((mask >> index[i][j]) & 1u) != 0;
    };
    auto all_red_row = [&](int i) {
      for (int j = 0; j < lambda[i]; ++j) {
        if (!red(i, j)) return false;
      }
      return true;
    };
    // (ii) given row all red and no other row all red
    if (!all_red_row(given_row)) continue;
    bool ok = true;
    for (int i = 0; i < rows && ok; ++i) {
      if (i != given_row && all_red_row(i)) ok = false;
    }
    if (!ok) continue;
    // (iii) no all-blue column
    const auto dual = p.conjugate().parts();
    for (int j = 0; j < cols && ok; ++j) {
      bool any_red = false;
      for (int i = 0; i < dual[j]; ++i) any_red = any_red || red(i, j);
      ok = any_red;
    }
    if (!ok) continue;
    // (i) no alternating 2x2 pattern
    for (int i = 0; i < rows && ok; ++i) {
      for (int q = i + 1; q < rows && ok; ++q) {
        for (int j = 0; j < lambda[q] && ok; ++j) {
          for (int s = j + 1; s < lambda[q] && ok; ++s) {
            const bool alt_a =
                red(i, j) && !red(i, s) && !red(q, j) && red(q, s);
            const bool alt_b =
                !red(i, j) && red(i, s) && red(q, j) && !red(q, s);
            if (alt_a || alt_b) ok = false;
          }
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

Rational csf_specialized(const FerrersGraph& g,
                         std::span<const Rational> values,
                         ResourceGuard guard) {
  const int vertices = g.vertex_count();
  require(vertices <= guard.max_vertices,
          "specialized CSF oracle limited to " +
              std::to_string(guard.max_vertices) + " vertices, got " +
              std::to_string(vertices));
  require(static_cast<int>(values.size()) <= 4,
          "specialized CSF oracle limited to 4 values");
  const auto adj = adjacency(g);
  const int k = static_cast<int>(values.size());
  std::vector<int> color(vertices, -1);
  Rational total = 0;
  std::function<void(int, Rational)> assign = [&](int v, Rational prod) {
    if (v == vertices) {
      total += prod;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int neighbor : adj[v]) {
        if (neighbor < v && color[neighbor] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[v] = c;
        assign(v + 1, prod * values[c]);
      }
    }
    color[v] = -1;
  };
  assign(0, 1);
  return total;
}

}  // namespace ferrers::oracle
