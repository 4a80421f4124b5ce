#ifndef FERRERS_PARTITION_HPP
#define FERRERS_PARTITION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

/// Weakly decreasing sequence of positive row lengths. The partition
/// (lambda_0, ..., lambda_n) has n+1 rows and lambda_0 = m+1 columns;
/// lambda_i is the degree of u_i in the associated Ferrers graph.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  /// Comma-separated decimal integers, largest part first.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }  // n + 1
  int cols() const { return parts_.front(); }                   // m + 1
  long long boxes() const;

  /// Column heights: lambda'_j = #{i : lambda_i > j}.
  Partition conjugate() const;

  std::string str() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using DualPartition = Partition;

/// Border-path encoding of a Ferrers diagram over the alphabet {a, b}:
/// b = horizontal step, a = vertical step, walked from the lower right
/// corner of box (n, 0) to the lower right corner of box (0, m). Decomposes
/// as a^{n_0} b a^{n_1} b ... b a^{n_m}. Every word is valid; the empty
/// word denotes the single-edge graph.
class ABWord {
 public:
  ABWord() = default;

  /// Rejects letters outside {a, b}.
  static ABWord parse(std::string_view text);

  static ABWord from_partition(const Partition& p);
  Partition to_partition() const;

  const std::string& str() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int b_count() const;  // m
  int a_count() const;  // n

  /// The run lengths n_0, ..., n_m of a's between consecutive b's.
  std::vector<int> run_counts() const;

  bool operator==(const ABWord&) const = default;

 private:
  explicit ABWord(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Bipartite graph on U = {u_0..u_n}, V = {v_0..v_m} with edge (u_i, v_j)
/// iff j < lambda_i. Downward closed and connected by construction.
class FerrersGraph {
 public:
  explicit FerrersGraph(Partition p);

  const Partition& partition() const { return partition_; }
  DualPartition dual() const { return partition_.conjugate(); }

  int row_count() const { return partition_.rows(); }  // n + 1
  int col_count() const { return partition_.cols(); }  // m + 1
  int vertex_count() const { return row_count() + col_count(); }
  long long edge_count() const { return partition_.boxes(); }

  bool edge(int i, int j) const {
    return i >= 0 && i < row_count() && j >= 0 && j < partition_.parts()[i];
  }

  /// Flat vertex ids: u_i -> i, v_j -> row_count() + j.
  int u_vertex(int i) const { return i; }
  int v_vertex(int j) const { return row_count() + j; }

 private:
  Partition partition_;
};

}  // namespace ferrers

#endif
