#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// An integer partition stored as its nonincreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless `parts` is nonincreasing and positive.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const;

  /// Length of row `row` (1-based); rows past the end have length 0.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  bool operator==(const Partition&) const = default;

 private:
  friend class Multipartition;
  std::vector<int> parts_;
};

/// A cell of a multipartition diagram. Rows and columns are 1-based;
/// `comp` is the 0-based component index (rendered 1-based on output).
struct Node {
  int row = 1;
  int col = 1;
  int comp = 0;

  int content() const { return col - row; }
  auto operator<=>(const Node&) const = default;
};

std::string to_string(const Node& node);

/// Ordered r-tuple of partitions.
///
/// Ordering is the canonical total order used for every deterministic
/// output: first by the number of components, then lexicographically on
/// the component lengths, then on the parts component by component.
class Multipartition {
 public:
  Multipartition() = default;
  /// The empty multipartition with `r` components.
  explicit Multipartition(int r);
  explicit Multipartition(std::vector<Partition> components);
  /// Convenience constructor from raw part lists; validates every component.
  static Multipartition from_parts(const std::vector<std::vector<int>>& parts);

  /// Parses the "2,1|1|-" rendering produced by to_string().
  static Multipartition parse(std::string_view text);

  int rank() const { return static_cast<int>(components_.size()); }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const Partition& component(int c) const { return components_.at(static_cast<std::size_t>(c)); }
  std::span<const Partition> components() const { return components_; }

  bool contains(const Node& node) const;
  bool is_removable(const Node& node) const;
  bool is_addable(const Node& node) const;

  /// Adds an addable node; throws PreconditionError otherwise.
  Multipartition with_node(const Node& node) const;
  /// Removes a removable node; throws PreconditionError otherwise.
  Multipartition without_node(const Node& node) const;

  /// Components [first, first + count) as a multipartition of rank `count`.
  Multipartition slice(int first, int count) const;
  /// Concatenation of the components of several multipartitions.
  static Multipartition concat(std::span<const Multipartition> blocks);

  /// Components separated by '|', parts by ',', empty component as '-'.
  std::string to_string() const;

  bool operator==(const Multipartition& other) const { return components_ == other.components_; }
  std::strong_ordering operator<=>(const Multipartition& other) const;

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

struct BoundaryNodes {
  std::vector<Node> removable;
  std::vector<Node> addable;
};

/// Removable and addable nodes, each sorted by (component, row).
BoundaryNodes boundary_nodes(const Multipartition& lambda);

/// All multipartitions of `n` with `r` components, in canonical order.
std::vector<Multipartition> all_multipartitions(int r, int n);

}  // namespace hecke
