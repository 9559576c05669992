#ifndef THETA_REPRESENTATIONS_HPP
#define THETA_REPRESENTATIONS_HPP

// Four equivalent indexings of simple globular sets: dimension sequences,
// up-and-down vectors, level-trees and continuously graded ordered sets.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace theta {

/// Dimensions of a continuously graded ordered set, listed in order.
/// Nonempty, starts and ends at 0, adjacent entries differ by exactly 1.
/// This is the canonical identity of an object.
class DimensionSequence {
 public:
  /// Throws Error{EmptySequence | EndpointNotZero | StepNotOne}.
  explicit DimensionSequence(std::vector<int> dims);

  const std::vector<int>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  int operator[](std::size_t i) const { return dims_[i]; }
  int max_dimension() const noexcept;

  friend auto operator<=>(const DimensionSequence&, const DimensionSequence&) = default;

 private:
  std::vector<int> dims_;
};

DimensionSequence validate_sequence(std::span<const int> dims);

/// (u_0, v_1, u_1, ..., v_k, u_k) with u_{i-1} > v_i < u_i.
class UpDownVector {
 public:
  /// Throws Error{InvalidUpDown}.
  explicit UpDownVector(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t peak_count() const noexcept { return entries_.size() / 2 + 1; }
  int peak(std::size_t i) const { return entries_[2 * i]; }
  int valley(std::size_t i) const { return entries_[2 * i - 1]; }

  friend auto operator<=>(const UpDownVector&, const UpDownVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Rooted planar tree; the order of `children` is significant.
struct LevelTree {
  std::vector<LevelTree> children;

  std::size_t vertex_count() const;
  std::size_t height() const;

  friend bool operator==(const LevelTree&, const LevelTree&) = default;
};

/// Nested-parenthesis form, e.g. `(()(()))`. Equal strings iff isomorphic
/// planar trees.
std::string serialize(const LevelTree& tree);
LevelTree parse_tree(std::string_view text);

UpDownVector seq_to_updown(const DimensionSequence& seq);
DimensionSequence updown_to_seq(const UpDownVector& vec);
LevelTree updown_to_tree(const UpDownVector& vec);
UpDownVector tree_to_updown(const LevelTree& tree);

/// Elements are identified by 0-based position in the total order.
using Element = std::size_t;

class GradedOrderedSet {
 public:
  explicit GradedOrderedSet(DimensionSequence dims) : dims_(std::move(dims)) {}

  std::size_t size() const noexcept { return dims_.size(); }
  int dimension(Element x) const { return dims_[x]; }
  const DimensionSequence& dimensions() const noexcept { return dims_; }

 private:
  DimensionSequence dims_;
};

struct Boundaries {
  Element source;  // last (|x|-1)-dimensional element before x
  Element target;  // first (|x|-1)-dimensional element after x

  friend bool operator==(const Boundaries&, const Boundaries&) = default;
};

/// Throws Error{ZeroDimensional} when dim(x) = 0.
Boundaries boundaries(const GradedOrderedSet& g, Element x);

/// Every dimension sequence of length at most `max_length`, ordered by
/// length and then lexicographically.
std::vector<DimensionSequence> all_dimension_sequences(std::size_t max_length);

}  // namespace theta

#endif  // THETA_REPRESENTATIONS_HPP
