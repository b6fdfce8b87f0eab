#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace incgrade {

using Index = std::size_t;
using Pair = std::pair<Index, Index>;

/// A finite partially ordered set on the indices 0..n-1. The order is stored
/// as a dense, reflexive and transitively closed boolean matrix; the Hasse
/// diagram (covering pairs) is derived at construction. Immutable.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of `relation` (any generating set
  /// of pairs (lower, upper), e.g. the covers). Throws EmptyPosetError,
  /// DuplicateLabelError, InputError (index out of range) or CycleError.
  static Poset from_relation(std::vector<std::string> labels, std::span<const Pair> relation);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> index_of(std::string_view label) const;

  bool leq(Index x, Index y) const { return leq_[x * size() + y]; }
  bool lt(Index x, Index y) const { return x != y && leq(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }

  /// Covering pairs (x, y): x < y with nothing strictly between. Sorted.
  const std::vector<Pair>& covers() const { return covers_; }

  /// All pairs (x, y) with x ⪯ y, diagonal included, in lexicographic order.
  const std::vector<Pair>& comparable_pairs() const { return pairs_; }

  /// Position of a comparable pair within comparable_pairs().
  std::optional<std::size_t> pair_position(Index x, Index y) const;

  /// Indices ordered so that x ⪯ y implies x comes no later than y.
  const std::vector<Index>& linear_extension() const { return linear_extension_; }

  /// Subposet on `subset` (any order, no duplicates) with the induced order.
  /// Element i of the result is subset-sorted-ascending[i].
  Poset induced(std::span<const Index> subset) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  Poset() = default;
  void derive();

  std::vector<std::string> labels_;
  std::vector<bool> leq_;
  std::vector<Pair> covers_;
  std::vector<Pair> pairs_;
  std::vector<Index> linear_extension_;
};

/// Convenience alias: the generating relation is usually the Hasse diagram.
inline Poset poset_from_covers(std::vector<std::string> labels, std::span<const Pair> covers) {
  return Poset::from_relation(std::move(labels), covers);
}

/// Segment [x, z] = {y | x ⪯ y ⪯ z}. Throws NotComparableError unless x ⪯ z.
Poset segment(const Poset& p, Index x, Index z);

/// Indices of the segment [x, z] in ascending order.
std::vector<Index> segment_indices(const Poset& p, Index x, Index z);

/// A chain given by its elements in strictly ascending order.
struct Chain {
  std::vector<Index> indices;

  std::size_t length() const { return indices.size(); }
  auto operator<=>(const Chain&) const = default;
};

/// Every ⊆-maximal chain, in lexicographic order of index sequences.
std::vector<Chain> maximal_chains(const Poset& p);

/// Zig-zag connected components, each sorted, ordered by least element.
std::vector<std::vector<Index>> connected_components(const Poset& p);

/// Component number of every element, consistent with connected_components().
std::vector<std::size_t> component_of(const Poset& p);

/// Length of a longest chain.
std::size_t bound(const Poset& p);

/// Length of the longest chain ending at each element (minimal elements have rank 1).
std::vector<std::size_t> ranks(const Poset& p);

/// An order automorphism stored as the image table x -> perm[x].
class PosetAutomorphism {
 public:
  PosetAutomorphism() = default;
  explicit PosetAutomorphism(std::vector<Index> perm) : perm_(std::move(perm)) {}

  static PosetAutomorphism identity(std::size_t n);

  Index operator()(Index x) const { return perm_[x]; }
  const std::vector<Index>& images() const { return perm_; }
  std::size_t size() const { return perm_.size(); }
  bool is_identity() const;

  PosetAutomorphism inverse() const;

  /// (a * b)(x) = a(b(x)).
  friend PosetAutomorphism operator*(const PosetAutomorphism& a, const PosetAutomorphism& b);
  auto operator<=>(const PosetAutomorphism&) const = default;

 private:
  std::vector<Index> perm_;
};

/// True iff `perm` is a bijection with leq(i,j) <=> leq(perm i, perm j).
bool is_automorphism(const Poset& p, std::span<const Index> perm);

/// Aut(P) by backtracking with rank and Hasse-degree pruning. Sorted
/// lexicographically by image table, so the identity comes first.
std::vector<PosetAutomorphism> automorphisms(const Poset& p);

/// The image of a chain under an automorphism, in ascending order.
Chain apply(const PosetAutomorphism& sigma, const Poset& p, const Chain& c);

struct ChainTransitivity {
  bool transitive = false;
  std::vector<Chain> chains;
  std::vector<PosetAutomorphism> automorphisms;
  /// witness[i][j]: index into `automorphisms` of some σ with σ(C_i) = C_j.
  /// Filled only when transitive.
  std::vector<std::vector<std::size_t>> witness;
  /// A pair (i, j) with no σ mapping C_i onto C_j, when not transitive.
  std::optional<std::pair<std::size_t, std::size_t>> unreachable;
};

ChainTransitivity is_chain_transitive(const Poset& p);

}  // namespace incgrade
