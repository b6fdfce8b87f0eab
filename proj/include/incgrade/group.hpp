#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incgrade {

using GroupElement = std::size_t;

/// A finite group given by its Cayley table. Elements are the indices
/// 0..order-1; names are unique. Products follow the table literally:
/// multiply(a, b) = a·b, so non-abelian groups keep left/right order.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses. Throws
  /// InvalidGroupError naming the violated axiom.
  static FiniteGroup from_table(std::string spec, std::vector<std::string> names,
                                std::vector<std::vector<GroupElement>> table);

  std::size_t order() const { return names_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a * order() + b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }

  const std::string& name(GroupElement g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<GroupElement> find(std::string_view name) const;
  /// Like find(), but throws InputError for unknown names.
  GroupElement parse_element(std::string_view name) const;

  /// The spec the group was built from ("C3", "S3", "C2xC2", or "table").
  const std::string& spec() const { return spec_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::string spec_;
  std::vector<std::string> names_;
  std::vector<GroupElement> table_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Z_n with elements "1", "h", "h^2", ..., "h^(n-1)".
FiniteGroup cyclic_group(std::size_t n);

/// S_n for 1 <= n <= 4, permutations of {1..n} in lexicographic order of
/// their one-line form, named in cycle notation ("1", "(12)", "(123)", ...).
/// (a·b)(i) = a(b(i)).
FiniteGroup symmetric_group(std::size_t n);

/// Direct product with tuple names "(a,b,...)"; factors are flattened.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

/// "C<n>", "S<n>", products such as "C2xC2" or "S3xC2", or a JSON Cayley
/// table {"elements": [...], "table": [[...], ...]} whose entries are indices
/// or element names.
FiniteGroup group_from_spec(std::string_view spec);

inline GroupRef make_group_ref(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// Splits "a,b,(c,d)" at top-level commas, trimming blanks.
std::vector<std::string> split_top_level(std::string_view csv);

}  // namespace incgrade
