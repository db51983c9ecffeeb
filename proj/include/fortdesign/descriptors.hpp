#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fortdesign/cardinal.hpp"

namespace fortdesign {

/// An infinite Fort space X with particular point b. Only card(X) varies;
/// b is implicit in every descriptor.
class SpaceDescriptor {
 public:
  /// Throws std::invalid_argument unless size is an aleph.
  explicit SpaceDescriptor(Cardinal size);

  const Cardinal& size() const { return size_; }
  bool operator==(const SpaceDescriptor&) const = default;

 private:
  Cardinal size_;
};

/// A subset S of X up to pair-equivalence: card(S), whether b is in S, and
/// card(X\S).
struct SubsetDescriptor {
  Cardinal size;
  bool contains_b = false;
  Cardinal cosize;

  bool operator==(const SubsetDescriptor&) const = default;

  bool is_finite() const { return size.is_finite(); }
  bool is_empty() const { return size == Cardinal::finite(0); }
};

/// Thrown by operations whose inputs fail validation. what() joins the
/// individual violations; violations() keeps them apart.
class InvalidDescriptor : public std::invalid_argument {
 public:
  explicit InvalidDescriptor(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Every broken invariant of S as a subset of X; empty means valid.
std::vector<std::string> validate(const SubsetDescriptor& s, const SpaceDescriptor& x);

/// validate() plus the nonemptiness required of the C and D inputs. Throws
/// InvalidDescriptor naming the role ("C", "D") on failure.
void require_nonempty_valid(const SubsetDescriptor& s, const SpaceDescriptor& x,
                            std::string_view role);

SubsetDescriptor complement(const SubsetDescriptor& s, const SpaceDescriptor& x);

/// card(S\{b}).
Cardinal size_minus_b(const SubsetDescriptor& s);
/// card(X\(S ∪ {b})).
Cardinal cosize_minus_b(const SubsetDescriptor& s);

/// Whether U and V are homeomorphic as subspaces. Finite subspaces are
/// discrete, infinite ones are Fort spaces exactly when they contain b.
bool subspace_homeomorphic(const SubsetDescriptor& u, const SubsetDescriptor& v);

/// U ≈ V and X\U ≈ X\V.
bool pair_equivalent(const SubsetDescriptor& u, const SubsetDescriptor& v,
                     const SpaceDescriptor& x);

/// Whether C is homeomorphic to a subspace of D.
bool embeddable(const SubsetDescriptor& c, const SubsetDescriptor& d);

/// Named descriptors used by the witnesses.
SubsetDescriptor whole_space(const SpaceDescriptor& x);          // X
SubsetDescriptor whole_space_minus_b(const SpaceDescriptor& x);  // X\{b}

/// All valid descriptors of X with size and cosize drawn from
/// {0..max_finite} ∪ {aleph_0..aleph_i : aleph_i <= card(X)}, in a fixed
/// order. Empty sets are included only if include_empty is set.
std::vector<SubsetDescriptor> descriptor_grid(const SpaceDescriptor& x, std::uint64_t max_finite,
                                              bool include_empty = false);

/// Assembles a descriptor from raw field texts as found in records and query
/// files. A missing cosize defaults to card(X) when size < card(X) and is an
/// error otherwise. Throws std::invalid_argument.
SubsetDescriptor descriptor_from_fields(std::optional<std::string_view> size,
                                        std::optional<std::string_view> contains_b,
                                        std::optional<std::string_view> cosize,
                                        const SpaceDescriptor& x);

/// "{size: 3, contains_b: true, cosize: aleph0}".
std::string to_record(const SubsetDescriptor& s);

/// Parses the inline record form. Accepts "b" as an alias for "contains_b".
SubsetDescriptor parse_descriptor_record(std::string_view text, const SpaceDescriptor& x);

}  // namespace fortdesign
