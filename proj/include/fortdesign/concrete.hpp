#pragma once

// Executable countable Fort space: the naturals with particular point 0.
//
// Subsets are finite or cofinite lists, plus the blocks of the odd-tail
// family, which are neither and are kept as a rule instead of a list.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fortdesign/descriptors.hpp"
#include "fortdesign/designs.hpp"

namespace fortdesign::concrete {

using Point = std::uint64_t;

/// The particular point.
inline constexpr Point kB = 0;

/// The countable space every concrete set lives in.
SpaceDescriptor model_space();

class ConcreteSet {
 public:
  /// Elements are sorted and deduplicated.
  static ConcreteSet finite(std::vector<Point> elements);
  /// Excluded points are sorted and deduplicated.
  static ConcreteSet cofinite(std::vector<Point> excluded);

  bool is_finite() const { return finite_; }
  bool is_cofinite() const { return !finite_; }
  /// Elements of a finite set, exclusions of a cofinite one.
  const std::vector<Point>& listed() const { return listed_; }

  bool contains(Point p) const;
  bool contains_b() const { return (!listed_.empty() && listed_.front() == kB) == finite_; }
  ConcreteSet complement() const { return ConcreteSet(!finite_, listed_); }

  bool operator==(const ConcreteSet&) const = default;

 private:
  ConcreteSet(bool finite, std::vector<Point> listed)
      : finite_(finite), listed_(std::move(listed)) {}

  bool finite_ = true;
  std::vector<Point> listed_;
};

/// "fin:1,5,9", "cofin:3", "fin:" for the empty set.
std::string to_string(const ConcreteSet& s);
/// Strict inverse of to_string: lists must be strictly increasing.
/// Throws std::invalid_argument.
ConcreteSet parse_concrete_set(std::string_view text);

SubsetDescriptor extract_descriptor(const ConcreteSet& s);

/// A fixed subset with the given descriptor. Throws std::invalid_argument if
/// the descriptor is not realizable as a finite or cofinite set of naturals.
ConcreteSet canonical_representative(const SubsetDescriptor& d);

bool is_subset(const ConcreteSet& a, const ConcreteSet& b);
ConcreteSet intersection(const ConcreteSet& a, const ConcreteSet& b);
ConcreteSet set_union(const ConcreteSet& a, const ConcreteSet& b);

/// U is open iff b is not in U or U is cofinite.
bool is_open(const ConcreteSet& u);

/// {b} for infinite (cofinite) sets, empty for finite ones.
ConcreteSet limit_points(const ConcreteSet& s);

/// A bijection between two concrete sets: explicit pairs first, then, if
/// aligned is set, the remaining points of the source are sent in increasing
/// order onto the remaining points of the target. With alignment, b is fixed
/// whenever it lies in both sets.
struct PointMap {
  std::vector<std::pair<Point, Point>> exceptions;
  bool aligned = false;

  /// Image of p under the map from source onto target; nullopt when p is not
  /// in the source or the map leaves it undefined.
  std::optional<Point> apply(Point p, const ConcreteSet& source, const ConcreteSet& target) const;
  /// Images of the points of source below `bound`, in increasing order of
  /// the point; nullopt if any of them is left undefined. Agrees with apply
  /// pointwise but walks both sets once.
  std::optional<std::vector<Point>> apply_below(Point bound, const ConcreteSet& source,
                                                const ConcreteSet& target) const;

  bool operator==(const PointMap&) const = default;
};

/// "aligned=true pairs=1:7,2:9".
std::string to_string(const PointMap& m);
PointMap parse_point_map(std::string_view text);

/// A homeomorphism U -> V if one exists: an explicit pairing for finite
/// sets, an order-preserving alignment fixing b for infinite ones.
std::optional<PointMap> canonical_homeomorphism(const ConcreteSet& u, const ConcreteSet& v);

/// Independent verifier. Finite sets: exact bijectivity. Infinite sets:
/// matching b-membership, m(b) = b when b is present, and bijectivity on a
/// prefix of the naturals wide enough to cover every listed point.
bool check_homeomorphism(const PointMap& m, const ConcreteSet& u, const ConcreteSet& v);

/// Block s >= 1 of the odd-tail family: X \ {2k+1 : k >= s}.
struct OddTailBlock {
  std::uint64_t s = 1;
  bool operator==(const OddTailBlock&) const = default;
};

using Block = std::variant<ConcreteSet, OddTailBlock>;

bool contains(const Block& block, Point p);
/// probe ⊆ block.
bool includes(const Block& block, const ConcreteSet& probe);
SubsetDescriptor extract_descriptor(const Block& block);
/// Concrete sets as above, odd-tail blocks as "oddtail:s".
std::string to_string(const Block& block);

/// Block `index` of an OddTail family (index >= 1) or the block of a
/// Singleton family (index ignored). ClassW and ClassL are symbolic and
/// throw std::invalid_argument.
Block realize(const FamilyDescriptor& family, std::uint64_t index);

/// Number of blocks containing a probe, saturating at a cutoff.
struct BlockCount {
  std::uint64_t count = 0;
  bool saturated = false;  ///< the true count is at least `count`
  /// For indexed families: blocks scanned before saturation that miss the probe.
  std::optional<std::uint64_t> excluded;

  bool operator==(const BlockCount&) const = default;
};

/// "Exactly(n)" or "AtLeast(n)".
std::string to_string(const BlockCount& c);

/// Whether blocks_containing and enumerate_blocks can handle the family.
bool is_enumerable(const FamilyDescriptor& family);

/// Counts blocks that contain the probe. Supported families are OddTail,
/// Singleton, and ClassW(D) for D finite or cofinite in the countable model.
/// Counts below the cutoff are exact; reaching the cutoff yields a saturated
/// lower bound. Throws std::invalid_argument for other families.
BlockCount blocks_containing(const FamilyDescriptor& family, const ConcreteSet& probe,
                             std::uint64_t cutoff);

/// Calls visit on up to `limit` blocks of the family in a fixed order;
/// stops early when visit returns false.
void enumerate_blocks(const FamilyDescriptor& family, std::uint64_t limit,
                      const std::function<bool(const Block&)>& visit);

struct BlockCheck {
  Block block;
  bool homeomorphic = false;             ///< B ≈ D
  bool complement_homeomorphic = false;  ///< X\B ≈ X\D
};

struct ProbeResult {
  ConcreteSet probe;
  bool accepted = false;  ///< probe is a copy of C of the kind the design type counts
  std::string rejection;
  BlockCount count;
};

struct DesignCheckReport {
  std::vector<BlockCheck> blocks;
  bool blocks_ok = true;
  std::vector<ProbeResult> probes;
  /// Indices of two accepted probes whose counts provably differ.
  std::optional<std::pair<std::size_t, std::size_t>> refutation;
  /// Indices of accepted probes whose count contradicts a stated λ.
  std::vector<std::size_t> lambda_mismatches;

  bool has_rejected_probe() const;
  bool consistent() const { return blocks_ok && !refutation && lambda_mismatches.empty(); }
};

/// Checks a family against the design conditions on the countable model:
/// each of the first `cutoff` blocks must be homeomorphic to D (and have
/// complement homeomorphic to X\D when the type demands it), and every
/// accepted probe must lie in the same number of blocks. When expected_lambda
/// is an exact cardinal, each count is also compared against it.
DesignCheckReport local_design_check(const FamilyDescriptor& family, DesignType type,
                                     const SubsetDescriptor& c, const SubsetDescriptor& d,
                                     const std::vector<ConcreteSet>& probes, std::uint64_t cutoff,
                                     const std::optional<LambdaValue>& expected_lambda = {});

}  // namespace fortdesign::concrete
