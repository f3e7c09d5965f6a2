#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hibi {

/// Subset of a poset's ground set, bit i = element i. Posets handled here
/// have at most 64 elements.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxPosetSize = 64;

using Cover = std::pair<std::size_t, std::size_t>;

/// Finite poset on {0, ..., n-1}. The full order relation is stored densely;
/// the cover relation is derived from it. Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of `covers`. Redundant pairs are dropped.
  /// Throws InputError on a cycle (message lists it) or a bad index.
  static Poset from_covers(std::size_t n, std::span<const Cover> covers,
                           std::vector<std::string> labels = {});

  /// From a full relation table; validates reflexivity, antisymmetry and
  /// transitivity.
  static Poset from_relation(std::vector<std::string> labels,
                             const std::vector<std::vector<bool>>& leq);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);
  /// Product of chains [rows] x [cols]; element (i,j) has index i*cols+j
  /// and label "(i+1,j+1)".
  static Poset grid(std::size_t rows, std::size_t cols);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * n_ + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  bool covered_by(std::size_t x, std::size_t y) const;

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }

  /// {y : y <= x} and {y : y >= x} as masks.
  Mask down_set(std::size_t x) const { return down_[x]; }
  Mask up_set(std::size_t x) const { return up_[x]; }

  Mask all() const { return n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1); }
  bool is_ideal(Mask s) const;
  bool is_chain() const;

  /// Subposet induced on `elements`, keeping their labels and relative order.
  Poset induced(std::span<const std::size_t> elements) const;
  Poset induced(Mask elements) const;
  Poset dual() const;

  /// Lexicographically smallest linear extension (smallest available index first).
  std::vector<std::size_t> linear_extension() const;

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && leq_ == other.leq_;
  }

 private:
  void derive();

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> upper_, lower_;
  std::vector<Mask> down_, up_;
};

/// P with two new elements -inf (index bot()) and inf (index top()).
class ExtendedPoset {
 public:
  explicit ExtendedPoset(Poset base);

  const Poset& base() const { return base_; }
  const Poset& poset() const { return hat_; }
  std::size_t bot() const { return base_.size(); }
  std::size_t top() const { return base_.size() + 1; }
  std::size_t size() const { return hat_.size(); }

 private:
  Poset base_;
  Poset hat_;
};

/// Length of a longest chain. Throws InputError on the empty poset.
std::size_t rank(const Poset& p);
std::size_t rank(const ExtendedPoset& p);

/// Rank of the principal ideal {y <= x} / principal filter {y >= x}.
std::size_t height(const Poset& p, std::size_t x);
std::size_t coheight(const Poset& p, std::size_t x);
std::vector<std::size_t> heights(const Poset& p);
std::vector<std::size_t> coheights(const Poset& p);

/// Whether every maximal chain of the subposet induced on `subset` has the
/// same length. Throws InputError on an empty subset.
bool is_pure(const Poset& p, Mask subset);
bool is_pure(const Poset& p, std::span<const std::size_t> subset);

inline constexpr std::size_t kDefaultIdealCap = 10'000'000;

/// All down-closed subsets ordered by cardinality, then lexicographically by
/// sorted element indices. Throws ResourceError beyond `cap` ideals.
std::vector<Mask> ideals(const Poset& p, std::size_t cap = kDefaultIdealCap);

/// Calls `visit` on every linear extension once; stop early by returning
/// false. Returns the number of extensions visited.
std::size_t for_each_linear_extension(
    const Poset& p, const std::function<bool(std::span<const std::size_t>)>& visit);

std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p,
                                                        std::size_t cap = kDefaultIdealCap);

inline constexpr std::size_t kDefaultEnumerationLimit = 7;
inline constexpr std::size_t kHardEnumerationLimit = 8;

/// All posets on n elements up to isomorphism, one per class, each in its
/// canonical labeling and sorted by canonical code.
std::vector<Poset> enumerate_posets(std::size_t n,
                                    std::size_t limit = kDefaultEnumerationLimit);

/// Isomorphism-invariant code of a poset on at most 8 elements.
std::uint64_t canonical_code(const Poset& p);

/// An order isomorphism p -> q as an index map, if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q);
inline bool are_isomorphic(const Poset& p, const Poset& q) {
  return find_isomorphism(p, q).has_value();
}

std::string mask_to_string(const Poset& p, Mask s);

}  // namespace hibi
