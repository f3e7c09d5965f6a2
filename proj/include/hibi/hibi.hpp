#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hibi/poset.hpp"

namespace hibi {

using BigInt = boost::multiprecision::cpp_int;

/// A map nu from the extended poset to the naturals with nu(inf) = 0, indexed
/// like ExtendedPoset: base elements first, then -inf, then inf. The degree
/// of the corresponding Hibi-ring monomial is nu(-inf).
class GradedMap {
 public:
  GradedMap() = default;
  /// `values` covers the whole extended poset; the last entry must be 0.
  explicit GradedMap(std::vector<std::int64_t> values);
  /// Values on the base poset plus the degree.
  static GradedMap from_base(std::span<const std::int64_t> on_base, std::int64_t degree);
  static GradedMap zero(std::size_t base_size);

  std::size_t base_size() const { return values_.size() - 2; }
  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::int64_t degree() const { return values_[values_.size() - 2]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  GradedMap& operator+=(const GradedMap& o);
  GradedMap& operator-=(const GradedMap& o);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
  friend bool operator==(const GradedMap&, const GradedMap&) = default;
  friend auto operator<=>(const GradedMap&, const GradedMap&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Membership in the order-reversing maps (T-bar) and the strictly
/// order-reversing maps (T). Only covers of the extended poset are checked.
bool is_order_reversing(const ExtendedPoset& hat, const GradedMap& nu);
bool is_strict(const ExtendedPoset& hat, const GradedMap& nu);

/// Degree-one semigroup generator: indicator of I together with -inf.
GradedMap ideal_indicator(const ExtendedPoset& hat, Mask ideal);

struct Limits {
  /// Largest admissible Hilbert function value per degree.
  BigInt count_cap{1'000'000'000};
  std::size_t ideal_cap = kDefaultIdealCap;
  std::size_t extension_cap = kDefaultIdealCap;
  /// Total strictly order-reversing maps visited by one generator scan.
  std::uint64_t strict_map_cap = 2'000'000'000;
};

/// H(0..max_degree): number of order-reversing maps of each degree, via
/// chains of ideals in J(P).
std::vector<BigInt> hilbert_function(const Poset& p, std::size_t max_degree,
                                     const Limits& limits = {});

/// Same numbers by assigning values along a linear extension, one degree at
/// a time, with states keyed by the values still constraining later elements.
std::vector<BigInt> hilbert_function_by_extension(const Poset& p, std::size_t max_degree,
                                                  const Limits& limits = {});

/// Numerator of the Hilbert series over (1-t)^dim, from H(0..N) with
/// N >= dim; entries past `max_nonzero` must vanish. Trailing zeros trimmed.
std::vector<BigInt> h_vector_from_hilbert(std::span<const BigInt> hilbert, std::size_t dim,
                                          std::size_t max_nonzero);

std::vector<BigInt> h_vector(const Poset& p, const Limits& limits = {});

/// Descent distribution of linear extensions against a natural labeling.
std::vector<BigInt> h_vector_descents(const Poset& p, std::size_t cap = kDefaultIdealCap);

/// Calls `visit` on every strictly order-reversing map of the given degree.
/// Returns the number visited.
std::uint64_t for_each_strict_map(const ExtendedPoset& hat, std::int64_t degree,
                                  const std::function<void(const GradedMap&)>& visit);

/// Whether nu in T(P) is a minimal generator of the canonical module, i.e.
/// nu - mu_I is not in T(P) for any ideal I.
bool is_canonical_generator(const ExtendedPoset& hat, const GradedMap& nu);

struct CanonicalGenerators {
  std::vector<GradedMap> generators;  // sorted lexicographically
  std::size_t cap = 0;
  bool stabilized = false;
};

/// Default scan bound: rank of the extended poset + |P| + 1.
std::size_t default_generator_cap(const Poset& p);

CanonicalGenerators canonical_generators(const Poset& p, std::size_t cap,
                                         const Limits& limits = {});

/// Every principal filter (resp. ideal) of P is pure.
bool filter_purity(const Poset& p);
bool ideal_purity(const Poset& p);

/// The raw formula max{coht(x), r - nu(-inf) + nu(x)} on the extended poset.
GradedMap nu0_formula(const ExtendedPoset& hat, const GradedMap& nu);

/// For every cover x < y of the extended poset: nu0(x) > nu0(y) and
/// nu(x) - nu(y) >= nu0(x) - nu0(y).
bool nu0_cover_claim(const ExtendedPoset& hat, const GradedMap& nu, const GradedMap& nu0);

/// Minimal-degree strict map below nu. Requires filter purity and nu in T(P)
/// (InputError otherwise); its guarantees are asserted (MathAssertion).
GradedMap nu0(const ExtendedPoset& hat, const GradedMap& nu);

struct HibiReport {
  std::size_t size = 0;
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  std::size_t rank_phat = 0;
  std::size_t dim = 0;
  std::vector<BigInt> hilbert_prefix;
  std::vector<BigInt> h_vector;
  std::vector<std::size_t> generator_degrees;
  std::size_t type = 0;
  bool is_level = false;
  bool filter_purity = false;
  bool ideal_purity = false;
  std::size_t generator_cap_used = 0;
  bool stabilized = false;
};

struct AnalyzeOptions {
  std::optional<std::size_t> generator_cap;
  Limits limits;
};

/// All invariants of the Hibi ring on J(P). Throws MathAssertion if the
/// purity criteria for levelness fail on this instance.
HibiReport analyze(const Poset& p, const AnalyzeOptions& options = {});

struct NonLevelInstance {
  Poset poset;
  HibiReport report;
};

std::vector<NonLevelInstance> search_nonlevel(std::size_t max_n,
                                              const AnalyzeOptions& options = {});

struct TheoremScanSummary {
  std::size_t posets = 0;
  std::size_t filter_pure = 0;
  std::size_t ideal_pure = 0;
  std::size_t level = 0;
  std::size_t filter_counterexamples = 0;
  std::size_t ideal_counterexamples = 0;
  std::vector<std::size_t> posets_by_size;
};

/// Checks, for every poset with 1..max_n elements, that filter purity gives
/// all generators in degree rank(P-hat) and ideal purity gives a constant
/// generator degree. Counterexamples are counted, not thrown.
TheoremScanSummary theorem_scan(std::size_t max_n, const AnalyzeOptions& options = {});

struct LemmaSummary {
  std::size_t maps_checked = 0;
  std::size_t failures = 0;
  std::int64_t max_degree = 0;
};

/// nu0 guarantees for every nu in T(P) with degree <= rank(P-hat) + extra.
LemmaSummary verify_lemma_exhaustive(const Poset& p, std::int64_t extra_degrees = 3);

/// Random strict maps of degree up to rank(P-hat) + max_extra, reproducible from seed.
LemmaSummary verify_lemma_random(const Poset& p, std::size_t trials, std::uint64_t seed,
                                 std::int64_t max_extra = 8);

}  // namespace hibi
