#include "hibi/hibi.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "hibi/errors.hpp"

namespace hibi {

GradedMap::GradedMap(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw InputError("graded map needs values for -inf and inf");
  if (values_.back() != 0) throw InputError("graded map must send inf to 0");
}

GradedMap GradedMap::from_base(std::span<const std::int64_t> on_base, std::int64_t degree) {
  std::vector<std::int64_t> v(on_base.begin(), on_base.end());
  v.push_back(degree);
  v.push_back(0);
  return GradedMap(std::move(v));
}

GradedMap GradedMap::zero(std::size_t base_size) {
  return GradedMap(std::vector<std::int64_t>(base_size + 2, 0));
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
  if (o.size() != size()) throw InputError("graded maps over different posets");
  for (std::size_t i = 0; i < size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
  if (o.size() != size()) throw InputError("graded maps over different posets");
  for (std::size_t i = 0; i < size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

namespace {

void check_shape(const ExtendedPoset& hat, const GradedMap& nu) {
  if (nu.size() != hat.size()) throw InputError("graded map does not match the poset size");
}

}  // namespace

bool is_order_reversing(const ExtendedPoset& hat, const GradedMap& nu) {
  check_shape(hat, nu);
  if (nu[hat.top()] != 0) return false;
  for (auto [x, y] : hat.poset().covers())
    if (nu[x] < nu[y]) return false;
  return true;
}

bool is_strict(const ExtendedPoset& hat, const GradedMap& nu) {
  check_shape(hat, nu);
  if (nu[hat.top()] != 0) return false;
  for (auto [x, y] : hat.poset().covers())
    if (nu[x] <= nu[y]) return false;
  return true;
}

GradedMap ideal_indicator(const ExtendedPoset& hat, Mask ideal) {
  const Poset& p = hat.base();
  if (!p.is_ideal(ideal) || (ideal & ~p.all())) {
    throw InputError(mask_to_string(p, ideal) + " is not an ideal");
  }
  std::vector<std::int64_t> v(hat.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) v[x] = (ideal >> x) & 1;
  v[hat.bot()] = 1;
  return GradedMap(std::move(v));
}

std::vector<BigInt> hilbert_function(const Poset& p, std::size_t max_degree,
                                     const Limits& limits) {
  // nu <-> weakly decreasing chain of ideals {nu >= 1} >= ... >= {nu >= d},
  // so H(d) = g_{d+1}(empty) where g_1 = 1 and g_{k+1}(J) = sum_{I >= J} g_k(I).
  const auto ids = ideals(p, limits.ideal_cap);
  std::unordered_map<Mask, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
  // Superset sums over J(P): add elements top-down, each step J += J u {x}
  // whenever J u {x} is again an ideal.
  auto order = p.linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> steps;
  for (std::size_t x : order) {
    auto& step = steps.emplace_back();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const Mask bit = Mask{1} << x;
      if (ids[i] & bit) continue;
      if (auto it = index.find(ids[i] | bit); it != index.end()) step.emplace_back(i, it->second);
    }
  }
  std::vector<BigInt> g(ids.size(), BigInt(1));
  std::vector<BigInt> out;
  out.reserve(max_degree + 1);
  out.emplace_back(1);
  for (std::size_t degree = 1; degree <= max_degree; ++degree) {
    for (const auto& step : steps)
      for (auto [lo, hi] : step) g[lo] += g[hi];
    if (g[0] > limits.count_cap) {
      throw ResourceError("Hilbert function value at degree " + std::to_string(degree) +
                          " exceeds count cap " + limits.count_cap.str());
    }
    out.push_back(g[0]);
  }
  return out;
}

std::vector<BigInt> hilbert_function_by_extension(const Poset& p, std::size_t max_degree,
                                                  const Limits& limits) {
  const std::size_t n = p.size();
  const auto order = p.linear_extension();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

  // frontier[k]: elements placed before position k with an upper cover at
  // position >= k. Only their values constrain the rest of the assignment.
  std::vector<std::vector<std::size_t>> frontier(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t x = order[j];
      for (std::size_t y : p.upper_covers(x)) {
        if (pos[y] >= k) {
          frontier[k].push_back(x);
          break;
        }
      }
    }
  }

  // Slot of each frontier element inside the state vector at position k.
  std::vector<std::vector<std::size_t>> slot(n + 1, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i < frontier[k].size(); ++i) slot[k][frontier[k][i]] = i;

  std::vector<BigInt> out;
  out.reserve(max_degree + 1);
  using State = std::vector<std::int64_t>;
  for (std::size_t degree = 0; degree <= max_degree; ++degree) {
    // Forward transfer: states are the values on the current frontier.
    std::map<State, BigInt> states{{State{}, BigInt(1)}};
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t x = order[k];
      std::map<State, BigInt> next;
      State key(frontier[k + 1].size());
      for (const auto& [state, ways] : states) {
        // Order reversing: nu(x) <= nu(z) for every lower cover z, and <= nu(-inf).
        auto upper = static_cast<std::int64_t>(degree);
        for (std::size_t z : p.lower_covers(x)) upper = std::min(upper, state[slot[k][z]]);
        for (std::int64_t v = 0; v <= upper; ++v) {
          for (std::size_t i = 0; i < key.size(); ++i) {
            const std::size_t y = frontier[k + 1][i];
            key[i] = y == x ? v : state[slot[k][y]];
          }
          next[key] += ways;
        }
      }
      states = std::move(next);
    }
    BigInt h = states.empty() ? BigInt(0) : states.begin()->second;
    if (h > limits.count_cap) {
      throw ResourceError("Hilbert function value at degree " + std::to_string(degree) +
                          " exceeds count cap " + limits.count_cap.str());
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<BigInt> h_vector_from_hilbert(std::span<const BigInt> hilbert, std::size_t dim,
                                          std::size_t max_nonzero) {
  // Binomial coefficients of (1-t)^dim.
  std::vector<BigInt> binom(dim + 1);
  binom[0] = 1;
  for (std::size_t j = 1; j <= dim; ++j) binom[j] = binom[j - 1] * (dim - j + 1) / j;

  std::vector<BigInt> h(hilbert.size());
  for (std::size_t k = 0; k < hilbert.size(); ++k) {
    BigInt c = 0;
    for (std::size_t j = 0; j <= std::min(k, dim); ++j) {
      if (j % 2 == 0) {
        c += binom[j] * hilbert[k - j];
      } else {
        c -= binom[j] * hilbert[k - j];
      }
    }
    h[k] = c;
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 0) {
      throw InternalError("negative h-vector entry h_" + std::to_string(k) + " = " + h[k].str());
    }
    if (k > max_nonzero && h[k] != 0) {
      throw InternalError("nonzero h-vector tail at index " + std::to_string(k));
    }
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<BigInt> h_vector(const Poset& p, const Limits& limits) {
  const std::size_t n = p.size();
  auto hf = hilbert_function(p, 2 * n + 2, limits);
  return h_vector_from_hilbert(hf, n + 1, n);
}

std::vector<BigInt> h_vector_descents(const Poset& p, std::size_t cap) {
  const auto natural = p.linear_extension();
  std::vector<std::size_t> label(p.size());
  for (std::size_t k = 0; k < natural.size(); ++k) label[natural[k]] = k;

  std::vector<BigInt> h(p.size() + 1, 0);
  std::size_t seen = 0;
  for_each_linear_extension(p, [&](std::span<const std::size_t> w) {
    if (++seen > cap) {
      throw ResourceError("linear extension count exceeds cap " + std::to_string(cap));
    }
    std::size_t descents = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (label[w[i]] > label[w[i + 1]]) ++descents;
    h[descents] += 1;
    return true;
  });
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::uint64_t for_each_strict_map(const ExtendedPoset& hat, std::int64_t degree,
                                  const std::function<void(const GradedMap&)>& visit) {
  const Poset& p = hat.base();
  const std::size_t n = p.size();
  const auto order = p.linear_extension();
  const auto h = heights(p);

  std::vector<std::int64_t> values(n + 2, 0);
  values[hat.bot()] = degree;
  if (n == 0) {
    if (degree < 1) return 0;
    visit(GradedMap(values));
    return 1;
  }
  std::uint64_t count = 0;
  // Assign from the top of the poset down; nu(x) exceeds every upper cover
  // and leaves room for the chain below x under nu(-inf).
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      ++count;
      visit(GradedMap(values));
      return;
    }
    const std::size_t x = order[n - 1 - k];
    std::int64_t lo = 1;
    for (std::size_t y : p.upper_covers(x)) lo = std::max(lo, values[y] + 1);
    const std::int64_t hi = degree - 1 - static_cast<std::int64_t>(h[x]);
    for (std::int64_t v = lo; v <= hi; ++v) {
      values[x] = v;
      rec(k + 1);
    }
    values[x] = 0;
  };
  rec(0);
  return count;
}

bool is_canonical_generator(const ExtendedPoset& hat, const GradedMap& nu) {
  check_shape(hat, nu);
  const Poset& q = hat.poset();
  // Smallest down-closed set containing -inf and closed under tight upper
  // covers (nu(x) = nu(y) + 1). nu - mu_I stays strict for some ideal I iff
  // this set avoids inf.
  Mask closed = q.down_set(hat.bot());
  Mask frontier = closed;
  while (frontier) {
    Mask next = 0;
    for (std::size_t x = 0; x < q.size(); ++x) {
      if (!(frontier >> x & 1)) continue;
      for (std::size_t y : q.upper_covers(x)) {
        if (nu[x] == nu[y] + 1) {
          Mask add = q.down_set(y) & ~closed;
          closed |= add;
          next |= add;
        }
      }
    }
    frontier = next;
  }
  return (closed >> hat.top()) & 1;
}

std::size_t default_generator_cap(const Poset& p) {
  return rank(ExtendedPoset(p)) + p.size() + 1;
}

CanonicalGenerators canonical_generators(const Poset& p, std::size_t cap, const Limits& limits) {
  const ExtendedPoset hat(p);
  const std::size_t r = rank(hat);
  if (cap < r) {
    throw InputError("generator cap " + std::to_string(cap) + " is below rank " +
                     std::to_string(r));
  }
  CanonicalGenerators out;
  out.cap = cap;
  std::vector<std::size_t> per_degree;
  std::uint64_t visited = 0;
  for (std::size_t d = r; d <= cap; ++d) {
    std::size_t found = 0;
    for_each_strict_map(hat, static_cast<std::int64_t>(d), [&](const GradedMap& nu) {
      if (++visited > limits.strict_map_cap) {
        throw ResourceError("strict map enumeration exceeds cap " +
                            std::to_string(limits.strict_map_cap));
      }
      if (is_canonical_generator(hat, nu)) {
        out.generators.push_back(nu);
        ++found;
      }
    });
    per_degree.push_back(found);
  }
  const std::size_t k = per_degree.size();
  out.stabilized = per_degree[k - 1] == 0 && (k < 2 || per_degree[k - 2] == 0);
  std::sort(out.generators.begin(), out.generators.end(),
            [](const GradedMap& a, const GradedMap& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.values() < b.values();
            });
  return out;
}

namespace {

bool all_principal_pure(const Poset& p, bool filters) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!is_pure(p, filters ? p.up_set(x) : p.down_set(x))) return false;
  return true;
}

}  // namespace

bool filter_purity(const Poset& p) {
  const bool direct = all_principal_pure(p, true);
  // Equivalent cover form: coht(x) = coht(y) + 1 for every cover x < y.
  const ExtendedPoset hat(p);
  const auto coht = coheights(hat.poset());
  bool covers = true;
  for (auto [x, y] : p.covers()) covers = covers && coht[x] == coht[y] + 1;
  if (direct != covers) throw InternalError("filter purity and its cover form disagree");
  return direct;
}

bool ideal_purity(const Poset& p) {
  const bool direct = all_principal_pure(p, false);
  const ExtendedPoset hat(p);
  const auto ht = heights(hat.poset());
  bool covers = true;
  for (auto [x, y] : p.covers()) covers = covers && ht[y] == ht[x] + 1;
  if (direct != covers) throw InternalError("ideal purity and its cover form disagree");
  return direct;
}

GradedMap nu0_formula(const ExtendedPoset& hat, const GradedMap& nu) {
  check_shape(hat, nu);
  const auto coht = coheights(hat.poset());
  const auto r = static_cast<std::int64_t>(rank(hat));
  std::vector<std::int64_t> v(hat.size());
  for (std::size_t x = 0; x < hat.size(); ++x) {
    v[x] = std::max(static_cast<std::int64_t>(coht[x]), r - nu.degree() + nu[x]);
  }
  if (v[hat.top()] != 0) throw InternalError("nu0 does not vanish at inf");
  return GradedMap(std::move(v));
}

bool nu0_cover_claim(const ExtendedPoset& hat, const GradedMap& nu, const GradedMap& nu0) {
  for (auto [x, y] : hat.poset().covers()) {
    if (!(nu0[x] > nu0[y])) return false;
    if (!(nu[x] - nu[y] >= nu0[x] - nu0[y])) return false;
  }
  return true;
}

GradedMap nu0(const ExtendedPoset& hat, const GradedMap& nu) {
  if (!filter_purity(hat.base())) {
    throw InputError("nu0 requires every principal filter to be pure");
  }
  if (!is_strict(hat, nu)) throw InputError("nu0 requires a strictly order-reversing map");
  GradedMap out = nu0_formula(hat, nu);
  const auto r = static_cast<std::int64_t>(rank(hat));
  if (!is_strict(hat, out)) throw MathAssertion("nu0 is not strictly order reversing");
  if (out.degree() != r) throw MathAssertion("nu0(-inf) differs from rank of P-hat");
  if (!is_order_reversing(hat, nu - out)) throw MathAssertion("nu - nu0 is not order reversing");
  if (!nu0_cover_claim(hat, nu, out)) throw MathAssertion("cover-wise claim for nu0 fails");
  return out;
}

HibiReport analyze(const Poset& p, const AnalyzeOptions& options) {
  const ExtendedPoset hat(p);
  HibiReport rep;
  rep.size = p.size();
  rep.labels = p.labels();
  rep.covers = p.covers();
  rep.rank_phat = rank(hat);
  rep.dim = p.size() + 1;
  rep.hilbert_prefix = hilbert_function(p, 2 * p.size() + 2, options.limits);
  rep.h_vector = h_vector_from_hilbert(rep.hilbert_prefix, rep.dim, p.size());

  const std::size_t cap = options.generator_cap.value_or(default_generator_cap(p));
  auto gens = canonical_generators(p, cap, options.limits);
  for (const auto& g : gens.generators) {
    rep.generator_degrees.push_back(static_cast<std::size_t>(g.degree()));
  }
  rep.type = rep.generator_degrees.size();
  rep.is_level = !rep.generator_degrees.empty() &&
                 std::all_of(rep.generator_degrees.begin(), rep.generator_degrees.end(),
                             [&](std::size_t d) { return d == rep.generator_degrees.front(); });
  rep.filter_purity = filter_purity(p);
  rep.ideal_purity = ideal_purity(p);
  rep.generator_cap_used = cap;
  rep.stabilized = gens.stabilized;

  // Reciprocity: the lowest canonical degree is dim - s and carries h_s generators.
  const std::size_t s = rep.h_vector.size() - 1;
  if (rep.generator_degrees.empty() || rep.generator_degrees.front() != rep.rank_phat) {
    throw InternalError("lowest canonical generator degree differs from rank of P-hat");
  }
  if (rep.dim - s != rep.rank_phat) {
    throw InternalError("h-vector degree inconsistent with rank of P-hat");
  }
  const auto lowest = static_cast<std::size_t>(
      std::count(rep.generator_degrees.begin(), rep.generator_degrees.end(), rep.rank_phat));
  if (rep.h_vector.back() != lowest) {
    throw InternalError("h_s differs from the number of lowest-degree generators");
  }
  if (rep.is_level && rep.h_vector.back() != rep.type) {
    throw InternalError("level ring with h_s != type");
  }

  if (rep.filter_purity &&
      !(rep.is_level && rep.generator_degrees.back() == rep.rank_phat)) {
    throw MathAssertion("pure principal filters but canonical generators are not all in degree " +
                        std::to_string(rep.rank_phat));
  }
  if (rep.ideal_purity && !rep.is_level) {
    throw MathAssertion("pure principal ideals but the Hibi ring is not level");
  }
  return rep;
}

std::vector<NonLevelInstance> search_nonlevel(std::size_t max_n, const AnalyzeOptions& options) {
  if (max_n > kDefaultEnumerationLimit) {
    throw ResourceError("search_nonlevel supports max_n <= " +
                        std::to_string(kDefaultEnumerationLimit));
  }
  std::vector<NonLevelInstance> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (Poset& p : enumerate_posets(n)) {
      HibiReport rep = analyze(p, options);
      if (rep.is_level) continue;
      if (rep.filter_purity || rep.ideal_purity) {
        throw MathAssertion("non-level Hibi ring satisfies a purity hypothesis");
      }
      out.push_back({std::move(p), std::move(rep)});
    }
  }
  return out;
}

TheoremScanSummary theorem_scan(std::size_t max_n, const AnalyzeOptions& options) {
  if (max_n > kDefaultEnumerationLimit) {
    throw ResourceError("theorem_scan supports max_n <= " +
                        std::to_string(kDefaultEnumerationLimit));
  }
  TheoremScanSummary sum;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto posets = enumerate_posets(n);
    sum.posets_by_size.push_back(posets.size());
    for (const Poset& p : posets) {
      ++sum.posets;
      // Computed without analyze's own assertions so failures are counted.
      const ExtendedPoset hat(p);
      const std::size_t r = rank(hat);
      const auto gens =
          canonical_generators(p, options.generator_cap.value_or(default_generator_cap(p)),
                               options.limits);
      const auto& g = gens.generators;
      const bool all_at_rank = std::all_of(g.begin(), g.end(), [&](const GradedMap& nu) {
        return nu.degree() == static_cast<std::int64_t>(r);
      });
      const bool constant = std::all_of(g.begin(), g.end(), [&](const GradedMap& nu) {
        return nu.degree() == g.front().degree();
      });
      if (constant) ++sum.level;
      if (filter_purity(p)) {
        ++sum.filter_pure;
        if (!all_at_rank) ++sum.filter_counterexamples;
      }
      if (ideal_purity(p)) {
        ++sum.ideal_pure;
        if (!constant) ++sum.ideal_counterexamples;
      }
    }
  }
  return sum;
}

LemmaSummary verify_lemma_exhaustive(const Poset& p, std::int64_t extra_degrees) {
  const ExtendedPoset hat(p);
  const auto r = static_cast<std::int64_t>(rank(hat));
  LemmaSummary sum;
  sum.max_degree = r + extra_degrees;
  for (std::int64_t d = r; d <= r + extra_degrees; ++d) {
    for_each_strict_map(hat, d, [&](const GradedMap& nu) {
      ++sum.maps_checked;
      try {
        nu0(hat, nu);
      } catch (const MathAssertion&) {
        ++sum.failures;
      }
    });
  }
  return sum;
}

LemmaSummary verify_lemma_random(const Poset& p, std::size_t trials, std::uint64_t seed,
                                 std::int64_t max_extra) {
  const ExtendedPoset hat(p);
  const Poset& base = hat.base();
  const auto r = static_cast<std::int64_t>(rank(hat));
  const auto order = base.linear_extension();
  const auto h = heights(base);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_degree(r, r + max_extra);

  LemmaSummary sum;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::int64_t d = pick_degree(rng);
    sum.max_degree = std::max(sum.max_degree, d);
    std::vector<std::int64_t> v(base.size(), 0);
    // Top-down sampling; every range is nonempty because d >= r.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t x = *it;
      std::int64_t lo = 1;
      for (std::size_t y : base.upper_covers(x)) lo = std::max(lo, v[y] + 1);
      const std::int64_t hi = d - 1 - static_cast<std::int64_t>(h[x]);
      v[x] = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    }
    const GradedMap nu = GradedMap::from_base(v, d);
    ++sum.maps_checked;
    try {
      nu0(hat, nu);
    } catch (const MathAssertion&) {
      ++sum.failures;
    }
  }
  return sum;
}

}  // namespace hibi
