#pragma once

// Brute-force reference computations for the test suites. Everything here
// works from the raw order relation only (no covers, no linear extensions
// from the library) so it stays independent of the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hibi/hibi.hpp"
#include "hibi/poset.hpp"

namespace oracle {

using hibi::Mask;
using hibi::Poset;

inline std::vector<std::vector<bool>> relation(const Poset& p) {
  std::vector<std::vector<bool>> r(p.size(), std::vector<bool>(p.size()));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) r[x][y] = p.leq(x, y);
  return r;
}

/// Longest chain by checking every subset for total order.
inline std::size_t rank_by_subsets(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    bool chain = true;
    for (std::size_t x = 0; x < n && chain; ++x)
      for (std::size_t y = 0; y < n && chain; ++y)
        if ((s >> x & 1) && (s >> y & 1)) chain = p.leq(x, y) || p.leq(y, x);
    if (chain) best = std::max<std::size_t>(best, __builtin_popcountll(s) - 1);
  }
  return best;
}

inline std::vector<Mask> ideals_by_subsets(const Poset& p) {
  std::vector<Mask> out;
  const std::size_t n = p.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if ((s >> x & 1) && p.leq(y, x) && !(s >> y & 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::size_t linear_extensions_by_permutations(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
        if (p.less(perm[j], perm[i])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Calls visit(values) for every map P -> [0, bound]^n.
inline void for_each_box_map(std::size_t n, std::int64_t lo, std::int64_t hi,
                             const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> v(n, lo);
  if (hi < lo && n > 0) return;
  while (true) {
    visit(v);
    std::size_t k = 0;
    while (k < n && v[k] == hi) v[k++] = lo;
    if (k == n) return;
    ++v[k];
  }
}

/// H(d) by checking all (d+1)^|P| maps against every comparable pair.
inline std::uint64_t hilbert_by_box(const Poset& p, std::int64_t d) {
  std::uint64_t count = 0;
  for_each_box_map(p.size(), 0, d, [&](const std::vector<std::int64_t>& v) {
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(x, y) && v[x] < v[y]) return;
    ++count;
  });
  return count;
}

/// Strict on every comparable pair of the extended poset, with inf -> 0.
inline bool strict_by_pairs(const Poset& p, const std::vector<std::int64_t>& on_base,
                            std::int64_t degree) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (on_base[x] <= 0 || on_base[x] >= degree) return false;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y) && on_base[x] <= on_base[y]) return false;
  }
  return degree > 0;
}

/// Minimal generators of the canonical module in degrees [lo, hi], by the
/// literal test over every ideal I: nu - mu_I must fail to be strict.
inline std::vector<std::vector<std::int64_t>> generators_by_ideals(const Poset& p,
                                                                   std::int64_t lo,
                                                                   std::int64_t hi) {
  const auto ideals = ideals_by_subsets(p);
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    for_each_box_map(p.size(), 1, d - 1, [&](const std::vector<std::int64_t>& v) {
      if (!strict_by_pairs(p, v, d)) return;
      for (Mask I : ideals) {
        std::vector<std::int64_t> w(v);
        for (std::size_t x = 0; x < p.size(); ++x) w[x] -= (I >> x) & 1;
        if (strict_by_pairs(p, w, d - 1)) return;
      }
      auto g = v;
      g.push_back(d);
      out.push_back(g);
    });
  }
  return out;
}

/// Number of isomorphism classes of posets on n elements by generating every
/// strict order relation and comparing under all permutations. n <= 4.
inline std::size_t count_posets_bruteforce(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (bits >> k & 1) lt[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (lt[a][b] && lt[b][a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c]) ok = false;
      }
    if (!ok) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> code;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) code.push_back(lt[perm[a]][perm[b]]);
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace oracle
