#include "hibi/schubert.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hibi/errors.hpp"

namespace hibi {

GrassTuple::GrassTuple(std::size_t n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("tuple must have at least one entry");
  if (entries_.size() > n_) throw InputError("tuple longer than n");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > static_cast<int>(n_)) {
      throw InputError("tuple entry " + std::to_string(entries_[i]) + " outside [1," +
                       std::to_string(n_) + "]");
    }
    if (i > 0 && entries_[i] <= entries_[i - 1]) {
      throw InputError("tuple " + to_string() + " is not strictly increasing");
    }
  }
}

bool GrassTuple::leq(const GrassTuple& o) const {
  for (std::size_t i = 0; i < m(); ++i)
    if (entries_[i] > o.entries_[i]) return false;
  return true;
}

GrassTuple GrassTuple::meet(const GrassTuple& o) const {
  std::vector<int> e(m());
  for (std::size_t i = 0; i < m(); ++i) e[i] = std::min(entries_[i], o.entries_[i]);
  return GrassTuple(n_, std::move(e));
}

GrassTuple GrassTuple::join(const GrassTuple& o) const {
  std::vector<int> e(m());
  for (std::size_t i = 0; i < m(); ++i) e[i] = std::max(entries_[i], o.entries_[i]);
  return GrassTuple(n_, std::move(e));
}

std::string GrassTuple::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(entries_[i]);
  }
  return s + "]";
}

std::vector<GrassTuple> all_tuples(std::size_t m, std::size_t n) {
  if (m < 1 || m > n) throw InputError("need 1 <= m <= n");
  std::vector<GrassTuple> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (cur.size() == m) {
      out.emplace_back(n, cur);
      return;
    }
    for (int c = next; c <= static_cast<int>(n); ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

GrassTuple gamma_from_a(std::size_t m, std::size_t n, const std::vector<int>& a) {
  if (m < 1 || m > n) throw InputError("need 1 <= m <= n");
  if (a.size() != m) throw InputError("a-vector must have m entries");
  GrassTuple valid(n, a);
  std::vector<int> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = static_cast<int>(n) + 1 - valid[m - 1 - i];
  return GrassTuple(n, std::move(b));
}

SchubertSpec SchubertSpec::from_gamma(std::size_t m, std::size_t n, std::vector<int> gamma) {
  if (m < 1 || m > n) throw InputError("need 1 <= m <= n");
  if (gamma.size() != m) throw InputError("gamma must have m entries");
  return SchubertSpec{m, n, GrassTuple(n, std::move(gamma))};
}

SchubertSpec SchubertSpec::from_a(std::size_t m, std::size_t n, const std::vector<int>& a) {
  return SchubertSpec{m, n, gamma_from_a(m, n, a)};
}

std::vector<SchubertSpec> all_specs(std::size_t m, std::size_t n) {
  std::vector<SchubertSpec> out;
  for (auto& t : all_tuples(m, n)) out.push_back(SchubertSpec{m, n, t});
  return out;
}

GammaLattice gamma_lattice(const SchubertSpec& spec) {
  GammaLattice g;
  g.spec = spec;
  for (auto& t : all_tuples(spec.m, spec.n))
    if (spec.gamma.leq(t)) g.tuples.push_back(t);

  const std::size_t k = g.tuples.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(g.tuples[a].to_string());
    for (std::size_t b = 0; b < k; ++b) rel[a][b] = g.tuples[a].leq(g.tuples[b]);
  }
  try {
    g.realization = from_elements(std::move(labels), rel);
  } catch (const InputError& e) {
    throw MathAssertion(std::string("Gamma(X;gamma) is not a distributive lattice: ") + e.what());
  }
  auto index = [&](const GrassTuple& t) {
    auto it = std::lower_bound(g.tuples.begin(), g.tuples.end(), t);
    if (it == g.tuples.end() || *it != t) {
      throw MathAssertion("componentwise max/min leaves Gamma(X;gamma): " + t.to_string());
    }
    return static_cast<std::size_t>(it - g.tuples.begin());
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (index(g.tuples[a].join(g.tuples[b])) != g.realization.join_table[a][b] ||
          index(g.tuples[a].meet(g.tuples[b])) != g.realization.meet_table[a][b]) {
        throw MathAssertion("lattice operations are not componentwise max/min");
      }
    }
  }
  return g;
}

NNEmbedding nn_ideal_check(const Poset& p, std::size_t rows, std::size_t cols) {
  const std::size_t n = p.size();
  NNEmbedding out;
  if (n > rows * cols) return out;
  // Place elements top-down in P, i.e. bottom-up in the dual; every new cell
  // must keep the image down-closed, so its lower neighbours are occupied.
  auto order = p.linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<std::vector<std::size_t>> owner(rows, std::vector<std::size_t>(cols, SIZE_MAX));
  std::vector<std::pair<std::size_t, std::size_t>> coords(n);

  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t x = order[k];
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (owner[r][c] != SIZE_MAX) continue;
        if (r > 0 && owner[r - 1][c] == SIZE_MAX) continue;
        if (c > 0 && owner[r][c - 1] == SIZE_MAX) continue;
        // Anti-isomorphism against everything already placed.
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
          const std::size_t y = order[j];
          auto [ry, cy] = coords[y];
          const bool img_le = r <= ry && c <= cy;   // f(x) <= f(y)
          const bool img_ge = r >= ry && c >= cy;   // f(x) >= f(y)
          ok = img_le == p.leq(y, x) && img_ge == p.leq(x, y);
        }
        if (!ok) continue;
        owner[r][c] = x;
        coords[x] = {r, c};
        if (rec(k + 1)) return true;
        owner[r][c] = SIZE_MAX;
      }
    }
    return false;
  };
  if (rec(0)) {
    out.found = true;
    out.coords = std::move(coords);
  }
  return out;
}

std::vector<std::vector<bool>> u_gamma_support(const SchubertSpec& spec) {
  std::vector<std::vector<bool>> pattern(spec.m, std::vector<bool>(spec.n));
  for (std::size_t i = 0; i < spec.m; ++i)
    for (std::size_t j = 0; j < spec.n; ++j)
      pattern[i][j] = static_cast<int>(j) + 1 >= spec.gamma[i];
  return pattern;
}

SchubertReport check_level(const SchubertSpec& spec, const AnalyzeOptions& options) {
  SchubertReport rep;
  rep.spec = spec;
  GammaLattice g = gamma_lattice(spec);
  rep.lattice_size = g.tuples.size();
  rep.join_irreducibles = g.join_irreducibles();
  rep.embedding = nn_ideal_check(rep.join_irreducibles, spec.m, spec.n - spec.m);
  if (!rep.embedding.found) {
    throw MathAssertion("join-irreducible poset of " + spec.gamma.to_string() +
                        " is not anti-isomorphic to an ideal of N x N");
  }
  rep.hibi = analyze(rep.join_irreducibles, options);
  if (!rep.hibi.filter_purity && !rep.hibi.ideal_purity) {
    throw MathAssertion("join-irreducible poset of " + spec.gamma.to_string() +
                        " has neither pure filters nor pure ideals");
  }
  if (!rep.hibi.is_level) {
    throw MathAssertion("Schubert cycle " + spec.gamma.to_string() + " is not level");
  }
  return rep;
}

}  // namespace hibi
