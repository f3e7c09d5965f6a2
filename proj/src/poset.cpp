#include "hibi/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

void check_size(std::size_t n) {
  if (n > kMaxPosetSize) {
    throw InputError("poset has " + std::to_string(n) + " elements; at most " +
                     std::to_string(kMaxPosetSize) + " are supported");
  }
}

// Finds a directed cycle in the graph given by adjacency lists, if any.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    state[v] = 1;
    stack.push_back(v);
    for (std::size_t w : adj[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(v)) return cycle;
  }
  return {};
}

}  // namespace

Poset Poset::from_covers(std::size_t n, std::span<const Cover> covers,
                         std::vector<std::string> labels) {
  check_size(n);
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw InputError("label count does not match element count");

  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) {
      throw InputError("cover (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an index out of range [0," + std::to_string(n) + ")");
    }
    if (a == b) throw InputError("cycle: " + labels[a] + " < " + labels[a]);
    adj[a].push_back(b);
  }
  if (auto cyc = find_cycle(adj); !cyc.empty()) {
    std::string msg = "cycle:";
    for (std::size_t i = 0; i < cyc.size(); ++i) msg += (i ? " < " : " ") + labels[cyc[i]];
    throw InputError(msg);
  }

  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.leq_.assign(n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> todo{s};
    p.leq_[s * n + s] = 1;
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      for (std::size_t w : adj[v]) {
        if (!p.leq_[s * n + w]) {
          p.leq_[s * n + w] = 1;
          todo.push_back(w);
        }
      }
    }
  }
  p.derive();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  check_size(n);
  if (leq.size() != n) throw InputError("relation table has wrong row count");
  for (const auto& row : leq) {
    if (row.size() != n) throw InputError("relation table is not square");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x][x]) throw InputError("relation is not reflexive at " + labels[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) {
        throw InputError("relation is not antisymmetric: " + labels[x] + ", " + labels[y]);
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[x][y] && leq[y][z] && !leq[x][z]) {
          throw InputError("relation is not transitive: " + labels[x] + " <= " + labels[y] +
                           " <= " + labels[z]);
        }
      }
    }
  }
  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.leq_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) p.leq_[x * n + y] = leq[x][y] ? 1 : 0;
  p.derive();
  return p;
}

Poset Poset::chain(std::size_t n) {
  std::vector<Cover> c;
  for (std::size_t i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return from_covers(n, c);
}

Poset Poset::antichain(std::size_t n) { return from_covers(n, {}); }

Poset Poset::grid(std::size_t rows, std::size_t cols) {
  std::vector<Cover> c;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (i + 1 < rows) c.emplace_back(i * cols + j, (i + 1) * cols + j);
      if (j + 1 < cols) c.emplace_back(i * cols + j, i * cols + j + 1);
    }
  }
  return from_covers(rows * cols, c, std::move(labels));
}

void Poset::derive() {
  covers_.clear();
  upper_.assign(n_, {});
  lower_.assign(n_, {});
  down_.assign(n_, 0);
  up_.assign(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (leq(y, x)) down_[x] |= Mask{1} << y;
      if (leq(x, y)) up_[x] |= Mask{1} << y;
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      // x < y is a cover iff nothing lies strictly between.
      Mask between = up_[x] & down_[y] & ~(Mask{1} << x) & ~(Mask{1} << y);
      if (between == 0) {
        covers_.emplace_back(x, y);
        upper_[x].push_back(y);
        lower_[y].push_back(x);
      }
    }
  }
}

bool Poset::covered_by(std::size_t x, std::size_t y) const {
  const auto& u = upper_[x];
  return std::find(u.begin(), u.end(), y) != u.end();
}

bool Poset::is_ideal(Mask s) const {
  for (std::size_t x = 0; x < n_; ++x) {
    if ((s >> x & 1) && (down_[x] & ~s)) return false;
  }
  return true;
}

bool Poset::is_chain() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (!comparable(x, y)) return false;
  return true;
}

Poset Poset::induced(std::span<const std::size_t> elements) const {
  const std::size_t k = elements.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(labels_[elements[i]]);
    for (std::size_t j = 0; j < k; ++j) rel[i][j] = leq(elements[i], elements[j]);
  }
  return from_relation(std::move(labels), rel);
}

Poset Poset::induced(Mask elements) const {
  std::vector<std::size_t> idx;
  for (std::size_t x = 0; x < n_; ++x)
    if (elements >> x & 1) idx.push_back(x);
  return induced(idx);
}

Poset Poset::dual() const {
  std::vector<Cover> c;
  for (auto [a, b] : covers_) c.emplace_back(b, a);
  return from_covers(n_, c, labels_);
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> indeg(n_);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n_; ++x) {
    indeg[x] = lower_[x].size();
    if (indeg[x] == 0) ready.push(x);
  }
  std::vector<std::size_t> out;
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    out.push_back(x);
    for (std::size_t y : upper_[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  return out;
}

ExtendedPoset::ExtendedPoset(Poset base) : base_(std::move(base)) {
  const std::size_t n = base_.size();
  if (n + 2 > kMaxPosetSize) throw InputError("poset too large to extend");
  std::vector<Cover> c(base_.covers());
  std::vector<std::string> labels = base_.labels();
  labels.push_back("-inf");
  labels.push_back("inf");
  const std::size_t b = n, t = n + 1;
  if (n == 0) c.emplace_back(b, t);
  for (std::size_t x = 0; x < n; ++x) {
    if (base_.lower_covers(x).empty()) c.emplace_back(b, x);
    if (base_.upper_covers(x).empty()) c.emplace_back(x, t);
  }
  hat_ = Poset::from_covers(n + 2, c, std::move(labels));
}

std::vector<std::size_t> heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  for (std::size_t x : p.linear_extension())
    for (std::size_t y : p.lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

std::vector<std::size_t> coheights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  auto order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t y : p.upper_covers(*it)) h[*it] = std::max(h[*it], h[y] + 1);
  return h;
}

std::size_t height(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw InputError("element index out of range");
  return heights(p)[x];
}

std::size_t coheight(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw InputError("element index out of range");
  return coheights(p)[x];
}

std::size_t rank(const Poset& p) {
  if (p.empty()) throw InputError("rank of the empty poset is undefined");
  auto h = heights(p);
  return *std::max_element(h.begin(), h.end());
}

std::size_t rank(const ExtendedPoset& p) { return rank(p.poset()); }

bool is_pure(const Poset& p, Mask subset) {
  if (subset == 0) throw InputError("purity of an empty subset is undefined");
  Poset q = p.induced(subset);
  // lengths[x]: bit L set iff some maximal chain starting at x upward has length L.
  std::vector<Mask> lengths(q.size(), 0);
  auto order = q.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    if (q.upper_covers(x).empty()) {
      lengths[x] = 1;
    } else {
      for (std::size_t y : q.upper_covers(x)) lengths[x] |= lengths[y] << 1;
    }
  }
  Mask all = 0;
  for (std::size_t x = 0; x < q.size(); ++x)
    if (q.lower_covers(x).empty()) all |= lengths[x];
  return std::popcount(all) == 1;
}

bool is_pure(const Poset& p, std::span<const std::size_t> subset) {
  Mask m = 0;
  for (std::size_t x : subset) {
    if (x >= p.size()) throw InputError("element index out of range");
    m |= Mask{1} << x;
  }
  return is_pure(p, m);
}

std::vector<Mask> ideals(const Poset& p, std::size_t cap) {
  std::vector<Mask> out;
  const auto order = p.linear_extension();
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask cur) {
    if (k == order.size()) {
      if (out.size() >= cap) {
        throw ResourceError("ideal count exceeds cap " + std::to_string(cap));
      }
      out.push_back(cur);
      return;
    }
    const std::size_t x = order[k];
    rec(k + 1, cur);
    // All of x's lower covers precede it in the extension, so this check suffices.
    Mask below = p.down_set(x) & ~(Mask{1} << x);
    if ((below & ~cur) == 0) rec(k + 1, cur | (Mask{1} << x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    // Lexicographic on sorted index lists: the lowest differing bit decides.
    Mask diff = a ^ b;
    if (diff == 0) return false;
    Mask low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  return out;
}

std::size_t for_each_linear_extension(
    const Poset& p, const std::function<bool(std::span<const std::size_t>)>& visit) {
  const std::size_t n = p.size();
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> missing(n);
  for (std::size_t x = 0; x < n; ++x) missing[x] = p.lower_covers(x).size();
  std::size_t count = 0;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (prefix.size() == n) {
      ++count;
      if (!visit(prefix)) stop = true;
      return;
    }
    for (std::size_t x = 0; x < n && !stop; ++x) {
      if (missing[x] != 0) continue;
      missing[x] = SIZE_MAX;  // placed
      for (std::size_t y : p.upper_covers(x)) --missing[y];
      prefix.push_back(x);
      rec();
      prefix.pop_back();
      for (std::size_t y : p.upper_covers(x)) ++missing[y];
      missing[x] = 0;
    }
  };
  rec();
  return count;
}

std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  for_each_linear_extension(p, [&](std::span<const std::size_t> ext) {
    if (out.size() >= cap) {
      throw ResourceError("linear extension count exceeds cap " + std::to_string(cap));
    }
    out.emplace_back(ext.begin(), ext.end());
    return true;
  });
  return out;
}

namespace {

using Invariant = std::tuple<std::size_t, std::size_t, int, int>;

std::vector<Invariant> element_invariants(const Poset& p) {
  auto h = heights(p);
  auto c = coheights(p);
  std::vector<Invariant> inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    inv[x] = {h[x], c[x], std::popcount(p.down_set(x)), std::popcount(p.up_set(x))};
  }
  return inv;
}

// Minimum code over permutations that list elements in invariant order,
// permuting only within blocks of equal invariant. Also returns the
// permutation achieving it (position -> original element).
std::pair<std::uint64_t, std::vector<std::size_t>> canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kHardEnumerationLimit) {
    throw ResourceError("canonical form supports at most " +
                        std::to_string(kHardEnumerationLimit) + " elements");
  }
  auto inv = element_invariants(p);
  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });
  // Block boundaries.
  std::vector<std::size_t> block_end(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[sorted[j]] == inv[sorted[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) block_end[k] = j;
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> best_perm = sorted;
  std::vector<std::size_t> perm = sorted;
  auto code_of = [&](const std::vector<std::size_t>& q) {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        if (k != l) code = (code << 1) | (p.less(q[k], q[l]) ? 1 : 0);
    return code;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      std::uint64_t c = code_of(perm);
      if (c < best) {
        best = c;
        best_perm = perm;
      }
      return;
    }
    for (std::size_t k = pos; k < block_end[pos]; ++k) {
      std::swap(perm[pos], perm[k]);
      rec(pos + 1);
      std::swap(perm[pos], perm[k]);
    }
  };
  rec(0);
  return {best, best_perm};
}

Poset relabel(const Poset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[perm[k]] = k;
  std::vector<Cover> c;
  for (auto [a, b] : p.covers()) c.emplace_back(pos[a], pos[b]);
  std::sort(c.begin(), c.end());
  return Poset::from_covers(n, c);
}

}  // namespace

std::uint64_t canonical_code(const Poset& p) { return canonical_form(p).first; }

std::vector<Poset> enumerate_posets(std::size_t n, std::size_t limit) {
  limit = std::min(limit, kHardEnumerationLimit);
  if (n > limit) {
    throw ResourceError("enumerate_posets: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  }
  std::vector<Poset> level{Poset{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::uint64_t, Poset> classes;
    for (const Poset& q : level) {
      for (Mask ideal : ideals(q)) {
        // New element k-1 is maximal with strict down-set `ideal`.
        std::vector<Cover> c(q.covers());
        for (std::size_t x = 0; x < q.size(); ++x) {
          if ((ideal >> x & 1) && (q.up_set(x) & ideal) == (Mask{1} << x)) {
            c.emplace_back(x, k - 1);
          }
        }
        Poset cand = Poset::from_covers(k, c);
        auto [code, perm] = canonical_form(cand);
        if (!classes.contains(code)) classes.emplace(code, relabel(cand, perm));
      }
    }
    level.clear();
    for (auto& [code, p] : classes) level.push_back(std::move(p));
  }
  return level;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.covers().size() != q.covers().size()) return std::nullopt;
  auto ip = element_invariants(p);
  auto iq = element_invariants(q);
  {
    auto a = ip, b = iq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || ip[x] != iq[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        ok = p.leq(z, x) == q.leq(map[z], y) && p.leq(x, z) == q.leq(y, map[z]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (rec(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

std::string mask_to_string(const Poset& p, Mask s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (s >> x & 1) {
      os << (first ? "" : ",") << p.label(x);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace hibi
