#include "hibi/lattice.hpp"

#include <bit>

#include "hibi/errors.hpp"

namespace hibi {

DistLattice DistLattice::from_poset(Poset p, std::size_t cap) {
  DistLattice d;
  d.elements_ = ideals(p, cap);
  d.base_ = std::move(p);
  for (std::size_t i = 0; i < d.elements_.size(); ++i) d.index_.emplace(d.elements_[i], i);
  return d;
}

std::size_t DistLattice::index_of(Mask ideal) const {
  auto it = index_.find(ideal);
  if (it == index_.end()) {
    throw InputError(mask_to_string(base_, ideal) + " is not an ideal of the base poset");
  }
  return it->second;
}

Poset DistLattice::as_poset() const {
  const std::size_t k = size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(mask_to_string(base_, elements_[a]));
    for (std::size_t b = 0; b < k; ++b) rel[a][b] = leq(a, b);
  }
  return Poset::from_relation(std::move(labels), rel);
}

namespace {

// Least element of {z : bound(z)} under p, or SIZE_MAX.
template <class Pred>
std::size_t least_of(const Poset& p, Pred bound) {
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (!bound(z)) continue;
    bool least = true;
    for (std::size_t w = 0; w < p.size() && least; ++w) least = !bound(w) || p.leq(z, w);
    if (least) return z;
  }
  return SIZE_MAX;
}

}  // namespace

LatticeRealization from_elements(std::vector<std::string> labels,
                                 const std::vector<std::vector<bool>>& leq) {
  if (labels.empty()) throw InputError("a lattice must have at least one element");
  const Poset l = Poset::from_relation(std::move(labels), leq);
  const std::size_t k = l.size();

  LatticeRealization out;
  out.join_table.assign(k, std::vector<std::size_t>(k));
  out.meet_table.assign(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t j = least_of(l, [&](std::size_t z) { return l.leq(a, z) && l.leq(b, z); });
      if (j == SIZE_MAX) {
        throw InputError("not a lattice: " + l.label(a) + " and " + l.label(b) +
                         " have no least upper bound");
      }
      // Greatest lower bound = least element in the dual order.
      std::size_t m = SIZE_MAX;
      for (std::size_t z = 0; z < k && m == SIZE_MAX; ++z) {
        if (!(l.leq(z, a) && l.leq(z, b))) continue;
        bool greatest = true;
        for (std::size_t w = 0; w < k && greatest; ++w)
          greatest = !(l.leq(w, a) && l.leq(w, b)) || l.leq(w, z);
        if (greatest) m = z;
      }
      if (m == SIZE_MAX) {
        throw InputError("not a lattice: " + l.label(a) + " and " + l.label(b) +
                         " have no greatest lower bound");
      }
      out.join_table[a][b] = j;
      out.meet_table[a][b] = m;
    }
  }
  const auto& join = out.join_table;
  const auto& meet = out.meet_table;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
          throw InputError("not distributive: " + l.label(a) + " meet (" + l.label(b) +
                           " join " + l.label(c) + ") fails");
        }

  for (std::size_t a = 0; a < k; ++a)
    if (l.lower_covers(a).size() == 1) out.join_irreducible_inputs.push_back(a);
  Poset p = l.induced(out.join_irreducible_inputs);
  const auto& ji = out.join_irreducible_inputs;

  out.lattice = DistLattice::from_poset(std::move(p));
  if (out.lattice.size() != k) {
    throw InternalError("Birkhoff correspondence failed: |J(P)| != |D|");
  }
  out.phi.resize(k);
  std::vector<bool> hit(k, false);
  for (std::size_t a = 0; a < k; ++a) {
    Mask m = 0;
    for (std::size_t x = 0; x < ji.size(); ++x)
      if (l.leq(ji[x], a)) m |= Mask{1} << x;
    out.phi[a] = out.lattice.index_of(m);
    if (hit[out.phi[a]]) throw InternalError("Birkhoff map is not injective");
    hit[out.phi[a]] = true;
  }
  return out;
}

Poset join_irreducibles(const DistLattice& d) {
  const Poset l = d.as_poset();
  std::vector<std::size_t> ji;
  for (std::size_t a = 0; a < l.size(); ++a)
    if (l.lower_covers(a).size() == 1) ji.push_back(a);
  Poset q = l.induced(ji);
  // Relabel each principal ideal by its top element.
  std::vector<std::string> labels;
  const Poset& p = d.base();
  for (std::size_t a : ji) {
    Mask s = d.element(a);
    std::string name = mask_to_string(p, s);
    for (std::size_t x = 0; x < p.size(); ++x)
      if ((s >> x & 1) && p.down_set(x) == s) name = p.label(x);
    labels.push_back(std::move(name));
  }
  return Poset::from_covers(q.size(), q.covers(), std::move(labels));
}

}  // namespace hibi
