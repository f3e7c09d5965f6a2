#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// Finite distributive lattice J(P), every element stored as its ideal of
/// the join-irreducible poset P. Join is union, meet is intersection.
class DistLattice {
 public:
  static DistLattice from_poset(Poset p, std::size_t cap = kDefaultIdealCap);

  const Poset& base() const { return base_; }
  const std::vector<Mask>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  Mask element(std::size_t i) const { return elements_[i]; }

  /// Index of the element represented by `ideal`; throws InputError if
  /// `ideal` is not an ideal of the base.
  std::size_t index_of(Mask ideal) const;

  bool leq(std::size_t a, std::size_t b) const {
    return (elements_[a] & ~elements_[b]) == 0;
  }
  std::size_t join(std::size_t a, std::size_t b) const {
    return index_of(elements_[a] | elements_[b]);
  }
  std::size_t meet(std::size_t a, std::size_t b) const {
    return index_of(elements_[a] & elements_[b]);
  }

  /// The lattice order itself as a poset, labelled by ideal contents.
  Poset as_poset() const;

 private:
  Poset base_;
  std::vector<Mask> elements_;
  std::unordered_map<Mask, std::size_t> index_;
};

/// A lattice given by explicit elements and order, verified distributive and
/// normalized to J(P).
struct LatticeRealization {
  DistLattice lattice;
  /// phi[a]: lattice index of input element a, i.e. of {x in P : x <= a}.
  std::vector<std::size_t> phi;
  /// Input indices of the join-irreducible elements, in the order of P.
  std::vector<std::size_t> join_irreducible_inputs;
  /// Pairwise join and meet of input elements (input indices).
  std::vector<std::vector<std::size_t>> join_table;
  std::vector<std::vector<std::size_t>> meet_table;
};

/// Throws InputError with a witness pair if (labels, leq) is not a lattice
/// and with a witness triple if it is not distributive.
LatticeRealization from_elements(std::vector<std::string> labels,
                                 const std::vector<std::vector<bool>>& leq);

/// Elements covering exactly one element, as an induced subposet labelled by
/// their unique maximal element.
Poset join_irreducibles(const DistLattice& d);

}  // namespace hibi
