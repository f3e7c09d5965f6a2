#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/hibi.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Increasing tuple [c_1 < ... < c_m] with entries in [1, n]; a maximal
/// minor of an m x n matrix, by its columns.
class GrassTuple {
 public:
  GrassTuple() = default;
  /// Throws InputError unless strictly increasing within [1, n].
  GrassTuple(std::size_t n, std::vector<int> entries);

  std::size_t m() const { return entries_.size(); }
  std::size_t n() const { return n_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  /// Componentwise order.
  bool leq(const GrassTuple& o) const;
  GrassTuple meet(const GrassTuple& o) const;  // componentwise min
  GrassTuple join(const GrassTuple& o) const;  // componentwise max

  std::string to_string() const;  // "[1,3]"
  friend bool operator==(const GrassTuple&, const GrassTuple&) = default;
  friend auto operator<=>(const GrassTuple&, const GrassTuple&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
};

/// All m-subsets of [1, n] in lexicographic order.
std::vector<GrassTuple> all_tuples(std::size_t m, std::size_t n);

/// b_i = n + 1 - a_{m+1-i}. The map is an involution, so it also recovers a
/// from b.
GrassTuple gamma_from_a(std::size_t m, std::size_t n, const std::vector<int>& a);

struct SchubertSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  GrassTuple gamma;  // b-vector

  static SchubertSpec from_gamma(std::size_t m, std::size_t n, std::vector<int> gamma);
  static SchubertSpec from_a(std::size_t m, std::size_t n, const std::vector<int>& a);
  /// The a-vector of the Schubert variety.
  GrassTuple a_vector() const { return gamma_from_a(m, n, gamma.entries()); }
};

/// Every valid gamma for (m, n), lexicographic.
std::vector<SchubertSpec> all_specs(std::size_t m, std::size_t n);

struct GammaLattice {
  SchubertSpec spec;
  std::vector<GrassTuple> tuples;  // {delta >= gamma}, lexicographic
  LatticeRealization realization;
  /// Join-irreducible poset, labelled by tuples.
  const Poset& join_irreducibles() const { return realization.lattice.base(); }
};

/// Gamma(X; gamma) with componentwise order, verified to be a distributive
/// lattice whose join and meet are componentwise max and min.
GammaLattice gamma_lattice(const SchubertSpec& spec);

struct NNEmbedding {
  bool found = false;
  /// coords[x] = (row, col) in N x N for element x of P.
  std::vector<std::pair<std::size_t, std::size_t>> coords;
};

/// Searches for an anti-isomorphism of P onto a down-closed subset of
/// [0, rows) x [0, cols) with the componentwise order.
NNEmbedding nn_ideal_check(const Poset& p, std::size_t rows, std::size_t cols);

/// Zero pattern of U_gamma: pattern[i][j] (0-based) is live iff j+1 >= b_{i+1}.
std::vector<std::vector<bool>> u_gamma_support(const SchubertSpec& spec);

struct SchubertReport {
  SchubertSpec spec;
  std::size_t lattice_size = 0;
  Poset join_irreducibles;
  NNEmbedding embedding;
  HibiReport hibi;
};

/// Full pipeline; throws MathAssertion if the poset fails both purity
/// criteria, the N x N embedding is missing, or the ring is not level.
SchubertReport check_level(const SchubertSpec& spec, const AnalyzeOptions& options = {});

}  // namespace hibi
