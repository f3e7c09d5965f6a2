#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hibi/hibi.hpp"
#include "hibi/schubert.hpp"

namespace hibi {

/// Exponent vector over the m x n entries U_{ij}, row-major.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), exp_(rows * cols, 0) {}
  static Monomial variable(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned exponent(std::size_t i, std::size_t j) const { return exp_[i * cols_ + j]; }
  const std::vector<unsigned>& exponents() const { return exp_; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "U_1_3*U_2_4^2" (1-based indices), "1" for the empty product.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<unsigned> exp_;
};

/// Degree-lexicographic order with U_{11} > U_{12} > ... > U_{1n} > U_{21} > ...
/// (row-major precedence). On U_gamma this makes every nonzero maximal minor
/// lead with its main diagonal.
struct DegLexRowMajor {
  /// a < b
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact integer coefficients, terms kept in
/// increasing term order; no zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, BigInt, DegLexRowMajor>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m, BigInt c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(const Monomial& m) const;

  /// Largest monomial; throws InputError on the zero polynomial.
  const Monomial& leading_monomial() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

inline const Monomial& leading_monomial(const Polynomial& p) { return p.leading_monomial(); }

/// Maximal minor of U_gamma on the columns of delta (Leibniz expansion,
/// skipping structural zeros).
Polynomial minor(const SchubertSpec& spec, const GrassTuple& delta);

/// Product of U_{i, delta_i}.
Monomial diagonal_monomial(const SchubertSpec& spec, const GrassTuple& delta);

/// lm(minor(a)) lm(minor(b)) == lm(minor(a meet b)) lm(minor(a join b)).
/// Both tuples must lie in Gamma(X; gamma).
bool lm_multiplicativity_check(const SchubertSpec& spec, const GrassTuple& a,
                               const GrassTuple& b);

/// For incomparable a, b: minor(a)minor(b) - minor(meet)minor(join) is zero
/// or has leading monomial below lm(minor(a)) lm(minor(b)).
bool straightening_lm_check(const SchubertSpec& spec, const GrassTuple& a, const GrassTuple& b);

struct StandardMonomialScan {
  std::size_t degree = 0;
  std::size_t standard_monomials = 0;
  std::size_t distinct_leading_monomials = 0;
  BigInt hilbert;  // H(degree) of the join-irreducible poset
};

/// Multichains delta_1 <= ... <= delta_d in Gamma(X; gamma): leading
/// monomials of their products must be pairwise distinct and their number
/// must equal H(d) of the Hibi ring. MathAssertion otherwise.
StandardMonomialScan standard_monomial_scan(const SchubertSpec& spec, std::size_t degree,
                                            std::size_t multichain_cap = 1'000'000);

struct SagbiSummary {
  SchubertSpec spec;
  std::size_t tuples = 0;
  std::size_t diagonal_ok = 0;
  std::size_t zero_minors_outside = 0;
  std::size_t pairs = 0;
  std::size_t multiplicative_pairs = 0;
  std::size_t incomparable_pairs = 0;
  std::size_t straightening_ok = 0;
  std::vector<StandardMonomialScan> scans;
  bool all_passed = false;
};

/// Every sagbi-side check for one spec up to the given degree.
SagbiSummary verify_sagbi(const SchubertSpec& spec, std::size_t max_degree);

}  // namespace hibi
