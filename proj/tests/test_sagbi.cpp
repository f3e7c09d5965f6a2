#include "doctest.h"

#include <random>

#include "hibi/errors.hpp"
#include "hibi/sagbi.hpp"

using namespace hibi;

namespace {

Monomial var(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  return Monomial::variable(rows, cols, i, j);
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<unsigned> e(0, 2);
  Monomial m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (unsigned k = e(rng); k > 0; --k) m *= var(rows, cols, i, j);
  return m;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial p;
  for (int t = 0; t < 3; ++t) p += Polynomial(random_monomial(rng, rows, cols), coef(rng));
  return p;
}

// Determinant of a 2x2 matrix of polynomials.
Polynomial det2(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                const Polynomial& d) {
  return a * d - b * c;
}

}  // namespace

TEST_CASE("Monomial") {
  Monomial m = var(2, 4, 0, 2) * var(2, 4, 1, 3) * var(2, 4, 1, 3);
  CHECK(m.degree() == 3);
  CHECK(m.to_string() == "U_1_3*U_2_4^2");
  CHECK(Monomial(2, 4).to_string() == "1");
  CHECK(Monomial(2, 4).is_one());
}

TEST_CASE("term order") {
  DegLexRowMajor lt;
  const std::size_t r = 2, c = 4;
  CHECK(lt(var(r, c, 0, 1), var(r, c, 0, 0)));
  CHECK(lt(var(r, c, 1, 0), var(r, c, 0, 3)));
  CHECK(lt(var(r, c, 0, 0), var(r, c, 1, 3) * var(r, c, 1, 3)));
  CHECK(lt(var(r, c, 0, 3) * var(r, c, 1, 2), var(r, c, 0, 2) * var(r, c, 1, 3)));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial u = random_monomial(rng, r, c), v = random_monomial(rng, r, c),
             w = random_monomial(rng, r, c);
    // Total: exactly one of u < v, v < u, u == v.
    CHECK(int(lt(u, v)) + int(lt(v, u)) + int(u == v) == 1);
    if (lt(u, v)) CHECK(lt(u * w, v * w));
    if (u.degree() < v.degree()) CHECK(lt(u, v));
    if (lt(u, v) && lt(v, w)) CHECK(lt(u, w));
  }
}

TEST_CASE("polynomial ring axioms") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_polynomial(rng, 2, 3), b = random_polynomial(rng, 2, 3),
               c = random_polynomial(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
  }
  Polynomial x(var(1, 2, 0, 0)), y(var(1, 2, 0, 1));
  Polynomial sq = (x + y) * (x - y);
  CHECK(sq.term_count() == 2);
  CHECK(sq.coefficient(var(1, 2, 0, 1) * var(1, 2, 0, 1)) == -1);
  CHECK(leading_monomial(x + y) == var(1, 2, 0, 0));
  CHECK(leading_monomial(y) == var(1, 2, 0, 1));
  CHECK_THROWS_AS(Polynomial().leading_monomial(), InputError);

  // Exact coefficients beyond 64 bits.
  Polynomial big(x);
  for (int k = 0; k < 70; ++k) big = big + big;
  CHECK(big.coefficient(var(1, 2, 0, 0)) == BigInt(1) << 70);
}

TEST_CASE("minor") {
  const std::size_t r = 2, c = 4;
  auto g12 = SchubertSpec::from_gamma(2, 4, {1, 2});
  auto g13 = SchubertSpec::from_gamma(2, 4, {1, 3});
  CHECK(minor(g12, GrassTuple(4, {1, 2})) == Polynomial(var(r, c, 0, 0) * var(r, c, 1, 1)));
  CHECK(minor(g13, GrassTuple(4, {1, 2})).is_zero());
  Polynomial m34 = minor(g12, GrassTuple(4, {3, 4}));
  CHECK(m34.term_count() == 2);
  CHECK(m34 == Polynomial(var(r, c, 0, 2) * var(r, c, 1, 3)) -
                   Polynomial(var(r, c, 0, 3) * var(r, c, 1, 2)));
  CHECK(leading_monomial(m34) == var(r, c, 0, 2) * var(r, c, 1, 3));

  SUBCASE("m = 1: the single entry") {
    auto s = SchubertSpec::from_gamma(1, 4, {3});
    CHECK(minor(s, GrassTuple(4, {2})).is_zero());
    CHECK(minor(s, GrassTuple(4, {4})) == Polynomial(var(1, 4, 0, 3)));
  }
  SUBCASE("agrees with a 2x2 determinant; a row swap flips the sign") {
    auto s = SchubertSpec::from_gamma(2, 5, {1, 3});
    auto sup = u_gamma_support(s);
    auto entry = [&](std::size_t i, int col) {
      std::size_t j = static_cast<std::size_t>(col - 1);
      return sup[i][j] ? Polynomial(var(2, 5, i, j)) : Polynomial();
    };
    for (const auto& d : all_tuples(2, 5)) {
      Polynomial direct = det2(entry(0, d[0]), entry(0, d[1]), entry(1, d[0]), entry(1, d[1]));
      Polynomial swapped = det2(entry(1, d[0]), entry(1, d[1]), entry(0, d[0]), entry(0, d[1]));
      CHECK(minor(s, d) == direct);
      CHECK(swapped == -direct);
    }
  }
  SUBCASE("nonzero exactly on Gamma(X;gamma) with diagonal leading term") {
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::size_t m = 1; m < n && m <= 3; ++m)
        for (const auto& spec : all_specs(m, n))
          for (const auto& d : all_tuples(m, n)) {
            Polynomial p = minor(spec, d);
            CHECK(p.is_zero() == !spec.gamma.leq(d));
            if (!p.is_zero()) CHECK(leading_monomial(p) == diagonal_monomial(spec, d));
          }
  }
  CHECK_THROWS_AS(minor(g12, GrassTuple(5, {1, 2})), InputError);
  CHECK_THROWS_AS(minor(g12, GrassTuple(4, {1, 2, 3})), InputError);
}

TEST_CASE("leading-monomial multiplicativity") {
  auto g12 = SchubertSpec::from_gamma(2, 4, {1, 2});
  GrassTuple a(4, {1, 4}), b(4, {2, 3});
  CHECK(lm_multiplicativity_check(g12, a, b));
  CHECK(lm_multiplicativity_check(g12, a, a));
  CHECK(lm_multiplicativity_check(g12, GrassTuple(4, {1, 2}), GrassTuple(4, {3, 4})));
  CHECK(diagonal_monomial(g12, a) * diagonal_monomial(g12, b) ==
        diagonal_monomial(g12, a.meet(b)) * diagonal_monomial(g12, a.join(b)));
}

TEST_CASE("straightening") {
  auto g12 = SchubertSpec::from_gamma(2, 4, {1, 2});
  CHECK(straightening_lm_check(g12, GrassTuple(4, {1, 4}), GrassTuple(4, {2, 3})));
  auto g5 = SchubertSpec::from_gamma(2, 5, {1, 2});
  CHECK(straightening_lm_check(g5, GrassTuple(5, {1, 5}), GrassTuple(5, {2, 4})));
  CHECK_THROWS_AS(straightening_lm_check(g12, GrassTuple(4, {1, 2}), GrassTuple(4, {3, 4})),
                  InputError);

  // The Plucker relation makes the difference vanish for the generic 2x4 case.
  Polynomial diff = minor(g12, GrassTuple(4, {1, 4})) * minor(g12, GrassTuple(4, {2, 3})) -
                    minor(g12, GrassTuple(4, {1, 3})) * minor(g12, GrassTuple(4, {2, 4}));
  CHECK_FALSE(diff.is_zero());
  CHECK(diff == -(minor(g12, GrassTuple(4, {1, 2})) * minor(g12, GrassTuple(4, {3, 4}))));
}

TEST_CASE("standard monomial scan") {
  auto g12 = SchubertSpec::from_gamma(2, 4, {1, 2});
  CHECK(standard_monomial_scan(g12, 0).standard_monomials == 1);
  auto s1 = standard_monomial_scan(g12, 1);
  CHECK(s1.standard_monomials == 6);
  CHECK(s1.distinct_leading_monomials == 6);
  auto s2 = standard_monomial_scan(g12, 2);
  CHECK(s2.standard_monomials == 20);
  CHECK(s2.hilbert == 20);
  auto g13 = SchubertSpec::from_gamma(2, 4, {1, 3});
  CHECK(standard_monomial_scan(g13, 1).standard_monomials == 5);
  CHECK_THROWS_AS(standard_monomial_scan(g12, 3, 10), ResourceError);
}

TEST_CASE("verify_sagbi") {
  for (const auto& spec : all_specs(2, 4)) {
    auto s = verify_sagbi(spec, 3);
    CHECK(s.all_passed);
    CHECK(s.diagonal_ok == s.tuples);
    CHECK(s.multiplicative_pairs == s.pairs);
    CHECK(s.straightening_ok == s.incomparable_pairs);
    CHECK(s.scans.size() == 4);
  }
  auto s = verify_sagbi(SchubertSpec::from_gamma(3, 6, {1, 2, 3}), 2);
  CHECK(s.all_passed);
  CHECK(s.tuples == 20);
  CHECK(s.zero_minors_outside == 0);
}
