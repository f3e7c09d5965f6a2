#include "hibi/sagbi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hibi/errors.hpp"

namespace hibi {

Monomial Monomial::variable(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Monomial m(rows, cols);
  m.exp_.at(i * cols + j) = 1;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0u); }

Monomial& Monomial::operator*=(const Monomial& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("monomials over different rings");
  for (std::size_t k = 0; k < exp_.size(); ++k) exp_[k] += o.exp_[k];
  return *this;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const unsigned e = exponent(i, j);
      if (e == 0) continue;
      if (!s.empty()) s += '*';
      s += "U_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s.empty() ? "1" : s;
}

bool DegLexRowMajor::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t k = 0; k < ea.size(); ++k)
    if (ea[k] != eb[k]) return ea[k] < eb[k];
  return false;
}

Polynomial::Polynomial(const Monomial& m, BigInt c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InputError("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || m.is_one()) {
      os << mag;
      if (!m.is_one()) os << '*';
    }
    if (!m.is_one()) os << m.to_string();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

void check_tuple(const SchubertSpec& spec, const GrassTuple& delta) {
  if (delta.m() != spec.m || delta.n() != spec.n) {
    throw InputError("tuple " + delta.to_string() + " does not match m=" +
                     std::to_string(spec.m) + ", n=" + std::to_string(spec.n));
  }
}

void check_in_gamma(const SchubertSpec& spec, const GrassTuple& delta) {
  check_tuple(spec, delta);
  if (!spec.gamma.leq(delta)) {
    throw InputError(delta.to_string() + " is not >= gamma " + spec.gamma.to_string());
  }
}

}  // namespace

Polynomial minor(const SchubertSpec& spec, const GrassTuple& delta) {
  check_tuple(spec, delta);
  const std::size_t m = spec.m;
  const auto live = u_gamma_support(spec);
  Polynomial out;
  std::vector<std::size_t> perm(m);
  std::vector<bool> used(m, false);
  // Row i takes column delta[perm[i]]; prune as soon as an entry is a structural zero.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      std::size_t inversions = 0;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          if (perm[a] > perm[b]) ++inversions;
      Monomial mono(spec.m, spec.n);
      for (std::size_t r = 0; r < m; ++r) {
        mono *= Monomial::variable(spec.m, spec.n, r, delta[perm[r]] - 1);
      }
      out += Polynomial(mono, inversions % 2 ? -1 : 1);
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k] || !live[i][delta[k] - 1]) continue;
      used[k] = true;
      perm[i] = k;
      rec(i + 1);
      used[k] = false;
    }
  };
  rec(0);
  return out;
}

Monomial diagonal_monomial(const SchubertSpec& spec, const GrassTuple& delta) {
  check_tuple(spec, delta);
  Monomial mono(spec.m, spec.n);
  for (std::size_t i = 0; i < spec.m; ++i)
    mono *= Monomial::variable(spec.m, spec.n, i, delta[i] - 1);
  return mono;
}

bool lm_multiplicativity_check(const SchubertSpec& spec, const GrassTuple& a,
                               const GrassTuple& b) {
  check_in_gamma(spec, a);
  check_in_gamma(spec, b);
  const Monomial lhs = minor(spec, a).leading_monomial() * minor(spec, b).leading_monomial();
  const Monomial rhs =
      minor(spec, a.meet(b)).leading_monomial() * minor(spec, a.join(b)).leading_monomial();
  return lhs == rhs;
}

bool straightening_lm_check(const SchubertSpec& spec, const GrassTuple& a, const GrassTuple& b) {
  check_in_gamma(spec, a);
  check_in_gamma(spec, b);
  if (a.leq(b) || b.leq(a)) {
    throw InputError("straightening check needs incomparable tuples, got " + a.to_string() +
                     " and " + b.to_string());
  }
  const Polynomial fa = minor(spec, a), fb = minor(spec, b);
  const Polynomial diff = fa * fb - minor(spec, a.meet(b)) * minor(spec, a.join(b));
  if (diff.is_zero()) return true;
  return DegLexRowMajor{}(diff.leading_monomial(),
                          fa.leading_monomial() * fb.leading_monomial());
}

StandardMonomialScan standard_monomial_scan(const SchubertSpec& spec, std::size_t degree,
                                            std::size_t multichain_cap) {
  const GammaLattice g = gamma_lattice(spec);
  const auto& tuples = g.tuples;
  std::vector<Polynomial> minors;
  for (const auto& t : tuples) minors.push_back(minor(spec, t));

  StandardMonomialScan scan;
  scan.degree = degree;
  std::set<std::vector<unsigned>> leading;
  std::vector<std::size_t> chain;
  std::function<void(const Polynomial&)> rec = [&](const Polynomial& product) {
    if (chain.size() == degree) {
      if (++scan.standard_monomials > multichain_cap) {
        throw ResourceError("multichain count exceeds cap " + std::to_string(multichain_cap));
      }
      leading.insert(product.leading_monomial().exponents());
      return;
    }
    const std::size_t start = chain.empty() ? 0 : chain.back();
    for (std::size_t j = start; j < tuples.size(); ++j) {
      if (!chain.empty() && !tuples[chain.back()].leq(tuples[j])) continue;
      chain.push_back(j);
      rec(product * minors[j]);
      chain.pop_back();
    }
  };
  rec(Polynomial(Monomial(spec.m, spec.n)));
  scan.distinct_leading_monomials = leading.size();
  scan.hilbert = hilbert_function(g.join_irreducibles(), degree).back();

  if (scan.distinct_leading_monomials != scan.standard_monomials) {
    throw MathAssertion("standard monomials of degree " + std::to_string(degree) +
                        " share leading monomials");
  }
  if (scan.hilbert != scan.standard_monomials) {
    throw MathAssertion("standard monomial count " + std::to_string(scan.standard_monomials) +
                        " differs from H(" + std::to_string(degree) + ") = " + scan.hilbert.str());
  }
  return scan;
}

SagbiSummary verify_sagbi(const SchubertSpec& spec, std::size_t max_degree) {
  SagbiSummary sum;
  sum.spec = spec;
  const GammaLattice g = gamma_lattice(spec);
  const auto& tuples = g.tuples;
  sum.tuples = tuples.size();
  for (const auto& t : all_tuples(spec.m, spec.n)) {
    const Polynomial f = minor(spec, t);
    if (spec.gamma.leq(t)) {
      if (!f.is_zero() && f.leading_monomial() == diagonal_monomial(spec, t)) ++sum.diagonal_ok;
    } else if (f.is_zero()) {
      ++sum.zero_minors_outside;
    }
  }
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = a; b < tuples.size(); ++b) {
      ++sum.pairs;
      if (lm_multiplicativity_check(spec, tuples[a], tuples[b])) ++sum.multiplicative_pairs;
      if (!tuples[a].leq(tuples[b]) && !tuples[b].leq(tuples[a])) {
        ++sum.incomparable_pairs;
        if (straightening_lm_check(spec, tuples[a], tuples[b])) ++sum.straightening_ok;
      }
    }
  }
  const std::size_t outside = all_tuples(spec.m, spec.n).size() - tuples.size();
  bool ok = sum.diagonal_ok == sum.tuples && sum.zero_minors_outside == outside &&
            sum.multiplicative_pairs == sum.pairs && sum.straightening_ok == sum.incomparable_pairs;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    sum.scans.push_back(standard_monomial_scan(spec, d));
  }
  sum.all_passed = ok;
  return sum;
}

}  // namespace hibi
