/*
   Copyright 2026 The unigal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNIGAL_VALUATION_HPP
#define UNIGAL_VALUATION_HPP

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "unigal/base_field.hpp"

namespace unigal {

// A place of Q or of F_q(t): a rational prime, the sign of a rational (kept
// only mod squares, i.e. for p = 2), a monic irreducible polynomial, or the
// place at infinity of a function field with v(f/g) = deg g - deg f.
struct Place {
  enum class Kind { IntegerPrime, Sign, MonicIrreducible, Infinity };
  Kind kind = Kind::IntegerPrime;
  mpz_class prime;         // IntegerPrime
  std::vector<long> poly;  // MonicIrreducible key (prime-field coefficient digits)

  friend bool operator<(const Place& a, const Place& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Kind::IntegerPrime) return a.prime < b.prime;
    if (a.kind == Kind::MonicIrreducible) return a.poly < b.poly;
    return false;
  }
  friend bool operator==(const Place& a, const Place& b) {
    return !(a < b) && !(b < a);
  }
};

// Finitely supported exponent vector over places, reduced mod p.
struct ValuationVector {
  std::map<Place, long> v;

  bool operator==(const ValuationVector&) const = default;
};

namespace detail {

// flatten an FqElem/rational scalar into a comparable digit key
inline std::vector<long> poly_key(const ScalarField& K, const SPoly& f) {
  std::vector<long> key;
  for (const auto& c : f.c) {
    const auto& e = std::get<FqElem>(c);
    key.insert(key.end(), e.c.begin(), e.c.end());
    key.push_back(-1);  // separator
  }
  return key;
}

inline constexpr long kTrialDivisionBound = 1000000;

}  // namespace detail

// Exact factorization of a nonzero integer by trial division. The instances
// this engine ships keep primes tiny; anything past the bound is reported as
// Undecided rather than silently mis-factored.
inline std::map<mpz_class, long> factor_integer(mpz_class n) {
  require(n != 0, Errc::ZeroElement, "factoring zero");
  if (n < 0) n = -n;
  std::map<mpz_class, long> out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > detail::kTrialDivisionBound)
      fail(Errc::Undecided, "integer too large for exact factorization: " + n.get_str());
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// Valuation of x at every place, exponents reduced mod p. For Q with p = 2 the
// sign place is included. Requires x != 0 and a base of kind Q or F_q(t).
inline ValuationVector valuation_vector(const BaseField& F, const BaseElem& x, long p) {
  require(!F.is_zero(x), Errc::ZeroElement, "valuation of zero");
  ValuationVector out;
  auto push = [&](Place pl, long e) {
    long r = mod_long(e, p);
    if (r != 0) out.v[std::move(pl)] = r;
  };
  if (F.kind() == BaseField::Kind::Scalar) {
    require(F.scalar().is_rationals(), Errc::InvalidArgument,
            "valuations are defined over Q or F_q(t)");
    const mpq_class& q = std::get<mpq_class>(std::get<ScalarElem>(x));
    if (p == 2 && q < 0) push(Place{Place::Kind::Sign, {}, {}}, 1);
    for (const auto& [pr, e] : factor_integer(q.get_num())) push(Place{Place::Kind::IntegerPrime, pr, {}}, e);
    for (const auto& [pr, e] : factor_integer(q.get_den())) push(Place{Place::Kind::IntegerPrime, pr, {}}, -e);
    return out;
  }
  const auto& K = F.scalar();
  const auto& rf = std::get<RFElem>(x);
  for (const auto& [g, e] : poly_factor(K, rf.num))
    push(Place{Place::Kind::MonicIrreducible, {}, detail::poly_key(K, g)}, e);
  for (const auto& [g, e] : poly_factor(K, rf.den))
    push(Place{Place::Kind::MonicIrreducible, {}, detail::poly_key(K, g)}, -e);
  push(Place{Place::Kind::Infinity, {}, {}}, rf.den.degree() - rf.num.degree());
  return out;
}

// Exact p-th power test in Q or F_q(t) (or a finite scalar field), with the
// root exhibited on success. Complete for these fields: valuations must all be
// divisible by p and the residual unit must be a p-th power in the unit group.
inline std::optional<BaseElem> pth_root(const BaseField& F, const BaseElem& x, long p) {
  if (F.is_zero(x)) return F.zero();
  if (F.kind() == BaseField::Kind::Scalar && !F.scalar().is_rationals()) {
    auto r = F.scalar().nth_root(std::get<ScalarElem>(x), p);
    if (!r) return std::nullopt;
    return F.from_scalar(*r);
  }
  if (F.kind() == BaseField::Kind::Scalar) {
    // rationals
    const mpq_class& q = std::get<mpq_class>(std::get<ScalarElem>(x));
    mpq_class root;
    bool negative = q < 0;
    if (negative && p % 2 == 0) return std::nullopt;
    mpz_class num = abs(q.get_num()), den = q.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), p)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), p)) return std::nullopt;
    root = mpq_class(rn, rd);
    if (negative) root = -root;
    return F.from_scalar(ScalarElem(root));
  }
  const auto& K = F.scalar();
  const auto& rf = std::get<RFElem>(x);
  ScalarElem unit_num, unit_den;
  auto fn = poly_factor(K, rf.num, &unit_num);
  auto fd = poly_factor(K, rf.den, &unit_den);
  SPoly rnum = poly_one(K), rden = poly_one(K);
  for (const auto& [g, e] : fn) {
    if (e % p != 0) return std::nullopt;
    for (int i = 0; i < e / p; ++i) rnum = poly_mul(K, rnum, g);
  }
  for (const auto& [g, e] : fd) {
    if (e % p != 0) return std::nullopt;
    for (int i = 0; i < e / p; ++i) rden = poly_mul(K, rden, g);
  }
  auto u = K.nth_root(K.div(unit_num, unit_den), p);
  if (!u) return std::nullopt;
  return F.from_fraction(poly_scale(K, rnum, *u), rden);
}

inline bool is_pth_power(const BaseField& F, const BaseElem& x, long p) {
  return pth_root(F, x, p).has_value();
}

enum class Tri { True, False, Undecided };

struct IndependenceResult {
  Tri status = Tri::Undecided;
  // when status == False: exponents of a dependence, and the p-th root of the
  // corresponding product
  std::vector<long> dependence;
  std::optional<BaseElem> root;
};

// Are the classes of elems independent in F^x/(F^x)^p? The valuation-rank
// criterion decides True; otherwise every nonzero exponent tuple is tested
// with the exact p-th power test, which either exhibits a dependence or, if
// a factorization failed, reports Undecided.
inline IndependenceResult kummer_independent(const BaseField& F, const std::vector<BaseElem>& elems,
                                             long p) {
  const std::size_t n = elems.size();
  for (const auto& x : elems)
    require(!F.is_zero(x), Errc::ZeroElement, "independence of a zero class");
  IndependenceResult res;
  const bool has_places = F.is_rational_functions() || F.scalar().is_rationals();
  bool factorable = has_places;
  std::vector<ValuationVector> vecs;
  if (has_places) {
    try {
      for (const auto& x : elems) vecs.push_back(valuation_vector(F, x, p));
    } catch (const Error& e) {
      if (e.code() != Errc::Undecided) throw;
      factorable = false;
    }
  }
  if (factorable) {
    // rank of the exponent matrix mod p
    std::map<Place, std::size_t> cols;
    for (const auto& v : vecs)
      for (const auto& [pl, e] : v.v) cols.emplace(pl, cols.size());
    std::vector<std::vector<long>> m(n, std::vector<long>(cols.size(), 0));
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [pl, e] : vecs[i].v) m[i][cols[pl]] = e;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < n; ++col) {
      std::size_t piv = rank;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(m[piv], m[rank]);
      long inv = inv_mod_long(m[rank][col], p);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == rank || m[i][col] == 0) continue;
        long f = mod_long(m[i][col] * inv, p);
        for (std::size_t j = col; j < cols.size(); ++j)
          m[i][j] = mod_long(m[i][j] - f * m[rank][j], p);
      }
      ++rank;
    }
    if (rank == n) {
      res.status = Tri::True;
      return res;
    }
  }
  // exhaustive search over exponent tuples
  std::vector<long> tuple(n, 0);
  bool saw_undecided = !factorable;
  while (true) {
    std::size_t pos = 0;
    while (pos < n) {
      if (++tuple[pos] < p) break;
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    BaseElem prod = F.one();
    for (std::size_t i = 0; i < n; ++i)
      if (tuple[i] != 0) prod = F.mul(prod, F.pow(elems[i], tuple[i]));
    try {
      if (auto r = pth_root(F, prod, p)) {
        res.status = Tri::False;
        res.dependence = tuple;
        res.root = r;
        return res;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::Undecided) throw;
      saw_undecided = true;
    }
  }
  res.status = saw_undecided ? Tri::Undecided : Tri::True;
  return res;
}

}  // namespace unigal

#endif  // UNIGAL_VALUATION_HPP
