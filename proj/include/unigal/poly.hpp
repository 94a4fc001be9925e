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

#ifndef UNIGAL_POLY_HPP
#define UNIGAL_POLY_HPP

#include <utility>
#include <vector>

#include "unigal/scalar.hpp"

namespace unigal {

// Dense univariate polynomial over a ScalarField, ascending coefficients,
// canonical form has no trailing zeros (the zero polynomial is empty).
struct SPoly {
  std::vector<ScalarElem> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
};

inline SPoly poly_trim(const ScalarField& K, SPoly f) {
  while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

inline SPoly poly_zero() { return SPoly{}; }

inline SPoly poly_const(const ScalarField& K, const ScalarElem& a) {
  if (K.is_zero(a)) return poly_zero();
  return SPoly{{a}};
}

inline SPoly poly_one(const ScalarField& K) { return poly_const(K, K.one()); }

// the monomial a * t^n
inline SPoly poly_monomial(const ScalarField& K, const ScalarElem& a, int n) {
  if (K.is_zero(a)) return poly_zero();
  SPoly f;
  f.c.assign(n + 1, K.zero());
  f.c[n] = a;
  return f;
}

inline SPoly poly_t(const ScalarField& K) { return poly_monomial(K, K.one(), 1); }

inline bool poly_eq(const ScalarField& K, const SPoly& a, const SPoly& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!scalar_eq(a.c[i], b.c[i])) return false;
  return true;
}

inline SPoly poly_add(const ScalarField& K, const SPoly& a, const SPoly& b) {
  SPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
  return poly_trim(K, std::move(r));
}

inline SPoly poly_neg(const ScalarField& K, const SPoly& a) {
  SPoly r = a;
  for (auto& x : r.c) x = K.neg(x);
  return r;
}

inline SPoly poly_sub(const ScalarField& K, const SPoly& a, const SPoly& b) {
  return poly_add(K, a, poly_neg(K, b));
}

inline SPoly poly_mul(const ScalarField& K, const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero();
  SPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (K.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
  }
  return poly_trim(K, std::move(r));
}

inline SPoly poly_scale(const ScalarField& K, const SPoly& a, const ScalarElem& s) {
  if (K.is_zero(s)) return poly_zero();
  SPoly r = a;
  for (auto& x : r.c) x = K.mul(x, s);
  return r;
}

// quotient and remainder; divisor must be nonzero
inline std::pair<SPoly, SPoly> poly_divmod(const ScalarField& K, const SPoly& a, const SPoly& b) {
  require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
  SPoly rem = a;
  SPoly quo;
  int db = b.degree();
  ScalarElem lead_inv = K.inv(b.c.back());
  if (rem.degree() >= db) quo.c.assign(rem.degree() - db + 1, K.zero());
  while (rem.degree() >= db) {
    int shift = rem.degree() - db;
    ScalarElem q = K.mul(rem.c.back(), lead_inv);
    quo.c[shift] = q;
    for (int i = 0; i <= db; ++i)
      rem.c[shift + i] = K.sub(rem.c[shift + i], K.mul(q, b.c[i]));
    rem = poly_trim(K, std::move(rem));
  }
  return {poly_trim(K, std::move(quo)), std::move(rem)};
}

inline SPoly poly_mod(const ScalarField& K, const SPoly& a, const SPoly& b) {
  return poly_divmod(K, a, b).second;
}

inline SPoly poly_make_monic(const ScalarField& K, const SPoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(K, a, K.inv(a.c.back()));
}

// monic gcd
inline SPoly poly_gcd(const ScalarField& K, SPoly a, SPoly b) {
  while (!b.is_zero()) {
    SPoly r = poly_mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(K, a);
}

// inverse of a modulo m (coprime), via extended Euclid
inline SPoly poly_mod_inverse(const ScalarField& K, const SPoly& a, const SPoly& m) {
  SPoly r0 = m, r1 = poly_mod(K, a, m);
  SPoly s0 = poly_zero(), s1 = poly_one(K);
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(K, r0, r1);
    SPoly s2 = poly_sub(K, s0, poly_mul(K, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(r0.degree() == 0, Errc::DivisionByZero, "not invertible modulo m");
  return poly_mod(K, poly_scale(K, s0, K.inv(r0.c[0])), m);
}

inline SPoly poly_pow_mod(const ScalarField& K, SPoly base, mpz_class e, const SPoly& m) {
  SPoly r = poly_one(K);
  base = poly_mod(K, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(K, poly_mul(K, r, base), m);
    base = poly_mod(K, poly_mul(K, base, base), m);
    e >>= 1;
  }
  return r;
}

inline ScalarElem poly_eval(const ScalarField& K, const SPoly& f, const ScalarElem& x) {
  ScalarElem v = K.zero();
  for (int i = f.degree(); i >= 0; --i) v = K.add(K.mul(v, x), f.c[i]);
  return v;
}

inline SPoly poly_from_longs(const ScalarField& K, const std::vector<long>& coeffs) {
  SPoly f;
  f.c.reserve(coeffs.size());
  for (long x : coeffs) f.c.push_back(K.from_int(x));
  return poly_trim(K, std::move(f));
}

// Monic irreducible polynomials over a finite scalar field, enumerated by
// (degree, lexicographic coefficient) order. Used for factoring by trial
// division; degrees stay small in this codebase.
class IrreducibleEnumerator {
 public:
  explicit IrreducibleEnumerator(const ScalarField& K) : K_(K) {
    require(K.kind() == ScalarField::Kind::Finite, Errc::InvalidArgument,
            "irreducible enumeration needs a finite coefficient field");
  }

  // all monic irreducibles of degree exactly d
  const std::vector<SPoly>& of_degree(int d) {
    while (static_cast<int>(by_degree_.size()) < d) extend();
    return by_degree_[d - 1];
  }

 private:
  void extend() {
    int d = static_cast<int>(by_degree_.size()) + 1;
    std::vector<SPoly> found;
    std::vector<ScalarElem> elems = K_.all_elements();
    long q = K_.order();
    // iterate monic f = t^d + sum_{i<d} a_i t^i in lex order of (a_{d-1},...,a_0)
    std::vector<long> idx(d, 0);
    while (true) {
      SPoly f;
      f.c.reserve(d + 1);
      for (int i = 0; i < d; ++i) f.c.push_back(elems[idx[i]]);
      f.c.push_back(K_.one());
      bool irred = true;
      for (int e = 1; irred && 2 * e <= d; ++e) {
        for (const auto& g : by_degree_[e - 1]) {
          if (poly_mod(K_, f, g).is_zero()) {
            irred = false;
            break;
          }
        }
      }
      if (irred) found.push_back(std::move(f));
      int pos = 0;
      while (pos < d) {
        if (++idx[pos] < q) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
    by_degree_.push_back(std::move(found));
  }

  ScalarField K_;
  std::vector<std::vector<SPoly>> by_degree_;
};

// Factor a nonzero polynomial over a finite scalar field into monic
// irreducibles by trial division. Returns (irreducible, multiplicity) pairs
// plus the leading unit.
inline std::vector<std::pair<SPoly, int>> poly_factor(const ScalarField& K, SPoly f,
                                                      ScalarElem* unit_out = nullptr) {
  require(!f.is_zero(), Errc::ZeroElement, "factoring the zero polynomial");
  ScalarElem unit = f.c.back();
  f = poly_make_monic(K, f);
  std::vector<std::pair<SPoly, int>> out;
  IrreducibleEnumerator en(K);
  int d = 1;
  while (f.degree() > 0) {
    if (2 * d > f.degree()) {
      out.emplace_back(f, 1);  // remaining cofactor is irreducible
      break;
    }
    for (const auto& g : en.of_degree(d)) {
      int mult = 0;
      while (true) {
        auto [q, r] = poly_divmod(K, f, g);
        if (!r.is_zero()) break;
        f = q;
        ++mult;
      }
      if (mult > 0) out.emplace_back(g, mult);
      if (f.degree() < d) break;
    }
    ++d;
  }
  if (unit_out) *unit_out = unit;
  return out;
}

}  // namespace unigal

#endif  // UNIGAL_POLY_HPP
