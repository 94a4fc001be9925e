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

#ifndef UNIGAL_SCALAR_HPP
#define UNIGAL_SCALAR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "unigal/common.hpp"

namespace unigal {

// Residue-class element of F_{p^k}: coefficients of 1, u, ..., u^{k-1} in the
// modulus basis, each in [0, p). Always stored with exactly k entries.
struct FqElem {
  std::vector<long> c;
  bool operator==(const FqElem&) const = default;
  auto operator<=>(const FqElem&) const = default;
};

using ScalarElem = std::variant<mpq_class, FqElem>;

inline bool scalar_eq(const ScalarElem& a, const ScalarElem& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<mpq_class>(a))
    return std::get<mpq_class>(a) == std::get<mpq_class>(b);
  return std::get<FqElem>(a) == std::get<FqElem>(b);
}

// The scalar coefficient fields: the rationals, or F_{p^k} with k <= 4 given
// by a monic irreducible modulus over the prime field.
class ScalarField {
 public:
  enum class Kind { Rationals, Finite };

  static ScalarField rationals() { return ScalarField(); }

  // modulus: ascending coefficients of a monic polynomial of degree k over F_p.
  // Irreducibility is verified exhaustively (k <= 4: no roots, and for k = 4
  // no monic irreducible quadratic factor).
  static ScalarField finite(long p, std::vector<long> modulus) {
    require(p >= 2, Errc::InvalidArgument, "characteristic must be >= 2");
    for (long d = 2; d * d <= p; ++d)
      require(p % d != 0, Errc::InvalidArgument, "characteristic must be prime");
    require(modulus.size() >= 2 && modulus.size() <= 5, Errc::InvalidArgument,
            "modulus degree must lie in [1, 4]");
    for (auto& x : modulus) x = mod_long(x, p);
    require(modulus.back() == 1, Errc::InvalidArgument, "modulus must be monic");
    ScalarField f;
    f.kind_ = Kind::Finite;
    f.p_ = p;
    f.k_ = static_cast<int>(modulus.size()) - 1;
    f.modulus_ = std::move(modulus);
    f.verify_irreducible();
    return f;
  }

  static ScalarField prime_field(long p) { return finite(p, {0, 1}); }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  long characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
  int degree() const { return kind_ == Kind::Rationals ? 1 : k_; }
  const std::vector<long>& modulus() const { return modulus_; }

  // number of elements, finite case only
  long order() const {
    require(kind_ == Kind::Finite, Errc::InvalidArgument, "order of infinite field");
    long q = 1;
    for (int i = 0; i < k_; ++i) q *= p_;
    return q;
  }

  bool same_as(const ScalarField& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  ScalarElem zero() const {
    if (kind_ == Kind::Rationals) return mpq_class(0);
    return FqElem{std::vector<long>(k_, 0)};
  }
  ScalarElem one() const { return from_int(1); }
  ScalarElem from_int(long n) const {
    if (kind_ == Kind::Rationals) return mpq_class(n);
    FqElem e{std::vector<long>(k_, 0)};
    e.c[0] = mod_long(n, p_);
    return e;
  }
  // the residue class of the modulus variable (finite fields with k >= 2)
  ScalarElem generator() const {
    require(kind_ == Kind::Finite && k_ >= 2, Errc::InvalidArgument, "no field generator");
    FqElem e{std::vector<long>(k_, 0)};
    e.c[1] = 1;
    return e;
  }

  bool is_zero(const ScalarElem& a) const {
    if (kind_ == Kind::Rationals) return std::get<mpq_class>(a) == 0;
    const auto& c = std::get<FqElem>(a).c;
    return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
  }
  bool is_one(const ScalarElem& a) const { return scalar_eq(a, one()); }

  ScalarElem add(const ScalarElem& a, const ScalarElem& b) const {
    if (kind_ == Kind::Rationals) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    FqElem r = std::get<FqElem>(a);
    const auto& y = std::get<FqElem>(b).c;
    for (int i = 0; i < k_; ++i) r.c[i] = mod_long(r.c[i] + y[i], p_);
    return r;
  }
  ScalarElem sub(const ScalarElem& a, const ScalarElem& b) const { return add(a, neg(b)); }
  ScalarElem neg(const ScalarElem& a) const {
    if (kind_ == Kind::Rationals) return mpq_class(-std::get<mpq_class>(a));
    FqElem r = std::get<FqElem>(a);
    for (auto& x : r.c) x = mod_long(-x, p_);
    return r;
  }

  ScalarElem mul(const ScalarElem& a, const ScalarElem& b) const {
    if (kind_ == Kind::Rationals) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    const auto& x = std::get<FqElem>(a).c;
    const auto& y = std::get<FqElem>(b).c;
    std::vector<long> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < k_; ++j) prod[i + j] = mod_long(prod[i + j] + x[i] * y[j], p_);
    }
    // reduce by the monic modulus
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      long lead = prod[d];
      if (lead == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < k_; ++i)
        prod[d - k_ + i] = mod_long(prod[d - k_ + i] - lead * modulus_[i], p_);
    }
    prod.resize(k_);
    return FqElem{std::move(prod)};
  }

  ScalarElem inv(const ScalarElem& a) const {
    require(!is_zero(a), Errc::DivisionByZero, "scalar inverse of zero");
    if (kind_ == Kind::Rationals) return mpq_class(1 / std::get<mpq_class>(a));
    // x^(q-2)
    return pow(a, order() - 2);
  }
  ScalarElem div(const ScalarElem& a, const ScalarElem& b) const { return mul(a, inv(b)); }

  ScalarElem pow(const ScalarElem& a, const mpz_class& n) const {
    if (n < 0) return pow(inv(a), mpz_class(-n));
    ScalarElem r = one();
    ScalarElem base = a;
    mpz_class e = n;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  ScalarElem pow(const ScalarElem& a, long n) const { return pow(a, mpz_class(n)); }

  // x -> x^(p^times) on finite fields; identity on the rationals
  ScalarElem frobenius(const ScalarElem& a, int times) const {
    if (kind_ == Kind::Rationals) return a;
    ScalarElem r = a;
    times = ((times % k_) + k_) % k_;
    for (int i = 0; i < times; ++i) r = pow(r, p_);
    return r;
  }

  // multiplicative order of the Frobenius x -> x^p
  int frobenius_order() const { return kind_ == Kind::Rationals ? 1 : k_; }

  // Enumerate all field elements (finite case), in lexicographic coefficient order.
  std::vector<ScalarElem> all_elements() const {
    require(kind_ == Kind::Finite, Errc::InvalidArgument, "cannot enumerate infinite field");
    std::vector<ScalarElem> out;
    long q = order();
    out.reserve(q);
    for (long n = 0; n < q; ++n) {
      FqElem e{std::vector<long>(k_, 0)};
      long m = n;
      for (int i = 0; i < k_; ++i) {
        e.c[i] = m % p_;
        m /= p_;
      }
      out.push_back(e);
    }
    return out;
  }

  // Least n >= 1 with a^n = 1 (finite, nonzero a).
  long multiplicative_order(const ScalarElem& a) const {
    require(!is_zero(a), Errc::ZeroElement, "order of zero");
    long n = 1;
    ScalarElem x = a;
    while (!is_one(x)) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  // Some root y of y^n = a in a finite field, if one exists.
  std::optional<ScalarElem> nth_root(const ScalarElem& a, long n) const {
    require(kind_ == Kind::Finite, Errc::InvalidArgument, "nth_root needs a finite field");
    if (is_zero(a)) return zero();
    for (const auto& y : all_elements()) {
      if (is_zero(y)) continue;
      if (scalar_eq(pow(y, n), a)) return y;
    }
    return std::nullopt;
  }

  // An element of multiplicative order n, if one exists (n | q-1).
  std::optional<ScalarElem> element_of_order(long n) const {
    require(kind_ == Kind::Finite, Errc::InvalidArgument, "needs a finite field");
    if ((order() - 1) % n != 0) return std::nullopt;
    for (const auto& y : all_elements()) {
      if (is_zero(y)) continue;
      if (multiplicative_order(y) == n) return y;
    }
    return std::nullopt;
  }

 private:
  ScalarField() = default;

  void verify_irreducible() const {
    // no roots in F_p
    for (long r = 0; r < p_; ++r) {
      long v = 0;
      for (int i = k_; i >= 0; --i) v = mod_long(v * r + modulus_[i], p_);
      require(v != 0, Errc::InvalidArgument, "modulus has a root in the prime field");
    }
    if (k_ == 4) {
      // rule out monic irreducible quadratic factors by trial division
      for (long b = 0; b < p_; ++b) {
        for (long c = 0; c < p_; ++c) {
          // skip reducible quadratics: x^2 + b x + c with a root
          bool has_root = false;
          for (long r = 0; r < p_ && !has_root; ++r)
            has_root = mod_long(r * r + b * r + c, p_) == 0;
          if (has_root) continue;
          // divide modulus by x^2 + bx + c over F_p
          std::vector<long> rem(modulus_);
          for (int d = k_; d >= 2; --d) {
            long lead = rem[d];
            if (lead == 0) continue;
            rem[d] = 0;
            rem[d - 1] = mod_long(rem[d - 1] - lead * b, p_);
            rem[d - 2] = mod_long(rem[d - 2] - lead * c, p_);
          }
          require(rem[0] != 0 || rem[1] != 0, Errc::InvalidArgument,
                  "modulus has an irreducible quadratic factor");
        }
      }
    }
  }

  Kind kind_ = Kind::Rationals;
  long p_ = 0;
  int k_ = 1;
  std::vector<long> modulus_;
};

}  // namespace unigal

#endif  // UNIGAL_SCALAR_HPP
