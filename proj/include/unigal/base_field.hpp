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

#ifndef UNIGAL_BASE_FIELD_HPP
#define UNIGAL_BASE_FIELD_HPP

#include <optional>
#include <string>
#include <variant>

#include "unigal/poly.hpp"

namespace unigal {

// Reduced fraction of polynomials in t. Canonical form: gcd(num, den) = 1 and
// den monic; the zero element is 0/1.
struct RFElem {
  SPoly num, den;
};

// An element of a BaseField. Scalar kind holds a ScalarElem, rational-function
// kind holds an RFElem. Values are canonical on construction; equality is
// structural equality of canonical forms.
using BaseElem = std::variant<ScalarElem, RFElem>;

class BaseField {
 public:
  enum class Kind { Scalar, RationalFunctions };

  static BaseField rationals() { return BaseField(Kind::Scalar, ScalarField::rationals()); }
  static BaseField finite(long p, std::vector<long> modulus) {
    return BaseField(Kind::Scalar, ScalarField::finite(p, std::move(modulus)));
  }
  static BaseField prime_field(long p) { return BaseField(Kind::Scalar, ScalarField::prime_field(p)); }
  static BaseField rational_functions(ScalarField coeff) {
    return BaseField(Kind::RationalFunctions, std::move(coeff));
  }
  // F_q(t) with q = p^k given by a modulus over F_p
  static BaseField fq_t(long p, std::vector<long> modulus = {}) {
    if (modulus.empty()) modulus = {0, 1};
    return rational_functions(ScalarField::finite(p, std::move(modulus)));
  }

  Kind kind() const { return kind_; }
  bool is_rational_functions() const { return kind_ == Kind::RationalFunctions; }
  const ScalarField& scalar() const { return scalar_; }
  long characteristic() const { return scalar_.characteristic(); }

  bool same_as(const BaseField& o) const {
    return kind_ == o.kind_ && scalar_.same_as(o.scalar_);
  }

  std::string describe() const {
    std::string s;
    if (scalar_.is_rationals()) {
      s = "Q";
    } else {
      s = "F" + std::to_string(scalar_.order());
    }
    if (kind_ == Kind::RationalFunctions) s += "(t)";
    return s;
  }

  BaseElem zero() const { return wrap(scalar_.zero()); }
  BaseElem one() const { return wrap(scalar_.one()); }
  BaseElem from_int(long n) const { return wrap(scalar_.from_int(n)); }
  BaseElem from_scalar(const ScalarElem& s) const { return wrap(s); }

  BaseElem t() const {
    require(kind_ == Kind::RationalFunctions, Errc::InvalidArgument,
            "t exists only in rational function fields");
    return RFElem{poly_t(scalar_), poly_one(scalar_)};
  }
  BaseElem from_fraction(const SPoly& num, const SPoly& den) const {
    require(kind_ == Kind::RationalFunctions, Errc::InvalidArgument, "not a function field");
    return canonical(num, den);
  }

  bool is_zero(const BaseElem& a) const {
    check(a);
    if (kind_ == Kind::Scalar) return scalar_.is_zero(std::get<ScalarElem>(a));
    return std::get<RFElem>(a).num.is_zero();
  }
  bool is_one(const BaseElem& a) const { return eq(a, one()); }

  bool eq(const BaseElem& a, const BaseElem& b) const {
    check(a);
    check(b);
    if (kind_ == Kind::Scalar)
      return scalar_eq(std::get<ScalarElem>(a), std::get<ScalarElem>(b));
    const auto& x = std::get<RFElem>(a);
    const auto& y = std::get<RFElem>(b);
    return poly_eq(scalar_, x.num, y.num) && poly_eq(scalar_, x.den, y.den);
  }

  BaseElem add(const BaseElem& a, const BaseElem& b) const {
    check(a);
    check(b);
    if (kind_ == Kind::Scalar)
      return wrap(scalar_.add(std::get<ScalarElem>(a), std::get<ScalarElem>(b)));
    const auto& x = std::get<RFElem>(a);
    const auto& y = std::get<RFElem>(b);
    SPoly num = poly_add(scalar_, poly_mul(scalar_, x.num, y.den), poly_mul(scalar_, y.num, x.den));
    return canonical(num, poly_mul(scalar_, x.den, y.den));
  }
  BaseElem sub(const BaseElem& a, const BaseElem& b) const { return add(a, neg(b)); }
  BaseElem neg(const BaseElem& a) const {
    check(a);
    if (kind_ == Kind::Scalar) return wrap(scalar_.neg(std::get<ScalarElem>(a)));
    const auto& x = std::get<RFElem>(a);
    return RFElem{poly_neg(scalar_, x.num), x.den};
  }

  BaseElem mul(const BaseElem& a, const BaseElem& b) const {
    check(a);
    check(b);
    if (kind_ == Kind::Scalar)
      return wrap(scalar_.mul(std::get<ScalarElem>(a), std::get<ScalarElem>(b)));
    const auto& x = std::get<RFElem>(a);
    const auto& y = std::get<RFElem>(b);
    return canonical(poly_mul(scalar_, x.num, y.num), poly_mul(scalar_, x.den, y.den));
  }

  BaseElem inv(const BaseElem& a) const {
    require(!is_zero(a), Errc::DivisionByZero, "inverse of zero in " + describe());
    if (kind_ == Kind::Scalar) return wrap(scalar_.inv(std::get<ScalarElem>(a)));
    const auto& x = std::get<RFElem>(a);
    return canonical(x.den, x.num);
  }

  BaseElem div(const BaseElem& a, const BaseElem& b) const {
    require(!is_zero(b), Errc::DivisionByZero, "division by zero in " + describe());
    return mul(a, inv(b));
  }

  BaseElem pow(const BaseElem& a, const mpz_class& n) const {
    if (n < 0) return pow(inv(a), mpz_class(-n));
    BaseElem r = one();
    BaseElem base = a;
    mpz_class e = n;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  BaseElem pow(const BaseElem& a, long n) const { return pow(a, mpz_class(n)); }

  // coefficient Frobenius x -> x^(p^times); t is fixed. Identity over Q.
  BaseElem frobenius(const BaseElem& a, int times) const {
    check(a);
    if (scalar_.is_rationals() || times == 0) return a;
    if (kind_ == Kind::Scalar)
      return wrap(scalar_.frobenius(std::get<ScalarElem>(a), times));
    const auto& x = std::get<RFElem>(a);
    SPoly num = x.num, den = x.den;
    for (auto& c : num.c) c = scalar_.frobenius(c, times);
    for (auto& c : den.c) c = scalar_.frobenius(c, times);
    return RFElem{std::move(num), std::move(den)};
  }

  // Artin-Schreier operator x^p - x (characteristic p only)
  BaseElem wp(const BaseElem& a) const {
    long p = characteristic();
    require(p > 0, Errc::WrongCharacteristic, "wp needs positive characteristic");
    return sub(pow(a, p), a);
  }

 private:
  BaseField(Kind k, ScalarField s) : kind_(k), scalar_(std::move(s)) {}

  BaseElem wrap(ScalarElem s) const {
    if (kind_ == Kind::Scalar) return s;
    return RFElem{poly_const(scalar_, s), poly_one(scalar_)};
  }

  void check(const BaseElem& a) const {
    bool ok = (kind_ == Kind::Scalar) == std::holds_alternative<ScalarElem>(a);
    require(ok, Errc::FieldMismatch, "element does not belong to " + describe());
  }

  BaseElem canonical(SPoly num, SPoly den) const {
    require(!den.is_zero(), Errc::DivisionByZero, "zero denominator");
    if (num.is_zero()) return RFElem{poly_zero(), poly_one(scalar_)};
    SPoly g = poly_gcd(scalar_, num, den);
    if (g.degree() > 0) {
      num = poly_divmod(scalar_, num, g).first;
      den = poly_divmod(scalar_, den, g).first;
    }
    ScalarElem lead = den.c.back();
    if (!scalar_.is_one(lead)) {
      ScalarElem li = scalar_.inv(lead);
      num = poly_scale(scalar_, num, li);
      den = poly_scale(scalar_, den, li);
    }
    return RFElem{std::move(num), std::move(den)};
  }

  Kind kind_;
  ScalarField scalar_;
};

}  // namespace unigal

#endif  // UNIGAL_BASE_FIELD_HPP
