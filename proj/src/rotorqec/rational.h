// Copyright 2026 The rotorqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROTORQEC_RATIONAL_H
#define ROTORQEC_RATIONAL_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rotorqec {

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
///
/// Intermediate products are formed in 128 bits; a result that does not fit
/// back into 64 bits throws std::overflow_error.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(int64_t n, int64_t d);

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    double to_double() const;
    bool is_integer() const {
        return den_ == 1;
    }
    std::string str() const;

    Rational operator-() const;
    Rational operator+(const Rational &o) const;
    Rational operator-(const Rational &o) const;
    Rational operator*(const Rational &o) const;
    Rational operator/(const Rational &o) const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    bool operator==(const Rational &o) const = default;
    bool operator<(const Rational &o) const;

    /// Representative of this value modulo m in [0, m).
    Rational mod(const Rational &m) const;

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

Rational pow(Rational base, int exponent);
Rational binomial(int64_t n, int k);

/// e^{i pi r}, with r reduced modulo 2 exactly before the transcendental call.
std::complex<double> exp_i_pi(const Rational &r);

/// Polynomial sum_j c[j] x^j with exact rational coefficients.
class RationalPoly {
   public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coefficients);
    static RationalPoly monomial(Rational c, int degree);

    /// Degree of the highest non-zero coefficient (-1 for the zero polynomial).
    int degree() const;
    Rational coefficient(int j) const;
    const std::vector<Rational> &coefficients() const {
        return c_;
    }

    Rational operator()(const Rational &x) const;
    /// p(x) mod 2 for integer x, computed term by term so large powers never
    /// materialize.
    Rational eval_mod2(int64_t x) const;
    RationalPoly operator+(const RationalPoly &o) const;
    RationalPoly operator-(const RationalPoly &o) const;
    RationalPoly operator*(const Rational &s) const;
    bool operator==(const RationalPoly &o) const;

    /// q(x) = p(x - shift).
    RationalPoly shifted(const Rational &shift) const;
    /// q(x) = p(a x).
    RationalPoly rescaled(const Rational &a) const;
    /// Keeps only terms with degree in [lo, hi].
    RationalPoly band(int lo, int hi) const;
    std::string str(const std::string &var = "x") const;

   private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace rotorqec

#endif
