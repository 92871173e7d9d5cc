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

#include "rotorqec/rational.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rotorqec {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational arithmetic overflowed 64 bits");
    }
    return (int64_t)v;
}

Rational make(i128 n, i128 d) {
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(int64_t n) : num_(n), den_(1) {
}

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

double Rational::to_double() const {
    return (double)num_ / (double)den_;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    return Rational(-num_, den_);
}

Rational Rational::operator+(const Rational &o) const {
    return make((i128)num_ * o.den_ + (i128)o.num_ * den_, (i128)den_ * o.den_);
}

Rational Rational::operator-(const Rational &o) const {
    return make((i128)num_ * o.den_ - (i128)o.num_ * den_, (i128)den_ * o.den_);
}

Rational Rational::operator*(const Rational &o) const {
    return make((i128)num_ * o.num_, (i128)den_ * o.den_);
}

Rational Rational::operator/(const Rational &o) const {
    return make((i128)num_ * o.den_, (i128)den_ * o.num_);
}

Rational &Rational::operator+=(const Rational &o) {
    return *this = *this + o;
}
Rational &Rational::operator-=(const Rational &o) {
    return *this = *this - o;
}
Rational &Rational::operator*=(const Rational &o) {
    return *this = *this * o;
}

bool Rational::operator<(const Rational &o) const {
    return (i128)num_ * o.den_ < (i128)o.num_ * den_;
}

Rational Rational::mod(const Rational &m) const {
    if (!(Rational(0) < m)) {
        throw std::domain_error("modulus must be positive");
    }
    // this = a/b, m = c/e; work over the common denominator b*e.
    i128 a = (i128)num_ * m.den_;
    i128 c = (i128)m.num_ * den_;
    i128 r = a % c;
    if (r < 0) {
        r += c;
    }
    return make(r, (i128)den_ * m.den_);
}

Rational pow(Rational base, int exponent) {
    if (exponent < 0) {
        return pow(Rational(1) / base, -exponent);
    }
    Rational out(1);
    for (int i = 0; i < exponent; i++) {
        out *= base;
    }
    return out;
}

Rational binomial(int64_t n, int k) {
    if (k < 0) {
        return Rational(0);
    }
    Rational out(1);
    for (int i = 0; i < k; i++) {
        out = out * Rational(n - i) / Rational(i + 1);
    }
    return out;
}

std::complex<double> exp_i_pi(const Rational &r) {
    Rational t = r.mod(Rational(2));
    if (Rational(1) < t) {
        t -= Rational(2);
    }
    // t in (-1, 1]; exact quarter turns avoid sin(pi) != 0 artifacts.
    if (t.den() == 1) {
        return t.num() == 0 ? std::complex<double>(1, 0) : std::complex<double>(-1, 0);
    }
    if (t.den() == 2) {
        return std::complex<double>(0, t.num() > 0 ? 1 : -1);
    }
    return std::polar(1.0, std::numbers::pi * t.to_double());
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    trim();
}

RationalPoly RationalPoly::monomial(Rational c, int degree) {
    std::vector<Rational> v((size_t)degree + 1, Rational(0));
    v[(size_t)degree] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == Rational(0)) {
        c_.pop_back();
    }
}

int RationalPoly::degree() const {
    return (int)c_.size() - 1;
}

Rational RationalPoly::coefficient(int j) const {
    if (j < 0 || j >= (int)c_.size()) {
        return Rational(0);
    }
    return c_[(size_t)j];
}

Rational RationalPoly::operator()(const Rational &x) const {
    Rational acc(0);
    for (size_t j = c_.size(); j-- > 0;) {
        acc = acc * x + c_[j];
    }
    return acc;
}

Rational RationalPoly::eval_mod2(int64_t x) const {
    Rational acc(0);
    for (size_t j = 0; j < c_.size(); j++) {
        const Rational &c = c_[j];
        if (c == Rational(0)) {
            continue;
        }
        // (a x^j / b) mod 2 = ((a x^j) mod 2b) / b
        i128 m = (i128)2 * c.den();
        if (m > ((i128)1 << 62)) {
            throw std::overflow_error("denominator too large for modular evaluation");
        }
        i128 a = (i128)c.num() % m;
        i128 base = (i128)x % m;
        if (base < 0) {
            base += m;
        }
        i128 p = 1 % m;
        for (size_t e = 0; e < j; e++) {
            p = (p * base) % m;
        }
        i128 r = (a * p) % m;
        if (r < 0) {
            r += m;
        }
        acc = (acc + make(r, c.den())).mod(Rational(2));
    }
    return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly &o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t j = 0; j < v.size(); j++) {
        v[j] = coefficient((int)j) + o.coefficient((int)j);
    }
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly &o) const {
    return *this + o * Rational(-1);
}

RationalPoly RationalPoly::operator*(const Rational &s) const {
    std::vector<Rational> v = c_;
    for (auto &c : v) {
        c *= s;
    }
    return RationalPoly(std::move(v));
}

bool RationalPoly::operator==(const RationalPoly &o) const {
    return c_ == o.c_;
}

RationalPoly RationalPoly::shifted(const Rational &shift) const {
    // (x - s)^j = sum_i C(j, i) x^i (-s)^{j-i}
    std::vector<Rational> v(c_.size(), Rational(0));
    for (size_t j = 0; j < c_.size(); j++) {
        if (c_[j] == Rational(0)) {
            continue;
        }
        for (size_t i = 0; i <= j; i++) {
            v[i] += c_[j] * binomial((int64_t)j, (int)i) * pow(-shift, (int)(j - i));
        }
    }
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::rescaled(const Rational &a) const {
    std::vector<Rational> v = c_;
    for (size_t j = 0; j < v.size(); j++) {
        v[j] *= pow(a, (int)j);
    }
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::band(int lo, int hi) const {
    std::vector<Rational> v = c_;
    for (size_t j = 0; j < v.size(); j++) {
        if ((int)j < lo || (int)j > hi) {
            v[j] = Rational(0);
        }
    }
    return RationalPoly(std::move(v));
}

std::string RationalPoly::str(const std::string &var) const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (size_t j = c_.size(); j-- > 0;) {
        if (c_[j] == Rational(0)) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << c_[j].str() << ")";
        if (j >= 1) {
            out << "*" << var;
        }
        if (j >= 2) {
            out << "^" << j;
        }
    }
    return out.str();
}

}  // namespace rotorqec
