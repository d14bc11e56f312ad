// Copyright 2026 The Cyclobound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLOBOUND_RATIONAL_H_
#define CYCLOBOUND_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cyclobound {

// Exact rational with 64-bit numerator and positive 64-bit denominator, kept
// in lowest terms. Arithmetic is carried out in 128 bits and throws
// std::overflow_error if a reduced result does not fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // "num/den", always with the slash.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-wide(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using Wide = __int128;

  static Wide wide(std::int64_t v) { return v; }

  static Wide gcd_wide(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Wide g = gcd_wide(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
    if (num > kMax || num < -kMax || den > kMax) {
      throw std::overflow_error("rational result exceeds 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// C(n, 2) for any integer n; zero for n < 2.
inline std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace cyclobound

#endif  // CYCLOBOUND_RATIONAL_H_
