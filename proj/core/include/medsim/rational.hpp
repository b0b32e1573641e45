// Copyright 2026 The medsim Authors
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

#ifndef MEDSIM_RATIONAL_HPP
#define MEDSIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "medsim/errors.hpp"

namespace medsim {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always held in canonical reduced form:
// denominator > 0, gcd(|num|, den) = 1, zero is 0/1. Arbitrary-precision,
// so products of many probabilities never overflow.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw MalformedLP("rational with zero denominator");
    v_ = Q(num, den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // Parses "p", "-p" or "p/q". Throws SyntaxError on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  double to_double() const { return v_.convert_to<double>(); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw MalformedLP("rational division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

 private:
  using Q = boost::multiprecision::cpp_rational;
  explicit Rational(Q v) : v_(std::move(v)) {}
  Q v_;
};

// lcm of denominators of a range of rationals.
template <typename Iter>
BigInt common_denominator(Iter begin, Iter end) {
  BigInt l = 1;
  for (Iter it = begin; it != end; ++it)
    l = boost::multiprecision::lcm(l, it->denominator());
  return l;
}

}  // namespace medsim

#endif  // MEDSIM_RATIONAL_HPP
