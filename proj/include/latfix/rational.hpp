// Copyright 2026 The latfix Authors
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

#ifndef LATFIX_RATIONAL_HPP
#define LATFIX_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "latfix/error.hpp"

namespace latfix {

/// Exact rational number in lowest terms with a positive denominator.
/// Canonical text is "p/q", or "p" when q = 1.
class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::kParseError, "zero denominator");
    v_ = den < 0 ? Rep(-Int(num), -Int(den)) : Rep(Int(num), Int(den));
  }

  /// Accepts "p", "-p", "p/q" with decimal integers and q != 0.
  static Rational parse(std::string_view text) {
    auto bad = [&](const std::string& why) {
      return Error(Errc::kParseError, "bad rational '" + std::string(text) + "': " + why);
    };
    const auto slash = text.find('/');
    auto integer = [&](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw bad("missing digits");
      for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw bad("unexpected character");
      }
      Int v(std::string(s.substr(i)));
      return (s[0] == '-') ? Int(-v) : v;
    };
    Rational r;
    if (slash == std::string_view::npos) {
      r.v_ = Rep(integer(text, true));
      return r;
    }
    Int num = integer(text.substr(0, slash), true);
    Int den = integer(text.substr(slash + 1), false);
    if (den == 0) throw bad("zero denominator");
    r.v_ = Rep(num, den);
    return r;
  }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  std::string str() const {
    const Int d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

  Rational operator-() const { return Rational(Rep(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    return Rational(Rep(a.v_ / b.v_));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

}  // namespace latfix

#endif  // LATFIX_RATIONAL_HPP
