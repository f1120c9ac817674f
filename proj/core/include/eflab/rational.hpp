// Copyright 2026 The eflab Authors.
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

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eflab {

// Exact rational number with a positive denominator, always reduced.
// Used for graph densities and for the exponent alpha in p = n^-alpha,
// where floating point is not acceptable.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p", "p/q" or a plain decimal like "1.4" (converted exactly).
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      if (frac.empty()) throw std::invalid_argument("rational parse: trailing dot");
      for (const char ch : frac) {
        if (ch < '0' || ch > '9') {
          throw std::invalid_argument("rational parse: bad decimal '" + text + "'");
        }
      }
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) {
        if (den > 1000000000000000000LL / 10) {
          throw std::invalid_argument("rational parse: too many decimal digits");
        }
        den *= 10;
      }
      const std::int64_t whole = parse_int(text.substr(0, dot));
      const std::int64_t part = parse_int(frac);
      const bool negative = !text.empty() && text[0] == '-';
      const std::int64_t mag = (whole < 0 ? -whole : whole) * den + part;
      return Rational(negative ? -mag : mag, den);
    }
    return Rational(parse_int(text));
  }

 private:
  static std::int64_t parse_int(const std::string& text) {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("rational parse: bad integer '" + text + "'");
    }
    if (pos != text.size()) {
      throw std::invalid_argument("rational parse: bad integer '" + text + "'");
    }
    return value;
  }
};

}  // namespace eflab
