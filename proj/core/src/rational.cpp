// Copyright 2026 The ffgrowth Authors.
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

#include "ffgrowth/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ffgrowth {
namespace {

BigInt parse_digits(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("expected digits");
  BigInt v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad digit in number");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt den = parse_digits(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    value = Rational(parse_digits(s.substr(0, slash)), den);
  } else {
    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      exponent = parse_digits(exp).convert_to<int>();
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
      exponent -= static_cast<int>(s.size() - dot - 1);
    } else {
      digits = std::string(s);
    }
    const BigInt mantissa = parse_digits(digits);
    const BigInt scale = ipow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace ffgrowth
