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

#ifndef FFGROWTH_RATIONAL_HPP_
#define FFGROWTH_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffgrowth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2/7", "0.1", "1e-2" and returns the exact value; "0.1" is
// 1/10, not the nearest double. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace ffgrowth

#endif  // FFGROWTH_RATIONAL_HPP_
