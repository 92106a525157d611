// Copyright 2026 The bu-lab Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bulab {

// Thrown for malformed inputs and violated preconditions. The CLI maps it to
// exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

// Parses "p/q" or "p". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InputError("malformed rational: '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("malformed rational: '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InputError("malformed rational: '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

// "p/q" in lowest terms, or "p" for integers.
inline std::string to_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace bulab
