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

#include "medsim/rational.hpp"

#include <cctype>
#include <ostream>

namespace medsim {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw SyntaxError("not a rational literal: '" + std::string(text) + "'");
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw SyntaxError("not a rational literal: '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(std::string(num)), d);
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace medsim
