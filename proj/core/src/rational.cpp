// Copyright 2026 The tsplift Authors
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

#include "tsplift/rational.hpp"

#include <cctype>

#include "tsplift/errors.hpp"

namespace tsplift {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw InputError("not a rational: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw InputError("not a rational: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
  Integer num = r.get_num();
  const Integer& den = r.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  Integer ip = num / den;
  Integer rem = num % den;
  std::string out = sign + ip.get_str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    Integer digit = rem / den;
    rem %= den;
    out += static_cast<char>('0' + digit.get_si());
  }
  return out;
}

Rational rational_sum(const std::vector<Rational>& values) {
  Rational acc(0);
  for (const auto& v : values) acc += v;
  return acc;
}

}  // namespace tsplift
