#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "trigsb/errors.hpp"

namespace trigsb {

/// Exact rationals, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline bool looks_like_rational(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

/// Parses `p`, `-p` or `p/q`.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d[0] == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view sv(s);
  bool ok = slash == std::string::npos ? digits_ok(sv, true)
                                       : digits_ok(sv.substr(0, slash), true) && digits_ok(sv.substr(slash + 1), false);
  if (!ok) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (slash == std::string::npos) {
    q = mpz_class(s);
  } else {
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    q = Rational(mpz_class(s.substr(0, slash)), den);
    q.canonicalize();
  }
  return q;
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace trigsb
