#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstddef>
#include <string>

namespace faddeeva {

/// Scientific notation with 16 significant digits, uppercase E and no
/// padding in the exponent: 9.616493742724747E-1, 1.000000000000000E0.
/// Zero renders as 0E0.
///
/// The value is first rendered with 17 significant digits and that decimal
/// is then rounded half-up to 16. This matches the published tables, which
/// differ from a single correctly rounded conversion whenever the 17th digit
/// is a 5.
inline std::string format_sci(double v) {
  if (v == 0) return "0E0";
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16E", std::fabs(v));
  const std::string s(buf);
  const auto e = s.find('E');
  int exponent = std::atoi(s.c_str() + e + 1);

  std::string digits;  // 17 digits
  for (std::size_t i = 0; i < e; ++i) {
    if (s[i] != '.') digits.push_back(s[i]);
  }
  const bool round_up = digits.back() >= '5';
  digits.pop_back();
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0 && digits[i] == '9') digits[i--] = '0';
    if (i >= 0) {
      ++digits[i];
    } else {
      digits.insert(digits.begin(), '1');
      digits.pop_back();
      ++exponent;
    }
  }
  std::string out = v < 0 ? "-" : "";
  out += digits[0];
  out += '.';
  out += digits.substr(1);
  out += 'E';
  out += std::to_string(exponent);
  return out;
}

/// "a + bi" / "a - bi" with both parts in format_sci.
inline std::string format_complex(std::complex<double> z) {
  const double im = z.imag();
  if (std::signbit(im) && im != 0) {
    return format_sci(z.real()) + " - " + format_sci(-im) + "i";
  }
  return format_sci(z.real()) + " + " + format_sci(im) + "i";
}

}  // namespace faddeeva
