#include "qplane/rational.hpp"

#include <cctype>
#include <string>

#include "qplane/errors.hpp"
#include "qplane/poly.hpp"

namespace qplane {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty rational literal");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  auto digits_only = [](const std::string& d) {
    if (d.empty()) return false;
    for (char ch : d)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw InputError("malformed rational literal: " + std::string(text));
    Integer d(den, 10);
    if (sgn(d) == 0) throw InputError("zero denominator in literal: " + std::string(text));
    value = Rational(Integer(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || !digits_only(frac)) throw InputError("malformed decimal literal: " + std::string(text));
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Rational(Integer(whole + frac, 10), den);
  } else {
    if (!digits_only(body)) throw InputError("malformed rational literal: " + std::string(text));
    value = Rational(Integer(body, 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const UPolyQ& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace qplane
