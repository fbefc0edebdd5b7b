#include "qplane/expr.hpp"

#include <cctype>

namespace qplane {
namespace {

NCPoly constant_poly(const Scalar& s) {
  NCPoly p;
  if (!s.is_zero()) p[{}] = s;
  return p;
}

void add_into(NCPoly& acc, const NCPoly& b, const Scalar& sign) {
  for (const auto& [w, c] : b) {
    auto [it, inserted] = acc.emplace(w, c * sign);
    if (!inserted) {
      it->second += c * sign;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

NCPoly multiply(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_into(r, NCPoly{{w, ca * cb}}, Scalar(1));
    }
  return r;
}

bool is_scalar(const NCPoly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.empty()); }

Scalar scalar_value(const NCPoly& p) { return p.empty() ? Scalar(0) : p.begin()->second; }

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

  NCPoly parse() {
    NCPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  NCPoly expr() {
    NCPoly acc = term();
    for (;;) {
      if (accept('+')) add_into(acc, term(), Scalar(1));
      else if (accept('-')) add_into(acc, term(), Scalar(-1));
      else return acc;
    }
  }

  NCPoly term() {
    NCPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, unary());
      } else if (accept('/')) {
        const NCPoly d = unary();
        if (!is_scalar(d)) fail("division by a non-scalar expression");
        const Scalar s = scalar_value(d);
        if (s.is_zero()) fail("division by zero");
        acc = multiply(acc, constant_poly(s.inverse()));
      } else {
        skip_space();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
          fail("implicit multiplication is not supported; use '*'");
        return acc;
      }
    }
  }

  NCPoly unary() {
    if (accept('-')) return multiply(constant_poly(Scalar(-1)), unary());
    if (accept('+')) return unary();
    return power();
  }

  NCPoly power() {
    NCPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      NCPoly r = constant_poly(Scalar(1));
      for (int i = 0; i < e; ++i) r = multiply(r, base);
      return r;
    }
    return base;
  }

  NCPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      NCPoly p = expr();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return constant_poly(Scalar(parse_rational(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < ctx_.variables.size(); ++i)
        if (ctx_.variables[i] == name) return NCPoly{{Word{static_cast<int>(i)}, Scalar(1)}};
      if (auto it = ctx_.constants.find(name); it != ctx_.constants.end()) return constant_poly(it->second);
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_nc_polynomial(std::string_view text, const ParseContext& ctx) { return Parser(text, ctx).parse(); }

Scalar parse_scalar(std::string_view text, const ParseContext& ctx) {
  const NCPoly p = parse_nc_polynomial(text, ctx);
  if (!is_scalar(p)) throw InputError("expected a scalar expression: \"" + std::string(text) + "\"");
  return scalar_value(p);
}

TernaryForm parse_form(std::string_view text, const ParseContext& ctx) {
  ParseContext c = ctx;
  if (c.variables.empty()) c.variables = {"x", "y", "z"};
  if (c.variables.size() != 3) throw InvariantViolation("forms need exactly three variables");
  const NCPoly p = parse_nc_polynomial(text, c);
  if (p.empty()) return TernaryForm(0);
  const int degree = static_cast<int>(p.begin()->first.size());
  TernaryForm f(degree);
  for (const auto& [w, s] : p) {
    if (static_cast<int>(w.size()) != degree) throw InputError("form is not homogeneous: \"" + std::string(text) + "\"");
    Exponent e{0, 0, 0};
    for (int v : w) ++e[v];
    f.add_term(e, s);
  }
  return f;
}

UPolyQ parse_upoly(std::string_view text, const std::string& var) {
  ParseContext ctx;
  ctx.variables = {var};
  const NCPoly p = parse_nc_polynomial(text, ctx);
  std::vector<Rational> coeffs;
  for (const auto& [w, s] : p) {
    if (!s.is_rational()) throw InputError("polynomial coefficients must be rational");
    if (coeffs.size() <= w.size()) coeffs.resize(w.size() + 1);
    coeffs[w.size()] += s.rational_value();
  }
  return UPolyQ(std::move(coeffs));
}

DeclaredField declare_field(const std::string& generator, const std::string& min_poly) {
  if (generator.empty()) throw InputError("field generator name is empty");
  if (generator == "x" || generator == "y" || generator == "z")
    throw InputError("field generator may not be named x, y or z");
  const UPolyQ m = parse_upoly(min_poly, generator);
  DeclaredField out;
  out.generator = generator;
  out.field = NumberField::create(generator, m);
  if (out.field) out.generator_value = Scalar::generator(out.field);
  else out.generator_value = Scalar(Rational(-m.coeff(0) / m.coeff(1)));
  return out;
}

ParseContext xyz_context(const DeclaredField* field) {
  ParseContext ctx;
  ctx.variables = {"x", "y", "z"};
  if (field) ctx.constants[field->generator] = field->generator_value;
  return ctx;
}

}  // namespace qplane
