#include "twistlab/field.hpp"

#include <cctype>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Gf2 Gf2::parse(std::string_view text) {
  Rational q = Rational::parse(text);
  const mpq_class& v = q.value();
  if (v.get_den() % 2 == 0) {
    throw ValidationError("scalar '" + std::string(text) + "' has even denominator");
  }
  return Gf2(v.get_num() % 2 != 0);
}

Gf2 Gf2::inverse() const {
  if (!bit_) throw InvariantBreach("inverse of zero");
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ValidationError("bad scalar '" + std::string(text) + "'");
  }
  auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  mpz_class n(strip(num)), d(strip(den));
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  mpq_class v(n, d);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvariantBreach("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

FieldKind parse_field_kind(std::string_view text) {
  if (text == "f2" || text == "F2" || text == "gf2") return FieldKind::f2;
  if (text == "q" || text == "Q") return FieldKind::q;
  throw ValidationError("unknown field '" + std::string(text) + "' (expected f2 or q)");
}

}  // namespace twistlab
