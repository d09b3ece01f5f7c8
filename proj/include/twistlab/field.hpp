#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace twistlab {

class Gf2 {
public:
  static constexpr std::string_view name = "f2";

  constexpr Gf2() = default;
  constexpr explicit Gf2(bool bit) : bit_(bit) {}

  static constexpr Gf2 zero() { return Gf2(false); }
  static constexpr Gf2 one() { return Gf2(true); }
  static constexpr Gf2 from_int(long v) { return Gf2((v & 1) != 0); }
  static Gf2 parse(std::string_view text);

  constexpr bool is_zero() const { return !bit_; }
  Gf2 inverse() const;
  std::string to_string() const { return bit_ ? "1" : "0"; }

  friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.bit_ != b.bit_); }
  friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return Gf2(a.bit_ != b.bit_); }
  friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.bit_ && b.bit_); }
  constexpr Gf2 operator-() const { return *this; }
  Gf2& operator+=(Gf2 b) { return *this = *this + b; }
  Gf2& operator-=(Gf2 b) { return *this = *this - b; }
  Gf2& operator*=(Gf2 b) { return *this = *this * b; }
  friend constexpr bool operator==(Gf2 a, Gf2 b) { return a.bit_ == b.bit_; }

private:
  bool bit_ = false;
};

class Rational {
public:
  static constexpr std::string_view name = "q";

  Rational() = default;
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(mpq_class(1)); }
  static Rational from_int(long v) { return Rational(mpq_class(v)); }
  // Accepts "p" or "p/q" with integer p, q.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  Rational inverse() const;
  std::string to_string() const { return v_.get_str(); }
  const mpq_class& value() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

private:
  mpq_class v_;
};

template <class F>
concept Field = std::regular<F> && requires(const F a, const F b, long n, std::string_view s) {
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { F::from_int(n) } -> std::same_as<F>;
  { F::parse(s) } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
};

enum class FieldKind { f2, q };

FieldKind parse_field_kind(std::string_view text);

}  // namespace twistlab
