#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace orthogeo {

using Rational = mpq_class;

// Accepts "p/q", integers and plain decimals ("0.35").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// sqrt(q) when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

// Twelve significant digits, shortest form.
std::string format_double(double v);

// A real number that stays rational as long as every operand and square
// root it came from was rational; otherwise it degrades to a double.
class Num {
 public:
  Num() : q_(0), exact_(true), d_(0.0) {}
  Num(const Rational& q) : q_(q), exact_(true), d_(q.get_d()) {}  // NOLINT
  Num(int v) : Num(Rational(v)) {}                                  // NOLINT

  static Num real(double d);
  static Num sqrt(const Num& x);

  bool exact() const { return exact_; }
  const Rational& rational() const { return q_; }
  double value() const { return d_; }

  friend Num operator+(const Num& a, const Num& b);
  friend Num operator-(const Num& a, const Num& b);
  friend Num operator*(const Num& a, const Num& b);
  friend Num operator/(const Num& a, const Num& b);
  friend bool operator==(const Num& a, const Num& b);
  friend bool operator<(const Num& a, const Num& b);

  std::string str() const;

 private:
  Rational q_;
  bool exact_;
  double d_;
};

// Exact element of Q(sqrt 2, sqrt 3, ...): sum of c * sqrt(k) over squarefree k.
// Equality is decided symbolically; ordering by adaptive-precision evaluation.
class SqrtSum {
 public:
  SqrtSum() = default;
  SqrtSum(const Rational& r);  // NOLINT
  static SqrtSum sqrt_of(const Rational& r);

  SqrtSum& operator+=(const SqrtSum& o);
  SqrtSum& operator-=(const SqrtSum& o);
  SqrtSum& operator*=(const Rational& r);
  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
  friend SqrtSum operator*(SqrtSum a, const Rational& r) { return a *= r; }
  friend bool operator==(const SqrtSum& a, const SqrtSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SqrtSum& a, const SqrtSum& b) { return !(a == b); }

  int sign() const;
  bool is_zero() const { return terms_.empty(); }
  double to_double() const;
  std::optional<Rational> rational() const;
  std::string str() const;

 private:
  std::map<mpz_class, Rational> terms_;  // squarefree radicand -> coefficient
};

int compare(const SqrtSum& a, const SqrtSum& b);

}  // namespace orthogeo
