#include "orthogeo/rational.hpp"

#include <cmath>
#include <cstdio>

#include "orthogeo/error.hpp"

namespace orthogeo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// n = s^2 * k with k squarefree (up to prime factors above the trial bound
// whose square divides n, which only happens for very large n).
void split_square(const mpz_class& n, mpz_class& s, mpz_class& k) {
  s = 1;
  k = n;
  if (k <= 1) return;
  for (unsigned long p = 2; p <= 100000; p += (p == 2 ? 1 : 2)) {
    mpz_class pp = p * p;
    if (pp > k) break;
    while (mpz_divisible_p(k.get_mpz_t(), pp.get_mpz_t())) {
      k /= pp;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(k.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), k.get_mpz_t());
    s *= r;
    k = 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  bool neg = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail("ParseError", "bad rational '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) fail("ParseError", "zero denominator in '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      fail("ParseError", "bad decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class whole(ip.empty() ? std::string("0") : std::string(ip));
    mpz_class frac(fp.empty() ? std::string("0") : std::string(fp));
    out = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(body)) fail("ParseError", "bad rational '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(body)));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---- Num ----

Num Num::real(double d) {
  Num n;
  n.exact_ = false;
  n.d_ = d;
  n.q_ = 0;
  return n;
}

Num Num::sqrt(const Num& x) {
  if (x.exact_)
    if (auto r = exact_sqrt(x.q_)) return Num(*r);
  return real(std::sqrt(x.d_ < 0 ? 0.0 : x.d_));
}

Num operator+(const Num& a, const Num& b) {
  if (a.exact_ && b.exact_) return Num(Rational(a.q_ + b.q_));
  return Num::real(a.d_ + b.d_);
}
Num operator-(const Num& a, const Num& b) {
  if (a.exact_ && b.exact_) return Num(Rational(a.q_ - b.q_));
  return Num::real(a.d_ - b.d_);
}
Num operator*(const Num& a, const Num& b) {
  if (a.exact_ && b.exact_) return Num(Rational(a.q_ * b.q_));
  if ((a.exact_ && a.q_ == 0) || (b.exact_ && b.q_ == 0)) return Num(0);
  return Num::real(a.d_ * b.d_);
}
Num operator/(const Num& a, const Num& b) {
  if (a.exact_ && b.exact_) return Num(Rational(a.q_ / b.q_));
  if (a.exact_ && a.q_ == 0) return Num(0);
  return Num::real(a.d_ / b.d_);
}
bool operator==(const Num& a, const Num& b) {
  if (a.exact_ && b.exact_) return a.q_ == b.q_;
  return a.d_ == b.d_;
}
bool operator<(const Num& a, const Num& b) {
  if (a.exact_ && b.exact_) return a.q_ < b.q_;
  return a.d_ < b.d_;
}

std::string Num::str() const { return exact_ ? to_string(q_) : format_double(d_); }

// ---- SqrtSum ----

SqrtSum::SqrtSum(const Rational& r) {
  if (r != 0) terms_.emplace(mpz_class(1), r);
}

SqrtSum SqrtSum::sqrt_of(const Rational& r) {
  if (sgn(r) < 0) fail("DomainError", "square root of a negative rational");
  SqrtSum out;
  if (r == 0) return out;
  // sqrt(n/d) = sqrt(n*d)/d
  mpz_class nd = r.get_num() * r.get_den(), s, k;
  split_square(nd, s, k);
  Rational c(s, r.get_den());
  c.canonicalize();
  out.terms_.emplace(k, c);
  return out;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot -= c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

SqrtSum& SqrtSum::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= r;
  return *this;
}

int SqrtSum::sign() const {
  if (terms_.empty()) return 0;
  bool pos = false, neg = false;
  for (const auto& [k, c] : terms_) (sgn(c) > 0 ? pos : neg) = true;
  if (!neg) return 1;
  if (!pos) return -1;
  // Nonzero by linear independence of square roots of distinct squarefree
  // radicands; refine precision until the sign is certain.
  for (mp_bitcnt_t prec = 128; prec <= (1u << 16); prec *= 2) {
    mpf_class sum(0, prec), mag(0, prec);
    for (const auto& [k, c] : terms_) {
      mpf_class root(k, prec);
      root = ::sqrt(root);
      mpf_class term(c, prec);
      term *= root;
      sum += term;
      mag += abs(term);
    }
    mpf_class tol(mag, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 8);
    if (abs(sum) > tol) return sgn(sum);
  }
  fail("Precision", "could not resolve sign of " + str());
}

double SqrtSum::to_double() const {
  mpf_class sum(0, 256);
  for (const auto& [k, c] : terms_) {
    mpf_class root(k, 256);
    root = ::sqrt(root);
    sum += mpf_class(c, 256) * root;
  }
  return sum.get_d();
}

std::optional<Rational> SqrtSum::rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

std::string SqrtSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (k != 1) out += "*sqrt(" + k.get_str() + ")";
  }
  return out;
}

int compare(const SqrtSum& a, const SqrtSum& b) { return (a - b).sign(); }

}  // namespace orthogeo
