#include "gspin/scalar.hpp"

#include <cmath>
#include <sstream>

namespace gspin {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ScalarError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ScalarError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational frac(long num, long den) {
  if (den == 0) throw ScalarError("zero denominator");
  mpz_class n(num), d(den);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::pair<long, long> split_square(long n) {
  if (n <= 0) throw ScalarError("split_square needs a positive integer");
  long s = 1, d = n;
  for (long p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      s *= p;
    }
  }
  return {s, d};
}

Scalar::Scalar(Rational a, Rational b, Rational c, Rational e, long d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e)), d_(d) {
  if (d_ <= 0) throw ScalarError("radicand must be positive");
  canonicalize();
}

void Scalar::canonicalize() {
  if (d_ == 1) {
    a_ += c_;
    b_ += e_;
    c_ = 0;
    e_ = 0;
  } else if (c_ == 0 && e_ == 0) {
    d_ = 1;
  }
}

long Scalar::join(const Scalar& x, const Scalar& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1) return x.d_;
  throw ScalarError("scalar radicand mismatch: sqrt(" + std::to_string(x.d_) +
                    ") vs sqrt(" + std::to_string(y.d_) + ")");
}

Scalar Scalar::i() {
  Scalar s;
  s.b_ = 1;
  return s;
}

Scalar Scalar::sqrt_of(long n) {
  auto [s, d] = split_square(n);
  Scalar r;
  r.d_ = d;
  if (d == 1) {
    r.a_ = s;
  } else {
    r.c_ = s;
  }
  return r;
}

bool Scalar::is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && e_ == 0; }
bool Scalar::is_rational() const { return b_ == 0 && c_ == 0 && e_ == 0; }
bool Scalar::is_real() const { return b_ == 0 && e_ == 0; }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  r.c_ = -r.c_;
  r.e_ = -r.e_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(*this);
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  long d = join(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  e_ += o.e_;
  d_ = d;
  canonicalize();
  return *this;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  long d = join(*this, o);
  Scalar r;
  r.d_ = d;
  // Fast path: both pure rational (the common case in structure constants).
  if (is_rational() && o.is_rational()) {
    r.a_ = a_ * o.a_;
    r.d_ = 1;
    return r;
  }
  const Rational& x0 = a_;
  const Rational& x1 = b_;
  const Rational& x2 = c_;
  const Rational& x3 = e_;
  const Rational& y0 = o.a_;
  const Rational& y1 = o.b_;
  const Rational& y2 = o.c_;
  const Rational& y3 = o.e_;
  r.a_ = x0 * y0 - x1 * y1 + d * (x2 * y2 - x3 * y3);
  r.b_ = x0 * y1 + x1 * y0 + d * (x2 * y3 + x3 * y2);
  r.c_ = x0 * y2 + x2 * y0 - x1 * y3 - x3 * y1;
  r.e_ = x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1;
  r.canonicalize();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && e_ == o.e_ &&
         (d_ == o.d_ || (c_ == 0 && e_ == 0));
}

Scalar Scalar::conj() const {
  Scalar r(*this);
  r.b_ = -r.b_;
  r.e_ = -r.e_;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ScalarError("divide-by-zero: inv(0)");
  // x * conj(x) = p + q*sqrt(d) with p,q rational;
  // (p + q*sqrt(d))(p - q*sqrt(d)) = p^2 - d q^2, nonzero since d squarefree.
  Scalar xc = conj();
  Scalar n = *this * xc;  // p + q sqrt(d), real
  Rational p = n.a_, q = n.c_;
  Rational denom = p * p - d_ * q * q;
  if (denom == 0) throw ScalarError("divide-by-zero: norm vanished");
  Scalar rad_conj(p, Rational(0), -q, Rational(0), d_);
  Scalar num = xc * rad_conj;
  return num * Scalar(Rational(1) / denom);
}

std::complex<double> Scalar::to_complex() const {
  double rt = std::sqrt(static_cast<double>(d_));
  return {a_.get_d() + c_.get_d() * rt, b_.get_d() + e_.get_d() * rt};
}

namespace {

void append_term(std::string& out, const Rational& coeff, const std::string& symbol) {
  if (coeff == 0) return;
  Rational c = coeff;
  if (!out.empty()) {
    if (c < 0) {
      out += "-";
      c = -c;
    } else {
      out += "+";
    }
  } else if (c < 0) {
    out += "-";
    c = -c;
  }
  if (symbol.empty()) {
    out += c.get_str();
  } else {
    if (c != 1) out += c.get_str();
    out += symbol;
  }
}

}  // namespace

std::string Scalar::to_string() const {
  std::string out;
  std::string rad = "\xE2\x88\x9A" + std::to_string(d_);  // "√d"
  append_term(out, a_, "");
  append_term(out, b_, "i");
  append_term(out, c_, rad);
  append_term(out, e_, "i" + rad);
  if (out.empty()) out = "0";
  return out;
}

Scalar Scalar::from_string(const std::string& s) {
  // Inverse of to_string: signed terms  rat | rat? i | rat? √d | rat? i√d.
  size_t pos = 0;
  auto peek = [&]() -> char { return pos < s.size() ? s[pos] : '\0'; };
  Rational a = 0, b = 0, c = 0, e = 0;
  long d = 1;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (peek() == '+') {
      ++pos;
    } else if (peek() == '-') {
      sign = -1;
      ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    Rational mag = 1;
    bool have_digits = pos > start;
    if (have_digits) mag = rational_from_string(s.substr(start, pos - start));
    bool has_i = false;
    if (peek() == 'i') {
      has_i = true;
      ++pos;
    }
    bool has_rad = false;
    if (pos + 2 < s.size() + 1 && s.compare(pos, 3, "\xE2\x88\x9A") == 0) {
      has_rad = true;
      pos += 3;
      size_t ds = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == ds) throw ScalarError("missing radicand in scalar literal: " + s);
      long dd = std::stol(s.substr(ds, pos - ds));
      if (d != 1 && dd != d) throw ScalarError("mixed radicands in scalar literal: " + s);
      d = dd;
    }
    if (!have_digits && !has_i && !has_rad)
      throw ScalarError("bad scalar literal: " + s);
    mag *= sign;
    if (has_i && has_rad)
      e += mag;
    else if (has_i)
      b += mag;
    else if (has_rad)
      c += mag;
    else
      a += mag;
    any = true;
  }
  if (!any) throw ScalarError("empty scalar literal");
  return Scalar(a, b, c, e, d);
}

}  // namespace gspin
