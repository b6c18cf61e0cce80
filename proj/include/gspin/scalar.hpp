#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gspin {

using Rational = mpq_class;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

// Canonicalized num/den rational (mpq_class(p, q) alone does not reduce).
Rational frac(long num, long den);

// Largest square factor split: n = s^2 * d with d squarefree.
// Returns {s, d}.  squarefree_part(12) = {2, 3}, squarefree_part(4) = {2, 1}.
std::pair<long, long> split_square(long n);

// Element of Q(i, sqrt(d)):  a + b*i + c*sqrt(d) + e*i*sqrt(d),
// with a,b,c,e exact rationals and d a fixed squarefree radicand.
// Values with no radical component are canonicalized to d = 1, so scalars
// from contexts with different |G| mix freely as long as at most one
// radicand is actually in play.
class Scalar {
 public:
  Scalar() : d_(1) {}
  Scalar(long v) : a_(v), d_(1) {}
  Scalar(const Rational& a) : a_(a), d_(1) {}
  Scalar(Rational a, Rational b, Rational c, Rational e, long d);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i();
  // sqrt(n) for a positive integer n, as s*sqrt(d) with d squarefree.
  static Scalar sqrt_of(long n);

  const Rational& re_rat() const { return a_; }
  const Rational& im_rat() const { return b_; }
  const Rational& re_rad() const { return c_; }
  const Rational& im_rad() const { return e_; }
  long radicand() const { return d_; }

  bool is_zero() const;
  bool is_rational() const;  // b = c = e = 0
  bool is_real() const;      // b = e = 0

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar conj() const;
  Scalar inv() const;  // throws ScalarError on zero

  std::complex<double> to_complex() const;

  // Canonical display form "a+bi+c√d+ei√d" with rationals "p/q";
  // zero terms are omitted, zero prints as "0".
  std::string to_string() const;
  static Scalar from_string(const std::string& s);

 private:
  void canonicalize();
  // Resulting radicand for a binary op, or throws on a genuine mismatch.
  static long join(const Scalar& x, const Scalar& y);

  Rational a_, b_, c_, e_;
  long d_;
};

inline Scalar operator*(long v, const Scalar& s) { return Scalar(v) * s; }

}  // namespace gspin
