#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z = exp(2*pi*i/l), l odd.
//
// Internally a scalar is carried as a length-l vector of rationals, i.e. an
// element of Q[z]/(z^l - 1), so that multiplication by a power of z is an
// index rotation (by far the hottest operation in the tensor calculus built
// on top).  Reduction modulo the l-th cyclotomic polynomial happens lazily:
// zero tests, equality, inversion and serialization all work with the
// canonical representative of degree < deg(Phi_l).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qtw/common.hpp"

namespace qtw {

/// Coefficients of the l-th cyclotomic polynomial (monic, integer).
/// Index k holds the coefficient of x^k; size is deg(Phi_l) + 1.
const std::vector<long>& cyclotomic_poly(unsigned l);

/// Euler phi of l = degree of Phi_l.
unsigned cyclotomic_degree(unsigned l);

class Cyc {
 public:
  Cyc() = default;  // "not a scalar"; l() == 0

  static Cyc zero(unsigned l);
  static Cyc one(unsigned l);
  static Cyc from_long(unsigned l, long v);
  static Cyc from_mpq(unsigned l, const mpq_class& v);
  /// z^a with a taken mod l (negative a allowed).
  static Cyc q_pow(unsigned l, long long a);
  /// v * z^a.
  static Cyc q_pow_scaled(unsigned l, long long a, const mpq_class& v);

  unsigned l() const { return l_; }
  bool valid() const { return l_ != 0; }

  /// Exact zero test (reduces modulo Phi_l).
  bool is_zero() const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator*=(const Cyc& o);
  Cyc operator-() const;

  /// In-place multiplication by z^a (index rotation; no rational arithmetic).
  Cyc& mul_q_pow(long long a);
  /// In-place multiplication by a rational.
  Cyc& mul_mpq(const mpq_class& v);
  Cyc& negate();

  /// Multiplicative inverse; throws Error on zero.
  Cyc inv() const;

  /// Canonical coefficient vector of length deg(Phi_l) (reduced mod Phi_l).
  std::vector<mpq_class> reduced() const;
  /// Replaces the representative by the canonical one (degree < deg Phi_l).
  void normalize();

  /// Human-readable form, canonical, e.g. "1 - 2/3*z^2".
  std::string str() const;

  /// Raw internal representative (length l, power basis of z). Mainly for
  /// hashing/serialization layers that normalize first.
  const std::vector<mpq_class>& raw() const { return c_; }

 private:
  explicit Cyc(unsigned l) : l_(l), c_(l) {}
  void reduce_mod_phi(std::vector<mpq_class>& v) const;

  unsigned l_ = 0;
  std::vector<mpq_class> c_;
};

/// a * (l+1)/2 mod l: the exponent implementing q^(a/2), using that l is odd.
long long half_exponent(unsigned l, long long a);

/// Gaussian integer [n] at q = z^base: (q^n - q^-n)/(q - q^-1).
Cyc q_int(unsigned l, long n, long base = 1);

/// [n]! at q = z^base; throws Error when n >= l (the factorial vanishes and
/// every use in this library divides by it).
Cyc q_factorial(unsigned l, unsigned n, long base = 1);

/// Gaussian binomial [n over k] at q = z^base.
Cyc q_binom(unsigned l, unsigned n, unsigned k, long base = 1);

/// Exact string form "p/q" (or "p") of a rational.
std::string mpq_str(const mpq_class& v);

}  // namespace qtw
