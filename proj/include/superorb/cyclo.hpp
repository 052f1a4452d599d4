#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "superorb/rational.hpp"

namespace superorb {

// Element of a cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N), with exact
// rational coordinates on the power basis {zeta^0, ..., zeta^{phi(N)-1}}.
//
// Canonical form (maintained by every operation): coefficients reduced modulo
// the N-th cyclotomic polynomial, zero coefficients dropped, and N minimal for
// the element (in particular N is never congruent to 2 mod 4, and a rational
// number always has N = 1). Equality and the total order compare canonical
// forms, so == is exact field equality.
class Cyclo {
 public:
  Cyclo() = default;  // zero
  explicit Cyclo(const Rational& r);
  explicit Cyclo(long long v);

  // zeta_n^k
  static Cyclo zeta(long long n, long long k = 1);
  // exp(2*pi*i*r) for rational r
  static Cyclo root_of_unity(const Rational& r);
  // sum of coeff * zeta_n^exponent over the map entries, canonicalized
  static Cyclo from_basis(long long n, const std::map<long long, Rational>& coeffs);

  long long level() const { return n_; }
  const std::map<long long, Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  // engaged iff the element lies in Q
  std::optional<Rational> rational_value() const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  // throws std::domain_error on division by zero
  Cyclo operator/(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  bool operator==(const Cyclo& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  // total order on canonical forms, for use as a container key
  bool operator<(const Cyclo& o) const;

  // field automorphism zeta_N -> zeta_N^j; requires gcd(j, N) = 1
  Cyclo galois(long long j) const;
  // complex conjugation
  Cyclo conj() const;

  std::complex<double> embed() const;

  // "3/2 (N=1)", "z + z^7 (N=8)", "1/2 - 1/2*z^3 (N=12)", ...
  std::string str() const;
  // Accepts the str() format; the "(N=...)" suffix may be omitted for plain
  // rationals. Throws std::invalid_argument on malformed input.
  static Cyclo parse(const std::string& s);

  enum class Recog { ok, no_candidate, ambiguous };
  struct RecogResult;

  // Exact recognition of a numerical value as an element of Q(zeta_n) with at
  // most two nonzero power-basis coefficients (covers every rational, every
  // rational multiple of a root of unity, and combinations r*zeta^a + s*zeta^b
  // such as sqrt(2) = zeta_8 + zeta_8^7). Coefficients are reconstructed by
  // continued fractions with denominators <= den_bound and every candidate is
  // re-verified against tol; distinct exact survivors yield Recog::ambiguous.
  // Keep tol well below 1/(2*den_bound^2), or nearby pure rationals can pass
  // the verification alongside the true value.
  static RecogResult recognize(std::complex<double> z, long long n, double tol,
                               long long den_bound = 4096);

 private:
  void canonicalize();

  long long n_ = 1;
  std::map<long long, Rational> c_;  // exponent -> coefficient
};

struct Cyclo::RecogResult {
  Recog status = Recog::no_candidate;
  Cyclo value;  // meaningful only when status == ok
};

inline Cyclo operator*(const Rational& r, const Cyclo& x) { return Cyclo(r) * x; }

}  // namespace superorb
