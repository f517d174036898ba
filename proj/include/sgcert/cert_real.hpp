#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace sgcert::certified {

/// A binary floating-point number of arbitrary precision, i.e. an exact
/// dyadic rational m * 2^e. Thin RAII owner of an mpfr_t.
class Dyadic {
 public:
  explicit Dyadic(mpfr_prec_t bits = 64);
  Dyadic(const Dyadic& other);
  Dyadic(Dyadic&& other) noexcept;
  Dyadic& operator=(const Dyadic& other);
  Dyadic& operator=(Dyadic&& other) noexcept;
  ~Dyadic();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

  /// Exact value as a rational. Requires a finite number.
  mpq_class to_rational() const;

  /// Decimal rendering with `digits` significant digits, rounded in the
  /// given direction, so that the printed number is itself a valid bound.
  std::string to_decimal(int digits, mpfr_rnd_t direction) const;

  friend int compare(const Dyadic& a, const Dyadic& b) { return mpfr_cmp(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with dyadic endpoints. Every operation rounds
/// the lower endpoint down and the upper endpoint up, so the true value of
/// any computed quantity is always contained.
class CertReal {
 public:
  /// Throws std::invalid_argument if lo > hi or an endpoint is not finite.
  CertReal(Dyadic lo, Dyadic hi, int prec);

  static CertReal from_integer(const mpz_class& n, int prec);
  static CertReal from_rational(const mpq_class& q, int prec);
  static CertReal hull(const mpq_class& lo, const mpq_class& hi, int prec);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  int precision() const { return prec_; }

  mpq_class lo_exact() const { return lo_.to_rational(); }
  mpq_class hi_exact() const { return hi_.to_rational(); }
  mpq_class width() const { return hi_exact() - lo_exact(); }

  bool is_point() const { return compare(lo_, hi_) == 0; }
  bool contains(const mpq_class& q) const;
  bool contains(const CertReal& inner) const;
  bool certainly_less(const CertReal& other) const { return compare(hi_, other.lo_) < 0; }
  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }

  std::string lo_decimal(int digits = 20) const { return lo_.to_decimal(digits, MPFR_RNDD); }
  std::string hi_decimal(int digits = 20) const { return hi_.to_decimal(digits, MPFR_RNDU); }

  CertReal operator-() const;
  friend CertReal operator+(const CertReal& a, const CertReal& b);
  friend CertReal operator-(const CertReal& a, const CertReal& b);
  friend CertReal operator*(const CertReal& a, const CertReal& b);
  /// Throws std::domain_error if the divisor straddles zero.
  friend CertReal operator/(const CertReal& a, const CertReal& b);

 private:
  Dyadic lo_;
  Dyadic hi_;
  int prec_;
};

/// log2 over a strictly positive interval; std::domain_error otherwise.
CertReal log2(const CertReal& x);
CertReal exp2(const CertReal& x);
CertReal exp(const CertReal& x);
/// base^exponent = 2^(exponent * log2 base) for a strictly positive base.
CertReal pow(const CertReal& base, const CertReal& exponent);

/// Enclosure of log2(n) for n >= 1. Width is at most 2^(2 - prec), and the
/// result is a point interval when n is a power of two.
CertReal log2_enclosure(const mpz_class& n, int prec);

/// Enclosure of { 2^t : t in x } at `prec` bits. Throws std::overflow_error
/// if the result leaves the representable exponent range.
CertReal pow2_enclosure(const CertReal& x, int prec);

}  // namespace sgcert::certified
