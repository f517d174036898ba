#include "sgcert/cert_real.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace sgcert::certified {
namespace {

constexpr int kGuardBits = 8;

mpfr_prec_t working_bits(int prec) { return static_cast<mpfr_prec_t>(prec + kGuardBits); }

void require_finite(const Dyadic& d, const char* what) {
  if (mpfr_inf_p(d.get())) throw std::overflow_error(std::string(what) + ": exponent range exceeded");
  if (mpfr_nan_p(d.get())) throw std::domain_error(std::string(what) + ": undefined result");
}

std::size_t bit_length(const mpz_class& n) { return n == 0 ? 1 : mpz_sizeinbase(n.get_mpz_t(), 2); }

bool is_power_of_two(const mpz_class& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

}  // namespace

Dyadic::Dyadic(mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

Dyadic::Dyadic(const Dyadic& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Dyadic::Dyadic(Dyadic&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Dyadic& Dyadic::operator=(const Dyadic& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Dyadic& Dyadic::operator=(Dyadic&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Dyadic::~Dyadic() { mpfr_clear(value_); }

mpq_class Dyadic::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("Dyadic::to_rational: not a finite number");
  if (mpfr_zero_p(value_)) return 0;
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  mpq_class q(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

std::string Dyadic::to_decimal(int digits, mpfr_rnd_t direction) const {
  if (mpfr_zero_p(value_)) return "0";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(value_)) return "nan";

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, direction);
  std::string body(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!body.empty() && body.front() == '-') {
    sign = "-";
    body.erase(0, 1);
  }
  // value = 0.<body> * 10^exp10
  std::string out;
  const auto n = static_cast<long>(body.size());
  if (exp10 > 0 && exp10 <= 30) {
    if (exp10 >= n) {
      out = body + std::string(static_cast<size_t>(exp10 - n), '0');
    } else {
      out = body.substr(0, static_cast<size_t>(exp10)) + "." + body.substr(static_cast<size_t>(exp10));
    }
  } else if (exp10 <= 0 && exp10 > -6) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + body;
  } else {
    out = body.substr(0, 1) + "." + body.substr(1) + "e" + std::to_string(exp10 - 1);
    return sign + out;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

CertReal::CertReal(Dyadic lo, Dyadic hi, int prec) : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
  require_finite(lo_, "CertReal");
  require_finite(hi_, "CertReal");
  if (compare(lo_, hi_) > 0) throw std::invalid_argument("CertReal: lower endpoint exceeds upper endpoint");
}

CertReal CertReal::from_integer(const mpz_class& n, int prec) {
  const auto bits = std::max<mpfr_prec_t>(working_bits(prec), static_cast<mpfr_prec_t>(bit_length(n)));
  Dyadic v(bits);
  mpfr_set_z(v.get(), n.get_mpz_t(), MPFR_RNDN);  // exact: enough bits
  return CertReal(v, v, prec);
}

CertReal CertReal::from_rational(const mpq_class& q, int prec) {
  if (q.get_den() == 1) return from_integer(q.get_num(), prec);
  return hull(q, q, prec);
}

CertReal CertReal::hull(const mpq_class& lo, const mpq_class& hi, int prec) {
  const auto bits = working_bits(prec);
  Dyadic l(bits), h(bits);
  mpfr_set_q(l.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h.get(), hi.get_mpq_t(), MPFR_RNDU);
  return CertReal(std::move(l), std::move(h), prec);
}

bool CertReal::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool CertReal::contains(const CertReal& inner) const {
  return compare(lo_, inner.lo_) <= 0 && compare(inner.hi_, hi_) <= 0;
}

CertReal CertReal::operator-() const {
  Dyadic l(hi_.bits()), h(lo_.bits());
  mpfr_neg(l.get(), hi_.get(), MPFR_RNDN);
  mpfr_neg(h.get(), lo_.get(), MPFR_RNDN);
  return CertReal(std::move(l), std::move(h), prec_);
}

CertReal operator+(const CertReal& a, const CertReal& b) {
  const int prec = std::max(a.prec_, b.prec_);
  Dyadic l(working_bits(prec)), h(working_bits(prec));
  mpfr_add(l.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(h.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return CertReal(std::move(l), std::move(h), prec);
}

CertReal operator-(const CertReal& a, const CertReal& b) {
  const int prec = std::max(a.prec_, b.prec_);
  Dyadic l(working_bits(prec)), h(working_bits(prec));
  mpfr_sub(l.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(h.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return CertReal(std::move(l), std::move(h), prec);
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Extremes of a monotone-in-each-argument operation over the four corners.
CertReal corners(const CertReal& a, const CertReal& b, BinaryOp op) {
  const int prec = std::max(a.precision(), b.precision());
  const auto bits = working_bits(prec);
  const std::array<const Dyadic*, 2> xs{&a.lo(), &a.hi()};
  const std::array<const Dyadic*, 2> ys{&b.lo(), &b.hi()};
  Dyadic lo(bits), hi(bits), t(bits);
  bool first = true;
  for (const Dyadic* x : xs) {
    for (const Dyadic* y : ys) {
      op(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || compare(t, lo) < 0) lo = t;
      op(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || compare(t, hi) > 0) hi = t;
      first = false;
    }
  }
  return CertReal(std::move(lo), std::move(hi), prec);
}

}  // namespace

CertReal operator*(const CertReal& a, const CertReal& b) { return corners(a, b, mpfr_mul); }

CertReal operator/(const CertReal& a, const CertReal& b) {
  if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0) {
    throw std::domain_error("CertReal: division by an interval containing zero");
  }
  return corners(a, b, mpfr_div);
}

CertReal log2(const CertReal& x) {
  if (!x.certainly_positive()) throw std::domain_error("log2: argument not certainly positive");
  const auto bits = working_bits(x.precision()) + 32;
  Dyadic l(bits), h(bits);
  mpfr_log2(l.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log2(h.get(), x.hi().get(), MPFR_RNDU);
  return CertReal(std::move(l), std::move(h), x.precision());
}

CertReal exp2(const CertReal& x) { return pow2_enclosure(x, x.precision()); }

CertReal exp(const CertReal& x) {
  const auto bits = working_bits(x.precision());
  Dyadic l(bits), h(bits);
  mpfr_exp(l.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(h.get(), x.hi().get(), MPFR_RNDU);
  require_finite(h, "exp");
  return CertReal(std::move(l), std::move(h), x.precision());
}

CertReal pow(const CertReal& base, const CertReal& exponent) { return exp2(exponent * log2(base)); }

CertReal log2_enclosure(const mpz_class& n, int prec) {
  if (n < 1) throw std::domain_error("log2_enclosure: argument must be >= 1");
  if (is_power_of_two(n)) return CertReal::from_integer(mpz_class(bit_length(n) - 1), prec);

  // log2 n < 2^e, so e extra bits keep the absolute width under 2^(2 - prec).
  const auto e = static_cast<mpfr_prec_t>(bit_length(mpz_class(bit_length(n))));
  const mpfr_prec_t bits = prec + e + 1;
  Dyadic n_lo(bits), n_hi(bits), l(bits), h(bits);
  mpfr_set_z(n_lo.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(n_hi.get(), n.get_mpz_t(), MPFR_RNDU);
  mpfr_log2(l.get(), n_lo.get(), MPFR_RNDD);
  mpfr_log2(h.get(), n_hi.get(), MPFR_RNDU);
  return CertReal(std::move(l), std::move(h), prec);
}

CertReal pow2_enclosure(const CertReal& x, int prec) {
  const auto bits = working_bits(prec);
  Dyadic l(bits), h(bits);
  mpfr_exp2(l.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp2(h.get(), x.hi().get(), MPFR_RNDU);
  require_finite(h, "pow2_enclosure");
  return CertReal(std::move(l), std::move(h), prec);
}

}  // namespace sgcert::certified
