#include "sgcert/sgbound.hpp"

#include <stdexcept>

namespace sgcert::sgbound {
namespace {

mpz_class power(std::uint64_t base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

// Number of bits needed so that 2^-bits <= tol.
int tolerance_bits(const mpq_class& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  mpz_class inv;
  mpz_cdiv_q(inv.get_mpz_t(), tol.get_den_mpz_t(), tol.get_num_mpz_t());
  return static_cast<int>(mpz_sizeinbase(inv.get_mpz_t(), 2));
}

mpq_class pow2_rational(long e) {
  mpq_class q(1);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

void require_prime(std::uint64_t p, const char* where) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) + " is not prime");
}

// C(p) with N factors and the tail majorant exp(p / ((p-1)(p^(N+1)-1))).
CertReal euler_product(std::uint64_t p, unsigned terms, int prec) {
  CertReal partial = CertReal::from_integer(1, prec);
  for (unsigned i = 1; i <= terms; ++i) {
    const mpz_class pi = power(p, i);
    partial = partial * CertReal::from_rational(mpq_class(pi, pi - 1), prec);
  }
  mpq_class tail(mpz_class(p), (mpz_class(p) - 1) * (power(p, terms + 1) - 1));
  tail.canonicalize();
  return partial * certified::exp(CertReal::hull(0, tail, prec));
}

}  // namespace

namespace {
mpq_class ratio(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}
}  // namespace

mpq_class bound_coefficient() { return ratio(73722, 10000); }
mpq_class epsilon() { return ratio(15315, 10000); }
mpq_class epsilon_without_3() { return ratio(9278, 10000); }
mpq_class theta_even() { return ratio(2129, 1000); }
mpq_class theta_odd() { return ratio(253175, 100000); }

mpz_class gaussian_binomial(unsigned a, unsigned k, std::uint64_t p) {
  if (k > a) throw std::domain_error("gaussian_binomial: k exceeds a");
  if (p < 2) throw std::invalid_argument("gaussian_binomial: p must be at least 2");
  k = std::min(k, a - k);
  mpz_class num(1), den(1);
  for (unsigned i = 0; i < k; ++i) {
    num *= power(p, a - i) - 1;
    den *= power(p, i + 1) - 1;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

mpz_class subgroup_sum(unsigned a, std::uint64_t p) {
  mpz_class total(0);
  for (unsigned k = 0; k <= a; ++k) total += gaussian_binomial(a, k, p);
  return total;
}

const std::vector<long>& s_coefficients(unsigned a) {
  static const std::vector<std::vector<long>> table = {
      {2},
      {3, 1},
      {4, 2, 2},
      {5, 3, 4, 3, 1},
      {6, 4, 6, 6, 6, 2, 2},
  };
  if (a < 1 || a > 5) throw std::domain_error("s_coefficients: closed form exists only for 1 <= a <= 5");
  return table[a - 1];
}

mpz_class s_polynomial(std::uint64_t p, unsigned a) {
  const auto& coeffs = s_coefficients(a);
  mpz_class acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * p + *it;
  return acc;
}

SBound S(std::uint64_t p, unsigned a, int prec) {
  if (a == 0) throw std::domain_error("S: exponent must be positive");
  require_prime(p, "S");
  if (a <= 5) {
    const mpz_class v = s_polynomial(p, a);
    return SBound{p, a, v, CertReal::from_integer(v, prec)};
  }
  return SBound{p, a, std::nullopt, s_expr(p, a).evaluate(prec)};
}

Expr s_expr(std::uint64_t p, unsigned a) {
  if (a == 0) throw std::domain_error("S: exponent must be positive");
  if (a <= 5) return Expr::integer(s_polynomial(p, a));
  return c_expr(p) * Expr::pow(Expr::integer(p), Expr::rational(static_cast<long>(a) * a, 4));
}

ConstantEnclosure C_enclosure(std::uint64_t p, const mpq_class& tol) {
  require_prime(p, "C_enclosure");
  int bits = tolerance_bits(tol);
  const unsigned log_p = static_cast<unsigned>(mpz_sizeinbase(mpz_class(p).get_mpz_t(), 2)) - 1;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const unsigned terms = static_cast<unsigned>(bits + 6) / log_p + 1;
    CertReal value = euler_product(p, terms, bits + 16);
    if (value.width() <= tol) return {"C(" + std::to_string(p) + ")", std::move(value)};
    bits += 16;
  }
  throw std::runtime_error("C_enclosure: tolerance not reached");
}

ConstantEnclosure c_enclosure(std::uint64_t p, const mpq_class& tol) {
  // 2.129 < 4, so a quarter of the tolerance on C(p) suffices.
  const ConstantEnclosure big_c = C_enclosure(p, tol / 4);
  const int prec = big_c.interval.precision();
  return {"c(" + std::to_string(p) + ")", CertReal::from_rational(theta_even(), prec) * big_c.interval};
}

Expr C_expr(std::uint64_t p) {
  require_prime(p, "C_expr");
  return Expr::enclosed("C(" + std::to_string(p) + ")",
                        [p](int prec) { return C_enclosure(p, pow2_rational(-prec)).interval; });
}

Expr c_expr(std::uint64_t p) { return Expr::rational(theta_even()) * C_expr(p); }

CertReal theta_even_sum(int prec) {
  long k_max = 0;
  while ((k_max + 1) * (k_max + 1) < prec + 4) ++k_max;
  mpq_class partial(0);
  for (long k = 0; k <= k_max; ++k) partial += pow2_rational(-k * k);
  // sum_{k>K} 2^(-k^2) <= sum_{j>=(K+1)^2} 2^-j = 2^(1-(K+1)^2)
  const mpq_class tail = pow2_rational(1 - (k_max + 1) * (k_max + 1));
  return CertReal::hull(2 * partial - 1, 2 * (partial + tail) - 1, prec);
}

CertReal theta_odd_sum(int prec) {
  long k_max = 0;
  while ((k_max + 1) * (k_max + 2) < prec + 4) ++k_max;
  mpq_class partial(0);
  for (long k = 0; k <= k_max; ++k) partial += pow2_rational(-k * (k + 1));
  const mpq_class tail = pow2_rational(1 - (k_max + 1) * (k_max + 2));
  return CertReal::hull(2 * partial, 2 * (partial + tail), prec);
}

ThetaCertificates theta_constants(const CompareOptions& options) {
  const Expr even = Expr::enclosed("theta_even", theta_even_sum);
  const Expr odd = Expr::enclosed("theta_odd", theta_odd_sum);
  Verdict even_v = certified::certify_le(even, Expr::rational(theta_even()), options);
  Verdict odd_v = certified::certify_le(odd, Expr::rational(theta_odd()), options);
  Verdict link = certified::certify_le(Expr::rational(theta_odd()) * Expr::pow2(Expr::rational(-1, 4)),
                                       Expr::rational(theta_even()), options);
  return ThetaCertificates{std::move(even_v), std::move(odd_v), std::move(link), theta_even_sum(128),
                           theta_odd_sum(128)};
}

Expr B_expr(std::uint64_t r, const mpq_class& coefficient) {
  if (r < 2) throw std::domain_error("bound_B: r must be at least 2");
  const Expr log_r = Expr::log2(mpz_class(r));
  return Expr::rational(coefficient) *
         Expr::pow(Expr::integer(mpz_class(r)), log_r / Expr::integer(4) + Expr::rational(epsilon()));
}

CertReal bound_B(std::uint64_t r, int prec) { return B_expr(r).evaluate(prec); }

FValue f_of_r(const Factorization& fact, int prec) {
  const std::uint64_t r = fact.value();
  if (r < 2) throw std::domain_error("f_of_r: r must be at least 2");
  bool exact = true;
  for (const auto& pp : fact.pairs()) exact = exact && pp.exponent <= 5;
  if (exact) {
    mpz_class value = power(r, fact.length() - 1);
    for (const auto& pp : fact.pairs()) value *= s_polynomial(pp.prime, pp.exponent);
    return FValue{value, CertReal::from_integer(value, prec)};
  }
  return FValue{std::nullopt, f_expr(fact).evaluate(prec)};
}

Expr f_expr(const Factorization& fact) {
  const std::uint64_t r = fact.value();
  if (r < 2) throw std::domain_error("f_of_r: r must be at least 2");
  Expr value = Expr::integer(power(r, fact.length() - 1));
  for (const auto& pp : fact.pairs()) value = value * s_expr(pp.prime, pp.exponent);
  return value;
}

mpz_class trivial_bound(std::uint64_t r) {
  if (r < 2) throw std::domain_error("trivial_bound: r must be at least 2");
  const auto floor_log2 = mpz_sizeinbase(mpz_class(r).get_mpz_t(), 2) - 1;
  return power(r, floor_log2);
}

Verdict lower_bound_check(unsigned a) {
  const mpz_class g = gaussian_binomial(a, a / 2, 2);
  const unsigned long sq = static_cast<unsigned long>(a) * a;
  Verdict v;
  v.prec_used = 0;
  mpz_class lhs, rhs;
  if (sq % 4 == 0) {
    lhs = g;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, sq / 4);
    v.note = "[" + std::to_string(a) + "," + std::to_string(a / 2) + "]_2 = " + g.get_str() + " vs 2^" +
             std::to_string(sq / 4);
  } else {
    mpz_pow_ui(lhs.get_mpz_t(), g.get_mpz_t(), 4);
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, sq);
    v.note = "[" + std::to_string(a) + "," + std::to_string(a / 2) + "]_2 = " + g.get_str() +
             "; compared as fourth power against 2^" + std::to_string(sq);
  }
  v.outcome = lhs >= rhs ? certified::Outcome::Verified : certified::Outcome::Refuted;
  v.lhs = CertReal::from_integer(lhs, 64);
  v.rhs = CertReal::from_integer(rhs, 64);
  return v;
}

Verdict shalev_check(unsigned a, unsigned k, std::uint64_t p, const CompareOptions& options) {
  const mpz_class lhs = gaussian_binomial(a, k, p);
  const Expr rhs = C_expr(p) * Expr::integer(power(p, static_cast<unsigned long>(k) * (a - k)));
  return certified::certify_le(Expr::integer(lhs), rhs, options);
}

}  // namespace sgcert::sgbound
