#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sgcert/cert_real.hpp"
#include "sgcert/expr.hpp"
#include "sgcert/factorization.hpp"

namespace sgcert::sgbound {

using certified::CertReal;
using certified::CompareOptions;
using certified::Expr;
using certified::Verdict;

// Named scalars, stored exactly.
mpq_class bound_coefficient();  // 7.3722
mpq_class epsilon();            // 1.5315
mpq_class epsilon_without_3();  // 0.9278
mpq_class theta_even();         // 2.129
mpq_class theta_odd();          // 2.53175

/// Gaussian binomial [a, k]_p. std::domain_error if k > a,
/// std::invalid_argument if p < 2.
mpz_class gaussian_binomial(unsigned a, unsigned k, std::uint64_t p);

/// sum_{k=0}^{a} [a, k]_p: the number of subspaces of F_p^a.
mpz_class subgroup_sum(unsigned a, std::uint64_t p);

/// Coefficients (constant term first) of the closed-form S(p, a), 1 <= a <= 5.
const std::vector<long>& s_coefficients(unsigned a);
mpz_class s_polynomial(std::uint64_t p, unsigned a);

/// Upper bound on the number of subgroups of a group of order p^a.
/// Exact for a <= 5; for a >= 6 an enclosure of c(p) * p^(a^2/4).
struct SBound {
  std::uint64_t p = 0;
  unsigned a = 0;
  std::optional<mpz_class> exact;
  CertReal enclosure;

  bool is_exact() const { return exact.has_value(); }
  /// Exact value, or the upper endpoint of the enclosure.
  mpq_class upper() const { return exact ? mpq_class(*exact) : enclosure.hi_exact(); }
};

SBound S(std::uint64_t p, unsigned a, int prec = 128);
Expr s_expr(std::uint64_t p, unsigned a);

struct ConstantEnclosure {
  std::string name;
  CertReal interval;
};

/// prod_{i>=1} 1/(1 - p^-i), enclosed to width <= tol.
ConstantEnclosure C_enclosure(std::uint64_t p, const mpq_class& tol);
/// 2.129 * C(p), enclosed to width <= tol.
ConstantEnclosure c_enclosure(std::uint64_t p, const mpq_class& tol);
Expr C_expr(std::uint64_t p);
Expr c_expr(std::uint64_t p);

/// -1 + 2 sum_{k>=0} 2^(-k^2)
CertReal theta_even_sum(int prec);
/// 2 sum_{k>=0} 2^(-k(k+1))
CertReal theta_odd_sum(int prec);

struct ThetaCertificates {
  Verdict even_sum;     // theta_even_sum <= 2.129
  Verdict odd_sum;      // theta_odd_sum <= 2.53175
  Verdict odd_to_even;  // 2.53175 * 2^(-1/4) <= 2.129
  CertReal even_value;
  CertReal odd_value;
};

ThetaCertificates theta_constants(const CompareOptions& options = {});

/// coefficient * r^(log2(r)/4 + 1.5315). std::domain_error for r < 2.
Expr B_expr(std::uint64_t r, const mpq_class& coefficient = bound_coefficient());
CertReal bound_B(std::uint64_t r, int prec = 128);

/// f(r) = r^(l-1) * prod S(p_i, a_i).
struct FValue {
  std::optional<mpz_class> exact;
  CertReal enclosure;
};

FValue f_of_r(const Factorization& fact, int prec = 128);
Expr f_expr(const Factorization& fact);

/// r^floor(log2 r). std::domain_error for r < 2.
mpz_class trivial_bound(std::uint64_t r);

/// [a, floor(a/2)]_2 >= 2^(a^2/4), decided in exact integer arithmetic
/// (fourth powers when a is odd).
Verdict lower_bound_check(unsigned a);

/// [a, k]_p <= C(p) * p^(k(a-k)).
Verdict shalev_check(unsigned a, unsigned k, std::uint64_t p, const CompareOptions& options = {});

}  // namespace sgcert::sgbound
