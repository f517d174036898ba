#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sgcert/cert_real.hpp"
#include "sgcert/certificate.hpp"
#include "sgcert/expr.hpp"

namespace sgcert::lemmas {

using certified::CertReal;
using certified::CompareOptions;
using certified::Expr;
using certified::Verdict;

enum class ExceptionStatus { FiniteSet, WholesaleException, NoException };

std::string to_string(ExceptionStatus status);

/// Cofactors m (gcd(m, p) = 1, m <= cap) for which r = m p^a violates
/// r S(p,a) <= p^(a log2(r) / 4).
struct ExceptionReport {
  std::uint64_t p = 0;
  unsigned a = 0;
  std::uint64_t cap = 0;
  ExceptionStatus status = ExceptionStatus::NoException;
  std::optional<std::uint64_t> max_m;
  std::vector<std::uint64_t> members;
  /// Cofactors whose membership could not be decided within the precision cap.
  std::vector<std::uint64_t> undetermined;
  std::optional<CertReal> threshold;
  int prec_used = 0;
};

struct Threshold {
  /// a log2(p) <= 4: the inequality fails for every r.
  bool wholesale = false;
  /// Certified comparison of 4 against a log2(p).
  Verdict exponent_check;
  /// r* = 2^(log2 S / (a log2(p)/4 - 1)); the inequality holds iff r >= r*.
  std::optional<CertReal> r_star;
};

Threshold exception_threshold(std::uint64_t p, unsigned a, const CompareOptions& options = {});

/// Claim "m p^a is an exception": Verified when r S(p,a) > p^(a log2 r / 4)
/// is certified, Refuted when the reverse (non-strict) inequality holds.
Verdict is_exception(std::uint64_t p, unsigned a, std::uint64_t m, const CompareOptions& options = {});

ExceptionReport exception_set(std::uint64_t p, unsigned a, std::uint64_t cap, const CompareOptions& options = {});

/// Exceptions as listed by one lemma.
struct LemmaDefinition {
  int index = 0;
  /// Fixed exponent; 0 denotes the family a >= 6.
  unsigned a = 0;
  /// Prime -> largest exceptional cofactor.
  std::map<std::uint64_t, std::uint64_t> finite;
  /// Primes excluded outright.
  std::vector<std::uint64_t> blanket;
  /// For the a >= 6 family: the exceptional orders r.
  std::vector<std::uint64_t> exceptional_orders;
};

const std::vector<LemmaDefinition>& lemma_table();

/// A case excluded outright by a lemma: prime p with exponents in
/// [a_min, a_max] (a_max = 0 means unbounded).
struct BlanketCase {
  std::uint64_t p = 0;
  unsigned a_min = 1;
  unsigned a_max = 0;
};

struct LemmaAnalysis {
  Certificate certificate;
  std::vector<ExceptionReport> finite_reports;
  std::vector<BlanketCase> blanket_cases;
};

/// Reproduce lemma `index` (0..6). Lemma 0 certifies S(p,a) <= 7.3722 *
/// p^(a log2(p^a) / 4); lemmas 1-6 recompute the exception sets, compare them
/// with the stated ones and certify that every larger prime (and, for
/// lemma 6, every larger exponent) has none.
LemmaAnalysis analyze_lemma(int index, const CompareOptions& options = {});
Certificate verify_lemma(int index, const CompareOptions& options = {});

struct EpsMaximum {
  std::vector<std::uint64_t> subset;
  Expr value;
  CertReal enclosure;
  /// Sign certificate for each candidate term 1 - log2(p)/4.
  std::vector<std::pair<std::uint64_t, Verdict>> term_signs;
};

/// Maximum of sum_{p in J} (1 - log2(p)/4) over subsets J of the pool: take
/// exactly the primes whose term is certified positive.
EpsMaximum maximize_eps(const std::vector<std::uint64_t>& pool, const std::set<std::uint64_t>& exclude = {},
                        const CompareOptions& options = {});

/// 3 r^(1 - 2 log2(3)/4) <= r^(1 - log2(3)/4)
Verdict check_small_order_step(std::uint64_t r, const CompareOptions& options = {});
/// r S(3,3) <= r^(1.5315 - 0.9278) 3^(3 log2(r)/4)
Verdict check_sylow3_cube(std::uint64_t r, const CompareOptions& options = {});
/// 7.3722 (r/3)^(log2(r/3)/4 + 0.9278) (1 + r/3) <= 7.3722 r^(log2(r)/4 + 1.5315)
Verdict check_complement_step(std::uint64_t r, const CompareOptions& options = {});

/// The scalar facts used to close the induction: maximum of the epsilon sum
/// with and without 3, the r >= 16 and r >= 68 thresholds, the per-prime
/// inequalities for p in {5, 7, 11, 13, 17}, and the complement step with
/// its discovered starting order.
std::vector<Certificate> final_step_checks(const CompareOptions& options = {});

}  // namespace sgcert::lemmas
