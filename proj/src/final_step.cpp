#include <algorithm>
#include <stdexcept>

#include "sgcert/factorization.hpp"
#include "sgcert/lemmas.hpp"
#include "sgcert/sgbound.hpp"

namespace sgcert::lemmas {
namespace {

using certified::Outcome;
using json = nlohmann::json;

constexpr std::uint64_t kScanLimit = 256;

Expr integer(long n) { return Expr::integer(n); }
Expr log2_of(std::uint64_t n) { return Expr::log2(mpz_class(n)); }
Expr eps() { return Expr::rational(sgbound::epsilon()); }
Expr eps_without_3() { return Expr::rational(sgbound::epsilon_without_3()); }

json named(const std::string& claim, const Verdict& v) {
  json j = verdict_json(v);
  j["claim"] = claim;
  return j;
}

Certificate fresh(const std::string& id) {
  Certificate c;
  c.claim_id = id;
  c.outcome = Outcome::Verified;
  return c;
}

void record(Certificate& cert, json& list, const std::string& claim, const Verdict& v) {
  absorb(cert, v);
  list.push_back(named(claim, v));
}

// Marks the certificate Refuted when a verdict that should fail does not.
void record_expected_failure(Certificate& cert, json& list, const std::string& claim, const Verdict& v) {
  if (v.outcome != Outcome::Refuted) cert.outcome = worst(cert.outcome, v.outcome == Outcome::Undetermined
                                                                                       ? Outcome::Undetermined
                                                                                       : Outcome::Refuted);
  cert.prec_used = std::max(cert.prec_used, v.prec_used);
  json j = named(claim, v);
  j["expected"] = "Refuted";
  list.push_back(std::move(j));
}

// Smallest r in [from, kScanLimit] after which the check holds on the whole
// scanned range, or nullopt.
template <typename Check>
std::optional<std::uint64_t> discover_threshold(std::uint64_t from, Check check, json& failures) {
  std::optional<std::uint64_t> start;
  for (std::uint64_t r = from; r <= kScanLimit; ++r) {
    if (check(r).verified()) {
      if (!start) start = r;
    } else {
      start.reset();
      failures.push_back(r);
    }
  }
  return start;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(n)) {
    if (p != 2) out.push_back(p);
  }
  return out;
}

Certificate eps_certificate(const std::string& id, const std::set<std::uint64_t>& exclude,
                            const std::vector<std::uint64_t>& expected_subset, const mpq_class& lower,
                            const Expr& constant, const CompareOptions& options) {
  Certificate cert = fresh(id);
  const std::vector<std::uint64_t> pool = odd_primes_up_to(97);
  const EpsMaximum best = maximize_eps(pool, exclude, options);
  json checks = json::array();
  // A sign is informative either way; only an undecided sign weakens the claim.
  for (const auto& [p, v] : best.term_signs) {
    cert.prec_used = std::max(cert.prec_used, v.prec_used);
    if (v.outcome == Outcome::Undetermined) cert.outcome = worst(cert.outcome, Outcome::Undetermined);
  }
  // The term decreases in p, so a negative term at 17 settles every larger prime.
  record(cert, checks, "1 - log2(17)/4 < 0",
         certified::certify_lt(integer(1) - log2_of(17) / integer(4), integer(0), options));
  record(cert, checks, "maximum <= stated constant", certified::certify_le(best.value, constant, options));
  record(cert, checks, "maximum > lower witness", certified::certify_lt(Expr::rational(lower), best.value, options));
  const bool subset_ok = best.subset == expected_subset;
  if (!subset_ok) cert.outcome = Outcome::Refuted;
  cert.detail = {{"pool_max", 97},
                 {"excluded", exclude},
                 {"subset", best.subset},
                 {"expected_subset", expected_subset},
                 {"value", interval_json(best.enclosure)},
                 {"checks", checks}};
  return cert;
}

Certificate threshold16_certificate(const CompareOptions& options) {
  Certificate cert = fresh("final.threshold16");
  json checks = json::array();
  record(cert, checks, "r = 16", check_small_order_step(16, options));
  record_expected_failure(cert, checks, "r = 15", check_small_order_step(15, options));
  // In log form the inequality reads log2(3) <= (log2(3)/4) log2(r).
  record(cert, checks, "log form: 4 log2(3)/4 <= log2(3)",
         certified::certify_le(integer(4) * log2_of(3) / integer(4), log2_of(3), options));
  json failures = json::array();
  const auto start = discover_threshold(2, [&](std::uint64_t r) { return check_small_order_step(r, options); }, failures);
  if (start != std::optional<std::uint64_t>(16)) cert.outcome = Outcome::Refuted;
  cert.detail = {{"checks", checks},
                 {"discovered_threshold", start ? json(*start) : json(nullptr)},
                 {"scan", {{"from", 2}, {"to", kScanLimit}, {"failures", failures}}}};
  return cert;
}

Certificate threshold68_certificate(const CompareOptions& options) {
  Certificate cert = fresh("final.threshold68");
  json checks = json::array();
  record(cert, checks, "r = 68", check_sylow3_cube(68, options));
  record_expected_failure(cert, checks, "r = 67", check_sylow3_cube(67, options));
  // Log form: log2 S(3,3) <= kappa log2(r) with kappa constant, so a positive
  // kappa carries the inequality from 68 to every larger r.
  const Expr kappa = eps() - eps_without_3() + integer(3) * log2_of(3) / integer(4) - integer(1);
  record(cert, checks, "kappa > 0", certified::certify_lt(integer(0), kappa, options));
  json failures = json::array();
  const auto start = discover_threshold(2, [&](std::uint64_t r) { return check_sylow3_cube(r, options); }, failures);
  if (start != std::optional<std::uint64_t>(68)) cert.outcome = Outcome::Refuted;
  cert.detail = {{"checks", checks},
                 {"kappa", interval_json(kappa.evaluate(128))},
                 {"discovered_threshold", start ? json(*start) : json(nullptr)},
                 {"scan", {{"from", 2}, {"to", kScanLimit}, {"failure_count", failures.size()}}}};
  return cert;
}

Certificate per_prime_certificate(const CompareOptions& options) {
  Certificate cert = fresh("final.per_prime");
  json checks = json::array();
  for (std::uint64_t p : {5, 7, 11, 13, 17}) {
    const std::string ps = std::to_string(p);
    record(cert, checks, "log2(" + ps + ") > 2", certified::certify_lt(integer(2), log2_of(p), options));
    const Expr power = Expr::pow(integer(static_cast<long>(p)), eps() - log2_of(p) / integer(4));
    record(cert, checks, ps + "^(eps - log2(" + ps + ")/4) > 2", certified::certify_lt(integer(2), power, options));
  }
  cert.detail = {{"checks", checks}};
  return cert;
}

// Lower bound for log2(right) - log2(left) of the complement step with
// x = log2 r, using log2(1 + r/3) <= 1 + log2(r/3) for r >= 3:
// E(x) = (x^2 - (x - L3)^2)/4 + eps x - 0.9278 (x - L3) - 1 - (x - L3).
Expr complement_lower_bound(std::uint64_t r) {
  const Expr x = log2_of(r);
  const Expr y = x - log2_of(3);
  return (x * x - y * y) / integer(4) + eps() * x - eps_without_3() * y - integer(1) - y;
}

Certificate complement_certificate(const CompareOptions& options) {
  Certificate cert = fresh("final.complement_step");
  json checks = json::array();
  // E is linear in x with slope L3/2 + eps - 0.9278 - 1.
  const Expr slope = log2_of(3) / integer(2) + eps() - eps_without_3() - integer(1);
  record(cert, checks, "slope of lower bound > 0", certified::certify_lt(integer(0), slope, options));

  std::optional<std::uint64_t> r0;
  for (std::uint64_t r = 6; r <= kScanLimit; ++r) {
    const Verdict v = certified::certify_le(integer(0), complement_lower_bound(r), options);
    if (v.verified()) {
      record(cert, checks, "lower bound >= 0 at r = " + std::to_string(r), v);
      r0 = r;
      break;
    }
  }
  json explicit_checks = json::array();
  if (!r0) {
    cert.outcome = worst(cert.outcome, Outcome::Undetermined);
  } else {
    for (std::uint64_t r = 6; r < *r0; ++r) record(cert, explicit_checks, "r = " + std::to_string(r), check_complement_step(r, options));
  }
  // Direct witnesses on a few orders, independent of the log-form argument.
  json witnesses = json::array();
  for (std::uint64_t r : {6, 12, 48, 243, 3000}) record(cert, witnesses, "r = " + std::to_string(r), check_complement_step(r, options));

  cert.detail = {{"R0", r0 ? json(*r0) : json(nullptr)},
                 {"slope", interval_json(slope.evaluate(128))},
                 {"checks", checks},
                 {"explicit_below_R0", explicit_checks},
                 {"witnesses", witnesses}};
  return cert;
}

}  // namespace

EpsMaximum maximize_eps(const std::vector<std::uint64_t>& pool, const std::set<std::uint64_t>& exclude,
                        const CompareOptions& options) {
  if (pool.empty()) throw std::invalid_argument("maximize_eps: pool must be nonempty");
  std::vector<std::uint64_t> sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  EpsMaximum out{{}, integer(0), CertReal::from_integer(0, 64), {}};
  for (std::uint64_t p : sorted) {
    if (exclude.count(p)) continue;
    const Expr term = integer(1) - log2_of(p) / integer(4);
    Verdict v = certified::certify_lt(integer(0), term, options);
    if (v.verified()) {
      out.subset.push_back(p);
      out.value = out.value + term;
    }
    out.term_signs.emplace_back(p, std::move(v));
  }
  out.enclosure = out.value.evaluate(std::max(options.start_prec, 128));
  return out;
}

Verdict check_small_order_step(std::uint64_t r, const CompareOptions& options) {
  if (r < 2) throw std::domain_error("check_small_order_step: r must be at least 2");
  const Expr base = integer(static_cast<long>(r));
  const Expr l3 = log2_of(3);
  const Expr lhs = integer(3) * Expr::pow(base, integer(1) - integer(2) * l3 / integer(4));
  const Expr rhs = Expr::pow(base, integer(1) - l3 / integer(4));
  return certified::certify_le(lhs, rhs, options);
}

Verdict check_sylow3_cube(std::uint64_t r, const CompareOptions& options) {
  if (r < 2) throw std::domain_error("check_sylow3_cube: r must be at least 2");
  const Expr base = integer(static_cast<long>(r));
  const Expr lhs = integer(static_cast<long>(r)) * Expr::integer(sgbound::s_polynomial(3, 3));
  const Expr rhs = Expr::pow(base, eps() - eps_without_3()) *
                   Expr::pow(integer(3), integer(3) * log2_of(r) / integer(4));
  return certified::certify_le(lhs, rhs, options);
}

Verdict check_complement_step(std::uint64_t r, const CompareOptions& options) {
  if (r < 3) throw std::domain_error("check_complement_step: r must be at least 3");
  const Expr coefficient = Expr::rational(sgbound::bound_coefficient());
  const Expr third = Expr::rational(static_cast<long>(r), 3);
  const Expr lhs = coefficient * Expr::pow(third, Expr::log2(third) / integer(4) + eps_without_3()) *
                   (integer(1) + third);
  const Expr rhs = coefficient * Expr::pow(integer(static_cast<long>(r)), log2_of(r) / integer(4) + eps());
  return certified::certify_le(lhs, rhs, options);
}

std::vector<Certificate> final_step_checks(const CompareOptions& options) {
  std::vector<Certificate> out;
  auto timed = [&](auto&& make) {
    Stopwatch clock;
    Certificate c = make();
    c.elapsed_ms = clock.elapsed_ms();
    out.push_back(std::move(c));
  };
  timed([&] {
    return eps_certificate("final.eps_max", {}, {3, 5, 7, 11, 13}, mpq_class(15314, 10000), eps(), options);
  });
  timed([&] {
    return eps_certificate("final.eps_without_3", {3}, {5, 7, 11, 13}, mpq_class(9277, 10000), eps_without_3(),
                           options);
  });
  timed([&] { return threshold16_certificate(options); });
  timed([&] { return threshold68_certificate(options); });
  timed([&] { return per_prime_certificate(options); });
  timed([&] { return complement_certificate(options); });
  return out;
}

}  // namespace sgcert::lemmas
