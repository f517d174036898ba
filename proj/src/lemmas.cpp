#include "sgcert/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgcert/factorization.hpp"
#include "sgcert/sgbound.hpp"

namespace sgcert::lemmas {
namespace {

using certified::Outcome;
using json = nlohmann::json;

constexpr std::uint64_t kPrimeSearchLimit = 1000;
constexpr unsigned kExponentSearchLimit = 64;
constexpr std::uint64_t kMaxCap = 10'000'000;

mpz_class power(std::uint64_t p, unsigned a) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, a);
  return out;
}

Expr integer(const mpz_class& n) { return Expr::integer(n); }
Expr integer(long n) { return Expr::integer(n); }

// r S(p,a)
Expr order_times_s(std::uint64_t p, unsigned a, const mpz_class& r) {
  if (a <= 5) return integer(r * sgbound::s_polynomial(p, a));
  return integer(r) * sgbound::s_expr(p, a);
}

// p^(a log2(r) / 4)
Expr power_side(std::uint64_t p, unsigned a, const mpz_class& r) {
  return Expr::pow(integer(mpz_class(p)), integer(a) * Expr::log2(r) / integer(4));
}

Certificate fresh(const std::string& id) {
  Certificate c;
  c.claim_id = id;
  c.outcome = Outcome::Verified;
  return c;
}

json named_verdict(const std::string& claim, const Verdict& v) {
  json j = verdict_json(v);
  j["claim"] = claim;
  return j;
}

// Adds a verdict to the certificate and to a detail list.
void record(Certificate& cert, json& list, const std::string& claim, const Verdict& v) {
  absorb(cert, v);
  list.push_back(named_verdict(claim, v));
}

json report_json(const ExceptionReport& r) {
  json j = {{"p", r.p}, {"a", r.a}, {"cap", r.cap}, {"status", to_string(r.status)},
            {"member_count", r.members.size()}, {"prec_used", r.prec_used}};
  j["max_m"] = r.max_m ? json(*r.max_m) : json(nullptr);
  if (r.threshold) j["threshold"] = interval_json(*r.threshold);
  if (!r.undetermined.empty()) j["undetermined"] = r.undetermined;
  if (r.members.size() <= 16) j["members"] = r.members;
  return j;
}

// Exception set with the scan range taken from the certified threshold.
ExceptionReport bounded_exception_report(std::uint64_t p, unsigned a, const CompareOptions& options) {
  const Threshold th = exception_threshold(p, a, options);
  if (th.wholesale || !th.r_star) {
    ExceptionReport report;
    report.p = p;
    report.a = a;
    report.status = th.wholesale ? ExceptionStatus::WholesaleException : ExceptionStatus::NoException;
    if (!th.wholesale) report.undetermined.push_back(0);
    return report;
  }
  const mpq_class scaled = th.r_star->hi_exact() / mpq_class(power(p, a));
  mpz_class hint;
  mpz_fdiv_q(hint.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  // Two past the hint always contains a coprime cofactor above the threshold.
  const std::uint64_t cap = hint + 2 > kMaxCap ? kMaxCap : hint.get_ui() + 2;
  return exception_set(p, a, cap, options);
}

bool downward_closed(const ExceptionReport& r) {
  if (!r.max_m) return r.members.empty();
  std::uint64_t expected = 0;
  for (std::uint64_t m = 1; m <= *r.max_m; ++m) {
    if (gcd(m, r.p) == 1) ++expected;
  }
  return expected == r.members.size();
}

struct TailResult {
  bool holds = true;
  json checks = json::array();
  int prec_used = 0;
};

void add_tail_check(TailResult& tail, const std::string& claim, const Verdict& v) {
  tail.holds = tail.holds && v.verified();
  tail.prec_used = std::max(tail.prec_used, v.prec_used);
  tail.checks.push_back(named_verdict(claim, v));
}

// For fixed a <= 5 and every prime p >= p0, p^a is not an exception (so no
// m p^a is one). With t = log2 p, d = deg S(.,a) and K = S(p0,a)/p0^d, the
// nonnegative coefficients give S(p,a) <= K p^d, and then it suffices that
// Q(t) = (a^2/4) t^2 - (a+d) t - log2 K >= 0, which holds for t >= t0 once
// Q(t0) >= 0 and t0 >= 2(a+d)/a^2. a log2(p)/4 > 1 makes the set downward
// closed in m.
TailResult fixed_exponent_tail(std::uint64_t p0, unsigned a, const CompareOptions& options) {
  TailResult tail;
  const auto& coeffs = sgbound::s_coefficients(a);
  const bool nonnegative = std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; });
  tail.holds = nonnegative;
  tail.checks.push_back({{"claim", "S(p," + std::to_string(a) + ") has nonnegative coefficients"},
                         {"outcome", nonnegative ? "Verified" : "Refuted"}});
  const long d = static_cast<long>(coeffs.size()) - 1;
  mpq_class k(sgbound::s_polynomial(p0, a), power(p0, static_cast<unsigned>(d)));
  k.canonicalize();
  const Expr t = Expr::log2(mpz_class(p0));
  const long aa = static_cast<long>(a);
  add_tail_check(tail, "Q(log2 p0) >= 0",
                 certified::certify_le(integer(aa + d) * t + Expr::log2(Expr::rational(k)),
                                       Expr::rational(aa * aa, 4) * t * t, options));
  add_tail_check(tail, "Q increasing beyond log2 p0",
                 certified::certify_le(Expr::rational(2 * (aa + d), aa * aa), t, options));
  add_tail_check(tail, "a log2(p0) > 4", certified::certify_lt(integer(4), integer(aa) * t, options));
  return tail;
}

// For a fixed prime p and every a >= a0: Q(a) = (a^2/4)(t^2 - t) - a t -
// log2 c(p) >= 0 means p^a is not an exception; Q is increasing for
// a (t - 1) >= 2.
TailResult exponent_tail(std::uint64_t p, unsigned a0, const CompareOptions& options) {
  TailResult tail;
  const Expr t = Expr::log2(mpz_class(p));
  const long a = static_cast<long>(a0);
  const Expr log_c = Expr::log2(sgbound::c_expr(p));
  add_tail_check(tail, "Q(a0) >= 0",
                 certified::certify_le(integer(a) * t + log_c, Expr::rational(static_cast<long>(a * a), 4) * (t * t - t), options));
  add_tail_check(tail, "Q increasing beyond a0", certified::certify_le(integer(2), integer(a) * (t - integer(1)), options));
  add_tail_check(tail, "a0 log2(p) > 4", certified::certify_lt(integer(4), integer(a) * t, options));
  return tail;
}

// Every prime p >= p0 and every a >= 6, using c(p) <= c(p0) (each factor of
// the Euler product decreases in p) and monotonicity of Q in both a and t.
TailResult joint_tail(std::uint64_t p0, const CompareOptions& options) {
  TailResult tail = exponent_tail(p0, 6, options);
  const Expr t = Expr::log2(mpz_class(p0));
  add_tail_check(tail, "dQ/dt >= 0: 6 (2 log2 p0 - 1) >= 4",
                 certified::certify_le(integer(4), integer(6) * (integer(2) * t - integer(1)), options));
  return tail;
}

json blanket_json(std::uint64_t p, unsigned a, const CompareOptions& options) {
  const Threshold th = exception_threshold(p, a, options);
  json j = {{"p", p}, {"a", a}, {"status", th.wholesale ? "WholesaleException" : "ListedException"}};
  j["exponent_check"] = verdict_json(th.exponent_check);
  if (th.r_star) j["threshold"] = interval_json(*th.r_star);
  return j;
}

LemmaAnalysis analyze_fixed_exponent(const LemmaDefinition& def, const CompareOptions& options) {
  LemmaAnalysis out;
  Certificate& cert = out.certificate;
  cert = fresh("lemma" + std::to_string(def.index));
  const unsigned a = def.a;
  json primes = json::array();
  json blanket = json::array();
  json mismatches = json::array();

  std::uint64_t last_named = 0;
  for (const auto& [p, m] : def.finite) last_named = std::max(last_named, p);
  for (std::uint64_t p : def.blanket) last_named = std::max(last_named, p);

  std::optional<std::uint64_t> tail_start;
  TailResult tail;
  for (std::uint64_t p = 2; p <= kPrimeSearchLimit; p = next_prime(p)) {
    if (std::find(def.blanket.begin(), def.blanket.end(), p) != def.blanket.end()) {
      blanket.push_back(blanket_json(p, a, options));
      out.blanket_cases.push_back({p, a, a});
      continue;
    }
    ExceptionReport report = bounded_exception_report(p, a, options);
    cert.prec_used = std::max(cert.prec_used, report.prec_used);
    json entry = report_json(report);

    const auto it = def.finite.find(p);
    const std::optional<std::uint64_t> expected = it == def.finite.end() ? std::nullopt : std::optional(it->second);
    entry["expected_max_m"] = expected ? json(*expected) : json(nullptr);
    if (!report.undetermined.empty()) {
      cert.outcome = worst(cert.outcome, Outcome::Undetermined);
    } else if (report.status == ExceptionStatus::WholesaleException || report.max_m != expected ||
               !downward_closed(report)) {
      cert.outcome = Outcome::Refuted;
      mismatches.push_back({{"p", p}, {"expected_max_m", entry["expected_max_m"]}, {"found", entry["max_m"]}});
    }
    if (report.max_m) out.finite_reports.push_back(report);
    primes.push_back(std::move(entry));

    if (p >= last_named) {
      tail = fixed_exponent_tail(p, a, options);
      if (tail.holds) {
        tail_start = p;
        break;
      }
    }
  }

  json max_m = json::object();
  for (const auto& r : out.finite_reports) max_m[std::to_string(r.p)] = *r.max_m;
  cert.detail = {{"exponent", a}, {"max_m", max_m}, {"primes", primes}, {"blanket", blanket}, {"mismatches", mismatches}};
  if (tail_start) {
    cert.detail["tail"] = {{"from_prime", *tail_start}, {"checks", tail.checks}};
    cert.prec_used = std::max(cert.prec_used, tail.prec_used);
  } else {
    cert.outcome = worst(cert.outcome, Outcome::Undetermined);
    cert.detail["tail"] = {{"from_prime", nullptr}, {"checks", tail.checks}};
  }

  json base_cases = json::array();
  if (def.index == 1) {
    const Expr p = integer(29);
    record(cert, base_cases, "29^(log2(29)/4) > 2*29",
           certified::certify_lt(integer(58), Expr::pow(p, Expr::log2(mpz_class(29)) / integer(4)), options));
    record(cert, base_cases, "29^(1/4) > 2", certified::certify_lt(integer(2), Expr::pow(p, Expr::rational(1, 4)), options));
  } else if (def.index == 2) {
    const Expr p = integer(19);
    record(cert, base_cases, "19^(log2(19)/2) > (19+3)*19",
           certified::certify_lt(integer(22 * 19), Expr::pow(p, Expr::log2(mpz_class(19)) / integer(2)), options));
    record(cert, base_cases, "19^(1/2) > 2", certified::certify_lt(integer(2), Expr::pow(p, Expr::rational(1, 2)), options));
  } else if (def.index == 3) {
    cert.detail["notes"] = json::array({"hypothesis requires r/p^3 > 1 but the stated range starts at 1; "
                                        "the cofactor m = 1 is included in the computed set"});
  }
  if (!base_cases.empty()) cert.detail["stated_base_cases"] = base_cases;
  return out;
}

LemmaAnalysis analyze_large_exponent(const LemmaDefinition& def, const CompareOptions& options) {
  LemmaAnalysis out;
  Certificate& cert = out.certificate;
  cert = fresh("lemma" + std::to_string(def.index));
  json primes = json::array();
  json blanket = json::array();
  std::vector<std::uint64_t> orders;

  std::optional<std::uint64_t> joint_start;
  TailResult joint;
  for (std::uint64_t p = 2; p <= kPrimeSearchLimit; p = next_prime(p)) {
    if (std::find(def.blanket.begin(), def.blanket.end(), p) != def.blanket.end()) {
      blanket.push_back(blanket_json(p, 6, options));
      out.blanket_cases.push_back({p, 6, 0});
      continue;
    }
    json per_exponent = json::array();
    std::optional<unsigned> exponent_start;
    TailResult a_tail;
    for (unsigned a = 6; a <= kExponentSearchLimit; ++a) {
      ExceptionReport report = bounded_exception_report(p, a, options);
      cert.prec_used = std::max(cert.prec_used, report.prec_used);
      if (!report.undetermined.empty()) cert.outcome = worst(cert.outcome, Outcome::Undetermined);
      if (report.status == ExceptionStatus::WholesaleException || !downward_closed(report)) cert.outcome = Outcome::Refuted;
      for (std::uint64_t m : report.members) orders.push_back(mpz_class(mpz_class(m) * power(p, a)).get_ui());
      if (report.max_m) out.finite_reports.push_back(report);
      per_exponent.push_back(report_json(report));

      a_tail = exponent_tail(p, a, options);
      if (a_tail.holds) {
        exponent_start = a;
        break;
      }
    }
    json entry = {{"p", p}, {"exponents", per_exponent}};
    if (exponent_start) {
      entry["exponent_tail"] = {{"from_exponent", *exponent_start}, {"checks", a_tail.checks}};
    } else {
      cert.outcome = worst(cert.outcome, Outcome::Undetermined);
    }
    primes.push_back(std::move(entry));

    joint = joint_tail(p, options);
    if (joint.holds) {
      joint_start = p;
      break;
    }
  }

  std::sort(orders.begin(), orders.end());
  const bool matches = orders == def.exceptional_orders;
  if (!matches) cert.outcome = Outcome::Refuted;
  cert.detail = {{"exponent", "a >= 6"},
                 {"primes", primes},
                 {"blanket", blanket},
                 {"exceptional_orders", orders},
                 {"expected_orders", def.exceptional_orders},
                 {"matches", matches}};
  if (joint_start) {
    cert.detail["tail"] = {{"from_prime", *joint_start}, {"from_exponent", 6}, {"checks", joint.checks}};
    cert.prec_used = std::max(cert.prec_used, joint.prec_used);
  } else {
    cert.outcome = worst(cert.outcome, Outcome::Undetermined);
  }
  return out;
}

LemmaAnalysis analyze_lemma0(const CompareOptions& options) {
  LemmaAnalysis out;
  Certificate& cert = out.certificate;
  cert = fresh("lemma0");
  const Expr coefficient = Expr::rational(sgbound::bound_coefficient());

  json failures = json::array();
  std::size_t checked = 0;
  for (unsigned a = 1; a <= 10; ++a) {
    for (std::uint64_t p : primes_up_to(97)) {
      // r = p^a, so p^(a log2(r)/4) = p^(a^2 log2(p)/4).
      const Expr rhs = coefficient * Expr::pow(integer(mpz_class(p)), Expr::rational(static_cast<long>(a * a), 4) * Expr::log2(mpz_class(p)));
      const Verdict v = certified::certify_le(sgbound::s_expr(p, a), rhs, options);
      absorb(cert, v);
      ++checked;
      if (!v.verified()) failures.push_back(named_verdict("S(" + std::to_string(p) + "," + std::to_string(a) + ")", v));
    }
  }

  json reduction = json::array();
  record(cert, reduction, "c(2) < 7.3722", certified::certify_lt(sgbound::c_expr(2), coefficient, options));
  record(cert, reduction, "c(3) < c(2)", certified::certify_lt(sgbound::c_expr(3), sgbound::c_expr(2), options));
  record(cert, reduction, "a = 1: 2 <= 7.3722 * 2^(1/4)",
         certified::certify_le(integer(2), coefficient * Expr::pow2(Expr::rational(1, 4)), options));
  // Read as p + 3 <= 7.3722 p, i.e. 3 <= 6.3722 p; the right side grows with p.
  record(cert, reduction, "a = 2: 2 + 3 <= 7.3722 * 2",
         certified::certify_le(integer(5), coefficient * integer(2), options));

  const mpq_class printed(95136, 10000);
  const Verdict printed_check =
      certified::certified_compare(coefficient * Expr::pow2(Expr::rational(1, 4)), Expr::rational(printed), options);
  const auto value = (coefficient * Expr::pow2(Expr::rational(1, 4))).evaluate(128);

  const auto c2 = sgbound::c_enclosure(2, mpq_class(1, 1000000000));
  cert.detail = {
      {"grid", {{"a_max", 10}, {"p_max", 97}, {"checked", checked}, {"failures", failures}}},
      {"reduction", reduction},
      {"c2", interval_json(c2.interval)},
      {"discrepancies",
       json::array({
           {{"item", "printed value of 7.3722 * 2^(1/4)"},
            {"printed", "9.5136"},
            {"enclosure", interval_json(value)},
            {"comparison_with_printed", verdict_json(printed_check)}},
           {{"item", "case a = 2 inequality direction"},
            {"printed", "p + 3 >= 7.3722 p"},
            {"certified", "p + 3 <= 7.3722 p"}},
           {{"item", "exponent of p in S(p, a) for a >= 6"}, {"printed", "a^2/2"}, {"used", "a^2/4"}},
       })},
  };
  return out;
}

}  // namespace

std::string to_string(ExceptionStatus status) {
  switch (status) {
    case ExceptionStatus::FiniteSet:
      return "FiniteSet";
    case ExceptionStatus::WholesaleException:
      return "WholesaleException";
    case ExceptionStatus::NoException:
      return "NoException";
  }
  return "NoException";
}

Threshold exception_threshold(std::uint64_t p, unsigned a, const CompareOptions& options) {
  if (a == 0) throw std::domain_error("exception_threshold: exponent must be positive");
  Threshold th;
  const Expr t = Expr::log2(mpz_class(p));
  const Expr exponent = integer(a) * t;
  th.exponent_check = certified::certified_compare(integer(4), exponent, options);
  if (th.exponent_check.outcome == Outcome::Equal || th.exponent_check.outcome == Outcome::Refuted) {
    th.wholesale = true;
    return th;
  }
  if (th.exponent_check.outcome == Outcome::Undetermined) return th;
  const Expr r_star = Expr::pow2(Expr::log2(sgbound::s_expr(p, a)) / (exponent / integer(4) - integer(1)));
  th.r_star = r_star.evaluate(std::max(options.start_prec, 128));
  return th;
}

Verdict is_exception(std::uint64_t p, unsigned a, std::uint64_t m, const CompareOptions& options) {
  if (m == 0 || gcd(m, p) != 1) throw std::invalid_argument("is_exception: cofactor must be positive and coprime to p");
  const mpz_class r = mpz_class(m) * power(p, a);
  Verdict v = certified::certified_compare(power_side(p, a, r), order_times_s(p, a, r), options);
  if (v.outcome == Outcome::Equal) v.outcome = Outcome::Refuted;
  return v;
}

ExceptionReport exception_set(std::uint64_t p, unsigned a, std::uint64_t cap, const CompareOptions& options) {
  if (cap < 1) throw std::invalid_argument("exception_set: cap must be at least 1");
  if (!is_prime(p)) throw std::invalid_argument("exception_set: p must be prime");
  ExceptionReport report;
  report.p = p;
  report.a = a;
  report.cap = cap;
  const Threshold th = exception_threshold(p, a, options);
  report.prec_used = th.exponent_check.prec_used;
  if (th.wholesale) {
    // a log2(p) <= 4 gives p^(a log2(r)/4) = r^(a log2(p)/4) <= r < r S(p,a).
    report.status = ExceptionStatus::WholesaleException;
    for (std::uint64_t m = 1; m <= cap; ++m) {
      if (gcd(m, p) == 1) report.members.push_back(m);
    }
    if (!report.members.empty()) report.max_m = report.members.back();
    return report;
  }
  report.threshold = th.r_star;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (gcd(m, p) != 1) continue;
    const Verdict v = is_exception(p, a, m, options);
    report.prec_used = std::max(report.prec_used, v.prec_used);
    if (v.outcome == Outcome::Verified) {
      report.members.push_back(m);
    } else if (v.outcome == Outcome::Undetermined) {
      report.undetermined.push_back(m);
    }
  }
  report.status = report.members.empty() ? ExceptionStatus::NoException : ExceptionStatus::FiniteSet;
  if (!report.members.empty()) report.max_m = report.members.back();
  return report;
}

const std::vector<LemmaDefinition>& lemma_table() {
  static const std::vector<LemmaDefinition> table = {
      {0, 0, {}, {}, {}},
      {1, 1, {{19, 3784}, {23, 8}}, {2, 3, 5, 7, 11, 13, 17}, {}},
      {2, 2, {{5, 16314}, {7, 6}}, {2, 3}, {}},
      {3, 3, {{5, 2}}, {2, 3}, {}},
      {4, 4, {{3, 116}}, {2}, {}},
      {5, 5, {{3, 11}}, {2}, {}},
      {6, 0, {}, {2}, {729, 1458, 2187, 2916}},
  };
  return table;
}

LemmaAnalysis analyze_lemma(int index, const CompareOptions& options) {
  if (index < 0 || index > 6) throw std::out_of_range("lemma index must be in 0..6");
  Stopwatch clock;
  LemmaAnalysis out;
  if (index == 0) {
    out = analyze_lemma0(options);
  } else if (index == 6) {
    out = analyze_large_exponent(lemma_table()[6], options);
  } else {
    out = analyze_fixed_exponent(lemma_table()[static_cast<std::size_t>(index)], options);
  }
  out.certificate.elapsed_ms = clock.elapsed_ms();
  return out;
}

Certificate verify_lemma(int index, const CompareOptions& options) { return analyze_lemma(index, options).certificate; }

}  // namespace sgcert::lemmas
