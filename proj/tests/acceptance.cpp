// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Without flags the exit status is 0 iff every criterion passes. With
// --expect-fail it is 0 iff the failing set equals the expected set, so a
// known, documented failure stays visible without breaking ctest.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sgcert/corollary.hpp"
#include "sgcert/factorization.hpp"
#include "sgcert/groups.hpp"
#include "sgcert/lemmas.hpp"
#include "sgcert/sgbound.hpp"

using namespace sgcert;
using certified::Expr;
using certified::Outcome;

namespace {

struct Outcome7 {
  bool pass = true;
  std::ostringstream why;
  void fail(const std::string& message) {
    if (!pass) why << "; ";
    pass = false;
    why << message;
  }
};

mpq_class dec(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q(s);
    q.canonicalize();
    return q;
  }
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpq_class q(mpz_class(digits), mpz_class("1" + std::string(s.size() - dot - 1, '0')));
  q.canonicalize();
  return q;
}

bool strictly_inside(const certified::CertReal& x, const char* lo, const char* hi) {
  return x.lo_exact() > dec(lo) && x.hi_exact() < dec(hi);
}

void exception_ranges(Outcome7& r) {
  const std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> expected = {
      {19, 1, 3784}, {23, 1, 8}, {5, 2, 16314}, {7, 2, 6}, {5, 3, 2}, {3, 4, 116}, {3, 5, 11}};
  for (int index = 1; index <= 6; ++index) {
    const auto analysis = lemmas::analyze_lemma(index);
    if (analysis.certificate.outcome != Outcome::Verified)
      r.fail("lemma" + std::to_string(index) + " " + certified::to_string(analysis.certificate.outcome));
    for (const auto& rep : analysis.finite_reports) {
      if (index == 6) continue;
      bool known = false;
      for (const auto& [p, a, m] : expected) {
        if (p != rep.p || a != rep.a) continue;
        known = true;
        if (!rep.max_m || *rep.max_m != m)
          r.fail("(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ") max_m " +
                 (rep.max_m ? std::to_string(*rep.max_m) : "none") + " != " + std::to_string(m));
      }
      if (!known) r.fail("unexpected exception class p=" + std::to_string(rep.p) + " a=" + std::to_string(rep.a));
    }
  }
  std::vector<std::uint64_t> orders;
  for (const auto& rep : lemmas::analyze_lemma(6).finite_reports) {
    if (rep.p != 3) continue;
    std::uint64_t pa = 1;
    for (unsigned i = 0; i < rep.a; ++i) pa *= 3;
    for (auto m : rep.members) orders.push_back(m * pa);
  }
  std::sort(orders.begin(), orders.end());
  if (orders != std::vector<std::uint64_t>{729, 1458, 2187, 2916}) r.fail("p=3, a>=6 orders differ");
}

void constants(Outcome7& r) {
  const auto c2 = sgbound::c_enclosure(2, dec("1/1000000000000")).interval;
  if (!strictly_inside(c2, "7.37218", "7.37220")) r.fail("c(2) = [" + c2.lo_decimal(8) + ", " + c2.hi_decimal(8) + "]");
  if (!certified::certify_lt(sgbound::c_expr(2), Expr::rational(sgbound::bound_coefficient())).verified())
    r.fail("c(2) < 7.3722 not certified");
  const auto theta = sgbound::theta_constants();
  if (!theta.even_sum.verified()) r.fail("even theta sum <= 2.129 not certified");
  if (!theta.odd_sum.verified()) r.fail("odd theta sum <= 2.53175 not certified");
}

void final_scalars(Outcome7& r) {
  const std::vector<std::uint64_t> pool{3, 5, 7, 11, 13, 17, 19, 23};
  const auto best = lemmas::maximize_eps(pool);
  if (best.subset != std::vector<std::uint64_t>{3, 5, 7, 11, 13}) r.fail("eps subset");
  if (!(best.enclosure.lo_exact() > dec("1.5314") && best.enclosure.hi_exact() <= dec("1.5315"))) r.fail("eps value range");
  if (!certified::certify_le(best.value, Expr::rational(sgbound::epsilon())).verified()) r.fail("eps <= 1.5315");
  const auto no3 = lemmas::maximize_eps(pool, {3});
  if (no3.subset != std::vector<std::uint64_t>{5, 7, 11, 13}) r.fail("eps without 3 subset");
  if (!certified::certify_le(no3.value, Expr::rational(sgbound::epsilon_without_3())).verified()) r.fail("eps without 3 <= 0.9278");
  if (!lemmas::check_small_order_step(16).verified()) r.fail("r = 16 step");
  if (lemmas::check_small_order_step(15).outcome != Outcome::Refuted) r.fail("r = 15 not refuted");
  if (!lemmas::check_sylow3_cube(68).verified()) r.fail("r = 68 step");
  if (lemmas::check_sylow3_cube(67).outcome != Outcome::Refuted) r.fail("r = 67 not refuted");
  for (const auto& c : lemmas::final_step_checks())
    if (c.outcome != Outcome::Verified) r.fail(c.claim_id + " " + certified::to_string(c.outcome));
}

void corollary_sweep(Outcome7& r) {
  corollary::SweepOptions options;
  options.jobs = 1;
  const auto result = corollary::sweep(corollary::default_ranges(), options);
  if (result.certificate.outcome != Outcome::Verified) r.fail("sweep " + certified::to_string(result.certificate.outcome));
  if (!result.counterexamples.empty()) r.fail(std::to_string(result.counterexamples.size()) + " refuted");
  if (!result.undetermined.empty()) r.fail(std::to_string(result.undetermined.size()) + " undetermined");
  r.why << (r.pass ? "" : "; ") << result.count << " orders, max f/B at r = " << (result.argmax ? *result.argmax : 0);
}

void oracle_equivalence(Outcome7& r) {
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto got = groups::enumerate_subgroups(groups::cyclic(n)).subgroups.size();
    if (got != divisor_count(n)) r.fail("C" + std::to_string(n));
  }
  for (unsigned k = 1; k <= 6; ++k) {
    const auto got = groups::enumerate_subgroups(groups::elementary_abelian(2, k)).subgroups.size();
    if (mpz_class(static_cast<unsigned long>(got)) != sgbound::subgroup_sum(k, 2)) r.fail("E2^" + std::to_string(k));
    if (k == 6 && got != 2825) r.fail("E2^6 != 2825");
  }
  for (std::uint64_t p : primes_up_to(97))
    for (unsigned a = 1; a <= 5; ++a)
      if (*sgbound::S(p, a).exact != sgbound::subgroup_sum(a, p)) r.fail("S(" + std::to_string(p) + "," + std::to_string(a) + ")");
}

void theorem_suite(Outcome7& r) {
  std::size_t groups_checked = 0;
  for (const auto& spec : groups::standard_suite(groups::kMaxEnumerationOrder)) {
    const auto t = groups::check_theorem(groups::from_spec(spec));
    ++groups_checked;
    if (!t.le_b.verified()) r.fail(spec + " count vs B(r) " + certified::to_string(t.le_b.outcome));
    if (t.certificate.outcome != Outcome::Verified) r.fail(spec + " " + certified::to_string(t.certificate.outcome));
    if (spec == "S4" && t.count != 30) r.fail("S4 count " + std::to_string(t.count));
  }
  std::set<std::size_t> orders;
  for (const auto& spec : groups::small_group_specs()) orders.insert(groups::from_spec(spec).order());
  for (std::size_t n = 1; n < 16; ++n)
    if (!orders.count(n)) r.fail("no group of order " + std::to_string(n));
  if (r.pass) r.why << groups_checked << " groups";
}

void soundness(Outcome7& r) {
  std::mt19937_64 rng(0x5eed);
  int changed = 0;
  for (int i = 0; i < 1000; ++i) {
    const long p = 2 + static_cast<long>(rng() % 60);
    const long n = 2 + static_cast<long>(rng() % 5000);
    const long k = 2 + static_cast<long>(rng() % 5);
    const long double approx = std::pow(static_cast<long double>(p), std::log2(static_cast<long double>(n)) / k);
    const mpz_class m = mpz_class(static_cast<long>(std::llround(approx))) + (static_cast<long>(rng() % 5) - 2);
    const auto lhs = Expr::integer(m);
    const auto rhs = Expr::pow(Expr::integer(p), Expr::log2(mpz_class(n)) / Expr::integer(k));
    const auto base = certified::certified_compare(lhs, rhs, {64, 1024});
    const auto fine = certified::certified_compare(lhs, rhs, {256, 4096});
    if (base.outcome != fine.outcome) ++changed;
  }
  if (changed) r.fail(std::to_string(changed) + " of 1000 verdicts changed");

  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (unsigned a = 0; a <= 12; ++a) {
      for (unsigned k = 0; k <= a; ++k) {
        if (sgbound::gaussian_binomial(a, k, p) != sgbound::gaussian_binomial(a, a - k, p)) r.fail("symmetry");
        if (k >= 1 && k < a) {
          mpz_class pk;
          mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
          if (sgbound::gaussian_binomial(a, k, p) !=
              sgbound::gaussian_binomial(a - 1, k - 1, p) + pk * sgbound::gaussian_binomial(a - 1, k, p))
            r.fail("q-Pascal");
        }
      }
    }
  }

  std::vector<unsigned> failing;
  for (unsigned a = 1; a <= 40; ++a)
    if (!sgbound::lower_bound_check(a).verified()) failing.push_back(a);
  if (!failing.empty()) {
    std::ostringstream list;
    for (std::size_t i = 0; i < failing.size(); ++i) list << (i ? "," : "") << failing[i];
    r.fail("lower_bound_check fails for a in {" + list.str() + "}: [1,0]_2 = 1 < 2^(1/4)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 3;
    }
  }

  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Outcome7&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "exception-range reproduction", 5, exception_ranges},
      {2, "constants", 1, constants},
      {3, "final-step scalars", 1, final_scalars},
      {4, "exceptional-order sweep", 10, corollary_sweep},
      {5, "oracle equivalence", 60, oracle_equivalence},
      {6, "theorem on the group suite", 0, theorem_suite},
      {7, "soundness properties", 0, soundness},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome7 r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && seconds > c.budget_s) r.fail("over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    if (!r.pass) failed.insert(c.id);
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed
              << std::setprecision(2) << seconds << " s)";
    const std::string why = r.why.str();
    if (!why.empty()) std::cout << ": " << why;
    std::cout << std::endl;
  }

  if (!expected_failures.empty()) {
    const bool as_expected = failed == expected_failures;
    std::cout << (as_expected ? "failures match the expected set" : "failures differ from the expected set") << std::endl;
    return as_expected ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
