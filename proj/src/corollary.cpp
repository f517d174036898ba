#include "sgcert/corollary.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>

#include "sgcert/factorization.hpp"
#include "sgcert/lemmas.hpp"
#include "sgcert/parallel.hpp"

namespace sgcert::corollary {
namespace {

using certified::Outcome;
using certified::Verdict;
using json = nlohmann::json;

struct Checked {
  std::uint64_t r = 0;
  Outcome outcome = Outcome::Undetermined;
  int prec_used = 0;
  std::optional<CertReal> ratio;
};

Checked check_order(std::uint64_t r, const SweepOptions& options) {
  const certified::Expr f = sgbound::f_expr(factorize(r));
  const certified::Expr b = sgbound::B_expr(r, options.coefficient);
  const Verdict v = certified::certify_le(f, b, options.compare);
  Checked out{r, v.outcome, v.prec_used, std::nullopt};
  const CertReal lhs = v.lhs ? *v.lhs : f.evaluate(128);
  const CertReal rhs = v.rhs ? *v.rhs : b.evaluate(128);
  out.ratio = lhs / rhs;
  return out;
}

}  // namespace

std::vector<std::uint64_t> generate(const SweepRange& range) {
  if (!is_prime(range.p)) throw std::invalid_argument("sweep range: p = " + std::to_string(range.p) + " is not prime");
  if (range.a == 0) throw std::invalid_argument("sweep range: exponent must be positive");
  std::uint64_t pa = 1;
  for (unsigned i = 0; i < range.a; ++i) {
    if (pa > UINT64_MAX / range.p) throw std::overflow_error("sweep range: p^a overflows");
    pa *= range.p;
  }
  if (range.m_max > 0 && pa > UINT64_MAX / range.m_max) throw std::overflow_error("sweep range: m p^a overflows");
  std::vector<std::uint64_t> out;
  out.reserve(coprime_count(range));
  for (std::uint64_t m = 1; m <= range.m_max; ++m) {
    if (m % range.p != 0) out.push_back(m * pa);
  }
  return out;
}

std::uint64_t coprime_count(const SweepRange& range) { return range.m_max - range.m_max / range.p; }

std::vector<SweepRange> default_ranges() {
  return {
      {23, 1, 8, "lemma1"},   {19, 1, 3784, "lemma1"}, {7, 2, 6, "lemma2"},
      {5, 2, 16314, "lemma2"}, {5, 3, 2, "lemma3"},     {3, 4, 116, "lemma4"},
      {3, 5, 11, "lemma5"},    {3, 6, 4, "lemma6"},     {3, 7, 1, "lemma6"},
  };
}

std::vector<SweepRange> parse_manifest(const json& manifest) {
  if (!manifest.is_object() || !manifest.contains("ranges") || !manifest["ranges"].is_array()) {
    throw std::invalid_argument("manifest: expected an object with a \"ranges\" array");
  }
  std::vector<SweepRange> out;
  std::size_t index = 0;
  for (const auto& entry : manifest["ranges"]) {
    const std::string where = "manifest: ranges[" + std::to_string(index++) + "]";
    auto field = [&](const char* key) -> std::uint64_t {
      if (!entry.is_object() || !entry.contains(key) || !entry[key].is_number_unsigned()) {
        throw std::invalid_argument(where + ": missing or non-integer field \"" + key + "\"");
      }
      return entry[key].get<std::uint64_t>();
    };
    SweepRange r;
    r.p = field("p");
    r.a = static_cast<unsigned>(field("a"));
    r.m_max = field("m_max");
    if (entry.contains("source")) {
      if (!entry["source"].is_string()) throw std::invalid_argument(where + ": \"source\" must be a string");
      r.source = entry["source"].get<std::string>();
    }
    if (!is_prime(r.p)) throw std::invalid_argument(where + ": p = " + std::to_string(r.p) + " is not prime");
    if (r.a == 0) throw std::invalid_argument(where + ": a must be positive");
    if (r.m_max == 0) throw std::invalid_argument(where + ": m_max must be positive");
    out.push_back(std::move(r));
  }
  if (out.empty()) throw std::invalid_argument("manifest: no ranges");
  return out;
}

std::vector<SweepRange> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("manifest " + path + ": " + e.what());
  }
  return parse_manifest(j);
}

SweepResult sweep(const std::vector<SweepRange>& ranges, const SweepOptions& options) {
  if (ranges.empty()) throw std::invalid_argument("sweep: no ranges");
  Stopwatch clock;
  std::vector<std::uint64_t> orders;
  json per_range = json::array();
  bool counts_ok = true;
  for (const auto& range : ranges) {
    const auto generated = generate(range);
    counts_ok = counts_ok && generated.size() == coprime_count(range);
    per_range.push_back({{"p", range.p}, {"a", range.a}, {"m_max", range.m_max}, {"source", range.source},
                         {"count", generated.size()}});
    orders.insert(orders.end(), generated.begin(), generated.end());
  }

  const auto results = parallel_map<Checked>(orders.size(), options.jobs,
                                             [&](std::size_t i) { return check_order(orders[i], options); });

  SweepResult out;
  Certificate& cert = out.certificate;
  cert.claim_id = "corollary1.sweep";
  cert.outcome = counts_ok ? Outcome::Verified : Outcome::Refuted;
  out.count = results.size();
  json undetermined = json::array();
  for (const auto& c : results) {
    cert.outcome = worst(cert.outcome, c.outcome);
    cert.prec_used = std::max(cert.prec_used, c.prec_used);
    if (c.outcome == Outcome::Refuted) out.counterexamples.push_back(c.r);
    if (c.outcome == Outcome::Undetermined) {
      out.undetermined.push_back(c.r);
      undetermined.push_back({{"r", c.r}, {"prec_used", c.prec_used}});
    }
    // Ties keep the first order encountered, so the argmax is deterministic.
    if (c.ratio && (!out.max_ratio || out.max_ratio->hi_exact() < c.ratio->hi_exact())) {
      out.max_ratio = c.ratio;
      out.argmax = c.r;
    }
  }

  cert.detail = {{"coefficient", options.coefficient.get_str()},
                 {"ranges", per_range},
                 {"count", out.count},
                 {"coverage_counts_match", counts_ok},
                 {"counterexamples", out.counterexamples},
                 {"undetermined", undetermined}};
  if (out.argmax) {
    cert.detail["argmax"] = *out.argmax;
    cert.detail["max_ratio"] = interval_json(*out.max_ratio);
  }
  cert.elapsed_ms = clock.elapsed_ms();
  return out;
}

CoverageError::CoverageError(std::uint64_t p_, unsigned a_, std::uint64_t lo, std::uint64_t hi)
    : std::runtime_error("incomplete coverage: p=" + std::to_string(p_) + " a=" + std::to_string(a_) + " cofactors m in [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "] are not swept"),
      p(p_),
      m_lo(lo),
      m_hi(hi),
      a(a_) {}

const std::vector<ResidualClass>& residual_classes() {
  static const std::vector<ResidualClass> classes = {
      {{5, 7, 11, 13, 17}, 1, 1, "p in {5,7,11,13,17} and a = 1"},
      {{3}, 1, 3, "p = 3 and a <= 3"},
      {{2}, 1, 0, "p = 2"},
  };
  return classes;
}

bool is_residual(std::uint64_t p, unsigned a) {
  for (const auto& c : residual_classes()) {
    if (std::find(c.primes.begin(), c.primes.end(), p) == c.primes.end()) continue;
    if (a >= c.a_min && (c.a_max == 0 || a <= c.a_max)) return true;
  }
  return false;
}

Certificate verify_corollary1(const std::vector<SweepRange>& ranges, const SweepOptions& options) {
  Stopwatch clock;
  std::map<std::pair<std::uint64_t, unsigned>, std::uint64_t> swept;
  for (const auto& r : ranges) {
    auto& m = swept[{r.p, r.a}];
    m = std::max(m, r.m_max);
  }

  Certificate cert;
  cert.claim_id = "corollary1";
  cert.outcome = Outcome::Verified;
  json coverage = json::array();
  json blanket = json::array();
  for (int index = 1; index <= 6; ++index) {
    const auto analysis = lemmas::analyze_lemma(index, options.compare);
    cert.outcome = worst(cert.outcome, analysis.certificate.outcome);
    for (const auto& b : analysis.blanket_cases) {
      // Residual classes are intervals in a, so checking both ends suffices.
      const unsigned top = b.a_max == 0 ? std::numeric_limits<unsigned>::max() : b.a_max;
      const bool residual = is_residual(b.p, b.a_min) && is_residual(b.p, top);
      blanket.push_back({{"lemma", index}, {"p", b.p}, {"a_min", b.a_min}, {"a_max", b.a_max}, {"residual", residual}});
      if (!residual) throw CoverageError(b.p, b.a_min, 1, UINT64_MAX);
    }
    for (const auto& report : analysis.finite_reports) {
      const std::uint64_t need = *report.max_m;
      json entry = {{"lemma", index}, {"p", report.p}, {"a", report.a}, {"max_m", need}};
      if (is_residual(report.p, report.a)) {
        entry["residual"] = true;
      } else {
        const auto it = swept.find({report.p, report.a});
        const std::uint64_t have = it == swept.end() ? 0 : it->second;
        if (have < need) throw CoverageError(report.p, report.a, have + 1, need);
        entry["swept_m_max"] = have;
      }
      coverage.push_back(std::move(entry));
    }
  }

  const SweepResult result = sweep(ranges, options);
  cert.outcome = worst(cert.outcome, result.certificate.outcome);
  cert.prec_used = std::max(cert.prec_used, result.certificate.prec_used);
  json residual = json::array();
  for (const auto& c : residual_classes()) residual.push_back(c.label);
  cert.detail = {{"coverage", coverage},
                 {"blanket", blanket},
                 {"sweep", result.certificate.detail},
                 {"residual_classes", residual}};
  cert.elapsed_ms = clock.elapsed_ms();
  return cert;
}

}  // namespace sgcert::corollary
