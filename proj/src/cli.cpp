#include "sgcert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>

#include "sgcert/corollary.hpp"
#include "sgcert/groups.hpp"
#include "sgcert/lemmas.hpp"
#include "sgcert/parallel.hpp"
#include "sgcert/sgbound.hpp"

namespace sgcert::cli {
namespace {

using certified::CompareOptions;
using certified::Expr;
using json = nlohmann::json;

struct Settings {
  int precision_cap = 4096;
  unsigned jobs = 1;
  std::string output = "table";
  std::size_t cap = groups::kDefaultSubgroupCap;
  std::string manifest;
  std::string coefficient;

  int lemma_index = -1;

  std::string kind;
  std::size_t n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::string file;
  std::string spec;
  bool check_theorem = false;

  CompareOptions compare() const { return CompareOptions{std::min(64, precision_cap), precision_cap}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Certificate fresh(const std::string& id) {
  Certificate c;
  c.claim_id = id;
  c.outcome = Outcome::Verified;
  return c;
}

json named(const std::string& claim, const certified::Verdict& v) {
  json j = verdict_json(v);
  j["claim"] = claim;
  return j;
}

std::vector<Certificate> constants_certificates(const Settings& s) {
  const CompareOptions options = s.compare();
  std::vector<Certificate> out;

  Stopwatch clock;
  Certificate c = fresh("constants.c");
  const mpq_class tol(1, 1000000000000);
  const auto c2 = sgbound::c_enclosure(2, tol);
  json checks = json::array();
  auto add = [&](const std::string& claim, const certified::Verdict& v) {
    absorb(c, v);
    checks.push_back(named(claim, v));
  };
  add("c(2) < 7.3722", certified::certify_lt(sgbound::c_expr(2), Expr::rational(sgbound::bound_coefficient()), options));
  add("c(2) > 7.37218", certified::certify_lt(Expr::rational(737218, 100000), sgbound::c_expr(2), options));
  add("c(2) < 7.37220", certified::certify_lt(sgbound::c_expr(2), Expr::rational(73722, 10000), options));
  add("c(3) < c(2)", certified::certify_lt(sgbound::c_expr(3), sgbound::c_expr(2), options));
  json enclosures = json::object();
  for (std::uint64_t p : {2, 3, 5, 7}) {
    enclosures["C(" + std::to_string(p) + ")"] = interval_json(sgbound::C_enclosure(p, tol).interval);
    enclosures["c(" + std::to_string(p) + ")"] = interval_json(sgbound::c_enclosure(p, tol).interval);
  }
  c.detail = {{"c2", interval_json(c2.interval)}, {"enclosures", enclosures}, {"checks", checks}};
  c.elapsed_ms = clock.elapsed_ms();
  out.push_back(std::move(c));

  Stopwatch theta_clock;
  Certificate t = fresh("constants.theta");
  const auto theta = sgbound::theta_constants(options);
  absorb(t, theta.even_sum);
  absorb(t, theta.odd_sum);
  absorb(t, theta.odd_to_even);
  t.detail = {{"even_sum", interval_json(theta.even_value)},
              {"odd_sum", interval_json(theta.odd_value)},
              {"checks", json::array({named("-1 + 2 sum 2^(-k^2) <= 2.129", theta.even_sum),
                                      named("2 sum 2^(-k(k+1)) <= 2.53175", theta.odd_sum),
                                      named("2.53175 * 2^(-1/4) <= 2.129", theta.odd_to_even)})}};
  t.elapsed_ms = theta_clock.elapsed_ms();
  out.push_back(std::move(t));
  return out;
}

std::vector<Certificate> lemma_certificates(const Settings& s, std::vector<int> indices) {
  const CompareOptions options = s.compare();
  return parallel_map<Certificate>(indices.size(), s.jobs,
                                   [&](std::size_t i) { return lemmas::verify_lemma(indices[i], options); });
}

std::vector<Certificate> corollary_certificates(const Settings& s) {
  std::vector<corollary::SweepRange> ranges = corollary::default_ranges();
  if (!s.manifest.empty()) {
    try {
      ranges = corollary::load_manifest(s.manifest);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  corollary::SweepOptions options;
  options.compare = s.compare();
  options.jobs = s.jobs;
  if (!s.coefficient.empty()) {
    try {
      options.coefficient = mpq_class(s.coefficient);
      options.coefficient.canonicalize();
    } catch (const std::exception&) {
      throw UsageError("--coefficient must be a rational such as 73722/10000");
    }
    if (options.coefficient <= 0) throw UsageError("--coefficient must be positive");
  }
  try {
    return {corollary::verify_corollary1(ranges, options)};
  } catch (const corollary::CoverageError& e) {
    Certificate c = fresh("corollary1");
    c.outcome = Outcome::Refuted;
    c.detail = {{"coverage_error", e.what()}, {"p", e.p}, {"a", e.a}, {"m_lo", e.m_lo}, {"m_hi", e.m_hi}};
    return {c};
  }
}

groups::GroupTable build_group(const Settings& s) {
  const int sources = !s.spec.empty() + !s.file.empty() + !s.kind.empty();
  if (sources != 1) throw UsageError("group: give exactly one of --kind, --spec, --file");
  try {
    if (!s.spec.empty()) return groups::from_spec(s.spec);
    if (!s.file.empty()) return groups::load_cayley(s.file);
    auto need_n = [&] {
      if (s.n == 0) throw UsageError("group --kind " + s.kind + " needs --n");
      return s.n;
    };
    if (s.kind == "cyclic") return groups::cyclic(need_n());
    if (s.kind == "dihedral") return groups::dihedral(need_n());
    if (s.kind == "symmetric") return groups::symmetric(static_cast<unsigned>(need_n()));
    if (s.kind == "alternating") return groups::alternating(static_cast<unsigned>(need_n()));
    if (s.kind == "dicyclic") return groups::dicyclic(need_n());
    if (s.kind == "quaternion8") return groups::quaternion8();
    if (s.kind == "elementary_abelian") {
      if (s.p == 0 || s.k == 0) throw UsageError("group --kind elementary_abelian needs --p and --k");
      return groups::elementary_abelian(s.p, s.k);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown group kind '" + s.kind + "'");
}

Certificate group_report(const groups::GroupTable& g, std::size_t cap) {
  Stopwatch clock;
  Certificate c = fresh("group." + g.name());
  const auto lattice = groups::enumerate_subgroups(g, cap);
  std::map<std::size_t, std::size_t> by_order;
  bool lagrange = true, closed = true;
  for (const auto& h : lattice.subgroups) {
    ++by_order[h.order()];
    lagrange = lagrange && g.order() % h.order() == 0;
    closed = closed && groups::is_subgroup(g, h.elements);
  }
  if (!lagrange || !closed) c.outcome = Outcome::Refuted;
  if (lattice.partial) c.outcome = worst(c.outcome, Outcome::Undetermined);
  json orders = json::object();
  for (const auto& [o, n] : by_order) orders[std::to_string(o)] = n;
  c.detail = {{"order", g.order()},
              {"subgroups", lattice.subgroups.size()},
              {"partial", lattice.partial},
              {"abelian", g.is_abelian()},
              {"center_size", g.center_size()},
              {"exponent", g.exponent()},
              {"associativity", g.associativity_policy()},
              {"subgroups_by_order", orders},
              {"closure_and_lagrange", closed && lagrange}};
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

std::vector<Certificate> group_certificates(const Settings& s) {
  const groups::GroupTable g = build_group(s);
  try {
    if (s.check_theorem) return {groups::check_theorem(g, s.compare(), s.cap).certificate};
    return {group_report(g, s.cap)};
  } catch (const groups::TooManySubgroups& e) {
    Certificate c = fresh("group." + g.name());
    c.outcome = Outcome::Undetermined;
    c.detail = {{"order", g.order()}, {"refused", e.what()}, {"lower_bound", e.lower_bound.get_str()}};
    return {c};
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

std::vector<Certificate> final_certificates(const Settings& s) { return lemmas::final_step_checks(s.compare()); }

std::vector<Certificate> all_certificates(const Settings& s) {
  using Task = std::function<std::vector<Certificate>()>;
  std::vector<Task> tasks;
  Settings single = s;
  single.jobs = 1;
  for (int i = 0; i <= 6; ++i) tasks.push_back([single, i] { return lemma_certificates(single, {i}); });
  tasks.push_back([single] { return final_certificates(single); });
  tasks.push_back([single] { return constants_certificates(single); });
  tasks.push_back([single] { return corollary_certificates(single); });
  for (const auto& spec : groups::standard_suite(128)) {
    tasks.push_back([single, spec] {
      return std::vector<Certificate>{groups::check_theorem(groups::from_spec(spec), single.compare(), single.cap).certificate};
    });
  }
  const auto results = parallel_map<std::vector<Certificate>>(tasks.size(), s.jobs, [&](std::size_t i) { return tasks[i](); });
  std::vector<Certificate> out;
  for (const auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

// One-line human summary for claims that have a headline value.
std::string summary(const Certificate& c) {
  const json& d = c.detail;
  auto interval = [](const json& j) { return "[" + j["lo"].get<std::string>() + ", " + j["hi"].get<std::string>() + "]"; };
  if (c.claim_id == "constants.c") {
    return "c(2) in " + interval(d["c2"]) + " < 7.3722: " + d["checks"][0]["outcome"].get<std::string>();
  }
  if (c.claim_id == "constants.theta") {
    return "even sum in " + interval(d["even_sum"]) + ", odd sum in " + interval(d["odd_sum"]);
  }
  if (c.claim_id.rfind("lemma", 0) == 0 && d.contains("max_m") && !d["max_m"].empty()) {
    std::string out = "max_m";
    for (const auto& [p, m] : d["max_m"].items()) out += " p=" + p + ":" + m.dump();
    return out;
  }
  if (c.claim_id == "lemma0" && d.contains("grid")) {
    return "c(2) in " + interval(d["c2"]) + ", " + d["grid"]["checked"].dump() + " (p, a) grid cases, " +
           std::to_string(d["discrepancies"].size()) + " discrepancies noted";
  }
  if (c.claim_id == "lemma6") return "exceptional orders " + d["exceptional_orders"].dump();
  if (c.claim_id == "corollary1" && d.contains("sweep")) {
    const json& sw = d["sweep"];
    std::string out = std::to_string(sw["count"].get<std::uint64_t>()) + " orders";
    if (sw.contains("argmax")) out += ", max f/B at r=" + sw["argmax"].dump() + " in " + interval(sw["max_ratio"]);
    if (!sw["counterexamples"].empty()) out += ", counterexamples " + sw["counterexamples"].dump();
    return out;
  }
  if (c.claim_id == "corollary1" && d.contains("coverage_error")) return d["coverage_error"].get<std::string>();
  if (c.claim_id.rfind("group.", 0) == 0 && d.contains("subgroups")) {
    std::string out = "order " + d["order"].dump() + ", " + d["subgroups"].dump() + " subgroups";
    if (d.contains("B")) out += ", B in " + interval(d["B"]);
    return out;
  }
  if (c.claim_id.rfind("group.", 0) == 0 && d.contains("refused")) return d["refused"].get<std::string>();
  if (d.contains("discovered_threshold")) return "threshold r = " + d["discovered_threshold"].dump();
  if (d.contains("R0")) return "R0 = " + d["R0"].dump();
  if (d.contains("subset")) return "subset " + d["subset"].dump() + " value " + interval(d["value"]);
  if (d.contains("checks") && d["checks"].is_array() && !d["checks"].empty() && d["checks"][0].contains("claim")) {
    std::size_t verified = 0;
    for (const auto& check : d["checks"]) verified += check["outcome"] == "Verified";
    return std::to_string(verified) + "/" + std::to_string(d["checks"].size()) + " inequalities verified";
  }
  return "";
}

void print_table(std::vector<Certificate> certs, std::ostream& out) {
  std::sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) { return a.claim_id < b.claim_id; });
  std::size_t width = 8;
  for (const auto& c : certs) width = std::max(width, c.claim_id.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "claim" << std::setw(14) << "outcome" << std::setw(7)
      << "bits" << std::setw(9) << "ms"
      << "summary\n";
  for (const auto& c : certs) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << c.claim_id << std::setw(14)
        << certified::to_string(c.outcome) << std::setw(7) << c.prec_used << std::setw(9) << c.elapsed_ms << summary(c)
        << "\n";
  }
}

}  // namespace

int exit_code(const std::vector<Certificate>& certs) {
  int code = kAllVerified;
  for (const auto& c : certs) code = std::max(code, severity(c.outcome));
  return code;
}

json report_json(std::vector<Certificate> certs) {
  std::sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) { return a.claim_id < b.claim_id; });
  json list = json::array();
  for (const auto& c : certs) list.push_back(to_json(c));
  return {{"certificates", list}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Certified checks for subgroup-count bounds of finite groups", "sgcert"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision-cap", s.precision_cap, "Largest working precision in bits")
      ->check(CLI::Range(16, 1 << 20));
  app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--output", s.output, "Report format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cap", s.cap, "Subgroup enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--manifest", s.manifest, "Sweep range manifest (JSON)");

  auto* constants = app.add_subcommand("constants", "Enclosures of c(p), C(p) and the theta sums");
  auto* lemma = app.add_subcommand("lemma", "Exception sets and tail arguments of one lemma");
  lemma->add_option("--index", s.lemma_index, "Lemma index 0..6")->required()->check(CLI::Range(0, 6));
  auto* final_step = app.add_subcommand("final", "Scalar inequalities that close the induction");
  auto* coroll = app.add_subcommand("corollary", "Sweep of the exceptional orders");
  coroll->add_option("--manifest", s.manifest, "Sweep range manifest (JSON)");
  coroll->add_option("--coefficient", s.coefficient, "Replace 7.3722 by this rational");
  auto* group = app.add_subcommand("group", "Enumerate the subgroups of one group");
  group->add_option("--kind", s.kind, "cyclic, dihedral, elementary_abelian, symmetric, alternating, quaternion8, dicyclic");
  group->add_option("--n", s.n, "Order (or degree for symmetric/alternating)");
  group->add_option("--p", s.p, "Prime for elementary_abelian");
  group->add_option("--k", s.k, "Rank for elementary_abelian");
  group->add_option("--file", s.file, "Cayley table file");
  group->add_option("--spec", s.spec, "Group name such as C2xS3, E2^4, Dic12");
  group->add_flag("--check-theorem", s.check_theorem, "Certify count <= f(r), trivial bound and B(r)");
  group->add_option("--cap", s.cap, "Subgroup enumeration cap")->check(CLI::PositiveNumber);
  auto* all = app.add_subcommand("all", "Every check; groups up to order 128");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  std::vector<Certificate> certs;
  try {
    if (constants->parsed()) certs = constants_certificates(s);
    if (lemma->parsed()) certs = lemma_certificates(s, {s.lemma_index});
    if (final_step->parsed()) certs = final_certificates(s);
    if (coroll->parsed()) certs = corollary_certificates(s);
    if (group->parsed()) certs = group_certificates(s);
    if (all->parsed()) certs = all_certificates(s);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (s.output == "json") {
    out << report_json(certs).dump(2) << "\n";
  } else {
    print_table(certs, out);
  }
  return exit_code(certs);
}

}  // namespace sgcert::cli
