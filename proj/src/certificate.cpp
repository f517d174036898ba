#include "sgcert/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgcert {

Outcome worst(Outcome a, Outcome b) {
  auto rank = [](Outcome o) {
    switch (o) {
      case Outcome::Refuted:
        return 2;
      case Outcome::Undetermined:
        return 1;
      default:
        return 0;
    }
  };
  const Outcome w = rank(a) >= rank(b) ? a : b;
  return w == Outcome::Equal ? Outcome::Verified : w;
}

int severity(Outcome outcome) {
  switch (outcome) {
    case Outcome::Refuted:
      return 1;
    case Outcome::Undetermined:
      return 2;
    default:
      return 0;
  }
}

nlohmann::json interval_json(const certified::CertReal& x, int digits) {
  return {{"lo", x.lo_decimal(digits)}, {"lo_rounding", "down"}, {"hi", x.hi_decimal(digits)}, {"hi_rounding", "up"}};
}

nlohmann::json verdict_json(const certified::Verdict& v) {
  nlohmann::json j = {{"outcome", certified::to_string(v.outcome)}, {"prec_used", v.prec_used}};
  if (v.lhs) j["lhs"] = interval_json(*v.lhs);
  if (v.rhs) j["rhs"] = interval_json(*v.rhs);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const Certificate& c) {
  return {{"claim_id", c.claim_id},
          {"outcome", certified::to_string(c.outcome)},
          {"detail", c.detail},
          {"prec_used", c.prec_used},
          {"elapsed_ms", c.elapsed_ms}};
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "Verified") return Outcome::Verified;
  if (s == "Refuted") return Outcome::Refuted;
  if (s == "Undetermined") return Outcome::Undetermined;
  if (s == "Equal") return Outcome::Equal;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.claim_id = j.at("claim_id").get<std::string>();
  c.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  c.detail = j.at("detail");
  c.prec_used = j.at("prec_used").get<int>();
  c.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return c;
}

void absorb(Certificate& cert, const certified::Verdict& v) {
  cert.outcome = worst(cert.outcome, v.outcome);
  cert.prec_used = std::max(cert.prec_used, v.prec_used);
}

}  // namespace sgcert
