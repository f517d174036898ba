#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "sgcert/cert_real.hpp"
#include "sgcert/expr.hpp"

namespace sgcert {

using certified::Outcome;

/// Outcome of one named claim. `outcome` is never Equal; `detail` holds
/// witness values with every real written as a directed-rounded interval.
struct Certificate {
  std::string claim_id;
  Outcome outcome = Outcome::Undetermined;
  nlohmann::json detail = nlohmann::json::object();
  int prec_used = 0;
  std::int64_t elapsed_ms = 0;
};

/// Refuted dominates Undetermined, which dominates Verified. Equal counts
/// as Verified.
Outcome worst(Outcome a, Outcome b);

/// Severity for exit codes: Verified 0, Refuted 1, Undetermined 2.
int severity(Outcome outcome);

nlohmann::json interval_json(const certified::CertReal& x, int digits = 20);
nlohmann::json verdict_json(const certified::Verdict& v);

nlohmann::json to_json(const Certificate& c);
/// Inverse of to_json. Throws nlohmann::json::exception on schema errors.
Certificate certificate_from_json(const nlohmann::json& j);
Outcome outcome_from_string(const std::string& s);

/// Folds a verdict into a running certificate: outcome and precision.
void absorb(Certificate& cert, const certified::Verdict& v);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sgcert
