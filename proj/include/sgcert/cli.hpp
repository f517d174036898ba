#pragma once

#include <ostream>
#include <vector>

#include "sgcert/certificate.hpp"

namespace sgcert::cli {

enum ExitCode : int { kAllVerified = 0, kRefuted = 1, kUndetermined = 2, kUsageError = 3 };

/// Maximum severity over the certificates (0 when empty).
int exit_code(const std::vector<Certificate>& certs);

/// Certificates sorted by claim_id as {"certificates": [...]}.
nlohmann::json report_json(std::vector<Certificate> certs);

/// Entry point of the sgcert tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgcert::cli
