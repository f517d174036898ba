#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgcert/certificate.hpp"
#include "sgcert/sgbound.hpp"

namespace sgcert::corollary {

using certified::CertReal;
using certified::CompareOptions;

/// Orders r = m p^a for 1 <= m <= m_max with gcd(m, p) = 1.
struct SweepRange {
  std::uint64_t p = 0;
  unsigned a = 0;
  std::uint64_t m_max = 0;
  std::string source;

  bool operator==(const SweepRange&) const = default;
};

std::vector<std::uint64_t> generate(const SweepRange& range);
/// m_max - floor(m_max / p)
std::uint64_t coprime_count(const SweepRange& range);

/// The exceptional ranges of lemmas 1-6.
std::vector<SweepRange> default_ranges();

/// {"ranges": [{"p": .., "a": .., "m_max": .., "source": ..}, ...]}.
/// Throws std::invalid_argument naming the offending entry.
std::vector<SweepRange> parse_manifest(const nlohmann::json& manifest);
std::vector<SweepRange> load_manifest(const std::string& path);

struct SweepOptions {
  mpq_class coefficient = sgbound::bound_coefficient();
  CompareOptions compare;
  unsigned jobs = 1;
};

struct SweepResult {
  Certificate certificate;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> argmax;
  /// Enclosure of f(argmax) / B(argmax).
  std::optional<CertReal> max_ratio;
  std::vector<std::uint64_t> counterexamples;
  std::vector<std::uint64_t> undetermined;
};

/// Certifies f(r) <= coefficient * r^(log2(r)/4 + 1.5315) on every generated r.
SweepResult sweep(const std::vector<SweepRange>& ranges, const SweepOptions& options = {});

/// Raised when an exception class found by the lemmas is neither residual
/// nor inside a swept range.
class CoverageError : public std::runtime_error {
 public:
  CoverageError(std::uint64_t p, unsigned a, std::uint64_t m_lo, std::uint64_t m_hi);
  std::uint64_t p, m_lo, m_hi;
  unsigned a;
};

/// Cases left open after the sweep: prime p with exponent in [a_min, a_max]
/// (a_max = 0 means unbounded).
struct ResidualClass {
  std::vector<std::uint64_t> primes;
  unsigned a_min = 1;
  unsigned a_max = 0;
  std::string label;
};

const std::vector<ResidualClass>& residual_classes();
bool is_residual(std::uint64_t p, unsigned a);

/// Recomputes the lemma exception sets, checks that every non-residual one
/// lies in a swept range, and sweeps those ranges.
Certificate verify_corollary1(const std::vector<SweepRange>& ranges = default_ranges(), const SweepOptions& options = {});

}  // namespace sgcert::corollary
