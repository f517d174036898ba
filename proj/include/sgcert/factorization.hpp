#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sgcert {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
std::uint64_t next_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Number of positive divisors.
std::uint64_t divisor_count(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// r = prod p_i^{a_i} with strictly increasing primes.
class Factorization {
 public:
  /// Validates primality, ordering and positive exponents; throws
  /// std::invalid_argument otherwise. The empty list represents 1.
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const& { return pairs_; }
  std::vector<PrimePower> pairs() && { return std::move(pairs_); }
  /// Number of distinct primes.
  std::size_t length() const { return pairs_.size(); }
  std::uint64_t value() const { return value_; }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
  std::uint64_t value_ = 1;
};

/// Complete factorization by trial division. std::domain_error for n < 2.
Factorization factorize(std::uint64_t n);

}  // namespace sgcert
