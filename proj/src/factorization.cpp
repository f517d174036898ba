#include "sgcert/factorization.hpp"

#include <limits>
#include <stdexcept>

namespace sgcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::domain_error("divisor_count: n must be positive");
  if (n == 1) return 1;
  std::uint64_t count = 1;
  const Factorization fact = factorize(n);
  for (const auto& [p, a] : fact.pairs()) count *= a + 1;
  return count;
}

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  std::uint64_t previous = 0;
  for (const auto& [p, a] : pairs_) {
    if (!is_prime(p)) throw std::invalid_argument("Factorization: " + std::to_string(p) + " is not prime");
    if (p <= previous) throw std::invalid_argument("Factorization: primes must be strictly increasing");
    if (a == 0) throw std::invalid_argument("Factorization: exponents must be positive");
    previous = p;
    for (unsigned i = 0; i < a; ++i) {
      if (value_ > std::numeric_limits<std::uint64_t>::max() / p) {
        throw std::overflow_error("Factorization: value exceeds 64 bits");
      }
      value_ *= p;
    }
  }
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw std::domain_error("factorize: n must be at least 2");
  std::vector<PrimePower> pairs;
  auto strip = [&](std::uint64_t d) {
    unsigned a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    if (a > 0) pairs.push_back({d, a});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) pairs.push_back({n, 1});
  return Factorization(std::move(pairs));
}

}  // namespace sgcert
