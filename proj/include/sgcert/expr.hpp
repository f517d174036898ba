#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "sgcert/cert_real.hpp"

namespace sgcert::certified {

/// Real-valued expression built from integers, rationals, log2, powers,
/// sums and products.
///
/// Expressions are normalized on construction. The only simplifications
/// performed are exact ones: rational constant folding, collection of like
/// terms, commutative ordering of sums and products, log2(2^k * m) = k +
/// log2(m), and 2^(c + sum k_i log2 n_i) = 2^c * prod n_i^k_i when c and
/// every k_i are integers. Two expressions with the same normal form have
/// the same key(); nothing else about transcendental equality is decided.
///
/// Values are immutable and share structure; copies are cheap and safe to
/// use from several threads.
class Expr {
 public:
  /// Evaluator for an opaque leaf: must return an enclosure whose width
  /// shrinks as the requested precision grows.
  using Evaluator = std::function<CertReal(int prec)>;

  Expr();  // zero

  static Expr integer(const mpz_class& n);
  static Expr integer(long n) { return integer(mpz_class(n)); }
  static Expr rational(const mpq_class& q);
  static Expr rational(long num, long den);
  /// log2 of a positive integer. std::invalid_argument for n <= 0.
  static Expr log2(const mpz_class& n);
  /// log2 of a positive expression. Constant non-positive arguments are a
  /// structural error (std::invalid_argument).
  static Expr log2(const Expr& x);
  static Expr pow2(const Expr& exponent);
  /// base^exponent for a positive base, i.e. 2^(exponent * log2 base).
  static Expr pow(const Expr& base, const Expr& exponent);
  /// Opaque named leaf (e.g. a convergent series). Leaves with equal names
  /// are treated as the same quantity.
  static Expr enclosed(std::string name, Evaluator evaluator);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  /// Division by the constant zero is a structural error.
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

  /// Exact rational value when the normal form is a constant.
  std::optional<mpq_class> exact() const;
  /// Canonical textual form of the normalized expression.
  const std::string& key() const;
  /// Outward-rounded enclosure at `prec` bits. May throw std::domain_error
  /// if a log2 argument cannot be shown positive at this precision.
  CertReal evaluate(int prec) const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct ExprBuilder;
};

enum class Outcome { Verified, Refuted, Equal, Undetermined };

std::string to_string(Outcome outcome);

/// Result of a certified check. For a raw comparison, Verified means
/// lhs < rhs and Refuted means lhs > rhs. For a claim check (certify_*),
/// Verified means the claim holds and Refuted means it is false.
struct Verdict {
  Outcome outcome = Outcome::Undetermined;
  int prec_used = 0;
  std::optional<CertReal> lhs;
  std::optional<CertReal> rhs;
  std::string note;

  bool verified() const { return outcome == Outcome::Verified; }
};

struct CompareOptions {
  int start_prec = 64;
  int prec_cap = 4096;
};

/// Trichotomy between two expressions. Equal is reported only for
/// identical normal forms or coinciding exact values; otherwise precision
/// is doubled from start_prec until the enclosures separate or prec_cap is
/// exhausted (Undetermined).
Verdict certified_compare(const Expr& lhs, const Expr& rhs, const CompareOptions& options = {});

/// Claim "lhs <= rhs": Verified on certified < or on detected equality.
Verdict certify_le(const Expr& lhs, const Expr& rhs, const CompareOptions& options = {});
/// Claim "lhs < rhs": equality refutes it.
Verdict certify_lt(const Expr& lhs, const Expr& rhs, const CompareOptions& options = {});

}  // namespace sgcert::certified
