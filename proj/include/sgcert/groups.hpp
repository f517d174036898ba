#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgcert/certificate.hpp"
#include "sgcert/expr.hpp"

namespace sgcert::groups {

using Element = std::uint32_t;

/// Largest order make_group will build.
constexpr std::size_t kConstructionCap = 5000;
/// Associativity is checked on every triple up to this order.
constexpr std::size_t kExhaustiveAssociativity = 128;
constexpr std::size_t kRandomTriples = 10000;

/// A finite group as a validated Cayley table. Immutable after construction.
class GroupTable {
 public:
  /// Validates entries, the Latin-square property, identity and
  /// associativity. Throws std::invalid_argument describing the first defect.
  GroupTable(std::string name, std::size_t order, std::vector<Element> table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  const std::vector<Element>& table() const { return table_; }
  /// "exhaustive" or "random:<triples>".
  const std::string& associativity_policy() const { return policy_; }

  bool is_abelian() const;
  std::size_t element_order(Element x) const;
  std::size_t exponent() const;
  std::size_t center_size() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::string policy_;
};

GroupTable cyclic(std::size_t n);
/// Symmetries of a regular (order/2)-gon; order must be even.
GroupTable dihedral(std::size_t order);
GroupTable elementary_abelian(std::uint64_t p, unsigned k);
GroupTable symmetric(unsigned n);
GroupTable alternating(unsigned n);
/// <a, x | a^(2m), x^2 = a^m, x a x^-1 = a^-1> of order 4m.
GroupTable dicyclic(std::size_t order);
GroupTable quaternion8();
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Parse error with 1-based position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line, column;
};

/// Text format:
///   # comment
///   name: S3          (optional)
///   order: 6
///   table:
///   0 1 2 3 4 5       (order rows, 0-based indices)
GroupTable parse_cayley(const std::string& text);
GroupTable load_cayley(const std::string& path);

/// Names such as C12, D12, E2^4, S4, A4, Q8, Q16, Dic12 and products C2xS3.
GroupTable from_spec(const std::string& spec);

struct Subgroup {
  std::vector<Element> elements;
  std::size_t order() const { return elements.size(); }
  bool operator==(const Subgroup&) const = default;
};

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  /// Set when the cap stopped the enumeration.
  bool partial = false;
};

/// Thrown before enumeration when the count provably exceeds the cap.
class TooManySubgroups : public std::runtime_error {
 public:
  TooManySubgroups(const std::string& group, const mpz_class& lower_bound, std::size_t cap);
  mpz_class lower_bound;
};

constexpr std::size_t kDefaultSubgroupCap = 1000000;
constexpr std::size_t kMaxEnumerationOrder = 512;

/// A proven lower bound on the subgroup count: the subgroup count of the
/// elementary abelian part {z in Z(G) : z^p = 1}, maximised over primes p.
mpz_class subgroup_lower_bound(const GroupTable& g);

/// All subgroups, sorted by order and then by element list.
SubgroupLattice enumerate_subgroups(const GroupTable& g, std::size_t cap = kDefaultSubgroupCap);

/// True when the elements form a subgroup of g.
bool is_subgroup(const GroupTable& g, const std::vector<Element>& elements);

struct SylowCensus {
  std::uint64_t p = 0;
  std::size_t sylow_order = 0;
  std::size_t count = 0;
  /// count <= r / p^a
  bool within_index = false;
  /// count = 1 mod p
  bool congruent = false;
};

SylowCensus sylow_census(const GroupTable& g, std::uint64_t p, const SubgroupLattice& lattice);
SylowCensus sylow_census(const GroupTable& g, std::uint64_t p);

struct TheoremCheck {
  std::string name;
  std::size_t order = 0;
  std::size_t count = 0;
  bool partial = false;
  certified::CertReal f_bound;
  mpz_class trivial_bound;
  std::optional<certified::CertReal> b_bound;
  certified::Verdict le_f;
  certified::Verdict le_trivial;
  certified::Verdict le_b;
  Certificate certificate;
};

/// Counts subgroups and certifies count <= f(r), count <= r^floor(log2 r)
/// and count <= B(r).
TheoremCheck check_theorem(const GroupTable& g, const certified::CompareOptions& options = {},
                           std::size_t cap = kDefaultSubgroupCap);

/// Every group of order below 16 up to isomorphism (28 groups).
std::vector<std::string> small_group_specs();
/// small_group_specs() plus larger constructions up to max_order.
std::vector<std::string> standard_suite(std::size_t max_order = kMaxEnumerationOrder);

}  // namespace sgcert::groups
