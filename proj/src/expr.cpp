#include "sgcert/expr.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sgcert::certified {

enum class Kind { Const, Log2Int, Log2, Pow2, Sum, Product, Recip, Enclosed };

struct Expr::Node {
  Kind kind = Kind::Const;
  mpq_class value;                              // Const; constant part of Sum
  mpz_class n;                                  // Log2Int (odd, >= 3)
  std::vector<std::pair<mpq_class, Expr>> terms;  // Sum, sorted by key
  std::vector<Expr> children;                   // Product factors, or the single argument
  std::string name;                             // Enclosed
  Evaluator evaluator;                          // Enclosed
  std::string key;
};

struct ExprBuilder {
  using Node = Expr::Node;

  static Expr make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }
  static const Node& node(const Expr& e) { return *e.node_; }

  static Expr constant(const mpq_class& q) {
    Node node;
    node.kind = Kind::Const;
    node.value = q;
    node.value.canonicalize();
    node.key = "q:" + node.value.get_str();
    return make(std::move(node));
  }

  static bool is_const(const Expr& e) { return node(e).kind == Kind::Const; }

  // Linear view: constant + sum of coefficient * term.
  using Linear = std::pair<mpq_class, std::map<std::string, std::pair<mpq_class, Expr>>>;

  static Linear linear(const Expr& e) {
    Linear out{0, {}};
    const Node& nd = node(e);
    if (nd.kind == Kind::Const) {
      out.first = nd.value;
    } else if (nd.kind == Kind::Sum) {
      out.first = nd.value;
      for (const auto& [coeff, term] : nd.terms) out.second.emplace(term.key(), std::make_pair(coeff, term));
    } else {
      out.second.emplace(e.key(), std::make_pair(mpq_class(1), e));
    }
    return out;
  }

  static Expr from_linear(const Linear& lin) {
    std::vector<std::pair<mpq_class, Expr>> terms;
    for (const auto& [key, entry] : lin.second) {
      if (entry.first != 0) terms.push_back(entry);
    }
    if (terms.empty()) return constant(lin.first);
    if (lin.first == 0 && terms.size() == 1 && terms.front().first == 1) return terms.front().second;

    Node node;
    node.kind = Kind::Sum;
    node.value = lin.first;
    node.key = "(+ " + lin.first.get_str();
    for (const auto& [coeff, term] : terms) node.key += " " + coeff.get_str() + "*" + term.key();
    node.key += ")";
    node.terms = std::move(terms);
    return make(std::move(node));
  }

  // Monomial view: coefficient * product of factors.
  static std::pair<mpq_class, std::vector<Expr>> monomial(const Expr& e) {
    const Node& nd = node(e);
    if (nd.kind == Kind::Const) return {nd.value, {}};
    if (nd.kind == Kind::Sum && nd.value == 0 && nd.terms.size() == 1) {
      auto [coeff, factors] = monomial(nd.terms.front().second);
      return {coeff * nd.terms.front().first, std::move(factors)};
    }
    if (nd.kind == Kind::Product) return {1, nd.children};
    return {1, {e}};
  }

  static Expr scale(const mpq_class& q, const Expr& e) {
    if (q == 0) return constant(0);
    Linear lin = linear(e);
    lin.first *= q;
    for (auto& [key, entry] : lin.second) entry.first *= q;
    return from_linear(lin);
  }

  static Expr product(const Expr& a, const Expr& b) {
    if (is_const(a)) return scale(node(a).value, b);
    if (is_const(b)) return scale(node(b).value, a);

    auto [ca, fa] = monomial(a);
    auto [cb, fb] = monomial(b);
    std::multimap<std::string, Expr> sorted;
    for (const auto& f : fa) sorted.emplace(f.key(), f);
    for (const auto& f : fb) sorted.emplace(f.key(), f);

    Node node;
    node.kind = Kind::Product;
    node.key = "(*";
    for (const auto& [key, f] : sorted) {
      node.key += " " + key;
      node.children.push_back(f);
    }
    node.key += ")";
    return scale(ca * cb, make(std::move(node)));
  }

  static Expr unary(Kind kind, const Expr& arg, const std::string& prefix) {
    Node node;
    node.kind = kind;
    node.children = {arg};
    node.key = prefix + "(" + arg.key() + ")";
    return make(std::move(node));
  }

  static Expr log2_odd(const mpz_class& m) {
    Node node;
    node.kind = Kind::Log2Int;
    node.n = m;
    node.key = "L(" + m.get_str() + ")";
    return make(std::move(node));
  }

  // 2^(c + sum k_i log2 m_i) as an exact rational when every exponent is an
  // integer of moderate size.
  static std::optional<mpq_class> exact_pow2(const Expr& exponent) {
    constexpr long kMaxBits = 1L << 20;
    const Linear lin = linear(exponent);
    if (lin.first.get_den() != 1 || abs(lin.first.get_num()) > kMaxBits) return std::nullopt;
    mpq_class result(1);
    const long c = lin.first.get_num().get_si();
    if (c >= 0) {
      mpq_mul_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(c));
    } else {
      mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(-c));
    }
    for (const auto& [key, entry] : lin.second) {
      const auto& [coeff, term] = entry;
      const Node& nd = node(term);
      if (nd.kind != Kind::Log2Int || coeff.get_den() != 1) return std::nullopt;
      const mpz_class k = coeff.get_num();
      const auto bits = static_cast<long>(mpz_sizeinbase(nd.n.get_mpz_t(), 2));
      if (abs(k) * bits > kMaxBits) return std::nullopt;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), nd.n.get_mpz_t(), mpz_class(abs(k)).get_ui());
      if (k > 0) {
        result *= mpq_class(power);
      } else {
        result /= mpq_class(power);
      }
    }
    result.canonicalize();
    return result;
  }
};

namespace {
using B = ExprBuilder;
}

Expr::Expr() : Expr(B::constant(0)) {}

Expr Expr::integer(const mpz_class& n) { return B::constant(mpq_class(n)); }

Expr Expr::rational(const mpq_class& q) { return B::constant(q); }

Expr Expr::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Expr::rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return B::constant(q);
}

Expr Expr::log2(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("Expr::log2: argument must be positive");
  mpz_class m = n;
  const auto twos = mpz_scan1(m.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
  const Expr k = integer(mpz_class(static_cast<unsigned long>(twos)));
  if (m == 1) return k;
  return k + B::log2_odd(m);
}

Expr Expr::log2(const Expr& x) {
  const Node& nd = B::node(x);
  if (nd.kind == Kind::Const) {
    if (nd.value <= 0) throw std::invalid_argument("Expr::log2: argument must be positive");
    return log2(nd.value.get_num()) - log2(nd.value.get_den());
  }
  if (nd.kind == Kind::Pow2) return nd.children.front();
  return B::unary(Kind::Log2, x, "log2");
}

Expr Expr::pow2(const Expr& exponent) {
  if (auto exact = B::exact_pow2(exponent)) return B::constant(*exact);
  return B::unary(Kind::Pow2, exponent, "2^");
}

Expr Expr::pow(const Expr& base, const Expr& exponent) {
  if (B::is_const(base)) {
    if (B::node(base).value <= 0) throw std::invalid_argument("Expr::pow: base must be positive");
    if (B::node(base).value == 1) return integer(1);
  }
  return pow2(exponent * log2(base));
}

Expr Expr::enclosed(std::string name, Evaluator evaluator) {
  if (!evaluator) throw std::invalid_argument("Expr::enclosed: empty evaluator");
  Node node;
  node.kind = Kind::Enclosed;
  node.key = "E[" + name + "]";
  node.name = std::move(name);
  node.evaluator = std::move(evaluator);
  return B::make(std::move(node));
}

Expr operator+(const Expr& a, const Expr& b) {
  B::Linear lin = B::linear(a);
  const B::Linear rhs = B::linear(b);
  lin.first += rhs.first;
  for (const auto& [key, entry] : rhs.second) {
    auto [it, inserted] = lin.second.emplace(key, entry);
    if (!inserted) it->second.first += entry.first;
  }
  return B::from_linear(lin);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) { return B::product(a, b); }

Expr operator/(const Expr& a, const Expr& b) {
  const auto& nb = B::node(b);
  if (nb.kind == Kind::Const) {
    if (nb.value == 0) throw std::invalid_argument("Expr: division by zero");
    return B::scale(1 / nb.value, a);
  }
  if (nb.kind == Kind::Recip) return a * nb.children.front();
  if (nb.kind == Kind::Pow2) return a * Expr::pow2(-nb.children.front());
  return a * B::unary(Kind::Recip, b, "1/");
}

Expr Expr::operator-() const { return B::scale(-1, *this); }

std::optional<mpq_class> Expr::exact() const {
  if (node_->kind == Kind::Const) return node_->value;
  return std::nullopt;
}

const std::string& Expr::key() const { return node_->key; }

CertReal Expr::evaluate(int prec) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::Const:
      return CertReal::from_rational(nd.value, prec);
    case Kind::Log2Int:
      return log2_enclosure(nd.n, prec);
    case Kind::Log2:
      return certified::log2(nd.children.front().evaluate(prec));
    case Kind::Pow2:
      return pow2_enclosure(nd.children.front().evaluate(prec), prec);
    case Kind::Recip:
      return CertReal::from_integer(1, prec) / nd.children.front().evaluate(prec);
    case Kind::Enclosed:
      return nd.evaluator(prec);
    case Kind::Sum: {
      CertReal acc = CertReal::from_rational(nd.value, prec);
      for (const auto& [coeff, term] : nd.terms) {
        CertReal v = term.evaluate(prec);
        acc = acc + (coeff == 1 ? v : CertReal::from_rational(coeff, prec) * v);
      }
      return acc;
    }
    case Kind::Product: {
      CertReal acc = nd.children.front().evaluate(prec);
      for (std::size_t i = 1; i < nd.children.size(); ++i) acc = acc * nd.children[i].evaluate(prec);
      return acc;
    }
  }
  throw std::logic_error("Expr::evaluate: unknown node kind");
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Verified:
      return "Verified";
    case Outcome::Refuted:
      return "Refuted";
    case Outcome::Equal:
      return "Equal";
    case Outcome::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

Verdict certified_compare(const Expr& lhs, const Expr& rhs, const CompareOptions& options) {
  Verdict verdict;
  if (lhs.key() == rhs.key()) {
    verdict.outcome = Outcome::Equal;
    verdict.note = "identical normal form";
    return verdict;
  }
  const auto l_exact = lhs.exact();
  const auto r_exact = rhs.exact();
  if (l_exact && r_exact) {
    const int c = cmp(*l_exact, *r_exact);
    verdict.outcome = c < 0 ? Outcome::Verified : (c > 0 ? Outcome::Refuted : Outcome::Equal);
    verdict.lhs = CertReal::from_rational(*l_exact, options.start_prec);
    verdict.rhs = CertReal::from_rational(*r_exact, options.start_prec);
    verdict.note = "exact rational comparison";
    return verdict;
  }

  for (int prec = std::min(options.start_prec, options.prec_cap);; prec = std::min(prec * 2, options.prec_cap)) {
    verdict.prec_used = prec;
    try {
      CertReal l = lhs.evaluate(prec);
      CertReal r = rhs.evaluate(prec);
      const bool less = l.certainly_less(r);
      const bool greater = r.certainly_less(l);
      const bool equal_points = l.is_point() && r.is_point() && compare(l.lo(), r.lo()) == 0;
      verdict.lhs = std::move(l);
      verdict.rhs = std::move(r);
      if (less) {
        verdict.outcome = Outcome::Verified;
        return verdict;
      }
      if (greater) {
        verdict.outcome = Outcome::Refuted;
        return verdict;
      }
      if (equal_points) {
        verdict.outcome = Outcome::Equal;
        verdict.note = "coinciding exact enclosures";
        return verdict;
      }
    } catch (const std::domain_error& e) {
      verdict.note = e.what();
    }
    if (prec >= options.prec_cap) break;
  }
  verdict.outcome = Outcome::Undetermined;
  if (verdict.note.empty()) verdict.note = "precision cap exhausted with overlapping enclosures";
  return verdict;
}

Verdict certify_le(const Expr& lhs, const Expr& rhs, const CompareOptions& options) {
  Verdict v = certified_compare(lhs, rhs, options);
  if (v.outcome == Outcome::Equal) {
    v.outcome = Outcome::Verified;
    v.note = "holds with equality (" + v.note + ")";
  }
  return v;
}

Verdict certify_lt(const Expr& lhs, const Expr& rhs, const CompareOptions& options) {
  Verdict v = certified_compare(lhs, rhs, options);
  if (v.outcome == Outcome::Equal) {
    v.outcome = Outcome::Refuted;
    v.note = "fails: sides are equal (" + v.note + ")";
  }
  return v;
}

}  // namespace sgcert::certified
