#include "sgcert/groups.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "sgcert/factorization.hpp"
#include "sgcert/sgbound.hpp"

namespace sgcert::groups {
namespace {

using certified::Expr;
using certified::Outcome;
using json = nlohmann::json;

std::string position(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void require_order(std::size_t n, const char* where) {
  if (n == 0) throw std::invalid_argument(std::string(where) + ": order must be positive");
  if (n > kConstructionCap) {
    throw std::invalid_argument(std::string(where) + ": order " + std::to_string(n) + " exceeds the construction cap " +
                                std::to_string(kConstructionCap));
  }
}

template <typename Mul>
std::vector<Element> build_table(std::size_t n, Mul mul) {
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>(mul(i, j));
  }
  return t;
}

// Permutations of {0..n-1}, optionally only even ones, under composition.
GroupTable permutation_group(std::string name, unsigned n, bool even_only) {
  if (n < 1 || n > 5) throw std::invalid_argument(name + ": degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::size_t inversions = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  auto table = build_table(perms.size(), [&](std::size_t i, std::size_t j) {
    std::vector<int> c(n);
    for (unsigned k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
    return index.at(c);
  });
  return GroupTable(std::move(name), perms.size(), std::move(table));
}

class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool operator==(const Bits&) const = default;
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

struct Generated {
  Bits bits;
  std::vector<Element> elements;
  std::vector<Element> gens;
};

// Subgroup generated by `gens`, grown from a known subgroup (possibly empty).
Generated closure(const GroupTable& g, const Generated* base, std::vector<Element> gens) {
  Generated out{base ? base->bits : Bits(g.order()), {}, std::move(gens)};
  if (base) {
    out.elements = base->elements;
  } else {
    out.bits.set(g.identity());
    out.elements.push_back(g.identity());
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const Element x = out.elements[i];
    for (Element s : out.gens) {
      const Element y = g.mul(x, s);
      if (!out.bits.test(y)) {
        out.bits.set(y);
        out.elements.push_back(y);
      }
    }
  }
  return out;
}

bool is_elementary_abelian(const GroupTable& g) {
  if (g.order() == 1 || !g.is_abelian()) return false;
  const auto fact = factorize(g.order());
  return fact.length() == 1 && g.exponent() == fact.pairs()[0].prime;
}

}  // namespace

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<Element> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  const std::size_t n = order_;
  if (n == 0) throw std::invalid_argument(name_ + ": order must be positive");
  if (table_.size() != n * n) {
    throw std::invalid_argument(name_ + ": table has " + std::to_string(table_.size()) + " entries, expected " +
                                std::to_string(n * n));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table_[i] >= n) throw std::invalid_argument(name_ + ": entry " + position(i / n, i % n) + " out of range");
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i * n + j]]++) throw std::invalid_argument(name_ + ": row " + std::to_string(i) + " repeats an element");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[j * n + i]]++) throw std::invalid_argument(name_ + ": column " + std::to_string(i) + " repeats an element");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e * n + x] == x && table_[x * n + e] == x;
    if (ok) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument(name_ + ": no identity element");

  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
      throw std::invalid_argument(name_ + ": not associative at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                  std::to_string(z) + ")");
    }
  };
  if (n <= kExhaustiveAssociativity) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) check(x, y, z);
      }
    }
    policy_ = "exhaustive";
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < kRandomTriples; ++t) check(pick(rng), pick(rng), pick(rng));
    policy_ = "random:" + std::to_string(kRandomTriples);
  }

  inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(x, y) == identity_) {
        inverse_[x] = static_cast<Element>(y);
        break;
      }
    }
  }
}

bool GroupTable::is_abelian() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if (table_[i * order_ + j] != table_[j * order_ + i]) return false;
    }
  }
  return true;
}

std::size_t GroupTable::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (std::size_t x = 0; x < order_; ++x) e = std::lcm(e, element_order(static_cast<Element>(x)));
  return e;
}

std::size_t GroupTable::center_size() const {
  std::size_t count = 0;
  for (std::size_t z = 0; z < order_; ++z) {
    bool central = true;
    for (std::size_t x = 0; x < order_ && central; ++x) central = table_[z * order_ + x] == table_[x * order_ + z];
    count += central;
  }
  return count;
}

GroupTable cyclic(std::size_t n) {
  require_order(n, "cyclic");
  return GroupTable("C" + std::to_string(n), n, build_table(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }));
}

GroupTable dihedral(std::size_t order) {
  require_order(order, "dihedral");
  if (order % 2 != 0) throw std::invalid_argument("dihedral: order must be even");
  const std::size_t m = order / 2;
  // r^i s^a is stored at i + a m.
  auto table = build_table(order, [m](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, a = x / m, k = y % m, b = y / m;
    const std::size_t rot = a == 0 ? (i + k) % m : (i + m - k) % m;
    return rot + ((a + b) % 2) * m;
  });
  return GroupTable("D" + std::to_string(order), order, std::move(table));
}

GroupTable elementary_abelian(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    require_order(n, "elementary_abelian");
  }
  auto table = build_table(n, [p, k](std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      out += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return out;
  });
  return GroupTable("E" + std::to_string(p) + "^" + std::to_string(k), n, std::move(table));
}

GroupTable symmetric(unsigned n) { return permutation_group("S" + std::to_string(n), n, false); }
GroupTable alternating(unsigned n) { return permutation_group("A" + std::to_string(n), n, true); }

GroupTable dicyclic(std::size_t order) {
  require_order(order, "dicyclic");
  if (order % 4 != 0) throw std::invalid_argument("dicyclic: order must be divisible by 4");
  const std::size_t m = order / 4, n = 2 * m;
  // a^i x^j is stored at i + j n.
  auto table = build_table(order, [m, n](std::size_t u, std::size_t v) {
    const std::size_t i = u % n, j = u / n, k = v % n, l = v / n;
    if (j == 0) return (i + k) % n + l * n;
    if (l == 0) return (i + n - k) % n + n;
    return (i + n - k + m) % n;
  });
  return GroupTable("Dic" + std::to_string(order), order, std::move(table));
}

GroupTable quaternion8() {
  const GroupTable q = dicyclic(8);
  return GroupTable("Q8", 8, q.table());
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t a = g.order(), b = h.order();
  require_order(a * b, "direct_product");
  auto table = build_table(a * b, [&](std::size_t x, std::size_t y) {
    return g.mul(static_cast<Element>(x / b), static_cast<Element>(y / b)) * b +
           h.mul(static_cast<Element>(x % b), static_cast<Element>(y % b));
  });
  return GroupTable(g.name() + "x" + h.name(), a * b, std::move(table));
}

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message),
      line(line_),
      column(column_) {}

GroupTable parse_cayley(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::string name = "group";
  std::optional<std::size_t> order;
  bool in_table = false;
  std::vector<Element> table;
  std::size_t rows = 0;
  std::size_t last_line = 0;

  auto trim_start = [](const std::string& s) { return s.find_first_not_of(" \t\r"); };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto start = trim_start(line);
    if (start == std::string::npos) continue;
    last_line = line_no;

    if (!in_table) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError(line_no, start + 1, "expected 'key: value'");
      std::string key = line.substr(start, colon - start);
      while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
      const auto value_start = line.find_first_not_of(" \t\r", colon + 1);
      const std::string value = value_start == std::string::npos ? "" : line.substr(value_start);
      const std::size_t value_col = (value_start == std::string::npos ? colon + 1 : value_start) + 1;
      if (key == "name") {
        if (value.empty()) throw ParseError(line_no, value_col, "empty name");
        name = value;
        while (!name.empty() && (name.back() == ' ' || name.back() == '\r')) name.pop_back();
      } else if (key == "order") {
        std::size_t used = 0;
        unsigned long long n = 0;
        try {
          n = std::stoull(value, &used);
        } catch (const std::exception&) {
          throw ParseError(line_no, value_col, "order must be a positive integer");
        }
        if (value.find_first_not_of(" \t\r", used) != std::string::npos || n == 0) {
          throw ParseError(line_no, value_col, "order must be a positive integer");
        }
        if (n > kConstructionCap) throw ParseError(line_no, value_col, "order exceeds the construction cap");
        order = n;
      } else if (key == "table") {
        if (!value.empty()) throw ParseError(line_no, value_col, "table rows start on the next line");
        if (!order) throw ParseError(line_no, start + 1, "'order' must precede 'table'");
        in_table = true;
      } else {
        throw ParseError(line_no, start + 1, "unknown key '" + key + "'");
      }
      continue;
    }

    if (rows == *order) throw ParseError(line_no, start + 1, "more than " + std::to_string(*order) + " table rows");
    std::size_t col = 0, pos = start;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      const auto end = line.find_first_of(" \t\r", pos);
      const std::string token = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
        throw ParseError(line_no, pos + 1, "invalid entry '" + token + "'");
      }
      const std::size_t v = std::stoul(token);
      if (v >= *order) throw ParseError(line_no, pos + 1, "entry " + token + " is not below the order");
      if (col == *order) throw ParseError(line_no, pos + 1, "row has more than " + std::to_string(*order) + " entries");
      table.push_back(static_cast<Element>(v));
      ++col;
      pos = end == std::string::npos ? line.size() : end;
    }
    if (col != *order) {
      throw ParseError(line_no, line.size() + 1,
                       "row has " + std::to_string(col) + " entries, expected " + std::to_string(*order));
    }
    ++rows;
  }
  if (!order) throw ParseError(line_no + 1, 1, "missing 'order'");
  if (!in_table) throw ParseError(line_no + 1, 1, "missing 'table'");
  if (rows != *order) {
    throw ParseError(last_line + 1, 1, "table has " + std::to_string(rows) + " rows, expected " + std::to_string(*order));
  }
  return GroupTable(name, *order, std::move(table));
}

GroupTable load_cayley(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_cayley(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.column, path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

namespace {

std::size_t parse_number(const std::string& s, const std::string& spec) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
    throw std::invalid_argument("group spec '" + spec + "': expected a number, got '" + s + "'");
  }
  return std::stoul(s);
}

GroupTable factor_from_spec(const std::string& f, const std::string& spec) {
  auto starts = [&](const char* prefix) { return f.rfind(prefix, 0) == 0; };
  if (starts("Dic")) return dicyclic(parse_number(f.substr(3), spec));
  if (starts("C")) return cyclic(parse_number(f.substr(1), spec));
  if (starts("D")) return dihedral(parse_number(f.substr(1), spec));
  if (starts("S")) return symmetric(static_cast<unsigned>(parse_number(f.substr(1), spec)));
  if (starts("A")) return alternating(static_cast<unsigned>(parse_number(f.substr(1), spec)));
  if (starts("E")) {
    const auto caret = f.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("group spec '" + spec + "': expected E<p>^<k>");
    return elementary_abelian(parse_number(f.substr(1, caret - 1), spec),
                              static_cast<unsigned>(parse_number(f.substr(caret + 1), spec)));
  }
  if (starts("Q")) {
    const std::size_t n = parse_number(f.substr(1), spec);
    if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("group spec '" + spec + "': Q<n> needs n = 2^k >= 8");
    const GroupTable q = dicyclic(n);
    return GroupTable("Q" + std::to_string(n), n, q.table());
  }
  throw std::invalid_argument("group spec '" + spec + "': unknown factor '" + f + "'");
}

}  // namespace

GroupTable from_spec(const std::string& spec) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    const auto x = spec.find('x', start);
    factors.push_back(spec.substr(start, x == std::string::npos ? std::string::npos : x - start));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  GroupTable g = factor_from_spec(factors[0], spec);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factor_from_spec(factors[i], spec));
  return g;
}

TooManySubgroups::TooManySubgroups(const std::string& group, const mpz_class& bound, std::size_t cap)
    : std::runtime_error(group + ": at least " + bound.get_str() + " subgroups, above the cap " + std::to_string(cap)),
      lower_bound(bound) {}

mpz_class subgroup_lower_bound(const GroupTable& g) {
  mpz_class best(1);
  if (g.order() == 1) return best;
  std::vector<Element> center;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) center.push_back(static_cast<Element>(z));
  }
  const Factorization fact = factorize(g.order());
  for (const auto& pp : fact.pairs()) {
    // {z in Z(G) : z^p = 1} is elementary abelian of order p^k.
    std::size_t size = 0;
    for (Element z : center) {
      Element y = g.identity();
      for (std::uint64_t i = 0; i < pp.prime; ++i) y = g.mul(y, z);
      size += y == g.identity();
    }
    unsigned k = 0;
    while (size > 1) {
      size /= pp.prime;
      ++k;
    }
    best = std::max(best, sgbound::subgroup_sum(k, pp.prime));
  }
  return best;
}

bool is_subgroup(const GroupTable& g, const std::vector<Element>& elements) {
  if (elements.empty()) return false;
  Bits in(g.order());
  for (Element x : elements) {
    if (x >= g.order()) return false;
    in.set(x);
  }
  if (!in.test(g.identity())) return false;
  for (Element x : elements) {
    if (!in.test(g.inverse(x))) return false;
    for (Element y : elements) {
      if (!in.test(g.mul(x, y))) return false;
    }
  }
  return true;
}

SubgroupLattice enumerate_subgroups(const GroupTable& g, std::size_t cap) {
  if (g.order() > kMaxEnumerationOrder && !is_elementary_abelian(g)) {
    throw std::domain_error(g.name() + ": enumeration is limited to order " + std::to_string(kMaxEnumerationOrder) +
                            " unless elementary abelian");
  }
  const mpz_class bound = subgroup_lower_bound(g);
  if (bound > cap) throw TooManySubgroups(g.name(), bound, cap);

  const std::size_t n = g.order();
  std::vector<Generated> found;
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  SubgroupLattice out;
  auto add = [&](Generated&& s) {
    if (index.count(s.bits)) return;
    if (found.size() >= cap) {
      out.partial = true;
      return;
    }
    index.emplace(s.bits, found.size());
    found.push_back(std::move(s));
  };

  for (std::size_t x = 0; x < n && !out.partial; ++x) {
    add(closure(g, nullptr, x == g.identity() ? std::vector<Element>{} : std::vector<Element>{static_cast<Element>(x)}));
  }
  for (std::size_t i = 0; i < found.size() && !out.partial; ++i) {
    if (found[i].elements.size() == n) continue;
    // <H, g> = <H, h g> for h in H, so one element per right coset suffices.
    Bits done = found[i].bits;
    for (std::size_t x = 0; x < n && !out.partial; ++x) {
      if (done.test(x)) continue;
      const Generated& h = found[i];
      for (Element e : h.elements) done.set(g.mul(e, static_cast<Element>(x)));
      std::vector<Element> gens = h.gens;
      gens.push_back(static_cast<Element>(x));
      Generated joined = closure(g, &h, std::move(gens));
      add(std::move(joined));
    }
  }

  out.subgroups.reserve(found.size());
  for (auto& s : found) {
    std::sort(s.elements.begin(), s.elements.end());
    out.subgroups.push_back(Subgroup{std::move(s.elements)});
  }
  std::sort(out.subgroups.begin(), out.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return out;
}

SylowCensus sylow_census(const GroupTable& g, std::uint64_t p, const SubgroupLattice& lattice) {
  if (!is_prime(p) || g.order() % p != 0) {
    throw std::invalid_argument("sylow_census: " + std::to_string(p) + " is not a prime dividing " + std::to_string(g.order()));
  }
  SylowCensus c;
  c.p = p;
  c.sylow_order = 1;
  while (g.order() % (c.sylow_order * p) == 0) c.sylow_order *= p;
  for (const auto& s : lattice.subgroups) c.count += s.order() == c.sylow_order;
  c.within_index = c.count <= g.order() / c.sylow_order;
  c.congruent = c.count % p == 1;
  return c;
}

SylowCensus sylow_census(const GroupTable& g, std::uint64_t p) { return sylow_census(g, p, enumerate_subgroups(g)); }

TheoremCheck check_theorem(const GroupTable& g, const certified::CompareOptions& options, std::size_t cap) {
  Stopwatch clock;
  const SubgroupLattice lattice = enumerate_subgroups(g, cap);
  TheoremCheck t{g.name(), g.order(), lattice.subgroups.size(), lattice.partial,
                 certified::CertReal::from_integer(1, 64), mpz_class(1), std::nullopt, {}, {}, {}, {}};
  const std::uint64_t r = g.order();
  const Expr count = Expr::integer(static_cast<long>(t.count));
  const Expr f = r >= 2 ? sgbound::f_expr(factorize(r)) : Expr::integer(1);
  // B(1) = 7.3722 * 1^(0 + 1.5315).
  const Expr b = r >= 2 ? sgbound::B_expr(r) : Expr::rational(sgbound::bound_coefficient());
  t.f_bound = f.evaluate(128);
  t.trivial_bound = r >= 2 ? sgbound::trivial_bound(r) : mpz_class(1);
  t.b_bound = b.evaluate(128);
  t.le_f = certified::certify_le(count, f, options);
  t.le_trivial = certified::certify_le(count, Expr::integer(t.trivial_bound), options);
  t.le_b = certified::certify_le(count, b, options);

  Certificate& cert = t.certificate;
  cert.claim_id = "group." + g.name();
  cert.outcome = Outcome::Verified;
  absorb(cert, t.le_f);
  absorb(cert, t.le_trivial);
  absorb(cert, t.le_b);
  if (t.partial) cert.outcome = worst(cert.outcome, Outcome::Undetermined);
  json sylow = json::array();
  if (!t.partial && r >= 2) {
    const Factorization fact = factorize(r);
    for (const auto& pp : fact.pairs()) {
      const SylowCensus s = sylow_census(g, pp.prime, lattice);
      if (!s.within_index || !s.congruent) cert.outcome = Outcome::Refuted;
      sylow.push_back({{"p", s.p}, {"sylow_order", s.sylow_order}, {"count", s.count},
                       {"within_index", s.within_index}, {"congruent", s.congruent}});
    }
  }
  cert.detail = {{"order", t.order},
                 {"subgroups", t.count},
                 {"partial", t.partial},
                 {"abelian", g.is_abelian()},
                 {"associativity", g.associativity_policy()},
                 {"f", interval_json(t.f_bound)},
                 {"trivial_bound", t.trivial_bound.get_str()},
                 {"B", interval_json(*t.b_bound)},
                 {"count_le_f", verdict_json(t.le_f)},
                 {"count_le_trivial", verdict_json(t.le_trivial)},
                 {"count_le_B", verdict_json(t.le_b)},
                 {"sylow", sylow}};
  cert.elapsed_ms = clock.elapsed_ms();
  return t;
}

std::vector<std::string> small_group_specs() {
  return {"C1",  "C2",  "C3",   "C4",   "E2^2", "C5",  "C6",  "S3",  "C7",   "C8",
          "C4xC2", "E2^3", "D8", "Q8",  "C9",   "E3^2", "C10", "D10", "C11", "C12",
          "C2xC6", "D12", "A4", "Dic12", "C13", "C14",  "D14", "C15"};
}

std::vector<std::string> standard_suite(std::size_t max_order) {
  std::vector<std::string> out = small_group_specs();
  const std::vector<std::pair<std::string, std::size_t>> larger = {
      {"E2^4", 16},   {"C4xC4", 16},  {"D16", 16},    {"Q16", 16},     {"C2xQ8", 16},  {"C2xD8", 16},
      {"S4", 24},     {"E3^3", 27},   {"E2^5", 32},   {"Q32", 32},     {"S3xS3", 36},  {"C3xA4", 36},
      {"C2xS4", 48},  {"E2^4xC3", 48}, {"A5", 60},    {"E2^6", 64},    {"C3xS4", 72},  {"E3^4", 81},
      {"S5", 120},    {"E5^3", 125},  {"D128", 128},  {"C128", 128},   {"E2^7", 128},  {"C200", 200},
      {"D200", 200},  {"D256", 256},  {"E7^3", 343},  {"C512", 512},   {"D512", 512},  {"Dic512", 512},
  };
  for (const auto& [spec, order] : larger) {
    if (order <= max_order) out.push_back(spec);
  }
  return out;
}

}  // namespace sgcert::groups
