#include <algorithm>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "sgcert/factorization.hpp"
#include "sgcert/groups.hpp"
#include "sgcert/sgbound.hpp"

using namespace sgcert;
using namespace sgcert::groups;
using certified::Outcome;

namespace {

// Every subset of a group of order <= 16 tested for closure.
std::size_t count_by_subsets(const GroupTable& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      for (std::size_t y = 0; y < n && closed; ++y)
        if ((mask >> y & 1) && !(mask >> g.mul(x, y) & 1)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

std::set<Element> close(const GroupTable& g, std::set<Element> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> items(s.begin(), s.end());
    for (auto x : items)
      for (auto y : items)
        if (s.insert(g.mul(x, y)).second) grew = true;
  }
  return s;
}

// Joins every known subgroup with every element until nothing new appears.
std::size_t count_by_joins(const GroupTable& g) {
  std::set<std::set<Element>> seen{{g.identity()}};
  std::vector<std::set<Element>> frontier{{g.identity()}};
  while (!frontier.empty()) {
    std::vector<std::set<Element>> next;
    for (const auto& h : frontier) {
      for (Element x = 0; x < g.order(); ++x) {
        if (h.count(x)) continue;
        auto grown = h;
        grown.insert(x);
        auto closed = close(g, grown);
        if (seen.insert(closed).second) next.push_back(closed);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::size_t count(const GroupTable& g) { return enumerate_subgroups(g).subgroups.size(); }

}  // namespace

TEST(GroupTable, Constructions)
{
	auto trivial = cyclic(1);
	EXPECT_EQ(trivial.order(), 1u);
	EXPECT_EQ(count(trivial), 1u);

	auto e = elementary_abelian(2, 3);
	EXPECT_EQ(e.order(), 8u);
	EXPECT_TRUE(e.is_abelian());
	EXPECT_EQ(e.exponent(), 2u);

	auto d = dihedral(12);
	EXPECT_EQ(d.order(), 12u);
	EXPECT_FALSE(d.is_abelian());
	EXPECT_EQ(d.center_size(), 2u);
	std::size_t involutions = 0;
	for (Element x = 0; x < d.order(); ++x)
		if (d.element_order(x) == 2) ++involutions;
	EXPECT_EQ(involutions, 7u);
	EXPECT_EQ(dihedral(10).center_size(), 1u);

	EXPECT_EQ(symmetric(4).order(), 24u);
	EXPECT_EQ(alternating(4).order(), 12u);
	EXPECT_EQ(alternating(5).center_size(), 1u);
	EXPECT_EQ(quaternion8().exponent(), 4u);
	EXPECT_EQ(quaternion8().center_size(), 2u);
	EXPECT_EQ(dicyclic(12).order(), 12u);
	EXPECT_EQ(direct_product(cyclic(2), symmetric(3)).order(), 12u);
	EXPECT_EQ(cyclic(12).exponent(), 12u);
}

TEST(GroupTable, InvalidConstructions)
{
	EXPECT_THROW(dihedral(7), std::invalid_argument);
	EXPECT_THROW(cyclic(0), std::invalid_argument);
	EXPECT_THROW(elementary_abelian(4, 2), std::invalid_argument);
	EXPECT_THROW(dicyclic(10), std::invalid_argument);
}

TEST(GroupTable, RejectsDefectiveTables)
{
	// not a Latin square
	EXPECT_THROW(GroupTable("bad", 2, {0, 1, 1, 1}), std::invalid_argument);
	// entry out of range
	EXPECT_THROW(GroupTable("bad", 2, {0, 1, 1, 2}), std::invalid_argument);
	// wrong size
	EXPECT_THROW(GroupTable("bad", 2, {0, 1, 1}), std::invalid_argument);
	// Latin square without associativity: the loop x*y = 2x - y mod 3
	EXPECT_THROW(GroupTable("bad", 3, {0, 2, 1, 2, 1, 0, 1, 0, 2}), std::invalid_argument);
	EXPECT_EQ(GroupTable("ok", 2, {0, 1, 1, 0}).associativity_policy(), "exhaustive");
}

TEST(GroupTable, LargeTablesSampleAssociativity)
{
	EXPECT_EQ(cyclic(128).associativity_policy(), "exhaustive");
	EXPECT_EQ(cyclic(200).associativity_policy(), "random:10000");
}

TEST(FromSpec, Names)
{
	EXPECT_EQ(from_spec("C12").order(), 12u);
	EXPECT_EQ(from_spec("E2^4").order(), 16u);
	EXPECT_EQ(from_spec("C2xS3").order(), 12u);
	EXPECT_EQ(from_spec("Q16").order(), 16u);
	EXPECT_EQ(from_spec("Dic12").order(), 12u);
	EXPECT_THROW(from_spec("Z12"), std::invalid_argument);
	EXPECT_THROW(from_spec("C"), std::invalid_argument);
}

TEST(CayleyParser, ParsesWithComments)
{
	auto g = parse_cayley("# Klein four\nname: V4\norder: 4\ntable:\n0 1 2 3\n1 0 3 2\n2 3 0 1  # row 3\n3 2 1 0\n");
	EXPECT_EQ(g.name(), "V4");
	EXPECT_EQ(g.order(), 4u);
	EXPECT_EQ(count(g), 5u);
}

TEST(CayleyParser, ReportsPosition)
{
	auto expect_at = [](const std::string& text, std::size_t line, std::size_t column) {
		try {
			parse_cayley(text);
			ADD_FAILURE() << "accepted:\n" << text;
		} catch (const ParseError& e) {
			EXPECT_EQ(e.line, line) << e.what();
			EXPECT_EQ(e.column, column) << e.what();
		}
	};
	expect_at("order: 2\ntable:\n0 1\n1 x\n", 4, 3);
	expect_at("order: 2\ntable:\n0 1\n1 0 1\n", 4, 5);
	expect_at("table:\n0\n", 1, 1);
	expect_at("order: 2\ntable:\n0 1\n", 4, 1);
	expect_at("order: two\n", 1, 8);
}

TEST(CayleyParser, DefectiveGroupIsNotAParseError)
{
	EXPECT_THROW(parse_cayley("order: 2\ntable:\n0 1\n1 1\n"), std::invalid_argument);
	EXPECT_THROW(load_cayley("/nonexistent/table.txt"), std::runtime_error);
}

TEST(CayleyParser, LoadsFile)
{
	const std::string path = testing::TempDir() + "/s3.txt";
	{
		auto s3 = symmetric(3);
		std::ofstream out(path);
		out << "name: S3file\norder: 6\ntable:\n";
		for (Element x = 0; x < 6; ++x) {
			for (Element y = 0; y < 6; ++y) out << s3.mul(x, y) << (y + 1 < 6 ? " " : "\n");
		}
	}
	auto g = load_cayley(path);
	EXPECT_EQ(g.name(), "S3file");
	EXPECT_EQ(count(g), 6u);
}

TEST(Subgroups, CyclicMatchesDivisorCount)
{
	for (std::size_t n = 1; n <= 200; ++n) EXPECT_EQ(count(cyclic(n)), divisor_count(n)) << n;
}

TEST(Subgroups, ElementaryAbelianMatchesGaussianSum)
{
	for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(mpz_class(static_cast<unsigned long>(count(elementary_abelian(2, k)))), sgbound::subgroup_sum(k, 2)) << k;
	for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(mpz_class(static_cast<unsigned long>(count(elementary_abelian(3, k)))), sgbound::subgroup_sum(k, 3)) << k;
	EXPECT_EQ(count(elementary_abelian(2, 6)), 2825u);
	EXPECT_EQ(count(elementary_abelian(2, 4)), 67u);
}

TEST(Subgroups, SubsetOracleOnSmallGroups)
{
	for (const auto& spec : small_group_specs()) {
		auto g = from_spec(spec);
		EXPECT_EQ(count(g), count_by_subsets(g)) << spec;
	}
	for (const char* spec : {"E2^4", "C4xC4", "D16", "Q16", "C2xQ8", "C2xD8"}) {
		auto g = from_spec(spec);
		EXPECT_EQ(count(g), count_by_subsets(g)) << spec;
	}
}

TEST(Subgroups, JoinOracle)
{
	EXPECT_EQ(count_by_joins(symmetric(4)), 30u);
	for (const char* spec : {"S4", "E3^3", "C3xA4", "S3xS3", "Q32", "C2xS4"}) {
		auto g = from_spec(spec);
		EXPECT_EQ(count(g), count_by_joins(g)) << spec;
	}
}

TEST(Subgroups, KnownCounts)
{
	EXPECT_EQ(count(symmetric(4)), 30u);
	EXPECT_EQ(count(alternating(4)), 10u);
	EXPECT_EQ(count(alternating(5)), 59u);
	EXPECT_EQ(count(symmetric(5)), 156u);
	EXPECT_EQ(count(quaternion8()), 6u);
	EXPECT_EQ(count(dihedral(8)), 10u);
	EXPECT_EQ(count(cyclic(12)), 6u);
}

TEST(Subgroups, ClosureAndLagrange)
{
	for (const char* spec : {"S4", "A5", "D12", "Dic12", "C2xS3"}) {
		auto g = from_spec(spec);
		auto lattice = enumerate_subgroups(g);
		EXPECT_FALSE(lattice.partial);
		for (const auto& h : lattice.subgroups) {
			EXPECT_TRUE(is_subgroup(g, h.elements)) << spec;
			EXPECT_EQ(g.order() % h.order(), 0u) << spec;
			EXPECT_TRUE(std::is_sorted(h.elements.begin(), h.elements.end()));
		}
		auto sorted = lattice.subgroups;
		std::sort(sorted.begin(), sorted.end(), [](const Subgroup& a, const Subgroup& b) {
			return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
		});
		EXPECT_EQ(sorted, lattice.subgroups);
	}
	auto s3 = symmetric(3);
	for (Element x = 0; x < s3.order(); ++x) {
		if (s3.element_order(x) != 3) continue;
		std::vector<Element> pair{s3.identity(), x};
		std::sort(pair.begin(), pair.end());
		EXPECT_FALSE(is_subgroup(s3, pair));
	}
}

TEST(Subgroups, DirectProductAtLeastProductOfCounts)
{
	for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"S3", "C2"}, {"C4", "C6"}, {"Q8", "C3"}, {"S3", "S3"}}) {
		auto g = from_spec(a), h = from_spec(b);
		EXPECT_GE(count(direct_product(g, h)), count(g) * count(h)) << a << "x" << b;
	}
}

TEST(Subgroups, RefusesOverCap)
{
	auto big = elementary_abelian(2, 9);
	EXPECT_GE(subgroup_lower_bound(big), sgbound::subgroup_sum(9, 2));
	EXPECT_THROW(enumerate_subgroups(big, 100000), TooManySubgroups);
	auto small = elementary_abelian(2, 6);
	EXPECT_THROW(enumerate_subgroups(small, 1000), TooManySubgroups);
	EXPECT_THROW(enumerate_subgroups(cyclic(600)), std::domain_error);
}

TEST(Subgroups, PartialWhenCapReachedWithoutProof)
{
	auto lattice = enumerate_subgroups(symmetric(4), 10);
	EXPECT_TRUE(lattice.partial);
	EXPECT_LE(lattice.subgroups.size(), 10u);
}

TEST(Sylow, Examples)
{
	auto s4 = sylow_census(symmetric(4), 2);
	EXPECT_EQ(s4.count, 3u);
	EXPECT_EQ(s4.sylow_order, 8u);
	EXPECT_TRUE(s4.within_index);
	EXPECT_TRUE(s4.congruent);
	auto s4_3 = sylow_census(symmetric(4), 3);
	EXPECT_EQ(s4_3.count, 4u);
	EXPECT_TRUE(s4_3.congruent);
	EXPECT_EQ(sylow_census(cyclic(12), 2).count, 1u);
	EXPECT_EQ(sylow_census(alternating(5), 5).count, 6u);
	EXPECT_THROW(sylow_census(cyclic(12), 4), std::invalid_argument);
}

TEST(Theorem, Examples)
{
	auto s4 = check_theorem(symmetric(4));
	EXPECT_EQ(s4.count, 30u);
	EXPECT_EQ(s4.certificate.outcome, Outcome::Verified);
	EXPECT_TRUE(s4.f_bound.contains(mpq_class(768)));
	EXPECT_GT(s4.b_bound->lo_exact(), 36596);

	auto c2 = check_theorem(cyclic(2));
	EXPECT_EQ(c2.count, 2u);
	EXPECT_EQ(c2.certificate.outcome, Outcome::Verified);

	auto e = check_theorem(elementary_abelian(2, 6));
	EXPECT_EQ(e.count, 2825u);
	EXPECT_TRUE(e.le_b.verified());
	EXPECT_GT(e.b_bound->lo_exact(), 2203087);

	auto trivial = check_theorem(cyclic(1));
	EXPECT_EQ(trivial.count, 1u);
	EXPECT_EQ(trivial.certificate.outcome, Outcome::Verified);
}

TEST(Theorem, SuiteWithinBound)
{
	const auto specs = standard_suite(128);
	EXPECT_EQ(small_group_specs().size(), 28u);
	for (const auto& spec : specs) {
		auto t = check_theorem(from_spec(spec));
		EXPECT_EQ(t.certificate.outcome, Outcome::Verified) << spec << " " << t.certificate.detail.dump();
		EXPECT_LE(mpq_class(static_cast<unsigned long>(t.count)), t.trivial_bound) << spec;
	}
}

TEST(Theorem, SmallOrdersCoverEveryIsomorphismType)
{
	// Number of groups of order n, n = 1..15.
	const std::vector<std::size_t> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
	std::vector<std::size_t> seen(16, 0);
	std::set<std::pair<std::size_t, std::vector<std::size_t>>> invariants;
	for (const auto& spec : small_group_specs()) {
		auto g = from_spec(spec);
		++seen[g.order()];
		std::vector<std::size_t> orders;
		for (Element x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
		std::sort(orders.begin(), orders.end());
		orders.push_back(g.is_abelian());
		orders.push_back(count(g));
		EXPECT_TRUE(invariants.insert({g.order(), orders}).second) << spec << " duplicates another group";
	}
	for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(seen[n], expected[n - 1]) << n;
}
