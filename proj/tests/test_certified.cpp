#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sgcert/cert_real.hpp"
#include "sgcert/expr.hpp"

using namespace sgcert::certified;

namespace {

mpq_class q(long n, long d) {
  mpq_class out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace

TEST(CertReal, IntegersAreExactPoints)
{
	auto x = CertReal::from_integer(mpz_class("123456789012345678901234567890"), 64);
	EXPECT_TRUE(x.is_point());
	EXPECT_EQ(x.lo_exact(), mpq_class(mpz_class("123456789012345678901234567890")));
}

TEST(CertReal, RationalEnclosureContainsValue)
{
	for (int prec : {16, 64, 200}) {
		auto x = CertReal::from_rational(q(1, 3), prec);
		EXPECT_TRUE(x.contains(q(1, 3)));
		EXPECT_FALSE(x.is_point());
		EXPECT_LE(x.width(), mpq_class(1) / (mpz_class(1) << (prec - 1)));
	}
}

TEST(CertReal, RejectsReversedEndpoints)
{
	Dyadic lo(64), hi(64);
	mpfr_set_ui(lo.get(), 2, MPFR_RNDN);
	mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
	EXPECT_THROW(CertReal(lo, hi, 64), std::invalid_argument);
}

TEST(CertReal, ArithmeticContainsExactResult)
{
	auto a = CertReal::from_rational(q(1, 3), 64);
	auto b = CertReal::from_rational(q(-2, 7), 64);
	EXPECT_TRUE((a + b).contains(q(1, 3) + q(-2, 7)));
	EXPECT_TRUE((a - b).contains(q(1, 3) - q(-2, 7)));
	EXPECT_TRUE((a * b).contains(q(1, 3) * q(-2, 7)));
	EXPECT_TRUE((a / b).contains(q(1, 3) / q(-2, 7)));
	EXPECT_TRUE((-a).contains(q(-1, 3)));
}

TEST(CertReal, DivisionByIntervalContainingZeroThrows)
{
	auto z = CertReal::hull(q(-1, 10), q(1, 10), 64);
	EXPECT_THROW(CertReal::from_integer(1, 64) / z, std::domain_error);
}

TEST(CertReal, LogOfNonPositiveThrows)
{
	EXPECT_THROW(log2(CertReal::hull(q(-1, 2), q(1, 2), 64)), std::domain_error);
	EXPECT_THROW(log2_enclosure(0, 64), std::domain_error);
}

TEST(CertReal, Log2OfPowerOfTwoIsExact)
{
	auto x = log2_enclosure(mpz_class(1) << 100, 64);
	EXPECT_TRUE(x.is_point());
	EXPECT_EQ(x.lo_exact(), 100);
	EXPECT_TRUE(log2_enclosure(1, 64).is_point());
}

TEST(CertReal, Log2OfNineteen)
{
	// log2(19) = 4.24792751344358549379...
	auto x = log2_enclosure(19, 64);
	EXPECT_TRUE(x.contains(mpq_class("424792751344358549379/100000000000000000000")));
	EXPECT_EQ(x.lo_decimal(12), "4.24792751344");
	EXPECT_EQ(x.hi_decimal(12), "4.24792751345");
}

TEST(CertReal, WidthShrinksWithPrecision)
{
	mpq_class previous = -1;
	for (int prec = 32; prec <= 1024; prec *= 2) {
		auto x = log2_enclosure(mpz_class(1000003), prec);
		EXPECT_LE(x.width(), mpq_class(4) / (mpz_class(1) << prec));
		if (previous >= 0) EXPECT_LE(x.width() * 2, previous);
		previous = x.width();
	}
}

TEST(CertReal, HigherPrecisionEnclosuresIntersect)
{
	std::mt19937_64 rng(7);
	for (int i = 0; i < 200; ++i) {
		const unsigned long n = 2 + rng() % 100000;
		auto coarse = pow(CertReal::from_integer(n, 64), log2_enclosure(n, 64) / CertReal::from_integer(4, 64));
		auto fine = pow(CertReal::from_integer(n, 256), log2_enclosure(n, 256) / CertReal::from_integer(4, 256));
		EXPECT_FALSE(coarse.certainly_less(fine)) << n;
		EXPECT_FALSE(fine.certainly_less(coarse)) << n;
		EXPECT_LE(fine.width(), coarse.width()) << n;
	}
}

TEST(CertReal, DecimalRenderingIsDirected)
{
	auto x = CertReal::from_rational(q(2, 3), 128);
	EXPECT_EQ(x.lo_decimal(5), "0.66666");
	EXPECT_EQ(x.hi_decimal(5), "0.66667");
	auto big = CertReal::from_integer(mpz_class("1000000000000000000000000000000000"), 128);
	EXPECT_EQ(big.lo_decimal(3), "1.00e33");
}

TEST(CertReal, Pow2Overflow)
{
	auto huge = CertReal::from_integer(mpz_class(1) << 80, 64);
	EXPECT_THROW(pow2_enclosure(huge, 64), std::overflow_error);
}

TEST(Expr, ConstantFolding)
{
	auto e = Expr::integer(3) * Expr::rational(1, 6) + Expr::rational(1, 2);
	ASSERT_TRUE(e.exact());
	EXPECT_EQ(*e.exact(), 1);
	EXPECT_THROW(Expr::integer(1) / Expr::integer(0), std::invalid_argument);
}

TEST(Expr, LogOfPowerOfTwoSplits)
{
	// log2(24) = 3 + log2(3)
	auto e = Expr::log2(mpz_class(24)) - Expr::log2(mpz_class(3));
	ASSERT_TRUE(e.exact());
	EXPECT_EQ(*e.exact(), 3);
}

TEST(Expr, LikeTermsCollect)
{
	auto l3 = Expr::log2(mpz_class(3));
	auto e = l3 + l3 - Expr::integer(2) * l3;
	ASSERT_TRUE(e.exact());
	EXPECT_EQ(*e.exact(), 0);
}

TEST(Expr, PowerWithIntegerLogCoefficientsIsExact)
{
	// 16^(1 - log2(3)/2) = 16 / 9
	auto e = Expr::pow(Expr::integer(16), Expr::integer(1) - Expr::log2(mpz_class(3)) / Expr::integer(2));
	ASSERT_TRUE(e.exact());
	EXPECT_EQ(*e.exact(), q(16, 9));
	// log2(2^(1/3)) = 1/3
	auto f = Expr::log2(Expr::pow2(Expr::rational(1, 3)));
	ASSERT_TRUE(f.exact());
	EXPECT_EQ(*f.exact(), q(1, 3));
}

TEST(Expr, SameNormalFormSameKey)
{
	auto a = Expr::log2(mpz_class(5)) * Expr::integer(2) + Expr::integer(1);
	auto b = Expr::integer(1) + Expr::log2(mpz_class(5)) + Expr::log2(mpz_class(5));
	EXPECT_EQ(a.key(), b.key());
	EXPECT_NE(a.key(), Expr::log2(mpz_class(7)).key());
}

TEST(Expr, PowerOfNonPositiveBaseRejected)
{
	EXPECT_THROW(Expr::pow(Expr::integer(-2), Expr::rational(1, 2)), std::invalid_argument);
	EXPECT_THROW(Expr::log2(mpz_class(0)), std::invalid_argument);
}

TEST(Expr, EnclosedLeafRefines)
{
	int calls = 0;
	auto third = Expr::enclosed("third", [&calls](int prec) {
		++calls;
		return CertReal::from_rational(q(1, 3), prec);
	});
	auto v = certify_lt(third, Expr::rational(q(333334, 1000000)));
	EXPECT_TRUE(v.verified());
	EXPECT_GE(calls, 1);
}

TEST(CertifiedCompare, LemmaBaseCase)
{
	// 2 * 29 < 29^(log2(29)/4) ~ 59.71
	auto rhs = Expr::pow(Expr::integer(29), Expr::log2(mpz_class(29)) / Expr::integer(4));
	auto v = certified_compare(Expr::integer(58), rhs);
	EXPECT_EQ(v.outcome, Outcome::Verified);
	ASSERT_TRUE(v.rhs);
	EXPECT_TRUE(v.rhs->contains(mpq_class("59713897769/1000000000")) || v.rhs->lo_decimal(4) == "59.71");
}

TEST(CertifiedCompare, ExceptionAtTwentyThree)
{
	// 2 * 184 = 368 > 23^(log2(184)/4) ~ 364.13
	auto rhs = Expr::pow(Expr::integer(23), Expr::log2(mpz_class(184)) / Expr::integer(4));
	EXPECT_EQ(certified_compare(Expr::integer(368), rhs).outcome, Outcome::Refuted);
	EXPECT_EQ(certify_le(Expr::integer(368), rhs).outcome, Outcome::Refuted);
}

TEST(CertifiedCompare, ExactEqualityDetected)
{
	auto lhs = Expr::integer(3) * Expr::pow(Expr::integer(16), Expr::integer(1) - Expr::log2(mpz_class(3)) / Expr::integer(2));
	auto rhs = Expr::pow(Expr::integer(16), Expr::integer(1) - Expr::log2(mpz_class(3)) / Expr::integer(4));
	EXPECT_EQ(certified_compare(lhs, rhs).outcome, Outcome::Equal);
	EXPECT_TRUE(certify_le(lhs, rhs).verified());
	EXPECT_EQ(certify_lt(lhs, rhs).outcome, Outcome::Refuted);
	auto l5 = Expr::log2(mpz_class(5));
	EXPECT_EQ(certified_compare(l5, l5).outcome, Outcome::Equal);
}

TEST(CertifiedCompare, HiddenEqualityIsUndetermined)
{
	// Only powers of two are split out of a log2 argument, so log2(9) and
	// 2 log2(3) have different normal forms and the tie cannot be decided.
	auto a = Expr::log2(mpz_class(9));
	auto b = Expr::integer(2) * Expr::log2(mpz_class(3));
	EXPECT_EQ(certified_compare(a, b, CompareOptions{64, 256}).outcome, Outcome::Undetermined);
	auto c = Expr::pow2(Expr::log2(mpz_class(3)) * Expr::log2(mpz_class(3)));
	auto d = Expr::pow(Expr::integer(3), Expr::log2(mpz_class(3)));
	auto v = certified_compare(c, d, CompareOptions{64, 256});
	EXPECT_TRUE(v.outcome == Outcome::Equal || v.outcome == Outcome::Undetermined);
	EXPECT_NE(v.outcome, Outcome::Verified);
	EXPECT_NE(v.outcome, Outcome::Refuted);
}

TEST(CertifiedCompare, PrecisionEscalates)
{
	// 1 + 2^-300 vs 1 needs more than 256 bits.
	auto tiny = Expr::pow2(Expr::integer(-300));
	auto v = certified_compare(Expr::integer(1), Expr::integer(1) + tiny * Expr::log2(mpz_class(3)));
	EXPECT_EQ(v.outcome, Outcome::Verified);
	EXPECT_GT(v.prec_used, 256);
	auto capped = certified_compare(Expr::integer(1), Expr::integer(1) + tiny * Expr::log2(mpz_class(3)), CompareOptions{64, 128});
	EXPECT_EQ(capped.outcome, Outcome::Undetermined);
	EXPECT_LE(capped.prec_used, 128);
}

// Random comparisons between p^(log2(n)/k) and an integer near its value:
// the verdict must survive a 4x precision increase and agree with a long
// double evaluation whenever the gap is far above double rounding.
TEST(CertifiedCompare, RandomVerdictsStableUnderFourfoldPrecision)
{
	std::mt19937_64 rng(20240601);
	int decided = 0;
	for (int i = 0; i < 1000; ++i) {
		const long p = 2 + static_cast<long>(rng() % 60);
		const long n = 2 + static_cast<long>(rng() % 5000);
		const long k = 2 + static_cast<long>(rng() % 5);
		const long double approx = std::pow(static_cast<long double>(p), std::log2(static_cast<long double>(n)) / k);
		const long offset = static_cast<long>(rng() % 5) - 2;
		const mpz_class m = mpz_class(static_cast<long>(std::llround(approx))) + offset;
		auto lhs = Expr::integer(m);
		auto rhs = Expr::pow(Expr::integer(p), Expr::log2(mpz_class(n)) / Expr::integer(k));
		auto base = certified_compare(lhs, rhs, CompareOptions{64, 1024});
		auto fine = certified_compare(lhs, rhs, CompareOptions{256, 4096});
		EXPECT_EQ(base.outcome, fine.outcome) << p << " " << n << " " << k << " " << m.get_str();
		const long double gap = static_cast<long double>(m.get_d()) - approx;
		if (std::fabs(gap) > 1e-6L) {
			EXPECT_EQ(base.outcome, gap < 0 ? Outcome::Verified : Outcome::Refuted) << p << " " << n << " " << k;
			++decided;
		}
	}
	EXPECT_GT(decided, 900);
}

TEST(CertifiedCompare, VerdictSymmetry)
{
	std::mt19937_64 rng(99);
	for (int i = 0; i < 200; ++i) {
		auto a = Expr::log2(mpz_class(static_cast<unsigned long>(3 + rng() % 1000)));
		auto b = Expr::rational(static_cast<long>(rng() % 1000), 97);
		auto ab = certified_compare(a, b).outcome;
		auto ba = certified_compare(b, a).outcome;
		if (ab == Outcome::Verified) EXPECT_EQ(ba, Outcome::Refuted);
		if (ab == Outcome::Refuted) EXPECT_EQ(ba, Outcome::Verified);
		if (ab == Outcome::Equal) EXPECT_EQ(ba, Outcome::Equal);
	}
}
