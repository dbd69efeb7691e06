#include "imverma/verma.hpp"
#include "oracles.hpp"

#include <fmt/format.h>
#include <gtest/gtest.h>

#include <random>

using namespace imverma;
using Rows = std::vector<std::vector<int>>;

namespace {

Weight uniform_weight(int rank, Rational v, Rational c = 0, Rational d = 0)
{
	return Weight{std::vector<Rational>(rank, v), c, d};
}

ModuleVector mono(VermaModule const &m, std::string const &text)
{
	ModuleVector v;
	v.add(m.parse_monomial(text), 1);
	return v;
}

LoopElement random_generator(AffineAlgebra const &a, std::mt19937 &rng, int max_degree)
{
	std::uniform_int_distribution<int> pick(0, a.finite().dimension() + 1);
	std::uniform_int_distribution<int> deg(-max_degree, max_degree);
	int b = pick(rng);
	if (b == a.finite().dimension())
		return a.c();
	if (b == a.finite().dimension() + 1)
		return a.d();
	return a.loop(b, deg(rng));
}

ModuleVector random_vector(VermaModule const &m, std::vector<Monomial> const &basis, std::mt19937 &rng)
{
	std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
	std::uniform_int_distribution<int> coef(-3, 3);
	ModuleVector v;
	for (int t = 0; t < 2; ++t)
		v.add(basis[pick(rng)], Rational(coef(rng)) / 2);
	if (v.is_zero())
		v = m.highest_weight_vector();
	return v;
}

} // namespace

TEST(Weight, ParseAndAdmissibility)
{
	auto w = parse_weight("h1=-1/2, d=3", 2);
	EXPECT_EQ(w.h, (std::vector<Rational>{Rational(-1, 2), 0}));
	EXPECT_EQ(w.d, 3);
	EXPECT_FALSE(w.is_reduced_admissible()); // h2 = 0
	EXPECT_TRUE(parse_weight("h1=-1/2,h2=-3", 2).is_reduced_admissible());
	EXPECT_FALSE(parse_weight("h1=-1/2,h2=-3,c=1", 2).is_reduced_admissible());
	EXPECT_FALSE(parse_weight("h1=2", 1).is_reduced_admissible());
	EXPECT_THROW(parse_weight("h3=1", 2), DomainError);
	EXPECT_THROW(parse_weight("q=1", 2), DomainError);
	EXPECT_THROW(parse_weight("h1=1/0", 2), DomainError);
	EXPECT_THROW(parse_weight("h1=1,h1=2", 2), DomainError);
	EXPECT_EQ(parse_weight(w.to_string(), 2), w);
}

TEST(WeightDims, Examples)
{
	AffineAlgebra a1(CartanMatrix::from_label("A1"));
	AffineAlgebra a2(CartanMatrix::from_label("A2"));
	TruncationWindow w{8, 6, 4};
	auto l1 = uniform_weight(1, Rational(-1, 2));
	EXPECT_EQ(verma_weight_dim(a1, l1, {0, {0}}, w), 1);
	EXPECT_EQ(verma_weight_dim(a1, l1, {2, {0}}, w), 2);
	EXPECT_EQ(verma_weight_dim(a2, uniform_weight(2, Rational(-1, 2)), {2, {0, 0}}, w), 5);
	EXPECT_EQ(reduced_weight_dim(a1, l1, {3, {0}}, w), 0);
	EXPECT_EQ(reduced_weight_dim(a1, l1, {std::nullopt, {1}}, w), 2 * w.N + 1);
	EXPECT_EQ(reduced_weight_dim(a1, l1, {0, {0}}, w), 1);
	EXPECT_EQ(reduced_weight_dim(a1, l1, {0, {-1}}, w), 0);
	EXPECT_THROW(reduced_weight_dim(a1, l1, {0, {5}}, w), DomainError);
}

TEST(WeightDims, DeltaStringIsColoredPartitions)
{
	TruncationWindow w{8, 8, 4};
	for (auto label : {"A1", "A2", "C2", "A3"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		auto expected = oracle::colored_partitions(a.rank(), 8);
		VermaModule m(a, uniform_weight(a.rank(), Rational(-1, 2)), VermaKind::Imaginary);
		for (int k = 0; k <= 8; ++k)
		{
			WeightOffset o{k, RootVec(a.rank(), 0)};
			EXPECT_EQ(m.weight_dim(o, w), expected[k]) << label << " k=" << k;
			EXPECT_EQ(m.weight_space(o, w).size(), expected[k]) << label << " k=" << k;
		}
	}
}

TEST(WeightDims, CountMatchesEnumeration)
{
	AffineAlgebra a(CartanMatrix::from_label("A2"));
	TruncationWindow w{4, 2, 3};
	for (auto kind : {VermaKind::Imaginary, VermaKind::Reduced})
	{
		VermaModule m(a, uniform_weight(2, Rational(-1, 3)), kind);
		std::map<WeightOffset, int> by_offset;
		for (auto const &mono : m.enumerate(w))
			++by_offset[m.offset_of(mono)];
		for (auto const &[o, n] : by_offset)
		{
			// enumerate caps total height, weight_space caps only the target offset
			EXPECT_EQ(m.weight_dim(o, w), n) << o.to_string();
			EXPECT_EQ(m.weight_space(o, w).size(), static_cast<std::size_t>(n));
		}
		WeightOffset s11{std::nullopt, {1, 1}};
		mpz_class total = 0;
		for (int k = -w.L * w.N; k <= w.L * w.N; ++k)
			total += m.weight_dim({k, {1, 1}}, w);
		EXPECT_EQ(m.weight_dim(s11, w), total);
	}
}

TEST(Action, Sl2ReducedExamples)
{
	AffineAlgebra a(CartanMatrix(Rows{{2}}));
	Weight lambda{{Rational(-1, 2)}, 0, Rational(5)};
	VermaModule m(a, lambda, VermaKind::Reduced);
	auto v = m.highest_weight_vector();
	for (int n = -3; n <= 3; ++n)
	{
		auto fn = mono(m, fmt::format("F(1;{})", n));
		for (int k = -3; k <= 3; ++k)
			EXPECT_EQ(m.act(a.e(0, k), fn), k == -n ? lambda.h[0] * v : ModuleVector{});
		EXPECT_EQ(m.act(a.h(0, 0), fn), (lambda.h[0] - 2) * fn);
		EXPECT_EQ(m.act(a.d(), fn), (lambda.d + n) * fn);
	}
	EXPECT_EQ(m.act(a.d(), v), lambda.d * v);
	EXPECT_TRUE(m.act(a.h(0, 2), v).is_zero());
	EXPECT_TRUE(m.act(a.h(0, -1), v).is_zero());
	EXPECT_EQ(m.act(a.h(0, -1), mono(m, "F(1;2)")), Rational(-2) * mono(m, "F(1;1)"));
}

TEST(Action, ImaginaryKeepsHeisenbergSymbols)
{
	AffineAlgebra a(CartanMatrix(Rows{{2}}));
	VermaModule m(a, Weight{{Rational(1, 3)}, Rational(2), 0}, VermaKind::Imaginary);
	auto v = m.highest_weight_vector();
	EXPECT_EQ(m.act(a.h(0, -1), v), mono(m, "B(1;1)"));
	// [h_1, h_-1] = 2c acts by 2 lambda(c)
	EXPECT_EQ(m.act(a.h(0, 1), mono(m, "B(1;1)")), Rational(4) * v);
	EXPECT_TRUE(m.act(a.h(0, 2), mono(m, "B(1;1)")).is_zero());
	EXPECT_EQ(m.act(a.c(), v), Rational(2) * v);
}

TEST(Action, ReducedRequiresLevelZero)
{
	AffineAlgebra a(CartanMatrix(Rows{{2}}));
	EXPECT_THROW(VermaModule(a, Weight{{0}, 1, 0}, VermaKind::Reduced), DomainError);
	EXPECT_TRUE(VermaModule(a, Weight{{-1}, 0, 0}, VermaKind::Reduced).is_degenerate());
}

TEST(Action, NilpotencyDegrees)
{
	AffineAlgebra a(CartanMatrix(Rows{{2}}));
	VermaModule m(a, Weight{{Rational(-1, 2)}, 0, 0}, VermaKind::Reduced);
	EXPECT_EQ(local_nilpotency_degree(m, m.highest_weight_vector(), 0, 0), 1);
	EXPECT_EQ(local_nilpotency_degree(m, mono(m, "F(1;0)"), 0, 0), 2);
	EXPECT_EQ(local_nilpotency_degree(m, mono(m, "F(1;0)*F(1;0)"), 0, 0), 3);
	EXPECT_EQ(local_nilpotency_degree(m, mono(m, "F(1;0)*F(1;0)"), 0, 0, 2), std::nullopt);
}

TEST(Action, WeightAdditivity)
{
	AffineAlgebra a(CartanMatrix::from_label("A2"));
	VermaModule m(a, Weight{{Rational(-1, 2), Rational(2, 3)}, 0, 1}, VermaKind::Reduced);
	TruncationWindow w{3, 2, 3};
	auto basis = m.enumerate(w);
	std::mt19937 rng(5);
	for (int t = 0; t < 100; ++t)
	{
		auto g = random_generator(a, rng, 2);
		auto gw = a.weight_of(g);
		if (!gw)
			continue;
		auto const &src = basis[rng() % basis.size()];
		ModuleVector v;
		v.add(src, 1);
		auto wsrc = m.weight_of(src);
		for (auto const &[target, c] : m.act(g, v).terms)
		{
			auto wt = m.weight_of(target);
			EXPECT_EQ(wt.d, wsrc.d + gw->delta);
			for (int i = 0; i < 2; ++i)
				EXPECT_EQ(wt.h[i], wsrc.h[i] + a.finite().root_on_coroot(gw->finite, i));
		}
	}
}

TEST(Action, BracketCompatibility)
{
	std::mt19937 rng(23);
	struct Case
	{
		char const *label;
		VermaKind kind;
		Rational level;
	};
	for (auto [label, kind, level] : {Case{"A1", VermaKind::Reduced, 0}, Case{"A2", VermaKind::Reduced, 0},
	                                  Case{"A1", VermaKind::Imaginary, Rational(3, 2)},
	                                  Case{"C2", VermaKind::Imaginary, Rational(-1)}})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		Weight lambda = uniform_weight(a.rank(), Rational(-1, 2), level, Rational(1, 3));
		VermaModule m(a, lambda, kind);
		TruncationWindow w{2, 3, 2};
		auto basis = m.enumerate(w);
		for (int t = 0; t < 120; ++t)
		{
			auto g = random_generator(a, rng, 3), h = random_generator(a, rng, 3);
			auto v = random_vector(m, basis, rng);
			auto lhs = m.act(g, m.act(h, v)) - m.act(h, m.act(g, v));
			auto rhs = m.act(a.bracket(g, h), v);
			ASSERT_EQ(lhs, rhs) << m.to_string(lhs) << " vs " << m.to_string(rhs) << " " << label << " " << g.to_string() << " , " << h.to_string() << " on " << m.to_string(v);
		}
	}
}

TEST(Action, ReducedHeisenbergKillsHighestWeight)
{
	AffineAlgebra a(CartanMatrix::from_label("A2"));
	VermaModule m(a, uniform_weight(2, Rational(-1, 2)), VermaKind::Reduced);
	for (int i = 0; i < 2; ++i)
		for (int l = -3; l <= 3; ++l)
			if (l != 0)
				EXPECT_TRUE(m.act(a.h(i, l), m.highest_weight_vector()).is_zero());
}

TEST(Monomials, ParseAndPrint)
{
	AffineAlgebra a(CartanMatrix::from_label("A2"));
	VermaModule m(a, uniform_weight(2, Rational(-1, 2)), VermaKind::Imaginary);
	auto mono1 = m.parse_monomial("B(1;2)*F(1,0;-1)*F(1,1;3)");
	EXPECT_EQ(m.to_string(mono1), "B(1;2)*F(1,0;-1)*F(1,1;3)");
	EXPECT_EQ(m.offset_of(mono1), (WeightOffset{0, {2, 1}}));
	EXPECT_TRUE(m.parse_monomial("1").empty());
	EXPECT_THROW(m.parse_monomial("F(1,1;0)*F(1,0;0)"), DomainError);
	EXPECT_THROW(m.parse_monomial("F(2,0;0)"), DomainError);
	EXPECT_THROW(m.parse_monomial("B(1;0)"), DomainError);
	VermaModule r(a, uniform_weight(2, Rational(-1, 2)), VermaKind::Reduced);
	EXPECT_THROW(r.parse_monomial("B(1;1)"), DomainError);
}

TEST(SingularVectors, ZeroValueGivesSingularLine)
{
	AffineAlgebra a(CartanMatrix::from_label("A2"));
	VermaModule m(a, Weight{{0, Rational(-1, 2)}, 0, 0}, VermaKind::Reduced);
	TruncationWindow w{4, 3, 3};
	std::vector<WeightOffset> region;
	for (int n = -3; n <= 3; ++n)
		region.push_back({-n, {1, 0}});
	auto found = find_singular_vectors(m, region, w);
	ASSERT_EQ(found.size(), 7u);
	for (auto const &sv : found)
		EXPECT_EQ(sv.vector.terms.size(), 1u);
}

TEST(SingularVectors, IrreducibleCaseOnlyHighestWeight)
{
	for (auto label : {"A1", "A2"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		VermaModule m(a, uniform_weight(a.rank(), Rational(-1, 2)), VermaKind::Reduced);
		auto found = find_singular_vectors(m, {}, TruncationWindow{3, 2, 2});
		ASSERT_EQ(found.size(), 1u) << label;
		EXPECT_EQ(found[0].vector, m.highest_weight_vector());
	}
}

TEST(SingularVectors, ImaginaryIncludesHeisenbergConditions)
{
	AffineAlgebra a(CartanMatrix(Rows{{2}}));
	// lambda(c) != 0: B-symbols are not singular
	VermaModule m(a, Weight{{Rational(-1, 2)}, 1, 0}, VermaKind::Imaginary);
	auto found = find_singular_vectors(m, {}, TruncationWindow{2, 2, 1});
	ASSERT_EQ(found.size(), 1u);
	EXPECT_EQ(found[0].vector, m.highest_weight_vector());
}
