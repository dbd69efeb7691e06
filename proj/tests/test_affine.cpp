#include "imverma/affine.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace imverma;
using Rows = std::vector<std::vector<int>>;

namespace {

LoopElement random_basis_element(AffineAlgebra const &a, std::mt19937 &rng)
{
	std::uniform_int_distribution<int> pick(0, a.finite().dimension() + 1);
	std::uniform_int_distribution<int> deg(-5, 5);
	int b = pick(rng);
	if (b == a.finite().dimension())
		return a.c();
	if (b == a.finite().dimension() + 1)
		return a.d();
	return a.loop(b, deg(rng));
}

} // namespace

TEST(AffineBracket, Sl2Examples)
{
	AffineAlgebra a(CartanMatrix(Rows{{2}}));
	EXPECT_EQ(a.bracket(a.e(0, 1), a.f(0, -1)), a.h(0, 0) + a.c());
	EXPECT_EQ(a.bracket(a.d(), a.e(0, 3)), Rational(3) * a.e(0, 3));
	EXPECT_TRUE(a.bracket(a.c(), a.f(0, 5)).is_zero());
	EXPECT_EQ(a.bracket(a.h(0, 2), a.h(0, -2)), Rational(4) * a.c());
	EXPECT_EQ(a.bracket(a.f(0, -1), a.e(0, 1)), Rational(-1) * (a.h(0, 0) + a.c()));
}

TEST(AffineBracket, JacobiRandomTriples)
{
	std::mt19937 rng(11);
	for (auto label : {"A1", "A2", "A3", "C2", "G2"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		for (int t = 0; t < 300; ++t)
		{
			auto x = random_basis_element(a, rng), y = random_basis_element(a, rng), z = random_basis_element(a, rng);
			auto sum = a.bracket(x, a.bracket(y, z)) + a.bracket(y, a.bracket(z, x)) + a.bracket(z, a.bracket(x, y));
			ASSERT_TRUE(sum.is_zero()) << label << " " << x.to_string() << " | " << y.to_string() << " | "
			                           << z.to_string();
		}
	}
}

TEST(AffineBracket, ContextMismatch)
{
	AffineAlgebra a(CartanMatrix::from_label("A2")), b(CartanMatrix::from_label("A2"));
	EXPECT_THROW(a.bracket(a.e(0, 1), b.f(0, 0)), ContextMismatch);
}

TEST(AffinePresentation, CartanMatrixMatchesTables)
{
	EXPECT_EQ(AffineAlgebra(CartanMatrix::from_label("A1")).cartan(), (Rows{{2, -2}, {-2, 2}}));
	EXPECT_EQ(AffineAlgebra(CartanMatrix::from_label("A2")).cartan(), (Rows{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
	EXPECT_EQ(AffineAlgebra(CartanMatrix::from_label("A3")).cartan(),
	          (Rows{{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
	EXPECT_EQ(AffineAlgebra(CartanMatrix::from_label("C2")).cartan(), (Rows{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}));
	EXPECT_EQ(AffineAlgebra(CartanMatrix::from_label("B3")).cartan(),
	          (Rows{{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -2, 2}}));
	EXPECT_EQ(AffineAlgebra(CartanMatrix::from_label("G2")).cartan(), (Rows{{2, 0, -1}, {0, 2, -3}, {-1, -1, 2}}));
}

TEST(AffinePresentation, SerreRelationsHold)
{
	for (auto label : {"A1", "A2", "A3", "C2", "B2", "G2", "B3", "C3", "D4"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		auto failures = check_affine_presentation(a);
		EXPECT_TRUE(failures.empty()) << label << ": " << (failures.empty() ? "" : failures.front());
	}
}

TEST(AffinePresentation, RealizedH0)
{
	for (auto label : {"A2", "C2", "G2"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		auto const &g = a.finite();
		FiniteElement h_theta{&g, DenseVec(g.dimension())};
		auto coroot = g.coroot(g.highest_root());
		for (int i = 0; i < g.rank(); ++i)
			h_theta.coeffs[g.cartan_basis_index(i)] = coroot[i];
		EXPECT_EQ(a.h(0), a.c() - a.loop(h_theta, 0)) << label;
	}
}

TEST(AffineRoots, RealRootVectorsAreWeightVectors)
{
	for (auto label : {"A2", "C2"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		for (auto const &r : a.roots_in_window(3, 3))
		{
			if (r.is_imaginary())
				continue;
			auto x = a.root_vector(r);
			for (int i = 0; i < a.rank(); ++i)
				EXPECT_EQ(a.bracket(a.h(i, 0), x), Rational(a.finite().root_on_coroot(r.finite, i)) * x);
			EXPECT_EQ(a.bracket(a.d(), x), Rational(r.delta) * x);
			EXPECT_EQ(a.weight_of(x), r);
		}
	}
}

TEST(Partitions, Examples)
{
	AffineAlgebra a(CartanMatrix::from_label("A1"));
	EXPECT_TRUE(natural_partition_contains(a, {{1}, -3}));
	EXPECT_TRUE(natural_partition_contains(a, {{0}, 2}));
	EXPECT_FALSE(natural_partition_contains(a, {{0}, -1}));
	EXPECT_TRUE(standard_partition_contains(a, {{-1}, 1}));
	EXPECT_FALSE(standard_partition_contains(a, {{-1}, 0}));
	EXPECT_FALSE(standard_partition_contains(a, {{1}, -1}));
	EXPECT_THROW(natural_partition_contains(a, {{2}, 0}), DomainError);
	EXPECT_THROW(standard_partition_contains(a, {{0}, 0}), DomainError);
}

TEST(Partitions, NaturalAndStandardAreClosed)
{
	for (auto label : {"A1", "A2", "C2", "A3"})
	{
		AffineAlgebra a(CartanMatrix::from_label(label));
		TruncationWindow w{8, 4, 3};
		for (auto const &s : {natural_partition(a), standard_partition(a)})
		{
			auto report = check_closed_partition(a, s, w);
			EXPECT_TRUE(report.pass) << label << " " << s.name;
			EXPECT_GT(report.checked_sums, 0);
			EXPECT_GT(report.unchecked_sums, 0);
			for (auto const &rec : report.records)
				EXPECT_NE(rec.in_S, rec.in_minus_S);
		}
	}
}

TEST(Partitions, RemovingThreeDeltaBreaksClosure)
{
	AffineAlgebra a(CartanMatrix::from_label("A2"));
	TruncationWindow w{8, 4, 3};
	std::set<AffineRoot> members;
	for (auto const &r : a.roots_in_window(w.H, w.N))
		if (natural_partition_contains(a, r) && r != AffineRoot{{0, 0}, 3})
			members.insert(r);
	auto report = check_closed_partition(a, custom_partition("nat-minus-3delta", members), w);
	EXPECT_FALSE(report.pass);
	bool witnessed = false;
	for (auto const &v : report.violations)
		if (v.kind == "closure" && v.a == AffineRoot{{0, 0}, 1} && v.b == AffineRoot{{0, 0}, 2})
			witnessed = true;
	EXPECT_TRUE(witnessed);
}

TEST(Twisted, A3Flip)
{
	AffineAlgebra a(CartanMatrix::from_label("A3"));
	auto mu = diagram_automorphism(a.finite(), {2, 1, 0});
	TruncationWindow w{8, 4, 4};
	auto t = twisted_fixed_subalgebra(a, mu, w);
	for (int m = -4; m <= 4; ++m)
	{
		EXPECT_EQ(t.dimension(m), m % 2 == 0 ? 10 : 5) << m;
		for (auto const &x : t.piece(m))
			EXPECT_TRUE(t.is_fixed(x));
	}
	EXPECT_TRUE(check_twisted_closure(a, t).empty());
	EXPECT_TRUE(t.is_fixed(a.c()));
	EXPECT_TRUE(t.is_fixed(a.d()));
	EXPECT_FALSE(t.is_fixed(a.e(0, 0)));
	// sp4 Borel at degree 0; the (-1)-part of n_+ is 2-dimensional, of h 1-dimensional
	EXPECT_EQ(t.natural_borel_dimension(0), 6);
	EXPECT_EQ(t.natural_borel_dimension(-2), 4);
	EXPECT_EQ(t.natural_borel_dimension(-1), 2);
	EXPECT_EQ(t.natural_borel_dimension(1), 3);
}

TEST(Twisted, RejectsOrderOne)
{
	AffineAlgebra a(CartanMatrix::from_label("A3"));
	auto id = diagram_automorphism(a.finite(), {0, 1, 2});
	EXPECT_THROW(twisted_fixed_subalgebra(a, id, TruncationWindow{}), DomainError);
}

TEST(Window, ParseAndValidate)
{
	auto w = parse_window("L=4,N=3");
	EXPECT_EQ(w, (TruncationWindow{4, 3, 4}));
	EXPECT_THROW(parse_window("L=0"), DomainError);
	EXPECT_THROW(parse_window("Q=1"), DomainError);
	EXPECT_THROW(parse_window("L=x"), DomainError);
}
