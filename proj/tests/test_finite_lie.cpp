#include "imverma/finite_lie.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace imverma;
using Rows = std::vector<std::vector<int>>;

namespace {

void expect_jacobi(SimpleLieAlgebra const &g, int b1, int b2, int b3)
{
	auto x = g.basis(b1), y = g.basis(b2), z = g.basis(b3);
	auto sum = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
	ASSERT_TRUE(sum.is_zero()) << g.basis_name(b1) << " " << g.basis_name(b2) << " " << g.basis_name(b3);
}

} // namespace

TEST(CartanMatrix, RejectsAsymmetricZeroPattern)
{
	try
	{
		CartanMatrix({{2, -1}, {0, 2}});
		FAIL() << "expected rejection";
	}
	catch (DomainError const &e)
	{
		EXPECT_NE(std::string(e.what()).find("a_ij = 0 ⇔ a_ji = 0 violated"), std::string::npos);
	}
}

TEST(CartanMatrix, RejectsOtherAxioms)
{
	EXPECT_THROW(CartanMatrix(Rows{{3}}), DomainError);
	EXPECT_THROW(CartanMatrix({{2, 1}, {1, 2}}), DomainError);
	EXPECT_THROW(CartanMatrix({{2, -2}, {-2, 2}}), DomainError); // affine A1, not finite
	EXPECT_THROW(CartanMatrix({{2, 0}, {0, 2}}), DomainError);   // decomposable
	EXPECT_THROW(CartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), DomainError);
	EXPECT_THROW(CartanMatrix::from_label("Z9"), DomainError);
	EXPECT_THROW(CartanMatrix::from_label("D3"), DomainError);
}

TEST(CartanMatrix, ParsesTextRows)
{
	auto c = CartanMatrix::parse("# C2\n 2 -2\n-1  2\n\n");
	EXPECT_EQ(c.rank(), 2);
	EXPECT_EQ(c(0, 1), -2);
	EXPECT_EQ(c.symmetrizer(), (std::vector<int>{1, 2}));
	EXPECT_THROW(CartanMatrix::parse("2 x\n-1 2"), DomainError);
}

TEST(SimpleLieAlgebra, Dimensions)
{
	EXPECT_EQ(SimpleLieAlgebra(CartanMatrix(Rows{{2}})).dimension(), 3);
	std::vector<std::pair<std::string, int>> cases = {{"A2", 8},  {"A3", 15}, {"B2", 10}, {"C2", 10},
	                                                  {"G2", 14}, {"B3", 21}, {"C3", 21}, {"D4", 28},
	                                                  {"A4", 24}, {"B4", 36}, {"C4", 36}, {"F4", 52}};
	for (auto const &[label, dim] : cases)
	{
		auto cartan = CartanMatrix::from_label(label);
		SimpleLieAlgebra g(cartan);
		auto expected = oracle::positive_roots(cartan.entries());
		EXPECT_EQ(std::set<RootVec>(g.positive_roots().begin(), g.positive_roots().end()), expected) << label;
		EXPECT_EQ(g.dimension(), 2 * static_cast<int>(expected.size()) + cartan.rank()) << label;
		EXPECT_EQ(g.dimension(), dim) << label;
	}
}

TEST(SimpleLieAlgebra, HighestRootIsUniqueMaximum)
{
	for (auto label : {"A3", "C3", "B3", "G2", "D4", "F4"})
	{
		SimpleLieAlgebra g(CartanMatrix::from_label(label));
		int top = height(g.highest_root());
		int count = 0;
		for (auto const &r : g.positive_roots())
			count += height(r) == top;
		EXPECT_EQ(count, 1) << label;
		EXPECT_EQ(g.root_pairing(g.highest_root(), g.highest_root()), 2) << label;
	}
}

TEST(SimpleLieAlgebra, ChevalleyRelations)
{
	SimpleLieAlgebra g(CartanMatrix::from_label("A2"));
	EXPECT_EQ(g.bracket(g.h(0), g.e(1)), Rational(-1) * g.e(1));
	EXPECT_EQ(g.bracket(g.e(0), g.f(0)), g.h(0));
	for (auto label : {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4", "F4"})
	{
		SimpleLieAlgebra alg(CartanMatrix::from_label(label));
		EXPECT_TRUE(check_serre_relations(alg).empty()) << label;
	}
}

TEST(SimpleLieAlgebra, JacobiExhaustiveUpToRankThree)
{
	for (auto label : {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"})
	{
		SimpleLieAlgebra g(CartanMatrix::from_label(label));
		int dim = g.dimension();
		for (int a = 0; a < dim; ++a)
			for (int b = a + 1; b < dim; ++b)
				for (int c = b + 1; c < dim; ++c)
					expect_jacobi(g, a, b, c);
	}
}

TEST(SimpleLieAlgebra, JacobiSampledRankFour)
{
	std::mt19937 rng(7);
	for (auto label : {"A4", "B4", "C4", "D4", "F4"})
	{
		SimpleLieAlgebra g(CartanMatrix::from_label(label));
		std::uniform_int_distribution<int> pick(0, g.dimension() - 1);
		for (int t = 0; t < 300; ++t)
			expect_jacobi(g, pick(rng), pick(rng), pick(rng));
	}
}

TEST(SimpleLieAlgebra, StructureConstantMagnitudeIsStringLengthPlusOne)
{
	for (auto label : {"A3", "B3", "C3", "G2", "D4", "F4"})
	{
		auto cartan = CartanMatrix::from_label(label);
		SimpleLieAlgebra g(cartan);
		auto pos = oracle::positive_roots(cartan.entries());
		std::set<RootVec> roots;
		for (auto const &r : pos)
		{
			roots.insert(r);
			roots.insert(-r);
		}
		for (auto const &a : roots)
			for (auto const &b : roots)
			{
				if (!roots.count(a + b))
				{
					EXPECT_EQ(g.structure_constant(a, b), 0);
					continue;
				}
				int p = 0;
				while (roots.count(b - (p + 1) * a))
					++p;
				EXPECT_EQ(std::abs(g.structure_constant(a, b)), p + 1) << label << to_string(a) << to_string(b);
				EXPECT_EQ(g.structure_constant(a, b), -g.structure_constant(b, a));
			}
	}
}

TEST(InvariantForm, Sl2Values)
{
	SimpleLieAlgebra g(CartanMatrix(Rows{{2}}));
	EXPECT_EQ(g.form(g.e(0), g.f(0)), 1);
	EXPECT_EQ(g.form(g.h(0), g.h(0)), 2);
	EXPECT_EQ(g.form(g.e(0), g.e(0)), 0);
}

TEST(InvariantForm, SymmetricAndInvariant)
{
	for (auto label : {"A2", "C2", "B3", "G2"})
	{
		SimpleLieAlgebra g(CartanMatrix::from_label(label));
		int dim = g.dimension();
		for (int a = 0; a < dim; ++a)
			for (int b = 0; b < dim; ++b)
			{
				ASSERT_EQ(g.form(g.basis(a), g.basis(b)), g.form(g.basis(b), g.basis(a)));
				for (int c = 0; c < dim; ++c)
					ASSERT_EQ(g.form(g.basis(a), g.bracket(g.basis(b), g.basis(c))),
					          g.form(g.bracket(g.basis(a), g.basis(b)), g.basis(c)))
					    << label;
			}
		auto theta = g.highest_root();
		EXPECT_EQ(g.form(g.root_vector(theta), g.root_vector(-theta)), 1) << label;
	}
}

TEST(InvariantForm, ContextMismatchIsRejected)
{
	SimpleLieAlgebra g1(CartanMatrix::from_label("A2"));
	SimpleLieAlgebra g2(CartanMatrix::from_label("A2"));
	EXPECT_THROW(g1.bracket(g1.e(0), g2.e(0)), ContextMismatch);
	EXPECT_THROW(g1.form(g1.e(0), g2.f(0)), ContextMismatch);
}

TEST(DiagramAutomorphism, Cases)
{
	SimpleLieAlgebra a3(CartanMatrix::from_label("A3"));
	auto mu = diagram_automorphism(a3, {2, 1, 0});
	EXPECT_EQ(mu.order, 2);
	EXPECT_EQ(mu.matrix * mu.matrix, Matrix::identity(a3.dimension()));
	EXPECT_EQ(mu.apply(a3.e(0)), a3.e(2));

	auto id = diagram_automorphism(a3, {0, 1, 2});
	EXPECT_EQ(id.order, 1);
	EXPECT_EQ(id.matrix, Matrix::identity(a3.dimension()));

	SimpleLieAlgebra a2(CartanMatrix::from_label("A2"));
	auto flip = diagram_automorphism(a2, {1, 0});
	EXPECT_EQ(flip.order, 2);
	EXPECT_EQ(flip.apply(a2.h(0)), a2.h(1));

	SimpleLieAlgebra d4(CartanMatrix::from_label("D4"));
	EXPECT_THROW(diagram_automorphism(d4, {2, 1, 3, 0}), DomainError); // triality
	EXPECT_NO_THROW(diagram_automorphism(d4, {0, 1, 3, 2}));
	EXPECT_THROW(diagram_automorphism(a3, {1, 0, 2}), DomainError);
	SimpleLieAlgebra c2(CartanMatrix::from_label("C2"));
	EXPECT_THROW(diagram_automorphism(c2, {1, 0}), DomainError);
}
