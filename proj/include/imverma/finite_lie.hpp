#pragma once

#include "imverma/linalg.hpp"
#include "imverma/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace imverma {

/// Integer coordinates in the basis of simple roots.
using RootVec = std::vector<int>;

int height(RootVec const &r);
RootVec operator+(RootVec const &a, RootVec const &b);
RootVec operator-(RootVec const &a, RootVec const &b);
RootVec operator-(RootVec const &a);
RootVec operator*(int k, RootVec const &a);
bool is_zero(RootVec const &r);
std::string to_string(RootVec const &r);

/// Cartan matrix of a finite-type simple Lie algebra, with a_ij = alpha_j(h_i).
///
/// Construction validates every axiom and throws DomainError naming the first
/// one that fails. The symmetrizer D holds coprime positive integers with
/// D*A symmetric.
class CartanMatrix
{
public:
	explicit CartanMatrix(std::vector<std::vector<int>> entries);

	/// One row per line, whitespace-separated integers; blank lines and '#' comments skipped.
	static CartanMatrix parse(std::string_view text);

	/// Type labels "A1".."A8", "B2".., "C2".., "D4".., "E6", "E7", "E8", "F4", "G2" (Bourbaki numbering).
	static CartanMatrix from_label(std::string_view label);

	int rank() const { return static_cast<int>(entries_.size()); }
	int operator()(int i, int j) const { return entries_[i][j]; }
	std::vector<std::vector<int>> const &entries() const { return entries_; }
	std::vector<int> const &symmetrizer() const { return symmetrizer_; }

	/// Label if constructed from one, otherwise "custom".
	std::string const &label() const { return label_; }

private:
	std::vector<std::vector<int>> entries_;
	std::vector<int> symmetrizer_;
	std::string label_ = "custom";
};

class SimpleLieAlgebra;

/// Element of the finite algebra, dense in the Chevalley basis of its owning context.
struct FiniteElement
{
	SimpleLieAlgebra const *context = nullptr;
	DenseVec coeffs;

	FiniteElement &operator+=(FiniteElement const &o);
	FiniteElement &operator-=(FiniteElement const &o);
	FiniteElement &operator*=(Rational const &s);
	bool is_zero() const;
	friend bool operator==(FiniteElement const &a, FiniteElement const &b);
};

FiniteElement operator+(FiniteElement a, FiniteElement const &b);
FiniteElement operator-(FiniteElement a, FiniteElement const &b);
FiniteElement operator*(Rational const &s, FiniteElement a);

/// Thrown when elements of different algebra contexts are combined.
class ContextMismatch : public DomainError
{
public:
	ContextMismatch() : DomainError("elements belong to different algebra contexts") {}
};

/// Simple Lie algebra built from a Cartan matrix, in a Chevalley basis.
///
/// Basis layout: indices [0, P) are x_gamma for positive roots gamma in the
/// canonical order (height, then coordinates lexicographically ascending);
/// [P, 2P) are x_{-gamma} in the same order; [2P, 2P + N) are h_1..h_N.
///
/// Sign convention: N_{alpha,beta} = +(p+1) on every extraspecial pair
/// (alpha minimal in the canonical order with alpha + beta = xi, both
/// positive); all other constants follow from the Chevalley identities.
/// The context is immutable once built.
class SimpleLieAlgebra
{
public:
	explicit SimpleLieAlgebra(CartanMatrix cartan);

	CartanMatrix const &cartan() const { return cartan_; }
	int rank() const { return cartan_.rank(); }
	int dimension() const { return 2 * num_positive() + rank(); }
	int num_positive() const { return static_cast<int>(positive_.size()); }

	std::vector<RootVec> const &positive_roots() const { return positive_; }
	RootVec const &highest_root() const { return positive_.back(); }
	bool is_root(RootVec const &r) const { return root_index_.count(r) != 0; }

	/// Basis index of x_r for a (positive or negative) root r; throws if r is not a root.
	int root_basis_index(RootVec const &r) const;
	int cartan_basis_index(int i) const { return 2 * num_positive() + i; }
	int e_index(int i) const;
	int f_index(int i) const;

	bool is_root_index(int b) const { return b < 2 * num_positive(); }
	bool is_cartan_index(int b) const { return b >= 2 * num_positive(); }
	/// Root of basis element b (zero vector for Cartan elements).
	RootVec const &basis_root(int b) const { return basis_roots_[b]; }
	std::string basis_name(int b) const;

	/// alpha(h_i) = sum_j c_j a_ij.
	int root_on_coroot(RootVec const &alpha, int i) const;

	/// Normalized invariant form on the root lattice, (theta|theta) = 2.
	Rational root_pairing(RootVec const &a, RootVec const &b) const;

	/// Coroot h_alpha written in the h_i basis.
	DenseVec coroot(RootVec const &alpha) const;

	/// N_{alpha,beta}; zero when alpha + beta is not a root.
	int structure_constant(RootVec const &a, RootVec const &b) const;

	/// Length p of the alpha-string through beta below beta: beta - p*alpha is a root, beta - (p+1)*alpha is not.
	int string_below(RootVec const &alpha, RootVec const &beta) const;

	FiniteElement zero() const;
	FiniteElement basis(int b) const;
	FiniteElement e(int i) const { return basis(e_index(i)); }
	FiniteElement f(int i) const { return basis(f_index(i)); }
	FiniteElement h(int i) const { return basis(cartan_basis_index(i)); }
	FiniteElement root_vector(RootVec const &r) const { return basis(root_basis_index(r)); }

	FiniteElement bracket(FiniteElement const &x, FiniteElement const &y) const;
	Rational form(FiniteElement const &x, FiniteElement const &y) const;

	/// Sparse bracket table entry [b1, b2] as (basis index, coefficient) pairs.
	std::vector<std::pair<int, Rational>> const &basis_bracket(int b1, int b2) const
	{
		return table_[b1 * dimension() + b2];
	}
	Rational const &basis_form(int b1, int b2) const { return form_table_[b1 * dimension() + b2]; }

private:
	void enumerate_roots();
	void compute_structure_constants();
	void build_tables();
	Rational raw_constant(RootVec const &a, RootVec const &b) const;

	CartanMatrix cartan_;
	std::vector<RootVec> positive_;
	std::map<RootVec, int> root_index_; // all roots -> basis index
	std::vector<RootVec> basis_roots_;
	Matrix pairing_;                      // normalized (alpha_i|alpha_j)
	std::map<std::pair<int, int>, int> n_; // (basis idx, basis idx) -> N
	std::vector<std::vector<std::pair<int, Rational>>> table_;
	std::vector<Rational> form_table_;
};

/// Diagram automorphism induced by a node permutation sigma (0-based).
struct DiagramAutomorphism
{
	std::vector<int> sigma;
	int order = 1;
	/// Column b is the image of basis element b.
	Matrix matrix;

	FiniteElement apply(FiniteElement const &x) const;
};

/// Builds and verifies the automorphism e_i -> e_sigma(i), f_i -> f_sigma(i), h_i -> h_sigma(i).
/// Throws DomainError if sigma is not a diagram symmetry or has order 3 or more.
DiagramAutomorphism diagram_automorphism(SimpleLieAlgebra const &g, std::vector<int> const &sigma);

/// Exhaustive Serre-relation check; returns a description of each failure.
std::vector<std::string> check_serre_relations(SimpleLieAlgebra const &g);

} // namespace imverma
