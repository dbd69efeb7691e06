#pragma once

#include "imverma/verma.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace imverma {

/// Generator label used by action tables: "e1,0", "f2,-1", "h1,3", "c", "d" (nodes 1-based in text).
struct LoopGenerator
{
	enum Kind : int { E, F, H, C, D };
	Kind kind = E;
	int node = 0; // 0-based
	int degree = 0;

	auto operator<=>(LoopGenerator const &) const = default;
	std::string to_string() const;
	static LoopGenerator parse(std::string_view text, int rank);
	LoopElement to_loop(AffineAlgebra const &a) const;
};

/// Basis of g_{k delta} for 0 < |k| <= N (the h_i (x) t^k) plus c, by degree.
std::map<int, std::vector<LoopElement>> heisenberg_slice(AffineAlgebra const &a, int max_degree);

struct BasisEntry
{
	std::string label;
	Weight weight;
	bool interior = true; // boundary vectors only receive images
};

/// Finite weight-indexed module slice with sparse action tables.
///
/// actions[g][j] is the image of basis vector j; a missing j means the action
/// is not tabulated there. Interior vectors carry every table; boundary
/// vectors exist so that images have somewhere to land.
struct ExplicitModule
{
	std::string provenance = "user-supplied";
	int rank = 0;
	TruncationWindow window;
	std::vector<BasisEntry> basis;
	std::map<LoopGenerator, std::map<std::size_t, SparseVec>> actions;
	/// Weights whose full weight space is inside the slice (used for surjectivity).
	std::set<Weight> complete_weights;

	std::size_t dimension() const { return basis.size(); }
	/// Throws DomainError if g is not tabulated on some support vector of v.
	SparseVec apply(LoopGenerator const &g, SparseVec const &v) const;
	std::optional<SparseVec> try_apply(LoopGenerator const &g, SparseVec const &v) const;
	/// Interior basis indices grouped by weight.
	std::map<Weight, std::vector<std::size_t>> interior_weight_spaces() const;
	std::string describe(SparseVec const &v) const;
};

nlohmann::json to_json(ExplicitModule const &m);
/// Validates indices, weights and rationals; throws DomainError on any violation.
ExplicitModule module_from_json(nlohmann::json const &j);

/// Finite-dimensional g-module given by matrices of the Chevalley generators.
struct FiniteModuleData
{
	int dimension = 0;
	std::vector<Matrix> e, f, h; // one per simple root, dimension x dimension
};

/// The (m+1)-dimensional irreducible sl2-module in the basis v_0..v_m, h v_k = (m-2k) v_k.
FiniteModuleData sl2_irrep(int m);

/// Throws DomainError naming the first failing relation if the matrices do not
/// satisfy the Chevalley-Serre relations of g, or if h is not diagonal.
void validate_finite_module(SimpleLieAlgebra const &g, FiniteModuleData const &data);

/// M (x) C[t, 1/t] with (x (x) t^k)(m (x) t^l) = (x m) (x) t^(k+l) and c = 0. Interior: |l| <= N.
ExplicitModule build_loop_module(AffineAlgebra const &a, FiniteModuleData const &data, TruncationWindow const &window);

/// Direct sum of reduced imaginary Verma modules, each cut to the window.
/// Tables: e_{i,n} (|n| <= N) on the e-closure of the interior, h_{i,l} (0 < |l| <= N) on the interior.
ExplicitModule build_reduced_verma_sum(AffineAlgebra const &a, std::vector<Weight> const &weights,
                                       TruncationWindow const &window);

/// Random weight-preserving change of basis on every interior weight block.
ExplicitModule scramble(ExplicitModule const &m, std::uint64_t seed);

/// Checks g(g' v) - g'(g v) = [g, g'] v wherever every term is tabulated; returns failures.
std::vector<std::string> check_action_compatibility(AffineAlgebra const &a, ExplicitModule const &m,
                                                    std::size_t *checked = nullptr);

struct AxiomVerdict
{
	std::string name;
	bool pass = true;
	std::string detail;
	std::vector<std::string> witnesses;
};

struct WeightSpaceSplit
{
	Weight weight;
	std::vector<std::size_t> basis;
	std::vector<SparseVec> torsion;
	std::vector<SparseVec> torsion_free; // coordinate complement of the torsion
	bool complete = false;
};

struct GCompatibleSplit
{
	std::vector<WeightSpaceSplit> spaces;
	std::size_t torsion_dim = 0;
	/// Torsion in weight spaces with some mu(h_j) != 0.
	std::size_t restricted_torsion_dim = 0;
	std::vector<AxiomVerdict> axioms; // (i)..(iv)
	bool pass = false;

	std::vector<SparseVec> torsion() const;
};

/// T(V) is the exact kernel of every tabulated h_{i,l}, 0 < |l| <= N, weight space by weight space.
/// Throws DomainError if no such generator is tabulated.
GCompatibleSplit torsion_decompose(ExplicitModule const &m);

struct MembershipReport
{
	std::vector<AxiomVerdict> axioms; // (1)..(4)
	GCompatibleSplit split;
	bool pass = false;
};

MembershipReport check_category_membership(ExplicitModule const &m, int cap = 16);

/// Iterates w -> e_{j0}^(p-1) w with p the largest e_{j0}-nilpotency degree until every
/// e_{j,n}, |n| <= N, kills w. Throws DomainError "not torsion" or when cap is exceeded.
SparseVec extract_annihilated_vector(ExplicitModule const &m, SparseVec const &v, int cap = 16);

struct Summand
{
	Weight weight;
	SparseVec vector;
};

struct DecompositionResult
{
	std::vector<Summand> summands;
	bool audit_pass = false;
	std::vector<std::string> audit_failures;
};

/// Requires membership; throws DomainError otherwise.
DecompositionResult decompose_into_reduced_vermas(AffineAlgebra const &a, ExplicitModule const &m, int cap = 16);

} // namespace imverma
