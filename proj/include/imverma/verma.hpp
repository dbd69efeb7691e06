#pragma once

#include "imverma/affine.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace imverma {

/// Values on h_1..h_N, c and d.
struct Weight
{
	std::vector<Rational> h;
	Rational c;
	Rational d;

	/// lambda(c) = 0 and no lambda(h_i) a non-negative integer.
	bool is_reduced_admissible() const;
	std::string to_string() const;
	friend bool operator==(Weight const &, Weight const &) = default;
	friend auto operator<=>(Weight const &a, Weight const &b)
	{
		return std::tie(a.h, a.c, a.d) <=> std::tie(b.h, b.c, b.d);
	}
};

/// "h1=-1/2,h2=1/3,c=0,d=0". Unassigned keys default to 0; throws DomainError on bad keys or values.
Weight parse_weight(std::string_view text, int rank);

/// mu = lambda - k*delta - sum_i s_i alpha_i. An absent k means the whole delta-string.
struct WeightOffset
{
	std::optional<int> k;
	RootVec s;

	auto operator<=>(WeightOffset const &) const = default;
	std::string to_string() const;
};

/// Negative generator of a PBW monomial.
///
/// F: x_{-gamma} (x) t^degree, index = position of gamma in the canonical positive-root order.
/// B: h_index (x) t^degree with degree < 0 (imaginary Verma modules only).
/// The derived order (kind, index, degree) is the canonical PBW order: B before F,
/// then root height and coordinates, then loop degree ascending.
struct Symbol
{
	enum Kind : int { B = 0, F = 1 };
	Kind kind = F;
	int index = 0;
	int degree = 0;

	auto operator<=>(Symbol const &) const = default;
};

/// Sorted product of symbols applied to v_lambda; empty is v_lambda itself.
using Monomial = std::vector<Symbol>;

struct ModuleVector
{
	std::map<Monomial, Rational> terms; // never stores zero

	bool is_zero() const { return terms.empty(); }
	void add(Monomial const &m, Rational const &coef);
	void add_scaled(Rational const &coef, ModuleVector const &v);
	friend bool operator==(ModuleVector const &, ModuleVector const &) = default;
};

ModuleVector operator+(ModuleVector a, ModuleVector const &b);
ModuleVector operator-(ModuleVector a, ModuleVector const &b);
ModuleVector operator*(Rational const &s, ModuleVector a);

enum class VermaKind { Imaginary, Reduced };

/// M(lambda) (Imaginary) or the reduced quotient by all h_i (x) t^l, l != 0 (Reduced).
///
/// The action commutes a generator rightward through the PBW factors until it
/// reaches v_lambda, where the natural Borel part acts by lambda. Results are
/// exact: nothing is truncated, so outputs can leave any window their inputs
/// lived in (see required_window). Caches make repeated actions cheap; they
/// are guarded, so a module may be shared between threads.
class VermaModule
{
public:
	VermaModule(AffineAlgebra const &alg, Weight lambda, VermaKind kind);

	AffineAlgebra const &algebra() const { return *alg_; }
	Weight const &highest_weight() const { return lambda_; }
	VermaKind kind() const { return kind_; }

	/// Negative integer lambda(h_i): weights can leave the reduced-admissible set.
	bool is_degenerate() const;

	ModuleVector highest_weight_vector() const;
	ModuleVector act(LoopElement const &g, ModuleVector const &v) const;

	Weight weight_of(Monomial const &m) const;
	WeightOffset offset_of(Monomial const &m) const;

	/// Monomials of the given offset with length <= L and |degree| <= N, sorted.
	std::vector<Monomial> weight_space(WeightOffset const &offset, TruncationWindow const &window) const;

	/// Every monomial with length <= L, |degree| <= N and offset height <= H, sorted.
	std::vector<Monomial> enumerate(TruncationWindow const &window) const;

	/// Size of weight_space without listing it.
	mpz_class weight_dim(WeightOffset const &offset, TruncationWindow const &window) const;

	/// Symbol <-> loop basis element.
	Symbol symbol_of(int basis, int degree) const;
	bool is_symbol(int basis, int degree) const;
	LoopElement loop_of(Symbol const &s) const;

	std::string to_string(Symbol const &s) const;
	std::string to_string(Monomial const &m) const;
	std::string to_string(ModuleVector const &v) const;
	/// Inverse of to_string(Monomial): "F(1,0;2)*B(1;1)", or "1" for v_lambda.
	Monomial parse_monomial(std::string_view text) const;

private:
	using BasisKey = std::pair<int, int>;

	ModuleVector const &act_basis(BasisKey g, Monomial const &m) const;
	ModuleVector const &insert(Symbol const &s, Monomial const &m) const;
	ModuleVector left_multiply(Symbol const &s, ModuleVector const &v) const;
	void add_bracket_action(ModuleVector &out, BasisKey g, int other_basis, int other_degree, Rational const &coef,
	                        Monomial const &rest) const;
	void check_offset(WeightOffset const &offset, TruncationWindow const &window) const;

	AffineAlgebra const *alg_;
	Weight lambda_;
	VermaKind kind_;

	mutable std::mutex cache_mutex_;
	mutable std::map<std::pair<BasisKey, Monomial>, ModuleVector> act_cache_;
	mutable std::map<std::pair<Symbol, Monomial>, ModuleVector> insert_cache_;
};

/// Window needed to hold v: longest monomial, largest |degree|, largest offset height.
TruncationWindow required_window(VermaModule const &m, ModuleVector const &v);

mpz_class verma_weight_dim(AffineAlgebra const &alg, Weight const &lambda, WeightOffset const &offset,
                           TruncationWindow const &window);
mpz_class reduced_weight_dim(AffineAlgebra const &alg, Weight const &lambda, WeightOffset const &offset,
                             TruncationWindow const &window);

struct SingularVector
{
	WeightOffset offset;
	ModuleVector vector;
};

/// Basis of the vectors killed by every e_{i,n} with |n| <= N (and, in M(lambda),
/// every h_{i,l} with 0 < l <= N), weight space by weight space. An empty
/// region means every offset with height <= H; offsets in a region need k.
std::vector<SingularVector> find_singular_vectors(VermaModule const &m, std::vector<WeightOffset> const &region,
                                                  TruncationWindow const &window);

/// Least p with e_{i,n}^p v = 0, or nullopt once p would exceed cap.
std::optional<int> local_nilpotency_degree(VermaModule const &m, ModuleVector const &v, int i, int n, int cap = 16);

} // namespace imverma
