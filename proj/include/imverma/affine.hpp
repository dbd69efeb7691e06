#pragma once

#include "imverma/finite_lie.hpp"
#include "imverma/window.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace imverma {

/// alpha + n*delta, with alpha in simple-root coordinates (possibly zero).
struct AffineRoot
{
	RootVec finite;
	int delta = 0;

	auto operator<=>(AffineRoot const &) const = default;
	bool is_imaginary() const { return is_zero(finite) && delta != 0; }
	std::string to_string() const;
};

AffineRoot operator+(AffineRoot const &a, AffineRoot const &b);
AffineRoot operator-(AffineRoot const &a);

/// Element of the loop realization: sum of x_b (x) t^n terms plus c and d components.
struct LoopElement
{
	SimpleLieAlgebra const *context = nullptr;
	std::map<std::pair<int, int>, Rational> terms; // (basis index, power) -> coefficient, never zero
	Rational c;
	Rational d;

	LoopElement &operator+=(LoopElement const &o);
	LoopElement &operator-=(LoopElement const &o);
	LoopElement &operator*=(Rational const &s);
	bool is_zero() const { return terms.empty() && c == 0 && d == 0; }
	std::string to_string() const;
	friend bool operator==(LoopElement const &a, LoopElement const &b);
};

LoopElement operator+(LoopElement a, LoopElement const &b);
LoopElement operator-(LoopElement a, LoopElement const &b);
LoopElement operator*(Rational const &s, LoopElement a);

/// Untwisted affine algebra g (x) C[t, 1/t] + Cc + Cd over a finite simple algebra.
///
/// Affine generators: e_0 = x_{-theta} (x) t, f_0 = x_theta (x) t^{-1}, and
/// h_0 = [e_0, f_0], which comes out as -h_theta + c.
class AffineAlgebra
{
public:
	explicit AffineAlgebra(CartanMatrix cartan);

	SimpleLieAlgebra const &finite() const { return *g_; }
	int rank() const { return g_->rank(); }

	LoopElement zero() const;
	LoopElement loop(FiniteElement const &x, int n) const;
	LoopElement loop(int basis, int n) const;
	LoopElement c() const;
	LoopElement d() const;

	/// Chevalley generators for i = 0..rank.
	LoopElement e(int i) const;
	LoopElement f(int i) const;
	LoopElement h(int i) const;

	/// e_i (x) t^k and friends for finite nodes i = 0..rank-1.
	LoopElement e(int i, int k) const { return loop(g_->e_index(i), k); }
	LoopElement f(int i, int k) const { return loop(g_->f_index(i), k); }
	LoopElement h(int i, int k) const { return loop(g_->cartan_basis_index(i), k); }

	/// x_alpha (x) t^n for a real root.
	LoopElement root_vector(AffineRoot const &r) const;

	LoopElement bracket(LoopElement const &a, LoopElement const &b) const;

	/// Generalized Cartan matrix of the affine type, indices 0..rank with node 0 affine.
	std::vector<std::vector<int>> const &cartan() const { return affine_cartan_; }

	bool is_root(AffineRoot const &r) const;
	bool is_real_root(AffineRoot const &r) const;

	/// All roots with finite height |ht| <= H and |delta coefficient| <= N, sorted.
	std::vector<AffineRoot> roots_in_window(int height, int loop_degree) const;

	/// Eigenvalues of h_0..h_rank and d on the weight of the homogeneous element; nullopt if not homogeneous.
	std::optional<AffineRoot> weight_of(LoopElement const &x) const;

private:
	void check_context(LoopElement const &x) const;

	std::shared_ptr<SimpleLieAlgebra const> g_;
	std::vector<std::vector<int>> affine_cartan_;
};

/// Full Chevalley-Serre presentation check for e_i, f_i, h_i with i = 0..rank,
/// against the affine Cartan matrix; returns a description of each failure.
std::vector<std::string> check_affine_presentation(AffineAlgebra const &a);

/// Closed partition candidate described by a membership predicate.
struct ClosedPartition
{
	std::string name;
	std::function<bool(AffineRoot const &)> contains;
};

/// Throws DomainError when r is not a root.
bool natural_partition_contains(AffineAlgebra const &a, AffineRoot const &r);
bool standard_partition_contains(AffineAlgebra const &a, AffineRoot const &r);

ClosedPartition natural_partition(AffineAlgebra const &a);
ClosedPartition standard_partition(AffineAlgebra const &a);
/// Explicit root list; meaningful only inside the window it was written for.
ClosedPartition custom_partition(std::string name, std::set<AffineRoot> members);

struct PartitionRecord
{
	AffineRoot root;
	bool in_S = false;
	bool in_minus_S = false;
};

struct PartitionViolation
{
	std::string kind; // "closure", "overlap" or "cover"
	AffineRoot a;
	std::optional<AffineRoot> b;
	std::optional<AffineRoot> sum;
};

struct PartitionReport
{
	bool pass = true;
	std::vector<PartitionRecord> records;
	std::vector<PartitionViolation> violations;
	long checked_sums = 0;
	long unchecked_sums = 0; // sums that leave the window
};

/// Checks closure, S and -S disjoint, and S u -S covering, on roots with
/// |ht| <= window.H and |delta coefficient| <= window.N.
PartitionReport check_closed_partition(AffineAlgebra const &a, ClosedPartition const &s, TruncationWindow const &window);

/// Fixed points of mu(x (x) t^m) = (-1)^m mu_bar(x) (x) t^m, plus c and d, for an order-2 mu_bar.
class TwistedSubalgebra
{
public:
	TwistedSubalgebra(AffineAlgebra const &a, DiagramAutomorphism aut, int max_degree);

	DiagramAutomorphism const &automorphism() const { return aut_; }
	int max_degree() const { return max_degree_; }

	/// Eigenspace bases of mu_bar for eigenvalue +1 (mu_0) and -1 (mu_1).
	std::vector<DenseVec> const &mu0() const { return mu0_; }
	std::vector<DenseVec> const &mu1() const { return mu1_; }

	/// Basis of the degree-m piece (no c, d).
	std::vector<LoopElement> piece(int m) const;
	int dimension(int m) const;

	/// Whether x lies in the fixed-point set, c and d included.
	bool is_fixed(LoopElement const &x) const;
	LoopElement apply(LoopElement const &x) const;

	/// Dimension of the degree-m piece intersected with the natural Borel subalgebra.
	int natural_borel_dimension(int m) const;

private:
	AffineAlgebra const *alg_;
	DiagramAutomorphism aut_;
	int max_degree_;
	std::vector<DenseVec> mu0_, mu1_;
};

/// Throws DomainError unless aut has order 2.
TwistedSubalgebra twisted_fixed_subalgebra(AffineAlgebra const &a, DiagramAutomorphism const &aut,
                                           TruncationWindow const &window);

/// Brackets every pair of basis elements of pieces m, m' with |m + m'| in range and
/// checks the result lies in piece_{m+m'} + Cc; returns failure descriptions.
std::vector<std::string> check_twisted_closure(AffineAlgebra const &a, TwistedSubalgebra const &t);

} // namespace imverma
