#include "imverma/affine.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>

namespace imverma {

std::string AffineRoot::to_string() const
{
	return fmt::format("{}{:+}d", imverma::to_string(finite), delta);
}

AffineRoot operator+(AffineRoot const &a, AffineRoot const &b) { return {a.finite + b.finite, a.delta + b.delta}; }
AffineRoot operator-(AffineRoot const &a) { return {-a.finite, -a.delta}; }

namespace {

void add_term(std::map<std::pair<int, int>, Rational> &terms, std::pair<int, int> key, Rational const &v)
{
	if (v == 0)
		return;
	auto [it, inserted] = terms.try_emplace(key, 0);
	it->second += v;
	if (it->second == 0)
		terms.erase(it);
}

void require_same(LoopElement const &a, LoopElement const &b)
{
	if (a.context && b.context && a.context != b.context)
		throw ContextMismatch();
}

bool positive_coords(RootVec const &r)
{
	return !is_zero(r) && std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

} // namespace

LoopElement &LoopElement::operator+=(LoopElement const &o)
{
	require_same(*this, o);
	if (!context)
		context = o.context;
	for (auto const &[k, v] : o.terms)
		add_term(terms, k, v);
	c += o.c;
	d += o.d;
	return *this;
}

LoopElement &LoopElement::operator-=(LoopElement const &o)
{
	require_same(*this, o);
	if (!context)
		context = o.context;
	for (auto const &[k, v] : o.terms)
		add_term(terms, k, -v);
	c -= o.c;
	d -= o.d;
	return *this;
}

LoopElement &LoopElement::operator*=(Rational const &s)
{
	if (s == 0)
	{
		terms.clear();
		c = 0;
		d = 0;
		return *this;
	}
	for (auto &[k, v] : terms)
		v *= s;
	c *= s;
	d *= s;
	return *this;
}

bool operator==(LoopElement const &a, LoopElement const &b)
{
	require_same(a, b);
	return a.terms == b.terms && a.c == b.c && a.d == b.d;
}

LoopElement operator+(LoopElement a, LoopElement const &b) { return a += b; }
LoopElement operator-(LoopElement a, LoopElement const &b) { return a -= b; }
LoopElement operator*(Rational const &s, LoopElement a) { return a *= s; }

std::string LoopElement::to_string() const
{
	std::vector<std::string> parts;
	for (auto const &[k, v] : terms)
		parts.push_back(fmt::format("{}*{}*t^{}", to_short_string(v), context->basis_name(k.first), k.second));
	if (c != 0)
		parts.push_back(fmt::format("{}*c", to_short_string(c)));
	if (d != 0)
		parts.push_back(fmt::format("{}*d", to_short_string(d)));
	if (parts.empty())
		return "0";
	return fmt::format("{}", fmt::join(parts, " + "));
}

AffineAlgebra::AffineAlgebra(CartanMatrix cartan) : g_(std::make_shared<SimpleLieAlgebra const>(std::move(cartan)))
{
	int n = g_->rank();
	auto const &theta = g_->highest_root();
	affine_cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
	affine_cartan_[0][0] = 2;
	for (int j = 0; j < n; ++j)
	{
		RootVec alpha(n, 0);
		alpha[j] = 1;
		// alpha_j(h_0) with h_0 = -h_theta + c; (theta|theta) = 2 makes <alpha_j, theta^vee> = (alpha_j|theta)
		Rational pairing = g_->root_pairing(alpha, theta);
		affine_cartan_[0][j + 1] = -static_cast<int>(pairing.get_num().get_si());
		affine_cartan_[j + 1][0] = -g_->root_on_coroot(theta, j);
		for (int i = 0; i < n; ++i)
			affine_cartan_[i + 1][j + 1] = g_->cartan()(i, j);
	}
}

void AffineAlgebra::check_context(LoopElement const &x) const
{
	if (x.context && x.context != g_.get())
		throw ContextMismatch();
}

LoopElement AffineAlgebra::zero() const { return LoopElement{g_.get(), {}, 0, 0}; }

LoopElement AffineAlgebra::loop(FiniteElement const &x, int n) const
{
	if (x.context != g_.get())
		throw ContextMismatch();
	auto out = zero();
	for (int b = 0; b < g_->dimension(); ++b)
		add_term(out.terms, {b, n}, x.coeffs[b]);
	return out;
}

LoopElement AffineAlgebra::loop(int basis, int n) const
{
	auto out = zero();
	out.terms.emplace(std::pair{basis, n}, Rational(1));
	return out;
}

LoopElement AffineAlgebra::c() const
{
	auto out = zero();
	out.c = 1;
	return out;
}

LoopElement AffineAlgebra::d() const
{
	auto out = zero();
	out.d = 1;
	return out;
}

LoopElement AffineAlgebra::e(int i) const
{
	if (i == 0)
		return loop(g_->root_basis_index(-g_->highest_root()), 1);
	return e(i - 1, 0);
}

LoopElement AffineAlgebra::f(int i) const
{
	if (i == 0)
		return loop(g_->root_basis_index(g_->highest_root()), -1);
	return f(i - 1, 0);
}

LoopElement AffineAlgebra::h(int i) const
{
	if (i == 0)
		return bracket(e(0), f(0));
	return h(i - 1, 0);
}

LoopElement AffineAlgebra::root_vector(AffineRoot const &r) const
{
	if (!is_real_root(r))
		throw DomainError(fmt::format("{} is not a real root", r.to_string()));
	return loop(g_->root_basis_index(r.finite), r.delta);
}

LoopElement AffineAlgebra::bracket(LoopElement const &a, LoopElement const &b) const
{
	check_context(a);
	check_context(b);
	auto out = zero();
	for (auto const &[ka, va] : a.terms)
		for (auto const &[kb, vb] : b.terms)
		{
			auto [b1, n1] = ka;
			auto [b2, n2] = kb;
			Rational s = va * vb;
			for (auto const &[k, coef] : g_->basis_bracket(b1, b2))
				add_term(out.terms, {k, n1 + n2}, s * coef);
			if (n1 == -n2)
				out.c += s * n1 * g_->basis_form(b1, b2);
		}
	if (a.d != 0)
		for (auto const &[k, v] : b.terms)
			add_term(out.terms, k, a.d * k.second * v);
	if (b.d != 0)
		for (auto const &[k, v] : a.terms)
			add_term(out.terms, k, -b.d * k.second * v);
	return out;
}

bool AffineAlgebra::is_real_root(AffineRoot const &r) const
{
	return !is_zero(r.finite) && g_->is_root(r.finite);
}

bool AffineAlgebra::is_root(AffineRoot const &r) const
{
	if (static_cast<int>(r.finite.size()) != rank())
		return false;
	return r.is_imaginary() || is_real_root(r);
}

std::vector<AffineRoot> AffineAlgebra::roots_in_window(int height_cap, int loop_degree) const
{
	std::vector<AffineRoot> out;
	for (int n = -loop_degree; n <= loop_degree; ++n)
	{
		for (auto const &r : g_->positive_roots())
			if (height(r) <= height_cap)
			{
				out.push_back({r, n});
				out.push_back({-r, n});
			}
		if (n != 0)
			out.push_back({RootVec(rank(), 0), n});
	}
	std::sort(out.begin(), out.end(), [](AffineRoot const &x, AffineRoot const &y) {
		return std::tuple(x.delta, height(x.finite), x.finite) < std::tuple(y.delta, height(y.finite), y.finite);
	});
	return out;
}

std::optional<AffineRoot> AffineAlgebra::weight_of(LoopElement const &x) const
{
	std::optional<AffineRoot> w;
	if (x.c != 0 || x.d != 0)
		w = AffineRoot{RootVec(rank(), 0), 0};
	for (auto const &[k, v] : x.terms)
	{
		AffineRoot r{g_->basis_root(k.first), k.second};
		if (w && *w != r)
			return std::nullopt;
		w = r;
	}
	return w;
}

std::vector<std::string> check_affine_presentation(AffineAlgebra const &a)
{
	std::vector<std::string> failures;
	int n = a.rank() + 1;
	auto const &cartan = a.cartan();
	auto expect = [&](bool ok, std::string what) {
		if (!ok)
			failures.push_back(std::move(what));
	};
	for (int i = 0; i < n; ++i)
	{
		auto ei = a.e(i), fi = a.f(i), hi = a.h(i);
		for (int j = 0; j < n; ++j)
		{
			auto ej = a.e(j), fj = a.f(j), hj = a.h(j);
			expect(a.bracket(hi, hj).is_zero(), fmt::format("[h{},h{}] != 0", i, j));
			expect(a.bracket(ei, fj) == (i == j ? hi : a.zero()), fmt::format("[e{},f{}] wrong", i, j));
			expect(a.bracket(hi, ej) == Rational(cartan[i][j]) * ej, fmt::format("[h{},e{}] != a_ij e_j", i, j));
			expect(a.bracket(hi, fj) == Rational(-cartan[i][j]) * fj, fmt::format("[h{},f{}] != -a_ij f_j", i, j));
			if (i == j)
				continue;
			auto ue = ej, uf = fj;
			for (int p = 0; p < 1 - cartan[i][j]; ++p)
			{
				ue = a.bracket(ei, ue);
				uf = a.bracket(fi, uf);
			}
			expect(ue.is_zero(), fmt::format("(ad e{})^{} e{} != 0", i, 1 - cartan[i][j], j));
			expect(uf.is_zero(), fmt::format("(ad f{})^{} f{} != 0", i, 1 - cartan[i][j], j));
		}
		int deg = i == 0 ? 1 : 0;
		expect(a.bracket(a.d(), ei) == Rational(deg) * ei, fmt::format("[d,e{}] wrong", i));
		expect(a.bracket(a.d(), fi) == Rational(-deg) * fi, fmt::format("[d,f{}] wrong", i));
		expect(a.bracket(a.c(), ei).is_zero() && a.bracket(a.c(), fi).is_zero(), fmt::format("c not central on node {}", i));
	}
	return failures;
}

bool natural_partition_contains(AffineAlgebra const &a, AffineRoot const &r)
{
	if (!a.is_root(r))
		throw DomainError(fmt::format("{} is not a root", r.to_string()));
	if (r.is_imaginary())
		return r.delta > 0;
	return positive_coords(r.finite);
}

bool standard_partition_contains(AffineAlgebra const &a, AffineRoot const &r)
{
	if (!a.is_root(r))
		throw DomainError(fmt::format("{} is not a root", r.to_string()));
	if (r.delta != 0)
		return r.delta > 0;
	return positive_coords(r.finite);
}

ClosedPartition natural_partition(AffineAlgebra const &a)
{
	return {"natural", [&a](AffineRoot const &r) { return natural_partition_contains(a, r); }};
}

ClosedPartition standard_partition(AffineAlgebra const &a)
{
	return {"standard", [&a](AffineRoot const &r) { return standard_partition_contains(a, r); }};
}

ClosedPartition custom_partition(std::string name, std::set<AffineRoot> members)
{
	return {std::move(name), [members = std::move(members)](AffineRoot const &r) { return members.count(r) != 0; }};
}

PartitionReport check_closed_partition(AffineAlgebra const &a, ClosedPartition const &s, TruncationWindow const &window)
{
	PartitionReport report;
	auto roots = a.roots_in_window(window.H, window.N);
	auto in_window = [&](AffineRoot const &r) {
		return std::abs(height(r.finite)) <= window.H && std::abs(r.delta) <= window.N;
	};
	std::vector<AffineRoot> members;
	for (auto const &r : roots)
	{
		PartitionRecord rec{r, s.contains(r), s.contains(-r)};
		if (rec.in_S && rec.in_minus_S)
			report.violations.push_back({"overlap", r, std::nullopt, std::nullopt});
		if (!rec.in_S && !rec.in_minus_S)
			report.violations.push_back({"cover", r, std::nullopt, std::nullopt});
		if (rec.in_S)
			members.push_back(r);
		report.records.push_back(std::move(rec));
	}
	for (std::size_t i = 0; i < members.size(); ++i)
		for (std::size_t j = i; j < members.size(); ++j)
		{
			auto sum = members[i] + members[j];
			if (!a.is_root(sum))
				continue;
			if (!in_window(sum))
			{
				++report.unchecked_sums;
				continue;
			}
			++report.checked_sums;
			if (!s.contains(sum))
				report.violations.push_back({"closure", members[i], members[j], sum});
		}
	report.pass = report.violations.empty();
	return report;
}

TwistedSubalgebra::TwistedSubalgebra(AffineAlgebra const &a, DiagramAutomorphism aut, int max_degree)
    : alg_(&a), aut_(std::move(aut)), max_degree_(max_degree)
{
	if (aut_.order != 2)
		throw DomainError(fmt::format("twisted construction needs an automorphism of order 2, got order {}", aut_.order));
	auto n = aut_.matrix.rows();
	mu0_ = nullspace(aut_.matrix - Matrix::identity(n));
	Matrix plus = aut_.matrix;
	for (std::size_t i = 0; i < n; ++i)
		plus(i, i) += 1;
	mu1_ = nullspace(plus);
}

std::vector<LoopElement> TwistedSubalgebra::piece(int m) const
{
	std::vector<LoopElement> out;
	auto const &g = alg_->finite();
	for (auto const &v : (m % 2 == 0 ? mu0_ : mu1_))
	{
		FiniteElement x{&g, v};
		out.push_back(alg_->loop(x, m));
	}
	return out;
}

int TwistedSubalgebra::dimension(int m) const { return static_cast<int>((m % 2 == 0 ? mu0_ : mu1_).size()); }

LoopElement TwistedSubalgebra::apply(LoopElement const &x) const
{
	auto out = alg_->zero();
	out.c = x.c;
	out.d = x.d;
	for (auto const &[k, v] : x.terms)
	{
		Rational sign = k.second % 2 == 0 ? 1 : -1;
		for (std::size_t r = 0; r < aut_.matrix.rows(); ++r)
			if (aut_.matrix(r, k.first) != 0)
				add_term(out.terms, {static_cast<int>(r), k.second}, sign * v * aut_.matrix(r, k.first));
	}
	return out;
}

bool TwistedSubalgebra::is_fixed(LoopElement const &x) const { return apply(x) == x; }

int TwistedSubalgebra::natural_borel_dimension(int m) const
{
	auto const &g = alg_->finite();
	int dim = g.dimension();
	std::vector<int> support;
	for (int b = 0; b < g.num_positive(); ++b)
		support.push_back(b);
	if (m >= 0)
		for (int i = 0; i < g.rank(); ++i)
			support.push_back(g.cartan_basis_index(i));
	Rational s = m % 2 == 0 ? 1 : -1;
	Matrix sys(dim, support.size());
	for (std::size_t c = 0; c < support.size(); ++c)
		for (int r = 0; r < dim; ++r)
			sys(r, c) = aut_.matrix(r, support[c]) - (r == support[c] ? s : Rational(0));
	return static_cast<int>(nullspace(sys).size());
}

TwistedSubalgebra twisted_fixed_subalgebra(AffineAlgebra const &a, DiagramAutomorphism const &aut,
                                           TruncationWindow const &window)
{
	return TwistedSubalgebra(a, aut, window.N);
}

std::vector<std::string> check_twisted_closure(AffineAlgebra const &a, TwistedSubalgebra const &t)
{
	std::vector<std::string> failures;
	int top = t.max_degree();
	for (int m1 = -top; m1 <= top; ++m1)
		for (int m2 = m1; m2 <= top; ++m2)
		{
			if (std::abs(m1 + m2) > top)
				continue;
			auto p1 = t.piece(m1), p2 = t.piece(m2);
			for (std::size_t i = 0; i < p1.size(); ++i)
				for (std::size_t j = 0; j < p2.size(); ++j)
				{
					auto z = a.bracket(p1[i], p2[j]);
					bool graded = std::all_of(z.terms.begin(), z.terms.end(),
					                          [&](auto const &kv) { return kv.first.second == m1 + m2; });
					if (!graded || z.d != 0 || !t.is_fixed(z))
						failures.push_back(fmt::format("[piece {} #{}, piece {} #{}] leaves the fixed subalgebra", m1, i, m2, j));
				}
		}
	return failures;
}

} // namespace imverma
