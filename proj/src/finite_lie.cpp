#include "imverma/finite_lie.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace imverma {

int height(RootVec const &r) { return std::accumulate(r.begin(), r.end(), 0); }

RootVec operator+(RootVec const &a, RootVec const &b)
{
	RootVec out(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		out[i] = a[i] + b[i];
	return out;
}

RootVec operator-(RootVec const &a, RootVec const &b)
{
	RootVec out(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		out[i] = a[i] - b[i];
	return out;
}

RootVec operator-(RootVec const &a)
{
	RootVec out(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		out[i] = -a[i];
	return out;
}

RootVec operator*(int k, RootVec const &a)
{
	RootVec out(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		out[i] = k * a[i];
	return out;
}

bool is_zero(RootVec const &r)
{
	return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

std::string to_string(RootVec const &r) { return fmt::format("[{}]", fmt::join(r, ",")); }

namespace {

bool is_positive(RootVec const &r)
{
	return !is_zero(r) && std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

bool canonical_less(RootVec const &a, RootVec const &b)
{
	int ha = height(a), hb = height(b);
	if (ha != hb)
		return ha < hb;
	return a < b;
}

} // namespace

// ---------------------------------------------------------------- CartanMatrix

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries))
{
	int n = rank();
	if (n == 0)
		throw DomainError("Cartan matrix is empty");
	for (auto const &row : entries_)
		if (static_cast<int>(row.size()) != n)
			throw DomainError("Cartan matrix is not square");
	for (int i = 0; i < n; ++i)
		if (entries_[i][i] != 2)
			throw DomainError(fmt::format("diagonal entries must equal 2 (a_{}{} = {})", i + 1, i + 1, entries_[i][i]));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (i != j && entries_[i][j] > 0)
				throw DomainError(fmt::format("off-diagonal entries must be <= 0 (a_{}{} = {})", i + 1, j + 1, entries_[i][j]));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
				throw DomainError(fmt::format("a_ij = 0 ⇔ a_ji = 0 violated at (i,j) = ({},{})", i + 1, j + 1));

	// connectivity and symmetrizer by traversal from node 0
	std::vector<Rational> d(n, Rational(0));
	d[0] = 1;
	std::queue<int> todo;
	todo.push(0);
	while (!todo.empty())
	{
		int i = todo.front();
		todo.pop();
		for (int j = 0; j < n; ++j)
		{
			if (j == i || entries_[i][j] == 0)
				continue;
			Rational dj = d[i] * entries_[i][j] / entries_[j][i];
			if (d[j] == 0)
			{
				d[j] = dj;
				todo.push(j);
			}
			else if (d[j] != dj)
				throw DomainError("matrix is not symmetrizable (no diagonal D with D*A symmetric)");
		}
	}
	for (int i = 0; i < n; ++i)
		if (d[i] == 0)
			throw DomainError("matrix is decomposable (Dynkin diagram is not connected)");

	mpz_class l = 1;
	for (auto const &x : d)
		l = lcm(l, x.get_den());
	mpz_class g = 0;
	for (auto const &x : d)
		g = gcd(g, mpz_class(x * l));
	symmetrizer_.resize(n);
	for (int i = 0; i < n; ++i)
		symmetrizer_[i] = static_cast<int>(mpz_class(d[i] * l / g).get_si());

	Matrix sym(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			sym(i, j) = symmetrizer_[i] * entries_[i][j];
	for (int k = 1; k <= n; ++k)
	{
		Matrix minor(k, k);
		for (int i = 0; i < k; ++i)
			for (int j = 0; j < k; ++j)
				minor(i, j) = sym(i, j);
		if (determinant(minor) <= 0)
			throw DomainError("matrix is not of finite type (symmetrization D*A is not positive definite)");
	}
}

CartanMatrix CartanMatrix::parse(std::string_view text)
{
	std::vector<std::vector<int>> rows;
	std::istringstream in{std::string(text)};
	std::string line;
	while (std::getline(in, line))
	{
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		std::istringstream ls(line);
		std::vector<int> row;
		std::string tok;
		while (ls >> tok)
		{
			try
			{
				std::size_t used = 0;
				int v = std::stoi(tok, &used);
				if (used != tok.size())
					throw std::invalid_argument(tok);
				row.push_back(v);
			}
			catch (std::exception const &)
			{
				throw DomainError("malformed Cartan matrix entry '" + tok + "'");
			}
		}
		if (!row.empty())
			rows.push_back(std::move(row));
	}
	return CartanMatrix(std::move(rows));
}

CartanMatrix CartanMatrix::from_label(std::string_view label)
{
	auto unknown = [&] { return DomainError("unknown type '" + std::string(label) + "'"); };
	if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
		throw unknown();
	char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
	int n = 0;
	for (char c : label.substr(1))
	{
		if (!std::isdigit(static_cast<unsigned char>(c)))
			throw unknown();
		n = n * 10 + (c - '0');
		if (n > 64)
			throw unknown();
	}
	auto chain = [](int size) {
		std::vector<std::vector<int>> a(size, std::vector<int>(size, 0));
		for (int i = 0; i < size; ++i)
		{
			a[i][i] = 2;
			if (i + 1 < size)
				a[i][i + 1] = a[i + 1][i] = -1;
		}
		return a;
	};
	std::vector<std::vector<int>> a;
	switch (kind)
	{
	case 'A':
		if (n < 1)
			throw unknown();
		a = chain(n);
		break;
	case 'B':
		if (n < 2)
			throw unknown();
		a = chain(n);
		a[n - 1][n - 2] = -2; // alpha_n short
		break;
	case 'C':
		if (n < 2)
			throw unknown();
		a = chain(n);
		a[n - 2][n - 1] = -2; // alpha_n long
		break;
	case 'D':
		if (n < 4)
			throw unknown();
		a = chain(n);
		a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
		a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
		break;
	case 'E':
	{
		if (n < 6 || n > 8)
			throw unknown();
		a.assign(n, std::vector<int>(n, 0));
		for (int i = 0; i < n; ++i)
			a[i][i] = 2;
		auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
		link(1, 3);
		link(2, 4);
		for (int i = 3; i < n; ++i)
			link(i, i + 1);
		break;
	}
	case 'F':
		if (n != 4)
			throw unknown();
		a = chain(4);
		a[2][1] = -2; // alpha_3, alpha_4 short
		break;
	case 'G':
		if (n != 2)
			throw unknown();
		a = chain(2);
		a[0][1] = -3; // alpha_1 short
		break;
	default:
		throw unknown();
	}
	CartanMatrix out(std::move(a));
	out.label_ = std::string(1, kind) + std::to_string(n);
	return out;
}

// ------------------------------------------------------------ FiniteElement

FiniteElement &FiniteElement::operator+=(FiniteElement const &o)
{
	if (context != o.context)
		throw ContextMismatch();
	for (std::size_t i = 0; i < coeffs.size(); ++i)
		coeffs[i] += o.coeffs[i];
	return *this;
}

FiniteElement &FiniteElement::operator-=(FiniteElement const &o)
{
	if (context != o.context)
		throw ContextMismatch();
	for (std::size_t i = 0; i < coeffs.size(); ++i)
		coeffs[i] -= o.coeffs[i];
	return *this;
}

FiniteElement &FiniteElement::operator*=(Rational const &s)
{
	for (auto &c : coeffs)
		c *= s;
	return *this;
}

bool FiniteElement::is_zero() const
{
	return std::all_of(coeffs.begin(), coeffs.end(), [](Rational const &c) { return c == 0; });
}

bool operator==(FiniteElement const &a, FiniteElement const &b)
{
	return a.context == b.context && a.coeffs == b.coeffs;
}

FiniteElement operator+(FiniteElement a, FiniteElement const &b) { return a += b; }
FiniteElement operator-(FiniteElement a, FiniteElement const &b) { return a -= b; }
FiniteElement operator*(Rational const &s, FiniteElement a) { return a *= s; }

// --------------------------------------------------------- SimpleLieAlgebra

SimpleLieAlgebra::SimpleLieAlgebra(CartanMatrix cartan) : cartan_(std::move(cartan))
{
	enumerate_roots();
	compute_structure_constants();
	build_tables();
}

void SimpleLieAlgebra::enumerate_roots()
{
	int n = rank();
	std::set<RootVec> roots;
	std::queue<RootVec> todo;
	for (int i = 0; i < n; ++i)
	{
		RootVec a(n, 0);
		a[i] = 1;
		roots.insert(a);
		todo.push(a);
	}
	while (!todo.empty())
	{
		auto beta = todo.front();
		todo.pop();
		for (int i = 0; i < n; ++i)
		{
			RootVec r = beta;
			r[i] -= root_on_coroot(beta, i);
			if (roots.insert(r).second)
			{
				if (roots.size() > 100000)
					throw DomainError("root enumeration does not terminate; matrix is not of finite type");
				todo.push(r);
			}
		}
	}
	for (auto const &r : roots)
		if (is_positive(r))
			positive_.push_back(r);
	std::sort(positive_.begin(), positive_.end(), canonical_less);

	int p = num_positive();
	basis_roots_.resize(2 * p + n, RootVec(n, 0));
	for (int k = 0; k < p; ++k)
	{
		root_index_[positive_[k]] = k;
		root_index_[-positive_[k]] = p + k;
		basis_roots_[k] = positive_[k];
		basis_roots_[p + k] = -positive_[k];
	}

	// raw (alpha_i|alpha_j) = d_i a_ij, then rescale so (theta|theta) = 2
	Matrix raw(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			raw(i, j) = cartan_.symmetrizer()[i] * cartan_(i, j);
	auto const &theta = positive_.back();
	Rational tt = 0;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			tt += theta[i] * raw(i, j) * theta[j];
	pairing_ = Matrix(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			pairing_(i, j) = raw(i, j) * 2 / tt;
}

int SimpleLieAlgebra::root_on_coroot(RootVec const &alpha, int i) const
{
	int s = 0;
	for (int j = 0; j < rank(); ++j)
		s += alpha[j] * cartan_(i, j);
	return s;
}

Rational SimpleLieAlgebra::root_pairing(RootVec const &a, RootVec const &b) const
{
	Rational s = 0;
	for (int i = 0; i < rank(); ++i)
	{
		if (a[i] == 0)
			continue;
		for (int j = 0; j < rank(); ++j)
			if (b[j] != 0)
				s += a[i] * pairing_(i, j) * b[j];
	}
	return s;
}

DenseVec SimpleLieAlgebra::coroot(RootVec const &alpha) const
{
	Rational aa = root_pairing(alpha, alpha);
	DenseVec out(rank());
	for (int i = 0; i < rank(); ++i)
		out[i] = alpha[i] * pairing_(i, i) / aa;
	return out;
}

int SimpleLieAlgebra::root_basis_index(RootVec const &r) const
{
	auto it = root_index_.find(r);
	if (it == root_index_.end())
		throw DomainError(to_string(r) + " is not a root");
	return it->second;
}

int SimpleLieAlgebra::e_index(int i) const
{
	RootVec a(rank(), 0);
	a[i] = 1;
	return root_basis_index(a);
}

int SimpleLieAlgebra::f_index(int i) const
{
	RootVec a(rank(), 0);
	a[i] = -1;
	return root_basis_index(a);
}

std::string SimpleLieAlgebra::basis_name(int b) const
{
	if (is_cartan_index(b))
		return fmt::format("h{}", b - 2 * num_positive() + 1);
	return "x" + to_string(basis_roots_[b]);
}

int SimpleLieAlgebra::string_below(RootVec const &alpha, RootVec const &beta) const
{
	int p = 0;
	RootVec cur = beta - alpha;
	while (is_root(cur))
	{
		++p;
		cur = cur - alpha;
	}
	return p;
}

namespace {

struct ConstantSolver
{
	SimpleLieAlgebra const &g;
	std::map<std::pair<RootVec, RootVec>, Rational> memo;

	bool positive(RootVec const &r) const { return is_positive(r); }

	int order(RootVec const &r) const
	{
		auto const &pos = g.positive_roots();
		return static_cast<int>(std::lower_bound(pos.begin(), pos.end(), r, canonical_less) - pos.begin());
	}

	std::pair<RootVec, RootVec> extraspecial(RootVec const &xi) const
	{
		for (auto const &r : g.positive_roots())
		{
			RootVec s = xi - r;
			if (is_positive(s) && g.is_root(s))
				return {r, s};
		}
		throw DomainError("internal: no extraspecial pair for " + to_string(xi));
	}

	Rational norm(RootVec const &r) const { return g.root_pairing(r, r); }

	Rational operator()(RootVec const &a, RootVec const &b)
	{
		RootVec s = a + b;
		if (is_zero(s) || !g.is_root(s))
			return 0;
		auto key = std::make_pair(a, b);
		if (auto it = memo.find(key); it != memo.end())
			return it->second;
		Rational out = compute(a, b, s);
		memo.emplace(key, out);
		return out;
	}

	Rational compute(RootVec const &a, RootVec const &b, RootVec const &s)
	{
		bool pa = positive(a), pb = positive(b);
		if (pa && pb)
		{
			if (order(a) > order(b))
				return -(*this)(b, a);
			auto [r1, s1] = extraspecial(s);
			if (a == r1)
				return g.string_below(a, b) + 1;
			// four-root identity with (a, b, -r1, -s1)
			Rational n_neg = -(g.string_below(r1, s1) + 1);
			Rational rest = 0;
			if (g.is_root(b - r1))
				rest += (*this)(b, -r1) * (*this)(a, -s1) / norm(b - r1);
			if (g.is_root(a - r1))
				rest += (*this)(-r1, a) * (*this)(b, -s1) / norm(a - r1);
			return -norm(s) * rest / n_neg;
		}
		if (!pa && !pb)
		{
			int p = g.string_below(a, b);
			return Rational(-(p + 1) * (p + 1)) / (*this)(-a, -b);
		}
		if (!pa)
			return -(*this)(b, a);
		// a > 0 > b; c = -(a + b) closes the triple
		RootVec c = -s;
		if (positive(c))
			return norm(c) / norm(b) * (*this)(c, a);
		return norm(c) / norm(a) * (*this)(b, c);
	}
};

} // namespace

void SimpleLieAlgebra::compute_structure_constants()
{
	ConstantSolver solver{*this, {}};
	int roots = 2 * num_positive();
	for (int i = 0; i < roots; ++i)
		for (int j = 0; j < roots; ++j)
		{
			auto const &a = basis_roots_[i];
			auto const &b = basis_roots_[j];
			RootVec s = a + b;
			if (is_zero(s) || !is_root(s))
				continue;
			Rational v = solver(a, b);
			int p = string_below(a, b);
			if (!is_integer(v) || abs(v) != p + 1)
				throw DomainError("internal: inconsistent structure constant for " + to_string(a) + ", " + to_string(b));
			n_[{i, j}] = static_cast<int>(v.get_num().get_si());
		}
}

int SimpleLieAlgebra::structure_constant(RootVec const &a, RootVec const &b) const
{
	auto it = n_.find({root_basis_index(a), root_basis_index(b)});
	return it == n_.end() ? 0 : it->second;
}

void SimpleLieAlgebra::build_tables()
{
	int dim = dimension();
	int p = num_positive();
	int n = rank();
	table_.assign(static_cast<std::size_t>(dim) * dim, {});
	form_table_.assign(static_cast<std::size_t>(dim) * dim, Rational(0));
	for (int b1 = 0; b1 < dim; ++b1)
		for (int b2 = 0; b2 < dim; ++b2)
		{
			auto &entry = table_[b1 * dim + b2];
			bool r1 = is_root_index(b1), r2 = is_root_index(b2);
			if (r1 && r2)
			{
				auto const &a = basis_roots_[b1];
				auto const &b = basis_roots_[b2];
				RootVec s = a + b;
				if (is_zero(s))
				{
					auto h = coroot(a);
					for (int i = 0; i < n; ++i)
						if (h[i] != 0)
							entry.emplace_back(2 * p + i, h[i]);
					form_table_[b1 * dim + b2] = Rational(2) / root_pairing(a, a);
				}
				else if (auto it = n_.find({b1, b2}); it != n_.end())
					entry.emplace_back(root_index_.at(s), Rational(it->second));
			}
			else if (!r1 && r2)
			{
				int v = root_on_coroot(basis_roots_[b2], b1 - 2 * p);
				if (v != 0)
					entry.emplace_back(b2, Rational(v));
			}
			else if (r1 && !r2)
			{
				int v = root_on_coroot(basis_roots_[b1], b2 - 2 * p);
				if (v != 0)
					entry.emplace_back(b1, Rational(-v));
			}
			else
			{
				int i = b1 - 2 * p, j = b2 - 2 * p;
				form_table_[b1 * dim + b2] = 4 * pairing_(i, j) / (pairing_(i, i) * pairing_(j, j));
			}
		}
}

FiniteElement SimpleLieAlgebra::zero() const { return FiniteElement{this, DenseVec(dimension())}; }

FiniteElement SimpleLieAlgebra::basis(int b) const
{
	auto x = zero();
	x.coeffs.at(b) = 1;
	return x;
}

FiniteElement SimpleLieAlgebra::bracket(FiniteElement const &x, FiniteElement const &y) const
{
	if (x.context != this || y.context != this)
		throw ContextMismatch();
	auto out = zero();
	int dim = dimension();
	for (int b1 = 0; b1 < dim; ++b1)
	{
		if (x.coeffs[b1] == 0)
			continue;
		for (int b2 = 0; b2 < dim; ++b2)
		{
			if (y.coeffs[b2] == 0)
				continue;
			Rational s = x.coeffs[b1] * y.coeffs[b2];
			for (auto const &[b, c] : table_[b1 * dim + b2])
				out.coeffs[b] += s * c;
		}
	}
	return out;
}

Rational SimpleLieAlgebra::form(FiniteElement const &x, FiniteElement const &y) const
{
	if (x.context != this || y.context != this)
		throw ContextMismatch();
	Rational out = 0;
	int dim = dimension();
	for (int b1 = 0; b1 < dim; ++b1)
	{
		if (x.coeffs[b1] == 0)
			continue;
		for (int b2 = 0; b2 < dim; ++b2)
			if (y.coeffs[b2] != 0 && form_table_[b1 * dim + b2] != 0)
				out += x.coeffs[b1] * y.coeffs[b2] * form_table_[b1 * dim + b2];
	}
	return out;
}

// ------------------------------------------------------ DiagramAutomorphism

FiniteElement DiagramAutomorphism::apply(FiniteElement const &x) const
{
	FiniteElement out{x.context, matrix.apply(x.coeffs)};
	return out;
}

DiagramAutomorphism diagram_automorphism(SimpleLieAlgebra const &g, std::vector<int> const &sigma)
{
	int n = g.rank();
	if (static_cast<int>(sigma.size()) != n)
		throw DomainError("permutation length does not match the rank");
	std::vector<bool> seen(n, false);
	for (int s : sigma)
	{
		if (s < 0 || s >= n || seen[s])
			throw DomainError("sigma is not a permutation of the nodes");
		seen[s] = true;
	}
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (g.cartan()(sigma[i], sigma[j]) != g.cartan()(i, j))
				throw DomainError(fmt::format("sigma is not a diagram symmetry: a_{}{} != a_{}{}", sigma[i] + 1,
				                              sigma[j] + 1, i + 1, j + 1));
	DiagramAutomorphism aut;
	aut.sigma = sigma;
	std::vector<int> power = sigma;
	auto is_identity = [&](std::vector<int> const &p) {
		for (int i = 0; i < n; ++i)
			if (p[i] != i)
				return false;
		return true;
	};
	while (!is_identity(power))
	{
		for (int i = 0; i < n; ++i)
			power[i] = sigma[power[i]];
		++aut.order;
	}
	if (aut.order > 2)
		throw DomainError(fmt::format("diagram automorphism of order {} is not supported (order must divide 2)", aut.order));

	int dim = g.dimension();
	std::vector<FiniteElement> image(dim, g.zero());
	for (int i = 0; i < n; ++i)
	{
		image[g.e_index(i)] = g.e(sigma[i]);
		image[g.f_index(i)] = g.f(sigma[i]);
		image[g.cartan_basis_index(i)] = g.h(sigma[i]);
	}
	for (auto const &gamma : g.positive_roots())
	{
		if (height(gamma) == 1)
			continue;
		for (int i = 0; i < n; ++i)
		{
			RootVec a(n, 0);
			a[i] = 1;
			RootVec rest = gamma - a;
			if (!g.is_root(rest) || !is_positive(rest))
				continue;
			Rational np = g.structure_constant(a, rest);
			Rational nn = g.structure_constant(-a, -rest);
			image[g.root_basis_index(gamma)] =
			    Rational(1) / np * g.bracket(image[g.e_index(i)], image[g.root_basis_index(rest)]);
			image[g.root_basis_index(-gamma)] =
			    Rational(1) / nn * g.bracket(image[g.f_index(i)], image[g.root_basis_index(-rest)]);
			break;
		}
	}
	aut.matrix = Matrix(dim, dim);
	for (int b = 0; b < dim; ++b)
		for (int r = 0; r < dim; ++r)
			aut.matrix(r, b) = image[b].coeffs[r];

	for (int b1 = 0; b1 < dim; ++b1)
		for (int b2 = 0; b2 < dim; ++b2)
		{
			auto lhs = aut.apply(g.bracket(g.basis(b1), g.basis(b2)));
			auto rhs = g.bracket(image[b1], image[b2]);
			if (!(lhs == rhs))
				throw DomainError("internal: induced map does not preserve the bracket on " + g.basis_name(b1) +
				                  ", " + g.basis_name(b2));
		}
	return aut;
}

std::vector<std::string> check_serre_relations(SimpleLieAlgebra const &g)
{
	std::vector<std::string> failures;
	int n = g.rank();
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			auto efh = g.bracket(g.e(i), g.f(j));
			if (!(efh == (i == j ? g.h(i) : g.zero())))
				failures.push_back(fmt::format("[e{},f{}]", i + 1, j + 1));
			if (!(g.bracket(g.h(i), g.e(j)) == Rational(g.cartan()(i, j)) * g.e(j)))
				failures.push_back(fmt::format("[h{},e{}]", i + 1, j + 1));
			if (!(g.bracket(g.h(i), g.f(j)) == Rational(-g.cartan()(i, j)) * g.f(j)))
				failures.push_back(fmt::format("[h{},f{}]", i + 1, j + 1));
			if (!g.bracket(g.h(i), g.h(j)).is_zero())
				failures.push_back(fmt::format("[h{},h{}]", i + 1, j + 1));
			if (i == j)
				continue;
			auto xe = g.e(j), xf = g.f(j);
			for (int k = 0; k < 1 - g.cartan()(i, j); ++k)
			{
				xe = g.bracket(g.e(i), xe);
				xf = g.bracket(g.f(i), xf);
			}
			if (!xe.is_zero())
				failures.push_back(fmt::format("(ad e{})^{} e{}", i + 1, 1 - g.cartan()(i, j), j + 1));
			if (!xf.is_zero())
				failures.push_back(fmt::format("(ad f{})^{} f{}", i + 1, 1 - g.cartan()(i, j), j + 1));
		}
	return failures;
}

} // namespace imverma
