#include "imverma/verma.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <set>

namespace imverma {

namespace {

std::string trim(std::string_view s)
{
	auto b = s.find_first_not_of(" \t\n");
	if (b == std::string_view::npos)
		return {};
	auto e = s.find_last_not_of(" \t\n");
	return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
	std::vector<std::string> out;
	std::size_t start = 0;
	while (true)
	{
		auto pos = s.find(sep, start);
		out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
		if (pos == std::string_view::npos)
			break;
		start = pos + 1;
	}
	return out;
}

int parse_int(std::string const &text, std::string_view what)
{
	int v = 0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
	if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
		throw DomainError(fmt::format("malformed {} '{}'", what, text));
	return v;
}

} // namespace

bool Weight::is_reduced_admissible() const
{
	if (c != 0)
		return false;
	return std::none_of(h.begin(), h.end(), [](Rational const &v) { return is_integer(v) && v >= 0; });
}

std::string Weight::to_string() const
{
	std::vector<std::string> parts;
	for (std::size_t i = 0; i < h.size(); ++i)
		parts.push_back(fmt::format("h{}={}", i + 1, to_short_string(h[i])));
	parts.push_back(fmt::format("c={}", to_short_string(c)));
	parts.push_back(fmt::format("d={}", to_short_string(d)));
	return fmt::format("{}", fmt::join(parts, ","));
}

Weight parse_weight(std::string_view text, int rank)
{
	Weight w{std::vector<Rational>(rank), 0, 0};
	std::set<std::string> seen;
	if (trim(text).empty())
		return w;
	for (auto const &item : split(text, ','))
	{
		auto eq = item.find('=');
		if (eq == std::string::npos)
			throw DomainError(fmt::format("malformed weight entry '{}'", item));
		auto key = trim(item.substr(0, eq));
		auto value = parse_rational(trim(item.substr(eq + 1)));
		if (!seen.insert(key).second)
			throw DomainError(fmt::format("weight key '{}' given twice", key));
		if (key == "c")
			w.c = value;
		else if (key == "d")
			w.d = value;
		else if (key.size() > 1 && key[0] == 'h')
		{
			int i = parse_int(key.substr(1), "weight key");
			if (i < 1 || i > rank)
				throw DomainError(fmt::format("weight key '{}' outside h1..h{}", key, rank));
			w.h[i - 1] = value;
		}
		else
			throw DomainError(fmt::format("unknown weight key '{}'", key));
	}
	return w;
}

std::string WeightOffset::to_string() const
{
	return fmt::format("k={};s={}", k ? std::to_string(*k) : std::string("*"), imverma::to_string(s));
}

void ModuleVector::add(Monomial const &m, Rational const &coef)
{
	if (coef == 0)
		return;
	auto [it, inserted] = terms.try_emplace(m, 0);
	it->second += coef;
	if (it->second == 0)
		terms.erase(it);
}

void ModuleVector::add_scaled(Rational const &coef, ModuleVector const &v)
{
	if (coef == 0)
		return;
	for (auto const &[m, c] : v.terms)
		add(m, coef * c);
}

ModuleVector operator+(ModuleVector a, ModuleVector const &b)
{
	a.add_scaled(1, b);
	return a;
}

ModuleVector operator-(ModuleVector a, ModuleVector const &b)
{
	a.add_scaled(-1, b);
	return a;
}

ModuleVector operator*(Rational const &s, ModuleVector a)
{
	if (s == 0)
		return {};
	for (auto &[m, c] : a.terms)
		c *= s;
	return a;
}

VermaModule::VermaModule(AffineAlgebra const &alg, Weight lambda, VermaKind kind)
    : alg_(&alg), lambda_(std::move(lambda)), kind_(kind)
{
	if (static_cast<int>(lambda_.h.size()) != alg.rank())
		throw DomainError(fmt::format("weight has {} h-values, algebra rank is {}", lambda_.h.size(), alg.rank()));
	if (kind_ == VermaKind::Reduced && lambda_.c != 0)
		throw DomainError("reduced module needs lambda(c) = 0");
}

bool VermaModule::is_degenerate() const
{
	return std::any_of(lambda_.h.begin(), lambda_.h.end(), [](Rational const &v) { return is_integer(v) && v < 0; });
}

ModuleVector VermaModule::highest_weight_vector() const
{
	ModuleVector v;
	v.add({}, 1);
	return v;
}

bool VermaModule::is_symbol(int basis, int degree) const
{
	auto const &g = alg_->finite();
	int p = g.num_positive();
	if (basis >= p && basis < 2 * p)
		return true;
	return kind_ == VermaKind::Imaginary && g.is_cartan_index(basis) && degree < 0;
}

Symbol VermaModule::symbol_of(int basis, int degree) const
{
	if (!is_symbol(basis, degree))
		throw DomainError(fmt::format("{} (x) t^{} is not a PBW symbol", alg_->finite().basis_name(basis), degree));
	auto const &g = alg_->finite();
	if (g.is_cartan_index(basis))
		return {Symbol::B, basis - g.cartan_basis_index(0), degree};
	return {Symbol::F, basis - g.num_positive(), degree};
}

LoopElement VermaModule::loop_of(Symbol const &s) const
{
	auto const &g = alg_->finite();
	if (s.kind == Symbol::B)
		return alg_->loop(g.cartan_basis_index(s.index), s.degree);
	return alg_->loop(g.num_positive() + s.index, s.degree);
}

Weight VermaModule::weight_of(Monomial const &m) const
{
	auto const &g = alg_->finite();
	Weight w = lambda_;
	for (auto const &s : m)
	{
		w.d += s.degree;
		if (s.kind == Symbol::F)
			for (int i = 0; i < g.rank(); ++i)
				w.h[i] -= g.root_on_coroot(g.positive_roots()[s.index], i);
	}
	return w;
}

WeightOffset VermaModule::offset_of(Monomial const &m) const
{
	auto const &g = alg_->finite();
	WeightOffset o{0, RootVec(g.rank(), 0)};
	for (auto const &s : m)
	{
		*o.k -= s.degree;
		if (s.kind == Symbol::F)
			o.s = o.s + g.positive_roots()[s.index];
	}
	return o;
}

ModuleVector VermaModule::act(LoopElement const &x, ModuleVector const &v) const
{
	if (x.context && x.context != &alg_->finite())
		throw ContextMismatch();
	ModuleVector out;
	for (auto const &[key, coef] : x.terms)
		for (auto const &[m, c] : v.terms)
			out.add_scaled(coef * c, act_basis(key, m));
	if (x.c != 0)
		out.add_scaled(x.c * lambda_.c, v);
	if (x.d != 0)
		for (auto const &[m, c] : v.terms)
			out.add(m, x.d * c * weight_of(m).d);
	return out;
}

void VermaModule::add_bracket_action(ModuleVector &out, BasisKey g, int other_basis, int other_degree,
                                     Rational const &coef, Monomial const &rest) const
{
	auto const &fin = alg_->finite();
	auto [b, n] = g;
	for (auto const &[k, cf] : fin.basis_bracket(b, other_basis))
		out.add_scaled(coef * cf, act_basis({k, n + other_degree}, rest));
	if (n == -other_degree && lambda_.c != 0)
	{
		auto const &form = fin.basis_form(b, other_basis);
		if (form != 0)
			out.add(rest, coef * n * form * lambda_.c);
	}
}

ModuleVector const &VermaModule::act_basis(BasisKey g, Monomial const &m) const
{
	auto key = std::pair{g, m};
	{
		std::lock_guard lock(cache_mutex_);
		auto it = act_cache_.find(key);
		if (it != act_cache_.end())
			return it->second;
	}
	auto const &fin = alg_->finite();
	auto [b, n] = g;
	ModuleVector out;
	if (fin.is_cartan_index(b) && n == 0)
		out.add(m, weight_of(m).h[b - fin.cartan_basis_index(0)]);
	else if (is_symbol(b, n))
		out = insert(symbol_of(b, n), m);
	else if (!m.empty())
	{
		// g y rest = y (g rest) + [g, y] rest
		Monomial rest(m.begin() + 1, m.end());
		ModuleVector inner = act_basis(g, rest);
		out = left_multiply(m.front(), inner);
		auto y = loop_of(m.front()).terms.begin()->first;
		add_bracket_action(out, g, y.first, y.second, 1, rest);
	}
	// on v_lambda everything left (positive part, h (x) t^l with l > 0, reduced h (x) t^l) acts by 0
	std::lock_guard lock(cache_mutex_);
	return act_cache_.emplace(std::move(key), std::move(out)).first->second;
}

ModuleVector const &VermaModule::insert(Symbol const &s, Monomial const &m) const
{
	auto key = std::pair{s, m};
	{
		std::lock_guard lock(cache_mutex_);
		auto it = insert_cache_.find(key);
		if (it != insert_cache_.end())
			return it->second;
	}
	ModuleVector out;
	if (m.empty() || s <= m.front())
	{
		Monomial prod;
		prod.reserve(m.size() + 1);
		prod.push_back(s);
		prod.insert(prod.end(), m.begin(), m.end());
		out.add(prod, 1);
	}
	else
	{
		// s z rest = z (s rest) + [s, z] rest
		Monomial rest(m.begin() + 1, m.end());
		ModuleVector inner = insert(s, rest);
		out = left_multiply(m.front(), inner);
		auto sk = loop_of(s).terms.begin()->first;
		auto zk = loop_of(m.front()).terms.begin()->first;
		add_bracket_action(out, sk, zk.first, zk.second, 1, rest);
	}
	std::lock_guard lock(cache_mutex_);
	return insert_cache_.emplace(std::move(key), std::move(out)).first->second;
}

ModuleVector VermaModule::left_multiply(Symbol const &s, ModuleVector const &v) const
{
	ModuleVector out;
	for (auto const &[m, c] : v.terms)
		out.add_scaled(c, insert(s, m));
	return out;
}

void VermaModule::check_offset(WeightOffset const &offset, TruncationWindow const &window) const
{
	window.validate();
	if (static_cast<int>(offset.s.size()) != alg_->rank())
		throw DomainError(fmt::format("offset {} has the wrong rank", offset.to_string()));
	if (height(offset.s) > window.H)
		throw DomainError(fmt::format("offset height {} exceeds window H={}", height(offset.s), window.H));
}

namespace {

/// Candidate symbols for a weight space: every B symbol (imaginary case) and
/// every F symbol whose root fits under s, in canonical order.
std::vector<Symbol> candidate_symbols(SimpleLieAlgebra const &g, VermaKind kind, RootVec const &s, int N)
{
	std::vector<Symbol> out;
	if (kind == VermaKind::Imaginary)
		for (int i = 0; i < g.rank(); ++i)
			for (int n = -N; n <= -1; ++n)
				out.push_back({Symbol::B, i, n});
	for (int r = 0; r < g.num_positive(); ++r)
	{
		auto const &gamma = g.positive_roots()[r];
		bool fits = true;
		for (std::size_t j = 0; j < s.size(); ++j)
			fits = fits && gamma[j] <= s[j];
		if (!fits)
			continue;
		for (int n = -N; n <= N; ++n)
			out.push_back({Symbol::F, r, n});
	}
	return out;
}

struct DimCounter
{
	SimpleLieAlgebra const &g;
	std::vector<Symbol> const &types;
	bool track_degree;
	int N;
	std::map<std::tuple<std::size_t, RootVec, int, int>, mpz_class> memo;

	mpz_class count(std::size_t t, RootVec const &s, int deg, int len)
	{
		if (t == types.size())
			return is_zero(s) && (!track_degree || deg == 0) ? 1 : 0;
		if (track_degree && std::abs(deg) > N * len)
			return 0;
		auto key = std::tuple{t, s, track_degree ? deg : 0, len};
		if (auto it = memo.find(key); it != memo.end())
			return it->second;
		Symbol const &sym = types[t];
		RootVec const *gamma = sym.kind == Symbol::F ? &g.positive_roots()[sym.index] : nullptr;
		mpz_class total = 0;
		RootVec rem = s;
		int d = deg;
		for (int c = 0; c <= len; ++c)
		{
			if (c > 0)
			{
				if (gamma)
				{
					rem = rem - *gamma;
					if (std::any_of(rem.begin(), rem.end(), [](int x) { return x < 0; }))
						break;
				}
				d -= sym.degree;
			}
			total += count(t + 1, rem, d, len - c);
		}
		memo.emplace(key, total);
		return total;
	}
};

} // namespace

mpz_class VermaModule::weight_dim(WeightOffset const &offset, TruncationWindow const &window) const
{
	check_offset(offset, window);
	if (std::any_of(offset.s.begin(), offset.s.end(), [](int x) { return x < 0; }))
		return 0;
	auto types = candidate_symbols(alg_->finite(), kind_, offset.s, window.N);
	DimCounter counter{alg_->finite(), types, offset.k.has_value(), window.N, {}};
	return counter.count(0, offset.s, offset.k ? -*offset.k : 0, window.L);
}

std::vector<Monomial> VermaModule::weight_space(WeightOffset const &offset, TruncationWindow const &window) const
{
	check_offset(offset, window);
	std::vector<Monomial> out;
	if (std::any_of(offset.s.begin(), offset.s.end(), [](int x) { return x < 0; }))
		return out;
	auto const &g = alg_->finite();
	auto types = candidate_symbols(g, kind_, offset.s, window.N);
	Monomial cur;
	std::function<void(std::size_t, RootVec const &, int)> dfs = [&](std::size_t t, RootVec const &s, int deg) {
		int len = window.L - static_cast<int>(cur.size());
		if (is_zero(s) && (!offset.k || deg == 0))
			out.push_back(cur);
		if (offset.k && std::abs(deg) > window.N * len)
			return;
		for (std::size_t u = t; u < types.size() && len > 0; ++u)
		{
			Symbol const &sym = types[u];
			RootVec rem = s;
			if (sym.kind == Symbol::F)
			{
				rem = rem - g.positive_roots()[sym.index];
				if (std::any_of(rem.begin(), rem.end(), [](int x) { return x < 0; }))
					continue;
			}
			cur.push_back(sym);
			dfs(u, rem, deg - sym.degree);
			cur.pop_back();
		}
	};
	dfs(0, offset.s, offset.k ? -*offset.k : 0);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Monomial> VermaModule::enumerate(TruncationWindow const &window) const
{
	window.validate();
	auto const &g = alg_->finite();
	std::vector<Symbol> types;
	if (kind_ == VermaKind::Imaginary)
		for (int i = 0; i < g.rank(); ++i)
			for (int n = -window.N; n <= -1; ++n)
				types.push_back({Symbol::B, i, n});
	for (int r = 0; r < g.num_positive(); ++r)
		if (height(g.positive_roots()[r]) <= window.H)
			for (int n = -window.N; n <= window.N; ++n)
				types.push_back({Symbol::F, r, n});
	std::vector<Monomial> out;
	Monomial cur;
	std::function<void(std::size_t, int)> dfs = [&](std::size_t t, int budget) {
		out.push_back(cur);
		if (static_cast<int>(cur.size()) == window.L)
			return;
		for (std::size_t u = t; u < types.size(); ++u)
		{
			int cost = types[u].kind == Symbol::F ? height(g.positive_roots()[types[u].index]) : 0;
			if (cost > budget)
				continue;
			cur.push_back(types[u]);
			dfs(u, budget - cost);
			cur.pop_back();
		}
	};
	dfs(0, window.H);
	std::sort(out.begin(), out.end());
	return out;
}

std::string VermaModule::to_string(Symbol const &s) const
{
	if (s.kind == Symbol::B)
		return fmt::format("B({};{})", s.index + 1, -s.degree);
	auto const &gamma = alg_->finite().positive_roots()[s.index];
	return fmt::format("F({};{})", fmt::join(gamma, ","), s.degree);
}

std::string VermaModule::to_string(Monomial const &m) const
{
	if (m.empty())
		return "1";
	std::vector<std::string> parts;
	for (auto const &s : m)
		parts.push_back(to_string(s));
	return fmt::format("{}", fmt::join(parts, "*"));
}

std::string VermaModule::to_string(ModuleVector const &v) const
{
	if (v.is_zero())
		return "0";
	std::vector<std::string> parts;
	for (auto const &[m, c] : v.terms)
		parts.push_back(fmt::format("{}*{}", to_short_string(c), to_string(m)));
	return fmt::format("{}", fmt::join(parts, " + "));
}

Monomial VermaModule::parse_monomial(std::string_view text) const
{
	auto t = trim(text);
	Monomial out;
	if (t == "1")
		return out;
	auto const &g = alg_->finite();
	for (auto const &item : split(t, '*'))
	{
		if (item.size() < 5 || (item[0] != 'F' && item[0] != 'B') || item[1] != '(' || item.back() != ')')
			throw DomainError(fmt::format("malformed PBW symbol '{}'", item));
		auto body = item.substr(2, item.size() - 3);
		auto semi = body.find(';');
		if (semi == std::string::npos)
			throw DomainError(fmt::format("malformed PBW symbol '{}'", item));
		int deg = parse_int(trim(body.substr(semi + 1)), "loop degree");
		auto head = body.substr(0, semi);
		if (item[0] == 'B')
		{
			if (kind_ != VermaKind::Imaginary)
				throw DomainError("B symbols exist only in imaginary Verma modules");
			int i = parse_int(trim(head), "node");
			if (i < 1 || i > g.rank() || deg <= 0)
				throw DomainError(fmt::format("B symbol '{}' needs 1 <= i <= {} and l > 0", item, g.rank()));
			out.push_back({Symbol::B, i - 1, -deg});
		}
		else
		{
			RootVec gamma;
			for (auto const &c : split(head, ','))
				gamma.push_back(parse_int(c, "root coordinate"));
			if (static_cast<int>(gamma.size()) != g.rank() || is_zero(gamma) || !g.is_root(gamma) ||
			    std::any_of(gamma.begin(), gamma.end(), [](int x) { return x < 0; }))
				throw DomainError(fmt::format("'{}' does not name a positive root", head));
			out.push_back({Symbol::F, g.root_basis_index(gamma), deg});
		}
	}
	if (!std::is_sorted(out.begin(), out.end()))
		throw DomainError(fmt::format("monomial '{}' is not in canonical order", t));
	return out;
}

TruncationWindow required_window(VermaModule const &m, ModuleVector const &v)
{
	TruncationWindow w{0, 0, 0};
	for (auto const &[mono, c] : v.terms)
	{
		w.L = std::max(w.L, static_cast<int>(mono.size()));
		for (auto const &s : mono)
			w.N = std::max(w.N, std::abs(s.degree));
		w.H = std::max(w.H, height(m.offset_of(mono).s));
	}
	return w;
}

mpz_class verma_weight_dim(AffineAlgebra const &alg, Weight const &lambda, WeightOffset const &offset,
                           TruncationWindow const &window)
{
	return VermaModule(alg, lambda, VermaKind::Imaginary).weight_dim(offset, window);
}

mpz_class reduced_weight_dim(AffineAlgebra const &alg, Weight const &lambda, WeightOffset const &offset,
                             TruncationWindow const &window)
{
	return VermaModule(alg, lambda, VermaKind::Reduced).weight_dim(offset, window);
}

std::vector<SingularVector> find_singular_vectors(VermaModule const &m, std::vector<WeightOffset> const &region,
                                                  TruncationWindow const &window)
{
	window.validate();
	auto const &alg = m.algebra();
	std::map<WeightOffset, std::vector<Monomial>> spaces;
	if (region.empty())
	{
		for (auto &mono : m.enumerate(window))
			spaces[m.offset_of(mono)].push_back(std::move(mono));
	}
	else
		for (auto const &o : region)
		{
			if (!o.k)
				throw DomainError("singular-vector regions need explicit delta offsets");
			spaces[o] = m.weight_space(o, window);
		}

	std::vector<LoopElement> gens;
	for (int i = 0; i < alg.rank(); ++i)
		for (int n = -window.N; n <= window.N; ++n)
			gens.push_back(alg.e(i, n));
	if (m.kind() == VermaKind::Imaginary)
		for (int i = 0; i < alg.rank(); ++i)
			for (int l = 1; l <= window.N; ++l)
				gens.push_back(alg.h(i, l));

	std::vector<SingularVector> out;
	for (auto const &[offset, basis] : spaces)
	{
		std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
		std::vector<SparseVec> columns;
		for (auto const &mono : basis)
		{
			ModuleVector v;
			v.add(mono, 1);
			SparseVec col;
			for (std::size_t gi = 0; gi < gens.size(); ++gi)
				for (auto const &[target, c] : m.act(gens[gi], v).terms)
				{
					auto [it, fresh] = rows.try_emplace({gi, target}, rows.size());
					col[it->second] = c;
				}
			columns.push_back(std::move(col));
		}
		for (auto const &combo : sparse_kernel(columns).kernel)
		{
			ModuleVector v;
			for (auto const &[j, c] : combo)
				v.add(basis[j], c);
			out.push_back({offset, std::move(v)});
		}
	}
	return out;
}

std::optional<int> local_nilpotency_degree(VermaModule const &m, ModuleVector const &v, int i, int n, int cap)
{
	auto e = m.algebra().e(i, n);
	ModuleVector w = v;
	int p = 0;
	while (!w.is_zero())
	{
		if (p == cap)
			return std::nullopt;
		w = m.act(e, w);
		++p;
	}
	return p;
}

} // namespace imverma
