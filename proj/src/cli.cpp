#include "imverma/cli.hpp"

#include "imverma/category.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>

namespace imverma::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct JobConfig
{
	std::string command;
	std::string type;
	std::string twist;
	std::string lambda;
	std::string window_text;
	std::string output;
	std::string format;
	std::string kind = "imaginary";
	int height = 3;
	int loop_degree = 3;
	int delta_max = 6;
	std::string offset_s;
	std::string which = "natural";
	std::string roots;
	std::string generator = "e1,0";
	std::string vector = "1";
	std::string coef = "1";
	std::string module_path;
	std::string weights;
	int loop_irrep = -1;
	std::string data_path;
	long long scramble_seed = -1;
	int cap = 16;
	std::string config_path;
};

std::unique_ptr<AffineAlgebra> make_algebra(JobConfig const &cfg)
{
	if (cfg.type.empty())
		throw UsageError("--type is required");
	try
	{
		return std::make_unique<AffineAlgebra>(CartanMatrix::from_label(cfg.type));
	}
	catch (DomainError const &e)
	{
		throw UsageError(e.what());
	}
}

TruncationWindow window_of(JobConfig const &cfg)
{
	try
	{
		return parse_window(cfg.window_text);
	}
	catch (DomainError const &e)
	{
		throw UsageError(fmt::format("malformed window: {}", e.what()));
	}
}

Weight weight_of(std::string const &text, int rank)
{
	try
	{
		return parse_weight(text, rank);
	}
	catch (DomainError const &e)
	{
		throw UsageError(fmt::format("malformed lambda: {}", e.what()));
	}
}

VermaKind kind_of(JobConfig const &cfg)
{
	if (cfg.kind == "imaginary")
		return VermaKind::Imaginary;
	if (cfg.kind == "reduced")
		return VermaKind::Reduced;
	throw UsageError(fmt::format("unknown kind '{}' (imaginary or reduced)", cfg.kind));
}

std::vector<std::string> split(std::string const &text, char sep)
{
	std::vector<std::string> out;
	std::string part;
	std::istringstream in(text);
	while (std::getline(in, part, sep))
		if (!part.empty())
			out.push_back(part);
	return out;
}

int parse_int(std::string const &text, std::string_view what)
{
	try
	{
		std::size_t pos = 0;
		int v = std::stoi(text, &pos);
		if (pos == text.size())
			return v;
	}
	catch (std::exception const &)
	{
	}
	throw UsageError(fmt::format("malformed {} '{}'", what, text));
}

/// "(1 3)(2 4)" in cycle notation or "3,2,1" as the list of images, 1-based.
std::vector<int> parse_permutation(std::string const &text, int rank)
{
	std::vector<int> sigma(rank);
	for (int i = 0; i < rank; ++i)
		sigma[i] = i;
	auto node = [&](std::string const &t) {
		int v = parse_int(t, "twist node");
		if (v < 1 || v > rank)
			throw UsageError(fmt::format("twist node {} outside 1..{}", v, rank));
		return v - 1;
	};
	if (text.find('(') != std::string::npos)
	{
		std::regex cycle(R"(\(([^()]*)\))");
		for (std::sregex_iterator it(text.begin(), text.end(), cycle), end; it != end; ++it)
		{
			auto items = split((*it)[1].str(), ' ');
			for (std::size_t k = 0; k < items.size(); ++k)
				sigma[node(items[k])] = node(items[(k + 1) % items.size()]);
		}
		return sigma;
	}
	auto items = split(text, ',');
	if (static_cast<int>(items.size()) != rank)
		throw UsageError(fmt::format("twist needs {} images, got '{}'", rank, text));
	for (int i = 0; i < rank; ++i)
		sigma[i] = node(items[i]);
	return sigma;
}

AffineRoot parse_root(std::string const &text, int rank)
{
	std::regex re(R"(\s*\[([-0-9, ]*)\]\s*(?:([+-])\s*(\d*)\s*d)?\s*)");
	std::smatch m;
	if (!std::regex_match(text, m, re))
		throw UsageError(fmt::format("malformed root '{}' (expected like [1,0]+2d)", text));
	AffineRoot r;
	for (auto const &c : split(m[1].str(), ','))
		r.finite.push_back(parse_int(c, "root coordinate"));
	if (static_cast<int>(r.finite.size()) != rank)
		throw UsageError(fmt::format("root '{}' needs {} coordinates", text, rank));
	if (m[2].matched)
	{
		r.delta = m[3].str().empty() ? 1 : parse_int(m[3].str(), "delta coefficient");
		if (m[2].str() == "-")
			r.delta = -r.delta;
	}
	return r;
}

RootVec parse_offset(std::string const &text, int rank)
{
	if (text.empty())
		return RootVec(rank, 0);
	RootVec s;
	for (auto const &c : split(text, ','))
		s.push_back(parse_int(c, "offset coordinate"));
	if (static_cast<int>(s.size()) != rank)
		throw UsageError(fmt::format("offset '{}' needs {} coordinates", text, rank));
	return s;
}

json rows_json(std::vector<std::vector<int>> const &rows)
{
	return rows;
}

json config_json(JobConfig const &cfg, TruncationWindow const *window)
{
	json c{{"command", cfg.command}, {"type", cfg.type}};
	if (window)
		c["window"] = window->to_string();
	return c;
}

json envelope(json config, json result)
{
	return {{"schema_version", kSchemaVersion}, {"config", std::move(config)}, {"result", std::move(result)}};
}

json vector_json(VermaModule const &m, ModuleVector const &v)
{
	json out = json::object();
	for (auto const &[mono, c] : v.terms)
		out[m.to_string(mono)] = to_string(c);
	return out;
}

json weight_json(Weight const &w)
{
	return w.to_string();
}

json axioms_json(std::vector<AxiomVerdict> const &axioms)
{
	json out = json::array();
	for (auto const &a : axioms)
		out.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}, {"witnesses", a.witnesses}});
	return out;
}

std::string cmd_algebra(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	json r;
	r["rank"] = a->rank();
	r["finite_dimension"] = a->finite().dimension();
	r["cartan"] = rows_json(a->finite().cartan().entries());
	r["affine_cartan"] = rows_json(a->cartan());
	r["h0"] = a->h(0).to_string();
	auto failures = check_affine_presentation(*a);
	r["presentation"] = {{"pass", failures.empty()}, {"failures", failures}};
	json config = config_json(cfg, nullptr);
	if (!cfg.twist.empty())
	{
		auto sigma = parse_permutation(cfg.twist, a->rank());
		auto aut = diagram_automorphism(a->finite(), sigma);
		TruncationWindow w;
		w.N = cfg.loop_degree;
		auto t = twisted_fixed_subalgebra(*a, aut, w);
		json pieces = json::array();
		for (int m = -cfg.loop_degree; m <= cfg.loop_degree; ++m)
			pieces.push_back({{"degree", m},
			                  {"dimension", t.dimension(m)},
			                  {"natural_borel_dimension", t.natural_borel_dimension(m)}});
		auto closure = check_twisted_closure(*a, t);
		std::vector<int> one_based;
		for (int s : sigma)
			one_based.push_back(s + 1);
		r["twisted"] = {{"sigma", one_based},
		                {"order", aut.order},
		                {"pieces", pieces},
		                {"closure", {{"pass", closure.empty()}, {"failures", closure}}}};
		config["twist"] = cfg.twist;
		config["loop_degree"] = cfg.loop_degree;
	}
	return envelope(config, r).dump(2);
}

std::string cmd_roots(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	json roots = json::array();
	for (auto const &r : a->roots_in_window(cfg.height, cfg.loop_degree))
		roots.push_back({{"root", r.to_string()},
		                 {"kind", r.is_imaginary() ? "imaginary" : "real"},
		                 {"multiplicity", r.is_imaginary() ? a->rank() : 1}});
	json config = config_json(cfg, nullptr);
	config["height"] = cfg.height;
	config["loop_degree"] = cfg.loop_degree;
	return envelope(config, roots).dump(2);
}

std::string cmd_partition(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	ClosedPartition s;
	if (cfg.which == "natural")
		s = natural_partition(*a);
	else if (cfg.which == "standard")
		s = standard_partition(*a);
	else if (cfg.which == "custom")
	{
		std::set<AffineRoot> members;
		for (auto const &t : split(cfg.roots, ';'))
			members.insert(parse_root(t, a->rank()));
		s = custom_partition("custom", members);
	}
	else
		throw UsageError(fmt::format("unknown partition '{}' (natural, standard or custom)", cfg.which));
	TruncationWindow w;
	w.H = cfg.height;
	w.N = cfg.loop_degree;
	w.validate();
	auto report = check_closed_partition(*a, s, w);
	json records = json::array();
	for (auto const &rec : report.records)
		records.push_back({{"root", rec.root.to_string()}, {"in_S", rec.in_S}, {"in_minus_S", rec.in_minus_S}});
	json violations = json::array();
	for (auto const &v : report.violations)
	{
		json j{{"kind", v.kind}, {"a", v.a.to_string()}};
		if (v.b)
			j["b"] = v.b->to_string();
		if (v.sum)
			j["sum"] = v.sum->to_string();
		violations.push_back(j);
	}
	json config = config_json(cfg, nullptr);
	config["which"] = cfg.which;
	config["height"] = cfg.height;
	config["loop_degree"] = cfg.loop_degree;
	json r{{"partition", s.name},
	       {"result", report.pass ? "pass" : "fail"},
	       {"checked_sums", report.checked_sums},
	       {"unchecked_sums", report.unchecked_sums},
	       {"records", records},
	       {"violations", violations}};
	return envelope(config, r).dump(2);
}

std::string cmd_verma_dims(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	auto window = window_of(cfg);
	auto lambda = weight_of(cfg.lambda, a->rank());
	auto kind = kind_of(cfg);
	auto s = parse_offset(cfg.offset_s, a->rank());
	if (cfg.delta_max < 0)
		throw UsageError("--delta-max must be non-negative");
	VermaModule m(*a, lambda, kind);
	std::vector<std::pair<int, mpz_class>> rows;
	for (int k = 0; k <= cfg.delta_max; ++k)
		rows.push_back({k, m.weight_dim(WeightOffset{k, s}, window)});
	bool exact_note = is_zero(s);
	int exact_up_to = std::min(window.N, window.L);

	if (cfg.format == "json")
	{
		json table = json::array();
		for (auto const &[k, d] : rows)
			table.push_back({{"k", k}, {"dim", d.get_str()}});
		json config = config_json(cfg, &window);
		config["lambda"] = lambda.to_string();
		config["kind"] = cfg.kind;
		config["s"] = to_string(s);
		config["delta_max"] = cfg.delta_max;
		json r{{"rows", table}};
		if (exact_note)
			r["exact_up_to_k"] = exact_up_to;
		return envelope(config, r).dump(2);
	}
	std::string out;
	out += fmt::format("# schema_version={}\n", kSchemaVersion);
	out += fmt::format("# command={}\n# type={}\n# lambda={}\n# kind={}\n# window={}\n# s={}\n", cfg.command,
	                   cfg.type, lambda.to_string(), cfg.kind, window.to_string(), to_string(s));
	if (exact_note)
		out += fmt::format("# counts are window-independent for k <= {}\n", exact_up_to);
	out += "k,dim\n";
	for (auto const &[k, d] : rows)
		out += fmt::format("{},{}\n", k, d.get_str());
	return out;
}

LoopElement generator_of(AffineAlgebra const &a, std::string const &text)
{
	if (text == "e0")
		return a.e(0);
	if (text == "f0")
		return a.f(0);
	if (text == "h0")
		return a.h(0);
	try
	{
		return LoopGenerator::parse(text, a.rank()).to_loop(a);
	}
	catch (DomainError const &e)
	{
		throw UsageError(e.what());
	}
}

std::string cmd_verma_act(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	auto lambda = weight_of(cfg.lambda, a->rank());
	VermaModule m(*a, lambda, kind_of(cfg));
	auto g = generator_of(*a, cfg.generator);
	ModuleVector v;
	v.add(m.parse_monomial(cfg.vector), parse_rational(cfg.coef));
	auto image = m.act(g, v);
	json config = config_json(cfg, nullptr);
	config["lambda"] = lambda.to_string();
	config["kind"] = cfg.kind;
	config["generator"] = cfg.generator;
	config["vector"] = fmt::format("{}*{}", cfg.coef, cfg.vector);
	return envelope(config, {{"image", vector_json(m, image)}, {"window", required_window(m, image).to_string()}})
	    .dump(2);
}

std::string cmd_singular(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	auto window = window_of(cfg);
	auto lambda = weight_of(cfg.lambda, a->rank());
	VermaModule m(*a, lambda, kind_of(cfg));
	json vectors = json::array();
	for (auto const &sv : find_singular_vectors(m, {}, window))
		vectors.push_back({{"offset", sv.offset.to_string()}, {"vector", vector_json(m, sv.vector)}});
	json config = config_json(cfg, &window);
	config["lambda"] = lambda.to_string();
	config["kind"] = cfg.kind;
	return envelope(config, {{"degenerate", m.is_degenerate()}, {"singular_vectors", vectors}}).dump(2);
}

FiniteModuleData finite_module_from_json(json const &j, int rank)
{
	FiniteModuleData data;
	try
	{
		data.dimension = j.at("dimension").get<int>();
		for (auto const *name : {"e", "f", "h"})
		{
			auto &family = std::string(name) == "e" ? data.e : std::string(name) == "f" ? data.f : data.h;
			for (auto const &mat : j.at(name))
			{
				Matrix out(data.dimension, data.dimension);
				if (mat.size() != static_cast<std::size_t>(data.dimension))
					throw DomainError(fmt::format("matrix for {} has {} rows", name, mat.size()));
				for (int r = 0; r < data.dimension; ++r)
				{
					if (mat[r].size() != static_cast<std::size_t>(data.dimension))
						throw DomainError(fmt::format("matrix for {} has a row of length {}", name, mat[r].size()));
					for (int c = 0; c < data.dimension; ++c)
						out(r, c) = mat[r][c].is_string() ? parse_rational(mat[r][c].get<std::string>())
						                                  : Rational(mat[r][c].get<long>());
				}
				family.push_back(out);
			}
		}
	}
	catch (json::exception const &e)
	{
		throw DomainError(fmt::format("malformed module data: {}", e.what()));
	}
	if (static_cast<int>(data.h.size()) != rank)
		throw DomainError(fmt::format("module data needs {} matrices per generator family", rank));
	return data;
}

json read_json_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw DomainError(fmt::format("cannot read '{}'", path));
	try
	{
		return json::parse(in);
	}
	catch (json::exception const &e)
	{
		throw DomainError(fmt::format("'{}' is not valid JSON: {}", path, e.what()));
	}
}

ExplicitModule loop_module(AffineAlgebra const &a, JobConfig const &cfg, TruncationWindow const &window)
{
	if (!cfg.data_path.empty())
		return build_loop_module(a, finite_module_from_json(read_json_file(cfg.data_path), a.rank()), window);
	if (cfg.loop_irrep < 1)
		throw UsageError("give --irrep-dim or --data");
	if (a.rank() != 1)
		throw DomainError("--irrep-dim builds sl2 irreps; use --data for other types");
	return build_loop_module(a, sl2_irrep(cfg.loop_irrep - 1), window);
}

ExplicitModule input_module(AffineAlgebra const &a, JobConfig const &cfg, TruncationWindow const &window)
{
	int sources = !cfg.module_path.empty() + !cfg.weights.empty() + (cfg.loop_irrep > 0 || !cfg.data_path.empty());
	if (sources != 1)
		throw UsageError("give exactly one of --module, --weights, --irrep-dim/--data");
	ExplicitModule m;
	if (!cfg.module_path.empty())
	{
		m = module_from_json(read_json_file(cfg.module_path));
		if (m.rank != a.rank())
			throw DomainError(fmt::format("module has rank {}, type {} has rank {}", m.rank, cfg.type, a.rank()));
	}
	else if (!cfg.weights.empty())
	{
		std::vector<Weight> ws;
		for (auto const &t : split(cfg.weights, '|'))
			ws.push_back(weight_of(t, a.rank()));
		m = build_reduced_verma_sum(a, ws, window);
	}
	else
		m = loop_module(a, cfg, window);
	if (cfg.scramble_seed >= 0)
		m = scramble(m, static_cast<std::uint64_t>(cfg.scramble_seed));
	return m;
}

json module_config(JobConfig const &cfg, ExplicitModule const &m)
{
	json config = config_json(cfg, &m.window);
	config["provenance"] = m.provenance;
	config["dimension"] = m.dimension();
	config["cap"] = cfg.cap;
	if (!cfg.module_path.empty())
		config["module"] = cfg.module_path;
	if (!cfg.weights.empty())
		config["weights"] = cfg.weights;
	if (cfg.scramble_seed >= 0)
		config["scramble_seed"] = cfg.scramble_seed;
	return config;
}

json split_json(ExplicitModule const &m, GCompatibleSplit const &s)
{
	json spaces = json::array();
	for (auto const &w : s.spaces)
	{
		std::vector<std::string> torsion;
		for (auto const &t : w.torsion)
			torsion.push_back(m.describe(t));
		spaces.push_back({{"weight", weight_json(w.weight)},
		                  {"dim", w.basis.size()},
		                  {"torsion_dim", w.torsion.size()},
		                  {"torsion_free_dim", w.torsion_free.size()},
		                  {"complete", w.complete},
		                  {"torsion", torsion}});
	}
	return {{"pass", s.pass},
	        {"torsion_dim", s.torsion_dim},
	        {"restricted_torsion_dim", s.restricted_torsion_dim},
	        {"axioms", axioms_json(s.axioms)},
	        {"weight_spaces", spaces}};
}

std::string cmd_category(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	auto window = window_of(cfg);
	auto m = input_module(*a, cfg, window);
	json r;
	if (cfg.command == "category-check")
	{
		auto report = check_category_membership(m, cfg.cap);
		r = {{"pass", report.pass},
		     {"axioms", axioms_json(report.axioms)},
		     {"split_axioms", axioms_json(report.split.axioms)}};
	}
	else if (cfg.command == "category-split")
		r = split_json(m, torsion_decompose(m));
	else
	{
		auto d = decompose_into_reduced_vermas(*a, m, cfg.cap);
		json summands = json::array();
		for (auto const &s : d.summands)
			summands.push_back({{"weight", weight_json(s.weight)}, {"vector", m.describe(s.vector)}});
		r = {{"summands", summands}, {"audit_pass", d.audit_pass}, {"audit_failures", d.audit_failures}};
	}
	return envelope(module_config(cfg, m), r).dump(2);
}

std::string cmd_loopmod(JobConfig const &cfg)
{
	auto a = make_algebra(cfg);
	auto window = window_of(cfg);
	auto m = loop_module(*a, cfg, window);
	if (cfg.scramble_seed >= 0)
		m = scramble(m, static_cast<std::uint64_t>(cfg.scramble_seed));
	auto j = to_json(m);
	j["config"] = module_config(cfg, m);
	return j.dump(2);
}

/// Splices "key=value" lines of a --config file in as "--key value" unless the key is already given.
std::vector<std::string> expand_config(std::vector<std::string> args)
{
	auto it = std::find(args.begin(), args.end(), "--config");
	if (it == args.end() || std::next(it) == args.end())
		return args;
	std::string path = *std::next(it);
	args.erase(it, it + 2);
	std::ifstream in(path);
	if (!in)
		throw UsageError(fmt::format("cannot read config '{}'", path));
	std::vector<std::string> extra;
	std::string line;
	int number = 0;
	while (std::getline(in, line))
	{
		++number;
		auto first = line.find_first_not_of(" \t");
		if (first == std::string::npos || line[first] == '#')
			continue;
		auto eq = line.find('=');
		if (eq == std::string::npos)
			throw UsageError(fmt::format("config '{}' line {}: expected key=value", path, number));
		auto trim = [](std::string t) {
			t.erase(0, t.find_first_not_of(" \t"));
			t.erase(t.find_last_not_of(" \t\r") + 1);
			return t;
		};
		std::string key = "--" + trim(line.substr(0, eq));
		if (std::find(args.begin(), args.end(), key) == args.end())
		{
			extra.push_back(key);
			extra.push_back(trim(line.substr(eq + 1)));
		}
	}
	args.insert(args.empty() ? args.end() : args.begin() + 1, extra.begin(), extra.end());
	return args;
}

void write_output(JobConfig const &cfg, std::string const &text, std::ostream &out)
{
	if (cfg.output.empty())
	{
		out << text;
		if (!text.empty() && text.back() != '\n')
			out << '\n';
		return;
	}
	std::filesystem::path path(cfg.output);
	if (path.is_relative())
		if (char const *dir = std::getenv("IMVERMA_OUTPUT_DIR"); dir && *dir)
			path = std::filesystem::path(dir) / path;
	std::ofstream file(path);
	if (!file)
		throw DomainError(fmt::format("cannot write '{}'", path.string()));
	file << text;
	if (!text.empty() && text.back() != '\n')
		file << '\n';
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	JobConfig cfg;
	CLI::App app{"Affine Kac-Moody algebras and imaginary Verma modules, computed exactly", "imverma"};
	app.require_subcommand(1, 1);

	auto sub = [&](std::string const &name, std::string const &help) {
		auto *s = app.add_subcommand(name, help);
		s->add_option("--type", cfg.type, "finite type label, e.g. A2")->required();
		s->add_option("-o,--output", cfg.output, "output file (relative paths resolve against IMVERMA_OUTPUT_DIR)");
		s->add_option("--format", cfg.format, "json or csv");
		s->add_option("--config", cfg.config_path, "key=value file supplying any of these options");
		return s;
	};
	auto add_window = [&](CLI::App *s) {
		s->add_option("--window", cfg.window_text, "truncation window, e.g. L=8,N=6,H=4");
	};
	auto add_lambda = [&](CLI::App *s) {
		s->add_option("--lambda", cfg.lambda, "weight, e.g. h1=-1/2,c=0,d=0; unassigned values are 0");
		s->add_option("--kind", cfg.kind, "imaginary or reduced");
	};

	auto *algebra = sub("algebra", "Cartan data, realized h0, presentation check, optional twist");
	algebra->add_option("--twist", cfg.twist, "node permutation: (1 3) or 3,2,1");
	algebra->add_option("--loop-degree", cfg.loop_degree, "largest |degree| for twisted pieces");

	auto *roots = sub("roots", "roots in a window with multiplicities");
	roots->add_option("--height", cfg.height, "largest |finite height|");
	roots->add_option("--loop-degree", cfg.loop_degree, "largest |delta coefficient|");

	auto *partition = sub("partition", "closed-partition check");
	partition->add_option("--which", cfg.which, "natural, standard or custom");
	partition->add_option("--roots", cfg.roots, "custom members, e.g. \"[1,0]+0d;[0,0]+1d\"");
	partition->add_option("--height", cfg.height, "largest |finite height|");
	partition->add_option("--loop-degree", cfg.loop_degree, "largest |delta coefficient|");

	auto *dims = sub("verma-dims", "weight-space dimensions along lambda - s - k delta");
	add_window(dims);
	add_lambda(dims);
	dims->add_option("--delta-max", cfg.delta_max, "largest k");
	dims->add_option("--s", cfg.offset_s, "finite offset coordinates, e.g. 1,0");

	auto *act = sub("verma-act", "apply a generator to a PBW monomial");
	add_lambda(act);
	act->add_option("--generator", cfg.generator, "e1,0 / f2,-1 / h1,3 / c / d / e0 / f0 / h0");
	act->add_option("--vector", cfg.vector, "PBW monomial, e.g. F(1;-1)*F(1;2), or 1 for v_lambda");
	act->add_option("--coef", cfg.coef, "coefficient of the monomial");

	auto *singular = sub("singular", "singular vectors within the window");
	add_window(singular);
	add_lambda(singular);

	for (auto const &[name, help] :
	     std::vector<std::pair<std::string, std::string>>{{"category-check", "category membership report"},
	                                                      {"category-split", "torsion / torsion-free split"},
	                                                      {"category-decompose", "decomposition into reduced Verma modules"}})
	{
		auto *s = sub(name, help);
		add_window(s);
		s->add_option("--module", cfg.module_path, "module JSON file");
		s->add_option("--weights", cfg.weights, "build a sum of reduced Verma modules: lambda1|lambda2|...");
		s->add_option("--irrep-dim", cfg.loop_irrep, "build the sl2 loop module of this irrep");
		s->add_option("--data", cfg.data_path, "build the loop module of a finite module given as JSON matrices");
		s->add_option("--scramble", cfg.scramble_seed, "random weight-preserving change of basis with this seed");
		s->add_option("--cap", cfg.cap, "nilpotency cap");
	}

	auto *loopmod = sub("loopmod", "emit a loop module as module JSON");
	add_window(loopmod);
	loopmod->add_option("--irrep-dim", cfg.loop_irrep, "dimension of the sl2 irrep");
	loopmod->add_option("--data", cfg.data_path, "finite module as JSON matrices {dimension, e, f, h}");
	loopmod->add_option("--scramble", cfg.scramble_seed, "random weight-preserving change of basis with this seed");

	try
	{
		auto expanded = expand_config(args);
		std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
		app.parse(reversed);
	}
	catch (UsageError const &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		// help on a subcommand arrives as CallForHelp too; everything else is a usage error
		err << "error: " << e.what() << "\n";
		return 2;
	}

	cfg.command = app.get_subcommands().front()->get_name();
	try
	{
		if (cfg.format.empty())
			cfg.format = cfg.command == "verma-dims" ? "csv" : "json";
		if (cfg.format != "json" && cfg.format != "csv")
			throw UsageError(fmt::format("unknown format '{}'", cfg.format));
		if (cfg.format == "csv" && cfg.command != "verma-dims")
			throw UsageError(fmt::format("{} emits json only", cfg.command));
		std::string text;
		if (cfg.command == "algebra")
			text = cmd_algebra(cfg);
		else if (cfg.command == "roots")
			text = cmd_roots(cfg);
		else if (cfg.command == "partition")
			text = cmd_partition(cfg);
		else if (cfg.command == "verma-dims")
			text = cmd_verma_dims(cfg);
		else if (cfg.command == "verma-act")
			text = cmd_verma_act(cfg);
		else if (cfg.command == "singular")
			text = cmd_singular(cfg);
		else if (cfg.command == "loopmod")
			text = cmd_loopmod(cfg);
		else
			text = cmd_category(cfg);
		write_output(cfg, text, out);
		return 0;
	}
	catch (UsageError const &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}
	catch (DomainError const &e)
	{
		err << "error: " << e.what() << "\n";
		return 1;
	}
}

} // namespace imverma::cli
