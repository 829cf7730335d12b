#include "octo/emit.hpp"

#include "octo/chevalley.hpp"
#include "octo/derivations.hpp"
#include "octo/gf8.hpp"
#include "octo/octonion.hpp"
#include "octo/roots.hpp"
#include "octo/standard_rep.hpp"

#include <fmt/format.h>

namespace octo {

using json = nlohmann::ordered_json;

namespace {

json rational_json(mpq_class const &q)
{
	return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json matrix_json(Matrix const &m)
{
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		json row = json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			row.push_back(to_json(m(i, j)));
		rows.push_back(std::move(row));
	}
	return rows;
}

json wedge_json(Wedge2 const &w)
{
	json terms = json::array();
	for (std::size_t k = 0; k < kWedgeDim; ++k)
	{
		auto [i, j] = index_pair(k);
		Scalar const &c = w.coefficient(i, j);
		if (!c.is_zero())
			terms.push_back(json{{"i", i}, {"j", j}, {"coefficient", to_json(c)}});
	}
	return terms;
}

std::string dump(json const &j) { return j.dump(2) + "\n"; }

std::string csv_row(std::vector<std::string> const &fields)
{
	std::string r;
	for (std::size_t k = 0; k < fields.size(); ++k)
	{
		if (k)
			r += ',';
		r += csv_field(fields[k]);
	}
	return r + "\r\n";
}

std::string kind(RootLabel r) { return r.is_short() ? "short" : "long"; }

Wedge2 preimage(std::size_t k)
{
	if (k == 0)
		return coroot_wedge(RootBase::beta);
	if (k == 1)
		return coroot_wedge(RootBase::gamma);
	return defining_wedge(all_roots()[k - 2]);
}

// "2 E_beta - H_gamma", "0"
std::string combination(std::array<long, kLieDim> const &c, std::vector<std::string> const &names)
{
	std::string r;
	for (std::size_t k = 0; k < kLieDim; ++k)
	{
		long v = c[k];
		if (v == 0)
			continue;
		if (r.empty())
			r += v < 0 ? "-" : "";
		else
			r += v < 0 ? " - " : " + ";
		if (std::labs(v) != 1)
			r += std::to_string(std::labs(v)) + " ";
		r += names[k];
	}
	return r.empty() ? "0" : r;
}

std::string matrix_text(Matrix const &m)
{
	std::vector<std::string> cells;
	std::size_t width = 1;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			cells.push_back(to_string(m(i, j)));
			width = std::max(width, cells.back().size());
		}
	std::string r;
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		r += "  [";
		for (std::size_t j = 0; j < m.cols(); ++j)
			r += fmt::format(" {:>{}}", cells[i * m.cols() + j], width);
		r += " ]\n";
	}
	return r;
}

} // namespace

std::optional<Format> parse_format(std::string const &s)
{
	if (s == "text")
		return Format::text;
	if (s == "json")
		return Format::json;
	if (s == "csv")
		return Format::csv;
	return std::nullopt;
}

json to_json(Scalar const &s) { return json{{"re", rational_json(s.re())}, {"im", rational_json(s.im())}}; }

std::string csv_field(std::string const &s)
{
	if (s.find_first_of(",\"\r\n") == std::string::npos)
		return s;
	std::string r = "\"";
	for (char c : s)
	{
		if (c == '"')
			r += '"';
		r += c;
	}
	return r + "\"";
}

std::string emit_multable(Format f)
{
	auto entry = [](std::size_t i, std::size_t j) {
		return basis_product(field_element_of(i), field_element_of(j));
	};
	if (f == Format::json)
	{
		json basis = json::array(), table = json::array();
		for (std::size_t i = 0; i < kOctonionDim; ++i)
		{
			basis.push_back(basis_name(i));
			json row = json::array();
			for (std::size_t j = 0; j < kOctonionDim; ++j)
			{
				SignedIndex p = entry(i, j);
				row.push_back(json{{"sign", p.sign}, {"index", coordinate_of(p.index)}});
			}
			table.push_back(std::move(row));
		}
		return dump(json{{"basis", basis}, {"table", table}});
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"left", "right", "sign", "index"});
		for (std::size_t i = 0; i < kOctonionDim; ++i)
			for (std::size_t j = 0; j < kOctonionDim; ++j)
			{
				SignedIndex p = entry(i, j);
				r += csv_row({basis_name(i), basis_name(j), std::to_string(p.sign),
				              basis_name(coordinate_of(p.index))});
			}
		return r;
	}
	std::string r = fmt::format("{:>4}", "");
	for (std::size_t j = 0; j < kOctonionDim; ++j)
		r += fmt::format(" {:>4}", basis_name(j));
	r += "\n";
	for (std::size_t i = 0; i < kOctonionDim; ++i)
	{
		r += fmt::format("{:>4}", basis_name(i));
		for (std::size_t j = 0; j < kOctonionDim; ++j)
		{
			SignedIndex p = entry(i, j);
			r += fmt::format(" {:>4}", (p.sign < 0 ? "-" : "+") + basis_name(coordinate_of(p.index)));
		}
		r += "\n";
	}
	return r;
}

std::string emit_roots(Format f)
{
	auto const &roots = all_roots();
	if (f == Format::json)
	{
		json list = json::array();
		for (auto rho : roots)
		{
			RootVector c = root_coordinates(rho);
			auto [p, q] = simple_root_coordinates(c);
			list.push_back(json{{"label", to_string(rho)}, {"m", c.m}, {"n", c.n}, {"kind", kind(rho)},
			                    {"beta", p}, {"gamma", q}, {"positive", is_positive(rho)}});
		}
		return dump(json{{"roots", list}});
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"label", "m", "n", "kind", "beta", "gamma", "positive"});
		for (auto rho : roots)
		{
			RootVector c = root_coordinates(rho);
			auto [p, q] = simple_root_coordinates(c);
			r += csv_row({to_string(rho), std::to_string(c.m), std::to_string(c.n), kind(rho),
			              std::to_string(p), std::to_string(q), is_positive(rho) ? "true" : "false"});
		}
		return r;
	}
	std::string r = fmt::format("{:<9} {:>3} {:>3}  {:<5}  {:>4} {:>5}\n", "root", "m", "n", "kind",
	                            "beta", "gamma");
	for (auto rho : roots)
	{
		RootVector c = root_coordinates(rho);
		auto [p, q] = simple_root_coordinates(c);
		r += fmt::format("{:<9} {:>3} {:>3}  {:<5}  {:>4} {:>5}\n", to_string(rho), c.m, c.n,
		                 kind(rho), p, q);
	}
	return r;
}

std::string emit_chevalley(Format f, bool matrices)
{
	auto const &cb = chevalley_basis();
	if (f == Format::json)
	{
		json list = json::array();
		for (std::size_t k = 0; k < cb.elements.size(); ++k)
		{
			json coords = json::array();
			for (auto const &c : cb.elements[k].coords)
				coords.push_back(to_json(c));
			json e{{"name", cb.names[k]}, {"wedge", wedge_json(preimage(k))}, {"coordinates", coords}};
			if (matrices)
				e["matrix"] = matrix_json(cb.elements[k].op);
			list.push_back(std::move(e));
		}
		return dump(json{{"basis", list}});
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"name", "i", "j", "coefficient"});
		for (std::size_t k = 0; k < cb.elements.size(); ++k)
		{
			Wedge2 w = preimage(k);
			for (std::size_t p = 0; p < kWedgeDim; ++p)
			{
				auto [i, j] = index_pair(p);
				if (!w.coefficient(i, j).is_zero())
					r += csv_row({cb.names[k], std::to_string(i), std::to_string(j),
					              to_string(w.coefficient(i, j))});
			}
		}
		return r;
	}
	std::string r;
	for (std::size_t k = 0; k < cb.elements.size(); ++k)
	{
		r += fmt::format("{} = D({})\n", cb.names[k], to_string(preimage(k)));
		if (matrices)
			r += matrix_text(cb.elements[k].op);
	}
	return r;
}

std::string emit_structure(Format f)
{
	auto const &cb = chevalley_basis();
	auto const &c = structure_constants();
	if (f == Format::json)
	{
		json rows = json::array();
		for (std::size_t i = 0; i < kLieDim; ++i)
			for (std::size_t j = 0; j < kLieDim; ++j)
				rows.push_back(json{{"left", cb.names[i]}, {"right", cb.names[j]},
				                    {"coefficients", c[i][j]}});
		return dump(json{{"basis", cb.names}, {"brackets", rows}});
	}
	if (f == Format::csv)
	{
		std::vector<std::string> header{"left", "right"};
		header.insert(header.end(), cb.names.begin(), cb.names.end());
		std::string r = csv_row(header);
		for (std::size_t i = 0; i < kLieDim; ++i)
			for (std::size_t j = 0; j < kLieDim; ++j)
			{
				std::vector<std::string> row{cb.names[i], cb.names[j]};
				for (long v : c[i][j])
					row.push_back(std::to_string(v));
				r += csv_row(row);
			}
		return r;
	}
	std::string r;
	for (std::size_t i = 0; i < kLieDim; ++i)
		for (std::size_t j = 0; j < kLieDim; ++j)
			r += fmt::format("[{}, {}] = {}\n", cb.names[i], cb.names[j], combination(c[i][j], cb.names));
	return r;
}

std::string emit_action_table(Format f)
{
	auto table = action_table();
	auto weights = weight_labels();
	auto const &roots = all_roots();
	if (f == Format::json)
	{
		json rs = json::array(), ws = json::array(), vs = json::array();
		for (auto rho : roots)
			rs.push_back(to_string(rho));
		for (auto const &w : weights)
			ws.push_back(json{{"weight", to_string(w)}, {"vector", to_string(weight_vector(w))}});
		for (auto const &row : table)
			vs.push_back(row);
		return dump(json{{"roots", rs}, {"weights", ws}, {"table", vs}});
	}
	if (f == Format::csv)
	{
		std::vector<std::string> header{"root"};
		for (auto const &w : weights)
			header.push_back(to_string(w));
		std::string r = csv_row(header);
		for (std::size_t k = 0; k < roots.size(); ++k)
		{
			std::vector<std::string> row{to_string(roots[k])};
			for (int v : table[k])
				row.push_back(std::to_string(v));
			r += csv_row(row);
		}
		return r;
	}
	std::string r;
	for (auto const &w : weights)
		r += fmt::format("v_{:<8} = {}\n", to_string(w), to_string(weight_vector(w)));
	r += fmt::format("\n{:<10}", "E \\ v");
	for (auto const &w : weights)
		r += fmt::format(" {:>8}", to_string(w));
	r += "\n";
	for (std::size_t k = 0; k < roots.size(); ++k)
	{
		r += fmt::format("{:<10}", to_string(roots[k]));
		for (int v : table[k])
			r += fmt::format(" {:>8}", v);
		r += "\n";
	}
	return r;
}

std::string emit_kernel(Format f)
{
	auto orbit = delta_orbit();
	Subspace kernel = kernel_of_D();
	std::vector<Vector> coords;
	for (auto const &w : orbit)
		coords.push_back(w.coordinates());
	bool spans = Subspace::span(kWedgeDim, coords) == kernel;
	if (f == Format::json)
	{
		json list = json::array();
		for (std::size_t k = 0; k < orbit.size(); ++k)
			list.push_back(json{{"k", k}, {"wedge", wedge_json(orbit[k])}});
		return dump(json{{"dimension", kernel.dim()}, {"orbit", list}, {"spans_kernel", spans}});
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"k", "i", "j", "coefficient"});
		for (std::size_t k = 0; k < orbit.size(); ++k)
			for (std::size_t p = 0; p < kWedgeDim; ++p)
			{
				auto [i, j] = index_pair(p);
				if (!orbit[k].coefficient(i, j).is_zero())
					r += csv_row({std::to_string(k), std::to_string(i), std::to_string(j),
					              to_string(orbit[k].coefficient(i, j))});
			}
		return r;
	}
	std::string r;
	for (std::size_t k = 0; k < orbit.size(); ++k)
		r += fmt::format("M^{} Delta = {}\n", k, to_string(orbit[k]));
	r += fmt::format("dim ker D = {}\norbit spans ker D: {}\n", kernel.dim(), spans ? "yes" : "no");
	return r;
}

std::string emit_irrep(IrrepReport const &rep, Format f, bool weights)
{
	if (f == Format::json)
	{
		json j{{"a", rep.shape.a}, {"b", rep.shape.b}, {"dim", rep.dim}, {"weyl", rep.weyl},
		       {"in_image", rep.in_image}};
		if (weights)
		{
			json ws = json::array();
			for (auto const &[w, k] : rep.multiplicities)
				ws.push_back(json{{"m", w.m}, {"n", w.n}, {"multiplicity", k}});
			j["weights"] = ws;
		}
		return dump(j);
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"m", "n", "multiplicity"});
		for (auto const &[w, k] : rep.multiplicities)
			r += csv_row({std::to_string(w.m), std::to_string(w.n), std::to_string(k)});
		return r;
	}
	std::string r = fmt::format("dim = {} (weyl oracle: {})\n", rep.dim, rep.weyl);
	r += fmt::format("in projector image: {}\n", rep.in_image ? "yes" : "no");
	if (weights)
	{
		r += "weight (m, n)  multiplicity\n";
		for (auto const &[w, k] : rep.multiplicities)
			r += fmt::format("({:>3}, {:>3})      {}\n", w.m, w.n, k);
	}
	return r;
}

std::string emit_verify(VerificationReport const &rep, Format f)
{
	if (f == Format::json)
	{
		json checks = json::array();
		for (auto const &c : rep.checks)
			checks.push_back(json{{"suite", c.suite}, {"name", c.name}, {"pass", c.pass},
			                      {"witness", c.witness}});
		return dump(json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}});
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"suite", "check", "pass", "witness"});
		for (auto const &c : rep.checks)
			r += csv_row({c.suite, c.name, c.pass ? "true" : "false", c.witness});
		return r;
	}
	std::string r;
	std::size_t failed = 0;
	for (auto const &c : rep.checks)
	{
		r += fmt::format("{} {}: {}", c.pass ? "PASS" : "FAIL", c.suite, c.name);
		if (!c.pass)
		{
			++failed;
			r += " -- " + c.witness;
		}
		r += "\n";
	}
	r += fmt::format("{}: {} checks, {} failed\n", rep.passed() ? "PASS" : "FAIL", rep.checks.size(),
	                 failed);
	return r;
}

std::string emit_conventions(Format f)
{
	std::vector<std::pair<std::string, std::string>> rows{
	    {"field", "F8 = F2[a]/(a^3 + a + 1); element bits b2 b1 b0 = b0 + b1 a + b2 a^2"},
	    {"product", "e^x e^y = (-1)^phi(x,y) e^(x+y), phi(x,y) = tr(y x^6)"},
	    {"octonion basis", "u = e^0, e0..e6 with e_i = e^(a^i)"},
	    {"wedge basis", "e_i^e_j for i < j in lexicographic order"},
	    {"D", "D(a,b) = 1/4 ([ad_a, ad_b] + ad_[a,b])"},
	    {"g basis", "first 14 independent D(e_i^e_j) in wedge order"},
	    {"chevalley basis", "H_beta, H_gamma, then E_rho in root order"},
	    {"root order", "beta beta' beta'' -beta -beta' -beta'' gamma gamma' gamma'' -gamma -gamma' -gamma''"},
	    {"root coordinates", "(m, n) = (rho(H_beta), rho(H_gamma))"},
	    {"weight order", "0 beta beta' beta'' -beta -beta' -beta''"},
	    {"symmetries", "Fr: x -> x^2, M: x -> a x, acting by e^x -> e^(tau x)"},
	    {"tensor factors", "column-major: column j of the tableau is factors 2j, 2j+1"},
	    {"scalars", "exact Gaussian rationals p/q + (r/s) i"},
	};
	if (f == Format::json)
	{
		json j = json::object();
		for (auto const &[k, v] : rows)
			j[k] = v;
		return dump(j);
	}
	if (f == Format::csv)
	{
		std::string r = csv_row({"key", "value"});
		for (auto const &[k, v] : rows)
			r += csv_row({k, v});
		return r;
	}
	std::string r;
	for (auto const &[k, v] : rows)
		r += fmt::format("{:<17} {}\n", k + ":", v);
	return r;
}

} // namespace octo
