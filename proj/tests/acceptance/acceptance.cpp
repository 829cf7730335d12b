// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact.
// Usage: acceptance [path-to-octo-g2]

#include "octo/chevalley.hpp"
#include "octo/derivations.hpp"
#include "octo/emit.hpp"
#include "octo/octonion.hpp"
#include "octo/standard_rep.hpp"
#include "octo/verify.hpp"
#include "octo/weyl_modules.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace octo;

namespace {

using O = Octonion;
using Clock = std::chrono::steady_clock;

constexpr double kClosedFormSeconds = 1.0;
constexpr double kIrrep02Seconds = 300.0;
constexpr int kCompositionPairs = 100;

Scalar I() { return GaussianRational::i(); }
Scalar frac(long p, long q) { return GaussianRational::fraction(p, q); }

double seconds_since(Clock::time_point t0)
{
	return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
	bool pass = true;
	std::string detail;

	void require(bool ok, std::string const &what)
	{
		if (!ok)
		{
			pass = false;
			detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
		}
	}
	void note(std::string const &s) { detail += (detail.empty() ? "" : "; ") + s; }
};

// -- independent oracles ------------------------------------------------------

// F8 as bit polynomials modulo a^3 + a + 1.
unsigned f8_mul(unsigned x, unsigned y)
{
	unsigned p = 0;
	for (int k = 0; k < 3; ++k)
		if (y >> k & 1u)
			p ^= x << k;
	for (int d = 4; d >= 3; --d)
		if (p >> d & 1u)
			p ^= 0b1011u << (d - 3);
	return p;
}

unsigned f8_pow(unsigned x, int k)
{
	unsigned r = 1;
	for (int i = 0; i < k; ++i)
		r = f8_mul(r, x);
	return r;
}

int f8_trace(unsigned x) { return static_cast<int>(x ^ f8_pow(x, 2) ^ f8_pow(x, 4)); }

int phi_oracle(unsigned x, unsigned y) { return f8_trace(f8_mul(y, f8_pow(x, 6))); }

// D(e^x ^ e^y) e^z from the piecewise rule.
O piecewise(F8 x, F8 y, F8 z)
{
	if (z == x)
		return Scalar(2) * O::basis(y);
	if (z == y)
		return Scalar(-2) * O::basis(x);
	if (z.is_zero() || z == x + y)
		return O();
	return -((O::basis(x) * O::basis(y)) * O::basis(z));
}

O apply_op(Operator const &op, O const &a) { return O(apply(op, a.coordinates())); }

Operator e(int a, int b) { return D_pair(O::e(a), O::e(b)); }

RootLabel L(RootBase b, int twist, int sign = 1) { return {b, twist, sign}; }

Vector on_V(O const &o)
{
	Vector v(kStandardDim);
	for (std::size_t k = 0; k < kStandardDim; ++k)
		v[k] = o.coordinates()[k + 1];
	return v;
}

// -- criteria -----------------------------------------------------------------

Outcome octonion_law()
{
	Outcome r;
	bool table_ok = true;
	for (F8 x : F8::all())
		for (F8 y : F8::all())
		{
			SignedIndex p = basis_product(x, y);
			int sign = phi_oracle(x.bits(), y.bits()) ? -1 : 1;
			table_ok = table_ok && p.sign == sign && p.index.bits() == (x.bits() ^ y.bits());
		}
	r.require(table_ok, "product table differs from (-1)^phi e^(x+y)");

	bool unital = true, squares = true;
	for (F8 x : F8::all())
	{
		O ex = O::basis(x);
		unital = unital && O::identity() * ex == ex && ex * O::identity() == ex;
		if (!x.is_zero())
			squares = squares && ex * ex == -O::identity();
	}
	r.require(unital, "e^0 is a two-sided identity");
	r.require(squares, "(e^x)^2 = -1");

	std::mt19937 rng(20240601);
	std::uniform_int_distribution<long> num(-50, 50), den(1, 17);
	int good = 0;
	for (int k = 0; k < kCompositionPairs; ++k)
	{
		Vector a(kOctonionDim), b(kOctonionDim);
		for (std::size_t i = 0; i < kOctonionDim; ++i)
		{
			a[i] = Scalar(mpq_class(num(rng), den(rng)));
			b[i] = Scalar(mpq_class(num(rng), den(rng)));
		}
		good += norm(O(a) * O(b)) == norm(O(a)) * norm(O(b));
	}
	r.require(good == kCompositionPairs, "N(ab) = N(a) N(b)");
	r.note("64 products, " + std::to_string(good) + "/" + std::to_string(kCompositionPairs) +
	       " composition pairs");
	return r;
}

Outcome closed_form_agreement()
{
	Outcome r;
	auto t0 = Clock::now();
	int cases = 0, agree = 0;
	for (F8 x : F8::units())
		for (F8 y : F8::units())
		{
			if (x == y)
				continue;
			Operator d = D_pair(O::basis(x), O::basis(y));
			for (F8 z : F8::all())
			{
				++cases;
				O got = apply_op(d, O::basis(z));
				agree += got == closed_form_derivation(x, y, z) && got == piecewise(x, y, z);
			}
		}
	double t = seconds_since(t0);
	r.require(cases == 336, "336 triples");
	r.require(agree == cases, "D_pair agrees with the oracle");
	r.require(t < kClosedFormSeconds, "time < 1 s");
	std::ostringstream os;
	os << agree << "/" << cases << " triples in " << t << " s";
	r.note(os.str());
	return r;
}

Outcome leibniz_rule()
{
	Outcome r;
	int zero = 0;
	for (std::size_t k = 0; k < kWedgeDim; ++k)
	{
		auto [i, j] = index_pair(k);
		Operator d = D_pair(O::e(i), O::e(j));
		for (F8 z : F8::all())
			for (F8 w : F8::all())
				zero += leibniz_defect(d, O::basis(z), O::basis(w)).is_zero();
	}
	r.require(zero == 21 * 64, "Leibniz defect vanishes");
	r.note(std::to_string(zero) + "/1344 defects zero");
	return r;
}

Outcome anticommutation()
{
	Outcome r;
	int checked = 0, ok = 0;
	for (F8 x : F8::units())
		for (F8 y : F8::units())
		{
			if (x == y)
				continue;
			Operator d = D_pair(O::basis(x), O::basis(y));
			for (F8 u : F8::all())
				for (F8 v : F8::units())
				{
					F8 s = u + x + y;
					if (s.is_zero() || s == v)
						continue;
					O du = apply_op(d, O::basis(u));
					++checked;
					ok += (du * O::basis(v) + O::basis(v) * du).is_zero();
				}
		}
	r.require(checked > 0 && ok == checked, "anticommutation");
	r.note(std::to_string(ok) + "/" + std::to_string(checked) + " quadruples");
	return r;
}

Outcome kernel_and_rank()
{
	Outcome r;
	Subspace k = kernel_of_D();
	r.require(k.dim() == 7, "dim ker D = 7");
	std::vector<Vector> orbit;
	for (auto const &w : delta_orbit())
		orbit.push_back(w.coordinates());
	Subspace span = Subspace::span(kWedgeDim, orbit);
	r.require(span.dim() == 7 && span == k, "delta orbit is a basis of ker D");
	auto const &g = DerivationAlgebra::instance();
	r.require(g.bracket(g.element(e(1, 3)), g.element(e(2, 6))).coords.is_zero(), "[e13, e26] = 0");
	r.require(rank(d_matrix()) == 14, "rank D = 14");
	r.note("dim ker = " + std::to_string(k.dim()) + ", rank = " + std::to_string(rank(d_matrix())));
	return r;
}

Outcome symmetry()
{
	Outcome r;
	auto group = GaloisSymmetry::group();
	r.require(group.size() == 21 && std::set<GaloisSymmetry>(group.begin(), group.end()).size() == 21,
	          "group of order 21");
	std::set<IndexPair> orbit;
	int stabilizer = 0;
	for (auto const &t : group)
	{
		Wedge2 w = galois_apply(t, Wedge2::basis(1, 3));
		for (std::size_t k = 0; k < kWedgeDim; ++k)
			if (!w.coordinates()[k].is_zero())
			{
				orbit.insert(index_pair(k));
				stabilizer += index_pair(k) == IndexPair{1, 3};
			}
	}
	r.require(orbit.size() == 21 && stabilizer == 1, "simply transitive on pairs");

	auto const &g = DerivationAlgebra::instance();
	std::vector<std::vector<GElement>> cartans;
	std::vector<Vector> all;
	bool abelian = true, two_dim = true;
	for (auto const &part : b_partition())
	{
		std::vector<GElement> h;
		std::vector<Vector> cs;
		for (auto [i, j] : part)
		{
			h.push_back(g.element(e(i, j)));
			cs.push_back(h.back().coords);
			all.push_back(h.back().coords);
		}
		two_dim = two_dim && Subspace::span(kLieDim, cs).dim() == 2;
		for (auto const &x : h)
			for (auto const &y : h)
				abelian = abelian && g.bracket(x, y).coords.is_zero();
		cartans.push_back(std::move(h));
	}
	bool orthogonal = true;
	for (std::size_t a = 0; a < cartans.size(); ++a)
		for (std::size_t b = a + 1; b < cartans.size(); ++b)
			for (auto const &x : cartans[a])
				for (auto const &y : cartans[b])
					orthogonal = orthogonal && g.killing_form(x, y).is_zero();
	r.require(two_dim, "each D(B_k) is 2-dimensional");
	r.require(abelian, "each D(B_k) is abelian");
	r.require(orthogonal, "Killing-orthogonal");
	r.require(Subspace::span(kLieDim, all).dim() == kLieDim, "sum is g");
	r.note("orbit " + std::to_string(orbit.size()) + ", 7 Cartans");
	return r;
}

Outcome chevalley_properties()
{
	Outcome r;
	auto const &cb = chevalley_basis();
	r.require(cb.E(L(RootBase::beta, 0)).op == frac(1, 2) * (-I() * e(1, 0) + e(0, 3)),
	          "E_beta formula");
	r.require(cb.E(L(RootBase::gamma, 0)).op ==
	              frac(1, 6) * (e(1, 2) + e(3, 6) - I() * (e(2, 3) + e(1, 6))),
	          "E_gamma formula");

	StructureTable const *table = nullptr;
	try
	{
		table = &structure_constants();
	}
	catch (std::exception const &ex)
	{
		r.require(false, std::string("integral structure constants: ") + ex.what());
		return r;
	}
	auto const &c = *table;
	std::size_t ib = ChevalleyBasis::index_of(L(RootBase::beta, 0));
	std::size_t ig = ChevalleyBasis::index_of(L(RootBase::gamma, 0));
	std::array<std::array<long, 2>, 2> cartan{{{c[0][ib][ib], c[1][ib][ib]}, {c[0][ig][ig], c[1][ig][ig]}}};
	r.require(cartan == std::array<std::array<long, 2>, 2>{{{2, -1}, {-3, 2}}}, "Cartan matrix");

	auto const &g = DerivationAlgebra::instance();
	int coroot_ok = 0, coroot_negated = 0;
	for (RootLabel rho : all_roots())
	{
		Vector br = g.bracket(cb.E(rho), cb.E(negate(rho))).coords;
		Vector h = coroot_of(rho).coords;
		coroot_ok += br == h;
		coroot_negated += br == -h;
	}
	r.require(coroot_ok == 12, "[E_rho, E_-rho] = transported coroot (" + std::to_string(coroot_ok) +
	                               "/12 equal, " + std::to_string(coroot_negated) + "/12 equal its negative)");

	int magnitude_ok = 0, magnitude_total = 0;
	for (RootLabel a : all_roots())
		for (RootLabel b : all_roots())
		{
			auto t = label_of(root_coordinates(a) + root_coordinates(b));
			if (!t)
				continue;
			++magnitude_total;
			long n = c[ChevalleyBasis::index_of(a)][ChevalleyBasis::index_of(b)][ChevalleyBasis::index_of(*t)];
			magnitude_ok += std::labs(n) == string_length_p(a, b) + 1;
		}
	r.require(magnitude_ok == magnitude_total, "|N| = p + 1");

	long jacobi_bad = 0;
	for (std::size_t a = 0; a < kLieDim; ++a)
		for (std::size_t b = 0; b < kLieDim; ++b)
			for (std::size_t d = 0; d < kLieDim; ++d)
				for (std::size_t m = 0; m < kLieDim; ++m)
				{
					long s = 0;
					for (std::size_t k = 0; k < kLieDim; ++k)
						s += c[a][b][k] * c[k][d][m] + c[b][d][k] * c[k][a][m] + c[d][a][k] * c[k][b][m];
					jacobi_bad += s != 0;
				}
	r.require(jacobi_bad == 0, "Jacobi identity");
	r.note("196 integral brackets, " + std::to_string(magnitude_ok) + "/" + std::to_string(magnitude_total) +
	       " |N| = p+1, Jacobi over 2744 triples");
	return r;
}

Outcome root_spaces()
{
	Outcome r;
	auto dec = root_space_decomposition();
	std::size_t total = 0;
	for (auto const &[w, s] : dec)
		total += s.dim();
	bool roots_ok = true;
	for (RootLabel rho : all_roots())
		roots_ok = roots_ok && dec.count(root_coordinates(rho)) && dec.at(root_coordinates(rho)).dim() == 1;
	r.require(roots_ok, "twelve 1-dimensional root spaces");
	r.require(dec.count({0, 0}) && dec.at({0, 0}).dim() == 2, "2-dimensional zero space");
	r.require(dec.size() == 13 && total == kLieDim, "total 14");
	r.note("13 weight spaces, total dimension " + std::to_string(total));
	return r;
}

Outcome standard_representation()
{
	Outcome r;
	struct Label
	{
		WeightLabel w;
		O printed;
	};
	auto W = [](RootBase b, int t, int s) { return WeightLabel::of(L(b, t, s)); };
	std::vector<Label> labels{
	    {WeightLabel::zero(), O::e(0)},
	    {W(RootBase::beta, 0, 1), I() * O::e(1) + O::e(3)},
	    {W(RootBase::beta, 2, -1), -I() * O::e(4) + O::e(5)},
	    {W(RootBase::beta, 1, 1), I() * O::e(2) + O::e(6)},
	    {W(RootBase::beta, 0, -1), -I() * O::e(1) + O::e(3)},
	    {W(RootBase::beta, 2, 1), I() * O::e(4) + O::e(5)},
	};
	int literal = 0;
	for (auto const &l : labels)
		literal += weight_vector(l.w) == l.printed;
	r.require(literal == 6, "six diagram labels match literally");

	// The diagram prints "-i e6 + e2" at the -beta' node; that vector has
	// weight beta', and the label with e2, e6 exchanged is v_-beta'.
	WeightLabel mb1 = W(RootBase::beta, 1, -1);
	O printed = -I() * O::e(6) + O::e(2);
	r.require(weight_of(printed) == root_coordinates(L(RootBase::beta, 1)), "printed -beta' label has weight beta'");
	r.require(weight_vector(mb1) == -I() * O::e(2) + O::e(6), "v_-beta' = -i e2 + e6");

	bool raise = true, lower = true;
	for (RootLabel psi : short_roots())
	{
		raise = raise && act(psi, WeightLabel::zero()) == weight_vector(WeightLabel::of(psi));
		lower = lower && act(psi, WeightLabel::of(negate(psi))) == Scalar(-2) * weight_vector(WeightLabel::zero());
	}
	r.require(raise, "E_psi v0 = v_psi");
	r.require(lower, "E_psi v_-psi = -2 v0");

	int signs = 0, sign_total = 0;
	for (RootLabel rho : all_roots())
		for (RootLabel psi : short_roots())
		{
			auto t = label_of(root_coordinates(rho) + root_coordinates(psi));
			if (!t || !t->is_short())
				continue;
			++sign_total;
			signs += act(rho, WeightLabel::of(psi)) ==
			             Scalar(geometric_sign(rho, psi)) * weight_vector(WeightLabel::of(*t)) &&
			         expected_sign(rho, psi) == geometric_sign(rho, psi);
		}
	r.require(signs == sign_total, "anticlockwise sign rule");

	auto table = action_table();
	auto weights = weight_labels();
	int entries = 0;
	for (std::size_t i = 0; i < all_roots().size(); ++i)
		for (std::size_t j = 0; j < weights.size(); ++j)
		{
			RootLabel rho = all_roots()[i];
			O image = act(rho, weights[j]);
			O predicted = Scalar(predicted_scalar(rho, weights[j])) *
			              (predicted_scalar(rho, weights[j]) == 0
			                   ? O()
			                   : weight_vector(*weight_label_of(root_coordinates(rho) + weight_coordinates(weights[j]))));
			entries += image == predicted && table[i][j] == predicted_scalar(rho, weights[j]);
		}
	r.require(entries == 84, "12 x 7 action table");
	r.note("6/6 labels literal, -beta' node misprint (\"-i e6 + e2\" has weight beta'); " +
	       std::to_string(signs) + "/" + std::to_string(sign_total) + " signs, " + std::to_string(entries) +
	       "/84 table entries");
	return r;
}

Outcome so7_identity()
{
	Outcome r;
	int ok = 0;
	for (RootLabel rho : all_roots())
		if (!rho.is_short())
			ok += so7_identity_check(rho);
	r.require(ok == 6, "identity for six long roots");
	auto w = non_homomorphism_witness();
	r.require(w.has_value(), "witness that -D is not a homomorphism");
	if (w)
	{
		Wedge2 u = Wedge2::basis(w->first.first, w->first.second);
		Wedge2 v = Wedge2::basis(w->second.first, w->second.second);
		r.require(D_wedge(so7_bracket(u, v)) != -commutator(D_wedge(u), D_wedge(v)), "witness verifies");
		r.note("witness e" + std::to_string(w->first.first) + "^e" + std::to_string(w->first.second) + ", e" +
		       std::to_string(w->second.first) + "^e" + std::to_string(w->second.second));
	}
	r.note(std::to_string(ok) + "/6 long roots");
	return r;
}

Outcome irreducible_dimensions()
{
	Outcome r;
	std::vector<std::pair<int, int>> labels{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
	std::vector<long> expected{1, 7, 14, 27, 64, 77};
	std::string dims;
	for (std::size_t k = 0; k < labels.size(); ++k)
	{
		auto [a, b] = labels[k];
		auto t0 = Clock::now();
		IrrepReport rep = generate_irrep(a, b);
		double t = seconds_since(t0);
		std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
		r.require(static_cast<long>(rep.dim) == expected[k] && rep.weyl == expected[k], tag + " dimension");
		r.require(rep.in_image, tag + " in projector image");
		if (a == 0 && b == 2)
			r.require(t < kIrrep02Seconds, "(0,2) within 5 minutes");
		if (a + b > 0)
		{
			TensorVector w = highest_weight_vector(a, b);
			r.require(tensor_weight(w) == a * mu1() + b * mu2(), tag + " highest weight");
			r.require(is_highest_weight(w), tag + " positive roots annihilate");
		}
		bool symmetric = true;
		for (auto const &[weight, mult] : rep.multiplicities)
		{
			auto rot = rep.multiplicities.find(rotate(weight));
			auto neg = rep.multiplicities.find(-weight);
			symmetric = symmetric && rot != rep.multiplicities.end() && rot->second == mult &&
			            neg != rep.multiplicities.end() && neg->second == mult;
		}
		r.require(symmetric, tag + " multiplicities symmetric");
		std::ostringstream os;
		os << tag << "=" << rep.dim;
		if (a == 0 && b == 2)
			os << " in " << t << " s";
		dims += (dims.empty() ? "" : " ") + os.str();
	}
	r.note(dims);
	return r;
}

Outcome weyl_scaffolding()
{
	Outcome r;
	std::vector<std::pair<TwoRowShape, long>> shapes{{{0, 1}, 21}, {{2, 0}, 28}, {{1, 1}, 112}};
	std::string dims;
	for (auto [s, expected] : shapes)
	{
		std::size_t d = young_image(s).dim();
		r.require(static_cast<long>(d) == expected && schur_dimension(s) == expected,
		          "image of shape (" + std::to_string(s.row1()) + "," + std::to_string(s.row2()) + ")");
		dims += (dims.empty() ? "" : "/") + std::to_string(d);
	}

	auto u = [](std::size_t k) { return Vector::unit(kStandardDim, k); };
	std::vector<TableauFilling> fillings{
	    {{u(1)}, {u(2)}},
	    {{u(0), u(3)}, {u(5)}},
	    {{u(1) + I() * u(4), u(6)}, {u(2)}},
	    {{u(0), u(1)}, {u(2), u(3)}},
	    {{u(2), u(2)}, {u(5), u(5)}},
	};
	int exchange = 0;
	for (auto const &f : fillings)
		exchange += exchange_check(f);
	r.require(exchange == static_cast<int>(fillings.size()), "exchange conditions");

	IrrepReport adj = generate_irrep(0, 1, kDefaultMaxDegree, false);
	Subspace wedge2 = young_image({0, 1});
	r.require(wedge2.contains(adj.space), "Gamma_{0,1} inside wedge^2 V");
	auto v = [](RootLabel rho) { return on_V(weight_vector(WeightLabel::of(rho))); };
	std::vector<TensorVector> cands{
	    young_project(pure_tensor(std::vector<Vector>{u(0), v(L(RootBase::beta, 2, -1))}), {0, 1}),
	    young_project(pure_tensor(std::vector<Vector>{v(L(RootBase::beta, 0)), v(L(RootBase::beta, 1))}),
	                  {0, 1}),
	};
	auto hw = highest_weight_combinations(cands);
	std::size_t comp_dim = 0, total = 0;
	if (hw.size() == 1)
	{
		Subspace comp = generated_module(hw);
		comp_dim = comp.dim();
		total = sum(comp, adj.space).dim();
	}
	r.require(hw.size() == 1 && comp_dim == 7 && total == 21 && adj.dim == 14, "21 = 14 + 7 split");
	r.note("images " + dims + ", " + std::to_string(exchange) + " fillings pass exchange, split " +
	       std::to_string(adj.dim) + " + " + std::to_string(comp_dim) + " = " + std::to_string(total));
	return r;
}

std::string run_cli(std::string const &cli)
{
	std::string out;
	std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen((cli + " verify --suite all").c_str(), "r"), pclose);
	if (!pipe)
		return out;
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
		out.append(buf.data(), n);
	return out;
}

Outcome determinism(char const *cli)
{
	Outcome r;
	std::string first = emit_verify(run_suite("all"), Format::text);
	std::string second = emit_verify(run_suite("all"), Format::text);
	r.require(first == second, "in-process reports identical");
	if (cli)
	{
		std::string a = run_cli(cli), b = run_cli(cli);
		r.require(!a.empty() && a == b, "CLI reports identical");
		r.require(a == first, "CLI report equals in-process report");
		r.note("CLI runs byte-identical (" + std::to_string(a.size()) + " bytes)");
	}
	else
		r.note("in-process only (no CLI path given)");
	return r;
}

} // namespace

int main(int argc, char **argv)
{
	char const *cli = argc > 1 ? argv[1] : nullptr;
	std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
	    {"octonion law", octonion_law},
	    {"D agrees with the piecewise formula", closed_form_agreement},
	    {"D(b) are derivations", leibniz_rule},
	    {"anticommutation", anticommutation},
	    {"kernel and rank of D", kernel_and_rank},
	    {"order-21 symmetry and seven Cartans", symmetry},
	    {"Chevalley basis", chevalley_properties},
	    {"root space decomposition", root_spaces},
	    {"standard representation", standard_representation},
	    {"so7 identity", so7_identity},
	    {"irreducible dimensions", irreducible_dimensions},
	    {"Weyl module scaffolding", weyl_scaffolding},
	    {"determinism", [cli] { return determinism(cli); }},
	};

	int failed = 0;
	for (std::size_t k = 0; k < criteria.size(); ++k)
	{
		Outcome o;
		try
		{
			o = criteria[k].second();
		}
		catch (std::exception const &ex)
		{
			o.pass = false;
			o.detail = std::string("exception: ") + ex.what();
		}
		failed += !o.pass;
		std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first
		          << " (" << o.detail << ")" << std::endl;
	}
	std::cout << (failed ? "FAIL" : "PASS") << ": " << criteria.size() - failed << "/" << criteria.size()
	          << " criteria" << std::endl;
	return failed ? 1 : 0;
}
