#include "octo/verify.hpp"

#include "octo/chevalley.hpp"
#include "octo/derivations.hpp"
#include "octo/gf8.hpp"
#include "octo/linalg.hpp"
#include "octo/octonion.hpp"
#include "octo/roots.hpp"
#include "octo/standard_rep.hpp"
#include "octo/weyl_modules.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace octo {

namespace {

using Witness = std::optional<std::string>;
using CheckFn = std::function<Witness()>;

class Suite {
public:
	Suite(std::string name, VerificationReport &report) : name_(std::move(name)), report_(report) {}

	void add(std::string check, CheckFn const &fn)
	{
		CheckResult r{name_, std::move(check), true, {}};
		try
		{
			if (auto w = fn())
			{
				r.pass = false;
				r.witness = *w;
			}
		}
		catch (std::exception const &e)
		{
			r.pass = false;
			r.witness = std::string("exception: ") + e.what();
		}
		report_.checks.push_back(std::move(r));
	}

private:
	std::string name_;
	VerificationReport &report_;
};

std::string f8s(F8 x) { return to_string(x); }

// Small random Gaussian rationals from a fixed seed.
class Sampler {
public:
	explicit Sampler(unsigned seed) : rng_(seed) {}

	mpq_class rational()
	{
		std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
		mpq_class q(num(rng_), den(rng_));
		q.canonicalize();
		return q;
	}
	Scalar scalar() { return Scalar(rational(), rational()); }
	Scalar real() { return Scalar(rational()); }
	Matrix matrix(std::size_t r, std::size_t c, int zero_percent = 40)
	{
		std::uniform_int_distribution<int> pct(0, 99);
		Matrix m(r, c);
		for (std::size_t i = 0; i < r; ++i)
			for (std::size_t j = 0; j < c; ++j)
				if (pct(rng_) >= zero_percent)
					m(i, j) = scalar();
		return m;
	}
	Octonion real_octonion()
	{
		Vector v(kOctonionDim);
		for (std::size_t k = 0; k < kOctonionDim; ++k)
			v[k] = real();
		return Octonion(v);
	}
	std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
	std::mt19937 rng_;
};

// ---------------------------------------------------------------- gf8

void gf8_suite(VerificationReport &report)
{
	Suite s("gf8", report);
	auto all = F8::all();
	s.add("addition and multiplication are associative (512 triples)", [&]() -> Witness {
		for (F8 x : all)
			for (F8 y : all)
				for (F8 z : all)
					if ((x + y) + z != x + (y + z) || (x * y) * z != x * (y * z))
						return f8s(x) + ", " + f8s(y) + ", " + f8s(z);
		return {};
	});
	s.add("addition and multiplication are commutative (64 pairs)", [&]() -> Witness {
		for (F8 x : all)
			for (F8 y : all)
				if (x + y != y + x || x * y != y * x)
					return f8s(x) + ", " + f8s(y);
		return {};
	});
	s.add("distributivity (512 triples)", [&]() -> Witness {
		for (F8 x : all)
			for (F8 y : all)
				for (F8 z : all)
					if (x * (y + z) != x * y + x * z)
						return f8s(x) + ", " + f8s(y) + ", " + f8s(z);
		return {};
	});
	s.add("identities and inverses", [&]() -> Witness {
		for (F8 x : all)
		{
			if (x + F8::zero() != x || x * F8::one() != x || x + x != F8::zero())
				return f8s(x);
			if (!x.is_zero() && x * inverse(x) != F8::one())
				return "inverse of " + f8s(x);
		}
		return {};
	});
	s.add("a^3 = a + 1", []() -> Witness {
		F8 a = F8::alpha();
		if (a * a * a != a + F8::one())
			return to_string(a * a * a);
		return {};
	});
	s.add("trace kernel is {0, a, a^2, a^4}", [&]() -> Witness {
		std::set<F8> kernel, expected{F8::zero(), F8::alpha_pow(1), F8::alpha_pow(2),
		                              F8::alpha_pow(4)};
		std::set<int> values;
		for (F8 x : all)
		{
			values.insert(trace(x));
			if (trace(x) == 0)
				kernel.insert(x);
		}
		if (kernel != expected || values != std::set<int>{0, 1})
			return "kernel size " + std::to_string(kernel.size());
		return {};
	});
	s.add("phi is invariant under frobenius and mtwist (64 pairs)", [&]() -> Witness {
		for (F8 x : all)
			for (F8 y : all)
				if (phi(frobenius(x), frobenius(y)) != phi(x, y) ||
				    phi(mtwist(x), mtwist(y)) != phi(x, y))
					return f8s(x) + ", " + f8s(y);
		return {};
	});
	s.add("frobenius and mtwist generate a group of order 21 on F8*", []() -> Witness {
		using Perm = std::array<int, 7>;
		auto as_perm = [](auto f) {
			Perm p{};
			for (int i = 0; i < 7; ++i)
				p[i] = alpha_index(f(F8::alpha_pow(i)));
			return p;
		};
		Perm fr = as_perm([](F8 x) { return frobenius(x); });
		Perm m = as_perm([](F8 x) { return mtwist(x); });
		Perm id{0, 1, 2, 3, 4, 5, 6};
		std::set<Perm> group{id};
		std::vector<Perm> queue{id};
		while (!queue.empty())
		{
			Perm p = queue.back();
			queue.pop_back();
			for (Perm const &g : {fr, m})
			{
				Perm q{};
				for (int i = 0; i < 7; ++i)
					q[i] = g[p[i]];
				if (group.insert(q).second)
					queue.push_back(q);
			}
		}
		if (group.size() != 21)
			return "order " + std::to_string(group.size());
		return {};
	});
}

// ------------------------------------------------------------- scalar

void scalar_suite(VerificationReport &report)
{
	Suite s("scalar", report);
	s.add("field axioms on 200 random samples", []() -> Witness {
		Sampler r(11);
		for (int k = 0; k < 200; ++k)
		{
			Scalar a = r.scalar(), b = r.scalar(), c = r.scalar();
			if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c))
				return "associativity: " + to_string(a) + ", " + to_string(b) + ", " + to_string(c);
			if (a + b != b + a || a * b != b * a)
				return "commutativity: " + to_string(a) + ", " + to_string(b);
			if (a * (b + c) != a * b + a * c)
				return "distributivity: " + to_string(a) + ", " + to_string(b) + ", " + to_string(c);
			if (a + (-a) != Scalar() || a * Scalar(1) != a)
				return "identities: " + to_string(a);
			if (!a.is_zero() && a * (Scalar(1) / a) != Scalar(1))
				return "inverse: " + to_string(a);
		}
		return {};
	});
	s.add("equal values have identical representations", []() -> Witness {
		Sampler r(12);
		for (int k = 0; k < 200; ++k)
		{
			Scalar a = r.scalar(), b = r.scalar();
			if (b.is_zero())
				continue;
			Scalar c = (a * b) / b;
			bool same_repr = c.re().get_num() == a.re().get_num() &&
			                 c.re().get_den() == a.re().get_den() &&
			                 c.im().get_num() == a.im().get_num() &&
			                 c.im().get_den() == a.im().get_den();
			if (c != a || !same_repr || to_string(c) != to_string(a))
				return to_string(a) + " vs " + to_string(c);
			if ((a == b) != (to_string(a) == to_string(b)))
				return to_string(a) + " vs " + to_string(b);
		}
		if (GaussianRational::fraction(2, 4) != GaussianRational::fraction(-1, -2))
			return std::string("2/4 vs -1/-2");
		return {};
	});
}

// ------------------------------------------------------------- linalg

void linalg_suite(VerificationReport &report)
{
	Suite s("linalg", report);
	s.add("rank + nullity = number of columns (50 random matrices)", []() -> Witness {
		Sampler r(21);
		for (int k = 0; k < 50; ++k)
		{
			Matrix m = r.matrix(1 + r.index(6), 1 + r.index(6), 50);
			if (rank(m) + kernel(m).dim() != m.cols())
				return "sample " + std::to_string(k);
			for (auto const &v : kernel(m).dense_basis())
				if (!apply(m, v).is_zero())
					return "kernel vector not killed, sample " + std::to_string(k);
		}
		return {};
	});
	s.add("RREF is canonical for a subspace", []() -> Witness {
		Sampler r(22);
		for (int k = 0; k < 30; ++k)
		{
			std::size_t n = 2 + r.index(5), d = 1 + r.index(n);
			std::vector<Vector> basis;
			for (std::size_t i = 0; i < d; ++i)
				basis.push_back(r.matrix(1, n, 30).row(0));
			std::vector<Vector> mixed;
			for (std::size_t i = 0; i < d; ++i)
			{
				Vector v(n);
				for (auto const &b : basis)
					v += r.scalar() * b;
				mixed.push_back(v);
			}
			Subspace a = Subspace::span(n, basis), b = Subspace::span(n, mixed);
			if (b.dim() == a.dim() && a != b)
				return "sample " + std::to_string(k);
			if (!a.contains(b))
				return "containment, sample " + std::to_string(k);
		}
		return {};
	});
	s.add("closure_under is monotone and idempotent", []() -> Witness {
		Sampler r(23);
		for (int k = 0; k < 20; ++k)
		{
			std::size_t n = 3 + r.index(4);
			std::vector<Operator> ops{r.matrix(n, n, 70), r.matrix(n, n, 70)};
			std::vector<Vector> seeds{Vector::unit(n, r.index(n))};
			std::vector<Vector> more = seeds;
			more.push_back(r.matrix(1, n, 50).row(0));
			Subspace c1 = closure_under(ops, seeds);
			Subspace c2 = closure_under(ops, more);
			if (!c2.contains(c1))
				return "monotonicity, sample " + std::to_string(k);
			auto again = c1.dense_basis();
			if (closure_under(ops, again) != c1)
				return "idempotence, sample " + std::to_string(k);
			for (auto const &op : ops)
				for (auto const &v : again)
					if (!c1.contains(apply(op, v)))
						return "not invariant, sample " + std::to_string(k);
		}
		return {};
	});
}

// ----------------------------------------------------------- octonion

void octonion_suite(VerificationReport &report)
{
	Suite s("octonion", report);
	auto all = F8::all();
	s.add("e^0 is a two-sided identity and (e^x)^2 = -1 for x != 0", [&]() -> Witness {
		Octonion one = Octonion::identity();
		for (F8 x : all)
		{
			Octonion e = Octonion::basis(x);
			if (one * e != e || e * one != e)
				return "identity on e^" + f8s(x);
			if (!x.is_zero() && e * e != -one)
				return "square of e^" + f8s(x);
		}
		return {};
	});
	s.add("associator is alternating on all basis triples", [&]() -> Witness {
		for (F8 x : all)
			for (F8 y : all)
				for (F8 z : all)
				{
					Octonion a = Octonion::basis(x), b = Octonion::basis(y), c = Octonion::basis(z);
					Octonion t = associator(a, b, c);
					if (associator(b, a, c) != -t || associator(a, c, b) != -t ||
					    associator(c, b, a) != -t || associator(b, c, a) != t ||
					    associator(c, a, b) != t)
						return f8s(x) + ", " + f8s(y) + ", " + f8s(z);
				}
		return {};
	});
	s.add("Fr and M are algebra automorphisms", [&]() -> Witness {
		for (auto tau : {GaloisSymmetry::frobenius(), GaloisSymmetry::multiplier()})
			for (F8 x : all)
				for (F8 y : all)
				{
					Octonion a = Octonion::basis(x), b = Octonion::basis(y);
					if (galois_apply(tau, a * b) != galois_apply(tau, a) * galois_apply(tau, b))
						return tau.name() + " on " + f8s(x) + ", " + f8s(y);
				}
		return {};
	});
	s.add("N(ab) = N(a) N(b) on 100 random real octonion pairs", []() -> Witness {
		Sampler r(31);
		for (int k = 0; k < 100; ++k)
		{
			Octonion a = r.real_octonion(), b = r.real_octonion();
			if (norm(a * b) != norm(a) * norm(b))
				return to_string(a) + " ; " + to_string(b);
		}
		return {};
	});
	s.add("ad_[e^x,e^y] e^z = 2[e^x,e^y,e^z] for z outside F2 x + F2 y", [&]() -> Witness {
		for (F8 x : all)
			for (F8 y : all)
				for (F8 z : all)
				{
					if (z == F8::zero() || z == x || z == y || z == x + y)
						continue;
					Octonion a = Octonion::basis(x), b = Octonion::basis(y), c = Octonion::basis(z);
					Octonion lhs(apply(ad_operator(commutator(a, b)), c.coordinates()));
					if (lhs != Scalar(2) * associator(a, b, c))
						return f8s(x) + ", " + f8s(y) + ", " + f8s(z);
				}
		return {};
	});
}

// -------------------------------------------------------- derivations

void derivations_suite(VerificationReport &report)
{
	Suite s("derivations", report);
	auto all = F8::all();
	auto units = F8::units();
	auto const &g = DerivationAlgebra::instance();

	s.add("D_pair agrees with the closed formula on 336 triples", [&]() -> Witness {
		for (F8 x : units)
			for (F8 y : units)
			{
				if (x == y)
					continue;
				Operator d = D_pair(Octonion::basis(x), Octonion::basis(y));
				for (F8 z : all)
					if (Octonion(apply(d, Octonion::basis(z).coordinates())) != closed_form_derivation(x, y, z))
						return f8s(x) + ", " + f8s(y) + ", " + f8s(z);
			}
		return {};
	});
	s.add("every D(e_i ^ e_j) is a derivation (21 x 64 pairs)", []() -> Witness {
		for (std::size_t k = 0; k < kWedgeDim; ++k)
		{
			auto [i, j] = index_pair(k);
			Operator d = D_wedge(Wedge2::basis(i, j));
			for (F8 z : F8::all())
				for (F8 w : F8::all())
					if (!leibniz_defect(d, Octonion::basis(z), Octonion::basis(w)).is_zero())
						return "e" + std::to_string(i) + "^e" + std::to_string(j) + " on " + f8s(z) +
						       ", " + f8s(w);
		}
		return {};
	});
	s.add("d(e^u) and e^v anticommute when u+x+y, v are distinct units", [&]() -> Witness {
		for (F8 x : units)
			for (F8 y : units)
			{
				if (x == y)
					continue;
				Operator d = D_pair(Octonion::basis(x), Octonion::basis(y));
				for (F8 u : all)
					for (F8 v : units)
					{
						F8 t = u + x + y;
						if (t.is_zero() || t == v)
							continue;
						Octonion du(apply(d, Octonion::basis(u).coordinates()));
						Octonion ev = Octonion::basis(v);
						if (!(du * ev + ev * du).is_zero())
							return f8s(x) + ", " + f8s(y) + ", " + f8s(u) + ", " + f8s(v);
					}
			}
		return {};
	});
	s.add("kernel of D has dimension 7 with the orbit of Delta as basis", []() -> Witness {
		Subspace k = kernel_of_D();
		std::vector<Vector> orbit;
		for (auto const &w : delta_orbit())
			orbit.push_back(w.coordinates());
		Subspace span = Subspace::span(kWedgeDim, orbit);
		if (k.dim() != 7 || span.dim() != 7 || span != k)
			return "dim ker D = " + std::to_string(k.dim()) + ", orbit rank " +
			       std::to_string(span.dim());
		if (rank(d_matrix()) != kLieDim)
			return std::string("rank of D is not 14");
		return {};
	});
	s.add("<Fr, M> acts simply transitively on the 21 pairs", []() -> Witness {
		auto group = GaloisSymmetry::group();
		if (group.size() != 21)
			return "group order " + std::to_string(group.size());
		std::set<IndexPair> orbit;
		int stabilizer = 0;
		for (auto const &tau : group)
		{
			int i = tau.apply_index(1), j = tau.apply_index(3);
			IndexPair p{std::min(i, j), std::max(i, j)};
			orbit.insert(p);
			if (p == IndexPair{1, 3})
				++stabilizer;
		}
		if (orbit.size() != 21 || stabilizer != 1)
			return "orbit " + std::to_string(orbit.size()) + ", stabilizer " +
			       std::to_string(stabilizer);
		return {};
	});
	s.add("the seven Cartans D(B_k) are abelian, orthogonal and sum to g", [&]() -> Witness {
		auto parts = b_partition();
		std::array<std::vector<GElement>, 7> cartans;
		Subspace total(kLieDim);
		for (int k = 0; k < 7; ++k)
		{
			std::vector<Vector> coords;
			for (auto [i, j] : parts[k])
			{
				cartans[k].push_back(g.element(D_wedge(Wedge2::basis(i, j))));
				coords.push_back(cartans[k].back().coords);
				total.insert(cartans[k].back().coords);
			}
			if (Subspace::span(kLieDim, coords).dim() != 2)
				return "B_" + std::to_string(k) + " does not span a plane";
			for (auto const &x : cartans[k])
				for (auto const &y : cartans[k])
					if (!g.bracket(x, y).coords.is_zero())
						return "B_" + std::to_string(k) + " is not abelian";
		}
		for (int k = 0; k < 7; ++k)
			for (int l = k + 1; l < 7; ++l)
				for (auto const &x : cartans[k])
					for (auto const &y : cartans[l])
						if (!g.killing_form(x, y).is_zero())
							return "B_" + std::to_string(k) + " vs B_" + std::to_string(l);
		if (total.dim() != kLieDim)
			return "sum has dimension " + std::to_string(total.dim());
		return {};
	});
	s.add("g is closed under bracket and consists of derivations", [&]() -> Witness {
		if (g.dim() != kLieDim)
			return "dim g = " + std::to_string(g.dim());
		for (std::size_t i = 0; i < kLieDim; ++i)
		{
			if (!is_derivation(g.basis_operators()[i]))
				return "basis element " + std::to_string(i);
			for (std::size_t j = 0; j < kLieDim; ++j)
			{
				Operator c = commutator(g.basis_operators()[i], g.basis_operators()[j]);
				if (!g.try_coordinates(c))
					return "bracket " + std::to_string(i) + ", " + std::to_string(j);
			}
		}
		return {};
	});
	s.add("[e13, e26] = 0", []() -> Witness {
		if (!commutator(D_wedge(Wedge2::basis(1, 3)), D_wedge(Wedge2::basis(2, 6))).is_zero())
			return std::string("nonzero");
		return {};
	});
	s.add("Killing form is symmetric and nondegenerate", [&]() -> Witness {
		Matrix gram(kLieDim, kLieDim);
		for (std::size_t i = 0; i < kLieDim; ++i)
			for (std::size_t j = 0; j < kLieDim; ++j)
				gram(i, j) = g.killing_form(g.basis_element(i), g.basis_element(j));
		if (gram != transpose(gram))
			return std::string("not symmetric");
		if (rank(gram) != kLieDim)
			return "rank " + std::to_string(rank(gram));
		return {};
	});
}

// ---------------------------------------------------------- chevalley

void chevalley_suite(VerificationReport &report)
{
	Suite s("chevalley", report);
	auto const &cb = chevalley_basis();
	auto const &g = DerivationAlgebra::instance();
	auto const &roots = all_roots();

	s.add("structure constants are integral, antisymmetric and satisfy Jacobi", []() -> Witness {
		auto const &c = structure_constants();
		for (std::size_t i = 0; i < kLieDim; ++i)
			for (std::size_t j = 0; j < kLieDim; ++j)
				for (std::size_t k = 0; k < kLieDim; ++k)
					if (c[i][j][k] != -c[j][i][k])
						return "antisymmetry at " + std::to_string(i) + ", " + std::to_string(j);
		for (std::size_t i = 0; i < kLieDim; ++i)
			for (std::size_t j = 0; j < kLieDim; ++j)
				for (std::size_t k = 0; k < kLieDim; ++k)
					for (std::size_t out = 0; out < kLieDim; ++out)
					{
						long sum = 0;
						for (std::size_t m = 0; m < kLieDim; ++m)
							sum += c[j][k][m] * c[i][m][out] + c[k][i][m] * c[j][m][out] +
							       c[i][j][m] * c[k][m][out];
						if (sum != 0)
							return "Jacobi at " + std::to_string(i) + ", " + std::to_string(j) +
							       ", " + std::to_string(k);
					}
		return {};
	});
	s.add("Frobenius and conjugation permute the root vectors", [&]() -> Witness {
		for (auto rho : roots)
		{
			if (symmetry_conjugate(GaloisSymmetry::frobenius(), cb.E(rho).op) !=
			    cb.E(frobenius(rho)).op)
				return "Fr on E_" + to_string(rho);
			if (conjugate(cb.E(rho).op) != cb.E(negate(rho)).op)
				return "conjugation on E_" + to_string(rho);
			if (rotate(root_coordinates(rho)) != root_coordinates(frobenius(rho)))
				return "rotation of " + to_string(rho);
			if (root_coordinates(negate(rho)) != -root_coordinates(rho))
				return "negation of " + to_string(rho);
		}
		for (auto v : {RootVector{1, 0}, RootVector{0, 1}})
			if (rotate(rotate(rotate(v))) != v)
				return std::string("rotation is not of order 3");
		return {};
	});
	s.add("[H, E_rho] = rho(H) E_rho", [&]() -> Witness {
		for (auto rho : roots)
		{
			RootVector c = root_coordinates(rho);
			GElement const &e = cb.E(rho);
			if (g.bracket(cb.H_beta(), e).op != Scalar(c.m) * e.op ||
			    g.bracket(cb.H_gamma(), e).op != Scalar(c.n) * e.op)
				return to_string(rho);
		}
		return {};
	});
	s.add("|N_rho,sigma| = p + 1 whenever rho + sigma is a root", [&]() -> Witness {
		auto const &c = structure_constants();
		for (auto rho : roots)
			for (auto sigma : roots)
			{
				auto sum = label_of(root_coordinates(rho) + root_coordinates(sigma));
				if (!sum)
					continue;
				long n = c[ChevalleyBasis::index_of(rho)][ChevalleyBasis::index_of(sigma)]
				          [ChevalleyBasis::index_of(*sum)];
				if (std::labs(n) != string_length_p(rho, sigma) + 1)
					return to_string(rho) + ", " + to_string(sigma) + ": N = " + std::to_string(n);
			}
		return {};
	});
	s.add("short roots have length 2, long roots length 6, long = psi - psi'", [&]() -> Witness {
		for (auto rho : roots)
		{
			RootVector c = root_coordinates(rho);
			if (inner_product(c, c) != (rho.is_short() ? 2 : 6))
				return to_string(rho);
			if (!rho.is_short())
			{
				RootLabel psi = long_root_decomposition(rho);
				if (root_coordinates(psi) - root_coordinates(frobenius(psi)) != c)
					return to_string(rho);
			}
		}
		return {};
	});
	s.add("Cartan matrix is ((2,-1),(-3,2))", []() -> Witness {
		auto m = cartan_matrix();
		if (m != std::array<std::array<int, 2>, 2>{{{2, -1}, {-3, 2}}})
			return std::string("mismatch");
		return {};
	});
	s.add("root spaces are the twelve lines plus a 2-dimensional zero space", []() -> Witness {
		auto spaces = root_space_decomposition();
		std::size_t total = 0;
		for (auto const &[w, sp] : spaces)
		{
			std::size_t expect = w == RootVector{} ? 2 : 1;
			if (sp.dim() != expect)
				return "weight (" + std::to_string(w.m) + "," + std::to_string(w.n) + ")";
			total += sp.dim();
		}
		if (spaces.size() != 13 || total != kLieDim)
			return "total " + std::to_string(total);
		return {};
	});
	s.add("E_rho by transport equals E_rho by formula", []() -> Witness {
		for (auto rho : all_roots())
			if (E_vector(rho) != E_vector_by_formula(rho))
				return to_string(rho);
		return {};
	});
}

// ------------------------------------------------------- standard_rep

void standard_rep_suite(VerificationReport &report)
{
	Suite s("standard_rep", report);
	auto const &cb = chevalley_basis();

	s.add("every basis element maps V into V", [&]() -> Witness {
		for (std::size_t k = 0; k < cb.elements.size(); ++k)
			if (!preserves_V(cb.elements[k].op))
				return cb.names[k];
		return {};
	});
	s.add("the seven weight vectors form a basis with the expected weights", []() -> Witness {
		std::vector<Vector> vs;
		for (auto const &w : weight_labels())
		{
			Octonion v = weight_vector(w);
			vs.push_back(v.coordinates());
			auto weight = weight_of(v);
			if (!weight || *weight != weight_coordinates(w))
				return "weight of v_" + to_string(w);
		}
		if (Subspace::span(kOctonionDim, vs).dim() != kStandardDim)
			return std::string("not independent");
		return {};
	});
	s.add("the 12 x 7 action table matches the predicted values", []() -> Witness {
		auto table = action_table();
		auto weights = weight_labels();
		for (std::size_t r = 0; r < 12; ++r)
			for (std::size_t w = 0; w < 7; ++w)
			{
				int predicted = predicted_scalar(all_roots()[r], weights[w]);
				if (table[r][w] != predicted)
					return "E_" + to_string(all_roots()[r]) + " v_" + to_string(weights[w]) + ": " +
					       std::to_string(table[r][w]) + " vs " + std::to_string(predicted);
			}
		return {};
	});
	s.add("algebraic and geometric sign rules agree", []() -> Witness {
		for (auto rho : all_roots())
			for (auto psi : short_roots())
			{
				auto t = label_of(root_coordinates(rho) + root_coordinates(psi));
				if (!t || !t->is_short())
					continue;
				if (expected_sign(rho, psi) != geometric_sign(rho, psi))
					return to_string(rho) + ", " + to_string(psi);
			}
		return {};
	});
	s.add("Frobenius equivariance of the action", []() -> Witness {
		for (auto rho : all_roots())
			for (auto const &w : weight_labels())
			{
				WeightLabel w1 = w.root ? WeightLabel::of(frobenius(*w.root)) : w;
				if (galois_apply(GaloisSymmetry::frobenius(), act(rho, w)) != act(frobenius(rho), w1))
					return to_string(rho) + ", " + to_string(w);
			}
		return {};
	});
}

// ------------------------------------------------------- weyl_modules

void weyl_modules_suite(VerificationReport &report)
{
	Suite s("weyl_modules", report);
	std::vector<TwoRowShape> shapes{{1, 0}, {2, 0}, {0, 1}, {3, 0}, {1, 1},
	                                {4, 0}, {2, 1}, {0, 2}};

	s.add("projector image dimension equals the hook content formula (n <= 4)", [&]() -> Witness {
		for (auto sh : shapes)
		{
			std::size_t d = young_image(sh).dim();
			if (static_cast<long>(d) != schur_dimension(sh))
				return "shape (" + std::to_string(sh.row1()) + "," + std::to_string(sh.row2()) +
				       "): " + std::to_string(d);
		}
		return {};
	});
	s.add("image dimension does not depend on the factor order", []() -> Witness {
		for (TwoRowShape sh : {TwoRowShape{1, 1}, TwoRowShape{2, 1}})
			if (young_image(sh, FactorOrder::row_major).dim() != young_image(sh).dim())
				return "shape (" + std::to_string(sh.row1()) + "," + std::to_string(sh.row2()) + ")";
		return {};
	});
	s.add("P^2 = kappa P on basis tensors", []() -> Witness {
		for (TwoRowShape sh : {TwoRowShape{1, 1}, TwoRowShape{2, 1}})
		{
			Scalar kappa = projector_eigenvalue(sh);
			std::size_t dim = tensor_dim(sh.degree());
			for (std::size_t idx = 0; idx < dim; idx += 5)
			{
				TensorVector e{sh.degree(), SparseVector(dim)};
				e.data.set(idx, Scalar(1));
				TensorVector p = young_project(e, sh);
				if (young_project(p, sh).data != kappa * p.data)
					return "index " + std::to_string(idx);
			}
		}
		return {};
	});
	s.add("diagonal action preserves the projector image", []() -> Witness {
		auto ops = chevalley_operators_on_V();
		for (TwoRowShape sh : {TwoRowShape{1, 1}, TwoRowShape{2, 0}, TwoRowShape{2, 1}})
		{
			Subspace image = young_image(sh);
			for (auto const &v : image.basis())
				for (std::size_t k = 0; k < ops.size(); ++k)
					if (!image.contains(diagonal_action(ops[k], TensorVector{sh.degree(), v}).data))
						return "generator " + std::to_string(k);
		}
		return {};
	});
	s.add("exchange conditions hold in the image", []() -> Witness {
		std::vector<Vector> vs;
		for (std::size_t k = 0; k < kStandardDim; ++k)
			vs.push_back(Vector::unit(kStandardDim, k));
		Vector mix = vs[0] + Scalar(2) * vs[3] - GaussianRational::i() * vs[5];
		std::vector<TableauFilling> fillings{
		    {{vs[0]}, {vs[1]}},
		    {{vs[0], vs[2]}, {vs[1]}},
		    {{vs[4], vs[2], vs[6]}, {vs[1]}},
		    {{vs[0], vs[2]}, {vs[1], vs[3]}},
		    {{mix, vs[2]}, {vs[6]}},
		    {{vs[3], vs[3]}, {vs[3]}},
		};
		for (std::size_t k = 0; k < fillings.size(); ++k)
			if (!exchange_check(fillings[k]))
				return "filling " + std::to_string(k);
		return {};
	});

	std::vector<std::pair<int, int>> labels{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
	std::map<std::pair<int, int>, IrrepReport> reports;
	s.add("generated module dimension equals the Weyl dimension", [&]() -> Witness {
		for (auto [a, b] : labels)
		{
			IrrepReport r = generate_irrep(a, b);
			bool ok = static_cast<long>(r.dim) == r.weyl && r.in_image;
			reports.emplace(std::pair{a, b}, std::move(r));
			if (!ok)
				return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
		}
		return {};
	});
	s.add("weight multiplicities are invariant under rotation and negation", [&]() -> Witness {
		for (auto const &[ab, r] : reports)
			for (auto const &[w, k] : r.multiplicities)
			{
				auto rot = r.multiplicities.find(rotate(w));
				auto neg = r.multiplicities.find(-w);
				if (rot == r.multiplicities.end() || rot->second != k ||
				    neg == r.multiplicities.end() || neg->second != k)
					return "(" + std::to_string(ab.first) + "," + std::to_string(ab.second) +
					       ") at (" + std::to_string(w.m) + "," + std::to_string(w.n) + ")";
			}
		if (reports.size() != labels.size())
			return std::string("missing reports");
		return {};
	});
	s.add("w_lambda has weight (a, b), is highest and nothing lies above it", [&]() -> Witness {
		for (auto [a, b] : labels)
		{
			TensorVector w = highest_weight_vector(a, b);
			auto wt = tensor_weight(w);
			if (w.data.is_zero() || !wt || *wt != RootVector{a, b} || !is_highest_weight(w))
				return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
			auto it = reports.find({a, b});
			if (it == reports.end())
				return std::string("missing report");
			for (auto const &[mu, k] : it->second.multiplicities)
			{
				auto [p, q] = simple_root_coordinates(mu - RootVector{a, b});
				if (p >= 0 && q >= 0 && (p > 0 || q > 0))
					return "weight above w_lambda in (" + std::to_string(a) + "," +
					       std::to_string(b) + ")";
			}
		}
		return {};
	});
}

} // namespace

bool VerificationReport::passed() const
{
	return std::all_of(checks.begin(), checks.end(), [](CheckResult const &c) { return c.pass; });
}

std::vector<std::string> const &suite_names()
{
	static std::vector<std::string> const names{"gf8",         "scalar",    "linalg",
	                                            "octonion",    "derivations", "chevalley",
	                                            "standard_rep", "weyl_modules"};
	return names;
}

VerificationReport run_suite(std::string const &name)
{
	static std::map<std::string, void (*)(VerificationReport &)> const runners{
	    {"gf8", gf8_suite},
	    {"scalar", scalar_suite},
	    {"linalg", linalg_suite},
	    {"octonion", octonion_suite},
	    {"derivations", derivations_suite},
	    {"chevalley", chevalley_suite},
	    {"standard_rep", standard_rep_suite},
	    {"weyl_modules", weyl_modules_suite},
	};
	VerificationReport report;
	report.suite = name;
	if (name == "all")
	{
		for (auto const &n : suite_names())
			runners.at(n)(report);
		return report;
	}
	auto it = runners.find(name);
	if (it == runners.end())
		throw std::invalid_argument("unknown suite '" + name + "'");
	it->second(report);
	return report;
}

} // namespace octo
