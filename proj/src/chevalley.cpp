#include "octo/chevalley.hpp"
#include "octo/standard_rep.hpp"

#include <stdexcept>

namespace octo {

namespace {

auto const &g() { return DerivationAlgebra::instance(); }

Scalar i_unit() { return GaussianRational::i(); }

// complex conjugation (for negative roots) followed by `twist` Frobenius steps
Operator transport(Operator op, RootLabel rho)
{
	if (rho.sign < 0)
		op = conjugate(op);
	for (int k = 0; k < rho.twist; ++k)
		op = symmetry_conjugate(GaloisSymmetry::frobenius(), op);
	return op;
}

RootLabel base_label(RootLabel rho) { return {rho.base, 0, 1}; }

} // namespace

Wedge2 coroot_wedge(RootBase base)
{
	Wedge2 e13 = Wedge2::basis(1, 3);
	if (base == RootBase::beta)
		return -i_unit() * e13;
	return (i_unit() / Scalar(3)) * (e13 - Wedge2::basis(2, 6));
}

std::pair<GElement, GElement> coroots()
{
	return {g().element(D_wedge(coroot_wedge(RootBase::beta))),
	        g().element(D_wedge(coroot_wedge(RootBase::gamma)))};
}

RootLabel long_root_decomposition(RootLabel nu)
{
	if (nu.is_short())
		throw std::invalid_argument("long_root_decomposition: " + to_string(nu) + " is short");
	std::optional<RootLabel> found;
	for (auto psi : short_roots())
	{
		if (root_coordinates(psi) - root_coordinates(frobenius(psi)) != root_coordinates(nu))
			continue;
		if (found)
			throw std::logic_error("long_root_decomposition: not unique");
		found = psi;
	}
	if (!found)
		throw std::logic_error("long_root_decomposition: no short root found");
	return *found;
}

Wedge2 defining_wedge(RootLabel rho)
{
	if (rho.is_short())
	{
		Wedge2 w = wedge(weight_vector(WeightLabel::zero()), weight_vector(WeightLabel::of(rho)));
		return GaussianRational::fraction(1, 2) * w;
	}
	RootLabel psi = long_root_decomposition(rho);
	Octonion v_psi = weight_vector(WeightLabel::of(psi));
	Octonion v_minus_psi_prime =
	    galois_apply(GaloisSymmetry::frobenius(), weight_vector(WeightLabel::of(negate(psi))));
	return GaussianRational::fraction(1, 6) * wedge(v_psi, v_minus_psi_prime);
}

GElement E_vector_by_formula(RootLabel rho) { return g().element(D_wedge(defining_wedge(rho))); }

GElement E_vector(RootLabel rho)
{
	GElement base = E_vector_by_formula(base_label(rho));
	return g().element(transport(std::move(base.op), rho));
}

GElement coroot_of(RootLabel rho)
{
	auto [h_beta, h_gamma] = coroots();
	Operator base = rho.is_short() ? h_beta.op : h_gamma.op;
	return g().element(transport(std::move(base), rho));
}

GElement const &ChevalleyBasis::E(RootLabel rho) const { return elements[index_of(rho)]; }

std::size_t ChevalleyBasis::index_of(RootLabel rho)
{
	auto const &roots = all_roots();
	for (std::size_t k = 0; k < roots.size(); ++k)
		if (roots[k] == rho)
			return 2 + k;
	throw std::invalid_argument("ChevalleyBasis: unknown root");
}

ChevalleyBasis const &chevalley_basis()
{
	static ChevalleyBasis const basis = [] {
		ChevalleyBasis b;
		auto [h_beta, h_gamma] = coroots();
		b.elements = {h_beta, h_gamma};
		b.names = {"H_beta", "H_gamma"};
		for (auto rho : all_roots())
		{
			b.elements.push_back(E_vector(rho));
			b.names.push_back("E_" + to_string(rho));
		}
		std::vector<Vector> family;
		for (auto const &x : b.elements)
			family.push_back(x.coords);
		b.coordinates = CoordinateSystem(std::move(family));
		return b;
	}();
	return basis;
}

Subspace root_space(RootVector weight)
{
	auto const &cb = chevalley_basis();
	std::vector<Operator> ops{g().ad(cb.H_beta()), g().ad(cb.H_gamma())};
	std::vector<Scalar> values{Scalar(weight.m), Scalar(weight.n)};
	return simultaneous_eigenspace(ops, values);
}

std::map<RootVector, Subspace> root_space_decomposition()
{
	std::map<RootVector, Subspace> r;
	r.emplace(RootVector{0, 0}, root_space({0, 0}));
	for (auto rho : all_roots())
		r.emplace(root_coordinates(rho), root_space(root_coordinates(rho)));
	return r;
}

StructureTable const &structure_constants()
{
	static StructureTable const table = [] {
		auto const &cb = chevalley_basis();
		StructureTable t{};
		for (std::size_t i = 0; i < kLieDim; ++i)
			for (std::size_t j = 0; j < kLieDim; ++j)
			{
				GElement z = g().bracket(cb.elements[i], cb.elements[j]);
				Vector c = cb.coordinates.coordinates(z.coords);
				for (std::size_t k = 0; k < kLieDim; ++k)
				{
					if (!c[k].is_integer())
						throw std::domain_error("structure constant [" + cb.names[i] + ", " +
						                        cb.names[j] + "] has non-integral coefficient " +
						                        to_string(c[k]) + " on " + cb.names[k]);
					t[i][j][k] = c[k].to_long();
				}
			}
		return t;
	}();
	return table;
}

int string_length_p(RootLabel rho, RootLabel sigma)
{
	int p = 0;
	while (is_root(root_coordinates(sigma) - (p + 1) * root_coordinates(rho)))
		++p;
	return p;
}

Matrix so7_matrix(Wedge2 const &w)
{
	Matrix s(kStandardDim, kStandardDim);
	for (int i = 0; i < 7; ++i)
		for (int j = i + 1; j < 7; ++j)
		{
			Scalar c = w.coefficient(i, j);
			if (c.is_zero())
				continue;
			s(i, j) = Scalar(2) * c;
			s(j, i) = Scalar(-2) * c;
		}
	return s;
}

Wedge2 so7_wedge(Matrix const &skew)
{
	if (skew.rows() != kStandardDim || skew.cols() != kStandardDim)
		throw std::invalid_argument("so7_wedge: need a 7 x 7 matrix");
	if (!(skew + transpose(skew)).is_zero())
		throw std::invalid_argument("so7_wedge: matrix is not skew symmetric");
	Wedge2 w;
	for (int i = 0; i < 7; ++i)
		for (int j = i + 1; j < 7; ++j)
			if (!skew(i, j).is_zero())
				w += (skew(i, j) / Scalar(2)) * Wedge2::basis(i, j);
	return w;
}

Wedge2 so7_bracket(Wedge2 const &a, Wedge2 const &b)
{
	return so7_wedge(commutator(so7_matrix(a), so7_matrix(b)));
}

So7IdentityTerms so7_identity_terms(RootLabel nu)
{
	if (nu.is_short())
		throw std::invalid_argument("so7 identity needs a long root, got " + to_string(nu));
	RootLabel psi = long_root_decomposition(nu);
	Octonion v0 = weight_vector(WeightLabel::zero());
	Octonion v_psi = weight_vector(WeightLabel::of(psi));
	Octonion v_minus_psi_prime =
	    galois_apply(GaloisSymmetry::frobenius(), weight_vector(WeightLabel::of(negate(psi))));
	Wedge2 u = wedge(v0, v_psi);
	Wedge2 w = wedge(v0, v_minus_psi_prime);

	auto const &cb = chevalley_basis();
	So7IdentityTerms t;
	t.g_bracket = commutator(D_wedge(u), D_wedge(w));
	t.via_E = Scalar(4) * commutator(cb.E(psi).op, cb.E(negate(frobenius(psi))).op);
	t.twelve_E = Scalar(12) * cb.E(nu).op;
	t.minus_D_so7 = -D_wedge(so7_bracket(u, w));
	return t;
}

bool so7_identity_check(RootLabel nu)
{
	So7IdentityTerms t = so7_identity_terms(nu);
	return t.g_bracket == t.via_E && t.via_E == t.twelve_E && t.twelve_E == t.minus_D_so7;
}

std::optional<std::pair<IndexPair, IndexPair>> non_homomorphism_witness()
{
	for (std::size_t k = 0; k < kWedgeDim; ++k)
		for (std::size_t l = k + 1; l < kWedgeDim; ++l)
		{
			auto [i1, j1] = index_pair(k);
			auto [i2, j2] = index_pair(l);
			Wedge2 u = Wedge2::basis(i1, j1);
			Wedge2 w = Wedge2::basis(i2, j2);
			if (D_wedge(so7_bracket(u, w)) != -commutator(D_wedge(u), D_wedge(w)))
				return std::pair{index_pair(k), index_pair(l)};
		}
	return std::nullopt;
}

} // namespace octo
