#pragma once

// Chevalley basis {H_beta, H_gamma} u {E_rho} of g, its root space
// decomposition and structure constants, and the so7 comparison.

#include "octo/derivations.hpp"
#include "octo/roots.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octo {

/// H_beta = -i e13, H_gamma = (i/3)(e13 - e26).
std::pair<GElement, GElement> coroots();

/// The short root psi with nu = psi - psi' for a long root nu.
/// Throws std::invalid_argument for a short root.
RootLabel long_root_decomposition(RootLabel nu);

/// E_beta and E_gamma from their defining formulas, every other root by
/// Frobenius / complex-conjugation transport.
GElement E_vector(RootLabel rho);
/// E_psi = 1/2 D(v0 ^ v_psi) for short psi, E_nu = 1/6 D(v_psi ^ v'_-psi)
/// for long nu, applied directly to every root (no transport).
GElement E_vector_by_formula(RootLabel rho);
/// w with E_vector_by_formula(rho) = D(w): 1/2 v0 ^ v_psi or 1/6 v_psi ^ v'_-psi.
Wedge2 defining_wedge(RootLabel rho);
/// -i e1^e3 for beta, (i/3)(e1^e3 - e2^e6) for gamma.
Wedge2 coroot_wedge(RootBase base);
/// H_beta or H_gamma transported the same way as E_rho.
GElement coroot_of(RootLabel rho);

struct ChevalleyBasis
{
	/// H_beta, H_gamma, then E_rho in all_roots() order.
	std::vector<GElement> elements;
	std::vector<std::string> names;
	/// elements[k].coords as a family; expresses g in this basis.
	CoordinateSystem coordinates;

	GElement const &H_beta() const { return elements[0]; }
	GElement const &H_gamma() const { return elements[1]; }
	GElement const &E(RootLabel rho) const;
	static std::size_t index_of(RootLabel rho);
};

ChevalleyBasis const &chevalley_basis();

/// Simultaneous eigenspace of (ad H_beta, ad H_gamma) on g (in g-coordinates).
Subspace root_space(RootVector weight);
/// All twelve root spaces plus the zero weight space.
std::map<RootVector, Subspace> root_space_decomposition();

/// c[i][j][k]: [X_i, X_j] = sum_k c[i][j][k] X_k in the Chevalley basis.
using StructureTable = std::array<std::array<std::array<long, kLieDim>, kLieDim>, kLieDim>;
/// Throws std::domain_error if a coefficient is not an integer.
StructureTable const &structure_constants();

/// Largest k with sigma - k rho a root.
int string_length_p(RootLabel rho, RootLabel sigma);

/// e_i ^ e_j <-> 2(E_ij - E_ji), as a 7 x 7 matrix indexed by Z/7.
Matrix so7_matrix(Wedge2 const &w);
Wedge2 so7_wedge(Matrix const &skew);
Wedge2 so7_bracket(Wedge2 const &a, Wedge2 const &b);

struct So7IdentityTerms
{
	Operator g_bracket;  // [D(v0 ^ v_psi), D(v0 ^ v'_-psi)]
	Operator via_E;      // 4 [E_psi, E_-psi']
	Operator twelve_E;   // 12 E_nu
	Operator minus_D_so7; // -D([v0 ^ v_psi, v0 ^ v'_-psi]_so7)
};
/// Throws std::invalid_argument for a short root.
So7IdentityTerms so7_identity_terms(RootLabel nu);
bool so7_identity_check(RootLabel nu);

/// Basis wedges u, w with D([u, w]_so7) != -[D u, D w]; first in pair order.
std::optional<std::pair<IndexPair, IndexPair>> non_homomorphism_witness();

} // namespace octo
