#pragma once

// Irreducible g2-modules Gamma_{a,b} inside the Weyl module S_lambda(V),
// lambda = (a+b, b), realized as the image of a Young projector on the
// tensor power of V = Im(O) (x) C.

#include "octo/derivations.hpp"
#include "octo/linalg.hpp"
#include "octo/roots.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace octo {

struct TwoRowShape
{
	int a = 0;
	int b = 0;

	int row1() const { return a + b; }
	int row2() const { return b; }
	int degree() const { return a + 2 * b; }
	friend bool operator==(TwoRowShape, TwoRowShape) = default;
};

/// Assignment of tableau cells to tensor factors.
///   column_major: column j < b is factors 2j, 2j+1; leftover row-1 cells follow.
///   row_major:    row 1 is factors 0..a+b-1, row 2 is a+b..n-1.
enum class FactorOrder
{
	column_major,
	row_major,
};

struct CellPositions
{
	std::vector<int> row1;
	std::vector<int> row2;
};
CellPositions cell_positions(TwoRowShape shape, FactorOrder order = FactorOrder::column_major);

/// Entries are 7-dimensional coordinate vectors over e0..e6.
struct TableauFilling
{
	std::vector<Vector> row1;
	std::vector<Vector> row2;

	/// Throws std::invalid_argument unless row1 is at least as long as row2.
	TwoRowShape shape() const;
};

/// Element of the n-th tensor power of V. Index sum_p I_p 7^(n-1-p).
struct TensorVector
{
	int degree = 0;
	SparseVector data;

	friend bool operator==(TensorVector const &, TensorVector const &) = default;
};

std::size_t tensor_dim(int degree);
TensorVector pure_tensor(std::span<Vector const> factors);
TensorVector tensor_embed(TableauFilling const &f, FactorOrder order = FactorOrder::column_major);

/// Column antisymmetrization (signed average over the b column swaps)
/// followed by row symmetrization (average over row permutations).
/// Throws std::invalid_argument on degree mismatch.
TensorVector young_project(TensorVector const &t, TwoRowShape shape,
                           FactorOrder order = FactorOrder::column_major);
/// kappa with P^2 = kappa P: product of hook lengths / (|R| |C|).
Scalar projector_eigenvalue(TwoRowShape shape);
/// Span of the projections of all 7^n basis tensors.
Subspace young_image(TwoRowShape shape, FactorOrder order = FactorOrder::column_major);

/// The three exchange conditions on the projected filling: column swap
/// negates, interchanging equal-length columns fixes, w = z1 + z2.
bool exchange_check(TableauFilling const &f);

/// The 14 Chevalley basis elements restricted to V.
std::vector<Matrix> chevalley_operators_on_V();
TensorVector diagonal_action(Matrix const &x, TensorVector const &t);
TensorVector diagonal_action(GElement const &x, TensorVector const &t);

/// Simultaneous (H_beta, H_gamma) eigenvalues, or nullopt.
std::optional<RootVector> tensor_weight(TensorVector const &t);
/// E_rho t = 0 for all six positive roots.
bool is_highest_weight(TensorVector const &t);
/// Basis of the combinations of the given tensors killed by every positive E_rho.
std::vector<TensorVector> highest_weight_combinations(std::span<TensorVector const> candidates);

/// Projection of the filling with row 1 = v_-beta'' and row 2 = v_beta'.
TensorVector highest_weight_vector(int a, int b);

/// Closure of the seeds under the diagonal action of the Chevalley basis.
Subspace generated_module(std::span<TensorVector const> seeds);
/// Multiplicities of the (H_beta, H_gamma) weights on an invariant subspace.
std::map<RootVector, std::size_t> weight_multiplicities(Subspace const &space, int degree);

struct IrrepReport
{
	TwoRowShape shape;
	std::size_t dim = 0;
	long weyl = 0;
	std::map<RootVector, std::size_t> multiplicities; // empty unless requested
	bool in_image = false;
	Subspace space;
};

inline constexpr int kDefaultMaxDegree = 4;

/// Throws std::invalid_argument for negative a, b or when a + 2b exceeds max_degree.
IrrepReport generate_irrep(int a, int b, int max_degree = kDefaultMaxDegree,
                           bool weights = true);

long weyl_dimension(int a, int b);
/// Hook content formula for dim S_lambda(C^N).
long schur_dimension(TwoRowShape shape, int N = 7);

} // namespace octo
