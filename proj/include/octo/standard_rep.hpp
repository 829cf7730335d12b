#pragma once

// The 7-dimensional standard representation V = Im(O) (x) C.

#include "octo/linalg.hpp"
#include "octo/octonion.hpp"
#include "octo/roots.hpp"

#include <array>
#include <optional>
#include <string>

namespace octo {

inline constexpr std::size_t kStandardDim = 7;

/// The zero weight or a short root.
struct WeightLabel
{
	std::optional<RootLabel> root; // nullopt: the zero weight

	static WeightLabel zero() { return {}; }
	static WeightLabel of(RootLabel r) { return {r}; }
	bool is_zero() const { return !root; }
	friend bool operator==(WeightLabel const &, WeightLabel const &) = default;
};

/// 0, beta, beta', beta'', -beta, -beta', -beta''.
std::array<WeightLabel, 7> weight_labels();
RootVector weight_coordinates(WeightLabel w);
std::optional<WeightLabel> weight_label_of(RootVector v);
/// "0" or the root label.
std::string to_string(WeightLabel const &w);

/// v_0 = e0, v_beta = i e1 + e3, transported by Frobenius and conjugation.
Octonion weight_vector(WeightLabel w);

/// The simultaneous eigenvalues of (H_beta, H_gamma) on v, or nullopt when v
/// is not a simultaneous eigenvector. Throws std::invalid_argument for zero
/// or non-imaginary input.
std::optional<RootVector> weight_of(Octonion const &v);

/// The 7 x 7 block of an operator on O acting on Im(O) (coordinates e0..e6).
Matrix restrict_to_V(Operator const &op);
/// op kills e^0 and maps Im(O) into Im(O).
bool preserves_V(Operator const &op);

/// E_rho applied to v_w.
Octonion act(RootLabel rho, WeightLabel w);

/// The scalar s with act(rho, w) = s v_(rho + w), or 0 when rho + w is not a
/// weight of V. Throws std::logic_error if the image is not proportional to
/// the target weight vector.
Scalar action_scalar(RootLabel rho, WeightLabel w);

/// +1 iff rho + psi is psi' or -psi''. Throws std::invalid_argument unless
/// psi is short and rho + psi is a short root.
int expected_sign(RootLabel rho, RootLabel psi);
/// Same rule read geometrically: +1 iff psi -> rho + psi turns anticlockwise.
int geometric_sign(RootLabel rho, RootLabel psi);

/// Scalar predicted by E_psi v0 = v_psi, E_psi v_-psi = -2 v0 and the sign
/// rule; 0 where weights forbid a nonzero image.
int predicted_scalar(RootLabel rho, WeightLabel w);

/// 12 x 7 table of action_scalar in all_roots() x weight_labels() order.
std::array<std::array<int, 7>, 12> action_table();

} // namespace octo
