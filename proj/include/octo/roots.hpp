#pragma once

// Root data of g2 in the realization fixed by the coroots H_beta, H_gamma.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace octo {

/// Value of a weight on (H_beta, H_gamma).
struct RootVector
{
	int m = 0;
	int n = 0;

	friend RootVector operator+(RootVector a, RootVector b) { return {a.m + b.m, a.n + b.n}; }
	friend RootVector operator-(RootVector a, RootVector b) { return {a.m - b.m, a.n - b.n}; }
	friend RootVector operator-(RootVector a) { return {-a.m, -a.n}; }
	friend RootVector operator*(int k, RootVector a) { return {k * a.m, k * a.n}; }
	friend bool operator==(RootVector, RootVector) = default;
	friend auto operator<=>(RootVector, RootVector) = default;
};

enum class RootBase
{
	beta,  // short
	gamma, // long
};

/// +-beta, +-beta', +-beta'', +-gamma, ... ; `twist` counts Frobenius primes.
struct RootLabel
{
	RootBase base = RootBase::beta;
	int twist = 0; // 0, 1, 2
	int sign = 1;  // +1 or -1

	bool is_short() const { return base == RootBase::beta; }
	friend bool operator==(RootLabel, RootLabel) = default;
	friend auto operator<=>(RootLabel, RootLabel) = default;
};

/// beta, beta', beta'', -beta, -beta', -beta'', gamma, ..., -gamma''.
std::array<RootLabel, 12> const &all_roots();
std::array<RootLabel, 6> short_roots();

RootLabel frobenius(RootLabel r);
RootLabel negate(RootLabel r);

RootVector root_coordinates(RootLabel r);
std::optional<RootLabel> label_of(RootVector v);
bool is_root(RootVector v);

/// ((beta(H_beta), beta(H_gamma)), (gamma(H_beta), gamma(H_gamma)))
std::array<std::array<int, 2>, 2> cartan_matrix();

/// (p, q) with v = p beta + q gamma.
std::pair<int, int> simple_root_coordinates(RootVector v);
bool is_positive(RootLabel r);
/// The linear map on weights induced by Frobenius (beta -> beta', gamma -> gamma').
RootVector rotate(RootVector v);
/// Weyl-invariant form with short roots of squared length 2.
int inner_product(RootVector a, RootVector b);
/// Sign of the oriented angle from a to b in the root plane
/// (beta pointing right, beta' upper left): +1 anticlockwise,
/// -1 clockwise, 0 if parallel.
int orientation(RootVector a, RootVector b);

/// Fundamental weights mu1 = -beta'', mu2 = -gamma'.
RootVector mu1();
RootVector mu2();

/// "beta", "-gamma''", ...
std::string to_string(RootLabel r);
std::optional<RootLabel> parse_root_label(std::string const &s);

} // namespace octo
