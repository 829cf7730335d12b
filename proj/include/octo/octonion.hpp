#pragma once

// The complexified octonions as the twisted group algebra of F8:
//
//     e^x e^y = (-1)^phi(x, y) e^(x + y),   phi(x, y) = tr(y x^6).
//
// Coordinates: index 0 is e^0 (the identity, rendered "u"), index 1 + i is
// e_i = e^(a^i) for i = 0..6. Beware that e_0 = e^1 is an imaginary unit.

#include "octo/gf8.hpp"
#include "octo/linalg.hpp"

#include <string>
#include <vector>

namespace octo {

inline constexpr std::size_t kOctonionDim = 8;

std::size_t coordinate_of(F8 x);
F8 field_element_of(std::size_t coordinate);

class Octonion {
public:
	Octonion() : c_(kOctonionDim) {}
	/// Throws std::invalid_argument unless v has dimension 8.
	explicit Octonion(Vector v);

	static Octonion identity() { return basis(F8::zero()); }
	/// e^x
	static Octonion basis(F8 x);
	/// e_i = e^(a^i), i read modulo 7
	static Octonion e(int i) { return basis(F8::alpha_pow(i)); }

	Scalar const &operator[](F8 x) const { return c_[coordinate_of(x)]; }
	Scalar const &coordinate(std::size_t k) const { return c_[k]; }
	Vector const &coordinates() const { return c_; }
	bool is_zero() const { return c_.is_zero(); }

	Octonion &operator+=(Octonion const &b);
	Octonion &operator-=(Octonion const &b);
	Octonion &operator*=(Scalar const &s);
	friend bool operator==(Octonion const &, Octonion const &) = default;

private:
	Vector c_;
};

Octonion operator+(Octonion a, Octonion const &b);
Octonion operator-(Octonion a, Octonion const &b);
Octonion operator-(Octonion a);
Octonion operator*(Scalar const &s, Octonion a);

struct SignedIndex
{
	int sign; // +1 or -1
	F8 index;
	friend bool operator==(SignedIndex, SignedIndex) = default;
};

/// e^x e^y = sign * e^index.
SignedIndex basis_product(F8 x, F8 y);

Octonion multiply(Octonion const &a, Octonion const &b);
inline Octonion operator*(Octonion const &a, Octonion const &b) { return multiply(a, b); }

/// ab - ba
Octonion commutator(Octonion const &a, Octonion const &b);
/// (ab)c - a(bc)
Octonion associator(Octonion const &a, Octonion const &b, Octonion const &c);

/// Matrix of b -> [a, b].
Operator ad_operator(Octonion const &a);
/// Matrix of b -> a b.
Operator left_multiplication(Octonion const &a);

/// Conjugates every coefficient; fixes each e^x.
Octonion complex_conjugate(Octonion const &a);

Octonion imaginary_part(Octonion const &a);
bool is_imaginary(Octonion const &a);
/// Sum of squares of the eight coefficients (the octonion norm on the real form).
Scalar norm(Octonion const &a);

/// The order-21 group generated by Fr: x -> x^2 and M: x -> a x, acting on
/// F8 as x -> a^mult * x^(2^frob).
class GaloisSymmetry {
public:
	GaloisSymmetry() = default;
	static GaloisSymmetry identity() { return {}; }
	static GaloisSymmetry frobenius() { return GaloisSymmetry(1, 0); }
	static GaloisSymmetry multiplier() { return GaloisSymmetry(0, 1); }

	int frobenius_power() const { return frob_; }
	int multiplier_power() const { return mult_; }

	F8 apply(F8 x) const;
	/// Imaginary index i -> index of tau(a^i).
	int apply_index(int i) const;
	/// (this o other)(x) = this(other(x)).
	GaloisSymmetry compose(GaloisSymmetry const &other) const;
	GaloisSymmetry inverse() const;
	/// Permutation matrix of e^x -> e^(tau x) on the 8 coordinates.
	Operator matrix() const;

	/// All 21 elements, enumerated by closing {Fr, M} under composition.
	static std::vector<GaloisSymmetry> group();

	/// "id", "Fr", "M^3", "M^2 Fr^2", ...
	std::string name() const;

	friend bool operator==(GaloisSymmetry, GaloisSymmetry) = default;
	friend auto operator<=>(GaloisSymmetry, GaloisSymmetry) = default;

private:
	GaloisSymmetry(int frob, int mult);
	int frob_ = 0;
	int mult_ = 0;
};

Octonion galois_apply(GaloisSymmetry const &tau, Octonion const &a);

/// "u" for e^0 and "e0".."e6" for the imaginary units.
std::string basis_name(std::size_t coordinate);
std::string to_string(Octonion const &a);

} // namespace octo
