#pragma once

// The map D from the second exterior power of Im(O) to Der(O), and the
// 14-dimensional Lie algebra g = Der(O) (x) C it spans.

#include "octo/linalg.hpp"
#include "octo/octonion.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octo {

inline constexpr std::size_t kWedgeDim = 21;
inline constexpr std::size_t kLieDim = 14;

/// Unordered pair of imaginary indices, stored with first < second.
using IndexPair = std::pair<int, int>;

/// Position of e_i ^ e_j (i < j) in the lexicographic pair order.
std::size_t pair_index(int i, int j);
IndexPair index_pair(std::size_t k);

/// Element of the 21-dimensional space spanned by e_i ^ e_j, i < j.
class Wedge2 {
public:
	Wedge2() : c_(kWedgeDim) {}
	explicit Wedge2(Vector v);
	/// e_i ^ e_j for any i, j in Z/7 (zero when i == j, negated when i > j).
	static Wedge2 basis(int i, int j);

	Scalar const &coefficient(int i, int j) const { return c_[pair_index(i, j)]; }
	Vector const &coordinates() const { return c_; }
	bool is_zero() const { return c_.is_zero(); }

	Wedge2 &operator+=(Wedge2 const &b);
	Wedge2 &operator-=(Wedge2 const &b);
	Wedge2 &operator*=(Scalar const &s);
	friend bool operator==(Wedge2 const &, Wedge2 const &) = default;

private:
	Vector c_;
};

Wedge2 operator+(Wedge2 a, Wedge2 const &b);
Wedge2 operator-(Wedge2 a, Wedge2 const &b);
Wedge2 operator*(Scalar const &s, Wedge2 a);

/// a ^ b for imaginary octonions; throws std::invalid_argument otherwise.
Wedge2 wedge(Octonion const &a, Octonion const &b);
Wedge2 galois_apply(GaloisSymmetry const &tau, Wedge2 const &w);
std::string to_string(Wedge2 const &w);

/// 1/4 ([ad_a, ad_b] + ad_[a,b]).
Operator D_pair(Octonion const &a, Octonion const &b);
Operator D_wedge(Wedge2 const &w);
/// The 64 x 21 matrix of D; column k is the row-major flattening of D(e_i ^ e_j).
Matrix d_matrix();

/// The closed-form value of D(e^x ^ e^y) e^z, computed from the product
/// alone. Throws std::invalid_argument unless x, y are distinct and nonzero.
Octonion closed_form_derivation(F8 x, F8 y, F8 z);

/// [ad_a, ad_b] - ad_[a,b].
Operator R_pair(Octonion const &a, Octonion const &b);
/// c -> [a, b, c].
Operator associator_operator(Octonion const &a, Octonion const &b);

/// op(a) b + a op(b) - op(ab).
Octonion leibniz_defect(Operator const &op, Octonion const &a, Octonion const &b);
/// Leibniz rule on all 64 basis pairs.
bool is_derivation(Operator const &op);

/// e1^e3 + e2^e6 + e4^e5
Wedge2 delta();
/// delta, M delta, ..., M^6 delta
std::array<Wedge2, 7> delta_orbit();
Subspace kernel_of_D();

/// B_0 = Frobenius orbit of {1, 3}; B_k = M^k B_0.
std::array<std::vector<IndexPair>, 7> b_partition();

struct GElement
{
	Operator op;  // 8 x 8 on O (x) C
	Vector coords; // in the canonical basis of g
	friend bool operator==(GElement const &, GElement const &) = default;
};

/// g = span D(B), with the canonical basis given by the first 14 linearly
/// independent D(e_i ^ e_j) in pair order.
class DerivationAlgebra {
public:
	static DerivationAlgebra const &instance();

	std::size_t dim() const { return basis_.size(); }
	std::vector<Operator> const &basis_operators() const { return basis_; }
	std::vector<IndexPair> const &basis_pairs() const { return pairs_; }

	std::optional<Vector> try_coordinates(Operator const &op) const;
	/// Throws std::domain_error if op is not in g.
	Vector coordinates(Operator const &op) const;
	GElement element(Operator op) const;
	GElement from_coordinates(Vector const &coords) const;
	GElement basis_element(std::size_t k) const;

	GElement bracket(GElement const &x, GElement const &y) const;
	/// 14 x 14 matrix of Y -> [X, Y] in coordinates.
	Matrix ad(GElement const &x) const;
	Scalar killing_form(GElement const &x, GElement const &y) const;

private:
	DerivationAlgebra();
	std::vector<Operator> basis_;
	std::vector<IndexPair> pairs_;
	CoordinateSystem coords_;
};

/// tau o X o tau^-1.
Operator symmetry_conjugate(GaloisSymmetry const &tau, Operator const &x);
GElement symmetry_conjugate(GaloisSymmetry const &tau, GElement const &x);

} // namespace octo
