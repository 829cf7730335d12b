#pragma once

// Exact linear algebra over the Gaussian rationals.

#include "octo/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace octo {

/// Dense coordinate vector.
class Vector {
public:
	Vector() = default;
	explicit Vector(std::size_t dim) : c_(dim) {}
	explicit Vector(std::vector<Scalar> coords) : c_(std::move(coords)) {}
	static Vector unit(std::size_t dim, std::size_t k);

	std::size_t dim() const { return c_.size(); }
	Scalar &operator[](std::size_t k) { return c_[k]; }
	Scalar const &operator[](std::size_t k) const { return c_[k]; }
	auto begin() const { return c_.begin(); }
	auto end() const { return c_.end(); }
	bool is_zero() const;

	Vector &operator+=(Vector const &b);
	Vector &operator-=(Vector const &b);
	Vector &operator*=(Scalar const &s);
	friend bool operator==(Vector const &, Vector const &) = default;

private:
	std::vector<Scalar> c_;
};

Vector operator+(Vector a, Vector const &b);
Vector operator-(Vector a, Vector const &b);
Vector operator-(Vector a);
Vector operator*(Scalar const &s, Vector a);

/// Dense row-major matrix. Square matrices double as operators.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
	static Matrix identity(std::size_t n);
	static Matrix from_columns(std::span<Vector const> cols);
	static Matrix from_rows(std::span<Vector const> rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }
	/// Side length of a square matrix; throws std::invalid_argument otherwise.
	std::size_t dim() const;

	Scalar &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
	Scalar const &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
	Vector row(std::size_t i) const;
	Vector column(std::size_t j) const;
	/// Row-major flattening.
	Vector flatten() const { return Vector(a_); }
	static Matrix unflatten(Vector const &v, std::size_t rows, std::size_t cols);

	bool is_zero() const;
	Matrix &operator+=(Matrix const &b);
	Matrix &operator-=(Matrix const &b);
	Matrix &operator*=(Scalar const &s);
	friend bool operator==(Matrix const &, Matrix const &) = default;

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Scalar> a_;
};

using Operator = Matrix;

Matrix operator+(Matrix a, Matrix const &b);
Matrix operator-(Matrix a, Matrix const &b);
Matrix operator-(Matrix a);
Matrix operator*(Scalar const &s, Matrix a);
/// Matrix product; throws std::invalid_argument on shape mismatch.
Matrix operator*(Matrix const &a, Matrix const &b);

Vector apply(Matrix const &m, Vector const &v);
Matrix compose(Matrix const &a, Matrix const &b);
/// ab - ba.
Matrix commutator(Matrix const &a, Matrix const &b);
Scalar trace(Matrix const &m);
/// Entrywise complex conjugate.
Matrix conjugate(Matrix const &m);
Matrix transpose(Matrix const &m);

/// Sparse vector keyed by coordinate index; zero entries are never stored.
class SparseVector {
public:
	SparseVector() = default;
	explicit SparseVector(std::size_t dim) : dim_(dim) {}
	static SparseVector from_dense(Vector const &v);

	std::size_t dim() const { return dim_; }
	bool is_zero() const { return e_.empty(); }
	std::size_t nonzeros() const { return e_.size(); }
	Scalar get(std::size_t k) const;
	void set(std::size_t k, Scalar v);
	void add_to(std::size_t k, Scalar const &v);
	/// this += c * other
	void axpy(Scalar const &c, SparseVector const &other);
	void scale(Scalar const &c);
	/// Index of the first nonzero entry; the vector must be nonzero.
	std::size_t leading() const { return e_.begin()->first; }
	std::map<std::size_t, Scalar> const &terms() const { return e_; }
	Vector to_dense() const;

	friend bool operator==(SparseVector const &, SparseVector const &) = default;

private:
	std::size_t dim_ = 0;
	std::map<std::size_t, Scalar> e_;
};

SparseVector operator+(SparseVector a, SparseVector const &b);
SparseVector operator-(SparseVector a, SparseVector const &b);
SparseVector operator*(Scalar const &s, SparseVector a);
SparseVector apply(Matrix const &m, SparseVector const &v);

/// Subspace held as its reduced row-echelon basis: pivot columns strictly
/// increase, every pivot entry is 1 and every pivot column is zero in the
/// other rows. The basis is canonical, so equal subspaces compare equal.
class Subspace {
public:
	explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
	static Subspace full(std::size_t ambient);
	static Subspace span(std::size_t ambient, std::span<Vector const> vectors);
	static Subspace span(std::size_t ambient, std::span<SparseVector const> vectors);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return rows_.size(); }
	std::vector<SparseVector> const &basis() const { return rows_; }
	std::vector<Vector> dense_basis() const;

	/// v minus its component along the pivots; zero iff v lies in the subspace.
	SparseVector reduce(SparseVector v) const;
	/// Adds v to the span. Returns true when the dimension grew.
	bool insert(SparseVector const &v);
	bool insert(Vector const &v) { return insert(SparseVector::from_dense(v)); }

	bool contains(SparseVector const &v) const;
	bool contains(Vector const &v) const { return contains(SparseVector::from_dense(v)); }
	bool contains(Subspace const &s) const;

	friend bool operator==(Subspace const &, Subspace const &) = default;

private:
	void check_dim(std::size_t d) const;
	// residual must be reduced and nonzero
	void insert_reduced(SparseVector residual);

	std::size_t ambient_ = 0;
	std::vector<SparseVector> rows_;
	std::vector<std::size_t> pivots_;
};

bool member(Subspace const &s, Vector const &v);
bool equal_subspace(Subspace const &s, Subspace const &t);
/// Smallest subspace containing both.
Subspace sum(Subspace const &s, Subspace const &t);

struct RowEchelon
{
	Matrix reduced;
	std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Among the candidate rows for a pivot the one
/// with the smallest bit size is chosen.
RowEchelon row_reduce(Matrix m);
std::size_t rank(Matrix const &m);
/// Null space of the map x -> m x (a subspace of dimension m.cols()).
Subspace kernel(Matrix const &m);

/// Intersection of the kernels of ops[k] - eigenvalues[k].
/// Throws std::invalid_argument if the operators do not pairwise commute
/// or the lengths differ.
Subspace simultaneous_eigenspace(std::span<Operator const> ops,
                                 std::span<Scalar const> eigenvalues);

using LinearMap = std::function<SparseVector(SparseVector const &)>;

/// Smallest subspace containing the seeds and stable under every map.
/// Vectors are processed in insertion order, so the result (and the
/// work done) is deterministic.
Subspace closure_under(std::span<LinearMap const> ops,
                       std::span<SparseVector const> seeds, std::size_t ambient);
Subspace closure_under(std::span<Operator const> ops, std::span<Vector const> seeds);

/// Coordinates with respect to a fixed linearly independent family.
class CoordinateSystem {
public:
	CoordinateSystem() = default;
	/// Throws std::invalid_argument if the family is dependent.
	explicit CoordinateSystem(std::vector<Vector> family);

	std::size_t size() const { return family_.size(); }
	std::vector<Vector> const &family() const { return family_; }
	/// Coefficients c with v = sum c_k family[k], or nullopt if v is outside the span.
	std::optional<Vector> solve(Vector const &v) const;
	/// As solve(); throws std::domain_error if v is outside the span.
	Vector coordinates(Vector const &v) const;
	Vector combine(Vector const &coords) const;

private:
	std::vector<Vector> family_;
	Matrix reduced_;   // RREF of the family (rows)
	Matrix transform_; // reduced_ = transform_ * family
	std::vector<std::size_t> pivots_;
};

} // namespace octo
