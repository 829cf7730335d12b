#include "octo/linalg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace octo {

namespace {

void require(bool ok, char const *what)
{
	if (!ok)
		throw std::invalid_argument(what);
}

} // namespace

// --- Vector -----------------------------------------------------------------

Vector Vector::unit(std::size_t dim, std::size_t k)
{
	Vector v(dim);
	v[k] = 1;
	return v;
}

bool Vector::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](Scalar const &s) { return s.is_zero(); });
}

Vector &Vector::operator+=(Vector const &b)
{
	require(dim() == b.dim(), "Vector: dimension mismatch");
	for (std::size_t k = 0; k < c_.size(); ++k)
		if (!b.c_[k].is_zero())
			c_[k] += b.c_[k];
	return *this;
}

Vector &Vector::operator-=(Vector const &b)
{
	require(dim() == b.dim(), "Vector: dimension mismatch");
	for (std::size_t k = 0; k < c_.size(); ++k)
		if (!b.c_[k].is_zero())
			c_[k] -= b.c_[k];
	return *this;
}

Vector &Vector::operator*=(Scalar const &s)
{
	for (auto &x : c_)
		if (!x.is_zero())
			x *= s;
	return *this;
}

Vector operator+(Vector a, Vector const &b) { return a += b; }
Vector operator-(Vector a, Vector const &b) { return a -= b; }
Vector operator-(Vector a) { return a *= Scalar(-1); }
Vector operator*(Scalar const &s, Vector a) { return a *= s; }

// --- Matrix -----------------------------------------------------------------

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t k = 0; k < n; ++k)
		m(k, k) = 1;
	return m;
}

Matrix Matrix::from_columns(std::span<Vector const> cols)
{
	require(!cols.empty(), "Matrix: no columns");
	Matrix m(cols[0].dim(), cols.size());
	for (std::size_t j = 0; j < cols.size(); ++j)
	{
		require(cols[j].dim() == m.rows(), "Matrix: ragged columns");
		for (std::size_t i = 0; i < m.rows(); ++i)
			m(i, j) = cols[j][i];
	}
	return m;
}

Matrix Matrix::from_rows(std::span<Vector const> rows)
{
	require(!rows.empty(), "Matrix: no rows");
	Matrix m(rows.size(), rows[0].dim());
	for (std::size_t i = 0; i < rows.size(); ++i)
	{
		require(rows[i].dim() == m.cols(), "Matrix: ragged rows");
		for (std::size_t j = 0; j < m.cols(); ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

std::size_t Matrix::dim() const
{
	require(is_square(), "Matrix: not square");
	return rows_;
}

Vector Matrix::row(std::size_t i) const
{
	return Vector(std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const
{
	Vector v(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		v[i] = (*this)(i, j);
	return v;
}

Matrix Matrix::unflatten(Vector const &v, std::size_t rows, std::size_t cols)
{
	require(v.dim() == rows * cols, "Matrix: flattened size mismatch");
	Matrix m(rows, cols);
	for (std::size_t k = 0; k < v.dim(); ++k)
		m.a_[k] = v[k];
	return m;
}

bool Matrix::is_zero() const
{
	return std::all_of(a_.begin(), a_.end(), [](Scalar const &s) { return s.is_zero(); });
}

Matrix &Matrix::operator+=(Matrix const &b)
{
	require(rows_ == b.rows_ && cols_ == b.cols_, "Matrix: shape mismatch");
	for (std::size_t k = 0; k < a_.size(); ++k)
		if (!b.a_[k].is_zero())
			a_[k] += b.a_[k];
	return *this;
}

Matrix &Matrix::operator-=(Matrix const &b)
{
	require(rows_ == b.rows_ && cols_ == b.cols_, "Matrix: shape mismatch");
	for (std::size_t k = 0; k < a_.size(); ++k)
		if (!b.a_[k].is_zero())
			a_[k] -= b.a_[k];
	return *this;
}

Matrix &Matrix::operator*=(Scalar const &s)
{
	for (auto &x : a_)
		if (!x.is_zero())
			x *= s;
	return *this;
}

Matrix operator+(Matrix a, Matrix const &b) { return a += b; }
Matrix operator-(Matrix a, Matrix const &b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Scalar(-1); }
Matrix operator*(Scalar const &s, Matrix a) { return a *= s; }

Matrix operator*(Matrix const &a, Matrix const &b)
{
	require(a.cols() == b.rows(), "Matrix: product shape mismatch");
	Matrix c(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k)
		{
			auto const &x = a(i, k);
			if (x.is_zero())
				continue;
			for (std::size_t j = 0; j < b.cols(); ++j)
				if (!b(k, j).is_zero())
					c(i, j) += x * b(k, j);
		}
	return c;
}

Vector apply(Matrix const &m, Vector const &v)
{
	require(m.cols() == v.dim(), "apply: dimension mismatch");
	Vector r(m.rows());
	for (std::size_t j = 0; j < m.cols(); ++j)
	{
		if (v[j].is_zero())
			continue;
		for (std::size_t i = 0; i < m.rows(); ++i)
			if (!m(i, j).is_zero())
				r[i] += m(i, j) * v[j];
	}
	return r;
}

Matrix compose(Matrix const &a, Matrix const &b) { return a * b; }

Matrix commutator(Matrix const &a, Matrix const &b)
{
	require(a.is_square() && b.is_square() && a.rows() == b.rows(),
	        "commutator: dimension mismatch");
	return a * b - b * a;
}

Scalar trace(Matrix const &m)
{
	Scalar t;
	for (std::size_t k = 0; k < m.dim(); ++k)
		t += m(k, k);
	return t;
}

Matrix conjugate(Matrix const &m)
{
	Matrix r = m;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			if (!m(i, j).is_real())
				r(i, j) = conjugate(m(i, j));
	return r;
}

Matrix transpose(Matrix const &m)
{
	Matrix r(m.cols(), m.rows());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			r(j, i) = m(i, j);
	return r;
}

// --- SparseVector -----------------------------------------------------------

SparseVector SparseVector::from_dense(Vector const &v)
{
	SparseVector s(v.dim());
	for (std::size_t k = 0; k < v.dim(); ++k)
		if (!v[k].is_zero())
			s.e_.emplace_hint(s.e_.end(), k, v[k]);
	return s;
}

Scalar SparseVector::get(std::size_t k) const
{
	auto it = e_.find(k);
	return it == e_.end() ? Scalar() : it->second;
}

void SparseVector::set(std::size_t k, Scalar v)
{
	require(k < dim_, "SparseVector: index out of range");
	if (v.is_zero())
		e_.erase(k);
	else
		e_[k] = std::move(v);
}

void SparseVector::add_to(std::size_t k, Scalar const &v)
{
	if (v.is_zero())
		return;
	require(k < dim_, "SparseVector: index out of range");
	auto [it, fresh] = e_.try_emplace(k, v);
	if (!fresh)
	{
		it->second += v;
		if (it->second.is_zero())
			e_.erase(it);
	}
}

void SparseVector::axpy(Scalar const &c, SparseVector const &other)
{
	require(dim_ == other.dim_, "SparseVector: dimension mismatch");
	if (c.is_zero())
		return;
	for (auto const &[k, x] : other.e_)
		add_to(k, c * x);
}

void SparseVector::scale(Scalar const &c)
{
	if (c.is_zero())
	{
		e_.clear();
		return;
	}
	for (auto &[k, x] : e_)
		x *= c;
}

Vector SparseVector::to_dense() const
{
	Vector v(dim_);
	for (auto const &[k, x] : e_)
		v[k] = x;
	return v;
}

SparseVector operator+(SparseVector a, SparseVector const &b)
{
	a.axpy(1, b);
	return a;
}

SparseVector operator-(SparseVector a, SparseVector const &b)
{
	a.axpy(-1, b);
	return a;
}

SparseVector operator*(Scalar const &s, SparseVector a)
{
	a.scale(s);
	return a;
}

SparseVector apply(Matrix const &m, SparseVector const &v)
{
	require(m.cols() == v.dim(), "apply: dimension mismatch");
	SparseVector r(m.rows());
	for (auto const &[j, x] : v.terms())
		for (std::size_t i = 0; i < m.rows(); ++i)
			if (!m(i, j).is_zero())
				r.add_to(i, m(i, j) * x);
	return r;
}

// --- Subspace ---------------------------------------------------------------

Subspace Subspace::full(std::size_t ambient)
{
	Subspace s(ambient);
	for (std::size_t k = 0; k < ambient; ++k)
	{
		SparseVector e(ambient);
		e.set(k, 1);
		s.rows_.push_back(std::move(e));
		s.pivots_.push_back(k);
	}
	return s;
}

Subspace Subspace::span(std::size_t ambient, std::span<Vector const> vectors)
{
	Subspace s(ambient);
	for (auto const &v : vectors)
		s.insert(v);
	return s;
}

Subspace Subspace::span(std::size_t ambient, std::span<SparseVector const> vectors)
{
	Subspace s(ambient);
	for (auto const &v : vectors)
		s.insert(v);
	return s;
}

std::vector<Vector> Subspace::dense_basis() const
{
	std::vector<Vector> r;
	r.reserve(rows_.size());
	for (auto const &row : rows_)
		r.push_back(row.to_dense());
	return r;
}

void Subspace::check_dim(std::size_t d) const
{
	if (d != ambient_)
		throw std::invalid_argument("Subspace: ambient dimension " + std::to_string(ambient_) +
		                            ", got vector of dimension " + std::to_string(d));
}

SparseVector Subspace::reduce(SparseVector v) const
{
	check_dim(v.dim());
	// rows are fully reduced, so one pass in pivot order suffices
	for (std::size_t k = 0; k < rows_.size() && !v.is_zero(); ++k)
	{
		Scalar c = v.get(pivots_[k]);
		if (!c.is_zero())
			v.axpy(-c, rows_[k]);
	}
	return v;
}

void Subspace::insert_reduced(SparseVector r)
{
	std::size_t p = r.leading();
	r.scale(Scalar(1) / r.get(p));
	for (auto &row : rows_)
	{
		Scalar c = row.get(p);
		if (!c.is_zero())
			row.axpy(-c, r);
	}
	auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
	pivots_.insert(pivots_.begin() + at, p);
	rows_.insert(rows_.begin() + at, std::move(r));
}

bool Subspace::insert(SparseVector const &v)
{
	SparseVector r = reduce(v);
	if (r.is_zero())
		return false;
	insert_reduced(std::move(r));
	return true;
}

bool Subspace::contains(SparseVector const &v) const { return reduce(v).is_zero(); }

bool Subspace::contains(Subspace const &s) const
{
	check_dim(s.ambient_dim());
	return std::all_of(s.rows_.begin(), s.rows_.end(),
	                   [this](SparseVector const &r) { return contains(r); });
}

bool member(Subspace const &s, Vector const &v) { return s.contains(v); }

bool equal_subspace(Subspace const &s, Subspace const &t)
{
	return s.contains(t) && t.contains(s);
}

Subspace sum(Subspace const &s, Subspace const &t)
{
	Subspace r = s;
	for (auto const &row : t.basis())
		r.insert(row);
	return r;
}

// --- elimination ------------------------------------------------------------

RowEchelon row_reduce(Matrix m)
{
	RowEchelon out;
	std::size_t next = 0;
	for (std::size_t col = 0; col < m.cols() && next < m.rows(); ++col)
	{
		std::size_t best = m.rows();
		std::size_t best_size = 0;
		for (std::size_t r = next; r < m.rows(); ++r)
		{
			if (m(r, col).is_zero())
				continue;
			std::size_t sz = m(r, col).size_hint();
			if (best == m.rows() || sz < best_size)
			{
				best = r;
				best_size = sz;
			}
		}
		if (best == m.rows())
			continue;
		if (best != next)
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m(best, j), m(next, j));

		Scalar inv = Scalar(1) / m(next, col);
		for (std::size_t j = col; j < m.cols(); ++j)
			if (!m(next, j).is_zero())
				m(next, j) *= inv;

		for (std::size_t r = 0; r < m.rows(); ++r)
		{
			if (r == next || m(r, col).is_zero())
				continue;
			Scalar f = m(r, col);
			for (std::size_t j = col; j < m.cols(); ++j)
				if (!m(next, j).is_zero())
					m(r, j) -= f * m(next, j);
		}
		out.pivots.push_back(col);
		++next;
	}
	out.reduced = std::move(m);
	return out;
}

std::size_t rank(Matrix const &m) { return row_reduce(m).pivots.size(); }

Subspace kernel(Matrix const &m)
{
	auto [r, pivots] = row_reduce(m);
	Subspace k(m.cols());
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	for (std::size_t f = 0; f < m.cols(); ++f)
	{
		if (is_pivot[f])
			continue;
		SparseVector x(m.cols());
		x.set(f, 1);
		for (std::size_t row = 0; row < pivots.size(); ++row)
			if (!r(row, f).is_zero())
				x.set(pivots[row], -r(row, f));
		k.insert(x);
	}
	return k;
}

Subspace simultaneous_eigenspace(std::span<Operator const> ops,
                                 std::span<Scalar const> eigenvalues)
{
	require(ops.size() == eigenvalues.size(), "simultaneous_eigenspace: length mismatch");
	require(!ops.empty(), "simultaneous_eigenspace: no operators");
	std::size_t n = ops[0].dim();
	for (std::size_t a = 0; a < ops.size(); ++a)
	{
		require(ops[a].dim() == n, "simultaneous_eigenspace: dimension mismatch");
		for (std::size_t b = a + 1; b < ops.size(); ++b)
			require(commutator(ops[a], ops[b]).is_zero(),
			        "simultaneous_eigenspace: operators do not commute");
	}
	Matrix stacked(n * ops.size(), n);
	for (std::size_t a = 0; a < ops.size(); ++a)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
			{
				Scalar x = ops[a](i, j);
				if (i == j)
					x -= eigenvalues[a];
				stacked(a * n + i, j) = std::move(x);
			}
	return kernel(stacked);
}

Subspace closure_under(std::span<LinearMap const> ops,
                       std::span<SparseVector const> seeds, std::size_t ambient)
{
	Subspace s(ambient);
	std::deque<SparseVector> queue(seeds.begin(), seeds.end());
	while (!queue.empty())
	{
		SparseVector r = s.reduce(std::move(queue.front()));
		queue.pop_front();
		if (r.is_zero())
			continue;
		r.scale(Scalar(1) / r.get(r.leading()));
		s.insert(r);
		for (auto const &op : ops)
		{
			SparseVector image = op(r);
			if (image.dim() != ambient)
				throw std::invalid_argument("closure_under: operator changes dimension");
			if (!image.is_zero())
				queue.push_back(std::move(image));
		}
	}
	return s;
}

Subspace closure_under(std::span<Operator const> ops, std::span<Vector const> seeds)
{
	require(!seeds.empty() || !ops.empty(), "closure_under: cannot infer dimension");
	std::size_t n = seeds.empty() ? ops[0].dim() : seeds[0].dim();
	std::vector<LinearMap> maps;
	for (auto const &op : ops)
	{
		require(op.dim() == n, "closure_under: dimension mismatch");
		maps.emplace_back([&op](SparseVector const &v) { return apply(op, v); });
	}
	std::vector<SparseVector> sparse;
	for (auto const &v : seeds)
	{
		require(v.dim() == n, "closure_under: dimension mismatch");
		sparse.push_back(SparseVector::from_dense(v));
	}
	return closure_under(maps, sparse, n);
}

// --- CoordinateSystem -------------------------------------------------------

CoordinateSystem::CoordinateSystem(std::vector<Vector> family) : family_(std::move(family))
{
	require(!family_.empty(), "CoordinateSystem: empty family");
	std::size_t n = family_[0].dim();
	std::size_t k = family_.size();
	// [family | I] reduced on the first n columns tracks the transform
	Matrix aug(k, n + k);
	for (std::size_t r = 0; r < k; ++r)
	{
		require(family_[r].dim() == n, "CoordinateSystem: ragged family");
		for (std::size_t j = 0; j < n; ++j)
			aug(r, j) = family_[r][j];
		aug(r, n + r) = 1;
	}
	auto [red, pivots] = row_reduce(std::move(aug));
	std::size_t independent =
	    std::count_if(pivots.begin(), pivots.end(), [n](std::size_t p) { return p < n; });
	require(independent == k, "CoordinateSystem: family is linearly dependent");
	pivots_ = pivots;
	reduced_ = Matrix(k, n);
	transform_ = Matrix(k, k);
	for (std::size_t r = 0; r < k; ++r)
	{
		for (std::size_t j = 0; j < n; ++j)
			reduced_(r, j) = red(r, j);
		for (std::size_t j = 0; j < k; ++j)
			transform_(r, j) = red(r, n + j);
	}
}

std::optional<Vector> CoordinateSystem::solve(Vector const &v) const
{
	require(!family_.empty() && v.dim() == family_[0].dim(),
	        "CoordinateSystem: dimension mismatch");
	Vector residual = v;
	Vector c(family_.size());
	for (std::size_t r = 0; r < pivots_.size(); ++r)
	{
		c[r] = v[pivots_[r]];
		if (c[r].is_zero())
			continue;
		for (std::size_t j = 0; j < v.dim(); ++j)
			if (!reduced_(r, j).is_zero())
				residual[j] -= c[r] * reduced_(r, j);
	}
	if (!residual.is_zero())
		return std::nullopt;
	// v = c^T reduced = c^T transform family
	Vector coords(family_.size());
	for (std::size_t r = 0; r < c.dim(); ++r)
		if (!c[r].is_zero())
			for (std::size_t j = 0; j < coords.dim(); ++j)
				if (!transform_(r, j).is_zero())
					coords[j] += c[r] * transform_(r, j);
	return coords;
}

Vector CoordinateSystem::coordinates(Vector const &v) const
{
	auto c = solve(v);
	if (!c)
		throw std::domain_error("CoordinateSystem: vector outside the span");
	return *c;
}

Vector CoordinateSystem::combine(Vector const &coords) const
{
	require(coords.dim() == family_.size(), "CoordinateSystem: coordinate length mismatch");
	Vector v(family_[0].dim());
	for (std::size_t k = 0; k < coords.dim(); ++k)
		if (!coords[k].is_zero())
			v += coords[k] * family_[k];
	return v;
}

} // namespace octo
