#include "octo/derivations.hpp"

#include <stdexcept>

namespace octo {

namespace {

int mod7(int i) { return ((i % 7) + 7) % 7; }

std::array<Operator, kWedgeDim> const &wedge_basis_images()
{
	static auto const images = [] {
		std::array<Operator, kWedgeDim> r;
		for (std::size_t k = 0; k < kWedgeDim; ++k)
		{
			auto [i, j] = index_pair(k);
			r[k] = D_pair(Octonion::e(i), Octonion::e(j));
		}
		return r;
	}();
	return images;
}

} // namespace

std::size_t pair_index(int i, int j)
{
	if (!(0 <= i && i < j && j < 7))
		throw std::invalid_argument("pair_index: need 0 <= i < j <= 6");
	// pairs (0,1..6), (1,2..6), ...
	return static_cast<std::size_t>(i * 6 - i * (i - 1) / 2 + (j - i - 1));
}

IndexPair index_pair(std::size_t k)
{
	for (int i = 0; i < 7; ++i)
		for (int j = i + 1; j < 7; ++j)
			if (pair_index(i, j) == k)
				return {i, j};
	throw std::out_of_range("index_pair: out of range");
}

// --- Wedge2 -----------------------------------------------------------------

Wedge2::Wedge2(Vector v) : c_(std::move(v))
{
	if (c_.dim() != kWedgeDim)
		throw std::invalid_argument("Wedge2: need 21 coordinates");
}

Wedge2 Wedge2::basis(int i, int j)
{
	i = mod7(i);
	j = mod7(j);
	Wedge2 w;
	if (i < j)
		w.c_[pair_index(i, j)] = 1;
	else if (j < i)
		w.c_[pair_index(j, i)] = -1;
	return w;
}

Wedge2 &Wedge2::operator+=(Wedge2 const &b)
{
	c_ += b.c_;
	return *this;
}

Wedge2 &Wedge2::operator-=(Wedge2 const &b)
{
	c_ -= b.c_;
	return *this;
}

Wedge2 &Wedge2::operator*=(Scalar const &s)
{
	c_ *= s;
	return *this;
}

Wedge2 operator+(Wedge2 a, Wedge2 const &b) { return a += b; }
Wedge2 operator-(Wedge2 a, Wedge2 const &b) { return a -= b; }
Wedge2 operator*(Scalar const &s, Wedge2 a) { return a *= s; }

Wedge2 wedge(Octonion const &a, Octonion const &b)
{
	if (!is_imaginary(a) || !is_imaginary(b))
		throw std::invalid_argument("wedge: arguments must be imaginary");
	Vector v(kWedgeDim);
	for (int i = 0; i < 7; ++i)
		for (int j = i + 1; j < 7; ++j)
			v[pair_index(i, j)] = a.coordinate(1 + i) * b.coordinate(1 + j) -
			                      a.coordinate(1 + j) * b.coordinate(1 + i);
	return Wedge2(std::move(v));
}

Wedge2 galois_apply(GaloisSymmetry const &tau, Wedge2 const &w)
{
	Wedge2 r;
	for (std::size_t k = 0; k < kWedgeDim; ++k)
	{
		Scalar const &c = w.coordinates()[k];
		if (c.is_zero())
			continue;
		auto [i, j] = index_pair(k);
		r += c * Wedge2::basis(tau.apply_index(i), tau.apply_index(j));
	}
	return r;
}

std::string to_string(Wedge2 const &w)
{
	std::string s;
	for (std::size_t k = 0; k < kWedgeDim; ++k)
	{
		Scalar const &c = w.coordinates()[k];
		if (c.is_zero())
			continue;
		auto [i, j] = index_pair(k);
		std::string name = "e" + std::to_string(i) + "^e" + std::to_string(j);
		std::string term = c == Scalar(1)    ? name
		                   : c == Scalar(-1) ? "-" + name
		                                     : to_string(c) + "*" + name;
		if (s.empty())
			s = term;
		else if (term.front() == '-')
			s += " - " + term.substr(1);
		else
			s += " + " + term;
	}
	return s.empty() ? "0" : s;
}

// --- D and friends ----------------------------------------------------------

Operator D_pair(Octonion const &a, Octonion const &b)
{
	Operator m = commutator(ad_operator(a), ad_operator(b)) + ad_operator(commutator(a, b));
	return GaussianRational::fraction(1, 4) * std::move(m);
}

Operator D_wedge(Wedge2 const &w)
{
	auto const &images = wedge_basis_images();
	Operator m(kOctonionDim, kOctonionDim);
	for (std::size_t k = 0; k < kWedgeDim; ++k)
		if (!w.coordinates()[k].is_zero())
			m += w.coordinates()[k] * images[k];
	return m;
}

Matrix d_matrix()
{
	std::vector<Vector> cols;
	for (auto const &op : wedge_basis_images())
		cols.push_back(op.flatten());
	return Matrix::from_columns(cols);
}

Octonion closed_form_derivation(F8 x, F8 y, F8 z)
{
	if (x.is_zero() || y.is_zero() || x == y)
		throw std::invalid_argument("closed_form_derivation: need distinct nonzero x, y");
	if (z == x)
		return Scalar(2) * Octonion::basis(y);
	if (z == y)
		return Scalar(-2) * Octonion::basis(x);
	if (z.is_zero() || z == x + y)
		return Octonion();
	return -((Octonion::basis(x) * Octonion::basis(y)) * Octonion::basis(z));
}

Operator R_pair(Octonion const &a, Octonion const &b)
{
	return commutator(ad_operator(a), ad_operator(b)) - ad_operator(commutator(a, b));
}

Operator associator_operator(Octonion const &a, Octonion const &b)
{
	Operator m(kOctonionDim, kOctonionDim);
	for (std::size_t j = 0; j < kOctonionDim; ++j)
	{
		Octonion image = associator(a, b, Octonion::basis(field_element_of(j)));
		for (std::size_t i = 0; i < kOctonionDim; ++i)
			m(i, j) = image.coordinate(i);
	}
	return m;
}

Octonion leibniz_defect(Operator const &op, Octonion const &a, Octonion const &b)
{
	auto act = [&op](Octonion const &c) { return Octonion(apply(op, c.coordinates())); };
	return act(a) * b + a * act(b) - act(a * b);
}

bool is_derivation(Operator const &op)
{
	for (auto z : F8::all())
		for (auto w : F8::all())
			if (!leibniz_defect(op, Octonion::basis(z), Octonion::basis(w)).is_zero())
				return false;
	return true;
}

Wedge2 delta()
{
	return Wedge2::basis(1, 3) + Wedge2::basis(2, 6) + Wedge2::basis(4, 5);
}

std::array<Wedge2, 7> delta_orbit()
{
	std::array<Wedge2, 7> r;
	GaloisSymmetry tau;
	for (auto &w : r)
	{
		w = galois_apply(tau, delta());
		tau = GaloisSymmetry::multiplier().compose(tau);
	}
	return r;
}

Subspace kernel_of_D() { return kernel(d_matrix()); }

std::array<std::vector<IndexPair>, 7> b_partition()
{
	auto normalize = [](int i, int j) { return i < j ? IndexPair{i, j} : IndexPair{j, i}; };
	std::vector<IndexPair> b0;
	auto fr = GaloisSymmetry::frobenius();
	IndexPair p{1, 3};
	for (int k = 0; k < 3; ++k)
	{
		b0.push_back(p);
		p = normalize(fr.apply_index(p.first), fr.apply_index(p.second));
	}
	std::array<std::vector<IndexPair>, 7> r;
	for (int k = 0; k < 7; ++k)
		for (auto [i, j] : b0)
			r[k].push_back(normalize(mod7(i + k), mod7(j + k)));
	return r;
}

// --- the Lie algebra g ------------------------------------------------------

DerivationAlgebra const &DerivationAlgebra::instance()
{
	static DerivationAlgebra const g;
	return g;
}

DerivationAlgebra::DerivationAlgebra()
{
	auto const &images = wedge_basis_images();
	Subspace span(kOctonionDim * kOctonionDim);
	std::vector<Vector> flat;
	for (std::size_t k = 0; k < kWedgeDim; ++k)
	{
		if (span.insert(images[k].flatten()))
		{
			basis_.push_back(images[k]);
			pairs_.push_back(index_pair(k));
			flat.push_back(images[k].flatten());
		}
	}
	coords_ = CoordinateSystem(std::move(flat));
}

std::optional<Vector> DerivationAlgebra::try_coordinates(Operator const &op) const
{
	if (op.rows() != kOctonionDim || op.cols() != kOctonionDim)
		throw std::invalid_argument("DerivationAlgebra: need an 8 x 8 operator");
	return coords_.solve(op.flatten());
}

Vector DerivationAlgebra::coordinates(Operator const &op) const
{
	auto c = try_coordinates(op);
	if (!c)
		throw std::domain_error("DerivationAlgebra: operator is not in g");
	return *c;
}

GElement DerivationAlgebra::element(Operator op) const
{
	Vector c = coordinates(op);
	return {std::move(op), std::move(c)};
}

GElement DerivationAlgebra::from_coordinates(Vector const &coords) const
{
	return {Matrix::unflatten(coords_.combine(coords), kOctonionDim, kOctonionDim), coords};
}

GElement DerivationAlgebra::basis_element(std::size_t k) const
{
	return {basis_.at(k), Vector::unit(dim(), k)};
}

GElement DerivationAlgebra::bracket(GElement const &x, GElement const &y) const
{
	return element(commutator(x.op, y.op));
}

Matrix DerivationAlgebra::ad(GElement const &x) const
{
	Matrix m(dim(), dim());
	for (std::size_t k = 0; k < dim(); ++k)
	{
		Vector c = coordinates(commutator(x.op, basis_[k]));
		for (std::size_t i = 0; i < dim(); ++i)
			m(i, k) = c[i];
	}
	return m;
}

Scalar DerivationAlgebra::killing_form(GElement const &x, GElement const &y) const
{
	return trace(ad(x) * ad(y));
}

Operator symmetry_conjugate(GaloisSymmetry const &tau, Operator const &x)
{
	return tau.matrix() * x * tau.inverse().matrix();
}

GElement symmetry_conjugate(GaloisSymmetry const &tau, GElement const &x)
{
	return DerivationAlgebra::instance().element(symmetry_conjugate(tau, x.op));
}

} // namespace octo
