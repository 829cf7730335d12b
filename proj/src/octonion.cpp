#include "octo/octonion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace octo {

std::size_t coordinate_of(F8 x)
{
	return x.is_zero() ? 0 : 1 + static_cast<std::size_t>(alpha_index(x));
}

F8 field_element_of(std::size_t coordinate)
{
	if (coordinate >= kOctonionDim)
		throw std::out_of_range("octonion coordinate out of range");
	return coordinate == 0 ? F8::zero() : F8::alpha_pow(static_cast<int>(coordinate) - 1);
}

Octonion::Octonion(Vector v) : c_(std::move(v))
{
	if (c_.dim() != kOctonionDim)
		throw std::invalid_argument("Octonion: need 8 coordinates");
}

Octonion Octonion::basis(F8 x)
{
	Octonion o;
	o.c_[coordinate_of(x)] = 1;
	return o;
}

Octonion &Octonion::operator+=(Octonion const &b)
{
	c_ += b.c_;
	return *this;
}

Octonion &Octonion::operator-=(Octonion const &b)
{
	c_ -= b.c_;
	return *this;
}

Octonion &Octonion::operator*=(Scalar const &s)
{
	c_ *= s;
	return *this;
}

Octonion operator+(Octonion a, Octonion const &b) { return a += b; }
Octonion operator-(Octonion a, Octonion const &b) { return a -= b; }
Octonion operator-(Octonion a) { return a *= Scalar(-1); }
Octonion operator*(Scalar const &s, Octonion a) { return a *= s; }

SignedIndex basis_product(F8 x, F8 y)
{
	return {phi(x, y) ? -1 : 1, add(x, y)};
}

Octonion multiply(Octonion const &a, Octonion const &b)
{
	Vector r(kOctonionDim);
	for (std::size_t i = 0; i < kOctonionDim; ++i)
	{
		if (a.coordinate(i).is_zero())
			continue;
		for (std::size_t j = 0; j < kOctonionDim; ++j)
		{
			if (b.coordinate(j).is_zero())
				continue;
			auto [sign, z] = basis_product(field_element_of(i), field_element_of(j));
			Scalar c = a.coordinate(i) * b.coordinate(j);
			if (sign < 0)
				r[coordinate_of(z)] -= c;
			else
				r[coordinate_of(z)] += c;
		}
	}
	return Octonion(std::move(r));
}

Octonion commutator(Octonion const &a, Octonion const &b) { return a * b - b * a; }

Octonion associator(Octonion const &a, Octonion const &b, Octonion const &c)
{
	return (a * b) * c - a * (b * c);
}

namespace {

template <class F>
Operator matrix_of(F f)
{
	Operator m(kOctonionDim, kOctonionDim);
	for (std::size_t j = 0; j < kOctonionDim; ++j)
	{
		Octonion image = f(Octonion::basis(field_element_of(j)));
		for (std::size_t i = 0; i < kOctonionDim; ++i)
			m(i, j) = image.coordinate(i);
	}
	return m;
}

} // namespace

Operator ad_operator(Octonion const &a)
{
	return matrix_of([&a](Octonion const &b) { return commutator(a, b); });
}

Operator left_multiplication(Octonion const &a)
{
	return matrix_of([&a](Octonion const &b) { return a * b; });
}

Octonion complex_conjugate(Octonion const &a)
{
	Vector v(kOctonionDim);
	for (std::size_t k = 0; k < kOctonionDim; ++k)
		v[k] = conjugate(a.coordinate(k));
	return Octonion(std::move(v));
}

Octonion imaginary_part(Octonion const &a)
{
	Vector v = a.coordinates();
	v[0] = 0;
	return Octonion(std::move(v));
}

bool is_imaginary(Octonion const &a) { return a.coordinate(0).is_zero(); }

Scalar norm(Octonion const &a)
{
	Scalar n;
	for (auto const &c : a.coordinates())
		n += c * c;
	return n;
}

// --- GaloisSymmetry ---------------------------------------------------------

GaloisSymmetry::GaloisSymmetry(int frob, int mult)
    : frob_(((frob % 3) + 3) % 3), mult_(((mult % 7) + 7) % 7)
{
}

F8 GaloisSymmetry::apply(F8 x) const
{
	for (int k = 0; k < frob_; ++k)
		x = octo::frobenius(x);
	return mul(F8::alpha_pow(mult_), x);
}

int GaloisSymmetry::apply_index(int i) const
{
	return alpha_index(apply(F8::alpha_pow(i)));
}

GaloisSymmetry GaloisSymmetry::compose(GaloisSymmetry const &other) const
{
	// a^m1 (a^m2 x^(2^f2))^(2^f1) = a^(m1 + m2 2^f1) x^(2^(f1+f2))
	return GaloisSymmetry(frob_ + other.frob_, mult_ + other.mult_ * (1 << frob_));
}

GaloisSymmetry GaloisSymmetry::inverse() const
{
	int f = (3 - frob_) % 3;
	return GaloisSymmetry(f, -mult_ * (1 << f));
}

Operator GaloisSymmetry::matrix() const
{
	Operator m(kOctonionDim, kOctonionDim);
	for (auto x : F8::all())
		m(coordinate_of(apply(x)), coordinate_of(x)) = 1;
	return m;
}

std::vector<GaloisSymmetry> GaloisSymmetry::group()
{
	std::set<GaloisSymmetry> seen{identity()};
	std::vector<GaloisSymmetry> order{identity()};
	for (std::size_t k = 0; k < order.size(); ++k)
		for (auto g : {frobenius(), multiplier()})
		{
			auto h = g.compose(order[k]);
			if (seen.insert(h).second)
				order.push_back(h);
		}
	return order;
}

std::string GaloisSymmetry::name() const
{
	if (frob_ == 0 && mult_ == 0)
		return "id";
	std::string s;
	if (mult_ != 0)
		s += mult_ == 1 ? "M" : "M^" + std::to_string(mult_);
	if (frob_ != 0)
	{
		if (!s.empty())
			s += " ";
		s += frob_ == 1 ? "Fr" : "Fr^2";
	}
	return s;
}

Octonion galois_apply(GaloisSymmetry const &tau, Octonion const &a)
{
	Vector v(kOctonionDim);
	for (std::size_t k = 0; k < kOctonionDim; ++k)
		v[coordinate_of(tau.apply(field_element_of(k)))] = a.coordinate(k);
	return Octonion(std::move(v));
}

std::string basis_name(std::size_t coordinate)
{
	return coordinate == 0 ? "u" : "e" + std::to_string(coordinate - 1);
}

std::string to_string(Octonion const &a)
{
	std::string s;
	for (std::size_t k = 0; k < kOctonionDim; ++k)
	{
		Scalar const &c = a.coordinate(k);
		if (c.is_zero())
			continue;
		std::string term;
		if (c == Scalar(1))
			term = basis_name(k);
		else if (c == Scalar(-1))
			term = "-" + basis_name(k);
		else
			term = to_string(c) + "*" + basis_name(k);
		if (s.empty())
			s = term;
		else if (term.front() == '-')
			s += " - " + term.substr(1);
		else
			s += " + " + term;
	}
	return s.empty() ? "0" : s;
}

} // namespace octo
