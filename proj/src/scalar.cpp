#include "octo/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace octo {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im))
{
	re_.canonicalize();
	im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long p, long q)
{
	if (q == 0)
		throw std::domain_error("GaussianRational: zero denominator");
	return GaussianRational(mpq_class(p, q));
}

bool GaussianRational::is_integer() const
{
	return sgn(im_) == 0 && re_.get_den() == 1;
}

long GaussianRational::to_long() const
{
	if (!is_integer() || !re_.get_num().fits_slong_p())
		throw std::domain_error("GaussianRational: not a machine integer: " +
		                        to_string(*this));
	return re_.get_num().get_si();
}

GaussianRational &GaussianRational::operator+=(GaussianRational const &b)
{
	re_ += b.re_;
	if (sgn(b.im_) != 0)
		im_ += b.im_;
	return *this;
}

GaussianRational &GaussianRational::operator-=(GaussianRational const &b)
{
	re_ -= b.re_;
	if (sgn(b.im_) != 0)
		im_ -= b.im_;
	return *this;
}

GaussianRational &GaussianRational::operator*=(GaussianRational const &b)
{
	*this = *this * b;
	return *this;
}

GaussianRational &GaussianRational::operator/=(GaussianRational const &b)
{
	*this = *this / b;
	return *this;
}

std::size_t GaussianRational::size_hint() const
{
	auto bits = [](mpz_class const &z) {
		return sgn(z) == 0 ? std::size_t{0} : mpz_sizeinbase(z.get_mpz_t(), 2);
	};
	return bits(re_.get_num()) + bits(re_.get_den()) + bits(im_.get_num()) +
	       bits(im_.get_den());
}

GaussianRational operator+(GaussianRational a, GaussianRational const &b)
{
	a += b;
	return a;
}

GaussianRational operator-(GaussianRational a, GaussianRational const &b)
{
	a -= b;
	return a;
}

GaussianRational operator*(GaussianRational const &a, GaussianRational const &b)
{
	if (a.is_real() && b.is_real())
		return GaussianRational(a.re() * b.re());
	if (a.is_real())
		return GaussianRational(a.re() * b.re(), a.re() * b.im());
	if (b.is_real())
		return GaussianRational(a.re() * b.re(), a.im() * b.re());
	return GaussianRational(a.re() * b.re() - a.im() * b.im(),
	                        a.re() * b.im() + a.im() * b.re());
}

GaussianRational operator/(GaussianRational const &a, GaussianRational const &b)
{
	if (b.is_zero())
		throw std::domain_error("GaussianRational: division by zero");
	if (b.is_real())
		return GaussianRational(a.re() / b.re(), a.im() / b.re());
	mpq_class norm = b.re() * b.re() + b.im() * b.im();
	return GaussianRational((a.re() * b.re() + a.im() * b.im()) / norm,
	                        (a.im() * b.re() - a.re() * b.im()) / norm);
}

GaussianRational operator-(GaussianRational const &a)
{
	return GaussianRational(-a.re(), -a.im());
}

GaussianRational conjugate(GaussianRational const &a)
{
	return GaussianRational(a.re(), -a.im());
}

std::string to_string(GaussianRational const &a)
{
	auto imag = [](mpq_class const &q) {
		// q*i written as "i", "-i", "3i", "-i/2", "3i/2"
		std::string s = sgn(q) < 0 ? "-" : "";
		mpz_class num = abs(q.get_num());
		if (num != 1)
			s += num.get_str();
		s += "i";
		if (q.get_den() != 1)
			s += "/" + q.get_den().get_str();
		return s;
	};
	if (a.is_real())
		return a.re().get_str();
	if (sgn(a.re()) == 0)
		return imag(a.im());
	std::string im = imag(a.im());
	if (im.front() != '-')
		im = "+" + im;
	return "(" + a.re().get_str() + im + ")";
}

std::ostream &operator<<(std::ostream &os, GaussianRational const &a)
{
	return os << to_string(a);
}

} // namespace octo
