#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace octo {

/// Exact element re + im*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form (reduced, positive
/// denominator), so equality is componentwise.
class GaussianRational {
public:
	GaussianRational() = default;
	GaussianRational(long v) : re_(v) {}
	GaussianRational(mpq_class re, mpq_class im = 0);
	/// p/q + 0i.
	static GaussianRational fraction(long p, long q);
	static GaussianRational i() { return {0, 1}; }

	mpq_class const &re() const { return re_; }
	mpq_class const &im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }
	/// Real with denominator 1.
	bool is_integer() const;
	/// Only meaningful when is_integer(); throws std::domain_error otherwise.
	long to_long() const;

	GaussianRational &operator+=(GaussianRational const &b);
	GaussianRational &operator-=(GaussianRational const &b);
	GaussianRational &operator*=(GaussianRational const &b);
	GaussianRational &operator/=(GaussianRational const &b);

	friend bool operator==(GaussianRational const &a, GaussianRational const &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}

	/// Bit length of numerators and denominators; used to rank pivots.
	std::size_t size_hint() const;

private:
	mpq_class re_;
	mpq_class im_;
};

using Scalar = GaussianRational;

GaussianRational operator+(GaussianRational a, GaussianRational const &b);
GaussianRational operator-(GaussianRational a, GaussianRational const &b);
GaussianRational operator*(GaussianRational const &a, GaussianRational const &b);
/// Throws std::domain_error on division by zero.
GaussianRational operator/(GaussianRational const &a, GaussianRational const &b);
GaussianRational operator-(GaussianRational const &a);

GaussianRational conjugate(GaussianRational const &a);

/// Human-readable form: "0", "-3/2", "i", "-i/2", "(1/2-3i/2)".
std::string to_string(GaussianRational const &a);
std::ostream &operator<<(std::ostream &os, GaussianRational const &a);

} // namespace octo
