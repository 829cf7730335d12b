#include "octo/scalar.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

using namespace octo;

namespace {

using Q = GaussianRational;

Q frac(long p, long q) { return Q::fraction(p, q); }

} // namespace

TEST_CASE("arithmetic examples")
{
	Q i = Q::i();
	CHECK(i * i == Q(-1));
	CHECK(Q(1) / Q(3) == frac(1, 3));
	CHECK(frac(1, 2) * (-i) == Q(0, mpq_class(-1, 2)));
	CHECK(to_string(frac(1, 2) * (-i)) == "-i/2");
	CHECK(conjugate(i) == -i);
	CHECK(conjugate(frac(3, 7)) == frac(3, 7));
	CHECK_THROWS_AS(Q(1) / Q(0), std::domain_error);
}

TEST_CASE("canonical form")
{
	CHECK(frac(2, 4) == frac(1, 2));
	CHECK(frac(3, -6) == frac(-1, 2));
	CHECK(frac(3, -6).re().get_den() == 2);
	CHECK(frac(6, 3).is_integer());
	CHECK(frac(6, 3).to_long() == 2);
	CHECK_FALSE(frac(1, 2).is_integer());
	CHECK_FALSE(Q::i().is_integer());
	CHECK_THROWS_AS(frac(1, 2).to_long(), std::domain_error);
}

TEST_CASE("rendering")
{
	CHECK(to_string(Q()) == "0");
	CHECK(to_string(frac(-3, 2)) == "-3/2");
	CHECK(to_string(Q::i()) == "i");
	CHECK(to_string(Q(mpq_class(1, 2), mpq_class(-3, 2))) == "(1/2-3i/2)");
	std::ostringstream os;
	os << Q(5);
	CHECK(os.str() == "5");
}

TEST_CASE("product agrees with the (ac - bd) + (ad + bc) i oracle")
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
	for (int k = 0; k < 300; ++k)
	{
		mpq_class a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng)),
		    d(num(rng), den(rng));
		a.canonicalize();
		b.canonicalize();
		c.canonicalize();
		d.canonicalize();
		Q x(a, b), y(c, d);
		mpq_class re = a * c - b * d, im = a * d + b * c;
		CHECK(x * y == Q(re, im));
		CHECK(conjugate(conjugate(x)) == x);
		CHECK((x * conjugate(x)).is_real());
		if (!y.is_zero())
		{
			CHECK((x / y) * y == x);
		}
		CHECK(x - y + y == x);
	}
}

TEST_CASE("values with large numerators stay exact")
{
	Q x = frac(1, 3);
	Q p(1);
	for (int k = 0; k < 200; ++k)
		p *= x;
	for (int k = 0; k < 200; ++k)
		p *= Q(3);
	CHECK(p == Q(1));
}
