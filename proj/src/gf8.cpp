#include "octo/gf8.hpp"

#include <stdexcept>

namespace octo {

namespace {

// a^i for i = 0..6, and the inverse table (index by bits, -1 for zero).
struct LogTables
{
	std::array<std::uint8_t, 7> exp{};
	std::array<int, 8> log{};

	LogTables()
	{
		log.fill(-1);
		F8 x = F8::one();
		for (int i = 0; i < 7; ++i)
		{
			exp[i] = static_cast<std::uint8_t>(x.bits());
			log[x.bits()] = i;
			x = mul(x, F8::alpha());
		}
	}
};

LogTables const &tables()
{
	static LogTables const t;
	return t;
}

} // namespace

F8 F8::alpha_pow(int k)
{
	k %= 7;
	if (k < 0)
		k += 7;
	return F8::from_bits(tables().exp[k]);
}

std::array<F8, 8> F8::all()
{
	std::array<F8, 8> r;
	for (unsigned b = 0; b < 8; ++b)
		r[b] = F8::from_bits(b);
	return r;
}

std::array<F8, 7> F8::units()
{
	std::array<F8, 7> r;
	for (int i = 0; i < 7; ++i)
		r[i] = alpha_pow(i);
	return r;
}

F8 add(F8 x, F8 y) { return F8::from_bits(x.bits() ^ y.bits()); }

F8 mul(F8 x, F8 y)
{
	// carry-less product, then reduce a^4 = a^2 + a and a^3 = a + 1
	unsigned p = 0;
	for (int k = 0; k < 3; ++k)
		if (y.bits() >> k & 1u)
			p ^= x.bits() << k;
	if (p & 0b10000u)
		p ^= 0b10110u;
	if (p & 0b01000u)
		p ^= 0b01011u;
	return F8::from_bits(p);
}

F8 inverse(F8 x)
{
	if (x.is_zero())
		throw std::domain_error("F8: zero has no inverse");
	return F8::alpha_pow(-alpha_index(x));
}

F8 power(F8 x, int k)
{
	if (x.is_zero())
	{
		if (k < 0)
			throw std::domain_error("F8: zero raised to a negative power");
		return k == 0 ? F8::one() : F8::zero();
	}
	return F8::alpha_pow(alpha_index(x) * (k % 7));
}

int trace(F8 x)
{
	F8 x2 = mul(x, x);
	F8 x4 = mul(x2, x2);
	F8 t = add(add(x, x2), x4);
	// the trace lands in the prime field
	if (t.bits() > 1)
		throw std::logic_error("F8: trace outside F2");
	return static_cast<int>(t.bits());
}

int phi(F8 x, F8 y) { return trace(mul(y, power(x, 6))); }

F8 frobenius(F8 x) { return mul(x, x); }

F8 mtwist(F8 x) { return mul(F8::alpha(), x); }

int alpha_index(F8 x)
{
	int i = tables().log[x.bits()];
	if (i < 0)
		throw std::domain_error("F8: zero is not a power of a");
	return i;
}

std::string to_string(F8 x)
{
	if (x.is_zero())
		return "0";
	int i = alpha_index(x);
	if (i == 0)
		return "1";
	if (i == 1)
		return "a";
	return "a^" + std::to_string(i);
}

} // namespace octo
