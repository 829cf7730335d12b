#pragma once

// Arithmetic in the field with eight elements, F8 = F2[a] / (a^3 + a + 1).

#include <array>
#include <cstdint>
#include <string>

namespace octo {

/// Element of F8 stored as its coefficient triple (c0, c1, c2) in the
/// basis {1, a, a^2}; bit k of `bits()` is c_k.
class F8 {
public:
	constexpr F8() = default;
	static constexpr F8 from_bits(unsigned bits) { return F8(static_cast<std::uint8_t>(bits & 7u)); }
	static constexpr F8 zero() { return F8(0); }
	static constexpr F8 one() { return F8(1); }
	static constexpr F8 alpha() { return F8(2); }
	/// a^k for any integer k (exponents are read modulo 7).
	static F8 alpha_pow(int k);

	constexpr unsigned bits() const { return value_; }
	constexpr bool is_zero() const { return value_ == 0; }

	friend constexpr bool operator==(F8, F8) = default;
	friend constexpr auto operator<=>(F8, F8) = default;

	/// All eight elements in bit order 0, 1, a, 1+a, a^2, ...
	static std::array<F8, 8> all();
	/// The nonzero elements a^0, a^1, ..., a^6.
	static std::array<F8, 7> units();

private:
	constexpr explicit F8(std::uint8_t v) : value_(v) {}
	std::uint8_t value_ = 0;
};

F8 add(F8 x, F8 y);
F8 mul(F8 x, F8 y);
/// Throws std::domain_error for zero to a negative power.
F8 power(F8 x, int k);
F8 inverse(F8 x);

/// x + x^2 + x^4, returned as 0 or 1.
int trace(F8 x);
/// The sign twist of the octonion product: tr(y x^6).
int phi(F8 x, F8 y);

/// x -> x^2.
F8 frobenius(F8 x);
/// x -> a x.
F8 mtwist(F8 x);

/// The unique i in 0..6 with x = a^i. Throws std::domain_error for zero.
int alpha_index(F8 x);

/// "0", "1", "a", "a^2", ..., "a^6".
std::string to_string(F8 x);

inline F8 operator+(F8 x, F8 y) { return add(x, y); }
inline F8 operator*(F8 x, F8 y) { return mul(x, y); }

} // namespace octo
