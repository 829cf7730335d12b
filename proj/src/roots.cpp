#include "octo/roots.hpp"

namespace octo {

namespace {

// frozen table: index [base][twist] for the positive sign
constexpr RootVector kCoordinates[2][3] = {
    {{2, -1}, {-1, 1}, {-1, 0}}, // beta, beta', beta''
    {{-3, 2}, {0, -1}, {3, -1}}, // gamma, gamma', gamma''
};

} // namespace

std::array<RootLabel, 12> const &all_roots()
{
	static std::array<RootLabel, 12> const roots = [] {
		std::array<RootLabel, 12> r;
		std::size_t k = 0;
		for (auto base : {RootBase::beta, RootBase::gamma})
			for (int sign : {1, -1})
				for (int twist = 0; twist < 3; ++twist)
					r[k++] = RootLabel{base, twist, sign};
		return r;
	}();
	return roots;
}

std::array<RootLabel, 6> short_roots()
{
	std::array<RootLabel, 6> r;
	for (std::size_t k = 0; k < 6; ++k)
		r[k] = all_roots()[k];
	return r;
}

RootLabel frobenius(RootLabel r)
{
	r.twist = (r.twist + 1) % 3;
	return r;
}

RootLabel negate(RootLabel r)
{
	r.sign = -r.sign;
	return r;
}

RootVector root_coordinates(RootLabel r)
{
	RootVector v = kCoordinates[r.base == RootBase::beta ? 0 : 1][r.twist];
	return r.sign * v;
}

std::optional<RootLabel> label_of(RootVector v)
{
	for (auto const &r : all_roots())
		if (root_coordinates(r) == v)
			return r;
	return std::nullopt;
}

bool is_root(RootVector v) { return label_of(v).has_value(); }

std::array<std::array<int, 2>, 2> cartan_matrix()
{
	RootVector b = root_coordinates({RootBase::beta, 0, 1});
	RootVector g = root_coordinates({RootBase::gamma, 0, 1});
	return {{{b.m, b.n}, {g.m, g.n}}};
}

std::pair<int, int> simple_root_coordinates(RootVector v)
{
	// inverse of the Cartan matrix columns: m = 2p - 3q, n = -p + 2q
	return {2 * v.m + 3 * v.n, v.m + 2 * v.n};
}

bool is_positive(RootLabel r)
{
	auto [p, q] = simple_root_coordinates(root_coordinates(r));
	return p >= 0 && q >= 0;
}

RootVector rotate(RootVector v)
{
	auto [p, q] = simple_root_coordinates(v);
	return p * root_coordinates({RootBase::beta, 1, 1}) +
	       q * root_coordinates({RootBase::gamma, 1, 1});
}

int inner_product(RootVector a, RootVector b)
{
	// (beta, beta) = 2, (gamma, gamma) = 6, (beta, gamma) = -3
	auto [p1, q1] = simple_root_coordinates(a);
	auto [p2, q2] = simple_root_coordinates(b);
	return 2 * p1 * p2 - 3 * (p1 * q2 + q1 * p2) + 6 * q1 * q2;
}

int orientation(RootVector a, RootVector b)
{
	// embed beta = (1, 0), gamma = (-3/2, sqrt(3)/2); the cross product
	// is (sqrt(3)/2)(p1 q2 - q1 p2)
	auto [p1, q1] = simple_root_coordinates(a);
	auto [p2, q2] = simple_root_coordinates(b);
	int c = p1 * q2 - q1 * p2;
	return (c > 0) - (c < 0);
}

RootVector mu1() { return -root_coordinates({RootBase::beta, 2, 1}); }
RootVector mu2() { return -root_coordinates({RootBase::gamma, 1, 1}); }

std::string to_string(RootLabel r)
{
	std::string s = r.sign < 0 ? "-" : "";
	s += r.base == RootBase::beta ? "beta" : "gamma";
	s.append(static_cast<std::size_t>(r.twist), '\'');
	return s;
}

std::optional<RootLabel> parse_root_label(std::string const &s)
{
	for (auto const &r : all_roots())
		if (to_string(r) == s)
			return r;
	return std::nullopt;
}

} // namespace octo
