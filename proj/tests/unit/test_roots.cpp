#include "octo/roots.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace octo;

namespace {

RootLabel L(RootBase b, int twist, int sign = 1) { return {b, twist, sign}; }

constexpr auto B = RootBase::beta;
constexpr auto G = RootBase::gamma;

} // namespace

TEST_CASE("root coordinates")
{
	CHECK(root_coordinates(L(B, 0)) == RootVector{2, -1});
	CHECK(root_coordinates(L(G, 0)) == RootVector{-3, 2});
	CHECK(root_coordinates(L(B, 1)) == RootVector{-1, 1});
	CHECK(root_coordinates(L(B, 2)) == RootVector{-1, 0});
	CHECK(root_coordinates(L(G, 1)) == RootVector{0, -1});
	CHECK(root_coordinates(L(G, 2)) == RootVector{3, -1});
	CHECK(root_coordinates(L(G, 1, -1)) == RootVector{0, 1});
	CHECK(root_coordinates(L(G, 1, -1)) == mu2());
	CHECK(root_coordinates(L(B, 2, -1)) == mu1());
	auto c = cartan_matrix();
	CHECK(c[0] == std::array<int, 2>{2, -1});
	CHECK(c[1] == std::array<int, 2>{-3, 2});
}

TEST_CASE("twelve distinct roots closed under negation and rotation")
{
	std::set<RootVector> seen;
	for (RootLabel r : all_roots())
	{
		RootVector v = root_coordinates(r);
		seen.insert(v);
		CHECK(label_of(v) == r);
		CHECK(root_coordinates(negate(r)) == -v);
		CHECK(root_coordinates(frobenius(r)) == rotate(v));
		CHECK(frobenius(frobenius(frobenius(r))) == r);
		CHECK(inner_product(v, v) == (r.is_short() ? 2 : 6));
		CHECK(is_positive(r) != is_positive(negate(r)));
		auto [p, q] = simple_root_coordinates(v);
		CHECK(p * RootVector{2, -1} + q * RootVector{-3, 2} == v);
		CHECK(((p >= 0 && q >= 0) || (p <= 0 && q <= 0)));
		CHECK(is_positive(r) == (p + q > 0));
	}
	CHECK(seen.size() == 12);
	CHECK_FALSE(is_root(RootVector{1, 1}));
	CHECK_FALSE(is_root(RootVector{0, 0}));
	CHECK(short_roots().size() == 6);
}

TEST_CASE("every long root is a difference psi - psi' of short roots")
{
	for (RootLabel r : all_roots())
	{
		if (r.is_short())
			continue;
		int count = 0;
		for (RootLabel s : short_roots())
			if (root_coordinates(s) - root_coordinates(frobenius(s)) == root_coordinates(r))
				++count;
		CHECK(count == 1);
	}
}

TEST_CASE("Weyl-invariant form")
{
	// Cartan integers 2(a, b)/(b, b) reproduce the Cartan matrix.
	RootVector b = root_coordinates(L(B, 0)), g = root_coordinates(L(G, 0));
	CHECK(2 * inner_product(b, g) / inner_product(g, g) == -1);
	CHECK(2 * inner_product(g, b) / inner_product(b, b) == -3);
	for (RootLabel r : all_roots())
		for (RootLabel s : all_roots())
			CHECK(inner_product(rotate(root_coordinates(r)), rotate(root_coordinates(s))) ==
			      inner_product(root_coordinates(r), root_coordinates(s)));
}

TEST_CASE("orientation")
{
	RootVector b = root_coordinates(L(B, 0)), b1 = root_coordinates(L(B, 1));
	CHECK(orientation(b, b1) == 1);
	CHECK(orientation(b1, b) == -1);
	CHECK(orientation(b, -b) == 0);
	CHECK(orientation(b, 2 * b) == 0);
	for (RootLabel r : all_roots())
		CHECK(orientation(root_coordinates(r), rotate(root_coordinates(r))) == 1);
}

TEST_CASE("labels")
{
	CHECK(to_string(L(B, 0)) == "beta");
	CHECK(to_string(L(G, 2, -1)) == "-gamma''");
	for (RootLabel r : all_roots())
		CHECK(parse_root_label(to_string(r)) == r);
	CHECK_FALSE(parse_root_label("delta").has_value());
	CHECK_FALSE(parse_root_label("beta'''").has_value());
}
