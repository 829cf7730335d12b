#include "octo/chevalley.hpp"
#include "octo/standard_rep.hpp"
#include "octo/weyl_modules.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

using namespace octo;

namespace {

Scalar I() { return GaussianRational::i(); }

Vector unit(std::size_t k) { return Vector::unit(kStandardDim, k); }

Vector on_V(Octonion const &o)
{
	Vector v(kStandardDim);
	for (std::size_t k = 0; k < kStandardDim; ++k)
		v[k] = o.coordinates()[k + 1];
	return v;
}

Vector vw(RootBase b, int twist, int sign) { return on_V(weight_vector(WeightLabel::of({b, twist, sign}))); }

// dim S_(r1, r2)(C^7) from hook lengths and contents.
long hook_content(int r1, int r2)
{
	mpq_class d = 1;
	for (int j = 0; j < r1; ++j)
	{
		int arm = r1 - j - 1, leg = j < r2 ? 1 : 0;
		d *= mpq_class(7 + j, arm + leg + 1);
	}
	for (int j = 0; j < r2; ++j)
		d *= mpq_class(7 + j - 1, r2 - j);
	d.canonicalize();
	REQUIRE(d.get_den() == 1);
	return d.get_num().get_si();
}

TensorVector random_tensor(std::mt19937 &rng, int degree)
{
	std::uniform_int_distribution<std::size_t> idx(0, tensor_dim(degree) - 1);
	std::uniform_int_distribution<long> c(-4, 4);
	TensorVector t{degree, SparseVector(tensor_dim(degree))};
	for (int k = 0; k < 6; ++k)
		t.data.add_to(idx(rng), Scalar(mpq_class(c(rng)), mpq_class(c(rng))));
	return t;
}

TensorVector scaled(Scalar const &s, TensorVector t)
{
	t.data.scale(s);
	return t;
}

} // namespace

TEST_CASE("tensor embedding order")
{
	Vector u = unit(1), w = unit(4) + I() * unit(2), x = unit(6);
	std::vector<Vector> uwx{u, w, x}, uw{u, w};
	CHECK(tensor_embed({{u}, {}}) == pure_tensor(std::vector<Vector>{u}));
	CHECK(tensor_embed({{u}, {w}}) == pure_tensor(uw));
	CHECK(tensor_embed({{u, x}, {w}}) == pure_tensor(uwx));
	CHECK(tensor_embed({{u, x}, {w}}, FactorOrder::row_major) ==
	      pure_tensor(std::vector<Vector>{u, x, w}));
	CHECK_THROWS_AS(tensor_embed({{u}, {w, x}}), std::invalid_argument);

	TensorVector t = pure_tensor(std::vector<Vector>{unit(2), unit(5)});
	CHECK(t.data.get(2 * 7 + 5) == Scalar(1));
	CHECK(t.data.nonzeros() == 1);

	auto pos = cell_positions({1, 2});
	CHECK(pos.row1 == std::vector<int>{0, 2, 4});
	CHECK(pos.row2 == std::vector<int>{1, 3});
}

TEST_CASE("Young projector")
{
	Vector v = unit(3) - I() * unit(0);
	TensorVector t = pure_tensor(std::vector<Vector>{v});
	CHECK(young_project(t, {1, 0}) == t);
	CHECK_THROWS_AS(young_project(t, {0, 1}), std::invalid_argument);

	TensorVector uw = pure_tensor(std::vector<Vector>{unit(1), unit(2)});
	TensorVector wu = pure_tensor(std::vector<Vector>{unit(2), unit(1)});
	CHECK(young_project(uw, {0, 1}) == scaled(Scalar(-1), young_project(wu, {0, 1})));
	CHECK(young_project(uw, {2, 0}) == young_project(wu, {2, 0}));

	std::mt19937 rng(11);
	for (TwoRowShape s : {TwoRowShape{2, 0}, TwoRowShape{0, 1}, TwoRowShape{1, 1}, TwoRowShape{3, 0}})
	{
		TensorVector r = random_tensor(rng, s.degree());
		TensorVector p = young_project(r, s);
		CHECK(young_project(p, s) == scaled(projector_eigenvalue(s), p));
	}
	CHECK(projector_eigenvalue({1, 1}) == GaussianRational::fraction(3, 4));
	CHECK(projector_eigenvalue({2, 0}) == Scalar(1));
}

TEST_CASE("projector image dimensions agree with the hook content oracle")
{
	CHECK(hook_content(1, 1) == 21);
	CHECK(hook_content(2, 0) == 28);
	CHECK(hook_content(2, 1) == 112);
	for (TwoRowShape s : {TwoRowShape{1, 0}, TwoRowShape{0, 1}, TwoRowShape{2, 0}, TwoRowShape{3, 0},
	                      TwoRowShape{1, 1}})
	{
		INFO("shape (" << s.a << ", " << s.b << ")");
		long expected = hook_content(s.row1(), s.row2());
		CHECK(schur_dimension(s) == expected);
		CHECK(static_cast<long>(young_image(s).dim()) == expected);
	}
	CHECK(schur_dimension({0, 2}) == hook_content(2, 2));
	CHECK(schur_dimension({2, 1}) == hook_content(3, 1));
	CHECK(schur_dimension({4, 0}) == hook_content(4, 0));
}

TEST_CASE("factor order does not change the image dimension")
{
	CHECK(young_image({1, 1}, FactorOrder::row_major).dim() == young_image({1, 1}).dim());
	CHECK(young_image({0, 1}, FactorOrder::row_major).dim() == 21);
}

TEST_CASE("exchange conditions")
{
	CHECK(exchange_check({{unit(1)}, {unit(2)}}));
	CHECK(exchange_check({{unit(1), unit(1)}, {unit(2), unit(2)}}));
	CHECK(exchange_check({{unit(0), unit(3)}, {unit(5)}}));
	CHECK(exchange_check({{unit(0) + I() * unit(4), unit(3), unit(6)}, {unit(5)}}));
	CHECK(exchange_check({{unit(1)}, {}}));
}

TEST_CASE("diagonal action")
{
	auto const &ops = chevalley_operators_on_V();
	REQUIRE(ops.size() == kLieDim);
	Vector v = vw(RootBase::beta, 0, 1);
	TensorVector t1 = pure_tensor(std::vector<Vector>{v});
	CHECK(diagonal_action(ops[2], t1).data.to_dense() == apply(ops[2], v));

	Vector u = vw(RootBase::beta, 1, 1);
	TensorVector uv = pure_tensor(std::vector<Vector>{u, v});
	// weights (-1, 1) + (2, -1)
	CHECK(diagonal_action(ops[0], uv) == scaled(Scalar(1), uv));
	CHECK(diagonal_action(ops[1], uv) == scaled(Scalar(0), uv));
	CHECK(tensor_weight(uv) == RootVector{1, 0});
	CHECK(diagonal_action(chevalley_basis().H_beta(), uv) == diagonal_action(ops[0], uv));

	std::mt19937 rng(13);
	TwoRowShape s{1, 1};
	for (int k = 0; k < 5; ++k)
	{
		TensorVector r = random_tensor(rng, 3);
		for (std::size_t x = 0; x < kLieDim; x += 3)
			CHECK(diagonal_action(ops[x], young_project(r, s)) ==
			      young_project(diagonal_action(ops[x], r), s));
	}
}

TEST_CASE("highest weight vectors")
{
	TensorVector w10 = highest_weight_vector(1, 0);
	CHECK(w10.data.to_dense() == vw(RootBase::beta, 2, -1));
	CHECK(tensor_weight(w10) == RootVector{1, 0});
	CHECK(tensor_weight(highest_weight_vector(0, 1)) == RootVector{0, 1});
	for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}})
	{
		TensorVector w = highest_weight_vector(a, b);
		CHECK_FALSE(w.data.is_zero());
		CHECK(tensor_weight(w) == a * mu1() + b * mu2());
		CHECK(is_highest_weight(w));
	}
	TensorVector w11 = highest_weight_vector(1, 1);
	CHECK(diagonal_action(chevalley_basis().E({RootBase::beta, 0, 1}), w11).data.is_zero());
	CHECK_FALSE(is_highest_weight(pure_tensor(std::vector<Vector>{unit(0)})));
	CHECK(highest_weight_vector(0, 0).degree == 0);
	CHECK_THROWS_AS(highest_weight_vector(-1, 0), std::invalid_argument);

	std::vector<TensorVector> cands;
	for (auto w : weight_labels())
		cands.push_back(pure_tensor(std::vector<Vector>{on_V(weight_vector(w))}));
	auto hw = highest_weight_combinations(cands);
	REQUIRE(hw.size() == 1);
	CHECK(tensor_weight(hw[0]) == mu1());
}

TEST_CASE("irreducible modules and the Weyl dimension oracle")
{
	CHECK(weyl_dimension(0, 0) == 1);
	CHECK(weyl_dimension(1, 0) == 7);
	CHECK(weyl_dimension(0, 1) == 14);
	CHECK(weyl_dimension(2, 0) == 27);
	CHECK(weyl_dimension(1, 1) == 64);
	CHECK(weyl_dimension(0, 2) == 77);

	for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}})
	{
		INFO("(" << a << ", " << b << ")");
		IrrepReport r = generate_irrep(a, b);
		CHECK(static_cast<long>(r.dim) == weyl_dimension(a, b));
		CHECK(r.in_image);
		std::size_t total = 0;
		for (auto const &[weight, mult] : r.multiplicities)
		{
			total += mult;
			CHECK(r.multiplicities.count(rotate(weight)) == 1);
			if (r.multiplicities.count(rotate(weight)))
				CHECK(r.multiplicities.at(rotate(weight)) == mult);
			CHECK(r.multiplicities.at(-weight) == mult);
			auto [p, q] = simple_root_coordinates(weight - (a * mu1() + b * mu2()));
			CHECK(p + q <= 0);
		}
		CHECK(total == r.dim);
	}
	IrrepReport adj = generate_irrep(0, 1);
	CHECK(adj.multiplicities.at({0, 0}) == 2);
	CHECK(generate_irrep(1, 0).multiplicities.at({0, 0}) == 1);
}

TEST_CASE("degree bound")
{
	CHECK_THROWS_AS(generate_irrep(1, 2), std::invalid_argument);
	CHECK_THROWS_AS(generate_irrep(-1, 0), std::invalid_argument);
	CHECK_THROWS_WITH(generate_irrep(5, 0), Catch::Matchers::ContainsSubstring("bound 4"));
	CHECK(generate_irrep(3, 0, 3, false).dim == 77);
}

TEST_CASE("the adjoint module splits off the standard module inside wedge^2 V")
{
	IrrepReport adj = generate_irrep(0, 1, kDefaultMaxDegree, false);
	Subspace wedge2 = young_image({0, 1});
	CHECK(wedge2.contains(adj.space));
	std::vector<TensorVector> cands;
	auto add = [&](Vector const &x, Vector const &y) {
		cands.push_back(young_project(pure_tensor(std::vector<Vector>{x, y}), {0, 1}));
	};
	add(unit(0), vw(RootBase::beta, 2, -1));
	add(vw(RootBase::beta, 0, 1), vw(RootBase::beta, 1, 1));
	auto hw = highest_weight_combinations(cands);
	REQUIRE(hw.size() == 1);
	CHECK(tensor_weight(hw[0]) == mu1());
	Subspace comp = generated_module(hw);
	CHECK(comp.dim() == 7);
	CHECK(sum(comp, adj.space).dim() == 21);
}
