#include "octo/standard_rep.hpp"
#include "octo/chevalley.hpp"

#include <stdexcept>

namespace octo {

std::array<WeightLabel, 7> weight_labels()
{
	std::array<WeightLabel, 7> r;
	auto s = short_roots();
	for (std::size_t k = 0; k < s.size(); ++k)
		r[k + 1] = WeightLabel::of(s[k]);
	return r;
}

RootVector weight_coordinates(WeightLabel w)
{
	return w.root ? root_coordinates(*w.root) : RootVector{};
}

std::optional<WeightLabel> weight_label_of(RootVector v)
{
	for (auto const &w : weight_labels())
		if (weight_coordinates(w) == v)
			return w;
	return std::nullopt;
}

std::string to_string(WeightLabel const &w) { return w.root ? to_string(*w.root) : "0"; }

Octonion weight_vector(WeightLabel w)
{
	if (!w.root)
		return Octonion::e(0);
	Octonion v = GaussianRational::i() * Octonion::e(1) + Octonion::e(3);
	if (w.root->sign < 0)
		v = complex_conjugate(v);
	for (int k = 0; k < w.root->twist; ++k)
		v = galois_apply(GaloisSymmetry::frobenius(), v);
	return v;
}

std::optional<RootVector> weight_of(Octonion const &v)
{
	if (v.is_zero() || !is_imaginary(v))
		throw std::invalid_argument("weight_of: need a nonzero imaginary octonion");
	std::size_t k = 0;
	while (v.coordinate(k).is_zero())
		++k;
	auto eigenvalue = [&](Operator const &h) -> std::optional<int> {
		Vector hv = apply(h, v.coordinates());
		Scalar lambda = hv[k] / v.coordinate(k);
		if (hv != lambda * v.coordinates() || !lambda.is_integer())
			return std::nullopt;
		return static_cast<int>(lambda.to_long());
	};
	auto [h_beta, h_gamma] = coroots();
	auto m = eigenvalue(h_beta.op);
	auto n = eigenvalue(h_gamma.op);
	if (!m || !n)
		return std::nullopt;
	return RootVector{*m, *n};
}

Matrix restrict_to_V(Operator const &op)
{
	Matrix r(kStandardDim, kStandardDim);
	for (std::size_t i = 0; i < kStandardDim; ++i)
		for (std::size_t j = 0; j < kStandardDim; ++j)
			r(i, j) = op(i + 1, j + 1);
	return r;
}

bool preserves_V(Operator const &op)
{
	for (std::size_t k = 0; k < kOctonionDim; ++k)
		if (!op(0, k).is_zero() || !op(k, 0).is_zero())
			return false;
	return true;
}

Octonion act(RootLabel rho, WeightLabel w)
{
	return Octonion(apply(chevalley_basis().E(rho).op, weight_vector(w).coordinates()));
}

Scalar action_scalar(RootLabel rho, WeightLabel w)
{
	Octonion image = act(rho, w);
	auto target = weight_label_of(weight_coordinates(w) + root_coordinates(rho));
	if (!target)
	{
		if (!image.is_zero())
			throw std::logic_error("action_scalar: nonzero image outside the weights of V");
		return Scalar();
	}
	Octonion tv = weight_vector(*target);
	std::size_t k = 0;
	while (tv.coordinate(k).is_zero())
		++k;
	Scalar s = image.coordinate(k) / tv.coordinate(k);
	if (image != s * tv)
		throw std::logic_error("action_scalar: image not proportional to the weight vector");
	return s;
}

namespace {

RootLabel require_short_target(RootLabel rho, RootLabel psi)
{
	if (!psi.is_short())
		throw std::invalid_argument("sign rule: " + to_string(psi) + " is not short");
	auto target = label_of(root_coordinates(rho) + root_coordinates(psi));
	if (!target || !target->is_short())
		throw std::invalid_argument("sign rule: " + to_string(rho) + " + " + to_string(psi) +
		                            " is not a short root");
	return *target;
}

} // namespace

int expected_sign(RootLabel rho, RootLabel psi)
{
	RootLabel target = require_short_target(rho, psi);
	RootLabel psi1 = frobenius(psi);
	RootLabel minus_psi2 = negate(frobenius(psi1));
	return target == psi1 || target == minus_psi2 ? 1 : -1;
}

int geometric_sign(RootLabel rho, RootLabel psi)
{
	RootLabel target = require_short_target(rho, psi);
	return orientation(root_coordinates(psi), root_coordinates(target));
}

int predicted_scalar(RootLabel rho, WeightLabel w)
{
	if (!w.root)
		return rho.is_short() ? 1 : 0;
	RootVector target = root_coordinates(rho) + root_coordinates(*w.root);
	if (target == RootVector{})
		return -2;
	auto t = label_of(target);
	if (t && t->is_short())
		return expected_sign(rho, *w.root);
	return 0;
}

std::array<std::array<int, 7>, 12> action_table()
{
	std::array<std::array<int, 7>, 12> t{};
	auto const &roots = all_roots();
	auto weights = weight_labels();
	for (std::size_t r = 0; r < roots.size(); ++r)
		for (std::size_t w = 0; w < weights.size(); ++w)
			t[r][w] = static_cast<int>(action_scalar(roots[r], weights[w]).to_long());
	return t;
}

} // namespace octo
