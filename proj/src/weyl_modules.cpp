#include "octo/weyl_modules.hpp"
#include "octo/chevalley.hpp"
#include "octo/standard_rep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace octo {

namespace {

std::vector<int> decode(std::size_t index, int degree)
{
	std::vector<int> d(degree);
	for (int p = degree - 1; p >= 0; --p)
	{
		d[p] = static_cast<int>(index % kStandardDim);
		index /= kStandardDim;
	}
	return d;
}

std::size_t encode(std::vector<int> const &d)
{
	std::size_t index = 0;
	for (int x : d)
		index = index * kStandardDim + static_cast<std::size_t>(x);
	return index;
}

long factorial(int n)
{
	long r = 1;
	for (int k = 2; k <= n; ++k)
		r *= k;
	return r;
}

long arrangement_count(std::vector<int> vals)
{
	std::sort(vals.begin(), vals.end());
	long r = factorial(static_cast<int>(vals.size()));
	for (std::size_t i = 0; i < vals.size();)
	{
		std::size_t j = i;
		while (j < vals.size() && vals[j] == vals[i])
			++j;
		r /= factorial(static_cast<int>(j - i));
		i = j;
	}
	return r;
}

// Calls f once for every distinct rearrangement of the digits at `positions`.
template <class F>
void for_each_arrangement(std::vector<int> digits, std::vector<int> const &positions, F &&f)
{
	std::vector<int> vals;
	for (int p : positions)
		vals.push_back(digits[p]);
	std::sort(vals.begin(), vals.end());
	do
	{
		for (std::size_t k = 0; k < positions.size(); ++k)
			digits[positions[k]] = vals[k];
		f(digits);
	} while (std::next_permutation(vals.begin(), vals.end()));
}

TensorVector scaled(Scalar const &s, TensorVector t)
{
	t.data.scale(s);
	return t;
}

TensorVector plus(TensorVector a, TensorVector const &b)
{
	a.data.axpy(Scalar(1), b.data);
	return a;
}

Vector on_V(Octonion const &v)
{
	Vector r(kStandardDim);
	for (std::size_t k = 0; k < kStandardDim; ++k)
		r[k] = v.coordinate(k + 1);
	return r;
}

std::vector<Matrix> positive_root_operators()
{
	auto const &cb = chevalley_basis();
	std::vector<Matrix> r;
	for (auto rho : all_roots())
		if (is_positive(rho))
			r.push_back(restrict_to_V(cb.E(rho).op));
	return r;
}

} // namespace

CellPositions cell_positions(TwoRowShape shape, FactorOrder order)
{
	CellPositions c;
	if (order == FactorOrder::column_major)
	{
		for (int j = 0; j < shape.b; ++j)
		{
			c.row1.push_back(2 * j);
			c.row2.push_back(2 * j + 1);
		}
		for (int j = shape.b; j < shape.row1(); ++j)
			c.row1.push_back(shape.b + j);
	}
	else
	{
		for (int j = 0; j < shape.row1(); ++j)
			c.row1.push_back(j);
		for (int j = 0; j < shape.b; ++j)
			c.row2.push_back(shape.row1() + j);
	}
	return c;
}

TwoRowShape TableauFilling::shape() const
{
	if (row2.size() > row1.size())
		throw std::invalid_argument("tableau: second row longer than the first");
	int b = static_cast<int>(row2.size());
	return {static_cast<int>(row1.size()) - b, b};
}

std::size_t tensor_dim(int degree)
{
	std::size_t d = 1;
	for (int k = 0; k < degree; ++k)
		d *= kStandardDim;
	return d;
}

TensorVector pure_tensor(std::span<Vector const> factors)
{
	int n = static_cast<int>(factors.size());
	for (auto const &v : factors)
		if (v.dim() != kStandardDim)
			throw std::invalid_argument("pure_tensor: factors must lie in V (dimension 7)");
	std::map<std::size_t, Scalar> terms{{0, Scalar(1)}};
	for (auto const &v : factors)
	{
		std::map<std::size_t, Scalar> next;
		for (auto const &[idx, c] : terms)
			for (std::size_t k = 0; k < kStandardDim; ++k)
				if (!v[k].is_zero())
					next[idx * kStandardDim + k] += c * v[k];
		terms = std::move(next);
	}
	TensorVector t{n, SparseVector(tensor_dim(n))};
	for (auto const &[idx, c] : terms)
		t.data.set(idx, c);
	return t;
}

TensorVector tensor_embed(TableauFilling const &f, FactorOrder order)
{
	TwoRowShape shape = f.shape();
	CellPositions pos = cell_positions(shape, order);
	std::vector<Vector> factors(shape.degree());
	for (std::size_t j = 0; j < f.row1.size(); ++j)
		factors[pos.row1[j]] = f.row1[j];
	for (std::size_t j = 0; j < f.row2.size(); ++j)
		factors[pos.row2[j]] = f.row2[j];
	return pure_tensor(factors);
}

TensorVector young_project(TensorVector const &t, TwoRowShape shape, FactorOrder order)
{
	int n = shape.degree();
	if (t.degree != n)
		throw std::invalid_argument("young_project: tensor degree " + std::to_string(t.degree) +
		                            " does not match shape degree " + std::to_string(n));
	CellPositions pos = cell_positions(shape, order);
	std::size_t dim = tensor_dim(n);
	Scalar half = GaussianRational::fraction(1, 2);

	SparseVector v = t.data;
	for (int j = 0; j < shape.b; ++j)
	{
		int p = pos.row1[j], q = pos.row2[j];
		SparseVector swapped(dim);
		for (auto const &[idx, c] : v.terms())
		{
			auto d = decode(idx, n);
			std::swap(d[p], d[q]);
			swapped.add_to(encode(d), c);
		}
		v.axpy(Scalar(-1), swapped);
		v.scale(half);
	}

	SparseVector out(dim);
	for (auto const &[idx, c] : v.terms())
	{
		auto d = decode(idx, n);
		std::vector<int> vals1, vals2;
		for (int p : pos.row1)
			vals1.push_back(d[p]);
		for (int p : pos.row2)
			vals2.push_back(d[p]);
		Scalar w = c / Scalar(arrangement_count(vals1) * arrangement_count(vals2));
		for_each_arrangement(d, pos.row1, [&](std::vector<int> const &d1) {
			for_each_arrangement(d1, pos.row2,
			                     [&](std::vector<int> const &d2) { out.add_to(encode(d2), w); });
		});
	}
	return {n, std::move(out)};
}

Scalar projector_eigenvalue(TwoRowShape shape)
{
	long hooks = 1;
	for (int c = 0; c < shape.row1(); ++c)
		hooks *= shape.row1() - c + (c < shape.b ? 1 : 0);
	for (int c = 0; c < shape.b; ++c)
		hooks *= shape.b - c;
	long group = factorial(shape.row1()) * factorial(shape.b) * (1L << shape.b);
	return GaussianRational::fraction(hooks, group);
}

Subspace young_image(TwoRowShape shape, FactorOrder order)
{
	int n = shape.degree();
	std::size_t dim = tensor_dim(n);
	Subspace s(dim);
	for (std::size_t idx = 0; idx < dim; ++idx)
	{
		TensorVector e{n, SparseVector(dim)};
		e.data.set(idx, Scalar(1));
		s.insert(young_project(e, shape, order).data);
	}
	return s;
}

bool exchange_check(TableauFilling const &f)
{
	TwoRowShape shape = f.shape();
	auto project = [&](TableauFilling const &g) { return young_project(tensor_embed(g), shape); };
	TensorVector w = project(f);

	for (int j = 0; j < shape.b; ++j)
	{
		TableauFilling g = f;
		std::swap(g.row1[j], g.row2[j]);
		if (project(g) != scaled(Scalar(-1), w))
			return false;
	}
	for (int j = 0; j < shape.row1(); ++j)
		for (int k = j + 1; k < shape.row1(); ++k)
		{
			if ((j < shape.b) != (k < shape.b))
				continue;
			TableauFilling g = f;
			std::swap(g.row1[j], g.row1[k]);
			if (k < shape.b)
				std::swap(g.row2[j], g.row2[k]);
			if (project(g) != w)
				return false;
		}
	for (int j = 0; j < shape.b; ++j)
		for (int k = j + 1; k < shape.row1(); ++k)
		{
			TableauFilling g1 = f, g2 = f;
			std::swap(g1.row1[k], g1.row1[j]);
			std::swap(g2.row1[k], g2.row2[j]);
			if (plus(project(g1), project(g2)) != w)
				return false;
		}
	return true;
}

std::vector<Matrix> chevalley_operators_on_V()
{
	static std::vector<Matrix> const ops = [] {
		std::vector<Matrix> r;
		for (auto const &x : chevalley_basis().elements)
			r.push_back(restrict_to_V(x.op));
		return r;
	}();
	return ops;
}

TensorVector diagonal_action(Matrix const &x, TensorVector const &t)
{
	if (x.rows() != kStandardDim || x.cols() != kStandardDim)
		throw std::invalid_argument("diagonal_action: need an operator on V");
	std::array<std::vector<std::pair<int, Scalar>>, kStandardDim> column;
	for (std::size_t j = 0; j < kStandardDim; ++j)
		for (std::size_t i = 0; i < kStandardDim; ++i)
			if (!x(i, j).is_zero())
				column[j].emplace_back(static_cast<int>(i), x(i, j));

	TensorVector r{t.degree, SparseVector(t.data.dim())};
	for (auto const &[idx, c] : t.data.terms())
	{
		auto d = decode(idx, t.degree);
		for (int p = 0; p < t.degree; ++p)
		{
			int k = d[p];
			for (auto const &[i, xik] : column[k])
			{
				d[p] = i;
				r.data.add_to(encode(d), c * xik);
			}
			d[p] = k;
		}
	}
	return r;
}

TensorVector diagonal_action(GElement const &x, TensorVector const &t)
{
	return diagonal_action(restrict_to_V(x.op), t);
}

std::optional<RootVector> tensor_weight(TensorVector const &t)
{
	if (t.data.is_zero())
		return std::nullopt;
	auto const &ops = chevalley_operators_on_V();
	std::size_t lead = t.data.leading();
	auto eigenvalue = [&](Matrix const &h) -> std::optional<int> {
		TensorVector ht = diagonal_action(h, t);
		Scalar lambda = ht.data.get(lead) / t.data.get(lead);
		if (ht != scaled(lambda, t) || !lambda.is_integer())
			return std::nullopt;
		return static_cast<int>(lambda.to_long());
	};
	auto m = eigenvalue(ops[0]);
	auto n = eigenvalue(ops[1]);
	if (!m || !n)
		return std::nullopt;
	return RootVector{*m, *n};
}

bool is_highest_weight(TensorVector const &t)
{
	for (auto const &e : positive_root_operators())
		if (!diagonal_action(e, t).data.is_zero())
			return false;
	return true;
}

std::vector<TensorVector> highest_weight_combinations(std::span<TensorVector const> candidates)
{
	if (candidates.empty())
		return {};
	auto ops = positive_root_operators();
	std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> images(candidates.size());
	for (std::size_t k = 0; k < candidates.size(); ++k)
		for (std::size_t r = 0; r < ops.size(); ++r)
		{
			TensorVector image = diagonal_action(ops[r], candidates[k]);
			for (auto const &[idx, c] : image.data.terms())
			{
				auto [it, fresh] = row_of.try_emplace({r, idx}, row_of.size());
				images[k].emplace_back(it->second, c);
			}
		}
	Matrix m(row_of.size(), candidates.size());
	for (std::size_t k = 0; k < candidates.size(); ++k)
		for (auto const &[row, c] : images[k])
			m(row, k) = c;

	std::vector<TensorVector> r;
	Subspace combos = kernel(m);
	for (auto const &coeffs : combos.basis())
	{
		TensorVector t{candidates[0].degree, SparseVector(candidates[0].data.dim())};
		for (auto const &[k, c] : coeffs.terms())
			t.data.axpy(c, candidates[k].data);
		r.push_back(std::move(t));
	}
	return r;
}

TensorVector highest_weight_vector(int a, int b)
{
	if (a < 0 || b < 0)
		throw std::invalid_argument("highest_weight_vector: negative label");
	if (a == 0 && b == 0)
	{
		TensorVector t{0, SparseVector(1)};
		t.data.set(0, Scalar(1));
		return t;
	}
	RootLabel beta1{RootBase::beta, 1, 1};
	RootLabel minus_beta2{RootBase::beta, 2, -1};
	Vector top = on_V(weight_vector(WeightLabel::of(minus_beta2)));
	Vector bottom = on_V(weight_vector(WeightLabel::of(beta1)));
	TableauFilling f{std::vector<Vector>(a + b, top), std::vector<Vector>(b, bottom)};
	return young_project(tensor_embed(f), f.shape());
}

Subspace generated_module(std::span<TensorVector const> seeds)
{
	if (seeds.empty())
		throw std::invalid_argument("generated_module: no seeds");
	int n = seeds[0].degree;
	std::vector<LinearMap> maps;
	for (auto const &x : chevalley_operators_on_V())
		maps.emplace_back([x, n](SparseVector const &v) {
			return diagonal_action(x, TensorVector{n, v}).data;
		});
	std::vector<SparseVector> data;
	for (auto const &s : seeds)
	{
		if (s.degree != n)
			throw std::invalid_argument("generated_module: seeds of different degree");
		data.push_back(s.data);
	}
	return closure_under(maps, data, tensor_dim(n));
}

std::map<RootVector, std::size_t> weight_multiplicities(Subspace const &space, int degree)
{
	std::size_t d = space.dim();
	if (d == 0)
		return {};
	auto const &basis = space.basis();
	auto const &ops = chevalley_operators_on_V();
	auto restricted = [&](Matrix const &h) {
		Matrix m(d, d);
		for (std::size_t k = 0; k < d; ++k)
		{
			TensorVector img = diagonal_action(h, TensorVector{degree, basis[k]});
			for (std::size_t j = 0; j < d; ++j)
				m(j, k) = img.data.get(basis[j].leading());
		}
		return m;
	};
	std::vector<Operator> hs{restricted(ops[0]), restricted(ops[1])};

	std::set<RootVector> candidates{RootVector{}};
	for (int k = 0; k < degree; ++k)
	{
		std::set<RootVector> next;
		for (auto const &c : candidates)
			for (auto const &w : weight_labels())
				next.insert(c + weight_coordinates(w));
		candidates = std::move(next);
	}

	std::map<RootVector, std::size_t> mult;
	std::size_t total = 0;
	for (auto const &c : candidates)
	{
		std::vector<Scalar> values{Scalar(c.m), Scalar(c.n)};
		std::size_t k = simultaneous_eigenspace(hs, values).dim();
		if (k == 0)
			continue;
		mult[c] = k;
		total += k;
		if (total == d)
			break;
	}
	if (total != d)
		throw std::logic_error("weight_multiplicities: subspace is not a sum of weight spaces");
	return mult;
}

IrrepReport generate_irrep(int a, int b, int max_degree, bool weights)
{
	if (a < 0 || b < 0)
		throw std::invalid_argument("generate_irrep: a and b must be non-negative");
	TwoRowShape shape{a, b};
	if (shape.degree() > max_degree)
		throw std::invalid_argument("generate_irrep: degree a + 2b = " +
		                            std::to_string(shape.degree()) + " exceeds the bound " +
		                            std::to_string(max_degree));
	IrrepReport r;
	r.shape = shape;
	TensorVector seed = highest_weight_vector(a, b);
	r.space = generated_module(std::span<TensorVector const>(&seed, 1));
	r.dim = r.space.dim();
	r.weyl = weyl_dimension(a, b);
	if (weights)
		r.multiplicities = weight_multiplicities(r.space, shape.degree());
	Scalar kappa = projector_eigenvalue(shape);
	r.in_image = std::all_of(r.space.basis().begin(), r.space.basis().end(),
	                         [&](SparseVector const &v) {
		                         return young_project({shape.degree(), v}, shape).data ==
		                                kappa * v;
	                         });
	return r;
}

long weyl_dimension(int a, int b)
{
	if (a < 0 || b < 0)
		throw std::invalid_argument("weyl_dimension: a and b must be non-negative");
	long n = static_cast<long>(a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) *
	         (a + 3 * b + 4) * (2 * a + 3 * b + 5);
	return n / 120;
}

long schur_dimension(TwoRowShape shape, int N)
{
	mpz_class num = 1, den = 1;
	for (int c = 0; c < shape.row1(); ++c)
	{
		num *= N + c;
		den *= shape.row1() - c + (c < shape.b ? 1 : 0);
	}
	for (int c = 0; c < shape.b; ++c)
	{
		num *= N + c - 1;
		den *= shape.b - c;
	}
	mpz_class q = num / den;
	return q.get_si();
}

} // namespace octo
