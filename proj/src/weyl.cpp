#include "fedlab/weyl.hpp"

#include <map>

namespace fedlab {

PoissonMatrix::PoissonMatrix(int dim, Bounds bounds, std::vector<GradedSeries> entries)
    : dim_(dim), bounds_(bounds), entries_(std::move(entries))
{
	if (entries_.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim))
		throw InputError("poisson matrix: wrong entry count");
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j) {
			const GradedSeries &e = at(i, j);
			if (!y_free(e) || !form_free(e))
				throw InputError("poisson matrix: entries must be x-jets");
			if (!(add(e, at(j, i)).is_zero()))
				throw InputError("poisson matrix: not antisymmetric");
		}
}

//------------------------------ moyal product ----------------------------

namespace {

// d^mu_y applied to the cached base element, filling the cache on demand.
const GradedSeries &y_derivative(std::map<MultiIndex, GradedSeries> &cache,
                                 const MultiIndex &mu)
{
	auto it = cache.find(mu);
	if (it != cache.end())
		return it->second;
	for (int i = 0; i < kMaxDim; ++i) {
		if (mu[i] == 0)
			continue;
		const GradedSeries &prev = y_derivative(cache, mu.bumped(i, -1));
		return cache.emplace(mu, partial_y(prev, i)).first->second;
	}
	throw InternalError("y_derivative: empty multi-index missing from cache");
}

} // namespace

GradedSeries moyal_mul(const GradedSeries &a, const GradedSeries &b, const PoissonMatrix &pi)
{
	if (a.dim() != b.dim() || a.dim() != pi.dim())
		throw InputError("moyal_mul: dimension mismatch");
	const int dim = a.dim();
	Bounds bd = meet(a.bounds(), b.bounds());
	GradedSeries out = mul(a, b); // k = 0 term

	int kmax = std::min({max_y_degree(a), max_y_degree(b), bd.hbar_order});

	// contraction[(mu,nu)] = sum over ordered index tuples with multisets
	// (mu,nu) of pi^{i1 j1}...pi^{ik jk}, carried as x-jets
	std::map<std::pair<MultiIndex, MultiIndex>, GradedSeries> contraction;
	contraction.emplace(std::make_pair(MultiIndex{}, MultiIndex{}),
	                    GradedSeries::constant(dim, bd, Scalar(1)));

	std::map<MultiIndex, GradedSeries> da, db;
	da.emplace(MultiIndex{}, a);
	db.emplace(MultiIndex{}, b);

	Scalar factor(1);
	for (int k = 1; k <= kmax; ++k) {
		std::map<std::pair<MultiIndex, MultiIndex>, GradedSeries> next;
		for (const auto &[key, jet] : contraction) {
			for (int i = 0; i < dim; ++i)
				for (int j = 0; j < dim; ++j) {
					const GradedSeries &p = pi.at(i, j);
					if (p.is_zero())
						continue;
					// keep the working bounds: pi entries are x-jets and may
					// carry narrower degree tags than the product needs
					GradedSeries prod = truncate(mul(jet, p), bd);
					if (prod.is_zero())
						continue;
					auto nk = std::make_pair(key.first.bumped(i, 1), key.second.bumped(j, 1));
					auto it = next.find(nk);
					if (it == next.end())
						next.emplace(nk, std::move(prod));
					else
						it->second = add(it->second, prod);
				}
		}
		contraction = std::move(next);
		if (contraction.empty())
			break;
		// (-i/2)^k / k!
		factor = factor * Scalar(Rational(0), Rational(-1, 2)) / Scalar(Rational(k));
		for (const auto &[key, jet] : contraction) {
			const GradedSeries &dau = y_derivative(da, key.first);
			const GradedSeries &dbv = y_derivative(db, key.second);
			if (dau.is_zero() || dbv.is_zero())
				continue;
			GradedSeries piece = mul(jet, mul(dau, dbv));
			piece = mul_hbar(scale(piece, factor), k);
			out = add(out, piece);
		}
	}
	return truncate(out, bd);
}

GradedSeries moyal_commutator(const GradedSeries &a, const GradedSeries &b,
                              const PoissonMatrix &pi)
{
	Bounds bd = meet(a.bounds(), b.bounds());
	GradedSeries out = GradedSeries::zero(a.dim(), bd);
	for (int pa = 0; pa <= 1; ++pa)
		for (int pb = 0; pb <= 1; ++pb) {
			GradedSeries ap = GradedSeries::zero(a.dim(), a.bounds());
			GradedSeries bp = GradedSeries::zero(b.dim(), b.bounds());
			for (const auto &[k, c] : a.terms())
				if ((k.form_degree() & 1) == pa)
					ap.add_term(k, c);
			for (const auto &[k, c] : b.terms())
				if ((k.form_degree() & 1) == pb)
					bp.add_term(k, c);
			if (ap.is_zero() || bp.is_zero())
				continue;
			GradedSeries fwd = moyal_mul(ap, bp, pi);
			GradedSeries rev = moyal_mul(bp, ap, pi);
			if ((pa & pb) == 1)
				out = add(out, add(fwd, rev));
			else
				out = add(out, sub(fwd, rev));
		}
	return out;
}

GradedSeries ad_i_over_hbar(const GradedSeries &u, const GradedSeries &a,
                            const PoissonMatrix &pi)
{
	Bounds ambient = meet(u.bounds(), a.bounds());
	Bounds work{ambient.x_order, ambient.total_degree + 2, ambient.hbar_order + 1,
	            ambient.weight_cap > (1 << 19) ? ambient.weight_cap : ambient.weight_cap + 2};
	GradedSeries uw(u.dim(), work), aw(a.dim(), work);
	for (const auto &[k, c] : u.terms())
		uw.add_term(k, c);
	for (const auto &[k, c] : a.terms())
		aw.add_term(k, c);
	GradedSeries br = moyal_commutator(uw, aw, pi);
	GradedSeries res = scale(div_hbar(br), Scalar::i());
	return truncate(res, ambient);
}

bool is_central(const GradedSeries &a) { return y_free(a); }

//------------------------------ delta calculus ---------------------------

GradedSeries delta_op(const GradedSeries &a)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms()) {
		for (int i = 0; i < a.dim(); ++i) {
			int e = k.y[i];
			if (e == 0)
				continue;
			int sign = wedge_insert_sign(k.form, i);
			if (sign == 0)
				continue;
			TermKey kk = k;
			kk.y = k.y.bumped(i, -1);
			kk.form = k.form | (1u << i);
			Scalar c2 = c * Scalar(e);
			out.add_term(kk, sign < 0 ? -c2 : c2);
		}
	}
	return out;
}

GradedSeries delta_inv(const GradedSeries &a)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms()) {
		int p = k.y.degree();
		int q = k.form_degree();
		if (p + q == 0)
			continue;
		Scalar w = c / Scalar(Rational(p + q));
		for (int i = 0; i < a.dim(); ++i) {
			std::uint32_t bit = 1u << i;
			if (!(k.form & bit))
				continue;
			// interior product: (-1)^{position of i in sorted J}
			int pos = __builtin_popcount(k.form & (bit - 1));
			TermKey kk = k;
			kk.y = k.y.bumped(i, 1);
			kk.form = k.form & ~bit;
			out.add_term(kk, (pos & 1) ? -w : w);
		}
	}
	return out;
}

HodgeParts hodge_decompose(const GradedSeries &a)
{
	// delta^{-1} overshoots the degree bound by one before delta pulls it
	// back; lift the bounds for that leg so the decomposition stays exact
	Bounds up = a.bounds();
	up.total_degree += 1;
	if (up.weight_cap < (1 << 19))
		up.weight_cap += 1;
	GradedSeries lifted(a.dim(), up);
	for (const auto &[k, c] : a.terms())
		lifted.add_term(k, c);

	HodgeParts h{truncate(delta_op(delta_inv(lifted)), a.bounds()),
	             delta_inv(delta_op(a)), GradedSeries::zero(a.dim(), a.bounds())};
	for (const auto &[k, c] : a.terms())
		if (k.y.is_zero() && k.form == 0)
			h.constant.add_term(k, c);
	return h;
}

} // namespace fedlab
