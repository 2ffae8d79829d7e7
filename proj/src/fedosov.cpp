#include "fedlab/fedosov.hpp"

#include <sstream>

namespace fedlab {

CheckResult WeylCurvatureSpec::validate() const
{
	for (const auto &[m, entries] : perturbations) {
		if (m < 1)
			return {false, "perturbation power must be >= 1"};
		std::ostringstream tag;
		tag << "omega_" << m;
		if (entries.size() != static_cast<size_t>(dim) * dim)
			return {false, tag.str() + ": wrong entry count"};
		if (auto c = check_omega_antisymmetric(dim, entries); !c)
			return {false, tag.str() + " not antisymmetric at " + c.witness};
		if (auto c = check_omega_closed(dim, entries); !c)
			return {false, tag.str() + " not closed at " + c.witness};
	}
	return {};
}

GradedSeries two_form_element(int dim, Bounds bounds, const std::vector<GradedSeries> &entries)
{
	GradedSeries out = GradedSeries::zero(dim, bounds);
	for (int k = 0; k < dim; ++k)
		for (int l = k + 1; l < dim; ++l) {
			const GradedSeries &e = entries[static_cast<size_t>(k * dim + l)];
			for (const auto &[key, c] : e.terms()) {
				TermKey t = key;
				t.form = (1u << k) | (1u << l);
				out.add_term(t, c);
			}
		}
	return out;
}

FedosovState solve_gamma(GeometryData geom, WeylCurvatureSpec spec)
{
	if (spec.dim != geom.dim)
		throw InputError("solve_gamma: dimension mismatch");
	if (auto c = spec.validate(); !c)
		throw InputError("solve_gamma: " + c.witness);

	Bounds bd = geom.bounds;
	FedosovState st{std::move(geom), std::move(spec),
	                GradedSeries::zero(1, bd), GradedSeries::zero(1, bd),
	                GradedSeries::zero(1, bd), 0};
	st.omega_element = two_form_element(st.geom.dim, bd, st.geom.omega);

	GradedSeries tilde = st.geom.curvature_element; // Omega - omega = perturbations
	for (const auto &[m, entries] : st.spec.perturbations)
		tilde = add(tilde, mul_hbar(two_form_element(st.geom.dim, bd, entries), m));
	st.omega_tilde = tilde;

	GradedSeries seed = delta_inv(tilde);
	if (auto d = filtration_degree(seed); d && *d < 3)
		throw InputError("solve_gamma: delta^{-1} Omega~ has filtration degree < 3");

	GradedSeries gamma = GradedSeries::zero(st.geom.dim, bd);
	int cap = bd.total_degree + 2;
	for (int it = 0; it <= cap; ++it) {
		GradedSeries corr = covariant_derivative(gamma, st.geom);
		if (!gamma.is_zero())
			corr = add(corr, scale(ad_i_over_hbar(gamma, gamma, st.geom.pi),
			                       Scalar(Rational(1, 2))));
		GradedSeries next = add(seed, delta_inv(corr));
		st.iterations = it + 1;
		if (next == gamma) {
			st.gamma = std::move(next);
			if (!delta_inv(st.gamma).is_zero())
				throw InternalError("solve_gamma: delta^{-1} gamma != 0");
			if (auto d = filtration_degree(st.gamma); d && *d < 3)
				throw InternalError("solve_gamma: filtration degree < 3");
			return st;
		}
		gamma = std::move(next);
	}
	throw InternalError("solve_gamma: no fixed point within the iteration cap");
}

GradedSeries weyl_curvature(const FedosovState &state)
{
	const GradedSeries &g = state.gamma;
	GradedSeries omega = sub(state.omega_element, state.geom.curvature_element);
	omega = add(omega, delta_op(g));
	omega = sub(omega, covariant_derivative(g, state.geom));
	if (!g.is_zero())
		omega = sub(omega, scale(ad_i_over_hbar(g, g, state.geom.pi), Scalar(Rational(1, 2))));
	if (!is_central(omega)) {
		for (const auto &[k, c] : omega.terms())
			if (!k.y.is_zero())
				throw InternalError("weyl_curvature: non-central remainder at term " +
				                    to_string(k.y, omega.dim()));
	}
	return omega;
}

GradedSeries connection_apply(const FedosovState &state, const GradedSeries &a)
{
	GradedSeries out = sub(covariant_derivative(a, state.geom), delta_op(a));
	if (!state.gamma.is_zero())
		out = add(out, ad_i_over_hbar(state.gamma, a, state.geom.pi));
	return out;
}

GradedSeries quantize(const FedosovState &state, const GradedSeries &f)
{
	if (!y_free(f) || !form_free(f))
		throw InputError("quantize: input must be a central x-jet");
	Bounds bd = meet(f.bounds(), state.geom.bounds);
	GradedSeries base = truncate(f, bd);
	GradedSeries a = base;
	int cap = bd.total_degree + 2;
	for (int it = 0; it <= cap; ++it) {
		GradedSeries corr = covariant_derivative(a, state.geom);
		if (!state.gamma.is_zero())
			corr = add(corr, ad_i_over_hbar(state.gamma, a, state.geom.pi));
		GradedSeries next = add(base, delta_inv(corr));
		if (next == a)
			return a;
		a = std::move(next);
	}
	throw InternalError("quantize: no fixed point within the iteration cap");
}

GradedSeries project_center(const GradedSeries &a)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms())
		if (k.y.is_zero())
			out.add_term(k, c);
	return out;
}

GradedSeries star_product(const FedosovState &state, const GradedSeries &f,
                          const GradedSeries &g)
{
	GradedSeries tf = quantize(state, f);
	GradedSeries tg = quantize(state, g);
	return project_center(moyal_mul(tf, tg, state.geom.pi));
}

GradedSeries probe_monomial(int dim, Bounds bounds, const MultiIndex &alpha)
{
	GradedSeries f = GradedSeries::zero(dim, bounds);
	TermKey k;
	k.x = alpha;
	f.add_term(k, Scalar(Rational(1) / multi_factorial(alpha)));
	return f;
}

StarTable extract_star_table(const FedosovState &state, int hbar_order, int probe_order)
{
	const int dim = state.geom.dim;
	Bounds bd = state.geom.bounds;
	if (probe_order > bd.total_degree)
		throw InputError("extract_star_table: probe order exceeds the degree bound");
	if (hbar_order > bd.hbar_order)
		throw InputError("extract_star_table: insufficient hbar bound");

	// Basepoint coefficients only involve terms of weight <= total_degree;
	// the capped state makes each tau lift small and stays exact.
	Bounds wedge = with_weight_cap(bd, bd.total_degree);
	FedosovState capped = state;
	capped.geom.bounds = wedge;
	capped.gamma = truncate(state.gamma, with_weight_cap(bd, bd.total_degree + 2));
	capped.geom.gamma_hat =
	    truncate(state.geom.gamma_hat, with_weight_cap(bd, bd.total_degree + 2));

	std::vector<MultiIndex> probes = multi_indices_up_to(dim, probe_order);
	std::vector<GradedSeries> lifts;
	lifts.reserve(probes.size());
	for (const MultiIndex &a : probes)
		lifts.push_back(quantize(capped, probe_monomial(dim, wedge, a)));

	StarTable table{dim, hbar_order, probe_order, {}};
	for (size_t ia = 0; ia < probes.size(); ++ia)
		for (size_t ib = 0; ib < probes.size(); ++ib) {
			GradedSeries prod = moyal_mul(lifts[ia], lifts[ib], capped.geom.pi);
			for (int m = 0; m <= hbar_order; ++m) {
				TermKey k;
				k.hbar = static_cast<std::uint16_t>(m);
				Scalar c = prod.coeff(k);
				if (!c.is_zero())
					table.entries[{m, probes[ia], probes[ib]}] = c;
			}
		}
	return table;
}

} // namespace fedlab
