#include "fedlab/analysis.hpp"

#include <sstream>

namespace fedlab {

BidiffTable bidiff_sub(const BidiffTable &a, const BidiffTable &b)
{
	BidiffTable out = a;
	for (const auto &[k, c] : b) {
		auto it = out.find(k);
		if (it == out.end()) {
			out.emplace(k, -c);
		} else {
			it->second -= c;
			if (it->second.is_zero())
				out.erase(it);
		}
	}
	for (auto it = out.begin(); it != out.end();)
		it = it->second.is_zero() ? out.erase(it) : std::next(it);
	return out;
}

int bidiff_order(const BidiffTable &t, int argument)
{
	int order = -1; // zero operator
	for (const auto &[k, c] : t) {
		if (c.is_zero())
			continue;
		order = std::max(order, (argument == 0 ? k.first : k.second).degree());
	}
	return order;
}

//------------------------------ Vey structure -----------------------------

namespace {

// Iterated covariant derivative values at the basepoint: D^k u as a flat
// vector of dim^k scalars, first index most significant.
std::vector<Scalar> cov_derivative_at_origin(const GeometryData &g, const GradedSeries &u,
                                             int k)
{
	std::vector<GradedSeries> cur{u};
	size_t width = 1;
	for (int t = 1; t <= k; ++t) {
		std::vector<GradedSeries> next(width * static_cast<size_t>(g.dim),
		                               GradedSeries::zero(g.dim, u.bounds()));
		for (int j = 0; j < g.dim; ++j)
			for (size_t idx = 0; idx < width; ++idx) {
				GradedSeries v = partial_x(cur[idx], j);
				// subtract Gamma^m_{j i_s} T_{..m..} over the t-1 slots
				std::ptrdiff_t stride = static_cast<std::ptrdiff_t>(width);
				for (int s = 0; s < t - 1; ++s) {
					stride /= g.dim;
					int is = static_cast<int>(static_cast<std::ptrdiff_t>(idx) / stride) % g.dim;
					for (int m = 0; m < g.dim; ++m) {
						size_t idx_m = static_cast<size_t>(
						    static_cast<std::ptrdiff_t>(idx) + (m - is) * stride);
						v = sub(v, mul(g.christoffel_at(m, j, is), cur[idx_m]));
					}
				}
				next[static_cast<size_t>(j) * width + idx] = v;
			}
		cur = std::move(next);
		width *= static_cast<size_t>(g.dim);
	}
	std::vector<Scalar> out(width);
	for (size_t i = 0; i < width; ++i)
		out[i] = cur[i].coeff(TermKey{});
	return out;
}

} // namespace

BidiffTable p_nabla_table(const GeometryData &g, int k, int probe_order)
{
	const int dim = g.dim;
	std::vector<MultiIndex> probes = multi_indices_up_to(dim, probe_order);
	std::vector<std::vector<Scalar>> tensors;
	tensors.reserve(probes.size());
	for (const MultiIndex &a : probes)
		tensors.push_back(
		    cov_derivative_at_origin(g, probe_monomial(dim, g.bounds, a), k));

	std::vector<Scalar> pi0(static_cast<size_t>(dim) * dim);
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			pi0[static_cast<size_t>(i * dim + j)] = g.pi.at(i, j).coeff(TermKey{});

	size_t width = 1;
	for (int t = 0; t < k; ++t)
		width *= static_cast<size_t>(dim);

	// pairing[(I,J)] = prod_t pi^{i_t j_t}(0)
	BidiffTable out;
	for (size_t ia = 0; ia < probes.size(); ++ia)
		for (size_t ib = 0; ib < probes.size(); ++ib) {
			Scalar sum;
			for (size_t I = 0; I < width; ++I) {
				if (tensors[ia][I].is_zero())
					continue;
				for (size_t J = 0; J < width; ++J) {
					if (tensors[ib][J].is_zero())
						continue;
					Scalar w(1);
					size_t si = I, sj = J;
					for (int t = 0; t < k; ++t) {
						int it = static_cast<int>(si % static_cast<size_t>(dim));
						int jt = static_cast<int>(sj % static_cast<size_t>(dim));
						si /= static_cast<size_t>(dim);
						sj /= static_cast<size_t>(dim);
						w *= pi0[static_cast<size_t>(it * dim + jt)];
						if (w.is_zero())
							break;
					}
					if (w.is_zero())
						continue;
					sum += w * tensors[ia][I] * tensors[ib][J];
				}
			}
			if (!sum.is_zero())
				out[{probes[ia], probes[ib]}] = sum;
		}
	return out;
}

VeyReport vey_check(const StarTable &table, const GeometryData &g, int hbar_order,
                    int probe_order)
{
	if (probe_order > table.probe_order)
		throw InputError("vey_check: probe order exceeds the extracted table");
	if (probe_order < hbar_order + 1)
		throw InputError("vey_check: probe range too small to decide the order bound");

	VeyReport report;
	report.probe_order = probe_order;
	std::vector<MultiIndex> probes = multi_indices_up_to(g.dim, probe_order);

	for (int k = 0; k <= hbar_order; ++k) {
		VeyLevel level;
		level.k = k;
		// Q_k = k! (2i)^k C_k
		Scalar norm = Scalar(factorial(static_cast<unsigned>(k)));
		for (int t = 0; t < k; ++t)
			norm *= Scalar(Rational(0), Rational(2));
		for (const MultiIndex &a : probes)
			for (const MultiIndex &b : probes) {
				Scalar c = table.at(k, a, b);
				if (!c.is_zero())
					level.q[{a, b}] = norm * c;
			}
		level.p = p_nabla_table(g, k, probe_order);
		level.remainder = bidiff_sub(level.q, level.p);
		level.order_u = bidiff_order(level.remainder, 0);
		level.order_v = bidiff_order(level.remainder, 1);
		level.ok = level.order_u < k && level.order_v < k;
		if (!level.ok)
			report.ok = false;
		report.levels.push_back(std::move(level));
	}
	return report;
}

//------------------------------- derivations ------------------------------

GradedSeries exterior_derivative(const GradedSeries &a)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms()) {
		for (int i = 0; i < a.dim(); ++i) {
			int e = k.x[i];
			if (e == 0)
				continue;
			int sign = wedge_insert_sign(k.form, i);
			if (sign == 0)
				continue;
			TermKey kk = k;
			kk.x = k.x.bumped(i, -1);
			kk.form = k.form | (1u << i);
			Scalar c2 = c * Scalar(e);
			out.add_term(kk, sign < 0 ? -c2 : c2);
		}
	}
	return out;
}

DerivationCert derivation_solve(const FedosovState &state, const GradedSeries &theta)
{
	if (!y_free(theta))
		throw InputError("derivation_solve: theta must be scalar (y-free)");
	for (const auto &[k, c] : theta.terms())
		if (k.form_degree() != 1)
			throw InputError("derivation_solve: theta must be a 1-form");
	if (!exterior_derivative(theta).is_zero())
		throw InputError("derivation_solve: theta is not closed");

	Bounds bd = meet(theta.bounds(), state.geom.bounds);
	GradedSeries seed = negate(delta_inv(truncate(theta, bd)));
	GradedSeries k_section = GradedSeries::zero(state.geom.dim, bd);
	int cap = bd.total_degree + 2;
	bool done = false;
	for (int it = 0; it <= cap && !done; ++it) {
		GradedSeries corr = covariant_derivative(k_section, state.geom);
		if (!state.gamma.is_zero())
			corr = add(corr, ad_i_over_hbar(state.gamma, k_section, state.geom.pi));
		GradedSeries next = add(seed, delta_inv(corr));
		done = (next == k_section);
		k_section = std::move(next);
	}
	if (!done)
		throw InternalError("derivation_solve: no fixed point within the iteration cap");

	DerivationCert cert{truncate(theta, bd), k_section, false};
	// one bare d_x sits inside D, so compare one weight below the cap
	GradedSeries residual = sub(connection_apply(state, cert.k_section), cert.theta);
	Bounds window = bd;
	window.weight_cap = std::min(window.weight_cap, window.x_order + window.total_degree) - 1;
	cert.flat_residual_ok = truncate(residual, window).is_zero();
	return cert;
}

GradedSeries induced_derivation(const FedosovState &state, const DerivationCert &cert,
                                const GradedSeries &f)
{
	GradedSeries lift = quantize(state, f);
	return project_center(ad_i_over_hbar(cert.k_section, lift, state.geom.pi));
}

BracketInnerResult derivation_bracket(const FedosovState &state, const DerivationCert &a,
                                      const DerivationCert &b)
{
	BracketInnerResult r{ad_i_over_hbar(a.k_section, b.k_section, state.geom.pi),
	                     GradedSeries::zero(state.geom.dim, state.geom.bounds), false};
	r.generator = project_center(r.k_section);
	GradedSeries dk = connection_apply(state, r.k_section);
	Bounds window = r.k_section.bounds();
	window.weight_cap = std::min(window.weight_cap, window.x_order + window.total_degree) - 1;
	r.flat = truncate(dk, window).is_zero();
	return r;
}

//------------------------------ momentum maps -----------------------------

CheckResult validate_symmetry(const LieSymmetryData &sym)
{
	const int d = sym.size;
	if (static_cast<int>(sym.generators.size()) != d ||
	    static_cast<int>(sym.vector_fields.size()) != d ||
	    static_cast<int>(sym.structure.size()) != d * d * d)
		return {false, "symmetry data sizes inconsistent"};
	for (int k = 0; k < d; ++k)
		for (int i = 0; i < d; ++i)
			for (int j = 0; j < d; ++j)
				if (!(sym.c(k, i, j) + sym.c(k, j, i)).is_zero()) {
					std::ostringstream os;
					os << "structure constants not antisymmetric at (" << k + 1 << ","
					   << i + 1 << "," << j + 1 << ")";
					return {false, os.str()};
				}
	// Jacobi: sum_m c^m_{ij} c^l_{mk} + cyclic = 0
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
			for (int k = 0; k < d; ++k)
				for (int l = 0; l < d; ++l) {
					Scalar s;
					for (int m = 0; m < d; ++m) {
						s += sym.c(m, i, j) * sym.c(l, m, k);
						s += sym.c(m, j, k) * sym.c(l, m, i);
						s += sym.c(m, k, i) * sym.c(l, m, j);
					}
					if (!s.is_zero()) {
						std::ostringstream os;
						os << "Jacobi identity fails at (" << i + 1 << "," << j + 1 << ","
						   << k + 1 << ";" << l + 1 << ")";
						return {false, os.str()};
					}
				}
	return {};
}

namespace {

// xi f = sum_j v^j d_j f for a vector field given by component jets.
GradedSeries apply_vector_field(const std::vector<GradedSeries> &v, const GradedSeries &f)
{
	GradedSeries out = GradedSeries::zero(f.dim(), f.bounds());
	for (int j = 0; j < f.dim(); ++j)
		out = add(out, mul(v[static_cast<size_t>(j)], partial_x(f, j)));
	return out;
}

// (i/hbar)(f*g - g*f) on center values, computed from cached lifts.
GradedSeries star_ad(const FedosovState &state, const GradedSeries &lift_a,
                     const GradedSeries &lift_f)
{
	GradedSeries comm = sub(moyal_mul(lift_a, lift_f, state.geom.pi),
	                        moyal_mul(lift_f, lift_a, state.geom.pi));
	return project_center(scale(div_hbar(comm), Scalar::i()));
}

} // namespace

MomentumReport momentum_verify(const FedosovState &state, const LieSymmetryData &sym,
                               int probe_degree, int hbar_report)
{
	if (auto c = validate_symmetry(sym); !c)
		throw InputError("momentum_verify: " + c.witness);
	if (state.geom.bounds.hbar_order < hbar_report + 1)
		throw InputError("momentum_verify: state needs hbar_order >= report order + 1");

	const int dim = state.geom.dim;
	const int d = sym.size;
	Bounds bd = state.geom.bounds;
	MomentumReport rep;

	// report window: hbar <= hbar_report after one division by hbar
	Bounds window = bd;
	window.hbar_order = hbar_report;

	// (0) xi_hat must be the hamiltonian field of a_xi: v^j = pi^{ij} d_i a
	rep.hamiltonian_ok = true;
	for (int t = 0; t < d && rep.hamiltonian_ok; ++t) {
		for (int j = 0; j < dim; ++j) {
			GradedSeries ham = GradedSeries::zero(dim, bd);
			for (int i = 0; i < dim; ++i)
				ham = add(ham, mul(state.geom.pi.at(i, j), partial_x(sym.generators[t], i)));
			if (!(sub(ham, sym.vector_fields[t][static_cast<size_t>(j)]).is_zero())) {
				rep.hamiltonian_ok = false;
				std::ostringstream os;
				os << "xi_" << t + 1 << " is not the hamiltonian field of its generator "
				   << "(component " << j + 1 << ")";
				rep.witness = os.str();
				break;
			}
		}
	}
	if (!rep.hamiltonian_ok)
		return rep;

	std::vector<GradedSeries> lifts;
	lifts.reserve(static_cast<size_t>(d));
	for (int t = 0; t < d; ++t)
		lifts.push_back(quantize(state, sym.generators[t]));

	// (a) generator equation on monomial probes, through hbar^report
	rep.generates_ok = true;
	std::vector<MultiIndex> probes = multi_indices_up_to(dim, probe_degree);
	for (int t = 0; t < d && rep.generates_ok; ++t) {
		for (const MultiIndex &a : probes) {
			GradedSeries f = probe_monomial(dim, bd, a);
			GradedSeries lhs = apply_vector_field(sym.vector_fields[t], f);
			GradedSeries rhs = star_ad(state, lifts[t], quantize(state, f));
			if (!truncate(sub(lhs, rhs), window).is_zero()) {
				rep.generates_ok = false;
				std::ostringstream os;
				os << "generator equation fails for xi_" << t + 1 << " on probe "
				   << to_string(a, dim);
				rep.witness = os.str();
				break;
			}
		}
	}
	if (!rep.generates_ok)
		return rep;

	// (b) lambda(xi_i, xi_j) = a_{[xi_i,xi_j]} - (i/hbar)[a_i, a_j]
	rep.lambda_constant = true;
	rep.lambda_zero = true;
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j) {
			if (i == j)
				continue;
			GradedSeries lam = GradedSeries::zero(dim, bd);
			for (int k = 0; k < d; ++k)
				lam = add(lam, scale(sym.generators[k], sym.c(k, i, j)));
			lam = sub(lam, star_ad(state, lifts[i], lifts[j]));
			lam = truncate(lam, window);
			std::map<int, Scalar> row;
			for (const auto &[key, c] : lam.terms()) {
				if (!key.x.is_zero()) {
					rep.lambda_constant = false;
					std::ostringstream os;
					os << "lambda(" << i + 1 << "," << j + 1 << ") is not constant";
					rep.witness = os.str();
				} else {
					row[key.hbar] = c;
					rep.lambda_zero = false;
				}
			}
			if (!row.empty())
				rep.lambda[{i, j}] = std::move(row);
		}
	if (!rep.lambda_constant)
		return rep;

	// (c) 2-cocycle identity on the constants, per hbar power
	rep.cocycle_ok = true;
	auto lam_at = [&](int i, int j, int m) -> Scalar {
		auto it = rep.lambda.find({i, j});
		if (it == rep.lambda.end())
			return Scalar();
		auto jt = it->second.find(m);
		return jt == it->second.end() ? Scalar() : jt->second;
	};
	for (int i = 0; i < d && rep.cocycle_ok; ++i)
		for (int j = 0; j < d && rep.cocycle_ok; ++j)
			for (int k = 0; k < d && rep.cocycle_ok; ++k)
				for (int m = 0; m <= hbar_report; ++m) {
					Scalar s;
					for (int t = 0; t < d; ++t) {
						s += sym.c(t, i, j) * lam_at(t, k, m);
						s += sym.c(t, j, k) * lam_at(t, i, m);
						s += sym.c(t, k, i) * lam_at(t, j, m);
					}
					if (!s.is_zero()) {
						rep.cocycle_ok = false;
						std::ostringstream os;
						os << "cocycle identity fails at (" << i + 1 << "," << j + 1 << ","
						   << k + 1 << "), hbar^" << m;
						rep.witness = os.str();
					}
				}
	return rep;
}

//--------------------------- lagrangian closure ---------------------------

LagrangianReport lagrangian_check(const FedosovState &state, const LagrangianSpec &lag,
                                  int probe_degree, int hbar_report)
{
	LagrangianReport rep;
	if (auto c = check_isotropic(state.geom, lag); !c) {
		rep.witness = "isotropy: " + c.witness;
		return rep;
	}
	if (auto c = check_totally_geodesic(state.geom, lag); !c) {
		rep.witness = "totally geodesic: " + c.witness;
		return rep;
	}
	for (const auto &[m, entries] : state.spec.perturbations) {
		for (int s = 0; s < state.geom.dim; ++s)
			for (int t = 0; t < state.geom.dim; ++t) {
				if (!((lag.tangent_mask >> s) & 1) || !((lag.tangent_mask >> t) & 1))
					continue;
				if (!restrict_to_lagrangian(entries[static_cast<size_t>(s * state.geom.dim + t)],
				                            lag)
				         .is_zero()) {
					std::ostringstream os;
					os << "i^* omega_" << m << " != 0 on L";
					rep.witness = os.str();
					return rep;
				}
			}
	}
	rep.hypotheses_ok = true;

	const int dim = state.geom.dim;
	Bounds bd = state.geom.bounds;

	// vanishing-ideal monomials: x^alpha touching a conormal coordinate
	std::vector<MultiIndex> ideal;
	for (const MultiIndex &a : multi_indices_up_to(dim, probe_degree))
		if (!a.is_zero() && !supported_in(a, lag.tangent_mask))
			ideal.push_back(a);

	std::vector<GradedSeries> lifts;
	lifts.reserve(ideal.size());
	for (const MultiIndex &a : ideal)
		lifts.push_back(quantize(state, probe_monomial(dim, bd, a)));

	rep.star_closure_ok = true;
	rep.lift_closure_ok = true;
	for (size_t ia = 0; ia < ideal.size(); ++ia)
		for (size_t ib = 0; ib < ideal.size(); ++ib) {
			GradedSeries prod = moyal_mul(lifts[ia], lifts[ib], state.geom.pi);
			GradedSeries star = project_center(prod);
			GradedSeries bad = restrict_to_lagrangian(star, lag);
			for (const auto &[k, c] : bad.terms())
				if (k.hbar <= hbar_report && rep.star_closure_ok) {
					rep.star_closure_ok = false;
					std::ostringstream os;
					os << "star(" << to_string(ideal[ia], dim) << ","
					   << to_string(ideal[ib], dim) << ") does not vanish on L";
					rep.witness = os.str();
				}
			if (!lagrangian_membership(prod, lag) && rep.lift_closure_ok) {
				rep.lift_closure_ok = false;
				std::ostringstream os;
				os << "lift product of " << to_string(ideal[ia], dim) << ","
				   << to_string(ideal[ib], dim) << " leaves W^L";
				rep.witness = os.str();
			}
		}

	rep.gamma_member_ok = lagrangian_membership(state.gamma, lag);
	if (!rep.gamma_member_ok && rep.witness.empty())
		rep.witness = "gamma is not in (W3 (x) Lambda1)_L";
	return rep;
}

//--------------------------- connection recovery --------------------------

ConnectionExtraction extract_connection(const StarTable &table, const GeometryData &probe_geom)
{
	const int dim = probe_geom.dim;
	if (table.dim != dim)
		throw InputError("extract_connection: dimension mismatch");
	if (table.probe_order < 3)
		throw InputError("extract_connection: table must be probed to order >= 3");
	if (table.hbar_order < 2)
		throw InputError("extract_connection: table must reach hbar^2");
	if (auto c = check_torsion_free(probe_geom); !c)
		throw InputError("extract_connection: probe connection has torsion at " + c.witness);
	if (auto c = check_symplectic(probe_geom); !c)
		throw InputError("extract_connection: probe connection not symplectic at " + c.witness);

	ConnectionExtraction out;
	out.dim = dim;

	// Q2 = 2 (2i)^2 C2 = -8 C2; naturality: per-argument order <= 2
	std::vector<MultiIndex> probes = multi_indices_up_to(dim, table.probe_order);
	BidiffTable q2;
	Scalar norm = Scalar(Rational(-8));
	for (const MultiIndex &a : probes)
		for (const MultiIndex &b : probes) {
			Scalar c = table.at(2, a, b);
			if (!c.is_zero())
				q2[{a, b}] = norm * c;
		}
	out.natural = bidiff_order(q2, 0) <= 2 && bidiff_order(q2, 1) <= 2;
	if (!out.natural) {
		out.witness = "Q2 has per-argument order > 2 (not a natural star product)";
		return out;
	}

	BidiffTable diff = bidiff_sub(q2, p_nabla_table(probe_geom, 2, table.probe_order));

	auto read_t = [&](int i, int j, int k, bool side12) {
		MultiIndex u, v;
		if (side12) {
			u = MultiIndex::unit(i);
			v = MultiIndex::unit(j) + MultiIndex::unit(k);
		} else {
			u = MultiIndex::unit(j) + MultiIndex::unit(k);
			v = MultiIndex::unit(i);
		}
		auto it = diff.find({u, v});
		Scalar b = it == diff.end() ? Scalar() : it->second;
		int mult = (j == k) ? 1 : 2;
		return -(b / Scalar(Rational(3 * mult)));
	};

	out.t_tensor.assign(static_cast<size_t>(dim) * dim * dim, Scalar());
	out.symmetric = true;
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			for (int k = 0; k < dim; ++k)
				out.t_tensor[static_cast<size_t>((i * dim + j) * dim + k)] =
				    read_t(i, j, k, true);
	auto t_at = [&](int i, int j, int k) -> const Scalar & {
		return out.t_tensor[static_cast<size_t>((i * dim + j) * dim + k)];
	};
	for (int i = 0; i < dim && out.symmetric; ++i)
		for (int j = 0; j < dim && out.symmetric; ++j)
			for (int k = 0; k < dim && out.symmetric; ++k) {
				if (!(t_at(i, j, k) == t_at(j, i, k)) || !(t_at(i, j, k) == t_at(i, k, j)))
					out.symmetric = false;
				if (!(t_at(i, j, k) == read_t(i, j, k, false)))
					out.symmetric = false;
			}
	if (!out.symmetric) {
		out.witness = "extracted tensor is not fully symmetric (table is not Vey-compatible)";
		return out;
	}

	// Gamma^{ijk} = Gamma~^i_{lm} pi^{lj} pi^{mk} + 3 T^{ijk}, lowered back by
	// Gamma^i_{lm} = Gamma^{ijk} omega_{jl} omega_{km}; all at the basepoint.
	std::vector<Scalar> pi0(static_cast<size_t>(dim) * dim), om0(static_cast<size_t>(dim) * dim);
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j) {
			pi0[static_cast<size_t>(i * dim + j)] = probe_geom.pi.at(i, j).coeff(TermKey{});
			om0[static_cast<size_t>(i * dim + j)] = probe_geom.omega_at(i, j).coeff(TermKey{});
		}
	auto pi_at = [&](int i, int j) { return pi0[static_cast<size_t>(i * dim + j)]; };
	auto om_at = [&](int i, int j) { return om0[static_cast<size_t>(i * dim + j)]; };

	std::vector<Scalar> upper(static_cast<size_t>(dim) * dim * dim);
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			for (int k = 0; k < dim; ++k) {
				Scalar s = Scalar(3) * t_at(i, j, k);
				for (int l = 0; l < dim; ++l)
					for (int m = 0; m < dim; ++m)
						s += probe_geom.christoffel_at(i, l, m).coeff(TermKey{}) *
						     pi_at(l, j) * pi_at(m, k);
				upper[static_cast<size_t>((i * dim + j) * dim + k)] = s;
			}

	out.christoffel.assign(static_cast<size_t>(dim) * dim * dim, Scalar());
	for (int i = 0; i < dim; ++i)
		for (int l = 0; l < dim; ++l)
			for (int m = 0; m < dim; ++m) {
				Scalar s;
				for (int j = 0; j < dim; ++j)
					for (int k = 0; k < dim; ++k)
						s += upper[static_cast<size_t>((i * dim + j) * dim + k)] *
						     om_at(j, l) * om_at(k, m);
				out.christoffel[static_cast<size_t>((i * dim + l) * dim + m)] = s;
			}
	return out;
}

} // namespace fedlab
