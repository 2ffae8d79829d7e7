#pragma once

#include <map>
#include <tuple>

#include "fedlab/geometry.hpp"

namespace fedlab {

// Prescribed Weyl curvature Omega = omega + sum_{m>=1} hbar^m omega_m,
// each omega_m a closed 2-form jet. Only the perturbations are stored;
// omega_0 is the geometry's symplectic form by construction.
struct WeylCurvatureSpec {
	int dim = 0;
	Bounds bounds{};
	std::map<int, std::vector<GradedSeries>> perturbations; // m -> dim x dim entries

	// Validates antisymmetry, closedness, m >= 1.
	CheckResult validate() const;
};

// sum_{k<l} e_{kl} dx^k ^ dx^l for an antisymmetric matrix of x-jets.
GradedSeries two_form_element(int dim, Bounds bounds, const std::vector<GradedSeries> &entries);

// Geometry plus the solved connection 1-form gamma with delta^{-1} gamma = 0
// and filtration degree >= 3.
struct FedosovState {
	GeometryData geom;
	WeylCurvatureSpec spec;
	GradedSeries omega_element;    // symplectic form as a 2-form element
	GradedSeries omega_tilde;      // Omega - omega + R
	GradedSeries gamma;
	int iterations = 0;
};

// Fixed point of gamma = delta^{-1} Omega~ + delta^{-1}(da gamma + (i/hbar) gamma^2),
// run to literal stabilization (cap total_degree + 2 sweeps). Throws
// InputError when delta^{-1} Omega~ has filtration degree < 3.
FedosovState solve_gamma(GeometryData geom, WeylCurvatureSpec spec);

// Recomputed Weyl curvature omega - R + delta gamma - da gamma - (i/hbar) gamma^2.
// Throws InternalError when the result is not central.
GradedSeries weyl_curvature(const FedosovState &state);

// D a = -delta a + da a + (i/hbar)[gamma, a].
GradedSeries connection_apply(const FedosovState &state, const GradedSeries &a);

// Parallel-section lift: a = f + delta^{-1}(da a + (i/hbar)[gamma, a]).
// f must be central and form-free (an x-jet with hbar coefficients).
GradedSeries quantize(const FedosovState &state, const GradedSeries &f);

// sigma: a|_{y=0}.
GradedSeries project_center(const GradedSeries &a);

// sigma(tau f * tau g) as an x-jet with hbar coefficients.
GradedSeries star_product(const FedosovState &state, const GradedSeries &f,
                          const GradedSeries &g);

// Exact basepoint coefficients of the bidifferential operators:
// entries[(k, alpha, beta)] = C_k(x^alpha/alpha!, x^beta/beta!)(0).
struct StarTable {
	int dim = 0;
	int hbar_order = 0;
	int probe_order = 0;
	std::map<std::tuple<int, MultiIndex, MultiIndex>, Scalar> entries;

	Scalar at(int k, const MultiIndex &a, const MultiIndex &b) const
	{
		auto it = entries.find({k, a, b});
		return it == entries.end() ? Scalar() : it->second;
	}
};

// Monomial probing over |alpha|, |beta| <= probe_order. Runs the lifts
// under a weight cap (basepoint values only depend on terms of weight
// <= total_degree, and no engine operation lowers weight).
StarTable extract_star_table(const FedosovState &state, int hbar_order, int probe_order);

// x^alpha / alpha!
GradedSeries probe_monomial(int dim, Bounds bounds, const MultiIndex &alpha);

} // namespace fedlab
