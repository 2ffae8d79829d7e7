#pragma once

#include <utility>
#include <vector>

#include "fedlab/fedosov.hpp"

namespace fedlab {

// Basepoint coefficients of a bidifferential operator probed on monomials:
// table[(alpha,beta)] = B(x^alpha/alpha!, x^beta/beta!)(0).
using BidiffTable = std::map<std::pair<MultiIndex, MultiIndex>, Scalar>;

BidiffTable bidiff_sub(const BidiffTable &a, const BidiffTable &b);
// Max |alpha| (argument 0) or |beta| (argument 1) over nonzero entries.
int bidiff_order(const BidiffTable &t, int argument);

// P^k_nabla(u,v) = pi^{i1 j1}...pi^{ik jk} (D^k u)_{i...} (D^k v)_{j...}
// with D the iterated covariant derivative of the geometry's connection.
BidiffTable p_nabla_table(const GeometryData &g, int k, int probe_order);

struct VeyLevel {
	int k = 0;
	BidiffTable q;         // k! (2i)^k C_k
	BidiffTable p;         // P^k_nabla
	BidiffTable remainder; // q - p
	int order_u = 0;       // remainder order in each argument
	int order_v = 0;
	bool ok = false;       // orders < k (k = 0: remainder empty)
};

struct VeyReport {
	int probe_order = 0;
	std::vector<VeyLevel> levels;
	bool ok = true;
};

// Thm-level check: the k-th normalized cochain agrees with P^k_nabla up to
// a remainder of per-argument order < k. Needs probe_order >= K + 1 so the
// order decision is meaningful.
VeyReport vey_check(const StarTable &table, const GeometryData &g, int hbar_order,
                    int probe_order);

//----------------------------- derivations --------------------------------

struct DerivationCert {
	GradedSeries theta;     // closed scalar 1-form
	GradedSeries k_section; // K with D K = theta, K|_{y=0} = 0
	bool flat_residual_ok = false; // D K - theta vanished on the sound window
};

// d_x-exterior derivative on scalar forms (no connection term).
GradedSeries exterior_derivative(const GradedSeries &a);

// Solves D K = theta, K|_{y=0} = 0 by K = -delta^{-1} theta +
// delta^{-1}(da K + (i/hbar)[gamma, K]). theta must be closed and scalar.
DerivationCert derivation_solve(const FedosovState &state, const GradedSeries &theta);

// f -> sigma((i/hbar)[K, tau f]): the derivation induced on center values.
GradedSeries induced_derivation(const FedosovState &state, const DerivationCert &cert,
                                const GradedSeries &f);

struct BracketInnerResult {
	GradedSeries k_section;  // (i/hbar)[K1, K2]
	GradedSeries generator;  // sigma of it
	bool flat = false;       // D of it vanishes on the sound window
};

// Appendix-level fact: the bracket of two derivations is inner; the witness
// is the flat section (i/hbar)[K1,K2].
BracketInnerResult derivation_bracket(const FedosovState &state, const DerivationCert &a,
                                      const DerivationCert &b);

//---------------------------- momentum maps -------------------------------

struct LieSymmetryData {
	int size = 0;
	std::vector<GradedSeries> generators;                // a_xi, x-jets
	std::vector<std::vector<GradedSeries>> vector_fields; // xi_hat components
	std::vector<Scalar> structure;                        // c^k_{ij} at [k][i][j]

	const Scalar &c(int k, int i, int j) const
	{
		return structure[static_cast<size_t>((k * size + i) * size + j)];
	}
};

CheckResult validate_symmetry(const LieSymmetryData &sym);

struct MomentumReport {
	bool hamiltonian_ok = false;  // xi_hat equals the hamiltonian field of a_xi at hbar^0
	bool generates_ok = false;    // xi_hat f = (i/hbar)[a_xi, f] through hbar^K on probes
	bool lambda_constant = false; // each lambda(xi,eta) jet is constant
	bool lambda_zero = false;     // lambda vanishes identically
	bool cocycle_ok = false;      // sum_cyc c^m_{ij} lambda_{mk} = 0
	std::string witness;
	// lambda[(i,j)][m] = hbar^m coefficient of lambda(xi_i, xi_j)
	std::map<std::pair<int, int>, std::map<int, Scalar>> lambda;
};

// Verifies the generator equation and the lambda cocycle through hbar^K.
// The state must be solved with hbar_order >= hbar_report + 1 (the star
// commutator is divided by hbar once).
MomentumReport momentum_verify(const FedosovState &state, const LieSymmetryData &sym,
                               int probe_degree, int hbar_report);

//--------------------------- lagrangian closure ---------------------------

struct LagrangianReport {
	bool hypotheses_ok = false;    // isotropic; totally geodesic; i^* Omega = 0
	bool star_closure_ok = false;  // star of ideal pairs vanishes on L
	bool gamma_member_ok = false;  // gamma in (W3 (x) Lambda1)_L
	bool lift_closure_ok = false;  // tau f * tau g restricted to L in W^L
	std::string witness;
};

LagrangianReport lagrangian_check(const FedosovState &state, const LagrangianSpec &lag,
                                  int probe_degree, int hbar_report);

//-------------------------- connection recovery ---------------------------

struct ConnectionExtraction {
	int dim = 0;
	bool natural = false;       // Q2 has per-argument order <= 2
	bool symmetric = false;     // extracted T fully symmetric, both readings agree
	std::vector<Scalar> t_tensor;     // T^{ijk} at [i][j][k]
	std::vector<Scalar> christoffel;  // recovered Gamma^k_{ij}(0) at [k][i][j]
	std::string witness;

	const Scalar &gamma0(int k, int i, int j) const
	{
		return christoffel[static_cast<size_t>((k * dim + i) * dim + j)];
	}
	const Scalar &t(int i, int j, int k) const
	{
		return t_tensor[static_cast<size_t>((i * dim + j) * dim + k)];
	}
};

// Reads T^{ijk} = -(1/3) x the (1,2)-coefficients of Q2 - P^2 for the probe
// connection, and returns Gamma^{ijk} = Gamma~^{ijk} + 3 T^{ijk} lowered at
// the basepoint. probe_geom supplies omega, pi and the probe connection.
ConnectionExtraction extract_connection(const StarTable &table, const GeometryData &probe_geom);

} // namespace fedlab
