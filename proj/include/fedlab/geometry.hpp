#pragma once

#include <string>
#include <vector>

#include "fedlab/weyl.hpp"

namespace fedlab {

struct CheckResult {
	bool ok = true;
	std::string witness; // offending index/term when !ok

	explicit operator bool() const { return ok; }
};

// Jet-level symplectic data at the basepoint x = 0: the form, its Poisson
// inverse, a torsion-free connection with lowered symbols, and the
// curvature both as a tensor and as the W2 (x) Lambda2 element.
struct GeometryData {
	int dim = 0;
	Bounds bounds{};
	std::vector<GradedSeries> omega;             // dim x dim, x-jets
	std::vector<GradedSeries> christoffel;       // Gamma^k_{ij} at [k][i][j]
	std::vector<GradedSeries> christoffel_lower; // Gamma_{ijk} = omega_{im} Gamma^m_{jk}
	std::vector<GradedSeries> riemann;           // R^m_{jkl} at [m][j][k][l]
	PoissonMatrix pi{1, Bounds{0, 0, 0}, {GradedSeries(1, Bounds{0, 0, 0})}};
	GradedSeries gamma_hat{1, Bounds{0, 0, 0}};        // 1/2 Gamma_{ijk} y^i y^j dx^k
	GradedSeries curvature_element{1, Bounds{0, 0, 0}}; // 1/4 R_{ijkl} y^i y^j dx^k^dx^l

	const GradedSeries &omega_at(int i, int j) const
	{
		return omega[static_cast<size_t>(i * dim + j)];
	}
	const GradedSeries &christoffel_at(int k, int i, int j) const
	{
		return christoffel[static_cast<size_t>((k * dim + i) * dim + j)];
	}
	const GradedSeries &riemann_at(int m, int j, int k, int l) const
	{
		return riemann[static_cast<size_t>(((m * dim + j) * dim + k) * dim + l)];
	}
};

// Neumann-series inversion of omega around x = 0; pi = (omega^{-1})^T.
// Throws InputError when the constant part is singular.
PoissonMatrix invert_omega(int dim, Bounds bounds, const std::vector<GradedSeries> &omega);

// Builds the derived fields (pi, lowered symbols, gamma_hat, curvature)
// from omega and Gamma^k_{ij} jets. Validates antisymmetry of omega.
GeometryData make_geometry(int dim, Bounds bounds, std::vector<GradedSeries> omega,
                           std::vector<GradedSeries> christoffel);

// Corrects a torsion-free connection into a symplectic one:
// Gamma = Gamma~ + S with omega(S(X,Y),Z) = 1/3[(D_X omega)(Y,Z) + (D_Y omega)(X,Z)].
// Requires omega antisymmetric and closed.
std::vector<GradedSeries> symplectize(int dim, Bounds bounds,
                                      const std::vector<GradedSeries> &omega,
                                      const std::vector<GradedSeries> &christoffel_tilde);

// da = d_x a + (i/hbar)[gamma_hat, a]; raises form degree by one and is a
// derivation of the Moyal product.
GradedSeries covariant_derivative(const GradedSeries &a, const GeometryData &g);

CheckResult check_omega_antisymmetric(int dim, const std::vector<GradedSeries> &omega);
CheckResult check_omega_closed(int dim, const std::vector<GradedSeries> &omega);
CheckResult check_torsion_free(const GeometryData &g);
CheckResult check_symplectic(const GeometryData &g);
// First Bianchi symmetry of the computed curvature tensor.
CheckResult check_first_bianchi(const GeometryData &g);

// Coordinate lagrangian L = {x^c = 0 : c not in S}; tangent_mask holds S
// as 0-based bits, |S| = n.
struct LagrangianSpec {
	int dim = 0;
	std::uint32_t tangent_mask = 0;
};

// L must be isotropic for omega at jet level.
CheckResult check_isotropic(const GeometryData &g, const LagrangianSpec &l);
// Gamma^c_{st}|_L = 0 for s,t in S, c outside S.
CheckResult check_totally_geodesic(const GeometryData &g, const LagrangianSpec &l);

// Restricts x to L: drops terms whose x-multi-index touches a conormal
// coordinate.
GradedSeries restrict_to_lagrangian(const GradedSeries &a, const LagrangianSpec &l);

// a in (W (x) Lambda)_L: after restricting x to L, keeping only dx factors
// along S and y's along the tangent directions, nothing survives.
bool lagrangian_membership(const GradedSeries &a, const LagrangianSpec &l);

} // namespace fedlab
