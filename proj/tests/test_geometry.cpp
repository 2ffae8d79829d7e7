#include <doctest.h>

#include "helpers.hpp"

using namespace fedlab;
using namespace testutil;

static const Bounds B{8, 6, 3};

TEST_CASE("invert constant omega")
{
	PoissonMatrix pi = invert_omega(2, B, omega2d_const(B));
	CHECK(pi.at(0, 1) == GradedSeries::constant(2, B, Scalar(1)));
	CHECK(pi.at(1, 0) == GradedSeries::constant(2, B, Scalar(-1)));
}

TEST_CASE("invert curved omega: geometric series, verified by multiplying back")
{
	PoissonMatrix pi = invert_omega(2, B, omega2d(curved_w(B), B));

	// independent oracle: 1/(1+u) = sum (-u)^k with u = x1 x2
	GradedSeries u = mul(xv(0, B), xv(1, B));
	GradedSeries expect = GradedSeries::zero(2, B);
	GradedSeries pw = GradedSeries::constant(2, B, Scalar(1));
	for (int k = 0; 2 * k <= B.x_order; ++k) {
		expect = add(expect, scale(pw, sc((k % 2) ? -1 : 1)));
		pw = mul(pw, u);
	}
	CHECK(pi.at(0, 1) == expect);

	// pi^{ki} omega_{kj} = delta^i_j up to truncation
	std::vector<GradedSeries> om = omega2d(curved_w(B), B);
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) {
			GradedSeries s = GradedSeries::zero(2, B);
			for (int k = 0; k < 2; ++k)
				s = add(s, mul(pi.at(k, i), om[static_cast<size_t>(2 * k + j)]));
			if (i == j)
				CHECK(s == GradedSeries::constant(2, B, Scalar(1)));
			else
				CHECK(s.is_zero());
		}
}

TEST_CASE("invert rejects singular constant part")
{
	GradedSeries w = mul(xv(0, B), xv(1, B)); // omega(0) = 0
	CHECK_THROWS_AS(invert_omega(2, B, omega2d(w, B)), InputError);
}

TEST_CASE("symplectize: already-symplectic input is a fixed point")
{
	std::vector<GradedSeries> flat(8, GradedSeries::zero(2, B));
	auto out = symplectize(2, B, omega2d_const(B), flat);
	for (const auto &e : out)
		CHECK(e.is_zero());

	// constant omega with a constant fully-symmetric lowered connection is
	// symplectic; symplectize must return it unchanged
	std::vector<GradedSeries> gam(8, GradedSeries::zero(2, B));
	// Gamma^2_{11} = -1 lowers to Gamma_{111} = -1, fully symmetric
	gam[static_cast<size_t>((1 * 2 + 0) * 2 + 0)] = GradedSeries::constant(2, B, Scalar(-1));
	GeometryData g = make_geometry(2, B, omega2d_const(B), gam);
	REQUIRE(check_symplectic(g).ok);
	REQUIRE(check_torsion_free(g).ok);
	auto again = symplectize(2, B, omega2d_const(B), gam);
	for (int t = 0; t < 8; ++t)
		CHECK(again[static_cast<size_t>(t)] == gam[static_cast<size_t>(t)]);
}

TEST_CASE("symplectize the curved form")
{
	GeometryData g = curved_geometry(B);
	CHECK(check_torsion_free(g).ok);
	CHECK(check_symplectic(g).ok);
	CHECK(check_omega_closed(2, g.omega).ok);
	// Gamma is nonzero
	bool any = false;
	for (const auto &e : g.christoffel)
		any = any || !e.is_zero();
	CHECK(any);
}

TEST_CASE("torsion witness")
{
	std::vector<GradedSeries> gam(8, GradedSeries::zero(2, B));
	// Gamma^1_{12} = 1, Gamma^1_{21} = 0: torsion
	gam[static_cast<size_t>((0 * 2 + 0) * 2 + 1)] = GradedSeries::constant(2, B, Scalar(1));
	GeometryData g = make_geometry(2, B, omega2d_const(B), gam);
	auto c = check_torsion_free(g);
	CHECK(!c.ok);
	CHECK(c.witness == "Gamma(1,1,2)");
}

TEST_CASE("flat connection has zero curvature")
{
	GeometryData g = flat_geometry(B);
	CHECK(g.curvature_element.is_zero());
	for (const auto &e : g.riemann)
		CHECK(e.is_zero());
}

TEST_CASE("curved curvature: symmetries and Bianchi")
{
	GeometryData g = curved_geometry(B);
	CHECK(!g.curvature_element.is_zero());
	CHECK(check_first_bianchi(g).ok);

	// the element lives in W2 (x) Lambda2
	for (const auto &[k, c] : g.curvature_element.terms()) {
		CHECK(k.y.degree() == 2);
		CHECK(k.form_degree() == 2);
	}

	// lowered tensor R_{ijkl} = omega_{im} R^m_{jkl}: antisymmetric in (k,l),
	// symmetric in (i,j) for a symplectic connection
	auto lowered = [&](int i, int j, int k, int l) {
		GradedSeries s = GradedSeries::zero(2, B);
		for (int m = 0; m < 2; ++m)
			s = add(s, mul(g.omega_at(i, m), g.riemann_at(m, j, k, l)));
		return s;
	};
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			for (int k = 0; k < 2; ++k)
				for (int l = 0; l < 2; ++l) {
					CHECK(add(lowered(i, j, k, l), lowered(i, j, l, k)).is_zero());
					CHECK(sub(lowered(i, j, k, l), lowered(j, i, k, l)).is_zero());
				}
}

TEST_CASE("covariant derivative: flat reduces to d_x, central args give df")
{
	GeometryData flat = flat_geometry(B);
	GradedSeries a = mul(xv(0, B), yv(1, B));
	CHECK(covariant_derivative(a, flat) == mul(yv(1, B), dx(0, B)));

	GeometryData g = curved_geometry(B);
	GradedSeries f = mul(xv(0, B), xv(1, B));
	GradedSeries expect = add(mul(xv(1, B), dx(0, B)), mul(xv(0, B), dx(1, B)));
	CHECK(covariant_derivative(f, g) == expect);
}

TEST_CASE("covariant derivative is a moyal derivation")
{
	GeometryData g = curved_geometry(B);
	SeriesGen gen(47, 2, B);
	Bounds window = with_weight_cap(Bounds{B.x_order - 1, B.total_degree, B.hbar_order},
	                                B.x_order + B.total_degree - 1);
	for (int t = 0; t < 5; ++t) {
		GradedSeries a = gen.next(3, false);
		GradedSeries b = gen.next(3, false);
		GradedSeries lhs = covariant_derivative(moyal_mul(a, b, g.pi), g);
		GradedSeries rhs = add(moyal_mul(covariant_derivative(a, g), b, g.pi),
		                       moyal_mul(a, covariant_derivative(b, g), g.pi));
		CHECK(truncate(lhs, window) == truncate(rhs, window));
	}
}

TEST_CASE("D^2 consistency pins the curvature sign")
{
	// with gamma = 0 and D = -delta + da, D^2 a = [(i/hbar) R, a]
	GeometryData g = curved_geometry(B);
	SeriesGen gen(53, 2, B);
	Bounds window = with_weight_cap(Bounds{B.x_order - 2, B.total_degree, B.hbar_order},
	                                B.x_order + B.total_degree - 2);
	for (int t = 0; t < 5; ++t) {
		GradedSeries a = gen.next(3, false);
		GradedSeries da = sub(covariant_derivative(a, g), delta_op(a));
		GradedSeries dda = sub(covariant_derivative(da, g), delta_op(da));
		GradedSeries rhs = ad_i_over_hbar(g.curvature_element, a, g.pi);
		CHECK(truncate(dda, window) == truncate(rhs, window));
	}
}

TEST_CASE("for constant omega the connection 1-form realizes the derivative")
{
	// gamma_hat's ad-action agrees with the exterior covariant derivative
	// exactly when omega is constant (Darboux frame)
	std::vector<GradedSeries> gam(8, GradedSeries::zero(2, B));
	gam[static_cast<size_t>((1 * 2 + 0) * 2 + 0)] = GradedSeries::constant(2, B, Scalar(-1));
	gam[static_cast<size_t>((0 * 2 + 1) * 2 + 1)] = GradedSeries::constant(2, B, Scalar(2));
	GeometryData g = make_geometry(2, B, omega2d_const(B), gam);
	REQUIRE(check_symplectic(g).ok);
	SeriesGen gen(59, 2, B);
	for (int t = 0; t < 5; ++t) {
		GradedSeries a = gen.next(4, false);
		GradedSeries via_ad = add(exterior_derivative(a), ad_i_over_hbar(g.gamma_hat, a, g.pi));
		CHECK(covariant_derivative(a, g) == via_ad);
	}
}

TEST_CASE("lagrangian membership")
{
	LagrangianSpec l{2, 1u << 0}; // L = {x2 = 0}, tangent x1
	GeometryData g = flat_geometry(B);
	CHECK(check_isotropic(g, l).ok);

	CHECK(lagrangian_membership(yv(1, B), l));        // conormal y
	CHECK(!lagrangian_membership(yv(0, B), l));       // tangent y survives
	CHECK(lagrangian_membership(mul(xv(1, B), yv(0, B)), l)); // coefficient dies on L
	CHECK(lagrangian_membership(GradedSeries::zero(2, B), l));
	// one conormal factor suffices
	CHECK(lagrangian_membership(mul(yv(1, B), mul(yv(1, B), yv(0, B))), l));
}

TEST_CASE("restriction to L")
{
	LagrangianSpec l{2, 1u << 0};
	GradedSeries a = add(mul(xv(1, B), yv(0, B)), xv(0, B));
	CHECK(restrict_to_lagrangian(a, l) == xv(0, B));
}
