#pragma once

#include <random>

#include "fedlab/analysis.hpp"

// Shared fixtures and generators for the unit suites.
namespace testutil {

using namespace fedlab;

inline Scalar sc(int p, int q = 1) { return Scalar(Rational(p, q)); }
inline Scalar sci(int p, int q = 1) { return Scalar(Rational(0), Rational(p, q)); }

inline GradedSeries yv(int i, Bounds b, int dim = 2) { return GradedSeries::y_var(dim, b, i); }
inline GradedSeries xv(int i, Bounds b, int dim = 2) { return GradedSeries::x_var(dim, b, i); }

inline GradedSeries dx(int i, Bounds b, int dim = 2)
{
	GradedSeries s(dim, b);
	TermKey k;
	k.form = 1u << i;
	s.add_term(k, Scalar(1));
	return s;
}

// Standard 2D symplectic matrix omega_12 = w(x), omega_21 = -w(x).
inline std::vector<GradedSeries> omega2d(const GradedSeries &w, Bounds b)
{
	std::vector<GradedSeries> om(4, GradedSeries::zero(2, b));
	om[1] = w;
	om[2] = negate(w);
	return om;
}

inline std::vector<GradedSeries> omega2d_const(Bounds b)
{
	return omega2d(GradedSeries::constant(2, b, Scalar(1)), b);
}

// omega_12 = 1 + x1 x2
inline GradedSeries curved_w(Bounds b)
{
	GradedSeries w = GradedSeries::constant(2, b, Scalar(1));
	return add(w, mul(xv(0, b), xv(1, b)));
}

inline GeometryData flat_geometry(Bounds b)
{
	std::vector<GradedSeries> gamma(8, GradedSeries::zero(2, b));
	return make_geometry(2, b, omega2d_const(b), gamma);
}

inline GeometryData curved_geometry(Bounds b)
{
	std::vector<GradedSeries> om = omega2d(curved_w(b), b);
	std::vector<GradedSeries> flat(8, GradedSeries::zero(2, b));
	return make_geometry(2, b, om, symplectize(2, b, om, flat));
}

inline FedosovState flat_state(Bounds b)
{
	return solve_gamma(flat_geometry(b), WeylCurvatureSpec{2, b, {}});
}

inline FedosovState curved_state(Bounds b)
{
	return solve_gamma(curved_geometry(b), WeylCurvatureSpec{2, b, {}});
}

// Deterministic random series: a handful of terms with small exponents and
// coefficients, optionally restricted to 0-forms or real coefficients.
class SeriesGen {
  public:
	SeriesGen(std::uint64_t seed, int dim, Bounds bounds)
	    : rng_(seed), dim_(dim), bounds_(bounds)
	{
	}

	GradedSeries next(int terms, bool forms = true, bool real = false)
	{
		GradedSeries s(dim_, bounds_);
		std::uniform_int_distribution<int> small(0, 2);
		std::uniform_int_distribution<int> coeff(-4, 4);
		std::uniform_int_distribution<int> den(1, 3);
		for (int t = 0; t < terms; ++t) {
			TermKey k;
			for (int i = 0; i < dim_; ++i) {
				k.x = k.x.bumped(i, small(rng_));
				k.y = k.y.bumped(i, small(rng_));
			}
			k.hbar = static_cast<std::uint16_t>(small(rng_) % 2);
			if (forms) {
				std::uniform_int_distribution<int> fm(0, (1 << dim_) - 1);
				k.form = static_cast<std::uint32_t>(fm(rng_));
			}
			Scalar c(Rational(coeff(rng_), den(rng_)),
			         real ? Rational(0) : Rational(coeff(rng_), den(rng_)));
			s.add_term(k, c);
		}
		return s;
	}

  private:
	std::mt19937_64 rng_;
	int dim_;
	Bounds bounds_;
};

// Random polynomial x-jet of bounded degree with rational coefficients.
inline GradedSeries random_poly(std::mt19937_64 &rng, int dim, Bounds b, int degree)
{
	GradedSeries s(dim, b);
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (const MultiIndex &a : multi_indices_up_to(dim, degree)) {
		int c = coeff(rng);
		if (c == 0)
			continue;
		TermKey k;
		k.x = a;
		s.add_term(k, Scalar(c));
	}
	return s;
}

} // namespace testutil
