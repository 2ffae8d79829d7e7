#pragma once

#include <vector>

#include "fedlab/series.hpp"

namespace fedlab {

// Jets of the Poisson tensor pi^{ij}(x): a dim x dim antisymmetric matrix
// of y-free, hbar-free, form-free series. Convention: pi = (omega^{-1})^T,
// so omega_12 = 1 in 2D gives pi^{12} = +1 and {f,g} = f_x1 g_x2 - f_x2 g_x1.
class PoissonMatrix {
  public:
	PoissonMatrix(int dim, Bounds bounds, std::vector<GradedSeries> entries);

	int dim() const { return dim_; }
	const Bounds &bounds() const { return bounds_; }
	const GradedSeries &at(int i, int j) const
	{
		return entries_[static_cast<size_t>(i * dim_ + j)];
	}

  private:
	int dim_;
	Bounds bounds_;
	std::vector<GradedSeries> entries_;
};

// Fiberwise Moyal-Weyl product: sum_k (-i hbar/2)^k / k! pi^{i1 j1} ...
// pi^{ik jk} d^k_y a d^k_y b, with dx parts wedged through. The k-sum
// terminates at min(y-degree a, y-degree b).
GradedSeries moyal_mul(const GradedSeries &a, const GradedSeries &b, const PoissonMatrix &pi);

// Graded commutator [a,b] = a*b - (-1)^{qa qb} b*a, split by form parity.
GradedSeries moyal_commutator(const GradedSeries &a, const GradedSeries &b,
                              const PoissonMatrix &pi);

// (i/hbar)[u, a]. The bracket is computed with raised working bounds
// (total degree +2, hbar order +1) before the division so the result is
// exact at the ambient bounds; a surviving hbar^0 term is an internal error.
GradedSeries ad_i_over_hbar(const GradedSeries &u, const GradedSeries &a,
                            const PoissonMatrix &pi);

// Center test: no y dependence.
bool is_central(const GradedSeries &a);

// delta a = dx^i ^ da/dy^i
GradedSeries delta_op(const GradedSeries &a);

// delta^{-1}: (1/(p+q)) y^i (d/dx^i _| a) on each (p,q)-homogeneous piece,
// zero when p + q = 0.
GradedSeries delta_inv(const GradedSeries &a);

struct HodgeParts {
	GradedSeries dd_inv;   // delta delta^{-1} a
	GradedSeries d_inv_d;  // delta^{-1} delta a
	GradedSeries constant; // a_00: y-free 0-form part (x, hbar kept)
};

HodgeParts hodge_decompose(const GradedSeries &a);

} // namespace fedlab
