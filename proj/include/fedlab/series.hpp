#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "fedlab/multi_index.hpp"
#include "fedlab/scalar.hpp"

namespace fedlab {

// Truncation bounds of the graded ring. hbar counts double: the total
// degree of a term is 2m + |beta|. The weight of a term is |alpha| + 2m +
// |beta|; no operation in the engine lowers it except d_x (by one) and the
// hbar division inside (i/hbar)[.,.] (by two, absorbed there by headroom),
// so computing under a weight cap keeps every stored coefficient exact.
struct Bounds {
	int x_order;      // max |alpha| stored
	int total_degree; // max 2m + |beta|
	int hbar_order;   // max m
	int weight_cap = 1 << 20; // max |alpha| + 2m + |beta|

	friend bool operator==(const Bounds &, const Bounds &) = default;
};

inline Bounds meet(const Bounds &a, const Bounds &b)
{
	return Bounds{std::min(a.x_order, b.x_order),
	              std::min(a.total_degree, b.total_degree),
	              std::min(a.hbar_order, b.hbar_order),
	              std::min(a.weight_cap, b.weight_cap)};
}

inline Bounds with_weight_cap(Bounds b, int cap)
{
	b.weight_cap = cap;
	return b;
}

// Default policy for a target hbar order K: the recursions raise the
// filtration degree by one per step, and the base-point coefficients of
// a degree-d component consume at most d + 2 x-orders of the input jets.
inline Bounds default_bounds(int hbar_order)
{
	int d = 2 * hbar_order + 2;
	return Bounds{d + 2, d, hbar_order};
}

// One monomial x^alpha y^beta hbar^m dx^J; J is a bitmask over coordinates,
// i.e. the strictly increasing antisymmetric representation.
struct TermKey {
	MultiIndex x;
	MultiIndex y;
	std::uint16_t hbar = 0;
	std::uint32_t form = 0;

	int total_degree() const { return 2 * hbar + y.degree(); }
	int form_degree() const { return __builtin_popcount(form); }

	auto operator<=>(const TermKey &) const = default;
};

// Element of the truncated ring C[x] (x) W (x) Lambda: a sparse map from
// term keys to Gaussian-rational coefficients. Immutable in spirit: all
// operations below are pure functions returning fresh values.
class GradedSeries {
  public:
	GradedSeries(int dim, Bounds bounds);

	int dim() const { return dim_; }
	const Bounds &bounds() const { return bounds_; }
	const std::map<TermKey, Scalar> &terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }

	// Accumulates c into the coefficient at `key`; silently culls terms
	// outside the bounds and never stores explicit zeros.
	void add_term(const TermKey &key, const Scalar &c);

	Scalar coeff(const TermKey &key) const;

	static GradedSeries zero(int dim, Bounds bounds) { return GradedSeries(dim, bounds); }
	static GradedSeries constant(int dim, Bounds bounds, const Scalar &c);
	// y^i as a series (0-based coordinate).
	static GradedSeries y_var(int dim, Bounds bounds, int i);
	// x^i as a series (0-based coordinate).
	static GradedSeries x_var(int dim, Bounds bounds, int i);
	// hbar^m * c
	static GradedSeries hbar_power(int dim, Bounds bounds, int m, const Scalar &c);

	// Equality of content (dimension and coefficients; bounds not compared).
	friend bool operator==(const GradedSeries &a, const GradedSeries &b)
	{
		return a.dim_ == b.dim_ && a.terms_ == b.terms_;
	}

  private:
	int dim_;
	Bounds bounds_;
	std::map<TermKey, Scalar> terms_;
};

//------------------------------- ring ops --------------------------------

GradedSeries add(const GradedSeries &a, const GradedSeries &b);
GradedSeries sub(const GradedSeries &a, const GradedSeries &b);
GradedSeries negate(const GradedSeries &a);
GradedSeries scale(const GradedSeries &a, const Scalar &c);

// Commutative product with antisymmetric sign-tracked wedge on the dx parts.
GradedSeries mul(const GradedSeries &a, const GradedSeries &b);

// Formal partials; 0-based coordinate, throws InputError when out of range.
GradedSeries partial_x(const GradedSeries &a, int i);
GradedSeries partial_y(const GradedSeries &a, int i);

GradedSeries truncate(const GradedSeries &a, const Bounds &bounds);

// Minimal total degree 2m+|beta| over stored terms; nullopt on the zero
// series (the spec wants the undefined case signalled distinctly).
std::optional<int> filtration_degree(const GradedSeries &a);

// Coefficients with alpha = 0 and beta = 0 only, keyed by (m, form mask).
std::map<std::pair<int, std::uint32_t>, Scalar> eval_at_origin(const GradedSeries &a);

// hbar^k * a and a / hbar; division throws InternalError when a term with
// m = 0 survives (the callers divide only elements of the ideal hbar*W).
GradedSeries mul_hbar(const GradedSeries &a, int k);
GradedSeries div_hbar(const GradedSeries &a);

// True when no term contains a y factor (the center test).
bool y_free(const GradedSeries &a);
// True when no term carries a dx factor.
bool form_free(const GradedSeries &a);

int max_y_degree(const GradedSeries &a);
int max_form_degree(const GradedSeries &a);

// Keeps only terms whose form degree is q.
GradedSeries form_part(const GradedSeries &a, int q);
// Keeps only terms with hbar power m (as a series, the hbar factor stays).
GradedSeries hbar_part(const GradedSeries &a, int m);
// Even/odd split by hbar power.
GradedSeries hbar_parity_part(const GradedSeries &a, int parity);

// Sign of dx^{j1} wedged onto the sorted product: (-1)^{#J below i}, or 0
// when i already occurs in J.
int wedge_insert_sign(std::uint32_t mask, int i);
// Sign of the concatenation dx^{J1} ^ dx^{J2}; 0 when the masks overlap.
int wedge_merge_sign(std::uint32_t j1, std::uint32_t j2);

std::string to_string(const GradedSeries &a);

} // namespace fedlab
