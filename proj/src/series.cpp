#include "fedlab/series.hpp"

#include <sstream>

namespace fedlab {

//------------------------------ multi-index ------------------------------

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree)
{
	std::vector<MultiIndex> out;
	MultiIndex cur;
	// depth-first over coordinates, canonical order comes from the final sort
	struct Rec {
		int dim, max_degree;
		std::vector<MultiIndex> *out;
		void walk(MultiIndex &m, int coord, int left)
		{
			if (coord == dim) {
				out->push_back(m);
				return;
			}
			for (int v = 0; v <= left; ++v) {
				m.e[static_cast<size_t>(coord)] = static_cast<std::uint8_t>(v);
				walk(m, coord + 1, left - v);
			}
			m.e[static_cast<size_t>(coord)] = 0;
		}
	} rec{dim, max_degree, &out};
	rec.walk(cur, 0, max_degree);
	std::sort(out.begin(), out.end());
	return out;
}

std::string to_string(const MultiIndex &a, int dim)
{
	std::ostringstream os;
	os << '(';
	for (int i = 0; i < dim; ++i) {
		if (i)
			os << ',';
		os << int(a[i]);
	}
	os << ')';
	return os.str();
}

//-------------------------------- scalar ---------------------------------

std::string to_string(const Rational &r)
{
	std::ostringstream os;
	os << r;
	return os.str();
}

std::string to_string(const Scalar &s)
{
	if (s.is_zero())
		return "0";
	std::ostringstream os;
	if (s.re() != 0) {
		os << s.re();
		if (s.im() > 0)
			os << '+' << s.im() << " i";
		else if (s.im() < 0)
			os << '-' << -s.im() << " i";
	} else {
		os << s.im() << " i";
	}
	return os.str();
}

//------------------------------ series core ------------------------------

GradedSeries::GradedSeries(int dim, Bounds bounds) : dim_(dim), bounds_(bounds)
{
	if (dim < 1 || dim > kMaxDim)
		throw InputError("series dimension out of range");
}

void GradedSeries::add_term(const TermKey &key, const Scalar &c)
{
	if (c.is_zero())
		return;
	int xd = key.x.degree();
	int td = key.total_degree();
	if (xd > bounds_.x_order)
		return;
	if (td > bounds_.total_degree)
		return;
	if (key.hbar > bounds_.hbar_order)
		return;
	if (xd + td > bounds_.weight_cap)
		return;
	auto it = terms_.find(key);
	if (it == terms_.end()) {
		terms_.emplace(key, c);
	} else {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Scalar GradedSeries::coeff(const TermKey &key) const
{
	auto it = terms_.find(key);
	return it == terms_.end() ? Scalar() : it->second;
}

GradedSeries GradedSeries::constant(int dim, Bounds bounds, const Scalar &c)
{
	GradedSeries s(dim, bounds);
	s.add_term(TermKey{}, c);
	return s;
}

GradedSeries GradedSeries::y_var(int dim, Bounds bounds, int i)
{
	GradedSeries s(dim, bounds);
	TermKey k;
	k.y = MultiIndex::unit(i);
	s.add_term(k, Scalar(1));
	return s;
}

GradedSeries GradedSeries::x_var(int dim, Bounds bounds, int i)
{
	GradedSeries s(dim, bounds);
	TermKey k;
	k.x = MultiIndex::unit(i);
	s.add_term(k, Scalar(1));
	return s;
}

GradedSeries GradedSeries::hbar_power(int dim, Bounds bounds, int m, const Scalar &c)
{
	GradedSeries s(dim, bounds);
	TermKey k;
	k.hbar = static_cast<std::uint16_t>(m);
	s.add_term(k, c);
	return s;
}

//------------------------------- ring ops --------------------------------

static void require_same_dim(const GradedSeries &a, const GradedSeries &b)
{
	if (a.dim() != b.dim())
		throw InputError("series dimension mismatch");
}

GradedSeries add(const GradedSeries &a, const GradedSeries &b)
{
	require_same_dim(a, b);
	GradedSeries out(a.dim(), meet(a.bounds(), b.bounds()));
	for (const auto &[k, c] : a.terms())
		out.add_term(k, c);
	for (const auto &[k, c] : b.terms())
		out.add_term(k, c);
	return out;
}

GradedSeries sub(const GradedSeries &a, const GradedSeries &b)
{
	return add(a, negate(b));
}

GradedSeries negate(const GradedSeries &a)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms())
		out.add_term(k, -c);
	return out;
}

GradedSeries scale(const GradedSeries &a, const Scalar &c)
{
	GradedSeries out(a.dim(), a.bounds());
	if (c.is_zero())
		return out;
	for (const auto &[k, v] : a.terms())
		out.add_term(k, v * c);
	return out;
}

int wedge_insert_sign(std::uint32_t mask, int i)
{
	std::uint32_t bit = 1u << i;
	if (mask & bit)
		return 0;
	int below = __builtin_popcount(mask & (bit - 1));
	return (below & 1) ? -1 : 1;
}

int wedge_merge_sign(std::uint32_t j1, std::uint32_t j2)
{
	if (j1 & j2)
		return 0;
	// inversions: pairs (i in j1, j in j2) with j < i
	int inv = 0;
	std::uint32_t m = j1;
	while (m) {
		int i = __builtin_ctz(m);
		m &= m - 1;
		inv += __builtin_popcount(j2 & ((1u << i) - 1));
	}
	return (inv & 1) ? -1 : 1;
}

GradedSeries mul(const GradedSeries &a, const GradedSeries &b)
{
	require_same_dim(a, b);
	GradedSeries out(a.dim(), meet(a.bounds(), b.bounds()));
	const Bounds &bd = out.bounds();
	for (const auto &[ka, ca] : a.terms()) {
		for (const auto &[kb, cb] : b.terms()) {
			int sign = wedge_merge_sign(ka.form, kb.form);
			if (sign == 0)
				continue;
			int m = ka.hbar + kb.hbar;
			if (m > bd.hbar_order)
				continue;
			int td = 2 * m + ka.y.degree() + kb.y.degree();
			int xd = ka.x.degree() + kb.x.degree();
			if (td > bd.total_degree || xd > bd.x_order || xd + td > bd.weight_cap)
				continue;
			TermKey k;
			k.x = ka.x + kb.x;
			k.y = ka.y + kb.y;
			k.hbar = static_cast<std::uint16_t>(m);
			k.form = ka.form | kb.form;
			Scalar c = ca * cb;
			if (sign < 0)
				c = -c;
			out.add_term(k, c);
		}
	}
	return out;
}

GradedSeries partial_x(const GradedSeries &a, int i)
{
	if (i < 0 || i >= a.dim())
		throw InputError("partial_x: index out of range");
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms()) {
		int e = k.x[i];
		if (e == 0)
			continue;
		TermKey kk = k;
		kk.x = k.x.bumped(i, -1);
		out.add_term(kk, c * Scalar(e));
	}
	return out;
}

GradedSeries partial_y(const GradedSeries &a, int i)
{
	if (i < 0 || i >= a.dim())
		throw InputError("partial_y: index out of range");
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms()) {
		int e = k.y[i];
		if (e == 0)
			continue;
		TermKey kk = k;
		kk.y = k.y.bumped(i, -1);
		out.add_term(kk, c * Scalar(e));
	}
	return out;
}

GradedSeries truncate(const GradedSeries &a, const Bounds &bounds)
{
	GradedSeries out(a.dim(), bounds);
	for (const auto &[k, c] : a.terms())
		out.add_term(k, c);
	return out;
}

std::optional<int> filtration_degree(const GradedSeries &a)
{
	std::optional<int> best;
	for (const auto &[k, c] : a.terms()) {
		int d = k.total_degree();
		if (!best || d < *best)
			best = d;
	}
	return best;
}

std::map<std::pair<int, std::uint32_t>, Scalar> eval_at_origin(const GradedSeries &a)
{
	std::map<std::pair<int, std::uint32_t>, Scalar> out;
	for (const auto &[k, c] : a.terms())
		if (k.x.is_zero() && k.y.is_zero())
			out[{k.hbar, k.form}] = c;
	return out;
}

GradedSeries mul_hbar(const GradedSeries &a, int k)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[key, c] : a.terms()) {
		TermKey kk = key;
		kk.hbar = static_cast<std::uint16_t>(key.hbar + k);
		out.add_term(kk, c);
	}
	return out;
}

GradedSeries div_hbar(const GradedSeries &a)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[key, c] : a.terms()) {
		if (key.hbar == 0)
			throw InternalError("div_hbar: term without hbar factor");
		TermKey kk = key;
		kk.hbar = static_cast<std::uint16_t>(key.hbar - 1);
		out.add_term(kk, c);
	}
	return out;
}

bool y_free(const GradedSeries &a)
{
	for (const auto &[k, c] : a.terms())
		if (!k.y.is_zero())
			return false;
	return true;
}

bool form_free(const GradedSeries &a)
{
	for (const auto &[k, c] : a.terms())
		if (k.form)
			return false;
	return true;
}

int max_y_degree(const GradedSeries &a)
{
	int m = 0;
	for (const auto &[k, c] : a.terms())
		m = std::max(m, k.y.degree());
	return m;
}

int max_form_degree(const GradedSeries &a)
{
	int m = 0;
	for (const auto &[k, c] : a.terms())
		m = std::max(m, k.form_degree());
	return m;
}

GradedSeries form_part(const GradedSeries &a, int q)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms())
		if (k.form_degree() == q)
			out.add_term(k, c);
	return out;
}

GradedSeries hbar_part(const GradedSeries &a, int m)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms())
		if (k.hbar == m)
			out.add_term(k, c);
	return out;
}

GradedSeries hbar_parity_part(const GradedSeries &a, int parity)
{
	GradedSeries out(a.dim(), a.bounds());
	for (const auto &[k, c] : a.terms())
		if ((k.hbar & 1) == parity)
			out.add_term(k, c);
	return out;
}

std::string to_string(const GradedSeries &a)
{
	if (a.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[k, c] : a.terms()) {
		if (!first)
			os << " + ";
		first = false;
		os << '(' << to_string(c) << ')';
		for (int i = 0; i < a.dim(); ++i)
			for (int e = 0; e < k.x[i]; ++e)
				os << "*x" << (i + 1);
		for (int i = 0; i < a.dim(); ++i)
			for (int e = 0; e < k.y[i]; ++e)
				os << "*y" << (i + 1);
		for (int e = 0; e < k.hbar; ++e)
			os << "*h";
		for (int i = 0; i < a.dim(); ++i)
			if (k.form & (1u << i))
				os << "*dx" << (i + 1);
	}
	return os.str();
}

} // namespace fedlab
