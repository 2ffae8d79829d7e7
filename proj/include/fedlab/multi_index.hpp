#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fedlab/error.hpp"
#include "fedlab/scalar.hpp"

namespace fedlab {

// Hard cap on 2n; keeps multi-indices POD and map keys cheap.
constexpr int kMaxDim = 16;

// Exponent vector of fixed capacity; entries beyond the ambient dimension
// stay zero. All coordinate indices in the C++ API are 0-based.
struct MultiIndex {
	std::array<std::uint8_t, kMaxDim> e{};

	int degree() const
	{
		int s = 0;
		for (auto v : e)
			s += v;
		return s;
	}

	bool is_zero() const
	{
		for (auto v : e)
			if (v)
				return false;
		return true;
	}

	std::uint8_t operator[](int i) const { return e[static_cast<size_t>(i)]; }

	static MultiIndex unit(int i)
	{
		MultiIndex m;
		m.e[static_cast<size_t>(i)] = 1;
		return m;
	}

	MultiIndex bumped(int i, int by) const
	{
		MultiIndex m = *this;
		int v = m.e[static_cast<size_t>(i)] + by;
		if (v < 0 || v > 255)
			throw InternalError("multi-index exponent out of range");
		m.e[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v);
		return m;
	}

	friend MultiIndex operator+(const MultiIndex &a, const MultiIndex &b)
	{
		MultiIndex m;
		for (size_t k = 0; k < kMaxDim; ++k) {
			int v = a.e[k] + b.e[k];
			if (v > 255)
				throw InternalError("multi-index exponent overflow");
			m.e[k] = static_cast<std::uint8_t>(v);
		}
		return m;
	}

	auto operator<=>(const MultiIndex &) const = default;
};

// alpha! = prod_i alpha_i!
inline Rational multi_factorial(const MultiIndex &a)
{
	Rational f = 1;
	for (auto v : a.e)
		f *= factorial(v);
	return f;
}

// True when every nonzero exponent sits on a coordinate in `mask`.
inline bool supported_in(const MultiIndex &a, std::uint32_t mask)
{
	for (size_t k = 0; k < kMaxDim; ++k)
		if (a.e[k] && !(mask & (1u << k)))
			return false;
	return true;
}

// All multi-indices of the given dimension with degree <= max_degree,
// in canonical (map) order. Used by probe loops and table extraction.
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree);

// "(2,0)" style rendering restricted to the ambient dimension.
std::string to_string(const MultiIndex &a, int dim);

} // namespace fedlab
