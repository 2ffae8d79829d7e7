#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "fedlab/error.hpp"

namespace fedlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact Gaussian rational re + im*i. All coefficient arithmetic in the
// engine runs over this field; there is no floating point anywhere.
class Scalar {
  public:
	Scalar() = default;
	Scalar(int v) : re_(v) {}
	Scalar(Integer v) : re_(std::move(v)) {}
	Scalar(Rational re) : re_(std::move(re)) {}
	Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

	static Scalar i() { return Scalar(Rational(0), Rational(1)); }

	const Rational &re() const { return re_; }
	const Rational &im() const { return im_; }

	bool is_zero() const { return re_ == 0 && im_ == 0; }
	bool is_real() const { return im_ == 0; }

	Scalar conj() const { return Scalar(re_, -im_); }

	// re^2 + im^2, the multiplicative norm.
	Rational norm() const { return re_ * re_ + im_ * im_; }

	Scalar operator-() const { return Scalar(-re_, -im_); }

	Scalar &operator+=(const Scalar &o)
	{
		re_ += o.re_;
		im_ += o.im_;
		return *this;
	}
	Scalar &operator-=(const Scalar &o)
	{
		re_ -= o.re_;
		im_ -= o.im_;
		return *this;
	}
	Scalar &operator*=(const Scalar &o)
	{
		Rational r = re_ * o.re_ - im_ * o.im_;
		Rational i = re_ * o.im_ + im_ * o.re_;
		re_ = std::move(r);
		im_ = std::move(i);
		return *this;
	}
	Scalar &operator/=(const Scalar &o)
	{
		Rational n = o.norm();
		if (n == 0)
			throw InputError("division by zero scalar");
		Scalar c = o.conj();
		*this *= c;
		re_ /= n;
		im_ /= n;
		return *this;
	}

	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
	friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
	friend bool operator==(const Scalar &a, const Scalar &b) = default;

  private:
	Rational re_{0};
	Rational im_{0};
};

// n! as an exact rational.
inline Rational factorial(unsigned n)
{
	Integer f = 1;
	for (unsigned k = 2; k <= n; ++k)
		f *= k;
	return Rational(f);
}

// Canonical text form: "0", "p/q", "p/q i", "a+b i", "a-b i".
std::string to_string(const Scalar &s);
std::string to_string(const Rational &r);

} // namespace fedlab
