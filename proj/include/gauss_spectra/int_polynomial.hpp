#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gauss_spectra/errors.hpp"
#include "gauss_spectra/numeric.hpp"

namespace gauss_spectra {

// Dense integer polynomial, coefficients stored constant-first and trimmed
// (no trailing zeros).  The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Int> constant_first)
      : c_(constant_first) {
    trim();
  }
  explicit IntPolynomial(std::vector<Int> constant_first)
      : c_(std::move(constant_first)) {
    trim();
  }

  static IntPolynomial constant(Int v);
  static IntPolynomial variable();             // x
  static IntPolynomial monomial(int degree, Int coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
  }
  const std::vector<Int>& coefficients() const { return c_; }

  IntPolynomial derivative() const;
  Int operator()(const Int& at) const;          // Horner

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Int& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Int& s) { return a *= s; }
  friend IntPolynomial operator*(const Int& s, IntPolynomial a) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  // Space-separated coefficients, constant first ("0 3 0 1" for x^3+3x).
  // The zero polynomial prints as "0".
  std::string to_string() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Multiplicity of 0 as a root: the index of the lowest nonzero coefficient.
// Throws ZeroPolynomial on the zero polynomial.
int m0(const IntPolynomial& p);

// Free-function spellings used alongside the member forms.
inline IntPolynomial derivative(const IntPolynomial& p) { return p.derivative(); }
inline Int eval_at(const IntPolynomial& p, const Int& at) { return p(at); }

// Quotient a / b when the division is exact over the integers, nullopt
// otherwise.  b must be nonzero.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a,
                                            const IntPolynomial& b);

}  // namespace gauss_spectra
