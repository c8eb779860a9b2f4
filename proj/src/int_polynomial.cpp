#include "gauss_spectra/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gauss_spectra {

IntPolynomial IntPolynomial::constant(Int v) {
  IntPolynomial p;
  p.c_.push_back(std::move(v));
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::variable() { return monomial(1); }

IntPolynomial IntPolynomial::monomial(int degree, Int coeff) {
  IntPolynomial p;
  if (coeff != 0 && degree >= 0) {
    p.c_.assign(degree + 1, Int(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

IntPolynomial IntPolynomial::derivative() const {
  IntPolynomial d;
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = Int(i) * c_[i];
  d.trim();
  return d;
}

Int IntPolynomial::operator()(const Int& at) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Int& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << c_[i];
  }
  return os.str();
}

int m0(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("zero-root multiplicity of the zero polynomial");
  int i = 0;
  while (p.coeff(i) == 0) ++i;
  return i;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a,
                                            const IntPolynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<Int> rem(a.coefficients());
  std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
  const Int& lead = b.coeff(b.degree());
  for (int d = a.degree(); d >= b.degree(); --d) {
    Int& head = rem[d];
    if (head == 0) continue;
    if (head % lead != 0) return std::nullopt;
    Int q = head / lead;
    int shift = d - b.degree();
    quot[shift] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[shift + i] -= q * b.coeff(i);
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

}  // namespace gauss_spectra
