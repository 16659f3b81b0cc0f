#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "algfun/poly.hpp"

namespace algfun {

/// Element of Q(z): reduced fraction of polynomials with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UniPoly::one()) {}
  RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("rational function with zero denominator");
    reduce();
  }
  explicit RationalFunction(UniPoly num) : num_(std::move(num)), den_(UniPoly::one()) {}
  explicit RationalFunction(const Rational& c) : num_(UniPoly(c)), den_(UniPoly::one()) {}

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(UniPoly::one()); }
  static RationalFunction variable() { return RationalFunction(UniPoly::variable()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == UniPoly::one() && den_ == UniPoly::one(); }
  bool is_polynomial() const { return den_ == UniPoly::one(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
  }

  std::complex<double> eval(std::complex<double> z) const {
    return eval_at(num_, z) / eval_at(den_, z);
  }

  /// Exact evaluation; nullopt at a pole.
  std::optional<Rational> eval(const Rational& z) const {
    Rational d = den_.eval(z);
    if (d == 0) return std::nullopt;
    return num_.eval(z) / d;
  }

 private:
  UniPoly num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = UniPoly::one();
      return;
    }
    UniPoly g = gcd_monic(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rational lc = den_.lc();
    if (lc != 1) {
      den_ = den_ * (Rational(1) / lc);
      num_ = num_ * (Rational(1) / lc);
    }
  }
};

inline std::string to_string(const RationalFunction& f, const std::string& var = "z") {
  if (f.is_polynomial()) return to_string(f.num(), var);
  std::string n = to_string(f.num(), var);
  std::string d = to_string(f.den(), var);
  return "(" + n + ")/(" + d + ")";
}

}  // namespace algfun
