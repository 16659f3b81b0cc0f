#pragma once

#include <algorithm>
#include <cassert>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "algfun/errors.hpp"
#include "algfun/rational.hpp"

namespace algfun {

template <class R>
class Poly;

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational divide_exact(const Rational& a, const Rational& b) {
    assert(b != 0);
    return a / b;
  }
};

/// Dense univariate polynomial over an exact ring R, lowest degree first.
/// Nesting Poly<Poly<Rational>> gives bivariate polynomials and so on; the
/// outermost variable is always the one the operations act on.
template <class R>
class Poly {
 public:
  using traits = ring_traits<R>;

  Poly() = default;
  explicit Poly(R c) : c_{std::move(c)} { trim(); }
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(traits::one()); }
  static Poly variable() { return monomial(1, traits::one()); }
  static Poly monomial(int k, R coef) {
    std::vector<R> c(static_cast<size_t>(k) + 1, traits::zero());
    c.back() = std::move(coef);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<R>& coeffs() const { return c_; }

  /// Coefficient of x^k (zero beyond degree).
  const R& operator[](int k) const {
    static const R kZero = traits::zero();
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
  }

  const R& lc() const {
    assert(!c_.empty());
    return c_.back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), traits::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, traits::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const R& s) {
    Poly r = a;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  /// Multiply by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<R> c(static_cast<size_t>(k), traits::zero());
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<R> c(c_.size() - 1, traits::zero());
    for (size_t i = 1; i < c_.size(); ++i) {
      R k = traits::zero();
      for (size_t j = 0; j < i; ++j) k = k + traits::one();  // i as ring element
      c[i - 1] = c_[i] * k;
    }
    return Poly(std::move(c));
  }

  Poly pow(int e) const {
    assert(e >= 0);
    Poly r = one();
    Poly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Horner evaluation in the coefficient ring.
  R eval(const R& x) const {
    R acc = traits::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  std::vector<R> c_;
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }
};

/// Exact division of polynomials known to divide evenly. Long division over
/// the coefficient ring; the remainder is required to vanish.
template <class R>
Poly<R> divide_exact_poly(const Poly<R>& a, const Poly<R>& b) {
  using T = ring_traits<R>;
  if (b.is_zero()) throw error("exact division by zero polynomial");
  if (a.is_zero()) return Poly<R>();
  int da = a.degree(), db = b.degree();
  if (da < db) throw error("exact polynomial division with smaller dividend");
  std::vector<R> q(static_cast<size_t>(da - db) + 1, T::zero());
  Poly<R> rem = a;
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    R coef = T::divide_exact(rem.lc(), b.lc());
    q[static_cast<size_t>(k)] = coef;
    rem = rem - (b * coef).shifted(k);
  }
  if (!rem.is_zero()) throw error("polynomial division was not exact");
  return Poly<R>(std::move(q));
}

template <class R>
struct ring_traits<Poly<R>> {
  static Poly<R> zero() { return Poly<R>(); }
  static Poly<R> one() { return Poly<R>::one(); }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static Poly<R> divide_exact(const Poly<R>& a, const Poly<R>& b) {
    return divide_exact_poly(a, b);
  }
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
  using T = ring_traits<R>;
  assert(!b.is_zero());
  int db = b.degree();
  Poly<R> rem = a;
  int e = (a.degree() >= db) ? a.degree() - db + 1 : 0;
  const R& lcb = b.lc();
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Poly<R> t = (b * rem.lc()).shifted(k);
    rem = rem * lcb - t;
    --e;
  }
  R scale = T::one();
  for (int i = 0; i < e; ++i) scale = scale * lcb;
  Poly<R> out = rem;
  return out * scale;
}

namespace detail {
template <class R>
R ring_pow(const R& a, int e) {
  using T = ring_traits<R>;
  R r = T::one();
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}
}  // namespace detail

/// Resultant via the subresultant pseudo-remainder sequence (Brown's
/// algorithm); exact over any integral domain R with exact division.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  using T = ring_traits<R>;
  if (a.is_zero() || b.is_zero()) return T::zero();
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    std::swap(a, b);
  }
  if (a.degree() == 0) return T::one();  // both constant: empty Sylvester matrix
  if (b.degree() == 0) {
    R r = detail::ring_pow(b.lc(), a.degree());
    return negate ? -r : r;
  }
  R g = T::one(), h = T::one();
  while (true) {
    int d = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    Poly<R> rem = pseudo_rem(a, b);
    a = b;
    R denom = g * detail::ring_pow(h, d);
    b = rem.is_zero() ? Poly<R>() : [&] {
      std::vector<R> c;
      c.reserve(static_cast<size_t>(rem.degree()) + 1);
      for (int i = 0; i <= rem.degree(); ++i) c.push_back(T::divide_exact(rem[i], denom));
      return Poly<R>(std::move(c));
    }();
    g = a.lc();
    if (d > 0) h = T::divide_exact(detail::ring_pow(g, d), detail::ring_pow(h, d - 1));
    if (b.is_zero()) return T::zero();  // common divisor of positive degree
    if (b.degree() == 0) {
      int e = a.degree();
      R r = T::divide_exact(detail::ring_pow(b.lc(), e), detail::ring_pow(h, e - 1));
      return negate ? -r : r;
    }
  }
}

// ---- field-coefficient helpers (UniPoly = Poly<Rational>) ----

using UniPoly = Poly<Rational>;

inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  UniPoly rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    Rational coef = rem.lc() / b.lc();
    q[static_cast<size_t>(k)] = coef;
    rem = rem - (b * coef).shifted(k);
  }
  return {UniPoly(std::move(q)), rem};
}

inline UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.lc());
}

inline UniPoly gcd_monic(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return make_monic(a);
}

/// Product of the distinct irreducible factors: p / gcd(p, p'), monic.
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw error("squarefree part of zero polynomial");
  if (p.degree() == 0) return UniPoly::one();
  UniPoly g = gcd_monic(p, p.derivative());
  auto [q, r] = divmod(p, g);
  assert(r.is_zero());
  (void)r;
  return make_monic(q);
}

inline std::complex<double> eval_at(const UniPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + to_double(p[i]);
  return acc;
}

inline Rational eval_at(const UniPoly& p, const Rational& z) { return p.eval(z); }

/// Render with terms in descending degree, e.g. "z^2 - 3*z + 1/2".
inline std::string to_string(const UniPoly& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p[k];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    bool unit = (a == 1) && k > 0;
    if (!unit) out += to_string(a);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace algfun
