#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algfun/poly.hpp"
#include "algfun/ratfun.hpp"

namespace algfun {

/// Bivariate polynomial over Q, outer variable w, inner variable z.
using BiDense = Poly<UniPoly>;

using Complex = std::complex<double>;

/// Complex univariate polynomial, lowest degree first.
using CPoly = std::vector<Complex>;

namespace detail {

inline uint64_t fnv1a(const std::string& s, uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace detail

/// Defining polynomial P(z,w), monic in w with coefficients in Q(z).
/// `excluded` is the monic squarefree polynomial whose roots are the z-values
/// where the pre-normalization leading coefficient or any coefficient
/// denominator vanishes; the surface is punctured there.
class BiPoly {
 public:
  BiPoly(std::vector<RationalFunction> coeffs, UniPoly excluded)
      : coeffs_(std::move(coeffs)), excluded_(std::move(excluded)) {
    if (coeffs_.size() < 2) throw error("defining polynomial must have w-degree >= 1");
    if (!coeffs_.back().is_one()) throw error("BiPoly must be monic in w");
    rebuild_cache();
  }

  int w_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  const RationalFunction& coeff(int j) const { return coeffs_[static_cast<size_t>(j)]; }
  const UniPoly& excluded() const { return excluded_; }
  uint64_t id() const { return id_; }

  /// Common-denominator form: cleared = den_all(z) * P(z,w) in Q[z][w].
  const BiDense& cleared() const { return cleared_; }
  const UniPoly& den_all() const { return den_all_; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// P(z0, w0) with plain Horner in w; coefficients evaluated exactly enough
  /// for residual tests (num/den Horner in z).
  Complex eval(Complex z0, Complex w0) const {
    Complex acc = 0.0;
    for (int j = w_degree(); j >= 0; --j) acc = acc * w0 + coeffs_[static_cast<size_t>(j)].eval(z0);
    return acc;
  }

  /// dP/dz at fixed w.
  Complex eval_dz(Complex z0, Complex w0) const {
    Complex acc = 0.0;
    for (int j = w_degree(); j >= 0; --j)
      acc = acc * w0 + coeffs_[static_cast<size_t>(j)].derivative().eval(z0);
    return acc;
  }

  /// dP/dw.
  Complex eval_dw(Complex z0, Complex w0) const {
    Complex acc = 0.0;
    for (int j = w_degree(); j >= 1; --j)
      acc = acc * w0 + static_cast<double>(j) * coeffs_[static_cast<size_t>(j)].eval(z0);
    return acc;
  }

  std::string canonical_string() const;

 private:
  std::vector<RationalFunction> coeffs_;
  UniPoly excluded_;
  BiDense cleared_;
  UniPoly den_all_;
  uint64_t id_ = 0;

  void rebuild_cache() {
    // lcm of denominators (denominators are monic; pairwise lcm via gcd)
    UniPoly l = UniPoly::one();
    for (const auto& c : coeffs_) {
      const UniPoly& d = c.den();
      UniPoly g = gcd_monic(l, d);
      l = divmod(l * d, g).first;
    }
    den_all_ = l;
    std::vector<UniPoly> cc;
    cc.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      UniPoly q = divmod(c.num() * den_all_, c.den()).first;
      cc.push_back(std::move(q));
    }
    cleared_ = BiDense(std::move(cc));
    id_ = detail::fnv1a(canonical_string());
  }
};

inline std::string to_string(const BiPoly& p, const std::string& wvar = "w",
                             const std::string& zvar = "z") {
  std::string out;
  for (int j = p.w_degree(); j >= 0; --j) {
    const RationalFunction& c = p.coeff(j);
    if (c.is_zero()) continue;
    std::string term;
    if (j == 0) {
      term = to_string(c, zvar);
    } else {
      std::string v = wvar + (j > 1 ? "^" + std::to_string(j) : "");
      if (c.is_one()) {
        term = v;
      } else if (c.is_polynomial() && c.num().degree() == 0) {
        term = to_string(c.num()[0]) + "*" + v;
      } else {
        term = "(" + to_string(c, zvar) + ")*" + v;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string BiPoly::canonical_string() const {
  std::string s = std::to_string(w_degree()) + ";";
  for (const auto& c : coeffs_) s += to_string(c) + ";";
  return s;
}

/// Normalize an exact bivariate polynomial to the monic-in-w form, recording
/// the zeros of the leading coefficient as excluded points.
inline BiPoly normalize_monic(const BiDense& raw) {
  if (raw.is_zero()) throw error("zero polynomial is not a valid definition");
  if (raw.degree() < 1) throw error("defining polynomial must have w-degree >= 1");
  const UniPoly& lead = raw.lc();
  RationalFunction lead_rf{lead};
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(static_cast<size_t>(raw.degree()) + 1);
  for (int j = 0; j <= raw.degree(); ++j)
    coeffs.emplace_back(RationalFunction(raw[j]) / lead_rf);
  UniPoly excluded = lead.degree() > 0 ? squarefree_part(lead) : UniPoly::one();
  return BiPoly(std::move(coeffs), std::move(excluded));
}

/// Normalize a coefficient list c_0..c_n of rational functions (c_n nonzero):
/// divides through by c_n and collects leading-coefficient zeros plus all
/// coefficient-denominator zeros into the excluded polynomial.
inline BiPoly normalize_monic(const std::vector<RationalFunction>& raw) {
  if (raw.size() < 2) throw error("defining polynomial must have w-degree >= 1");
  const RationalFunction& lead = raw.back();
  if (lead.is_zero()) throw error("zero leading coefficient in w");
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(raw.size());
  UniPoly excl_product = UniPoly::one();
  if (lead.num().degree() > 0) excl_product = excl_product * lead.num();
  for (const auto& c : raw) {
    if (c.den().degree() > 0) excl_product = excl_product * c.den();
    coeffs.push_back(c / lead);
  }
  for (const auto& c : coeffs)
    if (c.den().degree() > 0) excl_product = excl_product * c.den();
  UniPoly excluded =
      excl_product.degree() > 0 ? squarefree_part(excl_product) : UniPoly::one();
  return BiPoly(std::move(coeffs), std::move(excluded));
}

/// Discriminant of P with respect to w, as an exact element of Q(z) with the
/// classical sign: disc = (-1)^(n(n-1)/2) Res_w(P, dP/dw) for monic P, so
/// that disc(z0) equals prod_{i<j} (w_i - w_j)^2 over the fiber at z0.
inline RationalFunction discriminant(const BiPoly& p) {
  const int n = p.w_degree();
  if (n == 1) return RationalFunction::one();
  UniPoly res = resultant(p.cleared(), p.cleared().derivative());
  // cleared = D*P, so Res(D*P, D*P_w) = D^(2n-1) Res(P, P_w).
  UniPoly dpow = p.den_all().pow(2 * n - 1);
  bool neg = ((n * (n - 1) / 2) % 2) != 0;
  RationalFunction disc{neg ? -res : res, dpow};
  return disc;
}

namespace detail {

/// Kahan-compensated accumulation of complex terms.
struct CompensatedSum {
  Complex s{0.0, 0.0}, c{0.0, 0.0};
  void add(Complex x) {
    Complex y = x - c;
    Complex t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace detail

/// Specialize P at z = z0: the degree-n fiber polynomial in w. Rejects base
/// points at (or numerically indistinguishable from) an excluded z-value.
inline CPoly fiber_polynomial(const BiPoly& p, Complex z0) {
  if (p.excluded().degree() > 0) {
    double e = std::abs(eval_at(p.excluded(), z0));
    if (e < 1e-9) throw numeric_error("pole/degeneration at base point z0");
  }
  CPoly q(static_cast<size_t>(p.w_degree()) + 1);
  for (int j = 0; j <= p.w_degree(); ++j) {
    const RationalFunction& c = p.coeff(j);
    detail::CompensatedSum num, den;
    Complex zp = 1.0;
    for (int k = 0; k <= c.num().degree(); ++k) {
      num.add(to_double(c.num()[k]) * zp);
      zp *= z0;
    }
    zp = 1.0;
    for (int k = 0; k <= c.den().degree(); ++k) {
      den.add(to_double(c.den()[k]) * zp);
      zp *= z0;
    }
    if (std::abs(den.s) == 0.0) throw numeric_error("pole/degeneration at base point z0");
    q[static_cast<size_t>(j)] = num.s / den.s;
  }
  return q;
}

}  // namespace algfun
