#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "algfun/bipoly.hpp"
#include "algfun/errors.hpp"

namespace algfun {

struct NumOpts {
  double tol_res = 1e-10;  // residual tolerance relative to scale()
  double sep_min = 1e-8;   // fibers closer than this count as at a branch point
  int max_iter = 120;      // Aberth sweeps
  int max_newton = 30;
  uint64_t seed = 0;  // perturbs the initial circle rotation, for determinism tests
};

/// max(1, sum |c_k| |w|^k): magnitude scale of the evaluation at w.
inline double poly_scale(const CPoly& q, Complex w) {
  double aw = std::abs(w);
  double s = 0.0, p = 1.0;
  for (const Complex& c : q) {
    s += std::abs(c) * p;
    p *= aw;
  }
  return std::max(1.0, s);
}

inline Complex cpoly_eval(const CPoly& q, Complex w) {
  Complex acc = 0.0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * w + *it;
  return acc;
}

inline CPoly cpoly_derivative(const CPoly& q) {
  if (q.size() <= 1) return CPoly{};
  CPoly d(q.size() - 1);
  for (size_t i = 1; i < q.size(); ++i) d[i - 1] = static_cast<double>(i) * q[i];
  return d;
}

inline bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::string fmt_complex(Complex c) {
  std::ostringstream os;
  os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
  return os.str();
}

}  // namespace detail

/// One Newton refinement run. Requires a usable derivative at the start;
/// stops at residual <= tol_res*scale.
inline Complex newton_polish(const CPoly& q, Complex w0, const NumOpts& opts = {}) {
  CPoly dq = cpoly_derivative(q);
  Complex w = w0;
  double best_res = std::abs(cpoly_eval(q, w));
  {
    double d = std::abs(cpoly_eval(dq, w));
    if (d <= 1e-12 * poly_scale(dq, w))
      throw numeric_error("critical point proximity: derivative ~ 0 at " +
                          detail::fmt_complex(w0));
  }
  for (int it = 0; it < opts.max_newton; ++it) {
    Complex pv = cpoly_eval(q, w);
    if (std::abs(pv) <= opts.tol_res * poly_scale(q, w)) return w;
    Complex dv = cpoly_eval(dq, w);
    if (std::abs(dv) == 0.0)
      throw numeric_error("critical point proximity during Newton at " +
                          detail::fmt_complex(w));
    Complex step = pv / dv;
    w -= step;
    double res = std::abs(cpoly_eval(q, w));
    if (res < best_res) best_res = res;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(w))) {
      if (res <= opts.tol_res * poly_scale(q, w)) return w;
      break;
    }
  }
  if (std::abs(cpoly_eval(q, w)) <= opts.tol_res * poly_scale(q, w)) return w;
  throw numeric_error("Newton did not converge from " + detail::fmt_complex(w0) +
                      "; best residual " + std::to_string(best_res));
}

/// All roots by simultaneous Aberth-Ehrlich iteration from a deterministic
/// perturbed-circle start, each polished by Newton and returned sorted by
/// (re, im). Near-multiple roots (pairwise distance < sep_min) are an error.
inline std::vector<Complex> all_roots(const CPoly& q_in, const NumOpts& opts = {}) {
  if (q_in.size() < 2) throw error("all_roots needs degree >= 1");
  if (std::abs(q_in.back()) == 0.0) throw error("all_roots: zero leading coefficient");
  const size_t n = q_in.size() - 1;
  CPoly q(q_in.size());
  for (size_t i = 0; i < q_in.size(); ++i) q[i] = q_in[i] / q_in.back();

  if (n == 1) return {-q[0]};

  double maxc = 0.0;
  for (size_t i = 0; i < n; ++i) maxc = std::max(maxc, std::abs(q[i]));
  double radius = 1.0 + maxc;
  // golden-angle rotation breaks coefficient symmetry; seed adds a fixed twist
  double theta0 = 2.0 * M_PI * 0.3819660112501051;
  if (opts.seed != 0)
    theta0 += 2.0 * M_PI *
              (static_cast<double>(detail::splitmix64(opts.seed) >> 11) * 0x1.0p-53);
  std::vector<Complex> w(n);
  for (size_t k = 0; k < n; ++k) {
    double th = theta0 + 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    w[k] = radius * Complex(std::cos(th), std::sin(th));
  }

  CPoly dq = cpoly_derivative(q);
  bool converged = false;
  for (int it = 0; it < opts.max_iter && !converged; ++it) {
    converged = true;
    for (size_t k = 0; k < n; ++k) {
      Complex pv = cpoly_eval(q, w[k]);
      if (std::abs(pv) <= 0.1 * opts.tol_res * poly_scale(q, w[k])) continue;
      converged = false;
      Complex dv = cpoly_eval(dq, w[k]);
      Complex newton = (std::abs(dv) > 0.0) ? pv / dv : Complex(1e-3, 1e-3);
      Complex sum = 0.0;
      for (size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = w[k] - w[j];
        if (std::abs(diff) < 1e-300) diff = Complex(1e-12, 1e-12);
        sum += 1.0 / diff;
      }
      Complex denom = 1.0 - newton * sum;
      Complex step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      w[k] -= step;
    }
  }
  if (!converged) {
    double worst = 0.0;
    size_t wk = 0;
    for (size_t k = 0; k < n; ++k) {
      double r = std::abs(cpoly_eval(q, w[k]));
      if (r > worst) {
        worst = r;
        wk = k;
      }
    }
    throw numeric_error("root iteration did not converge; best iterate " +
                        detail::fmt_complex(w[wk]) + " residual " + std::to_string(worst));
  }

  for (size_t k = 0; k < n; ++k) {
    // roots from the simultaneous sweep are already near; polish may still
    // reject genuinely multiple roots via the derivative guard
    try {
      w[k] = newton_polish(q, w[k], opts);
    } catch (const numeric_error&) {
      // keep the Aberth iterate; the separation check below decides
    }
  }
  std::sort(w.begin(), w.end(), lex_less);
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      // a residual <= tol only pins a k-fold cluster to diameter ~tol^(1/k);
      // pairs inside the k=2 bound are indistinguishable from a double root
      double cluster_tol = std::max(
          opts.sep_min, 2.0 * std::sqrt(opts.tol_res * poly_scale(q, w[i])));
      if (std::abs(w[i] - w[j]) < cluster_tol)
        throw numeric_error("near-multiple root cluster at " + detail::fmt_complex(w[i]) +
                            " / " + detail::fmt_complex(w[j]));
    }
  return w;
}

/// The fiber over a base point: canonically ordered branch values.
struct Fiber {
  Complex z0;
  std::vector<Complex> values;  // sorted by (re, im)
};

inline double min_separation(const Fiber& f) {
  if (f.values.empty()) throw error("min_separation of empty fiber");
  if (f.values.size() == 1) return std::numeric_limits<double>::max();
  double m = std::numeric_limits<double>::max();
  for (size_t i = 0; i + 1 < f.values.size(); ++i)
    for (size_t j = i + 1; j < f.values.size(); ++j)
      m = std::min(m, std::abs(f.values[i] - f.values[j]));
  return m;
}

inline Fiber fiber_at(const BiPoly& p, Complex z0, const NumOpts& opts = {}) {
  CPoly q = fiber_polynomial(p, z0);
  return Fiber{z0, all_roots(q, opts)};
}

}  // namespace algfun
