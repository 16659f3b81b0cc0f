#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "algfun/numroots.hpp"
#include "algfun/path.hpp"
#include "algfun/perm.hpp"

namespace algfun {

/// A root-function germ: base point, branch value, defining polynomial.
struct Germ {
  uint64_t poly_id = 0;
  Complex z0;
  Complex w0;
};

struct TrackOpts {
  double tol_res = 1e-10;
  double sep_fraction = 1.0 / 3.0;  // accepted correction <= fraction of fiber separation
  double h_init = 0.0;              // <= 0: use 0.1 * path length
  double h_min = 1e-12;
  int max_steps = 200000;
  double sep_min = 1e-8;
  double agreement_tol = 1e-8;  // germ equality tolerance after final polish
};

/// Branch-point clearance: paths and germs must keep this distance from every
/// branch point. The pair distance defaults to 1 when the locus has fewer
/// than two points.
inline double branch_clearance(std::span<const Complex> branch_points) {
  double min_pair = 1.0;
  for (size_t i = 0; i + 1 < branch_points.size(); ++i)
    for (size_t j = i + 1; j < branch_points.size(); ++j)
      min_pair = std::min(min_pair, std::abs(branch_points[i] - branch_points[j]));
  return std::max(1e-6, 1e-3 * min_pair);
}

inline void require_clearance(const PathSpec& path, std::span<const Complex> branch_points,
                              double eps_b) {
  for (const Complex& b : branch_points)
    if (path_min_distance(path, b) < eps_b)
      throw numeric_error("path violates branch clearance at branch point " +
                          detail::fmt_complex(b));
}

/// Result of transporting a whole fiber: the canonically re-sorted arrival
/// fiber, the raw transported values (index-aligned with the departure
/// fiber), and the permutation with arrival.values[perm[i]] = transported[i].
struct Transport {
  Fiber arrival;
  std::vector<Complex> transported;
  Perm perm;
};

namespace detail {

inline double fiber_min_sep(const std::vector<Complex>& w) {
  if (w.size() < 2) return std::numeric_limits<double>::max();
  double m = std::numeric_limits<double>::max();
  for (size_t i = 0; i + 1 < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) m = std::min(m, std::abs(w[i] - w[j]));
  return m;
}

/// Newton iterations against a fixed fiber polynomial; returns false instead
/// of throwing so the step controller can retry with a smaller step.
inline bool newton_step_correct(const CPoly& q, const CPoly& dq, Complex& w, double tol_res) {
  for (int it = 0; it < 16; ++it) {
    Complex pv = cpoly_eval(q, w);
    if (std::abs(pv) <= tol_res * poly_scale(q, w)) return true;
    Complex dv = cpoly_eval(dq, w);
    if (std::abs(dv) < 1e-300) return false;
    Complex step = pv / dv;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
    w -= step;
  }
  return std::abs(cpoly_eval(q, w)) <= tol_res * poly_scale(q, w);
}

}  // namespace detail

/// Transport every sheet of the fiber along the path in lockstep with a
/// shared adaptive step. A step is accepted only when each corrected root
/// stays within sep_fraction of the local fiber separation from its
/// prediction, which pins the sheet identification, and the corrected fiber
/// keeps the global separation floor.
inline Transport continue_fiber(const BiPoly& poly, const Fiber& start, const PathSpec& path,
                                const TrackOpts& opts = {},
                                std::span<const Complex> branch_points = {}) {
  if (static_cast<int>(start.values.size()) != poly.w_degree())
    throw error("fiber size does not match polynomial degree");
  validate_continuity(path);
  if (std::abs(path.start() - start.z0) > 1e-9)
    throw error("path does not start at the fiber base point");
  const double eps_b = branch_clearance(branch_points);
  require_clearance(path, branch_points, eps_b);

  const size_t n = start.values.size();
  std::vector<Complex> w = start.values;
  double total_len = path.length();
  if (total_len == 0.0) {
    Perm id = Perm::identity(static_cast<int>(n));
    return Transport{start, start.values, id};
  }
  double h = opts.h_init > 0 ? opts.h_init : 0.1 * total_len;
  int steps = 0, easy_run = 0;
  Complex z = start.z0;

  for (const Segment& seg : path.segments) {
    double seg_len = seg_length(seg);
    if (seg_len == 0.0) continue;
    double t = 0.0;
    while (t < 1.0) {
      if (++steps > opts.max_steps)
        throw numeric_error("continuation exceeded max_steps at parameter t=" +
                            std::to_string(t));
      double dt = std::min(h / seg_len, 1.0 - t);
      double t_next = t + dt;
      Complex z_next = seg_point(seg, t_next);
      Complex dz = z_next - z;

      double sep_local = detail::fiber_min_sep(w);
      double allow = opts.sep_fraction * sep_local;
      CPoly q = fiber_polynomial(poly, z_next);
      CPoly dq = cpoly_derivative(q);

      std::vector<Complex> w_new(n);
      bool ok = true;
      double worst_ratio = 0.0;
      for (size_t i = 0; i < n && ok; ++i) {
        Complex pw = poly.eval_dw(z, w[i]);
        if (std::abs(pw) < 1e-300) {
          ok = false;
          break;
        }
        Complex slope = -poly.eval_dz(z, w[i]) / pw;  // implicit differentiation
        Complex pred = w[i] + slope * dz;
        Complex corr = pred;
        if (!detail::newton_step_correct(q, dq, corr, opts.tol_res)) {
          ok = false;
          break;
        }
        double moved = std::abs(corr - pred);
        if (moved > allow) {
          ok = false;
          break;
        }
        worst_ratio = std::max(worst_ratio, allow > 0 ? moved / allow : 0.0);
        w_new[i] = corr;
      }
      if (ok && detail::fiber_min_sep(w_new) < opts.sep_min) ok = false;

      if (!ok) {
        easy_run = 0;
        h *= 0.5;
        if (h < opts.h_min)
          throw numeric_error("cannot certify continuation; forced step below h_min at t=" +
                              std::to_string(t) + " of a segment");
        continue;
      }
      w = std::move(w_new);
      z = z_next;
      t = t_next;
      if (worst_ratio <= 0.25) {
        if (++easy_run >= 3) {
          h *= 2.0;
          easy_run = 0;
        }
      } else {
        easy_run = 0;
      }
    }
  }

  // final polish against the exact endpoint fiber polynomial
  CPoly q_end = fiber_polynomial(poly, path.end());
  for (auto& wi : w) wi = newton_polish(q_end, wi, NumOpts{opts.tol_res, opts.sep_min});

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(w[a], w[b]); });
  std::vector<Complex> sorted(n);
  std::vector<int> perm(n);
  for (size_t rank = 0; rank < n; ++rank) {
    sorted[rank] = w[static_cast<size_t>(order[rank])];
    perm[static_cast<size_t>(order[rank])] = static_cast<int>(rank);
  }
  if (detail::fiber_min_sep(sorted) < opts.sep_min)
    throw numeric_error("arrival fiber collapsed below separation floor");
  return Transport{Fiber{path.end(), std::move(sorted)}, std::move(w),
                   Perm(std::move(perm))};
}

/// Unique lifting of a single germ along the path. Realized as full-fiber
/// transport so the no-collision certificate applies, then projected back to
/// the tracked sheet.
inline Germ continue_germ(const BiPoly& poly, const Germ& g, const PathSpec& path,
                          const TrackOpts& opts = {},
                          std::span<const Complex> branch_points = {}) {
  if (g.poly_id != poly.id()) throw error("germ does not belong to this polynomial");
  if (std::abs(path.start() - g.z0) > 1e-9) throw error("path does not start at the germ");
  Fiber f = fiber_at(poly, g.z0, NumOpts{opts.tol_res, opts.sep_min});
  double sep = min_separation(f);
  size_t idx = f.values.size();
  for (size_t i = 0; i < f.values.size(); ++i)
    if (std::abs(f.values[i] - g.w0) <= std::min(0.5 * opts.sep_fraction * sep, 1e-6)) {
      idx = i;
      break;
    }
  if (idx == f.values.size())
    throw numeric_error("germ value does not lie on the fiber at its base point");
  if (path.length() == 0.0) return g;
  Transport tr = continue_fiber(poly, f, path, opts, branch_points);
  return Germ{poly.id(), path.end(), tr.transported[idx]};
}

struct AgreementResult {
  bool agree;
  double distance;
  Complex w_first, w_second;
};

/// Continue the germ along both paths (shared endpoints) and compare the
/// terminal branch values. Agreement is guaranteed by the monodromy theorem
/// only for homotopic paths in the punctured plane; this just measures.
inline AgreementResult check_homotopy_invariance(const BiPoly& poly, const Germ& g,
                                                 const PathSpec& p1, const PathSpec& p2,
                                                 const TrackOpts& opts = {},
                                                 std::span<const Complex> branch_points = {}) {
  if (std::abs(p1.start() - p2.start()) > 1e-9 || std::abs(p1.end() - p2.end()) > 1e-9)
    throw error("paths must share start and end points");
  Germ a = continue_germ(poly, g, p1, opts, branch_points);
  Germ b = continue_germ(poly, g, p2, opts, branch_points);
  double dist = std::abs(a.w0 - b.w0);
  return AgreementResult{dist <= opts.agreement_tol, dist, a.w0, b.w0};
}

}  // namespace algfun
