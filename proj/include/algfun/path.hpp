#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "algfun/bipoly.hpp"
#include "algfun/errors.hpp"

namespace algfun {

struct LineSeg {
  Complex a, b;
};

/// Circular arc about `center`; runs counterclockwise when theta1 > theta0.
/// |theta1 - theta0| may exceed 2*pi (full turns).
struct ArcSeg {
  Complex center;
  double radius;
  double theta0, theta1;
};

using Segment = std::variant<LineSeg, ArcSeg>;

inline Complex seg_start(const Segment& s) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return l->a;
  const auto& a = std::get<ArcSeg>(s);
  return a.center + a.radius * Complex(std::cos(a.theta0), std::sin(a.theta0));
}

inline Complex seg_end(const Segment& s) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return l->b;
  const auto& a = std::get<ArcSeg>(s);
  return a.center + a.radius * Complex(std::cos(a.theta1), std::sin(a.theta1));
}

inline double seg_length(const Segment& s) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return std::abs(l->b - l->a);
  const auto& a = std::get<ArcSeg>(s);
  return a.radius * std::abs(a.theta1 - a.theta0);
}

/// Point at parameter t in [0,1] along the segment.
inline Complex seg_point(const Segment& s, double t) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return l->a + t * (l->b - l->a);
  const auto& a = std::get<ArcSeg>(s);
  double th = a.theta0 + t * (a.theta1 - a.theta0);
  return a.center + a.radius * Complex(std::cos(th), std::sin(th));
}

/// Distance from p to the segment (exact geometric formulas).
inline double seg_distance(const Segment& s, Complex p) {
  if (const auto* l = std::get_if<LineSeg>(&s)) {
    Complex d = l->b - l->a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - l->a);
    double t = ((p.real() - l->a.real()) * d.real() + (p.imag() - l->a.imag()) * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (l->a + t * d));
  }
  const auto& a = std::get<ArcSeg>(s);
  double span = a.theta1 - a.theta0;
  Complex rel = p - a.center;
  double radial = std::abs(std::abs(rel) - a.radius);
  if (std::abs(span) >= 2.0 * M_PI) return radial;
  double phi = std::atan2(rel.imag(), rel.real());
  // is phi within the swept sector (mod 2pi)?
  double lo = std::min(a.theta0, a.theta1);
  double off = std::fmod(phi - lo, 2.0 * M_PI);
  if (off < 0) off += 2.0 * M_PI;
  if (off <= std::abs(span)) return radial;
  return std::min(std::abs(p - seg_start(s)), std::abs(p - seg_end(s)));
}

/// A piecewise path of line and arc segments; consecutive segments must share
/// endpoints within 1e-12.
struct PathSpec {
  std::vector<Segment> segments;

  Complex start() const { return seg_start(segments.front()); }
  Complex end() const { return seg_end(segments.back()); }
  double length() const {
    double s = 0;
    for (const auto& seg : segments) s += seg_length(seg);
    return s;
  }
};

inline void validate_continuity(const PathSpec& p) {
  if (p.segments.empty()) throw parse_error("empty path");
  for (size_t i = 0; i + 1 < p.segments.size(); ++i)
    if (std::abs(seg_end(p.segments[i]) - seg_start(p.segments[i + 1])) > 1e-12)
      throw parse_error("path segments " + std::to_string(i) + "," + std::to_string(i + 1) +
                        " do not share an endpoint");
}

inline Segment seg_reversed(const Segment& s) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return LineSeg{l->b, l->a};
  const auto& a = std::get<ArcSeg>(s);
  return ArcSeg{a.center, a.radius, a.theta1, a.theta0};
}

inline PathSpec reversed(const PathSpec& p) {
  PathSpec r;
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it)
    r.segments.push_back(seg_reversed(*it));
  return r;
}

inline PathSpec concat(const PathSpec& a, const PathSpec& b) {
  PathSpec r = a;
  r.segments.insert(r.segments.end(), b.segments.begin(), b.segments.end());
  validate_continuity(r);
  return r;
}

inline PathSpec line_path(Complex a, Complex b) { return PathSpec{{LineSeg{a, b}}}; }

/// Full counterclockwise circle about `center` starting at angle theta0.
inline PathSpec circle_path(Complex center, double radius, double theta0) {
  return PathSpec{{ArcSeg{center, radius, theta0, theta0 + 2.0 * M_PI}}};
}

inline double path_min_distance(const PathSpec& p, Complex pt) {
  double m = std::numeric_limits<double>::max();
  for (const auto& s : p.segments) m = std::min(m, seg_distance(s, pt));
  return m;
}

// ---- serialization:  L re_a im_a re_b im_b   |   A re_c im_c radius th0 th1

inline std::string to_string(const PathSpec& p) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& s : p.segments) {
    if (const auto* l = std::get_if<LineSeg>(&s)) {
      os << "L " << l->a.real() << " " << l->a.imag() << " " << l->b.real() << " "
         << l->b.imag() << "\n";
    } else {
      const auto& a = std::get<ArcSeg>(s);
      os << "A " << a.center.real() << " " << a.center.imag() << " " << a.radius << " "
         << a.theta0 << " " << a.theta1 << "\n";
    }
  }
  return os.str();
}

inline PathSpec parse_path(const std::string& text) {
  PathSpec p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "L") {
      double ar, ai, br, bi;
      if (!(ls >> ar >> ai >> br >> bi)) throw parse_error("bad line segment: " + line);
      p.segments.push_back(LineSeg{{ar, ai}, {br, bi}});
    } else if (tag == "A") {
      double cr, ci, r, t0, t1;
      if (!(ls >> cr >> ci >> r >> t0 >> t1)) throw parse_error("bad arc segment: " + line);
      if (r <= 0) throw parse_error("arc radius must be positive: " + line);
      p.segments.push_back(ArcSeg{{cr, ci}, r, t0, t1});
    } else {
      throw parse_error("unknown path segment tag: " + line);
    }
  }
  validate_continuity(p);
  return p;
}

/// Obstacle disk for corridor routing.
struct Disk {
  Complex center;
  double radius;
};

namespace detail {

/// Chord parameters where the segment a->b crosses the circle boundary;
/// nullopt when the open segment keeps distance >= r.
inline std::optional<std::pair<double, double>> chord_params(Complex a, Complex b,
                                                             const Disk& d) {
  Complex u = b - a;
  double len2 = std::norm(u);
  if (len2 == 0.0) return std::nullopt;
  Complex w = a - d.center;
  double bq = 2.0 * (u.real() * w.real() + u.imag() * w.imag());
  double cq = std::norm(w) - d.radius * d.radius;
  double disc = bq * bq - 4.0 * len2 * cq;
  if (disc <= 0) return std::nullopt;
  double sq = std::sqrt(disc);
  double t1 = (-bq - sq) / (2.0 * len2);
  double t2 = (-bq + sq) / (2.0 * len2);
  if (t2 <= 1e-12 || t1 >= 1.0 - 1e-12) return std::nullopt;  // crossing outside segment
  return std::make_pair(std::max(t1, 0.0), std::min(t2, 1.0));
}

}  // namespace detail

/// Deterministic corridor from `from` to `to` avoiding the obstacle disks:
/// straight where possible, splicing boundary arcs where a disk blocks the
/// way. Arc side: smaller angular sweep, ties broken counterclockwise.
/// Endpoints must not lie strictly inside any obstacle.
inline PathSpec route_segment(Complex from, Complex to, const std::vector<Disk>& obstacles) {
  std::vector<Segment> work{LineSeg{from, to}};
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    std::vector<Segment> next;
    for (const auto& seg : work) {
      const auto* l = std::get_if<LineSeg>(&seg);
      if (!l) {
        next.push_back(seg);
        continue;
      }
      // earliest blocking disk along this piece
      const Disk* hit = nullptr;
      std::pair<double, double> hit_t{0, 0};
      for (const auto& d : obstacles) {
        auto t = detail::chord_params(l->a, l->b, d);
        if (t && (!hit || t->first < hit_t.first)) {
          hit = &d;
          hit_t = *t;
        }
      }
      if (!hit) {
        next.push_back(seg);
        continue;
      }
      changed = true;
      Complex p1 = l->a + hit_t.first * (l->b - l->a);
      Complex p2 = l->a + hit_t.second * (l->b - l->a);
      // project chord ends onto the boundary circle
      auto on_circle = [&](Complex p) {
        Complex rel = p - hit->center;
        double m = std::abs(rel);
        return hit->center + (m > 0 ? rel / m : Complex(1, 0)) * hit->radius;
      };
      p1 = on_circle(p1);
      p2 = on_circle(p2);
      double phi1 = std::arg(p1 - hit->center);
      double phi2 = std::arg(p2 - hit->center);
      double dphi = phi2 - phi1;
      while (dphi > M_PI) dphi -= 2.0 * M_PI;
      while (dphi < -M_PI) dphi += 2.0 * M_PI;
      if (std::abs(std::abs(dphi) - M_PI) < 1e-9) dphi = M_PI;  // diameter: go CCW
      if (std::abs(p1 - l->a) > 1e-15) next.push_back(LineSeg{l->a, p1});
      next.push_back(ArcSeg{hit->center, hit->radius, phi1, phi1 + dphi});
      if (std::abs(l->b - p2) > 1e-15) next.push_back(LineSeg{p2, l->b});
    }
    work = std::move(next);
    if (!changed) {
      PathSpec p{std::move(work)};
      validate_continuity(p);
      return p;
    }
  }
  throw numeric_error(
      "corridor routing did not stabilize (pathological branch-point clustering); "
      "consider exact preprocessing of the input");
}

}  // namespace algfun
