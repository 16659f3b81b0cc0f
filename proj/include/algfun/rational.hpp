#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "algfun/errors.hpp"

namespace algfun {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps gcd(num,den)=1 and den>0 as a
/// class invariant, with zero canonicalized to 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw parse_error("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw parse_error("bad rational literal '" + s + "': " + e.what());
  }
}

/// Nearest rational to x with denominator <= den_cap, by continued-fraction
/// convergents. Returns nullopt for non-finite x or when no convergent with
/// admissible denominator gets within tol*max(1,|x|).
inline std::optional<Rational> nearest_rational(double x, const BigInt& den_cap,
                                                double tol = 1e-9) {
  if (!std::isfinite(x)) return std::nullopt;
  const double target = tol * std::max(1.0, std::abs(x));
  BigInt p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  BigInt p = 0, q = 1;            // will hold a0/1 after first step
  double rem = x;
  bool first = true;
  std::optional<Rational> best;
  double best_err = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(rem);
    if (fl > 9.2e18 || fl < -9.2e18) break;  // term overflow: stop with best so far
    BigInt a(static_cast<long long>(fl));
    if (first) {
      p = a;
      q = 1;
      first = false;
    } else {
      BigInt pn = a * p + p_prev;
      BigInt qn = a * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = pn;
      q = qn;
    }
    if (q > den_cap) break;
    Rational cand(p, q);
    double err = std::abs(x - to_double(cand));
    if (err < best_err) {
      best_err = err;
      best = cand;
    }
    if (err <= target) return best;
    double frac = rem - fl;
    if (frac < 1e-18) break;  // exact termination
    rem = 1.0 / frac;
  }
  if (best && best_err <= target) return best;
  return std::nullopt;
}

}  // namespace algfun
