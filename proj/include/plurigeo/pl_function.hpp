#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "plurigeo/errors.hpp"

namespace plurigeo {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Convex, nondecreasing, piecewise-linear function on the ray (-inf, 0],
// the 1D avatar of a radial psh function in log-modulus coordinates.
//
// Data: breakpoints b_1 < ... < b_m < 0, slopes sigma_0 <= ... <= sigma_m
// (sigma_j on the segment [b_j, b_{j+1}], sigma_0 on (-inf, b_1], sigma_m on
// [b_m, 0]), and the anchor value u(0) <= 0. Canonical form: no zero-length
// segments, no repeated slopes. The function is bounded below iff sigma_0 = 0;
// a positive leading slope is a Green-type (positive Lelong number) tail.
class PLConvex1D {
 public:
  static PLConvex1D make(std::vector<double> breakpoints, std::vector<double> slopes,
                         double anchor_value);
  static PLConvex1D zero() { return constant(0.0); }
  static PLConvex1D constant(double value);
  // slope * s, slope >= 0 (slope > 0 is a Green-type tail).
  static PLConvex1D linear(double slope);

  double operator()(double s) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& slopes() const { return slopes_; }
  double anchor() const { return anchor_; }

  double tail_slope() const { return slopes_.front(); }
  bool bounded() const { return slopes_.front() == 0.0; }
  bool zero_boundary() const { return anchor_ == 0.0; }
  // Sup norm M = -inf u (infinite for Green-type tails).
  double depth() const;

  bool operator==(const PLConvex1D&) const = default;

 private:
  PLConvex1D() = default;
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  double anchor_ = 0.0;
};

// Exact arithmetic. All results stay in the convex nondecreasing class.
PLConvex1D pl_scale(const PLConvex1D& u, double c);  // c >= 0
PLConvex1D pl_add(const PLConvex1D& u, const PLConvex1D& v);
// (1-t) u0 + t u1 for t in [0, 1].
PLConvex1D pl_affine_combine(const PLConvex1D& u0, const PLConvex1D& u1, double t);
PLConvex1D pl_max(const PLConvex1D& u, const PLConvex1D& v);
// max{u, -alpha}, alpha > 0.
PLConvex1D truncate(const PLConvex1D& u, double alpha);

// sup |u - v| over (-inf, 0]; +inf when the tail slopes differ.
double sup_diff(const PLConvex1D& u, const PLConvex1D& v);
// sup (u - v) (signed); -inf/+inf aware via tail slopes.
double sup_signed_diff(const PLConvex1D& u, const PLConvex1D& v);
bool pl_equal(const PLConvex1D& u, const PLConvex1D& v, double tol);
// Lebesgue measure of { s in [-span, 0] : |u(s) - v(s)| > eps }, exact.
double deviation_measure(const PLConvex1D& u, const PLConvex1D& v, double eps, double span);

// Legendre-Fenchel conjugate f*(p) = sup_{s<=0} (p s - f(s)): a convex,
// nonincreasing, piecewise-linear function of the slope variable on
// [domain_start, +inf), constant beyond its last knot. Knots of f* are the
// slopes of f; segment slopes of f* are the breakpoints of f.
class PLConjugate {
 public:
  static PLConjugate make(double domain_start, std::vector<double> knots,
                          std::vector<double> seg_slopes, double start_value);

  double operator()(double p) const;  // +inf left of domain_start

  double domain_start() const { return domain_start_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& seg_slopes() const { return seg_slopes_; }
  double start_value() const { return start_value_; }
  // Constant value on [last knot, +inf).
  double final_value() const;

  bool operator==(const PLConjugate&) const = default;

 private:
  PLConjugate() = default;
  double domain_start_ = 0.0;
  std::vector<double> knots_;
  std::vector<double> seg_slopes_;
  double start_value_ = 0.0;
};

PLConjugate conjugate(const PLConvex1D& f);
PLConvex1D conjugate_back(const PLConjugate& g);

// wa * a + wb * b with wa, wb >= 0, on the intersection of domains.
PLConjugate conj_combine(const PLConjugate& a, const PLConjugate& b, double wa, double wb);
// Pointwise max (domain = intersection), with exact crossing points.
PLConjugate conj_max(const PLConjugate& a, const PLConjugate& b);
// g - c (used for P(u, v + C) = conjugate_back(max(u*, v* - C))).
PLConjugate conj_shift(const PLConjugate& g, double c);

// Largest convex nondecreasing minorant of min{u, v} (rooftop envelope
// P(u, v)); rooftop_shifted computes P(u, v + C) without materializing the
// shifted (possibly positive) second argument.
PLConvex1D rooftop(const PLConvex1D& u, const PLConvex1D& v);
PLConvex1D rooftop_shifted(const PLConvex1D& u, const PLConvex1D& v, double C);

// Exact lower-hull envelope of a finite sample set: the largest convex,
// nondecreasing function <= 0 on (-inf, 0] passing under every sample.
// The global <= 0 cap is imposed as an implicit sample (0, 0).
PLConvex1D lower_convex_envelope(std::span<const std::pair<double, double>> samples);

}  // namespace plurigeo
