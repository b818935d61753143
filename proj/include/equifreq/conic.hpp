#pragma once

#include <utility>

#include "equifreq/rational.hpp"

namespace equifreq {

/// Reduced rational slope q = q1/q2 of a chord through (1, 0) on the conic
/// a^2 - 1 = s b^2. Stored with q1 > 0, q2 >= 1, gcd(q1, q2) = 1; a negative
/// slope only mirrors the signs of the intersection point, so it is folded
/// into the canonical representative on construction.
struct Slope {
  Int q1;
  Int q2;

  Slope(Int numerator, Int denominator) : q1(std::move(numerator)), q2(std::move(denominator)) {
    if (q1 == 0) throw DomainError(Reason::ZeroSlope);
    if (q2 == 0) throw DomainError(Reason::ZeroDenominator, "slope denominator");
    if (q2 < 0) {
      q1 = -q1;
      q2 = -q2;
    }
    if (q1 < 0) q1 = -q1;
    Int g = gcd(q1, q2);
    q1 /= g;
    q2 /= g;
  }

  friend bool operator==(const Slope& a, const Slope& b) { return a.q1 == b.q1 && a.q2 == b.q2; }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
};

/// Second intersection of the chord with the conic, as fraction components
/// a = a1/a2, b = b1/b2 (not reduced; a2 and b2 coincide by construction).
struct RationalPoint {
  Int a1;
  Int a2;
  Int b1;
  Int b2;
};

/// Positive integer solution of x^2 - y^2 = s z^2 with x > y >= 1, z >= 1.
/// The parameter s travels with the triple so solutions of different conics
/// cannot be mixed downstream.
struct ConicSolution {
  Int s;
  Int x;
  Int y;
  Int z;

  friend bool operator==(const ConicSolution& a, const ConicSolution& b) {
    return a.s == b.s && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const ConicSolution& a, const ConicSolution& b) { return !(a == b); }
};

/// Chord construction: a1 = s q1^2 + q2^2, a2 = b2 = s q1^2 - q2^2,
/// b1 = 2 q1 q2. Satisfies a^2 - 1 = s b^2. The slope with s q1^2 = q2^2 is
/// degenerate (the line only meets the conic at (1, 0)).
inline RationalPoint rational_point(const Int& s, const Slope& q) {
  if (s < 1) throw DomainError(Reason::NonPositive, "s");
  Int sq = s * q.q1 * q.q1;
  Int qq = q.q2 * q.q2;
  if (sq == qq) throw DomainError(Reason::DegenerateSlope, "s*q1^2 = q2^2");
  return RationalPoint{sq + qq, sq - qq, 2 * q.q1 * q.q2, sq - qq};
}

/// Clears denominators of the rational point into an integer triple
/// (l a1 b2 / G2, l a2 b2 / G2, l a2 b1 / G2) with G2 = gcd(a2, b2), taken on
/// the reduced fraction components so the l = 1 triple is primitive, then
/// canonicalizes signs by absolute value. Result satisfies x > y >= 1, z >= 1
/// and the conic equation.
inline ConicSolution integer_solution(const Int& s, const Slope& q, const Int& l) {
  if (l == 0) throw DomainError(Reason::ZeroMultiplier, "l");
  RationalPoint p = rational_point(s, q);
  Rational a(p.a1, p.a2);
  Rational b(p.b1, p.b2);
  Int g2 = gcd(a.den(), b.den());
  Int la = abs(l);
  Int x = abs(la * a.num() * (b.den() / g2));
  Int y = la * a.den() * (b.den() / g2);
  Int z = abs(la * (a.den() / g2) * b.num());
  return ConicSolution{s, std::move(x), std::move(y), std::move(z)};
}

/// Inverse of the chord construction: the chord through (1, 0) and
/// (x/y, z/y) has slope z / (x - y).
inline Slope slope_from_solution(const ConicSolution& sol) {
  return Slope(sol.z, sol.x - sol.y);
}

inline bool verify_conic(const ConicSolution& sol) {
  if (sol.s < 1 || sol.y < 1 || sol.z < 1) return false;
  if (sol.x <= sol.y) return false;
  return sol.x * sol.x - sol.y * sol.y == sol.s * sol.z * sol.z;
}

} // namespace equifreq
