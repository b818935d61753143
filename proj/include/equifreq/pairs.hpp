#pragma once

#include <utility>

#include "equifreq/conic.hpp"
#include "equifreq/rational.hpp"

namespace equifreq {

/// An emitting level jump: upper > lower >= 1.
struct Transition {
  Int upper;
  Int lower;

  Transition(Int upper_level, Int lower_level)
      : upper(std::move(upper_level)), lower(std::move(lower_level)) {
    if (lower < 1) throw DomainError(Reason::NonPositive, "level");
    if (upper <= lower) throw DomainError(Reason::NonEmittingTransition, "upper <= lower");
  }

  friend bool operator==(const Transition& a, const Transition& b) {
    return a.upper == b.upper && a.lower == b.lower;
  }
  friend bool operator!=(const Transition& a, const Transition& b) { return !(a == b); }
  friend bool operator<(const Transition& a, const Transition& b) {
    if (a.upper != b.upper) return a.upper < b.upper;
    return a.lower < b.lower;
  }
};

/// Exact energy difference of a transition in units of the Rydberg energy:
/// 1/lower^2 - 1/upper^2.
inline Rational delta_energy(const Transition& t) {
  return Rational(t.upper * t.upper - t.lower * t.lower, t.upper * t.upper * t.lower * t.lower);
}

/// Two transitions claimed to share one photon energy. Stored with
/// a.upper >= b.upper (ties broken on lower) purely for deterministic output;
/// whether the claim holds is checked by verify_quadruple, not at
/// construction.
struct Quadruple {
  Transition a;
  Transition b;

  Quadruple(Transition t_a, Transition t_b) : a(std::move(t_a)), b(std::move(t_b)) {
    if (a.upper < b.upper || (a.upper == b.upper && a.lower < b.lower)) std::swap(a, b);
  }

  friend bool operator==(const Quadruple& x, const Quadruple& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Quadruple& x, const Quadruple& y) { return !(x == y); }
};

/// A single transition written twice: permitted by the equation, physically
/// one line.
inline bool is_trivial(const Quadruple& q) { return q.a == q.b; }

/// Generative certificate for a quadruple: two solutions of the same conic
/// plus multipliers satisfying x1 y1 t1 z2 = x2 y2 t2 z1, with sol1/t1
/// matching the quadruple's first transition.
struct PairWitness {
  Int s;
  ConicSolution sol1;
  ConicSolution sol2;
  Int t1;
  Int t2;
};

inline Quadruple regenerate(const PairWitness& w) {
  return Quadruple(Transition(w.sol1.x * w.t1, w.sol1.y * w.t1),
                   Transition(w.sol2.x * w.t2, w.sol2.y * w.t2));
}

struct PairResult {
  Quadruple quadruple;
  PairWitness witness;
};

/// Returns the common difference 1/n2^2 - 1/n1^2 = 1/n4^2 - 1/n3^2 in
/// canonical form. The two failure modes are reported distinctly: unequal
/// sides here, a non-emitting transition already at Transition construction.
inline Rational verify_quadruple(const Quadruple& q) {
  const Int& n1 = q.a.upper;
  const Int& n2 = q.a.lower;
  const Int& n3 = q.b.upper;
  const Int& n4 = q.b.lower;
  Int lhs_num = n1 * n1 - n2 * n2;
  Int rhs_num = n3 * n3 - n4 * n4;
  Int p12 = n1 * n2;
  Int p34 = n3 * n4;
  if (lhs_num * p34 * p34 != rhs_num * p12 * p12) {
    throw DomainError(Reason::SidesUnequal, delta_energy(q.a).str() + " != " + delta_energy(q.b).str());
  }
  return Rational(std::move(lhs_num), p12 * p12);
}

/// Joins two solutions of the same conic into an equifrequency quadruple
/// (x1 t1 -> y1 t1, x2 t2 -> y2 t2) with t1 = k x2 y2 z1 / G,
/// t2 = k x1 y1 z2 / G, G = gcd(x1 y1 z2, x2 y2 z1).
inline PairResult combine(const ConicSolution& sol1, const ConicSolution& sol2, const Int& k) {
  if (sol1.s != sol2.s) throw DomainError(Reason::MismatchedS, sol1.s.get_str() + " vs " + sol2.s.get_str());
  if (k < 1) throw DomainError(Reason::NonPositive, "k");
  Int p1 = sol1.x * sol1.y * sol2.z;
  Int p2 = sol2.x * sol2.y * sol1.z;
  Int g = gcd(p1, p2);
  Int t1 = k * p2 / g;
  Int t2 = k * p1 / g;
  Transition ta(sol1.x * t1, sol1.y * t1);
  Transition tb(sol2.x * t2, sol2.y * t2);
  // Keep the witness aligned with the quadruple's presentation order.
  if (ta.upper < tb.upper || (ta.upper == tb.upper && ta.lower < tb.lower)) {
    return PairResult{Quadruple(std::move(tb), std::move(ta)),
                      PairWitness{sol1.s, sol2, sol1, std::move(t2), std::move(t1)}};
  }
  return PairResult{Quadruple(std::move(ta), std::move(tb)),
                    PairWitness{sol1.s, sol1, sol2, std::move(t1), std::move(t2)}};
}

/// Canonical decomposition following the sufficiency-and-necessity proof:
/// strip t1' = gcd(n1, n2), t2' = gcd(n3, n4), reduce x1' y1' t1' / x2' y2' t2'
/// to z1'/z2', and read off s' = (x1'^2 - y1'^2) / z1'^2. The witness is the
/// unique gcd-canonical one; rebuilding it reproduces the quadruple exactly.
inline PairWitness decompose(const Quadruple& q) {
  verify_quadruple(q);
  const Int& n1 = q.a.upper;
  const Int& n2 = q.a.lower;
  const Int& n3 = q.b.upper;
  const Int& n4 = q.b.lower;
  Int t1 = gcd(n1, n2);
  Int t2 = gcd(n3, n4);
  Int x1 = n1 / t1;
  Int y1 = n2 / t1;
  Int x2 = n3 / t2;
  Int y2 = n4 / t2;
  Rational ratio(x1 * y1 * t1, x2 * y2 * t2);
  const Int& z1 = ratio.num();
  const Int& z2 = ratio.den();
  Int d1 = x1 * x1 - y1 * y1;
  if (!divides(z1 * z1, d1)) throw std::logic_error("decompose: z1^2 does not divide x1'^2 - y1'^2");
  Int s = d1 / (z1 * z1);
  PairWitness w{std::move(s), ConicSolution{Int(), x1, y1, z1}, ConicSolution{Int(), x2, y2, z2},
                std::move(t1), std::move(t2)};
  w.sol1.s = w.s;
  w.sol2.s = w.s;
  if (!verify_conic(w.sol1) || !verify_conic(w.sol2))
    throw std::logic_error("decompose: witness triple fails the conic equation");
  if (w.sol1.x * w.sol1.y * w.t1 * w.sol2.z != w.sol2.x * w.sol2.y * w.t2 * w.sol1.z)
    throw std::logic_error("decompose: witness fails the product condition");
  if (regenerate(w) != q) throw std::logic_error("decompose: witness does not regenerate input");
  return w;
}

} // namespace equifreq
