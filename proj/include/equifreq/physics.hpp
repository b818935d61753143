#pragma once

#include <cmath>
#include <cstddef>

#include "equifreq/pairs.hpp"
#include "equifreq/rational.hpp"

namespace equifreq {

/// Round-to-nearest-even conversion of an exact rational to double. The
/// quotient is computed to 55+ bits with an exact remainder, so the result is
/// the correctly rounded value of num/den regardless of magnitude.
inline double to_double(const Rational& r) {
  if (r.is_zero()) return 0.0;
  bool negative = r.num() < 0;
  Int n = abs(r.num());
  Int d = r.den();
  long shift = 55 - (static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)));
  if (shift >= 0) {
    n <<= static_cast<unsigned long>(shift);
  } else {
    d <<= static_cast<unsigned long>(-shift);
  }
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  long exp2 = -shift;
  std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2); // 54..56
  long extra = static_cast<long>(bits) - 53;
  Int low = q & ((Int(1) << static_cast<unsigned long>(extra)) - 1);
  q >>= static_cast<unsigned long>(extra);
  exp2 += extra;
  Int half = Int(1) << static_cast<unsigned long>(extra - 1);
  if (low > half || (low == half && (rem != 0 || mpz_odd_p(q.get_mpz_t())))) q += 1;
  double value = std::ldexp(q.get_d(), static_cast<int>(exp2));
  return negative ? -value : value;
}

enum class ConstantsProfile { Paper, Codata };

/// Rydberg energy per profile; h and hc are CODATA 2018 in both.
struct Constants {
  Rational rydberg_ev;
  double planck_ev_s;
  double hc_ev_nm;
  const char* name;
};

inline const Constants& constants(ConstantsProfile profile) {
  static const Constants paper{Rational(Int(68), Int(5)), 4.135667696e-15, 1239.841984, "paper"};
  static const Constants codata{Rational(Int("13605693122994"), Int("1000000000000")),
                                4.135667696e-15, 1239.841984, "codata"};
  return profile == ConstantsProfile::Paper ? paper : codata;
}

/// A spectral line: floating physical quantities plus the exact difference
/// they came from.
struct PhysicalLine {
  double energy_ev;
  double frequency_hz;
  double wavelength_nm;
  Rational delta;
  ConstantsProfile profile;
};

inline PhysicalLine to_physical(const Rational& delta, ConstantsProfile profile = ConstantsProfile::Paper) {
  if (!delta.is_positive()) throw DomainError(Reason::NonPositive, "delta");
  const Constants& c = constants(profile);
  double energy = to_double(delta * c.rydberg_ev);
  return PhysicalLine{energy, energy / c.planck_ev_s, c.hc_ev_nm / energy, delta, profile};
}

} // namespace equifreq
