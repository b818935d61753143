#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "equifreq/pairs.hpp"

namespace equifreq {

/// n >= 2 transitions sharing one exact energy difference. Members are
/// sorted by descending upper level; all members are distinct.
struct EquifreqChain {
  std::vector<Transition> transitions;
  Rational delta;
};

namespace detail {

inline void finalize_chain(EquifreqChain& chain) {
  std::sort(chain.transitions.begin(), chain.transitions.end(),
            [](const Transition& a, const Transition& b) {
              if (a.upper != b.upper) return b.upper < a.upper;
              return b.lower < a.lower;
            });
  for (std::size_t i = 1; i < chain.transitions.size(); ++i) {
    if (chain.transitions[i] == chain.transitions[i - 1])
      throw DomainError(Reason::DuplicateTransition,
                        chain.transitions[i].upper.get_str() + "->" +
                            chain.transitions[i].lower.get_str());
  }
  for (const Transition& t : chain.transitions) {
    if (delta_energy(t) != chain.delta)
      throw std::logic_error("chain member differences are not all equal");
  }
}

} // namespace detail

/// Solves the simultaneous product conditions x1 y1 t1 zi = xi yi ti z1 by
/// taking t1 = k * lcm_i( xi yi z1 / gcd(x1 y1 zi, xi yi z1) ) and deducing
/// the remaining ti; members are (alpha_i, beta_i) = (xi ti, yi ti). With
/// n = 2 this reduces to the pair construction.
inline EquifreqChain build_chain(const std::vector<ConicSolution>& solutions, const Int& k) {
  if (solutions.size() < 2) throw DomainError(Reason::TooFewSolutions);
  if (k < 1) throw DomainError(Reason::NonPositive, "k");
  const ConicSolution& first = solutions.front();
  for (const ConicSolution& sol : solutions) {
    if (sol.s != first.s)
      throw DomainError(Reason::MismatchedS, sol.s.get_str() + " vs " + first.s.get_str());
  }
  Int base = first.x * first.y;
  Int t1 = 1;
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    const ConicSolution& sol = solutions[i];
    Int own = sol.x * sol.y * first.z;
    Int g = gcd(base * sol.z, own);
    t1 = lcm(t1, own / g);
  }
  t1 *= k;
  EquifreqChain chain{{}, Rational()};
  chain.transitions.reserve(solutions.size());
  chain.transitions.emplace_back(first.x * t1, first.y * t1);
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    const ConicSolution& sol = solutions[i];
    Int num = base * t1 * sol.z;
    Int den = sol.x * sol.y * first.z;
    if (!divides(den, num)) throw std::logic_error("build_chain: t_i is not integral");
    Int ti = num / den;
    chain.transitions.emplace_back(sol.x * ti, sol.y * ti);
  }
  chain.delta = delta_energy(chain.transitions.front());
  detail::finalize_chain(chain);
  return chain;
}

/// Index-set split of {1..k}, held 0-based. Either side may be empty (the
/// empty product counts as 1).
struct IndexPartition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct PerondiConfig {
  std::vector<Int> primes;
  std::vector<IndexPartition> partitions;
  Int delta;
};

/// Deterministic trial division; inputs are desk-scale prime sets.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Products gamma_I, gamma_J over the two sides of a partition; validates
/// that the sides are disjoint and jointly cover every prime index.
inline std::pair<Int, Int> gamma_products(const std::vector<Int>& primes,
                                          const IndexPartition& partition) {
  std::vector<char> seen(primes.size(), 0);
  auto fold = [&](const std::vector<std::size_t>& side) {
    Int product = 1;
    for (std::size_t idx : side) {
      if (idx >= primes.size())
        throw DomainError(Reason::InvalidPartition, "index out of range");
      if (seen[idx]) throw DomainError(Reason::InvalidPartition, "index used twice");
      seen[idx] = 1;
      product *= primes[idx];
    }
    return product;
  };
  Int gi = fold(partition.left);
  Int gj = fold(partition.right);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!seen[i]) throw DomainError(Reason::InvalidPartition, "index not covered");
  }
  return {std::move(gi), std::move(gj)};
}

namespace detail {

inline void validate_primes(const std::vector<Int>& primes) {
  if (primes.size() < 2) throw DomainError(Reason::TooFewPrimes);
  for (const Int& p : primes) {
    if (!is_prime(p)) throw DomainError(Reason::NotPrime, p.get_str());
  }
  std::set<Int> unique(primes.begin(), primes.end());
  if (unique.size() != primes.size()) throw DomainError(Reason::DuplicatePrime);
}

} // namespace detail

/// Smallest positive delta divisible by |gamma_I - gamma_J| and
/// gamma_I + gamma_J for every partition.
inline Int minimal_delta(const std::vector<Int>& primes,
                         const std::vector<IndexPartition>& partitions) {
  detail::validate_primes(primes);
  if (partitions.empty()) throw DomainError(Reason::TooFewSolutions, "no partitions");
  Int result = 1;
  for (const IndexPartition& partition : partitions) {
    auto [gi, gj] = gamma_products(primes, partition);
    if (gi == gj) throw DomainError(Reason::GammaBalanced);
    result = lcm(result, lcm(abs(gi - gj), gi + gj));
  }
  return result;
}

/// Prime-partition construction: each partition contributes the member
/// (alpha, beta) = (delta / |gamma_I - gamma_J|, delta / (gamma_I + gamma_J)).
/// Every member's difference is 4 mu_1 ... mu_k / delta^2, which follows from
/// (gamma_I + gamma_J)^2 - (gamma_I - gamma_J)^2 = 4 gamma_I gamma_J; the
/// chain is still checked member by member in exact arithmetic.
inline EquifreqChain perondi_chain(const PerondiConfig& config) {
  detail::validate_primes(config.primes);
  if (config.partitions.size() < 2) throw DomainError(Reason::TooFewSolutions, "need >= 2 partitions");
  if (config.delta < 1) throw DomainError(Reason::NonPositive, "delta");
  Int product = 1;
  for (const Int& p : config.primes) product *= p;

  EquifreqChain chain{{}, Rational(4 * product, config.delta * config.delta)};
  chain.transitions.reserve(config.partitions.size());
  std::set<std::pair<Int, Int>> seen_splits;
  for (const IndexPartition& partition : config.partitions) {
    auto [gi, gj] = gamma_products(config.primes, partition);
    if (gi == gj) throw DomainError(Reason::GammaBalanced);
    Int diff = abs(gi - gj);
    Int sum = gi + gj;
    if (!seen_splits.insert({std::min(gi, gj), std::max(gi, gj)}).second)
      throw DomainError(Reason::DuplicatePartition);
    if (!divides(diff, config.delta))
      throw DomainError(Reason::DeltaNotDivisible,
                        config.delta.get_str() + " not divisible by " + diff.get_str());
    if (!divides(sum, config.delta))
      throw DomainError(Reason::DeltaNotDivisible,
                        config.delta.get_str() + " not divisible by " + sum.get_str());
    chain.transitions.emplace_back(config.delta / diff, config.delta / sum);
  }
  detail::finalize_chain(chain);
  return chain;
}

} // namespace equifreq
