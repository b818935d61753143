#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "equifreq/pairs.hpp"

namespace equifreq {

/// All transitions with upper <= bound sharing one exact difference.
/// Members sorted by descending (upper, lower).
struct Group {
  Rational delta;
  std::vector<Transition> members;
};

/// Groups sorted by (denominator, numerator) of delta; deterministic for a
/// given bound regardless of worker count.
struct GroupIndex {
  std::uint32_t bound;
  std::vector<Group> groups;
};

inline constexpr std::uint32_t kDefaultBoundGuard = 100000;

namespace detail {

// Exact reduced difference key. For upper u, lower l with g = gcd(u, l),
// u' = u/g, l' = l/g: 1/l^2 - 1/u^2 = (u'^2 - l'^2) / (u l')^2, whose
// numerator is coprime to u'^2 l'^2 but may still share a factor with g^2;
// dividing both sides by gcd(u'^2 - l'^2, g^2) yields the canonical form.
// Fits fixed width for any 32-bit bound.
struct DeltaKey {
  unsigned __int128 den;
  std::uint64_t num;
  friend bool operator==(const DeltaKey& a, const DeltaKey& b) {
    return a.den == b.den && a.num == b.num;
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct DeltaKeyHash {
  std::size_t operator()(const DeltaKey& k) const {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(k.den));
    h ^= mix64(static_cast<std::uint64_t>(k.den >> 64) + 0x100000001b3ULL * h);
    h ^= mix64(k.num + h);
    return static_cast<std::size_t>(h);
  }
};

using LocalMap = std::unordered_map<DeltaKey, std::vector<std::uint64_t>, DeltaKeyHash>;

inline void scan_upper_range(std::uint32_t bound, unsigned worker, unsigned stride, LocalMap& out) {
  for (std::uint64_t u = 2 + worker; u <= bound; u += stride) {
    for (std::uint64_t l = 1; l < u; ++l) {
      std::uint64_t g = std::gcd(u, l);
      std::uint64_t up = u / g;
      std::uint64_t lp = l / g;
      std::uint64_t num = up * up - lp * lp;
      std::uint64_t c = std::gcd(num, g * g);
      std::uint64_t root = u * lp;
      DeltaKey key{static_cast<unsigned __int128>(root) * root / c, num / c};
      out[key].push_back((u << 32) | l);
    }
  }
}

inline Int int_from_u128(unsigned __int128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  Int lo(static_cast<unsigned long>(v & 0xffffffffffffffffULL));
  return (hi << 64) | lo;
}

} // namespace detail

/// Enumerates every transition 1 <= lower < upper <= bound, grouped by exact
/// difference; keeps groups of size >= 2. `threads` = 0 picks the hardware
/// concurrency; the result is identical for any worker count. Bounds above
/// the guard are refused unless `allow_large` is set.
inline GroupIndex enumerate_groups(std::uint32_t bound, unsigned threads = 0,
                                   bool allow_large = false) {
  if (bound < 2) throw DomainError(Reason::NonPositive, "bound must be >= 2");
  if (bound > kDefaultBoundGuard && !allow_large)
    throw DomainError(Reason::BoundExceeded,
                      "bound " + std::to_string(bound) + " > " + std::to_string(kDefaultBoundGuard));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<detail::LocalMap> partials(threads);
  std::uint64_t total = static_cast<std::uint64_t>(bound) * (bound - 1) / 2;
  if (threads == 1) {
    partials[0].reserve(static_cast<std::size_t>(std::min<std::uint64_t>(total, 1u << 22)));
    detail::scan_upper_range(bound, 0, 1, partials[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      partials[t].reserve(static_cast<std::size_t>(std::min<std::uint64_t>(total / threads, 1u << 21)));
      workers.emplace_back(detail::scan_upper_range, bound, t, threads, std::ref(partials[t]));
    }
    for (std::thread& w : workers) w.join();
  }

  detail::LocalMap merged = std::move(partials[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (auto& [key, members] : partials[t]) {
      auto& dst = merged[key];
      if (dst.empty()) {
        dst = std::move(members);
      } else {
        dst.insert(dst.end(), members.begin(), members.end());
      }
    }
    partials[t].clear();
  }

  std::vector<std::pair<detail::DeltaKey, std::vector<std::uint64_t>*>> grouped;
  for (auto& [key, members] : merged) {
    if (members.size() >= 2) grouped.emplace_back(key, &members);
  }
  std::sort(grouped.begin(), grouped.end(), [](const auto& a, const auto& b) {
    if (a.first.den != b.first.den) return a.first.den < b.first.den;
    return a.first.num < b.first.num;
  });

  GroupIndex index{bound, {}};
  index.groups.reserve(grouped.size());
  for (auto& [key, members] : grouped) {
    std::sort(members->begin(), members->end(), std::greater<>());
    Group group{Rational(Int(key.num), detail::int_from_u128(key.den)), {}};
    group.members.reserve(members->size());
    for (std::uint64_t packed : *members) {
      group.members.emplace_back(Int(static_cast<unsigned long>(packed >> 32)),
                                 Int(static_cast<unsigned long>(packed & 0xffffffffULL)));
    }
    index.groups.push_back(std::move(group));
  }
  return index;
}

struct AuditReport {
  std::uint32_t bound;
  std::size_t group_count;
  std::size_t pairs_checked;
  std::vector<std::string> failures;
};

/// Decomposes every unordered pair of transitions within every group and
/// checks that the canonical witness regenerates the quadruple. Any failure
/// signals an implementation bug, not a data problem.
inline AuditReport audit_completeness(const GroupIndex& index) {
  AuditReport report{index.bound, index.groups.size(), 0, {}};
  for (const Group& group : index.groups) {
    for (std::size_t i = 0; i < group.members.size(); ++i) {
      for (std::size_t j = i + 1; j < group.members.size(); ++j) {
        Quadruple quad(group.members[i], group.members[j]);
        ++report.pairs_checked;
        try {
          PairWitness w = decompose(quad);
          if (verify_quadruple(regenerate(w)) != group.delta)
            throw std::logic_error("regenerated delta differs from group delta");
        } catch (const std::exception& e) {
          report.failures.push_back("quadruple (" + quad.a.upper.get_str() + "->" +
                                    quad.a.lower.get_str() + ", " + quad.b.upper.get_str() + "->" +
                                    quad.b.lower.get_str() + "): " + e.what());
        }
      }
    }
  }
  return report;
}

inline AuditReport audit_completeness(std::uint32_t bound, unsigned threads = 0,
                                      bool allow_large = false) {
  return audit_completeness(enumerate_groups(bound, threads, allow_large));
}

} // namespace equifreq
