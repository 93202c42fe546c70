#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermod/substructures.hpp"

namespace hypermod {

// Certificate for the multiplication property: a witness hyperideal per
// subhypermodule, or the first subhypermodule with none. Witness search
// tries the colon ideal S_N first, then the hyperideal lattice in canonical
// order, so certificates are reproducible.
struct MultiplicationCertificate {
  bool verdict = false;
  std::vector<std::pair<ElementSet, ElementSet>> witnesses;  // (N, I)
  std::optional<ElementSet> failing;                         // first unwitnessed N
};

inline MultiplicationCertificate is_multiplication(
    const Hypermodule& M, const std::vector<ElementSet>& ideals,
    const std::vector<ElementSet>& submodules) {
  MultiplicationCertificate cert;
  for (const auto& N : submodules) {
    ElementSet sn = colon_ideal(M, N);
    if (ideal_action(M, sn) == N) {
      cert.witnesses.emplace_back(N, sn);
      continue;
    }
    bool found = false;
    for (const auto& I : ideals) {
      if (ideal_action(M, I) == N) {
        cert.witnesses.emplace_back(N, I);
        found = true;
        break;
      }
    }
    if (!found) {
      cert.failing = N;
      cert.verdict = false;
      return cert;
    }
  }
  cert.verdict = true;
  return cert;
}

// Least generator with g(R, 1^(n-2), x) = M, if any.
inline std::optional<int> is_cyclic(const Hypermodule& M) {
  ElementSet rfull = ElementSet::full(M.ring->size());
  for (int x = 0; x < M.size(); ++x) {
    if (M.act1_set(rfull, ElementSet::singleton(M.size(), x)) == M.full_set())
      return x;
  }
  return std::nullopt;
}

// The family of hyperideals whose unit-padded action recovers all of M, and
// its intersection. Nonempty on validated modules (the full ring qualifies).
struct OmegaData {
  std::vector<ElementSet> members;
  ElementSet omega;
};

inline OmegaData omega(const Hypermodule& M,
                       const std::vector<ElementSet>& ideals) {
  OmegaData out;
  out.omega = ElementSet::full(M.ring->size());
  for (const auto& I : ideals) {
    if (ideal_action(M, I) == M.full_set()) {
      out.members.push_back(I);
      out.omega &= I;
    }
  }
  if (out.members.empty())
    throw InternalError("omega family is empty on a validated module");
  return out;
}

// Literal cofinite-generation check over a finite lattice of sets sharing a
// distinguished zero element: every family with intersection {zero} must
// contain a finite subfamily with the same property. On finite carriers this
// always holds; the value of the check is the enumeration itself, reported
// via the minimal zero-intersection families.
struct CofinitelyGeneratedResult {
  bool value = false;
  int max_family_size = 0;
  long long zero_families = 0;                  // families with intersection {0}
  std::vector<std::vector<int>> minimal_families;  // indices into the lattice
};

inline CofinitelyGeneratedResult cofinitely_generated_over(
    const std::vector<ElementSet>& lattice, int universe, int zero,
    const Bounds& bounds = {}) {
  if (int(lattice.size()) > bounds.cofin_cap)
    throw CapacityError("cofinite-generation check: " +
                        std::to_string(lattice.size()) +
                        " lattice members exceed cap " +
                        std::to_string(bounds.cofin_cap));
  CofinitelyGeneratedResult out;
  out.max_family_size = int(lattice.size());
  ElementSet zs = ElementSet::singleton(universe, zero);
  // Every lattice member contains zero, so intersections only shrink toward
  // {zero}; once reached they stay there.
  auto family_intersects_to_zero = [&](uint64_t fam) {
    ElementSet inter = ElementSet::full(universe);
    for (uint64_t bits = fam; bits; bits &= bits - 1) {
      inter &= lattice[std::countr_zero(bits)];
      if (inter == zs) return true;
    }
    return inter == zs;
  };
  uint64_t total = uint64_t{1} << lattice.size();
  for (uint64_t fam = 1; fam < total; ++fam) {
    if (!family_intersects_to_zero(fam)) continue;
    ++out.zero_families;
    bool minimal = true;
    for (uint64_t bits = fam; bits && minimal; bits &= bits - 1) {
      uint64_t sub = fam & ~(bits & (~bits + 1));
      if (sub && family_intersects_to_zero(sub)) minimal = false;
    }
    if (minimal && out.minimal_families.size() < 64) {
      std::vector<int> idx;
      for (uint64_t bits = fam; bits; bits &= bits - 1)
        idx.push_back(std::countr_zero(bits));
      out.minimal_families.push_back(std::move(idx));
    }
  }
  out.value = true;
  return out;
}

inline CofinitelyGeneratedResult is_cofinitely_generated(
    const Hypermodule& M, const std::vector<ElementSet>& submodules,
    const Bounds& bounds = {}) {
  return cofinitely_generated_over(submodules, M.size(), M.zero, bounds);
}

// Maximal members of a lattice of proper subsets: nothing strictly between
// them and the full set.
inline std::vector<int> maximal_members(const std::vector<ElementSet>& lattice,
                                        int universe) {
  std::vector<int> out;
  for (int i = 0; i < int(lattice.size()); ++i) {
    if (lattice[i].count() == universe) continue;
    bool maximal = true;
    for (int j = 0; j < int(lattice.size()) && maximal; ++j) {
      if (j == i || lattice[j].count() == universe) continue;
      if (lattice[i].is_subset_of(lattice[j]) && !(lattice[i] == lattice[j]))
        maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

// Intersection of all maximal subhypermodules; the whole module when none
// exist (empty-intersection convention).
inline ElementSet jacobson_radical_module(
    const Hypermodule& M, const std::vector<ElementSet>& submodules) {
  std::vector<int> maxi = maximal_members(submodules, M.size());
  ElementSet out = M.full_set();
  for (int i : maxi) out &= submodules[i];
  return out;
}

// Primary subhypermodule: whenever g(r_1^{n-1}, x) lands in a proper N with
// x outside N, some shared exponent t makes the powered action land in N.
// The exponent search walks the representable powers until the tuple of
// power values cycles.
struct PrimarySubmoduleResult {
  bool primary = false;
  std::vector<int> witness_scalars;  // violating scalar tuple, if any
  int witness_x = -1;
};

namespace detail {

// Stateful walk of one element's representable powers, in exponent order.
struct PowerWalker {
  const KrasnerHyperring* R = nullptr;
  int r = 0;
  int t = 0;
  int value = -1;
  int fold_value = -1;

  // Advances to the next representable exponent and returns the power value.
  int step() {
    const int n = R->n();
    if (t < n) {
      ++t;
      std::vector<int> args(n, R->one);
      for (int i = 0; i < t; ++i) args[i] = r;
      value = R->mul.at(args);
      if (t == n) fold_value = value;
    } else {
      t += n - 1;
      std::vector<int> args(n, r);
      args[0] = fold_value;
      fold_value = R->mul.at(args);
      value = fold_value;
    }
    return value;
  }
};

}  // namespace detail

inline PrimarySubmoduleResult is_primary_subhypermodule(const Hypermodule& M,
                                                        const ElementSet& N) {
  const KrasnerHyperring& R = *M.ring;
  PrimarySubmoduleResult out;
  if (N.count() == M.size()) return out;  // proper only
  int n = M.n(), sr = R.size();
  std::vector<int> scalars(n - 1, 0);
  do {
    for (int x = 0; x < M.size(); ++x) {
      if (N.contains(x)) continue;
      if (!M.act(scalars, x).is_subset_of(N)) continue;
      // Shared exponents: all scalars are powered to the same representable
      // t. Beyond t = n every component evolves by a deterministic fold, so
      // the walk terminates as soon as a value tuple repeats.
      std::vector<detail::PowerWalker> walkers(n - 1);
      for (int i = 0; i < n - 1; ++i) walkers[i] = {&R, scalars[i]};
      bool found = false;
      // Fold states (tuples at t = n, 2n-1, ...) form a deterministic orbit;
      // the exponents below n are finitely many and precede it.
      std::set<std::vector<int>> fold_states;
      for (;;) {
        std::vector<int> vals(n - 1);
        for (int i = 0; i < n - 1; ++i) vals[i] = walkers[i].step();
        if (walkers[0].t >= n && !fold_states.insert(vals).second) break;
        std::vector<ElementSet> args;
        args.reserve(n - 1);
        for (int v : vals) args.push_back(ElementSet::singleton(R.size(), v));
        if (M.act_sets(args, M.full_set()).is_subset_of(N)) {
          found = true;
          break;
        }
      }
      if (!found) {
        out.witness_scalars = scalars;
        out.witness_x = x;
        return out;
      }
    }
  } while (next_tuple(scalars, sr));
  out.primary = true;
  return out;
}

}  // namespace hypermod
