#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypermod/structures.hpp"

namespace hypermod {

struct Bounds {
  long long table_budget = kDefaultTableBudget;
  int enumeration_bound = 12;  // carrier size cap for lattice enumeration
  int family_cap = 4;          // family size cap for quantified predicates
  int t35_family_cap = 3;      // intersection-law families: up to this size,
                               // plus the full family
  int cofin_cap = 20;          // subhypermodule count cap for the literal
                               // cofinitely-generated check
};

// ---- membership predicates -------------------------------------------------

// m-ary subhypergroup: nonempty, closed under the hyperoperation, and the
// equation b in f(b_1^{i-1}, x, b_{i+1}^m) is solvable inside B.
inline bool is_subhypergroup(const HyperOperation& f, const ElementSet& B) {
  if (B.empty()) return false;
  int t = f.arity();
  std::vector<int> members = B.elements();
  int k = int(members.size());
  {
    std::vector<int> pick(t, 0), tuple(t);
    for (;;) {
      for (int i = 0; i < t; ++i) tuple[i] = members[pick[i]];
      if (!f.at(tuple).is_subset_of(B)) return false;
      int i = t - 1;
      while (i >= 0 && ++pick[i] == k) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  // Solvability within B.
  {
    std::vector<int> pick(t - 1, 0), tuple(t);
    for (;;) {
      for (int slot = 0; slot < t; ++slot) {
        ElementSet reach(f.size());
        for (int y : members) {
          for (int p = 0, q = 0; p < t; ++p)
            tuple[p] = (p == slot) ? y : members[pick[q++]];
          reach |= f.at(tuple);
        }
        if (!B.is_subset_of(reach)) return false;
      }
      int i = t - 2;
      while (i >= 0 && ++pick[i] == k) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  return true;
}

// Hyperideal: additive subhypergroup absorbing under mul in every slot.
inline bool is_hyperideal(const KrasnerHyperring& R, const ElementSet& I) {
  if (I.empty() || !is_subhypergroup(R.add, I)) return false;
  int n = R.n(), s = R.size();
  std::vector<int> rest(n - 1, 0), tuple(n);
  do {
    bool ok = true;
    I.for_each([&](int a) {
      if (!ok) return;
      for (int slot = 0; slot < n; ++slot) {
        for (int p = 0, q = 0; p < n; ++p)
          tuple[p] = (p == slot) ? a : rest[q++];
        if (!I.contains(R.mul.at(tuple))) {
          ok = false;
          return;
        }
      }
    });
    if (!ok) return false;
  } while (next_tuple(rest, s));
  return true;
}

// Subhypermodule with respect to a scalar set (defaults to all of R).
inline bool is_subhypermodule(const Hypermodule& M, const ElementSet& N,
                              const ElementSet* scalars = nullptr) {
  if (N.empty() || !is_subhypergroup(M.add, N)) return false;
  int n = M.n(), sr = M.ring->size();
  std::vector<int> svals;
  if (scalars)
    svals = scalars->elements();
  else {
    svals.resize(sr);
    for (int i = 0; i < sr; ++i) svals[i] = i;
  }
  int k = int(svals.size());
  if (k == 0) return true;
  std::vector<int> pick(n - 1, 0), tuple(n - 1);
  for (;;) {
    for (int i = 0; i < n - 1; ++i) tuple[i] = svals[pick[i]];
    bool ok = true;
    N.for_each([&](int x) {
      if (ok && !M.act(tuple, x).is_subset_of(N)) ok = false;
    });
    if (!ok) return false;
    int i = n - 2;
    while (i >= 0 && ++pick[i] == k) pick[i--] = 0;
    if (i < 0) break;
  }
  return true;
}

// ---- closures and enumeration ----------------------------------------------

namespace detail {

// Closure of a seed to a hyperideal: additive values, additive inverses,
// and absorption products, iterated to a fixpoint.
inline ElementSet hyperideal_closure(const KrasnerHyperring& R,
                                     ElementSet seed) {
  seed.insert(R.zero);
  int s = R.size(), m = R.m(), n = R.n();
  bool grew = true;
  while (grew) {
    grew = false;
    ElementSet next = seed;
    // additive closure
    std::vector<int> members = seed.elements();
    int k = int(members.size());
    std::vector<int> pick(m, 0), tuple(m);
    for (;;) {
      for (int i = 0; i < m; ++i) tuple[i] = members[pick[i]];
      next |= R.add.at(tuple);
      int i = m - 1;
      while (i >= 0 && ++pick[i] == k) pick[i--] = 0;
      if (i < 0) break;
    }
    // inverses
    seed.for_each([&](int a) { next.insert(R.negate(a)); });
    // absorption
    {
      std::vector<int> rest(n - 1, 0), tup(n);
      do {
        seed.for_each([&](int a) {
          for (int slot = 0; slot < n; ++slot) {
            for (int p = 0, q = 0; p < n; ++p)
              tup[p] = (p == slot) ? a : rest[q++];
            next.insert(R.mul.at(tup));
          }
        });
      } while (next_tuple(rest, s));
    }
    if (!(next == seed)) {
      seed = next;
      grew = true;
    }
  }
  return seed;
}

inline ElementSet submodule_closure(const Hypermodule& M, ElementSet seed) {
  seed.insert(M.zero);
  int sr = M.ring->size(), m = M.m(), n = M.n();
  bool grew = true;
  while (grew) {
    grew = false;
    ElementSet next = seed;
    std::vector<int> members = seed.elements();
    int k = int(members.size());
    std::vector<int> pick(m, 0), tuple(m);
    for (;;) {
      for (int i = 0; i < m; ++i) tuple[i] = members[pick[i]];
      next |= M.add.at(tuple);
      int i = m - 1;
      while (i >= 0 && ++pick[i] == k) pick[i--] = 0;
      if (i < 0) break;
    }
    seed.for_each([&](int x) { next.insert(M.negate(x)); });
    {
      std::vector<int> scal(n - 1, 0);
      do {
        seed.for_each([&](int x) { next |= M.act(scal, x); });
      } while (next_tuple(scal, sr));
    }
    if (!(next == seed)) {
      seed = next;
      grew = true;
    }
  }
  return seed;
}

template <class Pred, class Close>
std::vector<ElementSet> enumerate_closed(int size, int zero, Pred&& is_valid,
                                         Close&& close, bool use_closure) {
  std::vector<ElementSet> out;
  if (!use_closure) {
    // Every subset containing zero, filtered by the invariant.
    uint64_t total = uint64_t{1} << (size - 1);
    for (uint64_t bits = 0; bits < total; ++bits) {
      ElementSet cand(size);
      cand.insert(zero);
      int b = 0;
      for (int e = 0; e < size; ++e) {
        if (e == zero) continue;
        if ((bits >> b) & 1) cand.insert(e);
        ++b;
      }
      if (is_valid(cand)) out.push_back(cand);
    }
  } else {
    // Grow closures of generator sets instead of filtering the powerset.
    std::set<ElementSet> seen;
    std::vector<ElementSet> work;
    ElementSet base = close(ElementSet::singleton(size, zero));
    seen.insert(base);
    work.push_back(base);
    while (!work.empty()) {
      ElementSet cur = work.back();
      work.pop_back();
      for (int e = 0; e < size; ++e) {
        if (cur.contains(e)) continue;
        ElementSet bigger = cur;
        bigger.insert(e);
        ElementSet cl = close(bigger);
        if (seen.insert(cl).second) work.push_back(cl);
      }
    }
    for (const auto& c : seen)
      if (is_valid(c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), canonical_set_less);
  return out;
}

}  // namespace detail

enum class EnumerationStrategy { automatic, naive, closure };

// All hyperideals, in canonical (size, then block) order.
inline std::vector<ElementSet> enumerate_hyperideals(
    const KrasnerHyperring& R, const Bounds& bounds = {},
    EnumerationStrategy strategy = EnumerationStrategy::automatic) {
  int s = R.size();
  if (s > bounds.enumeration_bound)
    throw CapacityError("hyperideal enumeration: carrier size " +
                        std::to_string(s) + " exceeds bound " +
                        std::to_string(bounds.enumeration_bound));
  bool closure = strategy == EnumerationStrategy::closure ||
                 (strategy == EnumerationStrategy::automatic && s > 8);
  return detail::enumerate_closed(
      s, R.zero, [&](const ElementSet& c) { return is_hyperideal(R, c); },
      [&](ElementSet seed) { return detail::hyperideal_closure(R, seed); },
      closure);
}

inline std::vector<ElementSet> enumerate_subhypermodules(
    const Hypermodule& M, const Bounds& bounds = {},
    EnumerationStrategy strategy = EnumerationStrategy::automatic,
    const ElementSet* scalars = nullptr) {
  int s = M.size();
  if (s > bounds.enumeration_bound)
    throw CapacityError("subhypermodule enumeration: carrier size " +
                        std::to_string(s) + " exceeds bound " +
                        std::to_string(bounds.enumeration_bound));
  bool closure = strategy == EnumerationStrategy::closure ||
                 (strategy == EnumerationStrategy::automatic && s > 8);
  if (scalars) closure = false;  // scalar-restricted lattices stay small
  return detail::enumerate_closed(
      s, M.zero,
      [&](const ElementSet& c) { return is_subhypermodule(M, c, scalars); },
      [&](ElementSet seed) { return detail::submodule_closure(M, seed); },
      closure);
}

// ---- derived ideal-theoretic objects ----------------------------------------

// S_N = {r in R | g(r, 1^(n-2), M) <= N}. The result is always a hyperideal
// on validated inputs; a failure is reported as a structure violation.
inline ElementSet colon_ideal(const Hypermodule& M, const ElementSet& N) {
  const KrasnerHyperring& R = *M.ring;
  ElementSet out(R.size());
  for (int r = 0; r < R.size(); ++r) {
    bool ok = true;
    for (int x = 0; x < M.size() && ok; ++x)
      ok = M.act1(r, x).is_subset_of(N);
    if (ok) out.insert(r);
  }
  if (!is_hyperideal(R, out))
    throw StructureViolation("colon ideal is not a hyperideal");
  return out;
}

struct AnnihilatorSets {
  ElementSet all;      // A(x) = {r | 0 in g(r, 1^(n-2), x)}
  ElementSet nonzero;  // F_x  = A(x) minus the zero scalar
};

inline AnnihilatorSets annihilator_sets(const Hypermodule& M, int x) {
  const KrasnerHyperring& R = *M.ring;
  AnnihilatorSets out{ElementSet(R.size()), ElementSet(R.size())};
  for (int r = 0; r < R.size(); ++r)
    if (M.act1(r, x).contains(M.zero)) out.all.insert(r);
  out.nonzero = out.all;
  out.nonzero.erase(R.zero);
  return out;
}

// Faithful: no nonzero scalar annihilates any nonzero element.
inline bool is_faithful(const Hypermodule& M) {
  for (int x = 0; x < M.size(); ++x) {
    if (x == M.zero) continue;
    if (!annihilator_sets(M, x).nonzero.empty()) return false;
  }
  return true;
}

// g(I, 1^(n-2), M) for a scalar subset I. When I is a hyperideal the result
// must be a subhypermodule; otherwise a structure violation is raised.
inline ElementSet ideal_action(const Hypermodule& M, const ElementSet& I) {
  if (I.empty()) throw StructureViolation("ideal action of an empty set");
  ElementSet out = M.act1_set(I, M.full_set());
  if (is_hyperideal(*M.ring, I) && !is_subhypermodule(M, out))
    throw StructureViolation("action of a hyperideal is not a subhypermodule");
  return out;
}

// Action restricted to a subset X of the module.
inline ElementSet action_on(const Hypermodule& M, const ElementSet& I,
                            const ElementSet& X) {
  return M.act1_set(I, X);
}

// Smallest hyperideal containing {k(a, b, 1^(n-2)) | a in I, b in J}.
inline ElementSet ideal_product(const KrasnerHyperring& R, const ElementSet& I,
                                const ElementSet& J) {
  ElementSet gen(R.size());
  I.for_each([&](int a) {
    J.for_each([&](int b) { gen.insert(R.product2(a, b)); });
  });
  return detail::hyperideal_closure(R, gen);
}

// ---- powers and radicals -----------------------------------------------------

// Walk the representable power exponents in increasing order: t = 1..n via
// unit padding k(r^(t), 1^(n-t)), then t = l(n-1)+1 via the folded extension.
// Yields (t, value) until the fold orbit revisits a fold value, which bounds
// the search without a magic constant. Stops early when fn returns false.
template <class Fn>
void for_each_power(const KrasnerHyperring& R, int r, Fn&& fn) {
  const int n = R.n();
  int fold_value = -1;
  for (int t = 1; t <= n; ++t) {
    std::vector<int> args(n, R.one);
    for (int i = 0; i < t; ++i) args[i] = r;
    int v = R.mul.at(args);
    if (t == n) fold_value = v;
    if (!fn(t, v)) return;
  }
  std::set<int> fold_seen{fold_value};
  for (int l = 2;; ++l) {
    std::vector<int> args(n, r);
    args[0] = fold_value;
    fold_value = R.mul.at(args);
    if (!fold_seen.insert(fold_value).second) return;
    if (!fn(l * (n - 1) + 1, fold_value)) return;
  }
}

// Radical: elements some representable power of which lies in Q.
inline ElementSet radical(const KrasnerHyperring& R, const ElementSet& Q) {
  ElementSet out(R.size());
  for (int r = 0; r < R.size(); ++r) {
    bool in = false;
    for_each_power(R, r, [&](int, int v) {
      if (Q.contains(v)) {
        in = true;
        return false;
      }
      return true;
    });
    if (in) out.insert(r);
  }
  return out;
}

struct IdealClassification {
  bool proper = false;
  bool is_maximal = false;
  bool is_prime = false;
  bool is_primary = false;
  ElementSet radical_set;
};

// Maximality is decided against the supplied full ideal lattice; prime and
// primary are decided pointwise. The primary predicate used: whenever
// k(x_1^n) lands in Q and x_i does not, the product with slot i replaced by
// the unit lies in the radical of Q.
inline IdealClassification classify_ideal(const KrasnerHyperring& R,
                                          const ElementSet& Q,
                                          const std::vector<ElementSet>& all) {
  IdealClassification out;
  out.radical_set = radical(R, Q);
  int s = R.size(), n = R.n();
  out.proper = Q.count() < s;
  if (!out.proper) return out;
  out.is_maximal = true;
  for (const auto& I : all) {
    if (I.count() == s || I == Q) continue;
    if (Q.is_subset_of(I)) {
      out.is_maximal = false;
      break;
    }
  }
  out.is_prime = true;
  out.is_primary = true;
  std::vector<int> tuple(n, 0);
  do {
    if (!Q.contains(R.mul.at(tuple))) continue;
    bool some_in = false;
    for (int i = 0; i < n; ++i) some_in = some_in || Q.contains(tuple[i]);
    if (!some_in) out.is_prime = false;
    for (int i = 0; i < n && out.is_primary; ++i) {
      if (Q.contains(tuple[i])) continue;
      std::vector<int> rest = tuple;
      rest[i] = R.one;
      if (!out.radical_set.contains(R.mul.at(rest))) out.is_primary = false;
    }
    if (!out.is_prime && !out.is_primary) break;
  } while (next_tuple(tuple, s));
  return out;
}

// Intersection of all maximal hyperideals. Finite unital rings with a proper
// ideal always have one; absence indicates the degenerate one-element ring.
inline ElementSet jacobson_radical_ring(const KrasnerHyperring& R,
                                        const std::vector<ElementSet>& ideals) {
  ElementSet out = ElementSet::full(R.size());
  bool found = false;
  for (const auto& I : ideals) {
    if (classify_ideal(R, I, ideals).is_maximal) {
      out &= I;
      found = true;
    }
  }
  if (!found)
    throw InternalError("no maximal hyperideal found");
  return out;
}

// ---- torsion and cyclicity ---------------------------------------------------

struct TorsionPart {
  ElementSet lower;  // 0 in g(h(1,-p,0^(m-2)), 1^(n-2), x) for some p in P
  ElementSet upper;  // the same value set is exactly {0}
};

inline TorsionPart torsion_part(const Hypermodule& M, const ElementSet& P) {
  const KrasnerHyperring& R = *M.ring;
  TorsionPart out{ElementSet(M.size()), ElementSet(M.size())};
  std::vector<ElementSet> factors;
  P.for_each([&](int p) {
    factors.push_back(R.hyper_sum(ElementSet::singleton(R.size(), R.one),
                                  ElementSet::singleton(R.size(), R.negate(p))));
  });
  for (int x = 0; x < M.size(); ++x) {
    ElementSet xs = ElementSet::singleton(M.size(), x);
    for (const auto& f : factors) {
      ElementSet v = M.act1_set(f, xs);
      if (v.contains(M.zero)) out.lower.insert(x);
      if (v.count() == 1 && v.contains(M.zero)) {
        out.upper.insert(x);
        break;
      }
    }
  }
  return out;
}

struct PCyclicResult {
  bool cyclic = false;
  int q = -1;          // scalar witness from P
  int generator = -1;  // module witness
};

// P-cyclic: g(h(1,-q,0^(m-2)), 1^(n-2), M) <= g(R, 1^(n-2), x) for some
// q in P and x in M. Witnesses are the least such pair.
inline PCyclicResult is_P_cyclic(const Hypermodule& M, const ElementSet& P) {
  const KrasnerHyperring& R = *M.ring;
  ElementSet rfull = ElementSet::full(R.size());
  std::vector<int> ps = P.elements();
  for (int q : ps) {
    ElementSet f = R.hyper_sum(ElementSet::singleton(R.size(), R.one),
                               ElementSet::singleton(R.size(), R.negate(q)));
    ElementSet lhs = M.act1_set(f, M.full_set());
    for (int x = 0; x < M.size(); ++x) {
      ElementSet orbit =
          M.act1_set(rfull, ElementSet::singleton(M.size(), x));
      if (lhs.is_subset_of(orbit)) return {true, q, x};
    }
  }
  return {};
}

// ---- standing conventions ----------------------------------------------------

// The three standing conventions assumed throughout the development:
// (a) singleton witnesses inside unit-padded actions of scalar sets,
// (b) h(r, -r, 0^(m-2)) = {0} exactly,
// (c) the two torsion comprehensions agree at every maximal hyperideal.
// Instances violating any of them still evaluate, but their verdicts are
// marked out-of-contract.
struct AssumptionReport {
  bool singleton_witness = false;
  bool cancellation_singleton = false;
  bool torsion_agree = false;
  std::vector<AxiomCheck> checks;

  bool in_contract() const {
    return singleton_witness && cancellation_singleton && torsion_agree;
  }
};

inline AssumptionReport check_standing_assumptions(
    const Hypermodule& M, const std::vector<ElementSet>& ideals,
    const std::vector<ElementSet>& maximal_ideals) {
  const KrasnerHyperring& R = *M.ring;
  AssumptionReport rep;
  // (a) Scalar-set ranges: all hyperideals, or the full powerset of R when
  // the ring is small enough for that to be affordable.
  {
    bool ok = true;
    std::string detail;
    std::vector<ElementSet> range;
    if (R.size() <= 4) {
      uint64_t total = uint64_t{1} << R.size();
      for (uint64_t bits = 1; bits < total; ++bits)
        range.push_back(ElementSet::from_mask(R.size(), bits));
    } else {
      range = ideals;
    }
    for (const auto& I : range) {
      if (!ok) break;
      for (int x = 0; x < M.size() && ok; ++x) {
        ElementSet xs = ElementSet::singleton(M.size(), x);
        ElementSet reach = M.act1_set(I, xs);
        reach.for_each([&](int v) {
          if (!ok) return;
          bool witness = false;
          I.for_each([&](int a) {
            if (witness) return;
            const ElementSet& va = M.act1(a, x);
            witness = va.count() == 1 && va.contains(v);
          });
          if (!witness) {
            ok = false;
            detail = "no singleton witness for " + M.carrier.labels[v] +
                     " in g(" + show_set(R.carrier, I) + ",1...," +
                     M.carrier.labels[x] + ")";
          }
        });
      }
    }
    rep.singleton_witness = ok;
    rep.checks.push_back({"singleton witness in scalar-set actions", ok, detail});
  }
  // (b)
  {
    bool ok = true;
    std::string detail;
    for (int r = 0; r < R.size() && ok; ++r) {
      ElementSet v = R.hyper_sum(ElementSet::singleton(R.size(), r),
                                 ElementSet::singleton(R.size(), R.negate(r)));
      if (!(v.count() == 1 && v.contains(R.zero))) {
        ok = false;
        detail = "h(" + R.carrier.labels[r] + ",-" + R.carrier.labels[r] +
                 ",0...) = " + show_set(R.carrier, v);
      }
    }
    rep.cancellation_singleton = ok;
    rep.checks.push_back({"additive cancellation is singleton", ok, detail});
  }
  // (c)
  {
    bool ok = true;
    std::string detail;
    for (const auto& P : maximal_ideals) {
      TorsionPart t = torsion_part(M, P);
      if (!(t.lower == t.upper)) {
        ok = false;
        detail = "torsion comprehensions differ at P = " +
                 show_set(R.carrier, P);
        break;
      }
    }
    rep.torsion_agree = ok;
    rep.checks.push_back({"torsion comprehensions agree", ok, detail});
  }
  return rep;
}

}  // namespace hypermod
