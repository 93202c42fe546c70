#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypermod/substructures.hpp"

namespace hypermod {

// Standalone hypermodule on a subhypermodule's carrier, with the induced
// operations. Labels are inherited; the zero stays the ambient zero.
inline Hypermodule restrict_to_submodule(const Hypermodule& M,
                                         const ElementSet& N) {
  std::vector<int> members = N.elements();
  int k = int(members.size());
  std::vector<int> reindex(M.size(), -1);
  for (int i = 0; i < k; ++i) reindex[members[i]] = i;
  auto project = [&](const ElementSet& s) {
    ElementSet out(k);
    s.for_each([&](int e) {
      if (reindex[e] < 0)
        throw StructureViolation("restriction: value escapes the submodule");
      out.insert(reindex[e]);
    });
    return out;
  };

  Hypermodule out;
  out.ring = M.ring;
  for (int e : members) out.carrier.labels.push_back(M.carrier.labels[e]);
  out.zero = reindex[M.zero];

  int m = M.m();
  size_t fsize = 1;
  for (int i = 0; i < m; ++i) fsize *= size_t(k);
  std::vector<ElementSet> ftab(fsize, ElementSet(k));
  std::vector<int> tuple(m, 0), ambient(m);
  size_t rank = 0;
  do {
    for (int i = 0; i < m; ++i) ambient[i] = members[tuple[i]];
    ftab[rank++] = project(M.add.at(ambient));
  } while (next_tuple(tuple, k));
  out.add = HyperOperation(k, m, std::move(ftab));

  int n = M.n(), sr = M.ring->size();
  size_t gsize = 1;
  for (int i = 0; i < n - 1; ++i) gsize *= size_t(sr);
  gsize *= size_t(k);
  out.action_table.assign(gsize, ElementSet(k));
  std::vector<int> scal(n - 1, 0);
  size_t grank = 0;
  do {
    for (int x = 0; x < k; ++x)
      out.action_table[grank++] = project(M.act(scal, members[x]));
  } while (next_tuple(scal, sr));

  out.neg.resize(k);
  for (int i = 0; i < k; ++i) out.neg[i] = reindex[M.negate(members[i])];
  return out;
}

// Quotient of M by a subhypermodule N. Classes are the coset sets
// f(x, N, 0^(m-2)); the quotient tables map representatives through the
// ambient operations. Representative independence is verified exhaustively.
struct QuotientModule {
  Hypermodule quotient;
  std::vector<ElementSet> classes;    // over M, indexed by class id
  std::vector<int> class_of;          // element of M -> class id
};

inline QuotientModule quotient(const Hypermodule& M, const ElementSet& N) {
  if (!is_subhypermodule(M, N))
    throw StructureViolation("quotient by a non-subhypermodule");
  QuotientModule out;
  out.class_of.assign(M.size(), -1);
  for (int x = 0; x < M.size(); ++x) {
    if (out.class_of[x] >= 0) continue;
    ElementSet coset =
        M.hyper_sum(ElementSet::singleton(M.size(), x), N);
    if (!coset.contains(x))
      throw WellDefinednessError("coset of " + M.carrier.labels[x] +
                                 " does not contain it");
    int id = int(out.classes.size());
    bool clash = false;
    coset.for_each([&](int y) {
      if (out.class_of[y] >= 0) clash = true;
    });
    if (clash)
      throw WellDefinednessError("cosets do not partition the carrier");
    coset.for_each([&](int y) { out.class_of[y] = id; });
    out.classes.push_back(coset);
  }

  int q = int(out.classes.size());
  std::vector<int> rep(q);
  for (int c = 0; c < q; ++c) rep[c] = out.classes[c].min_element();

  Hypermodule Q;
  Q.ring = M.ring;
  for (int c = 0; c < q; ++c)
    Q.carrier.labels.push_back(M.carrier.labels[rep[c]]);
  Q.zero = out.class_of[M.zero];

  int m = M.m();
  auto project = [&](const ElementSet& s) {
    ElementSet outset(q);
    s.for_each([&](int y) { outset.insert(out.class_of[y]); });
    return outset;
  };

  // F: evaluate on every representative tuple; all picks must agree.
  {
    size_t fsize = 1;
    for (int i = 0; i < m; ++i) fsize *= size_t(q);
    std::vector<ElementSet> ftab(fsize, ElementSet(q));
    std::vector<int> ct(m, 0);
    size_t rank = 0;
    do {
      ElementSet value(q);
      bool first = true;
      std::vector<std::vector<int>> reps(m);
      for (int i = 0; i < m; ++i) reps[i] = out.classes[ct[i]].elements();
      std::vector<int> pick(m, 0), tuple(m);
      for (;;) {
        for (int i = 0; i < m; ++i) tuple[i] = reps[i][pick[i]];
        ElementSet v = project(M.add.at(tuple));
        if (first) {
          value = v;
          first = false;
        } else if (!(v == value)) {
          throw WellDefinednessError(
              "quotient sum depends on representatives at class tuple " +
              show_tuple(Q.carrier, ct));
        }
        int i = m - 1;
        while (i >= 0 && ++pick[i] == int(reps[i].size())) pick[i--] = 0;
        if (i < 0) break;
      }
      ftab[rank++] = value;
    } while (next_tuple(ct, q));
    Q.add = HyperOperation(q, m, std::move(ftab));
  }

  // G: same treatment for the scalar action.
  {
    int n = M.n(), sr = M.ring->size();
    size_t gsize = 1;
    for (int i = 0; i < n - 1; ++i) gsize *= size_t(sr);
    gsize *= size_t(q);
    Q.action_table.assign(gsize, ElementSet(q));
    std::vector<int> scal(n - 1, 0);
    size_t grank = 0;
    do {
      for (int c = 0; c < q; ++c) {
        ElementSet value(q);
        bool first = true;
        bool bad = false;
        out.classes[c].for_each([&](int x) {
          ElementSet v = project(M.act(scal, x));
          if (first) {
            value = v;
            first = false;
          } else if (!(v == value)) {
            bad = true;
          }
        });
        if (bad)
          throw WellDefinednessError(
              "quotient action depends on representatives");
        Q.action_table[grank++] = value;
      }
    } while (next_tuple(scal, sr));
  }

  ValidationReport rep_q = validate_hypermodule(Q);
  if (!rep_q.ok)
    throw StructureViolation("quotient failed validation:\n" +
                             rep_q.summary());
  out.quotient = std::move(Q);
  return out;
}

// Internal direct sum criterion for t = l(m-1)+1 parts: the extended sum
// recovers M and each part meets the extended sum of the others (with the
// part replaced by {0}) only in zero.
struct DirectSumWitness {
  int l = 0;
  bool sum_check = false;
  bool independence_check = false;
  int failing_part = -1;  // for a failed independence check

  bool ok() const { return sum_check && independence_check; }
};

inline DirectSumWitness internal_direct_sum_check(
    const Hypermodule& M, const std::vector<ElementSet>& parts) {
  int m = M.m();
  int t = int(parts.size());
  if (t < 2 || (t - 1) % (m - 1) != 0)
    throw ArityError("direct sum needs l*(m-1)+1 parts with l >= 1");
  DirectSumWitness w;
  w.l = (t - 1) / (m - 1);
  std::vector<ElementSet> args(parts.begin(), parts.end());
  w.sum_check = M.add.eval_extended(args) == M.full_set();
  w.independence_check = true;
  for (int i = 0; i < t; ++i) {
    std::vector<ElementSet> others(parts.begin(), parts.end());
    others[i] = M.zero_set();
    ElementSet cross = parts[i] & M.add.eval_extended(others);
    if (!(cross == M.zero_set())) {
      w.independence_check = false;
      w.failing_part = i;
      break;
    }
  }
  return w;
}

// External direct sum over a shared ring: Cartesian product carrier with
// componentwise operations. Component embeddings then pass the internal
// direct sum check.
inline Hypermodule external_direct_sum(
    const std::vector<const Hypermodule*>& parts, const Bounds& bounds = {}) {
  if (parts.empty()) throw ArityError("direct sum of zero modules");
  const auto& ring = parts[0]->ring;
  int m = parts[0]->m();
  long long size = 1;
  for (const auto* p : parts) {
    if (!p->ring->structurally_equal(*ring))
      throw StructureViolation("direct sum over different rings");
    if (p->m() != m) throw ArityError("direct sum with mixed arities");
    size *= p->size();
    if (size > bounds.enumeration_bound)
      throw CapacityError("direct sum carrier of size " +
                          std::to_string(size) + " exceeds bound " +
                          std::to_string(bounds.enumeration_bound));
  }
  int t = int(parts.size());
  int s = int(size);
  std::vector<int> strides(t, 1);
  for (int i = t - 2; i >= 0; --i)
    strides[i] = strides[i + 1] * parts[i + 1]->size();
  auto decode = [&](int x, int part) { return (x / strides[part]) % parts[part]->size(); };

  Hypermodule out;
  out.ring = ring;
  for (int x = 0; x < s; ++x) {
    std::string label;
    for (int p = 0; p < t; ++p) {
      if (p) label += "|";
      label += parts[p]->carrier.labels[decode(x, p)];
    }
    out.carrier.labels.push_back(label);
  }
  {
    int z = 0;
    for (int p = 0; p < t; ++p) z += strides[p] * parts[p]->zero;
    out.zero = z;
  }

  auto combine = [&](const std::vector<ElementSet>& comp) {
    // Product of component sets, as a subset of the product carrier.
    ElementSet res(s);
    std::vector<std::vector<int>> elems(t);
    for (int p = 0; p < t; ++p) elems[p] = comp[p].elements();
    std::vector<int> pick(t, 0);
    for (;;) {
      int x = 0;
      for (int p = 0; p < t; ++p) x += strides[p] * elems[p][pick[p]];
      res.insert(x);
      int i = t - 1;
      while (i >= 0 && ++pick[i] == int(elems[i].size())) pick[i--] = 0;
      if (i < 0) break;
    }
    return res;
  };

  {
    size_t fsize = 1;
    for (int i = 0; i < m; ++i) fsize *= size_t(s);
    std::vector<ElementSet> ftab(fsize, ElementSet(s));
    std::vector<int> tuple(m, 0);
    std::vector<ElementSet> comp(t);
    std::vector<int> part_tuple(m);
    size_t rank = 0;
    do {
      for (int p = 0; p < t; ++p) {
        for (int i = 0; i < m; ++i) part_tuple[i] = decode(tuple[i], p);
        comp[p] = parts[p]->add.at(part_tuple);
      }
      ftab[rank++] = combine(comp);
    } while (next_tuple(tuple, s));
    out.add = HyperOperation(s, m, std::move(ftab));
  }

  {
    int n = ring->n(), sr = ring->size();
    size_t gsize = 1;
    for (int i = 0; i < n - 1; ++i) gsize *= size_t(sr);
    gsize *= size_t(s);
    out.action_table.assign(gsize, ElementSet(s));
    std::vector<int> scal(n - 1, 0);
    std::vector<ElementSet> comp(t);
    size_t grank = 0;
    do {
      for (int x = 0; x < s; ++x) {
        for (int p = 0; p < t; ++p)
          comp[p] = parts[p]->act(scal, decode(x, p));
        out.action_table[grank++] = combine(comp);
      }
    } while (next_tuple(scal, sr));
  }

  ValidationReport rep = validate_hypermodule(out);
  if (!rep.ok)
    throw StructureViolation("direct sum failed validation:\n" +
                             rep.summary());
  return out;
}

// Embedding of part `idx` into the product carrier (others at zero).
inline ElementSet direct_sum_embedding(
    const std::vector<const Hypermodule*>& parts, int idx) {
  int t = int(parts.size());
  std::vector<int> strides(t, 1);
  long long size = 1;
  for (int i = t - 2; i >= 0; --i)
    strides[i] = strides[i + 1] * parts[i + 1]->size();
  for (const auto* p : parts) size *= p->size();
  ElementSet out{int(size)};
  for (int v = 0; v < parts[idx]->size(); ++v) {
    int x = 0;
    for (int p = 0; p < t; ++p)
      x += strides[p] * (p == idx ? v : parts[p]->zero);
    out.insert(x);
  }
  return out;
}

}  // namespace hypermod
