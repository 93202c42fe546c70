#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hypermod/ops.hpp"

namespace hypermod {

struct Carrier {
  std::vector<std::string> labels;

  int size() const { return int(labels.size()); }

  void check() const {
    if (labels.empty()) throw StructureViolation("carrier must be nonempty");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      throw StructureViolation("carrier labels must be pairwise distinct");
  }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == name) return i;
    return -1;
  }
};

inline Carrier make_indexed_carrier(int size, const std::string& prefix = "") {
  Carrier c;
  for (int i = 0; i < size; ++i) c.labels.push_back(prefix + std::to_string(i));
  return c;
}

inline std::string show_tuple(const Carrier& c, std::span<const int> t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += c.labels[t[i]];
  }
  return out + ")";
}

inline std::string show_set(const Carrier& c, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ",";
    out += c.labels[e];
    first = false;
  });
  return out + "}";
}

struct AxiomCheck {
  std::string axiom;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;

  void add(const std::string& axiom, bool pass, const std::string& detail = "") {
    checks.push_back({axiom, pass, detail});
    ok = ok && pass;
  }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.ok ? "  ok   " : "  FAIL ") << c.axiom;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
    return os.str();
  }
};

// Krasner (m,n)-hyperring: additive m-ary canonical hypergroup `add`,
// multiplicative n-ary semigroup `mul`, absorbing zero and scalar unit one.
// `neg` is the additive inverse map, filled by validation.
struct KrasnerHyperring {
  Carrier carrier;
  HyperOperation add;  // arity m
  Operation mul;       // arity n
  int zero = -1;
  int one = -1;
  std::vector<int> neg;

  int size() const { return carrier.size(); }
  int m() const { return add.arity(); }
  int n() const { return mul.arity(); }
  bool validated() const { return !neg.empty(); }

  int negate(int x) const {
    if (neg.empty()) throw InternalError("ring not validated: no inverse map");
    return neg[x];
  }

  ElementSet neg_set(const ElementSet& s) const {
    ElementSet out(size());
    s.for_each([&](int e) { out.insert(negate(e)); });
    return out;
  }

  // h(A, B, 0^(m-2)): the sum of two subsets.
  ElementSet hyper_sum(const ElementSet& a, const ElementSet& b) const {
    std::vector<ElementSet> args;
    args.reserve(m());
    args.push_back(a);
    args.push_back(b);
    for (int i = 2; i < m(); ++i)
      args.push_back(ElementSet::singleton(size(), zero));
    return add.eval_sets(args);
  }

  // k(a, b, 1^(n-2)): the binary product induced by the unit padding.
  int product2(int a, int b) const {
    std::vector<int> t(n(), one);
    t[0] = a;
    t[1] = b;
    return mul.at(t);
  }

  bool structurally_equal(const KrasnerHyperring& o) const {
    return carrier.labels == o.carrier.labels && zero == o.zero &&
           one == o.one && add.arity() == o.add.arity() &&
           mul.arity() == o.mul.arity() && add.table() == o.add.table() &&
           mul.table() == o.mul.table();
  }
};

// Checks the full ring axiom stack and fills the additive inverse map on
// success. Each axiom loop stops at its first (lexicographically least)
// violating tuple; the report lists every axiom with a pass/fail flag.
inline ValidationReport validate_krasner_hyperring(KrasnerHyperring& R) {
  ValidationReport rep;
  R.carrier.check();
  const Carrier& C = R.carrier;
  int s = R.size(), m = R.m(), n = R.n();
  if (R.add.size() != s || R.mul.size() != s)
    throw StructureViolation("operation carrier size mismatch");
  if (R.zero < 0 || R.zero >= s || R.one < 0 || R.one >= s)
    throw StructureViolation("zero/one out of range");

  if (auto c = find_commutativity_violation(R.add))
    rep.add("additive commutativity", false, "at " + show_tuple(C, *c));
  else
    rep.add("additive commutativity", true);

  if (auto a = find_assoc_violation(R.add))
    rep.add("additive associativity", false,
            "at " + show_tuple(C, a->tuple) + " nestings " +
                std::to_string(a->i) + "," + std::to_string(a->j));
  else
    rep.add("additive associativity", true);

  CanonicalReport canon;
  if (rep.ok) {
    canon = check_canonical_hypergroup(R.add);
    if (canon.is_canonical) {
      if (canon.neutral != R.zero)
        rep.add("canonical additive hypergroup", false,
                "scalar identity is " + C.labels[canon.neutral] +
                    ", declared zero is " + C.labels[R.zero]);
      else
        rep.add("canonical additive hypergroup", true);
    } else {
      rep.add("canonical additive hypergroup", false,
              canon.violation +
                  (canon.witness.empty()
                       ? ""
                       : " at " + show_tuple(C, canon.witness)));
    }
  } else {
    rep.add("canonical additive hypergroup", false,
            "skipped: additive laws failed");
  }

  if (auto c = find_commutativity_violation(R.mul))
    rep.add("multiplicative commutativity", false, "at " + show_tuple(C, *c));
  else
    rep.add("multiplicative commutativity", true);

  if (auto a = find_assoc_violation(R.mul))
    rep.add("multiplicative associativity", false,
            "at " + show_tuple(C, a->tuple) + " nestings " +
                std::to_string(a->i) + "," + std::to_string(a->j));
  else
    rep.add("multiplicative associativity", true);

  // Distributivity of mul over add in every slot. Iteration order: slot,
  // then the n-1 outer scalars, then the m summands, all lexicographic.
  {
    bool ok = true;
    std::string detail;
    std::vector<int> outer(n - 1, 0);
    for (int slot = 0; slot < n && ok; ++slot) {
      std::fill(outer.begin(), outer.end(), 0);
      do {
        std::vector<int> xs(m, 0);
        do {
          ElementSet inner = R.add.at(xs);
          std::vector<ElementSet> margs(n);
          for (int p = 0, q = 0; p < n; ++p)
            margs[p] = (p == slot)
                           ? inner
                           : ElementSet::singleton(s, outer[q++]);
          ElementSet lhs = R.mul.eval_sets(margs);
          std::vector<ElementSet> sums;
          sums.reserve(m);
          std::vector<int> mt(n);
          for (int j = 0; j < m; ++j) {
            for (int p = 0, q = 0; p < n; ++p)
              mt[p] = (p == slot) ? xs[j] : outer[q++];
            sums.push_back(ElementSet::singleton(s, R.mul.at(mt)));
          }
          ElementSet rhs = R.add.eval_sets(sums);
          if (!(lhs == rhs)) {
            ok = false;
            detail = "slot " + std::to_string(slot + 1) + ", scalars " +
                     show_tuple(C, outer) + ", summands " + show_tuple(C, xs) +
                     ": " + show_set(C, lhs) + " vs " + show_set(C, rhs);
          }
        } while (ok && next_tuple(xs, s));
      } while (ok && next_tuple(outer, s));
    }
    rep.add("distributivity", ok, detail);
  }

  // Zero absorbing for mul.
  {
    bool ok = true;
    std::string detail;
    std::vector<int> rest(n - 1, 0);
    do {
      std::vector<int> t(n);
      for (int i = 0; i < n && ok; ++i) {
        for (int p = 0, q = 0; p < n; ++p)
          t[p] = (p == i) ? R.zero : rest[q++];
        if (R.mul.at(t) != R.zero) {
          ok = false;
          detail = "at " + show_tuple(C, t);
        }
      }
    } while (ok && next_tuple(rest, s));
    rep.add("zero absorbing", ok, detail);
  }

  // One is a scalar neutral of mul in every slot.
  {
    bool ok = true;
    std::string detail;
    std::vector<int> t(n);
    for (int i = 0; i < n && ok; ++i)
      for (int x = 0; x < s && ok; ++x) {
        std::fill(t.begin(), t.end(), R.one);
        t[i] = x;
        if (R.mul.at(t) != x) {
          ok = false;
          detail = "k" + show_tuple(C, t) + " = " +
                   C.labels[R.mul.at(t)] + ", expected " + C.labels[x];
        }
      }
    rep.add("one neutral", ok, detail);
  }

  if (rep.ok) R.neg = canon.inverse;
  return rep;
}

// (m,n)-hypermodule over a validated Krasner (m,n)-hyperring: canonical
// m-ary hypergroup `add` plus a scalar action table over R^(n-1) x M.
struct Hypermodule {
  std::shared_ptr<const KrasnerHyperring> ring;
  Carrier carrier;
  HyperOperation add;                   // f, arity m over M
  std::vector<ElementSet> action_table; // ranked over R^(n-1) x M
  int zero = -1;
  std::vector<int> neg;

  int size() const { return carrier.size(); }
  int m() const { return add.arity(); }
  int n() const { return ring->n(); }
  bool validated() const { return !neg.empty(); }

  size_t action_rank(std::span<const int> scalars, int x) const {
    size_t r = tuple_rank(scalars, ring->size());
    return r * size_t(size()) + size_t(x);
  }

  const ElementSet& act(std::span<const int> scalars, int x) const {
    if (int(scalars.size()) != n() - 1)
      throw ArityError("scalar action needs n-1 ring arguments");
    return action_table[action_rank(scalars, x)];
  }

  // g(r, 1^(n-2), x).
  const ElementSet& act1(int r, int x) const {
    scratch_.assign(size_t(n() - 1), ring->one);
    scratch_[0] = r;
    return act(scratch_, x);
  }

  // g(S, 1^(n-2), X) = union of the unit-padded action over S x X.
  ElementSet act1_set(const ElementSet& scalars, const ElementSet& xs) const {
    ElementSet out(size());
    scalars.for_each([&](int r) {
      xs.for_each([&](int x) { out |= act1(r, x); });
    });
    return out;
  }

  // Full set extension of g over scalar sets and a module set.
  ElementSet act_sets(std::span<const ElementSet> scalar_sets,
                      const ElementSet& xs) const {
    if (int(scalar_sets.size()) != n() - 1)
      throw ArityError("scalar action needs n-1 ring arguments");
    std::vector<std::vector<int>> elems(scalar_sets.size());
    for (size_t i = 0; i < scalar_sets.size(); ++i)
      elems[i] = scalar_sets[i].elements();
    ElementSet out(size());
    std::vector<int> pick(scalar_sets.size(), 0), tuple(scalar_sets.size());
    for (;;) {
      for (size_t i = 0; i < scalar_sets.size(); ++i)
        tuple[i] = elems[i][pick[i]];
      xs.for_each([&](int x) { out |= act(tuple, x); });
      int i = int(scalar_sets.size()) - 1;
      while (i >= 0 && ++pick[i] == int(elems[i].size())) pick[i--] = 0;
      if (i < 0) break;
    }
    return out;
  }

  int negate(int x) const {
    if (neg.empty()) throw InternalError("module not validated");
    return neg[x];
  }

  // f(A, B, 0^(m-2)): sum of two subsets of M.
  ElementSet hyper_sum(const ElementSet& a, const ElementSet& b) const {
    std::vector<ElementSet> args;
    args.reserve(m());
    args.push_back(a);
    args.push_back(b);
    for (int i = 2; i < m(); ++i)
      args.push_back(ElementSet::singleton(size(), zero));
    return add.eval_sets(args);
  }

  ElementSet full_set() const { return ElementSet::full(size()); }
  ElementSet zero_set() const { return ElementSet::singleton(size(), zero); }

  bool structurally_equal(const Hypermodule& o) const {
    return carrier.labels == o.carrier.labels && zero == o.zero &&
           add.arity() == o.add.arity() && add.table() == o.add.table() &&
           action_table == o.action_table &&
           ring->structurally_equal(*o.ring);
  }

 private:
  mutable std::vector<int> scratch_;
};

// All hypermodule axioms, with the mixed-associativity law checked for every
// nesting slot over 2(n-1) scalars (the printed index ranges of that law are
// normalized to the unique arity-consistent reading). Unitality of the
// action is enforced as well; the report flags it as implied rather than
// listed. Fills the module inverse map on success.
inline ValidationReport validate_hypermodule(Hypermodule& M) {
  ValidationReport rep;
  M.carrier.check();
  if (!M.ring || !M.ring->validated())
    throw InternalError("hypermodule over an unvalidated ring");
  const KrasnerHyperring& R = *M.ring;
  int sm = M.size(), sr = R.size(), m = M.m(), n = M.n();
  size_t want = 1;
  for (int i = 0; i < n - 1; ++i) want *= size_t(sr);
  want *= size_t(sm);
  if (M.action_table.size() != want)
    throw StructureViolation("scalar action table is not total");
  for (const auto& v : M.action_table) {
    if (v.universe() != sm)
      throw StructureViolation("scalar action value over wrong carrier");
    if (v.empty())
      throw StructureViolation("scalar action value must be nonempty");
  }
  if (M.zero < 0 || M.zero >= sm)
    throw StructureViolation("module zero out of range");

  CanonicalReport canon;
  {
    bool laws_ok = true;
    if (auto c = find_commutativity_violation(M.add)) {
      rep.add("module additive commutativity", false,
              "at " + show_tuple(M.carrier, *c));
      laws_ok = false;
    } else {
      rep.add("module additive commutativity", true);
    }
    if (auto a = find_assoc_violation(M.add)) {
      rep.add("module additive associativity", false,
              "at " + show_tuple(M.carrier, a->tuple));
      laws_ok = false;
    } else {
      rep.add("module additive associativity", true);
    }
    if (laws_ok) {
      canon = check_canonical_hypergroup(M.add);
      if (!canon.is_canonical)
        rep.add("module canonical hypergroup", false, canon.violation);
      else if (canon.neutral != M.zero)
        rep.add("module canonical hypergroup", false,
                "scalar identity differs from declared zero");
      else
        rep.add("module canonical hypergroup", true);
    } else {
      rep.add("module canonical hypergroup", false,
              "skipped: additive laws failed");
    }
  }

  std::vector<int> scalars(n - 1, 0);

  // (i) g(r, f(x_1^m)) = f(g(r,x_1), ..., g(r,x_m)).
  {
    bool ok = true;
    std::string detail;
    do {
      std::vector<int> xs(m, 0);
      do {
        ElementSet inner = M.add.at(xs);
        ElementSet lhs(sm);
        inner.for_each([&](int u) { lhs |= M.act(scalars, u); });
        std::vector<ElementSet> parts;
        parts.reserve(m);
        for (int j = 0; j < m; ++j) parts.push_back(M.act(scalars, xs[j]));
        ElementSet rhs = M.add.eval_sets(parts);
        if (!(lhs == rhs)) {
          ok = false;
          detail = "scalars " + show_tuple(R.carrier, scalars) +
                   ", summands " + show_tuple(M.carrier, xs);
        }
      } while (ok && next_tuple(xs, sm));
    } while (ok && next_tuple(scalars, sr));
    rep.add("action distributes over module sum", ok, detail);
  }

  // (ii) g(r_1^{i-1}, h(s_1^m), r_{i+1}^{n-1}, x) = f(g(..s_1..x), ...).
  {
    bool ok = true;
    std::string detail;
    for (int slot = 0; slot < n - 1 && ok; ++slot) {
      std::vector<int> rest(n - 2, 0);
      do {
        std::vector<int> ss(m, 0);
        do {
          for (int x = 0; x < sm && ok; ++x) {
            ElementSet ring_sum = R.add.at(ss);
            std::vector<int> tup(n - 1);
            ElementSet lhs(sm);
            ring_sum.for_each([&](int u) {
              for (int p = 0, q = 0; p < n - 1; ++p)
                tup[p] = (p == slot) ? u : rest[q++];
              lhs |= M.act(tup, x);
            });
            std::vector<ElementSet> parts;
            parts.reserve(m);
            for (int j = 0; j < m; ++j) {
              for (int p = 0, q = 0; p < n - 1; ++p)
                tup[p] = (p == slot) ? ss[j] : rest[q++];
              parts.push_back(M.act(tup, x));
            }
            ElementSet rhs = M.add.eval_sets(parts);
            if (!(lhs == rhs)) {
              ok = false;
              detail = "slot " + std::to_string(slot + 1) + ", ring summands " +
                       show_tuple(R.carrier, ss) + ", x = " +
                       M.carrier.labels[x];
            }
          }
        } while (ok && next_tuple(ss, sr));
      } while (ok && next_tuple(rest, sr));
    }
    rep.add("action distributes over ring sum", ok, detail);
  }

  // (iii) g(r_1^{i-1}, k(r_i^{i+n-1}), r_{i+n}^{2n-2}, x)
  //         = g(r_1^{n-1}, g(r_n^{2n-2}, x)), for every slot i.
  {
    bool ok = true;
    std::string detail;
    std::vector<int> rs(2 * (n - 1), 0);
    do {
      for (int x = 0; x < sm && ok; ++x) {
        ElementSet inner_args(sm);
        ElementSet rhs(sm);
        {
          std::span<const int> tail(rs.data() + (n - 1), size_t(n - 1));
          const ElementSet& inner = M.act(tail, x);
          std::span<const int> head(rs.data(), size_t(n - 1));
          inner.for_each([&](int u) { rhs |= M.act(head, u); });
        }
        for (int slot = 0; slot < n - 1 && ok; ++slot) {
          std::vector<int> kargs(rs.begin() + slot, rs.begin() + slot + n);
          int prod = R.mul.at(kargs);
          std::vector<int> tup(n - 1);
          for (int p = 0; p < slot; ++p) tup[p] = rs[p];
          tup[slot] = prod;
          for (int p = slot + 1; p < n - 1; ++p) tup[p] = rs[p + n - 1];
          if (!(M.act(tup, x) == rhs)) {
            ok = false;
            detail = "slot " + std::to_string(slot + 1) + ", scalars " +
                     show_tuple(R.carrier, rs) + ", x = " +
                     M.carrier.labels[x];
          }
        }
      }
    } while (ok && next_tuple(rs, sr));
    rep.add("action compatible with ring product", ok, detail);
  }

  // (iv) zero scalar in any slot kills: g(..., 0, ..., x) = {0}.
  {
    bool ok = true;
    std::string detail;
    std::vector<int> rest(n - 2, 0);
    do {
      std::vector<int> tup(n - 1);
      for (int slot = 0; slot < n - 1 && ok; ++slot)
        for (int x = 0; x < sm && ok; ++x) {
          for (int p = 0, q = 0; p < n - 1; ++p)
            tup[p] = (p == slot) ? R.zero : rest[q++];
          const ElementSet& v = M.act(tup, x);
          if (!(v.count() == 1 && v.contains(M.zero))) {
            ok = false;
            detail = "scalars " + show_tuple(R.carrier, tup) + ", x = " +
                     M.carrier.labels[x];
          }
        }
    } while (ok && next_tuple(rest, sr));
    rep.add("zero scalar annihilates", ok, detail);
  }

  // Unitality g(1^(n-1), x) = {x}; implied by the surrounding theory rather
  // than listed with the axioms, but enforced here.
  {
    bool ok = true;
    std::string detail;
    std::vector<int> ones(n - 1, R.one);
    for (int x = 0; x < sm && ok; ++x) {
      const ElementSet& v = M.act(ones, x);
      if (!(v.count() == 1 && v.contains(x))) {
        ok = false;
        detail = "x = " + M.carrier.labels[x] + " gives " +
                 show_set(M.carrier, v);
      }
    }
    rep.add("unit scalars act as identity (implied axiom)", ok, detail);
  }

  if (rep.ok) M.neg = canon.inverse;
  return rep;
}

}  // namespace hypermod
