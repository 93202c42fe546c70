#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermod/element_set.hpp"
#include "hypermod/tuples.hpp"

namespace hypermod {

inline constexpr long long kDefaultTableBudget = 100'000'000;

// Total t-ary hyperoperation on a carrier 0..size-1: every tuple maps to a
// nonempty subset. Immutable after construction.
class HyperOperation {
 public:
  HyperOperation() = default;

  HyperOperation(int size, int arity, std::vector<ElementSet> table)
      : size_(size), arity_(arity), table_(std::move(table)) {
    if (arity_ < 2) throw ArityError("hyperoperation arity must be >= 2");
    size_t want = checked_table_size(size_, arity_, kDefaultTableBudget,
                                     "hyperoperation");
    if (table_.size() != want)
      throw StructureViolation("hyperoperation table is not total");
    for (const auto& v : table_) {
      if (v.universe() != size_)
        throw StructureViolation("hyperoperation value over wrong carrier");
      if (v.empty())
        throw StructureViolation("hyperoperation value must be nonempty");
    }
  }

  int size() const { return size_; }
  int arity() const { return arity_; }

  const ElementSet& at(std::span<const int> tuple) const {
    if (int(tuple.size()) != arity_)
      throw ArityError("hyperoperation applied to " +
                       std::to_string(tuple.size()) + " arguments, arity is " +
                       std::to_string(arity_));
    return table_[tuple_rank(tuple, size_)];
  }

  const std::vector<ElementSet>& table() const { return table_; }

  // Set extension: union of table entries over the Cartesian product of the
  // argument sets. All arguments must be nonempty.
  ElementSet eval_sets(std::span<const ElementSet> args) const {
    if (int(args.size()) != arity_)
      throw ArityError("hyperoperation set-evaluation arity mismatch");
    std::vector<std::vector<int>> elems(args.size());
    for (size_t i = 0; i < args.size(); ++i) {
      elems[i] = args[i].elements();
      if (elems[i].empty())
        throw StructureViolation("set-evaluation over an empty argument");
    }
    ElementSet out(size_);
    std::vector<int> pick(args.size(), 0), tuple(args.size());
    for (;;) {
      for (size_t i = 0; i < args.size(); ++i) tuple[i] = elems[i][pick[i]];
      out |= table_[tuple_rank(tuple, size_)];
      int i = int(args.size()) - 1;
      while (i >= 0 && ++pick[i] == int(elems[i].size())) pick[i--] = 0;
      if (i < 0) break;
    }
    return out;
  }

  // Fold-evaluation of the l-fold extension on l*(arity-1)+1 argument sets,
  // without materializing the extended table.
  ElementSet eval_extended(std::span<const ElementSet> args) const {
    int step = arity_ - 1;
    if (args.size() < size_t(arity_) || (args.size() - 1) % step != 0)
      throw ArityError("extended evaluation needs l*(arity-1)+1 arguments");
    std::vector<ElementSet> buf(args.begin(), args.begin() + arity_);
    ElementSet acc = eval_sets(buf);
    for (size_t pos = arity_; pos < args.size(); pos += step) {
      buf[0] = acc;
      for (int i = 0; i < step; ++i) buf[1 + i] = args[pos + i];
      acc = eval_sets(buf);
    }
    return acc;
  }

 private:
  int size_ = 0;
  int arity_ = 0;
  std::vector<ElementSet> table_;
};

// Total single-valued t-ary operation.
class Operation {
 public:
  Operation() = default;

  Operation(int size, int arity, std::vector<int> table)
      : size_(size), arity_(arity), table_(std::move(table)) {
    if (arity_ < 2) throw ArityError("operation arity must be >= 2");
    size_t want =
        checked_table_size(size_, arity_, kDefaultTableBudget, "operation");
    if (table_.size() != want)
      throw StructureViolation("operation table is not total");
    for (int v : table_)
      if (v < 0 || v >= size_)
        throw StructureViolation("operation value out of range");
  }

  int size() const { return size_; }
  int arity() const { return arity_; }

  int at(std::span<const int> tuple) const {
    if (int(tuple.size()) != arity_)
      throw ArityError("operation applied to " + std::to_string(tuple.size()) +
                       " arguments, arity is " + std::to_string(arity_));
    return table_[tuple_rank(tuple, size_)];
  }

  const std::vector<int>& table() const { return table_; }

  // {op(x) | x in product of args}.
  ElementSet eval_sets(std::span<const ElementSet> args) const {
    if (int(args.size()) != arity_)
      throw ArityError("operation set-evaluation arity mismatch");
    std::vector<std::vector<int>> elems(args.size());
    for (size_t i = 0; i < args.size(); ++i) {
      elems[i] = args[i].elements();
      if (elems[i].empty())
        throw StructureViolation("set-evaluation over an empty argument");
    }
    ElementSet out(size_);
    std::vector<int> pick(args.size(), 0), tuple(args.size());
    for (;;) {
      for (size_t i = 0; i < args.size(); ++i) tuple[i] = elems[i][pick[i]];
      out.insert(table_[tuple_rank(tuple, size_)]);
      int i = int(args.size()) - 1;
      while (i >= 0 && ++pick[i] == int(elems[i].size())) pick[i--] = 0;
      if (i < 0) break;
    }
    return out;
  }

 private:
  int size_ = 0;
  int arity_ = 0;
  std::vector<int> table_;
};

// Left-nested l-fold extension, materialized. Arity becomes l*(t-1)+1.
inline HyperOperation extend_hyperoperation(
    const HyperOperation& op, int l, long long budget = kDefaultTableBudget) {
  if (l < 1) throw ArityError("extension level must be >= 1");
  if (l == 1) return op;
  int t = op.arity(), s = op.size();
  int prev_arity = (l - 1) * (t - 1) + 1;
  HyperOperation prev = extend_hyperoperation(op, l - 1, budget);
  int ext_arity = l * (t - 1) + 1;
  size_t entries = checked_table_size(s, ext_arity, budget, "extension");
  std::vector<ElementSet> table(entries, ElementSet(s));
  std::vector<int> tuple(ext_arity, 0);
  std::vector<ElementSet> args(t);
  size_t rank = 0;
  do {
    args[0] = prev.at(std::span<const int>(tuple.data(), prev_arity));
    for (int i = 1; i < t; ++i)
      args[i] = ElementSet::singleton(s, tuple[prev_arity + i - 1]);
    table[rank++] = op.eval_sets(args);
  } while (next_tuple(tuple, s));
  return HyperOperation(s, ext_arity, std::move(table));
}

inline Operation extend_operation(const Operation& op, int l,
                                  long long budget = kDefaultTableBudget) {
  if (l < 1) throw ArityError("extension level must be >= 1");
  if (l == 1) return op;
  int t = op.arity(), s = op.size();
  int prev_arity = (l - 1) * (t - 1) + 1;
  Operation prev = extend_operation(op, l - 1, budget);
  int ext_arity = l * (t - 1) + 1;
  size_t entries = checked_table_size(s, ext_arity, budget, "extension");
  std::vector<int> table(entries, 0);
  std::vector<int> tuple(ext_arity, 0), args(t);
  size_t rank = 0;
  do {
    args[0] = prev.at(std::span<const int>(tuple.data(), prev_arity));
    for (int i = 1; i < t; ++i) args[i] = tuple[prev_arity + i - 1];
    table[rank++] = op.at(args);
  } while (next_tuple(tuple, s));
  return Operation(s, ext_arity, std::move(table));
}

// ---- axiom checks ----------------------------------------------------------

// Witness of a failed associativity identity: the (2t-1)-tuple together with
// the 1-based nesting positions i < j whose evaluations differ. Iteration is
// tuple-lexicographic, so the reported witness is the least one.
struct AssocViolation {
  std::vector<int> tuple;
  int i = 0, j = 0;
};

namespace detail {

template <class Op, class Value>
std::optional<AssocViolation> find_assoc_violation_impl(
    const Op& op, Value (*nested)(const Op&, std::span<const int>, int)) {
  int t = op.arity(), s = op.size();
  std::vector<int> tuple(2 * t - 1, 0);
  do {
    Value first = nested(op, tuple, 0);
    for (int i = 1; i < t; ++i) {
      if (!(nested(op, tuple, i) == first))
        return AssocViolation{tuple, 1, i + 1};
    }
  } while (next_tuple(tuple, s));
  return std::nullopt;
}

inline ElementSet nested_hyper(const HyperOperation& op,
                               std::span<const int> x, int i) {
  int t = op.arity(), s = op.size();
  ElementSet inner = op.at(x.subspan(i, t));
  std::vector<ElementSet> args;
  args.reserve(t);
  for (int p = 0; p < i; ++p) args.push_back(ElementSet::singleton(s, x[p]));
  args.push_back(inner);
  for (int p = i + t; p < 2 * t - 1; ++p)
    args.push_back(ElementSet::singleton(s, x[p]));
  return op.eval_sets(args);
}

inline int nested_single(const Operation& op, std::span<const int> x, int i) {
  int t = op.arity();
  std::vector<int> args;
  args.reserve(t);
  for (int p = 0; p < i; ++p) args.push_back(x[p]);
  args.push_back(op.at(x.subspan(i, t)));
  for (int p = i + t; p < 2 * t - 1; ++p) args.push_back(x[p]);
  return op.at(args);
}

}  // namespace detail

inline std::optional<AssocViolation> find_assoc_violation(
    const HyperOperation& op) {
  return detail::find_assoc_violation_impl<HyperOperation, ElementSet>(
      op, &detail::nested_hyper);
}

inline std::optional<AssocViolation> find_assoc_violation(const Operation& op) {
  return detail::find_assoc_violation_impl<Operation, int>(
      op, &detail::nested_single);
}

template <class Op>
bool check_associative(const Op& op) {
  return !find_assoc_violation(op).has_value();
}

// Commutativity via sorted-tuple canonicalization: every entry must agree
// with the entry at its sorted tuple. Returns the least violating tuple.
template <class Op>
std::optional<std::vector<int>> find_commutativity_violation(const Op& op) {
  int t = op.arity(), s = op.size();
  std::vector<int> tuple(t, 0), sorted(t);
  do {
    sorted.assign(tuple.begin(), tuple.end());
    std::sort(sorted.begin(), sorted.end());
    if (!(op.at(tuple) == op.at(sorted))) return tuple;
  } while (next_tuple(tuple, s));
  return std::nullopt;
}

template <class Op>
bool check_commutative(const Op& op) {
  return !find_commutativity_violation(op).has_value();
}

// All e with op(e^(i-1), x, e^(t-i)) = {x} (resp. = x) for every slot i and
// every x.
inline std::vector<int> scalar_neutral_candidates(const HyperOperation& op) {
  int t = op.arity(), s = op.size();
  std::vector<int> out;
  std::vector<int> tuple(t);
  for (int e = 0; e < s; ++e) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) {
      for (int x = 0; x < s && ok; ++x) {
        std::fill(tuple.begin(), tuple.end(), e);
        tuple[i] = x;
        const ElementSet& v = op.at(tuple);
        ok = v.count() == 1 && v.contains(x);
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

inline std::vector<int> scalar_neutral_candidates(const Operation& op) {
  int t = op.arity(), s = op.size();
  std::vector<int> out;
  std::vector<int> tuple(t);
  for (int e = 0; e < s; ++e) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      for (int x = 0; x < s && ok; ++x) {
        std::fill(tuple.begin(), tuple.end(), e);
        tuple[i] = x;
        ok = op.at(tuple) == x;
      }
    if (ok) out.push_back(e);
  }
  return out;
}

// The unique scalar neutral when exactly one candidate exists. For arity >= 3
// several elements can satisfy the neutrality pattern (no two-neutral
// collapse holds there); this returns nullopt in that case and the canonical
// hypergroup check reports the uniqueness failure.
template <class Op>
std::optional<int> find_scalar_neutral(const Op& op) {
  auto c = scalar_neutral_candidates(op);
  if (c.size() == 1) return c[0];
  return std::nullopt;
}

namespace detail {

template <class Op, class IsZeroAt>
std::optional<int> find_zero_impl(const Op& op, IsZeroAt&& is_zero_at) {
  int t = op.arity(), s = op.size();
  std::optional<int> found;
  for (int z = 0; z < s; ++z) {
    bool ok = true;
    std::vector<int> rest(t - 1, 0);
    do {
      std::vector<int> tuple(t);
      for (int i = 0; i < t && ok; ++i) {
        for (int p = 0, q = 0; p < t; ++p) tuple[p] = (p == i) ? z : rest[q++];
        ok = is_zero_at(tuple, z);
      }
    } while (ok && next_tuple(rest, s));
    if (ok) {
      if (found)
        throw InternalError("two distinct zero elements; impossible");
      found = z;
    }
  }
  return found;
}

}  // namespace detail

// Absorbing element of a single-valued operation; unique when present.
inline std::optional<int> find_zero(const Operation& op) {
  return detail::find_zero_impl(op, [&](std::span<const int> t, int z) {
    return op.at(t) == z;
  });
}

// Absorbing element of a hyperoperation (value {z} in every slot).
inline std::optional<int> find_zero(const HyperOperation& op) {
  return detail::find_zero_impl(op, [&](std::span<const int> t, int z) {
    const ElementSet& v = op.at(t);
    return v.count() == 1 && v.contains(z);
  });
}

// Canonical hypergroup check: unique scalar identity, unique inverses,
// reversibility, and quasihypergroup solvability, on top of commutativity
// and associativity. `inverse` is filled when the check reaches the inverse
// axiom; `violation`/`witness` name the first failed axiom.
struct CanonicalReport {
  bool is_canonical = false;
  int neutral = -1;
  std::vector<int> inverse;
  std::string violation;
  std::vector<int> witness;
};

inline CanonicalReport check_canonical_hypergroup(const HyperOperation& op) {
  CanonicalReport rep;
  int t = op.arity(), s = op.size();
  if (auto c = find_commutativity_violation(op)) {
    rep.violation = "commutativity";
    rep.witness = *c;
    return rep;
  }
  if (auto a = find_assoc_violation(op)) {
    rep.violation = "associativity";
    rep.witness = a->tuple;
    return rep;
  }
  auto neutrals = scalar_neutral_candidates(op);
  if (neutrals.empty()) {
    rep.violation = "scalar identity: none";
    return rep;
  }
  if (neutrals.size() > 1) {
    rep.violation = "scalar identity: not unique";
    rep.witness = {neutrals[0], neutrals[1]};
    return rep;
  }
  int e = neutrals[0];
  rep.neutral = e;
  rep.inverse.assign(s, -1);
  std::vector<int> tuple(t, e);
  for (int x = 0; x < s; ++x) {
    std::vector<int> inv;
    for (int y = 0; y < s; ++y) {
      tuple[0] = x;
      tuple[1] = y;
      if (op.at(tuple).contains(e)) inv.push_back(y);
    }
    if (inv.empty()) {
      rep.violation = "inverse: none";
      rep.witness = {x};
      return rep;
    }
    if (inv.size() > 1) {
      rep.violation = "inverse: not unique";
      rep.witness = {x, inv[0], inv[1]};
      return rep;
    }
    rep.inverse[x] = inv[0];
  }
  // Reversibility: x in f(x_1^t) implies x_i in f(x, inverses of the rest).
  {
    std::vector<int> args(t, 0), rev(t);
    do {
      const ElementSet& val = op.at(args);
      bool bad = false;
      int bad_x = -1, bad_i = -1;
      val.for_each([&](int x) {
        if (bad) return;
        for (int i = 0; i < t; ++i) {
          rev[0] = x;
          int q = 1;
          for (int p = 0; p < t; ++p)
            if (p != i) rev[q++] = rep.inverse[args[p]];
          if (!op.at(rev).contains(args[i])) {
            bad = true;
            bad_x = x;
            bad_i = i;
            return;
          }
        }
      });
      if (bad) {
        rep.violation = "reversibility";
        rep.witness = args;
        rep.witness.push_back(bad_x);
        rep.witness.push_back(bad_i + 1);
        return rep;
      }
    } while (next_tuple(args, s));
  }
  // Solvability: b in f(a_1^{i-1}, x, a_{i+1}^t) has a solution x for every
  // slot and every choice of a's and b.
  {
    std::vector<int> rest(t - 1, 0);
    do {
      for (int i = 0; i < t; ++i) {
        ElementSet reach(s);
        std::vector<int> tup(t);
        for (int x = 0; x < s; ++x) {
          for (int p = 0, q = 0; p < t; ++p) tup[p] = (p == i) ? x : rest[q++];
          reach |= op.at(tup);
        }
        if (reach.count() != s) {
          ElementSet missing = ElementSet::full(s) - reach;
          rep.violation = "solvability";
          rep.witness = rest;
          rep.witness.push_back(i + 1);
          rep.witness.push_back(missing.min_element());
          return rep;
        }
      }
    } while (next_tuple(rest, s));
  }
  rep.is_canonical = true;
  return rep;
}

}  // namespace hypermod
