#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hypermod/format.hpp"
#include "hypermod/theorems.hpp"

namespace hypermod {

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform for a fixed seed, which the reproducibility contract needs.
struct SplitMix64 {
  uint64_t state = 0;

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough index draw for shuffling small candidate lists.
  size_t below(size_t bound) { return bound ? size_t(next() % bound) : 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
};

// ---- canonical forms ---------------------------------------------------------

namespace detail_search {

inline std::vector<uint64_t> serialize_hyper_table(const HyperOperation& op) {
  std::vector<uint64_t> out;
  out.reserve(op.table().size());
  for (const auto& v : op.table()) out.push_back(v.words()[0]);
  return out;
}

// Table relabeled by permutation p: entry'(t) = p(entry(p^-1(t))).
inline std::vector<uint64_t> permuted_hyper_table(const HyperOperation& op,
                                                  const std::vector<int>& p) {
  int s = op.size(), t = op.arity();
  std::vector<int> inv(s);
  for (int i = 0; i < s; ++i) inv[p[i]] = i;
  std::vector<uint64_t> out;
  out.reserve(op.table().size());
  std::vector<int> tuple(t, 0), pre(t);
  do {
    for (int i = 0; i < t; ++i) pre[i] = inv[tuple[i]];
    uint64_t mask = 0;
    op.at(pre).for_each([&](int e) { mask |= uint64_t{1} << p[e]; });
    out.push_back(mask);
  } while (next_tuple(tuple, s));
  return out;
}

inline std::vector<uint64_t> permuted_single_table(const Operation& op,
                                                   const std::vector<int>& p) {
  int s = op.size(), t = op.arity();
  std::vector<int> inv(s);
  for (int i = 0; i < s; ++i) inv[p[i]] = i;
  std::vector<uint64_t> out;
  out.reserve(op.table().size());
  std::vector<int> tuple(t, 0), pre(t);
  do {
    for (int i = 0; i < t; ++i) pre[i] = inv[tuple[i]];
    out.push_back(uint64_t(p[op.at(pre)]));
  } while (next_tuple(tuple, s));
  return out;
}

// All permutations of 0..s-1 fixing the given points.
template <class Fn>
void for_each_permutation_fixing(int s, const std::vector<int>& fixed,
                                 Fn&& fn) {
  std::vector<int> movable;
  std::vector<bool> is_fixed(s, false);
  for (int f : fixed) is_fixed[f] = true;
  for (int i = 0; i < s; ++i)
    if (!is_fixed[i]) movable.push_back(i);
  std::vector<int> arrangement = movable;
  std::vector<int> p(s);
  do {
    for (int i = 0; i < s; ++i) p[i] = i;
    for (size_t i = 0; i < movable.size(); ++i) p[movable[i]] = arrangement[i];
    fn(p);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

}  // namespace detail_search

// Minimum serialized table over all relabelings fixing the scalar identity.
inline std::vector<uint64_t> canonical_form_hypergroup(
    const HyperOperation& op, int neutral) {
  std::vector<uint64_t> best;
  detail_search::for_each_permutation_fixing(
      op.size(), {neutral}, [&](const std::vector<int>& p) {
        auto cand = detail_search::permuted_hyper_table(op, p);
        if (best.empty() || cand < best) best = std::move(cand);
      });
  return best;
}

// Ring form: minimized over relabelings fixing zero; the image of `one` is
// part of the form so unit position does not fragment isomorphism classes.
inline std::vector<uint64_t> canonical_form_ring(const KrasnerHyperring& R) {
  std::vector<uint64_t> best;
  detail_search::for_each_permutation_fixing(
      R.size(), {R.zero}, [&](const std::vector<int>& p) {
        std::vector<uint64_t> cand;
        cand.push_back(uint64_t(p[R.one]));
        auto h = detail_search::permuted_hyper_table(R.add, p);
        cand.insert(cand.end(), h.begin(), h.end());
        auto k = detail_search::permuted_single_table(R.mul, p);
        cand.insert(cand.end(), k.begin(), k.end());
        if (best.empty() || cand < best) best = std::move(cand);
      });
  return best;
}

// Module form over a pointwise-fixed ring: relabelings of M fixing its zero.
inline std::vector<uint64_t> canonical_form_module(const Hypermodule& M) {
  std::vector<uint64_t> best;
  int sm = M.size(), sr = M.ring->size(), n = M.n();
  detail_search::for_each_permutation_fixing(
      sm, {M.zero}, [&](const std::vector<int>& p) {
        std::vector<int> inv(sm);
        for (int i = 0; i < sm; ++i) inv[p[i]] = i;
        auto cand = detail_search::permuted_hyper_table(M.add, p);
        std::vector<int> scal(n - 1, 0);
        do {
          for (int x = 0; x < sm; ++x) {
            uint64_t mask = 0;
            M.act(scal, inv[x]).for_each(
                [&](int e) { mask |= uint64_t{1} << p[e]; });
            cand.push_back(mask);
          }
        } while (next_tuple(scal, sr));
        if (best.empty() || cand < best) best = std::move(cand);
      });
  return best;
}

// ---- generation --------------------------------------------------------------

struct GenerationOptions {
  bool dedup = true;
  bool random = false;       // randomized candidate order (seeded)
  uint64_t seed = 0;
  long long node_budget = 200'000'000;  // backtracking node cap
};

namespace detail_search {

struct CellSpace {
  int size = 0;   // carrier size
  int arity = 0;  // tuple length
  std::vector<std::vector<int>> cells;  // sorted representative tuples
  std::vector<int> cell_of_rank;        // rank of any tuple -> cell index

  static CellSpace make(int size, int arity) {
    CellSpace cs;
    cs.size = size;
    cs.arity = arity;
    size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= size_t(size);
    cs.cell_of_rank.assign(total, -1);
    std::vector<int> tuple(arity, 0);
    std::map<std::vector<int>, int> index;
    size_t rank = 0;
    do {
      std::vector<int> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      auto it = index.find(sorted);
      int id;
      if (it == index.end()) {
        id = int(cs.cells.size());
        index.emplace(sorted, id);
        cs.cells.push_back(sorted);
      } else {
        id = it->second;
      }
      cs.cell_of_rank[rank++] = id;
    } while (next_tuple(tuple, size));
    return cs;
  }

  int cell_of(std::span<const int> tuple) const {
    return cell_of_rank[tuple_rank(tuple, size)];
  }
};

// Backtracking fill of a commutative canonical m-ary hypergroup table with a
// fixed scalar identity 0 and a fixed inverse pairing. Propagates the
// identity and inverse-membership constraints plus reversibility
// consequences, and prunes with lazily decidable associativity triples.
class HypergroupFiller {
 public:
  HypergroupFiller(int size, int m, std::vector<int> sigma,
                   const GenerationOptions& opts, SplitMix64* rng,
                   long long* nodes,
                   const std::function<bool(const HyperOperation&)>& sink)
      : s_(size), m_(m), sigma_(std::move(sigma)), opts_(opts), rng_(rng),
        nodes_(nodes), sink_(sink), cs_(CellSpace::make(size, m)) {
    values_.assign(cs_.cells.size(), 0);
    assigned_.assign(cs_.cells.size(), false);
    must_.assign(cs_.cells.size(), 0);
  }

  bool run() {
    // Forced cells: identity pattern.
    for (int c = 0; c < int(cs_.cells.size()); ++c) {
      const auto& cell = cs_.cells[c];
      int zeros = 0;
      for (int v : cell) zeros += v == 0;
      if (zeros >= m_ - 1) {
        int x = 0;
        for (int v : cell)
          if (v != 0) x = v;
        values_[c] = uint64_t{1} << x;
        if (zeros == m_) values_[c] = uint64_t{1} << 0;
        assigned_[c] = true;
      }
    }
    order_.clear();
    for (int c = 0; c < int(cs_.cells.size()); ++c)
      if (!assigned_[c]) order_.push_back(c);
    return dfs(0);
  }

 private:
  bool inverse_cell_shape(int c, int* x, int* y) const {
    // sorted cell with exactly m-2 zeros and two nonzero entries (or one
    // nonzero entry twice).
    const auto& cell = cs_.cells[c];
    int zeros = 0;
    std::vector<int> nz;
    for (int v : cell) {
      if (v == 0)
        ++zeros;
      else
        nz.push_back(v);
    }
    if (zeros != m_ - 2 || nz.size() != 2) return false;
    *x = nz[0];
    *y = nz[1];
    return true;
  }

  bool dfs(size_t pos) {
    if (nodes_ && --(*nodes_) < 0)
      throw CapacityError("generation node budget exhausted");
    if (pos == order_.size()) return finish();
    int c = order_[pos];
    std::vector<uint64_t> cands;
    uint64_t full = (uint64_t{1} << s_) - 1;
    int ix, iy;
    bool inv_shape = inverse_cell_shape(c, &ix, &iy);
    for (uint64_t v = 1; v <= full; ++v) {
      if ((v & must_[c]) != must_[c]) continue;
      if (inv_shape) {
        bool want_zero = sigma_[ix] == iy;
        if (bool(v & 1) != want_zero) continue;
      }
      cands.push_back(v);
    }
    if (opts_.random && rng_) rng_->shuffle(cands);
    for (uint64_t v : cands) {
      values_[c] = v;
      assigned_[c] = true;
      std::vector<std::pair<int, uint64_t>> undo;
      if (propagate(c, v, &undo) && assoc_consistent()) {
        if (!dfs(pos + 1)) return false;
      }
      for (auto& [cell, bits] : undo) must_[cell] &= ~bits;
      assigned_[c] = false;
    }
    return true;
  }

  // Reversibility: u in f(cell) forces cell[i] in f(u, sigma(rest)).
  bool propagate(int c, uint64_t v, std::vector<std::pair<int, uint64_t>>* undo) {
    const auto& cell = cs_.cells[c];
    std::vector<int> target(m_);
    for (int u = 0; u < s_; ++u) {
      if (!((v >> u) & 1)) continue;
      for (int i = 0; i < m_; ++i) {
        target[0] = u;
        int q = 1;
        for (int p = 0; p < m_; ++p)
          if (p != i) target[q++] = sigma_[cell[p]];
        std::sort(target.begin(), target.end());
        int tc = cs_.cell_of(target);
        uint64_t need = uint64_t{1} << cell[i];
        if (assigned_[tc]) {
          if (!(values_[tc] & need)) return false;
        } else if (!(must_[tc] & need)) {
          must_[tc] |= need;
          undo->push_back({tc, need});
        }
      }
    }
    return true;
  }

  // Compare all defined nesting pairs on all (2m-1)-tuples.
  bool assoc_consistent() const {
    std::vector<int> tuple(2 * m_ - 1, 0);
    std::vector<int> probe(m_);
    do {
      uint64_t first = ~uint64_t{0};
      bool have_first = false;
      for (int i = 0; i < m_; ++i) {
        uint64_t val;
        if (!nested(tuple, i, &val)) continue;
        if (!have_first) {
          first = val;
          have_first = true;
        } else if (val != first) {
          return false;
        }
      }
    } while (next_tuple(tuple, s_));
    return true;
  }

  bool nested(const std::vector<int>& x, int i, uint64_t* out) const {
    std::vector<int> inner(x.begin() + i, x.begin() + i + m_);
    std::sort(inner.begin(), inner.end());
    int ic = cs_.cell_of(inner);
    if (!assigned_[ic]) return false;
    uint64_t agg = 0;
    std::vector<int> outer(m_);
    for (int u = 0; u < s_; ++u) {
      if (!((values_[ic] >> u) & 1)) continue;
      int q = 0;
      for (int p = 0; p < i; ++p) outer[q++] = x[p];
      outer[q++] = u;
      for (int p = i + m_; p < 2 * m_ - 1; ++p) outer[q++] = x[p];
      std::sort(outer.begin(), outer.end());
      int oc = cs_.cell_of(outer);
      if (!assigned_[oc]) return false;
      agg |= values_[oc];
    }
    *out = agg;
    return true;
  }

  bool finish() {
    size_t total = cs_.cell_of_rank.size();
    std::vector<ElementSet> table(total, ElementSet(s_));
    for (size_t r = 0; r < total; ++r)
      table[r] = ElementSet::from_mask(s_, values_[cs_.cell_of_rank[r]]);
    HyperOperation op(s_, m_, std::move(table));
    CanonicalReport rep = check_canonical_hypergroup(op);
    if (!rep.is_canonical || rep.neutral != 0) return true;
    return sink_(op);
  }

  int s_, m_;
  std::vector<int> sigma_;
  GenerationOptions opts_;
  SplitMix64* rng_;
  long long* nodes_;
  std::function<bool(const HyperOperation&)> sink_;
  CellSpace cs_;
  std::vector<uint64_t> values_, must_;
  std::vector<bool> assigned_;
  std::vector<int> order_;
};

template <class Fn>
void for_each_involution(int size, Fn&& fn) {
  // Involutions of 1..size-1 (0 is its own inverse).
  std::vector<int> sigma(size);
  for (int i = 0; i < size; ++i) sigma[i] = -1;
  sigma[0] = 0;
  std::function<bool(int)> rec = [&](int i) -> bool {
    while (i < size && sigma[i] >= 0) ++i;
    if (i >= size) return fn(sigma);
    sigma[i] = i;
    if (!rec(i + 1)) return false;
    for (int j = i + 1; j < size; ++j) {
      if (sigma[j] >= 0) continue;
      sigma[i] = j;
      sigma[j] = i;
      if (!rec(i + 1)) return false;
      sigma[j] = -1;
    }
    sigma[i] = -1;
    return true;
  };
  rec(1);
}

}  // namespace detail_search

// All commutative canonical m-ary hypergroups on `size` elements with scalar
// identity at index 0, deduplicated up to relabelings fixing it. The sink
// returns false to stop enumeration.
inline void generate_canonical_hypergroups(
    int size, int m, const std::function<bool(const HyperOperation&)>& sink,
    const GenerationOptions& opts = {}) {
  if (size > 5 || m > 3)
    throw CapacityError("hypergroup generation bounded to size <= 5, m <= 3");
  if (size > 1 && m < 2) throw ArityError("m must be >= 2");
  SplitMix64 rng{opts.seed};
  long long nodes = opts.node_budget;
  std::set<std::vector<uint64_t>> seen;
  bool stop = false;
  auto dedup_sink = [&](const HyperOperation& op) {
    if (opts.dedup) {
      auto form = canonical_form_hypergroup(op, 0);
      if (!seen.insert(form).second) return true;
    }
    if (!sink(op)) {
      stop = true;
      return false;
    }
    return true;
  };
  detail_search::for_each_involution(size, [&](const std::vector<int>& sigma) {
    detail_search::HypergroupFiller filler(size, m, sigma, opts,
                                           opts.random ? &rng : nullptr,
                                           &nodes, dedup_sink);
    return filler.run() && !stop;
  });
}

// All Krasner (m,n)-hyperrings on `size` elements (zero at index 0), built
// over every generated additive hypergroup; multiplication tables are filled
// by backtracking with incremental distributivity and associativity pruning,
// then revalidated. Dedup is by ring canonical form.
inline void generate_krasner_hyperrings(
    int size, int m, int n,
    const std::function<bool(const KrasnerHyperring&)>& sink,
    const GenerationOptions& opts = {}) {
  using detail_search::CellSpace;
  SplitMix64 rng{opts.seed};
  std::set<std::vector<uint64_t>> seen;
  bool stop = false;

  generate_canonical_hypergroups(
      size, m,
      [&](const HyperOperation& add) {
        CellSpace cs = CellSpace::make(size, n);
        std::vector<int> one_choices;
        if (size == 1)
          one_choices.push_back(0);  // degenerate one-element ring
        else
          for (int u = 1; u < size; ++u) one_choices.push_back(u);
        if (opts.random) rng.shuffle(one_choices);
        for (int one : one_choices) {
          if (stop) return false;
          std::vector<int> values(cs.cells.size(), -1);
          // Forced: absorbing zero and unit padding.
          for (int c = 0; c < int(cs.cells.size()); ++c) {
            const auto& cell = cs.cells[c];
            bool has_zero = false;
            int ones = 0, other = -1, others = 0;
            for (int v : cell) {
              has_zero = has_zero || v == 0;
              if (v == one) ++ones;
              else if (v != 0) {
                other = v;
                ++others;
              }
            }
            if (has_zero) {
              values[c] = 0;
            } else if (ones == n) {
              values[c] = one;
            } else if (ones == n - 1 && others == 1) {
              values[c] = other;
            }
          }
          std::vector<int> order;
          for (int c = 0; c < int(cs.cells.size()); ++c)
            if (values[c] < 0) order.push_back(c);

          auto assoc_ok = [&]() {
            std::vector<int> tuple(2 * n - 1, 0);
            do {
              int first = -2;
              for (int i = 0; i < n; ++i) {
                std::vector<int> inner(tuple.begin() + i,
                                       tuple.begin() + i + n);
                std::sort(inner.begin(), inner.end());
                int iv = values[cs.cell_of(inner)];
                if (iv < 0) continue;
                std::vector<int> outer(n);
                int q = 0;
                for (int p = 0; p < i; ++p) outer[q++] = tuple[p];
                outer[q++] = iv;
                for (int p = i + n; p < 2 * n - 1; ++p) outer[q++] = tuple[p];
                std::sort(outer.begin(), outer.end());
                int ov = values[cs.cell_of(outer)];
                if (ov < 0) continue;
                if (first == -2)
                  first = ov;
                else if (ov != first)
                  return false;
              }
            } while (next_tuple(tuple, size));
            return true;
          };

          auto distrib_ok = [&]() {
            std::vector<int> outer(n - 1, 0);
            do {
              std::vector<int> xs(m, 0);
              do {
                // values of k(outer with u) for u in h(xs)
                const ElementSet& sum = add.at(xs);
                uint64_t lhs = 0;
                bool defined = true;
                std::vector<int> kt(n);
                sum.for_each([&](int u) {
                  if (!defined) return;
                  int q = 0;
                  kt[q++] = u;
                  for (int p = 0; p < n - 1; ++p) kt[q++] = outer[p];
                  std::sort(kt.begin(), kt.end());
                  int kv = values[cs.cell_of(kt)];
                  if (kv < 0)
                    defined = false;
                  else
                    lhs |= uint64_t{1} << kv;
                });
                if (!defined) continue;
                std::vector<ElementSet> sums;
                for (int j = 0; j < m && defined; ++j) {
                  int q = 0;
                  kt[q++] = xs[j];
                  for (int p = 0; p < n - 1; ++p) kt[q++] = outer[p];
                  std::sort(kt.begin(), kt.end());
                  int kv = values[cs.cell_of(kt)];
                  if (kv < 0)
                    defined = false;
                  else
                    sums.push_back(ElementSet::singleton(size, kv));
                }
                if (!defined) continue;
                uint64_t rhs = add.eval_sets(sums).words()[0];
                if (lhs != rhs) return false;
              } while (next_tuple(xs, size));
            } while (next_tuple(outer, size));
            return true;
          };

          std::function<bool(size_t)> dfs = [&](size_t pos) -> bool {
            if (pos == order.size()) {
              size_t total = cs.cell_of_rank.size();
              std::vector<int> table(total);
              for (size_t r = 0; r < total; ++r)
                table[r] = values[cs.cell_of_rank[r]];
              KrasnerHyperring R;
              R.carrier = make_indexed_carrier(size);
              R.add = add;
              R.mul = Operation(size, n, std::move(table));
              R.zero = 0;
              R.one = one;
              ValidationReport rep = validate_krasner_hyperring(R);
              if (!rep.ok) return true;
              if (opts.dedup) {
                auto form = canonical_form_ring(R);
                if (!seen.insert(form).second) return true;
              }
              if (!sink(R)) {
                stop = true;
                return false;
              }
              return true;
            }
            int c = order[pos];
            std::vector<int> cands;
            for (int v = 0; v < size; ++v) cands.push_back(v);
            if (opts.random) rng.shuffle(cands);
            for (int v : cands) {
              values[c] = v;
              if (distrib_ok() && assoc_ok()) {
                if (!dfs(pos + 1)) return false;
              }
              values[c] = -1;
            }
            return true;
          };
          if (!dfs(0)) return false;
        }
        return !stop;
      },
      opts);
}

// All hypermodules of the given carrier size over a fixed validated ring.
// Additive hypergroups come from the hypergroup generator; action tables are
// filled by backtracking against lazily decidable module axioms, then
// revalidated. Dedup relabels the module carrier only, ring fixed pointwise.
inline void generate_hypermodules(
    std::shared_ptr<const KrasnerHyperring> ring, int msize,
    const std::function<bool(const Hypermodule&)>& sink,
    const GenerationOptions& opts = {}) {
  const KrasnerHyperring& R = *ring;
  if (!R.validated())
    throw InternalError("module generation over an unvalidated ring");
  int n = R.n(), sr = R.size(), m = R.m();
  SplitMix64 rng{opts.seed};
  std::set<std::vector<uint64_t>> seen;
  bool stop = false;

  generate_canonical_hypergroups(
      msize, m,
      [&](const HyperOperation& add) {
        size_t scalar_tuples = 1;
        for (int i = 0; i < n - 1; ++i) scalar_tuples *= size_t(sr);
        size_t total = scalar_tuples * size_t(msize);
        // Action cells as masks over the module carrier; -1 = unassigned.
        std::vector<int64_t> values(total, -1);
        std::vector<std::vector<int>> scalar_of(scalar_tuples);
        {
          std::vector<int> scal(n - 1, 0);
          size_t si = 0;
          do {
            scalar_of[si] = scal;
            bool has_zero = false, all_one = true;
            for (int i = 0; i < n - 1; ++i) {
              has_zero = has_zero || scal[i] == R.zero;
              all_one = all_one && scal[i] == R.one;
            }
            for (int x = 0; x < msize; ++x) {
              size_t rank = si * size_t(msize) + size_t(x);
              if (has_zero || x == 0)
                values[rank] = 1;  // {0}
              else if (all_one)
                values[rank] = int64_t(uint64_t{1} << x);
            }
            ++si;
          } while (next_tuple(scal, sr));
        }
        std::vector<size_t> order;
        for (size_t r = 0; r < total; ++r)
          if (values[r] < 0) order.push_back(r);

        auto value_at = [&](std::span<const int> scal, int x) -> int64_t {
          return values[tuple_rank(scal, sr) * size_t(msize) + size_t(x)];
        };
        auto eval_add_masks = [&](const std::vector<uint64_t>& masks) {
          std::vector<ElementSet> args;
          args.reserve(masks.size());
          for (uint64_t w : masks)
            args.push_back(ElementSet::from_mask(msize, w));
          return add.eval_sets(args).words()[0];
        };

        // Axiom (i), lazily: union over the module sum vs module sum of
        // the images.
        auto axiom_i_ok = [&]() {
          for (size_t si = 0; si < scalar_tuples; ++si) {
            const auto& scal = scalar_of[si];
            std::vector<int> xs(m, 0);
            do {
              uint64_t lhs = 0;
              bool defined = true;
              add.at(xs).for_each([&](int u) {
                if (!defined) return;
                int64_t v = value_at(scal, u);
                if (v < 0)
                  defined = false;
                else
                  lhs |= uint64_t(v);
              });
              if (!defined) continue;
              std::vector<uint64_t> parts;
              for (int j = 0; j < m && defined; ++j) {
                int64_t v = value_at(scal, xs[j]);
                if (v < 0)
                  defined = false;
                else
                  parts.push_back(uint64_t(v));
              }
              if (!defined) continue;
              if (lhs != eval_add_masks(parts)) return false;
            } while (next_tuple(xs, msize));
          }
          return true;
        };

        // Axiom (ii): ring sums in any scalar slot.
        auto axiom_ii_ok = [&]() {
          std::vector<int> rest(n - 2, 0);
          std::vector<int> tup(n - 1);
          do {
            for (int slot = 0; slot < n - 1; ++slot) {
              std::vector<int> ss(m, 0);
              do {
                for (int x = 0; x < msize; ++x) {
                  uint64_t lhs = 0;
                  bool defined = true;
                  R.add.at(ss).for_each([&](int u) {
                    if (!defined) return;
                    for (int p = 0, q = 0; p < n - 1; ++p)
                      tup[p] = (p == slot) ? u : rest[q++];
                    int64_t v = value_at(tup, x);
                    if (v < 0)
                      defined = false;
                    else
                      lhs |= uint64_t(v);
                  });
                  if (!defined) continue;
                  std::vector<uint64_t> parts;
                  for (int j = 0; j < m && defined; ++j) {
                    for (int p = 0, q = 0; p < n - 1; ++p)
                      tup[p] = (p == slot) ? ss[j] : rest[q++];
                    int64_t v = value_at(tup, x);
                    if (v < 0)
                      defined = false;
                    else
                      parts.push_back(uint64_t(v));
                  }
                  if (!defined) continue;
                  if (lhs != eval_add_masks(parts)) return false;
                }
              } while (next_tuple(ss, sr));
            }
          } while (next_tuple(rest, sr));
          return true;
        };

        // Axiom (iii): all defined nestings of a product into the scalars
        // must agree with the composed action.
        auto axiom_iii_ok = [&]() {
          std::vector<int> rs(2 * (n - 1), 0);
          do {
            for (int x = 0; x < msize; ++x) {
              uint64_t agreed = 0;
              bool have = false;
              // RHS: g(head, g(tail, x)).
              {
                std::span<const int> tail(rs.data() + (n - 1), size_t(n - 1));
                int64_t innerv = value_at(tail, x);
                if (innerv >= 0) {
                  std::span<const int> head(rs.data(), size_t(n - 1));
                  uint64_t acc = 0;
                  bool defined = true;
                  for (int u = 0; u < msize && defined; ++u) {
                    if (!((uint64_t(innerv) >> u) & 1)) continue;
                    int64_t v = value_at(head, u);
                    if (v < 0)
                      defined = false;
                    else
                      acc |= uint64_t(v);
                  }
                  if (defined) {
                    agreed = acc;
                    have = true;
                  }
                }
              }
              for (int slot = 0; slot < n - 1; ++slot) {
                std::vector<int> kargs(rs.begin() + slot,
                                       rs.begin() + slot + n);
                int prod = R.mul.at(kargs);
                std::vector<int> tup(n - 1);
                for (int p = 0; p < slot; ++p) tup[p] = rs[p];
                tup[slot] = prod;
                for (int p = slot + 1; p < n - 1; ++p) tup[p] = rs[p + n - 1];
                int64_t v = value_at(tup, x);
                if (v < 0) continue;
                if (!have) {
                  agreed = uint64_t(v);
                  have = true;
                } else if (uint64_t(v) != agreed) {
                  return false;
                }
              }
            }
          } while (next_tuple(rs, sr));
          return true;
        };

        std::function<bool(size_t)> dfs = [&](size_t pos) -> bool {
          if (pos == order.size()) {
            Hypermodule M;
            M.ring = ring;
            M.carrier = make_indexed_carrier(msize, "x");
            M.add = add;
            M.action_table.reserve(total);
            for (size_t r = 0; r < total; ++r)
              M.action_table.push_back(
                  ElementSet::from_mask(msize, uint64_t(values[r])));
            M.zero = 0;
            ValidationReport rep = validate_hypermodule(M);
            if (!rep.ok) return true;
            if (opts.dedup) {
              auto form = canonical_form_module(M);
              if (!seen.insert(form).second) return true;
            }
            if (!sink(M)) {
              stop = true;
              return false;
            }
            return true;
          }
          size_t cell = order[pos];
          uint64_t full = (uint64_t{1} << msize) - 1;
          std::vector<uint64_t> cands;
          for (uint64_t v = 1; v <= full; ++v) cands.push_back(v);
          if (opts.random) rng.shuffle(cands);
          for (uint64_t v : cands) {
            values[cell] = int64_t(v);
            if (axiom_i_ok() && axiom_ii_ok() && axiom_iii_ok()) {
              if (!dfs(pos + 1)) return false;
            }
            values[cell] = -1;
          }
          return true;
        };
        if (!dfs(0)) return false;
        return !stop;
      },
      opts);
}

// ---- hunting -----------------------------------------------------------------

struct SearchSpec {
  int max_size = 2;       // ring and module carrier cap
  int m = 2, n = 2;
  std::string target;     // theorem id, or a property name:
                          // is_multiplication | faithful | is_cyclic
  bool random = false;
  uint64_t seed = 0;
  int count = 0;          // instance cap; 0 = unlimited (exhaustive mode)
  bool dedup = true;
};

struct HuntHit {
  std::string instance;  // serialized structure file
  TheoremVerdict verdict;
};

struct HuntStats {
  long long rings = 0;
  long long modules = 0;
  long long evaluated = 0;
  long long out_of_contract = 0;
};

inline bool is_property_target(const std::string& target) {
  return target == "is_multiplication" || target == "faithful" ||
         target == "is_cyclic";
}

// Exhaustive or seeded-random sweep over generated instances. For theorem
// targets, hits are in-contract failures (hypotheses hold, conclusion does
// not, standing assumptions hold). For property targets, every evaluated
// instance is emitted with the property value in `conclusion_holds`.
inline std::vector<HuntHit> hunt(const SearchSpec& spec,
                                 const Bounds& bounds = {},
                                 HuntStats* stats = nullptr) {
  std::vector<HuntHit> hits;
  HuntStats local;
  bool property = is_property_target(spec.target);
  if (!property) {
    bool known = spec.target.rfind("T3.8.", 0) == 0;
    for (const auto& id : theorem_ids()) known = known || id == spec.target;
    if (!known) throw ArityError("unknown search target: " + spec.target);
  }
  GenerationOptions opts;
  opts.dedup = spec.dedup;
  opts.random = spec.random;
  opts.seed = spec.seed;

  bool done = false;
  auto consider = [&](const Hypermodule& M) {
    ++local.modules;
    auto mp = std::make_shared<Hypermodule>(M);
    Instance inst = analyze_instance(mp, bounds);
    ++local.evaluated;
    if (!inst.assumptions.in_contract()) ++local.out_of_contract;
    if (property) {
      TheoremVerdict v{.id = spec.target};
      v.hypotheses_hold = true;
      v.out_of_contract = !inst.assumptions.in_contract();
      if (spec.target == "is_multiplication")
        v.conclusion_holds = inst.mult.verdict;
      else if (spec.target == "faithful")
        v.conclusion_holds = inst.faithful;
      else
        v.conclusion_holds = inst.cyclic_generator.has_value();
      v.witness = "property value";
      hits.push_back({emit_structure(inst.R(), &inst.mod()), v});
      if (spec.count && int(hits.size()) >= spec.count) done = true;
      return;
    }
    for (const auto& v : run_theorem(inst, spec.target)) {
      if (v.hypotheses_hold && !v.conclusion_holds && !v.out_of_contract) {
        hits.push_back({emit_structure(inst.R(), &inst.mod()), v});
        if (spec.count && int(hits.size()) >= spec.count) {
          done = true;
          return;
        }
      }
    }
  };

  for (int rsize = 1; rsize <= spec.max_size && !done; ++rsize) {
    generate_krasner_hyperrings(
        rsize, spec.m, spec.n,
        [&](const KrasnerHyperring& R) {
          ++local.rings;
          auto rp = std::make_shared<KrasnerHyperring>(R);
          for (int msize = 1; msize <= spec.max_size && !done; ++msize) {
            generate_hypermodules(
                rp, msize,
                [&](const Hypermodule& M) {
                  consider(M);
                  return !done;
                },
                opts);
          }
          return !done;
        },
        opts);
  }
  if (stats) *stats = local;
  return hits;
}

}  // namespace hypermod
