#pragma once

// Shared fixture builders: classical cyclic rings encoded with singleton
// sums, the two-element hyperfield, and the standard small modules used
// across the suite.

#include <memory>
#include <string>
#include <vector>

#include "hypermod/structures.hpp"

namespace fixtures {

using namespace hypermod;

inline std::shared_ptr<KrasnerHyperring> cyclic_ring(int k) {
  auto R = std::make_shared<KrasnerHyperring>();
  R->carrier = make_indexed_carrier(k);
  std::vector<ElementSet> htab;
  std::vector<int> ktab;
  htab.reserve(size_t(k) * k);
  ktab.reserve(size_t(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      htab.push_back(ElementSet::singleton(k, (a + b) % k));
      ktab.push_back((a * b) % k);
    }
  R->add = HyperOperation(k, 2, std::move(htab));
  R->mul = Operation(k, 2, std::move(ktab));
  R->zero = 0;
  R->one = k == 1 ? 0 : 1;
  ValidationReport rep = validate_krasner_hyperring(*R);
  if (!rep.ok) throw std::logic_error("cyclic ring fixture invalid");
  return R;
}

// Two-element Krasner hyperfield: 1+1 = {0,1}, multiplication is min.
inline std::shared_ptr<KrasnerHyperring> k2_ring() {
  auto R = std::make_shared<KrasnerHyperring>();
  R->carrier = make_indexed_carrier(2);
  std::vector<ElementSet> htab{
      ElementSet::singleton(2, 0), ElementSet::singleton(2, 1),
      ElementSet::singleton(2, 1), ElementSet::from_mask(2, 0b11)};
  std::vector<int> ktab{0, 0, 0, 1};
  R->add = HyperOperation(2, 2, std::move(htab));
  R->mul = Operation(2, 2, std::move(ktab));
  R->zero = 0;
  R->one = 1;
  ValidationReport rep = validate_krasner_hyperring(*R);
  if (!rep.ok) throw std::logic_error("k2 fixture invalid");
  return R;
}

// The ring acting on itself: f = h, g(r, x) = {k(r, x)}.
inline std::shared_ptr<Hypermodule> self_module(
    std::shared_ptr<const KrasnerHyperring> R) {
  auto M = std::make_shared<Hypermodule>();
  int s = R->size();
  M->ring = R;
  M->carrier = R->carrier;
  M->add = R->add;
  for (int r = 0; r < s; ++r)
    for (int x = 0; x < s; ++x) {
      std::vector<int> t{r, x};
      M->action_table.push_back(ElementSet::singleton(s, R->mul.at(t)));
    }
  M->zero = R->zero;
  ValidationReport rep = validate_hypermodule(*M);
  if (!rep.ok) throw std::logic_error("self module fixture invalid");
  return M;
}

inline std::shared_ptr<Hypermodule> zero_module(
    std::shared_ptr<const KrasnerHyperring> R) {
  auto M = std::make_shared<Hypermodule>();
  M->ring = R;
  M->carrier.labels = {"z"};
  M->add = HyperOperation(1, 2, {ElementSet::singleton(1, 0)});
  M->action_table.assign(size_t(R->size()), ElementSet::singleton(1, 0));
  M->zero = 0;
  ValidationReport rep = validate_hypermodule(*M);
  if (!rep.ok) throw std::logic_error("zero module fixture invalid");
  return M;
}

// Z/d as a module over Z/k (d must divide k): addition mod d, action
// r.x = (r*x) mod d.
inline std::shared_ptr<Hypermodule> cyclic_module_over(
    std::shared_ptr<const KrasnerHyperring> R, int d) {
  int k = R->size();
  if (d < 1 || k % d != 0)
    throw std::logic_error("cyclic module size must divide the ring size");
  auto M = std::make_shared<Hypermodule>();
  M->ring = R;
  M->carrier = make_indexed_carrier(d, "m");
  std::vector<ElementSet> ftab;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      ftab.push_back(ElementSet::singleton(d, (a + b) % d));
  M->add = HyperOperation(d, 2, std::move(ftab));
  for (int r = 0; r < k; ++r)
    for (int x = 0; x < d; ++x)
      M->action_table.push_back(ElementSet::singleton(d, (r * x) % d));
  M->zero = 0;
  ValidationReport rep = validate_hypermodule(*M);
  if (!rep.ok) throw std::logic_error("cyclic module fixture invalid");
  return M;
}

// Klein four-group as a Z/2 vector space, componentwise.
inline std::shared_ptr<Hypermodule> v4_over_z2() {
  auto R = cyclic_ring(2);
  auto M = std::make_shared<Hypermodule>();
  M->ring = R;
  M->carrier.labels = {"00", "01", "10", "11"};
  std::vector<ElementSet> ftab;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      ftab.push_back(ElementSet::singleton(4, a ^ b));
  M->add = HyperOperation(4, 2, std::move(ftab));
  for (int r = 0; r < 2; ++r)
    for (int x = 0; x < 4; ++x)
      M->action_table.push_back(ElementSet::singleton(4, r == 0 ? 0 : x));
  M->zero = 0;
  ValidationReport rep = validate_hypermodule(*M);
  if (!rep.ok) throw std::logic_error("v4 fixture invalid");
  return M;
}

// Z/k with m-ary sum and n-ary product, both singleton-valued. The m-ary
// sum has a unique scalar identity exactly when gcd(m-1, k) = 1.
inline std::shared_ptr<KrasnerHyperring> cyclic_ring_mn(int k, int m, int n) {
  auto R = std::make_shared<KrasnerHyperring>();
  R->carrier = make_indexed_carrier(k);
  {
    std::vector<ElementSet> htab;
    std::vector<int> t(m, 0);
    do {
      int sum = 0;
      for (int x : t) sum = (sum + x) % k;
      htab.push_back(ElementSet::singleton(k, sum));
    } while (next_tuple(t, k));
    R->add = HyperOperation(k, m, std::move(htab));
  }
  {
    std::vector<int> ktab;
    std::vector<int> t(n, 0);
    do {
      int prod = 1 % k;
      for (int x : t) prod = (prod * x) % k;
      ktab.push_back(prod);
    } while (next_tuple(t, k));
    R->mul = Operation(k, n, std::move(ktab));
  }
  R->zero = 0;
  R->one = k == 1 ? 0 : 1;
  ValidationReport rep = validate_krasner_hyperring(*R);
  if (!rep.ok)
    throw std::logic_error("cyclic (m,n) ring fixture invalid:\n" +
                           rep.summary());
  return R;
}

inline std::shared_ptr<Hypermodule> self_module_mn(
    std::shared_ptr<const KrasnerHyperring> R) {
  auto M = std::make_shared<Hypermodule>();
  int k = R->size(), n = R->n();
  M->ring = R;
  M->carrier = R->carrier;
  M->add = R->add;
  std::vector<int> scal(n - 1, 0);
  do {
    for (int x = 0; x < k; ++x) {
      std::vector<int> t(scal.begin(), scal.end());
      t.push_back(x);
      M->action_table.push_back(ElementSet::singleton(k, R->mul.at(t)));
    }
  } while (next_tuple(scal, k));
  M->zero = 0;
  ValidationReport rep = validate_hypermodule(*M);
  if (!rep.ok)
    throw std::logic_error("self (m,n) module fixture invalid:\n" +
                           rep.summary());
  return M;
}

inline hypermod::ElementSet set_of(int universe, std::vector<int> elems) {
  hypermod::ElementSet s(universe);
  for (int e : elems) s.insert(e);
  return s;
}

}  // namespace fixtures
