#include <catch2/catch_amalgamated.hpp>

#include "hypermod/constructions.hpp"
#include "hypermod/multiplication.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace hypermod;
using fixtures::set_of;

namespace {

uint64_t mask_of(const ElementSet& s) { return s.words()[0]; }

}  // namespace

TEST_CASE("quotients of Z4", "[constructions]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto m4 = fixtures::self_module(z4);

  // by {0}: classes are singletons, structure is carried over
  QuotientModule q0 = quotient(*m4, set_of(4, {0}));
  CHECK(q0.quotient.size() == 4);
  CHECK(q0.quotient.validated());

  // by M: a single class
  QuotientModule qm = quotient(*m4, ElementSet::full(4));
  CHECK(qm.quotient.size() == 1);

  // by {0,2}: the two-class quotient with Z/2 tables, against the oracle
  QuotientModule q2 = quotient(*m4, set_of(4, {0, 2}));
  REQUIRE(q2.quotient.size() == 2);
  CHECK(q2.quotient.validated());
  CHECK(q2.class_of == std::vector<int>{0, 1, 0, 1});
  oracle::Module oq =
      oracle::quotient(oracle::Module::self(oracle::Ring::cyclic(4)), 0b0101);
  REQUIRE(oq.size == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<int> t{a, b};
      CHECK(q2.quotient.add.at(t) ==
            ElementSet::singleton(2, oq.add[a][b]));
      CHECK(q2.quotient.act(std::vector<int>{a}, b) ==
            ElementSet::singleton(2, oq.act[a][b]));
    }

  // classes partition M into equal-sized cosets
  for (const auto& cls : q2.classes) CHECK(cls.count() == 2);
}

TEST_CASE("coset form agrees with the slot-placed form", "[constructions]") {
  // classes are built as f(x, N, 0^(m-2)); placing N in any slot instead
  // gives the same sets
  auto z4 = fixtures::cyclic_ring(4);
  auto m4 = fixtures::self_module(z4);
  auto k2m = fixtures::self_module(fixtures::k2_ring());
  for (const auto& M : {m4, k2m}) {
    for (const auto& N : enumerate_subhypermodules(*M)) {
      for (int x = 0; x < M->size(); ++x) {
        ElementSet coset =
            M->hyper_sum(ElementSet::singleton(M->size(), x), N);
        std::vector<ElementSet> slot1{N, ElementSet::singleton(M->size(), x)};
        CHECK(M->add.eval_sets(slot1) == coset);
      }
    }
  }
}

TEST_CASE("quotient respects the ideal action", "[constructions]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto m4 = fixtures::self_module(z4);
  QuotientModule q = quotient(*m4, set_of(4, {0, 2}));
  for (const auto& I : enumerate_hyperideals(*z4)) {
    ElementSet ambient = ideal_action(*m4, I);
    ElementSet image(q.quotient.size());
    ambient.for_each([&](int x) { image.insert(q.class_of[x]); });
    CHECK(image == ideal_action(q.quotient, I));
  }
}

TEST_CASE("quotients validate across every fixture pair", "[constructions]") {
  std::vector<std::shared_ptr<Hypermodule>> mods = {
      fixtures::self_module(fixtures::cyclic_ring(2)),
      fixtures::self_module(fixtures::cyclic_ring(4)),
      fixtures::self_module(fixtures::cyclic_ring(6)),
      fixtures::self_module(fixtures::k2_ring()),
      fixtures::v4_over_z2(),
      fixtures::zero_module(fixtures::cyclic_ring(4)),
      fixtures::cyclic_module_over(fixtures::cyclic_ring(6), 2),
      fixtures::cyclic_module_over(fixtures::cyclic_ring(6), 3)};
  for (const auto& M : mods)
    for (const auto& N : enumerate_subhypermodules(*M)) {
      QuotientModule q = quotient(*M, N);
      CHECK(q.quotient.validated());
      CHECK(size_t(q.quotient.size()) * q.classes[0].count() ==
            size_t(M->size()));
    }
}

TEST_CASE("internal direct sums", "[constructions]") {
  auto v4 = fixtures::v4_over_z2();
  // two distinct lines decompose V4
  DirectSumWitness w = internal_direct_sum_check(
      *v4, {set_of(4, {0, 1}), set_of(4, {0, 2})});
  CHECK(w.l == 1);
  CHECK(w.sum_check);
  CHECK(w.independence_check);

  // {0,2} + {0,2} inside Z4 is not all of Z4
  auto z4 = fixtures::cyclic_ring(4);
  auto m4 = fixtures::self_module(z4);
  DirectSumWitness bad =
      internal_direct_sum_check(*m4, {set_of(4, {0, 2}), set_of(4, {0, 2})});
  CHECK(!bad.sum_check);

  // a single part is not of the l(m-1)+1 form
  CHECK_THROWS_AS(internal_direct_sum_check(*m4, {ElementSet::full(4)}),
                  ArityError);
}

TEST_CASE("external direct sums", "[constructions]") {
  auto z6 = fixtures::cyclic_ring(6);
  auto a = fixtures::cyclic_module_over(z6, 2);
  auto b = fixtures::cyclic_module_over(z6, 3);
  Hypermodule sum = external_direct_sum({a.get(), b.get()});
  REQUIRE(sum.size() == 6);
  CHECK(sum.validated());

  // the embedded images satisfy the internal criterion
  ElementSet ea = direct_sum_embedding({a.get(), b.get()}, 0);
  ElementSet eb = direct_sum_embedding({a.get(), b.get()}, 1);
  DirectSumWitness w = internal_direct_sum_check(sum, {ea, eb});
  CHECK(w.sum_check);
  CHECK(w.independence_check);

  // Z/2 (+) Z/3 over Z/6 is isomorphic to Z/6: cyclic and multiplication
  CHECK(is_cyclic(sum).has_value());
  auto cert = is_multiplication(sum, enumerate_hyperideals(*z6),
                                enumerate_subhypermodules(sum));
  CHECK(cert.verdict);

  // summing with a zero module keeps the structure
  auto z0 = fixtures::zero_module(z6);
  Hypermodule padded = external_direct_sum({a.get(), z0.get()});
  CHECK(padded.size() == 2);
  CHECK(padded.validated());

  // mismatched rings are rejected
  auto z4 = fixtures::cyclic_ring(4);
  auto other = fixtures::self_module(z4);
  CHECK_THROWS_AS(external_direct_sum({a.get(), other.get()}),
                  StructureViolation);

  // capacity guard on the product size
  Bounds small;
  small.enumeration_bound = 4;
  CHECK_THROWS_AS(external_direct_sum({a.get(), b.get()}, small),
                  CapacityError);
}

TEST_CASE("submodule restriction", "[constructions]") {
  auto z6 = fixtures::cyclic_ring(6);
  auto m6 = fixtures::self_module(z6);
  Hypermodule line = restrict_to_submodule(*m6, set_of(6, {0, 3}));
  REQUIRE(line.size() == 2);
  ValidationReport rep = validate_hypermodule(line);
  CHECK(rep.ok);
  // the restriction of Z6 to {0,3} is the Z/2-like module with 3 as its
  // generator: 1*3 = 3, 2*3 = 0, ...
  CHECK(line.act1(1, 1) == ElementSet::singleton(2, 1));
  CHECK(line.act1(2, 1) == ElementSet::singleton(2, 0));

  auto v4 = fixtures::v4_over_z2();
  Hypermodule lv = restrict_to_submodule(*v4, set_of(4, {0, 3}));
  ValidationReport rep2 = validate_hypermodule(lv);
  CHECK(rep2.ok);
}
