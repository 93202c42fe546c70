#include <catch2/catch_amalgamated.hpp>

#include "hypermod/ops.hpp"
#include "hypermod/structures.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace hypermod;
using fixtures::set_of;

namespace {

HyperOperation table2(int size, const std::vector<std::vector<int>>& sets) {
  std::vector<ElementSet> tab;
  for (const auto& entry : sets) tab.push_back(set_of(size, entry));
  return HyperOperation(size, 2, std::move(tab));
}

// Right-nested fold: the associativity property says it must agree with the
// library's left-nested extension once the base operation is associative.
ElementSet right_fold(const HyperOperation& op,
                      const std::vector<ElementSet>& args) {
  int t = op.arity();
  std::vector<ElementSet> buf(args.end() - t, args.end());
  ElementSet acc = op.eval_sets(buf);
  int pos = int(args.size()) - t;
  while (pos > 0) {
    pos -= t - 1;
    for (int i = 0; i < t - 1; ++i) buf[i] = args[pos + i];
    buf[t - 1] = acc;
    acc = op.eval_sets(buf);
  }
  return acc;
}

}  // namespace

TEST_CASE("element sets behave as finite subsets", "[core]") {
  ElementSet a = set_of(5, {0, 3});
  ElementSet b = set_of(5, {3, 4});
  CHECK((a | b) == set_of(5, {0, 3, 4}));
  CHECK((a & b) == set_of(5, {3}));
  CHECK((a - b) == set_of(5, {0}));
  CHECK(a.count() == 2);
  CHECK(a.is_subset_of(set_of(5, {0, 1, 3})));
  CHECK(!b.is_subset_of(a));
  CHECK(ElementSet::full(5).count() == 5);
  CHECK(a.min_element() == 0);
  CHECK(ElementSet(5).min_element() == -1);
  CHECK(canonical_set_less(set_of(5, {4}), set_of(5, {0, 1})));
}

TEST_CASE("set evaluation is the union over argument products", "[core]") {
  auto k2 = fixtures::k2_ring();
  // singleton arguments reduce to the table entry
  std::vector<ElementSet> singles{ElementSet::singleton(2, 1),
                                  ElementSet::singleton(2, 1)};
  CHECK(k2->add.eval_sets(singles) == set_of(2, {0, 1}));
  // K2: h({0,1},{1}) = h(0,1) u h(1,1) = {0,1}
  std::vector<ElementSet> mixed{set_of(2, {0, 1}), set_of(2, {1})};
  CHECK(k2->add.eval_sets(mixed) == set_of(2, {0, 1}));
  // a full-carrier slot dominates every entry with that slot varying
  auto z4 = fixtures::cyclic_ring(4);
  std::vector<ElementSet> wide{ElementSet::full(4), ElementSet::singleton(4, 1)};
  ElementSet result = z4->add.eval_sets(wide);
  for (int x = 0; x < 4; ++x) {
    std::vector<int> t{x, 1};
    CHECK(z4->add.at(t).is_subset_of(result));
  }
  std::vector<ElementSet> bad{ElementSet::full(4)};
  CHECK_THROWS_AS(z4->add.eval_sets(bad), ArityError);
}

TEST_CASE("extension tables fold left-nested", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto k2 = fixtures::k2_ring();

  // l = 1 is the operation itself
  HyperOperation same = extend_hyperoperation(z4->add, 1);
  CHECK(same.table() == z4->add.table());

  // Z4: ternary extension is integer addition mod 4
  HyperOperation z4_3 = extend_hyperoperation(z4->add, 2);
  REQUIRE(z4_3.arity() == 3);
  std::vector<int> ones{1, 1, 1};
  CHECK(z4_3.at(ones) == set_of(4, {3}));

  // K2: h_(2)(1,1,1) = h(h(1,1),1) = {0,1}
  HyperOperation k2_3 = extend_hyperoperation(k2->add, 2);
  std::vector<int> k2ones{1, 1, 1};
  CHECK(k2_3.at(k2ones) == set_of(2, {0, 1}));

  // materialized extension agrees with fold evaluation on sets
  std::vector<ElementSet> args;
  for (int i = 0; i < 3; ++i) args.push_back(ElementSet::singleton(2, 1));
  CHECK(k2->add.eval_extended(args) == k2_3.at(k2ones));

  // left fold equals right fold once associativity holds (l = 2, 3)
  for (int l : {2, 3}) {
    int t = l + 1;
    std::vector<ElementSet> sets;
    for (int i = 0; i < t; ++i)
      sets.push_back(i % 2 ? set_of(2, {0, 1}) : set_of(2, {1}));
    CHECK(k2->add.eval_extended(sets) == right_fold(k2->add, sets));
  }

  CHECK_THROWS_AS(extend_hyperoperation(z4->add, 20, 1000), CapacityError);

  // single-valued extension: ternary product on Z4
  Operation k3 = extend_operation(z4->mul, 2);
  REQUIRE(k3.arity() == 3);
  std::vector<int> t{2, 3, 3};
  CHECK(k3.at(t) == (2 * 3 * 3) % 4);
  CHECK(extend_operation(z4->mul, 1).table() == z4->mul.table());
}

TEST_CASE("associativity checker finds the least witness", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto k2 = fixtures::k2_ring();
  CHECK(check_associative(z4->add));
  CHECK(check_associative(k2->add));
  CHECK(check_associative(z4->mul));

  // Pinned non-associative table: h(0,0)={1}, h(0,1)=h(1,0)={0}, h(1,1)={0}.
  // By hand: h(h(0,0),1) = h(1,1) = {0} but h(0,h(0,1)) = h(0,0) = {1}, and
  // (0,0,0) passes, so the least witness is (0,0,1).
  HyperOperation bad = table2(2, {{1}, {0}, {0}, {0}});
  auto viol = find_assoc_violation(bad);
  REQUIRE(viol.has_value());
  CHECK(viol->tuple == std::vector<int>{0, 0, 1});
  CHECK(viol->i == 1);
  CHECK(viol->j == 2);
}

TEST_CASE("commutativity via sorted canonicalization", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto k2 = fixtures::k2_ring();
  CHECK(check_commutative(z4->add));
  CHECK(check_commutative(k2->mul));
  HyperOperation asym = table2(2, {{0}, {0}, {1}, {0}});
  auto w = find_commutativity_violation(asym);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{1, 0});
}

TEST_CASE("scalar neutral and zero discovery", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto k2 = fixtures::k2_ring();
  CHECK(find_scalar_neutral(z4->add) == 0);
  CHECK(find_scalar_neutral(k2->add) == 0);
  // constant hyperoperation: every entry is the full carrier, no singleton
  HyperOperation constant =
      table2(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  CHECK(!find_scalar_neutral(constant).has_value());

  CHECK(find_zero(z4->mul) == 0);
  CHECK(find_zero(k2->mul) == 0);
  CHECK(!find_zero(z4->add).has_value());

  // At arity 3, two distinct elements can both satisfy the neutrality
  // pattern (xor of three bits): candidates are reported, uniqueness is not.
  std::vector<int> xor3;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) xor3.push_back(a ^ b ^ c);
  std::vector<ElementSet> xtab;
  for (int v : xor3) xtab.push_back(ElementSet::singleton(2, v));
  HyperOperation xop(2, 3, std::move(xtab));
  CHECK(scalar_neutral_candidates(xop).size() == 2);
  CHECK(!find_scalar_neutral(xop).has_value());
  CanonicalReport xrep = check_canonical_hypergroup(xop);
  CHECK(!xrep.is_canonical);
  CHECK(xrep.violation == "scalar identity: not unique");
}

TEST_CASE("canonical hypergroup check", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  CanonicalReport rep = check_canonical_hypergroup(z4->add);
  REQUIRE(rep.is_canonical);
  CHECK(rep.neutral == 0);
  CHECK(rep.inverse == std::vector<int>{0, 3, 2, 1});
  for (int x = 0; x < 4; ++x) CHECK(rep.inverse[rep.inverse[x]] == x);

  auto k2 = fixtures::k2_ring();
  CanonicalReport k2rep = check_canonical_hypergroup(k2->add);
  REQUIRE(k2rep.is_canonical);
  CHECK(k2rep.inverse == std::vector<int>{0, 1});

  // Total hyperoperation on {0,1,2}: associative and commutative with
  // neutral 0, but 1 has two inverses; pinned unique-inverse failure.
  HyperOperation total = table2(
      3, {{0}, {1}, {2}, {1}, {0, 1, 2}, {0, 1, 2}, {2}, {0, 1, 2}, {0, 1, 2}});
  CanonicalReport trep = check_canonical_hypergroup(total);
  CHECK(!trep.is_canonical);
  CHECK(trep.violation == "inverse: not unique");
  REQUIRE(trep.witness.size() == 3);
  CHECK(trep.witness[0] == 1);
}

TEST_CASE("ring validation agrees with the classical oracle", "[core]") {
  for (int k : {2, 4, 6}) {
    auto R = fixtures::cyclic_ring(k);
    ValidationReport rep = validate_krasner_hyperring(*R);
    CHECK(rep.ok == oracle::ring_valid(oracle::Ring::cyclic(k)));
    CHECK(rep.ok);
  }
  auto k2 = fixtures::k2_ring();
  ValidationReport rep = validate_krasner_hyperring(*k2);
  CHECK(rep.ok);
}

TEST_CASE("patched multiplication breaks distributivity with a witness",
          "[core]") {
  // Z4 with k(2,3) = k(3,2) = 1. The classical oracle finds the violating
  // triple a=2, x+y with (x,y) = (1,2); the first failing check must be
  // distributivity with exactly that witness.
  auto z4 = fixtures::cyclic_ring(4);
  std::vector<int> ktab = z4->mul.table();
  ktab[2 * 4 + 3] = 1;
  ktab[3 * 4 + 2] = 1;
  KrasnerHyperring patched;
  patched.carrier = z4->carrier;
  patched.add = z4->add;
  patched.mul = Operation(4, 2, std::move(ktab));
  patched.zero = 0;
  patched.one = 1;

  // classical oracle route
  oracle::Ring oR = oracle::Ring::cyclic(4);
  oR.mul[2][3] = oR.mul[3][2] = 1;
  REQUIRE(!oracle::ring_valid(oR));

  ValidationReport rep = validate_krasner_hyperring(patched);
  CHECK(!rep.ok);
  bool distributivity_failed = false;
  for (const auto& c : rep.checks)
    if (c.axiom == "distributivity" && !c.ok) {
      distributivity_failed = true;
      CHECK(c.detail.find("slot 1") != std::string::npos);
      CHECK(c.detail.find("scalars (2)") != std::string::npos);
      CHECK(c.detail.find("summands (1,2)") != std::string::npos);
    }
  CHECK(distributivity_failed);
}

TEST_CASE("module validation on the classical fixtures", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto m = fixtures::self_module(z4);
  CHECK(m->validated());
  CHECK(oracle::module_valid(oracle::Module::self(oracle::Ring::cyclic(4))));

  auto k2 = fixtures::k2_ring();
  CHECK(fixtures::self_module(k2)->validated());
  CHECK(fixtures::v4_over_z2()->validated());
  CHECK(oracle::module_valid(oracle::Module::v4_over_z2()));
}

TEST_CASE("broken module axioms are reported", "[core]") {
  auto z4 = fixtures::cyclic_ring(4);
  auto m = fixtures::self_module(z4);
  Hypermodule broken = *m;
  // g(2, 1) := {3} violates mixed associativity/distributivity
  broken.action_table[2 * 4 + 1] = set_of(4, {3});
  broken.neg.clear();
  ValidationReport rep = validate_hypermodule(broken);
  CHECK(!rep.ok);
}
