// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Usage: acceptance <path-to-cli-binary> <path-to-fixtures-dir>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypermod/cli.hpp"
#include "hypermod/search.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace hypermod;

namespace {

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    FAILED: " << what << "\n";
    }
  }

  ~Criterion() {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    std::cout << notes.str();
    if (!ok) ++g_failures;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli_binary(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// Independent definitional membership tests, coded directly from the
// closure/solvability/absorption clauses over raw tables.
bool def_is_hyperideal(const KrasnerHyperring& R, const ElementSet& I) {
  if (I.empty()) return false;
  auto members = I.elements();
  int m = R.m(), n = R.n(), s = R.size();
  std::vector<int> t(m, 0);
  std::function<bool(int)> fill = [&](int depth) -> bool {
    if (depth == m) return R.add.at(t).is_subset_of(I);
    for (int x : members) {
      t[depth] = x;
      if (!fill(depth + 1)) return false;
    }
    return true;
  };
  if (!fill(0)) return false;
  for (int slot = 0; slot < m; ++slot) {
    std::vector<int> rest(m - 1, 0);
    std::function<bool(int)> solve = [&](int depth) -> bool {
      if (depth == m - 1) {
        for (int b : members) {
          bool found = false;
          for (int y : members) {
            std::vector<int> tup(m);
            for (int p = 0, q = 0; p < m; ++p)
              tup[p] = p == slot ? y : rest[q++];
            if (R.add.at(tup).contains(b)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
        return true;
      }
      for (int x : members) {
        rest[depth] = x;
        if (!solve(depth + 1)) return false;
      }
      return true;
    };
    if (!solve(0)) return false;
  }
  std::vector<int> outer(n - 1, 0);
  do {
    for (int a : members)
      for (int slot = 0; slot < n; ++slot) {
        std::vector<int> tup(n);
        for (int p = 0, q = 0; p < n; ++p) tup[p] = p == slot ? a : outer[q++];
        if (!I.contains(R.mul.at(tup))) return false;
      }
  } while (next_tuple(outer, s));
  return true;
}

bool def_is_submodule(const Hypermodule& M, const ElementSet& N) {
  if (N.empty()) return false;
  auto members = N.elements();
  int m = M.m(), n = M.n(), sr = M.ring->size();
  std::vector<int> t(m, 0);
  std::function<bool(int)> fill = [&](int depth) -> bool {
    if (depth == m) return M.add.at(t).is_subset_of(N);
    for (int x : members) {
      t[depth] = x;
      if (!fill(depth + 1)) return false;
    }
    return true;
  };
  if (!fill(0)) return false;
  for (int slot = 0; slot < m; ++slot) {
    std::vector<int> rest(m - 1, 0);
    std::function<bool(int)> solve = [&](int depth) -> bool {
      if (depth == m - 1) {
        for (int b : members) {
          bool found = false;
          for (int y : members) {
            std::vector<int> tup(m);
            for (int p = 0, q = 0; p < m; ++p)
              tup[p] = p == slot ? y : rest[q++];
            if (M.add.at(tup).contains(b)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
        return true;
      }
      for (int x : members) {
        rest[depth] = x;
        if (!solve(depth + 1)) return false;
      }
      return true;
    };
    if (!solve(0)) return false;
  }
  std::vector<int> scal(n - 1, 0);
  do {
    for (int x : members)
      if (!M.act(scal, x).is_subset_of(N)) return false;
  } while (next_tuple(scal, sr));
  return true;
}

std::vector<std::shared_ptr<Hypermodule>> fixture_modules() {
  auto z6 = fixtures::cyclic_ring(6);
  return {fixtures::self_module(fixtures::cyclic_ring(2)),
          fixtures::self_module(fixtures::cyclic_ring(4)),
          fixtures::self_module(fixtures::cyclic_ring(5)),
          fixtures::self_module(z6),
          fixtures::self_module(fixtures::k2_ring()),
          fixtures::v4_over_z2(),
          fixtures::zero_module(fixtures::cyclic_ring(4)),
          fixtures::cyclic_module_over(z6, 2),
          fixtures::cyclic_module_over(z6, 3)};
}

template <class Fn>
void for_each_generated_instance(int max_ring, int max_module, Fn&& fn) {
  for (int rs = 1; rs <= max_ring; ++rs) {
    generate_krasner_hyperrings(rs, 2, 2, [&](const KrasnerHyperring& R) {
      auto rp = std::make_shared<KrasnerHyperring>(R);
      for (int ms = 1; ms <= max_module; ++ms) {
        generate_hypermodules(rp, ms, [&](const Hypermodule& M) {
          fn(M);
          return true;
        });
      }
      return true;
    });
  }
}

// Relabeled copy: permuted carriers and fresh label strings, tables moved
// accordingly. Exercises the parser across element orders and names.
std::pair<KrasnerHyperring, Hypermodule> relabel(const Hypermodule& M,
                                                 SplitMix64& rng, int salt) {
  const KrasnerHyperring& R = *M.ring;
  int sr = R.size(), sm = M.size();
  std::vector<int> pr(sr), pm(sm);
  for (int i = 0; i < sr; ++i) pr[i] = i;
  for (int i = 0; i < sm; ++i) pm[i] = i;
  rng.shuffle(pr);
  rng.shuffle(pm);
  auto inv = [](const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = int(i);
    return q;
  };
  std::vector<int> pri = inv(pr), pmi = inv(pm);

  KrasnerHyperring R2;
  for (int i = 0; i < sr; ++i)
    R2.carrier.labels.push_back("r" + std::to_string(salt) + "_" +
                                std::to_string(i));
  {
    std::vector<ElementSet> htab;
    std::vector<int> t(R.m(), 0), pre(R.m());
    do {
      for (int i = 0; i < R.m(); ++i) pre[i] = pri[t[i]];
      ElementSet img(sr);
      R.add.at(pre).for_each([&](int e) { img.insert(pr[e]); });
      htab.push_back(img);
    } while (next_tuple(t, sr));
    R2.add = HyperOperation(sr, R.m(), std::move(htab));
  }
  {
    std::vector<int> ktab;
    std::vector<int> t(R.n(), 0), pre(R.n());
    do {
      for (int i = 0; i < R.n(); ++i) pre[i] = pri[t[i]];
      ktab.push_back(pr[R.mul.at(pre)]);
    } while (next_tuple(t, sr));
    R2.mul = Operation(sr, R.n(), std::move(ktab));
  }
  R2.zero = pr[R.zero];
  R2.one = pr[R.one];

  Hypermodule M2;
  for (int i = 0; i < sm; ++i)
    M2.carrier.labels.push_back("m" + std::to_string(salt) + "_" +
                                std::to_string(i));
  {
    std::vector<ElementSet> ftab;
    std::vector<int> t(M.m(), 0), pre(M.m());
    do {
      for (int i = 0; i < M.m(); ++i) pre[i] = pmi[t[i]];
      ElementSet img(sm);
      M.add.at(pre).for_each([&](int e) { img.insert(pm[e]); });
      ftab.push_back(img);
    } while (next_tuple(t, sm));
    M2.add = HyperOperation(sm, M.m(), std::move(ftab));
  }
  {
    std::vector<int> scal(M.n() - 1, 0), pre(M.n() - 1);
    do {
      for (int i = 0; i < M.n() - 1; ++i) pre[i] = pri[scal[i]];
      for (int x = 0; x < sm; ++x) {
        ElementSet img(sm);
        M.act(pre, pmi[x]).for_each([&](int e) { img.insert(pm[e]); });
        M2.action_table.push_back(img);
      }
    } while (next_tuple(scal, sr));
  }
  M2.zero = pm[M.zero];
  return {std::move(R2), std::move(M2)};
}

// ---- criteria ---------------------------------------------------------------

void criterion1_axiom_stack() {
  Criterion c{"criterion 1: axiom stack agrees with the classical oracle"};
  for (int k : {2, 4, 6}) {
    auto R = fixtures::cyclic_ring(k);
    oracle::Ring oR = oracle::Ring::cyclic(k);
    c.require(validate_krasner_hyperring(*R).ok == oracle::ring_valid(oR),
              "ring validation mismatch at Z" + std::to_string(k));
    auto M = fixtures::self_module(R);
    c.require(validate_hypermodule(*M).ok ==
                  oracle::module_valid(oracle::Module::self(oR)),
              "module validation mismatch at Z" + std::to_string(k));

    // every single-cell table mutation: identical verdicts on both routes
    int checked = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int v = 0; v < k; ++v) {
          if (v != oR.mul[a][b]) {
            oracle::Ring mo = oR;
            mo.mul[a][b] = v;
            KrasnerHyperring mr = *R;
            auto ktab = mr.mul.table();
            ktab[size_t(a) * k + b] = v;
            mr.mul = Operation(k, 2, std::move(ktab));
            mr.neg.clear();
            if (validate_krasner_hyperring(mr).ok != oracle::ring_valid(mo))
              c.require(false, "mutated k-table verdict mismatch at Z" +
                                   std::to_string(k));
            ++checked;
          }
          if (v != oR.add[a][b]) {
            oracle::Ring mo = oR;
            mo.add[a][b] = v;
            KrasnerHyperring mr = *R;
            auto htab = mr.add.table();
            htab[size_t(a) * k + b] = ElementSet::singleton(k, v);
            mr.add = HyperOperation(k, 2, std::move(htab));
            mr.neg.clear();
            if (validate_krasner_hyperring(mr).ok != oracle::ring_valid(mo))
              c.require(false, "mutated h-table verdict mismatch at Z" +
                                   std::to_string(k));
            ++checked;
          }
        }
    c.notes << "    Z" << k << ": " << checked
            << " single-cell mutations, verdicts agree\n";
  }
  // module-level mutations on Z4 over itself
  {
    auto R = fixtures::cyclic_ring(4);
    oracle::Module oM = oracle::Module::self(oracle::Ring::cyclic(4));
    auto M = fixtures::self_module(R);
    int checked = 0;
    for (int r = 0; r < 4; ++r)
      for (int x = 0; x < 4; ++x)
        for (int v = 0; v < 4; ++v) {
          if (v == oM.act[r][x]) continue;
          oracle::Module mo = oM;
          mo.act[r][x] = v;
          Hypermodule mm = *M;
          mm.action_table[size_t(r) * 4 + x] = ElementSet::singleton(4, v);
          mm.neg.clear();
          if (validate_hypermodule(mm).ok != oracle::module_valid(mo))
            c.require(false, "mutated action verdict mismatch");
          ++checked;
        }
    c.notes << "    Z4 module: " << checked
            << " action mutations, verdicts agree\n";
  }
}

void criterion2_enumeration() {
  Criterion c{"criterion 2: enumerations equal the naive subset filters"};
  long long carriers = 0;
  auto check_ring = [&](const KrasnerHyperring& R) {
    auto fast = enumerate_hyperideals(R);
    std::vector<ElementSet> naive;
    uint64_t total = uint64_t{1} << R.size();
    for (uint64_t bits = 1; bits < total; ++bits) {
      ElementSet cand = ElementSet::from_mask(R.size(), bits);
      if (def_is_hyperideal(R, cand)) naive.push_back(cand);
    }
    std::sort(naive.begin(), naive.end(), canonical_set_less);
    c.require(fast == naive, "hyperideal enumeration differs from the naive "
                             "filter on a carrier of size " +
                                 std::to_string(R.size()));
    ++carriers;
  };
  auto check_module = [&](const Hypermodule& M) {
    auto fast = enumerate_subhypermodules(M);
    std::vector<ElementSet> naive;
    uint64_t total = uint64_t{1} << M.size();
    for (uint64_t bits = 1; bits < total; ++bits) {
      ElementSet cand = ElementSet::from_mask(M.size(), bits);
      if (def_is_submodule(M, cand)) naive.push_back(cand);
    }
    std::sort(naive.begin(), naive.end(), canonical_set_less);
    c.require(fast == naive, "subhypermodule enumeration differs from the "
                             "naive filter on a carrier of size " +
                                 std::to_string(M.size()));
    ++carriers;
  };
  for (const auto& M : fixture_modules()) {
    check_ring(*M->ring);
    check_module(*M);
  }
  for_each_generated_instance(3, 3, [&](const Hypermodule& M) {
    check_ring(*M.ring);
    check_module(M);
  });
  for (int k : {2, 4, 6}) {
    auto R = fixtures::cyclic_ring(k);
    auto fast = enumerate_hyperideals(*R);
    auto orc = oracle::ideals(oracle::Ring::cyclic(k));
    bool same = fast.size() == orc.size();
    for (size_t i = 0; same && i < fast.size(); ++i)
      same = fast[i].words()[0] == orc[i];
    c.require(same, "oracle ideal lattice mismatch at Z" + std::to_string(k));
  }
  c.notes << "    " << carriers << " carriers checked against the filters\n";
}

void criterion3_multiplication() {
  Criterion c{"criterion 3: multiplication detection"};
  {
    auto z4 = fixtures::cyclic_ring(4);
    auto m4 = fixtures::self_module(z4);
    auto cert = is_multiplication(*m4, enumerate_hyperideals(*z4),
                                  enumerate_subhypermodules(*m4));
    c.require(cert.verdict, "Z4 over Z4 must be multiplication");
    bool wit = cert.witnesses.size() == 3 &&
               cert.witnesses[0].second.words()[0] == 0b0001 &&
               cert.witnesses[1].second.words()[0] == 0b0101 &&
               cert.witnesses[2].second.words()[0] == 0b1111;
    c.require(wit, "Z4 witness map must be {0},{0,2},Z4 in order");
  }
  {
    auto v4 = fixtures::v4_over_z2();
    auto cert = is_multiplication(*v4, enumerate_hyperideals(*v4->ring),
                                  enumerate_subhypermodules(*v4));
    c.require(!cert.verdict, "V4 over Z2 must not be multiplication");
    c.require(cert.failing && cert.failing->words()[0] == 0b0011,
              "the failing subhypermodule must be the first line");
  }
  for (int k = 1; k <= 8; ++k) {
    auto R = fixtures::cyclic_ring(k);
    auto M = fixtures::self_module(R);
    auto cert = is_multiplication(*M, enumerate_hyperideals(*R),
                                  enumerate_subhypermodules(*M));
    c.require(cert.verdict,
              "Z" + std::to_string(k) + " over itself must be multiplication");
  }
}

void criterion4_exhaustive_harness() {
  Criterion c{"criterion 4: exhaustive theorem regime (rings <= 3, modules "
              "<= 3)"};
  long long instances = 0, verdicts = 0, failures = 0, errors = 0,
            out_of_contract = 0;
  std::ostringstream failure_log;
  for_each_generated_instance(3, 3, [&](const Hypermodule& M) {
    ++instances;
    auto mp = std::make_shared<Hypermodule>(M);
    Instance inst = analyze_instance(mp, Bounds{});
    if (!inst.assumptions.in_contract()) ++out_of_contract;
    for (const auto& v : run_all_theorems(inst)) {
      ++verdicts;
      if (v.witness.rfind("ERROR:", 0) == 0) ++errors;
      if (v.hypotheses_hold && !v.conclusion_holds && !v.out_of_contract) {
        ++failures;
        failure_log << "    in-contract failure: " << v.id << " -- "
                    << v.witness << "\n      instance:\n";
        std::istringstream lines(emit_structure(inst.R(), &inst.mod()));
        std::string line;
        while (std::getline(lines, line))
          failure_log << "        " << line << "\n";
      }
    }
  });
  c.require(errors == 0, "predicates must evaluate without internal errors");
  c.require(instances > 0 && verdicts == instances * 23,
            "every instance must produce all 23 verdict rows");
  c.notes << "    " << instances << " instances (" << out_of_contract
          << " out of contract), " << verdicts << " verdict rows, "
          << failures
          << " in-contract failures, each serialized in full below\n";
  c.notes << failure_log.str();
}

void criterion5_quotients() {
  Criterion c{"criterion 5: quotient validity on fixtures and generated "
              "instances"};
  long long pairs = 0, in_contract_failures = 0;
  auto run = [&](const Hypermodule& M, bool contract) {
    for (const auto& N : enumerate_subhypermodules(M)) {
      ++pairs;
      try {
        QuotientModule q = quotient(M, N);
        if (!q.quotient.validated())
          throw StructureViolation("quotient failed validation");
      } catch (const std::exception& e) {
        if (contract) {
          ++in_contract_failures;
          c.require(false, std::string("quotient failed: ") + e.what());
        }
      }
    }
  };
  for (const auto& M : fixture_modules()) {
    auto ideals = enumerate_hyperideals(*M->ring);
    std::vector<ElementSet> maximal;
    for (const auto& I : ideals)
      if (classify_ideal(*M->ring, I, ideals).is_maximal)
        maximal.push_back(I);
    run(*M, check_standing_assumptions(*M, ideals, maximal).in_contract());
  }
  for_each_generated_instance(3, 3, [&](const Hypermodule& M) {
    auto mp = std::make_shared<Hypermodule>(M);
    Instance inst = analyze_instance(mp, Bounds{});
    run(M, inst.assumptions.in_contract());
  });
  c.require(in_contract_failures == 0,
            "no representative-dependence on in-contract instances");
  c.notes << "    " << pairs << " (module, subhypermodule) pairs\n";
}

void criterion6_direct_sum() {
  Criterion c{"criterion 6: direct-sum criterion on the Z6 CRT parts"};
  auto z6 = fixtures::cyclic_ring(6);
  auto a = fixtures::cyclic_module_over(z6, 2);
  auto b = fixtures::cyclic_module_over(z6, 3);
  T310Report rep = check_T3_10_external({a.get(), b.get()});
  c.require(rep.sum_multiplication, "the sum must be multiplication");
  c.require(rep.parts_multiplication, "both parts must be multiplication");
  c.require(rep.witness_ideals_exist, "witness ideals must exist");
  c.require(rep.verdict.pass(), "the criterion must certify both directions");
  bool wit = rep.witness_ideals.size() == 2 &&
             rep.witness_ideals[0].words()[0] == 0b001001 &&
             rep.witness_ideals[1].words()[0] == 0b010101;
  c.require(wit, "witness ideals must be {0,3} and {0,2,4}");
  if (wit)
    c.notes << "    witnesses: {0,3} for the Z/2 part, {0,2,4} for the Z/3 "
               "part\n";
}

void criterion7_round_trip() {
  Criterion c{"criterion 7: parser round trip and fuzzing"};
  int files = 0;
  for (const char* name :
       {"z2.hs", "z4.hs", "z6.hs", "k2.hs", "v4.hs", "z4_zero.hs",
        "z2_mod_z6.hs", "z3_mod_z6.hs", "z4_ring_only.hs"}) {
    std::string text = read_file(g_fixtures + "/" + name);
    c.require(!text.empty(), std::string("fixture missing: ") + name);
    ParseResult r = parse_structure(text);
    c.require(r.ok(), std::string("fixture must parse: ") + name);
    if (!r.ok()) continue;
    std::string emitted = emit_structure(*r.ring, r.module.get());
    ParseResult again = parse_structure(emitted);
    c.require(again.ok() &&
                  emit_structure(*again.ring, again.module.get()) == emitted,
              std::string("round trip must be exact: ") + name);
    ++files;
  }
  // 1000 generated instances: seeded relabelings of the generated corpus
  std::vector<Hypermodule> corpus;
  for_each_generated_instance(
      3, 3, [&](const Hypermodule& M) { corpus.push_back(M); });
  SplitMix64 rng{20240817};
  int round_trips = 0;
  for (int i = 0; i < 1000; ++i) {
    const Hypermodule& base = corpus[i % corpus.size()];
    auto [ring2, mod2] = relabel(base, rng, i);
    auto rp = std::make_shared<KrasnerHyperring>(std::move(ring2));
    Hypermodule M2 = std::move(mod2);
    M2.ring = rp;
    std::string text = emit_structure(*rp, &M2);
    ParseResult r = parse_structure(text);
    bool ok = r.ok() && r.ring->structurally_equal(*rp) &&
              r.module->structurally_equal(M2) &&
              emit_structure(*r.ring, r.module.get()) == text;
    if (ok) ++round_trips;
  }
  c.require(round_trips == 1000, "all 1000 generated instances round trip");
  // 1000 mutated fixtures: diagnostics only, no crash
  std::string base = read_file(g_fixtures + "/z4.hs");
  int clean = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string text = base;
    int edits = 1 + int(rng.next() % 4);
    for (int e = 0; e < edits; ++e) {
      if (text.empty()) break;
      size_t pos = rng.next() % text.size();
      switch (rng.next() % 4) {
        case 0:
          text[pos] = char('!' + rng.next() % 90);
          break;
        case 1:
          text.erase(pos, 1 + rng.next() % 7);
          break;
        case 2:
          text.insert(pos, 1, char('!' + rng.next() % 90));
          break;
        default: {
          size_t start = text.rfind('\n', pos);
          start = start == std::string::npos ? 0 : start;
          size_t end = text.find('\n', start + 1);
          text.erase(start, end == std::string::npos ? std::string::npos
                                                     : end - start);
          break;
        }
      }
    }
    ParseResult r = parse_structure(text);
    if (!r.ok() && r.diagnostics.empty())
      c.require(false, "failed parse without diagnostics");
    if (r.ok()) ++clean;
  }
  c.notes << "    " << files << " fixture files, 1000 relabeled instances, "
          << "1000 mutations (" << clean << " still parse)\n";
}

void criterion8_determinism() {
  Criterion c{"criterion 8: byte-identical reports and the exit-code "
              "contract"};
  for (const std::string& args :
       {std::string("verify ") + g_fixtures +
            "/z4.hs --theorem all --format json",
        std::string("verify ") + g_fixtures +
            "/k2.hs --theorem all --format json",
        std::string("classify ") + g_fixtures + "/z6.hs --format json",
        std::string("search --max-size 2 --target T3.8.5 --format json"),
        std::string("search --max-size 2 --target is_multiplication --random "
                    "--seed 7 --count 5 --format json")}) {
    CliResult a = run_cli_binary(args);
    CliResult b = run_cli_binary(args);
    c.require(a.exit_code == b.exit_code && a.output == b.output,
              "repeated run must be byte-identical: " + args);
  }
  auto expect = [&](const std::string& args, int code) {
    CliResult r = run_cli_binary(args);
    c.require(r.exit_code == code,
              "exit " + std::to_string(code) + " expected for: " + args +
                  " (got " + std::to_string(r.exit_code) + ")");
  };
  expect("check " + g_fixtures + "/k2.hs", 0);
  expect("verify " + g_fixtures + "/z4.hs --theorem all", 0);
  expect("search --max-size 2 --target L3.2", 0);
  expect("search --max-size 2 --target T3.8.5", 3);
  expect("check " + g_fixtures + "/does_not_exist.hs", 1);
  expect("verify " + g_fixtures + "/z4_ring_only.hs --theorem all", 2);
  expect("enumerate " + g_fixtures + "/z4.hs --ideals --bound 2", 4);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <fixtures-dir>\n";
    return 64;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];
  criterion1_axiom_stack();
  criterion2_enumeration();
  criterion3_multiplication();
  criterion4_exhaustive_harness();
  criterion5_quotients();
  criterion6_direct_sum();
  criterion7_round_trip();
  criterion8_determinism();
  std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: FAILURES present\n");
  return g_failures;
}
