#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypermod/report.hpp"

namespace hypermod {

// Exit-code contract:
//   0  success
//   1  usage error
//   2  invalid structure (parse or validation failure, missing section)
//   3  theorem failure / counterexample found (in-contract)
//   4  capacity budget exceeded
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int invalid = 2;
inline constexpr int theorem_failure = 3;
inline constexpr int capacity = 4;
}  // namespace exit_code

namespace detail_cli {

struct Loaded {
  std::shared_ptr<KrasnerHyperring> ring;
  std::shared_ptr<Hypermodule> module;
  ValidationReport ring_report;
  ValidationReport module_report;
};

// Parse and validate; on failure prints a report and returns an exit code.
inline int load_file(const std::string& path, const std::string& format,
                     std::ostream& out, Loaded* loaded) {
  std::ifstream in(path);
  if (!in) {
    if (format == "json") {
      Json j = report_skeleton("load", path);
      j["error"] = "cannot open file";
      out << j.dump(2) << "\n";
    } else {
      out << "error: cannot open '" << path << "'\n";
    }
    return exit_code::usage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse_structure(buf.str());
  if (!parsed.ok()) {
    if (format == "json") {
      Json j = report_skeleton("parse", path);
      j["ok"] = false;
      Json diags = Json::array();
      for (const auto& d : parsed.diagnostics) diags.push_back(d.str());
      j["diagnostics"] = diags;
      out << j.dump(2) << "\n";
    } else {
      out << "parse failed: " << path << "\n";
      for (const auto& d : parsed.diagnostics) out << "  " << d.str() << "\n";
    }
    return exit_code::invalid;
  }
  loaded->ring = parsed.ring;
  loaded->module = parsed.module;
  loaded->ring_report = validate_krasner_hyperring(*loaded->ring);
  if (loaded->ring_report.ok && loaded->module)
    loaded->module_report = validate_hypermodule(*loaded->module);
  return exit_code::ok;
}

inline int require_module(const Loaded& loaded, const std::string& format,
                          const std::string& path, std::ostream& out) {
  if (loaded.module) return exit_code::ok;
  if (format == "json") {
    Json j = report_skeleton("error", path);
    j["error"] = "file has no [module] section";
    out << j.dump(2) << "\n";
  } else {
    out << "error: '" << path << "' has no [module] section\n";
  }
  return exit_code::invalid;
}

}  // namespace detail_cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite (m,n)-hyperring and hypermodule verification"};
  app.name("hypermod");
  app.require_subcommand(1);

  std::string file, format = "text", theorem = "all", target;
  int bound = Bounds{}.enumeration_bound;
  int max_size = 2, m = 2, n = 2, count = 0;
  bool want_ideals = false, want_submodules = false, random_mode = false;
  uint64_t seed = 0;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd, bool with_file) {
    if (with_file)
      cmd->add_option("file", file, "structure file")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--bound", bound, "capacity budget for enumerations");
  };

  CLI::App* cmd_check = app.add_subcommand(
      "check", "validate a structure file and its standing conventions");
  add_common(cmd_check, true);

  CLI::App* cmd_enum =
      app.add_subcommand("enumerate", "list hyperideals or subhypermodules");
  add_common(cmd_enum, true);
  cmd_enum->add_flag("--ideals", want_ideals, "enumerate hyperideals");
  cmd_enum->add_flag("--submodules", want_submodules,
                     "enumerate subhypermodules");

  CLI::App* cmd_classify = app.add_subcommand(
      "classify", "ideal classification and module-level flags");
  add_common(cmd_classify, true);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "evaluate harness predicates");
  add_common(cmd_verify, true);
  cmd_verify->add_option("--theorem", theorem, "predicate id or 'all'");

  CLI::App* cmd_search = app.add_subcommand(
      "search", "generate small instances and hunt for counterexamples");
  add_common(cmd_search, false);
  cmd_search->add_option("--max-size", max_size, "carrier size cap")
      ->required();
  cmd_search->add_option("--m", m, "additive arity");
  cmd_search->add_option("--n", n, "multiplicative arity");
  cmd_search->add_option("--target", target, "theorem id or property name")
      ->required();
  cmd_search->add_flag("--random", random_mode, "randomized generation");
  cmd_search->add_option("--seed", seed, "seed for --random")
      ->each([&](const std::string&) { seed_given = true; });
  cmd_search->add_option("--count", count, "stop after this many instances");

  std::vector<const char*> argv;
  argv.push_back("hypermod");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to out and exits 0.
      std::ostringstream help;
      int code = app.exit(e, out, err);
      return code == 0 ? exit_code::ok : exit_code::usage;
    }
    app.exit(e, out, err);
    return exit_code::usage;
  }

  Bounds bounds;
  bounds.enumeration_bound = bound;

  try {
    if (app.got_subcommand(cmd_check)) {
      detail_cli::Loaded loaded;
      int rc = detail_cli::load_file(file, format, out, &loaded);
      if (rc != exit_code::ok) return rc;
      bool ring_ok = loaded.ring_report.ok;
      bool module_ok = !loaded.module || loaded.module_report.ok;
      Json j = report_skeleton("check", file);
      j["ring_valid"] = ring_ok;
      j["ring_checks"] = checks_json(loaded.ring_report.checks);
      if (loaded.module) {
        j["module_valid"] = loaded.module_report.ok;
        j["module_checks"] = checks_json(loaded.module_report.checks);
      }
      std::string assumption_text;
      if (ring_ok && module_ok && loaded.module) {
        auto ideals = enumerate_hyperideals(*loaded.ring, bounds);
        std::vector<ElementSet> maximal;
        for (const auto& I : ideals)
          if (classify_ideal(*loaded.ring, I, ideals).is_maximal)
            maximal.push_back(I);
        AssumptionReport rep =
            check_standing_assumptions(*loaded.module, ideals, maximal);
        j["assumptions"] = assumptions_json(rep);
        for (const auto& c : rep.checks)
          if (!c.ok)
            assumption_text += "  WARN " + c.axiom +
                               (c.detail.empty() ? "" : ": " + c.detail) + "\n";
      }
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << "ring: " << (ring_ok ? "valid" : "INVALID") << "\n"
            << loaded.ring_report.summary();
        if (loaded.module) {
          out << "module: " << (loaded.module_report.ok ? "valid" : "INVALID")
              << "\n"
              << loaded.module_report.summary();
          out << assumption_text;
        }
      }
      return ring_ok && module_ok ? exit_code::ok : exit_code::invalid;
    }

    if (app.got_subcommand(cmd_enum)) {
      if (want_ideals == want_submodules) {
        err << "error: pass exactly one of --ideals / --submodules\n";
        return exit_code::usage;
      }
      detail_cli::Loaded loaded;
      int rc = detail_cli::load_file(file, format, out, &loaded);
      if (rc != exit_code::ok) return rc;
      if (!loaded.ring_report.ok ||
          (loaded.module && !loaded.module_report.ok)) {
        err << "error: structure is invalid; run 'check' for details\n";
        return exit_code::invalid;
      }
      std::vector<ElementSet> sets;
      const Carrier* carrier = nullptr;
      if (want_ideals) {
        sets = enumerate_hyperideals(*loaded.ring, bounds);
        carrier = &loaded.ring->carrier;
      } else {
        int mrc = detail_cli::require_module(loaded, format, file, out);
        if (mrc != exit_code::ok) return mrc;
        sets = enumerate_subhypermodules(*loaded.module, bounds);
        carrier = &loaded.module->carrier;
      }
      if (format == "json") {
        Json j = report_skeleton("enumerate", file);
        j["kind"] = want_ideals ? "ideals" : "submodules";
        Json arr = Json::array();
        for (const auto& s : sets) arr.push_back(labels_json(*carrier, s));
        j["sets"] = arr;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& s : sets) out << show_set(*carrier, s) << "\n";
        out << sets.size() << (want_ideals ? " hyperideals" : " subhypermodules")
            << "\n";
      }
      return exit_code::ok;
    }

    if (app.got_subcommand(cmd_classify)) {
      detail_cli::Loaded loaded;
      int rc = detail_cli::load_file(file, format, out, &loaded);
      if (rc != exit_code::ok) return rc;
      if (!loaded.ring_report.ok ||
          (loaded.module && !loaded.module_report.ok)) {
        err << "error: structure is invalid; run 'check' for details\n";
        return exit_code::invalid;
      }
      const KrasnerHyperring& R = *loaded.ring;
      auto ideals = enumerate_hyperideals(R, bounds);
      Json j = report_skeleton("classify", file);
      Json ideal_arr = Json::array();
      std::ostringstream text;
      text << "hyperideals of the ring:\n";
      ElementSet jacobson(R.size());
      bool any_maximal = false;
      for (const auto& I : ideals) {
        auto cls = classify_ideal(R, I, ideals);
        Json ij;
        ij["elements"] = labels_json(R.carrier, I);
        ij["proper"] = cls.proper;
        ij["maximal"] = cls.is_maximal;
        ij["prime"] = cls.proper && cls.is_prime;
        ij["primary"] = cls.proper && cls.is_primary;
        ij["radical"] = labels_json(R.carrier, cls.radical_set);
        ideal_arr.push_back(ij);
        text << "  " << show_set(R.carrier, I)
             << (cls.is_maximal ? " maximal" : "")
             << (cls.proper && cls.is_prime ? " prime" : "")
             << (cls.proper && cls.is_primary ? " primary" : "")
             << "  radical " << show_set(R.carrier, cls.radical_set) << "\n";
        if (cls.is_maximal) {
          if (!any_maximal)
            jacobson = I;
          else
            jacobson &= I;
          any_maximal = true;
        }
      }
      if (!any_maximal) jacobson = ElementSet::full(R.size());
      j["ideals"] = ideal_arr;
      j["jacobson_ring"] = labels_json(R.carrier, jacobson);
      text << "J(R) = " << show_set(R.carrier, jacobson) << "\n";
      if (loaded.module) {
        Instance inst = analyze_instance(loaded.module, bounds);
        Json mj;
        mj["faithful"] = inst.faithful;
        mj["cyclic"] = inst.cyclic_generator
                           ? Json(inst.mod().carrier.labels[*inst.cyclic_generator])
                           : Json(nullptr);
        mj["multiplication"] = inst.mult.verdict;
        Json wits = Json::array();
        for (const auto& [N, I] : inst.mult.witnesses) {
          Json w;
          w["submodule"] = labels_json(inst.mod().carrier, N);
          w["ideal"] = labels_json(inst.R().carrier, I);
          wits.push_back(w);
        }
        mj["witnesses"] = wits;
        if (inst.mult.failing)
          mj["failing_submodule"] =
              labels_json(inst.mod().carrier, *inst.mult.failing);
        Json om;
        Json members = Json::array();
        for (const auto& A : inst.omega_data.members)
          members.push_back(labels_json(inst.R().carrier, A));
        om["members"] = members;
        om["intersection"] =
            labels_json(inst.R().carrier, inst.omega_data.omega);
        mj["omega"] = om;
        mj["jacobson_module"] = labels_json(
            inst.mod().carrier,
            jacobson_radical_module(inst.mod(), inst.submodules));
        mj["assumptions"] = assumptions_json(inst.assumptions);
        j["module"] = mj;
        text << "module: faithful=" << inst.faithful << " cyclic="
             << (inst.cyclic_generator
                     ? inst.mod().carrier.labels[*inst.cyclic_generator]
                     : std::string("-"))
             << " multiplication=" << inst.mult.verdict << "\n";
        text << "omega(M) = "
             << show_set(inst.R().carrier, inst.omega_data.omega) << "\n";
        text << "J(M) = "
             << show_set(inst.mod().carrier,
                         jacobson_radical_module(inst.mod(), inst.submodules))
             << "\n";
      }
      if (format == "json")
        out << j.dump(2) << "\n";
      else
        out << text.str();
      return exit_code::ok;
    }

    if (app.got_subcommand(cmd_verify)) {
      detail_cli::Loaded loaded;
      int rc = detail_cli::load_file(file, format, out, &loaded);
      if (rc != exit_code::ok) return rc;
      if (!loaded.ring_report.ok ||
          (loaded.module && !loaded.module_report.ok)) {
        err << "error: structure is invalid; run 'check' for details\n";
        return exit_code::invalid;
      }
      int mrc = detail_cli::require_module(loaded, format, file, out);
      if (mrc != exit_code::ok) return mrc;
      Instance inst = analyze_instance(loaded.module, bounds);
      std::vector<TheoremVerdict> verdicts;
      if (theorem == "all")
        verdicts = run_all_theorems(inst);
      else
        verdicts = run_theorem(inst, theorem);
      bool failure = false;
      for (const auto& v : verdicts)
        failure = failure ||
                  (v.hypotheses_hold && !v.conclusion_holds && !v.out_of_contract);
      if (format == "json") {
        Json j = report_skeleton("verify", file);
        j["theorem"] = theorem;
        Json arr = Json::array();
        for (const auto& v : verdicts) arr.push_back(verdict_json(v));
        j["verdicts"] = arr;
        j["in_contract"] = inst.assumptions.in_contract();
        out << j.dump(2) << "\n";
      } else {
        for (const auto& v : verdicts) {
          out << (v.pass() ? "pass " : "FAIL ") << v.id
              << (v.hypotheses_hold ? "" : " (hypotheses not met)")
              << (v.out_of_contract ? " [out-of-contract]" : "");
          if (!v.witness.empty()) out << "  -- " << v.witness;
          out << "\n";
        }
      }
      return failure ? exit_code::theorem_failure : exit_code::ok;
    }

    if (app.got_subcommand(cmd_search)) {
      if (random_mode && !seed_given) {
        err << "error: --random requires --seed\n";
        return exit_code::usage;
      }
      SearchSpec spec;
      spec.max_size = max_size;
      spec.m = m;
      spec.n = n;
      spec.target = target;
      spec.random = random_mode;
      spec.seed = seed;
      spec.count = count;
      HuntStats stats;
      auto hits = hunt(spec, bounds, &stats);
      bool property = is_property_target(target);
      if (format == "json") {
        Json j = report_skeleton("search", "");
        j["target"] = target;
        j["max_size"] = max_size;
        j["mode"] = random_mode ? "random" : "exhaustive";
        if (random_mode) j["seed"] = seed;
        Json arr = Json::array();
        for (const auto& h : hits) {
          Json hj;
          hj["verdict"] = verdict_json(h.verdict);
          hj["instance"] = h.instance;
          arr.push_back(hj);
        }
        j[property ? "instances" : "counterexamples"] = arr;
        Json st;
        st["rings"] = stats.rings;
        st["modules"] = stats.modules;
        st["evaluated"] = stats.evaluated;
        st["out_of_contract"] = stats.out_of_contract;
        j["stats"] = st;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& h : hits) {
          if (property)
            out << "instance " << h.verdict.id << " = "
                << (h.verdict.conclusion_holds ? "true" : "false") << "\n";
          else
            out << "counterexample for " << h.verdict.id << ": "
                << h.verdict.witness << "\n";
          out << h.instance << "\n";
        }
        out << "evaluated " << stats.evaluated << " instances over "
            << stats.rings << " rings; "
            << (property ? "emitted " : "counterexamples: ")
            << hits.size() << "\n";
      }
      if (!property && !hits.empty()) return exit_code::theorem_failure;
      return exit_code::ok;
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return exit_code::capacity;
  } catch (const StructureViolation& e) {
    err << "invalid structure: " << e.what() << "\n";
    return exit_code::invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace hypermod
