#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypermod/structures.hpp"

namespace hypermod {

// Line-oriented structure-file format:
//
//   # comment
//   [ring]
//   m = 2
//   n = 2
//   elements = 0 1 2 3
//   zero = 0
//   one = 1
//   h 0 0 = { 0 }        # one line per ordered m-tuple
//   k 0 0 = 0            # one line per ordered n-tuple
//   [module]
//   elements = a b
//   zero = a
//   f a a = { a }        # one line per ordered m-tuple
//   g 0 a = { a }        # n-1 ring names, then one module name
//
// Tables must be total; missing entries are totality errors, never defaults.

enum class DiagnosticKind { syntax, totality, undefined_name };

struct Diagnostic {
  int line = 0;
  int col = 0;
  DiagnosticKind kind = DiagnosticKind::syntax;
  std::string message;

  std::string str() const {
    const char* k = kind == DiagnosticKind::syntax      ? "syntax"
                    : kind == DiagnosticKind::totality ? "totality"
                                                       : "undefined-name";
    return "line " + std::to_string(line) + ":" + std::to_string(col) + " [" +
           k + "] " + message;
  }
};

struct ParseResult {
  std::shared_ptr<KrasnerHyperring> ring;
  std::shared_ptr<Hypermodule> module;  // null when no module section
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return ring != nullptr && diagnostics.empty(); }
};

namespace detail_fmt {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '=' || c == '{' || c == '}') {
      out.push_back({std::string(1, c), int(i) + 1});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size()) {
      char d = line[j];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '=' ||
          d == '{' || d == '}' || d == '#')
        break;
      ++j;
    }
    out.push_back({line.substr(i, j - i), int(i) + 1});
    i = j;
  }
  return out;
}

struct SectionDraft {
  bool present = false;
  int header_line = 0;
  int m = 0, n = 0;  // ring only
  std::vector<std::string> elements;
  std::string zero, one;
  bool has_zero = false, has_one = false;
  std::map<size_t, ElementSet> hyper_entries;   // h or f, plain ranks
  std::map<size_t, ElementSet> action_entries;  // g, scalar-major ranks
  std::map<size_t, int> single_entries;         // k

  int index_of(const std::string& name) const {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == name) return int(i);
    return -1;
  }
};

}  // namespace detail_fmt

inline ParseResult parse_structure(const std::string& text) {
  using namespace detail_fmt;
  ParseResult result;
  SectionDraft ring, module;
  SectionDraft* cur = nullptr;
  bool in_module = false;
  int line_no = 0;

  auto fail = [&](int line, int col, DiagnosticKind kind,
                  const std::string& msg) {
    result.diagnostics.push_back({line, col, kind, msg});
  };

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "[ring]" || head == "[module]") {
      if (toks.size() != 1) {
        fail(line_no, toks[1].col, DiagnosticKind::syntax,
             "unexpected tokens after section header");
        return result;
      }
      if (head == "[ring]") {
        if (ring.present) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "duplicate [ring] section");
          return result;
        }
        ring.present = true;
        ring.header_line = line_no;
        cur = &ring;
        in_module = false;
      } else {
        if (!ring.present) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "[module] section requires a preceding [ring] section");
          return result;
        }
        if (module.present) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "duplicate [module] section");
          return result;
        }
        module.present = true;
        module.header_line = line_no;
        cur = &module;
        in_module = true;
      }
      continue;
    }
    if (!head.empty() && head[0] == '[') {
      fail(line_no, toks[0].col, DiagnosticKind::syntax,
           "unknown section header '" + head + "'");
      return result;
    }
    if (!cur) {
      fail(line_no, toks[0].col, DiagnosticKind::syntax,
           "content before the first section header");
      return result;
    }

    // Scalar keys.
    if (head == "m" || head == "n" || head == "elements" || head == "zero" ||
        head == "one") {
      if (toks.size() < 3 || toks[1].text != "=") {
        fail(line_no, toks[0].col, DiagnosticKind::syntax,
             "expected '" + head + " = ...'");
        return result;
      }
      if ((head == "m" || head == "n" || head == "one") && in_module) {
        fail(line_no, toks[0].col, DiagnosticKind::syntax,
             "'" + head + "' belongs to the ring section");
        return result;
      }
      if (head == "m" || head == "n") {
        if (toks.size() != 3) {
          fail(line_no, toks[2].col, DiagnosticKind::syntax,
               "expected a single integer");
          return result;
        }
        int value = 0;
        try {
          size_t pos = 0;
          value = std::stoi(toks[2].text, &pos);
          if (pos != toks[2].text.size()) throw std::invalid_argument("");
        } catch (...) {
          fail(line_no, toks[2].col, DiagnosticKind::syntax,
               "'" + toks[2].text + "' is not an integer");
          return result;
        }
        if (value < 2) {
          fail(line_no, toks[2].col, DiagnosticKind::syntax,
               "arity must be at least 2");
          return result;
        }
        int& slot = head == "m" ? cur->m : cur->n;
        if (slot != 0) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "duplicate key '" + head + "'");
          return result;
        }
        slot = value;
      } else if (head == "elements") {
        if (!cur->elements.empty()) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "duplicate key 'elements'");
          return result;
        }
        for (size_t i = 2; i < toks.size(); ++i) {
          if (toks[i].text == "=" || toks[i].text == "{" ||
              toks[i].text == "}") {
            fail(line_no, toks[i].col, DiagnosticKind::syntax,
                 "invalid element name");
            return result;
          }
          if (cur->index_of(toks[i].text) >= 0) {
            fail(line_no, toks[i].col, DiagnosticKind::syntax,
                 "duplicate element name '" + toks[i].text + "'");
            return result;
          }
          cur->elements.push_back(toks[i].text);
        }
      } else {  // zero / one
        if (toks.size() != 3) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "expected a single element name");
          return result;
        }
        std::string& slot = head == "zero" ? cur->zero : cur->one;
        bool& flag = head == "zero" ? cur->has_zero : cur->has_one;
        if (flag) {
          fail(line_no, toks[0].col, DiagnosticKind::syntax,
               "duplicate key '" + head + "'");
          return result;
        }
        slot = toks[2].text;
        flag = true;
      }
      continue;
    }

    // Table lines.
    bool is_hyper = (!in_module && head == "h") || (in_module && head == "f");
    bool is_single = !in_module && head == "k";
    bool is_action = in_module && head == "g";
    if (!is_hyper && !is_single && !is_action) {
      fail(line_no, toks[0].col, DiagnosticKind::syntax,
           "unknown directive '" + head + "'");
      return result;
    }
    if (ring.m == 0 || ring.n == 0 || ring.elements.empty() ||
        (in_module && module.elements.empty())) {
      fail(line_no, toks[0].col, DiagnosticKind::syntax,
           "table line before m, n and elements are declared");
      return result;
    }
    int argc = is_single ? ring.n : is_action ? ring.n : ring.m;
    std::vector<int> args;
    size_t pos = 1;
    for (int a = 0; a < argc; ++a, ++pos) {
      if (pos >= toks.size() || toks[pos].text == "=") {
        fail(line_no, int(raw.size()) + 1, DiagnosticKind::syntax,
             "expected " + std::to_string(argc) + " argument names");
        return result;
      }
      const SectionDraft& home = (is_action && a < ring.n - 1) ? ring : *cur;
      int idx = home.index_of(toks[pos].text);
      if (idx < 0) {
        fail(line_no, toks[pos].col, DiagnosticKind::undefined_name,
             "undefined element '" + toks[pos].text + "'");
        return result;
      }
      args.push_back(idx);
    }
    if (pos >= toks.size() || toks[pos].text != "=") {
      fail(line_no, pos < toks.size() ? toks[pos].col : int(raw.size()) + 1,
           DiagnosticKind::syntax, "expected '='");
      return result;
    }
    ++pos;

    if (is_single) {
      if (pos + 1 != toks.size()) {
        fail(line_no, pos < toks.size() ? toks[pos].col : int(raw.size()) + 1,
             DiagnosticKind::syntax, "expected a single element name");
        return result;
      }
      int idx = ring.index_of(toks[pos].text);
      if (idx < 0) {
        fail(line_no, toks[pos].col, DiagnosticKind::undefined_name,
             "undefined element '" + toks[pos].text + "'");
        return result;
      }
      size_t rank = tuple_rank(args, int(ring.elements.size()));
      if (ring.single_entries.count(rank)) {
        fail(line_no, toks[0].col, DiagnosticKind::syntax,
             "duplicate table entry");
        return result;
      }
      ring.single_entries[rank] = idx;
      continue;
    }

    if (pos >= toks.size() || toks[pos].text != "{") {
      fail(line_no, pos < toks.size() ? toks[pos].col : int(raw.size()) + 1,
           DiagnosticKind::syntax, "expected '{'");
      return result;
    }
    ++pos;
    ElementSet value(int(cur->elements.size()));
    while (pos < toks.size() && toks[pos].text != "}") {
      int idx = cur->index_of(toks[pos].text);
      if (idx < 0) {
        fail(line_no, toks[pos].col, DiagnosticKind::undefined_name,
             "undefined element '" + toks[pos].text + "'");
        return result;
      }
      value.insert(idx);
      ++pos;
    }
    if (pos >= toks.size()) {
      fail(line_no, int(raw.size()) + 1, DiagnosticKind::syntax,
           "unterminated set");
      return result;
    }
    if (pos + 1 != toks.size()) {
      fail(line_no, toks[pos + 1].col, DiagnosticKind::syntax,
           "unexpected tokens after '}'");
      return result;
    }
    if (value.empty()) {
      fail(line_no, toks[pos].col, DiagnosticKind::syntax,
           "empty set: values must be nonempty subsets");
      return result;
    }
    if (is_action) {
      std::vector<int> scal(args.begin(), args.end() - 1);
      size_t rank = tuple_rank(scal, int(ring.elements.size())) *
                        size_t(module.elements.size()) +
                    size_t(args.back());
      if (module.action_entries.count(rank)) {
        fail(line_no, toks[0].col, DiagnosticKind::syntax,
             "duplicate table entry");
        return result;
      }
      module.action_entries[rank] = value;
    } else {
      size_t rank = tuple_rank(args, int(cur->elements.size()));
      if (cur->hyper_entries.count(rank)) {
        fail(line_no, toks[0].col, DiagnosticKind::syntax,
             "duplicate table entry");
        return result;
      }
      cur->hyper_entries[rank] = value;
    }
  }

  if (!ring.present) {
    fail(line_no, 1, DiagnosticKind::syntax, "missing [ring] section");
    return result;
  }

  auto section_complete = [&](SectionDraft& sec, bool is_ring) -> bool {
    int line = sec.header_line;
    if (is_ring && (sec.m == 0 || sec.n == 0)) {
      fail(line, 1, DiagnosticKind::syntax, "missing arity keys m/n");
      return false;
    }
    if (sec.elements.empty()) {
      fail(line, 1, DiagnosticKind::syntax, "missing 'elements'");
      return false;
    }
    if (!sec.has_zero) {
      fail(line, 1, DiagnosticKind::syntax, "missing 'zero'");
      return false;
    }
    if (is_ring && !sec.has_one) {
      fail(line, 1, DiagnosticKind::syntax, "missing 'one'");
      return false;
    }
    if (sec.index_of(sec.zero) < 0) {
      fail(line, 1, DiagnosticKind::undefined_name,
           "zero '" + sec.zero + "' is not a declared element");
      return false;
    }
    if (is_ring && sec.index_of(sec.one) < 0) {
      fail(line, 1, DiagnosticKind::undefined_name,
           "one '" + sec.one + "' is not a declared element");
      return false;
    }
    return true;
  };

  if (!section_complete(ring, true)) return result;
  if (module.present && !section_complete(module, false)) return result;

  // Totality: list missing tuples, capped at 50 diagnostics.
  int rs = int(ring.elements.size());
  int ms = module.present ? int(module.elements.size()) : 0;
  int missing = 0;
  auto unrank = [](size_t r, int base, int len) {
    std::vector<int> t(len);
    for (int i = len - 1; i >= 0; --i) {
      t[i] = int(r % size_t(base));
      r /= size_t(base);
    }
    return t;
  };
  auto miss = [&](int line, const std::string& op,
                  const std::vector<std::string>& names) {
    if (missing++ >= 50) return;
    std::string msg = "missing entry: " + op;
    for (const auto& s : names) msg += " " + s;
    fail(line, 1, DiagnosticKind::totality, msg);
  };
  {
    size_t want = 1;
    for (int i = 0; i < ring.m; ++i) want *= size_t(rs);
    for (size_t r = 0; r < want; ++r)
      if (!ring.hyper_entries.count(r)) {
        auto t = unrank(r, rs, ring.m);
        std::vector<std::string> names;
        for (int x : t) names.push_back(ring.elements[x]);
        miss(ring.header_line, "h", names);
      }
    want = 1;
    for (int i = 0; i < ring.n; ++i) want *= size_t(rs);
    for (size_t r = 0; r < want; ++r)
      if (!ring.single_entries.count(r)) {
        auto t = unrank(r, rs, ring.n);
        std::vector<std::string> names;
        for (int x : t) names.push_back(ring.elements[x]);
        miss(ring.header_line, "k", names);
      }
  }
  if (module.present) {
    size_t want = 1;
    for (int i = 0; i < ring.m; ++i) want *= size_t(ms);
    for (size_t r = 0; r < want; ++r)
      if (!module.hyper_entries.count(r)) {
        auto t = unrank(r, ms, ring.m);
        std::vector<std::string> names;
        for (int x : t) names.push_back(module.elements[x]);
        miss(module.header_line, "f", names);
      }
    want = 1;
    for (int i = 0; i < ring.n - 1; ++i) want *= size_t(rs);
    want *= size_t(ms);
    for (size_t r = 0; r < want; ++r)
      if (!module.action_entries.count(r)) {
        int x = int(r % size_t(ms));
        auto t = unrank(r / size_t(ms), rs, ring.n - 1);
        std::vector<std::string> names;
        for (int v : t) names.push_back(ring.elements[v]);
        names.push_back(module.elements[x]);
        miss(module.header_line, "g", names);
      }
  }
  if (!result.diagnostics.empty()) return result;

  auto ring_ptr = std::make_shared<KrasnerHyperring>();
  ring_ptr->carrier = Carrier{ring.elements};
  {
    size_t want = 1;
    for (int i = 0; i < ring.m; ++i) want *= size_t(rs);
    std::vector<ElementSet> htab(want, ElementSet(rs));
    for (auto& [rank, v] : ring.hyper_entries) htab[rank] = v;
    ring_ptr->add = HyperOperation(rs, ring.m, std::move(htab));
  }
  {
    size_t want = 1;
    for (int i = 0; i < ring.n; ++i) want *= size_t(rs);
    std::vector<int> ktab(want, 0);
    for (auto& [rank, v] : ring.single_entries) ktab[rank] = v;
    ring_ptr->mul = Operation(rs, ring.n, std::move(ktab));
  }
  ring_ptr->zero = ring.index_of(ring.zero);
  ring_ptr->one = ring.index_of(ring.one);
  result.ring = ring_ptr;

  if (module.present) {
    auto mod_ptr = std::make_shared<Hypermodule>();
    mod_ptr->ring = ring_ptr;
    mod_ptr->carrier = Carrier{module.elements};
    {
      size_t want = 1;
      for (int i = 0; i < ring.m; ++i) want *= size_t(ms);
      std::vector<ElementSet> ftab(want, ElementSet(ms));
      for (auto& [rank, v] : module.hyper_entries) ftab[rank] = v;
      mod_ptr->add = HyperOperation(ms, ring.m, std::move(ftab));
    }
    {
      size_t want = 1;
      for (int i = 0; i < ring.n - 1; ++i) want *= size_t(rs);
      want *= size_t(ms);
      mod_ptr->action_table.assign(want, ElementSet(ms));
      for (auto& [rank, v] : module.action_entries)
        mod_ptr->action_table[rank] = v;
    }
    mod_ptr->zero = module.index_of(module.zero);
    result.module = mod_ptr;
  }
  return result;
}

// Canonical serialization: declared label order, tables in lexicographic
// tuple order, sets in ascending index order. parse(emit(x)) reproduces x.
inline std::string emit_structure(const KrasnerHyperring& R,
                                  const Hypermodule* M = nullptr) {
  std::ostringstream os;
  int rs = R.size(), m = R.m(), n = R.n();
  os << "[ring]\n";
  os << "m = " << m << "\n";
  os << "n = " << n << "\n";
  os << "elements =";
  for (const auto& l : R.carrier.labels) os << " " << l;
  os << "\n";
  os << "zero = " << R.carrier.labels[R.zero] << "\n";
  os << "one = " << R.carrier.labels[R.one] << "\n";
  {
    std::vector<int> t(m, 0);
    do {
      os << "h";
      for (int x : t) os << " " << R.carrier.labels[x];
      os << " = {";
      R.add.at(t).for_each([&](int e) { os << " " << R.carrier.labels[e]; });
      os << " }\n";
    } while (next_tuple(t, rs));
  }
  {
    std::vector<int> t(n, 0);
    do {
      os << "k";
      for (int x : t) os << " " << R.carrier.labels[x];
      os << " = " << R.carrier.labels[R.mul.at(t)] << "\n";
    } while (next_tuple(t, rs));
  }
  if (M) {
    int ms = M->size();
    os << "[module]\n";
    os << "elements =";
    for (const auto& l : M->carrier.labels) os << " " << l;
    os << "\n";
    os << "zero = " << M->carrier.labels[M->zero] << "\n";
    {
      std::vector<int> t(m, 0);
      do {
        os << "f";
        for (int x : t) os << " " << M->carrier.labels[x];
        os << " = {";
        M->add.at(t).for_each(
            [&](int e) { os << " " << M->carrier.labels[e]; });
        os << " }\n";
      } while (next_tuple(t, ms));
    }
    {
      std::vector<int> scal(n - 1, 0);
      do {
        for (int x = 0; x < ms; ++x) {
          os << "g";
          for (int r : scal) os << " " << R.carrier.labels[r];
          os << " " << M->carrier.labels[x] << " = {";
          M->act(scal, x).for_each(
              [&](int e) { os << " " << M->carrier.labels[e]; });
          os << " }\n";
        }
      } while (next_tuple(scal, rs));
    }
  }
  return os.str();
}

}  // namespace hypermod
