#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypermod/errors.hpp"

namespace hypermod {

// Advance a base-`base` tuple in lexicographic order (leftmost digit most
// significant). Returns false after the last tuple, leaving it all-zero.
inline bool next_tuple(std::span<int> t, int base) {
  for (int i = int(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

// base^len, guarded against overflow and against a configured entry budget.
inline size_t checked_table_size(int base, int len, long long budget,
                                 const char* what) {
  unsigned long long n = 1;
  for (int i = 0; i < len; ++i) {
    if (base != 0 && n > (unsigned long long)(budget) / (unsigned long long)base)
      throw CapacityError(std::string(what) + ": table of " +
                          std::to_string(base) + "^" + std::to_string(len) +
                          " entries exceeds budget " + std::to_string(budget));
    n *= (unsigned long long)base;
  }
  if ((long long)n > budget)
    throw CapacityError(std::string(what) + ": table of " +
                        std::to_string(base) + "^" + std::to_string(len) +
                        " entries exceeds budget " + std::to_string(budget));
  return size_t(n);
}

inline size_t tuple_rank(std::span<const int> t, int base) {
  size_t r = 0;
  for (int x : t) r = r * size_t(base) + size_t(x);
  return r;
}

}  // namespace hypermod
