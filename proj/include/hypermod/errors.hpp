#pragma once

#include <stdexcept>
#include <string>

namespace hypermod {

// Error taxonomy mirrored by the CLI exit-code contract (see cli.hpp).

// A requested computation would exceed a configured budget (table entries,
// carrier sizes, family counts).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An object that is required to satisfy structural invariants (nonempty
// hyperoperation values, hyperideal/subhypermodule laws) does not.
struct StructureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument count does not match an operation arity, or a part count is not
// of the required l*(arity-1)+1 form.
struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quotient construction produced representative-dependent tables.
struct WellDefinednessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A condition the library asserts can never fail on validated inputs.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hypermod
