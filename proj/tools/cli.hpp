#pragma once

#include <iosfwd>

namespace bergecov::cli {

/// Exit status: 0 success, 1 internal invariant violation, 2 input or
/// precondition error.
auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

}
