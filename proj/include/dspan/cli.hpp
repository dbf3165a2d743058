#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dspan/collection.hpp"

namespace dspan {

// Collection literal: "d:[a_0,a_1,...,a_k]", base-10 integers, whitespace
// allowed inside the brackets. Trailing zeros are accepted on input and
// trimmed; they are never printed on output.
DCollection parse_collection(std::string_view text);
std::string format_collection(const DCollection& a);

// Dispatches one command line (argv without the program name). Results go
// to `out`, diagnostics to `err`. Returns the process exit status:
//   0  success (also "equal" under eq --status)
//   1  unequal under eq --status
//   2  parse or usage error
//   3  domain error (invalid exchange, non-normal decompose input,
//      oracle bound exceeded, ...)
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dspan
