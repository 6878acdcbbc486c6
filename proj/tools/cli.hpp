#pragma once

#include <iosfwd>

namespace holonorm {

/// Exit codes: 0 success (or an asymptotically normal verdict), 2 inconclusive, 1 usage or input error.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace holonorm
