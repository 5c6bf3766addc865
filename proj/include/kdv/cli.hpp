#pragma once

#include <ostream>

namespace kdv {

/// Exit status: 0 success, 1 numerical abort, 2 configuration or usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdv
