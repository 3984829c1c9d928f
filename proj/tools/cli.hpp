#pragma once

#include <iosfwd>

namespace kmforms {

// Exit status: 0 success, 1 identity violation or failed check, 2 usage or
// configuration error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmforms
