#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcf {

// Exit codes: 0 ok, 1 domain error, 2 undecidable at the current precision or field, 3 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hcf
