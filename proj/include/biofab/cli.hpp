#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biofab {

// Pipeline driver: load -> order -> adjacency -> detect -> unfold -> layout ->
// render. `args` excludes the program name. Returns 0 on success, 1 on a
// pipeline error, 2 on flag misuse.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biofab
