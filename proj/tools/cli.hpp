#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deg::cli {

// Exit codes: 0 checks pass / output produced, 1 a verification failed,
// 2 usage or input error.
int run_deg(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_sym(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_llt(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deg::cli
