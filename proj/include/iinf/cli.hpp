#ifndef IINF_CLI_HPP
#define IINF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace iinf {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_verify_failed = 3;

// Runs one command. `args` excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace iinf

#endif  // IINF_CLI_HPP
