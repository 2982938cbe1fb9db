#ifndef GAUGECOHO_TOOLS_CLI_HPP
#define GAUGECOHO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gaugecoho::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gaugecoho::cli

#endif
