#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace west {

/* Exit codes beyond the per-command 0/1/2 verdicts. */
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

/* Runs one `west` command. args excludes the program name. */
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace west
