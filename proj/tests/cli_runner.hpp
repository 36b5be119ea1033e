// cli_runner.hpp — Runs the jchm binary and captures stdout + exit status.

#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace jchm::testing {

struct RunResult {
    int status{-1};
    std::string out;
};

inline RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(JCHM_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace jchm::testing
