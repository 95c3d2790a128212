#pragma once
// Test-only helpers: drive the ccseq binary found via CCSEQ_CLI_PATH and
// slurp files for byte comparisons. Linux-only (popen + WEXITSTATUS).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

inline std::string cli_path() {
    const char* p = std::getenv("CCSEQ_CLI_PATH");
    if (!p || !*p) throw std::runtime_error("CCSEQ_CLI_PATH is not set");
    return p;
}

inline CmdResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    CmdResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
