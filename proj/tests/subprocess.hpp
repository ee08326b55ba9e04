#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace highway::testing {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string cli_path() {
    const char* path = std::getenv("HIGHWAY_CLI");
    if (path == nullptr || *path == '\0')
        throw std::runtime_error("HIGHWAY_CLI is not set; run through ctest");
    return path;
}

// Runs the CLI with the given argument string, capturing both streams.
inline RunResult run_cli(const std::string& args) {
    const std::string err_file =
        "/tmp/highway_cli_err_" + std::to_string(::getpid()) + ".txt";
    const std::string cmd = cli_path() + " " + args + " 2>" + err_file;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_file);
    std::stringstream ss;
    ss << err.rdbuf();
    result.err = ss.str();
    std::remove(err_file.c_str());
    return result;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace highway::testing
