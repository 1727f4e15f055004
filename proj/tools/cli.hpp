#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcw {

// Exit codes of the qcw tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInputFormat = 3;
inline constexpr int kExitPromiseViolation = 4;
inline constexpr int kExitResourceCap = 5;

struct RunConfig {
    std::string command;          // deutsch | dj | worlds-trace | decohere | audit
    std::string function_source;  // inline truth table bits, or @path
    int n = -1;                   // optional register-A width cross-check
    std::uint64_t seed = 0;
    double threshold = -1.0;      // <0: use the command's default
    std::string output_path;      // empty: write to stdout
    double gamma = 0.0;           // decohere: dephasing rate per step
    int env_qubits = 0;           // decohere: mechanistic environment size
    int steps = 24;               // decohere: evolution steps
};

// Executes one command and writes the complete report document to
// output_path (or `out`). On error nothing is written besides a diagnostic
// on `err`; the exit code classifies the failure.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command-line front end (argument parsing plus run_command). `args`
// excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcw
