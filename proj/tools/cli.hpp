#pragma once

// Front end for the certification pipeline and the geometry queries.
// Exit codes: 0 every verdict holds, 1 some verdict fails, 2 invalid input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cwpd::cli {

enum class Command { Certify, Axis, Orbit, Geodesic, Tube, Oracle };
enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::Certify;
    unsigned n = 2;
    unsigned depth = 20;
    std::optional<std::uint64_t> prime;
    std::optional<double> eps;
    Format format = Format::Json;
    std::optional<std::string> output;

    // orbit
    std::string label;
    unsigned iters = 5;

    // certify / oracle
    bool run_oracle = true;
    unsigned workers = 0;

    // tube
    std::optional<double> eta;
    std::optional<double> length;
    std::optional<double> z;
    std::optional<double> z_prime;
    double w = 0;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command, writing the report to out (or config.output) and a
/// JSON error object to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwpd::cli
