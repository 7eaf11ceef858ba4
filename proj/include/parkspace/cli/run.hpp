#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace parkspace::cli {

/// Parsed command line.  canonical() lists every field, so parsing it again
/// gives back the same config.
struct RunConfig {
    std::string command;
    std::string group;
    std::string format = "json";
    unsigned threads = 1;
    std::size_t truncation = 0;  // 0: the command's default order
    bool allow_stretch = false;
    unsigned p = 0;              // 0: h + 1
    long k = -1;                 // -1: every k
    std::uint64_t seed = 1;

    std::string canonical() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

const std::vector<std::string>& commands();

/// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 unsupported group.
enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3 };

/// Parses arguments (argv[0] is skipped).  Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace parkspace::cli
