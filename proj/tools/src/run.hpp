#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "evenparity/diagnostics.hpp"
#include "evenparity/serialize.hpp"

namespace evenparity::cli {

/// Flags shared by every subcommand.
struct CommonOptions {
    int trunc = kDefaultTrunc;
    std::string out;
    int threads = 0;
    bool quiet = false;
};

/// Output directory: --out, else $EVENPARITY_OUT_DIR, else the working directory.
std::filesystem::path resolve_out_dir(const std::string& flag);

/// One invocation of a subcommand. Output files are staged in memory and
/// written atomically by finish(), followed by `<command>.manifest.json`.
class Run {
public:
    Run(std::string command, const CommonOptions& common, std::ostream& out, std::ostream& err);

    /// A resolved parameter, replayable as `--key value`. Booleans become bare
    /// flags when true; arrays expand to one token per element.
    void param(const std::string& key, Json value);
    /// A value derived from the parameters (resolved defaults, cutoffs).
    void derived(const std::string& key, Json value);
    /// A scalar result recorded in the manifest.
    void result(const std::string& key, Json value);

    void stage(const std::string& name, std::string content);
    int param_trunc() const;
    Diagnostics& diag() { return diag_; }
    std::ostream& out() { return out_; }
    bool quiet() const { return common_.quiet; }

    /// Throws TruncationError when any warning reports a captured norm below
    /// kFatalCapturedNorm. Otherwise writes the staged files and the manifest.
    std::filesystem::path finish();

    static constexpr double kFatalCapturedNorm = 0.99;

private:
    std::string command_;
    CommonOptions common_;
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::pair<std::string, Json>> params_;
    std::vector<std::pair<std::string, Json>> derived_;
    std::vector<std::pair<std::string, Json>> results_;
    std::vector<std::pair<std::string, std::string>> files_;
    Diagnostics diag_;
};

} // namespace evenparity::cli
