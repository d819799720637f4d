#include "run.hpp"

#include <cstdlib>
#include <ostream>

#include "evenparity/version.hpp"

namespace evenparity::cli {

namespace {

using Ordered = nlohmann::ordered_json;

std::string token(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_double(v.get<double>());
    return v.dump();
}

Ordered ordered(const std::vector<std::pair<std::string, Json>>& items)
{
    Ordered o = Ordered::object();
    for (const auto& [k, v] : items) o[k] = Ordered::parse(v.dump());
    return o;
}

} // namespace

std::filesystem::path resolve_out_dir(const std::string& flag)
{
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("EVENPARITY_OUT_DIR"); env != nullptr && *env != '\0') return env;
    return ".";
}

Run::Run(std::string command, const CommonOptions& common, std::ostream& out, std::ostream& err)
    : command_(std::move(command)), common_(common), out_(out), err_(err), start_(std::chrono::steady_clock::now())
{
    param("trunc", common.trunc);
}

void Run::param(const std::string& key, Json value) { params_.emplace_back(key, std::move(value)); }
void Run::derived(const std::string& key, Json value) { derived_.emplace_back(key, std::move(value)); }
void Run::result(const std::string& key, Json value) { results_.emplace_back(key, std::move(value)); }
void Run::stage(const std::string& name, std::string content) { files_.emplace_back(name, std::move(content)); }

std::filesystem::path Run::finish()
{
    if (!common_.quiet) {
        for (const auto& w : diag_.warnings()) err_ << "warning: [" << w.source << "] " << w.message << '\n';
    }
    for (const auto& w : diag_.warnings()) {
        if (w.captured_norm < kFatalCapturedNorm) {
            throw TruncationError("[" + w.source + "] " + w.message + " (captured norm "
                                  + format_double(w.captured_norm) + ")");
        }
    }

    const std::filesystem::path dir = resolve_out_dir(common_.out);
    Ordered outputs = Ordered::array();
    for (const auto& [name, content] : files_) {
        write_file_atomic(dir / name, content);
        outputs.push_back(name);
    }

    std::vector<std::string> args{command_};
    for (const auto& [key, value] : params_) {
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back("--" + key);
            continue;
        }
        if (value.is_null()) continue;
        args.push_back("--" + key);
        if (value.is_array()) {
            for (const auto& v : value) args.push_back(token(v));
        } else {
            args.push_back(token(value));
        }
    }

    Ordered warnings = Ordered::array();
    for (const auto& w : diag_.warnings())
        warnings.push_back({{"source", w.source}, {"message", w.message}, {"captured_norm", w.captured_norm}});

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    Ordered manifest = Ordered::object();
    manifest["command"] = command_;
    manifest["version"] = version_string();
    manifest["parameters"] = ordered(params_);
    manifest["arguments"] = args;
    manifest["derived"] = ordered(derived_);
    manifest["results"] = ordered(results_);
    manifest["outputs"] = std::move(outputs);
    manifest["warnings"] = std::move(warnings);
    manifest["wall_time_seconds"] = wall;

    const std::filesystem::path path = dir / (command_ + ".manifest.json");
    write_file_atomic(path, manifest.dump(2) + "\n");
    if (!common_.quiet) out_ << "wrote " << files_.size() << " file(s) and " << path.string() << '\n';
    return path;
}

} // namespace evenparity::cli
