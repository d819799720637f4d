#include "parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "evenparity/detector.hpp"
#include "evenparity/serialize.hpp"

namespace evenparity::cli {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

ComplexVector amplitudes_from_json(const Json& j)
{
    FockVector v;
    from_json(j, v);
    return v.amplitudes();
}

} // namespace

double parse_double(std::string_view text)
{
    const std::string s(trim(text));
    if (s.empty()) throw UsageError("expected a number, got an empty string");
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a finite number: '" + s + "'");
    return v;
}

int parse_int(std::string_view text)
{
    const std::string_view s = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw UsageError("not an integer: '" + std::string(s) + "'");
    return v;
}

Complex parse_complex(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return {parse_double(text), 0.0};
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string format_complex(Complex z)
{
    if (z.imag() == 0.0) return format_double(z.real());
    return format_double(z.real()) + "," + format_double(z.imag());
}

std::vector<double> parse_range(std::string_view text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw UsageError("range must look like a:b:step, got '" + std::string(text) + "'");
    const double a = parse_double(text.substr(0, c1));
    const double b = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_double(text.substr(c2 + 1));
    if (!(step > 0.0)) throw UsageError("range step must be positive");
    if (b < a) throw UsageError("range end must not precede its start");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 100000) throw UsageError("range has too many points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        double v = a + static_cast<double>(i) * step;
        if (std::abs(v - b) <= 1e-9 * step) v = b;
        out.push_back(v);
    }
    return out;
}

std::string short_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

std::variant<FockVector, ComplexMatrix> load_state_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open state file '" + path.string() + "'");
    Json j;
    try {
        j = Json::parse(in);
        if (j.is_array()) return FockVector(amplitudes_from_json(j));
        if (j.is_object() && j.contains("amplitudes")) return FockVector(amplitudes_from_json(j["amplitudes"]));
        if (j.is_object() && j.contains("state")) {
            const Json& s = j["state"];
            if (s.value("kind", "") == "pure") return FockVector(amplitudes_from_json(s.at("amplitudes")));
            const Json& m = s.at("matrix");
            const auto dim = static_cast<Eigen::Index>(m.size());
            ComplexMatrix rho(dim, dim);
            for (Eigen::Index r = 0; r < dim; ++r) {
                const ComplexVector row = amplitudes_from_json(m[static_cast<std::size_t>(r)]);
                if (row.size() != dim) throw UsageError("density matrix in '" + path.string() + "' is not square");
                rho.row(r) = row.transpose();
            }
            return rho;
        }
    } catch (const Json::exception& e) {
        throw UsageError("cannot parse state file '" + path.string() + "': " + e.what());
    } catch (const DomainError& e) {
        throw UsageError("cannot parse state file '" + path.string() + "': " + e.what());
    }
    throw UsageError("state file '" + path.string() + "' holds no amplitudes");
}

FockVector parse_control(std::string_view spec, int n_trunc, int flat_trunc, Diagnostics* diag)
{
    if (spec == "flat") return flat_control(flat_trunc);
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw UsageError("unknown control spec '" + std::string(spec) + "'");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view arg = spec.substr(colon + 1);
    if (kind == "coherent") return coherent_state(parse_complex(arg), n_trunc, diag);
    if (kind == "fock") {
        const int m = parse_int(arg);
        if (m < 0) throw UsageError("fock control needs m >= 0");
        return FockVector::number_state(m, std::max(n_trunc, m));
    }
    if (kind == "file") {
        auto state = load_state_file(std::filesystem::path(std::string(arg)));
        if (!std::holds_alternative<FockVector>(state)) throw UsageError("control file must hold a pure state");
        return std::get<FockVector>(std::move(state));
    }
    throw UsageError("unknown control spec '" + std::string(spec) + "'");
}

} // namespace evenparity::cli
