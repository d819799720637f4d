#include "evenparity/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <system_error>
#include <unistd.h>

namespace evenparity {

std::string format_double(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw DomainError("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const ComplexVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
    return out;
}

Json matrix_to_json(const ComplexMatrix& m)
{
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
    return out;
}

void to_json(Json& j, const FockVector& v) { j = vector_to_json(v.amplitudes()); }

void from_json(const Json& j, FockVector& v)
{
    if (!j.is_array() || j.empty()) throw DomainError("Fock vector must be a non-empty array");
    ComplexVector a(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) a[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    v = FockVector(std::move(a));
}

void to_json(Json& j, const PovmOptions& o)
{
    j = Json::object();
    j["cutoff"] = o.cutoff ? Json(*o.cutoff) : Json(nullptr);
    j["n_trunc"] = o.n_trunc ? Json(*o.n_trunc) : Json(nullptr);
}

void from_json(const Json& j, PovmOptions& o)
{
    o = {};
    if (j.contains("cutoff") && !j["cutoff"].is_null()) o.cutoff = j["cutoff"].get<int>();
    if (j.contains("n_trunc") && !j["n_trunc"].is_null()) o.n_trunc = j["n_trunc"].get<int>();
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json optional_complex(const std::optional<Complex>& v) { return v ? complex_to_json(*v) : Json(nullptr); }

bool present(const Json& j, const char* key) { return j.contains(key) && !j[key].is_null(); }

} // namespace

void to_json(Json& j, const SchemeConfig& c)
{
    j = Json::object();
    j["beta"] = complex_to_json(c.beta);
    j["lambda"] = optional_json(c.lambda);
    j["squeezing_db"] = optional_json(c.squeezing_db);
    j["n"] = optional_json(c.n);
    j["eta"] = c.eta;
    j["eta_stage2"] = optional_json(c.eta_stage2);
    j["n_trunc"] = c.n_trunc;
    j["stages"] = c.stages;
    j["control_amplitude"] = optional_complex(c.control_amplitude);
    j["displacement"] = optional_complex(c.displacement);
    j["second_outcome"] = optional_json(c.second_outcome);
    j["povm"] = c.povm;
}

void from_json(const Json& j, SchemeConfig& c)
{
    c = {};
    if (present(j, "beta")) c.beta = complex_from_json(j["beta"]);
    if (present(j, "lambda")) c.lambda = j["lambda"].get<double>();
    if (present(j, "squeezing_db")) c.squeezing_db = j["squeezing_db"].get<double>();
    if (present(j, "n")) c.n = j["n"].get<int>();
    if (present(j, "eta")) c.eta = j["eta"].get<double>();
    if (present(j, "eta_stage2")) c.eta_stage2 = j["eta_stage2"].get<double>();
    if (present(j, "n_trunc")) c.n_trunc = j["n_trunc"].get<int>();
    if (present(j, "stages")) c.stages = j["stages"].get<int>();
    if (present(j, "control_amplitude")) c.control_amplitude = complex_from_json(j["control_amplitude"]);
    if (present(j, "displacement")) c.displacement = complex_from_json(j["displacement"]);
    if (present(j, "second_outcome")) c.second_outcome = j["second_outcome"].get<int>();
    if (present(j, "povm")) c.povm = j["povm"].get<PovmOptions>();
}

void to_json(Json& j, const DetectorEffect& e)
{
    Json weights = Json::array();
    Json vectors = Json::array();
    for (const auto& c : e.components) {
        weights.push_back(c.weight);
        vectors.push_back(vector_to_json(c.vector.amplitudes()));
    }
    j = Json::object();
    j["eta"] = e.eta;
    j["n"] = e.n;
    j["cutoff"] = e.cutoff;
    j["tail_weight"] = e.tail_weight;
    j["weights"] = std::move(weights);
    j["vectors"] = std::move(vectors);
}

void to_json(Json& j, const HeraldedState& h)
{
    j = Json::object();
    j["config"] = h.config;
    j["success_probability"] = h.success_probability;
    j["stage_probabilities"] = h.stage_probabilities;
    if (h.is_pure()) {
        j["state"] = {{"kind", "pure"}, {"amplitudes", vector_to_json(h.pure().amplitudes())}};
    } else {
        j["state"] = {{"kind", "density_matrix"}, {"matrix", matrix_to_json(std::get<ComplexMatrix>(h.state))}};
    }
    j["normalized"] = false;
}

void to_json(Json& j, const OptimizationResult& r)
{
    Json trace = Json::array();
    for (const auto& t : r.trace) trace.push_back({{"params", t.params}, {"value", t.value}});
    j = Json::object();
    j["best_params"] = r.best_params;
    j["best_value"] = r.best_value;
    j["converged"] = r.converged;
    j["evaluations"] = r.evaluations;
    j["diagnostics"] = r.diagnostics;
    j["trace"] = std::move(trace);
}

void to_json(Json& j, const PowerLawFit& f)
{
    j = {{"exponent", f.exponent}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}

Json wigner_header(const WignerGrid& grid)
{
    const GridSpec& s = grid.spec;
    return {{"bounds", {{"x_min", s.x_min}, {"x_max", s.x_max}, {"p_min", s.p_min}, {"p_max", s.p_max}}},
            {"shape", {s.nx, s.np}},
            {"convention", grid.convention},
            {"layout", "row i is x_i = x_min + (i + 1/2) dx, column k is p_k = p_min + (k + 1/2) dp"},
            {"binary", "little-endian float64, row-major"}};
}

std::string wigner_csv(const WignerGrid& grid)
{
    std::string out;
    out.reserve(static_cast<std::size_t>(grid.values.size()) * 24);
    for (Eigen::Index i = 0; i < grid.values.rows(); ++i) {
        for (Eigen::Index k = 0; k < grid.values.cols(); ++k) {
            if (k > 0) out += ',';
            out += format_double(grid.values(i, k));
        }
        out += '\n';
    }
    return out;
}

std::string wigner_binary(const WignerGrid& grid)
{
    std::string out;
    out.resize(static_cast<std::size_t>(grid.values.size()) * sizeof(double));
    std::size_t pos = 0;
    for (Eigen::Index i = 0; i < grid.values.rows(); ++i) {
        for (Eigen::Index k = 0; k < grid.values.cols(); ++k) {
            auto bits = std::bit_cast<std::uint64_t>(grid.values(i, k));
            if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
            std::memcpy(out.data() + pos, &bits, sizeof bits);
            pos += sizeof bits;
        }
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    const std::filesystem::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace evenparity
