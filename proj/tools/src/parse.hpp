#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evenparity/fock.hpp"

namespace evenparity::cli {

/// Malformed command-line input. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text);
int parse_int(std::string_view text);

/// "RE" or "RE,IM".
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

/// "a:b:step", inclusive of b when it lies on the lattice.
std::vector<double> parse_range(std::string_view text);

/// Short label for column headers, e.g. 0.9 -> "0.9".
std::string short_number(double value);

/// Complex amplitudes from a JSON file: a bare array of [re, im] or numbers,
/// or an object with "amplitudes", or a serialized heralded state.
std::variant<FockVector, ComplexMatrix> load_state_file(const std::filesystem::path& path);

/// Control state for the detector: flat, coherent:A, fock:M, file:PATH.
/// `n_trunc` is the basis size for the generated kinds; flat uses `flat_trunc`.
FockVector parse_control(std::string_view spec, int n_trunc, int flat_trunc, Diagnostics* diag);

} // namespace evenparity::cli
