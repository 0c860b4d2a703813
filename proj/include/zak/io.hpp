#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zak/solver.hpp"

namespace zak {

/// Configuration or file-format problem; message carries line / path context.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    // [grid]
    double R = 128.0;
    int N = 256;
    // [sim]
    double alpha = 1.0;
    double eps = 0.1;
    double dt = 1e-3;
    double T = 1.0;
    int sample_every = 10;
    // [data]
    std::string family = "gaussian";
    double eps0 = 0.01;
    int shell_k = 2;
    // [verifier]
    std::uint64_t seed = 1;
    int count = 50;
    int k_lo = -4;
    int k_hi = 1;
    // [output]
    std::string out_dir = ".";
};

/// key = value lines with optional [section] headers; unknown keys and
/// out-of-range values are rejected with the offending line number.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Binary state snapshot: "ZKRD" magic, format version, endianness tag,
/// grid size and scalars, then little-endian float64 arrays for Re/Im of
/// both spectra. Round trip is bit-exact.
void save_checkpoint(const SimState& s, const std::string& path);
SimState load_checkpoint(const std::string& path);

enum class ExportFormat { csv, jsonl };

/// One row per sample: t, mass, energy, tail_mass at 17 significant digits.
void export_timeseries(const TimeSeries& series, ExportFormat format, const std::string& path);

/// Inverse of the csv export (diagnostic columns only).
std::vector<DiagRow> import_diagnostics_csv(const std::string& path);

std::string usage_text();

/// simulate | scatter-check | verify-estimates | resonance-map | lp-analyze.
/// Writes outputs under cfg.out_dir; returns a process exit status
/// (0 ok, 1 runtime failure, 2 usage error).
int dispatch(const std::string& subcommand, const RunConfig& cfg,
             const std::string& resume_path = "");

}  // namespace zak
