#include "zak/io.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zak/diagnostics.hpp"
#include "zak/interactions.hpp"
#include "zak/littlewood_paley.hpp"
#include "zak/transform.hpp"
#include "zak/verifier.hpp"

namespace zak {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void config_fail(int line, const std::string& msg) {
    throw IoError("config error at line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        config_fail(line, key + ": not a number: '" + v + "'");
    }
}

long long parse_int(const std::string& v, int line, const std::string& key) {
    try {
        size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        config_fail(line, key + ": not an integer: '" + v + "'");
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw, section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') config_fail(line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) config_fail(line, "expected key = value");
        std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) config_fail(line, "empty key");
        if (!section.empty()) key = section + "." + key;

        if (key == "grid.R") {
            cfg.R = parse_double(val, line, key);
            if (cfg.R <= 0) config_fail(line, "grid.R must be positive");
        } else if (key == "grid.N") {
            const long long n = parse_int(val, line, key);
            if (n < 8 || n > (1 << 22)) config_fail(line, "grid.N out of range [8, 2^22]");
            cfg.N = static_cast<int>(n);
        } else if (key == "sim.alpha") {
            cfg.alpha = parse_double(val, line, key);
            if (cfg.alpha <= 0) config_fail(line, "sim.alpha must be positive");
        } else if (key == "sim.eps") {
            cfg.eps = parse_double(val, line, key);
            if (!(cfg.eps > 0.0 && cfg.eps < 0.15))
                config_fail(line, "sim.eps must lie in (0, 0.15) so that "
                                  "10/3 < q(eps) < 4 < q(-eps) < inf");
        } else if (key == "sim.dt") {
            cfg.dt = parse_double(val, line, key);
            if (cfg.dt <= 0) config_fail(line, "sim.dt must be positive");
        } else if (key == "sim.T") {
            cfg.T = parse_double(val, line, key);
            if (cfg.T < 0) config_fail(line, "sim.T must be nonnegative");
        } else if (key == "sim.sample_every") {
            const long long n = parse_int(val, line, key);
            if (n < 1) config_fail(line, "sim.sample_every must be >= 1");
            cfg.sample_every = static_cast<int>(n);
        } else if (key == "data.family") {
            if (val != "gaussian" && val != "shell_bump" && val != "two_bump")
                config_fail(line, "data.family must be gaussian, shell_bump, or two_bump");
            cfg.family = val;
        } else if (key == "data.eps0") {
            cfg.eps0 = parse_double(val, line, key);
            if (cfg.eps0 <= 0) config_fail(line, "data.eps0 must be positive");
        } else if (key == "data.shell_k") {
            cfg.shell_k = static_cast<int>(parse_int(val, line, key));
        } else if (key == "verifier.seed") {
            const long long n = parse_int(val, line, key);
            if (n < 0) config_fail(line, "verifier.seed must be nonnegative");
            cfg.seed = static_cast<std::uint64_t>(n);
        } else if (key == "verifier.count") {
            const long long n = parse_int(val, line, key);
            if (n < 1 || n > 100000) config_fail(line, "verifier.count out of range");
            cfg.count = static_cast<int>(n);
        } else if (key == "verifier.k_lo") {
            cfg.k_lo = static_cast<int>(parse_int(val, line, key));
        } else if (key == "verifier.k_hi") {
            cfg.k_hi = static_cast<int>(parse_int(val, line, key));
        } else if (key == "output.dir") {
            if (val.empty()) config_fail(line, "output.dir must be nonempty");
            cfg.out_dir = val;
        } else {
            config_fail(line, "unknown key '" + key + "'");
        }
    }
    if (cfg.k_lo > cfg.k_hi) throw IoError("config error: verifier.k_lo > verifier.k_hi");
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

constexpr char kMagic[4] = {'Z', 'K', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kEndianTag = 0x01020304u;

void write_raw(std::ofstream& out, const void* p, size_t n, const std::string& path) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!out) throw IoError("write failed: " + path);
}

void read_raw(std::ifstream& in, void* p, size_t n, const std::string& path) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (in.gcount() != static_cast<std::streamsize>(n))
        throw IoError("truncated checkpoint: " + path);
}

void split_parts(const RadialField& f, std::vector<double>& re, std::vector<double>& im) {
    re.resize(f.values.size());
    im.resize(f.values.size());
    for (size_t i = 0; i < f.values.size(); ++i) {
        re[i] = f.values[i].real();
        im[i] = f.values[i].imag();
    }
}

}  // namespace

void save_checkpoint(const SimState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open checkpoint for writing: " + path);
    write_raw(out, kMagic, 4, path);
    write_raw(out, &kVersion, 4, path);
    write_raw(out, &kEndianTag, 4, path);
    const std::uint64_t n = static_cast<std::uint64_t>(s.u_hat.grid->N);
    write_raw(out, &n, 8, path);
    write_raw(out, &s.u_hat.grid->R, 8, path);
    write_raw(out, &s.alpha, 8, path);
    write_raw(out, &s.t, 8, path);
    std::vector<double> re, im;
    for (const RadialField* f : {&s.u_hat, &s.N_hat}) {
        split_parts(*f, re, im);
        write_raw(out, re.data(), 8 * re.size(), path);
        write_raw(out, im.data(), 8 * im.size(), path);
    }
}

SimState load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint: " + path);
    char magic[4];
    read_raw(in, magic, 4, path);
    if (std::memcmp(magic, kMagic, 4) != 0) throw IoError("bad magic in checkpoint: " + path);
    std::uint32_t version = 0, endian = 0;
    read_raw(in, &version, 4, path);
    if (version != kVersion)
        throw IoError("checkpoint version mismatch in " + path + ": got " +
                      std::to_string(version) + ", expected " + std::to_string(kVersion));
    read_raw(in, &endian, 4, path);
    if (endian != kEndianTag) throw IoError("checkpoint endianness mismatch: " + path);
    std::uint64_t n = 0;
    double R = 0.0;
    read_raw(in, &n, 8, path);
    read_raw(in, &R, 8, path);
    if (n < 8 || n > (1u << 22) || !(R > 0))
        throw IoError("checkpoint header out of range: " + path);

    SimState s;
    read_raw(in, &s.alpha, 8, path);
    read_raw(in, &s.t, 8, path);
    const GridPtr grid = make_grid(R, static_cast<int>(n));
    s.u_hat = make_field(grid, Space::frequency);
    s.N_hat = make_field(grid, Space::frequency);
    std::vector<double> re(n), im(n);
    for (RadialField* f : {&s.u_hat, &s.N_hat}) {
        read_raw(in, re.data(), 8 * re.size(), path);
        read_raw(in, im.data(), 8 * im.size(), path);
        for (size_t i = 0; i < n; ++i) f->values[i] = cplx{re[i], im[i]};
    }
    char extra;
    if (in.read(&extra, 1)) throw IoError("trailing bytes in checkpoint: " + path);
    return s;
}

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void export_timeseries(const TimeSeries& series, ExportFormat format, const std::string& path) {
    if (series.diag.empty()) throw IoError("export_timeseries: empty series");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open export path: " + path);
    if (format == ExportFormat::csv) {
        out << "t,mass,energy,tail_mass\n";
        for (const DiagRow& r : series.diag)
            out << fmt17(r.t) << ',' << fmt17(r.mass) << ',' << fmt17(r.energy) << ','
                << fmt17(r.tail_mass) << '\n';
    } else {
        for (const DiagRow& r : series.diag)
            out << "{\"t\":" << fmt17(r.t) << ",\"mass\":" << fmt17(r.mass)
                << ",\"energy\":" << fmt17(r.energy) << ",\"tail_mass\":" << fmt17(r.tail_mass)
                << "}\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<DiagRow> import_diagnostics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open csv: " + path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "t,mass,energy,tail_mass")
        throw IoError("unexpected csv header in " + path);
    std::vector<DiagRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        DiagRow r;
        std::istringstream ss(line);
        std::string cell;
        double* slots[4] = {&r.t, &r.mass, &r.energy, &r.tail_mass};
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(ss, cell, ','))
                throw IoError(path + ": short row at line " + std::to_string(lineno));
            *slots[i] = parse_double(trim(cell), lineno, "csv cell");
        }
        rows.push_back(r);
    }
    return rows;
}

std::string usage_text() {
    return "usage: zakradial SUBCOMMAND [--config PATH] [--out DIR] [--seed INT]"
           " [--resume CHECKPOINT]\n"
           "subcommands:\n"
           "  simulate         run the split-step solver, export diagnostics + checkpoint\n"
           "  scatter-check    Cauchy-tail, X-norm, and boundary-decay report\n"
           "  verify-estimates sampled inequality reports\n"
           "  resonance-map    resonance-quotient scan tables\n"
           "  lp-analyze       dyadic shell decomposition of a state\n";
}

namespace {

std::filesystem::path out_file(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return std::filesystem::path(cfg.out_dir) / name;
}

StepperConfig stepper_of(const RunConfig& cfg) {
    StepperConfig sc;
    sc.dt = cfg.dt;
    sc.T = cfg.T;
    sc.sample_every = cfg.sample_every;
    return sc;
}

TimeSeries run_sim(const RunConfig& cfg, const std::string& resume_path) {
    const StepperConfig sc = stepper_of(cfg);
    if (resume_path.empty()) {
        const GridPtr grid = make_grid(cfg.R, cfg.N);
        const InitialData d = initial_data_family(cfg.family, grid, cfg.eps0, cfg.shell_k);
        return simulate(d, cfg.alpha, sc);
    }
    // continuation from a checkpoint: same stepping loop, shifted time origin
    SimState s = load_checkpoint(resume_path);
    TimeSeries ts;
    auto record = [&ts](const SimState& st) {
        ts.states.push_back(st);
        ts.diag.push_back({st.t, mass(st), energy(st), tail_mass_fraction(st)});
    };
    record(s);
    const long nsteps = std::lround(sc.T / sc.dt);
    for (long i = 1; i <= nsteps; ++i) {
        try {
            s = strang_step(s, sc.dt);
        } catch (const std::runtime_error&) {
            ts.diverged = true;
            break;
        }
        if (i % sc.sample_every == 0 || i == nsteps) record(s);
    }
    return ts;
}

int cmd_simulate(const RunConfig& cfg, const std::string& resume_path) {
    const TimeSeries ts = run_sim(cfg, resume_path);
    export_timeseries(ts, ExportFormat::csv, out_file(cfg, "timeseries.csv").string());
    export_timeseries(ts, ExportFormat::jsonl, out_file(cfg, "timeseries.jsonl").string());
    save_checkpoint(ts.states.back(), out_file(cfg, "final.zkrd").string());
    if (ts.diverged) {
        std::cerr << "simulate: run diverged at t = " << ts.states.back().t << "\n";
        return 1;
    }
    return 0;
}

int cmd_scatter_check(const RunConfig& cfg, const std::string& resume_path) {
    const TimeSeries ts = run_sim(cfg, resume_path);
    if (ts.diverged) {
        std::cerr << "scatter-check: run diverged\n";
        return 1;
    }
    const double t0 = ts.states.front().t;
    const double T = ts.states.back().t;
    const double half = t0 + 0.5 * (T - t0);
    std::ofstream out(out_file(cfg, "scatter_report.txt"));
    out.precision(17);
    for (Component comp : {Component::u, Component::N}) {
        const CauchyTable table = cauchy_tail(ts, comp, half, T);
        const double w = 0.25 * (T - half);
        const double first = cauchy_window_max(table, half, half + w);
        const double last = cauchy_window_max(table, T - w, T);
        out << (comp == Component::u ? "u" : "N") << "_cauchy_first_quarter = " << first
            << "\n"
            << (comp == Component::u ? "u" : "N") << "_cauchy_last_quarter = " << last << "\n";
    }
    out << "x_norm = " << x_norm(ts, cfg.eps, t0, T) << "\n";
    const auto [b0u, b0n] = boundary_term_norms(ts.states.front());
    const auto [b1u, b1n] = boundary_term_norms(ts.states.back());
    out << "boundary_omega_initial = " << b0u << "\nboundary_omega_final = " << b1u
        << "\nboundary_omega_tilde_initial = " << b0n
        << "\nboundary_omega_tilde_final = " << b1n << "\n";
    return out ? 0 : 1;
}

int cmd_verify_estimates(const RunConfig& cfg) {
    VerifierConfig vc = default_verifier_config(cfg.seed, cfg.count);
    vc.alpha = cfg.alpha;
    vc.eps = cfg.eps;
    vc.fields.k_lo = cfg.k_lo;
    vc.fields.k_hi = cfg.k_hi;
    const std::vector<EstimateReport> reports = verify_all(vc);
    std::ofstream out(out_file(cfg, "estimates.csv"));
    out << "lemma_id,max_ratio,median_ratio,max_ratio_fine,refinement_factor,skipped,pass\n";
    bool all_pass = true;
    for (const EstimateReport& r : reports) {
        out << r.lemma_id << ',' << fmt17(r.max_ratio) << ',' << fmt17(r.median_ratio) << ','
            << fmt17(r.max_ratio_fine) << ',' << fmt17(r.refinement_factor) << ',' << r.skipped
            << ',' << (r.pass ? "1" : "0") << '\n';
        all_pass = all_pass && r.pass;
    }
    return out && all_pass ? 0 : 1;
}

int cmd_resonance_map(const RunConfig& cfg) {
    const GridPtr grid = make_grid(cfg.R, cfg.N);
    std::ofstream out(out_file(cfg, "resonance.csv"));
    out << "kind,alpha,c_min,c_max,count\n";
    for (double a : {0.5 * cfg.alpha, cfg.alpha, 2.0 * cfg.alpha}) {
        const ResonanceScan s = scan_resonance(*grid, a);
        const ResonanceScan st = scan_resonance_tilde(*grid, a);
        out << "schrodinger," << fmt17(a) << ',' << fmt17(s.c_min) << ',' << fmt17(s.c_max)
            << ',' << s.count << '\n';
        out << "wave," << fmt17(a) << ',' << fmt17(st.c_min) << ',' << fmt17(st.c_max) << ','
            << st.count << '\n';
    }
    return out ? 0 : 1;
}

int cmd_lp_analyze(const RunConfig& cfg, const std::string& resume_path) {
    RadialField u_hat = [&] {
        if (!resume_path.empty()) return load_checkpoint(resume_path).u_hat;
        const GridPtr grid = make_grid(cfg.R, cfg.N);
        const InitialData d = initial_data_family(cfg.family, grid, cfg.eps0, cfg.shell_k);
        return forward_transform(d.u0);
    }();
    const DyadicRange dr = dyadic_range(*u_hat.grid);
    std::ofstream out(out_file(cfg, "lp_analysis.csv"));
    out << "shell,l2,h1\n";
    RadialField recon = project(u_hat, dr.k_min - 1, ProjectMode::at_most);
    for (int k = dr.k_min; k <= dr.k_max; ++k) {
        const RadialField piece = project(u_hat, k, ProjectMode::single);
        out << k << ',' << fmt17(besov_norm(piece, {0.0, 2.0})) << ','
            << fmt17(sobolev_norm(piece, 1.0, 2.0)) << '\n';
        recon += piece;
    }
    const double residual = sample_l2_diff(recon, u_hat);
    out << "completeness_residual," << fmt17(residual) << ",0\n";
    return out ? 0 : 1;
}

}  // namespace

int dispatch(const std::string& subcommand, const RunConfig& cfg,
             const std::string& resume_path) {
    try {
        if (subcommand == "simulate") return cmd_simulate(cfg, resume_path);
        if (subcommand == "scatter-check") return cmd_scatter_check(cfg, resume_path);
        if (subcommand == "verify-estimates") return cmd_verify_estimates(cfg);
        if (subcommand == "resonance-map") return cmd_resonance_map(cfg);
        if (subcommand == "lp-analyze") return cmd_lp_analyze(cfg, resume_path);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 1;
    }
    std::cerr << usage_text();
    return 2;
}

}  // namespace zak
