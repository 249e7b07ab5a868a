#include "eigensteps/eigensteps.hpp"
#include "eigensteps/errors.hpp"
#include "eigensteps/framebuild.hpp"
#include "eigensteps/io.hpp"
#include "eigensteps/majorization.hpp"
#include "eigensteps/schurhorn.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace eigensteps;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string spectrum_path;
    std::string lengths_path;
    std::string out_path;
    std::string format = "json";
    std::string mode = "topkill";
    std::string t_path;
    std::uint64_t seed = 0;
    int count = 1;
    int dim = 0;
    double alpha = 0.0;
    bool alpha_set = false;
    double tol_eq = 0.0;
    bool tol_eq_set = false;
    double tol_feas = 0.0;
    bool tol_feas_set = false;
};

Tolerances resolve_tolerances(const CommonOpts& opts) {
    Tolerances tol;
    if (const char* env = std::getenv("EIGENSTEPS_TOL")) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(env, &pos);
            if (pos != std::string(env).size())
                throw std::invalid_argument("trailing characters");
            tol.feas_tol = v;
        } catch (const std::exception&) {
            throw UsageError("EIGENSTEPS_TOL must be a number");
        }
    }
    if (opts.tol_eq_set) tol.eq_tol = opts.tol_eq;
    if (opts.tol_feas_set) tol.feas_tol = opts.tol_feas;
    tol.validate();
    return tol;
}

std::vector<double> load_sequence(const std::string& path) {
    return parse_sequence(read_file(path));
}

// Zero-pads the shorter of the two sequences so both have length N.
void equalize(std::vector<double>& lam, std::vector<double>& mu) {
    if (lam.size() < mu.size()) lam.resize(mu.size(), 0.0);
    if (mu.size() < lam.size()) mu.resize(lam.size(), 0.0);
}

std::string indexed_path(const std::string& path, int index, int count) {
    if (count <= 1) return path;
    const std::size_t dot = path.find_last_of('.');
    const std::size_t slash = path.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    if (!has_ext) return path + "." + std::to_string(index);
    return path.substr(0, dot) + "." + std::to_string(index) + path.substr(dot);
}

std::uint64_t task_seed(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::uint64_t out[2] = {0, 0};
    std::uint32_t words[4];
    seq.generate(words, words + 4);
    out[0] = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
    out[1] = (static_cast<std::uint64_t>(words[2]) << 32) | words[3];
    return out[0] ^ out[1];
}

std::vector<double> random_t(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> t(n * (n - 1) / 2);
    for (double& x : t) x = unif(rng);
    return t;
}

InnerEigenstepTable make_table(const Spectrum& lam, const LengthSequence& mu,
                               const std::string& mode, const std::string& t_path,
                               std::uint64_t seed, const Tolerances& tol) {
    if (mode == "topkill") return topkill_table(lam, mu, tol);
    if (mode == "midpoint") {
        auto chooser = [](const IntervalBounds& b, int, int) {
            return (b.lower + b.upper) / 2.0;
        };
        return build_inner(lam, mu, chooser, tol);
    }
    if (mode == "random") {
        const std::vector<double> t = random_t(mu.size(), seed);
        return parametrize_inner(lam, mu, t, tol);
    }
    if (mode == "t-vector") {
        if (t_path.empty())
            throw UsageError("--mode t-vector requires --t");
        return parametrize_inner(lam, mu, load_sequence(t_path), tol);
    }
    throw UsageError("unknown mode: " + mode);
}

int cmd_check(const CommonOpts& opts) {
    const Tolerances tol = resolve_tolerances(opts);
    std::vector<double> lam_raw = load_sequence(opts.spectrum_path);
    std::vector<double> mu_raw = load_sequence(opts.lengths_path);
    equalize(lam_raw, mu_raw);
    const Spectrum lam(std::move(lam_raw), tol);
    const LengthSequence mu(std::move(mu_raw), tol);
    const MajorizationReport rep = majorizes(lam, mu, tol);
    std::cout << to_json(rep) << "\n";
    return rep.holds ? kExitOk : kExitInfeasible;
}

int cmd_eigensteps(const CommonOpts& opts) {
    const Tolerances tol = resolve_tolerances(opts);
    std::vector<double> lam_raw = load_sequence(opts.spectrum_path);
    std::vector<double> mu_raw = load_sequence(opts.lengths_path);
    equalize(lam_raw, mu_raw);
    const Spectrum lam(std::move(lam_raw), tol);
    const LengthSequence mu(std::move(mu_raw), tol);

    for (int i = 0; i < opts.count; ++i) {
        const std::uint64_t seed = opts.count > 1 ? task_seed(opts.seed, i) : opts.seed;
        const InnerEigenstepTable table = make_table(lam, mu, opts.mode, opts.t_path, seed, tol);
        const std::string body = to_json(table) + "\n";
        if (opts.out_path.empty())
            std::cout << body;
        else
            write_file(indexed_path(opts.out_path, i, opts.count), body);
    }
    return kExitOk;
}

// Truncates or zero-pads a raw spectrum to dimension m. Truncated entries
// must vanish within feas_tol.
std::vector<double> fit_spectrum(std::vector<double> lam, int m, const Tolerances& tol) {
    if (static_cast<int>(lam.size()) > m) {
        for (std::size_t i = static_cast<std::size_t>(m); i < lam.size(); ++i)
            if (std::abs(lam[i]) > tol.feas_tol)
                throw UsageError("spectrum has nonzero entries beyond the frame dimension");
        lam.resize(static_cast<std::size_t>(m));
    } else {
        lam.resize(static_cast<std::size_t>(m), 0.0);
    }
    return lam;
}

int cmd_frame(const CommonOpts& opts, const std::string& table_path) {
    const Tolerances tol = resolve_tolerances(opts);
    std::vector<double> lam_file = load_sequence(opts.spectrum_path);
    std::vector<double> mu_raw = load_sequence(opts.lengths_path);
    const int dim = opts.dim > 0 ? opts.dim : static_cast<int>(lam_file.size());

    std::vector<double> lam_raw = lam_file;
    equalize(lam_raw, mu_raw);
    const Spectrum lam(std::move(lam_raw), tol);
    const LengthSequence mu(std::move(mu_raw), tol);

    if (opts.out_path.empty())
        throw UsageError("frame: --out is required");

    std::optional<InnerEigenstepTable> supplied;
    if (!table_path.empty()) {
        supplied = parse_inner_table(read_file(table_path), tol);
        double mismatch = 0.0;
        if (supplied->size() != static_cast<int>(mu.size()))
            throw UsageError("frame: eigensteps table size does not match the inputs");
        for (std::size_t i = 0; i < mu.size(); ++i) {
            mismatch = std::max(mismatch, std::abs(supplied->lam()[i] - lam[i]));
            mismatch = std::max(mismatch, std::abs(supplied->mu()[i] - mu[i]));
        }
        if (mismatch > tol.feas_tol)
            throw UsageError("frame: eigensteps table disagrees with --spectrum/--lengths");
        const VerificationReport table_report = validate_inner(*supplied, tol);
        if (!table_report.holds()) {
            std::cout << to_json(table_report) << "\n";
            return kExitInfeasible;
        }
    }

    for (int i = 0; i < opts.count; ++i) {
        const std::uint64_t seed = opts.count > 1 ? task_seed(opts.seed, i) : opts.seed;
        const InnerEigenstepTable inner =
            supplied ? *supplied : make_table(lam, mu, opts.mode, opts.t_path, seed, tol);
        const OuterEigenstepTable outer = inner_to_outer(inner, dim, tol);
        const FrameMatrix frame = build_frame(outer, ProbePolicy::canonical(), tol);
        const VerificationReport rep = verify_frame(frame, outer.lam(), outer.mu(), &outer, tol);
        std::cout << to_json(rep) << "\n";
        const std::string body =
            opts.format == "csv" ? matrix_to_csv(frame.entries) : matrix_to_json(frame.entries);
        write_file(indexed_path(opts.out_path, i, opts.count), body);
        if (!rep.holds()) return kExitInfeasible;
    }
    return kExitOk;
}

int cmd_schur_horn(const CommonOpts& opts, const std::string& diagonal_path) {
    const Tolerances tol = resolve_tolerances(opts);
    const std::vector<double> lam_hat = load_sequence(opts.spectrum_path);
    const std::vector<double> mu_hat = load_sequence(diagonal_path);
    if (opts.out_path.empty())
        throw UsageError("schur-horn: --out is required");

    std::vector<double> t;
    if (!opts.t_path.empty()) t = load_sequence(opts.t_path);
    const std::optional<double> alpha =
        opts.alpha_set ? std::optional<double>(opts.alpha) : std::nullopt;

    const SelfAdjointMatrix matrix = build_schur_horn(lam_hat, mu_hat, alpha, t, tol);
    const VerificationReport rep = verify_schur_horn(matrix, lam_hat, mu_hat, tol);
    std::cout << to_json(rep) << "\n";
    const std::string body =
        opts.format == "csv" ? matrix_to_csv(matrix.entries) : matrix_to_json(matrix.entries);
    write_file(opts.out_path, body);
    return rep.holds() ? kExitOk : kExitInfeasible;
}

int cmd_verify(const CommonOpts& opts, const std::string& kind, const std::string& matrix_path,
               const std::string& diagonal_path, const std::string& table_path) {
    const Tolerances tol = resolve_tolerances(opts);
    const Eigen::MatrixXd matrix = parse_matrix(read_file(matrix_path));

    if (kind == "frame") {
        if (opts.lengths_path.empty())
            throw UsageError("verify --kind frame requires --lengths");
        const FrameMatrix frame{matrix};
        const std::vector<double> lam_raw =
            fit_spectrum(load_sequence(opts.spectrum_path), frame.dim(), tol);
        const Spectrum lam(lam_raw, tol);
        const LengthSequence mu(load_sequence(opts.lengths_path), tol);
        std::optional<OuterEigenstepTable> outer;
        if (!table_path.empty())
            outer = inner_to_outer(parse_inner_table(read_file(table_path), tol), frame.dim(), tol);
        const VerificationReport rep =
            verify_frame(frame, lam, mu, outer ? &*outer : nullptr, tol);
        std::cout << to_json(rep) << "\n";
        return rep.holds() ? kExitOk : kExitInfeasible;
    }
    if (kind == "schur-horn") {
        if (diagonal_path.empty())
            throw UsageError("verify --kind schur-horn requires --diagonal");
        const SelfAdjointMatrix sym(matrix, tol);
        const std::vector<double> lam_hat = load_sequence(opts.spectrum_path);
        const std::vector<double> mu_hat = load_sequence(diagonal_path);
        const VerificationReport rep = verify_schur_horn(sym, lam_hat, mu_hat, tol);
        std::cout << to_json(rep) << "\n";
        return rep.holds() ? kExitOk : kExitInfeasible;
    }
    throw UsageError("verify: --kind must be frame or schur-horn");
}

void add_tolerance_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--tol-eq", opts.tol_eq, "eigenvalue grouping tolerance")
        ->each([&opts](const std::string&) { opts.tol_eq_set = true; });
    cmd->add_option("--tol-feas", opts.tol_feas, "feasibility tolerance")
        ->each([&opts](const std::string&) { opts.tol_feas_set = true; });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenstep tables, frames with prescribed spectra and norms, and symmetric "
                 "matrices with prescribed spectrum and diagonal"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string table_path;
    std::string diagonal_path;
    std::string matrix_path;
    std::string kind;

    CLI::App* check = app.add_subcommand("check", "test whether the spectrum majorizes the lengths");
    check->add_option("--spectrum", opts.spectrum_path, "spectrum file")->required();
    check->add_option("--lengths", opts.lengths_path, "squared norms file")->required();
    add_tolerance_flags(check, opts);

    CLI::App* steps = app.add_subcommand("eigensteps", "construct an eigenstep table");
    steps->add_option("--spectrum", opts.spectrum_path, "spectrum file")->required();
    steps->add_option("--lengths", opts.lengths_path, "squared norms file")->required();
    steps->add_option("--mode", opts.mode, "table chooser")
        ->check(CLI::IsMember({"topkill", "midpoint", "random", "t-vector"}));
    steps->add_option("--seed", opts.seed, "RNG seed for --mode random");
    steps->add_option("--t", opts.t_path, "t-vector file for --mode t-vector");
    steps->add_option("--out", opts.out_path, "output file (stdout when omitted)");
    steps->add_option("--count", opts.count, "number of tables to emit")
        ->check(CLI::PositiveNumber);
    add_tolerance_flags(steps, opts);

    CLI::App* frame = app.add_subcommand("frame", "synthesize a frame with prescribed spectrum "
                                                  "and squared norms");
    frame->add_option("--spectrum", opts.spectrum_path, "spectrum file")->required();
    frame->add_option("--lengths", opts.lengths_path, "squared norms file")->required();
    frame->add_option("--dim", opts.dim, "ambient dimension M (default: spectrum length)")
        ->check(CLI::PositiveNumber);
    frame->add_option("--eigensteps", table_path, "eigenstep table file to realize");
    frame->add_option("--mode", opts.mode, "table chooser when no table is supplied")
        ->check(CLI::IsMember({"topkill", "midpoint", "random", "t-vector"}));
    frame->add_option("--seed", opts.seed, "RNG seed for --mode random");
    frame->add_option("--t", opts.t_path, "t-vector file for --mode t-vector");
    frame->add_option("--out", opts.out_path, "matrix output file")->required();
    frame->add_option("--format", opts.format, "matrix output format")
        ->check(CLI::IsMember({"json", "csv"}));
    frame->add_option("--count", opts.count, "number of frames to emit")
        ->check(CLI::PositiveNumber);
    add_tolerance_flags(frame, opts);

    CLI::App* schur = app.add_subcommand("schur-horn", "assemble a symmetric matrix with "
                                                       "prescribed spectrum and diagonal");
    schur->add_option("--spectrum", opts.spectrum_path, "spectrum file")->required();
    schur->add_option("--diagonal", diagonal_path, "diagonal file")->required();
    schur->add_option("--alpha", opts.alpha, "spectral shift (default: smallest spectrum entry)")
        ->each([&opts](const std::string&) { opts.alpha_set = true; });
    schur->add_option("--t", opts.t_path, "t-vector file selecting the eigenstep table");
    schur->add_option("--out", opts.out_path, "matrix output file")->required();
    schur->add_option("--format", opts.format, "matrix output format")
        ->check(CLI::IsMember({"json", "csv"}));
    add_tolerance_flags(schur, opts);

    CLI::App* verify = app.add_subcommand("verify", "verify a matrix against prescribed data");
    verify->add_option("--kind", kind, "frame or schur-horn")->required();
    verify->add_option("--matrix", matrix_path, "matrix file (JSON or CSV)")->required();
    verify->add_option("--spectrum", opts.spectrum_path, "spectrum file")->required();
    verify->add_option("--lengths", opts.lengths_path, "squared norms file (frame)");
    verify->add_option("--diagonal", diagonal_path, "diagonal file (schur-horn)");
    verify->add_option("--eigensteps", table_path, "eigenstep table file (frame)");
    add_tolerance_flags(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(opts);
        if (steps->parsed()) return cmd_eigensteps(opts);
        if (frame->parsed()) return cmd_frame(opts, table_path);
        if (schur->parsed()) return cmd_schur_horn(opts, diagonal_path);
        if (verify->parsed()) return cmd_verify(opts, kind, matrix_path, diagonal_path, table_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ContractViolation& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
