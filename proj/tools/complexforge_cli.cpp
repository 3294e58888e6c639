// Batch front end: identity suites, potentials, decompositions, grid
// topology reports, and discrete Helmholtz splits, all emitting JSON on
// stdout. Diagnostics go to stderr. Exit codes: 0 ok, 1 I/O or parse
// error, 2 failed check, 3 violated operator precondition.

#include "complexforge/elasticity.hpp"
#include "complexforge/field_json.hpp"
#include "complexforge/grid.hpp"
#include "complexforge/random_fields.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace cf = complexforge;
using cf::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitPrecondition = 3;

struct Options {
    std::uint64_t seed = 0;
    int degree = 4;
    int trials = 100;
    double tol = 1e-10;
    std::string in_path;
    std::string out_path;
    std::string bc = "natural";
    bool no_timestamp = false;
};

int thread_budget() {
    if (const char* env = std::getenv("COMPLEXFORGE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void stamp(Json& report, const Options& opt) {
    if (opt.no_timestamp) return;
    const auto now = std::chrono::system_clock::now();
    report["timestamp_unix_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cf::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cf::ParseError("cannot open output file: " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// verify identities
// ---------------------------------------------------------------------------

/// One deterministic trial of one check; result independent of scheduling.
bool run_identity_trial(const std::string& id, std::uint64_t seed, int degree) {
    // per-trial seed mixed so every (check, trial) pair is independent
    cf::FieldSampler sampler(seed, degree);
    if (id == "cutting-div") {
        const auto phi = sampler.scalar();
        const auto n = sampler.tensor();
        return cf::cutting_div(phi, n).is_zero();
    }
    if (id == "cutting-rotrot") {
        const auto phi = sampler.scalar();
        const auto m = sampler.symmetric_tensor();
        return cf::cutting_rotrot_residual(phi, m).is_zero();
    }
    cf::FieldValue input;
    if (id == "i") {
        input = sampler.scalar();
    } else if (id == "iii" || id == "iv") {
        input = sampler.vector();
    } else if (id == "ii'" || id == "vi'") {
        input = sampler.symmetric_tensor();
    } else {
        input = sampler.tensor();
    }
    return cf::field_is_zero(cf::verify_appendix_identity(id, input));
}

int cmd_verify_identities(const Options& opt) {
    std::vector<std::string> checks(cf::appendix_identity_ids().begin(),
                                    cf::appendix_identity_ids().end());
    checks.emplace_back("cutting-div");
    checks.emplace_back("cutting-rotrot");

    const int workers = thread_budget();
    Json report;
    report["command"] = "verify identities";
    report["config"] = {{"seed", opt.seed}, {"degree", opt.degree}, {"trials", opt.trials}};
    stamp(report, opt);

    bool all_pass = true;
    Json check_list = Json::array();
    for (std::size_t c = 0; c < checks.size(); ++c) {
        std::vector<char> ok(static_cast<std::size_t>(opt.trials), 0);
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int t = next.fetch_add(1); t < opt.trials; t = next.fetch_add(1)) {
                const std::uint64_t trial_seed =
                    opt.seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(t) + 1) +
                    1315423911ull * (c + 1);
                ok[static_cast<std::size_t>(t)] =
                    run_identity_trial(checks[c], trial_seed, opt.degree) ? 1 : 0;
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        int failures = 0;
        for (char b : ok)
            if (!b) ++failures;
        all_pass = all_pass && failures == 0;
        check_list.push_back({{"id", checks[c]},
                              {"trials", opt.trials},
                              {"failures", failures},
                              {"exact_zero", failures == 0}});
        std::cerr << "check " << checks[c] << ": " << (opt.trials - failures) << "/" << opt.trials
                  << " exact\n";
    }
    report["checks"] = std::move(check_list);
    report["status"] = all_pass ? "pass" : "fail";
    emit(report);
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// potential / decompose
// ---------------------------------------------------------------------------

cf::FieldValue load_field(const Options& opt) {
    if (opt.in_path.empty()) throw cf::ParseError("--in is required");
    return cf::field_from_json_text(read_file(opt.in_path));
}

const cf::PolyTensorField& expect_tensor(const cf::FieldValue& f) {
    if (const auto* t = std::get_if<cf::PolyTensorField>(&f)) return *t;
    throw cf::ArityMismatch("input field must be a tensor field");
}

const cf::PolyVectorField& expect_vector(const cf::FieldValue& f) {
    if (const auto* v = std::get_if<cf::PolyVectorField>(&f)) return *v;
    throw cf::ArityMismatch("input field must be a vector field");
}

int cmd_potential(const Options& opt, const std::string& op) {
    Json report;
    report["command"] = "potential " + op;
    report["config"] = {{"op", op}, {"in", opt.in_path}};
    stamp(report, opt);

    const cf::FieldValue input = load_field(opt);
    cf::FieldValue output;
    cf::PolyTensorField residual_t;
    cf::PolyVectorField residual_v;
    bool vector_residual = false;

    try {
        if (op == "symgrad") {
            const auto& m = expect_tensor(input);
            const auto v = cf::potential_sym_grad(m);
            residual_t = cf::sym_grad(v) - m;
            output = v;
        } else if (op == "rotrot") {
            const auto& n = expect_tensor(input);
            const auto p = cf::potential_rot_rot_t(n);
            residual_t = cf::rot_rot_t(p) - n;
            output = p;
        } else { // div
            const auto& v = expect_vector(input);
            const auto n = cf::potential_div_sym(v);
            residual_v = cf::tensor_div(n) - v;
            vector_residual = true;
            output = n;
        }
    } catch (const cf::SymmetryRequired& e) {
        report["status"] = "precondition_violated";
        report["error"] = e.what();
        emit(report);
        return kExitPrecondition;
    } catch (const cf::NotInKernel& e) {
        report["status"] = "precondition_violated";
        report["error"] = e.what();
        report["compatibility_residual"] = cf::field_to_json(cf::rot_rot_t(expect_tensor(input)));
        emit(report);
        return kExitPrecondition;
    } catch (const cf::NotSolenoidal& e) {
        report["status"] = "precondition_violated";
        report["error"] = e.what();
        report["compatibility_residual"] = cf::field_to_json(cf::tensor_div(expect_tensor(input)));
        emit(report);
        return kExitPrecondition;
    }

    const bool exact = vector_residual ? residual_v.is_zero() : residual_t.is_zero();
    report["round_trip_exact_zero"] = exact;
    const Json out_json = cf::field_to_json(output);
    if (!opt.out_path.empty()) {
        write_file(opt.out_path, out_json.dump(2) + "\n");
        report["out"] = opt.out_path;
    } else {
        report["potential"] = out_json;
    }
    report["status"] = exact ? "pass" : "fail";
    emit(report);
    return exact ? kExitOk : kExitCheckFailed;
}

int cmd_decompose(const Options& opt, const std::string& op) {
    Json report;
    report["command"] = "decompose " + op;
    report["config"] = {{"op", op}, {"in", opt.in_path}};
    stamp(report, opt);

    const cf::FieldValue input = load_field(opt);
    cf::ElasticityDecomposition dec;
    try {
        const auto& m = expect_tensor(input);
        dec = (op == "rotrot") ? cf::decompose_rotrot_domain(m) : cf::decompose_div_domain(m);
    } catch (const cf::SymmetryRequired& e) {
        report["status"] = "precondition_violated";
        report["error"] = e.what();
        emit(report);
        return kExitPrecondition;
    }

    report["residual_exact_zero"] = dec.residual_zero();
    report["smooth_symmetric"] = dec.smooth.is_symmetric();
    Json parts;
    parts["smooth"] = cf::field_to_json(dec.smooth);
    parts["potential"] = cf::field_to_json(dec.potential);
    if (!opt.out_path.empty()) {
        write_file(opt.out_path, parts.dump(2) + "\n");
        report["out"] = opt.out_path;
    } else {
        report["parts"] = std::move(parts);
    }
    const bool pass = dec.residual_zero() && dec.smooth.is_symmetric();
    report["status"] = pass ? "pass" : "fail";
    emit(report);
    return pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// grid / helmholtz
// ---------------------------------------------------------------------------

cf::grid::VoxelDomain load_domain(const Options& opt) {
    if (opt.in_path.empty()) throw cf::ParseError("--in is required");
    std::ifstream in(opt.in_path);
    if (!in) throw cf::ParseError("cannot open input file: " + opt.in_path);
    return cf::grid::parse_voxel_domain(in);
}

cf::grid::BcMode parse_bc(const std::string& bc) {
    if (bc == "natural") return cf::grid::BcMode::natural;
    if (bc == "dirichlet") return cf::grid::BcMode::full_dirichlet;
    throw cf::ParseError("--bc must be natural or dirichlet");
}

int cmd_grid(const Options& opt) {
    Json report;
    report["command"] = "grid";
    report["config"] = {{"in", opt.in_path}, {"bc", opt.bc}};
    stamp(report, opt);

    const auto domain = load_domain(opt);
    const auto bc = parse_bc(opt.bc);
    const auto cx = cf::grid::build_cubical_complex(domain, bc);

    report["cells"] = {cx.count(0), cx.count(1), cx.count(2), cx.count(3)};
    const auto betti = cf::grid::betti_numbers(cx);
    report["betti"] = {betti[0], betti[1], betti[2], betti[3]};
    report["euler_characteristic"] = cx.euler_characteristic();
    const long chi_betti = static_cast<long>(betti[0]) - static_cast<long>(betti[1]) +
                           static_cast<long>(betti[2]) - static_cast<long>(betti[3]);
    report["euler_from_betti"] = chi_betti;
    report["euler_consistent"] = chi_betti == cx.euler_characteristic();

    const auto rep = cf::grid::elasticity_dims(domain);
    report["neumann_dim"] = rep.neumann_dim;
    report["dirichlet_dim"] = rep.dirichlet_dim;
    report["elasticity_neumann_dim"] = rep.elasticity_neumann_dim;
    report["elasticity_dirichlet_dim"] = rep.elasticity_dirichlet_dim;
    report["topologically_trivial"] = rep.topologically_trivial;

    Json constants = Json::array();
    for (int k = 0; k < 3; ++k) {
        try {
            constants.push_back(cf::grid::poincare_constant_grid(domain, k, bc));
        } catch (const cf::Error& e) {
            std::cerr << "poincare constant, level " << k << ": " << e.what() << "\n";
            constants.push_back(nullptr);
        }
    }
    report["poincare_constants"] = std::move(constants);
    report["status"] = report["euler_consistent"].get<bool>() ? "pass" : "fail";
    emit(report);
    return report["status"] == "pass" ? kExitOk : kExitCheckFailed;
}

int cmd_helmholtz(const Options& opt, int level) {
    Json report;
    report["command"] = "helmholtz";
    report["config"] = {{"in", opt.in_path}, {"bc", opt.bc},     {"level", level},
                        {"seed", opt.seed},  {"trials", opt.trials}, {"tol", opt.tol}};
    stamp(report, opt);

    const auto domain = load_domain(opt);
    const auto cx = cf::grid::build_cubical_complex(domain, parse_bc(opt.bc));
    const auto pair = cf::grid::level_pair(cx, level);
    report["harmonic_dim"] = cf::fa::harmonic_basis(pair).size();

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    double max_residual = 0.0, max_orth = 0.0;
    for (int t = 0; t < opt.trials; ++t) {
        Eigen::VectorXd x(pair.a0.matrix.rows());
        for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = gauss(rng);
        const auto split = cf::fa::helmholtz_split(pair, x);
        const double scale = x.squaredNorm() + 1e-300;
        max_residual = std::max(max_residual, split.residual_norm / (x.norm() + 1e-300));
        max_orth = std::max({max_orth, std::abs(split.range_a0.dot(split.harmonic)) / scale,
                             std::abs(split.range_a0.dot(split.range_a1_adjoint)) / scale,
                             std::abs(split.harmonic.dot(split.range_a1_adjoint)) / scale});
    }
    report["max_relative_residual"] = max_residual;
    report["max_orthogonality_error"] = max_orth;
    const bool pass = max_residual <= opt.tol && max_orth <= opt.tol;
    report["status"] = pass ? "pass" : "fail";
    emit(report);
    return pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for discrete elasticity and de Rham complexes"};
    app.require_subcommand(1);

    Options opt;
    std::string suite = "identities";
    std::string pot_op = "rotrot";
    std::string dec_op = "rotrot";
    int level = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "rng seed");
        sub->add_option("--degree", opt.degree, "max polynomial degree")->check(CLI::Range(0, 8));
        sub->add_option("--trials", opt.trials, "trial count")->check(CLI::PositiveNumber);
        sub->add_option("--tol", opt.tol, "numeric tolerance");
        sub->add_option("--in", opt.in_path, "input file");
        sub->add_option("--out", opt.out_path, "output file");
        sub->add_option("--bc", opt.bc, "boundary condition: natural|dirichlet");
        sub->add_flag("--no-timestamp", opt.no_timestamp, "omit timestamp from the report");
    };

    auto* verify = app.add_subcommand("verify", "run an exact identity suite");
    verify->add_option("suite", suite, "suite name (identities)");
    add_common(verify);

    auto* potential = app.add_subcommand("potential", "compute a potential from a field file");
    potential->add_option("--op", pot_op, "symgrad|rotrot|div")
        ->check(CLI::IsMember({"symgrad", "rotrot", "div"}));
    add_common(potential);

    auto* decompose = app.add_subcommand("decompose", "regular decomposition of a tensor field");
    decompose->add_option("--op", dec_op, "rotrot|div")->check(CLI::IsMember({"rotrot", "div"}));
    add_common(decompose);

    auto* gridcmd = app.add_subcommand("grid", "topology report for a voxel domain");
    add_common(gridcmd);

    auto* helmholtz = app.add_subcommand("helmholtz", "discrete Helmholtz split sampling");
    helmholtz->add_option("--level", level, "complex level k")->check(CLI::Range(0, 3));
    add_common(helmholtz);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (suite != "identities") {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitIo;
            }
            return cmd_verify_identities(opt);
        }
        if (potential->parsed()) return cmd_potential(opt, pot_op);
        if (decompose->parsed()) return cmd_decompose(opt, dec_op);
        if (gridcmd->parsed()) return cmd_grid(opt);
        if (helmholtz->parsed()) return cmd_helmholtz(opt, level);
    } catch (const cf::SymmetryRequired& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const cf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
