// Acceptance gate: one line per criterion, pass/fail, nonzero exit if any
// criterion fails. argv[1] is the path to the command line binary (used by
// the determinism criterion).

#include "complexforge/elasticity.hpp"
#include "complexforge/field_json.hpp"
#include "complexforge/grid.hpp"
#include "complexforge/identities.hpp"
#include "complexforge/random_fields.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace complexforge;

namespace {

int failed_criteria = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << num << " (" << what << "): " << (ok ? "pass" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failed_criteria;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1. all 11 calculus identities plus both cutting formulas, exactly zero on
//    100 seeded random degree-4 inputs each, under 60 s
void criterion_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& id : appendix_identity_ids()) {
        for (int t = 0; t < 100 && ok; ++t) {
            FieldSampler s(1000 + static_cast<std::uint64_t>(t), 4);
            FieldValue input;
            if (id == "i")
                input = s.scalar();
            else if (id == "iii" || id == "iv")
                input = s.vector();
            else if (id == "ii'" || id == "vi'")
                input = s.symmetric_tensor();
            else
                input = s.tensor();
            if (!field_is_zero(verify_appendix_identity(id, input))) {
                ok = false;
                detail = "identity " + id + " trial " + std::to_string(t);
            }
        }
    }
    for (int t = 0; t < 100 && ok; ++t) {
        FieldSampler s(2000 + static_cast<std::uint64_t>(t), 4);
        const auto phi = s.scalar();
        if (!cutting_div(phi, s.tensor()).is_zero()) {
            ok = false;
            detail = "cutting div trial " + std::to_string(t);
        }
        if (ok && !cutting_rotrot_residual(phi, s.symmetric_tensor()).is_zero()) {
            ok = false;
            detail = "cutting rotrot trial " + std::to_string(t);
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + " s";
    }
    report(1, "identity suite exact, < 60 s", ok, detail);
}

// 2. RotRot^T sym-grad = 0 and Div RotRot^T = 0, exactly
void criterion_complex_property() {
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
        FieldSampler s(3000 + static_cast<std::uint64_t>(t), 4);
        ok = rot_rot_t(sym_grad(s.vector())).is_zero() &&
             tensor_div(rot_rot_t(s.tensor())).is_zero();
    }
    report(2, "complex compositions vanish exactly", ok);
}

// 3. the three potential operators are exact right inverses
void criterion_round_trips() {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 100 && ok; ++t) {
        FieldSampler s(4000 + static_cast<std::uint64_t>(t), 4);
        const PolyTensorField m = sym_grad(s.vector());
        if (!(sym_grad(potential_sym_grad(m)) - m).is_zero()) {
            ok = false;
            detail = "sym-grad trial " + std::to_string(t);
            break;
        }
        const PolyTensorField n = rot_rot_t(s.symmetric_tensor());
        if (!(rot_rot_t(potential_rot_rot_t(n)) - n).is_zero()) {
            ok = false;
            detail = "rotrot trial " + std::to_string(t);
            break;
        }
        const PolyVectorField v = s.vector();
        if (!(tensor_div(potential_div_sym(v)) - v).is_zero()) {
            ok = false;
            detail = "div trial " + std::to_string(t);
            break;
        }
    }
    report(3, "potential round trips exact", ok, detail);
}

// 4. the closed-form potential of the identity tensor, byte-exact
void criterion_landmark() {
    const PolyTensorField p = potential_rot_rot_t(PolyTensorField::identity());
    const PolyVectorField x = PolyVectorField::position();
    PolyTensorField expected = PolyTensorField::identity(dot(x, x)) - PolyTensorField::outer(x, x);
    expected *= Rational(1, 6);
    const bool bytes_ok = field_to_json(p).dump() == field_to_json(expected).dump();
    const bool round_ok = (rot_rot_t(p) - PolyTensorField::identity()).is_zero();
    report(4, "landmark potential byte-exact", bytes_ok && round_ok,
           bytes_ok ? "round trip failed" : "serialization differs");
}

// 5. both regular decompositions reconstruct exactly with symmetric smooth parts
void criterion_decompositions() {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 100 && ok; ++t) {
        FieldSampler s(5000 + static_cast<std::uint64_t>(t), 4);
        const PolyTensorField m = s.symmetric_tensor();
        const auto d1 = decompose_rotrot_domain(m);
        const auto d2 = decompose_div_domain(m);
        if (!d1.residual_zero() || !d1.smooth.is_symmetric() || !d2.residual_zero() ||
            !d2.smooth.is_symmetric()) {
            ok = false;
            detail = "trial " + std::to_string(t);
        }
    }
    report(5, "regular decompositions exact", ok, detail);
}

// 6. sym-grad potential recovers the input up to a rigid motion
void criterion_gauge() {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 50 && ok; ++t) {
        FieldSampler s(6000 + static_cast<std::uint64_t>(t), 4);
        const PolyVectorField w = s.vector();
        const PolyVectorField diff = potential_sym_grad(sym_grad(w)) - w;
        if (!rigid_motion_coefficients(diff).has_value()) {
            ok = false;
            detail = "trial " + std::to_string(t);
        }
    }
    report(6, "gauge freedom is a rigid motion, dim 6", ok, detail);
}

// 7. Betti numbers and harmonic dimensions on the three reference domains
void criterion_topology() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    const grid::VoxelDomain solid = grid::VoxelDomain::solid(3, 3, 3);
    grid::VoxelDomain tunnel = solid;
    for (int z = 0; z < 3; ++z) tunnel.set(1, 1, z, false);
    grid::VoxelDomain shell = solid;
    shell.set(1, 1, 1, false);

    const auto check_domain = [&](const grid::VoxelDomain& d, std::array<std::size_t, 4> betti,
                                  const std::string& name) {
        const auto b = grid::betti_numbers(grid::build_cubical_complex(d));
        if (b != betti) {
            ok = false;
            detail = name + " betti";
            return;
        }
        // harmonic dimensions from the numeric toolbox must match the
        // exact-rational ranks, for both boundary conditions
        for (int k : {1, 2}) {
            const auto neu = grid::dirichlet_neumann_fields(d, k, grid::HarmonicKind::neumann);
            const auto dir = grid::dirichlet_neumann_fields(d, k, grid::HarmonicKind::dirichlet);
            if (neu.size() != b[static_cast<std::size_t>(k)] ||
                dir.size() != b[static_cast<std::size_t>(k)]) {
                ok = false;
                detail = name + " harmonic dim, level " + std::to_string(k);
            }
        }
    };
    check_domain(solid, {1, 0, 0, 0}, "solid");
    check_domain(tunnel, {1, 1, 0, 0}, "tunnel");
    check_domain(shell, {1, 0, 1, 0}, "shell");

    if (ok && grid::elasticity_dims(tunnel).elasticity_neumann_dim != 6) {
        ok = false;
        detail = "tunnel elasticity neumann dim";
    }
    if (ok && grid::elasticity_dims(shell).elasticity_dirichlet_dim != 6) {
        ok = false;
        detail = "shell elasticity dirichlet dim";
    }
    const double dt = seconds_since(t0);
    if (dt >= 120.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + " s";
    }
    report(7, "topology suite, < 120 s", ok, detail);
}

// 8. three-way splits orthogonal and reconstructing on every test pair
void criterion_helmholtz() {
    bool ok = true;
    std::string detail;

    std::vector<std::pair<std::string, fa::ComplexPair>> pairs;
    {
        Eigen::MatrixXd m0(2, 1);
        m0 << 1, 0;
        Eigen::MatrixXd m1(1, 2);
        m1 << 0, 1;
        pairs.emplace_back("toy", fa::ComplexPair(fa::LinearOp::euclidean(m0),
                                                  fa::LinearOp::euclidean(m1)));
    }
    grid::VoxelDomain tunnel = grid::VoxelDomain::solid(3, 3, 3);
    for (int z = 0; z < 3; ++z) tunnel.set(1, 1, z, false);
    const auto small = grid::build_cubical_complex(grid::VoxelDomain::solid(2, 2, 1));
    const auto tun = grid::build_cubical_complex(tunnel);
    for (int k = 0; k < 4; ++k)
        pairs.emplace_back("grid level " + std::to_string(k), grid::level_pair(small, k));
    pairs.emplace_back("tunnel level 1", grid::level_pair(tun, 1));
    pairs.emplace_back("tunnel level 2", grid::level_pair(tun, 2));

    std::mt19937_64 rng(8);
    std::normal_distribution<double> gauss;
    for (const auto& [name, pair] : pairs) {
        for (int t = 0; t < 100 && ok; ++t) {
            Eigen::VectorXd x(pair.a0.matrix.rows());
            for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = gauss(rng);
            const auto split = fa::helmholtz_split(pair, x);
            const double scale = x.squaredNorm() + 1e-300;
            const bool fine =
                split.residual_norm <= 1e-10 * (x.norm() + 1e-300) &&
                std::abs(split.range_a0.dot(split.harmonic)) <= 1e-10 * scale &&
                std::abs(split.range_a0.dot(split.range_a1_adjoint)) <= 1e-10 * scale &&
                std::abs(split.harmonic.dot(split.range_a1_adjoint)) <= 1e-10 * scale;
            if (!fine) {
                ok = false;
                detail = name + " trial " + std::to_string(t);
            }
        }
    }
    report(8, "Helmholtz splits orthogonal, residual <= 1e-10", ok, detail);
}

// 9. path-graph constant 1.0 and sampled sup never exceeding it
void criterion_friedrichs() {
    Eigen::MatrixXd d(2, 3);
    d << -1, 1, 0, 0, -1, 1;
    const auto op = fa::LinearOp::euclidean(d);
    const auto res = fa::friedrichs_constant(op);
    bool ok = std::abs(res.constant - 1.0) <= 1e-10;
    std::string detail = ok ? "" : "constant " + std::to_string(res.constant);

    const Eigen::MatrixXd basis = fa::kernel_complement_frame(op);
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss;
    double sup = 0.0;
    for (int t = 0; t < 10000; ++t) {
        Eigen::VectorXd c(basis.cols());
        for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = gauss(rng);
        const Eigen::VectorXd x = basis * c;
        const double dn = (d * x).norm();
        if (dn > 1e-12) sup = std::max(sup, x.norm() / dn);
    }
    if (sup > res.constant + 1e-9) {
        ok = false;
        detail = "sampled sup " + std::to_string(sup);
    }
    report(9, "Friedrichs constant 1.0, sampled sup bounded", ok, detail);
}

// 10. two identical CLI runs produce byte-identical reports
void criterion_determinism(const char* cli) {
    const std::string base = std::string("\"") + cli +
                             "\" verify identities --degree 3 --trials 20 --seed 42 --no-timestamp";
    const int r1 = std::system((base + " > acceptance_run1.json 2> /dev/null").c_str());
    const int r2 = std::system((base + " > acceptance_run2.json 2> /dev/null").c_str());
    const bool ok = WIFEXITED(r1) && WEXITSTATUS(r1) == 0 && WIFEXITED(r2) &&
                    WEXITSTATUS(r2) == 0 &&
                    slurp("acceptance_run1.json") == slurp("acceptance_run2.json") &&
                    !slurp("acceptance_run1.json").empty();
    report(10, "CLI reports byte-identical for fixed seed", ok);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    criterion_identities();
    criterion_complex_property();
    criterion_round_trips();
    criterion_landmark();
    criterion_decompositions();
    criterion_gauge();
    criterion_topology();
    criterion_helmholtz();
    criterion_friedrichs();
    criterion_determinism(argv[1]);

    if (failed_criteria == 0) {
        std::cout << "acceptance: all 10 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failed_criteria << " criteria FAILED\n";
    return 1;
}
