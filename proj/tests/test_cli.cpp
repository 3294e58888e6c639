// End-to-end checks of the command line binary; the path to the binary is
// argv[1]. Uses std::system with shell redirection, so results land in
// scratch files under the current working directory.

#include "complexforge/elasticity.hpp"
#include "complexforge/field_json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string cli;

int run(const std::string& args, const std::string& out_file) {
    const std::string cmd = "\"" + cli + "\" " + args + " > " + out_file + " 2> cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli-binary>\n";
        return 2;
    }
    cli = argv[1];

    using namespace complexforge;

    // --- determinism -------------------------------------------------------
    {
        const std::string flags = "verify identities --degree 3 --trials 20 --seed 7 --no-timestamp";
        check(run(flags, "cli_a.json") == 0, "verify exits 0 on passing suite");
        check(run(flags, "cli_b.json") == 0, "verify rerun exits 0");
        check(slurp("cli_a.json") == slurp("cli_b.json"), "same seed gives byte-identical reports");
        check(!slurp("cli_a.json").empty() && slurp("cli_a.json")[0] == '{',
              "stdout carries only the JSON report");

        check(run("verify identities --degree 3 --trials 5 --seed 9 --no-timestamp",
                  "cli_c.json") == 0,
              "different seed still passes");
        check(slurp("cli_c.json") != slurp("cli_a.json"), "config echo distinguishes runs");

        check(run("verify identities --degree 0 --trials 5 --seed 1 --no-timestamp",
                  "cli_d.json") == 0,
              "degree 0 constants pass trivially");

        check(run("verify identities --degree 2 --trials 3 --seed 1", "cli_e.json") == 0,
              "timestamped run exits 0");
        check(slurp("cli_e.json").find("timestamp_unix_ms") != std::string::npos,
              "timestamp present without --no-timestamp");
    }

    // --- potential: landmark and exit codes --------------------------------
    {
        spit("cli_identity.json", field_to_json(PolyTensorField::identity(
                                                    PolyScalarField::constant(Rational(1))))
                                      .dump(2));
        check(run("potential --op rotrot --in cli_identity.json --out cli_pot.json --no-timestamp",
                  "cli_rep.json") == 0,
              "potential rotrot on the identity tensor exits 0");

        const PolyVectorField x = PolyVectorField::position();
        PolyTensorField expected =
            PolyTensorField::identity(dot(x, x)) - PolyTensorField::outer(x, x);
        expected *= Rational(1, 6);
        check(slurp("cli_pot.json") == field_to_json(expected).dump(2) + "\n",
              "rotrot potential of I matches the canonical serialization");

        spit("cli_zero_vec.json", field_to_json(PolyVectorField{}).dump(2));
        check(run("potential --op div --in cli_zero_vec.json --no-timestamp", "cli_rep0.json") == 0,
              "potential div of 0 exits 0");
        check(slurp("cli_rep0.json").find("\"round_trip_exact_zero\": true") != std::string::npos,
              "div round trip reported exact");

        // symmetric input outside the sym-grad range
        PolyTensorField bad;
        bad(0, 0).add_term(Monomial{{0, 2, 0}}, Rational(1));
        spit("cli_bad.json", field_to_json(bad).dump(2));
        check(run("potential --op symgrad --in cli_bad.json --no-timestamp", "cli_rep3.json") == 3,
              "violated precondition exits 3");
        check(slurp("cli_rep3.json").find("compatibility_residual") != std::string::npos,
              "residual field attached on precondition failure");

        spit("cli_corrupt.json", "{not json");
        check(run("potential --op rotrot --in cli_corrupt.json --no-timestamp", "cli_rep4.json") == 1,
              "corrupted JSON exits 1");
        check(run("potential --op rotrot --in cli_missing.json --no-timestamp", "cli_rep5.json") == 1,
              "missing file exits 1");
    }

    // --- decompose ---------------------------------------------------------
    {
        PolyTensorField m;
        m(0, 0).add_term(Monomial{{0, 2, 0}}, Rational(1));
        spit("cli_m.json", field_to_json(m).dump(2));
        check(run("decompose --op rotrot --in cli_m.json --no-timestamp", "cli_dec.json") == 0,
              "decompose rotrot exits 0");
        check(slurp("cli_dec.json").find("\"residual_exact_zero\": true") != std::string::npos,
              "decomposition residual exactly zero");

        PolyTensorField skewed;
        skewed(0, 1).add_term(Monomial{{0, 0, 0}}, Rational(1));
        spit("cli_skew.json", field_to_json(skewed).dump(2));
        check(run("decompose --op div --in cli_skew.json --no-timestamp", "cli_dec2.json") == 3,
              "non-symmetric decompose input exits 3");
    }

    // --- grid and helmholtz ------------------------------------------------
    {
        spit("cli_tunnel.vox", "3 3 3\n111\n101\n111\n\n111\n101\n111\n\n111\n101\n111\n");
        check(run("grid --in cli_tunnel.vox --no-timestamp", "cli_grid.json") == 0,
              "grid report exits 0");
        const std::string rep = slurp("cli_grid.json");
        check(rep.find("\"betti\": [\n    1,\n    1,\n    0,\n    0\n  ]") != std::string::npos,
              "tunnel betti numbers (1,1,0,0)");
        check(rep.find("\"elasticity_neumann_dim\": 6") != std::string::npos,
              "tunnel elasticity neumann dim 6");

        spit("cli_empty.vox", "2 1 1\n00\n");
        check(run("grid --in cli_empty.vox --no-timestamp", "cli_grid2.json") == 1,
              "empty occupancy exits 1");
        spit("cli_malformed.vox", "2 2 1\n1x\n11\n");
        check(run("grid --in cli_malformed.vox --no-timestamp", "cli_grid3.json") == 1,
              "malformed voxel file exits 1");

        check(run("helmholtz --in cli_tunnel.vox --level 1 --trials 20 --seed 3 --no-timestamp",
                  "cli_helm.json") == 0,
              "helmholtz sampling exits 0");
        check(slurp("cli_helm.json").find("\"harmonic_dim\": 1") != std::string::npos,
              "tunnel level-1 harmonic dim 1");
        check(run("helmholtz --in cli_tunnel.vox --level 1 --trials 20 --seed 3 --no-timestamp",
                  "cli_helm2.json") == 0,
              "helmholtz rerun exits 0");
        check(slurp("cli_helm.json") == slurp("cli_helm2.json"),
              "helmholtz reports byte-identical for fixed seed");
    }

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cout << "test_cli: " << failures << " checks failed\n";
    return 1;
}
