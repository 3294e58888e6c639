#include "complexforge/poincare.hpp"
#include "complexforge/random_fields.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace complexforge;

namespace {

PolyScalarField x(int i) { return PolyScalarField::variable(i); }

} // namespace

TEST_CASE("grad potential: named examples") {
    CHECK(poincare_grad_potential(PolyVectorField::unit(0)) == x(0));

    const PolyScalarField u = x(0) * x(1);
    CHECK(poincare_grad_potential(grad(u)) == u);

    PolyVectorField not_closed;
    not_closed[0] = -x(1);
    not_closed[1] = x(0);
    CHECK_THROWS_AS(poincare_grad_potential(not_closed), NotClosed);
}

TEST_CASE("curl potential: named examples") {
    const PolyVectorField a = poincare_curl_potential(PolyVectorField::unit(2));
    CHECK(a[0] == x(1) * Rational(-1, 2));
    CHECK(a[1] == x(0) * Rational(1, 2));
    CHECK(a[2].is_zero());
    CHECK(rot(a) == PolyVectorField::unit(2));

    CHECK(poincare_curl_potential(PolyVectorField::zero()).is_zero());

    PolyVectorField bad;
    bad[0] = x(0);
    CHECK_THROWS_AS(poincare_curl_potential(bad), NotSolenoidal);
}

TEST_CASE("div potential: named examples") {
    const PolyVectorField e = poincare_div_potential(PolyScalarField::constant(1));
    for (int i = 0; i < 3; ++i) CHECK(e[i] == x(i) * Rational(1, 3));
    CHECK(div(e) == PolyScalarField::constant(1));

    const PolyVectorField e1 = poincare_div_potential(x(0));
    for (int i = 0; i < 3; ++i) CHECK(e1[i] == x(0) * x(i) * Rational(1, 4));
    CHECK(div(e1) == x(0));

    CHECK(poincare_div_potential(PolyScalarField()).is_zero());
}

TEST_CASE("right-inverse laws on compatible random inputs") {
    FieldSampler sampler(2024, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyScalarField u = sampler.scalar();
        const PolyVectorField a = sampler.vector();

        const PolyVectorField closed = grad(u);
        CHECK(grad(poincare_grad_potential(closed)) == closed);

        const PolyVectorField solenoidal = rot(a);
        CHECK(rot(poincare_curl_potential(solenoidal)) == solenoidal);

        const PolyScalarField f = sampler.scalar();
        CHECK(div(poincare_div_potential(f)) == f);
    }
}

TEST_CASE("homotopy composition: P_grad(grad u) = u - u(center)") {
    FieldSampler sampler(5, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const PolyScalarField u = sampler.scalar();
        const PolyScalarField recovered = poincare_grad_potential(grad(u));
        CHECK(recovered ==
              u - PolyScalarField::constant(u.evaluate({Rational(0), Rational(0), Rational(0)})));
    }

    const HomotopyCenter c{{Rational(1, 2), Rational(-1), Rational(3)}};
    const PolyScalarField u = x(0) * x(0) * x(1) + Rational(4) * x(2);
    const PolyScalarField recovered = poincare_grad_potential(grad(u), c);
    CHECK(grad(recovered) == grad(u));
    CHECK(recovered.evaluate(c.point) == 0);
}

TEST_CASE("nonzero center still yields exact potentials") {
    const HomotopyCenter c{{Rational(1), Rational(2), Rational(-1, 3)}};
    FieldSampler sampler(6, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const PolyVectorField w = rot(sampler.vector());
        CHECK(rot(poincare_curl_potential(w, c)) == w);
        const PolyScalarField f = sampler.scalar();
        CHECK(div(poincare_div_potential(f, c)) == f);
    }
}

TEST_CASE("degree grows by exactly one") {
    FieldSampler sampler(8, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const PolyScalarField f = sampler.scalar();
        if (f.is_zero()) continue;
        CHECK(poincare_div_potential(f).total_degree() == f.total_degree() + 1);
    }
}

TEST_CASE("linearity of the potential operators") {
    FieldSampler sampler(9, 4);
    const Rational a(2, 7), b(-3);
    const PolyScalarField f1 = sampler.scalar(), f2 = sampler.scalar();
    CHECK(poincare_div_potential(a * f1 + b * f2) ==
          a * poincare_div_potential(f1) + b * poincare_div_potential(f2));

    const PolyVectorField w1 = rot(sampler.vector()), w2 = rot(sampler.vector());
    CHECK(poincare_curl_potential(w1 * a + w2 * b) ==
          poincare_curl_potential(w1) * a + poincare_curl_potential(w2) * b);
}

TEST_CASE("row-wise lifts") {
    // rot-lift of I is spn(x)/2
    const PolyTensorField e = rowwise_curl_potential(PolyTensorField::identity());
    CHECK(e == spn(PolyVectorField::position()) * Rational(1, 2));
    CHECK(tensor_rot(e) == PolyTensorField::identity());

    CHECK(rowwise_grad_potential(PolyTensorField::zero()).is_zero());

    // div-lift of e1 is e1 (x) x / 3
    const PolyTensorField d = rowwise_div_potential(PolyVectorField::unit(0));
    CHECK(d == PolyTensorField::outer(PolyVectorField::unit(0), PolyVectorField::position()) * Rational(1, 3));
    CHECK(tensor_div(d) == PolyVectorField::unit(0));

    FieldSampler sampler(10, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const PolyTensorField g = jacobian(sampler.vector());
        CHECK(jacobian(rowwise_grad_potential(g)) == g);
        const PolyTensorField n = tensor_rot(sampler.tensor());
        CHECK(tensor_rot(rowwise_curl_potential(n)) == n);
        const PolyVectorField v = sampler.vector();
        CHECK(tensor_div(rowwise_div_potential(v)) == v);
    }
}

TEST_CASE("row-wise lifts report the offending row") {
    PolyTensorField bad;
    bad.set_row(1, PolyVectorField{{-x(1), x(0), PolyScalarField()}});
    try {
        rowwise_grad_potential(bad);
        FAIL("expected NotClosed");
    } catch (const NotClosed& e) {
        CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    }

    PolyTensorField notsol;
    notsol(2, 0) = x(0);
    try {
        rowwise_curl_potential(notsol);
        FAIL("expected NotSolenoidal");
    } catch (const NotSolenoidal& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
}
