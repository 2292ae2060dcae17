#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bpd/blaschke.hpp"

using namespace bpd;

namespace {

std::mt19937_64 rng(20240818);

cplx rand_disc(double rmax) {
    std::uniform_real_distribution<double> rad(0.0, rmax), ang(0.0, 2.0 * pi);
    return std::polar(rad(rng), ang(rng));
}

BlaschkeProduct random_product(int order, double rmax) {
    std::vector<cplx> zeros;
    for (int k = 0; k < order; ++k) zeros.push_back(rand_disc(rmax));
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    return BlaschkeProduct(ang(rng), zeros);
}

}  // namespace

TEST_CASE("Moebius factor is self-inverse and matches the closed form") {
    for (int t = 0; t < 5; ++t) {
        cplx lam = rand_disc(0.8);
        Moebius m(lam);
        cplx z = rand_disc(0.9);
        cplx want = (lam - z) / (1.0 - std::conj(lam) * z);
        CHECK(std::abs(m.eval(z) - want) < 1e-14);
        CHECK(std::abs(m.eval(m.eval(z)) - z) < 1e-13);
    }
}

TEST_CASE("products are unimodular on the circle and contractive inside") {
    for (int order : {1, 2, 4}) {
        BlaschkeProduct B = random_product(order, 0.7);
        for (int j = 0; j < 32; ++j) {
            cplx zeta = unit(2.0 * pi * j / 32.0);
            CHECK(std::abs(std::abs(B.eval(zeta)) - 1.0) < 1e-13);
        }
        CHECK(std::abs(B.eval(rand_disc(0.95))) < 1.0);
    }
}

TEST_CASE("eval equals the ratio of numerator and denominator polynomials") {
    BlaschkeProduct B = random_product(3, 0.6);
    for (int t = 0; t < 6; ++t) {
        cplx z = rand_disc(0.9);
        cplx want = B.numerator().eval(z) / B.denominator().eval(z);
        CHECK(std::abs(B.eval(z) - want) < 1e-13);
    }
}

TEST_CASE("taylor series reproduces eval inside the disc") {
    BlaschkeProduct B = random_product(4, 0.65);
    PowerSeries t = B.taylor_auto(1e-13);
    for (int j = 0; j < 8; ++j) {
        cplx z = rand_disc(0.5);
        CHECK(std::abs(t.eval(z) - B.eval(z)) < 1e-11);
    }
}

TEST_CASE("taylor coefficients match discrete circle averaging") {
    // Cauchy coefficient oracle on 64 uniform samples of a product whose
    // higher coefficients decay fast enough for aliasing below 1e-10
    BlaschkeProduct B = random_product(2, 0.35);
    PowerSeries t = B.taylor(20);
    const int M = 64;
    for (int k = 0; k <= 10; ++k) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < M; ++j) {
            cplx zeta = unit(2.0 * pi * j / M);
            acc += B.eval(zeta) * unit(-2.0 * pi * j * k / M);
        }
        acc /= double(M);
        CHECK(std::abs(acc - t.coeff(k)) < 1e-10);
    }
}

TEST_CASE("derivative_eval matches central finite differences") {
    BlaschkeProduct B = random_product(4, 0.6);
    const double h = 1e-6;
    for (int t = 0; t < 6; ++t) {
        cplx z = rand_disc(0.8);
        cplx fd = (B.eval(z + h) - B.eval(z - h)) / (2.0 * h);
        CHECK(std::abs(B.derivative_eval(z) - fd) < 1e-7);
    }
}

TEST_CASE("critical point count equals order minus one") {
    for (int order : {2, 3, 4, 5}) {
        BlaschkeProduct B = random_product(order, 0.7);
        CriticalSet cs = critical_points(B);
        int total = 0;
        for (const RootCluster& c : cs.points) {
            total += c.multiplicity;
            CHECK(std::abs(B.derivative_eval(c.location)) < 1e-6);
        }
        CHECK(total == order - 1);
    }
}

TEST_CASE("repeated-zero product has one critical point of full multiplicity") {
    cplx alpha{0.35, -0.2};
    BlaschkeProduct B = BlaschkeProduct::from_zeros({alpha, alpha, alpha});
    CriticalSet cs = critical_points(B);
    REQUIRE(cs.points.size() == 1);
    CHECK(cs.points[0].multiplicity == 2);
    CHECK(std::abs(cs.points[0].location - alpha) < 1e-7);
}

TEST_CASE("critical point at the origin is found") {
    // zeros {0, 0, g, g}: the derivative vanishes at 0, whose reflected
    // partner sits at infinity (degenerate leading coefficient)
    cplx g{0.45, 0.2};
    BlaschkeProduct B(0.3, {cplx{0.0, 0.0}, cplx{0.0, 0.0}, g, g});
    CriticalSet cs = critical_points(B);
    int total = 0;
    double nearest_origin = 1e9;
    for (const RootCluster& c : cs.points) {
        total += c.multiplicity;
        nearest_origin = std::min(nearest_origin, std::abs(c.location));
    }
    CHECK(total == 3);
    CHECK(nearest_origin < 1e-9);
}

TEST_CASE("preimages solve B(z) = w with the right multiplicity") {
    BlaschkeProduct B = random_product(3, 0.6);
    cplx w = rand_disc(0.5);
    std::vector<RootCluster> pre = preimages(B, w);
    int total = 0;
    for (const RootCluster& c : pre) {
        total += c.multiplicity;
        if (c.multiplicity == 1) CHECK(std::abs(B.eval(c.location) - w) < 1e-9);
    }
    CHECK(total == 3);
}

TEST_CASE("compose evaluates as outer after inner") {
    BlaschkeProduct outer = random_product(2, 0.5);
    BlaschkeProduct inner = random_product(2, 0.5);
    BlaschkeProduct comp = compose(outer, inner);
    CHECK(comp.order() == 4);
    for (int t = 0; t < 10; ++t) {
        cplx z = rand_disc(0.9);
        CHECK(std::abs(comp.eval(z) - outer.eval(inner.eval(z))) < 1e-11);
    }
}

TEST_CASE("moebius_post_compose evaluates as the Moebius of the product") {
    BlaschkeProduct B = random_product(4, 0.6);
    Moebius m(rand_disc(0.4));
    BlaschkeProduct post = moebius_post_compose(m, B);
    CHECK(post.order() == 4);
    for (int t = 0; t < 10; ++t) {
        cplx z = rand_disc(0.9);
        CHECK(std::abs(post.eval(z) - m.eval(B.eval(z))) < 1e-11);
    }
}

TEST_CASE("constructor rejects zeros outside the allowed modulus") {
    CHECK_THROWS_AS(BlaschkeProduct(0.0, {cplx{0.9999, 0.0}}), std::domain_error);
    CHECK_NOTHROW(BlaschkeProduct(0.0, {cplx{0.9, 0.0}}));
}

TEST_CASE("power factory gives z^n exactly") {
    BlaschkeProduct p = BlaschkeProduct::power(3, 0.7);
    PowerSeries t = p.taylor(6);
    CHECK(std::abs(std::abs(t.coeff(3)) - 1.0) < 1e-15);
    for (int k = 0; k <= 6; ++k)
        if (k != 3) CHECK(std::abs(t.coeff(k)) < 1e-15);
    cplx z{0.3, -0.4};
    CHECK(std::abs(p.eval(z) - t.coeff(3) * z * z * z) < 1e-14);
}
