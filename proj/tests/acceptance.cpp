// Acceptance suite: ten end-to-end properties of the library, each
// printed as a single PASS/FAIL line.  The process exits nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "bpd/classify.hpp"
#include "bpd/instance.hpp"
#include "bpd/operators.hpp"

using namespace bpd;

namespace {

std::mt19937_64 rng(0xacce97edULL);

cplx rand_disc(double rmin, double rmax) {
    std::uniform_real_distribution<double> rad(rmin, rmax), ang(0.0, 2.0 * pi);
    return std::polar(rad(rng), ang(rng));
}

double rand_angle() {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    return ang(rng);
}

BlaschkeProduct random_product(int order, double rmax, bool zero_at_origin) {
    std::vector<cplx> zeros;
    if (zero_at_origin) zeros.push_back({0.0, 0.0});
    while (static_cast<int>(zeros.size()) < order) zeros.push_back(rand_disc(0.05, rmax));
    return BlaschkeProduct(rand_angle(), zeros);
}

int failures = 0;

void report(int idx, bool ok, const char* what, double measure) {
    std::printf("criterion %2d [%s] %-58s (worst %.3e)\n", idx, ok ? "PASS" : "FAIL", what,
                measure);
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: powers of phi are orthogonal iff phi(0) = 0 ----------

void criterion_orthogonal_powers() {
    auto t0 = std::chrono::steady_clock::now();
    std::uniform_int_distribution<int> ord(2, 4);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        BlaschkeProduct phi = random_product(ord(rng), 0.8, true);
        int N = default_truncation(std::max(phi.max_zero_modulus(), 0.3), 1e-13) + 48;
        PowerSeries s = phi.taylor(N);
        std::vector<CoeffVector> pw;
        PowerSeries cur = series_resize(PowerSeries::polynomial({cplx{1.0, 0.0}}), N);
        for (int k = 0; k <= 8; ++k) {
            pw.emplace_back(cur, Space::Dirichlet);
            cur = series_mul(cur, s);
        }
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b)
                worst = std::max(worst, std::abs(inner(pw[size_t(a)], pw[size_t(b)])));
    }
    for (int t = 0; t < 20; ++t) {
        BlaschkeProduct phi = random_product(ord(rng), 0.8, false);
        int N = default_truncation(std::max(phi.max_zero_modulus(), 0.3), 1e-13) + 16;
        CoeffVector f(phi.taylor(N), Space::Dirichlet);
        CoeffVector one(series_resize(PowerSeries::polynomial({cplx{1.0, 0.0}}), N),
                        Space::Dirichlet);
        double diff = std::abs(inner(f, one) - phi.eval(cplx{0.0, 0.0}));
        if (diff > 1e-10) worst = std::max(worst, diff);
    }
    bool ok = worst <= 1e-8 && seconds_since(t0) <= 10.0;
    report(1, ok, "power orthogonality and constant pairing in D", worst);
}

// ---- criterion 2: distinguished Bergman subspace of derivative powers --

void criterion_distinguished_subspace() {
    double worst = 0.0;
    for (int n : {2, 3, 4}) {
        BlaschkeProduct phi = random_product(n, 0.6, false);
        int N = default_truncation(std::max(phi.max_zero_modulus(), 0.3), 1e-13) + 64;
        PowerSeries s = phi.taylor(N);
        PowerSeries ds = series_derivative(s);
        // squared Bergman norms of phi' phi^j equal n/(j+1)
        PowerSeries cur = ds;
        for (int j = 0; j <= 10; ++j) {
            double n2 = norm(CoeffVector(cur, Space::Bergman));
            worst = std::max(worst, std::abs(n2 * n2 - double(n) / (j + 1)) / (double(n) / (j + 1)));
            cur = series_mul(cur, s);
        }
        // the adjoint annihilates phi' and steps the derivative ladder down
        CoeffVector dphi(ds, Space::Bergman);
        worst = std::max(worst, norm(adjoint_apply(phi, dphi)) / norm(dphi) * 10.0);  // tol 1e-9
        PowerSeries hi = s, lo = series_resize(PowerSeries::polynomial({cplx{1.0, 0.0}}), N);
        for (int j = 0; j <= 5; ++j) {
            CoeffVector a(series_derivative(hi), Space::Bergman);
            CoeffVector b(series_derivative(lo), Space::Bergman);
            CoeffVector img = adjoint_apply(phi, a);
            CoeffVector diff(series_add(img.coeffs, series_scale(cplx{-1.0, 0.0}, b.coeffs)),
                             Space::Bergman);
            worst = std::max(worst, norm(diff) / std::max(1.0, norm(b)));
            lo = hi;
            hi = series_mul(hi, s);
        }
        // reducing residual of the span of {phi' phi^j} for a monomial symbol,
        // where the span closes up exactly inside the coefficient window
        BlaschkeProduct mono = BlaschkeProduct::power(n, rand_angle());
        int Nm = 160;
        CoeffVector gen(series_derivative(mono.taylor(Nm)), Space::Bergman);
        SubspaceBasis M0 = orbit_subspace({gen}, mono, 0, "M0");
        ResidualReport rr = reducing_residual(M0, mono, 1e-7);
        worst = std::max(worst,
                         std::max(rr.invariance_residual, rr.adjoint_invariance_residual) * 0.1);
    }
    report(2, worst <= 1e-8, "distinguished subspace: norms, adjoint ladder, reducing", worst);
}

// ---- criterion 3: adjoint of phi/z as a kernel combination -------------

void criterion_kernel_sum() {
    std::uniform_int_distribution<int> ord(2, 4);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        int n = ord(rng);
        std::vector<cplx> rest;
        for (int k = 0; k + 1 < n; ++k) rest.push_back(rand_disc(0.05, 0.6));
        std::vector<cplx> zeros = rest;
        zeros.push_back({0.0, 0.0});
        BlaschkeProduct phi(rand_angle(), zeros);
        int N = default_truncation(std::max(phi.max_zero_modulus(), 0.3), 1e-13) + 32;
        CoeffVector f(series_shift_down(phi.taylor(N), 1e-9), Space::Dirichlet);
        CoeffVector img = adjoint_apply(phi, f);
        PowerSeries target = series_resize(PowerSeries::polynomial({cplx{0.0, 0.0}}), N);
        for (cplx lam : rest)
            target = series_add(target,
                                series_scale(std::conj(lam),
                                             kernel_vector(lam, Space::Dirichlet, N).coeffs));
        CoeffVector diff(series_add(img.coeffs, series_scale(cplx{-1.0, 0.0}, target)),
                         Space::Dirichlet);
        worst = std::max(worst, norm(diff));
    }
    report(3, worst <= 1e-8, "adjoint of phi/z equals the zero-kernel combination", worst);
}

// ---- criteria 4-6: classifier ground truth, pushforward, orthogonality -

struct GroundTruth {
    bool ok4 = true;
    double worst4 = 0.0;
};

void criteria_ground_truth_pushforward_orthogonality() {
    // criterion 4 with per-instance pushforward (criterion 5) folded in,
    // re-running the generated families so each subspace keeps its symbol
    GroundTruth g;
    auto t0 = std::chrono::steady_clock::now();
    const int per_family = 50;
    double worst5 = 0.0, worst6 = 0.0;

    auto absorb = [&](const ClassificationResult& r, const BlaschkeProduct& phi) {
        worst6 = std::max(worst6, r.max_pairwise_cross_gram);
        for (const ClassifiedSubspace& sub : r.subspaces) {
            if (!sub.report.reducing) continue;
            SubspaceBasis img = u_pushforward(sub.basis);
            ResidualReport rr = reducing_residual(img, phi, 1e-7);
            worst5 = std::max(worst5,
                              std::max(rr.invariance_residual, rr.adjoint_invariance_residual));
        }
    };

    for (const InstanceSpec& s : gen_instances("equiv_zn", per_family, 404)) {
        BlaschkeProduct phi = instance_product(s, 1e-3);
        ClassificationResult r = classify(phi);
        bool zn_like = r.verdict == Verdict::reducible_zn || r.verdict == Verdict::case_i;
        g.ok4 = g.ok4 && zn_like && static_cast<int>(r.subspaces.size()) == r.order;
        for (const ClassifiedSubspace& sub : r.subspaces) {
            double m = std::max(sub.report.invariance_residual,
                                sub.report.adjoint_invariance_residual);
            g.worst4 = std::max(g.worst4, m);
            g.ok4 = g.ok4 && m <= 1e-7;
        }
        absorb(r, phi);
    }
    for (const InstanceSpec& s : gen_instances("even_composite", per_family, 404)) {
        BlaschkeProduct phi = instance_product(s, 1e-3);
        ClassificationResult r = classify(phi);
        g.ok4 = g.ok4 && r.verdict == Verdict::case_ii && r.subspaces.size() == 2 &&
                r.subspaces[0].wandering == 2 && r.subspaces[1].wandering == 2;
        absorb(r, phi);
    }
    for (const InstanceSpec& s : gen_instances("psi_squared", per_family, 404)) {
        BlaschkeProduct phi = instance_product(s, 1e-3);
        ClassificationResult r = classify(phi);
        g.ok4 = g.ok4 && r.verdict == Verdict::case_iii && r.subspaces.size() == 2 &&
                r.subspaces[0].wandering == 1 && r.subspaces[1].wandering == 3 &&
                r.gamma_mu.has_value();
        absorb(r, phi);
        if (!r.gamma_mu) continue;
        cplx gamma = r.gamma_mu->first;
        BlaschkeProduct base(0.0, {cplx{0.0, 0.0}, cplx{0.0, 0.0}, gamma, gamma});
        int N = default_truncation(std::max(std::abs(gamma), 0.3), 1e-13) + 96;
        PowerSeries psi2 = base.taylor(N);
        PowerSeries v = BlaschkeProduct::factor(gamma).taylor(N);
        PowerSeries prev;
        for (int j = 0; j <= 4; ++j) {
            CoeffVector vj(v, Space::Dirichlet);
            CoeffVector img = adjoint_apply(base, vj);
            PowerSeries expect = j == 0 ? series_resize(PowerSeries::polynomial({cplx{0.0, 0.0}}), N)
                                        : series_scale((2.0 * j + 1.0) / (2.0 * j - 1.0), prev);
            CoeffVector diff(series_add(img.coeffs, series_scale(cplx{-1.0, 0.0}, expect)),
                             Space::Dirichlet);
            double resid = norm(diff) / norm(vj);
            g.worst4 = std::max(g.worst4, resid);
            g.ok4 = g.ok4 && resid <= 1e-8;
            prev = v;
            v = series_mul(v, psi2);
        }
    }
    for (int t = 0; t < per_family; ++t) {
        BlaschkeProduct outer(rand_angle(), {rand_disc(0.15, 0.5), rand_disc(0.15, 0.5)});
        BlaschkeProduct inner(rand_angle(), {cplx{0.0, 0.0}, rand_disc(0.15, 0.5)});
        BlaschkeProduct phi = compose(outer, inner);
        ClassificationResult r = classify(phi);
        g.ok4 = g.ok4 && r.verdict == Verdict::case_iv && !r.decompositions.empty();
        absorb(r, phi);
    }
    for (const InstanceSpec& s : gen_instances("generic", per_family, 404)) {
        BlaschkeProduct phi = instance_product(s, 1e-3);
        ClassificationResult r = classify(phi);
        g.ok4 = g.ok4 && r.verdict == Verdict::case_v;
        absorb(r, phi);
    }

    double secs = seconds_since(t0);
    report(4, g.ok4 && secs <= 300.0, "classifier recovers all generated family labels",
           g.worst4);
    report(5, worst5 <= 1e-7, "reducing subspaces stay reducing after the derivative shift",
           worst5);
    report(6, worst6 <= 1e-8, "emitted minimal subspaces are mutually orthogonal", worst6);
}

// ---- criterion 7: commutant probe dimensions ---------------------------

void criterion_probe() {
    struct ProbeCase {
        BlaschkeProduct phi;
        int want;
        const char* name;
    };
    std::vector<ProbeCase> cases;
    cases.push_back({BlaschkeProduct::power(2), 2, "z^2"});
    cases.push_back({BlaschkeProduct::power(3), 3, "z^3"});
    cases.push_back({BlaschkeProduct::power(4), 4, "z^4"});
    cases.push_back(
        {instance_product(gen_instances("even_composite", 1, 404)[0], 1e-3), 2, "even"});
    cases.push_back({instance_product(gen_instances("psi_squared", 2, 404)[0], 1e-3), 1,
                     "doubled-zero model"});
    cases.push_back({BlaschkeProduct::from_zeros({cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}}),
                     1, "triple factor"});
    cases.push_back({BlaschkeProduct::from_zeros(
                         {cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}}),
                     1, "quadruple factor"});

    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    int conclusive = 0;
    double worst_gap = 1e300;
    for (const ProbeCase& pc : cases) {
        CommutantProbeResult r = commutant_probe(pc.phi, Space::Dirichlet, 24, 1e-6);
        if (!r.conclusive) {
            std::printf("    probe inconclusive on %s (gap %.2e) — excluded from the count\n",
                        pc.name, r.gap_ratio);
            ok = false;
            continue;
        }
        ++conclusive;
        worst_gap = std::min(worst_gap, r.gap_ratio);
        if (r.estimated_dimension != pc.want) {
            std::printf("    probe on %s: estimated %d, expected %d\n", pc.name,
                        r.estimated_dimension, pc.want);
            ok = false;
        }
    }
    double secs = seconds_since(t0);
    ok = ok && conclusive >= static_cast<int>(cases.size() * 9 + 9) / 10 && worst_gap >= 10.0 &&
         secs <= 120.0 * static_cast<double>(cases.size());
    report(7, ok, "commutant probe dimensions with a decisive spectral gap", worst_gap);
}

// ---- criterion 8: the monomial lattice ---------------------------------

void criterion_lattice() {
    bool ok = true;
    double worst = 0.0;
    for (int n : {2, 3, 4}) {
        std::vector<SubspaceBasis> lat = enumerate_zn_lattice(n, 96);
        ok = ok && static_cast<long>(lat.size()) == (1L << n) - 2;
        BlaschkeProduct zn = BlaschkeProduct::power(n);
        for (const SubspaceBasis& S : lat) {
            ResidualReport r = reducing_residual(S, zn, 1e-12);
            worst = std::max(worst,
                             std::max(r.invariance_residual, r.adjoint_invariance_residual));
        }
    }
    report(8, ok && worst <= 1e-12, "monomial lattice has 2^n - 2 exactly reducing members",
           worst);
}

// ---- criterion 9: joint norm equations are infeasible ------------------

void criterion_joint_norms() {
    std::vector<double> grid;
    for (double x = 0.0; x <= 0.99 + 1e-12; x += 1e-3) grid.push_back(x);
    double worst = 1e300;
    for (int n : {2, 3, 4}) worst = std::min(worst, check_joint_norm_infeasible(n, grid).min_joint_residual);
    report(9, worst >= 1e-3, "joint norm equations stay bounded away from solvable", worst);
}

// ---- criterion 10: order-6 composition through z^3 ---------------------

void criterion_composite_order6() {
    BlaschkeProduct psi1(rand_angle(), {rand_disc(0.2, 0.5), rand_disc(0.2, 0.5)});
    BlaschkeProduct phi = compose(psi1, BlaschkeProduct::power(3));
    ClassificationResult r = classify(phi);
    bool ok = r.verdict == Verdict::reducible_partial && r.subspaces.size() == 3;
    double worst = 0.0;
    const int N = 200;
    for (int j = 0; j < 3; ++j) {
        SubspaceBasis S = monomial_class_subspace(Space::Dirichlet, N, j, 3, N, "class");
        ResidualReport rr = reducing_residual(S, phi, 1e-7);
        worst = std::max(worst, std::max(rr.invariance_residual, rr.adjoint_invariance_residual));
    }
    report(10, ok && worst <= 1e-7, "order-6 composition splits into three graded subspaces",
           worst);
}

}  // namespace

int main() {
    criterion_orthogonal_powers();
    criterion_distinguished_subspace();
    criterion_kernel_sum();
    criteria_ground_truth_pushforward_orthogonality();
    criterion_probe();
    criterion_lattice();
    criterion_joint_norms();
    criterion_composite_order6();
    if (failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
