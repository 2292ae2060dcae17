#include "bpd/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bpd/spaces.hpp"

namespace bpd {

namespace {

constexpr int kSamples = 128;

std::vector<cplx> circle_samples(int M) {
    std::vector<cplx> nodes(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) nodes[size_t(j)] = unit(2.0 * pi * j / M);
    return nodes;
}

double max_circle_diff(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g) {
    double m = 0.0;
    for (cplx z : circle_samples(kSamples)) m = std::max(m, std::abs(f(z) - g(z)));
    return m;
}

double unimodular_defect(cplx c) { return std::abs(std::abs(c) - 1.0); }

/// Best unimodular multiple of an (already unimodular-on-the-circle) model:
/// both sides are Blaschke products, so matching on the circle suffices.
struct PhaseFit {
    cplx c;
    double residual;
};

PhaseFit fit_phase(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& model) {
    cplx z0 = unit(0.37);
    cplx c = f(z0) / model(z0);
    double res = max_circle_diff(f, [&](cplx z) { return c * model(z); });
    return {c, res};
}

bool multiset_rotation_invariant(const std::vector<cplx>& zs, cplx omega, double tol) {
    std::vector<bool> used(zs.size(), false);
    for (cplx z : zs) {
        cplx target = omega * z;
        int best = -1;
        double bestd = 0.0;
        for (size_t j = 0; j < zs.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(zs[j] - target);
            if (best < 0 || d < bestd) {
                best = int(j);
                bestd = d;
            }
        }
        if (best < 0 || bestd > tol) return false;
        used[size_t(best)] = true;
    }
    return true;
}

/// Shared core of the z^n and phi_alpha^n equivalence tests: decides
/// whether the point multiset {b(z_i)} is a full rotation orbit and, if
/// so, verifies phi = c phi_lambda(b^n) pointwise.
std::optional<EquivalenceWitness> rotation_orbit_witness(const BlaschkeProduct& phi, cplx alpha,
                                                         double match_tol, double accept_tol) {
    const int n = phi.order();
    Moebius mb(alpha);
    std::vector<cplx> w;
    for (cplx z : phi.zeros()) w.push_back(alpha == cplx{0.0, 0.0} ? z : mb.eval(z));
    // phi_alpha flips orientation: the transformed zeros of phi_lambda(phi_alpha^n)
    // are still the n-th roots of lambda, so the orbit test is unchanged.
    if (!multiset_rotation_invariant(w, unit(2.0 * pi / n), match_tol)) return std::nullopt;
    cplx lambda{0.0, 0.0};
    for (cplx v : w) lambda += std::pow(v, n);
    lambda /= double(n);
    auto model = [&](cplx z) {
        cplx b = alpha == cplx{0.0, 0.0} ? z : mb.eval(z);
        cplx bn = std::pow(b, n);
        return (lambda - bn) / (1.0 - std::conj(lambda) * bn);
    };
    PhaseFit fit = fit_phase([&](cplx z) { return phi.eval(z); }, model);
    if (unimodular_defect(fit.c) > 1e-8 || fit.residual > accept_tol) return std::nullopt;
    return EquivalenceWitness{lambda, std::arg(fit.c), n, fit.residual, alpha};
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::case_i: return "case_i";
        case Verdict::case_ii: return "case_ii";
        case Verdict::case_iii: return "case_iii";
        case Verdict::case_iv: return "case_iv";
        case Verdict::case_v: return "case_v";
        case Verdict::reducible_zn: return "reducible_zn";
        case Verdict::irreducible: return "irreducible";
        case Verdict::reducible_partial: return "reducible_partial";
        case Verdict::undetermined: return "undetermined";
    }
    return "?";
}

std::optional<EquivalenceWitness> is_equivalent_to_zn(const BlaschkeProduct& phi) {
    if (phi.order() < 2) return std::nullopt;
    return rotation_orbit_witness(phi, cplx{0.0, 0.0}, 1e-8, 1e-9);
}

std::vector<Decomposition> decompose_order4(const BlaschkeProduct& phi) {
    if (phi.order() != 4) throw std::invalid_argument("decompose_order4: order-4 product required");
    CriticalSet crit = critical_points(phi);
    std::vector<cplx> locs;
    for (const RootCluster& rc : crit.points) locs.push_back(rc.location);
    std::vector<RootCluster> candidates = cluster_points(locs, 1e-5);

    std::vector<Decomposition> out;
    for (const RootCluster& cand : candidates) {
        cplx c = cand.location;
        Moebius mc(c);
        auto rho = [&](cplx z) { return mc.eval(-mc.eval(z)); };
        double inv_res = max_circle_diff([&](cplx z) { return phi.eval(rho(z)); },
                                         [&](cplx z) { return phi.eval(z); });
        if (inv_res > 1e-8) continue;

        BlaschkeProduct inner = BlaschkeProduct::from_zeros({c, c}, 1e-9);
        std::vector<cplx> fiber;
        for (cplx z : phi.zeros()) fiber.push_back(inner.eval(z));
        std::vector<RootCluster> fc = cluster_points(fiber, 1e-5);
        std::vector<cplx> outer_zeros;
        if (fc.size() == 2 && fc[0].multiplicity == 2 && fc[1].multiplicity == 2) {
            outer_zeros = {fc[0].location, fc[1].location};
        } else if (fc.size() == 1 && fc[0].multiplicity == 4) {
            outer_zeros = {fc[0].location, fc[0].location};
        } else {
            throw numerical_failure(
                "decompose_order4: fiber values failed to pair up after clustering");
        }
        BlaschkeProduct outer0 = BlaschkeProduct::from_zeros(outer_zeros, 1e-9);
        PhaseFit fit = fit_phase([&](cplx z) { return phi.eval(z); },
                                 [&](cplx z) { return outer0.eval(inner.eval(z)); });
        if (unimodular_defect(fit.c) > 1e-6 || fit.residual > 1e-7)
            throw numerical_failure("decompose_order4: verification of phi = outer(inner) failed");
        BlaschkeProduct outer(std::arg(fit.c), outer_zeros, 1e-9);
        out.push_back(Decomposition{outer, inner, c, inv_res, fit.residual});
    }
    return out;
}

std::optional<std::pair<cplx, cplx>> is_equiv_z_phi_gamma_sq(const BlaschkeProduct& phi) {
    if (phi.order() != 4) return std::nullopt;
    cplx mu = phi.eval(cplx{0.0, 0.0});
    std::vector<RootCluster> pre = preimages(phi, mu);
    std::vector<cplx> pts;
    for (const RootCluster& rc : pre)
        for (int m = 0; m < rc.multiplicity; ++m) pts.push_back(rc.location);
    std::vector<RootCluster> fc = cluster_points(pts, 1e-5);
    if (fc.size() != 2) return std::nullopt;
    const RootCluster* at_zero = nullptr;
    const RootCluster* at_gamma = nullptr;
    for (const RootCluster& rc : fc)
        (std::abs(rc.location) <= 1e-6 ? at_zero : at_gamma) = &rc;
    if (!at_zero || !at_gamma) return std::nullopt;
    if (at_zero->multiplicity != 2 || at_gamma->multiplicity != 2) return std::nullopt;
    cplx gamma = at_gamma->location;
    if (std::abs(gamma) < 1e-3) return std::nullopt;

    Moebius mg(gamma);
    Moebius mmu(mu);
    auto model = [&](cplx z) {
        cplx psi = z * mg.eval(z);
        return psi * psi;
    };
    PhaseFit fit =
        fit_phase([&](cplx z) { return mmu.eval(phi.eval(z)); }, model);
    if (unimodular_defect(fit.c) > 1e-7 || fit.residual > 1e-7) return std::nullopt;
    return std::make_pair(gamma, mu);
}

namespace {

int auto_truncation(const BlaschkeProduct& phi) {
    double rate = std::max(phi.max_zero_modulus(), 0.3);
    int base = default_truncation(rate, 1e-13);
    return std::min(1024, std::max(64, base + 8 * phi.order() + 16));
}

}  // namespace

ClassificationResult classify(const BlaschkeProduct& phi, const ClassifyOptions& opt) {
    ClassificationResult res;
    const int n = phi.order();
    res.order = n;
    const int N = opt.truncation > 0 ? opt.truncation : auto_truncation(phi);
    res.truncation = N;

    auto emit = [&](SubspaceBasis S) {
        ClassifiedSubspace cs;
        cs.report = reducing_residual(S, phi, opt.tol_red);
        if (!cs.report.reducing)
            res.inconsistencies.push_back(
                S.label + ": subspace demanded by the classification fails the reducing check "
                          "(invariance " +
                std::to_string(cs.report.invariance_residual) + ", adjoint " +
                std::to_string(cs.report.adjoint_invariance_residual) + ")");
        cs.wandering = wandering_dim(S, phi);
        cs.basis = std::move(S);
        res.subspaces.push_back(std::move(cs));
    };
    auto emit_monomial_classes = [&](int q) {
        for (int r = 0; r < q; ++r)
            emit(monomial_class_subspace(Space::Dirichlet, N, r, q, N,
                                         "M_" + std::to_string(r) + "_mod_" + std::to_string(q)));
    };
    auto finish = [&]() -> ClassificationResult& {
        for (size_t a = 0; a < res.subspaces.size(); ++a)
            for (size_t b = a + 1; b < res.subspaces.size(); ++b)
                res.max_pairwise_cross_gram =
                    std::max(res.max_pairwise_cross_gram,
                             cross_gram_norm(res.subspaces[a].basis, res.subspaces[b].basis));
        if (res.max_pairwise_cross_gram > 1e-8)
            res.inconsistencies.push_back("emitted subspaces are not pairwise orthogonal (gram " +
                                          std::to_string(res.max_pairwise_cross_gram) + ")");
        return res;
    };

    if (n < 2) {
        res.verdict = Verdict::irreducible;
        return finish();
    }

    if (auto w = is_equivalent_to_zn(phi)) {
        res.verdict = n == 4 ? Verdict::case_i : Verdict::reducible_zn;
        res.witness = w;
        res.lattice_count = (1L << n) - 2;
        emit_monomial_classes(n);
        return finish();
    }

    if (n <= 3) {
        res.verdict = Verdict::irreducible;
        return finish();
    }

    if (n == 4) {
        double even_res = max_circle_diff([&](cplx z) { return phi.eval(-z); },
                                          [&](cplx z) { return phi.eval(z); });
        if (even_res <= 1e-10) {
            res.verdict = Verdict::case_ii;
            emit_monomial_classes(2);
            return finish();
        }
        if (auto gm = is_equiv_z_phi_gamma_sq(phi)) {
            res.verdict = Verdict::case_iii;
            res.gamma_mu = gm;
            // generator phi_gamma = psi/z for the model psi = z phi_gamma.
            // The subspace is the psi^2-orbit of the generator; it depends
            // only on gamma, so take the orbit under the base product even
            // when phi itself carries a Moebius post-composition.
            CoeffVector gen(BlaschkeProduct::factor(gm->first).taylor(N), Space::Dirichlet);
            BlaschkeProduct base(0.0, {cplx{0.0, 0.0}, cplx{0.0, 0.0}, gm->first, gm->first});
            SubspaceBasis M = orbit_subspace({gen}, base, 0, "M");
            SubspaceBasis Mp = complement_subspace(M, N, "M_perp");
            emit(std::move(M));
            emit(std::move(Mp));
            return finish();
        }
        res.decompositions = decompose_order4(phi);
        res.verdict = res.decompositions.empty() ? Verdict::case_v : Verdict::case_iv;
        return finish();
    }

    // order >= 5: largest q > 1 with phi(omega z) = phi(z) gives q graded
    // (not necessarily minimal) reducing subspaces
    for (int q = n; q >= 2; --q) {
        if (n % q != 0) continue;
        double rot_res = max_circle_diff([&](cplx z) { return phi.eval(unit(2.0 * pi / q) * z); },
                                         [&](cplx z) { return phi.eval(z); });
        if (rot_res <= 1e-10) {
            res.verdict = Verdict::reducible_partial;
            res.subspaces_minimal = false;
            emit_monomial_classes(q);
            return finish();
        }
    }

    // Moebius-power test: all zeros at a common alpha != 0 means
    // phi = e^{i theta} phi_alpha^n, which has no reducing subspaces
    {
        cplx alpha{0.0, 0.0};
        for (cplx z : phi.zeros()) alpha += z;
        alpha /= double(n);
        double spread = 0.0;
        for (cplx z : phi.zeros()) spread = std::max(spread, std::abs(z - alpha));
        if (spread <= 1e-9 && std::abs(alpha) > 1e-3) {
            res.verdict = Verdict::irreducible;
            res.witness = EquivalenceWitness{cplx{0.0, 0.0}, 0.0, n, spread, alpha};
            return finish();
        }
    }

    // general attempt phi = c phi_lambda(phi_alpha^n): alpha is then the
    // (n-1)-fold critical point
    {
        CriticalSet crit = critical_points(phi);
        cplx alpha{0.0, 0.0};
        int total = 0;
        for (const RootCluster& rc : crit.points) {
            alpha += double(rc.multiplicity) * rc.location;
            total += rc.multiplicity;
        }
        alpha /= double(total);
        double spread = 0.0;
        for (const RootCluster& rc : crit.points)
            spread = std::max(spread, std::abs(rc.location - alpha));
        if (spread <= 1e-5 && std::abs(alpha) > 1e-3) {
            if (auto w = rotation_orbit_witness(phi, alpha, 1e-6, 1e-9)) {
                res.verdict = Verdict::irreducible;
                res.witness = w;
                return finish();
            }
        }
    }

    res.verdict = Verdict::undetermined;
    return finish();
}

std::vector<SubspaceBasis> enumerate_zn_lattice(int n, int N) {
    if (n < 2 || n > 12) throw std::invalid_argument("enumerate_zn_lattice: n must be in [2,12]");
    if (N < n) throw std::invalid_argument("enumerate_zn_lattice: N too small");
    std::vector<SubspaceBasis> out;
    for (long mask = 1; mask <= (1L << n) - 2; ++mask) {
        std::vector<int> degs;
        for (int k = 0; k <= N; ++k)
            if ((mask >> (k % n)) & 1) degs.push_back(k);
        Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(N + 1, Eigen::Index(degs.size()));
        for (size_t i = 0; i < degs.size(); ++i) Q(degs[i], Eigen::Index(i)) = 1.0;
        SubspaceBasis S;
        S.Q = std::move(Q);
        S.space = Space::Dirichlet;
        std::string label = "classes_";
        for (int r = 0; r < n; ++r) label += ((mask >> r) & 1) ? '1' : '0';
        S.label = std::move(label);
        out.push_back(std::move(S));
    }
    return out;
}

double joint_norm_series(int n, double x) {
    if (n < 1 || x < 0.0 || x >= 1.0)
        throw std::invalid_argument("joint_norm_series: need n >= 1 and 0 <= x < 1");
    double acc = 0.0;
    double p = 1.0;
    for (int k = 0;; ++k) {
        double term = p / double(n * k + 2);
        acc += term;
        if (p < 1e-18) break;
        p *= x;
    }
    return acc;
}

JointNormScan check_joint_norm_infeasible(int n, const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("check_joint_norm_infeasible: empty grid");
    JointNormScan rep;
    rep.n = n;
    bool first = true;
    for (double x : grid) {
        double a = joint_norm_series(n, x);
        double b = a - 0.5;
        double joint = std::max(std::abs(a - 1.0), std::abs(b - 0.5 * x));
        if (first || joint < rep.min_joint_residual) {
            rep.min_joint_residual = joint;
            rep.argmin_x = x;
            first = false;
        }
    }
    return rep;
}

}  // namespace bpd
