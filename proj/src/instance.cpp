#include "bpd/instance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "bpd/operators.hpp"
#include "bpd/spaces.hpp"

namespace bpd {
namespace {

using nlohmann::json;
using clock_type = std::chrono::steady_clock;

constexpr double kZeroAtOriginTol = 1e-12;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

// Fixed low-degree polynomials used by the bilinear identity checks; any
// generic pair works, these are hard-coded so reports stay deterministic.
CoeffVector fixed_poly(Space space, int which, int N) {
    std::vector<cplx> c(static_cast<size_t>(N) + 1, cplx{0.0, 0.0});
    std::mt19937_64 rng(0x5eedf00dULL + static_cast<unsigned long long>(which));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k <= std::min(N, 8); ++k) c[static_cast<size_t>(k)] = cplx(u(rng), u(rng));
    return CoeffVector(PowerSeries::polynomial(std::move(c)), space);
}

bool has_zero_at_origin(const BlaschkeProduct& phi) {
    for (cplx z : phi.zeros())
        if (std::abs(z) <= kZeroAtOriginTol) return true;
    return false;
}

bool is_even_symbol(const PowerSeries& t) {
    double scale = 0.0, odd = 0.0;
    for (int k = 0; k <= t.truncation(); ++k) {
        double a = std::abs(t.coeff(k));
        scale = std::max(scale, a);
        if (k % 2 == 1) odd = std::max(odd, a);
    }
    return scale > 0.0 && odd <= 1e-10 * scale;
}

// zeros multiset equal to {0, 0, gamma, gamma} with gamma != 0
cplx psi_squared_gamma(const BlaschkeProduct& phi) {
    if (phi.order() != 4) return {0.0, 0.0};
    std::vector<cplx> at_zero, rest;
    for (cplx z : phi.zeros())
        (std::abs(z) <= 1e-9 ? at_zero : rest).push_back(z);
    if (at_zero.size() != 2 || rest.size() != 2) return {0.0, 0.0};
    if (std::abs(rest[0] - rest[1]) > 1e-9) return {0.0, 0.0};
    cplx g = 0.5 * (rest[0] + rest[1]);
    return std::abs(g) > 1e-6 ? g : cplx{0.0, 0.0};
}

struct CheckBuilder {
    std::vector<CheckRecord>& out;

    void add(const std::string& id, const std::string& anchor, double residual, double tol,
             clock_type::time_point t0) {
        out.push_back({id, anchor, residual, tol, residual <= tol, ms_since(t0)});
    }
};

double rel(double err, double scale) { return err / std::max(1.0, scale); }

}  // namespace

int verify_truncation(const BlaschkeProduct& phi, const HarnessConfig& config) {
    if (config.truncation > 0) return config.truncation;
    double r = std::max(phi.max_zero_modulus(), 0.3);
    int base = default_truncation(r, 1e-13);
    int spread = static_cast<int>(10.0 * phi.order() * (1.0 + r) / (1.0 - r));
    return std::min(4096, std::max({64, base + 8 * phi.order() + 16, spread + 64}));
}

InstanceSpec parse_instance(const json& j, double delta) {
    if (!j.is_object()) throw std::invalid_argument("instance: top-level JSON object expected");
    InstanceSpec spec;
    if (j.contains("label")) {
        if (!j["label"].is_string())
            throw std::invalid_argument("instance: \"label\" must be a string");
        spec.label = j["label"].get<std::string>();
    }
    if (!j.contains("phase") || !j["phase"].is_number())
        throw std::invalid_argument("instance: numeric \"phase\" field required");
    spec.phase = j["phase"].get<double>();
    if (!std::isfinite(spec.phase)) throw std::invalid_argument("instance: phase must be finite");
    if (!j.contains("zeros") || !j["zeros"].is_array() || j["zeros"].empty())
        throw std::invalid_argument("instance: non-empty \"zeros\" array required");
    for (const auto& zj : j["zeros"]) {
        if (!zj.is_array() || zj.size() != 2 || !zj[0].is_number() || !zj[1].is_number())
            throw std::invalid_argument("instance: each zero must be a [re, im] number pair");
        cplx z(zj[0].get<double>(), zj[1].get<double>());
        if (!is_finite(z)) throw std::invalid_argument("instance: zero has non-finite component");
        if (std::abs(z) > 1.0 - delta) {
            std::ostringstream msg;
            msg << "instance: zero (" << z.real() << ", " << z.imag() << ") has modulus "
                << std::abs(z) << " > " << (1.0 - delta);
            throw std::invalid_argument(msg.str());
        }
        spec.zeros.push_back(z);
    }
    return spec;
}

InstanceSpec parse_instance_file(const std::string& path, double delta) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": JSON parse error: " + e.what());
    }
    try {
        return parse_instance(j, delta);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

json instance_json(const InstanceSpec& spec) {
    json j;
    if (!spec.label.empty()) j["label"] = spec.label;
    j["phase"] = spec.phase;
    json zs = json::array();
    for (cplx z : spec.zeros) zs.push_back({z.real(), z.imag()});
    j["zeros"] = std::move(zs);
    return j;
}

BlaschkeProduct instance_product(const InstanceSpec& spec, double delta) {
    return BlaschkeProduct(spec.phase, spec.zeros, delta);
}

Report run_classify_report(const InstanceSpec& spec, const HarnessConfig& config) {
    Report rep;
    rep.spec = spec;
    rep.config = config;
    BlaschkeProduct phi = instance_product(spec, config.delta);
    ClassifyOptions opt;
    opt.truncation = config.truncation;
    opt.tol_red = config.tol_red;
    rep.classification = classify(phi, opt);
    return rep;
}

Report run_verify_suite(const InstanceSpec& spec, const HarnessConfig& config) {
    Report rep = run_classify_report(spec, config);
    BlaschkeProduct phi = instance_product(spec, config.delta);
    const int n = phi.order();
    const int N = verify_truncation(phi, config);
    PowerSeries t = phi.taylor(N);
    CheckBuilder cb{rep.checks};

    {  // powers of phi are orthogonal in D exactly when phi(0) = 0
        auto t0 = clock_type::now();
        if (std::abs(t.coeff(0)) <= kZeroAtOriginTol) {
            std::vector<CoeffVector> pow;
            PowerSeries cur = PowerSeries::polynomial({cplx{1.0, 0.0}});
            cur = series_resize(cur, N);
            for (int k = 0; k <= 8; ++k) {
                pow.emplace_back(cur, Space::Dirichlet);
                cur = series_mul(cur, t);
            }
            double worst = 0.0;
            for (int a = 0; a < 9; ++a)
                for (int b = a + 1; b < 9; ++b)
                    worst = std::max(worst, std::abs(inner(pow[static_cast<size_t>(a)],
                                                          pow[static_cast<size_t>(b)])) /
                                                (norm(pow[static_cast<size_t>(a)]) *
                                                 norm(pow[static_cast<size_t>(b)])));
            cb.add("orthogonal_powers", "if and only if φ(0) = 0", worst, 1e-8, t0);
        } else {
            CoeffVector f(t, Space::Dirichlet);
            CoeffVector one(series_resize(PowerSeries::polynomial({cplx{1.0, 0.0}}), N),
                            Space::Dirichlet);
            double resid = std::abs(inner(f, one) - phi.eval(cplx{0.0, 0.0}));
            cb.add("inner_product_with_one", "if and only if φ(0) = 0", resid, 1e-10, t0);
        }
    }

    {  // boundary identity: z phi'(z) conj(phi(z)) equals the Poisson sum on |z| = 1
        auto t0 = clock_type::now();
        double worst = 0.0;
        const int M = 256;
        for (int m = 0; m < M; ++m) {
            cplx zeta = unit(2.0 * pi * m / M);
            cplx lhs = zeta * phi.derivative_eval(zeta) * std::conj(phi.eval(zeta));
            double rhs = 0.0;
            for (cplx lam : phi.zeros()) rhs += poisson_eval(lam, zeta);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        cb.add("boundary_poisson_sum", "the fact that zφ′φ̄", worst, 1e-8,
               t0);
    }

    {  // the D / Hardy / Bergman bridge on fixed polynomials
        auto t0 = clock_type::now();
        CoeffVector p = fixed_poly(Space::Dirichlet, 1, N);
        CoeffVector q = fixed_poly(Space::Dirichlet, 2, N);
        cplx lhs = inner(p, q);
        CoeffVector up = u_map(p), uq = u_map(q);
        cplx rhs_bergman = inner(up, uq);
        // <(zp)', q>_{H^2} with both factors as Hardy vectors
        CoeffVector up_h(up.coeffs, Space::Hardy), q_h(q.coeffs, Space::Hardy);
        cplx rhs_hardy = inner(up_h, q_h);
        double resid = std::max(std::abs(lhs - rhs_bergman), std::abs(lhs - rhs_hardy));
        cb.add("dirichlet_hardy_bridge", "⟨p, q⟩_D = ⟨(zp)′, q⟩_{H²}",
               rel(resid, std::abs(lhs)), 1e-12, t0);
    }

    PowerSeries dt = series_derivative(t);
    {  // multiplication adjoint annihilates phi' in the Bergman space
        auto t0 = clock_type::now();
        CoeffVector dphi(dt, Space::Bergman);
        double resid = norm(adjoint_apply(phi, dphi)) / norm(dphi);
        cb.add("adjoint_annihilates_derivative", "M₀(φ) = span{φ′φʲ",
               resid, 1e-9, t0);
    }
    {  // adjoint ladder (phi^{j+1})' -> (phi^j)'
        auto t0 = clock_type::now();
        double worst = 0.0;
        PowerSeries cur = t;  // phi^{j+1} for j = 0
        PowerSeries prev = series_resize(PowerSeries::polynomial({cplx{1.0, 0.0}}), N);
        for (int j = 0; j <= 5; ++j) {
            CoeffVector hi(series_derivative(cur), Space::Bergman);
            CoeffVector lo(series_derivative(prev), Space::Bergman);
            CoeffVector img = adjoint_apply(phi, hi);
            CoeffVector diff(series_add(img.coeffs, series_scale(cplx{-1.0, 0.0}, lo.coeffs)),
                             Space::Bergman);
            double denom = j == 0 ? 1.0 : norm(lo);
            worst = std::max(worst, norm(diff) / std::max(1.0, denom));
            prev = cur;
            cur = series_mul(cur, t);
        }
        cb.add("adjoint_derivative_ladder", "M₀(φ) = span{φ′φʲ", worst,
               1e-8, t0);
    }
    {  // Bergman norms of phi' phi^j
        auto t0 = clock_type::now();
        double worst = 0.0;
        PowerSeries cur = dt;
        for (int j = 0; j <= 10; ++j) {
            CoeffVector f(cur, Space::Bergman);
            double n2 = norm(f);
            double expect = static_cast<double>(n) / (j + 1);
            worst = std::max(worst, std::abs(n2 * n2 - expect) / expect);
            cur = series_mul(cur, t);
        }
        cb.add("derivative_power_norms", "= n/(j+1)", worst, 1e-8, t0);
    }

    {  // explicit basis of the orthogonal complement of the distinguished subspace
        auto t0 = clock_type::now();
        std::vector<cplx> others;
        int zeros_at_origin = 0;
        for (cplx z : phi.zeros()) {
            if (std::abs(z) <= kZeroAtOriginTol)
                ++zeros_at_origin;
            else
                others.push_back(z);
        }
        bool distinct = zeros_at_origin == 1;
        for (size_t a = 0; a < others.size() && distinct; ++a) {
            if (std::abs(others[a]) < 1e-6) distinct = false;
            for (size_t b = a + 1; b < others.size(); ++b)
                if (std::abs(others[a] - others[b]) < 1e-6) distinct = false;
        }
        if (distinct && !others.empty()) {
            std::vector<CoeffVector> m0;  // phi^k phi'
            PowerSeries cur = dt;
            for (int k = 0; k <= 4; ++k) {
                m0.emplace_back(cur, Space::Bergman);
                cur = series_mul(cur, t);
            }
            double worst = 0.0;
            for (cplx lam : others) {
                std::vector<cplx> kc(static_cast<size_t>(N) + 1);
                for (int k = 0; k <= N; ++k) kc[static_cast<size_t>(k)] = std::pow(std::conj(lam), k);
                PowerSeries ks = PowerSeries::with_decay(std::move(kc), std::abs(lam));
                PowerSeries curj = ks;
                for (int j = 0; j <= 4; ++j) {
                    CoeffVector g(curj, Space::Bergman);
                    for (const CoeffVector& f : m0)
                        worst = std::max(worst, std::abs(inner(g, f)) / (norm(g) * norm(f)));
                    curj = series_mul(curj, t);
                }
            }
            cb.add("distinguished_complement_basis",
                   "M₀(φ)^⊥ = span{φʲ/(1−λ̄ᵢz)",
                   worst, 1e-8, t0);
        }
    }

    if (has_zero_at_origin(phi)) {  // adjoint of phi/z against kernel sum
        auto t0 = clock_type::now();
        CoeffVector f(series_shift_down(t, 1e-9), Space::Dirichlet);
        CoeffVector img = adjoint_apply(phi, f);
        // remaining zeros after factoring a single z
        std::vector<cplx> rest = phi.zeros();
        auto it = std::min_element(rest.begin(), rest.end(),
                                   [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
        rest.erase(it);
        PowerSeries target = series_resize(PowerSeries::polynomial({cplx{0.0, 0.0}}), N);
        for (cplx lam : rest) {
            CoeffVector K = kernel_vector(lam, Space::Dirichlet, N);
            target = series_add(target, series_scale(std::conj(lam), K.coeffs));
        }
        CoeffVector diff(series_add(img.coeffs, series_scale(cplx{-1.0, 0.0}, target)),
                         Space::Dirichlet);
        cb.add("adjoint_kernel_sum", "λ₁ = ⋯ = λ_{n−1} = 0", norm(diff),
               1e-8, t0);
    }

    {  // f -> (zf)' is an isometry D -> Bergman
        auto t0 = clock_type::now();
        CoeffVector f = fixed_poly(Space::Dirichlet, 3, N);
        CoeffVector uf = u_map(f);
        double resid = std::abs(norm(uf) - norm(f)) / norm(f);
        CoeffVector back = u_map_inverse(uf);
        CoeffVector diff(series_add(back.coeffs, series_scale(cplx{-1.0, 0.0}, f.coeffs)),
                         Space::Dirichlet);
        resid = std::max(resid, norm(diff) / norm(f));
        cb.add("derivative_shift_isometry", "(zM)' is a reducing subspace", resid, 1e-12, t0);
    }

    {  // Dirichlet distortion of multiplication by phi^k
        auto t0 = clock_type::now();
        CoeffVector f = fixed_poly(Space::Dirichlet, 4, N);
        CoeffVector g = fixed_poly(Space::Dirichlet, 5, N);
        const int M = config.quadrature > 0 ? config.quadrature
                                            : std::max(512, default_quadrature_nodes(t));
        auto fw = [&](cplx zeta) {
            double ps = 0.0;
            for (cplx lam : phi.zeros()) ps += poisson_eval(lam, zeta);
            return f.eval(zeta) * ps;
        };
        auto gw = [&](cplx zeta) { return g.eval(zeta); };
        cplx boundary = circle_pair_integral(fw, gw, M);
        double worst = 0.0;
        PowerSeries fk = f.coeffs, gk = g.coeffs;
        cplx d0 = dirichlet_energy_pair(f, g);
        for (int k = 1; k <= 5; ++k) {
            fk = series_mul(fk, t);
            gk = series_mul(gk, t);
            cplx dk = dirichlet_energy_pair(CoeffVector(fk, Space::Dirichlet),
                                            CoeffVector(gk, Space::Dirichlet));
            worst = std::max(worst,
                             std::abs(dk - d0 - static_cast<double>(k) * boundary) /
                                 std::max(1.0, std::abs(dk)));
        }
        cb.add("distortion_formula", "D(φᵏf, φᵏg)", worst, 1e-8, t0);
    }

    if (cplx gamma = psi_squared_gamma(phi); std::abs(gamma) > 0.0) {
        // adjoint recurrence on psi^{2j+1}/z for phi = b (z phi_gamma)^2
        auto t0 = clock_type::now();
        cplx b_conj = std::conj(phi.unimodular());
        PowerSeries base = BlaschkeProduct(0.0, {cplx{0.0, 0.0}, cplx{0.0, 0.0}, gamma, gamma})
                               .taylor(N);  // psi^2
        PowerSeries v = BlaschkeProduct::factor(gamma).taylor(N);  // psi/z = phi_gamma
        double worst = 0.0;
        PowerSeries prev;
        for (int j = 0; j <= 4; ++j) {
            CoeffVector vj(v, Space::Dirichlet);
            CoeffVector img = adjoint_apply(phi, vj);
            PowerSeries expect;
            if (j == 0) {
                expect = series_resize(PowerSeries::polynomial({cplx{0.0, 0.0}}), N);
            } else {
                double c = (2.0 * j + 1.0) / (2.0 * j - 1.0);
                expect = series_scale(b_conj * c, prev);
            }
            CoeffVector diff(series_add(img.coeffs, series_scale(cplx{-1.0, 0.0}, expect)),
                             Space::Dirichlet);
            worst = std::max(worst, norm(diff) / norm(vj));
            prev = v;
            v = series_mul(v, base);
        }
        cb.add("shifted_generator_recurrence", "(2j+1)/(2j−1)", worst, 1e-8, t0);
    }

    if (n == 4 && is_even_symbol(t)) {  // parity subspaces reduce, each with wandering dim 2
        auto t0 = clock_type::now();
        SubspaceBasis even = monomial_class_subspace(Space::Dirichlet, N, 0, 2, N, "M_0_mod_2");
        SubspaceBasis odd = monomial_class_subspace(Space::Dirichlet, N, 1, 2, N, "M_1_mod_2");
        ResidualReport re = reducing_residual(even, phi, config.tol_red);
        ResidualReport ro = reducing_residual(odd, phi, config.tol_red);
        double worst = std::max({re.invariance_residual, re.adjoint_invariance_residual,
                                 ro.invariance_residual, ro.adjoint_invariance_residual});
        int we = wandering_dim(even, phi), wo = wandering_dim(odd, phi);
        if (we != 2 || wo != 2) worst = std::max(worst, 1.0);
        cb.add("parity_wandering", "ker M_φ* ∩ M", worst, config.tol_red, t0);
    }

    {  // joint infeasibility of the unitary-equivalence equations
        auto t0 = clock_type::now();
        std::vector<double> grid;
        for (double x = 0.0; x <= 0.99 + 1e-12; x += 1e-3) grid.push_back(x);
        JointNormScan r41 = check_joint_norm_infeasible(std::max(2, n), grid);
        double resid = std::max(0.0, 1e-3 - r41.min_joint_residual);
        cb.add("joint_norm_equations_infeasible", "Σ |α|^{2nk}/(nk+2) = 1", resid, 0.0, t0);
    }

    {  // critical point count inside the disc
        auto t0 = clock_type::now();
        double resid = 0.0;
        try {
            CriticalSet cs = critical_points(phi);
            int total = 0;
            for (const RootCluster& c : cs.points) total += c.multiplicity;
            resid = std::abs(total - (n - 1));
        } catch (const numerical_failure&) {
            resid = 1.0;
        }
        cb.add("critical_point_count", "has exactly n − 1 zeros in", resid, 0.5, t0);
    }

    {  // minimal reducing subspaces emitted by the classifier are orthogonal
        auto t0 = clock_type::now();
        cb.add("minimal_subspace_orthogonality", "M₁ and M₂ are orthogonal",
               rep.classification.max_pairwise_cross_gram, 1e-8, t0);
    }

    if (n <= 8) {  // full monomial-class lattice for z^n
        auto t0 = clock_type::now();
        std::vector<SubspaceBasis> lattice = enumerate_zn_lattice(n, 96);
        BlaschkeProduct zn = BlaschkeProduct::power(n);
        double worst = lattice.size() == (1u << n) - 2 ? 0.0 : 1.0;
        for (const SubspaceBasis& S : lattice) {
            ResidualReport r = reducing_residual(S, zn, 1e-12);
            worst = std::max({worst, r.invariance_residual, r.adjoint_invariance_residual});
        }
        cb.add("power_lattice_count", "exactly 2ⁿ − 2 proper reducing subspaces", worst,
               1e-12, t0);
    }

    {  // pushforward of the verified reducing subspaces stays reducing in Bergman
        auto t0 = clock_type::now();
        double worst = 0.0;
        for (const ClassifiedSubspace& cs : rep.classification.subspaces) {
            if (!cs.report.reducing) continue;
            SubspaceBasis img = u_pushforward(cs.basis);
            ResidualReport r = reducing_residual(img, phi, config.tol_red);
            worst = std::max({worst, r.invariance_residual, r.adjoint_invariance_residual});
        }
        cb.add("pushforward_reducing", "(zM)' is a reducing subspace", worst, config.tol_red, t0);
    }

    return rep;
}

json report_json(const Report& rep) {
    json j;
    j["instance"] = instance_json(rep.spec);
    const ClassificationResult& c = rep.classification;
    j["order"] = c.order;
    j["verdict"] = verdict_name(c.verdict);

    json w = json::object();
    if (c.witness) {
        const EquivalenceWitness& ew = *c.witness;
        w["equivalence"] = {{"lambda", {ew.lambda.real(), ew.lambda.imag()}},
                            {"phase", ew.phase},
                            {"n", ew.n},
                            {"residual", ew.residual},
                            {"alpha", {ew.alpha.real(), ew.alpha.imag()}}};
    }
    if (!c.decompositions.empty()) {
        json ds = json::array();
        for (const Decomposition& d : c.decompositions) {
            json outer_zeros = json::array(), inner_zeros = json::array();
            for (cplx z : d.outer.zeros()) outer_zeros.push_back({z.real(), z.imag()});
            for (cplx z : d.inner.zeros()) inner_zeros.push_back({z.real(), z.imag()});
            ds.push_back({{"outer_phase", d.outer.phase()},
                          {"outer_zeros", outer_zeros},
                          {"inner_phase", d.inner.phase()},
                          {"inner_zeros", inner_zeros},
                          {"critical_point", {d.critical_point.real(), d.critical_point.imag()}},
                          {"involution_residual", d.involution_residual},
                          {"residual", d.residual}});
        }
        w["decompositions"] = std::move(ds);
    }
    if (c.gamma_mu) {
        w["gamma"] = {c.gamma_mu->first.real(), c.gamma_mu->first.imag()};
        w["mu"] = {c.gamma_mu->second.real(), c.gamma_mu->second.imag()};
    }
    if (c.lattice_count > 0) w["lattice_count"] = c.lattice_count;
    if (!c.inconsistencies.empty()) w["inconsistencies"] = c.inconsistencies;
    j["witnesses"] = std::move(w);

    json subs = json::array();
    for (const ClassifiedSubspace& cs : c.subspaces) {
        json gens = json::array();
        if (cs.basis.dim() > 0) {
            CoeffVector g = cs.basis.vector(0);
            json gc = json::array();
            for (int k = 0; k < std::min(16, g.truncation() + 1); ++k)
                gc.push_back({g.coeff(k).real(), g.coeff(k).imag()});
            gens.push_back(std::move(gc));
        }
        subs.push_back({{"label", cs.basis.label},
                        {"generators", std::move(gens)},
                        {"invariance_residual", cs.report.invariance_residual},
                        {"adjoint_residual", cs.report.adjoint_invariance_residual},
                        {"wandering_dim", cs.wandering}});
    }
    j["subspaces"] = std::move(subs);

    json checks = json::array();
    for (const CheckRecord& cr : rep.checks)
        checks.push_back({{"check_id", cr.check_id},
                          {"paper_anchor", cr.paper_anchor},
                          {"residual", cr.residual},
                          {"tolerance", cr.tolerance},
                          {"passed", cr.passed}});
    j["checks"] = std::move(checks);

    j["config"] = {{"truncation", c.truncation},
                   {"tol_red", rep.config.tol_red},
                   {"probe_size", rep.config.probe_size},
                   {"quadrature", rep.config.quadrature},
                   {"delta", rep.config.delta},
                   {"seed", rep.config.seed}};
    return j;
}

std::vector<InstanceSpec> gen_instances(const std::string& family, int count,
                                        unsigned long long seed) {
    if (count < 0) throw std::invalid_argument("gen_instances: negative count");
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(family));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    auto disc_point = [&](double rmin, double rmax) {
        std::uniform_real_distribution<double> rad(rmin, rmax);
        return std::polar(rad(rng), angle(rng));
    };

    std::vector<InstanceSpec> out;
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.label = family + "_" + std::to_string(i);
        spec.phase = angle(rng);
        if (family == "generic") {
            for (int tries = 0;; ++tries) {
                spec.zeros.clear();
                for (int k = 0; k < 4; ++k) spec.zeros.push_back(disc_point(0.05, 0.65));
                BlaschkeProduct phi(spec.phase, spec.zeros);
                if (is_equivalent_to_zn(phi)) continue;
                if (is_even_symbol(phi.taylor(96))) continue;
                if (is_equiv_z_phi_gamma_sq(phi)) continue;
                bool decomposable = false;
                try {
                    decomposable = !decompose_order4(phi).empty();
                } catch (const numerical_failure&) {
                    decomposable = true;  // ambiguous: resample
                }
                if (!decomposable || tries > 200) break;
            }
        } else if (family == "equiv_zn") {
            int n = 2 + i % 3;
            cplx beta = disc_point(0.05, 0.5);
            cplx root = std::pow(beta, 1.0 / n);
            for (int k = 0; k < n; ++k) spec.zeros.push_back(root * unit(2.0 * pi * k / n));
        } else if (family == "even_composite") {
            cplx a1, a2;
            do {
                a1 = disc_point(0.15, 0.6);
                a2 = disc_point(0.15, 0.6);
            } while (std::abs(a1 - a2) < 0.05 || std::abs(a1 + a2) < 0.05 ||
                     std::abs(a1 - cplx{0.0, 1.0} * a2) < 0.1 ||
                     std::abs(a1 + cplx{0.0, 1.0} * a2) < 0.1);
            spec.zeros = {a1, -a1, a2, -a2};
        } else if (family == "psi_squared") {
            cplx gamma = disc_point(0.1, 0.6);
            BlaschkeProduct base(spec.phase, {cplx{0.0, 0.0}, cplx{0.0, 0.0}, gamma, gamma});
            if (i % 2 == 1) {
                cplx mu = disc_point(0.05, 0.35);
                BlaschkeProduct composed = moebius_post_compose(Moebius(mu), base);
                spec.phase = composed.phase();
                spec.zeros = composed.zeros();
            } else {
                spec.zeros = base.zeros();
            }
        } else if (family == "moebius_power") {
            int n = 3 + i % 3;
            cplx alpha = disc_point(0.2, 0.6);
            spec.zeros.assign(static_cast<size_t>(n), alpha);
        } else {
            throw std::invalid_argument("gen_instances: unknown family \"" + family + "\"");
        }
        out.push_back(std::move(spec));
    }
    return out;
}

}  // namespace bpd
