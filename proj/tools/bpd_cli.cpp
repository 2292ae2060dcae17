// Command-line front end: classification and verification reports for
// finite Blaschke products on the Dirichlet space.
//
// Exit codes: 0 all checks pass, 1 check failures, 2 input errors,
// 3 numerical tolerance breakdown.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpd/instance.hpp"
#include "bpd/operators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_numerical = 3;

// Serialize with a trailing newline, via a temporary in the same
// directory so readers never observe a partial file.
void write_atomic(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write " + tmp.string());
        out << bytes;
        if (!out.flush()) throw std::invalid_argument("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

void emit(const json& j, const std::string& output) {
    std::string bytes = j.dump(2) + "\n";
    if (output.empty())
        std::cout << bytes;
    else
        write_atomic(output, bytes);
}

bool any_check_failed(const bpd::Report& rep) {
    return std::any_of(rep.checks.begin(), rep.checks.end(),
                       [](const bpd::CheckRecord& c) { return !c.passed; });
}

struct BatchOutcome {
    std::string stem;
    bool parsed = false;
    bool numerical = false;
    std::string error;
    bpd::Report report;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reducing subspaces of Blaschke multiplication operators on the Dirichlet space"};
    app.require_subcommand(1);
    app.fallthrough();

    bpd::HarnessConfig cfg;
    std::string output;
    app.add_option("--truncation", cfg.truncation, "Coefficient window override (0 = automatic)");
    app.add_option("--tol", cfg.tol_red, "Reducing-residual tolerance");
    app.add_option("--probe-size", cfg.probe_size, "Commutant probe window (capped at 32)");
    app.add_option("--quadrature", cfg.quadrature, "Circle quadrature nodes (0 = automatic)");
    app.add_option("--output", output, "Write output to this path instead of stdout");
    app.add_option("--seed", cfg.seed, "Seed for instance generation");

    std::string in_file, batch_dir, family = "generic";
    int lattice_n = 2, gen_count = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "Classify one instance file");
    analyze->add_option("file", in_file, "Instance JSON file")->required();
    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("file", in_file, "Instance JSON file")->required();
    CLI::App* probe = app.add_subcommand("probe", "Commutant dimension probe");
    probe->add_option("file", in_file, "Instance JSON file")->required();
    CLI::App* lattice = app.add_subcommand("lattice", "Reducing-subspace lattice of z^n");
    lattice->add_option("--n", lattice_n, "Power of z")->required();
    CLI::App* gen = app.add_subcommand("gen", "Generate pseudo-random instances");
    gen->add_option("--family", family,
                    "generic | equiv_zn | even_composite | psi_squared | moebius_power");
    gen->add_option("--count", gen_count, "Number of instances");
    CLI::App* batch = app.add_subcommand("batch", "Verify every instance file in a directory");
    batch->add_option("dir", batch_dir, "Directory of instance JSON files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze || *verify) {
            bpd::InstanceSpec spec = bpd::parse_instance_file(in_file, cfg.delta);
            bpd::Report rep =
                *verify ? bpd::run_verify_suite(spec, cfg) : bpd::run_classify_report(spec, cfg);
            emit(bpd::report_json(rep), output);
            if (any_check_failed(rep)) return exit_check_failure;
            if (!rep.classification.inconsistencies.empty()) return exit_check_failure;
            return exit_ok;
        }

        if (*probe) {
            bpd::InstanceSpec spec = bpd::parse_instance_file(in_file, cfg.delta);
            bpd::BlaschkeProduct phi = bpd::instance_product(spec, cfg.delta);
            int N = std::clamp(cfg.probe_size, 8, 32);
            bpd::CommutantProbeResult res =
                bpd::commutant_probe(phi, bpd::Space::Dirichlet, N, 1e-6);
            json j = {{"instance", bpd::instance_json(spec)},
                      {"probe_size", N},
                      {"singular_values", res.singular_values},
                      {"estimated_dimension", res.estimated_dimension},
                      {"gap_ratio", res.gap_ratio},
                      {"conclusive", res.conclusive}};
            emit(j, output);
            return exit_ok;
        }

        if (*lattice) {
            if (lattice_n < 2 || lattice_n > 16)
                throw std::invalid_argument("lattice: --n must be between 2 and 16");
            std::vector<bpd::SubspaceBasis> subs = bpd::enumerate_zn_lattice(lattice_n, 96);
            bpd::BlaschkeProduct zn = bpd::BlaschkeProduct::power(lattice_n);
            double worst = 0.0;
            json entries = json::array();
            for (const bpd::SubspaceBasis& S : subs) {
                bpd::ResidualReport r = bpd::reducing_residual(S, zn, 1e-12);
                double resid = std::max(r.invariance_residual, r.adjoint_invariance_residual);
                worst = std::max(worst, resid);
                entries.push_back(
                    {{"label", S.label}, {"dim", S.dim()}, {"reducing_residual", resid}});
            }
            long expected = (1L << lattice_n) - 2;
            json j = {{"n", lattice_n},
                      {"count", static_cast<long>(subs.size())},
                      {"expected_count", expected},
                      {"max_reducing_residual", worst},
                      {"subspaces", std::move(entries)}};
            emit(j, output);
            bool ok = static_cast<long>(subs.size()) == expected && worst <= 1e-12;
            return ok ? exit_ok : exit_check_failure;
        }

        if (*gen) {
            std::vector<bpd::InstanceSpec> specs =
                bpd::gen_instances(family, gen_count, cfg.seed);
            if (!output.empty()) {
                fs::create_directories(output);
                for (const bpd::InstanceSpec& s : specs)
                    write_atomic(fs::path(output) / (s.label + ".json"),
                                 bpd::instance_json(s).dump(2) + "\n");
            } else {
                for (const bpd::InstanceSpec& s : specs)
                    std::cout << bpd::instance_json(s).dump() << "\n";
            }
            return exit_ok;
        }

        // batch
        if (!fs::is_directory(batch_dir))
            throw std::invalid_argument("batch: not a directory: " + batch_dir);
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(batch_dir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw std::invalid_argument("batch: no .json instance files in " + batch_dir);

        fs::path outdir = output.empty() ? fs::path(batch_dir) / "reports" : fs::path(output);
        fs::create_directories(outdir);

        std::vector<BatchOutcome> outcomes(files.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(files.size()); ++i) {
            BatchOutcome& o = outcomes[static_cast<size_t>(i)];
            o.stem = files[static_cast<size_t>(i)].stem().string();
            try {
                bpd::InstanceSpec spec =
                    bpd::parse_instance_file(files[static_cast<size_t>(i)].string(), cfg.delta);
                o.report = bpd::run_verify_suite(spec, cfg);
                o.parsed = true;
            } catch (const bpd::numerical_failure& e) {
                o.numerical = true;
                o.error = e.what();
            } catch (const std::exception& e) {
                o.error = e.what();
            }
        }

        bool parse_error = false, numerical = false, failed = false;
        std::map<std::string, long> verdicts;
        struct CheckAgg {
            double max_residual = 0.0;
            long failures = 0;
            long runs = 0;
        };
        std::map<std::string, CheckAgg> agg;
        for (const BatchOutcome& o : outcomes) {
            if (!o.parsed) {
                (o.numerical ? numerical : parse_error) = true;
                std::cerr << o.stem << ": " << o.error << "\n";
                continue;
            }
            write_atomic(outdir / (o.stem + ".report.json"),
                         bpd::report_json(o.report).dump(2) + "\n");
            ++verdicts[bpd::verdict_name(o.report.classification.verdict)];
            for (const bpd::CheckRecord& c : o.report.checks) {
                CheckAgg& a = agg[c.check_id];
                a.max_residual = std::max(a.max_residual, c.residual);
                a.failures += c.passed ? 0 : 1;
                ++a.runs;
                failed = failed || !c.passed;
            }
            failed = failed || !o.report.classification.inconsistencies.empty();
        }

        json jv = json::object(), jc = json::object();
        for (const auto& [k, v] : verdicts) jv[k] = v;
        for (const auto& [k, a] : agg)
            jc[k] = {{"max_residual", a.max_residual}, {"failures", a.failures}, {"runs", a.runs}};
        json summary = {{"instances", static_cast<long>(files.size())},
                        {"verdicts", std::move(jv)},
                        {"checks", std::move(jc)}};
        write_atomic(outdir / "summary.json", summary.dump(2) + "\n");

        if (parse_error) return exit_input_error;
        if (numerical) return exit_numerical;
        return failed ? exit_check_failure : exit_ok;
    } catch (const bpd::numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
