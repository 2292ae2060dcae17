#ifndef BPD_INSTANCE_HPP
#define BPD_INSTANCE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bpd/blaschke.hpp"
#include "bpd/classify.hpp"

namespace bpd {

/// Parsed instance file: a Blaschke product given by phase and zeros.
struct InstanceSpec {
    std::string label;
    double phase = 0.0;
    std::vector<cplx> zeros;
};

/// Runtime configuration shared by the CLI subcommands.
struct HarnessConfig {
    int truncation = 0;   // 0 = automatic from coefficient decay
    double tol_red = 1e-7;
    int probe_size = 24;  // capped at 32
    int quadrature = 0;   // 0 = automatic
    double delta = 1e-3;  // zeros must satisfy |lambda| <= 1 - delta
    unsigned long long seed = 0;
};

/// One verification-suite entry; paper_anchor is the fixed identifying
/// quote for the identity being tested.
struct CheckRecord {
    std::string check_id;
    std::string paper_anchor;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_ms = 0.0;  // informational; never serialized
};

struct Report {
    InstanceSpec spec;
    ClassificationResult classification;
    std::vector<CheckRecord> checks;
    HarnessConfig config;
};

/// Throws std::invalid_argument with a descriptive message on malformed
/// input or zeros outside the allowed modulus.
InstanceSpec parse_instance(const nlohmann::json& j, double delta);
InstanceSpec parse_instance_file(const std::string& path, double delta);
nlohmann::json instance_json(const InstanceSpec& spec);

BlaschkeProduct instance_product(const InstanceSpec& spec, double delta);

/// Classification only (the `analyze` subcommand).
Report run_classify_report(const InstanceSpec& spec, const HarnessConfig& config);

/// Classification plus every applicable identity check (`verify`).
Report run_verify_suite(const InstanceSpec& spec, const HarnessConfig& config);

/// Deterministic serialization; identical spec + config give identical
/// output bytes (check runtimes are deliberately omitted).
nlohmann::json report_json(const Report& report);

/// Deterministic pseudo-random instances with known construction labels.
/// Families: generic, equiv_zn, even_composite, psi_squared, moebius_power.
std::vector<InstanceSpec> gen_instances(const std::string& family, int count,
                                        unsigned long long seed);

/// Truncation used by the verify suite for this product (config override
/// or a decay-based automatic choice with headroom for powers up to ~10).
int verify_truncation(const BlaschkeProduct& phi, const HarnessConfig& config);

}  // namespace bpd

#endif
