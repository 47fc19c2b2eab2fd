#include "chainscope/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace chainscope {

std::string to_string(Architecture a) {
    return a == Architecture::FabricLike ? "fabric-like" : "quorum-like";
}

std::string to_string(NodeRole r) {
    switch (r) {
        case NodeRole::Client: return "client";
        case NodeRole::Peer: return "peer";
        case NodeRole::Orderer: return "orderer";
        case NodeRole::QuorumNode: return "quorum-node";
    }
    return "?";
}

std::string to_string(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::ClientExecutableCap: return "client-executable-cap";
        case ConstraintKind::ClientNonExecutableCap: return "client-nonexec-cap";
        case ConstraintKind::PoolExecutableCap: return "pool-exec-cap";
        case ConstraintKind::PoolNonExecutableCap: return "pool-nonexec-cap";
        case ConstraintKind::StageRateCap: return "stage-rate-cap";
    }
    return "?";
}

std::string NodeDescriptor::name() const {
    return to_string(role) + "-" + std::to_string(local_index);
}

double MetricSample::cpu_mean() const {
    if (cpu_per_core.empty()) return 0.0;
    double s = std::accumulate(cpu_per_core.begin(), cpu_per_core.end(), 0.0);
    return s / static_cast<double>(cpu_per_core.size());
}

double RunRecord::mean_f_resp_window() const {
    uint32_t a = step.window_start(), b = step.window_end();
    if (b <= a || f_resp_series.size() < b) return 0.0;
    double s = 0.0;
    for (uint32_t t = a; t < b; ++t) s += f_resp_series[t];
    return s / static_cast<double>(b - a);
}

Constraint Constraint::client_executable_cap(double v) {
    return {ConstraintKind::ClientExecutableCap, v, ""};
}
Constraint Constraint::client_non_executable_cap(double v) {
    return {ConstraintKind::ClientNonExecutableCap, v, ""};
}
Constraint Constraint::pool_executable_cap(double v) {
    return {ConstraintKind::PoolExecutableCap, v, ""};
}
Constraint Constraint::pool_non_executable_cap(double v) {
    return {ConstraintKind::PoolNonExecutableCap, v, ""};
}
Constraint Constraint::stage_rate_cap(std::string stage, double tx_per_s) {
    return {ConstraintKind::StageRateCap, tx_per_s, std::move(stage)};
}

std::vector<double> SweepSpec::rates() const {
    std::vector<double> out;
    if (rate_step <= 0 || rate_max < rate_min) return out;
    for (double r = rate_min; r <= rate_max + 1e-9; r += rate_step) out.push_back(r);
    return out;
}

ExperimentConfig ExperimentConfig::fabric_default() {
    ExperimentConfig cfg;
    cfg.architecture = Architecture::FabricLike;
    cfg.topology = {16, 8, 4, 4};
    cfg.sweep = {200, 2400, 100};
    cfg.controller = ControllerPolicy{};
    return cfg;
}

ExperimentConfig ExperimentConfig::quorum_default() {
    ExperimentConfig cfg;
    cfg.architecture = Architecture::QuorumLike;
    cfg.topology = {16, 8, 0, 0};
    cfg.sweep = {200, 2700, 100};
    cfg.controller = ControllerPolicy{};
    cfg.controller.increment = 100.0;
    return cfg;
}

namespace {

void check_positive(std::vector<Violation>& v, const std::string& field, double x) {
    if (!(x > 0)) v.push_back({field, "must be strictly positive"});
}

}  // namespace

struct ConfigValidator {
    static ValidationResult run(const ExperimentConfig& in) {
        ExperimentConfig cfg = in;
        std::vector<Violation> v;

        if (cfg.topology.clients == 0) v.push_back({"topology.clients", "no clients"});
        if (cfg.topology.peers == 0)
            v.push_back({"topology.peers", cfg.architecture == Architecture::FabricLike
                                               ? "no peers"
                                               : "no nodes"});
        if (cfg.architecture == Architecture::FabricLike) {
            if (cfg.topology.orderers == 0) v.push_back({"topology.orderers", "no orderers"});
            if (cfg.topology.orgs == 0) v.push_back({"topology.orgs", "no orgs"});
            if (cfg.topology.orgs > 0 && cfg.topology.peers % cfg.topology.orgs != 0)
                v.push_back({"topology.peers", "peers must divide evenly into orgs"});
        }

        if (cfg.step_shape.ramp_head_s + cfg.step_shape.ramp_tail_s >= cfg.step_shape.duration_s)
            v.push_back({"step_shape", "empty measurement window: ramps cover the whole step"});
        if (cfg.step_shape.f_req < 0) v.push_back({"step_shape.f_req", "negative rate"});

        check_positive(v, "host.n_cores", cfg.host.n_cores);
        check_positive(v, "host.core_capacity_ms", cfg.host.core_capacity_ms);
        check_positive(v, "host.nic_bandwidth_bps", cfg.host.nic_bandwidth_bps);
        check_positive(v, "host.mem_total_bytes", cfg.host.mem_total_bytes);
        check_positive(v, "host.disk_bandwidth_bps", cfg.host.disk_bandwidth_bps);

        const auto& p = cfg.controller;
        if (!(p.lag_threshold > 0 && p.lag_threshold < 1))
            v.push_back({"controller.lag_threshold", "must be in (0,1)"});
        if (!(p.restart_fraction > 0 && p.restart_fraction < 1))
            v.push_back({"controller.restart_fraction", "must be in (0,1)"});
        if (!(p.increment > p.resolution_floor && p.resolution_floor > 0))
            v.push_back({"controller.increment", "need increment > resolution_floor > 0"});
        if (!(p.increment_shrink > 0 && p.increment_shrink < 1))
            v.push_back({"controller.increment_shrink", "must be in (0,1)"});

        for (const auto& c : cfg.constraints) {
            if (!(c.value > 0))
                v.push_back({"constraints", to_string(c.kind) + ": cap must be positive"});
            if (c.kind == ConstraintKind::StageRateCap && c.stage_id.empty())
                v.push_back({"constraints", "stage-rate-cap needs a stage id"});
            bool pool_kind = c.kind != ConstraintKind::StageRateCap;
            if (pool_kind && cfg.architecture == Architecture::FabricLike)
                v.push_back({"constraints",
                             to_string(c.kind) + ": pool/client caps apply to quorum-like only"});
        }

        if (!v.empty()) return {std::nullopt, std::move(v)};

        // Fill derived facts and defaults.
        if (cfg.sweep.rate_step <= 0) {
            cfg.sweep = cfg.architecture == Architecture::FabricLike
                            ? ExperimentConfig::fabric_default().sweep
                            : ExperimentConfig::quorum_default().sweep;
        }
        if (cfg.architecture == Architecture::QuorumLike) {
            auto has = [&](ConstraintKind k) {
                return std::any_of(cfg.constraints.begin(), cfg.constraints.end(),
                                   [&](const Constraint& c) { return c.kind == k; });
            };
            if (!has(ConstraintKind::ClientExecutableCap))
                cfg.constraints.push_back(Constraint::client_executable_cap(16));
            if (!has(ConstraintKind::ClientNonExecutableCap))
                cfg.constraints.push_back(Constraint::client_non_executable_cap(500));
            if (!has(ConstraintKind::PoolExecutableCap))
                cfg.constraints.push_back(Constraint::pool_executable_cap(4096));
            if (!has(ConstraintKind::PoolNonExecutableCap))
                cfg.constraints.push_back(Constraint::pool_non_executable_cap(10000));
        }

        return {ValidatedConfig(std::move(cfg)), {}};
    }
};

ValidationResult validate_config(const ExperimentConfig& cfg) {
    return ConfigValidator::run(cfg);
}

std::vector<NodeDescriptor> derive_node_set(const ValidatedConfig& vc) {
    const ExperimentConfig& cfg = vc.get();
    std::vector<NodeDescriptor> nodes;
    uint32_t id = 0;

    for (uint32_t i = 0; i < cfg.topology.clients; ++i)
        nodes.push_back({id++, NodeRole::Client, i, 0, false, false});

    if (cfg.architecture == Architecture::FabricLike) {
        uint32_t per_org = cfg.topology.peers / cfg.topology.orgs;
        for (uint32_t i = 0; i < cfg.topology.peers; ++i) {
            NodeDescriptor d{id++, NodeRole::Peer, i, i / per_org, false, false};
            d.anchor_peer = (i % per_org == 0);  // lowest-id peer of each org
            nodes.push_back(d);
        }
        for (uint32_t i = 0; i < cfg.topology.orderers; ++i) {
            NodeDescriptor d{id++, NodeRole::Orderer, i, i % cfg.topology.orgs, false, false};
            d.raft_leader = (i == 0);
            nodes.push_back(d);
        }
    } else {
        for (uint32_t i = 0; i < cfg.topology.peers; ++i) {
            NodeDescriptor d{id++, NodeRole::QuorumNode, i, 0, false, false};
            d.raft_leader = (i == 0);
            nodes.push_back(d);
        }
    }
    return nodes;
}

}  // namespace chainscope
