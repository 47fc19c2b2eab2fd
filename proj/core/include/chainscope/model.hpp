#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainscope {

enum class Architecture { FabricLike, QuorumLike };

enum class NodeRole { Client, Peer, Orderer, QuorumNode };

std::string to_string(Architecture a);
std::string to_string(NodeRole r);

/// One participant of the simulated deployment. `node_id` is unique across
/// the whole network; `local_index` counts within the role (peer 0, peer 1, ...).
struct NodeDescriptor {
    uint32_t node_id = 0;
    NodeRole role = NodeRole::Client;
    uint32_t local_index = 0;
    uint32_t org_id = 0;
    bool raft_leader = false;
    bool anchor_peer = false;  // gossip leader of its org (Fabric)

    std::string name() const;
};

/// Hardware envelope of one host. Defaults mirror a 16 vCPU / 64 GiB / 1 Gbps
/// cloud instance.
struct HostCapacity {
    uint32_t n_cores = 16;
    double core_capacity_ms = 1000.0;      // cpu-milliseconds per second per core
    double nic_bandwidth_bps = 125'000'000; // bytes per second (1 Gbps)
    double mem_total_bytes = 64.0 * 1024 * 1024 * 1024;
    double disk_bandwidth_bps = 200'000'000;
};

/// One load step: a target request rate held for `duration_s` seconds with
/// linear ramp-up/down at the edges. The ramp seconds are excluded from
/// every measurement (the "trimmed window").
struct RateStep {
    double f_req = 0.0;     // aggregate target requests per second
    uint32_t duration_s = 20;
    uint32_t ramp_head_s = 3;
    uint32_t ramp_tail_s = 3;

    uint32_t window_start() const { return ramp_head_s; }
    uint32_t window_end() const { return duration_s - ramp_tail_s; }  // exclusive
    uint32_t window_len() const { return window_end() - window_start(); }
};

/// Per-node resource snapshot for one second of a run.
struct MetricSample {
    uint32_t t = 0;          // integer second since step start
    uint32_t node_id = 0;
    std::vector<double> cpu_per_core;  // fractions in [0,1], length n_cores
    double net_in_bps = 0.0;
    double net_out_bps = 0.0;
    double mem_used = 0.0;   // fraction in [0,1]
    double disk_util = 0.0;  // fraction in [0,1]

    double cpu_mean() const;
};

enum class TxOutcome { Confirmed, Rejected, PendingAtEnd };

/// Life record of one submitted transaction.
struct TxEvent {
    uint64_t tx_id = 0;
    uint32_t client_id = 0;     // node_id of the submitting client
    double t_submit = 0.0;      // seconds, fractional
    std::optional<double> t_settle;  // confirmation or rejection time
    TxOutcome outcome = TxOutcome::PendingAtEnd;
};

/// Per-second pool occupancy sample (Quorum only).
struct PoolSample {
    uint32_t t = 0;
    uint32_t client_id = 0;
    uint32_t executable = 0;
    uint32_t non_executable = 0;
};

/// Simulator-side ground truth counters, kept out of the metrics schema but
/// handy for cross-checking analysis results against construction.
struct GroundTruth {
    double block_bytes_per_s = 0.0;     // mean block payload+header bytes/s on one orderer->peer edge
    uint64_t blocks_cut = 0;
    uint64_t submitted = 0;
    uint64_t confirmed = 0;
    uint64_t rejected = 0;
    uint64_t pending_at_end = 0;
    std::vector<double> edge_bytes_out;  // per node: total bytes sent
    std::vector<double> edge_bytes_in;   // per node: total bytes received
};

/// Everything one benchmark step produced.
struct RunRecord {
    RateStep step;
    uint64_t seed = 0;
    std::vector<MetricSample> samples;   // every (node, second)
    std::vector<TxEvent> tx_log;
    std::vector<double> f_resp_series;   // per-second confirmed count, length duration_s
    std::vector<PoolSample> pool_series; // Quorum only
    GroundTruth truth;

    /// Mean confirmed rate over the trimmed window.
    double mean_f_resp_window() const;
};

struct Topology {
    uint32_t clients = 16;
    uint32_t peers = 8;     // Fabric peers or Quorum nodes
    uint32_t orderers = 4;  // Fabric only
    uint32_t orgs = 4;      // Fabric only
};

/// Batching parameters of the single block-cutting stage.
struct Batching {
    uint32_t block_size = 100;      // transactions per block
    double block_timeout_s = 0.25;  // cut a partial block after this long
};

enum class ConstraintKind {
    ClientExecutableCap,
    ClientNonExecutableCap,
    PoolExecutableCap,
    PoolNonExecutableCap,
    StageRateCap,
};

std::string to_string(ConstraintKind k);

/// An injectable limit that creates a known bottleneck.
struct Constraint {
    ConstraintKind kind = ConstraintKind::ClientExecutableCap;
    double value = 0.0;        // cap; infinity disables
    std::string stage_id;      // StageRateCap only

    static Constraint client_executable_cap(double v);
    static Constraint client_non_executable_cap(double v);
    static Constraint pool_executable_cap(double v);
    static Constraint pool_non_executable_cap(double v);
    static Constraint stage_rate_cap(std::string stage, double tx_per_s);
};

/// Per-stage / per-edge overrides of the calibrated cost defaults.
struct CostOverride {
    std::string stage_id;
    std::optional<double> cpu_cost_ms;
    std::optional<double> disk_bytes_per_tx;
};

struct EdgeOverride {
    std::string edge_id;
    std::optional<double> bytes_per_tx;
    std::optional<double> bytes_per_block_header;
};

struct CostModelConfig {
    std::vector<CostOverride> stage_overrides;
    std::vector<EdgeOverride> edge_overrides;
    std::optional<Batching> batching;
};

/// Throughput-localization policy (see controller.hpp for semantics).
struct ControllerPolicy {
    double base_rate = 400.0;
    double increment = 200.0;        // Quorum default 100
    double lag_threshold = 0.05;     // epsilon
    uint32_t retries = 2;
    double restart_fraction = 0.80;
    double increment_shrink = 0.5;
    double resolution_floor = 50.0;
    bool worst_second = false;       // compare worst window second instead of the mean
    uint32_t max_rounds = 8;
    double max_rate = 1e6;
};

struct SweepSpec {
    double rate_min = 0.0;   // 0 = use architecture default
    double rate_max = 0.0;
    double rate_step = 0.0;

    std::vector<double> rates() const;
};

struct ExperimentConfig {
    Architecture architecture = Architecture::FabricLike;
    Topology topology;
    HostCapacity host;
    RateStep step_shape;             // duration / ramps applied to every step
    CostModelConfig cost_model;
    ControllerPolicy controller;
    std::vector<Constraint> constraints;
    SweepSpec sweep;
    uint64_t seed = 1;

    static ExperimentConfig fabric_default();
    static ExperimentConfig quorum_default();
};

struct Violation {
    std::string field;
    std::string message;
};

/// A configuration that passed validation; derived facts (leader and anchor
/// assignments, default constraints and sweep) have been filled in.
class ValidatedConfig {
  public:
    const ExperimentConfig& get() const { return cfg_; }
    const ExperimentConfig* operator->() const { return &cfg_; }

  private:
    friend struct ConfigValidator;
    explicit ValidatedConfig(ExperimentConfig cfg) : cfg_(std::move(cfg)) {}
    ExperimentConfig cfg_;
};

struct ValidationResult {
    std::optional<ValidatedConfig> config;
    std::vector<Violation> violations;

    bool ok() const { return config.has_value(); }
};

/// Checks invariants and fills defaults. Idempotent: re-validating the
/// contained config yields the same config.
ValidationResult validate_config(const ExperimentConfig& cfg);

/// Deterministic node enumeration; pure function of the config.
std::vector<NodeDescriptor> derive_node_set(const ValidatedConfig& cfg);

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what, std::vector<Violation> v = {})
        : std::runtime_error(what), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

}  // namespace chainscope
