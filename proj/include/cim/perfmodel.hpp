#pragma once

#include "cim/crossbar.hpp"
#include "cim/engine.hpp"

namespace cim {

// Per-operation cost constants and platform composition for the analytic
// architecture comparison. Latencies in seconds, energies in joules, areas
// in mm². Only the SRAM(L1)/DRAM load energy ratios (50x and 6400x an ALU
// op) are anchored to published figures; everything else is a documented
// model assumption, overridable through the config file.
struct ArchParams {
    double alu_latency_s = 0.5e-9;
    double l1_latency_s = 2e-9;
    double l2_latency_s = 10e-9;
    double dram_latency_s = 60e-9;
    double cim_latency_s = 2e-9;

    double alu_energy_j = 1e-12;
    double l1_energy_j = 50e-12;    // 50x ALU
    double l2_energy_j = 200e-12;
    double dram_energy_j = 6400e-12;  // 6400x ALU
    double cim_energy_j = 0.3e-12;

    // Leakage of the conventional part, as a fraction of its dynamic power.
    // The non-volatile crossbar contributes none.
    double static_power_fraction = 0.3;

    double cores = 4;
    double core_area_mm2 = 2.0;
    double l1_area_mm2 = 0.1;   // per core
    double l2_area_mm2 = 2.0;
    // Added read-out periphery of the crossbar; the storage array itself is
    // accounted as memory, like DRAM, and carries no compute area.
    double cim_area_mm2 = 0.0;

    // Documentation fields (do not enter the formulas).
    double l1_size_kb = 32;
    double l2_size_kb = 256;
    double dram_size_gb = 4;

    void validate() const;

    double conventional_area_mm2() const {
        return cores * (core_area_mm2 + l1_area_mm2) + l2_area_mm2;
    }
};

struct Workload {
    double instruction_count = 1e9;
    double fraction_accelerated = 0.7;  // share of instructions offloadable to the crossbar
    double miss_rate_l1 = 0.0;
    double miss_rate_l2 = 0.0;
    double memory_fraction = 0.7;  // share of instructions that access memory
    // Memory-instruction share within the accelerated portion. Offloaded
    // regions are data-parallel loops, so they are memory-heavier than the
    // program average; calibration constant behind the ~10x headline.
    double accel_memory_fraction = 0.9;

    void validate() const;
};

// One architecture's row of the evaluation metrics.
struct MetricEntry {
    double time_per_op_s = 0;
    double energy_per_op_j = 0;
    double throughput_mops = 0;
    double area_mm2 = 0;
    double eta_pe_mops_per_mw = 0;  // performance-energy efficiency
    double eta_e_pj_per_op = 0;     // energy per operation
    double eta_pa_mops_per_mm2 = 0; // performance-area efficiency
};

struct EfficiencyReport {
    MetricEntry multicore;
    MetricEntry mvp;

    double eta_pe_ratio() const { return mvp.eta_pe_mops_per_mw / multicore.eta_pe_mops_per_mw; }
};

// Conventional multicore: every instruction pays the ALU or the cache/DRAM
// traversal, plus the static-power uplift.
MetricEntry multicore_metrics(const ArchParams& arch, const Workload& w);

// Crossbar-accelerated machine: the accelerated fraction costs one crossbar
// op (no memory-hierarchy traversal, no static power); the rest runs on the
// conventional side with the residual instruction mix.
MetricEntry mvp_metrics(const ArchParams& arch, const Workload& w);

EfficiencyReport evaluate(const ArchParams& arch, const Workload& w);

// Aggregate cost of an engine run on a crossbar backend: columns evaluate in
// parallel within a step, steps are sequential.
struct RunCost {
    double latency_s = 0;
    double energy_j = 0;
    std::uint64_t column_evaluations = 0;
};

RunCost ap_run_cost(const RunStats& stats, const ColumnCost& cost);

}  // namespace cim
