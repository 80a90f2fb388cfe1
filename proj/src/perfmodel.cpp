#include "cim/perfmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace cim {

void ArchParams::validate() const {
    auto positive = [](double v, const char* what) {
        if (v <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
    };
    positive(alu_latency_s, "alu_latency_s");
    positive(l1_latency_s, "l1_latency_s");
    positive(l2_latency_s, "l2_latency_s");
    positive(dram_latency_s, "dram_latency_s");
    positive(cim_latency_s, "cim_latency_s");
    positive(alu_energy_j, "alu_energy_j");
    positive(l1_energy_j, "l1_energy_j");
    positive(l2_energy_j, "l2_energy_j");
    positive(dram_energy_j, "dram_energy_j");
    positive(cim_energy_j, "cim_energy_j");
    positive(cores, "cores");
    positive(core_area_mm2, "core_area_mm2");
    positive(l1_area_mm2, "l1_area_mm2");
    positive(l2_area_mm2, "l2_area_mm2");
    if (cim_area_mm2 < 0) throw std::invalid_argument("cim_area_mm2 must be non-negative");
    if (static_power_fraction < 0)
        throw std::invalid_argument("static_power_fraction must be non-negative");
    if (dram_energy_j < l1_energy_j)
        throw std::invalid_argument("DRAM access energy must be at least the L1 access energy");
}

void Workload::validate() const {
    auto fraction = [](double v, const char* what) {
        if (v < 0 || v > 1) throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
    };
    if (instruction_count <= 0)
        throw std::invalid_argument("instruction_count must be positive");
    fraction(fraction_accelerated, "fraction_accelerated");
    fraction(miss_rate_l1, "miss_rate_l1");
    fraction(miss_rate_l2, "miss_rate_l2");
    fraction(memory_fraction, "memory_fraction");
    fraction(accel_memory_fraction, "accel_memory_fraction");
}

namespace {

struct PerOp {
    double time_s;
    double energy_j;  // dynamic + static uplift
};

// Conventional per-op cost for a mix with memory-instruction share
// `mem_fraction`: memory instructions pay L1, plus L2 on an L1 miss, plus
// DRAM on an L2 miss.
PerOp conventional_per_op(const ArchParams& a, double mem_fraction, double m1, double m2) {
    double mem_time = a.l1_latency_s + m1 * (a.l2_latency_s + m2 * a.dram_latency_s);
    double mem_energy = a.l1_energy_j + m1 * (a.l2_energy_j + m2 * a.dram_energy_j);
    PerOp op;
    op.time_s = (1.0 - mem_fraction) * a.alu_latency_s + mem_fraction * mem_time;
    double dynamic = (1.0 - mem_fraction) * a.alu_energy_j + mem_fraction * mem_energy;
    // Static power is a fraction of dynamic power, so per-op static energy is
    // the same fraction of per-op dynamic energy.
    op.energy_j = dynamic * (1.0 + a.static_power_fraction);
    return op;
}

MetricEntry make_entry(const ArchParams& a, PerOp op, double area_mm2) {
    MetricEntry e;
    e.time_per_op_s = op.time_s;
    e.energy_per_op_j = op.energy_j;
    e.throughput_mops = a.cores / op.time_s / 1e6;
    e.area_mm2 = area_mm2;
    e.eta_e_pj_per_op = op.energy_j * 1e12;
    e.eta_pe_mops_per_mw = 1e3 / e.eta_e_pj_per_op;
    e.eta_pa_mops_per_mm2 = e.throughput_mops / area_mm2;
    return e;
}

}  // namespace

MetricEntry multicore_metrics(const ArchParams& arch, const Workload& w) {
    arch.validate();
    w.validate();
    PerOp op = conventional_per_op(arch, w.memory_fraction, w.miss_rate_l1, w.miss_rate_l2);
    return make_entry(arch, op, arch.conventional_area_mm2());
}

MetricEntry mvp_metrics(const ArchParams& arch, const Workload& w) {
    arch.validate();
    w.validate();
    double acc = w.fraction_accelerated;

    // The offloaded portion is memory-heavy, but cannot contain more memory
    // instructions than the workload has.
    double accel_mem = w.accel_memory_fraction;
    if (acc > 0) accel_mem = std::min(accel_mem, w.memory_fraction / acc);
    double residual_mem =
        acc < 1.0 ? (w.memory_fraction - acc * accel_mem) / (1.0 - acc) : 0.0;

    PerOp residual = conventional_per_op(arch, residual_mem, w.miss_rate_l1, w.miss_rate_l2);
    PerOp op;
    op.time_s = (1.0 - acc) * residual.time_s + acc * arch.cim_latency_s;
    op.energy_j = (1.0 - acc) * residual.energy_j + acc * arch.cim_energy_j;
    return make_entry(arch, op, arch.conventional_area_mm2() + arch.cim_area_mm2);
}

EfficiencyReport evaluate(const ArchParams& arch, const Workload& w) {
    EfficiencyReport r;
    r.multicore = multicore_metrics(arch, w);
    r.mvp = mvp_metrics(arch, w);
    return r;
}

RunCost ap_run_cost(const RunStats& stats, const ColumnCost& cost) {
    if (stats.num_states == 0)
        throw std::invalid_argument("run statistics missing: program width is zero");
    if (cost.discharge_time_s <= 0 || cost.energy_per_eval_j <= 0)
        throw std::invalid_argument("column cost entries must be positive");
    RunCost rc;
    rc.column_evaluations = stats.column_evaluations();
    rc.latency_s = static_cast<double>(stats.steps) * cost.discharge_time_s;
    rc.energy_j = static_cast<double>(rc.column_evaluations) * cost.energy_per_eval_j;
    return rc;
}

}  // namespace cim
