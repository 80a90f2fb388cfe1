#pragma once

#include <cstdint>
#include <string>

#include "cim/bitvector.hpp"

namespace cim {

// Two-state resistive device and read-circuit operating point. Resistances
// in ohms, voltages in volts. v_set/v_reset store threshold magnitudes
// without asserting which polarity performs which transition.
struct DeviceParams {
    double r_low_ohm = 1e3;
    double r_high_ohm = 1e8;
    double v_set = 1.3;
    double v_reset = 0.5;
    double v_precharge = 0.4;
    double v_read_done = 0.1;
    double v_reference = 0.25;
    // Series on-resistance of one select transistor in the discharge path; a
    // documented free parameter absorbed by calibration.
    double transistor_r_on_ohm = 2e3;
    // Write-endurance budget per cell; exceeding it only flags a warning.
    std::uint64_t endurance_budget = 1000000;

    void validate() const;

    // True when the read level cannot disturb stored state.
    bool non_destructive_read() const {
        return v_precharge < v_set && v_precharge < v_reset;
    }
};

enum class Backend { kRram, kSram };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

// One bit-line column of 1T1R cells. Bit 1 maps to the low-resistance state.
// Programming pulses are counted per cell for endurance accounting.
class Column {
public:
    Column(std::size_t num_cells, DeviceParams params);

    std::size_t size() const { return cells_.size(); }
    const DeviceParams& params() const { return params_; }

    // Selects `row` via the word line and applies a programming pulse.
    void program(std::size_t row, bool bit);

    bool cell(std::size_t row) const { return cells_.test(row); }
    const BitVector& cells() const { return cells_; }

    // Pre-charge/discharge evaluation: returns the sense amplifier's logical
    // output, 1 iff at least one selected cell holds the low resistance.
    bool evaluate(const BitVector& active_rows) const;

    std::uint64_t pulse_count(std::size_t row) const;
    std::uint64_t total_pulses() const { return total_pulses_; }
    bool endurance_exceeded() const { return endurance_exceeded_; }

private:
    BitVector cells_;
    std::vector<std::uint64_t> pulses_;
    std::uint64_t total_pulses_ = 0;
    DeviceParams params_;
    bool endurance_exceeded_ = false;
    bool warned_ = false;
};

// Single-pole RC discharge: time for the pre-charged bit line to fall to the
// read-done level through `path_resistance`.
double discharge_time(const DeviceParams& params, double path_resistance_ohm,
                      double bitline_cap_f);

// Capacitance that makes discharge_time hit `target_time_s` exactly; the
// calibration output that absorbs everything the RC model abstracts away.
double fit_bitline_capacitance(const DeviceParams& params, double target_time_s,
                               double path_resistance_ohm);

// Discharge-path resistance per backend: the RRAM cell has one select
// transistor in series with the device; the SRAM cell pulls down through two
// transistors.
double rram_path_resistance(const DeviceParams& params);
double sram_path_resistance(const DeviceParams& params);

struct ColumnCost {
    double discharge_time_s = 0;
    double energy_per_eval_j = 0;
    Backend backend = Backend::kRram;
};

// Calibrated per-evaluation constants plus the fitted capacitances that
// reproduce them through the RC model.
struct CostTable {
    double rram_time_s = 104e-12;
    double rram_energy_j = 2.09e-15;
    double sram_time_s = 161e-12;
    double sram_energy_j = 5.16e-15;
    double bitline_cap_rram_f = 0;
    double bitline_cap_sram_f = 0;

    // Fits the capacitances for the given device profile.
    static CostTable calibrated(const DeviceParams& params);
};

ColumnCost column_cost(const CostTable& table, Backend backend);

}  // namespace cim
