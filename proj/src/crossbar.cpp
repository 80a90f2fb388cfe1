#include "cim/crossbar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cim {

void DeviceParams::validate() const {
    if (r_low_ohm <= 0 || r_high_ohm <= 0 || transistor_r_on_ohm <= 0)
        throw std::invalid_argument("resistances must be positive");
    if (r_low_ohm >= r_high_ohm)
        throw std::invalid_argument("r_low must be below r_high");
    if (v_precharge <= 0 || v_read_done <= 0 || v_reference <= 0 || v_set <= 0 || v_reset <= 0)
        throw std::invalid_argument("voltages must be positive");
    if (!(v_read_done < v_reference && v_reference < v_precharge))
        throw std::invalid_argument("need v_read_done < v_reference < v_precharge");
}

std::string to_string(Backend b) {
    return b == Backend::kRram ? "rram" : "sram";
}

Backend backend_from_string(const std::string& name) {
    if (name == "rram") return Backend::kRram;
    if (name == "sram") return Backend::kSram;
    throw std::invalid_argument("unknown backend '" + name + "' (expected rram or sram)");
}

Column::Column(std::size_t num_cells, DeviceParams params)
    : cells_(num_cells), pulses_(num_cells, 0), params_(params) {
    if (num_cells == 0) throw std::invalid_argument("column must have at least one cell");
    params_.validate();
}

void Column::program(std::size_t row, bool bit) {
    if (row >= cells_.size())
        throw std::out_of_range("row " + std::to_string(row) + " out of range for column of " +
                                std::to_string(cells_.size()) + " cells");
    cells_.set(row, bit);
    ++pulses_[row];
    ++total_pulses_;
    if (pulses_[row] > params_.endurance_budget) {
        endurance_exceeded_ = true;
        if (!warned_) {
            warned_ = true;
            std::fprintf(stderr,
                         "warning: cell %zu exceeded its endurance budget of %llu writes\n", row,
                         static_cast<unsigned long long>(params_.endurance_budget));
        }
    }
}

bool Column::evaluate(const BitVector& active_rows) const {
    if (active_rows.size() != cells_.size())
        throw std::invalid_argument("active row vector length " +
                                    std::to_string(active_rows.size()) +
                                    " does not match column of " + std::to_string(cells_.size()) +
                                    " cells");
    // At least one selected low-resistance cell discharges the bit line; the
    // SA output is the inverse of the line level.
    return cells_.intersects(active_rows);
}

std::uint64_t Column::pulse_count(std::size_t row) const {
    if (row >= pulses_.size()) throw std::out_of_range("row out of range");
    return pulses_[row];
}

double discharge_time(const DeviceParams& params, double path_resistance_ohm,
                      double bitline_cap_f) {
    params.validate();
    if (path_resistance_ohm <= 0) throw std::invalid_argument("path resistance must be positive");
    if (bitline_cap_f <= 0) throw std::invalid_argument("capacitance must be positive");
    return path_resistance_ohm * bitline_cap_f * std::log(params.v_precharge / params.v_read_done);
}

double fit_bitline_capacitance(const DeviceParams& params, double target_time_s,
                               double path_resistance_ohm) {
    params.validate();
    if (target_time_s <= 0) throw std::invalid_argument("target time must be positive");
    if (path_resistance_ohm <= 0) throw std::invalid_argument("path resistance must be positive");
    return target_time_s /
           (path_resistance_ohm * std::log(params.v_precharge / params.v_read_done));
}

double rram_path_resistance(const DeviceParams& params) {
    return params.r_low_ohm + params.transistor_r_on_ohm;
}

double sram_path_resistance(const DeviceParams& params) {
    return 2.0 * params.transistor_r_on_ohm;
}

CostTable CostTable::calibrated(const DeviceParams& params) {
    CostTable t;
    t.bitline_cap_rram_f = fit_bitline_capacitance(params, t.rram_time_s,
                                                   rram_path_resistance(params));
    t.bitline_cap_sram_f = fit_bitline_capacitance(params, t.sram_time_s,
                                                   sram_path_resistance(params));
    return t;
}

ColumnCost column_cost(const CostTable& table, Backend backend) {
    ColumnCost c;
    c.backend = backend;
    if (backend == Backend::kRram) {
        c.discharge_time_s = table.rram_time_s;
        c.energy_per_eval_j = table.rram_energy_j;
    } else {
        c.discharge_time_s = table.sram_time_s;
        c.energy_per_eval_j = table.sram_energy_j;
    }
    if (c.discharge_time_s <= 0 || c.energy_per_eval_j <= 0)
        throw std::invalid_argument("column cost entries must be positive");
    return c;
}

}  // namespace cim
