#pragma once

#include <vector>

#include "cim/crossbar.hpp"

namespace cim {

enum class Gate { kOr, kAnd, kXor };

std::string to_string(Gate g);
Gate gate_from_string(const std::string& name);

// Sense-amplifier configuration for a scouting read. OR and AND use ref_low
// only; XOR outputs 1 when the column current falls strictly between the two
// references (exactly one low-resistance cell among the selected rows).
struct SenseConfig {
    Gate gate = Gate::kOr;
    std::uint32_t num_rows = 2;
    double ref_low_a = 0;
    double ref_high_a = 0;
    // Current ratio between each reference and its nearer achievable level.
    double margin_low = 0;
    double margin_high = 0;
};

struct ScoutingOptions {
    // AND/XOR default to exactly two simultaneous rows. n-row AND must
    // resolve currents between (n-1) and n low cells, a 1/n relative margin,
    // so widening is opt-in and margin-checked.
    bool allow_multirow_and = false;
    // Minimum relative spacing between the two levels a reference separates.
    double level_tolerance = 0.01;
};

// Memristive array read through scouting logic: activating several rows at
// once makes the column current encode a logic function of the stored bits.
class ScoutArray {
public:
    ScoutArray(std::size_t rows, std::size_t cols, DeviceParams params,
               double read_voltage_v = 0.4);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    double read_voltage() const { return read_voltage_v_; }
    const DeviceParams& params() const { return params_; }

    // Programming reuses the crossbar column semantics (pulse-counted).
    void program(std::size_t row, std::size_t col, bool bit);
    bool cell(std::size_t row, std::size_t col) const;

    // Parallel-conductance current into column `col` with the given rows
    // activated at the read voltage.
    double column_current(const std::vector<std::uint32_t>& active_rows, std::size_t col) const;

    // One scouting read over all columns; reads never write back.
    BitVector read(const std::vector<std::uint32_t>& active_rows, const SenseConfig& sense) const;

private:
    std::size_t rows_;
    std::vector<Column> columns_;
    DeviceParams params_;
    double read_voltage_v_;
};

// Current drawn by `low_cells` low-resistance cells among `num_rows`
// activated rows.
double level_current(const DeviceParams& params, double read_voltage_v, std::uint32_t num_rows,
                     std::uint32_t low_cells);

// Places each reference at the geometric midpoint of the two levels it must
// separate and reports the resulting margins.
SenseConfig default_references(const DeviceParams& params, double read_voltage_v,
                               std::uint32_t num_rows, Gate gate, ScoutingOptions options = {});

}  // namespace cim
