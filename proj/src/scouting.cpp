#include "cim/scouting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cim {

std::string to_string(Gate g) {
    switch (g) {
        case Gate::kOr: return "or";
        case Gate::kAnd: return "and";
        case Gate::kXor: return "xor";
    }
    return "?";
}

Gate gate_from_string(const std::string& name) {
    if (name == "or") return Gate::kOr;
    if (name == "and") return Gate::kAnd;
    if (name == "xor") return Gate::kXor;
    throw std::invalid_argument("unknown gate '" + name + "' (expected or, and, xor)");
}

ScoutArray::ScoutArray(std::size_t rows, std::size_t cols, DeviceParams params,
                       double read_voltage_v)
    : rows_(rows), params_(params), read_voltage_v_(read_voltage_v) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("array dimensions must be positive");
    if (read_voltage_v <= 0) throw std::invalid_argument("read voltage must be positive");
    params_.validate();
    columns_.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) columns_.emplace_back(rows, params_);
}

void ScoutArray::program(std::size_t row, std::size_t col, bool bit) {
    if (col >= columns_.size()) throw std::out_of_range("column index out of range");
    columns_[col].program(row, bit);
}

bool ScoutArray::cell(std::size_t row, std::size_t col) const {
    if (col >= columns_.size()) throw std::out_of_range("column index out of range");
    return columns_[col].cell(row);
}

double ScoutArray::column_current(const std::vector<std::uint32_t>& active_rows,
                                  std::size_t col) const {
    if (active_rows.empty()) throw std::invalid_argument("at least one row must be activated");
    if (col >= columns_.size()) throw std::out_of_range("column index out of range");
    double conductance = 0;
    for (std::uint32_t r : active_rows) {
        if (r >= rows_) throw std::out_of_range("row index out of range");
        conductance += 1.0 / (columns_[col].cell(r) ? params_.r_low_ohm : params_.r_high_ohm);
    }
    return read_voltage_v_ * conductance;
}

BitVector ScoutArray::read(const std::vector<std::uint32_t>& active_rows,
                           const SenseConfig& sense) const {
    if (sense.num_rows != active_rows.size())
        throw std::invalid_argument("sense configuration expects " +
                                    std::to_string(sense.num_rows) + " rows, got " +
                                    std::to_string(active_rows.size()));
    BitVector out(cols());
    for (std::size_t c = 0; c < cols(); ++c) {
        double current = column_current(active_rows, c);
        bool bit = false;
        switch (sense.gate) {
            case Gate::kOr:
            case Gate::kAnd:
                bit = current > sense.ref_low_a;
                break;
            case Gate::kXor:
                bit = current > sense.ref_low_a && current < sense.ref_high_a;
                break;
        }
        if (bit) out.set(c);
    }
    return out;
}

double level_current(const DeviceParams& params, double read_voltage_v, std::uint32_t num_rows,
                     std::uint32_t low_cells) {
    if (low_cells > num_rows) throw std::invalid_argument("more low cells than activated rows");
    double conductance = low_cells / params.r_low_ohm + (num_rows - low_cells) / params.r_high_ohm;
    return read_voltage_v * conductance;
}

namespace {

// Reference between two adjacent levels, with log-symmetric margins.
double place_reference(double below, double above, double tolerance, const char* what) {
    if (above <= below * (1.0 + tolerance))
        throw std::invalid_argument(std::string("no separating window for ") + what +
                                    ": levels " + std::to_string(below) + " A and " +
                                    std::to_string(above) + " A collide within tolerance");
    return std::sqrt(below * above);
}

}  // namespace

SenseConfig default_references(const DeviceParams& params, double read_voltage_v,
                               std::uint32_t num_rows, Gate gate, ScoutingOptions options) {
    params.validate();
    if (num_rows < 1) throw std::invalid_argument("need at least one activated row");
    if (gate != Gate::kOr && num_rows < 2)
        throw std::invalid_argument("AND/XOR need at least two activated rows");
    if (gate != Gate::kOr && num_rows > 2 && !options.allow_multirow_and)
        throw std::invalid_argument(
            "AND/XOR beyond two rows requires ScoutingOptions::allow_multirow_and");

    auto level = [&](std::uint32_t low_cells) {
        return level_current(params, read_voltage_v, num_rows, low_cells);
    };

    SenseConfig cfg;
    cfg.gate = gate;
    cfg.num_rows = num_rows;
    switch (gate) {
        case Gate::kOr:
            cfg.ref_low_a = place_reference(level(0), level(1), options.level_tolerance, "OR");
            cfg.margin_low = cfg.ref_low_a / level(0);
            cfg.margin_high = level(1) / cfg.ref_low_a;
            break;
        case Gate::kAnd:
            cfg.ref_low_a =
                place_reference(level(num_rows - 1), level(num_rows), options.level_tolerance,
                                "AND");
            cfg.margin_low = cfg.ref_low_a / level(num_rows - 1);
            cfg.margin_high = level(num_rows) / cfg.ref_low_a;
            break;
        case Gate::kXor:
            cfg.ref_low_a = place_reference(level(0), level(1), options.level_tolerance, "XOR");
            cfg.ref_high_a = place_reference(level(1), level(2), options.level_tolerance, "XOR");
            cfg.margin_low = std::min(cfg.ref_low_a / level(0), level(1) / cfg.ref_low_a);
            cfg.margin_high = std::min(cfg.ref_high_a / level(1), level(2) / cfg.ref_high_a);
            break;
    }
    return cfg;
}

}  // namespace cim
