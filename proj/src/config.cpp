#include "cim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cim/errors.hpp"

namespace cim {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Config Config::parse(std::string_view text) {
    Config cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value, got '" + stripped + "'", line_no);
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);
        cfg.values_[key] = value;
    }
    return cfg;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(it->second, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' is not a number: " + it->second);
    }
    if (used != it->second.size())
        throw std::invalid_argument("config key '" + key + "' is not a number: " + it->second);
    return v;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' is not an integer: " + it->second);
    }
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

void Config::set_double(const std::string& key, double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    values_[key] = buf;
}

void Config::require_known_keys(const std::set<std::string>& known) const {
    for (const auto& [key, value] : values_)
        if (!known.count(key))
            throw std::invalid_argument("invalid config key '" + key + "'");
}

std::string Config::to_text() const {
    std::ostringstream out;
    for (const auto& [key, value] : values_) out << key << " = " << value << "\n";
    return out.str();
}

const std::set<std::string>& device_config_keys() {
    static const std::set<std::string> keys = {
        "r_low_ohm",       "r_high_ohm",       "v_set",
        "v_reset",         "v_precharge",      "v_read_done",
        "v_reference",     "transistor_r_on_ohm", "endurance_budget",
        "read_voltage_v",  "bitline_cap_rram_f", "bitline_cap_sram_f",
        "rram_time_s",     "rram_energy_j",    "sram_time_s",
        "sram_energy_j",
    };
    return keys;
}

const std::set<std::string>& arch_config_keys() {
    static const std::set<std::string> keys = {
        "alu_latency_s",  "l1_latency_s",  "l2_latency_s",  "dram_latency_s",
        "cim_latency_s",  "alu_energy_j",  "l1_energy_j",   "l2_energy_j",
        "dram_energy_j",  "cim_energy_j",  "static_power_fraction",
        "cores",          "core_area_mm2", "l1_area_mm2",   "l2_area_mm2",
        "cim_area_mm2",   "l1_size_kb",    "l2_size_kb",    "dram_size_gb",
        "instruction_count", "fraction_accelerated", "memory_fraction",
        "accel_memory_fraction", "miss_rate_l1", "miss_rate_l2",
    };
    return keys;
}

const std::set<std::string>& sweep_config_keys() {
    static const std::set<std::string> keys = {
        "sweep_m1_min",  "sweep_m1_max",  "sweep_m1_steps",
        "sweep_m2_min",  "sweep_m2_max",  "sweep_m2_steps",
        "sweep_acc_min", "sweep_acc_max", "sweep_acc_steps",
    };
    return keys;
}

DeviceParams device_params_from_config(const Config& config) {
    DeviceParams d;
    d.r_low_ohm = config.get_double("r_low_ohm", d.r_low_ohm);
    d.r_high_ohm = config.get_double("r_high_ohm", d.r_high_ohm);
    d.v_set = config.get_double("v_set", d.v_set);
    d.v_reset = config.get_double("v_reset", d.v_reset);
    d.v_precharge = config.get_double("v_precharge", d.v_precharge);
    d.v_read_done = config.get_double("v_read_done", d.v_read_done);
    d.v_reference = config.get_double("v_reference", d.v_reference);
    d.transistor_r_on_ohm = config.get_double("transistor_r_on_ohm", d.transistor_r_on_ohm);
    d.endurance_budget = config.get_u64("endurance_budget", d.endurance_budget);
    d.validate();
    return d;
}

CostTable cost_table_from_config(const Config& config, const DeviceParams& params) {
    CostTable t = CostTable::calibrated(params);
    t.rram_time_s = config.get_double("rram_time_s", t.rram_time_s);
    t.rram_energy_j = config.get_double("rram_energy_j", t.rram_energy_j);
    t.sram_time_s = config.get_double("sram_time_s", t.sram_time_s);
    t.sram_energy_j = config.get_double("sram_energy_j", t.sram_energy_j);
    t.bitline_cap_rram_f = config.get_double("bitline_cap_rram_f", t.bitline_cap_rram_f);
    t.bitline_cap_sram_f = config.get_double("bitline_cap_sram_f", t.bitline_cap_sram_f);
    return t;
}

double read_voltage_from_config(const Config& config) {
    return config.get_double("read_voltage_v", 0.4);
}

ArchParams arch_params_from_config(const Config& config) {
    ArchParams a;
    a.alu_latency_s = config.get_double("alu_latency_s", a.alu_latency_s);
    a.l1_latency_s = config.get_double("l1_latency_s", a.l1_latency_s);
    a.l2_latency_s = config.get_double("l2_latency_s", a.l2_latency_s);
    a.dram_latency_s = config.get_double("dram_latency_s", a.dram_latency_s);
    a.cim_latency_s = config.get_double("cim_latency_s", a.cim_latency_s);
    a.alu_energy_j = config.get_double("alu_energy_j", a.alu_energy_j);
    a.l1_energy_j = config.get_double("l1_energy_j", a.l1_energy_j);
    a.l2_energy_j = config.get_double("l2_energy_j", a.l2_energy_j);
    a.dram_energy_j = config.get_double("dram_energy_j", a.dram_energy_j);
    a.cim_energy_j = config.get_double("cim_energy_j", a.cim_energy_j);
    a.static_power_fraction = config.get_double("static_power_fraction", a.static_power_fraction);
    a.cores = config.get_double("cores", a.cores);
    a.core_area_mm2 = config.get_double("core_area_mm2", a.core_area_mm2);
    a.l1_area_mm2 = config.get_double("l1_area_mm2", a.l1_area_mm2);
    a.l2_area_mm2 = config.get_double("l2_area_mm2", a.l2_area_mm2);
    a.cim_area_mm2 = config.get_double("cim_area_mm2", a.cim_area_mm2);
    a.l1_size_kb = config.get_double("l1_size_kb", a.l1_size_kb);
    a.l2_size_kb = config.get_double("l2_size_kb", a.l2_size_kb);
    a.dram_size_gb = config.get_double("dram_size_gb", a.dram_size_gb);
    a.validate();
    return a;
}

Workload workload_from_config(const Config& config) {
    Workload w;
    w.instruction_count = config.get_double("instruction_count", w.instruction_count);
    w.fraction_accelerated = config.get_double("fraction_accelerated", w.fraction_accelerated);
    w.memory_fraction = config.get_double("memory_fraction", w.memory_fraction);
    w.accel_memory_fraction =
        config.get_double("accel_memory_fraction", w.accel_memory_fraction);
    w.miss_rate_l1 = config.get_double("miss_rate_l1", w.miss_rate_l1);
    w.miss_rate_l2 = config.get_double("miss_rate_l2", w.miss_rate_l2);
    w.validate();
    return w;
}

Config device_profile_to_config(const DeviceParams& params, const CostTable& table,
                                double read_voltage_v) {
    Config cfg;
    cfg.set_double("r_low_ohm", params.r_low_ohm);
    cfg.set_double("r_high_ohm", params.r_high_ohm);
    cfg.set_double("v_set", params.v_set);
    cfg.set_double("v_reset", params.v_reset);
    cfg.set_double("v_precharge", params.v_precharge);
    cfg.set_double("v_read_done", params.v_read_done);
    cfg.set_double("v_reference", params.v_reference);
    cfg.set_double("transistor_r_on_ohm", params.transistor_r_on_ohm);
    cfg.set("endurance_budget", std::to_string(params.endurance_budget));
    cfg.set_double("read_voltage_v", read_voltage_v);
    cfg.set_double("bitline_cap_rram_f", table.bitline_cap_rram_f);
    cfg.set_double("bitline_cap_sram_f", table.bitline_cap_sram_f);
    cfg.set_double("rram_time_s", table.rram_time_s);
    cfg.set_double("rram_energy_j", table.rram_energy_j);
    cfg.set_double("sram_time_s", table.sram_time_s);
    cfg.set_double("sram_energy_j", table.sram_energy_j);
    return cfg;
}

SweepSpec sweep_spec_from_config(const Config& config) {
    SweepSpec s;
    s.m1_min = config.get_double("sweep_m1_min", s.m1_min);
    s.m1_max = config.get_double("sweep_m1_max", s.m1_max);
    s.m1_steps = static_cast<std::uint32_t>(config.get_u64("sweep_m1_steps", s.m1_steps));
    s.m2_min = config.get_double("sweep_m2_min", s.m2_min);
    s.m2_max = config.get_double("sweep_m2_max", s.m2_max);
    s.m2_steps = static_cast<std::uint32_t>(config.get_u64("sweep_m2_steps", s.m2_steps));
    s.acc_min = config.get_double("sweep_acc_min", s.acc_min);
    s.acc_max = config.get_double("sweep_acc_max", s.acc_max);
    s.acc_steps = static_cast<std::uint32_t>(config.get_u64("sweep_acc_steps", s.acc_steps));
    if (s.m1_steps == 0 || s.m2_steps == 0 || s.acc_steps == 0)
        throw std::invalid_argument("sweep step counts must be positive");
    return s;
}

}  // namespace cim
