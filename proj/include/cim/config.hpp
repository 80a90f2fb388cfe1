#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "cim/crossbar.hpp"
#include "cim/perfmodel.hpp"

namespace cim {

// Flat key=value text configuration. '#' starts a comment; blank lines and
// surrounding whitespace are ignored. Duplicate keys keep the last value.
class Config {
public:
    Config() = default;

    static Config parse(std::string_view text);
    static Config load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    void set_double(const std::string& key, double value);

    const std::map<std::string, std::string>& values() const { return values_; }

    // Throws on keys outside `known`; the CLI validates against the union of
    // all module key sets.
    void require_known_keys(const std::set<std::string>& known) const;

    std::string to_text() const;

private:
    std::map<std::string, std::string> values_;
};

// Per-module key sets and config bindings.
const std::set<std::string>& device_config_keys();
const std::set<std::string>& arch_config_keys();
const std::set<std::string>& sweep_config_keys();

DeviceParams device_params_from_config(const Config& config);
CostTable cost_table_from_config(const Config& config, const DeviceParams& params);
double read_voltage_from_config(const Config& config);
ArchParams arch_params_from_config(const Config& config);
Workload workload_from_config(const Config& config);

// Emits the full device profile including fitted capacitances.
Config device_profile_to_config(const DeviceParams& params, const CostTable& table,
                                double read_voltage_v);

// m1/m2/%Acc ranges for the efficiency sweep.
struct SweepSpec {
    double m1_min = 0.0, m1_max = 0.6;
    std::uint32_t m1_steps = 7;
    double m2_min = 0.0, m2_max = 0.6;
    std::uint32_t m2_steps = 7;
    double acc_min = 0.7, acc_max = 0.7;
    std::uint32_t acc_steps = 1;
};

SweepSpec sweep_spec_from_config(const Config& config);

}  // namespace cim
