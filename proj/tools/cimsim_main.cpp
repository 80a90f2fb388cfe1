// cimsim - command-line front end for the automata-processor and
// computation-in-memory simulation suite.
//
// Subcommands:
//   compile  regex or automaton file -> program image
//   run      program image + input stream -> accept/reject with cost report
//   bench    gates | costs | sweep -> CSV
//   dump     program image -> automaton text (or matrix dump)
//
// Exit codes: 0 accept/success, 1 reject, 2 error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cim/automaton_text.hpp"
#include "cim/config.hpp"
#include "cim/engine.hpp"
#include "cim/homogenize.hpp"
#include "cim/image.hpp"
#include "cim/perfmodel.hpp"
#include "cim/regex.hpp"
#include "cim/scouting.hpp"

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<cim::Symbol> decode_input(const std::string& raw, std::uint32_t symbol_bits) {
    std::vector<cim::Symbol> symbols;
    if (symbol_bits <= 8) {
        symbols.reserve(raw.size());
        for (unsigned char c : raw) symbols.push_back(c);
        return symbols;
    }
    // Wide alphabets use a whitespace-separated decimal symbol list.
    std::istringstream in(raw);
    std::string token;
    while (in >> token) {
        try {
            symbols.push_back(static_cast<cim::Symbol>(std::stoul(token)));
        } catch (const std::exception&) {
            throw std::runtime_error("input symbol list contains '" + token +
                                     "', expected a decimal integer");
        }
    }
    return symbols;
}

int do_compile(bool use_regex, const std::string& regex, const std::string& automaton_path,
               std::uint32_t symbol_bits, std::uint32_t max_states, const std::string& output) {
    cim::HomogeneousAutomaton h;
    if (use_regex) {
        cim::Nfa nfa = cim::parse_regex(regex, symbol_bits);
        h = cim::homogenize(nfa);
    } else {
        if (automaton_path.empty())
            throw std::runtime_error("compile needs --regex or --automaton");
        h = cim::homogenize(cim::load_automaton_file(automaton_path));
    }
    cim::CompileOptions options;
    options.max_states = max_states;
    cim::ApProgram program = cim::compile(h, options);
    cim::save_program(program, output);

    std::size_t edge_bits = 0;
    for (cim::StateId i = 0; i < program.num_states(); ++i)
        for (cim::StateId n = 0; n < program.num_states(); ++n)
            if (program.route_bit(i, n)) ++edge_bits;
    double density = static_cast<double>(edge_bits) /
                     (static_cast<double>(program.num_states()) * program.num_states());
    std::cout << "states: " << program.num_states() << "\n"
              << "symbol bits: " << program.symbol_bits() << "\n"
              << "routing density: " << num(density) << "\n"
              << "image: " << output << "\n";
    return 0;
}

int do_run(const std::string& image_path, const std::string& input_path,
           const std::string& backend_name, bool trace, bool all_input,
           const std::string& config_path, const std::string& output_csv) {
    cim::ApProgram program = cim::load_program(image_path);
    std::vector<cim::Symbol> symbols =
        decode_input(read_file_bytes(input_path), program.symbol_bits());

    cim::RunOptions options;
    options.trace = trace;
    options.all_input_start = all_input;
    cim::RunResult result = cim::run(program, std::span<const cim::Symbol>(symbols), options);

    double latency_s = 0;
    double energy_j = 0;
    if (backend_name != "functional") {
        cim::Config config;
        if (!config_path.empty()) config = cim::Config::load(config_path);
        cim::DeviceParams params = cim::device_params_from_config(config);
        cim::CostTable table = cim::cost_table_from_config(config, params);
        cim::ColumnCost cost =
            cim::column_cost(table, cim::backend_from_string(backend_name));
        cim::RunCost rc = cim::ap_run_cost(result.stats, cost);
        latency_s = rc.latency_s;
        energy_j = rc.energy_j;
    }

    std::cout << "accepted: " << (result.accepted ? "yes" : "no") << "\n"
              << "accepted_ever: " << (result.accepted_ever ? "yes" : "no") << "\n"
              << "steps: " << result.stats.steps << "\n"
              << "backend: " << backend_name << "\n";
    if (backend_name != "functional")
        std::cout << "latency_s: " << num(latency_s) << "\n"
                  << "energy_j: " << num(energy_j) << "\n";
    if (trace)
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            std::cout << "step " << i << ": " << result.trace[i].to_string() << "\n";

    if (!output_csv.empty()) {
        std::ostringstream csv;
        csv << "accepted,accepted_ever,steps,backend,latency_s,energy_j\n"
            << (result.accepted ? 1 : 0) << ',' << (result.accepted_ever ? 1 : 0) << ','
            << result.stats.steps << ',' << backend_name << ',' << num(latency_s) << ','
            << num(energy_j) << "\n";
        write_text(output_csv, csv.str());
    }
    return result.accepted ? 0 : 1;
}

std::string bench_costs_csv(const cim::Config& config) {
    cim::DeviceParams params = cim::device_params_from_config(config);
    cim::CostTable table = cim::cost_table_from_config(config, params);
    cim::ColumnCost rram = cim::column_cost(table, cim::Backend::kRram);
    cim::ColumnCost sram = cim::column_cost(table, cim::Backend::kSram);
    std::ostringstream out;
    out << "backend,discharge_time_s,energy_per_eval_j\n"
        << "rram," << num(rram.discharge_time_s) << ',' << num(rram.energy_per_eval_j) << "\n"
        << "sram," << num(sram.discharge_time_s) << ',' << num(sram.energy_per_eval_j) << "\n"
        << "ratio_rram_over_sram," << num(rram.discharge_time_s / sram.discharge_time_s) << ','
        << num(rram.energy_per_eval_j / sram.energy_per_eval_j) << "\n";
    return out.str();
}

std::string bench_gates_csv(const cim::Config& config) {
    cim::DeviceParams params = cim::device_params_from_config(config);
    double read_voltage = cim::read_voltage_from_config(config);
    std::ostringstream out;
    out << "gate,row_bits,current_a,output\n";
    for (cim::Gate gate : {cim::Gate::kOr, cim::Gate::kAnd, cim::Gate::kXor}) {
        cim::SenseConfig sense = cim::default_references(params, read_voltage, 2, gate);
        for (unsigned bits = 0; bits < 4; ++bits) {
            cim::ScoutArray array(2, 1, params, read_voltage);
            if (bits & 2) array.program(0, 0, true);
            if (bits & 1) array.program(1, 0, true);
            double current = array.column_current({0, 1}, 0);
            cim::BitVector result = array.read({0, 1}, sense);
            out << cim::to_string(gate) << ',' << ((bits >> 1) & 1) << (bits & 1) << ','
                << num(current) << ',' << (result.test(0) ? 1 : 0) << "\n";
        }
    }
    return out.str();
}

std::string bench_sweep_csv(const cim::Config& config) {
    cim::ArchParams arch = cim::arch_params_from_config(config);
    cim::Workload base = cim::workload_from_config(config);
    cim::SweepSpec spec = cim::sweep_spec_from_config(config);

    auto grid = [](double lo, double hi, std::uint32_t steps, std::uint32_t i) {
        return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    };

    std::ostringstream out;
    out << "m1,m2,acc,multicore_eta_pe,multicore_eta_e,multicore_eta_pa,"
           "mvp_eta_pe,mvp_eta_e,mvp_eta_pa,eta_pe_ratio\n";
    for (std::uint32_t ia = 0; ia < spec.acc_steps; ++ia)
        for (std::uint32_t i1 = 0; i1 < spec.m1_steps; ++i1)
            for (std::uint32_t i2 = 0; i2 < spec.m2_steps; ++i2) {
                cim::Workload w = base;
                w.fraction_accelerated = grid(spec.acc_min, spec.acc_max, spec.acc_steps, ia);
                w.miss_rate_l1 = grid(spec.m1_min, spec.m1_max, spec.m1_steps, i1);
                w.miss_rate_l2 = grid(spec.m2_min, spec.m2_max, spec.m2_steps, i2);
                cim::EfficiencyReport r = cim::evaluate(arch, w);
                out << num(w.miss_rate_l1) << ',' << num(w.miss_rate_l2) << ','
                    << num(w.fraction_accelerated) << ',' << num(r.multicore.eta_pe_mops_per_mw)
                    << ',' << num(r.multicore.eta_e_pj_per_op) << ','
                    << num(r.multicore.eta_pa_mops_per_mm2) << ',' << num(r.mvp.eta_pe_mops_per_mw)
                    << ',' << num(r.mvp.eta_e_pj_per_op) << ',' << num(r.mvp.eta_pa_mops_per_mm2)
                    << ',' << num(r.eta_pe_ratio()) << "\n";
            }
    return out.str();
}

int do_bench(const std::string& mode, const std::string& config_path, const std::string& output,
             const std::string& emit_profile) {
    cim::Config config;
    if (!config_path.empty()) {
        config = cim::Config::load(config_path);
        std::set<std::string> known = cim::device_config_keys();
        known.insert(cim::arch_config_keys().begin(), cim::arch_config_keys().end());
        known.insert(cim::sweep_config_keys().begin(), cim::sweep_config_keys().end());
        config.require_known_keys(known);
    }

    if (!emit_profile.empty()) {
        cim::DeviceParams params = cim::device_params_from_config(config);
        cim::CostTable table = cim::cost_table_from_config(config, params);
        cim::Config profile = cim::device_profile_to_config(
            params, table, cim::read_voltage_from_config(config));
        write_text(emit_profile, profile.to_text());
    }

    std::string csv;
    if (mode == "costs")
        csv = bench_costs_csv(config);
    else if (mode == "gates")
        csv = bench_gates_csv(config);
    else if (mode == "sweep")
        csv = bench_sweep_csv(config);
    else
        throw std::runtime_error("unknown bench mode '" + mode +
                                 "' (expected gates, costs, or sweep)");
    write_text(output, csv);
    return 0;
}

// Reconstructs an NFA whose homogenized compilation reproduces the image.
cim::Nfa program_to_nfa(const cim::ApProgram& program) {
    cim::HomogeneousAutomaton h = cim::decompile(program);
    const cim::StateId n = program.num_states();

    auto incoming_edges = [&](cim::StateId state) {
        for (auto [src, dst] : h.edges)
            if (dst == state) return true;
        return false;
    };

    cim::Nfa nfa;
    nfa.symbol_bits = h.symbol_bits;
    bool canonical = h.start_states.size() == 1 &&
                     h.symbol_classes[h.start_states.front()].empty() &&
                     !incoming_edges(h.start_states.front());
    if (canonical) {
        nfa.num_states = n;
        nfa.start = h.start_states.front();
        for (auto [src, dst] : h.edges)
            for (cim::Symbol s : h.symbol_classes[dst]) nfa.transitions.push_back({src, s, dst});
        nfa.accepting = h.accepting;
    } else {
        // Synthesize a fresh start that reproduces every start state's
        // one-step behavior; initial activation itself is unobservable
        // beyond that and empty-input acceptance.
        nfa.num_states = n + 1;
        nfa.start = 0;
        for (auto [src, dst] : h.edges)
            for (cim::Symbol s : h.symbol_classes[dst])
                nfa.transitions.push_back({src + 1, s, dst + 1});
        for (cim::StateId start : h.start_states)
            for (auto [src, dst] : h.edges)
                if (src == start)
                    for (cim::Symbol s : h.symbol_classes[dst])
                        nfa.transitions.push_back({0, s, dst + 1});
        for (cim::StateId a : h.accepting) nfa.accepting.push_back(a + 1);
        for (cim::StateId start : h.start_states)
            if (h.is_accepting(start)) {
                nfa.accepting.push_back(0);
                break;
            }
    }
    nfa.normalize();
    nfa.validate();
    return nfa;
}

std::string matrices_text(const cim::ApProgram& p) {
    std::ostringstream out;
    out << "V (row per symbol, column per state):\n";
    for (cim::Symbol k = 0; k < p.num_symbols(); ++k) {
        out << k << ": ";
        for (cim::StateId s = 0; s < p.num_states(); ++s) out << (p.symbol_bit(k, s) ? '1' : '0');
        out << "\n";
    }
    out << "R (row per source state):\n";
    for (cim::StateId i = 0; i < p.num_states(); ++i) {
        out << i << ": ";
        for (cim::StateId s = 0; s < p.num_states(); ++s) out << (p.route_bit(i, s) ? '1' : '0');
        out << "\n";
    }
    out << "c: " << p.accept_mask().to_string() << "\n";
    out << "init: " << p.initial_active().to_string() << "\n";
    return out.str();
}

int do_dump(const std::string& image_path, bool matrices, const std::string& output) {
    cim::ApProgram program = cim::load_program(image_path);
    write_text(output, matrices ? matrices_text(program)
                                : cim::write_automaton_text(program_to_nfa(program)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation suite for memristive computation-in-memory accelerators"};
    app.require_subcommand(1);

    std::string regex;
    std::string automaton_path;
    std::uint32_t symbol_bits = 8;
    std::uint32_t max_states = 65536;
    std::string output;

    CLI::App* compile_cmd = app.add_subcommand("compile", "Compile a pattern to a program image");
    auto* regex_opt = compile_cmd->add_option("--regex", regex, "Regex pattern to compile");
    compile_cmd->add_option("--automaton", automaton_path, "Automaton text file to compile")
        ->excludes(regex_opt);
    compile_cmd->add_option("--symbol-bits", symbol_bits, "Symbol width W for regex input");
    compile_cmd->add_option("--max-states", max_states, "Maximum program width");
    compile_cmd->add_option("--output", output, "Program image path")->required();

    std::string image_path;
    std::string input_path;
    std::string backend = "functional";
    std::string config_path;
    bool trace = false;
    bool all_input = false;

    CLI::App* run_cmd = app.add_subcommand("run", "Run an input stream against a program image");
    run_cmd->add_option("image", image_path, "Program image")->required();
    run_cmd->add_option("input", input_path, "Input file (raw bytes for W <= 8)")->required();
    run_cmd->add_option("--backend", backend, "functional, rram, or sram")
        ->check(CLI::IsMember({"functional", "rram", "sram"}));
    run_cmd->add_flag("--trace", trace, "Record the active vector per step");
    run_cmd->add_flag("--all-input", all_input, "Re-arm start states on every symbol");
    run_cmd->add_option("--config", config_path, "Device profile (key=value)");
    run_cmd->add_option("--output", output, "Write a CSV report");

    std::string mode;
    std::string emit_profile;

    CLI::App* bench_cmd = app.add_subcommand("bench", "Emit benchmark CSV tables");
    bench_cmd->add_option("--mode", mode, "gates, costs, or sweep")->required();
    bench_cmd->add_option("--config", config_path, "Configuration file (key=value)");
    bench_cmd->add_option("--output", output, "CSV output path (default stdout)");
    bench_cmd->add_option("--emit-profile", emit_profile,
                          "Also write the calibrated device profile");

    bool matrices = false;
    CLI::App* dump_cmd = app.add_subcommand("dump", "Dump a program image as automaton text");
    dump_cmd->add_option("image", image_path, "Program image")->required();
    dump_cmd->add_flag("--matrices", matrices, "Dump V/R/c/init matrices instead");
    dump_cmd->add_option("--output", output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compile_cmd->parsed())
            return do_compile(regex_opt->count() > 0, regex, automaton_path, symbol_bits,
                              max_states, output);
        if (run_cmd->parsed())
            return do_run(image_path, input_path, backend, trace, all_input, config_path, output);
        if (bench_cmd->parsed()) return do_bench(mode, config_path, output, emit_profile);
        if (dump_cmd->parsed()) return do_dump(image_path, matrices, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
