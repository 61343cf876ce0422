#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "lwasim/artifacts.hpp"
#include "lwasim/config.hpp"
#include "lwasim/scenario.hpp"
#include "lwasim/wire.hpp"

namespace {

struct Flag {
    const char* name;
    const char* key;
    const char* help;
};

// Every flag maps onto a flat config key; CLI values override config-file
// values, which override the scenario preset and defaults.
const Flag kFlags[] = {
    {"--scenario", "scenario", "Preset: baseline, lwa (split bearer) or lwip"},
    {"--lwa-mode", "lwa.mode", "0 = LTE only, 1 = split, 2 = Wi-Fi only"},
    {"--lwip-mode", "lwip.mode", "0 = off, 1 = on (switched only)"},
    {"--split-modulus", "split.modulus", "Modulo-N split divisor (default 2)"},
    {"--rate-bps", "traffic.rate_bps", "Application data rate in bit/s"},
    {"--packet-bytes", "traffic.packet_bytes", "Application packet size incl. 12-byte SeqTs header"},
    {"--start-ms", "traffic.start_ms", "Traffic start time"},
    {"--duration-ms", "traffic.duration_ms", "Traffic duration"},
    {"--poll-interval-us", "pdcp.poll_interval_us", "Offload buffer poll interval"},
    {"--pdcp-rrc-overhead", "pdcp.rrc_overhead_bytes", "Total per-PDU offload overhead bytes"},
    {"--t-reordering-ms", "reorder.t_ms", "UE reordering timer"},
    {"--lte-rate-bps", "link.lte.rate_bps", "LTE path rate"},
    {"--lte-delay-us", "link.lte.delay_us", "LTE path one-way delay"},
    {"--xw-rate-bps", "link.xw.rate_bps", "Xw link rate"},
    {"--xw-delay-us", "link.xw.delay_us", "Xw link one-way delay"},
    {"--wifi-rate-bps", "link.wifi.rate_bps", "Wi-Fi air rate"},
    {"--wifi-delay-us", "link.wifi.delay_us", "Wi-Fi air one-way delay"},
    {"--wifi-framing-overhead", "link.wifi.framing_overhead_bytes", "Air framing bytes (trace only)"},
    {"--tunnel-src", "tunnel.src", "LWIP tunnel inner source address"},
    {"--tunnel-dst", "tunnel.dst", "LWIP tunnel inner destination address"},
    {"--auth-key-seed", "tunnel.auth_key_seed", "Tunnel auth key (0: derive from run seed)"},
    {"--seed", "run.seed", "Run seed (payload filler, determinism)"},
    {"--out", "run.out_dir", "Output directory"},
    {"--role", "io.role", "Two-process role: none, enb or sta"},
    {"--peer", "io.peer", "eNB role: station host:port"},
    {"--listen", "io.listen_port", "Station role: UDP listen port"},
    {"--pacing", "io.pacing", "eNB role: fast or real"},
    {"--idle-timeout-ms", "io.idle_timeout_ms", "Station role: shutdown after this much silence"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Packet-level simulator of LTE-WLAN aggregation (LWA) and LWIP offload"};

    std::string config_path;
    std::string dump_path;
    app.add_option("--config", config_path, "Config file with flat key = value lines");
    app.add_option("--dump-config", dump_path, "Write the effective config to a file and exit");

    std::map<std::string, std::string> values;
    for (const auto& f : kFlags)
        app.add_option(f.name, values[f.key], f.help);

    CLI11_PARSE(app, argc, argv);

    try {
        lwasim::KeyValues file_kv;
        if (!config_path.empty())
            file_kv = lwasim::load_config_file(config_path);

        lwasim::KeyValues cli_kv;
        for (const auto& f : kFlags)
            if (app.count(f.name) > 0)
                cli_kv.emplace_back(f.key, values[f.key]);

        lwasim::ScenarioConfig cfg = lwasim::build_config(file_kv, cli_kv);

        if (!dump_path.empty()) {
            std::ofstream out(dump_path, std::ios::trunc);
            if (!out)
                throw lwasim::IoError("cannot open " + dump_path);
            out << lwasim::serialize_config(cfg);
            return 0;
        }

        switch (cfg.role) {
        case lwasim::Role::Enb:
            return lwasim::run_enb(cfg, std::cout);
        case lwasim::Role::Sta:
            return lwasim::run_sta(cfg, std::cout);
        case lwasim::Role::None: {
            lwasim::RunResult res = lwasim::run_scenario(cfg);
            lwasim::print_report(std::cout, res);
            std::cout << "Artifacts written to " << cfg.out_dir << "\n";
            return 0;
        }
        }
    } catch (const lwasim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
