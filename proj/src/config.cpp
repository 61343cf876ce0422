#include "lwasim/config.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "lwasim/errors.hpp"
#include "lwasim/headers.hpp"

namespace lwasim {

std::string to_string(Scenario s) {
    switch (s) {
    case Scenario::Baseline:
        return "baseline";
    case Scenario::Lwa:
        return "lwa";
    case Scenario::Lwip:
        return "lwip";
    }
    return "?";
}

std::string to_string(Role r) {
    switch (r) {
    case Role::None:
        return "none";
    case Role::Enb:
        return "enb";
    case Role::Sta:
        return "sta";
    }
    return "?";
}

std::string to_string(Pacing p) {
    return p == Pacing::Fast ? "fast" : "real";
}

namespace {

Scenario parse_scenario(const std::string& v) {
    if (v == "baseline")
        return Scenario::Baseline;
    if (v == "lwa")
        return Scenario::Lwa;
    if (v == "lwip")
        return Scenario::Lwip;
    throw ConfigError("scenario must be baseline, lwa or lwip, got '" + v + "'");
}

Role parse_role(const std::string& v) {
    if (v == "none")
        return Role::None;
    if (v == "enb")
        return Role::Enb;
    if (v == "sta")
        return Role::Sta;
    throw ConfigError("role must be none, enb or sta, got '" + v + "'");
}

Pacing parse_pacing(const std::string& v) {
    if (v == "fast")
        return Pacing::Fast;
    if (v == "real")
        return Pacing::Real;
    throw ConfigError("pacing must be fast or real, got '" + v + "'");
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        std::uint64_t out = std::stoull(v, &used);
        if (used != v.size())
            throw ConfigError("");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected an unsigned integer, got '" + v + "'");
    }
}

struct Field {
    const char* key;
    std::function<void(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <class T>
Field uint_field(const char* key, T ScenarioConfig::*member) {
    return Field{key,
                 [key, member](ScenarioConfig& c, const std::string& v) {
                     c.*member = static_cast<T>(parse_u64(key, v));
                 },
                 [member](const ScenarioConfig& c) { return std::to_string(c.*member); }};
}

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        {"scenario", [](ScenarioConfig& c, const std::string& v) { c.scenario = parse_scenario(v); },
         [](const ScenarioConfig& c) { return to_string(c.scenario); }},
        uint_field("lwa.mode", &ScenarioConfig::lwa_mode),
        uint_field("lwip.mode", &ScenarioConfig::lwip_mode),
        uint_field("split.modulus", &ScenarioConfig::split_modulus),
        uint_field("traffic.rate_bps", &ScenarioConfig::rate_bps),
        uint_field("traffic.packet_bytes", &ScenarioConfig::app_packet_bytes),
        uint_field("traffic.start_ms", &ScenarioConfig::start_ms),
        uint_field("traffic.duration_ms", &ScenarioConfig::duration_ms),
        uint_field("pdcp.poll_interval_us", &ScenarioConfig::poll_interval_us),
        uint_field("pdcp.rrc_overhead_bytes", &ScenarioConfig::pdcp_rrc_overhead_bytes),
        uint_field("reorder.t_ms", &ScenarioConfig::t_reordering_ms),
        uint_field("link.lte.rate_bps", &ScenarioConfig::lte_rate_bps),
        uint_field("link.lte.delay_us", &ScenarioConfig::lte_delay_us),
        uint_field("link.xw.rate_bps", &ScenarioConfig::xw_rate_bps),
        uint_field("link.xw.delay_us", &ScenarioConfig::xw_delay_us),
        uint_field("link.wifi.rate_bps", &ScenarioConfig::wifi_rate_bps),
        uint_field("link.wifi.delay_us", &ScenarioConfig::wifi_delay_us),
        uint_field("link.wifi.framing_overhead_bytes", &ScenarioConfig::wifi_framing_overhead_bytes),
        {"tunnel.src", [](ScenarioConfig& c, const std::string& v) { c.tunnel_src = v; },
         [](const ScenarioConfig& c) { return c.tunnel_src; }},
        {"tunnel.dst", [](ScenarioConfig& c, const std::string& v) { c.tunnel_dst = v; },
         [](const ScenarioConfig& c) { return c.tunnel_dst; }},
        uint_field("tunnel.auth_key_seed", &ScenarioConfig::auth_key_seed),
        uint_field("run.seed", &ScenarioConfig::seed),
        {"run.out_dir", [](ScenarioConfig& c, const std::string& v) { c.out_dir = v; },
         [](const ScenarioConfig& c) { return c.out_dir; }},
        {"io.role", [](ScenarioConfig& c, const std::string& v) { c.role = parse_role(v); },
         [](const ScenarioConfig& c) { return to_string(c.role); }},
        {"io.peer", [](ScenarioConfig& c, const std::string& v) { c.peer = v; },
         [](const ScenarioConfig& c) { return c.peer; }},
        uint_field("io.listen_port", &ScenarioConfig::listen_port),
        {"io.pacing", [](ScenarioConfig& c, const std::string& v) { c.pacing = parse_pacing(v); },
         [](const ScenarioConfig& c) { return to_string(c.pacing); }},
        uint_field("io.idle_timeout_ms", &ScenarioConfig::idle_timeout_ms),
    };
    return table;
}

void apply(ScenarioConfig& cfg, const KeyValues& kvs) {
    for (const auto& [key, value] : kvs) {
        bool known = false;
        for (const auto& f : fields()) {
            if (key == f.key) {
                f.set(cfg, value);
                known = true;
                break;
            }
        }
        if (!known)
            throw ConfigError("unknown configuration key: '" + key + "'");
    }
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

KeyValues parse_config_text(std::istream& in) {
    KeyValues out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

KeyValues load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    return parse_config_text(in);
}

ScenarioConfig build_config(const KeyValues& file_kv, const KeyValues& cli_kv) {
    ScenarioConfig cfg;

    // The scenario preset is the scenario-dependent layer of defaults, so
    // resolve the scenario from the highest-precedence source first.
    std::string scenario_str = to_string(cfg.scenario);
    for (const auto& [k, v] : file_kv)
        if (k == "scenario")
            scenario_str = v;
    for (const auto& [k, v] : cli_kv)
        if (k == "scenario")
            scenario_str = v;
    cfg.scenario = parse_scenario(scenario_str);
    switch (cfg.scenario) {
    case Scenario::Baseline:
        cfg.lwa_mode = 0;
        cfg.lwip_mode = 0;
        break;
    case Scenario::Lwa:
        cfg.lwa_mode = 1; // split bearer, the paper's partial-LWA experiment
        cfg.lwip_mode = 0;
        break;
    case Scenario::Lwip:
        cfg.lwa_mode = 0;
        cfg.lwip_mode = 1;
        break;
    }

    apply(cfg, file_kv);
    apply(cfg, cli_kv);
    validate(cfg);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    if (cfg.lwa_mode > 2)
        throw ConfigError("lwa.mode must be 0, 1 or 2");
    if (cfg.lwip_mode > 1)
        throw ConfigError("lwip.mode must be 0 or 1");
    if (cfg.lwa_mode != 0 && cfg.lwip_mode != 0)
        throw ConfigError("LWA and LWIP cannot be active in the same run");
    if (cfg.scenario == Scenario::Baseline && (cfg.lwa_mode != 0 || cfg.lwip_mode != 0))
        throw ConfigError("baseline scenario requires lwa.mode = 0 and lwip.mode = 0");
    if (cfg.scenario == Scenario::Lwip && cfg.lwa_mode != 0)
        throw ConfigError("LWIP is switched-only: lwa.mode must stay 0 (no split bearer under LWIP)");
    if (cfg.scenario == Scenario::Lwa && cfg.lwip_mode != 0)
        throw ConfigError("scenario lwa cannot enable lwip.mode");
    if (cfg.split_modulus < 2)
        throw ConfigError("split.modulus must be at least 2");
    if (cfg.rate_bps == 0)
        throw ConfigError("traffic.rate_bps must be positive");
    if (cfg.app_packet_bytes <= 12)
        throw ConfigError("traffic.packet_bytes must exceed the 12-byte SeqTs header");
    if (cfg.pdcp_rrc_overhead_bytes < 2)
        throw ConfigError("pdcp.rrc_overhead_bytes must be at least the 2-byte adaptation header");
    parse_ipv4(cfg.tunnel_src);
    parse_ipv4(cfg.tunnel_dst);
    if (cfg.role == Role::Enb && cfg.peer.empty())
        throw ConfigError("role enb requires io.peer (host:port)");
    if (cfg.role == Role::Sta && cfg.listen_port == 0)
        throw ConfigError("role sta requires io.listen_port");
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    for (const auto& f : fields())
        out << f.key << " = " << f.get(cfg) << "\n";
    return out.str();
}

} // namespace lwasim
