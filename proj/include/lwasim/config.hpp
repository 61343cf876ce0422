#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lwasim/sim_time.hpp"

namespace lwasim {

enum class Scenario { Baseline, Lwa, Lwip };
enum class Role { None, Enb, Sta };
enum class Pacing { Fast, Real };

std::string to_string(Scenario s);
std::string to_string(Role r);
std::string to_string(Pacing p);

/// Everything a run needs, bound from defaults, an optional config file
/// and CLI flags (in that precedence order). Durations and delays are
/// integer milliseconds/microseconds so the flat key=value form is exact.
struct ScenarioConfig {
    Scenario scenario = Scenario::Baseline;
    std::uint8_t lwa_mode = 0;
    std::uint8_t lwip_mode = 0;
    std::uint32_t split_modulus = 2;

    std::uint64_t rate_bps = 64000;
    std::uint64_t app_packet_bytes = 600;
    std::uint64_t start_ms = 0;
    std::uint64_t duration_ms = 4825;

    std::uint64_t poll_interval_us = 100;
    std::uint64_t pdcp_rrc_overhead_bytes = 30;
    std::uint64_t t_reordering_ms = 100;

    std::uint64_t lte_rate_bps = 100000000;
    std::uint64_t lte_delay_us = 5000;
    std::uint64_t xw_rate_bps = 1000000000;
    std::uint64_t xw_delay_us = 2000;
    std::uint64_t wifi_rate_bps = 54000000;
    std::uint64_t wifi_delay_us = 1000;
    std::uint64_t wifi_framing_overhead_bytes = 82;

    std::string tunnel_src = "11.0.0.1";
    std::string tunnel_dst = "11.0.0.254";
    std::uint64_t auth_key_seed = 0; // 0: derive from the run seed

    std::uint64_t seed = 1;
    std::string out_dir = "out";

    Role role = Role::None;
    std::string peer; // host:port, eNB role
    std::uint16_t listen_port = 0;
    Pacing pacing = Pacing::Fast;
    std::uint64_t idle_timeout_ms = 5000;

    bool operator==(const ScenarioConfig&) const = default;

    SimTime traffic_start() const { return SimTime::ms(start_ms); }
    SimTime traffic_stop() const { return SimTime::ms(start_ms + duration_ms); }
    SimTime poll_interval() const { return SimTime::us(poll_interval_us); }
    SimTime t_reordering() const { return SimTime::ms(t_reordering_ms); }
    std::uint64_t effective_auth_key() const { return auth_key_seed != 0 ? auth_key_seed : seed; }
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Reads `key = value` lines; '#' starts a comment; blank lines ignored.
KeyValues parse_config_text(std::istream& in);
KeyValues load_config_file(const std::string& path);

/// Defaults, then the scenario preset (chosen by the highest-precedence
/// `scenario` entry), then file values, then CLI values. Unknown keys and
/// invalid combinations throw ConfigError.
ScenarioConfig build_config(const KeyValues& file_kv, const KeyValues& cli_kv);

/// Rejects combinations the protocols exclude (LWIP split, simultaneous
/// LWA+LWIP, baseline with a mode set) and out-of-domain values.
void validate(const ScenarioConfig& cfg);

/// Full flat-key serialization; build_config(parse(serialize(c)), {}) == c.
std::string serialize_config(const ScenarioConfig& cfg);

} // namespace lwasim
