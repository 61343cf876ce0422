#include "lwasim/artifacts.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "lwasim/errors.hpp"

namespace lwasim {

namespace {

nlohmann::ordered_json flow_json(const FlowKey& key, const FlowStats& s) {
    nlohmann::ordered_json j;
    j["src"] = ipv4_to_string(key.src);
    j["src_port"] = key.src_port;
    j["dst"] = ipv4_to_string(key.dst);
    j["dst_port"] = key.dst_port;
    j["tx_packets"] = s.tx_packets;
    j["rx_packets"] = s.rx_packets;
    j["tx_bytes"] = s.tx_bytes;
    j["rx_bytes"] = s.rx_bytes;
    j["time_first_tx_ns"] = s.time_first_tx.nanos;
    j["time_last_rx_ns"] = s.time_last_rx.nanos;
    j["throughput_kbps"] = s.rx_packets > 0 && s.time_last_rx > s.time_first_tx ? throughput_kbps(s) : 0.0;
    j["mean_delay_ns"] = mean_delay(s).nanos;
    j["min_delay_ns"] = min_delay(s).nanos;
    j["max_delay_ns"] = max_delay(s).nanos;
    j["lost_packets"] = s.lost_packets;
    return j;
}

nlohmann::ordered_json summary_json(const RunResult& r) {
    nlohmann::ordered_json j;
    j["scenario"] = to_string(r.config.scenario);
    j["lwa_mode"] = r.config.lwa_mode;
    j["lwip_mode"] = r.config.lwip_mode;
    j["seed"] = r.config.seed;

    j["flows"] = nlohmann::ordered_json::array();
    for (const auto& [key, stats] : r.flows)
        j["flows"].push_back(flow_json(key, stats));

    nlohmann::ordered_json agg;
    agg["delivered"] = r.agg.delivered;
    agg["lost"] = r.agg.lost;
    agg["duplicates"] = r.agg.duplicates;
    agg["timer_expiries"] = r.agg.timeouts;
    agg["max_held"] = r.agg.max_held;
    agg["lost_seqs"] = r.reorder_losses;
    j["aggregation"] = agg;

    nlohmann::ordered_json c;
    c["emissions"] = r.counters.emissions;
    c["pdcp_submitted"] = r.counters.pdcp_submitted;
    c["routed_lte"] = r.counters.routed_lte;
    c["routed_offload"] = r.counters.routed_offload;
    c["offload_enqueued"] = r.counters.offload_enqueued;
    c["offload_forwarded"] = r.counters.offload_forwarded;
    c["lte_delivered"] = r.counters.lte_delivered;
    c["wifi_delivered"] = r.counters.wifi_delivered;
    c["corrupt"] = r.counters.corrupt;
    c["auth_fail"] = r.counters.auth_fail;
    c["tunnel_ignored"] = r.counters.tunnel_ignored;
    c["wire_sent"] = r.counters.wire_sent;
    c["wire_drops"] = r.counters.wire_drops;
    c["wire_corrupt"] = r.counters.wire_corrupt;
    j["counters"] = c;
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string());
    out << text;
    if (!out)
        throw IoError("write failed on " + path.string());
}

} // namespace

std::string summary_json_text(const RunResult& result) {
    return summary_json(result).dump(2) + "\n";
}

void write_run_artifacts(const std::string& out_dir, const RunResult& result) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    write_text(dir / "summary.json", summary_json_text(result));
    write_text(dir / "config.txt", serialize_config(result.config));

    std::string csv = "path,seq,bearer_id,activate,size_bytes,app_sent_ns,flow_tx_ns,recv_ns,latency_ns\n";
    for (const auto& d : result.deliveries) {
        csv += d.path + ',' + std::to_string(d.seq) + ',';
        csv += (d.bearer_id >= 0 ? std::to_string(d.bearer_id) : std::string()) + ',';
        csv += (d.activate >= 0 ? std::to_string(d.activate) : std::string()) + ',';
        csv += std::to_string(d.size_bytes) + ',' + std::to_string(d.app_sent.nanos) + ',' +
               std::to_string(d.flow_tx.nanos) + ',' + std::to_string(d.recv.nanos) + ',' +
               std::to_string(d.latency().nanos) + '\n';
    }
    write_text(dir / "deliveries.csv", csv);

    std::string agg = "index,seq,path,recv_ns\n";
    for (const auto& a : result.aggregated)
        agg += std::to_string(a.index) + ',' + std::to_string(a.seq) + ',' + a.path + ',' +
               std::to_string(a.recv.nanos) + '\n';
    write_text(dir / "aggregated.csv", agg);
}

void print_report(std::ostream& out, const RunResult& r) {
    int flow_no = 0;
    for (const auto& [key, s] : r.flows) {
        out << "Flow " << ++flow_no << " (" << ipv4_to_string(key.src) << ':' << key.src_port << " -> "
            << ipv4_to_string(key.dst) << ':' << key.dst_port << ")\n";
        out << "  Tx Packets: " << s.tx_packets << "\n";
        out << "  Rx Packets: " << s.rx_packets << "\n";
        out << "  Tx Bytes:   " << s.tx_bytes << "\n";
        out << "  Rx Bytes:   " << s.rx_bytes << "\n";
        if (s.rx_packets > 0 && s.time_last_rx > s.time_first_tx) {
            out << "  Throughput: " << std::fixed << std::setprecision(4) << throughput_kbps(s) << " Kbps\n";
            out << "  Mean Delay: " << std::fixed << std::setprecision(3)
                << static_cast<double>(mean_delay(s).nanos) / 1e6 << " ms\n";
            out.unsetf(std::ios::fixed);
        }
        out << "  Lost:       " << s.lost_packets << "\n";
    }
    if (r.flows.empty())
        out << "No flows recorded.\n";
    out << "Aggregation: delivered " << r.agg.delivered << ", lost " << r.agg.lost << ", duplicates "
        << r.agg.duplicates << ", timer expiries " << r.agg.timeouts << ", max held " << r.agg.max_held << "\n";
}

} // namespace lwasim
