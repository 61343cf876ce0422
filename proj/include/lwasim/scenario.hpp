#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lwasim/config.hpp"
#include "lwasim/engine.hpp"
#include "lwasim/flow_stats.hpp"
#include "lwasim/lwip_path.hpp"
#include "lwasim/packet.hpp"
#include "lwasim/pcap.hpp"
#include "lwasim/pdcp.hpp"
#include "lwasim/reorder.hpp"
#include "lwasim/traffic.hpp"
#include "lwasim/wlan_path.hpp"

namespace lwasim {

/// One row of the post-reorder in-sequence stream.
struct AggregatedRecord {
    std::uint64_t index = 0;
    std::uint32_t seq = 0;
    std::string path;
    SimTime recv{};
};

struct Counters {
    std::uint64_t emissions = 0;
    std::uint64_t pdcp_submitted = 0;
    std::uint64_t routed_lte = 0;
    std::uint64_t routed_offload = 0;
    std::uint64_t offload_enqueued = 0;
    std::uint64_t offload_forwarded = 0;
    std::uint64_t poll_firings = 0;
    std::uint64_t lte_delivered = 0;
    std::uint64_t wifi_delivered = 0;
    std::uint64_t corrupt = 0;
    std::uint64_t auth_fail = 0;
    std::uint64_t tunnel_ignored = 0;
    std::uint64_t wire_sent = 0;
    std::uint64_t wire_drops = 0;
    std::uint64_t wire_corrupt = 0;
    SimTime max_offload_wait{};
};

struct RunResult {
    ScenarioConfig config;
    std::map<FlowKey, FlowStats> flows;
    std::vector<DeliveryRecord> deliveries;
    std::vector<AggregatedRecord> aggregated;
    std::vector<std::uint32_t> reorder_losses;
    ReorderStats agg;
    Counters counters;
    // Per-packet hop traces, keyed by packet uid (== source sequence number).
    std::map<std::uint64_t, std::vector<std::string>> hops;
};

/// Fixed endpoint addressing shared by every scenario.
struct Endpoints {
    static constexpr const char* kRemoteHost = "10.0.0.2";
    static constexpr const char* kUe = "7.0.0.2";
    static constexpr const char* kLwaapNode = "192.168.1.1";
    static constexpr const char* kStation = "192.168.1.2";
    static constexpr std::uint16_t kAppSrcPort = 49153;
    static constexpr std::uint16_t kOffloadSrcPort = 49154;
    static constexpr std::uint16_t kSinkPort = 9;
};

/// The full single-process pipeline: remote host -> PDCP split -> LTE
/// path and/or LWAAP/LWIPEP -> Xw -> AP -> air -> station, with UE-side
/// aggregation and telemetry. In two-process runs the eNB side installs a
/// wire handler that takes offloaded PDUs out of the process instead of
/// crossing the in-memory delivery network.
class Simulation {
  public:
    Simulation(const ScenarioConfig& cfg, bool write_artifacts);

    /// Handler receives adaptation-layer PDUs (after LWAAP/LWIPEP, and
    /// after tunnel encapsulation under LWIP).
    void set_wire_handler(std::function<void(Packet&&)> handler) { wire_handler_ = std::move(handler); }

    Engine& engine() { return eng_; }
    SimTime run_end() const { return run_end_; }

    void run();

    /// Like run(), but invokes wait_before(fire_time) ahead of every event
    /// so a caller can pace simulated time against the wall clock.
    void run_paced(const std::function<void(SimTime)>& wait_before);

    /// Valid after run(); moves the accumulated result out.
    RunResult take_result();

  private:
    void finalize_run();
    void emit(std::uint32_t seq);
    void schedule_poll(SimTime at);
    void poll();
    void forward_offloaded(Packet&& p);
    void ap_receive(Packet&& p);
    void station_receive(Packet&& p);
    void ue_receive(Packet&& p);
    void accept_delivery(DeliveryRecord rec, const FlowKey& flow);
    void hop(std::uint64_t uid, const char* where) { hops_[uid].emplace_back(where); }

    ScenarioConfig cfg_;
    Engine eng_;
    OnOffConfig traffic_;
    ActivationMode mode_;
    SplitState split_;
    BearerConfig bearer_;
    OffloadQueue queue_;
    Link lte_link_;
    Link xw_link_;
    Link wifi_link_;
    TunnelConfig tunnel_;
    PacketSink ue_sink_{"lte"};
    PacketSink sta_sink_{"wifi"};
    ReorderBuffer reorder_;
    FlowTable flows_;
    FlowKey lte_flow_;
    FlowKey wifi_flow_;
    PcapWriter pcap_lte_;
    PcapWriter pcap_xw_;
    PcapWriter pcap_tunnel_;
    PcapWriter pcap_air_;
    Counters counters_;
    std::vector<DeliveryRecord> deliveries_;
    std::vector<AggregatedRecord> aggregated_;
    std::vector<std::uint32_t> losses_;
    std::map<std::uint64_t, std::vector<std::string>> hops_;
    std::map<std::uint64_t, SimTime> flow_tx_time_;
    std::function<void(Packet&&)> wire_handler_;
    SimTime run_end_{};
    bool ran_ = false;
};

/// Builds, runs and (optionally) writes artifacts for an in-process run.
RunResult run_scenario(const ScenarioConfig& cfg, bool write_artifacts = true);

} // namespace lwasim
