#include "lwasim/scenario.hpp"

#include <filesystem>

#include "lwasim/artifacts.hpp"

namespace lwasim {

namespace {

LinkModel lte_model(const ScenarioConfig& c) {
    return LinkModel{c.lte_rate_bps, SimTime::us(c.lte_delay_us), 0};
}
LinkModel xw_model(const ScenarioConfig& c) {
    return LinkModel{c.xw_rate_bps, SimTime::us(c.xw_delay_us), 0};
}
LinkModel wifi_model(const ScenarioConfig& c) {
    return LinkModel{c.wifi_rate_bps, SimTime::us(c.wifi_delay_us), c.wifi_framing_overhead_bytes};
}

} // namespace

Simulation::Simulation(const ScenarioConfig& cfg, bool write_artifacts)
    : cfg_(cfg), lte_link_(eng_, lte_model(cfg)), xw_link_(eng_, xw_model(cfg)),
      wifi_link_(eng_, wifi_model(cfg)), reorder_(eng_, cfg.t_reordering()) {
    traffic_ = OnOffConfig{cfg.rate_bps, cfg.app_packet_bytes, cfg.traffic_start(), cfg.traffic_stop()};
    mode_ = ActivationMode{cfg.lwa_mode, cfg.lwip_mode};
    split_ = SplitState{0, cfg.split_modulus};
    bearer_ = BearerConfig{1, cfg.pdcp_rrc_overhead_bytes};

    lte_flow_ = FlowKey{parse_ipv4(Endpoints::kRemoteHost), parse_ipv4(Endpoints::kUe), Endpoints::kAppSrcPort,
                        Endpoints::kSinkPort};
    if (mode_.lwip == 1) {
        // LWIP flow statistics hook the station IP layer: the inner
        // (virtual-address) datagram, like the in-paper flow monitor.
        wifi_flow_ = FlowKey{parse_ipv4(cfg.tunnel_src), parse_ipv4(cfg.tunnel_dst), Endpoints::kOffloadSrcPort,
                             Endpoints::kSinkPort};
    } else {
        wifi_flow_ = FlowKey{parse_ipv4(Endpoints::kLwaapNode), parse_ipv4(Endpoints::kStation),
                             Endpoints::kOffloadSrcPort, Endpoints::kSinkPort};
    }

    tunnel_ = TunnelConfig{parse_ipv4(cfg.tunnel_src),
                           parse_ipv4(cfg.tunnel_dst),
                           Endpoints::kOffloadSrcPort,
                           Endpoints::kSinkPort,
                           parse_ipv4(Endpoints::kLwaapNode),
                           parse_ipv4(Endpoints::kStation),
                           Endpoints::kOffloadSrcPort,
                           Endpoints::kSinkPort,
                           cfg.effective_auth_key(),
                           /*expected_activate=*/1,
                           /*expected_bearer=*/bearer_.rbid};

    reorder_.set_deliver_handler([this](const DeliveryRecord& rec, SimTime now) {
        aggregated_.push_back(AggregatedRecord{aggregated_.size(), rec.seq, rec.path, now});
    });
    reorder_.set_loss_handler([this](std::uint32_t seq, SimTime) { losses_.push_back(seq); });

    if (write_artifacts) {
        std::filesystem::create_directories(cfg.out_dir);
        auto path = [&](const char* name) { return (std::filesystem::path(cfg.out_dir) / name).string(); };
        pcap_lte_.open(path("lte.pcap"), PcapWriter::kLinkRawIp);
        pcap_xw_.open(path("xw.pcap"), PcapWriter::kLinkRawIp);
        pcap_tunnel_.open(path("tunnel.pcap"), PcapWriter::kLinkRawIp);
        pcap_air_.open(path("air.pcap"), PcapWriter::kLinkUser0);
    }

    for (SimTime t : emission_schedule(traffic_)) {
        const auto seq = static_cast<std::uint32_t>(counters_.emissions++);
        eng_.schedule(t, [this, seq] { emit(seq); });
    }
    schedule_poll(traffic_.start + cfg_.poll_interval());

    const SimTime path_delays = SimTime::us(cfg.lte_delay_us + cfg.xw_delay_us + cfg.wifi_delay_us);
    run_end_ = traffic_.stop + cfg_.t_reordering() + path_delays + SimTime::ms(200);
}

void Simulation::schedule_poll(SimTime at) {
    // The last enqueue can happen no later than traffic stop, so the chain
    // ends one interval past it.
    if (at > traffic_.stop + cfg_.poll_interval())
        return;
    eng_.schedule(at, [this, at] {
        poll();
        schedule_poll(at + cfg_.poll_interval());
    });
}

void Simulation::emit(std::uint32_t seq) {
    const SimTime now = eng_.now();
    Packet p = make_app_packet(traffic_, seq, now);
    IpUdpHeader ip;
    ip.src = lte_flow_.src;
    ip.dst = lte_flow_.dst;
    ip.src_port = lte_flow_.src_port;
    ip.dst_port = lte_flow_.dst_port;
    ip.total_length = static_cast<std::uint16_t>(p.wire_length() + IpUdpHeader::kEncodedSize);
    p.add_header(ip);

    ++counters_.pdcp_submitted;
    hop(p.uid(), "pdcp");
    const RouteDecision route = pdcp_route(mode_, split_);
    if (route == RouteDecision::Lte) {
        ++counters_.routed_lte;
        flows_.record_tx(lte_flow_, p.wire_length(), now);
        flow_tx_time_[p.uid()] = now;
        if (pcap_lte_.is_open())
            pcap_lte_.write(now, p.serialize(cfg_.seed));
        hop(p.uid(), "lte");
        lte_link_.transmit(p.wire_length(), [this, p]() mutable { ue_receive(std::move(p)); });
    } else {
        ++counters_.routed_offload;
        tag_for_offload(p, bearer_, mode_);
        queue_.enqueue(std::move(p), now);
    }
}

void Simulation::poll() {
    ++counters_.poll_firings;
    for (auto& entry : queue_.drain()) {
        ++counters_.offload_forwarded;
        const SimTime waited = eng_.now() - entry.enqueued;
        counters_.max_offload_wait = std::max(counters_.max_offload_wait, waited);
        forward_offloaded(std::move(entry.packet));
    }
}

void Simulation::forward_offloaded(Packet&& p) {
    const SimTime now = eng_.now();
    if (mode_.lwip == 1) {
        lwipep_encapsulate(p);
        hop(p.uid(), "lwipep");
        tunnel_send(p, tunnel_);
        hop(p.uid(), "tunnel");
        if (wire_handler_) {
            wire_handler_(std::move(p));
            return;
        }
        flows_.record_tx(wifi_flow_, p.wire_length() - IpUdpHeader::kEncodedSize, now);
        flow_tx_time_[p.uid()] = now;
        const auto frame = p.serialize(cfg_.seed);
        if (pcap_tunnel_.is_open())
            pcap_tunnel_.write(now, frame);
        if (pcap_xw_.is_open())
            pcap_xw_.write(now, frame);
    } else {
        lwaap_encapsulate(p);
        hop(p.uid(), "lwaap");
        if (wire_handler_) {
            wire_handler_(std::move(p));
            return;
        }
        readdress_for_delivery(p, wifi_flow_.src, wifi_flow_.dst, wifi_flow_.src_port, wifi_flow_.dst_port);
        flows_.record_tx(wifi_flow_, p.wire_length(), now);
        flow_tx_time_[p.uid()] = now;
        if (pcap_xw_.is_open())
            pcap_xw_.write(now, p.serialize(cfg_.seed));
    }
    hop(p.uid(), "xw");
    xw_link_.transmit(p.wire_length(), [this, p]() mutable { ap_receive(std::move(p)); });
}

void Simulation::ap_receive(Packet&& p) {
    const SimTime now = eng_.now();
    hop(p.uid(), "ap");
    const std::size_t overhead = wifi_link_.model().framing_overhead_bytes;
    if (pcap_air_.is_open()) {
        std::vector<std::uint8_t> frame(overhead, 0);
        const auto body = p.serialize(cfg_.seed);
        frame.insert(frame.end(), body.begin(), body.end());
        pcap_air_.write(now, frame);
    }
    hop(p.uid(), "air");
    // Framing exists only on the air trace; the station strips it.
    wifi_link_.transmit(p.wire_length() + overhead, [this, p]() mutable { station_receive(std::move(p)); });
}

void Simulation::station_receive(Packet&& p) {
    const SimTime now = eng_.now();
    hop(p.uid(), "station");
    if (mode_.lwip == 1) {
        switch (tunnel_receive(p, tunnel_)) {
        case TunnelRx::AuthFail:
            ++counters_.auth_fail;
            return;
        case TunnelRx::Ignored:
            ++counters_.tunnel_ignored;
            return;
        case TunnelRx::Delivered:
            break;
        }
    }
    const std::uint64_t uid = p.uid();
    if (auto rec = sta_sink_.receive(std::move(p), now)) {
        ++counters_.wifi_delivered;
        rec->flow_tx = flow_tx_time_[uid];
        accept_delivery(std::move(*rec), wifi_flow_);
    }
}

void Simulation::ue_receive(Packet&& p) {
    const SimTime now = eng_.now();
    hop(p.uid(), "ue");
    const std::uint64_t uid = p.uid();
    if (auto rec = ue_sink_.receive(std::move(p), now)) {
        ++counters_.lte_delivered;
        rec->flow_tx = flow_tx_time_[uid];
        accept_delivery(std::move(*rec), lte_flow_);
    }
}

void Simulation::accept_delivery(DeliveryRecord rec, const FlowKey& flow) {
    flows_.record_rx(flow, rec.size_bytes, rec.recv, rec.recv - rec.flow_tx);
    deliveries_.push_back(rec);
    reorder_.ingest(rec);
}

void Simulation::run() {
    eng_.run_until(run_end_);
    finalize_run();
}

void Simulation::run_paced(const std::function<void(SimTime)>& wait_before) {
    while (auto next = eng_.next_event_time()) {
        if (*next > run_end_)
            break;
        if (wait_before)
            wait_before(*next);
        eng_.run_one();
    }
    eng_.run_until(run_end_);
    finalize_run();
}

void Simulation::finalize_run() {
    reorder_.final_flush();
    counters_.offload_enqueued = queue_.enqueued_total();
    counters_.corrupt = ue_sink_.corrupt() + sta_sink_.corrupt();
    flows_.finalize();
    pcap_lte_.close();
    pcap_xw_.close();
    pcap_tunnel_.close();
    pcap_air_.close();
    ran_ = true;
}

RunResult Simulation::take_result() {
    RunResult res;
    res.config = cfg_;
    res.flows = flows_.flows();
    res.deliveries = std::move(deliveries_);
    res.aggregated = std::move(aggregated_);
    res.reorder_losses = std::move(losses_);
    res.agg = reorder_.stats();
    res.counters = counters_;
    res.hops = std::move(hops_);
    return res;
}

RunResult run_scenario(const ScenarioConfig& cfg, bool write_artifacts) {
    if (cfg.role != Role::None)
        throw ConfigError("run_scenario handles in-process runs only; use the enb/sta runners");
    Simulation sim(cfg, write_artifacts);
    sim.run();
    RunResult res = sim.take_result();
    if (write_artifacts)
        write_run_artifacts(cfg.out_dir, res);
    return res;
}

} // namespace lwasim
