#include "lwasim/traffic.hpp"

namespace lwasim {

SimTime emission_period(const OnOffConfig& cfg) {
    return SimTime{cfg.app_packet_bytes * 8ull * 1000000000ull / cfg.rate_bps};
}

std::vector<SimTime> emission_schedule(const OnOffConfig& cfg) {
    std::vector<SimTime> times;
    if (cfg.stop < cfg.start)
        return times;
    const SimTime period = emission_period(cfg);
    for (SimTime t = cfg.start; t <= cfg.stop; t += period) {
        times.push_back(t);
        if (period.nanos == 0)
            break;
    }
    return times;
}

Packet make_app_packet(const OnOffConfig& cfg, std::uint32_t seq, SimTime now) {
    Packet p(seq, cfg.app_packet_bytes - SeqTsHeader::kEncodedSize);
    p.add_header(SeqTsHeader{seq, now});
    return p;
}

std::optional<DeliveryRecord> PacketSink::receive(Packet packet, SimTime now) {
    DeliveryRecord rec;
    rec.path = path_;
    rec.size_bytes = packet.wire_length();
    rec.recv = now;
    try {
        while (auto kind = packet.outermost()) {
            switch (*kind) {
            case HeaderKind::IpUdp:
                packet.remove_header<IpUdpHeader>();
                break;
            case HeaderKind::Framing:
                packet.remove_framing();
                break;
            case HeaderKind::Lwa: {
                LwaHeader h = packet.remove_header<LwaHeader>();
                rec.activate = h.activate;
                rec.bearer_id = h.bearer_id;
                break;
            }
            case HeaderKind::Lwip: {
                LwipHeader h = packet.remove_header<LwipHeader>();
                rec.activate = h.activate;
                rec.bearer_id = h.bearer_id;
                break;
            }
            case HeaderKind::SeqTs: {
                SeqTsHeader h = packet.remove_header<SeqTsHeader>();
                rec.seq = h.seq;
                rec.app_sent = h.ts;
                return rec;
            }
            }
        }
    } catch (const DecodeError&) {
        // fall through to the corrupt count
    }
    ++corrupt_;
    return std::nullopt;
}

} // namespace lwasim
