#include "lwasim/wire.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

#include "lwasim/artifacts.hpp"
#include "lwasim/rng.hpp"

namespace lwasim {

std::vector<std::uint8_t> sentinel_frame() {
    return {0xff, 0xff};
}

bool is_sentinel(std::span<const std::uint8_t> datagram) {
    return datagram.size() == 2 && datagram[0] == 0xff && datagram[1] == 0xff;
}

std::vector<std::uint8_t> encode_wire_frame(const Packet& pdu, bool lwip, std::uint64_t seed) {
    auto seqts = pdu.find_header<SeqTsHeader>();
    if (!seqts)
        throw std::logic_error("wire: PDU " + std::to_string(pdu.uid()) + " has no SeqTs header");

    std::vector<std::uint8_t> payload(pdu.payload_len());
    fill_payload(seed, pdu.uid(), payload);
    if (pdu.auth_trailer() && payload.size() >= 4) {
        const std::uint32_t v = *pdu.auth_trailer();
        const std::size_t p = payload.size() - 4;
        payload[p] = static_cast<std::uint8_t>(v >> 24);
        payload[p + 1] = static_cast<std::uint8_t>(v >> 16);
        payload[p + 2] = static_cast<std::uint8_t>(v >> 8);
        payload[p + 3] = static_cast<std::uint8_t>(v);
    }

    ByteWriter w;
    std::vector<std::uint8_t> out;
    if (lwip) {
        auto outer = pdu.find_header<IpUdpHeader>();
        auto lwiph = pdu.find_header<LwipHeader>();
        if (!outer || !lwiph)
            throw std::logic_error("wire: LWIP PDU " + std::to_string(pdu.uid()) + " is missing headers");
        IpUdpHeader hdr = *outer;
        hdr.total_length = static_cast<std::uint16_t>(IpUdpHeader::kEncodedSize + LwipHeader::kEncodedSize +
                                                      SeqTsHeader::kEncodedSize + payload.size());
        auto b = hdr.encode();
        out.insert(out.end(), b.begin(), b.end());
        b = lwiph->encode();
        out.insert(out.end(), b.begin(), b.end());
    } else {
        auto lwah = pdu.find_header<LwaHeader>();
        if (!lwah)
            throw std::logic_error("wire: LWA PDU " + std::to_string(pdu.uid()) + " is missing its header");
        auto b = lwah->encode();
        out.insert(out.end(), b.begin(), b.end());
    }
    auto b = seqts->encode();
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

WireFrame decode_wire_frame(std::span<const std::uint8_t> datagram, bool lwip) {
    ByteReader in(datagram);
    WireFrame f;
    if (lwip) {
        f.outer = IpUdpHeader::decode(in);
        LwipHeader h = LwipHeader::decode(in);
        f.activate = h.activate;
        f.bearer_id = h.bearer_id;
    } else {
        LwaHeader h = LwaHeader::decode(in);
        f.activate = h.activate;
        f.bearer_id = h.bearer_id;
    }
    SeqTsHeader st = SeqTsHeader::decode(in);
    f.seq = st.seq;
    f.ts = st.ts;
    auto rest = in.rest();
    f.payload.assign(rest.begin(), rest.end());
    return f;
}

bool verify_frame_payload(const WireFrame& frame, bool lwip, std::uint64_t seed, std::uint64_t auth_key) {
    std::vector<std::uint8_t> expected(frame.payload.size());
    fill_payload(seed, frame.seq, expected);
    if (lwip && expected.size() >= 4) {
        const std::uint32_t v = auth_tag(auth_key, frame.seq);
        const std::size_t p = expected.size() - 4;
        expected[p] = static_cast<std::uint8_t>(v >> 24);
        expected[p + 1] = static_cast<std::uint8_t>(v >> 16);
        expected[p + 2] = static_cast<std::uint8_t>(v >> 8);
        expected[p + 3] = static_cast<std::uint8_t>(v);
    }
    return expected == frame.payload;
}

// ---------------------------------------------------------------------------
// Socket wrapper

UdpSocket::UdpSocket() {
    fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd_ < 0)
        throw IoError(std::string("socket: ") + std::strerror(errno));
}

UdpSocket::~UdpSocket() {
    if (fd_ >= 0)
        ::close(fd_);
}

void UdpSocket::bind(std::uint16_t port) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0)
        throw IoError("bind to port " + std::to_string(port) + ": " + std::strerror(errno));
}

std::uint16_t UdpSocket::local_port() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    if (::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len) != 0)
        throw IoError(std::string("getsockname: ") + std::strerror(errno));
    return ntohs(addr.sin_port);
}

void UdpSocket::set_destination(const std::string& host, std::uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_DGRAM;
    addrinfo* res = nullptr;
    if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0 || res == nullptr)
        throw IoError("cannot resolve " + host);
    int rc = ::connect(fd_, res->ai_addr, res->ai_addrlen);
    ::freeaddrinfo(res);
    if (rc != 0)
        throw IoError("connect " + host + ":" + std::to_string(port) + ": " + std::strerror(errno));
}

bool UdpSocket::send(std::span<const std::uint8_t> datagram) {
    ssize_t n = ::send(fd_, datagram.data(), datagram.size(), 0);
    return n == static_cast<ssize_t>(datagram.size());
}

std::optional<std::vector<std::uint8_t>> UdpSocket::recv(int timeout_ms) {
    pollfd pfd{fd_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, timeout_ms);
    if (rc <= 0)
        return std::nullopt;
    std::vector<std::uint8_t> buf(65536);
    ssize_t n = ::recv(fd_, buf.data(), buf.size(), 0);
    if (n < 0)
        return std::nullopt;
    buf.resize(static_cast<std::size_t>(n));
    return buf;
}

std::pair<std::string, std::uint16_t> parse_host_port(const std::string& peer) {
    auto colon = peer.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == peer.size())
        throw ConfigError("peer must be host:port, got '" + peer + "'");
    int port = std::stoi(peer.substr(colon + 1));
    if (port <= 0 || port > 65535)
        throw ConfigError("peer port out of range in '" + peer + "'");
    return {peer.substr(0, colon), static_cast<std::uint16_t>(port)};
}

// ---------------------------------------------------------------------------
// eNB process

int run_enb(const ScenarioConfig& cfg, std::ostream& out) {
    auto [host, port] = parse_host_port(cfg.peer);
    UdpSocket sock;
    sock.set_destination(host, port);

    const bool lwip = cfg.lwip_mode == 1;
    std::uint64_t sent = 0, drops = 0;

    Simulation sim(cfg, /*write_artifacts=*/true);
    sim.set_wire_handler([&](Packet&& pdu) {
        const auto frame = encode_wire_frame(pdu, lwip, cfg.seed);
        for (int attempt = 0; attempt < 3; ++attempt) {
            if (sock.send(frame)) {
                ++sent;
                return;
            }
        }
        ++drops;
    });

    if (cfg.pacing == Pacing::Real) {
        const auto wall_start = std::chrono::steady_clock::now();
        sim.run_paced([&](SimTime at) {
            std::this_thread::sleep_until(wall_start + std::chrono::nanoseconds(at.nanos));
        });
    } else {
        sim.run();
    }
    sock.send(sentinel_frame());

    RunResult res = sim.take_result();
    res.counters.wire_sent = sent;
    res.counters.wire_drops = drops;
    write_run_artifacts(cfg.out_dir, res);
    print_report(out, res);
    out << "Wire: sent " << sent << " datagrams to " << cfg.peer << ", drops " << drops << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// Station process

namespace {

struct InboundQueue {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<std::vector<std::uint8_t>> frames;

    void push(std::vector<std::uint8_t> f) {
        {
            std::lock_guard<std::mutex> lock(mu);
            frames.push_back(std::move(f));
        }
        cv.notify_one();
    }

    std::vector<std::vector<std::uint8_t>> pop_all(int wait_ms) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait_for(lock, std::chrono::milliseconds(wait_ms), [this] { return !frames.empty(); });
        std::vector<std::vector<std::uint8_t>> out(std::make_move_iterator(frames.begin()),
                                                   std::make_move_iterator(frames.end()));
        frames.clear();
        return out;
    }
};

} // namespace

int run_sta(const ScenarioConfig& cfg, std::ostream& out) {
    UdpSocket sock;
    sock.bind(cfg.listen_port);

    const bool lwip = cfg.lwip_mode == 1;
    const std::uint64_t auth_key = cfg.effective_auth_key();

    // All simulation state lives on this thread; the receiver thread only
    // moves raw datagrams into the queue.
    Engine eng;
    ReorderBuffer reorder(eng, cfg.t_reordering());
    FlowTable flows;
    Counters counters;
    std::vector<DeliveryRecord> deliveries;
    std::vector<AggregatedRecord> aggregated;
    std::vector<std::uint32_t> losses;
    reorder.set_deliver_handler([&](const DeliveryRecord& rec, SimTime now) {
        aggregated.push_back(AggregatedRecord{aggregated.size(), rec.seq, rec.path, now});
    });
    reorder.set_loss_handler([&](std::uint32_t seq, SimTime) { losses.push_back(seq); });

    const FlowKey flow{parse_ipv4(Endpoints::kLwaapNode), parse_ipv4(Endpoints::kStation),
                       Endpoints::kOffloadSrcPort, Endpoints::kSinkPort};

    InboundQueue queue;
    std::atomic<bool> stop{false};
    std::thread receiver([&] {
        while (!stop.load()) {
            if (auto frame = sock.recv(50))
                queue.push(std::move(*frame));
        }
    });

    const auto wall_start = std::chrono::steady_clock::now();
    auto wall_now = [&] {
        return SimTime{static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                                      std::chrono::steady_clock::now() - wall_start)
                                                      .count())};
    };

    bool done = false;
    bool saw_sentinel = false;
    SimTime last_activity{};
    while (!done) {
        auto batch = queue.pop_all(1);
        eng.run_until(wall_now());
        for (auto& frame : batch) {
            last_activity = eng.now();
            if (is_sentinel(frame)) {
                saw_sentinel = true;
                done = true;
                break;
            }
            WireFrame wf;
            try {
                wf = decode_wire_frame(frame, lwip);
            } catch (const DecodeError&) {
                ++counters.wire_corrupt;
                continue;
            }
            if (!verify_frame_payload(wf, lwip, cfg.seed, auth_key)) {
                if (lwip)
                    ++counters.auth_fail;
                else
                    ++counters.wire_corrupt;
                continue;
            }
            DeliveryRecord rec;
            rec.path = "wifi";
            rec.seq = wf.seq;
            rec.bearer_id = wf.bearer_id;
            rec.activate = wf.activate;
            rec.size_bytes = frame.size();
            rec.app_sent = wf.ts;
            rec.flow_tx = wf.ts;
            rec.recv = eng.now();
            ++counters.wifi_delivered;
            flows.record_rx(flow, rec.size_bytes, rec.recv, SimTime{0});
            deliveries.push_back(rec);
            reorder.ingest(rec);
        }
        if (!done && eng.now() - last_activity > SimTime::ms(cfg.idle_timeout_ms)) {
            out << "Warning: idle timeout after " << cfg.idle_timeout_ms << " ms without traffic or sentinel\n";
            done = true;
        }
    }
    stop.store(true);
    receiver.join();

    reorder.final_flush();
    flows.finalize();

    RunResult res;
    res.config = cfg;
    res.flows = flows.flows();
    res.deliveries = std::move(deliveries);
    res.aggregated = std::move(aggregated);
    res.reorder_losses = std::move(losses);
    res.agg = reorder.stats();
    res.counters = counters;
    write_run_artifacts(cfg.out_dir, res);
    print_report(out, res);
    out << "Wire: received " << res.counters.wifi_delivered << " datagrams, corrupt "
        << res.counters.wire_corrupt << ", auth failures " << res.counters.auth_fail
        << (saw_sentinel ? ", clean end-of-run" : "") << "\n";
    return 0;
}

} // namespace lwasim
