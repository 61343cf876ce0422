#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <string>

#include "lwasim/sim_time.hpp"

namespace lwasim {

/// Classic pcap (v2.4) writer. All fields are written big-endian so the
/// file leads with the literal bytes a1 b2 c3 d4; readers byte-swap as
/// needed. Timestamps are microseconds, truncated from the nanosecond
/// simulation clock.
class PcapWriter {
  public:
    static constexpr std::uint32_t kLinkRawIp = 101; // LINKTYPE_RAW
    static constexpr std::uint32_t kLinkUser0 = 147; // abstract air framing

    PcapWriter() = default;
    ~PcapWriter() { close(); }
    PcapWriter(const PcapWriter&) = delete;
    PcapWriter& operator=(const PcapWriter&) = delete;

    void open(const std::string& path, std::uint32_t link_type);
    bool is_open() const { return out_.is_open(); }

    void write(SimTime ts, std::span<const std::uint8_t> frame);

    std::uint64_t records() const { return records_; }

    void close();

  private:
    void u16(std::uint16_t v);
    void u32(std::uint32_t v);

    std::ofstream out_;
    std::string path_;
    std::uint64_t records_ = 0;
};

} // namespace lwasim
