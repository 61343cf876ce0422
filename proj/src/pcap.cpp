#include "lwasim/pcap.hpp"

#include "lwasim/errors.hpp"

namespace lwasim {

void PcapWriter::u16(std::uint16_t v) {
    const char bytes[2] = {static_cast<char>(v >> 8), static_cast<char>(v)};
    out_.write(bytes, 2);
}

void PcapWriter::u32(std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16), static_cast<char>(v >> 8),
                           static_cast<char>(v)};
    out_.write(bytes, 4);
}

void PcapWriter::open(const std::string& path, std::uint32_t link_type) {
    path_ = path;
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_)
        throw IoError("pcap: cannot open " + path);
    u32(0xa1b2c3d4); // magic
    u16(2);          // version major
    u16(4);          // version minor
    u32(0);          // thiszone
    u32(0);          // sigfigs
    u32(65535);      // snaplen
    u32(link_type);
    if (!out_)
        throw IoError("pcap: write failed on " + path);
}

void PcapWriter::write(SimTime ts, std::span<const std::uint8_t> frame) {
    if (!out_.is_open())
        throw IoError("pcap: write on closed file");
    u32(static_cast<std::uint32_t>(ts.nanos / 1000000000ull));
    u32(static_cast<std::uint32_t>((ts.nanos % 1000000000ull) / 1000ull));
    u32(static_cast<std::uint32_t>(frame.size()));
    u32(static_cast<std::uint32_t>(frame.size()));
    out_.write(reinterpret_cast<const char*>(frame.data()), static_cast<std::streamsize>(frame.size()));
    if (!out_)
        throw IoError("pcap: write failed on " + path_);
    ++records_;
}

void PcapWriter::close() {
    if (out_.is_open()) {
        out_.flush();
        if (!out_)
            throw IoError("pcap: flush failed on " + path_);
        out_.close();
    }
}

} // namespace lwasim
