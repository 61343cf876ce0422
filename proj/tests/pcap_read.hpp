#pragma once

// Test-only pcap reader, written against the published classic-pcap file
// layout rather than the writer implementation, so round-trip tests stay
// honest.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcapread {

struct Record {
    std::uint32_t ts_sec = 0;
    std::uint32_t ts_usec = 0;
    std::uint32_t incl_len = 0;
    std::uint32_t orig_len = 0;
    std::vector<std::uint8_t> bytes;
};

struct File {
    std::uint32_t magic = 0;
    std::uint16_t version_major = 0;
    std::uint16_t version_minor = 0;
    std::uint32_t snaplen = 0;
    std::uint32_t link_type = 0;
    std::vector<Record> records;
};

inline File read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::size_t pos = 0;
    auto u32 = [&](bool swap) -> std::uint32_t {
        if (pos + 4 > raw.size())
            throw std::runtime_error(path + ": truncated pcap");
        std::uint32_t v;
        if (swap)
            v = raw[pos] | (raw[pos + 1] << 8) | (raw[pos + 2] << 16) | (std::uint32_t(raw[pos + 3]) << 24);
        else
            v = (std::uint32_t(raw[pos]) << 24) | (raw[pos + 1] << 16) | (raw[pos + 2] << 8) | raw[pos + 3];
        pos += 4;
        return v;
    };
    auto u16 = [&](bool swap) -> std::uint16_t {
        if (pos + 2 > raw.size())
            throw std::runtime_error(path + ": truncated pcap");
        std::uint16_t v;
        if (swap)
            v = static_cast<std::uint16_t>(raw[pos] | (raw[pos + 1] << 8));
        else
            v = static_cast<std::uint16_t>((raw[pos] << 8) | raw[pos + 1]);
        pos += 2;
        return v;
    };

    File f;
    f.magic = u32(false);
    bool swap;
    if (f.magic == 0xa1b2c3d4)
        swap = false; // fields stored big-endian
    else if (f.magic == 0xd4c3b2a1)
        swap = true;
    else
        throw std::runtime_error(path + ": bad pcap magic");
    f.version_major = u16(swap);
    f.version_minor = u16(swap);
    u32(swap); // thiszone
    u32(swap); // sigfigs
    f.snaplen = u32(swap);
    f.link_type = u32(swap);

    while (pos < raw.size()) {
        Record r;
        r.ts_sec = u32(swap);
        r.ts_usec = u32(swap);
        r.incl_len = u32(swap);
        r.orig_len = u32(swap);
        if (pos + r.incl_len > raw.size())
            throw std::runtime_error(path + ": record overruns file");
        r.bytes.assign(raw.begin() + static_cast<long>(pos), raw.begin() + static_cast<long>(pos + r.incl_len));
        pos += r.incl_len;
        f.records.push_back(std::move(r));
    }
    return f;
}

} // namespace pcapread
