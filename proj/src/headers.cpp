#include "lwasim/headers.hpp"

#include <sstream>

namespace lwasim {

std::string header_kind_name(HeaderKind k) {
    switch (k) {
    case HeaderKind::SeqTs:
        return "SeqTs";
    case HeaderKind::Lwa:
        return "Lwa";
    case HeaderKind::Lwip:
        return "Lwip";
    case HeaderKind::IpUdp:
        return "IpUdp";
    case HeaderKind::Framing:
        return "Framing";
    }
    return "?";
}

std::vector<std::uint8_t> SeqTsHeader::encode() const {
    ByteWriter w;
    w.u32be(seq);
    w.u64be(ts.nanos);
    return w.take();
}

SeqTsHeader SeqTsHeader::decode(ByteReader& in) {
    SeqTsHeader h;
    h.seq = in.u32be();
    h.ts = SimTime{in.u64be()};
    return h;
}

std::vector<std::uint8_t> LwaHeader::encode() const {
    if (activate > 2)
        throw EncodeError("LwaHeader: activate " + std::to_string(activate) + " outside {0,1,2}");
    ByteWriter w;
    w.u8(activate);
    w.u8(bearer_id);
    return w.take();
}

LwaHeader LwaHeader::decode(ByteReader& in) {
    LwaHeader h;
    h.activate = in.u8();
    h.bearer_id = in.u8();
    if (h.activate > 2)
        throw DecodeError("LwaHeader: activate " + std::to_string(h.activate) + " outside {0,1,2}");
    return h;
}

std::vector<std::uint8_t> LwipHeader::encode() const {
    if (activate > 1)
        throw EncodeError("LwipHeader: activate " + std::to_string(activate) + " outside {0,1}");
    ByteWriter w;
    w.u8(activate);
    w.u8(bearer_id);
    return w.take();
}

LwipHeader LwipHeader::decode(ByteReader& in) {
    LwipHeader h;
    h.activate = in.u8();
    h.bearer_id = in.u8();
    if (h.activate > 1)
        throw DecodeError("LwipHeader: activate " + std::to_string(h.activate) + " outside {0,1}");
    return h;
}

std::vector<std::uint8_t> IpUdpHeader::encode() const {
    ByteWriter w;
    // IPv4, no options.
    w.u8(0x45);
    w.u8(0x00);
    w.u16be(total_length);
    w.u16be(0); // identification
    w.u16be(0); // flags / fragment offset
    w.u8(64);   // ttl
    w.u8(17);   // protocol: UDP
    w.u16be(0); // header checksum (not computed)
    w.u32be(src);
    w.u32be(dst);
    // UDP.
    w.u16be(src_port);
    w.u16be(dst_port);
    w.u16be(total_length >= 20 ? static_cast<std::uint16_t>(total_length - 20) : 0);
    w.u16be(0); // checksum (not computed)
    return w.take();
}

IpUdpHeader IpUdpHeader::decode(ByteReader& in) {
    IpUdpHeader h;
    std::uint8_t version_ihl = in.u8();
    if (version_ihl != 0x45)
        throw DecodeError("IpUdpHeader: expected IPv4 without options (0x45)");
    in.skip(1); // tos
    h.total_length = in.u16be();
    in.skip(4); // id + flags/frag
    in.skip(1); // ttl
    std::uint8_t proto = in.u8();
    if (proto != 17)
        throw DecodeError("IpUdpHeader: protocol " + std::to_string(proto) + " is not UDP");
    in.skip(2); // checksum
    h.src = in.u32be();
    h.dst = in.u32be();
    h.src_port = in.u16be();
    h.dst_port = in.u16be();
    in.skip(4); // udp length + checksum
    return h;
}

std::uint8_t rbid_from_lcid(std::uint8_t lcid) {
    if (lcid < 2)
        throw DecodeError("rbid_from_lcid: lcid " + std::to_string(lcid) + " is not a data bearer");
    return static_cast<std::uint8_t>(lcid - 2);
}

std::uint32_t parse_ipv4(const std::string& dotted) {
    std::uint32_t parts[4];
    char dot;
    std::istringstream in(dotted);
    for (int i = 0; i < 4; ++i) {
        if (!(in >> parts[i]) || parts[i] > 255)
            throw ConfigError("invalid IPv4 address: " + dotted);
        if (i < 3 && (!(in >> dot) || dot != '.'))
            throw ConfigError("invalid IPv4 address: " + dotted);
    }
    if (in.rdbuf()->in_avail() != 0)
        throw ConfigError("invalid IPv4 address: " + dotted);
    return (parts[0] << 24) | (parts[1] << 16) | (parts[2] << 8) | parts[3];
}

std::string ipv4_to_string(std::uint32_t addr) {
    std::ostringstream out;
    out << ((addr >> 24) & 0xff) << '.' << ((addr >> 16) & 0xff) << '.' << ((addr >> 8) & 0xff) << '.'
        << (addr & 0xff);
    return out.str();
}

} // namespace lwasim
