#include "lwasim/wlan_path.hpp"

#include <stdexcept>
#include <string>

namespace lwasim {

LwaHeader lwaap_encapsulate(Packet& p) {
    if (!p.lwa_tag() || !p.lcid_tag())
        throw std::logic_error("lwaap: packet " + std::to_string(p.uid()) +
                               " reached the adaptation layer without its tags");
    LwaHeader h;
    h.activate = p.lwa_tag()->activate;
    h.bearer_id = rbid_from_lcid(p.lcid_tag()->lcid);
    p.add_header(h);
    return h;
}

void readdress_for_delivery(Packet& p, std::uint32_t src, std::uint32_t dst, std::uint16_t src_port,
                            std::uint16_t dst_port) {
    p.extract_header<IpUdpHeader>();
    IpUdpHeader fresh;
    fresh.src = src;
    fresh.dst = dst;
    fresh.src_port = src_port;
    fresh.dst_port = dst_port;
    fresh.total_length = static_cast<std::uint16_t>(p.wire_length() + IpUdpHeader::kEncodedSize);
    p.add_header(fresh);
}

} // namespace lwasim
