#include "lwasim/lwip_path.hpp"

#include <stdexcept>
#include <string>

#include "lwasim/rng.hpp"

namespace lwasim {

LwipHeader lwipep_encapsulate(Packet& p) {
    if (!p.lwip_tag() || !p.lcid_tag())
        throw std::logic_error("lwipep: packet " + std::to_string(p.uid()) +
                               " reached the encapsulation layer without its tags");
    LwipHeader h;
    h.activate = p.lwip_tag()->activate;
    h.bearer_id = rbid_from_lcid(p.lcid_tag()->lcid);
    p.add_header(h);
    return h;
}

void tunnel_send(Packet& p, const TunnelConfig& t) {
    auto seqts = p.find_header<SeqTsHeader>();
    if (!seqts)
        throw std::logic_error("tunnel: packet " + std::to_string(p.uid()) + " has no SeqTs header");

    p.extract_header<IpUdpHeader>();

    IpUdpHeader inner;
    inner.src = t.inner_src;
    inner.dst = t.inner_dst;
    inner.src_port = t.inner_src_port;
    inner.dst_port = t.inner_dst_port;
    inner.total_length = static_cast<std::uint16_t>(p.wire_length() + IpUdpHeader::kEncodedSize);
    p.add_header(inner);

    p.set_auth_trailer(auth_tag(t.auth_key, seqts->seq));

    IpUdpHeader outer;
    outer.src = t.outer_src;
    outer.dst = t.outer_dst;
    outer.src_port = t.outer_src_port;
    outer.dst_port = t.outer_dst_port;
    outer.total_length = static_cast<std::uint16_t>(p.wire_length() + IpUdpHeader::kEncodedSize);
    p.add_header(outer);
}

TunnelRx tunnel_receive(Packet& p, const TunnelConfig& t) {
    if (p.outermost() != HeaderKind::IpUdp)
        return TunnelRx::Ignored;
    IpUdpHeader outer = p.peek_header<IpUdpHeader>();
    if (outer.dst != t.outer_dst || outer.dst_port != t.outer_dst_port)
        return TunnelRx::Ignored;
    p.remove_header<IpUdpHeader>();

    auto lwip = p.find_header<LwipHeader>();
    auto seqts = p.find_header<SeqTsHeader>();
    if (!lwip || !seqts)
        return TunnelRx::AuthFail;
    if (lwip->activate != t.expected_activate || lwip->bearer_id != t.expected_bearer)
        return TunnelRx::AuthFail;
    if (!p.auth_trailer() || *p.auth_trailer() != auth_tag(t.auth_key, seqts->seq))
        return TunnelRx::AuthFail;
    return TunnelRx::Delivered;
}

} // namespace lwasim
