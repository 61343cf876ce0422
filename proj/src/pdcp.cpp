#include "lwasim/pdcp.hpp"

namespace lwasim {

RouteDecision pdcp_route(const ActivationMode& mode, SplitState& split) {
    const std::uint64_t remainder = split.counter % split.modulus;
    ++split.counter;
    if (mode.lwa == 2 || mode.lwip == 1)
        return RouteDecision::Offload;
    if (mode.lwa == 1)
        return remainder == 0 ? RouteDecision::Lte : RouteDecision::Offload;
    return RouteDecision::Lte;
}

void tag_for_offload(Packet& p, const BearerConfig& bearer, const ActivationMode& mode) {
    if (mode.lwip == 1)
        p.set_lwip_tag(LwipTag{mode.lwip});
    else
        p.set_lwa_tag(LwaTag{mode.lwa});
    p.set_lcid_tag(LcidTag{bearer.lcid()});
    // The 2 remaining overhead bytes are the adaptation header added by
    // LWAAP/LWIPEP.
    p.add_framing(bearer.pdcp_rrc_overhead_bytes - 2);
}

} // namespace lwasim
