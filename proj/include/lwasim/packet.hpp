#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "lwasim/headers.hpp"
#include "lwasim/rng.hpp"

namespace lwasim {

/// Side-band tags. Tags travel with a packet inside the simulator but are
/// not part of the wire image and never change its length.
struct LwaTag {
    std::uint8_t activate = 0;
    bool operator==(const LwaTag&) const = default;
};
struct LwipTag {
    std::uint8_t activate = 0;
    bool operator==(const LwipTag&) const = default;
};
struct LcidTag {
    std::uint8_t lcid = 0;
    bool operator==(const LcidTag&) const = default;
};

/// Simulated datagram: a virtual payload plus a LIFO stack of encoded
/// header blocks. Payload content stays virtual (length only) until a
/// trace record or a real datagram needs bytes, at which point it is
/// realized as seeded deterministic filler.
class Packet {
  public:
    Packet(std::uint64_t uid, std::size_t payload_len) : uid_(uid), payload_len_(payload_len) {}

    std::uint64_t uid() const { return uid_; }
    std::size_t payload_len() const { return payload_len_; }

    std::size_t header_bytes() const {
        std::size_t n = 0;
        for (const auto& b : stack_)
            n += b.bytes.size();
        return n;
    }
    std::size_t wire_length() const { return payload_len_ + header_bytes(); }

    template <class H> void add_header(const H& h) { stack_.push_back({H::kKind, h.encode()}); }

    /// Opaque framing block of n zero bytes (PDCP/RRC overhead model).
    void add_framing(std::size_t n) { stack_.push_back({HeaderKind::Framing, std::vector<std::uint8_t>(n, 0)}); }

    std::optional<HeaderKind> outermost() const {
        if (stack_.empty())
            return std::nullopt;
        return stack_.back().kind;
    }

    /// Pop the outermost header, which must be of type H.
    template <class H> H remove_header() {
        require_outermost(H::kKind);
        ByteReader in(stack_.back().bytes);
        H h = H::decode(in);
        stack_.pop_back();
        return h;
    }

    /// Pop the outermost block, which must be opaque framing; returns its size.
    std::size_t remove_framing() {
        require_outermost(HeaderKind::Framing);
        std::size_t n = stack_.back().bytes.size();
        stack_.pop_back();
        return n;
    }

    /// Decode the outermost header without removing it.
    template <class H> H peek_header() const {
        require_outermost(H::kKind);
        ByteReader in(stack_.back().bytes);
        return H::decode(in);
    }

    /// Find the unique block of type H anywhere in the stack, remove it and
    /// return the decoded header. Used when a delivery leg re-addresses a
    /// packet (the buried IP/UDP header is replaced, not duplicated).
    template <class H> H extract_header() {
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            if (it->kind == H::kKind) {
                ByteReader in(it->bytes);
                H h = H::decode(in);
                stack_.erase(std::next(it).base());
                return h;
            }
        }
        throw DecodeError("packet " + std::to_string(uid_) + ": no " + header_kind_name(H::kKind) + " header");
    }

    /// Decode the first block of type H found scanning outward-in, without
    /// removing it.
    template <class H> std::optional<H> find_header() const {
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            if (it->kind == H::kKind) {
                ByteReader in(it->bytes);
                return H::decode(in);
            }
        }
        return std::nullopt;
    }

    bool has_header(HeaderKind k) const {
        for (const auto& b : stack_)
            if (b.kind == k)
                return true;
        return false;
    }

    std::size_t header_count() const { return stack_.size(); }

    // Tags.
    void set_lwa_tag(LwaTag t) { lwa_tag_ = t; }
    void set_lwip_tag(LwipTag t) { lwip_tag_ = t; }
    void set_lcid_tag(LcidTag t) { lcid_tag_ = t; }
    void clear_tags() {
        lwa_tag_.reset();
        lwip_tag_.reset();
        lcid_tag_.reset();
    }
    const std::optional<LwaTag>& lwa_tag() const { return lwa_tag_; }
    const std::optional<LwipTag>& lwip_tag() const { return lwip_tag_; }
    const std::optional<LcidTag>& lcid_tag() const { return lcid_tag_; }

    /// Last four payload bytes carry a keyed tag instead of filler when set
    /// (tunnel authentication); the payload length does not change.
    void set_auth_trailer(std::uint32_t v) { auth_trailer_ = v; }
    const std::optional<std::uint32_t>& auth_trailer() const { return auth_trailer_; }

    /// Full wire image, outermost header first, payload realized as seeded
    /// filler (with the auth trailer patched into the last four bytes).
    std::vector<std::uint8_t> serialize(std::uint64_t filler_seed) const {
        std::vector<std::uint8_t> out;
        out.reserve(wire_length());
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
            out.insert(out.end(), it->bytes.begin(), it->bytes.end());
        std::size_t payload_at = out.size();
        out.resize(payload_at + payload_len_);
        fill_payload(filler_seed, uid_, std::span<std::uint8_t>(out).subspan(payload_at));
        if (auth_trailer_ && payload_len_ >= 4) {
            std::uint32_t v = *auth_trailer_;
            std::size_t p = out.size() - 4;
            out[p] = static_cast<std::uint8_t>(v >> 24);
            out[p + 1] = static_cast<std::uint8_t>(v >> 16);
            out[p + 2] = static_cast<std::uint8_t>(v >> 8);
            out[p + 3] = static_cast<std::uint8_t>(v);
        }
        return out;
    }

  private:
    struct Block {
        HeaderKind kind;
        std::vector<std::uint8_t> bytes;
    };

    void require_outermost(HeaderKind k) const {
        if (stack_.empty())
            throw DecodeError("packet " + std::to_string(uid_) + ": header stack empty, expected " +
                              header_kind_name(k));
        if (stack_.back().kind != k)
            throw DecodeError("packet " + std::to_string(uid_) + ": outermost header is " +
                              header_kind_name(stack_.back().kind) + ", expected " + header_kind_name(k));
    }

    std::uint64_t uid_;
    std::size_t payload_len_;
    std::vector<Block> stack_; // front = innermost, back = outermost
    std::optional<LwaTag> lwa_tag_;
    std::optional<LwipTag> lwip_tag_;
    std::optional<LcidTag> lcid_tag_;
    std::optional<std::uint32_t> auth_trailer_;
};

} // namespace lwasim
