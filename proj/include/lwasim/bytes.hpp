#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lwasim/errors.hpp"

namespace lwasim {

/// Appends big-endian (network order) fields to a byte buffer.
class ByteWriter {
  public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16be(std::uint16_t v) {
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
        buf_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32be(std::uint32_t v) {
        u16be(static_cast<std::uint16_t>(v >> 16));
        u16be(static_cast<std::uint16_t>(v));
    }
    void u64be(std::uint64_t v) {
        u32be(static_cast<std::uint32_t>(v >> 32));
        u32be(static_cast<std::uint32_t>(v));
    }

    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

  private:
    std::vector<std::uint8_t> buf_;
};

/// Consumes big-endian fields from a byte span; underruns throw DecodeError.
class ByteReader {
  public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint16_t u16be() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }
    std::uint32_t u32be() {
        std::uint32_t hi = u16be();
        return (hi << 16) | u16be();
    }
    std::uint64_t u64be() {
        std::uint64_t hi = u32be();
        return (hi << 32) | u32be();
    }
    void skip(std::size_t n) {
        need(n);
        pos_ += n;
    }

    std::size_t consumed() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }
    std::span<const std::uint8_t> rest() const { return data_.subspan(pos_); }

  private:
    void need(std::size_t n) const {
        if (data_.size() - pos_ < n)
            throw DecodeError("decode: truncated input, need " + std::to_string(n) + " more bytes, have " +
                              std::to_string(data_.size() - pos_));
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

} // namespace lwasim
