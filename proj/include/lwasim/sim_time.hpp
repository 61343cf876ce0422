#pragma once

#include <compare>
#include <cstdint>

namespace lwasim {

/// Simulation clock value: integer nanoseconds since run start.
/// Integer time keeps periodic schedules (0.1 ms polls, 75 ms packet
/// period) exact and trace files reproducible.
struct SimTime {
    std::uint64_t nanos = 0;

    constexpr auto operator<=>(const SimTime&) const = default;

    constexpr SimTime operator+(SimTime other) const { return SimTime{nanos + other.nanos}; }
    constexpr SimTime operator-(SimTime other) const { return SimTime{nanos - other.nanos}; }
    SimTime& operator+=(SimTime other) {
        nanos += other.nanos;
        return *this;
    }

    constexpr double seconds() const { return static_cast<double>(nanos) / 1e9; }

    static constexpr SimTime ns(std::uint64_t v) { return SimTime{v}; }
    static constexpr SimTime us(std::uint64_t v) { return SimTime{v * 1000ull}; }
    static constexpr SimTime ms(std::uint64_t v) { return SimTime{v * 1000000ull}; }
    static constexpr SimTime sec(std::uint64_t v) { return SimTime{v * 1000000000ull}; }
};

} // namespace lwasim
