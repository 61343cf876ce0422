#include "doctest.h"

#include <random>
#include <vector>

#include "lwasim/engine.hpp"
#include "oracles.hpp"

using namespace lwasim;

TEST_CASE("equal fire times execute in insertion order") {
    Engine eng;
    std::vector<char> order;
    eng.schedule(SimTime{0}, [&] { order.push_back('A'); });
    eng.schedule(SimTime{0}, [&] { order.push_back('B'); });
    eng.run_until(SimTime{0});
    CHECK(order == std::vector<char>{'A', 'B'});
}

TEST_CASE("scheduling in the past is a causality error") {
    Engine eng;
    eng.schedule(SimTime::ns(10), [] {});
    eng.run_until(SimTime::ns(10));
    CHECK(eng.now() == SimTime::ns(10));
    CHECK_THROWS_AS(eng.schedule(SimTime::ns(5), [] {}), CausalityError);
    // Scheduling exactly at the clock is allowed.
    CHECK_NOTHROW(eng.schedule(SimTime::ns(10), [] {}));
}

TEST_CASE("events fire at exact integer times") {
    Engine eng;
    SimTime seen{};
    eng.schedule(SimTime::us(100), [&] { seen = eng.now(); });
    eng.run_until(SimTime::sec(1));
    CHECK(seen.nanos == 100000);
}

TEST_CASE("run_until on an empty queue just advances the clock") {
    Engine eng;
    eng.run_until(SimTime::sec(1));
    CHECK(eng.now() == SimTime::sec(1));
    CHECK(eng.executed() == 0);
}

TEST_CASE("run_until executes only events at or before the horizon") {
    Engine eng;
    int fired = 0;
    eng.schedule(SimTime::ms(1), [&] { ++fired; });
    eng.schedule(SimTime::ms(2), [&] { ++fired; });
    eng.schedule(SimTime::ms(3), [&] { ++fired; });
    eng.run_until(SimTime::ms(2));
    CHECK(fired == 2);
    eng.run_until(SimTime::ms(3));
    CHECK(fired == 3);
}

TEST_CASE("recurring 0.1 ms poll over 4.825 s") {
    const SimTime period = SimTime::us(100);
    const SimTime end = SimTime::ms(4825);
    const std::uint64_t expected = oracle::recurring_firings(period.nanos, 0, end.nanos);
    CHECK(expected == 48250); // frozen from the enumeration oracle

    Engine eng;
    std::uint64_t fired = 0;
    std::function<void()> poll = [&] {
        ++fired;
        if (eng.now() + period <= end)
            eng.schedule(eng.now() + period, poll);
    };
    eng.schedule(period, poll);
    eng.run_until(end);
    CHECK(fired == expected);
}

TEST_CASE("clock never moves backward and order is by (time, insertion)") {
    std::mt19937_64 rng(7);
    Engine eng;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> fired; // (time, insertion index)
    for (std::uint64_t i = 0; i < 1000; ++i) {
        SimTime at = SimTime::ns(rng() % 1000); // many collisions
        eng.schedule(at, [&, at, i] { fired.emplace_back(at.nanos, i); });
    }
    eng.run_until(SimTime::us(2));
    REQUIRE(fired.size() == 1000);
    for (std::size_t i = 1; i < fired.size(); ++i) {
        CHECK(fired[i - 1].first <= fired[i].first);
        if (fired[i - 1].first == fired[i].first)
            CHECK(fired[i - 1].second < fired[i].second);
    }
}

TEST_CASE("two engines given the same schedule fire identically") {
    auto run = [] {
        Engine eng;
        std::vector<std::uint64_t> trace;
        std::mt19937_64 rng(42);
        std::function<void(int)> chain = [&](int depth) {
            trace.push_back(eng.now().nanos);
            if (depth < 50)
                eng.schedule_in(SimTime::ns(rng() % 500), [&, depth] { chain(depth + 1); });
        };
        eng.schedule(SimTime{0}, [&] { chain(0); });
        eng.run_until(SimTime::ms(1));
        return trace;
    };
    CHECK(run() == run());
}
