#include <catch2/catch_amalgamated.hpp>

#include <shakekit/shakekit.hpp>

#include "support/generators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using Catch::Matchers::ContainsSubstring;
using shakekit::DetectorConfig;
using shakekit::LabeledBurst;
using shakekit::ShakeDirection;
using shakekit::SynthSpec;

TEST_CASE("splitmix64 matches its reference outputs") {
    shakekit::SplitMix64 rng(0);
    CHECK(rng.next_u64() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next_u64() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next_u64() == 0x06C45D188009454Full);
    shakekit::SplitMix64 other(0xDEADBEEFull);
    CHECK(other.next_u64() == 0x4ADFB90F68C9EB9Bull);
}

TEST_CASE("unit draws scale the top 53 bits") {
    shakekit::SplitMix64 rng(0);
    CHECK(rng.next_unit() == static_cast<double>(0xE220A8397B1DCDAFull >> 11) * 0x1.0p-53);
    shakekit::SplitMix64 span(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = span.next_unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("gaussian draws match the two-uniform recipe") {
    shakekit::SplitMix64 rng(0);
    CHECK_THAT(rng.next_gaussian(),
               Catch::Matchers::WithinAbs(-0x1.cf9fb99cfab8fp-2, 1e-15));
    CHECK_THAT(rng.next_gaussian(),
               Catch::Matchers::WithinAbs(0x1.53470d1ebc1f2p+1, 1e-15));
    CHECK_THAT(rng.next_gaussian(),
               Catch::Matchers::WithinAbs(-0x1.fa2a51dfe785cp-1, 1e-15));

    shakekit::SplitMix64 stat(0xFEEDull);
    double sum = 0.0, sum_sq = 0.0;
    constexpr int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double g = stat.next_gaussian();
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / n;
    const double variance = sum_sq / n - mean * mean;
    CHECK_THAT(mean, Catch::Matchers::WithinAbs(0.0, 0.025));
    CHECK_THAT(variance, Catch::Matchers::WithinAbs(1.0, 0.05));
}

TEST_CASE("burst-free noiseless spec yields an all-zero grid") {
    SynthSpec spec;
    spec.total_duration = 1.0;
    spec.sample_rate = 10.0;
    const auto [trace, labels] = shakekit::generate_trace(spec);
    REQUIRE(trace.samples.size() == 11);
    CHECK(labels.empty());
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
        REQUIRE(trace.samples[k].t == static_cast<double>(k) / 10.0);
        REQUIRE(trace.samples[k].ax == 0.0);
        REQUIRE(trace.samples[k].ay == 0.0);
        REQUIRE(trace.samples[k].az == 0.0);
    }
}

TEST_CASE("a single burst is a half-sine on its axis") {
    SynthSpec spec;
    spec.total_duration = 1.5;
    spec.sample_rate = 50.0;
    spec.bursts = {{0.5, ShakeDirection::Right, 1.5, 0.2}};
    const auto [trace, labels] = shakekit::generate_trace(spec);
    REQUIRE(labels == spec.bursts);

    const auto& peak = trace.samples[30]; // t = 0.6, burst midpoint
    CHECK_THAT(peak.ax, Catch::Matchers::WithinAbs(1.5, 1e-9));
    CHECK(peak.ay == 0.0);
    CHECK(shakekit::classify_direction(peak.ax, peak.ay) == ShakeDirection::Right);

    for (const auto& s : trace.samples) {
        double expected = 0.0;
        if (s.t >= 0.5 && s.t <= 0.7)
            expected = 1.5 * std::sin(std::numbers::pi * (s.t - 0.5) / 0.2);
        REQUIRE(s.ax == expected);
        REQUIRE(s.ay == 0.0);
        REQUIRE(s.az == 0.0);
    }
}

TEST_CASE("burst signs follow the direction conventions") {
    const struct {
        ShakeDirection direction;
        double expected_ax_sign;
        double expected_ay_sign;
    } cases[] = {
        {ShakeDirection::Right, 1.0, 0.0},
        {ShakeDirection::Left, -1.0, 0.0},
        {ShakeDirection::Down, 0.0, 1.0},
        {ShakeDirection::Up, 0.0, -1.0},
    };
    for (const auto& c : cases) {
        SynthSpec spec;
        spec.total_duration = 1.0;
        spec.sample_rate = 50.0;
        spec.bursts = {{0.4, c.direction, 1.0, 0.2}};
        const auto [trace, labels] = shakekit::generate_trace(spec);
        const auto& peak = trace.samples[25]; // t = 0.5, burst midpoint
        if (c.expected_ax_sign != 0.0) {
            REQUIRE(peak.ax * c.expected_ax_sign > 0.9);
            REQUIRE(peak.ay == 0.0);
        } else {
            REQUIRE(peak.ay * c.expected_ay_sign > 0.9);
            REQUIRE(peak.ax == 0.0);
        }
        REQUIRE(shakekit::classify_direction(peak.ax, peak.ay) == c.direction);
    }
}

TEST_CASE("noise draws consume the stream in x, y, z order") {
    SynthSpec spec;
    spec.total_duration = 0.2;
    spec.sample_rate = 50.0;
    spec.noise_sigma = 0.1;
    spec.seed = 99;
    const auto [trace, labels] = shakekit::generate_trace(spec);
    REQUIRE(trace.samples.size() == 11);

    shakekit::SplitMix64 rng(99);
    for (const auto& s : trace.samples) {
        REQUIRE(s.ax == 0.1 * rng.next_gaussian());
        REQUIRE(s.ay == 0.1 * rng.next_gaussian());
        REQUIRE(s.az == 0.1 * rng.next_gaussian());
    }
}

TEST_CASE("generation is deterministic in the seed") {
    SynthSpec spec;
    spec.total_duration = 2.0;
    spec.sample_rate = 50.0;
    spec.noise_sigma = 0.2;
    spec.seed = 1234;
    spec.bursts = {{0.5, ShakeDirection::Left, 1.4, 0.1}};

    const std::string a = shakekit::write_trace(shakekit::generate_trace(spec).first);
    const std::string b = shakekit::write_trace(shakekit::generate_trace(spec).first);
    CHECK(a == b);

    spec.seed = 1235;
    const std::string c = shakekit::write_trace(shakekit::generate_trace(spec).first);
    CHECK(a != c);
}

TEST_CASE("spec validation rejects malformed recipes") {
    SynthSpec spec;
    spec.total_duration = 1.0;

    spec.sample_rate = 0.0;
    CHECK_THROWS_AS(spec.validate(), shakekit::spec_error);
    spec.sample_rate = 50.0;

    spec.noise_sigma = -0.1;
    CHECK_THROWS_AS(spec.validate(), shakekit::spec_error);
    spec.noise_sigma = 0.0;

    spec.bursts = {{0.2, ShakeDirection::Unknown, 1.0, 0.1}};
    CHECK_THROWS_MATCHES(spec.validate(), shakekit::spec_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("direction")));
    spec.bursts = {{0.2, ShakeDirection::Right, 0.0, 0.1}};
    CHECK_THROWS_MATCHES(spec.validate(), shakekit::spec_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("amplitude")));
    spec.bursts = {{0.2, ShakeDirection::Right, 1.0, 0.0}};
    CHECK_THROWS_MATCHES(spec.validate(), shakekit::spec_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("duration")));
    spec.bursts = {{0.95, ShakeDirection::Right, 1.0, 0.1}};
    CHECK_THROWS_MATCHES(spec.validate(), shakekit::spec_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("interval")));
    spec.bursts = {{-0.1, ShakeDirection::Right, 1.0, 0.15}};
    CHECK_THROWS_AS(spec.validate(), shakekit::spec_error);
    spec.bursts = {{0.2, ShakeDirection::Right, 1.0, 0.2},
                   {0.3, ShakeDirection::Left, 1.0, 0.2}};
    CHECK_THROWS_MATCHES(spec.validate(), shakekit::spec_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("burst 1")));
    spec.bursts.clear();
    CHECK_NOTHROW(spec.validate());
    CHECK_THROWS_AS(shakekit::generate_trace(SynthSpec{-1.0, 50.0, 0.0, {}, 0}),
                    shakekit::spec_error);
}

TEST_CASE("a clear burst always produces a matching event") {
    shakekit::SplitMix64 rng(0x73796E7468ull);
    for (int round = 0; round < 100; ++round) {
        SynthSpec spec;
        spec.sample_rate = 25.0 + rng.next_unit() * 75.0;
        const double duration = 4.0 / spec.sample_rate + rng.next_unit() * 0.2;
        const double start = 0.2 + rng.next_unit();
        constexpr ShakeDirection dirs[] = {ShakeDirection::Right, ShakeDirection::Left,
                                           ShakeDirection::Down, ShakeDirection::Up};
        const auto direction = dirs[rng.next_u64() % 4];
        spec.bursts = {{start, direction, 1.25 + rng.next_unit() * 1.25, duration}};
        spec.total_duration = start + duration + 0.3;

        const auto [trace, labels] = shakekit::generate_trace(spec);
        const auto events = shakekit::process_trace(trace.samples, DetectorConfig{1.0, 0.5});
        REQUIRE_FALSE(events.empty());
        REQUIRE(events[0].t >= start);
        REQUIRE(events[0].t <= start + duration);
        REQUIRE(events[0].direction == direction);
    }
}

TEST_CASE("amplitude at or below the threshold never fires") {
    for (const double amplitude : {1.2, 0.9, 0.3}) {
        SynthSpec spec;
        spec.total_duration = 2.0;
        spec.sample_rate = 200.0;
        spec.bursts = {{0.5, ShakeDirection::Down, amplitude, 0.4}};
        const auto [trace, labels] = shakekit::generate_trace(spec);
        CHECK(shakekit::process_trace(trace.samples, DetectorConfig{1.2, 0.5}).empty());
    }
}

TEST_CASE("the standard corpus has the documented shape") {
    const auto corpus = shakekit::standard_corpus();
    REQUIRE(corpus.size() == 4);

    CHECK(corpus[0].name == "clean");
    CHECK(corpus[0].trace.samples.size() == 1051);
    CHECK(corpus[0].labels.size() == 10);
    CHECK(corpus[0].spec.noise_sigma == 0.0);
    CHECK(corpus[0].labels[0].amplitude == 1.5);

    CHECK(corpus[1].name == "noisy");
    CHECK(corpus[1].trace.samples.size() == 1051);
    CHECK(corpus[1].labels.size() == 10);
    CHECK(corpus[1].spec.noise_sigma == 0.12);

    CHECK(corpus[2].name == "pure-noise");
    CHECK(corpus[2].trace.samples.size() == 10000);
    CHECK(corpus[2].labels.empty());
    CHECK(corpus[2].spec.noise_sigma == 1.2 / 5.0);

    CHECK(corpus[3].name == "near-threshold");
    CHECK(corpus[3].labels.size() == 10);
    CHECK(corpus[3].labels[0].amplitude == 1.05 * 1.2);

    for (const auto& entry : corpus) {
        REQUIRE(entry.labels == entry.spec.bursts);
        for (std::size_t i = 1; i < entry.labels.size(); ++i)
            REQUIRE(entry.labels[i].start_t - entry.labels[i - 1].start_t == 2.0);
    }
}

TEST_CASE("corpus traces serialize and parse losslessly") {
    for (const auto& entry : shakekit::standard_corpus()) {
        const std::string once = shakekit::write_trace(entry.trace);
        const auto back = shakekit::parse_trace(once);
        REQUIRE(shakekit::write_trace(back) == once);
        const std::string labels_once = shakekit::write_labels(entry.labels);
        REQUIRE(shakekit::write_labels(shakekit::read_labels(labels_once)) == labels_once);
    }
}

TEST_CASE("clean corpus trace yields one event per burst at threshold 1.0") {
    const auto corpus = shakekit::standard_corpus();
    const auto& clean = corpus[0];
    const DetectorConfig config{1.0, 0.5};

    const auto events = shakekit::process_trace(clean.trace.samples, config);
    const auto oracle = shakekit::oracle_detect(clean.trace.samples, config);
    REQUIRE(events == oracle);
    REQUIRE(events.size() == 10);
    for (std::size_t i = 0; i < events.size(); ++i) {
        REQUIRE(events[i].direction == clean.labels[i].direction);
        REQUIRE(events[i].t >= clean.labels[i].start_t);
        REQUIRE(events[i].t <= clean.labels[i].end_t());
    }
}
