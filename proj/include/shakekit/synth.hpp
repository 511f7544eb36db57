#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "shakekit/errors.hpp"
#include "shakekit/rng.hpp"
#include "shakekit/trace_io.hpp"
#include "shakekit/types.hpp"

namespace shakekit {

/// Recipe for a synthetic trace: a fixed sampling grid, optional per-axis
/// Gaussian noise, and a set of labeled half-sine bursts to embed. Stands
/// in for the physical device when exercising the detector.
struct SynthSpec {
    double total_duration = 0.0; // seconds
    double sample_rate = 50.0;   // Hz
    double noise_sigma = 0.0;    // g, std. dev. per axis per sample
    std::vector<LabeledBurst> bursts;
    std::uint64_t seed = 0;

    void validate() const {
        if (!std::isfinite(total_duration) || total_duration < 0.0)
            throw spec_error("total_duration must be finite and >= 0");
        if (!std::isfinite(sample_rate) || sample_rate <= 0.0)
            throw spec_error("sample_rate must be finite and > 0");
        if (!std::isfinite(noise_sigma) || noise_sigma < 0.0)
            throw spec_error("noise_sigma must be finite and >= 0");
        for (std::size_t i = 0; i < bursts.size(); ++i) {
            const LabeledBurst& b = bursts[i];
            if (!std::isfinite(b.start_t) || !std::isfinite(b.amplitude) ||
                !std::isfinite(b.duration))
                throw spec_error("burst " + std::to_string(i) + ": non-finite field");
            if (b.direction == ShakeDirection::Unknown)
                throw spec_error("burst " + std::to_string(i) +
                                 ": direction may not be unknown");
            if (b.amplitude <= 0.0)
                throw spec_error("burst " + std::to_string(i) + ": amplitude must be > 0");
            if (b.duration <= 0.0)
                throw spec_error("burst " + std::to_string(i) + ": duration must be > 0");
            if (b.start_t < 0.0 || b.end_t() > total_duration)
                throw spec_error("burst " + std::to_string(i) +
                                 ": interval outside [0, total_duration]");
            if (i > 0 && !(b.start_t > bursts[i - 1].end_t()))
                throw spec_error("burst " + std::to_string(i) +
                                 ": overlaps or is not sorted after burst " +
                                 std::to_string(i - 1));
        }
    }
};

/// Generate a trace from a spec, returning it with its ground-truth labels.
///
/// Samples lie at t = k / sample_rate for k = 0..floor(total_duration *
/// sample_rate). Each burst contributes amplitude * sin(pi * (t - start_t)
/// / duration) on its direction's axis (Right: +x, Left: -x, Down: +y,
/// Up: -y) for t within [start_t, start_t + duration]. When noise_sigma
/// > 0, one Gaussian draw per axis is added per sample, in x, y, z order,
/// from a SplitMix64 stream seeded with spec.seed. Identical specs produce
/// byte-identical serialized traces.
inline std::pair<TraceDocument, std::vector<LabeledBurst>>
generate_trace(const SynthSpec& spec) {
    spec.validate();

    TraceDocument doc;
    doc.source = "synthetic";
    const auto n = static_cast<std::size_t>(
        std::floor(spec.total_duration * spec.sample_rate));
    doc.samples.reserve(n + 1);

    SplitMix64 rng(spec.seed);
    std::size_t burst_i = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / spec.sample_rate;
        while (burst_i < spec.bursts.size() && t > spec.bursts[burst_i].end_t())
            ++burst_i;

        double ax = 0.0, ay = 0.0, az = 0.0;
        if (burst_i < spec.bursts.size()) {
            const LabeledBurst& b = spec.bursts[burst_i];
            if (t >= b.start_t && t <= b.end_t()) {
                const double pulse =
                    b.amplitude *
                    std::sin(std::numbers::pi * (t - b.start_t) / b.duration);
                switch (b.direction) {
                    case ShakeDirection::Right: ax += pulse; break;
                    case ShakeDirection::Left: ax -= pulse; break;
                    case ShakeDirection::Down: ay += pulse; break;
                    case ShakeDirection::Up: ay -= pulse; break;
                    case ShakeDirection::Unknown: break; // excluded by validate()
                }
            }
        }
        if (spec.noise_sigma > 0.0) {
            ax += spec.noise_sigma * rng.next_gaussian();
            ay += spec.noise_sigma * rng.next_gaussian();
            az += spec.noise_sigma * rng.next_gaussian();
        }
        doc.samples.push_back({t, ax, ay, az});
    }
    return {std::move(doc), spec.bursts};
}

/// One named member of the standard corpus.
struct CorpusEntry {
    std::string name;
    SynthSpec spec;
    TraceDocument trace;
    std::vector<LabeledBurst> labels;
};

/// Seed used by tests and the acceptance suite; corpus expectations are
/// pinned against it.
inline constexpr std::uint64_t kCorpusSeed = 0x5348414B45ull; // "SHAKE"

namespace detail {

inline std::vector<LabeledBurst> corpus_bursts(double amplitude) {
    // Ten bursts 2 s apart, directions cycling through all four. The
    // 0.08 s width puts the first super-threshold sample one period
    // (0.02 s at 50 Hz) after onset for thresholds up to ~1.06*amplitude/1.5.
    static constexpr ShakeDirection kCycle[4] = {
        ShakeDirection::Right, ShakeDirection::Left, ShakeDirection::Down,
        ShakeDirection::Up};
    std::vector<LabeledBurst> bursts;
    bursts.reserve(10);
    for (int i = 0; i < 10; ++i)
        bursts.push_back({1.0 + 2.0 * i, kCycle[i % 4], amplitude, 0.08});
    return bursts;
}

} // namespace detail

/// Deterministic family of named specs covering the evaluation scenarios:
/// clean bursts, noisy bursts, pure noise, and near-threshold bursts.
/// Amplitudes and sigmas are anchored to the "normal" preset threshold.
inline std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = kCorpusSeed) {
    const double normal = sensibility_threshold(Sensibility::Normal);

    std::vector<CorpusEntry> corpus;
    auto add = [&](std::string name, SynthSpec spec) {
        auto [trace, labels] = generate_trace(spec);
        corpus.push_back(
            {std::move(name), std::move(spec), std::move(trace), std::move(labels)});
    };

    SynthSpec clean;
    clean.total_duration = 21.0;
    clean.sample_rate = 50.0;
    clean.noise_sigma = 0.0;
    clean.bursts = detail::corpus_bursts(1.5);
    clean.seed = seed;
    add("clean", clean);

    SynthSpec noisy = clean;
    noisy.noise_sigma = normal / 10.0;
    noisy.seed = seed + 1;
    add("noisy", noisy);

    SynthSpec pure_noise;
    pure_noise.total_duration = 9999.0 / 50.0; // exactly 10^4 samples
    pure_noise.sample_rate = 50.0;
    pure_noise.noise_sigma = normal / 5.0;
    pure_noise.seed = seed + 2;
    add("pure-noise", pure_noise);

    SynthSpec near = clean;
    near.bursts = detail::corpus_bursts(1.05 * normal);
    near.seed = seed + 3;
    add("near-threshold", near);

    return corpus;
}

} // namespace shakekit
