// Minimal streaming example: synthesize a short trace, push it through a
// detector one sample at a time, and print each emitted event.

#include <shakekit/shakekit.hpp>

#include <iostream>

int main() {
    shakekit::SynthSpec spec;
    spec.total_duration = 6.0;
    spec.sample_rate = 50.0;
    spec.noise_sigma = 0.05;
    spec.seed = 42;
    spec.bursts = {
        {1.0, shakekit::ShakeDirection::Right, 1.6, 0.12},
        {2.5, shakekit::ShakeDirection::Up, 1.4, 0.10},
        {4.0, shakekit::ShakeDirection::Left, 1.8, 0.12},
    };

    const auto [trace, labels] = shakekit::generate_trace(spec);

    shakekit::ShakeDetector detector(
        shakekit::DetectorConfig::from_sensibility(shakekit::Sensibility::Normal));
    for (const shakekit::AccelSample& sample : trace.samples) {
        if (const auto event = detector.push(sample)) {
            std::cout << "t=" << shakekit::detail::format_fixed6(event->t)
                      << " direction=" << shakekit::to_string(event->direction)
                      << " magnitude=" << shakekit::detail::format_fixed6(event->magnitude)
                      << '\n';
        }
    }
    return 0;
}
