#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ledft/errors.hpp"
#include "ledft/geometry.hpp"
#include "ledft/rng.hpp"

namespace ledft {

// Radiometric forward model. Emission follows a generalized-Lambertian cone
// (cos^m about the emitter axis), reception an angular acceptance cone
// (cos^k about the receiver axis), with exponential attenuation in the
// medium and inverse-square falloff.

enum class MediumName { air, pdms };

struct MediumModel {
    MediumName name = MediumName::pdms;
    double cone_exponent = 18.0;        // m, >= 1; larger = narrower cone
    double acceptance_exponent = 18.0;  // k, >= 1
    double attenuation = 0.02;          // 1/mm
    double intensity_scale = 4.0e5;     // ADC counts * mm^2

    static MediumModel air_defaults() {
        // cone_exponent 45 puts the half-power half-angle near 10 degrees.
        return {MediumName::air, 45.0, 45.0, 0.0, 4.0e5};
    }
    static MediumModel pdms_defaults() { return {}; }

    void validate() const {
        if (!(cone_exponent >= 1.0) || !(acceptance_exponent >= 1.0))
            throw ConfigError("medium: cone/acceptance exponents must be >= 1");
        if (!(attenuation >= 0.0)) throw ConfigError("medium: attenuation must be >= 0");
        if (!(intensity_scale > 0.0)) throw ConfigError("medium: intensity_scale must be > 0");
    }
};

struct NoiseModel {
    double base_std = 2.0;                       // ADC counts
    std::array<int, 4> noisy_channels{1, 6, 11, 16};
    double noisy_std = 10.0;                     // ADC counts
    int adc_bits = 12;

    int full_scale() const { return (1 << adc_bits) - 1; }

    bool is_noisy(int receiver_id) const {
        return std::find(noisy_channels.begin(), noisy_channels.end(), receiver_id) !=
               noisy_channels.end();
    }
    double std_for(int receiver_id) const { return is_noisy(receiver_id) ? noisy_std : base_std; }

    void validate() const {
        if (!(noisy_std > base_std))
            throw ConfigError("noise: noisy_std must exceed base_std");
        if (!(base_std >= 0.0)) throw ConfigError("noise: base_std must be >= 0");
        if (adc_bits < 1 || adc_bits > 30) throw ConfigError("noise: adc_bits out of range");
        auto sorted = noisy_channels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ConfigError("noise: noisy_channels must be distinct");
        for (int id : sorted)
            if (id < 0 || id >= SensorLayout::kReceivers)
                throw ConfigError("noise: noisy channel " + std::to_string(id) +
                                  " is not a receiver id");
    }
};

struct SignalFrame {
    double t = 0.0;                                   // s
    std::array<int, SensorLayout::kReceivers> signals{};  // counts, by receiver id
};

// Irradiance (real-valued counts, pre-noise) seen by one receiver from one
// emitter: scale * cos^m(theta_e) * cos^k(theta_r) * exp(-alpha r) / r^2.
inline double pair_irradiance(const LedPose& emitter, const LedPose& receiver,
                              const MediumModel& medium) {
    Vec3 d = receiver.position - emitter.position;
    double r2 = dot(d, d);
    double r = std::sqrt(r2);
    if (r < 1e-6) throw GeometryError("degenerate pose: emitter-receiver distance below 1e-6 mm");
    double cos_e = dot(emitter.axis, d) / r;
    double cos_r = -dot(receiver.axis, d) / r;
    if (cos_e <= 0.0 || cos_r <= 0.0) return 0.0;
    return medium.intensity_scale * std::pow(cos_e, medium.cone_exponent) *
           std::pow(cos_r, medium.acceptance_exponent) * std::exp(-medium.attenuation * r) / r2;
}

// Clamp to the ADC range, then round half-to-even.
inline int adc_quantize(double value, const NoiseModel& noise) {
    double fs = static_cast<double>(noise.full_scale());
    double v = std::clamp(value, 0.0, fs);
    double f = std::floor(v);
    double frac = v - f;
    if (frac > 0.5 || (frac == 0.5 && std::fmod(f, 2.0) == 1.0)) f += 1.0;
    return static_cast<int>(f);
}

// One 24-channel frame under a displacement. Every receiver sums irradiance
// over all three emitters of the opposite board, so cross-cluster bleed is
// part of the model. Gaussian read noise per channel, then ADC quantization.
inline SignalFrame frame_signals(const SensorLayout& lay, const Displacement6& disp,
                                 const MediumModel& medium, const NoiseModel& noise,
                                 Rng& rng, double t) {
    disp.validate();
    std::array<LedPose, 3> top_emitters, bottom_emitters;
    for (int c = 0; c < 3; ++c) {
        bottom_emitters[static_cast<std::size_t>(c)] = led_world_pose(lay, disp, 24 + c);
        top_emitters[static_cast<std::size_t>(c)] = led_world_pose(lay, disp, 27 + c);
    }
    SignalFrame frame;
    frame.t = t;
    for (int id = 0; id < SensorLayout::kReceivers; ++id) {
        const LedSpec& spec = lay.led(id);
        LedPose pose = led_world_pose(lay, disp, id);
        const auto& emitters = spec.board == Board::bottom ? top_emitters : bottom_emitters;
        double sum = 0.0;
        for (const auto& e : emitters) sum += pair_irradiance(e, pose, medium);
        double sigma = noise.std_for(id);
        if (sigma > 0.0) sum += sigma * rng.gaussian();
        frame.signals[static_cast<std::size_t>(id)] = adc_quantize(sum, noise);
    }
    return frame;
}

enum class SweepAxis { horizontal, vertical };

struct SweepPoint {
    double offset = 0.0;      // mm
    double irradiance = 0.0;  // counts, noise-free
};

// Noise-free single-pair profile: a coaxial emitter/receiver pair at
// `separation`, with the receiver translated perpendicular to the axis
// (horizontal) or along it (vertical, offset added to the separation).
inline std::vector<SweepPoint> sweep_pair(const MediumModel& medium, SweepAxis axis,
                                          double lo, double hi, double step,
                                          double separation = 6.0) {
    if (!(step > 0.0)) throw ConfigError("sweep: step must be > 0");
    if (!(hi >= lo)) throw ConfigError("sweep: empty range");
    if (!(separation > 0.0)) throw ConfigError("sweep: separation must be > 0");
    LedPose emitter{{0, 0, 0}, {0, 0, 1}};
    std::vector<SweepPoint> profile;
    for (int k = 0;; ++k) {
        double offset = lo + step * k;
        if (offset > hi + 1e-12) break;
        LedPose receiver;
        if (axis == SweepAxis::horizontal) {
            receiver = {{offset, 0, separation}, {0, 0, -1}};
        } else {
            double gap = separation + offset;
            if (!(gap > 1e-6))
                throw ConfigError("sweep: vertical offset collapses the pair");
            receiver = {{0, 0, gap}, {0, 0, -1}};
        }
        profile.push_back({offset, pair_irradiance(emitter, receiver, medium)});
    }
    return profile;
}

// Full width at half maximum via linear interpolation between samples.
inline double profile_fwhm(const std::vector<SweepPoint>& profile) {
    if (profile.size() < 3) throw ConfigError("fwhm: profile too short");
    std::size_t imax = 0;
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile[i].irradiance > profile[imax].irradiance) imax = i;
    double half = profile[imax].irradiance / 2.0;
    if (!(half > 0.0)) throw ConfigError("fwhm: profile peak is not positive");

    auto interp = [&](std::size_t a, std::size_t b) {
        double ya = profile[a].irradiance, yb = profile[b].irradiance;
        double xa = profile[a].offset, xb = profile[b].offset;
        return xa + (half - ya) * (xb - xa) / (yb - ya);
    };
    double left = profile.front().offset;
    for (std::size_t i = imax; i-- > 0;) {
        if (profile[i].irradiance < half) {
            left = interp(i, i + 1);
            break;
        }
    }
    double right = profile.back().offset;
    for (std::size_t i = imax + 1; i < profile.size(); ++i) {
        if (profile[i].irradiance < half) {
            right = interp(i - 1, i);
            break;
        }
    }
    return right - left;
}

}  // namespace ledft
