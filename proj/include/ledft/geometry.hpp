#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ledft/errors.hpp"
#include "ledft/vec.hpp"

namespace ledft {

// Two-plate LED sensor geometry. The bottom board sits at z = 0 in the world
// frame and never moves; the top board sits plate_gap above it and carries
// the displacement. Each board holds 3 emitters and 3 clusters of 4
// receivers; every emitter is coaxial with the cluster facing it at rest.

enum class Board { bottom, top };
enum class LedRole { emitter, receiver };

struct LedSpec {
    int id = 0;
    Board board = Board::bottom;
    LedRole role = LedRole::receiver;
    Vec3 position;  // board frame, mm
    Vec3 axis;      // unit emission/acceptance direction, board frame
    int cluster = -1;  // receiver cluster index, -1 for emitters
};

struct Displacement6 {
    Vec3 translation;  // mm
    Vec3 rotation;     // rad, axis-angle (small-angle regime)

    void validate() const {
        if (!finite(translation) || !finite(rotation))
            throw ConfigError("displacement has non-finite components");
        if (norm(rotation) >= 0.2)
            throw ConfigError("displacement rotation magnitude must stay below 0.2 rad");
    }
};

struct LedPose {
    Vec3 position;
    Vec3 axis;
};

struct LayoutConfig {
    double plate_gap = 6.0;           // mm between board faces
    double board_radius = 12.0;       // mm
    double emitter_radius_frac = 0.6; // emitter radial position / board_radius
    double cluster_square = 2.5;      // receiver square side, mm
};

struct SensorLayout {
    static constexpr int kReceivers = 24;
    static constexpr int kEmitters = 6;
    static constexpr int kLeds = kReceivers + kEmitters;
    static constexpr int kClusters = 6;

    double plate_gap = 0.0;
    double board_radius = 0.0;
    std::vector<LedSpec> leds;                    // dense ids 0..29
    std::map<int, std::array<int, 4>> pairing;    // emitter id -> facing receiver ids

    const LedSpec& led(int id) const {
        if (id < 0 || id >= static_cast<int>(leds.size()))
            throw GeometryError("unknown LED id " + std::to_string(id));
        return leds[static_cast<std::size_t>(id)];
    }

    std::vector<int> emitter_ids(Board b) const {
        std::vector<int> out;
        for (const auto& l : leds)
            if (l.role == LedRole::emitter && l.board == b) out.push_back(l.id);
        return out;
    }
};

// Receivers 0..11 live on the bottom board (clusters 0..2 at 60/180/300 deg),
// 12..23 on the top board (clusters 3..5 at 0/120/240 deg). Emitters 24..26
// bottom at 0/120/240 deg, 27..29 top at 60/180/300 deg, so each emitter
// faces the center of one cluster on the opposite board.
inline SensorLayout build_layout(const LayoutConfig& cfg) {
    if (!(cfg.plate_gap > 0.0)) throw ConfigError("layout: plate_gap must be > 0");
    if (!(cfg.board_radius > 0.0)) throw ConfigError("layout: board_radius must be > 0");
    if (cfg.board_radius > 13.5)
        throw ConfigError("layout: board_radius must be <= 13.5 mm");
    if (!(cfg.emitter_radius_frac > 0.0 && cfg.emitter_radius_frac < 1.0))
        throw ConfigError("layout: emitter_radius_frac must be in (0, 1)");
    if (!(cfg.cluster_square > 0.0)) throw ConfigError("layout: cluster_square must be > 0");

    const double r_emit = cfg.emitter_radius_frac * cfg.board_radius;
    if (!(r_emit < cfg.board_radius))
        throw ConfigError("layout: cluster radial offset must stay inside the board");

    SensorLayout lay;
    lay.plate_gap = cfg.plate_gap;
    lay.board_radius = cfg.board_radius;
    lay.leds.resize(SensorLayout::kLeds);

    const double h = cfg.cluster_square / 2.0;
    // Corner offsets in the cluster-local frame (x radial, y tangential).
    const std::array<Vec3, 4> corners = {
        Vec3{+h, +h, 0}, Vec3{-h, +h, 0}, Vec3{-h, -h, 0}, Vec3{+h, -h, 0}};
    const double third = 2.0 * M_PI / 3.0;

    auto place_cluster = [&](int first_id, Board board, int cluster, double azimuth) {
        Vec3 axis = board == Board::bottom ? Vec3{0, 0, 1} : Vec3{0, 0, -1};
        Vec3 center = rotate_z({r_emit, 0, 0}, azimuth);
        for (int k = 0; k < 4; ++k) {
            LedSpec& led = lay.leds[static_cast<std::size_t>(first_id + k)];
            led.id = first_id + k;
            led.board = board;
            led.role = LedRole::receiver;
            led.cluster = cluster;
            led.position = center + rotate_z(corners[static_cast<std::size_t>(k)], azimuth);
            led.axis = axis;
        }
    };
    auto place_emitter = [&](int id, Board board, double azimuth) {
        LedSpec& led = lay.leds[static_cast<std::size_t>(id)];
        led.id = id;
        led.board = board;
        led.role = LedRole::emitter;
        led.cluster = -1;
        led.position = rotate_z({r_emit, 0, 0}, azimuth);
        led.axis = board == Board::bottom ? Vec3{0, 0, 1} : Vec3{0, 0, -1};
    };

    for (int c = 0; c < 3; ++c) {
        place_cluster(4 * c, Board::bottom, c, third * c + third / 2.0);
        place_cluster(12 + 4 * c, Board::top, 3 + c, third * c);
        place_emitter(24 + c, Board::bottom, third * c);
        place_emitter(27 + c, Board::top, third * c + third / 2.0);
    }
    lay.pairing[24] = {12, 13, 14, 15};
    lay.pairing[25] = {16, 17, 18, 19};
    lay.pairing[26] = {20, 21, 22, 23};
    lay.pairing[27] = {0, 1, 2, 3};
    lay.pairing[28] = {4, 5, 6, 7};
    lay.pairing[29] = {8, 9, 10, 11};

    for (const auto& led : lay.leds)
        if (norm(led.position) > cfg.board_radius + 1e-12)
            throw ConfigError("layout: LED " + std::to_string(led.id) +
                              " falls outside the board radius");
    return lay;
}

// World pose of one LED under the given inter-plate displacement. Bottom
// board LEDs are fixed; top board LEDs get the small-angle rotation, then the
// translation, then the plate_gap lift. Axes are renormalized after the
// first-order rotation.
inline LedPose led_world_pose(const SensorLayout& lay, const Displacement6& disp, int id) {
    const LedSpec& led = lay.led(id);
    if (led.board == Board::bottom) return {led.position, led.axis};
    disp.validate();
    Vec3 p = rotate_small(disp.rotation, led.position) + disp.translation;
    p.z += lay.plate_gap;
    Vec3 a = normalized(rotate_small(disp.rotation, led.axis));
    return {p, a};
}

// Id permutation realising the 120-degree rotational symmetry: entry i is the
// id whose rest pose equals LED i rotated by +120 degrees about the plate axis.
inline std::vector<int> rotation_permutation(const SensorLayout& lay) {
    const double third = 2.0 * M_PI / 3.0;
    std::vector<int> perm(lay.leds.size(), -1);
    for (const auto& led : lay.leds) {
        Vec3 rp = rotate_z(led.position, third);
        for (const auto& cand : lay.leds) {
            if (cand.board != led.board || cand.role != led.role) continue;
            if (norm(cand.position - rp) < 1e-6) {
                perm[static_cast<std::size_t>(led.id)] = cand.id;
                break;
            }
        }
        if (perm[static_cast<std::size_t>(led.id)] < 0)
            throw GeometryError("layout lacks 120-degree rotational symmetry");
    }
    return perm;
}

}  // namespace ledft
