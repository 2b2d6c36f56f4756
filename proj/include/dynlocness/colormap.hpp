#pragma once

#include "dynlocness/timeline.hpp"

#include <array>
#include <iosfwd>

namespace dynlocness {

// Fixed 16-entry palette; entry 0 is black so a single-community timeline
// renders as an all-black image.
extern const std::array<std::array<std::uint8_t, 3>, 16> kPalette;

// Binary PPM (P6): one row per vertex, one column per step, pixel colour =
// palette[primary community id mod 16].
void write_colormap_ppm(std::ostream& out, const CommunityTimeline& tl);
void save_colormap_ppm(const std::string& path, const CommunityTimeline& tl);

} // namespace dynlocness
