#include "dynlocness/colormap.hpp"

#include "dynlocness/evaluation.hpp"

#include <fstream>
#include <ostream>

namespace dynlocness {

const std::array<std::array<std::uint8_t, 3>, 16> kPalette = {{
    {0, 0, 0},       // black
    {230, 25, 75},   // red
    {60, 180, 75},   // green
    {255, 165, 0},   // orange
    {0, 130, 200},   // blue
    {145, 30, 180},  // purple
    {70, 240, 240},  // cyan
    {240, 50, 230},  // magenta
    {210, 245, 60},  // lime
    {250, 190, 190}, // pink
    {0, 128, 128},   // teal
    {170, 110, 40},  // brown
    {255, 250, 200}, // beige
    {128, 0, 0},     // maroon
    {255, 215, 180}, // apricot
    {128, 128, 0},   // olive
}};

void write_colormap_ppm(std::ostream& out, const CommunityTimeline& tl) {
    const std::size_t width = tl.snapshots.size();
    const std::size_t height = tl.n;
    std::vector<Partition> cols;
    cols.reserve(width);
    for (const auto& snap : tl.snapshots) cols.push_back(project_primary(snap));

    out << "P6\n" << width << " " << height << "\n255\n";
    std::vector<char> row(width * 3);
    for (std::size_t v = 0; v < height; ++v) {
        for (std::size_t t = 0; t < width; ++t) {
            const auto& rgb = kPalette[cols[t].labels[v] % kPalette.size()];
            row[t * 3 + 0] = static_cast<char>(rgb[0]);
            row[t * 3 + 1] = static_cast<char>(rgb[1]);
            row[t * 3 + 2] = static_cast<char>(rgb[2]);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void save_colormap_ppm(const std::string& path, const CommunityTimeline& tl) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw StreamError("cannot open " + path + " for writing");
    write_colormap_ppm(out, tl);
}

} // namespace dynlocness
