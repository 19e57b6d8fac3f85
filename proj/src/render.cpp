#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cremona {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cloud_csv(const std::vector<SpherePoint>& pts) {
    std::string out = "re,im,weight\n";
    for (auto& p : pts) {
        if (p.inf) {
            out += "inf,inf,0\n";
            continue;
        }
        double w = 2.0 / (1.0 + std::norm(p.z));
        out += format_double(p.z.real()) + "," + format_double(p.z.imag()) + "," + format_double(w) + "\n";
    }
    return out;
}

std::string cloud_ppm(const std::vector<SpherePoint>& pts, int size) {
    if (size < 8 || size > 8192) throw std::invalid_argument("unreasonable image size");
    std::vector<uint8_t> img(std::size_t(size) * size * 3, 0);
    auto mark = [&](int px, int py, int channel) {
        if (px < 0 || py < 0 || px >= size || py >= size) return;
        img[(std::size_t(py) * size + px) * 3 + channel] = 255;
    };
    for (auto& p : pts) {
        auto [x, y, z] = sphere_coords(p);
        int px = int((x + 1.0) / 2.0 * (size - 1) + 0.5);
        int py = int((1.0 - (y + 1.0) / 2.0) * (size - 1) + 0.5);
        mark(px, py, z <= 0.0 ? 1 : 0); // lower hemisphere green, upper red
    }
    std::string out = "P6\n" + std::to_string(size) + " " + std::to_string(size) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.data()), img.size());
    return out;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f.write(bytes.data(), std::streamsize(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace cremona
