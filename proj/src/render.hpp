// Point-cloud exports: CSV rows and binary PPM renders of the square
// holding the stereographic (X, Y) sphere coordinates.
#pragma once

#include "moebius.hpp"

#include <string>
#include <vector>

namespace cremona {

// Rows "re,im,weight" where weight = 2/(1+|z|^2) is the spherical density;
// infinity prints as "inf,inf,0".
std::string cloud_csv(const std::vector<SpherePoint>& pts);

// Binary P6 pixmap over [-1,1]^2 in stereographic (X, Y). Points on the
// lower hemisphere (|z| <= 1) mark green, the upper hemisphere (and
// infinity) red; shared pixels turn yellow.
std::string cloud_ppm(const std::vector<SpherePoint>& pts, int size = 800);

void write_file(const std::string& path, const std::string& bytes);

std::string format_double(double v); // shortest round-trip decimal form

} // namespace cremona
