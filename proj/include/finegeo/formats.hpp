#pragma once

// Text file formats. Lines starting with '#' are comments and may appear
// anywhere; generators record the PRNG and parameters in a leading comment.
//
//   OV instance:  "n_A n_B d", then n_A rows of d bits, then n_B rows.
//   Curve:        vertex count, then one "num/den num/den" vertex per line.
//   Curve set:    curves back to back until end of file.
//   Point set:    "count d", then one point per line, coordinates as num/den.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "finegeo/core_model.hpp"

namespace finegeo {

void write_instance(std::ostream& os, const OvInstance& inst, const std::string& comment = {});
OvInstance read_instance(std::istream& is);

void write_curve(std::ostream& os, const Curve2& curve);
Curve2 read_curve(std::istream& is);

void write_curves(std::ostream& os, const std::vector<Curve2>& curves, const std::string& comment = {});
std::vector<Curve2> read_curves(std::istream& is);

void write_points(std::ostream& os, const std::vector<PointD>& points, const std::string& comment = {});
std::vector<PointD> read_points(std::istream& is);

OvInstance load_instance(const std::filesystem::path& path);
std::vector<Curve2> load_curves(const std::filesystem::path& path);

} // namespace finegeo
