#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "rattet/geometry.hpp"

namespace rattet {

/// One tabulated sporadic tetrahedron: angles, edge lengths (multiples of pi), volume (multiple of pi^2).
struct SporadicRow {
  int row = 0;
  std::array<RationalAngle, 4> angles;
  std::array<RationalAngle, 4> lengths;
  Rational volume;
};

// The 59 reference sporadic quadruples, in table order.
const std::vector<SporadicRow>& reference_sporadic_rows();

// Reads the CSV layout row,p,q,r,s,lp,lq,lr,ls,volume (header line required).
std::vector<SporadicRow> read_sporadic_csv(const std::filesystem::path& path);

struct LambertAngles {
  RationalAngle a, b, c;
  Rational volume;
};

const std::vector<LambertAngles>& reference_lambert_cubes();

}  // namespace rattet
