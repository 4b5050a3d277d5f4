#include "rattet/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rattet {

namespace {

struct Row {
  int row;
  std::int64_t angles[4][2];
  std::int64_t lengths[4][2];
  const char* volume;
};

const Row kRows[] = {
    {1, {{2, 3}, {1, 3}, {3, 5}, {1, 5}}, {{2, 3}, {1, 3}, {2, 5}, {4, 5}}, "7/90"},
    {2, {{25, 42}, {11, 42}, {4, 7}, {2, 7}}, {{25, 42}, {11, 42}, {3, 7}, {5, 7}}, "67/1764"},
    {3, {{2, 5}, {4, 15}, {3, 5}, {8, 15}}, {{2, 5}, {4, 15}, {2, 5}, {7, 15}}, "19/900"},
    {4, {{2, 5}, {1, 5}, {2, 3}, {1, 2}}, {{2, 5}, {1, 5}, {1, 3}, {1, 2}}, "7/720"},
    {5, {{6, 7}, {2, 7}, {1, 3}, {2, 7}}, {{6, 7}, {2, 7}, {2, 3}, {5, 7}}, "299/1764"},
    {6, {{19, 30}, {17, 30}, {11, 15}, {1, 3}}, {{19, 30}, {17, 30}, {4, 15}, {2, 3}}, "209/900"},
    {7, {{2, 3}, {2, 3}, {4, 5}, {2, 5}}, {{2, 3}, {2, 3}, {1, 5}, {3, 5}}, "31/90"},
    {8, {{6, 7}, {5, 7}, {5, 7}, {2, 3}}, {{6, 7}, {5, 7}, {2, 7}, {1, 3}}, "1013/1764"},
    {9, {{13, 30}, {11, 30}, {11, 15}, {1, 3}}, {{13, 30}, {11, 30}, {4, 15}, {2, 3}}, "29/900"},
    {10, {{7, 20}, {3, 20}, {2, 3}, {3, 5}}, {{7, 20}, {3, 20}, {1, 3}, {2, 5}}, "17/3600"},
    {11, {{4, 5}, {3, 5}, {2, 3}, {1, 2}}, {{4, 5}, {3, 5}, {1, 3}, {1, 2}}, "59/144"},
    {12, {{23, 30}, {11, 30}, {7, 15}, {1, 3}}, {{23, 30}, {11, 30}, {8, 15}, {2, 3}}, "161/900"},
    {13, {{5, 7}, {1, 7}, {1, 3}, {2, 7}}, {{5, 7}, {1, 7}, {2, 3}, {5, 7}}, "47/1764"},
    {14, {{17, 30}, {11, 30}, {2, 3}, {4, 15}}, {{17, 30}, {11, 30}, {1, 3}, {11, 15}}, "59/900"},
    {15, {{2, 3}, {1, 5}, {2, 5}, {1, 3}}, {{2, 3}, {1, 5}, {3, 5}, {2, 3}}, "37/900"},
    {16, {{13, 30}, {7, 30}, {3, 5}, {1, 2}}, {{13, 30}, {7, 30}, {2, 5}, {1, 2}}, "67/3600"},
    {17, {{5, 7}, {3, 7}, {4, 7}, {1, 3}}, {{5, 7}, {3, 7}, {3, 7}, {2, 3}}, "335/1764"},
    {18, {{1, 5}, {2, 15}, {4, 5}, {11, 15}}, {{1, 5}, {2, 15}, {1, 5}, {4, 15}}, "1/900"},
    {19, {{31, 42}, {25, 42}, {5, 7}, {3, 7}}, {{31, 42}, {25, 42}, {2, 7}, {4, 7}}, "613/1764"},
    {20, {{11, 15}, {3, 5}, {3, 5}, {8, 15}}, {{11, 15}, {3, 5}, {2, 5}, {7, 15}}, "319/900"},
    {21, {{23, 30}, {13, 30}, {1, 2}, {2, 5}}, {{23, 30}, {13, 30}, {1, 2}, {3, 5}}, "847/3600"},
    {22, {{17, 42}, {11, 42}, {5, 7}, {3, 7}}, {{17, 42}, {11, 42}, {2, 7}, {4, 7}}, "25/1764"},
    {23, {{17, 30}, {7, 30}, {1, 2}, {2, 5}}, {{17, 30}, {7, 30}, {1, 2}, {3, 5}}, "127/3600"},
    {24, {{23, 30}, {19, 30}, {2, 3}, {8, 15}}, {{23, 30}, {19, 30}, {1, 3}, {7, 15}}, "371/900"},
    {25, {{1, 3}, {1, 3}, {4, 5}, {2, 5}}, {{1, 3}, {1, 3}, {1, 5}, {3, 5}}, "1/90"},
    {26, {{4, 7}, {2, 7}, {4, 7}, {1, 3}}, {{4, 7}, {2, 7}, {3, 7}, {2, 3}}, "83/1764"},
    {27, {{3, 5}, {3, 5}, {2, 3}, {2, 5}}, {{3, 5}, {3, 5}, {1, 3}, {3, 5}}, "109/450"},
    {28, {{1, 3}, {1, 5}, {2, 3}, {3, 5}}, {{1, 3}, {1, 5}, {1, 3}, {2, 5}}, "7/900"},
    {29, {{11, 30}, {7, 30}, {2, 3}, {8, 15}}, {{11, 30}, {7, 30}, {1, 3}, {7, 15}}, "11/900"},
    {30, {{3, 5}, {2, 5}, {3, 5}, {1, 3}}, {{3, 5}, {2, 5}, {2, 5}, {2, 3}}, "49/450"},
    {31, {{13, 15}, {4, 5}, {4, 5}, {11, 15}}, {{13, 15}, {4, 5}, {1, 5}, {4, 15}}, "601/900"},
    {32, {{5, 7}, {4, 7}, {2, 3}, {3, 7}}, {{5, 7}, {4, 7}, {1, 3}, {4, 7}}, "545/1764"},
    {33, {{3, 5}, {4, 15}, {7, 15}, {2, 5}}, {{3, 5}, {4, 15}, {8, 15}, {3, 5}}, "49/900"},
    {34, {{23, 30}, {17, 30}, {3, 5}, {1, 2}}, {{23, 30}, {17, 30}, {2, 5}, {1, 2}}, "1267/3600"},
    {35, {{2, 5}, {2, 5}, {2, 3}, {2, 5}}, {{2, 5}, {2, 5}, {1, 3}, {3, 5}}, "19/450"},
    {36, {{17, 20}, {7, 20}, {2, 5}, {1, 3}}, {{17, 20}, {7, 20}, {3, 5}, {2, 3}}, "797/3600"},
    {37, {{4, 5}, {2, 5}, {1, 2}, {1, 3}}, {{4, 5}, {2, 5}, {1, 2}, {2, 3}}, "163/720"},
    {38, {{3, 7}, {2, 7}, {2, 3}, {3, 7}}, {{3, 7}, {2, 7}, {1, 3}, {4, 7}}, "41/1764"},
    {39, {{13, 15}, {1, 5}, {4, 15}, {1, 5}}, {{13, 15}, {1, 5}, {11, 15}, {4, 5}}, "91/900"},
    {40, {{19, 30}, {7, 30}, {7, 15}, {1, 3}}, {{19, 30}, {7, 30}, {8, 15}, {2, 3}}, "41/900"},
    {41, {{2, 3}, {2, 5}, {2, 3}, {1, 5}}, {{2, 3}, {2, 5}, {1, 3}, {4, 5}}, "103/900"},
    {42, {{3, 5}, {1, 5}, {1, 2}, {1, 3}}, {{3, 5}, {1, 5}, {1, 2}, {2, 3}}, "19/720"},
    {43, {{3, 5}, {1, 3}, {2, 3}, {1, 5}}, {{3, 5}, {1, 3}, {1, 3}, {4, 5}}, "43/900"},
    {44, {{4, 5}, {1, 3}, {2, 5}, {1, 3}}, {{4, 5}, {1, 3}, {3, 5}, {2, 3}}, "157/900"},
    {45, {{19, 30}, {13, 30}, {2, 3}, {4, 15}}, {{19, 30}, {13, 30}, {1, 3}, {11, 15}}, "119/900"},
    {46, {{4, 5}, {1, 5}, {1, 3}, {1, 5}}, {{4, 5}, {1, 5}, {2, 3}, {4, 5}}, "31/450"},
    {47, {{17, 20}, {13, 20}, {2, 3}, {3, 5}}, {{17, 20}, {13, 20}, {1, 3}, {2, 5}}, "1817/3600"},
    {48, {{4, 5}, {2, 3}, {4, 5}, {1, 2}}, {{4, 5}, {2, 3}, {1, 5}, {1, 2}}, "1691/3600"},
    {49, {{4, 5}, {2, 15}, {4, 15}, {1, 5}}, {{4, 5}, {2, 15}, {11, 15}, {4, 5}}, "31/900"},
    {50, {{2, 5}, {1, 3}, {4, 5}, {1, 3}}, {{2, 5}, {1, 3}, {1, 5}, {2, 3}}, "13/900"},
    {51, {{1, 5}, {1, 5}, {4, 5}, {2, 3}}, {{1, 5}, {1, 5}, {1, 5}, {1, 3}}, "1/450"},
    {52, {{2, 7}, {1, 7}, {5, 7}, {2, 3}}, {{2, 7}, {1, 7}, {2, 7}, {1, 3}}, "5/1764"},
    {53, {{11, 15}, {2, 5}, {7, 15}, {2, 5}}, {{11, 15}, {2, 5}, {8, 15}, {3, 5}}, "169/900"},
    {54, {{31, 42}, {17, 42}, {4, 7}, {2, 7}}, {{31, 42}, {17, 42}, {3, 7}, {5, 7}}, "319/1764"},
    {55, {{4, 5}, {4, 5}, {4, 5}, {2, 3}}, {{4, 5}, {4, 5}, {1, 5}, {1, 3}}, "271/450"},
    {56, {{4, 5}, {2, 3}, {2, 3}, {3, 5}}, {{4, 5}, {2, 3}, {1, 3}, {2, 5}}, "427/900"},
    {57, {{11, 15}, {2, 3}, {11, 15}, {1, 2}}, {{11, 15}, {2, 3}, {4, 15}, {1, 2}}, "493/1200"},
    {58, {{2, 3}, {3, 5}, {4, 5}, {1, 3}}, {{2, 3}, {3, 5}, {1, 5}, {2, 3}}, "253/900"},
    {59, {{13, 20}, {3, 20}, {2, 5}, {1, 3}}, {{13, 20}, {3, 20}, {3, 5}, {2, 3}}, "77/3600"},
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

const std::vector<SporadicRow>& reference_sporadic_rows() {
  static const std::vector<SporadicRow> rows = [] {
    std::vector<SporadicRow> v;
    for (const auto& r : kRows) {
      SporadicRow s;
      s.row = r.row;
      for (int i = 0; i < 4; ++i) {
        s.angles[i] = RationalAngle(r.angles[i][0], r.angles[i][1]);
        s.lengths[i] = RationalAngle(r.lengths[i][0], r.lengths[i][1]);
      }
      s.volume = Rational(r.volume);
      s.volume.canonicalize();
      v.push_back(s);
    }
    return v;
  }();
  return rows;
}

std::vector<SporadicRow> read_sporadic_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  std::vector<SporadicRow> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != 10) throw std::runtime_error("malformed row in " + path.string() + ": " + line);
    SporadicRow s;
    s.row = std::stoi(cells[0]);
    for (int i = 0; i < 4; ++i) {
      s.angles[i] = RationalAngle::parse(cells[1 + i]);
      s.lengths[i] = RationalAngle::parse(cells[5 + i]);
    }
    s.volume = Rational(cells[9]);
    s.volume.canonicalize();
    out.push_back(s);
  }
  return out;
}

const std::vector<LambertAngles>& reference_lambert_cubes() {
  static const std::vector<LambertAngles> cubes = {
      {RationalAngle(3, 4), RationalAngle(2, 3), RationalAngle(2, 3), Rational(31, 576)},
      {RationalAngle(2, 3), RationalAngle(3, 5), RationalAngle(4, 5), Rational(17, 360)},
  };
  return cubes;
}

}  // namespace rattet
