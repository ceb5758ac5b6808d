#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fuzzywin::fixtures {

inline std::string read(const std::string& name) {
  const std::string path = std::string(FUZZYWIN_DATA_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string path(const std::string& name) { return std::string(FUZZYWIN_DATA_DIR) + "/" + name; }

inline constexpr const char* kOil = "oil_iraq_jordan.csv";
inline constexpr const char* kIronOre = "iron_ore_2005_2009.csv";

}  // namespace fuzzywin::fixtures
