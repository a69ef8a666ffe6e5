#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace hopfz::testing {

inline std::string fixture_path(const std::string& name) { return std::string(HOPFZ_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace hopfz::testing
