#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "archslice/model.hpp"
#include "archslice/parser.hpp"

namespace archslice::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ARCHSLICE_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Specification gas_station() { return parse(read_fixture("gas_station.wrt")); }

}  // namespace archslice::testing
