#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "ggfnsp/network.hpp"

namespace ggfnsp::test {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(GGFNSP_FIXTURE_DIR) / name;
}

inline Network load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) {
    throw std::runtime_error("missing fixture " + name);
  }
  return parse_edge_list(in);
}

/** Node id by label; throws when absent so tests fail loudly. */
inline NodeId node(const Network& net, const std::string& label) {
  if (auto id = net.find_node(label)) {
    return *id;
  }
  throw std::runtime_error("no node labelled " + label);
}

}  // namespace ggfnsp::test
