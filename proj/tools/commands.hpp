#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

struct Options {
  std::string file;
  std::optional<double> tol;
  std::optional<std::string> variant;
  std::string projection = "ambient";
  std::string which;
  std::vector<std::size_t> subset;
  bool subset_set = false;
  std::vector<double> vector;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 0;
  std::string a_file;
  std::string b_file;

  // random
  std::vector<int> signs;
  std::optional<std::size_t> dimension;
  std::vector<std::size_t> members;
  std::vector<std::size_t> dims;
  double boost = 0.0;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = 0;
  std::string summary;
};

Outcome cmd_classify(const Options& o);
Outcome cmd_analyze(const Options& o);
Outcome cmd_check(const Options& o);
Outcome cmd_random(const Options& o);

}  // namespace cli
