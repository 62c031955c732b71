// Shared builders for the test suites.
#ifndef LTEU_TESTS_HELPERS_HPP
#define LTEU_TESTS_HELPERS_HPP

#include <unistd.h>

#include <filesystem>
#include <string>

#include "lteu/scenario.hpp"

namespace lteu_test {

/// A desk-sized scenario that exercises every pipeline stage quickly.
inline lteu::scenario_params small_params() {
  lteu::scenario_params p = lteu::scenario_params::defaults();
  p.scene.area_side_m = 300.0;
  p.scene.num_bs = 3;
  p.scene.num_wap = 2;
  p.scene.num_users = 12;
  p.scene.licensed_rbs = 6;
  p.scene.unlicensed_channels = 2;
  p.scene.total_bandwidth_hz = 50e6;
  p.thetas = {1.0, 2.0, 4.0};
  p.type_probs = {0.5, 0.3, 0.2};
  p.required_rates_bps = {0.0, 0.2e6, 0.5e6};
  p.file_bits = 10'000'000;
  p.chunk_bits = 5'000'000;
  p.num_files = 5;
  p.quotas.licensed_override = 2;
  p.quotas.unlicensed_override = 3;
  p.sampling.activity_slots = 16;
  p.sampling.cost_draws = 8;
  p.replications = 2;
  p.sweep_values = {12};
  p.jobs = 1;
  return p;
}

struct temp_dir {
  std::filesystem::path path;
  explicit temp_dir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("lteu_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~temp_dir() { std::filesystem::remove_all(path); }
};

}  // namespace lteu_test

#endif  // LTEU_TESTS_HELPERS_HPP
