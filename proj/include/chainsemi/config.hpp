#ifndef CHAINSEMI_CONFIG_HPP_
#define CHAINSEMI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "error.hpp"
#include "families.hpp"

namespace chainsemi {

enum class OutputFormat { json, csv };

struct Config {
  int max_enum_n = 6;    // enumeration budget: (n+1)^n candidates filtered
  int max_oracle_n = 4;  // cancellation-fingerprint oracle budget
  int max_jstar_n = 3;   // principal *-ideal fixpoint budget

  std::vector<Family> families = {Family::CP, Family::OCP, Family::ORCP};
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> cache_dir;
  int threads = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 20260810;  // sampled property checks

  //! Enforces max_oracle_n <= max_enum_n and max_jstar_n <= max_oracle_n.
  void validate() const {
    if (max_oracle_n > max_enum_n) {
      throw Error(errc::config_invalid, "max_oracle_n exceeds max_enum_n");
    }
    if (max_jstar_n > max_oracle_n) {
      throw Error(errc::config_invalid, "max_jstar_n exceeds max_oracle_n");
    }
  }
};

}  // namespace chainsemi

#endif  // CHAINSEMI_CONFIG_HPP_
