#pragma once

// Job configuration for the command-line driver, read from JSON.
//
//   {
//     "group": {"preset": "SL", "params": [3]}
//            | {"rank": r, "roots": [...], "coroots": [...], "simple_indices": [...], "pairing": [[...]]},
//     "D": [[...]]              (or "cover_multiplier": k for k times the standard form),
//     "n": 2, "p": 5, "f": 1, "eps_power": 1,
//     "characters": [{"m": [...], "depth": {"a1": 2}}],
//     "tasks": ["chi-report", "hecke-check", "shimura-check", "apartment-svg"],
//     "seed": 1,
//     "bounds": {"word_length": 4, "offset": 3, "samples": 40, "window": 2}
//   }

#include "tamehecke/cover_torus.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tamehecke {

/// Invalid configuration; the message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CharacterSpec {
  IntVec m;
  std::map<int, Int> depth;
};

struct JobBounds {
  int word_length = 4;
  int offset = 3;
  int samples = 40;
  /// Apartment window [-window, window]^rank.
  int window = 2;
};

struct JobConfig {
  std::shared_ptr<const CoverContext> context;
  std::vector<CharacterSpec> characters;
  std::set<std::string> tasks;
  std::uint64_t seed = 1;
  JobBounds bounds;
  std::vector<std::string> warnings;
};

inline const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> tasks{"chi-report", "hecke-check", "shimura-check", "apartment-svg"};
  return tasks;
}

/// Validates and builds the cover, field and characters. Throws ConfigError.
JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);

}  // namespace tamehecke
