#pragma once

// Sweep configuration and its flat text format:
//
//   [scenario]
//   channel = pl_noise
//   outputs = ST, BN, CN, PR
//   reference = thermal_t0
//
//   [fixed]
//   gamma = 1
//   T = 0.1
//
//   [sweep]            # one line per axis, outer axis first
//   tau = log 1e-2 1e5 400
//   omega = list 1 2 3 4
//
// Grids are `list v1 v2 ...`, `linear start stop count` or
// `log start stop count`. Unknown sections, keys and parameter names are errors.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gravcat/channels.hpp"

namespace gravcat {

enum class Channel { spectrum, constant_field, decaying_field, pl_noise, qwm_after_pl };

/// Reference state of the entanglement witness.
enum class Reference { thermal_t0 };

struct ListGrid {
  std::vector<double> values;
  friend bool operator==(const ListGrid&, const ListGrid&) = default;
};

struct LinearGrid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;
  friend bool operator==(const LinearGrid&, const LinearGrid&) = default;
};

/// Points evenly spaced in log(value); start and stop must be positive.
struct LogGrid {
  double start = 1.0;
  double stop = 1.0;
  std::size_t count = 1;
  friend bool operator==(const LogGrid&, const LogGrid&) = default;
};

using Grid = std::variant<ListGrid, LinearGrid, LogGrid>;

std::vector<double> grid_points(const Grid& grid);

struct SweepAxis {
  std::string parameter;
  Grid grid;
  friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

struct SweepConfig {
  Channel channel = Channel::pl_noise;
  std::map<std::string, double> fixed;
  std::vector<SweepAxis> sweep; ///< outer axis first, at most two
  std::vector<std::string> outputs;
  Reference reference = Reference::thermal_t0;
  DecayMode decay_mode = DecayMode::literal;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

inline constexpr std::size_t kMaxSweepAxes = 2;

/// omega, gamma, T, E, lambda, delta, mu, chi, g, alpha, r, t, tau
const std::vector<std::string>& parameter_keys();

/// Parameters a channel reads (E is optional and defaults to 1).
std::vector<std::string> required_parameters(Channel channel);

/// ST, BN, CN, PR, EW for the state channels; E0..E3 for the spectrum.
std::vector<std::string> available_outputs(Channel channel);

std::string_view to_string(Channel channel);
Channel parse_channel(std::string_view name);

/// Throws ConfigError describing the first problem found.
void validate(const SweepConfig& cfg);

SweepConfig parse_config(std::istream& in);
SweepConfig load_config(const std::string& path);

/// Text form accepted by parse_config.
std::string format_config(const SweepConfig& cfg);

/// Applies `key=value` to the fixed parameters. Throws ConfigError for unknown
/// keys or unparsable values.
void apply_override(SweepConfig& cfg, std::string_view assignment);

} // namespace gravcat
