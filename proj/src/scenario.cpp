#include "gravcat/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "gravcat/measures.hpp"
#include "gravcat/model.hpp"

namespace gravcat {

namespace {

using ParamMap = std::map<std::string, double, std::less<>>;

double param(const ParamMap& p, std::string_view key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

double param(const ParamMap& p, std::string_view key) {
  const auto it = p.find(key);
  // validate() guarantees every required key is present.
  if (it == p.end()) throw ConfigError("missing parameter '" + std::string(key) + "'");
  return it->second;
}

std::vector<std::string> sorted_outputs(const SweepConfig& cfg) {
  std::vector<std::string> outs = cfg.outputs;
  std::sort(outs.begin(), outs.end());
  return outs;
}

DensityMatrix evolve(const SweepConfig& cfg, const ParamMap& p, const DensityMatrix& rho0) {
  switch (cfg.channel) {
  case Channel::constant_field:
    return evolve_constant_field(rho0, {param(p, "E", 1.0), param(p, "lambda"), param(p, "delta"), param(p, "t")});
  case Channel::decaying_field:
    return evolve_decaying_field(rho0, {param(p, "E", 1.0), 0.0, param(p, "delta"), param(p, "t")},
                                 {param(p, "mu"), param(p, "chi")}, cfg.decay_mode);
  case Channel::pl_noise:
    return dephase_pl(rho0, {param(p, "g"), param(p, "alpha"), param(p, "tau")});
  case Channel::qwm_after_pl:
    return qwm_reverse(dephase_pl(rho0, {param(p, "g"), param(p, "alpha"), param(p, "tau")}), {param(p, "r")});
  case Channel::spectrum:
    break;
  }
  throw ConfigError("channel has no state map");
}

double state_output(const std::string& name, const DensityMatrix& state, const DensityMatrix& reference) {
  if (name == "ST") return steerability(state);
  if (name == "BN") return bell_nonlocality(state);
  if (name == "CN") return concurrence(state);
  if (name == "PR") return purity(state);
  if (name == "EW") return entanglement_witness(state, reference);
  throw ConfigError("unknown output '" + name + "'");
}

std::vector<double> evaluate_point(const SweepConfig& cfg, const std::vector<std::string>& outputs,
                                   const ParamMap& p) {
  std::vector<double> values;
  values.reserve(outputs.size());
  if (cfg.channel == Channel::spectrum) {
    const auto e = energies({param(p, "omega"), param(p, "gamma"), 1.0});
    for (const auto& name : outputs) values.push_back(e.at(static_cast<std::size_t>(name.at(1) - '0')));
    return values;
  }
  const ModelParams model{param(p, "omega"), param(p, "gamma"), param(p, "T")};
  const DensityMatrix reference = thermal_state(model);
  const DensityMatrix state = evolve(cfg, p, reference);
  for (const auto& name : outputs) values.push_back(state_output(name, state, reference));
  return values;
}

std::string describe_point(const SweepConfig& cfg, const std::vector<double>& swept) {
  if (cfg.sweep.empty()) return "single point";
  std::string s = "grid point (";
  for (std::size_t a = 0; a < cfg.sweep.size(); ++a) {
    if (a > 0) s += ", ";
    s += cfg.sweep[a].parameter + "=" + format_number(swept[a]);
  }
  return s + ")";
}

[[noreturn]] void rethrow_at(const std::string& where) {
  try {
    throw;
  } catch (const ParameterError& e) {
    throw ParameterError(where + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const NumericError& e) {
    throw NumericError(where + ": " + e.what());
  }
}

} // namespace

std::vector<std::string> table_header(const SweepConfig& cfg) {
  std::vector<std::string> header;
  for (const auto& axis : cfg.sweep) header.push_back(axis.parameter);
  for (auto& out : sorted_outputs(cfg)) header.push_back(std::move(out));
  return header;
}

ResultTable run_scenario(const SweepConfig& cfg, const RunOptions& options) {
  validate(cfg);
  const auto outputs = sorted_outputs(cfg);

  std::vector<std::vector<double>> axes;
  std::size_t total = 1;
  for (const auto& axis : cfg.sweep) {
    axes.push_back(grid_points(axis.grid));
    total *= axes.back().size();
  }

  ResultTable table;
  table.header = table_header(cfg);
  table.rows.resize(total);

  ParamMap base(cfg.fixed.begin(), cfg.fixed.end());

  // Mixed-radix decoding: the last axis varies fastest.
  auto swept_values = [&](std::size_t index) {
    std::vector<double> v(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      v[a] = axes[a][index % axes[a].size()];
      index /= axes[a].size();
    }
    return v;
  };

  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const auto swept = swept_values(i);
      ParamMap p = base;
      for (std::size_t a = 0; a < swept.size(); ++a) p[cfg.sweep[a].parameter] = swept[a];
      try {
        auto values = evaluate_point(cfg, outputs, p);
        std::vector<double> row = swept;
        row.insert(row.end(), values.begin(), values.end());
        table.rows[i] = std::move(row);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Report the first failing point in sweep order, whatever the scheduling.
  for (std::size_t i = 0; i < total; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error&) {
      rethrow_at(describe_point(cfg, swept_values(i)));
    }
  }
  return table;
}

} // namespace gravcat
