#include "gravcat/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace gravcat {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::string current;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

double parse_number(const std::string& text, const std::string& context) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || !std::isfinite(v)) {
    throw ConfigError(context + ": '" + text + "' is not a finite number");
  }
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& context) {
  const double v = parse_number(text, context);
  if (v < 1.0 || v != std::floor(v) || v > 1e7) {
    throw ConfigError(context + ": grid count '" + text + "' must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

bool is_parameter(std::string_view key) {
  const auto& keys = parameter_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

Grid parse_grid(const std::string& text, const std::string& context) {
  const auto words = split_words(text);
  if (words.empty()) throw ConfigError(context + ": empty grid");
  const std::string& kind = words.front();
  if (kind == "list") {
    ListGrid g;
    for (std::size_t i = 1; i < words.size(); ++i) g.values.push_back(parse_number(words[i], context));
    return g;
  }
  if (kind == "linear" || kind == "log") {
    if (words.size() != 4) throw ConfigError(context + ": expected '" + kind + " start stop count'");
    const double start = parse_number(words[1], context);
    const double stop = parse_number(words[2], context);
    const std::size_t count = parse_count(words[3], context);
    if (kind == "linear") return LinearGrid{start, stop, count};
    return LogGrid{start, stop, count};
  }
  throw ConfigError(context + ": unknown grid kind '" + kind + "' (expected list, linear or log)");
}

// Shortest text that reads back to the same double.
std::string number_text(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string grid_text(const Grid& grid) {
  struct Visitor {
    std::string operator()(const ListGrid& g) const {
      std::string s = "list";
      for (double v : g.values) s += " " + number_text(v);
      return s;
    }
    std::string operator()(const LinearGrid& g) const {
      return "linear " + number_text(g.start) + " " + number_text(g.stop) + " " + std::to_string(g.count);
    }
    std::string operator()(const LogGrid& g) const {
      return "log " + number_text(g.start) + " " + number_text(g.stop) + " " + std::to_string(g.count);
    }
  };
  return std::visit(Visitor{}, grid);
}

void validate_grid(const SweepAxis& axis) {
  const std::string context = "sweep '" + axis.parameter + "'";
  if (const auto* list = std::get_if<ListGrid>(&axis.grid)) {
    if (list->values.empty()) throw ConfigError(context + ": list grid is empty");
    for (double v : list->values)
      if (!std::isfinite(v)) throw ConfigError(context + ": non-finite grid value");
  } else if (const auto* lin = std::get_if<LinearGrid>(&axis.grid)) {
    if (lin->count < 1) throw ConfigError(context + ": grid count must be >= 1");
    if (!std::isfinite(lin->start) || !std::isfinite(lin->stop)) throw ConfigError(context + ": non-finite bound");
  } else if (const auto* lg = std::get_if<LogGrid>(&axis.grid)) {
    if (lg->count < 1) throw ConfigError(context + ": grid count must be >= 1");
    if (!(lg->start > 0.0) || !(lg->stop > 0.0) || !std::isfinite(lg->start) || !std::isfinite(lg->stop)) {
      throw ConfigError(context + ": log grid bounds must be positive and finite");
    }
  }
}

} // namespace

std::vector<double> grid_points(const Grid& grid) {
  struct Visitor {
    std::vector<double> operator()(const ListGrid& g) const { return g.values; }
    std::vector<double> operator()(const LinearGrid& g) const {
      std::vector<double> v(g.count);
      for (std::size_t i = 0; i < g.count; ++i) {
        const double f = g.count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(g.count - 1);
        v[i] = std::lerp(g.start, g.stop, f);
      }
      return v;
    }
    std::vector<double> operator()(const LogGrid& g) const {
      std::vector<double> v(g.count);
      const double lo = std::log(g.start);
      const double hi = std::log(g.stop);
      for (std::size_t i = 0; i < g.count; ++i) {
        const double f = g.count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(g.count - 1);
        v[i] = std::exp(std::lerp(lo, hi, f));
      }
      v.front() = g.start;
      if (g.count > 1) v.back() = g.stop;
      return v;
    }
  };
  return std::visit(Visitor{}, grid);
}

const std::vector<std::string>& parameter_keys() {
  static const std::vector<std::string> keys = {"omega", "gamma", "T",     "E", "lambda", "delta", "mu",
                                                "chi",   "g",     "alpha", "r", "t",      "tau"};
  return keys;
}

std::vector<std::string> required_parameters(Channel channel) {
  switch (channel) {
  case Channel::spectrum:
    return {"omega", "gamma"};
  case Channel::constant_field:
    return {"omega", "gamma", "T", "lambda", "delta", "t"};
  case Channel::decaying_field:
    return {"omega", "gamma", "T", "mu", "chi", "delta", "t"};
  case Channel::pl_noise:
    return {"omega", "gamma", "T", "g", "alpha", "tau"};
  case Channel::qwm_after_pl:
    return {"omega", "gamma", "T", "g", "alpha", "tau", "r"};
  }
  return {};
}

std::vector<std::string> available_outputs(Channel channel) {
  if (channel == Channel::spectrum) return {"E0", "E1", "E2", "E3"};
  return {"ST", "BN", "CN", "PR", "EW"};
}

std::string_view to_string(Channel channel) {
  switch (channel) {
  case Channel::spectrum:
    return "spectrum";
  case Channel::constant_field:
    return "constant_field";
  case Channel::decaying_field:
    return "decaying_field";
  case Channel::pl_noise:
    return "pl_noise";
  case Channel::qwm_after_pl:
    return "qwm_after_pl";
  }
  return "?";
}

Channel parse_channel(std::string_view name) {
  for (Channel c : {Channel::spectrum, Channel::constant_field, Channel::decaying_field, Channel::pl_noise,
                    Channel::qwm_after_pl}) {
    if (to_string(c) == name) return c;
  }
  throw ConfigError("unknown channel '" + std::string(name) + "'");
}

void validate(const SweepConfig& cfg) {
  for (const auto& [key, value] : cfg.fixed) {
    if (!is_parameter(key)) throw ConfigError("unknown parameter '" + key + "'");
    if (!std::isfinite(value)) throw ConfigError("parameter '" + key + "' is not finite");
  }
  if (cfg.sweep.size() > kMaxSweepAxes) throw ConfigError("at most two swept parameters are supported");
  std::set<std::string> swept;
  for (const auto& axis : cfg.sweep) {
    if (!is_parameter(axis.parameter)) throw ConfigError("unknown swept parameter '" + axis.parameter + "'");
    if (!swept.insert(axis.parameter).second) throw ConfigError("parameter '" + axis.parameter + "' swept twice");
    if (cfg.fixed.contains(axis.parameter)) {
      throw ConfigError("parameter '" + axis.parameter + "' is both fixed and swept");
    }
    validate_grid(axis);
  }
  for (const auto& key : required_parameters(cfg.channel)) {
    if (!cfg.fixed.contains(key) && !swept.contains(key)) {
      throw ConfigError("channel " + std::string(to_string(cfg.channel)) + " needs parameter '" + key + "'");
    }
  }
  if (cfg.outputs.empty()) throw ConfigError("no outputs requested");
  const auto allowed = available_outputs(cfg.channel);
  std::set<std::string> seen;
  for (const auto& out : cfg.outputs) {
    if (std::find(allowed.begin(), allowed.end(), out) == allowed.end()) {
      throw ConfigError("output '" + out + "' is not available for channel " + std::string(to_string(cfg.channel)));
    }
    if (!seen.insert(out).second) throw ConfigError("output '" + out + "' requested twice");
  }
}

SweepConfig parse_config(std::istream& in) {
  SweepConfig cfg;
  cfg.outputs.clear();
  bool have_channel = false;
  std::string section;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(where + ": malformed section header");
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      if (section != "scenario" && section != "fixed" && section != "sweep") {
        throw ConfigError(where + ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));

    if (section == "scenario") {
      if (key == "channel") {
        cfg.channel = parse_channel(value);
        have_channel = true;
      } else if (key == "outputs") {
        cfg.outputs = split_words(value);
      } else if (key == "reference") {
        if (value != "thermal_t0") throw ConfigError(where + ": unknown reference '" + value + "'");
        cfg.reference = Reference::thermal_t0;
      } else if (key == "decay_mode") {
        if (value == "literal") {
          cfg.decay_mode = DecayMode::literal;
        } else if (value == "integrated") {
          cfg.decay_mode = DecayMode::integrated;
        } else {
          throw ConfigError(where + ": decay_mode must be literal or integrated");
        }
      } else {
        throw ConfigError(where + ": unknown scenario key '" + key + "'");
      }
    } else if (section == "fixed") {
      if (!is_parameter(key)) throw ConfigError(where + ": unknown parameter '" + key + "'");
      if (cfg.fixed.contains(key)) throw ConfigError(where + ": parameter '" + key + "' set twice");
      cfg.fixed[key] = parse_number(value, where);
    } else if (section == "sweep") {
      if (!is_parameter(key)) throw ConfigError(where + ": unknown parameter '" + key + "'");
      cfg.sweep.push_back({key, parse_grid(value, where + " (" + key + ")")});
    } else {
      throw ConfigError(where + ": key outside of any section");
    }
  }
  if (!have_channel) throw ConfigError("config does not set [scenario] channel");
  validate(cfg);
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return parse_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string format_config(const SweepConfig& cfg) {
  std::ostringstream out;
  out << "[scenario]\n";
  out << "channel = " << to_string(cfg.channel) << "\n";
  out << "outputs =";
  for (std::size_t i = 0; i < cfg.outputs.size(); ++i) out << (i == 0 ? " " : ", ") << cfg.outputs[i];
  out << "\nreference = thermal_t0\n";
  if (cfg.channel == Channel::decaying_field) {
    out << "decay_mode = " << (cfg.decay_mode == DecayMode::literal ? "literal" : "integrated") << "\n";
  }
  out << "\n[fixed]\n";
  for (const auto& key : parameter_keys()) {
    const auto it = cfg.fixed.find(key);
    if (it != cfg.fixed.end()) out << key << " = " << number_text(it->second) << "\n";
  }
  out << "\n[sweep]\n";
  for (const auto& axis : cfg.sweep) out << axis.parameter << " = " << grid_text(axis.grid) << "\n";
  return out.str();
}

void apply_override(SweepConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError("--set expects key=value, got '" + std::string(assignment) + "'");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  if (!is_parameter(key)) throw ConfigError("--set: unknown parameter '" + key + "'");
  for (const auto& axis : cfg.sweep) {
    if (axis.parameter == key) throw ConfigError("--set: parameter '" + key + "' is swept by this scenario");
  }
  cfg.fixed[key] = parse_number(value, "--set " + key);
}

} // namespace gravcat
