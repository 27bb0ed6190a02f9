#include <numbers>
#include <sstream>

#include "gravcat/scenario.hpp"

namespace gravcat {

namespace {

constexpr std::size_t kCurvePoints = 400;

// Scaled-time axis for the power-law noise figures; the curves span decades.
SweepAxis tau_axis(std::size_t count = kCurvePoints) { return {"tau", LogGrid{1e-2, 1e5, count}}; }

SweepAxis list_axis(std::string name, std::vector<double> values) { return {std::move(name), ListGrid{std::move(values)}}; }

Preset spectrum_preset(std::string name, std::string figure, std::string description, SweepAxis swept,
                       SweepAxis family) {
  SweepConfig c;
  c.channel = Channel::spectrum;
  c.sweep = {std::move(swept), std::move(family)};
  c.outputs = {"E0", "E1", "E2", "E3"};
  return {std::move(name), std::move(figure), std::move(description), std::move(c)};
}

Preset constant_field_preset(std::string name, std::string description, std::map<std::string, double> fixed,
                             SweepAxis family) {
  SweepConfig c;
  c.channel = Channel::constant_field;
  c.fixed = std::move(fixed);
  c.fixed["E"] = 1.0;
  c.sweep = {{"t", LinearGrid{0.0, 4.0 * std::numbers::pi, kCurvePoints}}, std::move(family)};
  c.outputs = {"EW"};
  return {std::move(name), "Fig. 2", std::move(description), std::move(c)};
}

Preset decaying_field_preset(std::string name, std::string description, std::map<std::string, double> fixed,
                             SweepAxis family) {
  SweepConfig c;
  c.channel = Channel::decaying_field;
  c.fixed = std::move(fixed);
  c.fixed["E"] = 1.0;
  c.sweep = {{"t", LinearGrid{0.0, 100.0, kCurvePoints}}, std::move(family)};
  c.outputs = {"EW"};
  return {std::move(name), "Fig. 3", std::move(description), std::move(c)};
}

Preset noise_preset(std::string name, std::string figure, std::string description,
                    std::map<std::string, double> fixed, SweepAxis family) {
  SweepConfig c;
  c.channel = Channel::pl_noise;
  c.fixed = std::move(fixed);
  c.sweep = {tau_axis(), std::move(family)};
  c.outputs = {"ST", "BN", "CN", "PR"};
  return {std::move(name), std::move(figure), std::move(description), std::move(c)};
}

std::vector<Preset> build_presets() {
  std::vector<Preset> p;

  p.push_back(spectrum_preset("fig1", "Fig. 1(a,b)", "eigenvalues versus gamma for omega = 1 and 5",
                              {"gamma", LinearGrid{-5.0, 5.0, 401}}, list_axis("omega", {1.0, 5.0})));
  p.push_back(spectrum_preset("fig1cd", "Fig. 1(c,d)", "eigenvalues versus omega for gamma = 1 and 5",
                              {"omega", LinearGrid{-5.0, 5.0, 401}}, list_axis("gamma", {1.0, 5.0})));

  p.push_back(constant_field_preset("fig2a", "EW under the constant field for several T",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"omega", 1.0}, {"lambda", 0.5}},
                                    list_axis("T", {0.1, 0.3, 0.5, 0.7, 1.0})));
  p.push_back(constant_field_preset("fig2b", "EW under the constant field for several omega",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"lambda", 0.5}, {"T", 0.1}},
                                    list_axis("omega", {0.5, 1.0, 2.0, 3.0})));
  p.push_back(constant_field_preset("fig2c", "EW under the constant field for several lambda",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"omega", 1.0}, {"T", 0.1}},
                                    list_axis("lambda", {0.25, 0.5, 1.0})));
  p.push_back(constant_field_preset("fig2d", "EW under the constant field for several gamma",
                                    {{"delta", 1.0}, {"omega", 1.0}, {"lambda", 0.5}, {"T", 0.1}},
                                    list_axis("gamma", {0.5, 1.0, 1.5, 2.0})));
  p.push_back(constant_field_preset("fig2e", "EW under the constant field for several delta",
                                    {{"gamma", 1.0}, {"omega", 1.0}, {"lambda", 0.5}, {"T", 0.1}},
                                    list_axis("delta", {-1.0, -0.5, 0.5, 1.0})));

  p.push_back(decaying_field_preset("fig3a", "EW under the decaying field for several chi",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"omega", 1.0}, {"mu", 0.5}, {"T", 0.1}},
                                    list_axis("chi", {0.1, 0.2, 0.3, 0.4})));
  p.push_back(decaying_field_preset("fig3b", "EW under the decaying field for several mu",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"omega", 1.0}, {"chi", 0.1}, {"T", 0.1}},
                                    list_axis("mu", {0.25, 0.5, 0.75, 1.0})));
  p.push_back(decaying_field_preset("fig3c", "EW under the decaying field for several T",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"omega", 1.0}, {"chi", 0.1}, {"mu", 0.5}},
                                    list_axis("T", {0.1, 0.3, 0.5, 0.7})));
  p.push_back(decaying_field_preset("fig3d", "EW under the decaying field for several omega",
                                    {{"delta", 1.0}, {"gamma", 1.0}, {"chi", 0.1}, {"mu", 0.5}, {"T", 0.1}},
                                    list_axis("omega", {1.0, 2.0, 3.0, 4.0})));
  p.push_back(decaying_field_preset("fig3e", "EW under the decaying field for several gamma",
                                    {{"delta", 1.0}, {"omega", 1.0}, {"chi", 0.1}, {"mu", 0.5}, {"T", 0.1}},
                                    list_axis("gamma", {0.5, 1.0, 1.5, 2.0})));
  p.push_back(decaying_field_preset("fig3f", "EW under the decaying field for several delta",
                                    {{"gamma", 1.0}, {"omega", 1.0}, {"chi", 0.1}, {"mu", 0.5}, {"T", 0.1}},
                                    list_axis("delta", {-1.0, -0.5, 0.5, 1.0})));

  p.push_back(noise_preset("fig4", "Fig. 4", "ST, BN, CN, PR under power-law noise for several omega",
                           {{"gamma", 1.0}, {"alpha", 2.1}, {"g", 1e-4}, {"T", 0.1}},
                           list_axis("omega", {1.0, 2.0, 3.0, 4.0})));
  p.push_back(noise_preset("fig5", "Fig. 5", "ST, BN, CN, PR under power-law noise for several g",
                           {{"omega", 1.0}, {"gamma", 1.0}, {"alpha", 2.1}, {"T", 0.1}},
                           list_axis("g", {1e-4, 1e-3, 1e-2, 1e-1})));
  p.push_back(noise_preset("fig6", "Fig. 6", "ST, BN, CN, PR under power-law noise for several gamma",
                           {{"omega", 1.0}, {"alpha", 2.1}, {"g", 1e-4}, {"T", 0.1}},
                           list_axis("gamma", {0.5, 1.0, 1.5, 2.0})));
  p.push_back(noise_preset("fig7", "Fig. 7", "ST, BN, CN, PR under power-law noise for several T",
                           {{"omega", 1.0}, {"gamma", 1.0}, {"alpha", 2.1}, {"g", 1e-4}},
                           list_axis("T", {0.1, 0.2, 0.3, 0.5})));
  p.push_back(noise_preset("fig8", "Fig. 8", "ST, BN, CN, PR under power-law noise for several alpha",
                           {{"omega", 1.0}, {"gamma", 1.0}, {"g", 1e-4}, {"T", 0.1}},
                           list_axis("alpha", {1.5, 2.1, 2.5, 3.0})));

  SweepConfig qwm;
  qwm.channel = Channel::qwm_after_pl;
  qwm.fixed = {{"g", 1e-4}, {"gamma", 1.5}, {"omega", 2.0}, {"alpha", 2.1}, {"T", 0.1}};
  qwm.sweep = {{"r", LinearGrid{0.0, 1.0, 41}}, tau_axis(100)};
  qwm.outputs = {"ST", "BN", "CN", "PR"};
  p.push_back({"fig9", "Fig. 9", "ST, BN, CN, PR after weak-measurement reversal over (r, tau)", std::move(qwm)});

  return p;
}

} // namespace

const std::vector<Preset>& list_presets() {
  static const std::vector<Preset> presets = build_presets();
  return presets;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : list_presets())
    if (p.name == name) return p;
  throw ConfigError("unknown preset '" + name + "' (see `gravcat presets`)");
}

std::string gnuplot_script(const Preset& preset, const std::string& csv_path) {
  const SweepConfig& c = preset.config;
  const auto header = table_header(c);
  const std::size_t n_axes = c.sweep.size();
  std::ostringstream s;
  s << "# " << preset.name << ": " << preset.description << "\n";
  s << "set datafile separator ','\n";
  s << "data = '" << csv_path << "'\n";
  if (!c.sweep.empty() && std::holds_alternative<LogGrid>(c.sweep.front().grid)) s << "set logscale x\n";
  if (n_axes == 2 && std::holds_alternative<LogGrid>(c.sweep[1].grid)) s << "set logscale y\n";
  s << "set xlabel '" << (n_axes > 0 ? header[0] : "") << "'\n";

  const std::size_t panels = header.size() - n_axes;
  s << "set multiplot layout 1," << panels << "\n";
  for (std::size_t k = n_axes; k < header.size(); ++k) {
    const std::size_t col = k + 1;
    s << "set title '" << header[k] << "'\n";
    if (n_axes == 2 && std::holds_alternative<ListGrid>(c.sweep[1].grid)) {
      s << "plot";
      const auto& values = std::get<ListGrid>(c.sweep[1].grid).values;
      for (std::size_t v = 0; v < values.size(); ++v) {
        const std::string val = format_number(values[v]);
        s << (v == 0 ? " " : ", \\\n     ") << "data every ::1 using 1:(abs($2 - (" << val << ")) < 1e-12 ? $"
          << col << " : NaN) with lines title '" << header[1] << "=" << val << "'";
      }
      s << "\n";
    } else if (n_axes == 2) {
      s << "set ylabel '" << header[1] << "'\n";
      s << "splot data every ::1 using 1:2:" << col << " with points pointsize 0.3 notitle\n";
    } else {
      s << "plot data every ::1 using 1:" << col << " with lines notitle\n";
    }
  }
  s << "unset multiplot\n";
  return s.str();
}

} // namespace gravcat
