#include "densbench/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "densbench/error.hpp"

namespace densbench::cli {

namespace {

using json = nlohmann::ordered_json;

struct SubcommandInfo {
  Subcommand id;
  const char* name;
  const char* claim;
};

constexpr SubcommandInfo kSubcommands[] = {
    {Subcommand::Dimensions, "dimensions",
     "Dirac field is [L^-3/2], KG field is [L^-1]; psi^dagger psi and the KG charge density are densities [L^-3], "
     "phi* phi alone is not"},
    {Subcommand::Derive, "derive",
     "Euler-Lagrange on the Dirac and KG Lagrangians gives the Dirac and KG equations; the Legendre transform of the "
     "KG Lagrangian is the quoted Hamiltonian density; the Dirac Hamiltonian density has no time derivative"},
    {Subcommand::Symmetry, "symmetry",
     "KG Hamiltonian density is symmetric and KG charge density antisymmetric under phi <-> phi*; the Dirac density "
     "has no time derivative; the KG density vanishes for a real field"},
    {Subcommand::Continuity, "continuity",
     "Dirac and KG currents satisfy d_t rho + div j = 0: exact on plane waves, second-order residual on superpositions"},
    {Subcommand::DiracConsistency, "dirac-consistency",
     "H psi = i d_t psi on plane waves with O(h^2) error; a constant potential shifts the energy by e V"},
    {Subcommand::Orthogonality, "orthogonality",
     "well modes phi_0 and phi_1 are orthogonal at V = 0; an off-center point charge makes U nonzero, decaying with "
     "distance, linear in e and q, and zero for any central potential"},
    {Subcommand::All, "all", "every claim above plus positivity of the densities and numerics sanity checks"},
};

const std::map<std::string, std::string, std::less<>> kConfigKeys{
    {"out", "report path"},
    {"format", "json or csv"},
    {"d", "comma-separated charge distances"},
    {"resolution", "coarsest resolution"},
    {"refine", "true/false"},
    {"radius", "well radius R"},
    {"mass", "particle mass m"},
    {"coupling", "particle charge e"},
    {"source-charge", "external charge q"},
    {"sigma", "phase convention +1 or -1"},
    {"seed", "random seed"},
    {"samples", "random sample count"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw UsageError("not a number: '" + t + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty distance list");
  return out;
}

template <class T>
T parse_value(const std::string& key, const std::string& text) {
  T v{};
  if (!CLI::detail::lexical_conversion<T, T>({text}, v)) {
    throw UsageError(fmt::format("config: bad value '{}' for '{}'", text, key));
  }
  return v;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError(fmt::format("{}:{}: expected key=value", path, lineno));
    const std::string key = trim(t.substr(0, eq));
    if (!kConfigKeys.contains(key)) throw UsageError(fmt::format("{}:{}: unknown key '{}'", path, lineno, key));
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a path");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

struct Values {
  std::string out;
  std::string format = "json";
  std::string d;
  int resolution = 0;
  bool refine = false;
  double radius = 1.0;
  double mass = 1.0;
  double coupling = 1.0;
  double source_charge = 1.0;
  int sigma = 1;
  std::uint32_t seed = 2024;
  std::size_t samples = 10000;
};

void apply_config(const std::map<std::string, std::string>& cfg, Values& v) {
  for (const auto& [key, text] : cfg) {
    if (key == "out") v.out = text;
    else if (key == "format") v.format = text;
    else if (key == "d") v.d = text;
    else if (key == "resolution") v.resolution = parse_value<int>(key, text);
    else if (key == "refine") v.refine = parse_value<bool>(key, text);
    else if (key == "radius") v.radius = parse_value<double>(key, text);
    else if (key == "mass") v.mass = parse_value<double>(key, text);
    else if (key == "coupling") v.coupling = parse_value<double>(key, text);
    else if (key == "source-charge") v.source_charge = parse_value<double>(key, text);
    else if (key == "sigma") v.sigma = parse_value<int>(key, text);
    else if (key == "seed") v.seed = parse_value<std::uint32_t>(key, text);
    else if (key == "samples") v.samples = parse_value<std::size_t>(key, text);
  }
}

void validate(const Values& v) {
  if (v.format != "json" && v.format != "csv") throw UsageError("format must be json or csv");
  if (v.resolution != 0 && v.resolution < 3) throw UsageError("resolution must be at least 3");
  if (v.sigma != 1 && v.sigma != -1) throw UsageError("sigma must be +1 or -1");
  if (!(v.radius > 0.0)) throw UsageError("radius must be positive");
  if (v.samples == 0) throw UsageError("samples must be positive");
}

bool uses_lattice(Subcommand s) {
  return s == Subcommand::Continuity || s == Subcommand::DiracConsistency || s == Subcommand::All;
}
bool uses_experiment(Subcommand s) { return s == Subcommand::Orthogonality || s == Subcommand::All; }

json check_json(const checks::Check& c) {
  json j{{"name", c.name}, {"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}};
  if (std::isfinite(c.value)) j["value"] = c.value;
  if (std::isfinite(c.tolerance)) j["tolerance"] = c.tolerance;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_number(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : ""; }

void format_json_into(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        format_json_into(value, indent + 2, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        format_json_into(j[i], indent + 2, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fmt::format("{:.17g}", v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

void print_group(std::ostream& out, const std::string& group, const std::vector<checks::Check>& list) {
  out << fmt::format("[{}]\n", group);
  for (const auto& c : list) {
    out << fmt::format("  {}  {:<36} {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
  }
}

void print_sweep(std::ostream& out, const experiment::ExperimentReport& rep) {
  out << fmt::format("  {:>12}  {:>20}  {:>20}  {:>20}  {:>20}\n", "d", "Re U", "Im U", "error", "Re U_raw");
  for (const auto& p : rep.sweep) {
    out << fmt::format("  {:>12.12g}  {:>20.12g}  {:>20.12g}  {:>20.12g}  {:>20.12g}\n", p.distance,
                       p.interaction.value.real(), p.interaction.value.imag(), p.interaction.error,
                       p.interaction_raw.value.real());
  }
  out << fmt::format("  I_01(V=0) = {:.12g}  (error {:.12g})\n", std::abs(rep.overlap_free.value),
                     rep.overlap_free.error);
  out << "  convention: " << rep.convention << "\n";
  out << "  approximation: " << rep.approximation << "\n";
}

}  // namespace

std::string_view to_string(Subcommand s) {
  for (const auto& info : kSubcommands) {
    if (info.id == s) return info.name;
  }
  return "unknown";
}

Command parse_args(const std::vector<std::string>& args) {
  Values v;
  Command cmd;
  cmd.config_path = find_config_path(args);
  if (!cmd.config_path.empty()) apply_config(read_config(cmd.config_path), v);

  CLI::App app{"Verification suite for conserved densities of the Dirac and Klein-Gordon fields.", "densbench"};
  app.require_subcommand(1, 1);
  std::string config_flag;
  for (const auto& info : kSubcommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.claim);
    sub->add_option("--config", config_flag, "flat key=value file; flags override it");
    sub->add_option("--out", v.out, "report path (default densbench-<subcommand>.<format>)");
    sub->add_option("--format", v.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    if (uses_lattice(info.id) || uses_experiment(info.id)) {
      sub->add_option("--resolution", v.resolution,
                      "coarsest lattice points per axis / radial panels of the ball grid")
          ->check(CLI::Range(3, 1 << 16));
      sub->add_flag("--refine", v.refine, "double every resolution before the error-bar refinement");
    }
    if (uses_experiment(info.id)) {
      sub->add_option("--d", v.d, "comma-separated charge distances, e.g. 1.5,2,4");
      sub->add_option("--radius", v.radius, "well radius R");
      sub->add_option("--mass", v.mass, "particle mass m");
      sub->add_option("--coupling", v.coupling, "particle charge e");
      sub->add_option("--source-charge", v.source_charge, "external point charge q");
      sub->add_option("--sigma", v.sigma, "time phase exp(i sigma omega t), +1 or -1");
    }
    if (info.id == Subcommand::All) {
      sub->add_option("--seed", v.seed, "random seed for the positivity samples");
      sub->add_option("--samples", v.samples, "random samples per positivity check");
    }
    sub->callback([&cmd, id = info.id] { cmd.subcommand = id; });
  }

  if (!args.empty() && !args.front().starts_with("-") &&
      std::none_of(std::begin(kSubcommands), std::end(kSubcommands),
                   [&](const SubcommandInfo& i) { return args.front() == i.name; })) {
    throw UsageError("unknown subcommand '" + args.front() + "'");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.help = true;
    cmd.help_text = app.help();
    return cmd;
  } catch (const CLI::CallForAllHelp&) {
    cmd.help = true;
    cmd.help_text = app.help("", CLI::AppFormatMode::All);
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  validate(v);

  cmd.out_path = v.out;
  cmd.format = v.format == "csv" ? Format::Csv : Format::Json;
  cmd.resolution = v.resolution;
  cmd.refine = v.refine;
  auto& s = cmd.settings;
  if (!v.d.empty()) s.experiment.distances = parse_list(v.d);
  s.experiment.radius = v.radius;
  s.experiment.mass = v.mass;
  s.experiment.charge = v.coupling;
  s.experiment.source_charge = v.source_charge;
  s.experiment.sigma = v.sigma;
  s.seed = v.seed;
  s.samples = v.samples;
  if (v.resolution > 0) {
    s.lattice_points = static_cast<std::size_t>(v.resolution);
    s.experiment.grid.radial_panels = v.resolution;
    s.experiment.grid.polar_order = 2 * v.resolution;
    s.experiment.grid.azimuthal_count = std::max(4, v.resolution / 2);
  }
  if (v.refine) {
    s.lattice_points = 2 * s.lattice_points - 1;
    s.experiment.grid = s.experiment.grid.refined();
  }
  return cmd;
}

std::string format_json(const nlohmann::ordered_json& j) {
  std::string out;
  format_json_into(j, 0, out);
  return out + "\n";
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.help) {
    out << cmd.help_text;
    return kExitPass;
  }
  const auto& s = cmd.settings;
  const Subcommand sc = cmd.subcommand;
  const bool all = sc == Subcommand::All;

  std::vector<std::pair<std::string, std::vector<checks::Check>>> groups;
  std::optional<experiment::ExperimentReport> report;
  if (all || sc == Subcommand::Dimensions) groups.emplace_back("dimensions", checks::dimension_checks());
  if (all || sc == Subcommand::Derive) groups.emplace_back("derive", checks::derivation_checks());
  if (all || sc == Subcommand::Symmetry) groups.emplace_back("symmetry", checks::symmetry_checks());
  if (all || sc == Subcommand::Continuity) groups.emplace_back("continuity", checks::continuity_checks(s));
  if (all || sc == Subcommand::DiracConsistency) {
    groups.emplace_back("dirac-consistency", checks::dirac_consistency_checks(s));
  }
  if (all) {
    groups.emplace_back("positivity", checks::positivity_checks(s));
    groups.emplace_back("numerics", checks::numerics_checks(s));
  }
  if (all || sc == Subcommand::Orthogonality) {
    auto o = checks::orthogonality_checks(s);
    report = std::move(o.report);
    groups.emplace_back("orthogonality", std::move(o.checks));
  }

  bool passed = true;
  for (const auto& [name, list] : groups) {
    print_group(out, name, list);
    if (name == "orthogonality") print_sweep(out, *report);
    passed = passed && checks::all_passed(list);
  }

  const std::string ext = cmd.format == Format::Csv ? "csv" : "json";
  const std::string path =
      cmd.out_path.empty() ? fmt::format("densbench-{}.{}", to_string(sc), ext) : cmd.out_path;
  std::ofstream file(path, std::ios::binary);
  if (file) {
    if (cmd.format == Format::Json) {
      json j;
      j["command"] = std::string(to_string(sc));
      j["passed"] = passed;
      json g = json::object();
      for (const auto& [name, list] : groups) {
        json arr = json::array();
        for (const auto& c : list) arr.push_back(check_json(c));
        g[name] = std::move(arr);
      }
      j["checks"] = std::move(g);
      if (report) j["orthogonality"] = experiment::to_json(*report);
      file << format_json(j);
    } else if (sc == Subcommand::Orthogonality) {
      experiment::write_csv(file, *report);
    } else {
      file << "group,name,passed,value,tolerance,claim\n";
      for (const auto& [name, list] : groups) {
        for (const auto& c : list) {
          file << fmt::format("{},{},{},{},{},{}\n", name, c.name, c.passed ? "true" : "false", csv_number(c.value),
                              csv_number(c.tolerance), csv_field(c.claim));
        }
      }
    }
    file.flush();
  }
  if (!file) {
    err << "densbench: cannot write report '" << path << "'\n";
    return kExitIo;
  }
  out << "report: " << path << "\n";

  for (const auto& [name, list] : groups) {
    for (const auto& c : list) {
      if (!c.passed) err << fmt::format("FAIL {}: {} ({})\n", c.name, c.claim, c.detail);
    }
  }
  return passed ? kExitPass : kExitCheckFailed;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(args), out, err);
  } catch (const UsageError& e) {
    err << "densbench: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "densbench: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "densbench: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace densbench::cli
