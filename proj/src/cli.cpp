#include "fdheat/cli.hpp"

#include "fdheat/analytic.hpp"
#include "fdheat/fdm.hpp"
#include "fdheat/metrics.hpp"
#include "fdheat/optim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fdheat::cli {

using json = nlohmann::ordered_json;

const double kTable1Printed[5][4] = {
    {0.7675914, 0.8120374, 0.7897314, 0.7786397},
    {0.3722243, 0.3942740, 0.3832039, 0.3777023},
    {0.1832549, 0.1942324, 0.1887200, 0.1859813},
    {0.09091783, 0.09639423, 0.09364392, 0.09227771},
    {0.04528211, 0.04801716, 0.04664351, 0.04596121},
};

namespace {

constexpr double kTableTolerance = 1e-5;

double parse_double(const std::string& key, std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InvalidArgument("invalid number for " + key + ": '" + std::string(s) + "'");
  return v;
}

int parse_int(const std::string& key, std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("invalid integer for " + key + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

double* double_field(ProblemParams& p, const std::string& key) {
  static const std::map<std::string, double ProblemParams::*> fields{
      {"g", &ProblemParams::g},   {"q", &ProblemParams::q},   {"b", &ProblemParams::b},
      {"x0", &ProblemParams::x0}, {"y0", &ProblemParams::y0}, {"zd", &ProblemParams::z_d},
      {"m1", &ProblemParams::m1}, {"m2", &ProblemParams::m2}, {"m3", &ProblemParams::m3},
  };
  const auto it = fields.find(key);
  return it == fields.end() ? nullptr : &(p.*(it->second));
}

double json_number(const std::string& key, const json& v) {
  if (!v.is_number()) throw InvalidArgument(key + " must be a number");
  return v.get<double>();
}

int json_int(const std::string& key, const json& v) {
  if (!v.is_number_integer()) throw InvalidArgument(key + " must be an integer");
  return v.get<int>();
}

std::string json_string(const std::string& key, const json& v) {
  if (!v.is_string()) throw InvalidArgument(key + " must be a string");
  return v.get<std::string>();
}

// One setting from either source. Flag values arrive as JSON strings and are
// parsed with the same rules as their file counterparts.
void set_key(RunConfig& c, const std::string& key, const json& v) {
  const bool text = v.is_string();
  if (double* field = double_field(c.params, key)) {
    *field = text ? parse_double(key, v.get<std::string>()) : json_number(key, v);
  } else if (key == "alpha") {
    if (v.is_null())
      c.params.alpha.reset();
    else
      c.params.alpha = text ? parse_double(key, v.get<std::string>()) : json_number(key, v);
  } else if (key == "n") {
    if (v.is_null())
      c.n.reset();
    else
      c.n = text ? parse_int(key, v.get<std::string>()) : json_int(key, v);
  } else if (key == "n-list") {
    c.n_list.clear();
    if (text) {
      for (auto part : split_commas(v.get<std::string>())) c.n_list.push_back(parse_int(key, part));
    } else {
      if (!v.is_array()) throw InvalidArgument("n-list must be an array or a comma list");
      for (const auto& e : v) c.n_list.push_back(json_int(key, e));
    }
  } else if (key == "alpha-list") {
    c.alpha_list.clear();
    if (text) {
      for (auto part : split_commas(v.get<std::string>()))
        c.alpha_list.push_back(parse_double(key, part));
    } else {
      if (!v.is_array()) throw InvalidArgument("alpha-list must be an array or a comma list");
      for (const auto& e : v) c.alpha_list.push_back(json_number(key, e));
    }
  } else if (key == "bc") {
    c.bc = parse_boundary(json_string(key, v));
  } else if (key == "scheme") {
    c.scheme = parse_scheme(json_string(key, v));
  } else if (key == "problem") {
    if (v.is_null())
      c.problem.reset();
    else
      c.problem = parse_problem(json_string(key, v));
  } else if (key == "study") {
    c.study = json_string(key, v);
  } else if (key == "out") {
    if (v.is_null())
      c.out.reset();
    else
      c.out = json_string(key, v);
  } else if (key == "continuous") {
    if (!v.is_boolean()) throw InvalidArgument("continuous must be a boolean");
    c.continuous = v.get<bool>();
  } else {
    throw InvalidArgument("unknown config key '" + key + "'");
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

struct Flags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config;
  CLI::Option* config_opt = nullptr;
  bool continuous = false;
  CLI::Option* continuous_opt = nullptr;
};

void add_flags(CLI::App& cmd, Flags& f) {
  static const std::vector<std::pair<std::string, std::string>> keys{
      {"bc", "dirichlet | robin"},
      {"scheme", "classical | improved"},
      {"problem", "g | q | b"},
      {"n", "subinterval count"},
      {"n-list", "comma-separated subinterval counts"},
      {"alpha", "convective coefficient"},
      {"alpha-list", "comma-separated convective coefficients"},
      {"g", "source"},
      {"q", "flux on the right edge"},
      {"b", "ambient temperature"},
      {"x0", "domain length"},
      {"y0", "domain height"},
      {"zd", "target temperature"},
      {"m1", "weight of the source control"},
      {"m2", "weight of the flux control"},
      {"m3", "weight of the ambient control"},
      {"study", "state | derivative"},
      {"out", "output CSV path"},
  };
  for (const auto& [key, help] : keys)
    f.options[key] = cmd.add_option("--" + key, f.values[key], help);
  f.config_opt = cmd.add_option("--config", f.config, "JSON config file");
  f.continuous_opt = cmd.add_flag("--continuous", f.continuous, "use the continuous optimum");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig effective_config(const Flags& f) {
  RunConfig c;
  if (f.config_opt->count() > 0) c = apply_json(c, read_file(f.config));
  for (const auto& [key, opt] : f.options)
    if (opt->count() > 0) set_key(c, key, json(f.values.at(key)));
  if (f.continuous_opt->count() > 0) c.continuous = f.continuous;
  return c;
}

void emit(const RunConfig& c, const std::string& csv, std::ostream& out) {
  if (c.out) {
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open output file '" + *c.out + "'");
    file << csv;
    if (!file) throw ComputationError("failed writing '" + *c.out + "'");
  } else {
    out << csv;
  }
}

int require_n(const RunConfig& c) {
  if (!c.n) throw InvalidArgument("--n is required");
  return *c.n;
}

std::string header(const RunConfig& c) { return "# config " + to_json(c) + "\n"; }

std::string cmd_solve(const RunConfig& c) {
  validate(c.params, c.bc);
  const Grid grid(c.params.x0, require_n(c));
  const auto sol = fdm::solve(c.params, grid, c.scheme, c.bc);
  const auto u = analytic::continuous_state(c.params, c.bc);
  std::ostringstream s;
  s << header(c) << "i,x,u_h,u_exact,abs_err\n";
  for (int i = 1; i <= grid.n() + 1; ++i) {
    const double x = grid.x(i);
    const double uh = sol.values(i - 1);
    const double ue = u(x);
    s << i << ',' << num(x) << ',' << num(uh) << ',' << num(ue) << ',' << num(std::abs(uh - ue))
      << '\n';
  }
  return s.str();
}

metrics::ConstantId control_constant(ControlProblem p, BoundaryKind bc) {
  const bool r = bc == BoundaryKind::Robin;
  switch (p) {
    case ControlProblem::SourceG: return r ? metrics::ConstantId::C3Alpha : metrics::ConstantId::C3;
    case ControlProblem::FluxQ: return r ? metrics::ConstantId::C8Alpha : metrics::ConstantId::C8;
    case ControlProblem::AmbientB: return r ? metrics::ConstantId::C13Alpha : metrics::ConstantId::C13;
  }
  return metrics::ConstantId::C3;
}

std::string cmd_optimize(const RunConfig& c) {
  if (!c.problem) throw InvalidArgument("--problem is required");
  if (c.scheme != SchemeKind::Classical)
    throw InvalidArgument("optimize supports the classical scheme only");
  validate(c.params, c.bc);
  const auto cont = analytic::continuous_optimum(*c.problem, c.bc, c.params);
  double control = cont.control_star;
  double cost = cont.cost_star;
  double bound = 0.0;
  if (!c.continuous) {
    const Grid grid(c.params.x0, require_n(c));
    const auto opt = optim::discrete_optimum(*c.problem, c.bc, c.params, grid);
    control = opt.control_star;
    cost = opt.cost_star;
    bound = metrics::lemma_constant(control_constant(*c.problem, c.bc), c.params) * grid.h();
  }
  std::ostringstream s;
  s << header(c) << "control_star,cost_star,continuous_control_star,gap,lemma_constant_times_h\n";
  s << num(control) << ',' << num(cost) << ',' << num(cont.control_star) << ','
    << num(control - cont.control_star) << ',' << num(bound) << '\n';
  return s.str();
}

std::string cmd_converge(const RunConfig& c) {
  if (c.n_list.size() < 3) throw InvalidArgument("--n-list needs at least 3 entries");
  for (std::size_t k = 1; k < c.n_list.size(); ++k)
    if (c.n_list[k] <= c.n_list[k - 1]) throw InvalidArgument("--n-list must be increasing");
  metrics::ErrorKind kind;
  if (c.study == "state")
    kind = metrics::ErrorKind::State;
  else if (c.study == "derivative")
    kind = metrics::ErrorKind::Derivative;
  else
    throw InvalidArgument("--study must be state or derivative");

  const auto recs = metrics::state_error_study(c.params, c.scheme, c.bc, c.n_list, kind);
  const int power = kind == metrics::ErrorKind::State && c.scheme == SchemeKind::Improved ? 2 : 1;

  std::ostringstream s;
  s << header(c) << "n,h,err,bound,ratio,pair_order\n";
  std::vector<metrics::ErrorRecord> fitted;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const auto& r = recs[k];
    s << c.n_list[k] << ',' << num(r.h) << ',' << num(r.err) << ',' << num(r.bound) << ','
      << num(r.err / std::pow(r.h, power)) << ',';
    if (k > 0 && r.err > 0.0 && recs[k - 1].err > 0.0)
      s << num(std::log(recs[k - 1].err / r.err) / std::log(recs[k - 1].h / r.h));
    s << '\n';
    if (r.err > 0.0) fitted.push_back(r);
  }
  if (fitted.size() >= 3) {
    const auto fit = metrics::fit_order(fitted);
    s << "# order " << num(fit.slope) << " intercept " << num(fit.intercept) << " residual "
      << num(fit.residual) << '\n';
  } else {
    s << "# order undefined: fewer than 3 nonzero errors\n";
  }
  return s.str();
}

std::string cmd_sweep(const RunConfig& c) {
  if (c.n_list.empty()) throw InvalidArgument("--n-list is required");
  if (c.alpha_list.empty()) throw InvalidArgument("--alpha-list is required");
  metrics::SweepTarget target = metrics::SweepTarget::State;
  if (c.problem) {
    switch (*c.problem) {
      case ControlProblem::SourceG: target = metrics::SweepTarget::ControlG; break;
      case ControlProblem::FluxQ: target = metrics::SweepTarget::ControlQ; break;
      case ControlProblem::AmbientB: target = metrics::SweepTarget::ControlB; break;
    }
  }
  const auto rows = metrics::double_limit_sweep(c.params, c.n_list, c.alpha_list, target);
  std::ostringstream s;
  s << header(c) << "n,h,alpha,err_state,err_limit" << (c.problem ? ",err_control" : "") << '\n';
  for (const auto& r : rows) {
    s << r.n << ',' << num(r.h) << ',' << num(r.alpha) << ',' << num(r.err_state) << ','
      << num(r.err_limit);
    if (r.err_control) s << ',' << num(*r.err_control);
    s << '\n';
  }
  return s.str();
}

int cmd_table1(const RunConfig& c, std::ostream& out, std::ostream& err) {
  ProblemParams p;  // x0 = y0 = 1, g = 10, q = 12, b = 30
  const std::vector<int> ns{4, 8, 16, 32, 64};
  const double alphas[3] = {50.0, 100.0, 200.0};

  double table[5][4];
  const auto dir = metrics::state_error_study(p, SchemeKind::Classical, BoundaryKind::Dirichlet, ns);
  for (int r = 0; r < 5; ++r) table[r][0] = dir[r].err;
  for (int a = 0; a < 3; ++a) {
    p.alpha = alphas[a];
    const auto rob = metrics::state_error_study(p, SchemeKind::Classical, BoundaryKind::Robin, ns);
    for (int r = 0; r < 5; ++r) table[r][a + 1] = rob[r].err;
  }

  std::ostringstream s;
  s << "# table1 x0=1 y0=1 g=10 q=12 b=30; classical scheme in every column\n";
  s << "h,dirichlet,alpha_50,alpha_100,alpha_200\n";
  std::ostringstream report;
  for (int r = 0; r < 5; ++r) {
    s << num(1.0 / ns[r]);
    for (int k = 0; k < 4; ++k) {
      s << ',' << num(table[r][k]);
      const double ref = kTable1Printed[r][k];
      const double rel = std::abs(table[r][k] - ref) / std::abs(ref);
      if (!(rel <= kTableTolerance)) {
        static const char* cols[4] = {"dirichlet", "alpha_50", "alpha_100", "alpha_200"};
        report << "mismatch h=" << num(1.0 / ns[r]) << ' ' << cols[k] << ": computed "
               << num(table[r][k]) << " reference " << num(ref) << " rel " << num(rel) << '\n';
      }
    }
    s << '\n';
  }
  emit(c, s.str(), out);
  if (!report.str().empty()) {
    err << report.str();
    return 1;
  }
  return 0;
}

}  // namespace

std::string to_json(const RunConfig& c) {
  json j;
  j["bc"] = std::string(to_string(c.bc));
  j["scheme"] = std::string(to_string(c.scheme));
  j["problem"] = c.problem ? json(std::string(to_string(*c.problem))) : json(nullptr);
  j["n"] = c.n ? json(*c.n) : json(nullptr);
  j["n-list"] = c.n_list;
  j["alpha"] = c.params.alpha ? json(*c.params.alpha) : json(nullptr);
  j["alpha-list"] = c.alpha_list;
  j["g"] = c.params.g;
  j["q"] = c.params.q;
  j["b"] = c.params.b;
  j["x0"] = c.params.x0;
  j["y0"] = c.params.y0;
  j["zd"] = c.params.z_d;
  j["m1"] = c.params.m1;
  j["m2"] = c.params.m2;
  j["m3"] = c.params.m3;
  j["study"] = c.study;
  j["out"] = c.out ? json(*c.out) : json(nullptr);
  j["continuous"] = c.continuous;
  return j.dump();
}

RunConfig apply_json(RunConfig base, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) set_key(base, key, value);
  return base;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-difference heat conduction and optimal control toolkit", "fdheat"};
  app.require_subcommand(1);

  struct Command {
    CLI::App* app;
    Flags flags;
  };
  std::map<std::string, Command> commands;
  const std::vector<std::pair<std::string, std::string>> specs{
      {"solve", "solve the discrete system on one grid"},
      {"optimize", "discrete or continuous optimal control"},
      {"converge", "state or derivative error study over --n-list"},
      {"sweep", "(n, alpha) double-limit sweep"},
  };
  for (const auto& [name, help] : specs) {
    auto& cmd = commands[name];
    cmd.app = app.add_subcommand(name, help);
    add_flags(*cmd.app, cmd.flags);
  }
  std::string table_out;
  auto* table = app.add_subcommand("table1", "reproduce the reference L2 error table");
  auto* table_out_opt = table->add_option("--out", table_out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (table->parsed()) {
      RunConfig c;
      if (table_out_opt->count() > 0) c.out = table_out;
      return cmd_table1(c, out, err);
    }
    for (auto& [name, cmd] : commands) {
      if (!cmd.app->parsed()) continue;
      const RunConfig c = effective_config(cmd.flags);
      std::string csv;
      if (name == "solve") csv = cmd_solve(c);
      if (name == "optimize") csv = cmd_optimize(c);
      if (name == "converge") csv = cmd_converge(c);
      if (name == "sweep") csv = cmd_sweep(c);
      emit(c, csv, out);
      return 0;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace fdheat::cli
