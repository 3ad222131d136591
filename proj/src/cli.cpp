#include "mmpw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mmpw/checks.hpp"
#include "mmpw/errors.hpp"
#include "mmpw/io.hpp"
#include "mmpw/oracle.hpp"

namespace mmpw::cli {

namespace {

using io::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::string command;
  std::string input;
  std::string output;
  std::string format = "json";
  std::string example;
  std::optional<std::uint64_t> seed;
  long k_max = 12;
  int grid_depth = 3;
  std::optional<std::uint64_t> budget;
  bool refine = true;
  std::string fan_path;
  std::string h;
  std::vector<std::string> points;
  std::string valuation;
  std::string degrees;
  int max_m = 6;
  InstanceSpec spec;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    parts.push_back(item);
  }
  return parts;
}

QVector parse_point(const std::string& text, const std::string& flag) {
  std::vector<Rat> coords;
  for (const auto& p : split(text, ',')) {
    try {
      coords.push_back(parse_rat(p));
    } catch (const ParseError& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  if (coords.empty()) throw UsageError(flag + ": empty vector");
  return QVector(std::move(coords));
}

std::string read_all(std::istream& is) { return {std::istreambuf_iterator<char>(is), {}}; }

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open input file '" + path + "'");
  return read_all(f);
}

std::uint64_t effective_budget(const Config& cfg, std::uint64_t fallback) {
  if (cfg.budget) return *cfg.budget;
  if (const char* env = std::getenv("MMPW_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("MMPW_BUDGET must be a positive integer");
  }
  return fallback;
}

RingDatum load_datum(const Config& cfg, std::istream& in, std::ostream& err) {
  RingDatum d;
  if (!cfg.example.empty()) {
    const auto& catalog = builtin_examples();
    auto it = catalog.find(cfg.example);
    if (it == catalog.end()) throw UsageError("unknown example '" + cfg.example + "'");
    d = it->second;
  } else if (!cfg.input.empty()) {
    d = io::datum_from_json(io::parse_document(read_input(cfg.input, in)));
  } else {
    throw UsageError("no input: pass --input FILE, --input - or --example NAME");
  }
  const ValidationReport report = validate(d);
  for (const auto& issue : report.issues) {
    err << (issue.severity == Severity::Error ? "error" : "warning") << " [" << issue.code << "]: " << issue.message
        << "\n";
  }
  if (!report.ok()) throw ValidationError("ring datum failed validation");
  return d;
}

void emit(const Config& cfg, std::ostream& out, const json& doc, const std::string& text) {
  const std::string& body = cfg.format == "text" ? text : io::dump(doc);
  if (cfg.output.empty() || cfg.output == "-") {
    out << body;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f || !(f << body)) throw UsageError("cannot write output file '" + cfg.output + "'");
}

Budgets make_budgets(const Config& cfg) {
  Budgets b;
  b.enumeration_nodes = effective_budget(cfg, b.enumeration_nodes);
  return b;
}

int cmd_decompose(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const RingDatum d = load_datum(cfg, in, err);
  const ChamberDecomposition dec = chamber_decomposition(d, cfg.refine);
  emit(cfg, out, io::to_json(dec), io::render_text(dec));
  return kOk;
}

int cmd_walk(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const RingDatum d = load_datum(cfg, in, err);
  QVector h;
  if (!cfg.h.empty()) {
    h = parse_point(cfg.h, "--ample");
  } else if (d.segment_h) {
    h = *d.segment_h;
  } else {
    throw ValidationError("walk: no segment; pass --ample or add \"segment\": {\"h\": [...]} to the datum");
  }
  const ScalingSegment seg = make_segment(d, h);
  Fan fan;
  if (!cfg.fan_path.empty()) {
    fan = io::fan_from_json(io::parse_document(read_input(cfg.fan_path, in)));
  } else {
    fan = chamber_fan(d, cfg.refine);
  }
  const ChamberWalk walk = order_chambers(fan, seg);
  std::optional<NefClassification> cls;
  if (d.numerical && d.nef) cls = classify_nef(walk, d);
  const MmpTrace trace = emit_trace(walk, cls);
  json doc = io::to_json(trace);
  doc["walk"] = io::to_json(walk);
  emit(cfg, out, doc, render_text(trace));
  return kOk;
}

int cmd_veronese(const Config& cfg, std::istream& in, std::ostream& out, std::ostream&) {
  std::vector<long> degrees;
  int max_m = cfg.max_m;
  if (!cfg.degrees.empty()) {
    for (const auto& p : split(cfg.degrees, ',')) {
      try {
        std::size_t used = 0;
        degrees.push_back(std::stol(p, &used));
        if (used != p.size()) throw std::invalid_argument(p);
      } catch (const std::exception&) {
        throw UsageError("--degrees: '" + p + "' is not an integer");
      }
    }
  } else if (!cfg.input.empty()) {
    const json doc = io::parse_document(read_input(cfg.input, in));
    if (!doc.is_object() || !doc.contains("degrees") || !doc["degrees"].is_array()) {
      throw ParseError("at /: expected {\"degrees\": [int], \"max_m\": int}");
    }
    for (std::size_t i = 0; i < doc["degrees"].size(); ++i) {
      if (!doc["degrees"][i].is_number_integer()) throw ParseError("at /degrees/" + std::to_string(i) + ": expected an integer");
      degrees.push_back(doc["degrees"][i].get<long>());
    }
    if (doc.contains("max_m")) {
      if (!doc["max_m"].is_number_integer()) throw ParseError("at /max_m: expected an integer");
      max_m = doc["max_m"].get<int>();
    }
  } else {
    throw UsageError("veronese: pass --degrees or --input");
  }
  VeroneseOptions opts;
  opts.node_budget = effective_budget(cfg, opts.node_budget);
  VeroneseResult res;
  try {
    res = veronese_degree(degrees, max_m, opts);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  json doc = io::to_json(res);
  doc["degrees"] = degrees;
  doc["max_m"] = max_m;
  std::ostringstream text;
  text << "veronese degree d = " << res.d << " (bounded verification for m <= " << res.verified_up_to << ")\n";
  emit(cfg, out, doc, text.str());
  return kOk;
}

int cmd_check(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const RingDatum d = load_datum(cfg, in, err);
  const ChamberDecomposition dec = chamber_decomposition(d, cfg.refine);
  CheckOptions opts;
  opts.seed = cfg.seed.value_or(1);
  opts.grid_depth = cfg.grid_depth;
  opts.grid.budgets = make_budgets(cfg);
  const CheckSuite suite = run_checks(d, dec, opts);

  json checks = json::array();
  std::ostringstream text;
  for (const auto& r : suite.results) {
    checks.push_back({{"name", r.name},
                      {"tested", r.tested},
                      {"failures", r.failures},
                      {"passed", r.passed()},
                      {"messages", r.messages}});
    text << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.tested << " tested, " << r.failures
         << " failed)\n";
    for (const auto& m : r.messages) text << "  " << m << "\n";
  }
  if (suite.grid.skipped() > 0) text << "grid: " << suite.grid.skipped() << " cell(s) skipped\n";
  const json doc = {{"passed", suite.passed()}, {"checks", checks}, {"grid", io::to_json(suite.grid)},
                    {"cells", dec.fan.cells.size()}};
  emit(cfg, out, doc, text.str());
  return suite.passed() ? kOk : kCheckFailure;
}

int cmd_oracle(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const RingDatum d = load_datum(cfg, in, err);
  if (cfg.k_max < 1) throw UsageError("--k-max must be positive");
  std::vector<QVector> points;
  for (const auto& p : cfg.points) points.push_back(parse_point(p, "--point"));
  if (points.empty()) {
    Rng rng(cfg.seed.value_or(1));
    const auto degrees = d.degrees();
    for (int i = 0; i < 5; ++i) {
      QVector x(d.grading_dim());
      while (x.is_zero())
        for (const auto& e : degrees) x += Rat(static_cast<long>(rng() % 3)) * e;
      points.push_back(x);
    }
  }
  std::vector<std::string> names;
  if (!cfg.valuation.empty()) {
    if (!d.has_valuation(cfg.valuation)) throw UsageError("unknown valuation '" + cfg.valuation + "'");
    names.push_back(cfg.valuation);
  } else {
    for (const auto& v : d.valuations) names.push_back(v.name);
  }

  const std::uint64_t budget = effective_budget(cfg, 5'000'000);
  bool consistent = true;
  json rows = json::array();
  std::ostringstream text;
  for (const auto& x : points) {
    if (x.size() != d.grading_dim()) throw UsageError("--point " + format_vector(x) + " has the wrong dimension");
    for (const auto& name : names) {
      const OValue lp = o_value(d, name, x);
      std::vector<long> ks;
      for (long k = 1; k <= cfg.k_max; ++k)
        if ((Rat(k) * x).is_integral()) ks.push_back(k);
      const auto ip = o_value_oracle(d, name, x, ks, budget);
      json ipj = json::array();
      std::optional<long> equal_at;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        ipj.push_back({{"k", ks[i]}, {"value", ip[i] ? io::to_json(*ip[i]) : json(nullptr)}});
        if (ip[i] && *ip[i] < lp.value) consistent = false;
        if (ip[i] && *ip[i] == lp.value && !equal_at) equal_at = ks[i];
      }
      std::string summary = "o_" + name + format_vector(x) + ": LP " + format_rat(lp.value);
      if (equal_at) {
        summary += " = IP " + format_rat(lp.value) + " at k=" + std::to_string(*equal_at);
      } else {
        summary += " < IP for every k <= " + std::to_string(cfg.k_max) + " (not found)";
      }
      rows.push_back({{"point", io::to_json(x)},
                      {"valuation", name},
                      {"lp", io::to_json(lp)},
                      {"ip", ipj},
                      {"equal_at", equal_at ? json(*equal_at) : json(nullptr)},
                      {"summary", summary}});
      text << summary << "\n";
    }
  }
  emit(cfg, out, {{"consistent", consistent}, {"results", rows}}, text.str());
  return consistent ? kOk : kCheckFailure;
}

int cmd_example(const Config& cfg, std::ostream& out) {
  if (cfg.example.empty()) {
    json names = json::array();
    std::string text;
    for (const auto& [name, _] : builtin_examples()) {
      names.push_back(name);
      text += name + "\n";
    }
    emit(cfg, out, names, text);
    return kOk;
  }
  const auto& catalog = builtin_examples();
  auto it = catalog.find(cfg.example);
  if (it == catalog.end()) throw UsageError("unknown example '" + cfg.example + "'");
  const json doc = io::to_json(it->second);
  emit(cfg, out, doc, io::dump(doc));
  return kOk;
}

int cmd_random(const Config& cfg, std::ostream& out, std::ostream& err) {
  InstanceSpec spec = cfg.spec;
  spec.seed = cfg.seed.value_or(1);
  RandomInstance inst;
  try {
    inst = random_instance(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& w : inst.warnings) err << "warning: " << w << "\n";
  const json doc = io::to_json(inst.datum);
  emit(cfg, out, doc, io::dump(doc));
  return kOk;
}

void add_io_options(CLI::App* sub, Config& cfg) {
  sub->add_option("-i,--input", cfg.input, "input document, '-' for stdin");
  sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void add_datum_options(CLI::App* sub, Config& cfg) {
  add_io_options(sub, cfg);
  sub->add_option("--example", cfg.example, "use a builtin ring datum");
  sub->add_flag("--refine,!--no-refine", cfg.refine, "hyperplane refinement of the chamber fan (default on)");
  sub->add_option("--budget", cfg.budget, "enumeration node cap")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact chamber decomposition and MMP walk for divisorial rings", "mmpw"};
  app.require_subcommand(1, 1);

  auto* decompose = app.add_subcommand("decompose", "chamber fan with the linear form of every valuation per cell");
  add_datum_options(decompose, cfg);

  auto* walk = app.add_subcommand("walk", "order the chambers along the scaling segment and emit the MMP trace");
  add_datum_options(walk, cfg);
  walk->add_option("--ample", cfg.h, "ample end of the segment, e.g. 0,1 (default: the datum's segment)");
  walk->add_option("--fan", cfg.fan_path, "load the chamber fan from a document instead of recomputing it");

  auto* veronese = app.add_subcommand("veronese", "smallest Veronese degree of a graded semigroup");
  add_io_options(veronese, cfg);
  veronese->add_option("--degrees", cfg.degrees, "generator degrees, e.g. 2,3");
  veronese->add_option("--max-m", cfg.max_m, "verify splitting for m <= M")->check(CLI::PositiveNumber);
  veronese->add_option("--budget", cfg.budget, "splitting search node cap")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "linearity, convexity, partition and grid additivity checks");
  add_datum_options(check, cfg);
  check->add_option("--seed", cfg.seed, "sampling seed");
  check->add_option("--grid-depth", cfg.grid_depth, "max |p| of grid points")->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "compare the LP value with brute-force integer optima");
  add_datum_options(oracle, cfg);
  oracle->add_option("--point", cfg.points, "query point, e.g. 2,1 (repeatable; default: random points)");
  oracle->add_option("--valuation", cfg.valuation, "restrict to one valuation");
  oracle->add_option("--k-max", cfg.k_max, "largest multiple k")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", cfg.seed, "seed for the default points");

  auto* example = app.add_subcommand("example", "print a builtin ring datum, or list them");
  add_io_options(example, cfg);
  example->add_option("name", cfg.example, "example name");

  auto* random = app.add_subcommand("random", "print a seeded random ring datum");
  add_io_options(random, cfg);
  random->add_option("--seed", cfg.seed, "seed");
  random->add_option("--r", cfg.spec.r, "number of non-adjoint divisors")->check(CLI::PositiveNumber);
  random->add_option("--generators", cfg.spec.generator_count, "number of generators");
  random->add_option("--valuations", cfg.spec.valuation_count, "number of valuations")->check(CLI::NonNegativeNumber);
  random->add_option("--bound", cfg.spec.coordinate_bound, "coordinate bound")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(cfg, in, out, err);
    if (walk->parsed()) return cmd_walk(cfg, in, out, err);
    if (veronese->parsed()) return cmd_veronese(cfg, in, out, err);
    if (check->parsed()) return cmd_check(cfg, in, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, in, out, err);
    if (example->parsed()) return cmd_example(cfg, out);
    if (random->parsed()) return cmd_random(cfg, out, err);
  } catch (const NonGenericSegment& e) {
    err << "error: non-generic segment: " << e.what() << "\n"
        << "certificate: cell " << e.cell() << ", wall normal " << format_vector(e.wall()) << ", t = "
        << format_rat(e.t()) << "\n";
    return kNonGenericSegment;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotFound& e) {
    err << "error: not found: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kParseError;
}

}  // namespace mmpw::cli
