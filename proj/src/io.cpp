#include "mmpw/io.hpp"

#include <sstream>

#include "mmpw/errors.hpp"

namespace mmpw::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long integer_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string string_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

json vectors_to_json(const std::vector<QVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<QVector> vectors_from_json(const json& j, std::size_t dim, const std::string& path) {
  std::vector<QVector> out;
  array_at(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    QVector v = vector_from_json(j[i], p);
    if (v.size() != dim) fail(p, "expected dimension " + std::to_string(dim) + ", got " + std::to_string(v.size()));
    out.push_back(std::move(v));
  }
  return out;
}

json matrix_to_json(const QMatrix& m) { return vectors_to_json(m.row_vectors()); }

QMatrix matrix_from_json(const json& j, const std::string& path) {
  array_at(j, path);
  if (j.empty()) fail(path, "matrix has no rows");
  const QVector first = vector_from_json(j[0], path + "/0");
  return QMatrix(vectors_from_json(j, first.size(), path), first.size());
}

json nef_to_json(const PolyCone& c) {
  json out;
  json ineqs = json::array();
  for (const auto& f : c.facets()) ineqs.push_back(to_json(f.normal));
  out["ineqs"] = ineqs;
  if (!c.equations().empty()) out["equations"] = vectors_to_json(c.equations());
  return out;
}

}  // namespace

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json to_json(const Rat& x) { return format_rat(x); }

json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const PolyCone& c) {
  json out;
  out["ambient_dim"] = c.ambient_dim();
  out["dim"] = c.dim();
  out["rays"] = vectors_to_json(c.rays());
  out["lineality"] = vectors_to_json(c.lineality());
  json facets = json::array();
  for (const auto& f : c.facets()) facets.push_back(to_json(f.normal));
  out["facets"] = facets;
  out["equations"] = vectors_to_json(c.equations());
  return out;
}

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long>())));
  if (!j.is_string()) fail(path, "expected a rational as \"p/q\" string or integer");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

QVector vector_from_json(const json& j, const std::string& path) {
  array_at(j, path);
  QVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from_json(j[i], path + "/" + std::to_string(i));
  return v;
}

PolyCone cone_from_json(const json& j, std::size_t ambient_dim, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a cone object");
  if (j.contains("ambient_dim") && integer_from_json(j["ambient_dim"], path + "/ambient_dim") !=
                                       static_cast<long>(ambient_dim)) {
    fail(path + "/ambient_dim", "expected " + std::to_string(ambient_dim));
  }
  if (j.contains("rays")) {
    const auto rays = vectors_from_json(j["rays"], ambient_dim, path + "/rays");
    std::vector<QVector> lin;
    if (j.contains("lineality")) lin = vectors_from_json(j["lineality"], ambient_dim, path + "/lineality");
    return PolyCone::from_rays(ambient_dim, rays, lin);
  }
  const char* key = j.contains("ineqs") ? "ineqs" : j.contains("facets") ? "facets" : nullptr;
  if (!key) fail(path, "cone needs \"rays\" or \"ineqs\"");
  const auto ineqs = vectors_from_json(j[key], ambient_dim, path + "/" + key);
  std::vector<QVector> eqs;
  if (j.contains("equations")) eqs = vectors_from_json(j["equations"], ambient_dim, path + "/equations");
  return PolyCone::from_inequalities(ambient_dim, ineqs, eqs);
}

json to_json(const RingDatum& d) {
  json out;
  out["r"] = d.r;
  out["labels"] = d.labels;
  json vals = json::array();
  for (const auto& v : d.valuations) vals.push_back(v.name);
  out["valuations"] = vals;
  json gens = json::array();
  for (const auto& g : d.generators) {
    json mults = json::object();
    for (const auto& [name, value] : g.mults) mults[name] = to_json(value);
    gens.push_back({{"deg", g.multidegree}, {"mults", mults}});
  }
  out["generators"] = gens;
  if (d.numerical) out["numerical_map"] = matrix_to_json(d.numerical->matrix);
  if (d.nef) out["nef"] = nef_to_json(d.nef->cone);
  if (!d.pushforwards.empty()) {
    json pf = json::array();
    for (const auto& p : d.pushforwards) {
      pf.push_back({{"model_id", p.model_id}, {"map", matrix_to_json(p.map)}, {"nef", nef_to_json(p.nef.cone)}});
    }
    out["pushforwards"] = pf;
  }
  if (d.segment_h) out["segment"] = {{"h", to_json(*d.segment_h)}};
  return out;
}

RingDatum datum_from_json(const json& j) {
  if (!j.is_object()) fail("", "ring datum must be a JSON object");
  RingDatum d;
  d.r = static_cast<int>(integer_from_json(member(j, "r", ""), "/r"));
  if (d.r < 1) fail("/r", "r must be at least 1");
  if (j.contains("labels")) {
    array_at(j["labels"], "/labels");
    for (std::size_t i = 0; i < j["labels"].size(); ++i) {
      d.labels.push_back(string_from_json(j["labels"][i], "/labels/" + std::to_string(i)));
    }
  }
  if (j.contains("valuations")) {
    array_at(j["valuations"], "/valuations");
    for (std::size_t i = 0; i < j["valuations"].size(); ++i) {
      d.valuations.push_back({string_from_json(j["valuations"][i], "/valuations/" + std::to_string(i))});
    }
  }
  const json& gens = array_at(member(j, "generators", ""), "/generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "/generators/" + std::to_string(i);
    GeneratorDatum g;
    const json& deg = array_at(member(gens[i], "deg", p), p + "/deg");
    for (std::size_t c = 0; c < deg.size(); ++c) {
      g.multidegree.push_back(integer_from_json(deg[c], p + "/deg/" + std::to_string(c)));
    }
    if (gens[i].contains("mults")) {
      const json& mults = gens[i]["mults"];
      if (!mults.is_object()) fail(p + "/mults", "expected an object");
      for (auto it = mults.begin(); it != mults.end(); ++it) {
        g.mults[it.key()] = rat_from_json(it.value(), p + "/mults/" + it.key());
      }
    }
    d.generators.push_back(std::move(g));
  }
  if (j.contains("numerical_map")) d.numerical = NumericalMap{matrix_from_json(j["numerical_map"], "/numerical_map")};
  if (j.contains("nef")) {
    if (!d.numerical) fail("/nef", "nef cone needs a numerical_map");
    d.nef = NefConeDatum{cone_from_json(j["nef"], d.numerical->target_dim(), "/nef")};
  }
  if (j.contains("pushforwards")) {
    const json& pf = array_at(j["pushforwards"], "/pushforwards");
    for (std::size_t i = 0; i < pf.size(); ++i) {
      const std::string p = "/pushforwards/" + std::to_string(i);
      PushforwardDatum pd;
      pd.model_id = string_from_json(member(pf[i], "model_id", p), p + "/model_id");
      pd.map = matrix_from_json(member(pf[i], "map", p), p + "/map");
      pd.nef = NefConeDatum{cone_from_json(member(pf[i], "nef", p), pd.map.rows(), p + "/nef")};
      d.pushforwards.push_back(std::move(pd));
    }
  }
  if (j.contains("segment")) d.segment_h = vector_from_json(member(j["segment"], "h", "/segment"), "/segment/h");
  return d;
}

json to_json(const Fan& fan) {
  json out;
  out["support"] = to_json(fan.support);
  json cells = json::array();
  for (const auto& c : fan.cells) cells.push_back(to_json(c));
  out["cells"] = cells;
  return out;
}

json to_json(const ChamberDecomposition& dec) {
  json out = to_json(dec.fan);
  json forms = json::object();
  for (const auto& [name, fs] : dec.functionals) forms[name] = vectors_to_json(fs);
  out["functionals"] = forms;
  return out;
}

json to_json(const LinearityFan& lf) {
  json out = to_json(lf.fan);
  out["functionals"] = {{lf.valuation.name, vectors_to_json(lf.functionals)}};
  return out;
}

ChamberDecomposition decomposition_from_json(const json& j) {
  const json& sj = member(j, "support", "");
  if (!sj.is_object()) fail("/support", "expected a cone object");
  const std::size_t n = static_cast<std::size_t>(integer_from_json(member(sj, "ambient_dim", "/support"),
                                                                   "/support/ambient_dim"));
  ChamberDecomposition dec;
  PolyCone support = cone_from_json(sj, n, "/support");
  std::vector<PolyCone> cells;
  const json& cj = array_at(member(j, "cells", ""), "/cells");
  for (std::size_t i = 0; i < cj.size(); ++i) cells.push_back(cone_from_json(cj[i], n, "/cells/" + std::to_string(i)));
  const std::size_t count = cells.size();
  dec.fan = make_fan(std::move(support), cells);
  if (dec.fan.cells != cells || dec.fan.cells.size() != count) {
    fail("/cells", "cells are not full-dimensional, distinct and in canonical order");
  }
  if (j.contains("functionals")) {
    const json& fj = j["functionals"];
    if (!fj.is_object()) fail("/functionals", "expected an object");
    for (auto it = fj.begin(); it != fj.end(); ++it) {
      auto forms = vectors_from_json(it.value(), n, "/functionals/" + it.key());
      if (forms.size() != count) fail("/functionals/" + it.key(), "expected one functional per cell");
      dec.functionals[it.key()] = std::move(forms);
    }
  }
  return dec;
}

json to_json(const ChamberWalk& walk) {
  json out;
  out["kappa"] = to_json(walk.segment.kappa);
  out["h"] = to_json(walk.segment.h);
  json chambers = json::array();
  for (std::size_t i = 0; i < walk.size(); ++i) {
    chambers.push_back({{"position", i + 1},
                        {"cell", walk.chambers[i]},
                        {"rays", vectors_to_json(walk.cones[i].rays())},
                        {"interval", {to_json(walk.intervals[i].first), to_json(walk.intervals[i].second)}}});
  }
  out["chambers"] = chambers;
  return out;
}

json to_json(const MmpTrace& trace) {
  json out;
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"from_chamber", s.from_chamber},
                     {"to_chamber", s.to_chamber},
                     {"t", to_json(s.t)},
                     {"wall_point", to_json(s.wall_point)},
                     {"interior_pick", to_json(s.interior_pick)},
                     {"model_id", s.model_id},
                     {"kind", to_string(s.kind)}});
  }
  out["steps"] = steps;
  out["final"] = {{"chamber", trace.final.chamber},
                  {"cell", trace.final.cell},
                  {"divisor", to_json(trace.final.divisor)},
                  {"model_id", trace.final.model_id}};
  if (trace.nef_mode) {
    out["nef"] = {{"indices", trace.nef_indices},
                  {"mode", *trace.nef_mode == NefMode::Full ? "full" : "first-step-only"}};
  }
  return out;
}

MmpTrace trace_from_json(const json& j) {
  MmpTrace t;
  const json& steps = array_at(member(j, "steps", ""), "/steps");
  auto index = [](const json& v, const std::string& p) {
    const long x = integer_from_json(v, p);
    if (x < 0) fail(p, "expected a nonnegative integer");
    return static_cast<std::size_t>(x);
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = "/steps/" + std::to_string(i);
    const json& s = steps[i];
    TraceStep st;
    st.from_chamber = index(member(s, "from_chamber", p), p + "/from_chamber");
    st.to_chamber = index(member(s, "to_chamber", p), p + "/to_chamber");
    st.t = rat_from_json(member(s, "t", p), p + "/t");
    st.wall_point = vector_from_json(member(s, "wall_point", p), p + "/wall_point");
    st.interior_pick = vector_from_json(member(s, "interior_pick", p), p + "/interior_pick");
    st.model_id = string_from_json(member(s, "model_id", p), p + "/model_id");
    try {
      st.kind = step_kind_from_string(string_from_json(member(s, "kind", p), p + "/kind"));
    } catch (const std::invalid_argument& e) {
      fail(p + "/kind", e.what());
    }
    t.steps.push_back(std::move(st));
  }
  const json& f = member(j, "final", "");
  t.final.chamber = index(member(f, "chamber", "/final"), "/final/chamber");
  t.final.cell = index(member(f, "cell", "/final"), "/final/cell");
  t.final.divisor = vector_from_json(member(f, "divisor", "/final"), "/final/divisor");
  t.final.model_id = string_from_json(member(f, "model_id", "/final"), "/final/model_id");
  if (j.contains("nef")) {
    const json& n = j["nef"];
    const json& idx = array_at(member(n, "indices", "/nef"), "/nef/indices");
    for (std::size_t i = 0; i < idx.size(); ++i) t.nef_indices.push_back(index(idx[i], "/nef/indices/" + std::to_string(i)));
    const std::string mode = string_from_json(member(n, "mode", "/nef"), "/nef/mode");
    if (mode == "full") {
      t.nef_mode = NefMode::Full;
    } else if (mode == "first-step-only") {
      t.nef_mode = NefMode::FirstStepOnly;
    } else {
      fail("/nef/mode", "unknown mode '" + mode + "'");
    }
  }
  return t;
}

json to_json(const VeroneseResult& v) {
  return {{"d", v.d}, {"verified_up_to", v.verified_up_to},
          {"certified", v.certified ? "proved" : "bounded verification"}};
}

json to_json(const GridReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry = {{"cell", e.cell}, {"valuation", e.valuation}, {"generators", vectors_to_json(e.generators)}};
    if (e.skipped) {
      entry["skipped"] = *e.skipped;
    } else {
      json pts = json::array();
      for (const auto& p : e.points) {
        pts.push_back({{"p", p.p},
                       {"point", to_json(p.point)},
                       {"value", to_json(p.value)},
                       {"expected", to_json(p.expected)},
                       {"additive", p.additive}});
      }
      entry["points"] = pts;
    }
    entries.push_back(entry);
  }
  return {{"entries", entries},
          {"tested", report.tested()},
          {"failures", report.failures()},
          {"skipped", report.skipped()},
          {"passed", report.passed()}};
}

json to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const auto& i : report.issues) {
    issues.push_back({{"severity", i.severity == Severity::Error ? "error" : "warning"},
                      {"code", i.code},
                      {"message", i.message}});
  }
  return {{"ok", report.ok()}, {"issues", issues}};
}

json to_json(const OValue& v) { return {{"value", to_json(v.value)}, {"witness", to_json(QVector(v.witness))}}; }

std::string render_text(const Fan& fan) {
  std::ostringstream os;
  os << "support: rays";
  for (const auto& r : fan.support.rays()) os << ' ' << format_vector(r);
  os << "\n" << fan.cells.size() << " cell(s)\n";
  for (std::size_t i = 0; i < fan.cells.size(); ++i) {
    os << "  cell " << i << ": rays";
    for (const auto& r : fan.cells[i].rays()) os << ' ' << format_vector(r);
    os << "\n";
  }
  return os.str();
}

std::string render_text(const ChamberDecomposition& dec) {
  std::ostringstream os;
  os << render_text(dec.fan);
  for (const auto& [name, forms] : dec.functionals) {
    os << "o_" << name << ":";
    for (std::size_t i = 0; i < forms.size(); ++i) os << ' ' << i << "->" << format_vector(forms[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace mmpw::io
