#include "mmpw/walk.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace mmpw {

QVector ScalingSegment::at(const Rat& t) const { return t * kappa + (Rat(1) - t) * h; }

ScalingSegment make_segment(const RingDatum& d, const QVector& h) {
  const std::size_t n = d.grading_dim();
  if (h.size() != n) throw DimensionError("segment: h has dimension " + std::to_string(h.size()));
  const PolyCone support = support_cone(d);
  ScalingSegment seg{QVector::unit(n, 0), h};
  if (!contains(support, seg.kappa)) throw OutsideSupport("segment: K_X+Delta is outside the support cone");
  if (h == seg.kappa) throw ValidationError("segment: h coincides with K_X+Delta");
  if (!contains(support, h)) throw OutsideSupport("segment: h = " + format_vector(h) + " is outside the support cone");
  if (!contains(support, seg.at(make_rat(1, 2)), true)) {
    throw OutsideSupport("segment: the open segment from h = " + format_vector(h) +
                         " misses the interior of the support cone");
  }
  return seg;
}

namespace {

const HalfSpace* tight_facet(const PolyCone& c, const QVector& x) {
  for (const auto& f : c.facets())
    if (dot(f.normal, x) == 0) return &f;
  return nullptr;
}

}  // namespace

ChamberWalk order_chambers(const Fan& fan, const ScalingSegment& seg) {
  if (!contains(fan.support, seg.kappa)) throw OutsideSupport("order_chambers: kappa is outside the support");
  if (!contains(fan.support, seg.h)) throw OutsideSupport("order_chambers: h is outside the support");

  std::vector<std::tuple<Rat, Rat, std::size_t>> hits;
  for (std::size_t ci = 0; ci < fan.cells.size(); ++ci) {
    const PolyCone& cell = fan.cells[ci];
    Rat lo = 0, hi = 1;
    bool empty = false;
    auto restrict = [&](const QVector& normal, bool equality) {
      // <normal, I(t)> = a + b t
      const Rat a = dot(normal, seg.h);
      const Rat b = dot(normal, seg.kappa) - a;
      if (b == 0) {
        empty = empty || a < 0 || (equality && a != 0);
        return;
      }
      const Rat root = -a / b;
      if (equality) {
        lo = std::max(lo, root);
        hi = std::min(hi, root);
      } else if (b > 0) {
        lo = std::max(lo, root);
      } else {
        hi = std::min(hi, root);
      }
    };
    for (const auto& e : cell.equations()) restrict(e, true);
    for (const auto& f : cell.facets()) restrict(f.normal, false);
    if (empty || lo > hi) continue;

    if (lo < hi) {
      const Rat mid = (lo + hi) / 2;
      if (!contains(cell, seg.at(mid), true)) {
        const HalfSpace* wall = tight_facet(cell, seg.at(mid));
        throw NonGenericSegment("segment runs inside a wall of cell " + std::to_string(ci), ci,
                                wall ? wall->normal : QVector(), mid);
      }
      hits.emplace_back(lo, hi, ci);
    } else if (lo < 1) {
      const HalfSpace* wall = tight_facet(cell, seg.at(lo));
      throw NonGenericSegment("segment meets cell " + std::to_string(ci) + " only at t=" + format_rat(lo) +
                                  ", not its interior",
                              ci, wall ? wall->normal : QVector(), lo);
    }
    // lo == hi == 1: kappa on the boundary of this cell only.
  }

  std::sort(hits.begin(), hits.end());
  ChamberWalk walk;
  walk.segment = seg;
  Rat expect = 0;
  for (const auto& [lo, hi, ci] : hits) {
    if (lo != expect) throw InconsistentInput("order_chambers: cells do not cover the segment at t=" + format_rat(expect));
    if (!walk.chambers.empty()) {
      walk.crossing_params.push_back(lo);
      walk.crossings.push_back(seg.at(lo));
    }
    walk.chambers.push_back(ci);
    walk.cones.push_back(fan.cells[ci]);
    walk.intervals.emplace_back(lo, hi);
    expect = hi;
  }
  if (expect != 1) throw InconsistentInput("order_chambers: cells do not cover the segment up to t=1");
  return walk;
}

namespace {

bool maps_into(const PolyCone& chamber, const QMatrix& map, const PolyCone& nef) {
  for (const auto& r : chamber.rays())
    if (!contains(nef, map.apply(r))) return false;
  for (const auto& l : chamber.lineality())
    if (!contains(nef, map.apply(l)) || !contains(nef, map.apply(-l))) return false;
  return true;
}

// Largest index (1-based) of the contiguous nef run starting at `start`;
// throws when the run is empty or nef chambers reappear after it.
std::size_t nef_run(const ChamberWalk& walk, std::size_t start, const QMatrix& map, const PolyCone& nef,
                    const std::string& model) {
  const std::size_t k = walk.size();
  std::vector<bool> flag(k + 1, false);
  for (std::size_t i = start; i <= k; ++i) flag[i] = maps_into(walk.cones[i - 1], map, nef);
  if (!flag[start]) {
    throw InconsistentInput("chamber " + std::to_string(start) + " does not map into the nef cone of " + model);
  }
  std::size_t end = start;
  while (end + 1 <= k && flag[end + 1]) ++end;
  for (std::size_t i = end + 1; i <= k; ++i) {
    if (flag[i]) {
      throw InconsistentInput("nef chambers of " + model + " are not contiguous along the walk (chamber " +
                              std::to_string(i) + ")");
    }
  }
  return end;
}

}  // namespace

NefClassification classify_nef(const ChamberWalk& walk, const RingDatum& d, std::optional<NefMode> mode) {
  if (!d.numerical) throw MissingNefData("classify_nef: no numerical map", 0);
  if (!d.nef) throw MissingNefData("classify_nef: no nef cone for X", 0);
  NefClassification cls;
  cls.mode = mode.value_or(d.pushforwards.empty() ? NefMode::FirstStepOnly : NefMode::Full);
  const std::size_t k = walk.size();

  std::size_t end = nef_run(walk, 1, d.numerical->matrix, d.nef->cone, "X");
  cls.indices.push_back(end);
  cls.block_models.emplace_back();
  if (cls.mode == NefMode::FirstStepOnly) return cls;

  for (std::size_t j = 0; end < k; ++j) {
    if (j >= d.pushforwards.size()) {
      throw MissingNefData("classify_nef: no pushforward data for the model at chamber " + std::to_string(end + 1),
                           end + 1);
    }
    const auto& p = d.pushforwards[j];
    end = nef_run(walk, end + 1, p.map, p.nef.cone, p.model_id);
    cls.indices.push_back(end);
    cls.block_models.push_back(p.model_id);
  }
  return cls;
}

MinimalModel minimal_model_chamber(const ChamberWalk& walk) {
  if (walk.size() == 0) throw std::invalid_argument("minimal_model_chamber: empty walk");
  MinimalModel m;
  m.position = walk.size();
  m.cell = walk.chambers.back();
  m.chamber = walk.cones.back();
  m.divisor = relative_interior_point(m.chamber);
  return m;
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::MmpStep:
      return "mmp-step";
    case StepKind::PossiblyIsomorphism:
      return "possibly-isomorphism";
    case StepKind::ClassificationUnknown:
      return "classification-unknown";
  }
  return "classification-unknown";
}

StepKind step_kind_from_string(const std::string& s) {
  if (s == "mmp-step") return StepKind::MmpStep;
  if (s == "possibly-isomorphism") return StepKind::PossiblyIsomorphism;
  if (s == "classification-unknown") return StepKind::ClassificationUnknown;
  throw std::invalid_argument("unknown step kind '" + s + "'");
}

MmpTrace emit_trace(const ChamberWalk& walk, const std::optional<NefClassification>& cls) {
  const std::size_t k = walk.size();
  std::vector<std::string> model(k + 1);
  for (std::size_t i = 1; i <= k; ++i) model[i] = "M" + std::to_string(i);
  if (cls && cls->mode == NefMode::Full) {
    for (std::size_t j = 1; j < cls->indices.size(); ++j) {
      const std::size_t first = cls->indices[j - 1] + 1;
      if (first <= k && !cls->block_models[j].empty()) model[first] = cls->block_models[j];
    }
  }

  MmpTrace trace;
  for (std::size_t i = 1; i < k; ++i) {
    TraceStep s;
    s.from_chamber = i;
    s.to_chamber = i + 1;
    s.t = walk.crossing_params[i - 1];
    s.wall_point = walk.crossings[i - 1];
    s.interior_pick = relative_interior_point(walk.cones[i]);
    s.model_id = model[i + 1];
    if (cls) {
      const auto& idx = cls->indices;
      if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
        s.kind = StepKind::MmpStep;
      } else if (i + 1 <= idx.back()) {
        s.kind = StepKind::PossiblyIsomorphism;
      }
    }
    trace.steps.push_back(std::move(s));
  }
  const MinimalModel mm = minimal_model_chamber(walk);
  trace.final = TraceFinal{mm.position, mm.cell, mm.divisor, model[k]};
  if (cls) {
    trace.nef_indices = cls->indices;
    trace.nef_mode = cls->mode;
  }
  return trace;
}

std::string render_text(const MmpTrace& trace) {
  std::ostringstream os;
  os << "MMP with scaling: " << trace.steps.size() << " wall crossing(s)\n";
  if (!trace.nef_indices.empty()) {
    os << "nef indices:";
    for (auto k : trace.nef_indices) os << ' ' << k;
    os << (trace.nef_mode == NefMode::Full ? " (full)\n" : " (first step only)\n");
  }
  for (const auto& s : trace.steps) {
    os << "  C" << s.from_chamber << " -> C" << s.to_chamber << "  t=" << format_rat(s.t) << "  wall "
       << format_vector(s.wall_point) << "  G=" << format_vector(s.interior_pick) << "  " << s.model_id << "  ["
       << to_string(s.kind) << "]\n";
  }
  os << "minimal model: chamber C" << trace.final.chamber << " (cell " << trace.final.cell << "), D="
     << format_vector(trace.final.divisor) << ", " << trace.final.model_id << "\n";
  return os.str();
}

}  // namespace mmpw
