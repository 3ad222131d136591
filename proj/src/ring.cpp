#include "mmpw/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mmpw {

std::vector<QVector> RingDatum::degrees() const {
  std::vector<QVector> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.degree());
  return out;
}

bool RingDatum::has_valuation(const std::string& valuation) const {
  return std::any_of(valuations.begin(), valuations.end(), [&](const ValuationId& v) { return v.name == valuation; });
}

std::vector<Rat> RingDatum::heights(const std::string& valuation) const {
  if (!has_valuation(valuation)) throw std::out_of_range("unknown valuation '" + valuation + "'");
  std::vector<Rat> out;
  out.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto it = generators[i].mults.find(valuation);
    if (it == generators[i].mults.end()) {
      throw std::out_of_range("generator " + std::to_string(i) + " has no value for '" + valuation + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& i) { return i.severity == Severity::Error; });
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.code == code; });
}

PolyCone support_cone(const RingDatum& d) { return cone_from_rays(d.degrees()); }

ValidationReport validate(const RingDatum& d) {
  ValidationReport rep;
  auto error = [&](std::string code, std::string msg) {
    rep.issues.push_back({Severity::Error, std::move(code), std::move(msg)});
  };
  auto warn = [&](std::string code, std::string msg) {
    rep.issues.push_back({Severity::Warning, std::move(code), std::move(msg)});
  };

  if (d.r < 1) {
    error("rank", "r must be at least 1, got " + std::to_string(d.r));
    return rep;
  }
  const std::size_t n = d.grading_dim();
  if (!d.labels.empty() && d.labels.size() != n) {
    error("labels", "expected " + std::to_string(n) + " labels, got " + std::to_string(d.labels.size()));
  }

  std::set<std::string> names;
  for (const auto& v : d.valuations) {
    if (v.name.empty()) error("valuation-name", "valuation with empty name");
    if (!names.insert(v.name).second) error("duplicate-valuation", "valuation '" + v.name + "' listed twice");
  }

  if (d.generators.empty()) error("no-generators", "ring datum has no generators");
  bool degrees_ok = !d.generators.empty();
  for (std::size_t i = 0; i < d.generators.size(); ++i) {
    const auto& g = d.generators[i];
    const std::string who = "generator " + std::to_string(i);
    if (g.multidegree.size() != n) {
      error("dimension-mismatch", who + " has multidegree of length " + std::to_string(g.multidegree.size()) +
                                      ", expected " + std::to_string(n));
      degrees_ok = false;
      continue;
    }
    if (std::any_of(g.multidegree.begin(), g.multidegree.end(), [](long x) { return x < 0; })) {
      error("negative-multidegree", who + " has a negative multidegree entry");
      degrees_ok = false;
    }
    if (std::all_of(g.multidegree.begin(), g.multidegree.end(), [](long x) { return x == 0; })) {
      error("zero-multidegree", who + " has multidegree zero");
      degrees_ok = false;
    }
    for (const auto& v : d.valuations) {
      auto it = g.mults.find(v.name);
      if (it == g.mults.end()) {
        error("missing-valuation", who + " has no value for valuation '" + v.name + "'");
      } else if (it->second < 0) {
        error("negative-mult", who + " has negative value for valuation '" + v.name + "'");
      }
    }
    for (const auto& [name, value] : g.mults) {
      if (!names.count(name)) warn("unknown-valuation", who + " has a value for untracked valuation '" + name + "'");
    }
  }

  std::optional<PolyCone> support;
  if (degrees_ok) {
    support = support_cone(d);
    if (!support->is_full_dimensional()) {
      warn("support-not-full-dimensional", "support cone not full-dimensional (dimension " +
                                               std::to_string(support->dim()) + " of " + std::to_string(n) + ")");
    }
  }

  if (d.numerical) {
    const auto& m = d.numerical->matrix;
    if (m.cols() != n) {
      error("numerical-map-shape", "numerical map has " + std::to_string(m.cols()) + " columns, expected " +
                                       std::to_string(n));
    } else if (rank(m) != m.rows()) {
      warn("numerical-map-rank", "numerical map does not have full row rank");
    }
  }
  if (d.nef) {
    if (!d.numerical) {
      error("nef-without-numerical-map", "nef cone given but no numerical map");
    } else if (d.nef->cone.ambient_dim() != d.numerical->target_dim()) {
      error("nef-dimension", "nef cone lives in dimension " + std::to_string(d.nef->cone.ambient_dim()) +
                                 ", numerical space has dimension " + std::to_string(d.numerical->target_dim()));
    } else if (!d.nef->cone.is_full_dimensional()) {
      warn("nef-not-full-dimensional", "nef cone is not full-dimensional in N^1");
    }
  }

  std::set<std::string> models;
  for (std::size_t j = 0; j < d.pushforwards.size(); ++j) {
    const auto& p = d.pushforwards[j];
    const std::string who = "pushforward " + std::to_string(j);
    if (!models.insert(p.model_id).second) error("duplicate-model", who + " repeats model id '" + p.model_id + "'");
    if (p.map.cols() != n) {
      error("pushforward-shape", who + " map has " + std::to_string(p.map.cols()) + " columns, expected " +
                                     std::to_string(n));
    } else if (rank(p.map) != p.map.rows()) {
      warn("pushforward-rank", who + " map does not have full row rank");
    }
    if (p.nef.cone.ambient_dim() != p.map.rows()) {
      error("pushforward-nef-dimension", who + " nef cone dimension does not match map target");
    }
  }

  if (d.segment_h) {
    const QVector& h = *d.segment_h;
    if (h.size() != n) {
      error("segment-dimension", "segment h has dimension " + std::to_string(h.size()) + ", expected " +
                                     std::to_string(n));
    } else if (support) {
      const QVector kappa = QVector::unit(n, 0);
      if (!contains(*support, kappa)) error("kappa-outside-support", "K_X+Delta = u_0 is outside the support cone");
      if (h == kappa) {
        error("segment-degenerate", "h coincides with K_X+Delta");
      } else if (!contains(*support, h)) {
        error("segment-not-interior", "h = " + format_vector(h) + " is outside the support cone");
      } else if (!contains(*support, make_rat(1, 2) * (h + kappa), true)) {
        error("segment-not-interior", "the segment from h = " + format_vector(h) +
                                          " to K_X+Delta runs along the boundary of the support cone");
      }
    }
  }
  return rep;
}

}  // namespace mmpw
