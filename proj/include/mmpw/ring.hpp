#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmpw/cone.hpp"
#include "mmpw/linalg.hpp"
#include "mmpw/rational.hpp"

namespace mmpw {

/// Name of a tracked geometric valuation.
struct ValuationId {
  std::string name;

  friend auto operator<=>(const ValuationId&, const ValuationId&) = default;
};

/// One ring generator: its multidegree in N^{r+1} and the value of every
/// tracked valuation on the generator's divisor.
struct GeneratorDatum {
  std::vector<long> multidegree;
  std::map<std::string, Rat> mults;

  QVector degree() const { return QVector::from_ints(multidegree); }

  friend bool operator==(const GeneratorDatum&, const GeneratorDatum&) = default;
};

/// Linear map from grading coordinates to numerical (N^1) coordinates.
/// Column i is the numerical class of D_i.
struct NumericalMap {
  QMatrix matrix;

  std::size_t target_dim() const { return matrix.rows(); }
  friend bool operator==(const NumericalMap&, const NumericalMap&) = default;
};

struct NefConeDatum {
  PolyCone cone;

  friend bool operator==(const NefConeDatum&, const NefConeDatum&) = default;
};

/// Data for one model reached by the walk: `map` sends grading coordinates
/// to the model's numerical coordinates (push-forward followed by the
/// numerical projection), `nef` is the model's nef cone there.
struct PushforwardDatum {
  std::string model_id;
  QMatrix map;
  NefConeDatum nef;

  friend bool operator==(const PushforwardDatum&, const PushforwardDatum&) = default;
};

/// A finitely generated divisorial ring R(X; D_0, ..., D_r), known through
/// generator multidegrees. D_0 is the adjoint divisor K_X + Delta; the
/// scalings of the D_i are folded into the grading basis.
struct RingDatum {
  int r = 1;
  std::vector<std::string> labels;
  std::vector<GeneratorDatum> generators;
  std::vector<ValuationId> valuations;
  std::optional<NumericalMap> numerical;
  std::optional<NefConeDatum> nef;
  std::vector<PushforwardDatum> pushforwards;
  /// Ample class H of the scaling segment, in grading coordinates.
  std::optional<QVector> segment_h;

  std::size_t grading_dim() const { return static_cast<std::size_t>(r) + 1; }
  std::vector<QVector> degrees() const;
  /// Values of one valuation on all generators. Throws std::out_of_range for
  /// an unknown valuation.
  std::vector<Rat> heights(const std::string& valuation) const;
  bool has_valuation(const std::string& valuation) const;

  friend bool operator==(const RingDatum&, const RingDatum&) = default;
};

enum class Severity { Warning, Error };

struct ValidationIssue {
  Severity severity;
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;  // no errors; warnings allowed
  bool empty() const { return issues.empty(); }
  bool has(const std::string& code) const;
};

/// Checks every invariant of the datum. Never throws.
ValidationReport validate(const RingDatum& d);

/// Cone spanned by the generator multidegrees.
PolyCone support_cone(const RingDatum& d);

}  // namespace mmpw
