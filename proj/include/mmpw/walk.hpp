#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmpw/errors.hpp"
#include "mmpw/fan.hpp"
#include "mmpw/ring.hpp"

namespace mmpw {

/// I = { t*kappa + (1-t)*h : 0 <= t <= 1 }, kappa = K_X + Delta, h = H.
struct ScalingSegment {
  QVector kappa;
  QVector h;

  QVector at(const Rat& t) const;
};

/// kappa = u_0. Throws OutsideSupport unless kappa and h are in the support
/// cone and the open segment between them meets its interior, and
/// ValidationError when h == kappa.
ScalingSegment make_segment(const RingDatum& d, const QVector& h);

/// The segment meets a cell without meeting its interior, or runs inside a wall.
class NonGenericSegment : public Error {
 public:
  NonGenericSegment(const std::string& what, std::size_t cell, QVector wall, Rat t)
      : Error(what), cell_(cell), wall_(std::move(wall)), t_(std::move(t)) {}
  /// Index of the offending cell in the fan.
  std::size_t cell() const { return cell_; }
  /// Normal of the violated wall hyperplane.
  const QVector& wall() const { return wall_; }
  /// Segment parameter where the violation happens.
  const Rat& t() const { return t_; }

 private:
  std::size_t cell_;
  QVector wall_;
  Rat t_;
};

/// Chambers C_1..C_k met by the segment, ordered from H (t = 0) to kappa.
struct ChamberWalk {
  std::vector<std::size_t> chambers;  // fan cell indices
  std::vector<PolyCone> cones;
  std::vector<std::pair<Rat, Rat>> intervals;
  std::vector<Rat> crossing_params;   // t_2..t_k
  std::vector<QVector> crossings;     // wall points I(t_i)
  ScalingSegment segment;

  std::size_t size() const { return chambers.size(); }
};

ChamberWalk order_chambers(const Fan& fan, const ScalingSegment& seg);

enum class NefMode { FirstStepOnly, Full };

struct NefClassification {
  /// k_0 < k_1 < ..., 1-based chamber positions.
  std::vector<std::size_t> indices;
  NefMode mode = NefMode::FirstStepOnly;
  /// Model id per block, index-aligned with `indices` (empty for X itself).
  std::vector<std::string> block_models;
};

/// Mode Full when d.pushforwards is non-empty, FirstStepOnly otherwise.
/// Throws MissingNefData and InconsistentInput.
NefClassification classify_nef(const ChamberWalk& walk, const RingDatum& d, std::optional<NefMode> mode = {});

struct MinimalModel {
  std::size_t position = 0;  // k
  std::size_t cell = 0;
  PolyCone chamber;
  QVector divisor;
};

MinimalModel minimal_model_chamber(const ChamberWalk& walk);

enum class StepKind { MmpStep, PossiblyIsomorphism, ClassificationUnknown };

std::string to_string(StepKind kind);
StepKind step_kind_from_string(const std::string& s);

struct TraceStep {
  std::size_t from_chamber = 0;  // 1-based positions along the walk
  std::size_t to_chamber = 0;
  Rat t;
  QVector wall_point;
  QVector interior_pick;
  std::string model_id;
  StepKind kind = StepKind::ClassificationUnknown;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct TraceFinal {
  std::size_t chamber = 0;
  std::size_t cell = 0;
  QVector divisor;
  std::string model_id;

  friend bool operator==(const TraceFinal&, const TraceFinal&) = default;
};

struct MmpTrace {
  std::vector<TraceStep> steps;
  TraceFinal final;
  std::vector<std::size_t> nef_indices;
  std::optional<NefMode> nef_mode;

  friend bool operator==(const MmpTrace&, const MmpTrace&) = default;
};

MmpTrace emit_trace(const ChamberWalk& walk, const std::optional<NefClassification>& cls = std::nullopt);

std::string render_text(const MmpTrace& trace);

}  // namespace mmpw
