#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanostab/git/search.hpp"
#include "fanostab/sing/points.hpp"

namespace fanostab {

enum class Level { KStable, KPolystableNotStable, KSemistableNotPolystable, KUnstable, Unknown };

std::string to_string(Level l);
bool is_semistable(Level l);
bool is_polystable(Level l);

struct Verdict {
  Level level = Level::Unknown;
  std::vector<std::string> reasons;
  std::optional<Certificate> certificate;

  // Findings behind the decision.
  int quadric_rank = 0;
  std::vector<SurfacePoint> singularities;
  std::optional<ConePoint> cone_point;
  std::vector<RulingFactor> rulings;
  /// "three conics" or "two A5" when a polystable family matched.
  std::string family;
};

struct VerdictOptions {
  int precision = kDefaultPrecision;
  std::vector<QVector> assist;  // user-supplied singular points, in x-coordinates
  int bound = 9;                // box for destabilizer_search
  int threads = 1;
  std::vector<RMatrix> frames;  // extra search frames
};

/// K-stability of the blow-up along the curve. Throws IncompleteGeometry when
/// some singular point or ruling could not be determined.
Verdict k_verdict(const CurvePair& p, const VerdictOptions& opt = {});

/// GIT verdict at slope t in [0, 2/3] (OutOfRange otherwise). Inside the
/// chamber (2/5, 1/2) it is the K-verdict; elsewhere only a certificate from
/// the bounded search decides, and Unknown is returned without one.
Verdict git_verdict(const CurvePair& p, const Rat& t, const VerdictOptions& opt = {});

}  // namespace fanostab
