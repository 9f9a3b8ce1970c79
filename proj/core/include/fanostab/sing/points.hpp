#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanostab/git/curve_pair.hpp"
#include "fanostab/sing/germ.hpp"
#include "fanostab/sing/quadric.hpp"

namespace fanostab {

using QVector = std::vector<QuadNum>;

/// Scales a nonzero vector so that its last nonzero entry is 1.
QVector normalize_projective(QVector v);

/// Variables u, v, s, w of P^1 x P^1.
const VarList& bidegree_vars();

/// g restricted to the smooth quadric through its normal frame and the Segre
/// map y = (us, uw, vs, vw): a form of bidegree (3,3) in (u,v; s,w).
QPoly bidegree_form(const CurvePair& p, const QuadricInfo& info);

/// g(F y) for the normal frame F, in y0..y3.
QPoly model_cubic(const CurvePair& p, const QuadricInfo& info);

/// The pair (x0*x3 - x1*x2, g) with g(us, uw, vs, vw) = f for a rational
/// bidegree (3,3) form f in u, v, s, w (WrongDegree otherwise).
CurvePair pair_from_bidegree(const Poly& f);

struct SurfacePoint {
  /// Rank 4: chart 0..3 of P^1 x P^1 (v=w=1, v=s=1, u=w=1, u=s=1).
  /// Rank 3: chart 0 (y3 = 1) or 1 (y1 = 1) of the cone minus its vertex.
  int chart = 0;
  /// Rank 4: (u, v, s, w) with each pair normalized; rank 3: y0..y3 normalized.
  QVector model;
  /// The point in the input coordinates x0..x3, normalized.
  QVector p3;
  GermType type;
  bool user_supplied = false;

  std::string str() const;
  /// Q, or Q(sqrt d) for the field generated by the coordinates.
  std::string field() const;
};

struct SingularLocus {
  std::vector<SurfacePoint> points;
  bool complete = true;
  /// Root polynomials that could not be solved, with their chart.
  std::vector<std::string> unresolved;
};

/// Singular points of the curve on the smooth locus of the quadric (rank 3 or
/// 4 with a normal frame), each classified with classify_germ. Throws
/// UnsupportedQuadric for rank <= 2 or a missing frame and NotReduced if the
/// curve has a multiple component. `assist` are extra points in x-coordinates;
/// each must be singular (InvalidInput otherwise) and they may close gaps left
/// by unresolved root polynomials.
SingularLocus singular_points(const CurvePair& p, const QuadricInfo& info,
                              const std::vector<QVector>& assist = {}, int precision = kDefaultPrecision);

/// True when the curve has no multiple component (square-free chart polynomials).
bool is_reduced(const CurvePair& p, const QuadricInfo& info);

struct ConePoint {
  enum class Kind { NotThroughVertex, A1, Worse };
  Kind kind = Kind::NotThroughVertex;
  GermType upstairs;  // type of the pulled-back germ when the curve passes the vertex
  std::string str() const;
};

/// Behaviour at the vertex of a rank 3 quadric: pulls g(1, y1, y2, y3) back
/// along (a, b) -> (a^2, ab, b^2) and asks for an ordinary node.
ConePoint cone_point_type(const CurvePair& p, const QuadricInfo& info, int precision = kDefaultPrecision);

struct RulingProfile {
  int multiplicity = 1;
  /// Number of distinct points where the residual curve meets the line.
  int contact_points = 0;
  bool perfect_cube = false;
  /// For a perfect cube: the contact point (s:w) or (u:v) on the line, and
  /// whether the residual curve is singular there.
  std::optional<QVector> contact;
  bool singular_on_residual = false;
};

struct RulingFactor {
  /// 0: a (1,0)-factor in (u, v); 1: a (0,1)-factor in (s, w).
  int family = 0;
  /// Root of the factor on its P^1, normalized.
  QVector root;
  QPoly factor;
  RulingProfile profile;
};

struct RulingDecomposition {
  std::vector<RulingFactor> factors;
  /// f divided by every factor to its multiplicity.
  QPoly residual;
};

/// Line components of a bidegree (3,3) form in u, v, s, w. Throws
/// UnresolvedRoots if a common factor has roots outside quadratic fields.
RulingDecomposition ruling_components(const QPoly& f);

}  // namespace fanostab
