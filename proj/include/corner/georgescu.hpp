#pragma once

#include "corner/compactify.hpp"
#include "corner/semilattice.hpp"

#include <memory>
#include <string>
#include <vector>

namespace corner {

inline constexpr double kTupleTol = 1e-9;

/// A semilattice together with the quotient map of every member and the
/// exact factor matrices between nested members. Shared by all tuples over
/// the same family.
class QuotientFamily {
 public:
  explicit QuotientFamily(Semilattice lattice);

  const Semilattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  const QuotientMap& map(MemberIndex i) const { return maps_.at(i); }

  bool member_below(MemberIndex i, MemberIndex j) const { return below_[i][j]; }

  /// The exact matrix R with map(j) = R * map(i); requires member i inside j.
  const RatMat& factor(MemberIndex i, MemberIndex j) const;
  const std::vector<std::vector<double>>& factor_d(MemberIndex i, MemberIndex j) const;

 private:
  Semilattice lattice_;
  std::vector<QuotientMap> maps_;
  std::vector<std::vector<bool>> below_;  // below_[i][j]: member i inside member j
  std::vector<std::vector<RatMat>> factors_;
  std::vector<std::vector<std::vector<std::vector<double>>>> factors_d_;
};

using QuotientFamilyPtr = std::shared_ptr<const QuotientFamily>;

QuotientFamilyPtr make_family(Semilattice lattice);

/// A tuple (z_Y) with z_Y in the compactified quotient by Y, one component
/// per member of the family, including Y = {0}.
struct GeorgescuPoint {
  QuotientFamilyPtr family;
  std::vector<RadialPoint> components;

  const RadialPoint& component(MemberIndex i) const { return components.at(i); }
};

struct TupleViolation {
  MemberIndex lower;
  MemberIndex upper;
  std::string what;
  double deviation;
};

struct TupleValidation {
  bool ok = true;
  double max_deviation = 0.0;
  std::vector<TupleViolation> violations;
};

/// Checks upward closure of the interior set and the compatibility of nested
/// interior components under the induced quotients.
TupleValidation validate_tuple(const GeorgescuPoint& p, double tol = kTupleTol);

/// The diagonal point of a finite x: every component is the exact projection.
GeorgescuPoint diagonal(const RatVec& x, const QuotientFamilyPtr& family);

/// The limit tuple of a polynomial path: every component is the limit of the
/// exactly projected curve.
GeorgescuPoint curve_limit_tuple(const PolyCurve& c, const QuotientFamilyPtr& family);

/// Which components sit at infinity. The complement must be upward closed.
struct FaceSignature {
  std::vector<MemberIndex> at_infinity;

  friend bool operator==(const FaceSignature&, const FaceSignature&) = default;
};

/// Throws std::invalid_argument when the tuple violates upward closure (a
/// tuple that cannot lie in the closure of the diagonal).
FaceSignature signature(const GeorgescuPoint& p);

/// Max over members of the octant-coordinate distance of the components.
double tuple_distance(const GeorgescuPoint& a, const GeorgescuPoint& b);

/// The limit tuple computed along one admissible ordering: exact decisions
/// are shared, but every float value is chained through the ordering's
/// parent path, so different orderings take genuinely different numeric
/// routes through the charts.
GeorgescuPoint tuple_via_walk(const PolyCurve& c, const QuotientFamilyPtr& family,
                              const AdmissibleOrdering& ordering);

struct OrderCounterexample {
  int curve;
  int ordering_a;
  int ordering_b;
  double deviation;
};

struct OrderIndependenceReport {
  int orderings = 0;
  int curves = 0;
  long pairs_checked = 0;
  double max_deviation = 0.0;
  std::vector<OrderCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

OrderIndependenceReport verify_order_independence(const QuotientFamilyPtr& family,
                                                  const std::vector<PolyCurve>& curves,
                                                  double tol = kTupleTol,
                                                  int ordering_limit = 720);

struct InjectivityCounterexample {
  int curve_a;
  int curve_b;
  bool same_class;
  double distance;
};

struct InjectivityReport {
  int curves = 0;
  long pairs_checked = 0;
  int distinct_classes = 0;
  double min_separation = 0.0;     // over pairs in distinct classes
  double max_within_class = 0.0;   // over pairs in the same class
  std::vector<InjectivityCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Distinct asymptotic classes must produce separated tuples; curves in the
/// same class (equal exact limit data in every component) must coincide.
InjectivityReport verify_injectivity(const QuotientFamilyPtr& family,
                                     const std::vector<PolyCurve>& curves,
                                     double tol = kTupleTol);

}  // namespace corner
