#include "corner/georgescu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corner {

namespace {

std::vector<double> mat_apply_d(const std::vector<std::vector<double>>& m,
                                const std::vector<double>& v) {
  std::vector<double> out(m.size(), 0.0);
  for (size_t i = 0; i < m.size(); ++i) {
    double acc = 0.0;
    for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

QuotientFamily::QuotientFamily(Semilattice lattice) : lattice_(std::move(lattice)) {
  const int count = lattice_.size();
  maps_.reserve(count);
  for (MemberIndex i = 0; i < count; ++i)
    maps_.push_back(quotient_map(lattice_.ambient_dim(), lattice_.member(i)));

  below_.assign(count, std::vector<bool>(count, false));
  for (MemberIndex i = 0; i < count; ++i)
    for (MemberIndex j = 0; j < count; ++j)
      below_[i][j] = contains(lattice_.member(j), lattice_.member(i));

  factors_.assign(count, std::vector<RatMat>(count));
  factors_d_.assign(count, {});
  for (MemberIndex i = 0; i < count; ++i) {
    factors_d_[i].resize(count);
    for (MemberIndex j = 0; j < count; ++j) {
      if (!below_[i][j]) continue;
      factors_[i][j] = induced_quotient(maps_[i], maps_[j]);
      auto& fd = factors_d_[i][j];
      fd.reserve(factors_[i][j].size());
      for (const auto& row : factors_[i][j]) fd.push_back(to_doubles(row));
    }
  }
}

const RatMat& QuotientFamily::factor(MemberIndex i, MemberIndex j) const {
  if (!below_[i][j]) throw std::invalid_argument("factor requires nested members");
  return factors_[i][j];
}

const std::vector<std::vector<double>>& QuotientFamily::factor_d(MemberIndex i,
                                                                 MemberIndex j) const {
  if (!below_[i][j]) throw std::invalid_argument("factor requires nested members");
  return factors_d_[i][j];
}

QuotientFamilyPtr make_family(Semilattice lattice) {
  return std::make_shared<const QuotientFamily>(std::move(lattice));
}

TupleValidation validate_tuple(const GeorgescuPoint& p, double tol) {
  TupleValidation result;
  const QuotientFamily& fam = *p.family;
  const int count = fam.size();
  for (MemberIndex i = 0; i < count; ++i) {
    for (MemberIndex j = 0; j < count; ++j) {
      if (i == j || !fam.member_below(i, j)) continue;
      const RadialPoint& lo = p.component(i);
      const RadialPoint& hi = p.component(j);
      if (lo.is_interior() && !hi.is_interior()) {
        result.ok = false;
        result.violations.push_back({i, j, "interior set is not upward closed", 0.0});
        continue;
      }
      if (lo.is_interior() && hi.is_interior()) {
        const auto mapped = mat_apply_d(fam.factor_d(i, j), lo.vec());
        const double dev = max_abs_diff(mapped, hi.vec());
        result.max_deviation = std::max(result.max_deviation, dev);
        if (dev > tol) {
          result.ok = false;
          result.violations.push_back({i, j, "nested interior components disagree", dev});
        }
      }
    }
  }
  return result;
}

GeorgescuPoint diagonal(const RatVec& x, const QuotientFamilyPtr& family) {
  GeorgescuPoint p{family, {}};
  p.components.reserve(family->size());
  for (MemberIndex i = 0; i < family->size(); ++i)
    p.components.push_back(RadialPoint::interior(to_doubles(family->map(i).apply(x))));
  return p;
}

GeorgescuPoint curve_limit_tuple(const PolyCurve& c, const QuotientFamilyPtr& family) {
  GeorgescuPoint p{family, {}};
  p.components.reserve(family->size());
  for (MemberIndex i = 0; i < family->size(); ++i)
    p.components.push_back(curve_limit(project_curve(c, family->map(i))));
  return p;
}

FaceSignature signature(const GeorgescuPoint& p) {
  const QuotientFamily& fam = *p.family;
  FaceSignature sig;
  for (MemberIndex i = 0; i < fam.size(); ++i)
    if (p.component(i).is_direction()) sig.at_infinity.push_back(i);
  for (MemberIndex i = 0; i < fam.size(); ++i) {
    if (!p.component(i).is_interior()) continue;
    for (MemberIndex j = 0; j < fam.size(); ++j) {
      if (i == j || !fam.member_below(i, j)) continue;
      if (!p.component(j).is_interior())
        throw std::invalid_argument("tuple is not in the closure: interior set not upward closed");
    }
  }
  return sig;
}

double tuple_distance(const GeorgescuPoint& a, const GeorgescuPoint& b) {
  if (a.components.size() != b.components.size())
    throw std::invalid_argument("tuples over different families");
  double worst = 0.0;
  for (size_t i = 0; i < a.components.size(); ++i) {
    const OctantPoint qa = theta(a.components[i]);
    const OctantPoint qb = theta(b.components[i]);
    double s = 0.0;
    for (int c = 0; c < qa.ambient(); ++c) {
      const double d = qa[c] - qb[c];
      s += d * d;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

GeorgescuPoint tuple_via_walk(const PolyCurve& c, const QuotientFamilyPtr& family,
                              const AdmissibleOrdering& ordering) {
  const QuotientFamily& fam = *family;
  const Semilattice& lat = fam.lattice();
  iterated_reduce(lat, ordering);  // validates stage minimality and dichotomy

  const auto zero_idx = lat.find(Subspace::zero(lat.ambient_dim()));
  if (!zero_idx) throw std::invalid_argument("family lacks the zero member");

  struct Stage {
    PolyCurve exact;                            // exactly projected curve
    std::vector<std::vector<double>> chained;   // float coefficients, chained
  };
  std::vector<std::optional<Stage>> stages(lat.size());
  std::vector<std::optional<RadialPoint>> components(lat.size());

  auto finish = [&](MemberIndex idx, const Stage& st) {
    const int top = st.exact.top_nonzero();
    if (top <= 0)
      components[idx] = RadialPoint::interior(st.chained[0]);
    else
      components[idx] = RadialPoint::direction(st.chained[top]);
  };

  {
    Stage base{c, {}};
    base.chained.reserve(c.coeffs().size());
    for (const auto& coeff : c.coeffs()) base.chained.push_back(to_doubles(coeff));
    // the {0}-component is the limit in the compactification of X itself
    Stage projected{project_curve(c, fam.map(*zero_idx)), {}};
    projected.chained.reserve(base.chained.size());
    for (const auto& coeff : base.chained)
      projected.chained.push_back(mat_apply_d(fam.map(*zero_idx).matrix_d(), coeff));
    finish(*zero_idx, projected);
    stages[*zero_idx] = std::move(projected);
  }

  std::vector<MemberIndex> processed{*zero_idx};
  for (MemberIndex center : ordering) {
    // parent: the most recently processed member below this one
    MemberIndex parent = *zero_idx;
    for (auto it = processed.rbegin(); it != processed.rend(); ++it) {
      if (fam.member_below(*it, center)) {
        parent = *it;
        break;
      }
    }
    const Stage& from = *stages[parent];
    RatMat projected;
    projected.reserve(from.exact.coeffs().size());
    for (const auto& coeff : from.exact.coeffs())
      projected.push_back(rat_mat_apply(fam.factor(parent, center), coeff));
    Stage st{PolyCurve(std::move(projected)), {}};
    st.chained.reserve(from.chained.size());
    for (const auto& coeff : from.chained)
      st.chained.push_back(mat_apply_d(fam.factor_d(parent, center), coeff));
    finish(center, st);
    stages[center] = std::move(st);
    processed.push_back(center);
  }

  GeorgescuPoint p{family, {}};
  p.components.reserve(lat.size());
  for (MemberIndex i = 0; i < lat.size(); ++i) {
    if (!components[i]) throw std::logic_error("walk left a component unset");
    p.components.push_back(*components[i]);
  }
  return p;
}

OrderIndependenceReport verify_order_independence(const QuotientFamilyPtr& family,
                                                  const std::vector<PolyCurve>& curves,
                                                  double tol, int ordering_limit) {
  OrderIndependenceReport report;
  const auto orderings = admissible_orderings(family->lattice(), ordering_limit);
  report.orderings = static_cast<int>(orderings.size());
  report.curves = static_cast<int>(curves.size());

  for (size_t ci = 0; ci < curves.size(); ++ci) {
    std::vector<GeorgescuPoint> tuples;
    tuples.reserve(orderings.size());
    for (const auto& ordering : orderings)
      tuples.push_back(tuple_via_walk(curves[ci], family, ordering));
    for (size_t a = 0; a < tuples.size(); ++a) {
      for (size_t b = a + 1; b < tuples.size(); ++b) {
        const double dev = tuple_distance(tuples[a], tuples[b]);
        report.max_deviation = std::max(report.max_deviation, dev);
        ++report.pairs_checked;
        if (dev > tol)
          report.counterexamples.push_back(
              {static_cast<int>(ci), static_cast<int>(a), static_cast<int>(b), dev});
      }
    }
  }
  return report;
}

namespace {

/// Exact asymptotic class of a curve over a family: the kind and the exact
/// limit value of every projected component.
std::vector<std::pair<RadialPoint::Kind, RatVec>> exact_class(const PolyCurve& c,
                                                              const QuotientFamily& fam) {
  std::vector<std::pair<RadialPoint::Kind, RatVec>> out;
  out.reserve(fam.size());
  for (MemberIndex i = 0; i < fam.size(); ++i) {
    const ExactLimit lim = curve_limit_exact(project_curve(c, fam.map(i)));
    out.emplace_back(lim.kind, lim.value);
  }
  return out;
}

}  // namespace

InjectivityReport verify_injectivity(const QuotientFamilyPtr& family,
                                     const std::vector<PolyCurve>& curves, double tol) {
  InjectivityReport report;
  report.curves = static_cast<int>(curves.size());

  std::vector<std::vector<std::pair<RadialPoint::Kind, RatVec>>> classes;
  std::vector<GeorgescuPoint> tuples;
  classes.reserve(curves.size());
  tuples.reserve(curves.size());
  for (const auto& c : curves) {
    classes.push_back(exact_class(c, *family));
    tuples.push_back(curve_limit_tuple(c, family));
  }

  std::vector<int> class_ids(curves.size(), -1);
  int next_id = 0;
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (classes[i] == classes[j]) {
        class_ids[i] = class_ids[j];
        break;
      }
    }
    if (class_ids[i] < 0) class_ids[i] = next_id++;
  }
  report.distinct_classes = next_id;

  bool any_distinct = false;
  double min_sep = 0.0;
  for (size_t a = 0; a < curves.size(); ++a) {
    for (size_t b = a + 1; b < curves.size(); ++b) {
      const double dist = tuple_distance(tuples[a], tuples[b]);
      ++report.pairs_checked;
      const bool same = class_ids[a] == class_ids[b];
      if (same) {
        report.max_within_class = std::max(report.max_within_class, dist);
        if (dist > tol)
          report.counterexamples.push_back(
              {static_cast<int>(a), static_cast<int>(b), true, dist});
      } else {
        if (!any_distinct || dist < min_sep) min_sep = dist;
        any_distinct = true;
        if (dist <= tol)
          report.counterexamples.push_back(
              {static_cast<int>(a), static_cast<int>(b), false, dist});
      }
    }
  }
  report.min_separation = any_distinct ? min_sep : 0.0;
  return report;
}

}  // namespace corner
