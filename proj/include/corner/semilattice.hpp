#pragma once

#include "corner/subspace.hpp"

#include <optional>
#include <vector>

namespace corner {

/// Indices into Semilattice::members. Index 0 is always the zero subspace.
using MemberIndex = int;

/// A finite intersection-closed family of proper subspaces of Q^n containing
/// {0}. Members are kept in canonical order (dimension, then lexicographic),
/// which is in particular compatible with inclusion.
class Semilattice {
 public:
  /// Validates closure, presence of {0}, absence of the ambient space.
  static Semilattice from_members(int ambient_dim, std::vector<Subspace> members);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Subspace>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Subspace& member(MemberIndex i) const { return members_.at(i); }

  std::optional<MemberIndex> find(const Subspace& s) const;
  bool contains_member(const Subspace& s) const { return find(s).has_value(); }

  /// True iff no other nontrivial member is strictly below members[i].
  bool is_minimal(MemberIndex i) const;

  friend bool operator==(const Semilattice& a, const Semilattice& b) = default;

 private:
  Semilattice(int ambient_dim, std::vector<Subspace> members)
      : ambient_dim_(ambient_dim), members_(std::move(members)) {}

  int ambient_dim_;
  std::vector<Subspace> members_;
};

/// Smallest intersection-closed family containing the generators and {0}.
/// Generators must be proper subspaces of a common ambient space.
Semilattice close(int ambient_dim, const std::vector<Subspace>& generators);

/// A permutation of the nontrivial members (indices into members(), never 0)
/// such that inclusion implies earlier placement.
using AdmissibleOrdering = std::vector<MemberIndex>;

/// Up to `limit` linear extensions of the inclusion order on the nontrivial
/// members. The first one returned is the canonical member order itself.
std::vector<AdmissibleOrdering> admissible_orderings(const Semilattice& s, int limit);

bool is_admissible(const Semilattice& s, const AdmissibleOrdering& ordering);

enum class ReduceTag {
  kEmpty,      // the class of the blown-up center and of {0}
  kLifted,     // center contained in the member: the member lifts to [Q:p]
  kUntouched,  // member meets the center only in {0}: carried over unchanged
};

struct ReducedElement {
  Subspace base;  // the member of the original family this element came from
  ReduceTag tag;
};

/// The family obtained by blowing up along a minimal member: one empty
/// element (absorbing the center and {0}) plus a tagged element per remaining
/// member. Always one element smaller than the input family.
struct ReducedFamily {
  Subspace center;
  std::vector<ReducedElement> elements;

  int size() const { return static_cast<int>(elements.size()); }
};

/// Requires p to be a nontrivial inclusion-minimal member of s.
ReducedFamily reduce(const Semilattice& s, const Subspace& p);

/// Clean-intersection certificate for a family of subspaces: every
/// sub-family up to `max_subfamily` members must have its intersection in the
/// family, computed along two independent routes (iterated pairwise meets vs
/// joint annihilator solve) that must agree.
bool is_clean(int ambient_dim, const std::vector<Subspace>& family, int max_subfamily = 4);

/// Image of every member under an invertible rational matrix, canonicalized.
/// With require_invariant, throws unless the family is mapped onto itself.
Semilattice act(const Semilattice& s, const RatMat& g, bool require_invariant = false);

/// One step of the iterated reduction walk: which member was the center and
/// the tag assigned to every member still pending at that point.
struct WalkStep {
  MemberIndex center;
  std::vector<std::pair<MemberIndex, ReduceTag>> tags;
};

/// Runs the full reduction sequence along an admissible ordering, validating
/// stage-wise minimality and the containment/disjointness dichotomy in the
/// lifted sense (meets that fell into an earlier center count as empty).
std::vector<WalkStep> iterated_reduce(const Semilattice& s, const AdmissibleOrdering& ordering);

}  // namespace corner
