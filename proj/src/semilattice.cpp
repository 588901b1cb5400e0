#include "corner/semilattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace corner {

namespace {

std::vector<Subspace> canonical_sort(std::vector<Subspace> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

/// Intersection of a whole sub-family in one solve: stack the annihilator
/// rows of every member and take the kernel. Independent of the pairwise
/// Zassenhaus route used by intersect().
Subspace joint_intersection(int n, const std::vector<const Subspace*>& family) {
  RatMat annihilators;
  for (const Subspace* s : family) {
    RatMat ann = s->is_zero() ? rat_identity(n) : kernel_basis(s->basis(), n);
    annihilators.insert(annihilators.end(), ann.begin(), ann.end());
  }
  if (annihilators.empty()) return Subspace::full(n);
  return Subspace::from_span(n, kernel_basis(annihilators, n));
}

}  // namespace

Semilattice Semilattice::from_members(int ambient_dim, std::vector<Subspace> members) {
  members = canonical_sort(std::move(members));
  bool has_zero = false;
  for (const auto& m : members) {
    if (m.ambient_dim() != ambient_dim)
      throw std::invalid_argument("member ambient dimension mismatch");
    if (m.is_full())
      throw std::invalid_argument("the ambient space may not be a member");
    if (m.is_zero()) has_zero = true;
  }
  if (!has_zero) throw std::invalid_argument("the zero subspace must be a member");
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      Subspace meet = intersect(members[i], members[j]);
      if (std::find(members.begin(), members.end(), meet) == members.end())
        throw std::invalid_argument("family is not closed under intersection");
    }
  return Semilattice(ambient_dim, std::move(members));
}

std::optional<MemberIndex> Semilattice::find(const Subspace& s) const {
  for (size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == s) return static_cast<MemberIndex>(i);
  return std::nullopt;
}

bool Semilattice::is_minimal(MemberIndex i) const {
  const Subspace& p = member(i);
  if (p.is_zero()) return false;
  for (const auto& q : members_) {
    if (q.is_zero() || q == p) continue;
    if (contains(p, q)) return false;
  }
  return true;
}

Semilattice close(int ambient_dim, const std::vector<Subspace>& generators) {
  std::vector<Subspace> members;
  members.push_back(Subspace::zero(ambient_dim));
  for (const auto& g : generators) {
    if (g.ambient_dim() != ambient_dim)
      throw std::invalid_argument("generator ambient dimension mismatch");
    if (g.is_full())
      throw std::invalid_argument("a generator equals the ambient space");
    members.push_back(g);
  }
  members = canonical_sort(std::move(members));
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t count = members.size();
    std::vector<Subspace> found;
    for (size_t i = 0; i < count; ++i)
      for (size_t j = i + 1; j < count; ++j) {
        Subspace meet = intersect(members[i], members[j]);
        if (std::find(members.begin(), members.end(), meet) == members.end() &&
            std::find(found.begin(), found.end(), meet) == found.end())
          found.push_back(std::move(meet));
      }
    if (!found.empty()) {
      members.insert(members.end(), found.begin(), found.end());
      members = canonical_sort(std::move(members));
      grew = true;
    }
  }
  return Semilattice::from_members(ambient_dim, std::move(members));
}

std::vector<AdmissibleOrdering> admissible_orderings(const Semilattice& s, int limit) {
  if (limit < 1) throw std::invalid_argument("ordering limit must be >= 1");
  std::vector<MemberIndex> nontrivial;
  for (MemberIndex i = 0; i < s.size(); ++i)
    if (!s.member(i).is_zero()) nontrivial.push_back(i);

  // below[i][j]: member nontrivial[i] strictly contains member nontrivial[j]
  const int k = static_cast<int>(nontrivial.size());
  std::vector<std::vector<bool>> strict_below(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && contains(s.member(nontrivial[j]), s.member(nontrivial[i])))
        strict_below[j][i] = true;  // nontrivial[i] < nontrivial[j]

  std::vector<AdmissibleOrdering> out;
  AdmissibleOrdering current;
  std::vector<bool> placed(k, false);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int cand = 0; cand < k; ++cand) {
      if (placed[cand]) continue;
      bool ready = true;
      for (int below = 0; below < k; ++below) {
        if (strict_below[cand][below] && !placed[below]) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      placed[cand] = true;
      current.push_back(nontrivial[cand]);
      self(self);
      current.pop_back();
      placed[cand] = false;
      if (static_cast<int>(out.size()) >= limit) return;
    }
  };
  extend(extend);
  return out;
}

bool is_admissible(const Semilattice& s, const AdmissibleOrdering& ordering) {
  std::vector<bool> seen(s.size(), false);
  int nontrivial = 0;
  for (MemberIndex i = 0; i < s.size(); ++i)
    if (!s.member(i).is_zero()) ++nontrivial;
  if (static_cast<int>(ordering.size()) != nontrivial) return false;
  for (size_t a = 0; a < ordering.size(); ++a) {
    const MemberIndex i = ordering[a];
    if (i < 0 || i >= s.size() || s.member(i).is_zero() || seen[i]) return false;
    seen[i] = true;
    for (size_t b = a + 1; b < ordering.size(); ++b)
      if (contains(s.member(i), s.member(ordering[b]))) return false;
  }
  return true;
}

ReducedFamily reduce(const Semilattice& s, const Subspace& p) {
  const auto idx = s.find(p);
  if (!idx) throw std::invalid_argument("reduce center is not a member");
  if (p.is_zero()) throw std::invalid_argument("reduce center must be nontrivial");
  if (!s.is_minimal(*idx))
    throw std::invalid_argument("reduce center is not inclusion-minimal");

  std::vector<ReducedElement> elements;
  elements.push_back({Subspace::zero(s.ambient_dim()), ReduceTag::kEmpty});
  for (const auto& q : s.members()) {
    if (q.is_zero() || q == p) continue;
    if (contains(q, p)) {
      elements.push_back({q, ReduceTag::kLifted});
    } else if (intersect(q, p).is_zero()) {
      elements.push_back({q, ReduceTag::kUntouched});
    } else {
      throw std::invalid_argument("reduce dichotomy failed: center is not minimal");
    }
  }
  return ReducedFamily{p, std::move(elements)};
}

bool is_clean(int ambient_dim, const std::vector<Subspace>& family, int max_subfamily) {
  for (const auto& m : family)
    if (m.ambient_dim() != ambient_dim)
      throw std::invalid_argument("family ambient dimension mismatch");
  const int n = static_cast<int>(family.size());
  const int cap = std::min(max_subfamily, n);

  std::vector<int> pick;
  auto check = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(pick.size()) >= 2) {
      Subspace pairwise = family[pick[0]];
      std::vector<const Subspace*> ptrs;
      for (int i : pick) ptrs.push_back(&family[i]);
      for (size_t i = 1; i < pick.size(); ++i) pairwise = intersect(pairwise, family[pick[i]]);
      Subspace joint = joint_intersection(ambient_dim, ptrs);
      if (pairwise != joint) return false;  // tangent route disagrees
      if (std::find(family.begin(), family.end(), pairwise) == family.end()) return false;
    }
    if (static_cast<int>(pick.size()) == cap) return true;
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      if (!self(self, i + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return check(check, 0);
}

Semilattice act(const Semilattice& s, const RatMat& g, bool require_invariant) {
  const int n = s.ambient_dim();
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("matrix size does not match ambient dimension");
  {
    RatMat check = g;
    if (rref(check) != n) throw std::invalid_argument("singular action matrix");
  }
  std::vector<Subspace> mapped;
  for (const auto& m : s.members()) {
    RatMat rows;
    for (const auto& v : m.basis()) rows.push_back(rat_mat_apply(g, v));
    mapped.push_back(Subspace::from_span(n, rows));
  }
  Semilattice out = Semilattice::from_members(n, std::move(mapped));
  if (require_invariant && !(out == s))
    throw std::invalid_argument("family is not invariant under the given action");
  return out;
}

std::vector<WalkStep> iterated_reduce(const Semilattice& s, const AdmissibleOrdering& ordering) {
  if (!is_admissible(s, ordering))
    throw std::invalid_argument("ordering is not admissible");
  std::set<MemberIndex> removed;
  std::vector<WalkStep> steps;
  for (size_t step = 0; step < ordering.size(); ++step) {
    const MemberIndex center = ordering[step];
    const Subspace& p = s.member(center);
    WalkStep ws;
    ws.center = center;
    for (size_t later = step + 1; later < ordering.size(); ++later) {
      const MemberIndex qi = ordering[later];
      const Subspace& q = s.member(qi);
      if (contains(q, p)) {
        ws.tags.emplace_back(qi, ReduceTag::kLifted);
        continue;
      }
      // the lift of the meet is empty as soon as the meet was already
      // blown up (or was {0} to begin with)
      Subspace meet = intersect(q, p);
      const auto mi = s.find(meet);
      if (!mi) throw std::invalid_argument("family is not intersection-closed");
      if (meet.is_zero() || removed.count(*mi)) {
        ws.tags.emplace_back(qi, ReduceTag::kUntouched);
      } else {
        throw std::invalid_argument("stage dichotomy failed: ordering not admissible");
      }
    }
    removed.insert(center);
    steps.push_back(std::move(ws));
  }
  return steps;
}

}  // namespace corner
