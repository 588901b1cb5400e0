#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corner/nbody.hpp"
#include "corner/sampling.hpp"
#include "corner/semilattice.hpp"

#include <algorithm>
#include <map>

using namespace corner;

namespace {

Subspace span_of(int n, std::initializer_list<std::initializer_list<int>> rows) {
  RatMat m;
  for (const auto& r : rows) {
    RatVec v;
    for (int x : r) v.push_back(Rat(x));
    m.push_back(std::move(v));
  }
  return Subspace::from_span(n, m);
}

Semilattice two_body_line() { return nbody_semilattice(NBodySpec(2, 1)); }

/// {0} subset L subset P inside Q^3.
Semilattice chain_lattice() {
  Subspace line = span_of(3, {{1, 0, 0}});
  Subspace plane = span_of(3, {{1, 0, 0}, {0, 1, 0}});
  return Semilattice::from_members(3, {Subspace::zero(3), line, plane});
}

}  // namespace

TEST_CASE("close examples") {
  Subspace x_axis = span_of(2, {{1, 0}});
  Subspace y_axis = span_of(2, {{0, 1}});
  Semilattice s = close(2, {x_axis, y_axis});
  CHECK(s.size() == 3);
  CHECK(s.member(0).is_zero());

  Semilattice empty = close(2, {});
  CHECK(empty.size() == 1);

  CHECK(two_body_line().size() == 4);

  CHECK_THROWS_AS(close(2, {Subspace::full(2)}), std::invalid_argument);
}

TEST_CASE("close is idempotent") {
  Sampler sampler(11);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(2, 5));
    std::vector<Subspace> gens;
    const int count = static_cast<int>(sampler.uniform_int(1, 3));
    for (int i = 0; i < count; ++i) {
      Subspace g = sampler.subspace(n, static_cast<int>(sampler.uniform_int(1, n - 1)));
      gens.push_back(g);
    }
    Semilattice once = close(n, gens);
    Semilattice twice = close(n, once.members());
    CHECK(once == twice);
  }
}

TEST_CASE("canonical member order is inclusion compatible") {
  Semilattice s = nbody_semilattice(NBodySpec(3, 1));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < i; ++j)
      CHECK_FALSE(contains(s.member(j), s.member(i)));
}

TEST_CASE("admissible orderings") {
  SUBCASE("chain has exactly one ordering") {
    const auto orderings = admissible_orderings(chain_lattice(), 10);
    REQUIRE(orderings.size() == 1);
    CHECK(orderings[0].size() == 2);
  }
  SUBCASE("antichain of three has six orderings") {
    const auto orderings = admissible_orderings(two_body_line(), 10);
    CHECK(orderings.size() == 6);
    for (const auto& ord : orderings) CHECK(is_admissible(two_body_line(), ord));
  }
  SUBCASE("trivial lattice has the empty sequence") {
    Semilattice s = close(2, {});
    const auto orderings = admissible_orderings(s, 10);
    REQUIRE(orderings.size() == 1);
    CHECK(orderings[0].empty());
  }
  SUBCASE("first ordering is the canonical member order") {
    Semilattice s = nbody_semilattice(NBodySpec(3, 1));
    const auto orderings = admissible_orderings(s, 1);
    REQUIRE(orderings.size() == 1);
    for (size_t i = 0; i + 1 < orderings[0].size(); ++i)
      CHECK(orderings[0][i] < orderings[0][i + 1]);
  }
  SUBCASE("limit caps the enumeration") {
    CHECK(admissible_orderings(two_body_line(), 4).size() == 4);
  }
}

TEST_CASE("reduce examples") {
  SUBCASE("antichain: everything untouched") {
    Semilattice s = two_body_line();
    ReducedFamily fam = reduce(s, s.member(1));
    CHECK(fam.size() == 3);
    int untouched = 0;
    for (const auto& e : fam.elements)
      if (e.tag == ReduceTag::kUntouched) ++untouched;
    CHECK(untouched == 2);
  }
  SUBCASE("chain: the plane lifts") {
    Semilattice s = chain_lattice();
    ReducedFamily fam = reduce(s, s.member(1));
    CHECK(fam.size() == 2);
    REQUIRE(fam.elements.size() == 2);
    CHECK(fam.elements[0].tag == ReduceTag::kEmpty);
    CHECK(fam.elements[1].tag == ReduceTag::kLifted);
  }
  SUBCASE("singleton member") {
    Subspace y = span_of(2, {{1, 1}});
    Semilattice s = Semilattice::from_members(2, {Subspace::zero(2), y});
    ReducedFamily fam = reduce(s, y);
    CHECK(fam.size() == 1);
    CHECK(fam.elements[0].tag == ReduceTag::kEmpty);
  }
  SUBCASE("non-minimal center is rejected") {
    Semilattice s = chain_lattice();
    CHECK_THROWS_AS(reduce(s, s.member(2)), std::invalid_argument);
    CHECK_THROWS_AS(reduce(s, Subspace::zero(3)), std::invalid_argument);
  }
}

TEST_CASE("reduction drops exactly one element for every minimal member") {
  for (const Semilattice& s :
       {chain_lattice(), two_body_line(), nbody_semilattice(NBodySpec(3, 1))}) {
    for (int i = 1; i < s.size(); ++i) {
      if (!s.is_minimal(i)) continue;
      CHECK(reduce(s, s.member(i)).size() == s.size() - 1);
    }
  }
}

TEST_CASE("is_clean") {
  CHECK(is_clean(2, two_body_line().members()));
  CHECK(is_clean(3, chain_lattice().members()));

  // meet of the two members is missing
  Subspace y1 = span_of(2, {{0, 1}});
  Subspace y12 = span_of(2, {{1, 1}});
  CHECK_FALSE(is_clean(2, {y1, y12}));

  CHECK(is_clean(9, nbody_semilattice(NBodySpec(3, 3)).members()));
}

TEST_CASE("act examples") {
  Semilattice s = two_body_line();
  SUBCASE("identity") { CHECK(act(s, rat_identity(2)) == s); }
  SUBCASE("swap exchanges the axes and fixes the diagonal") {
    RatMat swap = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(act(s, swap, /*require_invariant=*/true) == s);
  }
  SUBCASE("scaling fixes every subspace") {
    RatMat twice = {{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
    CHECK(act(s, twice) == s);
  }
  SUBCASE("singular matrices are rejected") {
    RatMat bad = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_THROWS_AS(act(s, bad), std::invalid_argument);
  }
  SUBCASE("a shear is not a symmetry of the two-body lattice") {
    RatMat shear = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(act(s, shear, /*require_invariant=*/true), std::invalid_argument);
  }
}

TEST_CASE("iterated reduction is order independent") {
  Semilattice s = nbody_semilattice(NBodySpec(3, 1));
  const auto orderings = admissible_orderings(s, 12);
  REQUIRE(orderings.size() >= 2);

  // per unordered member pair, the multiset of tag events must not depend on
  // the ordering; the terminal family is always the single empty class
  using PairTags = std::map<std::pair<MemberIndex, MemberIndex>, std::vector<ReduceTag>>;
  std::vector<PairTags> observed;
  for (const auto& ordering : orderings) {
    const auto steps = iterated_reduce(s, ordering);
    CHECK(steps.size() == ordering.size());
    PairTags tags;
    for (const auto& step : steps) {
      for (const auto& [member, tag] : step.tags) {
        auto key = std::minmax(step.center, member);
        tags[{key.first, key.second}].push_back(tag);
      }
    }
    for (auto& [key, list] : tags) std::sort(list.begin(), list.end());
    observed.push_back(std::move(tags));
  }
  for (size_t i = 1; i < observed.size(); ++i) CHECK(observed[i] == observed[0]);
}

TEST_CASE("permutation actions commute with close up to relabeling") {
  NBodySpec spec(3, 1);
  const auto gens = generators(spec);
  RatMat g = permutation_action(spec, {1, 2, 0});
  std::vector<Subspace> mapped_gens;
  for (const auto& s : gens) {
    RatMat rows;
    for (const auto& v : s.basis()) rows.push_back(rat_mat_apply(g, v));
    mapped_gens.push_back(Subspace::from_span(spec.ambient(), rows));
  }
  CHECK(act(close(spec.ambient(), gens), g) == close(spec.ambient(), mapped_gens));
}
