#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pcat/closure.hpp"
#include "pcat/ops.hpp"
#include "pcat/partition.hpp"

using namespace pcat;

namespace {

  Partition P(char const* text) {
    return parse_text(text);
  }

  bool pairs_only(Partition const& p) {
    for (auto s : oracle::block_sizes(p)) {
      if (s != 2) {
        return false;
      }
    }
    return true;
  }

  // Pair partitions whose legs have inverse colors on the one-line form.
  bool bicolored_pairing(Partition const& p) {
    if (!pairs_only(p) || !oracle::noncrossing(p)) {
      return false;
    }
    auto [colors, ids] = oracle::one_line(oracle::raw(p));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (ids[i] == ids[j] && colors[i] == colors[j]) {
          return false;
        }
      }
    }
    return true;
  }

  std::set<Partition> slice(std::size_t bound, auto&& predicate) {
    std::set<Partition> out;
    for (std::size_t n = 0; n <= bound; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (auto const& p : oracle::all(k, n - k)) {
          if (predicate(p)) {
            out.insert(p);
          }
        }
      }
    }
    return out;
  }

  std::set<Partition> members(ClosureSet const& cs) {
    auto const all = cs.members();
    return {all.begin(), all.end()};
  }

}  // namespace

TEST_CASE("closure of nothing is the bicolored noncrossing pairings") {
  auto const cs = closure(std::vector<Partition>{}, 6);
  CHECK(cs.stabilized());
  CHECK(members(cs) == slice(6, bicolored_pairing));
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(cs.count({0, 2 * n}) == oracle::catalan(n) << n);
    CHECK(cs.count({0, 2 * n + 1}) == 0);
  }
  CHECK(cs.contains(P("|wb|0,0")));
  CHECK_FALSE(cs.contains(P("|ww|0,0")));
  CHECK_THROWS_AS(cs.contains(P("|wbwbwbwb|0,0,1,1,2,2,3,3")), ClosureError);
}

TEST_CASE("closure of the globally colorizing partition") {
  auto const cs = closure({P("|wwbb|0,0,1,1")}, 6);
  CHECK(cs.stabilized());
  auto const expected = slice(6, [](Partition const& p) {
    return pairs_only(p) && oracle::noncrossing(p) && oracle::c_of(p) == 0;
  });
  CHECK(members(cs) == expected);
  for (auto const& p : cs.members()) {
    CHECK(oracle::c_of(p) == 0);
  }
}

TEST_CASE("the crossing partition generates its recolorings") {
  auto const cs = closure({P("ww|ww|0,1,1,0")}, 4);
  CHECK(cs.contains(P("bb|bb|0,1,1,0")));
  CHECK(cs.contains(P("wb|bw|0,1,1,0")));
  CHECK_FALSE(cs.contains(P("wb|wb|0,1,1,0")));
  CHECK(cs.contains(P("ww|ww|0,1,1,0")));
}

TEST_CASE("balanced singletons only") {
  auto const cs = closure({P("|wb|0,1")}, 6);
  CHECK_FALSE(cs.contains(P("|w|0")));
  CHECK(cs.contains(P("|bw|0,1")));
  for (auto const& p : cs.members()) {
    CHECK(oracle::c_of(p) == 0);
  }
}

TEST_CASE("tiny closure and report") {
  auto const cs = closure(std::vector<Partition>{}, 2);
  std::set<Partition> const expected{Partition{},      P("|wb|0,0"),
                                     P("|bw|0,0"),     P("wb||0,0"),
                                     P("bw||0,0"),     P("w|w|0,0"),
                                     P("b|b|0,0")};
  CHECK(members(cs) == expected);
  CHECK(cs.size() == 7);

  auto const  four = closure(std::vector<Partition>{}, 4);
  auto const& r    = stabilization_report(four);
  CHECK(r.bound == 4);
  CHECK(r.members_per_profile.at({0, 4}) == 8);
  CHECK(r.members_per_profile.at({2, 2}) == 8);
  CHECK(r.one_line_counts == std::vector<std::uint64_t>{1, 0, 2, 0, 8});

  auto const o2 = closure({P("|ww|0,0"), P("|wwbb|0,0,1,1")}, 6);
  CHECK(o2.stabilized());
  CHECK(o2.report().stabilized);
}

TEST_CASE("generator bookkeeping") {
  auto const big = P("|wbwbwb|0,0,0,0,0,0");
  auto const cs  = closure({big, P("|ww|0,0")}, 4);
  REQUIRE(cs.report().skipped_generators.size() == 1);
  CHECK(cs.report().skipped_generators.front() == big);
  CHECK(cs.contains(P("|ww|0,0")));
  CHECK_THROWS_AS(closure({big}, 4, {.strict = true}), ClosureError);
  for (auto const& g : base_partitions()) {
    CHECK(cs.contains(g));
  }
  CHECK(cs.contains(Partition{}));
}

TEST_CASE("monotonicity, idempotence and order independence") {
  auto const a = P("|wbwb|0,0,0,0");
  auto const b = P("|ww|0,0");
  auto const small = members(closure({a}, 6));
  auto const large = members(closure({a, b}, 6));
  for (auto const& p : small) {
    CHECK(large.count(p) == 1);
  }
  CHECK(members(closure({b, a}, 6)) == large);

  auto const cs    = closure({a}, 6);
  auto const again = closure(cs.members(), 6);
  CHECK(members(again) == members(cs));

  // Raising the bound never loses members.
  auto const wider = closure({a}, 8);
  for (auto const& p : small) {
    CHECK(wider.contains(p));
  }
}

TEST_CASE("members are closed under rotation and reflections") {
  auto const cs = closure({P("|wwbb|0,0,0,0"), P("|w|0")}, 5);
  for (auto const& p : cs.members()) {
    REQUIRE(cs.contains(involution(p)));
    REQUIRE(cs.contains(verticolor_reflection(p)));
    if (p.upper_size() > 0) {
      REQUIRE(cs.contains(rotate(p, RotationKind::upper_left_down)));
      REQUIRE(cs.contains(rotate(p, RotationKind::upper_right_down)));
    }
    if (p.lower_size() > 0) {
      REQUIRE(cs.contains(rotate(p, RotationKind::lower_left_up)));
    }
  }
}

TEST_CASE("dump and generators file") {
  auto const cs   = closure(std::vector<Partition>{}, 2);
  auto const text = dump(cs);
  CHECK(text.rfind("# closure bound=2 generators=0 stabilized=true\n", 0) == 0);
  CHECK(text.find("|wb|0,0\n") != std::string::npos);

  auto const gens = parse_generators("# comment\n|wb|0,1\n\n  w|w|0,0  # identity\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == P("|wb|0,1"));
  CHECK(gens[1] == P("w|w|0,0"));
  CHECK_THROWS(parse_generators("|wx|0,0\n"));
}
