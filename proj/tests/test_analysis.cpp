#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pcat/analysis.hpp"
#include "pcat/closure.hpp"
#include "pcat/enumerate.hpp"
#include "pcat/partition.hpp"
#include "pcat/taxonomy.hpp"
#include "pcat/verify.hpp"

using namespace pcat;

namespace {

  Partition P(char const* text) {
    return parse_text(text);
  }

  bool has(std::vector<NestDecomposition> const& scan, EndpointColors e,
           std::int64_t c) {
    return std::ranges::find(scan, NestDecomposition{e, c}) != scan.end();
  }

  EndpointColors ends(Color first, Color last) {
    if (first == Color::white) {
      return last == Color::white ? EndpointColors::ww : EndpointColors::wb;
    }
    return last == Color::white ? EndpointColors::bw : EndpointColors::bb;
  }

  // The predicate set bounds the closure from above, so reaching its counts
  // means the closure is complete.
  ClosureSet closure_of(NamedCategory const& f, std::size_t bound) {
    ClosureOptions options;
    options.target_one_line_counts
        = predicate_one_line_counts(std::vector<NamedCategory>{f}, bound)
              .front();
    return closure(generators_for(f), bound, options);
  }

}  // namespace

TEST_CASE("color counts") {
  CHECK(color_counts(P("|wwbb|0,0,1,1")).c == 0);
  CHECK(color_counts(P("|w|0")).c == 1);
  auto const x = color_counts(P("bwbw|wwb|0,1,2,3,4,5,6"));
  CHECK(x.c_white == 4);
  CHECK(x.c_black == 3);
  CHECK(x.c == 1);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (auto const& p : oracle::all(k, n - k)) {
        auto const cc = color_counts(p);
        REQUIRE(cc.c == oracle::c_of(p));
        REQUIRE(cc.c_white + cc.c_black == static_cast<std::int64_t>(n));
      }
    }
  }
}

TEST_CASE("nest decomposition examples") {
  CHECK(has(ndf_scan(P("|wwbb|0,0,1,1")), EndpointColors::bb, 2));
  CHECK(has(ndf_scan(P("|bbww|0,0,1,1")), EndpointColors::ww, -2));
  CHECK(has(ndf_scan(P("|wbwb|0,0,1,1")), EndpointColors::wb, 0));
  // Three white pairs: the outer factor of two pairs has c = 4.
  CHECK(has(ndf_scan(P("|wwwwww|0,0,1,1,2,2")), EndpointColors::ww, 4));
  CHECK(has(ndf_scan(P("|wwbbww|0,0,1,1,2,2")), EndpointColors::ww, 0));
  // No nonempty outer factor exists for a single block.
  CHECK(ndf_scan(P("|wwbb|0,0,0,0")).empty());
  CHECK(ndf_scan(P("|ww|0,0")).empty());
}

TEST_CASE("nest decompositions agree with the literal scan") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (auto const& p : enumerate({0, n}, {.noncrossing_only = true})) {
      std::set<std::tuple<Color, Color, std::int64_t>> got;
      for (auto const& d : ndf_scan(p)) {
        Color const first = d.ends == EndpointColors::wb || d.ends == EndpointColors::ww
                                ? Color::white
                                : Color::black;
        Color const last = d.ends == EndpointColors::bw || d.ends == EndpointColors::ww
                               ? Color::white
                               : Color::black;
        REQUIRE(ends(first, last) == d.ends);
        got.emplace(first, last, d.c_outer);
      }
      REQUIRE(got == oracle::nest_decompositions(p));
    }
  }
  // Two-row input is scanned on its one-line form.
  auto const p = P("ww|bb|0,1,0,1");
  auto const q = P("|bbbb|0,1,1,0");
  CHECK(ndf_scan(p) == ndf_scan(q));
}

TEST_CASE("progression fit") {
  auto const a = fit_progression({0, 2, 4, -2});
  CHECK_FALSE(a.empty);
  CHECK(a.modulus == 2);
  CHECK(a.offset == 0);
  CHECK(a.consistent);
  auto const b = fit_progression({1, 5});
  CHECK(b.modulus == 4);
  CHECK(b.offset == 1);
  auto const c = fit_progression({0, 2, 6});
  CHECK(c.modulus == 2);
  CHECK_FALSE(c.consistent);
  auto const d = fit_progression({-3});
  CHECK(d.modulus == 0);
  CHECK(d.offset == -3);
  CHECK(fit_progression({}).empty);
}

TEST_CASE("degree of reflection") {
  CHECK(k_of(closure(std::vector<Partition>{}, 8)) == 0);
  CHECK(k_of(closure_of(NamedCategory::make(Family::O_glob, {2}), 8)) == 2);
  CHECK(k_of(closure_of(NamedCategory::make(Family::S_glob, {1}), 8)) == 1);
}

TEST_CASE("local parameters") {
  auto const o_glob = closure({P("|wwbb|0,0,1,1")}, 8);
  CHECK(d_of(o_glob) == 2);

  auto const o_loc = closure(std::vector<Partition>{}, 8);
  CHECK(k_sets(o_loc).at(EndpointColors::bb).empty());
  CHECK_FALSE(r_of(o_loc).has_value());
  CHECK(d_of(o_loc) == 0);

  auto const b = closure_of(NamedCategory::make(Family::Bprime_loc, {4, 2, 0}), 10);
  REQUIRE(r_of(b).has_value());
  CHECK(*r_of(b) == 0);
  CHECK(d_of(b) == 2);
}

TEST_CASE("signatures") {
  auto const h = signature(closure({P("|wbwb|0,0,0,0")}, 8));
  CHECK(h.kase == Case::H);
  CHECK(h.colorization == Colorization::local);
  CHECK(h.k_hat == 0);
  CHECK(h.d_hat == 0);
  CHECK(h.stabilized);
  CHECK_FALSE(h.truncated);

  auto const s = signature(closure_of(NamedCategory::make(Family::S_glob, {1}), 8));
  CHECK(s.kase == Case::S);
  CHECK(s.colorization == Colorization::global);
  CHECK(s.k_hat == 1);
  CHECK(s.d_hat == 1);

  auto const bg = signature(closure_of(NamedCategory::make(Family::B_glob, {2}), 8));
  CHECK(bg.kase == Case::B);
  CHECK(bg.colorization == Colorization::global);
  CHECK(bg.k_hat == 2);

  auto const o = signature(closure(std::vector<Partition>{}, 6));
  CHECK(o.kase == Case::O);
  auto const text = format_signature(o);
  CHECK(text.find("case=O\n") != std::string::npos);
  CHECK(text.find("colorization=local\n") != std::string::npos);
  CHECK(text.find("r=none\n") != std::string::npos);
}

TEST_CASE("K-set laws on small closures") {
  for (auto const& gens : std::vector<std::vector<Partition>>{
           {}, {P("|wwbb|0,0,1,1")}, {P("|wbwb|0,0,0,0")}, {P("|wb|0,1")},
           {P("|wwbb|0,0,0,0")}, {P("|w|0")}}) {
    auto const cs = closure(gens, 8);
    REQUIRE(cs.stabilized());
    auto const ks = k_sets(cs);
    std::set<std::int64_t> negated;
    for (auto v : ks.at(EndpointColors::bb)) {
      negated.insert(-v);
    }
    CHECK(ks.at(EndpointColors::ww) == negated);
    CHECK(ks.at(EndpointColors::wb) == ks.at(EndpointColors::bw));
    CHECK(ks.at(EndpointColors::wb).count(0) == 1);
    auto const k = k_of(cs);
    for (auto const& p : cs.members()) {
      auto const c = oracle::c_of(p);
      CHECK((k == 0 ? c == 0 : c % k == 0));
    }
  }
}

TEST_CASE("colors forgotten") {
  CHECK(forget_colors(P("|wb|0,0")) == forget_colors(P("|ww|0,0")));
  auto const p = P("wb|bbw|0,1,1,2,0");
  CHECK(block_profile(forget_colors(p)) == block_profile(p));
  std::set<Partition> images;
  for (auto const& g : std::vector<Partition>{P("|wb|0,0"), P("|bw|0,0"),
                                              P("w|w|0,0"), P("b|b|0,0")}) {
    images.insert(forget_colors(g));
  }
  CHECK(images == std::set<Partition>{P("|ww|0,0"), P("w|w|0,0")});
}

TEST_CASE("one-block partitions") {
  CHECK(block_partition(3) == P("|www|0,0,0"));
  CHECK(block_partition(-2) == P("|bb|0,0"));
  CHECK(block_partition(0) == Partition{});
}
