#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pcat/ops.hpp"
#include "pcat/partition.hpp"

using namespace pcat;

namespace {

  constexpr Color w = Color::white;
  constexpr Color b = Color::black;

  Partition P(char const* text) {
    return parse_text(text);
  }

  std::vector<Partition> all_up_to(std::size_t points) {
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= points; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        auto const part = oracle::all(k, n - k);
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    return out;
  }

  oracle::Raw tensor_raw(oracle::Raw const& p, oracle::Raw const& q) {
    oracle::Raw r;
    r.upper = p.upper;
    r.upper.insert(r.upper.end(), q.upper.begin(), q.upper.end());
    r.lower = p.lower;
    r.lower.insert(r.lower.end(), q.lower.begin(), q.lower.end());
    std::size_t const shift = 1000;
    for (std::size_t i = 0; i < p.upper.size(); ++i) {
      r.ids.push_back(p.ids[i]);
    }
    for (std::size_t i = 0; i < q.upper.size(); ++i) {
      r.ids.push_back(shift + q.ids[i]);
    }
    for (std::size_t j = 0; j < p.lower.size(); ++j) {
      r.ids.push_back(p.ids[p.upper.size() + j]);
    }
    for (std::size_t j = 0; j < q.lower.size(); ++j) {
      r.ids.push_back(shift + q.ids[q.upper.size() + j]);
    }
    return r;
  }

  Partition identities(std::vector<Color> const& colors) {
    oracle::Raw r;
    r.upper = r.lower = colors;
    for (std::size_t i = 0; i < colors.size(); ++i) {
      r.ids.push_back(i);
    }
    for (std::size_t i = 0; i < colors.size(); ++i) {
      r.ids.push_back(i);
    }
    return oracle::make(r);
  }

}  // namespace

TEST_CASE("tensor") {
  CHECK(tensor(P("|w|0"), P("|b|0")) == P("|wb|0,1"));
  CHECK(tensor(Partition{}, P("w|bw|0,1,0")) == P("w|bw|0,1,0"));
  CHECK(tensor(P("w|bw|0,1,0"), Partition{}) == P("w|bw|0,1,0"));
  CHECK(tensor(P("|ww|0,0"), P("|bb|0,0")) == P("|wwbb|0,0,1,1"));
  for (auto const& p : all_up_to(3)) {
    for (auto const& q : all_up_to(2)) {
      REQUIRE(tensor(p, q)
              == oracle::make(tensor_raw(oracle::raw(p), oracle::raw(q))));
    }
  }
}

TEST_CASE("tensor is associative") {
  auto const small = all_up_to(2);
  for (auto const& p : small) {
    for (auto const& q : small) {
      for (auto const& r : small) {
        REQUIRE(tensor(tensor(p, q), r) == tensor(p, tensor(q, r)));
      }
    }
  }
}

TEST_CASE("compose examples") {
  CHECK(compose(P("|wb|0,0"), P("wb|wb|0,1,0,1")) == P("|wb|0,0"));
  CHECK(compose(P("|wwbb|0,0,1,1"), P("wwbb|wb|0,1,1,2,0,2")) == P("|wb|0,0"));
  CHECK_THROWS_AS(compose(P("|wb|0,0"), P("bw|wb|0,1,0,1")), ColorMismatch);
  CHECK_THROWS_AS(compose(P("|wb|0,0"), P("w|w|0,0")), ProfileMismatch);
  // Closed middle components disappear.
  CHECK(compose(P("|wb|0,0"), P("wb||0,0")) == Partition{});
}

TEST_CASE("compose agrees with union-find on all small pairs") {
  std::size_t checked = 0;
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t c = 0; c <= 2; ++c) {
        if (a + m > 4 || m + c > 4) {
          continue;
        }
        auto const tops    = oracle::all(a, m);
        auto const bottoms = oracle::all(m, c);
        for (auto const& q : tops) {
          for (auto const& p : bottoms) {
            if (!std::equal(q.lower_colors().begin(), q.lower_colors().end(),
                            p.upper_colors().begin())) {
              CHECK_THROWS_AS(compose(q, p), ColorMismatch);
              continue;
            }
            REQUIRE(compose(q, p) == oracle::compose(q, p));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("composition laws") {
  std::mt19937_64 rng(7);
  auto const      pool = all_up_to(4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t tried = 0;
  for (std::size_t t = 0; t < 200'000 && tried < 3000; ++t) {
    auto const& x = pool[pick(rng)];
    auto const& y = pool[pick(rng)];
    auto const& z = pool[pick(rng)];
    bool const xy = std::ranges::equal(x.lower_colors(), y.upper_colors());
    bool const yz = std::ranges::equal(y.lower_colors(), z.upper_colors());
    if (xy) {
      // (xy)* = y* x*
      REQUIRE(involution(compose(x, y)) == compose(involution(y), involution(x)));
    }
    if (xy && yz) {
      REQUIRE(compose(compose(x, y), z) == compose(x, compose(y, z)));
      ++tried;
    }
  }
  CHECK(tried > 100);
}

TEST_CASE("reflections") {
  CHECK(involution(P("|wb|0,0")) == P("wb||0,0"));
  CHECK(invert_colors(P("|wwbb|0,0,1,1")) == P("|bbww|0,0,1,1"));
  CHECK(verticolor_reflection(P("|wwb|0,0,1")) == P("|wbb|0,1,1"));
  CHECK(vertical_reflection(P("|wwb|0,0,1")) == P("|bww|0,1,1"));
  for (auto const& p : all_up_to(5)) {
    REQUIRE(involution(involution(p)) == p);
    REQUIRE(vertical_reflection(vertical_reflection(p)) == p);
    REQUIRE(invert_colors(invert_colors(p)) == p);
    REQUIRE(verticolor_reflection(verticolor_reflection(p)) == p);
    REQUIRE(verticolor_reflection(p) == invert_colors(vertical_reflection(p)));
    REQUIRE(invert_colors(vertical_reflection(p))
            == vertical_reflection(invert_colors(p)));
  }
}

TEST_CASE("involution oracle") {
  for (auto const& p : all_up_to(4)) {
    auto const  r = oracle::raw(p);
    oracle::Raw s;
    s.upper = r.lower;
    s.lower = r.upper;
    for (std::size_t j = 0; j < r.lower.size(); ++j) {
      s.ids.push_back(r.ids[r.upper.size() + j]);
    }
    for (std::size_t i = 0; i < r.upper.size(); ++i) {
      s.ids.push_back(r.ids[i]);
    }
    REQUIRE(involution(p) == oracle::make(s));
  }
}

TEST_CASE("rotations") {
  CHECK(rotate(P("w|w|0,0"), RotationKind::upper_left_down) == P("|bw|0,0"));
  CHECK(rotate(P("|wb|0,0"), RotationKind::one_line_left_to_right)
        == P("|bw|0,0"));
  CHECK_THROWS_AS(rotate(P("|wb|0,0"), RotationKind::upper_left_down),
                  PartitionError);
  CHECK_THROWS_AS(rotate(P("w|w|0,0"), RotationKind::one_line_left_to_right),
                  PartitionError);

  for (auto const& p : all_up_to(5)) {
    if (p.upper_size() > 0) {
      REQUIRE(rotate(rotate(p, RotationKind::upper_left_down),
                     RotationKind::lower_left_up)
              == p);
      REQUIRE(rotate(rotate(p, RotationKind::upper_right_down),
                     RotationKind::lower_right_up)
              == p);
      // The moved point keeps its block and inverts its color.
      auto const q = rotate(p, RotationKind::upper_left_down);
      REQUIRE(q.color(q.upper_size()) == inverse(p.color(0)));
    }
    if (p.upper_size() == 0 && p.size() > 0) {
      Partition q = p;
      for (std::size_t i = 0; i < p.size(); ++i) {
        q = rotate(q, RotationKind::one_line_left_to_right);
      }
      REQUIRE(q == p);
      REQUIRE(rotate(rotate(p, RotationKind::one_line_left_to_right),
                     RotationKind::one_line_right_to_left)
              == p);
    }
  }
}

TEST_CASE("one-line form partition") {
  auto const p = P("wb|w|0,1,0");
  auto const q = to_one_line(p);
  CHECK(q.upper_size() == 0);
  CHECK(q == P("|wbw|0,1,1"));
}

TEST_CASE("erasing neighbours") {
  CHECK(erase_neighbours(P("|wb|0,1"), Row::lower, 0) == Partition{});
  CHECK(erase_neighbours(P("|wwbb|0,0,1,1"), Row::lower, 1) == P("|wb|0,0"));
  CHECK_THROWS_AS(erase_neighbours(P("|ww|0,0"), Row::lower, 0), ColorMismatch);
  CHECK_THROWS_AS(erase_neighbours(P("|wb|0,0"), Row::lower, 1), PartitionError);
}

TEST_CASE("erasure equals padded composition with a cap") {
  for (auto const& p : all_up_to(6)) {
    for (std::size_t i = 0; i + 1 < p.lower_size(); ++i) {
      Color const x = p.color(p.upper_size() + i);
      Color const y = p.color(p.upper_size() + i + 1);
      if (x == y) {
        continue;
      }
      auto const cap = make_partition({x, y}, {}, {0, 0});
      auto const got = erase_neighbours(p, Row::lower, i);
      REQUIRE(got.size() + 2 == p.size());
      REQUIRE(got == pad_compose(p, cap, i));
      // The same with explicit identities, through the union-find oracle.
      std::vector<Color> left(p.lower_colors().begin(),
                              p.lower_colors().begin() + i);
      std::vector<Color> right(p.lower_colors().begin() + i + 2,
                               p.lower_colors().end());
      auto const padded = tensor(tensor(identities(left), cap),
                                 identities(right));
      REQUIRE(got == oracle::compose(p, padded));
    }
    for (std::size_t i = 0; i + 1 < p.upper_size(); ++i) {
      if (p.color(i) == p.color(i + 1)) {
        continue;
      }
      REQUIRE(erase_neighbours(p, Row::upper, i)
              == involution(erase_neighbours(involution(p), Row::lower, i)));
    }
  }
}

TEST_CASE("padded composition") {
  CHECK(pad_compose(P("|wwbb|0,0,1,1"), P("wb||0,0"), 1) == P("|wb|0,0"));
  CHECK(pad_compose(P("|wbwb|0,0,0,0"), P("bw||0,0"), 1) == P("|wb|0,0"));
  auto const q = P("|wbbw|0,1,1,0");
  for (std::size_t offset = 0; offset < 4; ++offset) {
    std::vector<Color> window(q.lower_colors().begin() + offset,
                              q.lower_colors().end());
    CHECK(pad_compose(q, identities(window), offset) == q);
  }
  CHECK_THROWS_AS(pad_compose(P("|wwbb|0,0,1,1"), P("ww||0,0"), 1),
                  ColorMismatch);
}

TEST_CASE("insertion between legs") {
  CHECK(insert_between_legs(P("|wb|0,0"), P("|wb|0,1"), 1) == P("|wwbb|0,1,2,0"));
  CHECK(insert_between_legs(P("|ww|0,0"), P("|bb|0,0"), 1) == P("|wbbw|0,1,1,0"));
  for (std::size_t gap = 0; gap <= 3; ++gap) {
    CHECK(insert_between_legs(P("|wbw|0,1,0"), Partition{}, gap)
          == P("|wbw|0,1,0"));
  }
  CHECK_THROWS_AS(insert_between_legs(P("w|w|0,0"), P("|wb|0,0"), 0),
                  PartitionError);
}

TEST_CASE("base partitions") {
  auto const base = base_partitions();
  CHECK(base.size() == 4);
  CHECK(std::ranges::find(base, P("|wb|0,0")) != base.end());
  CHECK(std::ranges::find(base, P("|bw|0,0")) != base.end());
  CHECK(std::ranges::find(base, P("w|w|0,0")) != base.end());
  CHECK(std::ranges::find(base, P("b|b|0,0")) != base.end());
  for (auto const& p : base) {
    CHECK(is_noncrossing(p));
  }
  CHECK(identity(std::vector<Color>{w, b}) == P("wb|wb|0,1,0,1"));
}

TEST_CASE("derived rewrites") {
  CHECK(derived_rewrite(P("|wwbb|0,0,0,0"), rewrite::DisconnectPoint{3})
        == P("|wwbb|0,0,0,1"));
  CHECK(derived_rewrite(P("|wwbb|0,0,1,1"), rewrite::ConnectAdjacentBlocks{2})
        == P("|wwbb|0,0,0,0"));
  // The singleton moves to the end of the row.
  CHECK(derived_rewrite(P("|wwb|0,1,1"), rewrite::ShiftSingleton{0, 2})
        == P("|wbw|0,0,1"));
  // X a b Y becomes X b⁻¹ a⁻¹ Y: the legs swap, the row colors stay.
  CHECK(derived_rewrite(P("|wbb|0,1,1"), rewrite::SwapSingletonInvert{0})
        == P("|wbb|0,1,0"));
  CHECK(derived_rewrite(P("|wb|0,1"), rewrite::SwapSingletonInvert{0})
        == P("|wb|0,1"));
  CHECK_THROWS_AS(derived_rewrite(P("|wbwb|0,0,1,1"),
                                  rewrite::SwapSingletonInvert{1}),
                  PartitionError);
  CHECK_THROWS_AS(derived_rewrite(P("|wwb|0,0,1"),
                                  rewrite::ShiftSingleton{0, 2}),
                  PartitionError);
  CHECK_THROWS_AS(derived_rewrite(P("|wwb|0,1,1"), rewrite::DisconnectPoint{5}),
                  PartitionError);
}

TEST_CASE("noncrossing is preserved by the operations") {
  std::vector<Partition> nc;
  for (auto const& p : all_up_to(5)) {
    if (is_noncrossing(p)) {
      nc.push_back(p);
    }
  }
  for (auto const& p : nc) {
    REQUIRE(is_noncrossing(involution(p)));
    REQUIRE(is_noncrossing(verticolor_reflection(p)));
    REQUIRE(is_noncrossing(vertical_reflection(p)));
    if (p.upper_size() > 0) {
      REQUIRE(is_noncrossing(rotate(p, RotationKind::upper_left_down)));
      REQUIRE(is_noncrossing(rotate(p, RotationKind::upper_right_down)));
    }
    for (std::size_t i = 0; i + 1 < p.lower_size(); ++i) {
      if (p.color(p.upper_size() + i) != p.color(p.upper_size() + i + 1)) {
        REQUIRE(is_noncrossing(erase_neighbours(p, Row::lower, i)));
      }
    }
    if (p.size() <= 3) {
      for (auto const& q : nc) {
        if (q.size() <= 3) {
          REQUIRE(is_noncrossing(tensor(p, q)));
        }
        if (std::ranges::equal(q.lower_colors(), p.upper_colors())) {
          REQUIRE(is_noncrossing(compose(q, p)));
        }
        if (p.upper_size() == 0 && q.upper_size() == 0) {
          for (std::size_t gap = 0; gap <= p.lower_size(); ++gap) {
            REQUIRE(is_noncrossing(insert_between_legs(p, q, gap)));
          }
        }
      }
    }
  }
}
