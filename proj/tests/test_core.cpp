#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pcat/partition.hpp"

using namespace pcat;

namespace {
  constexpr Color w = Color::white;
  constexpr Color b = Color::black;
}  // namespace

TEST_CASE("color inverse is an involution") {
  CHECK(inverse(w) == b);
  CHECK(inverse(b) == w);
  CHECK(inverse(inverse(w)) == w);
}

TEST_CASE("make_partition relabels to first occurrence") {
  auto const pair = make_partition({}, {w, b}, {0, 0});
  CHECK(pair.profile() == Profile{0, 2});
  CHECK(pair.number_of_blocks() == 1);
  CHECK(format_text(pair) == "|wb|0,0");

  auto const id = make_partition({w}, {w}, {0, 0});
  CHECK(format_text(id) == "w|w|0,0");

  CHECK(make_partition({}, {w, w, b, b}, {7, 7, 3, 3})
        == make_partition({}, {w, w, b, b}, {0, 0, 1, 1}));
  CHECK(format_text(make_partition({}, {w, b, w}, {5, 2, 5})) == "|wbw|0,1,0");

  CHECK_THROWS_AS(make_partition({}, {w, b}, {0}), PartitionError);
  CHECK(Partition{}.empty());
  CHECK(format_text(Partition{}) == "||");
  CHECK(parse_text("||") == Partition{});
}

TEST_CASE("canonical form is idempotent and label independent") {
  for (auto const& p : oracle::all(1, 3)) {
    auto r = oracle::raw(p);
    for (auto& id : r.ids) {
      id = 10 - 3 * id;
    }
    CHECK(oracle::make(r) == p);
    CHECK(oracle::make(oracle::raw(p)) == p);
  }
}

TEST_CASE("noncrossing examples") {
  CHECK_FALSE(is_noncrossing(parse_text("ww|ww|0,1,1,0")));
  CHECK(is_noncrossing(parse_text("|wwbb|0,0,1,1")));
  CHECK_FALSE(is_noncrossing(parse_text("|wbwb|0,1,0,1")));
  CHECK(is_noncrossing(parse_text("ww|ww|0,1,0,1")));
  CHECK(is_noncrossing(Partition{}));
}

TEST_CASE("noncrossing agrees with the four-point pattern oracle") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; k += (n > 6 ? 4 : 1)) {
      // Colors do not matter for crossing; one coloring per shape.
      oracle::for_each_rgs(n, [&](std::vector<std::size_t> const& ids) {
        std::vector<Color> upper(k, w), lower(n - k, b);
        auto const         p = make_partition(upper, lower, ids);
        REQUIRE(is_noncrossing(p) == oracle::noncrossing(p));
      });
    }
  }
}

TEST_CASE("block profile") {
  CHECK(block_profile(parse_text("|wbwb|0,0,0,0")) == std::vector<std::size_t>{4});
  CHECK(block_profile(parse_text("|wb|0,1")) == std::vector<std::size_t>{1, 1});
  CHECK(block_profile(Partition{}).empty());
  CHECK(block_profile(parse_text("w|wbw|0,1,1,0")) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("text format") {
  auto const pair = parse_text("|wb|0,0");
  CHECK(pair == make_partition({}, {w, b}, {0, 0}));
  auto const cross = parse_text("ww|ww|0,1,1,0");
  CHECK(cross.upper_size() == 2);
  CHECK(cross.block(0) == cross.block(3));
  CHECK(format_text(parse_text("|wwbb|0,0,1,1")) == "|wwbb|0,0,1,1");
  // Output is normalized.
  CHECK(format_text(parse_text("|wb|3,3")) == "|wb|0,0");

  CHECK_THROWS_AS(parse_text("|wx|0,0"), PartitionError);
  CHECK_THROWS_AS(parse_text("|wb|0"), PartitionError);
  CHECK_THROWS_AS(parse_text("|wb|0,0,0"), PartitionError);
  CHECK_THROWS_AS(parse_text("wb0,0"), PartitionError);
  CHECK_THROWS_AS(parse_text("|wb|0,,0"), PartitionError);
  CHECK_THROWS_AS(parse_text("|w|b|0,0"), PartitionError);
}

TEST_CASE("text round trip on all partitions up to six points") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (auto const& p : oracle::all(k, n - k)) {
        REQUIRE(parse_text(format_text(p)) == p);
      }
    }
  }
}

TEST_CASE("word notation") {
  CHECK(format_word(parse_text("|wwbb|0,0,1,1")) == "a a b b");
  CHECK(format_word(parse_text("|wwbb|0,0,0,0")) == "a a a⁻¹ a⁻¹");
  CHECK(format_word(parse_text("|wwwb|0,1,2,1")) == "a b c b⁻¹");
  CHECK_THROWS_AS(format_word(parse_text("w|w|0,0")), PartitionError);
}

TEST_CASE("one-line form") {
  auto const p = parse_text("wb|w|0,1,0");
  // Upper row reversed with inverted colors, then the lower row.
  CHECK(one_line_colors(p) == std::vector<Color>{w, b, w});
  auto const blocks = one_line_blocks(p);
  CHECK(blocks[0] != blocks[1]);
  CHECK(blocks[1] == blocks[2]);
}

TEST_CASE("ordering is by points, then upper count, then colors") {
  std::set<Partition> s{parse_text("|wb|0,0"), parse_text("w|w|0,0"),
                        parse_text("|ww|0,0"), parse_text("|w|0")};
  std::vector<std::string> order;
  for (auto const& p : s) {
    order.push_back(format_text(p));
  }
  CHECK(order == std::vector<std::string>{"|w|0", "|ww|0,0", "|wb|0,0",
                                          "w|w|0,0"});
}
