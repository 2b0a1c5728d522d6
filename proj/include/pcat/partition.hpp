#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcat {

  enum class Color : std::uint8_t { white = 0, black = 1 };

  constexpr Color inverse(Color c) noexcept {
    return c == Color::white ? Color::black : Color::white;
  }

  constexpr char to_char(Color c) noexcept {
    return c == Color::white ? 'w' : 'b';
  }

  enum class Row : std::uint8_t { upper, lower };

  struct Profile {
    std::size_t upper = 0;
    std::size_t lower = 0;

    std::size_t points() const noexcept {
      return upper + lower;
    }
    auto operator<=>(Profile const&) const = default;
  };

  // Thrown for malformed input to any partition constructor or operation.
  class PartitionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A two-colored set partition of k upper and l lower points. Points are
  // indexed in reading order: upper row left to right, then lower row left to
  // right. Block ids are always in first-occurrence order, so two values
  // compare equal exactly when they describe the same partition.
  class Partition {
   public:
    static constexpr std::size_t max_points = 255;

    Partition() = default;

    Profile profile() const noexcept {
      return {_upper, _colors.size() - _upper};
    }
    std::size_t upper_size() const noexcept {
      return _upper;
    }
    std::size_t lower_size() const noexcept {
      return _colors.size() - _upper;
    }
    std::size_t size() const noexcept {
      return _colors.size();
    }
    bool empty() const noexcept {
      return _colors.empty();
    }
    std::size_t number_of_blocks() const noexcept {
      return _nr_blocks;
    }

    Color color(std::size_t i) const {
      return _colors.at(i);
    }
    std::size_t block(std::size_t i) const {
      return _blocks.at(i);
    }
    std::span<Color const> colors() const noexcept {
      return _colors;
    }
    std::span<std::uint8_t const> blocks() const noexcept {
      return _blocks;
    }
    std::span<Color const> upper_colors() const noexcept {
      return std::span<Color const>(_colors).first(_upper);
    }
    std::span<Color const> lower_colors() const noexcept {
      return std::span<Color const>(_colors).subspan(_upper);
    }

    // Reading-order index of the i-th point of a row.
    std::size_t index(Row row, std::size_t i) const noexcept {
      return row == Row::upper ? i : _upper + i;
    }

    // Order: total points, then upper count, then colors (white first), then
    // block ids.
    std::strong_ordering operator<=>(Partition const& that) const;
    bool operator==(Partition const&) const = default;

    friend Partition make_partition(std::span<Color const>,
                                    std::span<Color const>,
                                    std::span<std::size_t const>);

   private:
    std::size_t               _upper = 0;
    std::size_t               _nr_blocks = 0;
    std::vector<Color>        _colors;
    std::vector<std::uint8_t> _blocks;
  };

  // Builds a partition from arbitrary block labels; labels are renumbered to
  // first-occurrence order.
  Partition make_partition(std::span<Color const>       upper,
                           std::span<Color const>       lower,
                           std::span<std::size_t const> block_ids);

  Partition make_partition(std::vector<Color> const&       upper,
                           std::vector<Color> const&       lower,
                           std::vector<std::size_t> const& block_ids);

  // Color string over {w,b}; throws on any other character.
  std::vector<Color> parse_colors(std::string_view text);

  Partition   parse_text(std::string_view text);
  std::string format_text(Partition const& p);

  // Word notation for partitions without upper points: one letter per block,
  // in first-occurrence order, with an exponent -1 on points whose color is
  // inverse to the first point of the block.
  std::string format_word(Partition const& p);

  // Colors and blocks of the one-line form: upper points reversed with
  // inverted colors, followed by the lower points.
  std::vector<Color>       one_line_colors(Partition const& p);
  std::vector<std::size_t> one_line_blocks(Partition const& p);

  bool is_noncrossing(Partition const& p);

  // Block sizes in ascending order.
  std::vector<std::size_t> block_profile(Partition const& p);

  // Sizes indexed by block id.
  std::vector<std::size_t> block_sizes(Partition const& p);

}  // namespace pcat
