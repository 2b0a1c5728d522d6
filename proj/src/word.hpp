#pragma once

// Packed one-line partitions with at most 16 points, used by the closure
// engine and the batch predicate sweeps.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat::detail {

  inline constexpr std::size_t max_word_points = 16;

  struct Word {
    std::uint64_t blocks = 0;  // 4 bits per point, point 0 lowest
    std::uint32_t colors = 0;  // bit i set: point i is black
    std::uint32_t n      = 0;

    bool operator==(Word const&) const = default;

    template <typename H>
    friend H AbslHashValue(H h, Word const& w) {
      return H::combine(std::move(h), w.blocks, w.colors, w.n);
    }
  };

  // Unpacked form for manipulation.
  struct Points {
    std::array<std::uint8_t, 2 * max_word_points> block{};
    std::array<std::uint8_t, 2 * max_word_points> color{};  // 0 white
    std::uint32_t                                 n = 0;
  };

  inline Points unpack(Word const& w) {
    Points p;
    p.n = w.n;
    for (std::uint32_t i = 0; i < w.n; ++i) {
      p.block[i] = static_cast<std::uint8_t>((w.blocks >> (4 * i)) & 0xF);
      p.color[i] = static_cast<std::uint8_t>((w.colors >> i) & 1);
    }
    return p;
  }

  // Packs points given in any labelling; labels are renumbered by first
  // occurrence. Labels must be < 64.
  inline Word pack(std::uint8_t const* block, std::uint8_t const* color,
                   std::uint32_t n) {
    std::array<std::uint8_t, 64> relabel;
    relabel.fill(0xFF);
    std::uint8_t next = 0;
    Word         w;
    w.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
      auto& r = relabel[block[i]];
      if (r == 0xFF) {
        r = next++;
      }
      w.blocks |= std::uint64_t(r) << (4 * i);
      w.colors |= std::uint32_t(color[i]) << i;
    }
    return w;
  }

  inline Word pack(Points const& p) {
    return pack(p.block.data(), p.color.data(), p.n);
  }

  inline std::uint32_t low_mask(std::uint32_t n) {
    return n >= 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;
  }

  // Colors of the cyclic rotation starting at point r.
  inline std::uint32_t rotate_colors(std::uint32_t colors, std::uint32_t n,
                                     std::uint32_t r) {
    if (r == 0) {
      return colors;
    }
    return ((colors >> r) | (colors << (n - r))) & low_mask(n);
  }

  inline std::uint32_t reverse_bits(std::uint32_t colors, std::uint32_t n) {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      out |= ((colors >> i) & 1) << (n - 1 - i);
    }
    return out;
  }

  // The verticolor reflection of a one-line word: reversed with inverted
  // colors.
  inline Points reflect(Points const& p) {
    Points q;
    q.n = p.n;
    for (std::uint32_t i = 0; i < p.n; ++i) {
      q.block[i] = p.block[p.n - 1 - i];
      q.color[i] = p.color[p.n - 1 - i] ^ 1;
    }
    return q;
  }

  // Minimum over all cyclic rotations and verticolor reflections, comparing
  // colors first and blocks second.
  inline Word canonical(Points const& p) {
    std::uint32_t const n = p.n;
    if (n == 0) {
      return Word{};
    }
    Word const    plain = pack(p);
    std::uint32_t const reflected_colors
        = reverse_bits(plain.colors, n) ^ low_mask(n);
    std::uint32_t best_colors = ~std::uint32_t(0);
    for (std::uint32_t r = 0; r < n; ++r) {
      best_colors = std::min(best_colors, rotate_colors(plain.colors, n, r));
      best_colors
          = std::min(best_colors, rotate_colors(reflected_colors, n, r));
    }
    std::uint64_t best_blocks = ~std::uint64_t(0);
    std::array<std::uint8_t, 2 * max_word_points> block{}, color{};
    for (int side = 0; side < 2; ++side) {
      std::uint32_t const base = side == 0 ? plain.colors : reflected_colors;
      for (std::uint32_t r = 0; r < n; ++r) {
        if (rotate_colors(base, n, r) != best_colors) {
          continue;
        }
        for (std::uint32_t i = 0; i < n; ++i) {
          std::uint32_t src = (i + r) % n;
          if (side == 1) {
            src = n - 1 - src;
          }
          block[i] = p.block[src];
          color[i] = 0;
        }
        Word w = pack(block.data(), color.data(), n);
        best_blocks = std::min(best_blocks, w.blocks);
      }
    }
    return Word{best_blocks, best_colors, n};
  }

  inline Word canonical(Word const& w) {
    return canonical(unpack(w));
  }

  // All distinct one-line words in the orbit of w.
  std::vector<Word> orbit(Word const& w);

  Word      word_of(Partition const& p);  // one-line form, not canonical
  Partition partition_of(Word const& w, std::size_t upper = 0);

}  // namespace pcat::detail
