#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pcat/closure.hpp"
#include "pcat/partition.hpp"

namespace pcat {

  struct ColorCount {
    std::int64_t c_white = 0;  // lower whites + upper blacks
    std::int64_t c_black = 0;  // lower blacks + upper whites
    std::int64_t c       = 0;

    bool operator==(ColorCount const&) const = default;
  };

  ColorCount color_counts(Partition const& p);

  // Colors of the first and last point of the inner factor.
  enum class EndpointColors : std::uint8_t { wb, bw, ww, bb };

  inline constexpr std::array<EndpointColors, 4> all_endpoint_colors{
      EndpointColors::wb, EndpointColors::bw, EndpointColors::ww,
      EndpointColors::bb};

  char const* to_string(EndpointColors e) noexcept;

  struct NestDecomposition {
    EndpointColors ends;
    std::int64_t   c_outer;  // c of the outer factor

    auto operator<=>(NestDecomposition const&) const = default;
  };

  // All distinct (endpoint colors, c of outer factor) over every rotation of
  // the one-line form written as outer ⊗ inner, outer nonempty, inner with
  // its first and last point in one block.
  std::vector<NestDecomposition> ndf_scan(Partition const& p);

  // Same scan on a one-line form given as colors and block ids; calls f for
  // every decomposition (duplicates included).
  template <typename F>
  void for_each_nest_decomposition(std::span<Color const>       colors,
                                   std::span<std::size_t const> blocks,
                                   F&&                          f);

  // An arithmetic progression modulus·ℤ + offset fitted to observed values.
  struct Progression {
    bool         empty = true;
    std::int64_t modulus = 0;
    std::int64_t offset = 0;
    // Observed values fill the progression between their minimum and
    // maximum.
    bool consistent = true;

    bool operator==(Progression const&) const = default;
  };

  Progression fit_progression(std::set<std::int64_t> const& values);

  struct KSets {
    std::map<EndpointColors, std::set<std::int64_t>> observed;
    std::map<EndpointColors, Progression>            fitted;

    std::set<std::int64_t> const& at(EndpointColors e) const;
  };

  enum class Case : std::uint8_t { O, H, S, B };
  enum class Colorization : std::uint8_t { global, local };

  char const* to_string(Case c) noexcept;
  char const* to_string(Colorization c) noexcept;

  struct CategorySignature {
    Case                         kase = Case::O;
    Colorization                 colorization = Colorization::local;
    std::int64_t                 k_hat = 0;
    std::int64_t                 d_hat = 0;
    std::optional<std::int64_t>  r_hat;
    KSets                        ksets;
    bool                         stabilized = false;
    // The closure neither completed its composition phase nor reached a
    // known upper bound, so k_hat and d_hat may over-estimate.
    bool                         truncated = false;
  };

  std::int64_t                k_of(ClosureSet const& cs);
  KSets                       k_sets(ClosureSet const& cs);
  std::int64_t                d_of(ClosureSet const& cs);
  std::optional<std::int64_t> r_of(ClosureSet const& cs);
  CategorySignature           signature(ClosureSet const& cs);

  // key=value lines.
  std::string format_signature(CategorySignature const& s);

  // Same blocks with every point white.
  Partition forget_colors(Partition const& p);

  // One block of |s| points, all white for s > 0 and all black for s < 0;
  // empty for s = 0.
  Partition block_partition(std::int64_t s);

  ///////////////////////////////////////////////////////////////////////////
  // Implementation
  ///////////////////////////////////////////////////////////////////////////

  template <typename F>
  void for_each_nest_decomposition(std::span<Color const>       colors,
                                   std::span<std::size_t const> blocks,
                                   F&&                          f) {
    std::size_t const n = colors.size();
    if (n < 3) {
      return;
    }
    std::size_t nr_blocks = 0;
    for (auto b : blocks) {
      nr_blocks = std::max(nr_blocks, b + 1);
    }
    // prefix[i] = c of points 0..i-1
    std::vector<std::int64_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i + 1] = prefix[i] + (colors[i] == Color::white ? 1 : -1);
    }
    std::vector<std::vector<std::size_t>> legs(nr_blocks);
    for (std::size_t i = 0; i < n; ++i) {
      legs[blocks[i]].push_back(i);
    }
    // The outer factor has to be a union of blocks.
    auto gap_is_closed = [&](std::size_t from, std::size_t len) {
      for (std::size_t t = 0; t < len; ++t) {
        std::size_t const b = blocks[(from + t) % n];
        for (auto leg : legs[b]) {
          std::size_t offset = (leg + n - from) % n;
          if (offset >= len) {
            return false;
          }
        }
      }
      return true;
    };
    auto c_of_gap = [&](std::size_t from, std::size_t len) {
      std::size_t const to = from + len;
      if (to <= n) {
        return prefix[to] - prefix[from];
      }
      return (prefix[n] - prefix[from]) + prefix[to - n];
    };
    for (auto const& block : legs) {
      std::size_t const m = block.size();
      if (m < 2) {
        continue;
      }
      for (std::size_t t = 0; t < m; ++t) {
        std::size_t const last  = block[t];
        std::size_t const first = block[(t + 1) % m];
        std::size_t const len   = (first + n - last - 1) % n;
        if (len == 0) {
          continue;
        }
        std::size_t const from = (last + 1) % n;
        if (!gap_is_closed(from, len)) {
          continue;
        }
        EndpointColors ends;
        Color const    a = colors[first], z = colors[last];
        if (a == Color::white) {
          ends = z == Color::white ? EndpointColors::ww : EndpointColors::wb;
        } else {
          ends = z == Color::white ? EndpointColors::bw : EndpointColors::bb;
        }
        f(NestDecomposition{ends, c_of_gap(from, len)});
      }
    }
  }

}  // namespace pcat
