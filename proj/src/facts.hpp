#pragma once

// Color-independent structure of a one-line partition and the facts the
// membership predicates read, so that many colorings and many families can
// be tested cheaply.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "pcat/analysis.hpp"
#include "pcat/partition.hpp"
#include "pcat/taxonomy.hpp"

namespace pcat::detail {

  struct Gap {
    std::uint32_t from;   // first point of the outer factor
    std::uint32_t len;    // its length, zero between neighbouring legs
    std::uint32_t first;  // first point of the inner factor
    std::uint32_t last;   // last point of the inner factor
  };

  struct Shape {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> block;
    bool          noncrossing = true;
    std::uint32_t min_block = 0;
    std::uint32_t max_block = 0;
    bool          all_even = true;
    // Every pair block has an even number of points between its legs.
    bool pair_gaps_even = true;
    // Cyclically consecutive legs of each block with at least two legs.
    std::vector<std::array<std::uint32_t, 2>> neighbours;
    // Legs of the pair blocks.
    std::vector<std::array<std::uint32_t, 2>> pairs;
    // Every nest decomposition of p ⊗ ⊓wb, i.e. including the empty outer
    // factor between neighbouring legs. Membership must be stable under
    // tensoring with ⊓wb, the literal reading with nonempty outer factor
    // is not.
    std::vector<Gap> gaps;
  };

  inline Shape shape_of(std::span<std::size_t const> blocks) {
    Shape s;
    s.n = static_cast<std::uint32_t>(blocks.size());
    s.block.assign(blocks.begin(), blocks.end());
    std::uint32_t nr_blocks = 0;
    for (auto b : s.block) {
      nr_blocks = std::max(nr_blocks, b + 1);
    }
    std::vector<std::vector<std::uint32_t>> legs(nr_blocks);
    for (std::uint32_t i = 0; i < s.n; ++i) {
      legs[s.block[i]].push_back(i);
    }
    // A block is closed on the cyclic interval when none of its legs lies
    // outside. Track the open blocks with a stack on the linear order.
    std::vector<std::uint32_t> seen(nr_blocks, 0), stack;
    for (std::uint32_t i = 0; i < s.n && s.noncrossing; ++i) {
      std::uint32_t const b = s.block[i];
      if (seen[b] > 0) {
        while (!stack.empty() && stack.back() != b) {
          if (seen[stack.back()] != legs[stack.back()].size()) {
            s.noncrossing = false;
            break;
          }
          stack.pop_back();
        }
      } else {
        stack.push_back(b);
      }
      ++seen[b];
    }
    if (nr_blocks > 0) {
      s.min_block = s.n;
    }
    for (auto const& l : legs) {
      auto const m = static_cast<std::uint32_t>(l.size());
      s.min_block  = std::min(s.min_block, m);
      s.max_block  = std::max(s.max_block, m);
      s.all_even   = s.all_even && m % 2 == 0;
      if (m == 2) {
        s.pairs.push_back({l[0], l[1]});
        s.pair_gaps_even = s.pair_gaps_even && (l[1] - l[0] - 1) % 2 == 0;
      }
      if (m < 2) {
        continue;
      }
      for (std::uint32_t t = 0; t < m; ++t) {
        std::uint32_t const last  = l[t];
        std::uint32_t const first = l[(t + 1) % m];
        s.neighbours.push_back({last, first});
        std::uint32_t const len  = (first + s.n - last - 1) % s.n;
        std::uint32_t const from = (last + 1) % s.n;
        bool closed = true;
        for (std::uint32_t u = 0; u < len && closed; ++u) {
          for (auto leg : legs[s.block[(from + u) % s.n]]) {
            if ((leg + s.n - from) % s.n >= len) {
              closed = false;
              break;
            }
          }
        }
        if (closed) {
          s.gaps.push_back({from, len, first, last});
        }
      }
    }
    return s;
  }

  // The values c(p_1) of one endpoint class, summarized by the residues
  // they occupy: v = first + multiples of g for every observed v.
  struct ValueSet {
    bool         any = false;
    std::int64_t first = 0;
    std::int64_t g = 0;

    void insert(std::int64_t v) {
      if (!any) {
        any   = true;
        first = v;
      } else {
        g = std::gcd(g, v - first);
      }
    }

    // Every value lies in modulus·ℤ + offset.
    bool within(std::int64_t modulus, std::int64_t offset) const {
      if (!any) {
        return true;
      }
      if (modulus == 0) {
        return g == 0 && first == offset;
      }
      return (first - offset) % modulus == 0 && g % modulus == 0;
    }
  };

  struct Facts {
    Shape const* shape = nullptr;
    std::int64_t c = 0;
    // Cyclically consecutive legs of every block have inverse colors.
    bool alternating = true;
    bool pairs_bicolored = true;
    std::array<ValueSet, 4> ndf;  // indexed by EndpointColors

    ValueSet const& at(EndpointColors e) const {
      return ndf[static_cast<std::size_t>(e)];
    }
  };

  // colors[i] is 1 for black points of the one-line form.
  inline Facts facts_of(Shape const& s, std::uint8_t const* colors) {
    Facts f;
    f.shape = &s;
    std::array<std::int64_t, 257> prefix_small;
    std::vector<std::int64_t>     prefix_large;
    std::int64_t*                 prefix = prefix_small.data();
    if (s.n + 1 > prefix_small.size()) {
      prefix_large.resize(s.n + 1);
      prefix = prefix_large.data();
    }
    prefix[0] = 0;
    for (std::uint32_t i = 0; i < s.n; ++i) {
      prefix[i + 1] = prefix[i] + (colors[i] ? -1 : 1);
    }
    f.c = prefix[s.n];
    for (auto const& [a, b] : s.neighbours) {
      if (colors[a] == colors[b]) {
        f.alternating = false;
        break;
      }
    }
    for (auto const& [a, b] : s.pairs) {
      if (colors[a] == colors[b]) {
        f.pairs_bicolored = false;
        break;
      }
    }
    for (auto const& gap : s.gaps) {
      std::uint32_t const to = gap.from + gap.len;
      std::int64_t const  c  = to <= s.n
                                   ? prefix[to] - prefix[gap.from]
                                   : (prefix[s.n] - prefix[gap.from])
                                         + prefix[to - s.n];
      std::size_t const e = colors[gap.first] == 0
                                ? (colors[gap.last] == 0 ? 2 : 0)
                                : (colors[gap.last] == 0 ? 1 : 3);
      f.ndf[e].insert(c);
    }
    return f;
  }

  inline bool in_multiples(std::int64_t v, std::int64_t k) {
    return k == 0 ? v == 0 : v % k == 0;
  }

  // The explicit description of a noncrossing family with fixed
  // parameters, evaluated on the facts of a noncrossing one-line form.
  struct Predicate {
    Family       family = Family::O_loc;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t r = 0;

    bool operator()(Facts const& x) const;
  };

  // The description of the family after normalization; throws for
  // group-case families.
  Predicate compile(NamedCategory const& family);
  // The formula of the family's own parameters, without normalization.
  Predicate compile_raw(NamedCategory const& family);

}  // namespace pcat::detail
