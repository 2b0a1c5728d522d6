#pragma once

// Independent reference implementations used as test oracles. They work on
// plain vectors and share no code with the library beyond the Partition
// accessors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "pcat/partition.hpp"

namespace oracle {

  using pcat::Color;
  using pcat::Partition;

  struct Raw {
    std::vector<Color>       upper, lower;
    std::vector<std::size_t> ids;  // reading order, any labels
  };

  inline Raw raw(Partition const& p) {
    Raw r;
    r.upper.assign(p.upper_colors().begin(), p.upper_colors().end());
    r.lower.assign(p.lower_colors().begin(), p.lower_colors().end());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r.ids.push_back(p.block(i));
    }
    return r;
  }

  inline Partition make(Raw const& r) {
    return pcat::make_partition(r.upper, r.lower, r.ids);
  }

  inline Color flip(Color c) {
    return c == Color::white ? Color::black : Color::white;
  }

  // Points around the boundary: upper row right to left with inverted
  // colors, then the lower row left to right.
  inline std::pair<std::vector<Color>, std::vector<std::size_t>>
  one_line(Raw const& r) {
    std::vector<Color>       colors;
    std::vector<std::size_t> ids;
    for (std::size_t i = r.upper.size(); i-- > 0;) {
      colors.push_back(flip(r.upper[i]));
      ids.push_back(r.ids[i]);
    }
    for (std::size_t j = 0; j < r.lower.size(); ++j) {
      colors.push_back(r.lower[j]);
      ids.push_back(r.ids[r.upper.size() + j]);
    }
    return {colors, ids};
  }

  // No a < b < c < d with a, c in one block and b, d in another.
  inline bool noncrossing(std::vector<std::size_t> const& ids) {
    std::size_t const n = ids.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t d = c + 1; d < n; ++d) {
            if (ids[a] == ids[c] && ids[b] == ids[d] && ids[a] != ids[b]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  inline bool noncrossing(Partition const& p) {
    return noncrossing(one_line(raw(p)).second);
  }

  inline std::int64_t c_of(Partition const& p) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool const white = p.color(i) == Color::white;
      bool const upper = i < p.upper_size();
      c += (white != upper) ? 1 : -1;
    }
    return c;
  }

  // All restricted growth strings of length n.
  inline void for_each_rgs(std::size_t n,
                           std::function<void(std::vector<std::size_t> const&)> const& f) {
    std::vector<std::size_t> s(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t m) {
      if (i == n) {
        f(s);
        return;
      }
      for (std::size_t v = 0; v <= m; ++v) {
        s[i] = v;
        rec(i + 1, std::max(m, v + 1));
      }
    };
    rec(0, 0);
  }

  // Every partition with the given profile, in no particular order.
  inline std::vector<Partition> all(std::size_t k, std::size_t l) {
    std::vector<Partition> out;
    std::size_t const      n = k + l;
    for_each_rgs(n, [&](std::vector<std::size_t> const& ids) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Raw r;
        for (std::size_t i = 0; i < n; ++i) {
          Color c = (mask >> i) & 1 ? Color::black : Color::white;
          (i < k ? r.upper : r.lower).push_back(c);
        }
        r.ids = ids;
        out.push_back(make(r));
      }
    });
    return out;
  }

  inline std::uint64_t bell(std::size_t n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto v : row) {
        next.push_back(next.back() + v);
      }
      row = next;
    }
    return row.front();
  }

  inline std::uint64_t catalan(std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t i = 0; i < m; ++i) {
        c[m] += c[i] * c[m - 1 - i];
      }
    }
    return c[n];
  }

  // Union-find composition: q on top of p, middle points removed.
  inline Partition compose(Partition const& q, Partition const& p) {
    std::size_t const top = q.upper_size(), mid = q.lower_size(),
                      bottom = p.lower_size();
    // Nodes: top points, middle points, bottom points.
    std::vector<std::size_t> parent(top + mid + bottom);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      parent[find(a)] = find(b);
    };
    auto link_blocks = [&](Partition const& part,
                           std::function<std::size_t(std::size_t)> node) {
      std::map<std::size_t, std::size_t> first;
      for (std::size_t i = 0; i < part.size(); ++i) {
        auto [it, fresh] = first.emplace(part.block(i), node(i));
        if (!fresh) {
          unite(it->second, node(i));
        }
      }
    };
    link_blocks(q, [&](std::size_t i) { return i; });
    link_blocks(p, [&](std::size_t i) {
      return i < mid ? top + i : top + mid + (i - mid);
    });
    Raw r;
    r.upper.assign(q.upper_colors().begin(), q.upper_colors().end());
    r.lower.assign(p.lower_colors().begin(), p.lower_colors().end());
    for (std::size_t i = 0; i < top; ++i) {
      r.ids.push_back(find(i));
    }
    for (std::size_t j = 0; j < bottom; ++j) {
      r.ids.push_back(find(top + mid + j));
    }
    return make(r);
  }

  // Literal scan of nest decompositions: every cyclic rotation of the one
  // line, split after i points, outer part nonempty and a union of blocks,
  // inner part with at least two points and its ends in one block.
  // Entries are (first color, last color, c of outer part).
  inline std::set<std::tuple<Color, Color, std::int64_t>>
  nest_decompositions(std::vector<Color> const&       colors,
                      std::vector<std::size_t> const& ids) {
    std::set<std::tuple<Color, Color, std::int64_t>> out;
    std::size_t const n = colors.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
      std::vector<Color>       c(n);
      std::vector<std::size_t> b(n);
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = colors[(i + shift) % n];
        b[i] = ids[(i + shift) % n];
      }
      for (std::size_t split = 1; split + 2 <= n; ++split) {
        if (b[split] != b[n - 1]) {
          continue;
        }
        bool closed = true;
        for (std::size_t i = 0; i < split && closed; ++i) {
          for (std::size_t j = split; j < n; ++j) {
            if (b[i] == b[j]) {
              closed = false;
              break;
            }
          }
        }
        if (!closed) {
          continue;
        }
        std::int64_t v = 0;
        for (std::size_t i = 0; i < split; ++i) {
          v += c[i] == Color::white ? 1 : -1;
        }
        out.emplace(c[split], c[n - 1], v);
      }
    }
    return out;
  }

  inline auto nest_decompositions(Partition const& p) {
    auto [colors, ids] = one_line(raw(p));
    return nest_decompositions(colors, ids);
  }

  inline bool in_progression(std::int64_t v, std::int64_t modulus,
                             std::int64_t offset) {
    return modulus == 0 ? v == offset : (v - offset) % modulus == 0;
  }

  // Literal scans of p with ⊓wb inserted at every cyclic position of its one
  // line. Categories are closed under rotation and tensor products, so each
  // of these is a member together with p.
  inline std::set<std::tuple<Color, Color, std::int64_t>>
  padded_nest_decompositions(Partition const& p) {
    auto [colors, ids] = one_line(raw(p));
    std::set<std::tuple<Color, Color, std::int64_t>> out;
    for (std::size_t at = 0; at <= colors.size(); ++at) {
      auto c = colors;
      auto b = ids;
      c.insert(c.begin() + at, {Color::white, Color::black});
      b.insert(b.begin() + at, {p.size(), p.size()});
      out.merge(nest_decompositions(c, b));
    }
    return out;
  }

  // S_loc(k,d) and the B' conditions with offset same_offset.
  inline bool s_loc(Partition const& p, std::int64_t k, std::int64_t d,
                    std::int64_t same_offset = 1) {
    if (!noncrossing(p) || !in_progression(c_of(p), k, 0)) {
      return false;
    }
    for (auto [first, last, v] : padded_nest_decompositions(p)) {
      bool ok = true;
      if (first != last) {
        ok = in_progression(v, d, 0);
      } else if (first == Color::black) {
        ok = in_progression(v, d, same_offset);
      } else {
        ok = in_progression(-v, d, same_offset);
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  inline std::vector<std::size_t> block_sizes(Partition const& p) {
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t i = 0; i < p.size(); ++i) {
      ++sizes[p.block(i)];
    }
    std::vector<std::size_t> out;
    for (auto [b, s] : sizes) {
      out.push_back(s);
    }
    return out;
  }

}  // namespace oracle
