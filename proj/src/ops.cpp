#include "pcat/ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pcat {

  namespace {

    // Mutable point list used while building results.
    struct Points {
      std::vector<Color>       upper;
      std::vector<Color>       lower;
      std::vector<std::size_t> ids;  // reading order

      explicit Points(Partition const& p)
          : upper(p.upper_colors().begin(), p.upper_colors().end()),
            lower(p.lower_colors().begin(), p.lower_colors().end()),
            ids(p.blocks().begin(), p.blocks().end()) {}

      Points() = default;

      Partition build() const {
        return make_partition(upper, lower, ids);
      }
    };

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x = _parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    std::vector<Color> inverted(std::span<Color const> colors) {
      std::vector<Color> out(colors.begin(), colors.end());
      for (auto& c : out) {
        c = inverse(c);
      }
      return out;
    }

    void check_row_index(Partition const& p, Row row, std::size_t index,
                         std::size_t width) {
      std::size_t row_size
          = row == Row::upper ? p.upper_size() : p.lower_size();
      if (index + width > row_size) {
        throw PartitionError("point index " + std::to_string(index)
                             + " out of range for a row of "
                             + std::to_string(row_size) + " points");
      }
    }

    Row row_of(Partition const& p, std::size_t i) {
      return i < p.upper_size() ? Row::upper : Row::lower;
    }

    void check_same_row(Partition const& p, std::size_t i, std::size_t j) {
      if (i >= p.size() || j >= p.size()) {
        throw PartitionError("point index out of range");
      }
      if (row_of(p, i) != row_of(p, j)) {
        throw PartitionError("points " + std::to_string(i) + " and "
                             + std::to_string(j) + " lie in different rows");
      }
    }

  }  // namespace

  Partition tensor(Partition const& p, Partition const& q) {
    Points out;
    out.upper.assign(p.upper_colors().begin(), p.upper_colors().end());
    out.upper.insert(
        out.upper.end(), q.upper_colors().begin(), q.upper_colors().end());
    out.lower.assign(p.lower_colors().begin(), p.lower_colors().end());
    out.lower.insert(
        out.lower.end(), q.lower_colors().begin(), q.lower_colors().end());
    std::size_t const shift = p.number_of_blocks();
    for (std::size_t i = 0; i < p.upper_size(); ++i) {
      out.ids.push_back(p.block(i));
    }
    for (std::size_t i = 0; i < q.upper_size(); ++i) {
      out.ids.push_back(q.block(i) + shift);
    }
    for (std::size_t i = p.upper_size(); i < p.size(); ++i) {
      out.ids.push_back(p.block(i));
    }
    for (std::size_t i = q.upper_size(); i < q.size(); ++i) {
      out.ids.push_back(q.block(i) + shift);
    }
    return out.build();
  }

  Partition compose(Partition const& q, Partition const& p) {
    if (q.lower_size() != p.upper_size()) {
      throw ProfileMismatch("cannot compose: " + std::to_string(q.lower_size())
                            + " lower points on top of "
                            + std::to_string(p.upper_size())
                            + " upper points");
    }
    auto const q_lower = q.lower_colors();
    auto const p_upper = p.upper_colors();
    if (!std::equal(q_lower.begin(), q_lower.end(), p_upper.begin())) {
      throw ColorMismatch("cannot compose: middle colors differ");
    }
    std::size_t const shift = q.number_of_blocks();
    UnionFind         uf(shift + p.number_of_blocks());
    for (std::size_t i = 0; i < q.lower_size(); ++i) {
      uf.unite(q.block(q.upper_size() + i), shift + p.block(i));
    }
    Points out;
    out.upper.assign(q.upper_colors().begin(), q.upper_colors().end());
    out.lower.assign(p.lower_colors().begin(), p.lower_colors().end());
    for (std::size_t i = 0; i < q.upper_size(); ++i) {
      out.ids.push_back(uf.find(q.block(i)));
    }
    for (std::size_t i = p.upper_size(); i < p.size(); ++i) {
      out.ids.push_back(uf.find(shift + p.block(i)));
    }
    return out.build();
  }

  Partition identity(std::span<Color const> colors) {
    std::vector<std::size_t> ids(2 * colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
      ids[i]                 = i;
      ids[colors.size() + i] = i;
    }
    return make_partition(colors, colors, ids);
  }

  Partition identity(Color c) {
    std::array<Color, 1> colors{c};
    return identity(colors);
  }

  Partition pad_compose(Partition const& q, Partition const& p,
                        std::size_t offset) {
    if (offset + p.upper_size() > q.lower_size()) {
      throw ProfileMismatch("window of " + std::to_string(p.upper_size())
                            + " points at offset " + std::to_string(offset)
                            + " exceeds " + std::to_string(q.lower_size())
                            + " lower points");
    }
    auto const lower = q.lower_colors();
    auto const left  = identity(lower.first(offset));
    auto const right = identity(lower.subspan(offset + p.upper_size()));
    auto const window = lower.subspan(offset, p.upper_size());
    auto const p_upper = p.upper_colors();
    if (!std::equal(window.begin(), window.end(), p_upper.begin())) {
      throw ColorMismatch("window colors differ from the upper colors");
    }
    return compose(q, tensor(tensor(left, p), right));
  }

  Partition involution(Partition const& p) {
    Points out;
    out.upper.assign(p.lower_colors().begin(), p.lower_colors().end());
    out.lower.assign(p.upper_colors().begin(), p.upper_colors().end());
    for (std::size_t i = p.upper_size(); i < p.size(); ++i) {
      out.ids.push_back(p.block(i));
    }
    for (std::size_t i = 0; i < p.upper_size(); ++i) {
      out.ids.push_back(p.block(i));
    }
    return out.build();
  }

  Partition vertical_reflection(Partition const& p) {
    Points out;
    out.upper.assign(p.upper_colors().rbegin(), p.upper_colors().rend());
    out.lower.assign(p.lower_colors().rbegin(), p.lower_colors().rend());
    for (std::size_t i = p.upper_size(); i-- > 0;) {
      out.ids.push_back(p.block(i));
    }
    for (std::size_t i = p.size(); i-- > p.upper_size();) {
      out.ids.push_back(p.block(i));
    }
    return out.build();
  }

  Partition invert_colors(Partition const& p) {
    Points out(p);
    out.upper = inverted(out.upper);
    out.lower = inverted(out.lower);
    return out.build();
  }

  Partition verticolor_reflection(Partition const& p) {
    return invert_colors(vertical_reflection(p));
  }

  Partition rotate(Partition const& p, RotationKind kind) {
    std::size_t const k = p.upper_size();
    std::size_t const l = p.lower_size();
    std::vector<std::size_t> upper_ids(p.blocks().begin(),
                                       p.blocks().begin() + k);
    std::vector<std::size_t> lower_ids(p.blocks().begin() + k,
                                       p.blocks().end());
    std::vector<Color> upper(p.upper_colors().begin(), p.upper_colors().end());
    std::vector<Color> lower(p.lower_colors().begin(), p.lower_colors().end());

    auto fail = [](char const* why) {
      throw PartitionError(std::string("rotation not applicable: ") + why);
    };

    switch (kind) {
      case RotationKind::upper_left_down:
        if (k == 0) {
          fail("no upper points");
        }
        lower.insert(lower.begin(), inverse(upper.front()));
        lower_ids.insert(lower_ids.begin(), upper_ids.front());
        upper.erase(upper.begin());
        upper_ids.erase(upper_ids.begin());
        break;
      case RotationKind::lower_left_up:
        if (l == 0) {
          fail("no lower points");
        }
        upper.insert(upper.begin(), inverse(lower.front()));
        upper_ids.insert(upper_ids.begin(), lower_ids.front());
        lower.erase(lower.begin());
        lower_ids.erase(lower_ids.begin());
        break;
      case RotationKind::upper_right_down:
        if (k == 0) {
          fail("no upper points");
        }
        lower.push_back(inverse(upper.back()));
        lower_ids.push_back(upper_ids.back());
        upper.pop_back();
        upper_ids.pop_back();
        break;
      case RotationKind::lower_right_up:
        if (l == 0) {
          fail("no lower points");
        }
        upper.push_back(inverse(lower.back()));
        upper_ids.push_back(lower_ids.back());
        lower.pop_back();
        lower_ids.pop_back();
        break;
      case RotationKind::one_line_left_to_right:
      case RotationKind::one_line_right_to_left: {
        if (k != 0 && l != 0) {
          fail("partition has two nonempty rows");
        }
        if (k + l == 0) {
          fail("empty partition");
        }
        auto& colors = k != 0 ? upper : lower;
        auto& ids    = k != 0 ? upper_ids : lower_ids;
        if (kind == RotationKind::one_line_left_to_right) {
          std::rotate(colors.begin(), colors.begin() + 1, colors.end());
          std::rotate(ids.begin(), ids.begin() + 1, ids.end());
        } else {
          std::rotate(colors.rbegin(), colors.rbegin() + 1, colors.rend());
          std::rotate(ids.rbegin(), ids.rbegin() + 1, ids.rend());
        }
        break;
      }
    }
    upper_ids.insert(upper_ids.end(), lower_ids.begin(), lower_ids.end());
    return make_partition(upper, lower, upper_ids);
  }

  Partition to_one_line(Partition const& p) {
    std::vector<Color> none;
    return make_partition(none, one_line_colors(p), one_line_blocks(p));
  }

  Partition erase_neighbours(Partition const& p, Row row, std::size_t index) {
    check_row_index(p, row, index, 2);
    std::size_t const i = p.index(row, index);
    if (p.color(i) == p.color(i + 1)) {
      throw ColorMismatch("neighbours to erase must have inverse colors");
    }
    std::size_t const keep = std::min(p.block(i), p.block(i + 1));
    std::size_t const gone = std::max(p.block(i), p.block(i + 1));
    Points out(p);
    for (auto& id : out.ids) {
      if (id == gone) {
        id = keep;
      }
    }
    auto& colors = row == Row::upper ? out.upper : out.lower;
    colors.erase(colors.begin() + index, colors.begin() + index + 2);
    out.ids.erase(out.ids.begin() + i, out.ids.begin() + i + 2);
    return out.build();
  }

  Partition insert_between_legs(Partition const& p, Partition const& q,
                                std::size_t gap_index) {
    if (p.upper_size() != 0 || q.upper_size() != 0) {
      throw PartitionError("insertion needs partitions without upper points");
    }
    if (gap_index > p.lower_size()) {
      throw PartitionError("gap index " + std::to_string(gap_index)
                           + " out of range");
    }
    Points out;
    std::size_t const shift = p.number_of_blocks();
    for (std::size_t i = 0; i < gap_index; ++i) {
      out.lower.push_back(p.color(i));
      out.ids.push_back(p.block(i));
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      out.lower.push_back(q.color(i));
      out.ids.push_back(q.block(i) + shift);
    }
    for (std::size_t i = gap_index; i < p.size(); ++i) {
      out.lower.push_back(p.color(i));
      out.ids.push_back(p.block(i));
    }
    return out.build();
  }

  std::array<Partition, 4> base_partitions() {
    return {parse_text("|wb|0,0"),
            parse_text("|bw|0,0"),
            identity(Color::white),
            identity(Color::black)};
  }

  namespace {

    Partition apply(Partition const& p, rewrite::DisconnectPoint const& r) {
      if (r.index >= p.size()) {
        throw PartitionError("point index out of range");
      }
      Points out(p);
      out.ids[r.index] = p.number_of_blocks();
      return out.build();
    }

    Partition apply(Partition const& p,
                    rewrite::ConnectAdjacentBlocks const& r) {
      if (r.gap == 0) {
        throw PartitionError("gap index must be positive");
      }
      check_same_row(p, r.gap - 1, r.gap);
      std::size_t const keep = p.block(r.gap - 1);
      std::size_t const gone = p.block(r.gap);
      Points out(p);
      for (auto& id : out.ids) {
        if (id == gone) {
          id = keep;
        }
      }
      return out.build();
    }

    Partition apply(Partition const& p, rewrite::ShiftSingleton const& r) {
      check_same_row(p, r.from, r.to);
      auto const sizes = block_sizes(p);
      if (sizes[p.block(r.from)] != 1) {
        throw PartitionError("point " + std::to_string(r.from)
                             + " is not a singleton");
      }
      std::vector<Color> colors(p.colors().begin(), p.colors().end());
      std::vector<std::size_t> ids(p.blocks().begin(), p.blocks().end());
      Color const moved = colors[r.from];
      std::size_t const id = ids[r.from];
      colors.erase(colors.begin() + r.from);
      ids.erase(ids.begin() + r.from);
      colors.insert(colors.begin() + r.to, moved);
      ids.insert(ids.begin() + r.to, id);
      std::span<Color const> all(colors);
      return make_partition(
          all.first(p.upper_size()), all.subspan(p.upper_size()), ids);
    }

    Partition apply(Partition const& p, rewrite::SwapSingletonInvert const& r) {
      check_same_row(p, r.index, r.index + 1);
      auto const sizes = block_sizes(p);
      std::size_t const i = r.index;
      if (sizes[p.block(i)] != 1 && sizes[p.block(i + 1)] != 1) {
        throw PartitionError("neither point is a singleton");
      }
      if (p.color(i) == p.color(i + 1)) {
        throw ColorMismatch("swapped points must have inverse colors");
      }
      std::vector<Color> colors(p.colors().begin(), p.colors().end());
      std::vector<std::size_t> ids(p.blocks().begin(), p.blocks().end());
      std::swap(colors[i], colors[i + 1]);
      std::swap(ids[i], ids[i + 1]);
      colors[i]     = inverse(colors[i]);
      colors[i + 1] = inverse(colors[i + 1]);
      std::span<Color const> all(colors);
      return make_partition(
          all.first(p.upper_size()), all.subspan(p.upper_size()), ids);
    }

  }  // namespace

  Partition derived_rewrite(Partition const& p, RewriteKind const& kind) {
    return std::visit([&p](auto const& r) { return apply(p, r); }, kind);
  }

}  // namespace pcat
