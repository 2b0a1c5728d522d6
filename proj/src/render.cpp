#include "pcat/render.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pcat {

  namespace {

    struct Cell {
      std::string glyph = " ";
      int         owner = -1;
    };

    class Canvas {
     public:
      Canvas(std::size_t rows, std::size_t cols)
          : _cells(rows, std::vector<Cell>(cols)) {}

      void put(std::size_t row, std::size_t col, char glyph, int owner) {
        put(row, col, std::string(1, glyph), owner);
      }

      void put(std::size_t row, std::size_t col, std::string glyph,
               int owner) {
        auto& cell = _cells[row][col];
        if (cell.owner == -1) {
          cell = {std::move(glyph), owner};
        } else if (cell.owner != owner) {
          cell.glyph = "X";
        } else if (cell.glyph != glyph && cell.glyph != "X") {
          cell.glyph = "+";
        }
      }

      std::string str() const {
        std::string out;
        for (auto const& row : _cells) {
          std::string line;
          for (auto const& cell : row) {
            line += cell.glyph;
          }
          line.erase(line.find_last_not_of(' ') + 1);
          out += line;
          out += '\n';
        }
        return out;
      }

     private:
      std::vector<std::vector<Cell>> _cells;
    };

    // The legs of one block in one row, with the column where a block
    // spanning both rows turns towards the other row.
    struct Part {
      int                      block = 0;
      std::vector<std::size_t> legs;
      std::optional<std::size_t> anchor;
      std::size_t lo = 0, hi = 0;
      std::size_t level = 0;  // 0 without a horizontal line

      bool has_line() const {
        return hi > lo;
      }
    };

    // Nested lines get smaller levels; overlapping lines get distinct ones.
    void assign_levels(std::vector<Part>& parts) {
      std::vector<Part*> order;
      for (auto& part : parts) {
        if (part.has_line()) {
          order.push_back(&part);
        }
      }
      std::stable_sort(order.begin(), order.end(), [](Part* a, Part* b) {
        return std::pair(a->hi - a->lo, a->lo) < std::pair(b->hi - b->lo, b->lo);
      });
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto&       part  = *order[i];
        std::size_t level = 1;
        for (std::size_t j = 0; j < i; ++j) {
          if (order[j]->lo >= part.lo && order[j]->hi <= part.hi) {
            level = std::max(level, order[j]->level + 1);
          }
        }
        bool clash = true;
        while (clash) {
          clash = false;
          for (std::size_t j = 0; j < i; ++j) {
            if (order[j]->level == level && order[j]->lo <= part.hi
                && part.lo <= order[j]->hi) {
              ++level;
              clash = true;
              break;
            }
          }
        }
        part.level = level;
      }
    }

    std::size_t max_level(std::vector<Part> const& parts) {
      std::size_t out = 0;
      for (auto const& part : parts) {
        out = std::max(out, part.level);
      }
      return out;
    }

  }  // namespace

  std::string render(Partition const& p, RenderOptions const& options) {
    std::size_t const k = p.upper_size(), l = p.lower_size();
    std::size_t const nr_blocks = p.number_of_blocks();
    std::vector<std::vector<std::size_t>> upper(nr_blocks), lower(nr_blocks);
    for (std::size_t i = 0; i < k; ++i) {
      upper[p.block(i)].push_back(i);
    }
    for (std::size_t j = 0; j < l; ++j) {
      lower[p.block(k + j)].push_back(j);
    }
    // Blocks meeting both rows, ordered by their leftmost upper leg.
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < k; ++i) {
      auto const b = p.block(i);
      if (upper[b].front() == i && !lower[b].empty()) {
        through.push_back(b);
      }
    }

    std::vector<std::size_t> upper_col(k), lower_col(l);
    std::vector<std::size_t> anchor(nr_blocks, 0);
    if (is_noncrossing(p)) {
      // Both rows advance together so that each through block starts in
      // one column on both rows.
      std::size_t slot = 0, next_upper = 0, next_lower = 0;
      auto        fill = [&](std::size_t upper_end, std::size_t lower_end) {
        std::size_t const width
            = std::max(upper_end - next_upper, lower_end - next_lower);
        for (std::size_t i = next_upper; i < upper_end; ++i) {
          upper_col[i] = 2 * (slot + i - next_upper);
        }
        for (std::size_t j = next_lower; j < lower_end; ++j) {
          lower_col[j] = 2 * (slot + j - next_lower);
        }
        slot += width;
      };
      for (auto b : through) {
        std::size_t const u = upper[b].front(), v = lower[b].front();
        fill(u, v);
        upper_col[u] = lower_col[v] = anchor[b] = 2 * slot;
        ++slot;
        next_upper = u + 1;
        next_lower = v + 1;
      }
      fill(k, l);
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        upper_col[i] = 2 * i;
      }
      for (std::size_t j = 0; j < l; ++j) {
        lower_col[j] = 2 * j;
      }
      for (auto b : through) {
        anchor[b] = upper_col[upper[b].front()];
      }
    }

    auto parts_of = [&](std::vector<std::vector<std::size_t>> const& legs,
                        std::vector<std::size_t> const&              cols) {
      std::vector<Part> parts;
      for (std::size_t b = 0; b < nr_blocks; ++b) {
        if (legs[b].empty()) {
          continue;
        }
        Part part;
        part.block = static_cast<int>(b);
        for (auto i : legs[b]) {
          part.legs.push_back(cols[i]);
        }
        auto [lo, hi] = std::minmax_element(part.legs.begin(), part.legs.end());
        part.lo = *lo;
        part.hi = *hi;
        if (!upper[b].empty() && !lower[b].empty()) {
          part.anchor = anchor[b];
          part.lo     = std::min(part.lo, anchor[b]);
          part.hi     = std::max(part.hi, anchor[b]);
        }
        parts.push_back(std::move(part));
      }
      return parts;
    };
    auto upper_parts = parts_of(upper, upper_col);
    auto lower_parts = parts_of(lower, lower_col);
    assign_levels(upper_parts);
    assign_levels(lower_parts);

    std::size_t const upper_rows = k > 0 ? 2 + max_level(upper_parts) : 0;
    std::size_t const lower_rows = l > 0 ? 2 + max_level(lower_parts) : 0;
    std::size_t const middle     = k > 0 && l > 0 ? 1 : 0;
    std::size_t const rows       = upper_rows + middle + lower_rows;
    std::size_t       cols       = 1;
    for (auto c : upper_col) {
      cols = std::max(cols, c + 1);
    }
    for (auto c : lower_col) {
      cols = std::max(cols, c + 1);
    }
    if (rows == 0) {
      return format_text(p) + '\n';
    }
    Canvas canvas(rows, cols);

    // Row of a point row at the given distance from the points.
    auto upper_row = [&](std::size_t distance) { return distance; };
    auto lower_row = [&](std::size_t distance) { return rows - 1 - distance; };

    auto draw = [&](Part const& part, auto row_at) {
      std::size_t const line = part.has_line() ? 1 + part.level : 1;
      for (auto c : part.legs) {
        for (std::size_t d = 1; d < line; ++d) {
          canvas.put(row_at(d), c, '|', part.block);
        }
        canvas.put(row_at(line), c, part.has_line() ? '+' : '|', part.block);
      }
      if (part.has_line()) {
        for (std::size_t c = part.lo; c <= part.hi; ++c) {
          bool const corner
              = std::find(part.legs.begin(), part.legs.end(), c)
                    != part.legs.end()
                || part.anchor == c;
          canvas.put(row_at(line), c, corner ? '+' : '-', part.block);
        }
      }
    };
    for (auto const& part : upper_parts) {
      draw(part, upper_row);
    }
    for (auto const& part : lower_parts) {
      draw(part, lower_row);
    }
    // Through blocks run from their upper line to their lower line.
    for (auto b : through) {
      auto const find = [&](std::vector<Part> const& parts) {
        return *std::find_if(parts.begin(), parts.end(), [&](Part const& q) {
          return q.block == static_cast<int>(b);
        });
      };
      Part const&       top    = find(upper_parts);
      Part const&       bottom = find(lower_parts);
      std::size_t const from   = upper_row(top.has_line() ? 1 + top.level : 0);
      std::size_t const to = lower_row(bottom.has_line() ? 1 + bottom.level : 0);
      for (std::size_t r = from + 1; r < to; ++r) {
        canvas.put(r, anchor[b], '|', static_cast<int>(b));
      }
    }

    auto const glyph = [&](Color c) -> std::string {
      if (options.unicode) {
        return c == Color::white ? "∘" : "●";
      }
      return c == Color::white ? "o" : "*";
    };
    for (std::size_t i = 0; i < k; ++i) {
      canvas.put(upper_row(0), upper_col[i], glyph(p.color(i)),
                 static_cast<int>(p.block(i)));
    }
    for (std::size_t j = 0; j < l; ++j) {
      canvas.put(lower_row(0), lower_col[j], glyph(p.color(k + j)),
                 static_cast<int>(p.block(k + j)));
    }
    return canvas.str() + format_text(p) + '\n';
  }

}  // namespace pcat
