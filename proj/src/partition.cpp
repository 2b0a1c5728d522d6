#include "pcat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace pcat {

  std::strong_ordering Partition::operator<=>(Partition const& that) const {
    if (auto c = size() <=> that.size(); c != 0) {
      return c;
    }
    if (auto c = _upper <=> that._upper; c != 0) {
      return c;
    }
    if (auto c = _colors <=> that._colors; c != 0) {
      return c;
    }
    return _blocks <=> that._blocks;
  }

  Partition make_partition(std::span<Color const>       upper,
                           std::span<Color const>       lower,
                           std::span<std::size_t const> block_ids) {
    std::size_t const n = upper.size() + lower.size();
    if (block_ids.size() != n) {
      throw PartitionError("block id list has " + std::to_string(block_ids.size())
                           + " entries for " + std::to_string(n) + " points");
    }
    if (n > Partition::max_points) {
      throw PartitionError("too many points: " + std::to_string(n));
    }
    Partition p;
    p._upper = upper.size();
    p._colors.reserve(n);
    p._colors.insert(p._colors.end(), upper.begin(), upper.end());
    p._colors.insert(p._colors.end(), lower.begin(), lower.end());
    p._blocks.resize(n);
    std::unordered_map<std::size_t, std::uint8_t> relabel;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, fresh] = relabel.try_emplace(
          block_ids[i], static_cast<std::uint8_t>(relabel.size()));
      p._blocks[i] = it->second;
    }
    p._nr_blocks = relabel.size();
    return p;
  }

  Partition make_partition(std::vector<Color> const&       upper,
                           std::vector<Color> const&       lower,
                           std::vector<std::size_t> const& block_ids) {
    return make_partition(std::span<Color const>(upper),
                          std::span<Color const>(lower),
                          std::span<std::size_t const>(block_ids));
  }

  std::vector<Color> parse_colors(std::string_view text) {
    std::vector<Color> out;
    out.reserve(text.size());
    for (char ch : text) {
      if (ch == 'w') {
        out.push_back(Color::white);
      } else if (ch == 'b') {
        out.push_back(Color::black);
      } else {
        throw PartitionError(std::string("invalid color character '") + ch
                             + "'");
      }
    }
    return out;
  }

  Partition parse_text(std::string_view text) {
    auto first = text.find('|');
    if (first == std::string_view::npos) {
      throw PartitionError("expected '<upper>|<lower>|<ids>'");
    }
    auto second = text.find('|', first + 1);
    if (second == std::string_view::npos
        || text.find('|', second + 1) != std::string_view::npos) {
      throw PartitionError("expected exactly two '|' separators");
    }
    auto upper = parse_colors(text.substr(0, first));
    auto lower = parse_colors(text.substr(first + 1, second - first - 1));
    auto ids_text = text.substr(second + 1);

    std::vector<std::size_t> ids;
    if (!ids_text.empty()) {
      std::size_t pos = 0;
      while (true) {
        auto comma = ids_text.find(',', pos);
        auto token = ids_text.substr(pos, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - pos);
        std::size_t value = 0;
        auto [ptr, ec]
            = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc()
            || ptr != token.data() + token.size()) {
          throw PartitionError("invalid block id '" + std::string(token) + "'");
        }
        ids.push_back(value);
        if (comma == std::string_view::npos) {
          break;
        }
        pos = comma + 1;
      }
    }
    return make_partition(upper, lower, ids);
  }

  std::string format_text(Partition const& p) {
    std::string out;
    for (Color c : p.upper_colors()) {
      out += to_char(c);
    }
    out += '|';
    for (Color c : p.lower_colors()) {
      out += to_char(c);
    }
    out += '|';
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(p.block(i));
    }
    return out;
  }

  std::string format_word(Partition const& p) {
    if (p.upper_size() != 0) {
      throw PartitionError("word notation needs a partition without upper "
                           "points");
    }
    std::vector<int> first_color(p.number_of_blocks(), -1);
    std::string      out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::size_t b = p.block(i);
      if (i != 0) {
        out += ' ';
      }
      if (b < 26) {
        out += static_cast<char>('a' + b);
      } else {
        out += 'x' + std::to_string(b);
      }
      auto c = static_cast<int>(p.color(i));
      if (first_color[b] < 0) {
        first_color[b] = c;
      } else if (first_color[b] != c) {
        out += "⁻¹";
      }
    }
    return out;
  }

  std::vector<Color> one_line_colors(Partition const& p) {
    std::vector<Color> out;
    out.reserve(p.size());
    for (std::size_t i = p.upper_size(); i-- > 0;) {
      out.push_back(inverse(p.color(i)));
    }
    auto lower = p.lower_colors();
    out.insert(out.end(), lower.begin(), lower.end());
    return out;
  }

  std::vector<std::size_t> one_line_blocks(Partition const& p) {
    std::vector<std::size_t> out;
    out.reserve(p.size());
    for (std::size_t i = p.upper_size(); i-- > 0;) {
      out.push_back(p.block(i));
    }
    for (std::size_t i = p.upper_size(); i < p.size(); ++i) {
      out.push_back(p.block(i));
    }
    return out;
  }

  bool is_noncrossing(Partition const& p) {
    auto const blocks = one_line_blocks(p);
    std::vector<std::size_t> last(p.number_of_blocks(), 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      last[blocks[i]] = i;
    }
    std::vector<bool>        seen(p.number_of_blocks(), false);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::size_t b = blocks[i];
      if (seen[b]) {
        if (open.empty() || open.back() != b) {
          return false;
        }
      } else {
        seen[b] = true;
        open.push_back(b);
      }
      if (last[b] == i) {
        open.pop_back();
      }
    }
    return true;
  }

  std::vector<std::size_t> block_sizes(Partition const& p) {
    std::vector<std::size_t> sizes(p.number_of_blocks(), 0);
    for (auto b : p.blocks()) {
      ++sizes[b];
    }
    return sizes;
  }

  std::vector<std::size_t> block_profile(Partition const& p) {
    auto sizes = block_sizes(p);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

}  // namespace pcat
