#include "pcat/enumerate.hpp"

#include <algorithm>

namespace pcat {

  namespace {

    void all_growth_strings(std::size_t n, std::vector<std::size_t>& current,
                            std::size_t nr_blocks,
                            std::vector<std::vector<std::size_t>>& out) {
      if (current.size() == n) {
        out.push_back(current);
        return;
      }
      for (std::size_t b = 0; b <= nr_blocks; ++b) {
        current.push_back(b);
        all_growth_strings(n, current, std::max(nr_blocks, b + 1), out);
        current.pop_back();
      }
    }

    // Blocks that may still receive points are kept on a stack; joining a
    // block closes every block opened after it.
    void noncrossing_strings(std::size_t n, std::vector<std::size_t>& current,
                             std::vector<std::size_t>& open,
                             std::size_t nr_blocks,
                             std::vector<std::vector<std::size_t>>& out) {
      if (current.size() == n) {
        out.push_back(current);
        return;
      }
      for (std::size_t depth = 0; depth < open.size(); ++depth) {
        std::vector<std::size_t> saved(open.begin() + depth + 1, open.end());
        std::size_t const b = open[depth];
        open.resize(depth + 1);
        current.push_back(b);
        noncrossing_strings(n, current, open, nr_blocks, out);
        current.pop_back();
        open.insert(open.end(), saved.begin(), saved.end());
      }
      open.push_back(nr_blocks);
      current.push_back(nr_blocks);
      noncrossing_strings(n, current, open, nr_blocks + 1, out);
      current.pop_back();
      open.pop_back();
    }

    void canonicalize(std::vector<std::size_t>& ids) {
      std::vector<std::size_t> relabel(ids.size(), ids.size());
      std::size_t              next = 0;
      for (auto& id : ids) {
        if (relabel[id] == ids.size()) {
          relabel[id] = next++;
        }
        id = relabel[id];
      }
    }

    bool passes(std::vector<std::size_t> const& ids,
                EnumerationFilter const&        filter) {
      if (!filter.max_block_size && !filter.min_block_size) {
        return true;
      }
      std::vector<std::size_t> sizes(ids.size(), 0);
      for (auto id : ids) {
        ++sizes[id];
      }
      for (auto s : sizes) {
        if (s == 0) {
          continue;
        }
        if (filter.max_block_size && s > *filter.max_block_size) {
          return false;
        }
        if (filter.min_block_size && s < *filter.min_block_size) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  void EnumerationFilter::validate() const {
    if (max_block_size && min_block_size && *min_block_size > *max_block_size) {
      throw PartitionError("minimum block size exceeds maximum block size");
    }
  }

  std::vector<std::vector<std::size_t>>
  set_partitions(Profile profile, EnumerationFilter const& filter) {
    filter.validate();
    std::size_t const n = profile.points();
    std::vector<std::vector<std::size_t>> raw;
    std::vector<std::size_t>              current;
    current.reserve(n);
    if (filter.noncrossing_only) {
      std::vector<std::size_t> open;
      noncrossing_strings(n, current, open, 0, raw);
      // Generated in one-line order; move to reading order.
      std::size_t const k = profile.upper;
      for (auto& line : raw) {
        std::vector<std::size_t> reading(line);
        for (std::size_t j = 0; j < k; ++j) {
          reading[k - 1 - j] = line[j];
        }
        canonicalize(reading);
        line = std::move(reading);
      }
    } else {
      all_growth_strings(n, current, 0, raw);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& ids : raw) {
      if (passes(ids, filter)) {
        out.push_back(std::move(ids));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Partition> enumerate(Profile profile,
                                   EnumerationFilter const& filter) {
    std::vector<Partition> out;
    enumerate(profile, filter, [&out](Partition const& p) { out.push_back(p); });
    return out;
  }

  std::uint64_t count(Profile profile, EnumerationFilter const& filter) {
    return static_cast<std::uint64_t>(set_partitions(profile, filter).size())
           << profile.points();
  }

}  // namespace pcat
