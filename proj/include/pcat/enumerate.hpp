#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

  struct EnumerationFilter {
    bool                       noncrossing_only = false;
    std::optional<std::size_t> max_block_size;
    std::optional<std::size_t> min_block_size;

    // Throws if min > max.
    void validate() const;
  };

  // Restricted growth strings (block ids in reading order) of all set
  // partitions of a profile that pass the filter, in lexicographic order.
  std::vector<std::vector<std::size_t>>
  set_partitions(Profile profile, EnumerationFilter const& filter);

  // Calls f on every partition of the profile passing the filter, each once,
  // ordered by color word (white first) and then by block ids.
  template <std::invocable<Partition const&> F>
  void enumerate(Profile profile, EnumerationFilter const& filter, F&& f) {
    auto const  shapes = set_partitions(profile, filter);
    std::size_t const n = profile.points();
    std::vector<Color> upper(profile.upper), lower(profile.lower);
    for (std::uint64_t word = 0; word < (std::uint64_t(1) << n); ++word) {
      for (std::size_t i = 0; i < n; ++i) {
        Color c = ((word >> (n - 1 - i)) & 1) ? Color::black : Color::white;
        if (i < profile.upper) {
          upper[i] = c;
        } else {
          lower[i - profile.upper] = c;
        }
      }
      for (auto const& ids : shapes) {
        f(make_partition(upper, lower, ids));
      }
    }
  }

  std::vector<Partition> enumerate(Profile profile,
                                   EnumerationFilter const& filter = {});

  std::uint64_t count(Profile profile, EnumerationFilter const& filter = {});

}  // namespace pcat
