#pragma once

#include <absl/container/flat_hash_set.h>

#include <cstdint>
#include <vector>

#include "pcat/closure.hpp"
#include "word.hpp"

namespace pcat::detail {

  struct ClosureStore {
    std::size_t                bound = 0;
    std::vector<Partition>     generators;
    std::vector<Word>          reps;  // canonical, one per orbit
    std::vector<std::uint32_t> generation;
    absl::flat_hash_set<Word>  index;
    StabilizationReport        report;
  };

}  // namespace pcat::detail

namespace pcat {
  detail::ClosureStore const& store_of(ClosureSet const& cs);
}
