#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

  class ClosureError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace detail {
    struct ClosureStore;
  }

  struct ClosureOptions {
    // Throw instead of skipping generators with more points than the bound.
    bool strict = false;
    // Compositions whose glued operands exceed the bound are only tried when
    // the smaller operand has at most this many points.
    std::size_t composition_limit = std::numeric_limits<std::size_t>::max();
    // Upper limit on the number of such composition attempts.
    std::uint64_t composition_budget
        = std::numeric_limits<std::uint64_t>::max();
    // Stop as soon as the number of one-line members with n points equals
    // target[n] for every n. Used when an upper bound for the closure is
    // already known.
    std::optional<std::vector<std::uint64_t>> target_one_line_counts;
  };

  struct StabilizationReport {
    std::size_t                      bound = 0;
    std::size_t                      iterations = 0;
    std::map<Profile, std::uint64_t> members_per_profile;
    std::vector<std::uint64_t>       one_line_counts;  // indexed by points
    std::uint64_t                    orbits = 0;
    std::uint64_t                    compositions_tried = 0;
    bool                             discarded_oversized = false;
    bool                             compositions_complete = false;
    bool                             target_reached = false;
    bool                             stabilized = false;
    std::vector<Partition>           skipped_generators;
  };

  // A truncated category: every partition with at most bound() points that
  // the saturation reached. Members are stored as one-line words up to
  // rotation and verticolor reflection; all profiles are answered from that.
  class ClosureSet {
   public:
    ClosureSet() = default;

    std::size_t bound() const noexcept;
    // Fixed point reached under every operation, with no composition limit
    // or budget cut.
    bool stabilized() const noexcept;
    std::span<Partition const> generators() const noexcept;

    // Throws ClosureError if p has more points than the bound.
    bool contains(Partition const& p) const;

    std::uint64_t count(Profile profile) const;
    std::uint64_t size() const;

    // Members with profile (0, n), sorted.
    std::vector<Partition> one_line_members(std::size_t n) const;
    // One member per orbit, sorted.
    std::vector<Partition> orbit_representatives() const;
    // Members of a profile, sorted.
    std::vector<Partition> members(Profile profile) const;
    // Every member of every profile, sorted.
    std::vector<Partition> members() const;

    StabilizationReport const& report() const noexcept;

    friend ClosureSet closure(std::span<Partition const>, std::size_t,
                              ClosureOptions const&);
    friend detail::ClosureStore const& store_of(ClosureSet const&);

   private:
    std::shared_ptr<detail::ClosureStore const> _store;
  };

  ClosureSet closure(std::span<Partition const> generators, std::size_t bound,
                     ClosureOptions const& options = {});

  inline ClosureSet closure(std::vector<Partition> const& generators,
                            std::size_t bound,
                            ClosureOptions const& options = {}) {
    return closure(std::span<Partition const>(generators), bound, options);
  }

  StabilizationReport const& stabilization_report(ClosureSet const& cs);

  // Header line followed by all members, one per line, sorted.
  std::string dump(ClosureSet const& cs);

  // Generators file: one partition per line, '#' starts a comment.
  std::vector<Partition> parse_generators(std::string_view text);

}  // namespace pcat
