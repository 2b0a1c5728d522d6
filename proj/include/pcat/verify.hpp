#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcat/closure.hpp"
#include "pcat/partition.hpp"
#include "pcat/taxonomy.hpp"

namespace pcat {

  enum class Outcome : std::uint8_t {
    equal,
    closure_subset_strict,
    predicate_violation,
    bound_insufficient,
    passed,
    failed
  };

  char const* to_string(Outcome o) noexcept;

  struct VerificationReport {
    std::string subject;
    std::size_t bound = 0;
    Outcome     outcome = Outcome::passed;
    std::string detail;
    // Counterexamples for predicate_violation and failed, smallest missing
    // partitions for closure_subset_strict and bound_insufficient.
    std::vector<Partition> witnesses;
    // One-line members per number of points.
    std::vector<std::uint64_t>   closure_counts;
    std::vector<std::uint64_t>   predicate_counts;
    std::vector<Partition>       skipped_generators;
    std::optional<std::uint64_t> seed;
    bool                         stabilized = false;
    double                       seconds = 0;
  };

  // predicate_violation or failed.
  bool is_failure(VerificationReport const& r) noexcept;

  struct VerifyOptions {
    // Budget for the composition phase of each closure.
    std::uint64_t composition_budget = 200'000'000;
    std::size_t   max_witnesses = 5;
    std::uint64_t seed = 20160815;
  };

  // Number of noncrossing one-line partitions with n points in the
  // predicate set of each family, n = 0..bound.
  std::vector<std::vector<std::uint64_t>>
  predicate_one_line_counts(std::span<NamedCategory const> families,
                            std::size_t bound);

  // Closure of the generators against the predicate set, both restricted to
  // at most bound points. Generators above the bound are skipped and listed.
  VerificationReport verify_category(NamedCategory const& f, std::size_t bound,
                                     VerifyOptions const& options = {});

  // Same as verify_category for each family, sharing one predicate sweep.
  std::vector<VerificationReport>
  verify_categories(std::span<NamedCategory const> families, std::size_t bound,
                    VerifyOptions const& options = {});

  // The families of the H, S and B classification checks.
  std::vector<NamedCategory> classification_families();

  // Additivity and sign laws of c: tensor products of all pairs with at most
  // exhaustive_points points in total, compositions glued from pairs with at
  // most exhaustive_points + 2 points, plus random pairs with at most
  // random_points points each.
  VerificationReport c_law_check(std::size_t   exhaustive_points = 6,
                                 std::size_t   random_pairs = 10'000,
                                 std::size_t   random_points = 10,
                                 std::uint64_t seed = VerifyOptions{}.seed);

  // Closure properties, conditional rewrites, block-size and K-set
  // properties on closures of named families and of random generator sets.
  std::vector<VerificationReport> lemma_suite(std::size_t          bound,
                                              VerifyOptions const& options
                                              = {});

  // The least partition with at most bound points in exactly one of the
  // two families. Noncrossing families are compared on noncrossing one-line
  // partitions; group-case families use the closure oracle.
  std::optional<Partition> separate(NamedCategory const& a,
                                    NamedCategory const& b, std::size_t bound);

  struct Separation {
    NamedCategory            a;
    NamedCategory            b;
    std::optional<Partition> witness;
  };

  // separate() for every unordered pair of noncrossing families.
  std::vector<Separation>
  distinctness_sweep(std::span<NamedCategory const> families,
                     std::size_t                    bound);

  // One report over all pairs of normalized families with parameters at
  // most max_param. Pairs without a witness within the bound are retried up
  // to extended_bound points and listed; the outcome is then
  // bound_insufficient, or failed if some pair stays unseparated.
  VerificationReport distinctness_check(std::int64_t max_param,
                                        std::size_t  bound,
                                        std::size_t  extended_bound = 10);

  // A member q of the closure together with a recoloring of q that is not a
  // member, if any.
  std::optional<std::pair<Partition, Partition>>
  color_saturation_witness(ClosureSet const& cs);

  // Closure of all colorings of the generators together with ⊓ww is
  // color-saturated.
  VerificationReport
  one_color_correspondence_check(std::span<Partition const> generators,
                                 std::size_t                bound,
                                 VerifyOptions const&       options = {});

  // The four correspondence checks: three closures containing ⊓ww and the
  // alternating 4-block closure, which must fail to be saturated.
  std::vector<VerificationReport>
  correspondence_suite(std::size_t bound, VerifyOptions const& options = {});

  // The equalities between families on noncrossing partitions with at most
  // bound points, parameters at most max_param.
  std::vector<VerificationReport>
  remark_equalities_check(std::size_t bound, std::int64_t max_param,
                          VerifyOptions const& options = {});

  // The collapsing equalities of the group case, closures with the crossing
  // partition at the bound.
  std::vector<VerificationReport>
  group_equalities_check(std::size_t bound, std::int64_t max_param);

  // The signature of each family's closure against its declared parameters.
  std::vector<VerificationReport>
  signature_round_trip(std::span<NamedCategory const> families,
                       std::size_t bound, VerifyOptions const& options = {});

  // Timings are left out unless requested, so output is byte-stable.
  std::string format_reports_text(std::span<VerificationReport const> reports,
                                  bool timing = false);
  // JSON document {"reports": [...], "failures": count}.
  std::string
  format_reports_structured(std::span<VerificationReport const> reports,
                            bool timing = false);

}  // namespace pcat
