#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/analysis.hpp"
#include "pcat/closure.hpp"
#include "pcat/partition.hpp"

namespace pcat {

  class TaxonomyError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  enum class Family : std::uint8_t {
    O_glob,
    O_loc,
    H_glob,
    Hprime_loc,
    H_loc,
    S_glob,
    S_loc,
    B_glob,
    Bprime_glob,
    B_loc,
    Bprime_loc,
    Ogrp_glob,
    Ogrp_loc,
    Hgrp_glob,
    Hgrp_loc,
    Sgrp_glob,
    Bgrp_glob,
    Bgrp_loc
  };

  inline constexpr std::array<Family, 18> all_families{
      Family::O_glob,      Family::O_loc,      Family::H_glob,
      Family::Hprime_loc,  Family::H_loc,      Family::S_glob,
      Family::S_loc,       Family::B_glob,     Family::Bprime_glob,
      Family::B_loc,       Family::Bprime_loc, Family::Ogrp_glob,
      Family::Ogrp_loc,    Family::Hgrp_glob,  Family::Hgrp_loc,
      Family::Sgrp_glob,   Family::Bgrp_glob,  Family::Bgrp_loc};

  // Number of integer parameters: (k), (k,d) or (k,d,r).
  std::size_t arity(Family f) noexcept;
  bool        is_group_case(Family f) noexcept;
  // Canonical spelling, e.g. "B'_loc" or "S_grp_glob".
  char const* to_string(Family f) noexcept;

  // One classified family with its parameters.
  class NamedCategory {
   public:
    // Validates the parameter constraints of the classification; throws
    // TaxonomyError on violation.
    static NamedCategory make(Family f, std::vector<std::int64_t> params = {});
    // Only checks the arity and that parameters are non-negative. Used for
    // the parameter values that appear in the equalities between families
    // but are outside the classification ranges, e.g. H_loc(k,1).
    static NamedCategory unchecked(Family                    f,
                                   std::vector<std::int64_t> params = {});

    Family family() const noexcept {
      return _family;
    }
    std::span<std::int64_t const> params() const noexcept {
      return _params;
    }
    std::int64_t k() const noexcept {
      return _params.size() > 0 ? _params[0] : 0;
    }
    std::int64_t d() const noexcept {
      return _params.size() > 1 ? _params[1] : 0;
    }
    std::int64_t r() const noexcept {
      return _params.size() > 2 ? _params[2] : 0;
    }
    bool is_group_case() const noexcept {
      return pcat::is_group_case(_family);
    }
    // Within the classification ranges.
    bool valid() const noexcept;

    auto operator<=>(NamedCategory const&) const = default;

   private:
    Family                    _family = Family::O_loc;
    std::vector<std::int64_t> _params;
  };

  // Accepts the canonical spellings, "prime" for "'", and "grp" without the
  // underscore, e.g. "H_loc(6,3)", "B'_loc(4,2,0)", "Bprime_loc(4,2,0)",
  // "S_grp_glob(2)", "Sgrp_glob(2)". Whitespace is ignored. With strict
  // false the parameters are only checked as in NamedCategory::unchecked.
  NamedCategory parse_family(std::string_view text, bool strict = true);
  std::string   format_family(NamedCategory const& f);

  // The generator list of the classification, with b_0 and the empty tensor
  // power omitted.
  std::vector<Partition> generators_for(NamedCategory const& f);

  // Membership by the explicit description of the family. Crossing input
  // gives false for noncrossing families. Group-case families are decided by
  // a cached closure at group_oracle_bound() points; larger input throws
  // TaxonomyError.
  bool member(NamedCategory const& f, Partition const& p);

  std::size_t group_oracle_bound() noexcept;
  // Clears the cache when the bound changes.
  void set_group_oracle_bound(std::size_t bound);

  // Canonical representative under the equalities between families.
  NamedCategory normalize_params(NamedCategory const& f);

  // The group-case family generated by f and the crossing partition.
  NamedCategory group_case_of(NamedCategory const& f);

  // Parameters the classification attaches to a family.
  struct ExpectedSignature {
    Case                        kase = Case::O;
    Colorization                colorization = Colorization::local;
    std::int64_t                k = 0;
    std::int64_t                d = 0;
    std::optional<std::int64_t> r;

    bool operator==(ExpectedSignature const&) const = default;
  };

  // Only for noncrossing families.
  ExpectedSignature expected_signature(NamedCategory const& f);

  // All valid noncrossing families with parameters at most max_param.
  std::vector<NamedCategory> noncrossing_families(std::int64_t max_param);
  // All valid group-case families with parameters at most max_param.
  std::vector<NamedCategory> group_families(std::int64_t max_param);

  // Named generator partitions.
  namespace shapes {
    Partition singletons(Color c, std::size_t count);  // ↑^{⊗count}
    Partition block(std::int64_t s);                   // b_s
    Partition pair_ww_pair_bb();                       // ⊓ww ⊗ ⊓bb
    Partition four_block_wbwb();
    Partition four_block_wwbb();
    Partition singleton_pair();                        // ↑w ⊗ ↑b
    Partition crossing();                              // ww|ww|0,1,1,0
    // ↑w^{⊗d} followed by a white-black pair around ↑b^{⊗d}.
    Partition positioner(std::int64_t d);
    // ↑w^{⊗(t+1)} followed by a black-black pair around ↑w^{⊗(1-t)};
    // negative powers of ↑w mean ↑b.
    Partition bb_positioner(std::int64_t t);
  }  // namespace shapes

}  // namespace pcat
