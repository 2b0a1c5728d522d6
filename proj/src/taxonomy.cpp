#include "pcat/taxonomy.hpp"

#include <charconv>
#include <map>
#include <mutex>

#include "facts.hpp"
#include "pcat/ops.hpp"

namespace pcat {

  namespace {

    struct FamilyInfo {
      Family      family;
      char const* name;
      std::size_t arity;
      bool        group;
    };

    constexpr std::array<FamilyInfo, 18> infos{{
        {Family::O_glob, "O_glob", 1, false},
        {Family::O_loc, "O_loc", 0, false},
        {Family::H_glob, "H_glob", 1, false},
        {Family::Hprime_loc, "H'_loc", 0, false},
        {Family::H_loc, "H_loc", 2, false},
        {Family::S_glob, "S_glob", 1, false},
        {Family::S_loc, "S_loc", 2, false},
        {Family::B_glob, "B_glob", 1, false},
        {Family::Bprime_glob, "B'_glob", 1, false},
        {Family::B_loc, "B_loc", 2, false},
        {Family::Bprime_loc, "B'_loc", 3, false},
        {Family::Ogrp_glob, "O_grp_glob", 1, true},
        {Family::Ogrp_loc, "O_grp_loc", 0, true},
        {Family::Hgrp_glob, "H_grp_glob", 1, true},
        {Family::Hgrp_loc, "H_grp_loc", 2, true},
        {Family::Sgrp_glob, "S_grp_glob", 1, true},
        {Family::Bgrp_glob, "B_grp_glob", 1, true},
        {Family::Bgrp_loc, "B_grp_loc", 1, true},
    }};

    FamilyInfo const& info(Family f) {
      return infos[static_cast<std::size_t>(f)];
    }

    bool divides(std::int64_t d, std::int64_t k) {
      return d == 0 ? k == 0 : k % d == 0;
    }

    bool even(std::int64_t k) {
      return k % 2 == 0;
    }

    std::string check(Family f, std::span<std::int64_t const> p) {
      auto const k = p.size() > 0 ? p[0] : 0;
      auto const d = p.size() > 1 ? p[1] : 0;
      auto const r = p.size() > 2 ? p[2] : 0;
      switch (f) {
        case Family::O_glob:
        case Family::H_glob:
        case Family::Ogrp_glob:
        case Family::Hgrp_glob:
        case Family::B_glob:
          return even(k) ? "" : "k must be even";
        case Family::H_loc:
        case Family::Hgrp_loc:
          if (k == 1 || k == 2 || d == 1 || d == 2) {
            return "k and d must not be 1 or 2";
          }
          return divides(d, k) ? "" : "d must divide k";
        case Family::S_loc:
          if (k == 1 || d == 1) {
            return "k and d must not be 1";
          }
          return divides(d, k) ? "" : "d must divide k";
        case Family::B_loc:
          return divides(d, k) ? "" : "d must divide k";
        case Family::Bprime_loc:
          if (k == 1 || d == 1) {
            return "k and d must not be 1";
          }
          if (!divides(d, k)) {
            return "d must divide k";
          }
          if (r != 0 && !(even(d) && r == d / 2)) {
            return "r must be 0 or d/2";
          }
          return r == 1 ? "r must not be 1" : "";
        default:
          return "";
      }
    }

    Partition from_text(char const* text) {
      return parse_text(text);
    }

  }  // namespace

  std::size_t arity(Family f) noexcept {
    return info(f).arity;
  }

  bool is_group_case(Family f) noexcept {
    return info(f).group;
  }

  char const* to_string(Family f) noexcept {
    return info(f).name;
  }

  NamedCategory NamedCategory::unchecked(Family                    f,
                                         std::vector<std::int64_t> params) {
    if (params.size() != arity(f)) {
      throw TaxonomyError(std::string(to_string(f)) + " takes "
                          + std::to_string(arity(f)) + " parameters");
    }
    for (auto v : params) {
      if (v < 0) {
        throw TaxonomyError("parameters must be non-negative");
      }
    }
    NamedCategory out;
    out._family = f;
    out._params = std::move(params);
    return out;
  }

  NamedCategory NamedCategory::make(Family f, std::vector<std::int64_t> params) {
    auto out = unchecked(f, std::move(params));
    if (auto why = check(f, out._params); !why.empty()) {
      throw TaxonomyError(format_family(out) + ": " + why);
    }
    return out;
  }

  bool NamedCategory::valid() const noexcept {
    return check(_family, _params).empty();
  }

  NamedCategory parse_family(std::string_view text, bool strict) {
    std::string s;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') {
        s.push_back(ch);
      }
    }
    auto const open = s.find('(');
    std::string name = s.substr(0, open);
    if (auto at = name.find("prime"); at != std::string::npos) {
      name.replace(at, 5, "'");
    }
    if (auto at = name.find("grp_"); at != std::string::npos && at > 0
                                      && name[at - 1] != '_') {
      name.insert(at, "_");
    }
    Family family{};
    bool   found = false;
    for (auto const& i : infos) {
      if (name == i.name) {
        family = i.family;
        found  = true;
      }
    }
    if (!found) {
      throw TaxonomyError("unknown family '" + std::string(text) + "'");
    }
    std::vector<std::int64_t> params;
    if (open != std::string::npos) {
      if (s.back() != ')') {
        throw TaxonomyError("missing ')' in '" + std::string(text) + "'");
      }
      std::string_view rest(s);
      rest = rest.substr(open + 1, s.size() - open - 2);
      while (!rest.empty()) {
        std::int64_t v   = 0;
        auto [ptr, ec]   = std::from_chars(rest.data(),
                                         rest.data() + rest.size(), v);
        if (ec != std::errc{}) {
          throw TaxonomyError("bad parameter in '" + std::string(text) + "'");
        }
        params.push_back(v);
        rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
        if (!rest.empty()) {
          if (rest.front() != ',' || rest.size() == 1) {
            throw TaxonomyError("bad parameter list in '" + std::string(text)
                                + "'");
          }
          rest.remove_prefix(1);
        }
      }
    }
    return strict ? NamedCategory::make(family, std::move(params))
                  : NamedCategory::unchecked(family, std::move(params));
  }

  std::string format_family(NamedCategory const& f) {
    std::string out = to_string(f.family());
    if (!f.params().empty()) {
      out += '(';
      for (std::size_t i = 0; i < f.params().size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(f.params()[i]);
      }
      out += ')';
    }
    return out;
  }

  namespace shapes {

    Partition singletons(Color c, std::size_t count) {
      std::vector<Color>       lower(count, c);
      std::vector<std::size_t> ids(count);
      std::iota(ids.begin(), ids.end(), std::size_t(0));
      return make_partition({}, lower, ids);
    }

    Partition block(std::int64_t s) {
      return block_partition(s);
    }

    Partition pair_ww_pair_bb() {
      return from_text("|wwbb|0,0,1,1");
    }

    Partition four_block_wbwb() {
      return from_text("|wbwb|0,0,0,0");
    }

    Partition four_block_wwbb() {
      return from_text("|wwbb|0,0,0,0");
    }

    Partition singleton_pair() {
      return from_text("|wb|0,1");
    }

    Partition crossing() {
      return from_text("ww|ww|0,1,1,0");
    }

    namespace {
      // ↑w^{⊗outer}, a leg of color first, ↑^{inner} (white for inner > 0,
      // black otherwise), a leg of color last.
      Partition around(std::int64_t outer, Color first, std::int64_t inner,
                       Color last) {
        std::vector<Color>       lower;
        std::vector<std::size_t> ids;
        std::size_t              next = 1;
        for (std::int64_t i = 0; i < outer; ++i) {
          lower.push_back(Color::white);
          ids.push_back(next++);
        }
        lower.push_back(first);
        ids.push_back(0);
        Color const c = inner > 0 ? Color::white : Color::black;
        for (std::int64_t i = 0; i < std::abs(inner); ++i) {
          lower.push_back(c);
          ids.push_back(next++);
        }
        lower.push_back(last);
        ids.push_back(0);
        return make_partition({}, lower, ids);
      }
    }  // namespace

    Partition positioner(std::int64_t d) {
      return around(d, Color::white, -d, Color::black);
    }

    Partition bb_positioner(std::int64_t t) {
      return around(t + 1, Color::black, 1 - t, Color::black);
    }

  }  // namespace shapes

  std::vector<Partition> generators_for(NamedCategory const& f) {
    using namespace shapes;
    auto const             k = f.k();
    auto const             d = f.d();
    std::vector<Partition> out;
    auto white_singletons = [&] {
      if (k > 0) {
        out.push_back(singletons(Color::white, static_cast<std::size_t>(k)));
      }
    };
    auto block_k = [&] {
      if (k > 0) {
        out.push_back(block(k));
      }
    };
    auto block_pair_d = [&] {
      if (d > 0) {
        out.push_back(tensor(block(d), block(-d)));
      }
    };
    auto white_pairs = [&] {
      Partition p;
      for (std::int64_t i = 0; i < k / 2; ++i) {
        p = tensor(p, from_text("|ww|0,0"));
      }
      if (!p.empty()) {
        out.push_back(p);
      }
    };
    switch (f.family()) {
      case Family::O_glob:
      case Family::Ogrp_glob:
        white_pairs();
        out.push_back(pair_ww_pair_bb());
        break;
      case Family::O_loc:
      case Family::Ogrp_loc:
        break;
      case Family::H_glob:
      case Family::Hgrp_glob:
        block_k();
        out.push_back(four_block_wbwb());
        out.push_back(pair_ww_pair_bb());
        break;
      case Family::Hprime_loc:
        out.push_back(four_block_wbwb());
        break;
      case Family::H_loc:
        block_k();
        block_pair_d();
        out.push_back(four_block_wwbb());
        out.push_back(four_block_wbwb());
        break;
      case Family::Hgrp_loc:
        block_k();
        block_pair_d();
        out.push_back(four_block_wbwb());
        break;
      case Family::S_glob:
      case Family::Sgrp_glob:
        white_singletons();
        out.push_back(four_block_wbwb());
        out.push_back(singleton_pair());
        out.push_back(pair_ww_pair_bb());
        break;
      case Family::S_loc:
        white_singletons();
        out.push_back(positioner(d));
        out.push_back(four_block_wbwb());
        out.push_back(singleton_pair());
        break;
      case Family::B_glob:
      case Family::Bgrp_glob:
        white_singletons();
        out.push_back(singleton_pair());
        out.push_back(pair_ww_pair_bb());
        break;
      case Family::Bprime_glob:
        white_singletons();
        out.push_back(positioner(1));
        out.push_back(singleton_pair());
        out.push_back(pair_ww_pair_bb());
        break;
      case Family::B_loc:
        white_singletons();
        out.push_back(positioner(d));
        out.push_back(singleton_pair());
        break;
      case Family::Bprime_loc:
        white_singletons();
        out.push_back(positioner(d));
        out.push_back(bb_positioner(f.r()));
        out.push_back(singleton_pair());
        break;
      case Family::Bgrp_loc:
        white_singletons();
        out.push_back(singleton_pair());
        break;
    }
    if (f.is_group_case()) {
      out.push_back(crossing());
    }
    return out;
  }

  NamedCategory normalize_params(NamedCategory const& f) {
    auto const k = f.k();
    auto const d = f.d();
    switch (f.family()) {
      case Family::H_glob:
        if (!even(k)) {
          return NamedCategory::unchecked(Family::S_loc, {k, 1});
        }
        return NamedCategory::unchecked(Family::H_loc, {k, 2});
      case Family::H_loc:
        if (d == 1) {
          return NamedCategory::unchecked(Family::S_loc, {k, 1});
        }
        return f;
      case Family::S_glob:
        return NamedCategory::unchecked(Family::S_loc, {k, 1});
      case Family::B_glob:
        if (!even(k)) {
          return NamedCategory::unchecked(Family::Bprime_loc, {k, 1, 0});
        }
        return NamedCategory::unchecked(Family::Bprime_loc, {k, 2, 1});
      case Family::Bprime_glob:
        return NamedCategory::unchecked(Family::Bprime_loc, {k, 1, 0});
      case Family::Bprime_loc:
        if (d == 1) {
          return NamedCategory::unchecked(Family::Bprime_loc, {k, 1, 0});
        }
        return f;
      default:
        return f;
    }
  }

  NamedCategory group_case_of(NamedCategory const& f) {
    auto const k = f.k();
    switch (f.family()) {
      case Family::O_glob:
        return NamedCategory::unchecked(Family::Ogrp_glob, {k});
      case Family::O_loc:
        return NamedCategory::unchecked(Family::Ogrp_loc);
      case Family::H_glob:
        return NamedCategory::unchecked(Family::Hgrp_glob, {k});
      case Family::Hprime_loc:
        return NamedCategory::unchecked(Family::Hgrp_loc, {0, 0});
      case Family::H_loc:
        return NamedCategory::unchecked(Family::Hgrp_loc, {k, f.d()});
      case Family::S_glob:
      case Family::S_loc:
        return NamedCategory::unchecked(Family::Sgrp_glob, {k});
      case Family::B_glob:
      case Family::Bprime_glob:
      case Family::Bprime_loc:
        return NamedCategory::unchecked(Family::Bgrp_glob, {k});
      case Family::B_loc:
        return NamedCategory::unchecked(Family::Bgrp_loc, {k});
      default:
        return f;
    }
  }

  namespace detail {

    Predicate compile_raw(NamedCategory const& f) {
      switch (f.family()) {
        case Family::O_loc:
        case Family::O_glob:
        case Family::Hprime_loc:
        case Family::H_loc:
        case Family::S_loc:
        case Family::Bprime_loc:
        case Family::B_loc:
          return Predicate{f.family(), f.k(), f.d(), f.r()};
        default:
          throw TaxonomyError(format_family(f)
                              + " has no closed-form description");
      }
    }

    Predicate compile(NamedCategory const& f) {
      return compile_raw(normalize_params(f));
    }

    bool Predicate::operator()(Facts const& x) const {
      auto const& s = *x.shape;
      auto local = [&](std::int64_t offset) {
        return x.at(EndpointColors::wb).within(d, 0)
               && x.at(EndpointColors::bw).within(d, 0)
               && x.at(EndpointColors::bb).within(d, offset)
               && x.at(EndpointColors::ww).within(d, -offset);
      };
      bool const pairs_only = s.max_block <= 2 && (s.n == 0 || s.min_block == 2);
      switch (family) {
        case Family::O_loc:
          return pairs_only && x.pairs_bicolored;
        case Family::O_glob:
          return pairs_only && in_multiples(x.c, k);
        case Family::Hprime_loc:
          return s.all_even && x.alternating;
        case Family::H_loc:
          return (s.n == 0 || s.min_block >= 2) && in_multiples(x.c, k)
                 && x.at(EndpointColors::wb).within(d, 0)
                 && x.at(EndpointColors::bw).within(d, 0)
                 && x.at(EndpointColors::ww).within(d, 0)
                 && x.at(EndpointColors::bb).within(d, 0);
        case Family::S_loc:
          return in_multiples(x.c, k) && local(1);
        case Family::Bprime_loc:
          return s.max_block <= 2 && in_multiples(x.c, k) && local(r + 1);
        case Family::B_loc:
          return s.max_block <= 2 && x.pairs_bicolored
                 && in_multiples(x.c, k) && local(1);
        default:
          return false;
      }
    }

  }  // namespace detail

  namespace {

    struct GroupOracle {
      std::mutex                               lock;
      std::size_t                              bound = 6;
      std::map<NamedCategory, ClosureSet>      cache;
    };

    GroupOracle& group_oracle() {
      static GroupOracle oracle;
      return oracle;
    }

  }  // namespace

  std::size_t group_oracle_bound() noexcept {
    auto&            o = group_oracle();
    std::scoped_lock guard(o.lock);
    return o.bound;
  }

  void set_group_oracle_bound(std::size_t bound) {
    if (bound < 2 || bound > 16) {
      throw TaxonomyError("group oracle bound must lie in [2, 16]");
    }
    auto&            o = group_oracle();
    std::scoped_lock guard(o.lock);
    if (bound != o.bound) {
      o.cache.clear();
      o.bound = bound;
    }
  }

  bool member(NamedCategory const& f, Partition const& p) {
    if (f.is_group_case()) {
      auto&            o = group_oracle();
      std::scoped_lock guard(o.lock);
      if (p.size() > o.bound) {
        throw TaxonomyError("membership in " + format_family(f)
                            + " is decided by closure up to "
                            + std::to_string(o.bound) + " points");
      }
      auto it = o.cache.find(f);
      if (it == o.cache.end()) {
        it = o.cache.emplace(f, closure(generators_for(f), o.bound)).first;
      }
      return it->second.contains(p);
    }
    if (!is_noncrossing(p)) {
      return false;
    }
    auto const           blocks = one_line_blocks(p);
    auto const           colors = one_line_colors(p);
    auto const           shape  = detail::shape_of(blocks);
    std::vector<std::uint8_t> bits(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
      bits[i] = colors[i] == Color::black;
    }
    return detail::compile(f)(detail::facts_of(shape, bits.data()));
  }

  ExpectedSignature expected_signature(NamedCategory const& f) {
    ExpectedSignature s;
    auto const        k = f.k();
    auto const        d = f.d();
    auto set = [&](Case kase, Colorization col, std::int64_t kk,
                   std::int64_t dd, std::optional<std::int64_t> r) {
      s.kase         = kase;
      s.colorization = col;
      s.k            = kk;
      s.d            = dd;
      s.r            = r;
    };
    auto const global = Colorization::global;
    auto const local  = Colorization::local;
    switch (f.family()) {
      case Family::O_loc:
        set(Case::O, local, 0, 0, std::nullopt);
        break;
      case Family::O_glob:
        set(Case::O, global, k, 2, 1);
        break;
      case Family::Hprime_loc:
        set(Case::H, local, 0, 0, std::nullopt);
        break;
      case Family::H_glob:
        set(Case::H, global, k, 2, 1);
        break;
      case Family::H_loc:
        set(Case::H, local, k, d,
            d >= 1 ? std::optional<std::int64_t>(d - 1) : std::nullopt);
        break;
      case Family::S_glob:
        set(Case::S, global, k, 1, 0);
        break;
      case Family::S_loc:
        set(Case::S, local, k, d, 0);
        break;
      case Family::B_glob:
        set(Case::B, global, k, 2, 1);
        break;
      case Family::Bprime_glob:
        set(Case::B, global, k, 1, 0);
        break;
      case Family::B_loc:
        set(Case::B, local, k, d, std::nullopt);
        break;
      case Family::Bprime_loc:
        set(Case::B, local, k, d, f.r());
        break;
      default:
        throw TaxonomyError("no signature for group-case family "
                            + format_family(f));
    }
    return s;
  }

  namespace {

    void push_if_valid(std::vector<NamedCategory>& out, Family f,
                       std::vector<std::int64_t> params) {
      if (check(f, params).empty()) {
        out.push_back(NamedCategory::unchecked(f, std::move(params)));
      }
    }

    void sweep(std::vector<NamedCategory>& out, Family f, std::int64_t max) {
      switch (arity(f)) {
        case 0:
          push_if_valid(out, f, {});
          break;
        case 1:
          for (std::int64_t k = 0; k <= max; ++k) {
            push_if_valid(out, f, {k});
          }
          break;
        case 2:
          for (std::int64_t k = 0; k <= max; ++k) {
            for (std::int64_t d = 0; d <= max; ++d) {
              push_if_valid(out, f, {k, d});
            }
          }
          break;
        default:
          for (std::int64_t k = 0; k <= max; ++k) {
            for (std::int64_t d = 0; d <= max; ++d) {
              for (std::int64_t r = 0; r <= max; ++r) {
                push_if_valid(out, f, {k, d, r});
              }
            }
          }
      }
    }

  }  // namespace

  std::vector<NamedCategory> noncrossing_families(std::int64_t max_param) {
    std::vector<NamedCategory> out;
    for (auto f : all_families) {
      if (!is_group_case(f)) {
        sweep(out, f, max_param);
      }
    }
    return out;
  }

  std::vector<NamedCategory> group_families(std::int64_t max_param) {
    std::vector<NamedCategory> out;
    for (auto f : all_families) {
      if (is_group_case(f)) {
        sweep(out, f, max_param);
      }
    }
    return out;
  }

}  // namespace pcat
