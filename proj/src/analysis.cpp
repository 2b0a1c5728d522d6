#include "pcat/analysis.hpp"

#include <bit>
#include <numeric>
#include <sstream>

#include "closure_store.hpp"
#include "pcat/ops.hpp"

namespace pcat {

  namespace {

    EndpointColors mirror(EndpointColors e) {
      switch (e) {
        case EndpointColors::ww:
          return EndpointColors::bb;
        case EndpointColors::bb:
          return EndpointColors::ww;
        default:
          return e;
      }
    }

    std::int64_t c_of(detail::Word const& w) {
      return static_cast<std::int64_t>(w.n)
             - 2 * static_cast<std::int64_t>(std::popcount(w.colors));
    }

    void scan_word(detail::Word const& w, KSets& out) {
      auto const               p = detail::unpack(w);
      std::vector<Color>       colors(p.n);
      std::vector<std::size_t> blocks(p.n);
      for (std::uint32_t i = 0; i < p.n; ++i) {
        colors[i] = p.color[i] ? Color::black : Color::white;
        blocks[i] = p.block[i];
      }
      for_each_nest_decomposition(
          std::span<Color const>(colors),
          std::span<std::size_t const>(blocks),
          [&out](NestDecomposition const& nd) {
            out.observed[nd.ends].insert(nd.c_outer);
            out.observed[mirror(nd.ends)].insert(-nd.c_outer);
          });
    }

  }  // namespace

  char const* to_string(EndpointColors e) noexcept {
    switch (e) {
      case EndpointColors::wb:
        return "wb";
      case EndpointColors::bw:
        return "bw";
      case EndpointColors::ww:
        return "ww";
      case EndpointColors::bb:
        return "bb";
    }
    return "?";
  }

  char const* to_string(Case c) noexcept {
    switch (c) {
      case Case::O:
        return "O";
      case Case::H:
        return "H";
      case Case::S:
        return "S";
      case Case::B:
        return "B";
    }
    return "?";
  }

  char const* to_string(Colorization c) noexcept {
    return c == Colorization::global ? "global" : "local";
  }

  ColorCount color_counts(Partition const& p) {
    ColorCount out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool const upper = i < p.upper_size();
      bool const white = p.color(i) == Color::white;
      if (white != upper) {
        ++out.c_white;
      } else {
        ++out.c_black;
      }
    }
    out.c = out.c_white - out.c_black;
    return out;
  }

  std::vector<NestDecomposition> ndf_scan(Partition const& p) {
    auto const colors = one_line_colors(p);
    auto const blocks = one_line_blocks(p);
    std::vector<NestDecomposition> out;
    for_each_nest_decomposition(
        std::span<Color const>(colors),
        std::span<std::size_t const>(blocks),
        [&out](NestDecomposition const& nd) { out.push_back(nd); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Progression fit_progression(std::set<std::int64_t> const& values) {
    Progression out;
    if (values.empty()) {
      return out;
    }
    out.empty = false;
    std::int64_t const first = *values.begin();
    std::int64_t       g     = 0;
    for (auto v : values) {
      g = std::gcd(g, v - first);
    }
    out.modulus = g;
    if (g == 0) {
      out.offset = first;
      return out;
    }
    out.offset = ((first % g) + g) % g;
    std::int64_t const span = (*values.rbegin() - first) / g + 1;
    out.consistent = span == static_cast<std::int64_t>(values.size());
    return out;
  }

  std::set<std::int64_t> const& KSets::at(EndpointColors e) const {
    static std::set<std::int64_t> const none;
    auto it = observed.find(e);
    return it == observed.end() ? none : it->second;
  }

  std::int64_t k_of(ClosureSet const& cs) {
    std::int64_t best = 0;
    for (auto const& w : store_of(cs).reps) {
      std::int64_t c = std::abs(c_of(w));
      if (c != 0 && (best == 0 || c < best)) {
        best = c;
      }
    }
    return best;
  }

  KSets k_sets(ClosureSet const& cs) {
    KSets out;
    for (auto e : all_endpoint_colors) {
      out.observed[e];
    }
    for (auto const& w : store_of(cs).reps) {
      scan_word(w, out);
    }
    for (auto const& [e, values] : out.observed) {
      out.fitted[e] = fit_progression(values);
    }
    return out;
  }

  namespace {

    std::int64_t d_from(KSets const& ks) {
      for (auto v : ks.at(EndpointColors::wb)) {
        if (v > 0) {
          return v;
        }
      }
      return 0;
    }

    std::optional<std::int64_t> r_from(KSets const& ks) {
      for (auto v : ks.at(EndpointColors::bb)) {
        if (v >= 1) {
          return v - 1;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::int64_t d_of(ClosureSet const& cs) {
    return d_from(k_sets(cs));
  }

  std::optional<std::int64_t> r_of(ClosureSet const& cs) {
    return r_from(k_sets(cs));
  }

  CategorySignature signature(ClosureSet const& cs) {
    if (cs.bound() < 4) {
      throw ClosureError("a signature needs a closure bound of at least 4");
    }
    CategorySignature s;
    bool const singletons = cs.contains(parse_text("|wb|0,1"));
    bool const four_block = cs.contains(parse_text("|wbwb|0,0,0,0"));
    if (singletons) {
      s.kase = four_block ? Case::S : Case::B;
    } else {
      s.kase = four_block ? Case::H : Case::O;
    }
    s.colorization = cs.contains(parse_text("|wwbb|0,0,1,1"))
                         ? Colorization::global
                         : Colorization::local;
    s.k_hat = k_of(cs);
    s.ksets = k_sets(cs);
    s.d_hat = d_from(s.ksets);
    s.r_hat = r_from(s.ksets);
    auto const& report = cs.report();
    s.stabilized = report.stabilized;
    s.truncated  = !report.stabilized;
    return s;
  }

  std::string format_signature(CategorySignature const& s) {
    std::ostringstream out;
    out << "case=" << to_string(s.kase) << '\n';
    out << "colorization=" << to_string(s.colorization) << '\n';
    out << "k=" << s.k_hat << '\n';
    out << "d=" << s.d_hat << '\n';
    out << "r=";
    if (s.r_hat) {
      out << *s.r_hat;
    } else {
      out << "none";
    }
    out << '\n';
    for (auto e : all_endpoint_colors) {
      auto const& values = s.ksets.at(e);
      out << "K(" << to_string(e) << ")=";
      if (values.empty()) {
        out << "empty";
      } else {
        out << '{';
        bool first = true;
        for (auto v : values) {
          out << (first ? "" : ",") << v;
          first = false;
        }
        out << '}';
      }
      out << '\n';
      auto it = s.ksets.fitted.find(e);
      if (it != s.ksets.fitted.end() && !it->second.empty) {
        out << "K(" << to_string(e) << ").progression=" << it->second.modulus
            << "Z+" << it->second.offset
            << (it->second.consistent ? "" : " inconsistent") << '\n';
      }
    }
    out << "stabilized=" << (s.stabilized ? "true" : "false") << '\n';
    out << "truncated=" << (s.truncated ? "true" : "false") << '\n';
    return out.str();
  }

  Partition forget_colors(Partition const& p) {
    std::vector<Color> upper(p.upper_size(), Color::white);
    std::vector<Color> lower(p.lower_size(), Color::white);
    std::vector<std::size_t> ids(p.blocks().begin(), p.blocks().end());
    return make_partition(upper, lower, ids);
  }

  Partition block_partition(std::int64_t s) {
    std::size_t const        n = static_cast<std::size_t>(std::abs(s));
    std::vector<Color>       none;
    std::vector<Color>       colors(n, s > 0 ? Color::white : Color::black);
    std::vector<std::size_t> ids(n, 0);
    return make_partition(none, colors, ids);
  }

}  // namespace pcat
