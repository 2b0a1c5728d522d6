#include "pcat/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "closure_store.hpp"
#include "facts.hpp"
#include "json.hpp"
#include "pcat/analysis.hpp"
#include "pcat/enumerate.hpp"
#include "pcat/ops.hpp"

namespace pcat {

  namespace {

    using detail::Facts;
    using detail::Predicate;
    using detail::Shape;
    using detail::Word;
    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point start) {
      return std::chrono::duration<double>(Clock::now() - start).count();
    }

    std::vector<Shape> noncrossing_shapes(std::size_t n) {
      EnumerationFilter filter;
      filter.noncrossing_only = true;
      std::vector<Shape> out;
      for (auto const& ids : set_partitions({0, n}, filter)) {
        out.push_back(detail::shape_of(ids));
      }
      return out;
    }

    // Calls f(shape, colors) on every noncrossing one-line partition with n
    // points, in the order of Partition. colors[i] is 1 for black.
    template <typename F>
    void sweep(std::size_t n, std::vector<Shape> const& shapes, F&& f) {
      std::array<std::uint8_t, 2 * detail::max_word_points> colors{};
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
          colors[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1);
        }
        for (auto const& s : shapes) {
          f(s, colors.data());
        }
      }
    }

    Partition partition_from(Shape const& s, std::uint8_t const* colors) {
      std::vector<Color>       lower(s.n);
      std::vector<std::size_t> ids(s.n);
      for (std::uint32_t i = 0; i < s.n; ++i) {
        lower[i] = colors[i] ? Color::black : Color::white;
        ids[i]   = s.block[i];
      }
      return make_partition({}, lower, ids);
    }

    Word canonical_word(Shape const& s, std::uint8_t const* colors) {
      std::array<std::uint8_t, 2 * detail::max_word_points> block{};
      for (std::uint32_t i = 0; i < s.n; ++i) {
        block[i] = static_cast<std::uint8_t>(s.block[i]);
      }
      return detail::canonical(detail::pack(block.data(), colors, s.n));
    }

    Shape shape_of_word(Word const& w) {
      std::vector<std::size_t> blocks(w.n);
      for (std::uint32_t i = 0; i < w.n; ++i) {
        blocks[i] = (w.blocks >> (4 * i)) & 0xF;
      }
      return detail::shape_of(blocks);
    }

    std::array<std::uint8_t, 2 * detail::max_word_points>
    colors_of_word(Word const& w) {
      std::array<std::uint8_t, 2 * detail::max_word_points> out{};
      for (std::uint32_t i = 0; i < w.n; ++i) {
        out[i] = static_cast<std::uint8_t>((w.colors >> i) & 1);
      }
      return out;
    }

    std::int64_t c_of_word(Word const& w) {
      return static_cast<std::int64_t>(w.n)
             - 2 * static_cast<std::int64_t>(std::popcount(w.colors));
    }

    bool holds(std::function<bool(Facts const&)> const& test, Word const& w) {
      auto const shape = shape_of_word(w);
      if (!shape.noncrossing) {
        return false;
      }
      auto const colors = colors_of_word(w);
      return test(detail::facts_of(shape, colors.data()));
    }

    std::vector<std::uint64_t> padded(std::vector<std::uint64_t> v,
                                      std::size_t                bound) {
      v.resize(bound + 1, 0);
      return v;
    }

    std::string join_counts(std::vector<std::uint64_t> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v[i]);
      }
      return out;
    }

    std::string describe(StabilizationReport const& r) {
      std::ostringstream out;
      out << "orbits=" << r.orbits
          << " compositions=" << r.compositions_tried;
      if (r.target_reached) {
        out << " reached the predicate counts";
      } else if (r.compositions_complete) {
        out << " compositions complete";
      } else {
        out << " composition budget exhausted";
      }
      return out.str();
    }

    // Closure of generators compared with a predicate set given by its
    // one-line counts and its membership test.
    VerificationReport
    compare_closure(std::string subject, std::vector<Partition> const& gens,
                    std::size_t bound, std::vector<std::uint64_t> const& target,
                    std::function<bool(Facts const&)> const& test,
                    VerifyOptions const& options) {
      auto const         start = Clock::now();
      VerificationReport r;
      r.subject          = std::move(subject);
      r.bound            = bound;
      r.predicate_counts = padded(target, bound);
      ClosureOptions co;
      co.target_one_line_counts = r.predicate_counts;
      co.composition_budget     = options.composition_budget;
      auto const  cs            = closure(gens, bound, co);
      auto const& rep           = cs.report();
      r.closure_counts     = padded(rep.one_line_counts, bound);
      r.skipped_generators = rep.skipped_generators;
      r.stabilized         = rep.stabilized;

      std::vector<Partition> violations;
      for (auto const& w : store_of(cs).reps) {
        if (!holds(test, w)) {
          violations.push_back(detail::partition_of(w));
        }
      }
      std::string const how = describe(rep);
      if (!violations.empty()) {
        std::sort(violations.begin(), violations.end());
        r.outcome = Outcome::predicate_violation;
        r.detail  = std::to_string(violations.size())
                   + " closure orbits outside the predicate set; " + how;
        violations.resize(std::min(violations.size(), options.max_witnesses));
        r.witnesses = std::move(violations);
      } else if (r.closure_counts == r.predicate_counts) {
        r.outcome = Outcome::equal;
        r.detail  = "closure and predicate set agree; " + how;
      } else {
        // The smallest predicate members the closure misses.
        auto const& index = store_of(cs).index;
        for (std::size_t n = 0; n <= bound && r.witnesses.size() < options.max_witnesses; ++n) {
          if (r.closure_counts[n] == r.predicate_counts[n]) {
            continue;
          }
          auto const shapes = noncrossing_shapes(n);
          sweep(n, shapes, [&](Shape const& s, std::uint8_t const* colors) {
            if (r.witnesses.size() >= options.max_witnesses
                || !test(detail::facts_of(s, colors))) {
              return;
            }
            if (!index.contains(canonical_word(s, colors))) {
              r.witnesses.push_back(partition_from(s, colors));
            }
          });
        }
        bool const strict = rep.compositions_complete
                            && !rep.discarded_oversized
                            && rep.skipped_generators.empty();
        r.outcome = strict ? Outcome::closure_subset_strict
                           : Outcome::bound_insufficient;
        r.detail  = "closure misses predicate members; " + how;
        if (!rep.skipped_generators.empty()) {
          r.detail += "; generators above the bound were skipped";
        }
      }
      r.seconds = seconds_since(start);
      return r;
    }

    std::function<bool(Facts const&)> test_of(Predicate p) {
      return [p](Facts const& x) { return p(x); };
    }

    void require_noncrossing(NamedCategory const& f) {
      if (f.is_group_case()) {
        throw TaxonomyError(format_family(f)
                            + " is a group-case family; only noncrossing "
                              "families have a predicate set");
      }
    }

  }  // namespace

  char const* to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::equal:
        return "equal";
      case Outcome::closure_subset_strict:
        return "closure_subset_strict";
      case Outcome::predicate_violation:
        return "predicate_violation";
      case Outcome::bound_insufficient:
        return "bound_insufficient";
      case Outcome::passed:
        return "passed";
      case Outcome::failed:
        return "failed";
    }
    return "?";
  }

  bool is_failure(VerificationReport const& r) noexcept {
    return r.outcome == Outcome::predicate_violation
           || r.outcome == Outcome::failed;
  }

  std::vector<std::vector<std::uint64_t>>
  predicate_one_line_counts(std::span<NamedCategory const> families,
                            std::size_t                    bound) {
    std::vector<Predicate> tests;
    for (auto const& f : families) {
      require_noncrossing(f);
      tests.push_back(detail::compile(f));
    }
    std::vector<std::vector<std::uint64_t>> out(
        families.size(), std::vector<std::uint64_t>(bound + 1, 0));
    for (std::size_t n = 0; n <= bound; ++n) {
      auto const shapes = noncrossing_shapes(n);
      sweep(n, shapes, [&](Shape const& s, std::uint8_t const* colors) {
        auto const x = detail::facts_of(s, colors);
        for (std::size_t i = 0; i < tests.size(); ++i) {
          out[i][n] += tests[i](x) ? 1 : 0;
        }
      });
    }
    return out;
  }

  std::vector<VerificationReport>
  verify_categories(std::span<NamedCategory const> families, std::size_t bound,
                    VerifyOptions const& options) {
    auto const start  = Clock::now();
    auto const counts = predicate_one_line_counts(families, bound);
    double const share
        = families.empty() ? 0.0 : seconds_since(start) / families.size();
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < families.size(); ++i) {
      auto r = compare_closure(format_family(families[i]),
                               generators_for(families[i]), bound, counts[i],
                               test_of(detail::compile(families[i])), options);
      r.seconds += share;
      out.push_back(std::move(r));
    }
    return out;
  }

  VerificationReport verify_category(NamedCategory const& f, std::size_t bound,
                                     VerifyOptions const& options) {
    return verify_categories(std::span<NamedCategory const>(&f, 1), bound,
                             options)
        .front();
  }

  std::vector<NamedCategory> classification_families() {
    auto make = [](Family f, std::vector<std::int64_t> p = {}) {
      return NamedCategory::make(f, std::move(p));
    };
    return {make(Family::Hprime_loc),
            make(Family::H_loc, {0, 0}),
            make(Family::H_loc, {3, 3}),
            make(Family::H_loc, {4, 4}),
            make(Family::H_loc, {6, 3}),
            make(Family::S_loc, {0, 0}),
            make(Family::S_loc, {2, 2}),
            make(Family::S_loc, {4, 2}),
            make(Family::S_glob, {0}),
            make(Family::S_glob, {1}),
            make(Family::S_glob, {2}),
            make(Family::S_glob, {3}),
            make(Family::B_loc, {0, 0}),
            make(Family::B_loc, {2, 2}),
            make(Family::B_loc, {4, 2}),
            make(Family::B_loc, {4, 4}),
            make(Family::Bprime_loc, {0, 0, 0}),
            make(Family::Bprime_loc, {2, 2, 0}),
            make(Family::Bprime_loc, {4, 2, 0}),
            make(Family::Bprime_loc, {4, 4, 2}),
            make(Family::B_glob, {2}),
            make(Family::Bprime_glob, {0}),
            make(Family::Bprime_glob, {1}),
            make(Family::Bprime_glob, {2})};
  }

  namespace {

    std::int64_t c_of(Partition const& p) {
      return color_counts(p).c;
    }

    Partition random_partition(std::mt19937_64& rng, std::size_t max_points) {
      std::size_t const n
          = std::uniform_int_distribution<std::size_t>(0, max_points)(rng);
      std::size_t const upper
          = std::uniform_int_distribution<std::size_t>(0, n)(rng);
      std::vector<Color>       colors(n);
      std::vector<std::size_t> ids(n);
      std::size_t              blocks = 0;
      for (std::size_t i = 0; i < n; ++i) {
        ids[i] = std::uniform_int_distribution<std::size_t>(0, blocks)(rng);
        blocks = std::max(blocks, ids[i] + 1);
        colors[i] = (rng() & 1) ? Color::black : Color::white;
      }
      std::span<Color const> all(colors);
      return make_partition(all.first(upper), all.subspan(upper), ids);
    }

    // A partition whose upper row matches the given lower colors.
    Partition random_on_top(std::mt19937_64& rng, std::span<Color const> glued,
                            std::size_t max_points) {
      auto base = random_partition(rng, max_points - glued.size());
      auto const l = base.lower_size();
      std::vector<Color> upper(base.lower_colors().begin(),
                               base.lower_colors().end());
      std::vector<Color> lower(glued.begin(), glued.end());
      std::vector<std::size_t> ids;
      std::size_t              blocks = base.number_of_blocks();
      // Upper points of the result keep the base's lower blocks; the glued
      // row gets fresh random blocks.
      for (std::size_t i = 0; i < l; ++i) {
        ids.push_back(base.block(base.upper_size() + i));
      }
      for (std::size_t i = 0; i < glued.size(); ++i) {
        ids.push_back(std::uniform_int_distribution<std::size_t>(0, blocks)(rng));
        blocks = std::max(blocks, ids.back() + 1);
      }
      return make_partition(upper, lower, ids);
    }

    constexpr std::array<RotationKind, 6> all_rotations{
        RotationKind::upper_left_down,       RotationKind::lower_left_up,
        RotationKind::upper_right_down,      RotationKind::lower_right_up,
        RotationKind::one_line_left_to_right, RotationKind::one_line_right_to_left};

    struct LawTally {
      std::uint64_t          checks = 0;
      std::vector<Partition> witnesses;
      std::string            first;

      void expect(bool ok, std::string const& law,
                  std::initializer_list<Partition> ws) {
        ++checks;
        if (ok || !first.empty()) {
          return;
        }
        first = law;
        witnesses.assign(ws.begin(), ws.end());
      }
    };

    void unary_laws(Partition const& p, LawTally& t) {
      auto const c = c_of(p);
      t.expect(c_of(involution(p)) == -c, "c(p*) = -c(p)", {p});
      t.expect(c_of(verticolor_reflection(p)) == -c, "c(p~) = -c(p)", {p});
      for (auto kind : all_rotations) {
        try {
          auto const q = rotate(p, kind);
          t.expect(c_of(q) == c, "c(rotated p) = c(p)", {p, q});
        } catch (PartitionError const&) {
          // Rotation not applicable to this profile.
        }
      }
    }

    void tensor_law(Partition const& p, Partition const& q, LawTally& t) {
      t.expect(c_of(tensor(p, q)) == c_of(p) + c_of(q),
               "c(p (x) q) = c(p) + c(q)", {p, q});
    }

    void composition_law(Partition const& q, Partition const& p,
                         LawTally& t) {
      t.expect(c_of(compose(q, p)) == c_of(q) + c_of(p),
               "c(qp) = c(q) + c(p)", {q, p});
    }

  }  // namespace

  VerificationReport c_law_check(std::size_t exhaustive_points,
                                 std::size_t random_pairs,
                                 std::size_t random_points,
                                 std::uint64_t seed) {
    auto const         start = Clock::now();
    VerificationReport r;
    r.subject = "c-laws";
    r.bound   = exhaustive_points;
    r.seed    = seed;
    LawTally t;

    // Every partition with at most exhaustive_points points, by size.
    std::vector<std::vector<Partition>> by_size(exhaustive_points + 1);
    for (std::size_t n = 0; n <= exhaustive_points; ++n) {
      for (std::size_t upper = 0; upper <= n; ++upper) {
        enumerate({upper, n - upper}, {}, [&](Partition const& p) {
          by_size[n].push_back(p);
        });
      }
    }
    for (auto const& bucket : by_size) {
      for (auto const& p : bucket) {
        unary_laws(p, t);
      }
    }
    // Tensor products of pairs with at most exhaustive_points points in
    // total.
    for (std::size_t a = 0; a <= exhaustive_points; ++a) {
      for (std::size_t b = 0; a + b <= exhaustive_points; ++b) {
        for (auto const& p : by_size[a]) {
          for (auto const& q : by_size[b]) {
            tensor_law(p, q, t);
          }
        }
      }
    }
    // Compositions qp of pairs glued along l >= 1 points with
    // points(q) + points(p) <= exhaustive_points + 2.
    std::size_t const glued_total = exhaustive_points + 2;
    for (std::size_t l = 1; 2 * l <= glued_total; ++l) {
      for (std::size_t k = 0; k + 2 * l <= glued_total; ++k) {
        for (std::size_t m = 0; k + 2 * l + m <= glued_total; ++m) {
          std::map<std::vector<Color>, std::vector<Partition>> below;
          enumerate({l, m}, {}, [&](Partition const& p) {
            below[std::vector<Color>(p.upper_colors().begin(),
                                     p.upper_colors().end())]
                .push_back(p);
          });
          enumerate({k, l}, {}, [&](Partition const& q) {
            auto it = below.find(std::vector<Color>(q.lower_colors().begin(),
                                                    q.lower_colors().end()));
            if (it == below.end()) {
              return;
            }
            for (auto const& p : it->second) {
              composition_law(q, p, t);
            }
          });
        }
      }
    }
    std::uint64_t const exhaustive = t.checks;

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_pairs; ++i) {
      auto const p = random_partition(rng, random_points);
      auto const q = random_partition(rng, random_points);
      unary_laws(p, t);
      tensor_law(p, q, t);
      if (p.upper_size() <= random_points) {
        auto const top = random_on_top(rng, p.upper_colors(), random_points);
        composition_law(top, p, t);
      }
    }

    r.outcome = t.first.empty() ? Outcome::passed : Outcome::failed;
    r.detail  = std::to_string(exhaustive) + " exhaustive and "
               + std::to_string(t.checks - exhaustive) + " random checks";
    if (!t.first.empty()) {
      r.detail += "; violated: " + t.first;
      r.witnesses = t.witnesses;
    }
    r.seconds = seconds_since(start);
    return r;
  }

  namespace {

    enum Lemma : std::size_t {
      rotation,
      erasure,
      self_reflected,
      insertion,
      color_permutation,
      disconnect,
      singleton_colors,
      connect_any,
      same_block_colors,
      connect_inverse,
      shift_singleton,
      swap_singleton,
      min_block,
      max_block,
      c_multiples,
      k_sets_symmetric,
      k_sets_equal,
      d_divides_k,
      r_values,
      nr_lemmas
    };

    constexpr std::array<char const*, nr_lemmas> lemma_names{
        "closed under rotation and verticolor reflection",
        "erasing neighbouring points of inverse colors",
        "p1 (x) p1~ from p1 (x) p2",
        "placing a member between two legs",
        "color permutations with |wwbb|0,0,1,1",
        "disconnecting points with |wb|0,1",
        "swapping colors of neighbouring singletons with |wb|0,1",
        "connecting neighbouring blocks with |wwbb|0,0,0,0",
        "swapping colors within a block with |wwbb|0,0,0,0",
        "connecting blocks meeting at inverse colors with |wbwb|0,0,0,0",
        "shifting singletons with |wwbb|0,1,2,1",
        "swapping a singleton and an inverse neighbour with |wbwb|0,1,2,1",
        "blocks of size at least two without |wb|0,1",
        "blocks of size at most two without |wbwb|0,0,0,0",
        "c(p) in kZ",
        "K(wb) = K(bw) and K(ww) = -K(bb)",
        "equal K-sets with |wwbb|0,0,1,1 or |wwbb|0,0,0,0",
        "d divides k",
        "r in {0, d/2} and r != 1 in local case B"};

    struct LemmaTally {
      std::uint64_t          checks = 0;
      std::size_t            closures = 0;
      std::string            first;
      std::vector<Partition> witnesses;

      void expect(bool ok, std::string const& where,
                  std::initializer_list<Partition> ws) {
        ++checks;
        if (ok || !first.empty()) {
          return;
        }
        first = where;
        witnesses.assign(ws.begin(), ws.end());
      }
    };

    struct Subject {
      std::string label;
      ClosureSet  cs;
    };

    Partition slice(Partition const& p, std::size_t from, std::size_t to) {
      std::vector<Color>       colors(p.colors().begin() + from,
                                      p.colors().begin() + to);
      std::vector<std::size_t> ids(p.blocks().begin() + from,
                                   p.blocks().begin() + to);
      return make_partition({}, colors, ids);
    }

    Partition swap_colors(Partition const& p, std::size_t i, std::size_t j) {
      std::vector<Color> colors(p.colors().begin(), p.colors().end());
      std::swap(colors[i], colors[j]);
      std::vector<std::size_t> ids(p.blocks().begin(), p.blocks().end());
      return make_partition({}, colors, ids);
    }

    std::array<std::set<std::int64_t>, 4> raw_k_sets(ClosureSet const& cs) {
      std::array<std::set<std::int64_t>, 4> out;
      for (auto const& w : store_of(cs).reps) {
        auto const points = detail::unpack(w);
        for (auto const& form : {points, detail::reflect(points)}) {
          std::vector<Color>       colors(form.n);
          std::vector<std::size_t> blocks(form.n);
          for (std::uint32_t i = 0; i < form.n; ++i) {
            colors[i] = form.color[i] ? Color::black : Color::white;
            blocks[i] = form.block[i];
          }
          for_each_nest_decomposition(
              std::span<Color const>(colors),
              std::span<std::size_t const>(blocks),
              [&out](NestDecomposition const& nd) {
                out[static_cast<std::size_t>(nd.ends)].insert(nd.c_outer);
              });
        }
      }
      return out;
    }

    std::set<std::int64_t> within(std::set<std::int64_t> const& values,
                                  std::int64_t                  limit) {
      std::set<std::int64_t> out;
      for (auto v : values) {
        if (std::abs(v) <= limit) {
          out.insert(v);
        }
      }
      return out;
    }

    std::set<std::int64_t> negated(std::set<std::int64_t> const& values) {
      std::set<std::int64_t> out;
      for (auto v : values) {
        out.insert(-v);
      }
      return out;
    }

    void member_lemmas(Subject const& s, Partition const& p,
                       std::vector<Partition> const& small,
                       std::array<bool, 5> const& has,
                       std::array<LemmaTally, nr_lemmas>& t) {
      auto const&       cs    = s.cs;
      std::size_t const n     = p.size();
      std::size_t const bound = cs.bound();
      auto const        sizes = block_sizes(p);
      auto in = [&](Lemma lemma, Partition const& q) {
        t[lemma].expect(cs.contains(q), s.label, {p, q});
      };
      auto const white  = [&](std::size_t i) { return p.color(i) == Color::white; };
      auto const single = [&](std::size_t i) { return sizes[p.block(i)] == 1; };

      in(rotation, verticolor_reflection(p));
      if (n > 0) {
        in(rotation, rotate(p, RotationKind::one_line_left_to_right));
        in(rotation, rotate(p, RotationKind::lower_left_up));
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (white(i) != white(i + 1)) {
          in(erasure, erase_neighbours(p, Row::lower, i));
        }
      }
      // Splits p = p1 (x) p2 where no block has legs on both sides.
      std::vector<std::size_t> first(p.number_of_blocks(), n), last(p.number_of_blocks(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        first[p.block(i)] = std::min(first[p.block(i)], i);
        last[p.block(i)]  = std::max(last[p.block(i)], i);
      }
      for (std::size_t cut = 1; cut < n; ++cut) {
        bool apart = true;
        for (std::size_t b = 0; b < first.size() && apart; ++b) {
          apart = last[b] < cut || first[b] >= cut;
        }
        if (!apart) {
          continue;
        }
        if (2 * cut <= bound) {
          auto const p1 = slice(p, 0, cut);
          in(self_reflected, tensor(p1, verticolor_reflection(p1)));
        }
        if (2 * (n - cut) <= bound) {
          auto const p2 = slice(p, cut, n);
          in(self_reflected, tensor(p2, verticolor_reflection(p2)));
        }
      }
      for (auto const& q : small) {
        if (n + q.size() > bound) {
          continue;
        }
        for (std::size_t gap = 0; gap <= n; ++gap) {
          in(insertion, insert_between_legs(p, q, gap));
        }
      }
      auto const [pairs, singles, four_wwbb, four_wbwb, positioner] = has;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (white(i) == white(j)) {
            continue;
          }
          if (pairs) {
            in(color_permutation, swap_colors(p, i, j));
          }
          if (j == i + 1 && singles && single(i) && single(j)) {
            in(singleton_colors, swap_colors(p, i, j));
          }
          if (j == i + 1 && four_wwbb && p.block(i) == p.block(j)) {
            in(same_block_colors, swap_colors(p, i, j));
          }
        }
        if (singles && !single(i)) {
          in(disconnect, derived_rewrite(p, rewrite::DisconnectPoint{i}));
        }
        if (i + 1 < n && p.block(i) != p.block(i + 1)) {
          if (four_wwbb) {
            in(connect_any,
               derived_rewrite(p, rewrite::ConnectAdjacentBlocks{i + 1}));
          }
          if (four_wbwb && white(i) != white(i + 1)) {
            in(connect_inverse,
               derived_rewrite(p, rewrite::ConnectAdjacentBlocks{i + 1}));
          }
        }
        if (positioner && single(i)) {
          for (std::size_t to = 0; to < n; ++to) {
            if (to != i) {
              in(shift_singleton,
                 derived_rewrite(p, rewrite::ShiftSingleton{i, to}));
            }
          }
        }
      }
    }

    void closure_lemmas(Subject const& s, std::mt19937_64& rng,
                        std::size_t per_size,
                        std::array<LemmaTally, nr_lemmas>& t) {
      auto const& cs = s.cs;
      std::array<bool, 5> const has{
          cs.contains(shapes::pair_ww_pair_bb()),
          cs.contains(shapes::singleton_pair()),
          cs.contains(shapes::four_block_wwbb()),
          cs.contains(shapes::four_block_wbwb()),
          cs.contains(shapes::positioner(1))};
      bool const swapper = cs.contains(shapes::bb_positioner(0));
      for (auto [lemma, applies] :
           {std::pair{color_permutation, has[0]}, {disconnect, has[1]},
            {singleton_colors, has[1]}, {connect_any, has[2]},
            {same_block_colors, has[2]}, {connect_inverse, has[3]},
            {shift_singleton, has[4]}, {swap_singleton, swapper},
            {min_block, !has[1]}, {max_block, !has[3]},
            {k_sets_equal, has[0] || has[2]}}) {
        t[lemma].closures += applies ? 1 : 0;
      }
      for (auto lemma : {rotation, erasure, self_reflected, insertion,
                         c_multiples, k_sets_symmetric, d_divides_k}) {
        ++t[lemma].closures;
      }

      // Orbit representatives, sampled per number of points.
      std::vector<std::vector<Partition>> reps(cs.bound() + 1);
      for (auto const& w : store_of(cs).reps) {
        reps[w.n].push_back(detail::partition_of(w));
      }
      std::vector<Partition> small;
      for (auto& bucket : reps) {
        std::sort(bucket.begin(), bucket.end());
        if (bucket.size() > per_size) {
          std::shuffle(bucket.begin(), bucket.end(), rng);
          bucket.resize(per_size);
          std::sort(bucket.begin(), bucket.end());
        }
        for (auto const& p : bucket) {
          if (p.size() > 0 && p.size() <= 4 && small.size() < 6) {
            small.push_back(p);
          }
        }
      }
      for (auto const& bucket : reps) {
        for (auto const& p : bucket) {
          member_lemmas(s, p, small, has, t);
          if (swapper) {
            auto const sizes = block_sizes(p);
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
              bool const one = sizes[p.block(i)] == 1
                               || sizes[p.block(i + 1)] == 1;
              if (one && p.color(i) != p.color(i + 1)) {
                auto const q
                    = derived_rewrite(p, rewrite::SwapSingletonInvert{i});
                t[swap_singleton].expect(cs.contains(q), s.label, {p, q});
              }
            }
          }
        }
      }

      // Properties of the whole closure.
      std::int64_t const k = k_of(cs);
      for (auto const& w : store_of(cs).reps) {
        auto const shape = shape_of_word(w);
        bool const some  = w.n > 0;
        if (!has[1]) {
          t[min_block].expect(!some || shape.min_block >= 2, s.label,
                              {detail::partition_of(w)});
        }
        if (!has[3]) {
          t[max_block].expect(shape.max_block <= 2, s.label,
                              {detail::partition_of(w)});
        }
        t[c_multiples].expect(detail::in_multiples(c_of_word(w), k),
                              s.label + ", k=" + std::to_string(k),
                              {detail::partition_of(w)});
      }
      auto const         raw   = raw_k_sets(cs);
      std::int64_t const limit = static_cast<std::int64_t>(cs.bound()) - 4;
      auto const at = [&](EndpointColors e) {
        return within(raw[static_cast<std::size_t>(e)], limit);
      };
      t[k_sets_symmetric].expect(
          at(EndpointColors::wb) == at(EndpointColors::bw)
              && at(EndpointColors::ww) == negated(at(EndpointColors::bb)),
          s.label, {});
      if (has[0] || has[2]) {
        t[k_sets_equal].expect(at(EndpointColors::wb) == at(EndpointColors::ww)
                                   && at(EndpointColors::wb)
                                          == at(EndpointColors::bb),
                               s.label, {});
      }
      auto const sig = signature(cs);
      t[d_divides_k].expect(
          k == 0 || (sig.d_hat != 0 && k % sig.d_hat == 0),
          s.label + ", k=" + std::to_string(k) + " d=" + std::to_string(sig.d_hat),
          {});
      if (sig.kase == Case::B && sig.colorization == Colorization::local) {
        ++t[r_values].closures;
        if (sig.r_hat) {
          auto const r = *sig.r_hat;
          t[r_values].expect(
              r != 1 && (r == 0 || (sig.d_hat % 2 == 0 && r == sig.d_hat / 2)),
              s.label + ", r=" + std::to_string(r), {});
        }
      }
    }

    std::vector<NamedCategory> lemma_families() {
      auto make = [](Family f, std::vector<std::int64_t> p = {}) {
        return NamedCategory::make(f, std::move(p));
      };
      return {make(Family::O_loc),
              make(Family::O_glob, {2}),
              make(Family::Hprime_loc),
              make(Family::H_loc, {0, 0}),
              make(Family::H_loc, {4, 4}),
              make(Family::S_loc, {0, 0}),
              make(Family::S_loc, {2, 2}),
              make(Family::S_glob, {1}),
              make(Family::B_loc, {0, 0}),
              make(Family::B_loc, {2, 2}),
              make(Family::Bprime_loc, {2, 2, 0}),
              make(Family::B_glob, {2}),
              make(Family::Bprime_glob, {1})};
    }

    Partition random_noncrossing(std::mt19937_64& rng, std::size_t max_points) {
      EnumerationFilter filter;
      filter.noncrossing_only = true;
      std::size_t const n
          = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
      auto const shapes = set_partitions({0, n}, filter);
      auto const& ids   = shapes[std::uniform_int_distribution<std::size_t>(
          0, shapes.size() - 1)(rng)];
      std::vector<Color> colors(n);
      for (auto& c : colors) {
        c = (rng() & 1) ? Color::black : Color::white;
      }
      return make_partition({}, colors, ids);
    }

  }  // namespace

  std::vector<VerificationReport> lemma_suite(std::size_t          bound,
                                              VerifyOptions const& options) {
    std::vector<VerificationReport> out;
    out.push_back(c_law_check(6, 10'000, 10, options.seed));

    auto const      start = Clock::now();
    std::mt19937_64 rng(options.seed);
    std::vector<Subject> subjects;
    std::vector<std::string> left_out;

    auto const families = lemma_families();
    auto const counts   = predicate_one_line_counts(families, bound);
    for (std::size_t i = 0; i < families.size(); ++i) {
      ClosureOptions co;
      co.target_one_line_counts = counts[i];
      co.composition_budget     = options.composition_budget;
      auto cs = closure(generators_for(families[i]), bound, co);
      if (cs.stabilized()) {
        subjects.push_back({format_family(families[i]), std::move(cs)});
      } else {
        left_out.push_back(format_family(families[i]));
      }
    }
    std::size_t const random_bound = std::min<std::size_t>(bound, 6);
    for (int i = 0; i < 10; ++i) {
      std::vector<Partition> gens{random_noncrossing(rng, 4)};
      if (rng() & 1) {
        gens.push_back(random_noncrossing(rng, 4));
      }
      std::string label = "<";
      for (auto const& g : gens) {
        label += (label.size() == 1 ? "" : ", ") + format_text(g);
      }
      label += ">";
      ClosureOptions co;
      co.composition_budget = options.composition_budget;
      auto cs = closure(gens, random_bound, co);
      if (cs.stabilized()) {
        subjects.push_back({label, std::move(cs)});
      } else {
        left_out.push_back(label);
      }
    }

    std::array<LemmaTally, nr_lemmas> tallies;
    for (auto const& s : subjects) {
      closure_lemmas(s, rng, 400, tallies);
    }
    double const share = seconds_since(start) / static_cast<double>(nr_lemmas);
    for (std::size_t i = 0; i < nr_lemmas; ++i) {
      auto const&        t = tallies[i];
      VerificationReport r;
      r.subject = lemma_names[i];
      r.bound   = bound;
      r.seed    = options.seed;
      r.stabilized = true;
      r.outcome = t.first.empty() ? Outcome::passed : Outcome::failed;
      r.detail  = std::to_string(t.checks) + " checks on "
                 + std::to_string(t.closures) + " of "
                 + std::to_string(subjects.size()) + " closures";
      if (i == k_sets_symmetric || i == k_sets_equal) {
        r.detail += "; values |c(p1)| <= " + std::to_string(bound - 4);
      }
      if (!left_out.empty()) {
        r.detail += "; not stabilized and left out:";
        for (auto const& l : left_out) {
          r.detail += " " + l;
        }
      }
      if (!t.first.empty()) {
        r.detail += "; fails in " + t.first;
        r.witnesses = t.witnesses;
      }
      r.seconds = share;
      out.push_back(std::move(r));
    }
    return out;
  }

  std::optional<Partition> separate(NamedCategory const& a,
                                    NamedCategory const& b,
                                    std::size_t          bound) {
    if (!a.is_group_case() && !b.is_group_case()) {
      auto const pa = detail::compile(a);
      auto const pb = detail::compile(b);
      for (std::size_t n = 0; n <= bound; ++n) {
        std::optional<Partition> found;
        auto const shapes = noncrossing_shapes(n);
        sweep(n, shapes, [&](Shape const& s, std::uint8_t const* colors) {
          if (found) {
            return;
          }
          auto const x = detail::facts_of(s, colors);
          if (pa(x) != pb(x)) {
            found = partition_from(s, colors);
          }
        });
        if (found) {
          return found;
        }
      }
      return std::nullopt;
    }
    // Rotation-invariant families differ on some one-line partition of the
    // smallest separating size, and those come first in the order.
    for (std::size_t n = 0; n <= bound; ++n) {
      std::optional<Partition> found;
      enumerate({0, n}, {}, [&](Partition const& p) {
        if (!found && member(a, p) != member(b, p)) {
          found = p;
        }
      });
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  }

  std::vector<Separation>
  distinctness_sweep(std::span<NamedCategory const> families,
                     std::size_t                    bound) {
    std::vector<Predicate> tests;
    for (auto const& f : families) {
      require_noncrossing(f);
      tests.push_back(detail::compile(f));
    }
    // Membership bits over the noncrossing one-line universe, in order.
    std::vector<std::vector<Shape>>          shapes(bound + 1);
    std::vector<std::uint64_t>               base(bound + 2, 0);
    for (std::size_t n = 0; n <= bound; ++n) {
      shapes[n]    = noncrossing_shapes(n);
      base[n + 1]  = base[n] + (std::uint64_t(1) << n) * shapes[n].size();
    }
    std::size_t const words = (base[bound + 1] + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(
        tests.size(), std::vector<std::uint64_t>(words, 0));
    std::uint64_t at = 0;
    for (std::size_t n = 0; n <= bound; ++n) {
      sweep(n, shapes[n], [&](Shape const& s, std::uint8_t const* colors) {
        auto const x = detail::facts_of(s, colors);
        for (std::size_t i = 0; i < tests.size(); ++i) {
          if (tests[i](x)) {
            bits[i][at / 64] |= std::uint64_t(1) << (at % 64);
          }
        }
        ++at;
      });
    }
    auto const partition_at = [&](std::uint64_t index) {
      std::size_t n = 0;
      while (base[n + 1] <= index) {
        ++n;
      }
      std::uint64_t const local = index - base[n];
      std::uint64_t const mask  = local / shapes[n].size();
      auto const&         s     = shapes[n][local % shapes[n].size()];
      std::array<std::uint8_t, 2 * detail::max_word_points> colors{};
      for (std::size_t i = 0; i < n; ++i) {
        colors[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1);
      }
      return partition_from(s, colors.data());
    };
    std::vector<Separation> out;
    for (std::size_t i = 0; i < tests.size(); ++i) {
      for (std::size_t j = i + 1; j < tests.size(); ++j) {
        Separation sep{families[i], families[j], std::nullopt};
        for (std::size_t w = 0; w < words; ++w) {
          if (auto diff = bits[i][w] ^ bits[j][w]; diff != 0) {
            sep.witness = partition_at(64 * w + std::countr_zero(diff));
            break;
          }
        }
        out.push_back(std::move(sep));
      }
    }
    return out;
  }

  VerificationReport distinctness_check(std::int64_t max_param,
                                        std::size_t  bound,
                                        std::size_t  extended_bound) {
    auto const         start = Clock::now();
    std::set<NamedCategory> normalized;
    for (auto const& f : noncrossing_families(max_param)) {
      normalized.insert(normalize_params(f));
    }
    std::vector<NamedCategory> families(normalized.begin(), normalized.end());
    auto const seps = distinctness_sweep(families, bound);
    VerificationReport r;
    r.subject = "pairwise distinct families with parameters <= "
                + std::to_string(max_param);
    r.bound = bound;
    std::size_t largest = 0;
    std::string larger, missing;
    for (auto const& s : seps) {
      if (s.witness) {
        largest = std::max(largest, s.witness->size());
        continue;
      }
      auto const pair = format_family(s.a) + "~" + format_family(s.b);
      if (auto w = extended_bound > bound
                       ? separate(s.a, s.b, extended_bound)
                       : std::nullopt) {
        larger += " " + pair + " (" + std::to_string(w->size()) + " points)";
        r.witnesses.push_back(std::move(*w));
      } else {
        missing += " " + pair;
      }
    }
    r.outcome = !missing.empty()  ? Outcome::failed
                : !larger.empty() ? Outcome::bound_insufficient
                                  : Outcome::passed;
    r.detail  = std::to_string(seps.size()) + " pairs of "
               + std::to_string(families.size())
               + " normalized families; largest least witness within the "
                 "bound has "
               + std::to_string(largest) + " points";
    if (!larger.empty()) {
      r.detail += "; separated only above the bound:" + larger;
    }
    if (!missing.empty()) {
      r.detail += "; no witness with at most "
                  + std::to_string(std::max(bound, extended_bound))
                  + " points for" + missing;
    }
    r.seconds = seconds_since(start);
    return r;
  }

  namespace {

    Partition with_colors(Partition const& p, std::uint64_t mask) {
      std::size_t const  n = p.size();
      std::vector<Color> colors(n);
      for (std::size_t i = 0; i < n; ++i) {
        colors[i] = ((mask >> (n - 1 - i)) & 1) ? Color::black : Color::white;
      }
      std::vector<std::size_t> ids(p.blocks().begin(), p.blocks().end());
      std::span<Color const>   all(colors);
      return make_partition(all.first(p.upper_size()),
                            all.subspan(p.upper_size()), ids);
    }

    Word recolored(Word w, std::uint64_t mask) {
      std::uint32_t colors = 0;
      for (std::uint32_t i = 0; i < w.n; ++i) {
        colors |= std::uint32_t((mask >> (w.n - 1 - i)) & 1) << i;
      }
      w.colors = colors;
      return detail::canonical(w);
    }

    std::vector<std::uint64_t> saturation_counts(ClosureSet const& cs) {
      absl::flat_hash_set<Word>  seen;
      std::vector<std::uint64_t> out(cs.bound() + 1, 0);
      for (auto const& w : store_of(cs).reps) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << w.n); ++mask) {
          auto const c = recolored(w, mask);
          if (seen.insert(c).second) {
            out[c.n] += detail::orbit(c).size();
          }
        }
      }
      return out;
    }

  }  // namespace

  std::optional<std::pair<Partition, Partition>>
  color_saturation_witness(ClosureSet const& cs) {
    auto const& store = store_of(cs);
    std::vector<std::pair<Partition, Word>> reps;
    for (auto const& w : store.reps) {
      reps.emplace_back(detail::partition_of(w), w);
    }
    std::sort(reps.begin(), reps.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    // Color permutations first, then recolorings that change c.
    for (bool same_c : {true, false}) {
      for (auto const& [p, w] : reps) {
        int const blacks = std::popcount(w.colors);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << w.n); ++mask) {
          if ((std::popcount(mask) == blacks) != same_c) {
            continue;
          }
          // The representative's one-line form is w itself.
          if (!store.index.contains(recolored(w, mask))) {
            return std::pair{p, with_colors(p, mask)};
          }
        }
      }
    }
    return std::nullopt;
  }

  VerificationReport
  one_color_correspondence_check(std::span<Partition const> generators,
                                 std::size_t                bound,
                                 VerifyOptions const&       options) {
    auto const         start = Clock::now();
    VerificationReport r;
    r.bound = bound;
    std::vector<Partition> colored;
    std::string            label;
    for (auto const& g : generators) {
      auto const key = forget_colors(g);
      label += (label.empty() ? "" : ", ") + format_text(key);
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << key.size()); ++mask) {
        colored.push_back(with_colors(key, mask));
      }
    }
    colored.push_back(parse_text("|ww|0,0"));
    r.subject = "color-saturated: colorings of {" + label + "} with |ww|0,0";

    // Raise the target to the saturation of the current closure until the
    // closure is saturated or cannot reach it.
    ClosureOptions co;
    co.composition_budget = options.composition_budget;
    auto cs = closure(colored, bound, co);
    std::size_t rounds = 0;
    for (;;) {
      auto const witness = color_saturation_witness(cs);
      if (!witness) {
        // A saturated but incomplete closure proves nothing.
        r.outcome = cs.stabilized() ? Outcome::passed
                                    : Outcome::bound_insufficient;
        break;
      }
      if (rounds++ == 4 || (rounds > 1 && !cs.report().target_reached)) {
        r.outcome = cs.report().compositions_complete
                        ? Outcome::failed
                        : Outcome::bound_insufficient;
        r.witnesses = {witness->first, witness->second};
        break;
      }
      co.target_one_line_counts = saturation_counts(cs);
      cs = closure(colored, bound, co);
    }
    auto const& rep = cs.report();
    r.closure_counts = padded(rep.one_line_counts, bound);
    r.stabilized     = rep.stabilized;
    r.detail = describe(rep);
    r.seconds = seconds_since(start);
    return r;
  }

  std::vector<VerificationReport>
  correspondence_suite(std::size_t bound, VerifyOptions const& options) {
    std::vector<VerificationReport> out;
    std::vector<std::vector<Partition>> const sets{
        {}, {shapes::block(4)}, {parse_text("|ww|0,1")}};
    for (auto const& g : sets) {
      out.push_back(one_color_correspondence_check(g, bound, options));
    }
    auto const         start = Clock::now();
    VerificationReport r;
    r.subject = "not color-saturated: H'_loc";
    r.bound   = bound;
    ClosureOptions co;
    co.composition_budget = options.composition_budget;
    auto const cs = closure(generators_for(NamedCategory::make(Family::Hprime_loc)),
                            bound, co);
    r.closure_counts = padded(cs.report().one_line_counts, bound);
    r.stabilized     = cs.stabilized();
    if (auto w = color_saturation_witness(cs)) {
      r.outcome   = Outcome::passed;
      r.witnesses = {w->first, w->second};
      r.detail    = "member " + format_text(w->first) + ", recoloring "
                 + format_text(w->second) + " is not a member";
    } else {
      r.outcome = Outcome::failed;
      r.detail  = "the closure is color-saturated";
    }
    r.seconds = seconds_since(start);
    out.push_back(std::move(r));
    return out;
  }

  namespace {

    struct NamedTest {
      std::string                       name;
      std::function<bool(Facts const&)> test;
    };

    NamedTest raw(Family f, std::vector<std::int64_t> params) {
      auto const family = NamedCategory::unchecked(f, std::move(params));
      return {format_family(family), test_of(detail::compile_raw(family))};
    }

    // Direct descriptions of the global families.
    NamedTest h_glob(std::int64_t k) {
      return {"H_glob(" + std::to_string(k) + ")", [k](Facts const& x) {
                return x.shape->all_even && detail::in_multiples(x.c, k);
              }};
    }

    NamedTest s_glob(std::int64_t k) {
      return {"S_glob(" + std::to_string(k) + ")",
              [k](Facts const& x) { return detail::in_multiples(x.c, k); }};
    }

    NamedTest b_glob(std::int64_t k) {
      return {"B_glob(" + std::to_string(k) + ")", [k](Facts const& x) {
                return x.shape->max_block <= 2 && x.shape->pair_gaps_even
                       && detail::in_multiples(x.c, k);
              }};
    }

    NamedTest bprime_glob(std::int64_t k) {
      return {"B'_glob(" + std::to_string(k) + ")", [k](Facts const& x) {
                return x.shape->max_block <= 2
                       && detail::in_multiples(x.c, k);
              }};
    }

  }  // namespace

  std::vector<VerificationReport>
  remark_equalities_check(std::size_t bound, std::int64_t max_param,
                          VerifyOptions const& options) {
    struct PredicatePair {
      NamedTest left, right;
    };
    struct GeneratorSide {
      NamedCategory family;
      NamedTest     right;
    };
    std::vector<PredicatePair> pairs;
    std::vector<GeneratorSide> sides;
    for (std::int64_t k = 0; k <= max_param; ++k) {
      bool const even = k % 2 == 0;
      if (even) {
        pairs.push_back({h_glob(k), raw(Family::H_loc, {k, 2})});
        pairs.push_back({b_glob(k), raw(Family::Bprime_loc, {k, 2, 1})});
        sides.push_back({NamedCategory::unchecked(Family::Bprime_loc, {k, 2, 1}),
                         b_glob(k)});
      } else {
        sides.push_back({NamedCategory::unchecked(Family::H_glob, {k}), s_glob(k)});
        sides.push_back({NamedCategory::unchecked(Family::B_glob, {k}),
                         bprime_glob(k)});
      }
      pairs.push_back({s_glob(k), raw(Family::S_loc, {k, 1})});
      pairs.push_back({bprime_glob(k), raw(Family::Bprime_loc, {k, 1, 0})});
      pairs.push_back({raw(Family::Bprime_loc, {k, 1, 0}),
                       raw(Family::Bprime_loc, {k, 1, 1})});
      sides.push_back({NamedCategory::unchecked(Family::H_loc, {k, 1}), s_glob(k)});
      sides.push_back({NamedCategory::unchecked(Family::Bprime_loc, {k, 1, 1}),
                       bprime_glob(k)});
    }

    // One sweep for every predicate pair and the counts of the generator
    // sides.
    auto const start = Clock::now();
    std::vector<std::vector<std::uint64_t>> left(pairs.size(), std::vector<std::uint64_t>(bound + 1, 0));
    std::vector<std::vector<std::uint64_t>> right = left;
    std::vector<std::optional<Partition>>   differ(pairs.size());
    std::vector<std::vector<std::uint64_t>> side_counts(sides.size(), std::vector<std::uint64_t>(bound + 1, 0));
    for (std::size_t n = 0; n <= bound; ++n) {
      auto const shapes = noncrossing_shapes(n);
      sweep(n, shapes, [&](Shape const& s, std::uint8_t const* colors) {
        auto const x = detail::facts_of(s, colors);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          bool const a = pairs[i].left.test(x);
          bool const b = pairs[i].right.test(x);
          left[i][n] += a ? 1 : 0;
          right[i][n] += b ? 1 : 0;
          if (a != b && !differ[i]) {
            differ[i] = partition_from(s, colors);
          }
        }
        for (std::size_t i = 0; i < sides.size(); ++i) {
          side_counts[i][n] += sides[i].right.test(x) ? 1 : 0;
        }
      });
    }
    double const share = seconds_since(start) / (pairs.size() + sides.size());

    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      VerificationReport r;
      r.subject = pairs[i].left.name + " = " + pairs[i].right.name;
      r.bound   = bound;
      r.predicate_counts = left[i];
      r.stabilized       = true;
      if (differ[i]) {
        r.outcome   = Outcome::failed;
        r.witnesses = {*differ[i]};
        r.detail    = "predicate sets differ; right counts "
                   + join_counts(right[i]);
      } else {
        r.outcome = Outcome::equal;
        r.detail  = "predicate sets agree on every noncrossing one-line "
                   "partition";
      }
      r.seconds = share;
      out.push_back(std::move(r));
    }
    // Families outside the parameter ranges have no description of their
    // own; their generators are closed and compared with the other side.
    std::size_t const closure_bound = std::min<std::size_t>(bound, 8);
    for (std::size_t i = 0; i < sides.size(); ++i) {
      auto counts = side_counts[i];
      counts.resize(closure_bound + 1);
      auto r = compare_closure(
          "<generators of " + format_family(sides[i].family) + "> = "
              + sides[i].right.name,
          generators_for(sides[i].family), closure_bound, counts,
          sides[i].right.test, options);
      r.seconds += share;
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<VerificationReport>
  group_equalities_check(std::size_t bound, std::int64_t max_param) {
    auto const crossing = shapes::crossing();
    std::map<std::string, ClosureSet> cache;
    auto close = [&](NamedCategory const& f) -> ClosureSet const& {
      auto gens = generators_for(f);
      if (!f.is_group_case()) {
        gens.push_back(crossing);
      }
      std::string key;
      for (auto const& g : gens) {
        key += format_text(g) + ";";
      }
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, closure(gens, bound)).first;
      }
      return it->second;
    };
    auto label = [](NamedCategory const& f) {
      return f.is_group_case() ? format_family(f)
                               : "<" + format_family(f) + ", X>";
    };

    std::vector<std::vector<NamedCategory>> chains;
    auto make = [](Family f, std::vector<std::int64_t> p = {}) {
      return NamedCategory::make(f, std::move(p));
    };
    chains.push_back({make(Family::Hprime_loc), make(Family::H_loc, {0, 0}),
                      make(Family::Hgrp_loc, {0, 0})});
    for (auto const& f : noncrossing_families(max_param)) {
      if (f.family() == Family::S_loc) {
        chains.push_back({f, make(Family::S_glob, {f.k()}),
                          make(Family::Sgrp_glob, {f.k()})});
      }
    }
    for (std::int64_t k = 0; k <= max_param; ++k) {
      std::vector<NamedCategory> chain{make(Family::Bprime_glob, {k})};
      if (k % 2 == 0) {
        chain.push_back(make(Family::B_glob, {k}));
      }
      for (auto const& f : noncrossing_families(max_param)) {
        if (f.family() == Family::Bprime_loc && f.k() == k) {
          chain.push_back(f);
        }
      }
      chain.push_back(make(Family::Bgrp_glob, {k}));
      chains.push_back(std::move(chain));
    }

    std::vector<VerificationReport> out;
    for (auto const& chain : chains) {
      auto const         start = Clock::now();
      VerificationReport r;
      r.bound = bound;
      for (auto const& f : chain) {
        r.subject += (r.subject.empty() ? "" : " = ") + label(f);
      }
      auto const& first = close(chain.front());
      auto const& a     = store_of(first);
      r.closure_counts  = padded(first.report().one_line_counts, bound);
      r.stabilized      = true;
      r.outcome         = Outcome::equal;
      for (std::size_t i = 1; i < chain.size() && r.outcome == Outcome::equal; ++i) {
        auto const& other = close(chain[i]);
        auto const& b     = store_of(other);
        r.stabilized      = r.stabilized && other.stabilized();
        std::optional<Partition> witness;
        for (auto const& w : a.reps) {
          if (!b.index.contains(w) && (!witness || detail::partition_of(w) < *witness)) {
            witness = detail::partition_of(w);
          }
        }
        for (auto const& w : b.reps) {
          if (!a.index.contains(w) && (!witness || detail::partition_of(w) < *witness)) {
            witness = detail::partition_of(w);
          }
        }
        if (witness) {
          r.outcome   = Outcome::failed;
          r.witnesses = {*witness};
          r.detail    = label(chain.front()) + " and " + label(chain[i])
                     + " differ";
        }
      }
      r.stabilized = r.stabilized && first.stabilized();
      if (r.outcome == Outcome::equal) {
        r.detail = "identical member sets, " + std::to_string(a.reps.size())
                   + " orbits";
      }
      r.seconds = seconds_since(start);
      out.push_back(std::move(r));
    }

    // The positioners lie in <↑w⊗↑b, X>.
    auto const         start = Clock::now();
    VerificationReport r;
    r.bound   = bound;
    r.subject = "positioners in <|wb|0,1, X>";
    auto const& cs = close(make(Family::B_loc, {0, 0}));
    r.outcome = Outcome::passed;
    std::string checked;
    for (std::int64_t d = 0; 2 * d + 2 <= static_cast<std::int64_t>(bound); ++d) {
      auto const p = shapes::positioner(d);
      checked += " d=" + std::to_string(d);
      if (!cs.contains(p)) {
        r.outcome = Outcome::failed;
        r.witnesses.push_back(p);
      }
    }
    r.stabilized = cs.stabilized();
    r.detail     = "checked" + checked;
    r.seconds    = seconds_since(start);
    out.push_back(std::move(r));
    return out;
  }

  std::vector<VerificationReport>
  signature_round_trip(std::span<NamedCategory const> families,
                       std::size_t bound, VerifyOptions const& options) {
    auto const start  = Clock::now();
    auto const counts = predicate_one_line_counts(families, bound);
    double const share
        = families.empty() ? 0.0 : seconds_since(start) / families.size();
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < families.size(); ++i) {
      auto const         begin = Clock::now();
      auto const&        f     = families[i];
      VerificationReport r;
      r.subject          = "signature of " + format_family(f);
      r.bound            = bound;
      r.predicate_counts = counts[i];
      ClosureOptions co;
      co.target_one_line_counts = counts[i];
      co.composition_budget     = options.composition_budget;
      auto const cs = closure(generators_for(f), bound, co);
      r.closure_counts     = padded(cs.report().one_line_counts, bound);
      r.skipped_generators = cs.report().skipped_generators;
      r.stabilized         = cs.stabilized();
      auto const sig = signature(cs);
      auto const want = expected_signature(f);
      bool const shape_ok = sig.kase == want.kase
                            && sig.colorization == want.colorization;
      bool const params_ok
          = sig.k_hat == want.k && sig.d_hat == want.d && sig.r_hat == want.r;
      std::ostringstream detail;
      detail << "declared case=" << to_string(want.kase)
             << " colorization=" << to_string(want.colorization)
             << " k=" << want.k << " d=" << want.d << " r="
             << (want.r ? std::to_string(*want.r) : "none") << "; observed";
      std::istringstream lines(format_signature(sig));
      for (std::string line; std::getline(lines, line);) {
        detail << ' ' << line;
      }
      r.detail = detail.str();
      if (shape_ok && params_ok) {
        r.outcome = Outcome::passed;
      } else if (shape_ok && sig.truncated) {
        r.outcome = Outcome::bound_insufficient;
      } else {
        r.outcome = Outcome::failed;
      }
      r.seconds = seconds_since(begin) + share;
      out.push_back(std::move(r));
    }
    return out;
  }

  std::string format_reports_text(std::span<VerificationReport const> reports,
                                  bool timing) {
    std::ostringstream out;
    std::size_t        failures = 0;
    for (auto const& r : reports) {
      failures += is_failure(r) ? 1 : 0;
      out << '[' << to_string(r.outcome) << "] " << r.subject
          << "  N=" << r.bound;
      if (timing) {
        out << "  " << std::fixed << std::setprecision(2) << r.seconds << 's';
      }
      out << '\n';
      if (!r.detail.empty()) {
        out << "    " << r.detail << '\n';
      }
      if (!r.closure_counts.empty()) {
        out << "    closure one-line counts: " << join_counts(r.closure_counts)
            << '\n';
      }
      if (!r.predicate_counts.empty()) {
        out << "    predicate one-line counts: "
            << join_counts(r.predicate_counts) << '\n';
      }
      for (auto const& g : r.skipped_generators) {
        out << "    skipped generator: " << format_text(g) << '\n';
      }
      for (auto const& w : r.witnesses) {
        out << "    witness: " << format_text(w) << '\n';
      }
      if (r.seed) {
        out << "    seed: " << *r.seed << '\n';
      }
    }
    out << reports.size() << " reports, " << failures << " failures\n";
    return out.str();
  }

  std::string
  format_reports_structured(std::span<VerificationReport const> reports,
                            bool                                timing) {
    auto texts = [](std::vector<Partition> const& ps) {
      auto a = nlohmann::ordered_json::array();
      for (auto const& p : ps) {
        a.push_back(format_text(p));
      }
      return a;
    };
    auto list = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (auto const& r : reports) {
      failures += is_failure(r) ? 1 : 0;
      nlohmann::ordered_json j;
      j["subject"]            = r.subject;
      j["bound"]              = r.bound;
      j["outcome"]            = to_string(r.outcome);
      j["failure"]            = is_failure(r);
      j["detail"]             = r.detail;
      j["witnesses"]          = texts(r.witnesses);
      j["closure_counts"]     = r.closure_counts;
      j["predicate_counts"]   = r.predicate_counts;
      j["skipped_generators"] = texts(r.skipped_generators);
      j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed)
                         : nlohmann::ordered_json(nullptr);
      j["stabilized"] = r.stabilized;
      if (timing) {
        j["seconds"] = r.seconds;
      }
      list.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["reports"]  = std::move(list);
    doc["failures"] = failures;
    return doc.dump(2) + "\n";
  }

}  // namespace pcat
