#include "pcat/closure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pcat/ops.hpp"
#include "closure_store.hpp"

namespace pcat {

  namespace detail {

    std::vector<Word> orbit(Word const& w) {
      Points const       p = unpack(w);
      Points const       r = reflect(p);
      std::vector<Word>  out;
      Points             rot;
      rot.n = p.n;
      for (Points const* side : {&p, &r}) {
        for (std::uint32_t s = 0; s < std::max<std::uint32_t>(p.n, 1); ++s) {
          for (std::uint32_t i = 0; i < p.n; ++i) {
            rot.block[i] = side->block[(i + s) % p.n];
            rot.color[i] = side->color[(i + s) % p.n];
          }
          out.push_back(pack(rot));
        }
      }
      std::sort(out.begin(), out.end(), [](Word const& x, Word const& y) {
        return std::tie(x.colors, x.blocks) < std::tie(y.colors, y.blocks);
      });
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    Word word_of(Partition const& p) {
      if (p.size() > max_word_points) {
        throw ClosureError("partitions with more than "
                           + std::to_string(max_word_points)
                           + " points are not supported here");
      }
      auto const colors = one_line_colors(p);
      auto const blocks = one_line_blocks(p);
      Points     pts;
      pts.n = static_cast<std::uint32_t>(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        pts.block[i] = static_cast<std::uint8_t>(blocks[i]);
        pts.color[i] = static_cast<std::uint8_t>(colors[i]);
      }
      return pack(pts);
    }

    Partition partition_of(Word const& w, std::size_t upper) {
      Points const             p = unpack(w);
      std::vector<Color>       up(upper), low(p.n - upper);
      std::vector<std::size_t> ids(p.n);
      for (std::size_t i = 0; i < upper; ++i) {
        std::size_t src = upper - 1 - i;
        up[i]  = p.color[src] ? Color::white : Color::black;
        ids[i] = p.block[src];
      }
      for (std::size_t i = upper; i < p.n; ++i) {
        low[i - upper] = p.color[i] ? Color::black : Color::white;
        ids[i]         = p.block[i];
      }
      return make_partition(up, low, ids);
    }

    namespace {

      class UnionFind32 {
       public:
        UnionFind32() {
          std::iota(_parent.begin(), _parent.end(), std::uint8_t(0));
        }
        std::uint8_t find(std::uint8_t x) {
          while (_parent[x] != x) {
            x = _parent[x] = _parent[_parent[x]];
          }
          return x;
        }
        void unite(std::uint8_t x, std::uint8_t y) {
          x = find(x);
          y = find(y);
          if (x != y) {
            _parent[std::max(x, y)] = std::min(x, y);
          }
        }

       private:
        std::array<std::uint8_t, 64> _parent{};
      };

      // Both orientations of an operand with the color words of all its
      // cyclic rotations.
      struct Forms {
        std::array<Points, 2>                          side;
        std::vector<std::uint32_t>                     colors;  // 2n entries
      };

      Forms forms_of(Word const& w) {
        Forms f;
        f.side[0] = unpack(w);
        f.side[1] = reflect(f.side[0]);
        std::uint32_t const n = w.n;
        std::uint32_t const reflected
            = reverse_bits(w.colors, n) ^ low_mask(n);
        f.colors.resize(2 * n);
        for (std::uint32_t r = 0; r < n; ++r) {
          f.colors[r]     = rotate_colors(w.colors, n, r);
          f.colors[n + r] = rotate_colors(reflected, n, r);
        }
        return f;
      }

      class Engine {
       public:
        Engine(ClosureStore& store, ClosureOptions const& options)
            : _s(store),
              _opt(options),
              _bound(static_cast<std::uint32_t>(store.bound)),
              _by_size(store.bound + 1),
              _forms(store.bound + 1),
              _q(store.bound + 1, 0),
              _m(store.bound + 1, 0),
              _counts(store.bound + 1, 0) {}

        void add(Word const& w, std::uint32_t gen) {
          Word const c = canonical(w);
          if (_s.index.insert(c).second) {
            _by_size[c.n].push_back(static_cast<std::uint32_t>(_s.reps.size()));
            _s.reps.push_back(c);
            _s.generation.push_back(gen);
            _counts[c.n] += orbit(c).size();
            _fresh = true;
          }
        }

        void add_points(Points const& p, std::uint32_t gen) {
          add(pack(p), gen);
        }

        void run() {
          cheap_fixpoint();
          bool budget_hit = false;
          while (!target_reached()) {
            std::uint32_t const c = next_class();
            if (c == 0) {
              break;
            }
            if (_s.report.compositions_tried >= _opt.composition_budget) {
              budget_hit = true;
              break;
            }
            composition_step(c);
            if (_fresh) {
              cheap_fixpoint();
            }
          }
          auto& r = _s.report;
          r.target_reached = target_reached();
          r.compositions_complete = !budget_hit && !pending_any(false);
          r.stabilized = r.compositions_complete || r.target_reached;
        }

       private:
        bool target_reached() const {
          if (!_opt.target_one_line_counts) {
            return false;
          }
          auto const& target = *_opt.target_one_line_counts;
          for (std::size_t n = 0; n < _counts.size(); ++n) {
            std::uint64_t want = n < target.size() ? target[n] : 0;
            if (_counts[n] != want) {
              return false;
            }
          }
          return true;
        }

        void cheap_fixpoint() {
          while (_cheap_done < _s.reps.size()) {
            std::size_t const i = _cheap_done++;
            erasures(i);
            std::uint32_t const a = _s.reps[i].n;
            if (a == 0) {
              continue;
            }
            for (std::uint32_t b = 1; b <= _bound; ++b) {
              auto const& bucket = _by_size[b];
              if (a + b > _bound) {
                if (!bucket.empty() && bucket.front() <= i) {
                  _s.report.discarded_oversized = true;
                }
                continue;
              }
              // The bucket may grow while splicing.
              for (std::size_t t = 0; t < bucket.size() && bucket[t] <= i;
                   ++t) {
                splices(i, bucket[t]);
              }
            }
          }
          _fresh = false;
        }

        std::uint32_t gen_of(std::size_t i, std::size_t j) const {
          return 1 + std::max(_s.generation[i], _s.generation[j]);
        }

        void erasures(std::size_t i) {
          Points const        p   = unpack(_s.reps[i]);
          std::uint32_t const n   = p.n;
          std::uint32_t const gen = _s.generation[i] + 1;
          if (n < 2) {
            return;
          }
          Points out;
          out.n = n - 2;
          for (std::uint32_t t = 0; t < n; ++t) {
            std::uint32_t const u = (t + 1) % n;
            if (p.color[t] == p.color[u]) {
              continue;
            }
            std::uint8_t const keep = p.block[t], gone = p.block[u];
            std::uint32_t      k    = 0;
            for (std::uint32_t s = 0; s < n; ++s) {
              if (s == t || s == u) {
                continue;
              }
              out.block[k] = p.block[s] == gone ? keep : p.block[s];
              out.color[k] = p.color[s];
              ++k;
            }
            add_points(out, gen);
          }
        }

        void splices(std::size_t i, std::size_t j) {
          Word const& x = _s.reps[i];
          Word const& y = _s.reps[j];
          if (x.n == 0 || y.n == 0) {
            return;
          }
          Points const        px  = unpack(x);
          Forms const         fy  = forms_of(y);
          std::uint32_t const a   = x.n;
          std::uint32_t const b   = y.n;
          std::uint32_t const gen = gen_of(i, j);
          Points              out;
          out.n = a + b;
          for (auto const& py : fy.side) {
            for (std::uint32_t cut = 0; cut < b; ++cut) {
              for (std::uint32_t pos = 0; pos < a; ++pos) {
                std::uint32_t k = 0;
                for (std::uint32_t s = 0; s < pos; ++s, ++k) {
                  out.block[k] = px.block[s];
                  out.color[k] = px.color[s];
                }
                for (std::uint32_t s = 0; s < b; ++s, ++k) {
                  std::uint32_t src = (cut + s) % b;
                  out.block[k]      = py.block[src] + 16;
                  out.color[k]      = py.color[src];
                }
                for (std::uint32_t s = pos; s < a; ++s, ++k) {
                  out.block[k] = px.block[s];
                  out.color[k] = px.color[s];
                }
                add_points(out, gen);
              }
            }
          }
        }

        // Contractions of x with y whose glued length exceeds the bound,
        // with just enough junction pairs erased to fit.
        void contractions(std::size_t i, std::size_t j, Forms const& fy) {
          Word const&         x = _s.reps[i];
          Word const&         y = _s.reps[j];
          std::uint32_t const a = x.n, b = y.n;
          if (a + b <= _bound) {
            return;
          }
          std::uint32_t const depth = (a + b - _bound + 1) / 2;
          if (depth > std::min(a, b)) {
            return;
          }
          Points const        px   = unpack(x);
          std::uint32_t const mask = low_mask(depth);
          std::uint32_t const gen  = gen_of(i, j);
          Points              out;
          out.n = a + b - 2 * depth;
          for (std::uint32_t cut = 0; cut < a; ++cut) {
            // The last depth points of x rotated by cut, read backwards and
            // inverted, must equal the first depth points of the y form.
            std::uint32_t need = 0;
            for (std::uint32_t t = 0; t < depth; ++t) {
              std::uint32_t src = (cut + a - 1 - t) % a;
              need |= std::uint32_t(px.color[src] ^ 1) << t;
            }
            for (std::uint32_t f = 0; f < 2 * b; ++f) {
              if ((fy.colors[f] & mask) != need) {
                continue;
              }
              ++_s.report.compositions_tried;
              Points const&       py   = fy.side[f / b];
              std::uint32_t const ycut = f % b;
              UnionFind32         uf;
              for (std::uint32_t t = 0; t < depth; ++t) {
                std::uint32_t xs = (cut + a - 1 - t) % a;
                std::uint32_t ys = (ycut + t) % b;
                uf.unite(px.block[xs], py.block[ys] + 16);
              }
              std::uint32_t k = 0;
              for (std::uint32_t s = 0; s < a - depth; ++s, ++k) {
                std::uint32_t src = (cut + s) % a;
                out.block[k]      = uf.find(px.block[src]);
                out.color[k]      = px.color[src];
              }
              for (std::uint32_t s = depth; s < b; ++s, ++k) {
                std::uint32_t src = (ycut + s) % b;
                out.block[k] = uf.find(static_cast<std::uint8_t>(
                    py.block[src] + 16));
                out.color[k] = py.color[src];
              }
              add_points(out, gen);
            }
          }
        }

        bool relevant(std::size_t x, std::size_t y, std::uint32_t c) const {
          std::uint32_t const a = _s.reps[x].n;
          if (a < c || a + c <= _bound) {
            return false;
          }
          return a > c || x >= y;
        }

        Forms const& forms(std::uint32_t c, std::size_t slot) {
          auto& cache = _forms[c];
          while (cache.size() <= slot) {
            cache.push_back(forms_of(_s.reps[_by_size[c][cache.size()]]));
          }
          return cache[slot];
        }

        // Pending composition work of operator class c (operands of size c
        // paired with operands at least as large).
        bool pending(std::uint32_t c) const {
          if (_m[c] < _by_size[c].size() && _q[c] > 0) {
            return true;
          }
          if (_q[c] < _s.reps.size() && _m[c] > 0) {
            return true;
          }
          if (_m[c] < _by_size[c].size() && _q[c] < _s.reps.size()) {
            return true;
          }
          return false;
        }

        bool has_partner(std::uint32_t c) const {
          for (std::uint32_t a = std::max(c, _bound + 1 - c); a <= _bound;
               ++a) {
            if (!_by_size[a].empty()) {
              return true;
            }
          }
          return false;
        }

        bool pending_any(bool within_limit) const {
          for (std::uint32_t c = 1; c <= _bound; ++c) {
            if (within_limit && c > _opt.composition_limit) {
              break;
            }
            if (!_by_size[c].empty() && has_partner(c) && pending(c)) {
              return true;
            }
          }
          return false;
        }

        std::uint32_t next_class() const {
          for (std::uint32_t c = 1; c <= _bound; ++c) {
            if (c > _opt.composition_limit) {
              break;
            }
            if (!_by_size[c].empty() && has_partner(c) && pending(c)) {
              return c;
            }
          }
          return 0;
        }

        void composition_step(std::uint32_t c) {
          auto const& ops = _by_size[c];
          if (_m[c] < ops.size()) {
            // Bring the next operand of size c up to date with the elements
            // already processed for this class.
            std::size_t const slot = _m[c];
            std::size_t const y    = ops[slot];
            Forms const       fy   = forms(c, slot);
            for (std::size_t x = 0; x < _q[c]; ++x) {
              if (relevant(x, y, c)) {
                contractions(x, y, fy);
              }
            }
            ++_m[c];
            return;
          }
          std::size_t const x = _q[c]++;
          for (std::size_t slot = 0; slot < _m[c]; ++slot) {
            std::size_t const y = ops[slot];
            if (relevant(x, y, c)) {
              contractions(x, y, forms(c, slot));
            }
          }
        }

        ClosureStore&                           _s;
        ClosureOptions const&                   _opt;
        std::uint32_t                           _bound;
        std::vector<std::vector<std::uint32_t>> _by_size;
        std::vector<std::vector<Forms>>         _forms;
        std::vector<std::size_t>                _q;
        std::vector<std::size_t>                _m;
        std::vector<std::uint64_t>              _counts;
        std::size_t                             _cheap_done = 0;
        bool                                    _fresh = false;

       public:
        std::vector<std::uint64_t> const& counts() const {
          return _counts;
        }
      };

    }  // namespace

  }  // namespace detail

  detail::ClosureStore const& store_of(ClosureSet const& cs) {
    if (!cs._store) {
      throw ClosureError("empty closure set");
    }
    return *cs._store;
  }

  ClosureSet closure(std::span<Partition const> generators, std::size_t bound,
                     ClosureOptions const& options) {
    using namespace detail;
    if (bound < 2 || bound > max_word_points) {
      throw ClosureError("bound must lie in [2, "
                         + std::to_string(max_word_points) + "]");
    }
    auto store   = std::make_shared<ClosureStore>();
    store->bound = bound;
    store->generators.assign(generators.begin(), generators.end());
    auto& report = store->report;
    report.bound = bound;

    Engine engine(*store, options);
    engine.add(Word{}, 0);
    for (auto const& p : base_partitions()) {
      engine.add(word_of(p), 0);
    }
    for (auto const& g : generators) {
      if (g.size() > bound) {
        if (options.strict) {
          throw ClosureError("generator " + format_text(g) + " has more than "
                             + std::to_string(bound) + " points");
        }
        report.skipped_generators.push_back(g);
        continue;
      }
      engine.add(word_of(g), 0);
    }
    engine.run();

    report.one_line_counts = engine.counts();
    report.orbits          = store->reps.size();
    report.iterations      = store->generation.empty()
                                 ? 0
                                 : *std::max_element(store->generation.begin(),
                                                     store->generation.end());
    for (std::size_t n = 0; n <= bound; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        report.members_per_profile[Profile{k, n - k}]
            = report.one_line_counts[n];
      }
    }
    ClosureSet cs;
    cs._store = std::move(store);
    return cs;
  }

  std::size_t ClosureSet::bound() const noexcept {
    return _store ? _store->bound : 0;
  }

  bool ClosureSet::stabilized() const noexcept {
    return _store && _store->report.stabilized;
  }

  std::span<Partition const> ClosureSet::generators() const noexcept {
    if (!_store) {
      return {};
    }
    return _store->generators;
  }

  bool ClosureSet::contains(Partition const& p) const {
    auto const& s = store_of(*this);
    if (p.size() > s.bound) {
      throw ClosureError("query with " + std::to_string(p.size())
                         + " points exceeds the bound "
                         + std::to_string(s.bound));
    }
    return s.index.contains(detail::canonical(detail::word_of(p)));
  }

  std::uint64_t ClosureSet::count(Profile profile) const {
    auto const& s = store_of(*this);
    if (profile.points() > s.bound) {
      return 0;
    }
    return s.report.one_line_counts[profile.points()];
  }

  std::uint64_t ClosureSet::size() const {
    auto const&   s     = store_of(*this);
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= s.bound; ++n) {
      total += (n + 1) * s.report.one_line_counts[n];
    }
    return total;
  }

  std::vector<Partition> ClosureSet::members(Profile profile) const {
    auto const&            s = store_of(*this);
    std::vector<Partition> out;
    for (auto const& w : s.reps) {
      if (w.n != profile.points()) {
        continue;
      }
      for (auto const& v : detail::orbit(w)) {
        out.push_back(detail::partition_of(v, profile.upper));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Partition> ClosureSet::one_line_members(std::size_t n) const {
    return members(Profile{0, n});
  }

  std::vector<Partition> ClosureSet::orbit_representatives() const {
    auto const&            s = store_of(*this);
    std::vector<Partition> out;
    out.reserve(s.reps.size());
    for (auto const& w : s.reps) {
      auto orbit = detail::orbit(w);
      std::vector<Partition> forms;
      for (auto const& v : orbit) {
        forms.push_back(detail::partition_of(v));
      }
      out.push_back(*std::min_element(forms.begin(), forms.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Partition> ClosureSet::members() const {
    auto const&            s = store_of(*this);
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= s.bound; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        auto part = members(Profile{k, n - k});
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  StabilizationReport const& ClosureSet::report() const noexcept {
    static StabilizationReport const none;
    return _store ? _store->report : none;
  }

  StabilizationReport const& stabilization_report(ClosureSet const& cs) {
    return cs.report();
  }

  std::string dump(ClosureSet const& cs) {
    std::vector<std::string> lines;
    for (auto const& p : cs.members()) {
      lines.push_back(format_text(p));
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    out << "# closure bound=" << cs.bound()
        << " generators=" << cs.generators().size()
        << " stabilized=" << (cs.stabilized() ? "true" : "false") << '\n';
    for (auto const& line : lines) {
      out << line << '\n';
    }
    return out.str();
  }

  std::vector<Partition> parse_generators(std::string_view text) {
    std::vector<Partition> out;
    std::size_t            pos = 0;
    std::size_t            line_no = 0;
    while (pos <= text.size()) {
      auto end  = text.find('\n', pos);
      auto line = text.substr(pos, end == std::string_view::npos
                                       ? std::string_view::npos
                                       : end - pos);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string_view::npos) {
        auto last = line.find_last_not_of(" \t\r");
        try {
          out.push_back(parse_text(line.substr(first, last - first + 1)));
        } catch (PartitionError const& e) {
          throw PartitionError("line " + std::to_string(line_no) + ": "
                               + e.what());
        }
      }
      if (end == std::string_view::npos) {
        break;
      }
      pos = end + 1;
    }
    return out;
  }

}  // namespace pcat
