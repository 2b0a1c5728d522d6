#include "pcat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pcat/analysis.hpp"
#include "pcat/closure.hpp"
#include "pcat/enumerate.hpp"
#include "pcat/partition.hpp"
#include "pcat/render.hpp"
#include "pcat/taxonomy.hpp"
#include "pcat/verify.hpp"

namespace pcat::cli {

  namespace {

    using json = nlohmann::ordered_json;

    class FileError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw FileError("cannot read " + path);
      }
      std::ostringstream text;
      text << in.rdbuf();
      return text.str();
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out || !(out << text)) {
        throw FileError("cannot write " + path);
      }
    }

    // PCAT_THREADS must be a positive integer when set. Work runs on one
    // thread regardless.
    void check_threads_env() {
      char const* value = std::getenv("PCAT_THREADS");
      if (value == nullptr) {
        return;
      }
      std::string_view text(value);
      unsigned         n = 0;
      auto [ptr, ec]     = std::from_chars(text.data(), text.data() + text.size(), n);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()
          || n == 0) {
        throw std::invalid_argument("PCAT_THREADS must be a positive integer");
      }
    }

    json texts(std::vector<Partition> const& ps) {
      auto a = json::array();
      for (auto const& p : ps) {
        a.push_back(format_text(p));
      }
      return a;
    }

    json signature_json(CategorySignature const& s) {
      json j;
      j["case"]         = to_string(s.kase);
      j["colorization"] = to_string(s.colorization);
      j["k"]            = s.k_hat;
      j["d"]            = s.d_hat;
      j["r"]  = s.r_hat ? json(*s.r_hat) : json(nullptr);
      json k_sets;
      for (auto e : all_endpoint_colors) {
        json entry;
        entry["observed"] = s.ksets.at(e);
        auto it           = s.ksets.fitted.find(e);
        if (it != s.ksets.fitted.end() && !it->second.empty) {
          entry["modulus"]    = it->second.modulus;
          entry["offset"]     = it->second.offset;
          entry["consistent"] = it->second.consistent;
        }
        k_sets[to_string(e)] = std::move(entry);
      }
      j["k_sets"]     = std::move(k_sets);
      j["stabilized"] = s.stabilized;
      j["truncated"]  = s.truncated;
      return j;
    }

    json report_json(StabilizationReport const& r) {
      json j;
      j["bound"]                 = r.bound;
      j["orbits"]                = r.orbits;
      j["one_line_counts"]       = r.one_line_counts;
      j["compositions_tried"]    = r.compositions_tried;
      j["compositions_complete"] = r.compositions_complete;
      j["discarded_oversized"]   = r.discarded_oversized;
      j["stabilized"]            = r.stabilized;
      j["skipped_generators"]    = texts(r.skipped_generators);
      return j;
    }

    std::string counts_text(std::vector<std::uint64_t> const& counts) {
      std::string out;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(counts[i]);
      }
      return out;
    }

    std::string report_text(StabilizationReport const& r) {
      std::ostringstream out;
      out << "bound=" << r.bound << '\n'
          << "stabilized=" << (r.stabilized ? "true" : "false") << '\n'
          << "compositions_complete="
          << (r.compositions_complete ? "true" : "false") << '\n'
          << "orbits=" << r.orbits << '\n'
          << "one_line_counts=" << counts_text(r.one_line_counts) << '\n';
      for (auto const& g : r.skipped_generators) {
        out << "skipped_generator=" << format_text(g) << '\n';
      }
      return out.str();
    }

    struct Flags {
      std::string report = "text";
      bool        timing = false;
    };

    bool structured(Flags const& flags) {
      return flags.report == "structured";
    }

    std::vector<NamedCategory> o_families() {
      return {NamedCategory::make(Family::O_loc),
              NamedCategory::make(Family::O_glob, {0}),
              NamedCategory::make(Family::O_glob, {2}),
              NamedCategory::make(Family::O_glob, {4})};
    }

  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-colored noncrossing partition categories", "pcat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Flags flags;
    app.add_option("--report", flags.report, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_flag("--timing", flags.timing,
                 "Include wall-clock seconds in verification reports");

    // enumerate
    auto*       enumerate_cmd = app.add_subcommand(
        "enumerate", "List the partitions of a profile");
    std::size_t upper = 0, lower = 0;
    bool        noncrossing = false, count_only = false;
    std::optional<std::size_t> max_block, min_block;
    enumerate_cmd->add_option("--upper", upper, "Upper points")->required();
    enumerate_cmd->add_option("--lower", lower, "Lower points")->required();
    enumerate_cmd->add_flag("--noncrossing", noncrossing,
                            "Only noncrossing partitions");
    enumerate_cmd->add_option("--max-block", max_block, "Largest block size");
    enumerate_cmd->add_option("--min-block", min_block, "Smallest block size");
    enumerate_cmd->add_flag("--count", count_only,
                            "Print the number of partitions only");

    // closure and classify
    std::string gens_path, out_path;
    std::size_t max_points = 0;
    std::uint64_t budget = VerifyOptions{}.composition_budget;
    auto* closure_cmd = app.add_subcommand(
        "closure", "Saturate a generator file up to a number of points");
    closure_cmd->add_option("--gens", gens_path, "Generators file")
        ->required();
    closure_cmd->add_option("--max-points", max_points, "Bound on points")
        ->required();
    closure_cmd->add_option("--out", out_path, "Write the members here");
    closure_cmd->add_option("--budget", budget,
                            "Composition attempts beyond the bound")
        ->capture_default_str();
    auto* classify_cmd = app.add_subcommand(
        "classify", "Case, colorization and parameters of a closure");
    classify_cmd->add_option("--gens", gens_path, "Generators file")
        ->required();
    classify_cmd->add_option("--max-points", max_points, "Bound on points")
        ->required();
    classify_cmd->add_option("--budget", budget,
                             "Composition attempts beyond the bound")
        ->capture_default_str();

    // member
    std::string family_text, partition_text;
    auto*       member_cmd = app.add_subcommand(
        "member", "Membership by the description of a family");
    member_cmd->add_option("--family", family_text, "Family, e.g. H_loc(4,2)")
        ->required();
    member_cmd->add_option("--partition", partition_text,
                           "Partition as <upper>|<lower>|<ids>")
        ->required();

    // verify
    std::string suite;
    std::optional<std::size_t>  suite_points;
    std::optional<std::int64_t> params_max;
    std::uint64_t               seed = VerifyOptions{}.seed;
    std::vector<std::string>    family_list;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"classification", "o", "lemmas", "laws",
                               "remark", "group", "distinctness",
                               "correspondence", "signatures", "family"}));
    verify_cmd->add_option("--max-points", suite_points,
                           "Bound on points (suite default if omitted)");
    verify_cmd->add_option("--params-max", params_max,
                           "Largest parameter (suite default if omitted)");
    verify_cmd->add_option("--seed", seed, "Seed of the random checks")
        ->capture_default_str();
    verify_cmd->add_option("--budget", budget,
                           "Composition attempts beyond the bound")
        ->capture_default_str();
    verify_cmd->add_option("--family", family_list,
                           "Families for the family suite");

    // separate
    std::string a_text, b_text;
    auto*       separate_cmd = app.add_subcommand(
        "separate", "Least partition in exactly one of two families");
    separate_cmd->add_option("--a", a_text, "First family")->required();
    separate_cmd->add_option("--b", b_text, "Second family")->required();
    separate_cmd->add_option("--max-points", max_points, "Bound on points")
        ->required();

    // render
    bool  unicode = false;
    auto* render_cmd
        = app.add_subcommand("render", "Draw a partition as a string diagram");
    render_cmd->add_option("--partition", partition_text,
                           "Partition as <upper>|<lower>|<ids>")
        ->required();
    render_cmd->add_flag("--unicode", unicode, "Draw points as ∘ and ●");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? static_cast<int>(Status::ok)
                       : static_cast<int>(Status::usage);
    }

    try {
      check_threads_env();

      if (enumerate_cmd->parsed()) {
        EnumerationFilter filter;
        filter.noncrossing_only = noncrossing;
        filter.max_block_size   = max_block;
        filter.min_block_size   = min_block;
        filter.validate();
        Profile const profile{upper, lower};
        if (profile.points() > 16) {
          throw std::invalid_argument("at most 16 points can be enumerated");
        }
        if (count_only) {
          auto const n = count(profile, filter);
          if (structured(flags)) {
            out << json{{"count", n}}.dump(2) << '\n';
          } else {
            out << n << '\n';
          }
          return static_cast<int>(Status::ok);
        }
        if (structured(flags)) {
          auto a = json::array();
          enumerate(profile, filter,
                    [&](Partition const& p) { a.push_back(format_text(p)); });
          out << a.dump(2) << '\n';
        } else {
          enumerate(profile, filter, [&](Partition const& p) {
            out << format_text(p) << '\n';
          });
        }
        return static_cast<int>(Status::ok);
      }

      if (closure_cmd->parsed() || classify_cmd->parsed()) {
        auto const     gens = parse_generators(read_file(gens_path));
        ClosureOptions options;
        options.composition_budget = budget;
        auto const  cs     = closure(gens, max_points, options);
        auto const& report = cs.report();
        if (classify_cmd->parsed()) {
          auto const s = signature(cs);
          if (structured(flags)) {
            json j          = signature_json(s);
            j["closure"]    = report_json(report);
            out << j.dump(2) << '\n';
          } else {
            out << format_signature(s) << report_text(report);
          }
          return static_cast<int>(Status::ok);
        }
        if (structured(flags)) {
          json j       = report_json(report);
          j["members"] = texts(cs.members());
          if (out_path.empty()) {
            out << j.dump(2) << '\n';
          } else {
            write_file(out_path, j.dump(2) + "\n");
            out << report_json(report).dump(2) << '\n';
          }
        } else if (out_path.empty()) {
          out << dump(cs);
        } else {
          write_file(out_path, dump(cs));
          out << report_text(report);
        }
        return static_cast<int>(Status::ok);
      }

      if (member_cmd->parsed()) {
        auto const f      = parse_family(family_text);
        auto const p      = parse_text(partition_text);
        bool const result = member(f, p);
        if (structured(flags)) {
          out << json{{"family", format_family(f)},
                      {"partition", format_text(p)},
                      {"member", result}}
                     .dump(2)
              << '\n';
        } else {
          out << (result ? "true" : "false") << '\n';
        }
        return static_cast<int>(Status::ok);
      }

      if (separate_cmd->parsed()) {
        auto const a = parse_family(a_text);
        auto const b = parse_family(b_text);
        auto const w = separate(a, b, max_points);
        if (structured(flags)) {
          out << json{{"a", format_family(a)},
                      {"b", format_family(b)},
                      {"bound", max_points},
                      {"witness", w ? json(format_text(*w)) : json(nullptr)}}
                     .dump(2)
              << '\n';
        } else if (w) {
          out << format_text(*w) << '\n';
        } else {
          out << "none with at most " << max_points << " points\n";
        }
        return static_cast<int>(Status::ok);
      }

      if (render_cmd->parsed()) {
        auto const        p       = parse_text(partition_text);
        std::string const drawing = render(p, {.unicode = unicode});
        if (structured(flags)) {
          out << json{{"partition", format_text(p)}, {"drawing", drawing}}
                     .dump(2)
              << '\n';
        } else {
          out << drawing;
        }
        return static_cast<int>(Status::ok);
      }

      // verify
      VerifyOptions options;
      options.composition_budget = budget;
      options.seed               = seed;
      auto const points = [&](std::size_t fallback) {
        return suite_points.value_or(fallback);
      };
      auto const param = [&](std::int64_t fallback) {
        return params_max.value_or(fallback);
      };
      std::vector<VerificationReport> reports;
      if (suite == "classification" || suite == "o") {
        auto families = o_families();
        if (suite == "classification") {
          auto const rest = classification_families();
          families.insert(families.end(), rest.begin(), rest.end());
        }
        reports = verify_categories(families, points(8), options);
      } else if (suite == "family") {
        if (family_list.empty()) {
          throw std::invalid_argument("the family suite needs --family");
        }
        std::vector<NamedCategory> families;
        for (auto const& text : family_list) {
          families.push_back(parse_family(text));
        }
        reports = verify_categories(families, points(8), options);
      } else if (suite == "lemmas") {
        reports = lemma_suite(points(8), options);
      } else if (suite == "laws") {
        reports.push_back(c_law_check(6, 10'000, points(10), seed));
      } else if (suite == "remark") {
        reports = remark_equalities_check(points(10), param(6), options);
      } else if (suite == "group") {
        reports = group_equalities_check(points(6), param(4));
      } else if (suite == "distinctness") {
        reports.push_back(distinctness_check(param(4), points(8)));
      } else if (suite == "correspondence") {
        reports = correspondence_suite(points(8), options);
      } else if (suite == "signatures") {
        auto const families = classification_families();
        reports = signature_round_trip(families, points(10), options);
      }
      out << (structured(flags)
                  ? format_reports_structured(reports, flags.timing)
                  : format_reports_text(reports, flags.timing));
      bool const failed
          = std::any_of(reports.begin(), reports.end(),
                        [](auto const& r) { return is_failure(r); });
      return static_cast<int>(failed ? Status::verification_failed
                                     : Status::ok);
    } catch (FileError const& e) {
      err << "pcat: " << e.what() << '\n';
      return static_cast<int>(Status::runtime);
    } catch (std::invalid_argument const& e) {
      err << "pcat: " << e.what() << '\n';
      return static_cast<int>(Status::usage);
    } catch (std::exception const& e) {
      err << "pcat: " << e.what() << '\n';
      return static_cast<int>(Status::runtime);
    }
  }

}  // namespace pcat::cli
