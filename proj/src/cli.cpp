#include "dehnlab/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dehnlab/error.hpp"
#include "dehnlab/paperlab.hpp"
#include "dehnlab/parse.hpp"

namespace dehnlab {

  namespace {
    struct CliConfig {
      std::string      group = "surface2";
      std::string      word;
      std::string      out;
      std::string      input;
      std::int64_t     max_cost   = 0;  // 0: module default
      std::size_t      max_states = 0;
      std::size_t      max_len    = 0;
      std::size_t      radius     = 3;
      std::size_t      max_n      = 3;
      std::uint64_t    seed       = 0;
      bool             allow_inconclusive = false;
      bool             greedy             = false;
      bool             with_m2            = false;
      std::vector<int> only;
      std::size_t      factors    = 3;
      std::size_t      rank       = 2;
      bool             hyperbolic = false;
      std::string      alpha      = "1";
      std::string      rho        = "1";
    };

    // Fails the command rather than the library call.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    Rational parse_rational(std::string const& text) {
      try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
          return Rational(std::stoll(text));
        }
        return Rational(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
      } catch (std::exception const&) {
        throw UsageError("not a rational number: " + text);
      }
    }

    std::string show(Rational const& r) {
      if (r.denominator() == 1) {
        return std::to_string(r.numerator());
      }
      return fmt::format("{}/{}", r.numerator(), r.denominator());
    }

    // The single-factor presentation of a registry group.
    Word single_word(RegistryEntry const& entry, std::string const& text) {
      if (entry.ctx.factor_count() != 1) {
        throw UsageError(entry.name + " is a product; this command needs a "
                                      "single-factor group");
      }
      return parse_word(text, entry.alphabet);
    }

    class Runner {
     public:
      Runner(CliConfig const& c, std::ostream& out) : _c(c), _out(out) {}

      int wp() {
        auto const& e = entry();
        TupleElement g = parse_tuple(_c.word, e);
        _out << (e.ctx.is_trivial(g) ? "trivial" : "nontrivial") << '\n';
        return exit_ok;
      }

      int area() {
        auto const& e = entry();
        Word const  w = single_word(e, _c.word);
        AreaCertificate cert;
        if (_c.greedy) {
          cert = dehn_greedy_area_upper(e.ctx, w);
        } else {
          SearchBudget budget = SearchBudget::defaults_for(w);
          if (_c.max_cost) {
            budget.max_cost = _c.max_cost;
          }
          if (_c.max_states) {
            budget.max_states = _c.max_states;
          }
          if (_c.max_len) {
            budget.max_state_length = _c.max_len;
          }
          auto const o = area_search(e.ctx, w, budget);
          if (auto const* inc = std::get_if<Inconclusive>(&o)) {
            return inconclusive(inc->reason, inc->states);
          }
          if (auto const* no = std::get_if<NotNullHomotopic>(&o)) {
            _out << "not null-homotopic: " << no->reason << '\n';
            return exit_failure;
          }
          cert = std::get<AreaCertificate>(o);
        }
        std::string const path = _c.out.empty() ? "certificate.txt" : _c.out;
        std::ofstream     file(path);
        if (!file) {
          throw UsageError("cannot write " + path);
        }
        write_certificate(file, cert, e.alphabet);
        _out << fmt::format("area={}{}\nradius={}\ncertificate={}\n", cert.area,
                            _c.greedy ? " (upper bound)" : "", cert.radius,
                            path);
        return exit_ok;
      }

      int length() {
        auto const&  e = entry();
        TupleElement g = parse_tuple(_c.word, e);
        LengthBudget budget;
        if (_c.max_states) {
          budget.max_states = _c.max_states;
        }
        if (_c.max_len) {
          budget.max_radius = _c.max_len;
        }
        auto const o = word_length(e.ctx, e.gens, g, budget, e.member);
        if (auto const* inc = std::get_if<Inconclusive>(&o)) {
          return inconclusive(inc->reason, inc->states);
        }
        _out << "length=" << std::get<std::size_t>(o) << '\n';
        return exit_ok;
      }

      int ball() {
        auto const& e = entry();
        BallOptions options;
        options.oracle = e.member;
        if (_c.max_states) {
          options.max_states = _c.max_states;
        }
        Ball const b = dehnlab::ball(e.ctx, e.gens, _c.radius, options);
        emit([&](std::ostream& o) { write_growth_csv(o, b.growth); });
        return exit_ok;
      }

      int distortion() {
        auto const& e = entry();
        if (!e.member) {
          throw UsageError(e.name + " has no subgroup to measure");
        }
        DistortionOptions options;
        options.max_n         = _c.max_n;
        options.cached_radius = _c.radius;
        if (_c.max_states) {
          options.length_budget.max_states = _c.max_states;
        }
        if (_c.max_len) {
          options.length_budget.max_radius = _c.max_len;
        }
        auto const table = distortion_table(
            e.ctx, standard_generators(e.alphabet, e.ctx.factor_count()),
            e.gens, e.member, options);
        emit([&](std::ostream& o) {
          write_distortion_csv(o, table, [&](TupleElement const& g) {
            return format_tuple(g, e.alphabet);
          });
        });
        bool partial = std::any_of(table.begin(), table.end(),
                                   [](DistortionRow const& r) { return r.partial; });
        return partial && !_c.allow_inconclusive ? exit_inconclusive : exit_ok;
      }

      int verify() {
        SuiteProfile profile;
        profile.seed       = _c.seed;
        profile.include_m2 = _c.with_m2;
        profile.only       = _c.only;
        SuiteReport const report = verify_paper_suite(registry(), profile);
        write_report_csv(_out, report);
        if (!_c.out.empty()) {
          std::filesystem::create_directories(_c.out);
          {
            std::ofstream f(std::filesystem::path(_c.out) / "report.csv");
            write_report_csv(f, report);
          }
          for (auto const& [name, csv] : report.attachments) {
            std::ofstream f(std::filesystem::path(_c.out) / name);
            f << csv;
          }
        }
        if (!report.passed()) {
          return exit_failure;
        }
        if (report.any_inconclusive() && !_c.allow_inconclusive) {
          return exit_inconclusive;
        }
        return exit_ok;
      }

      int exponent() {
        AreaRadiusPair pair = _c.hyperbolic
                                  ? AreaRadiusPair::hyperbolic()
                                  : AreaRadiusPair(parse_rational(_c.alpha),
                                                   parse_rational(_c.rho));
        std::vector<AreaRadiusPair> pairs(_c.factors, pair);
        _out << show(isoperimetric_exponent_bound(pairs, _c.rank, _c.factors))
             << '\n';
        return exit_ok;
      }

      // Slope of the second column against the first, from a growth or
      // distortion CSV. Rows with bounds (">=") are skipped.
      int growth_fit() {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (!_c.input.empty() && _c.input != "-") {
          file.open(_c.input);
          if (!file) {
            throw UsageError("cannot read " + _c.input);
          }
          in = &file;
        }
        std::vector<std::pair<double, double>> rows;
        std::string                            line;
        std::getline(*in, line);  // header
        while (std::getline(*in, line)) {
          std::istringstream fields(line);
          std::string        x, y;
          if (!std::getline(fields, x, ',') || !std::getline(fields, y, ',')
              || y.rfind(">=", 0) == 0) {
            continue;
          }
          try {
            double const n = std::stod(x), v = std::stod(y);
            if (n > 0 && v > 0) {
              rows.emplace_back(n, v);
            }
          } catch (std::exception const&) {
            throw UsageError("not a number in: " + line);
          }
        }
        SlopeFit const fit = fit_loglog_slope(rows);
        _out << fmt::format("slope={:.6f}\nresidual={:.6f}\nrows={}\n",
                            fit.slope, fit.residual, rows.size());
        return exit_ok;
      }

     private:
      PaperRegistry const& registry() {
        if (!_registry) {
          _registry = std::make_unique<PaperRegistry>();
        }
        return *_registry;
      }

      RegistryEntry const& entry() {
        try {
          return registry().group(_c.group);
        } catch (Error const&) {
          std::string known;
          for (auto const& n : registry().group_names()) {
            known += " " + n;
          }
          throw UsageError("unknown group '" + _c.group + "'; known:" + known);
        }
      }

      int inconclusive(std::string const& reason, std::size_t states) {
        _out << fmt::format("inconclusive: {} after {} states\n", reason, states);
        return _c.allow_inconclusive ? exit_ok : exit_inconclusive;
      }

      template <typename F>
      void emit(F&& write) {
        if (_c.out.empty()) {
          write(_out);
          return;
        }
        std::ofstream file(_c.out);
        if (!file) {
          throw UsageError("cannot write " + _c.out);
        }
        write(file);
        _out << "wrote " << _c.out << '\n';
      }

      CliConfig const&               _c;
      std::ostream&                  _out;
      std::unique_ptr<PaperRegistry> _registry;
    };

    bool usage_kind(ErrorKind k) {
      switch (k) {
        case ErrorKind::UnknownGenerator:
        case ErrorKind::SyntaxError:
        case ErrorKind::ExponentOverflow:
        case ErrorKind::FactorCountMismatch:
        case ErrorKind::TooFewFactors:
        case ErrorKind::MembershipViolation:
        case ErrorKind::InvalidArgument:
          return true;
        default:
          return false;
      }
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    CliConfig c;
    CLI::App  app{"Word problems, areas and word lengths in surface groups "
                 "and their products",
                 "dehnlab"};
    app.require_subcommand(1);

    auto group = [&](CLI::App* s) {
      s->add_option("-g,--group", c.group, "registered group")
          ->capture_default_str();
    };
    auto word = [&](CLI::App* s) {
      s->add_option("-w,--word", c.word,
                    "word; coordinates of product groups separated by '|'")
          ->required();
    };
    auto states = [&](CLI::App* s) {
      s->add_option("--max-states", c.max_states, "state budget")
          ->check(CLI::PositiveNumber);
    };
    auto inconclusive = [&](CLI::App* s) {
      s->add_flag("--allow-inconclusive", c.allow_inconclusive,
                  "exit 0 when a budget runs out");
    };

    auto* wp = app.add_subcommand("wp", "decide whether a word is trivial");
    group(wp);
    word(wp);

    auto* area = app.add_subcommand("area", "exact area with a certificate");
    group(area);
    word(area);
    states(area);
    inconclusive(area);
    area->add_option("--max-cost", c.max_cost, "largest area searched")
        ->check(CLI::PositiveNumber);
    area->add_option("--max-len", c.max_len, "longest intermediate word")
        ->check(CLI::PositiveNumber);
    area->add_flag("--greedy", c.greedy, "Dehn-algorithm upper bound instead");
    area->add_option("-o,--out", c.out, "certificate file")
        ->default_str("certificate.txt");

    auto* length = app.add_subcommand("length", "word length over the "
                                                "group's generating set");
    group(length);
    word(length);
    states(length);
    inconclusive(length);
    length->add_option("--max-len", c.max_len, "largest length searched")
        ->check(CLI::PositiveNumber);

    auto* ball = app.add_subcommand("ball", "growth of the Cayley ball (CSV)");
    group(ball);
    states(ball);
    ball->add_option("-r,--radius", c.radius)->capture_default_str();
    ball->add_option("-o,--out", c.out, "CSV file instead of stdout");

    auto* distortion = app.add_subcommand(
        "distortion", "subgroup distortion against the standard generators");
    distortion->add_option("-g,--group", c.group, "registered subgroup")
        ->default_str("k2");
    states(distortion);
    inconclusive(distortion);
    distortion->add_option("-n,--max-n", c.max_n, "largest ambient length")
        ->capture_default_str();
    distortion->add_option("-r,--radius", c.radius, "cached subgroup ball radius")
        ->capture_default_str();
    distortion->add_option("--max-len", c.max_len, "largest subgroup length")
        ->check(CLI::PositiveNumber);
    distortion->add_option("-o,--out", c.out, "CSV file instead of stdout");

    auto* verify
        = app.add_subcommand("verify-paper", "run the verification suite");
    inconclusive(verify);
    verify->add_option("--seed", c.seed, "seed for randomized checks")
        ->capture_default_str();
    verify->add_option("--only", c.only, "criteria to run")
        ->check(CLI::Range(1, criterion_count));
    verify->add_flag("--with-m2", c.with_m2,
                     "compute |h_2| exactly (long; large budget)");
    verify->add_option("-o,--out", c.out,
                       "directory for report.csv and attachments");

    auto* exponent = app.add_subcommand(
        "exponent", "isoperimetric exponent bound for a coabelian kernel");
    exponent->add_option("--factors", c.factors, "number of factors r")
        ->capture_default_str();
    exponent->add_option("--rank", c.rank, "rank m of the abelian quotient")
        ->capture_default_str();
    exponent->add_flag("--hyperbolic", c.hyperbolic,
                       "factors with a linear area-radius pair");
    exponent->add_option("--alpha", c.alpha, "area exponent of each factor")
        ->capture_default_str();
    exponent->add_option("--rho", c.rho, "radius exponent of each factor")
        ->capture_default_str();

    auto* fit = app.add_subcommand("growth-fit",
                                   "log-log slope of a growth or distortion CSV");
    fit->add_option("-i,--in", c.input, "CSV file, '-' for stdin")->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    Runner r(c, out);
    try {
      if (wp->parsed()) return r.wp();
      if (area->parsed()) return r.area();
      if (length->parsed()) return r.length();
      if (ball->parsed()) return r.ball();
      if (distortion->parsed()) return r.distortion();
      if (verify->parsed()) return r.verify();
      if (exponent->parsed()) return r.exponent();
      if (fit->parsed()) return r.growth_fit();
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage_kind(e.kind()) ? exit_usage : exit_failure;
    }
    return exit_usage;
  }

}  // namespace dehnlab
