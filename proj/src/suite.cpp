#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#include "dehnlab/error.hpp"
#include "dehnlab/paperlab.hpp"
#include "dehnlab/parse.hpp"

namespace dehnlab {

  namespace {
    using Rng = std::mt19937_64;

    std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    // Freely reduced word of exactly n letters.
    Word random_reduced_word(Rng& rng, std::size_t rank, std::size_t n) {
      Word w;
      while (w.size() < n) {
        Letter l(uniform(rng, 0, rank - 1), uniform(rng, 0, 1) ? 1 : -1);
        if (!w.empty() && l.is_inverse_of(w.back())) {
          continue;
        }
        w.push_back(l);
      }
      return w;
    }

    // Product of k conjugates u r^(+-1) u^-1 with |u| <= conj, freely reduced.
    Word random_relator_product(Rng& rng, Presentation const& p, std::size_t k,
                                std::size_t conj) {
      Word out;
      for (std::size_t i = 0; i < k; ++i) {
        Word u = random_reduced_word(rng, p.alphabet().size(),
                                     uniform(rng, 0, conj));
        Word r = p.relators()[uniform(rng, 0, p.relators().size() - 1)];
        if (uniform(rng, 0, 1)) {
          r = r.inverse();
        }
        out = out * u * r * u.inverse();
      }
      return free_reduce(out);
    }

    bool nonzero(std::vector<std::int64_t> const& v) {
      return std::any_of(v.begin(), v.end(),
                         [](std::int64_t x) { return x != 0; });
    }

    std::string join(std::vector<std::size_t> const& v) {
      return fmt::format("{{{}}}", fmt::join(v, ","));
    }

    char const* verdict(bool ok) {
      return ok ? "PASS" : "FAIL";
    }

    using Attachments = std::map<std::string, std::string>;

    struct Row {
      ReportRow    row;
      Attachments* attachments;

      void attach(std::string const& name, std::string const& csv) {
        if (attachments) {
          (*attachments)[name] = csv;
        }
      }
    };

    void z2_areas(PaperRegistry const& reg, Row& out) {
      auto const& s = reg.surface();
      Alphabet const& ab = s.z2.alphabet();
      std::vector<std::size_t> areas, lattice;
      std::ostringstream csv;
      csv << "m,area,lattice_area,radius,states_budget\n";
      bool ok = true;
      for (std::int64_t m = 1; m <= 3; ++m) {
        Word w = build_commutator_power(Word{ab.letter("a")},
                                        Word{ab.letter("b")}, m);
        auto const budget = SearchBudget::defaults_for(w);
        auto const o      = area_search(s.z2_ctx, w, budget);
        auto const oracle = static_cast<std::size_t>(
            std::abs(signed_lattice_area(w)));
        lattice.push_back(oracle);
        auto const* c = std::get_if<AreaCertificate>(&o);
        if (!c) {
          ok = false;
          areas.push_back(0);
          csv << fmt::format("{},,{},,{}\n", m, oracle, budget.max_states);
          continue;
        }
        areas.push_back(c->area);
        ok = ok && c->area == oracle && c->area == std::size_t(m * m)
             && validate_certificate(*c, s.z2);
        csv << fmt::format("{},{},{},{},{}\n", m, c->area, oracle, c->radius,
                           budget.max_states);
        out.row.values[fmt::format("area_m{}", m)] = std::int64_t(c->area);
      }
      out.row.expected = "{1,4,9}, equal to the lattice oracle";
      out.row.measured = fmt::format("search {} lattice {}", join(areas),
                                     join(lattice));
      out.row.status   = verdict(ok);
      out.attach("z2_areas.csv", csv.str());
    }

    void certificates(PaperRegistry const& reg, SuiteProfile const& profile,
                      Row& out) {
      auto const& s = reg.surface();
      Rng rng(profile.seed);
      std::size_t checked = 0, good = 0, max_area = 0;
      std::ostringstream csv;
      csv << "source,length,area,radius,bound,valid\n";
      auto check = [&](char const* source, AreaCertificate const& c,
                       Presentation const& p) {
        ++checked;
        bool valid = validate_certificate(c, p);
        bool holds = valid && area_radius_witness(c, p).holds;
        std::size_t bound
            = p.max_relator_length() * c.area + c.word.size();
        good += valid && holds;
        max_area = std::max(max_area, c.area);
        csv << fmt::format("{},{},{},{},{},{}\n", source, c.word.size(), c.area,
                           c.radius, bound, valid && holds ? 1 : 0);
      };
      auto searched = [&](char const* source, GroupContext const& ctx,
                          Word const& w) {
        auto o = area_search(ctx, w, SearchBudget::defaults_for(w));
        if (auto const* c = std::get_if<AreaCertificate>(&o)) {
          check(source, *c, ctx.presentation());
        } else {
          ++checked;
          csv << fmt::format("{},{},,,,0\n", source, w.size());
        }
      };
      auto nonempty = [&](auto make) {
        Word w;
        while (w.empty()) {
          w = make();
        }
        return w;
      };
      for (int i = 0; i < 40; ++i) {
        Word w = nonempty([&] {
          return random_relator_product(rng, s.z2, uniform(rng, 1, 2),
                                        uniform(rng, 0, 2));
        });
        searched("z2_search", s.z2_ctx, w);
      }
      for (int i = 0; i < 20; ++i) {
        Word w = nonempty([&] {
          return random_relator_product(rng, s.gamma2, 1, uniform(rng, 0, 2));
        });
        searched("surface2_search", s.gamma2_ctx, w);
      }
      for (int i = 0; i < 40; ++i) {
        Word w = nonempty([&] {
          return random_relator_product(rng, s.gamma2, uniform(rng, 1, 4),
                                        uniform(rng, 0, 4));
        });
        check("surface2_greedy", dehn_greedy_area_upper(s.gamma2_ctx, w),
              s.gamma2);
      }
      out.row.expected = "100 of 100 valid with radius <= C*area + l(w)";
      out.row.measured = fmt::format("{} of {} (max area {})", good, checked,
                                     max_area);
      out.row.values["certificates_good"] = std::int64_t(good);
      out.row.status = verdict(good == 100 && checked == 100);
      out.attach("certificates.csv", csv.str());
    }

    void dehn_solver(PaperRegistry const& reg, SuiteProfile const& profile,
                     Row& out) {
      auto const& s    = reg.surface();
      auto const& ctx  = s.gamma2_ctx;
      std::size_t const rank = s.alphabet.size();
      Rng rng(profile.seed + 1);
      auto trivial_sample = [&] {
        return random_relator_product(rng, s.gamma2, uniform(rng, 1, 4),
                                      uniform(rng, 0, 6));
      };
      auto nontrivial_sample = [&] {
        while (true) {
          Word w = random_reduced_word(rng, rank, uniform(rng, 1, 16));
          if (nonzero(exponent_sums(w.letters(), rank))) {
            return w;
          }
        }
      };
      std::size_t trivial_ok = 0, nontrivial_ok = 0, contradictions = 0;
      for (int i = 0; i < 500; ++i) {
        trivial_ok += ctx.is_trivial(trivial_sample());
      }
      for (int i = 0; i < 500; ++i) {
        nontrivial_ok += !ctx.is_trivial(nontrivial_sample());
      }
      for (int i = 0; i < 1000; ++i) {
        bool const built_trivial = i % 2 == 0;
        Word const w = built_trivial
                           ? trivial_sample()
                           : random_reduced_word(rng, rank, uniform(rng, 1, 12));
        bool const said = ctx.is_trivial(w);
        bool const abelian_nonzero = nonzero(exponent_sums(w.letters(), rank));
        if ((built_trivial && !said) || (abelian_nonzero && said)) {
          ++contradictions;
        }
      }
      out.row.expected = "500 trivial, 500 nontrivial, 0 contradictions";
      out.row.measured = fmt::format("{} trivial, {} nontrivial, {} contradictions",
                                     trivial_ok, nontrivial_ok, contradictions);
      out.row.values["contradictions"] = std::int64_t(contradictions);
      out.row.status = verdict(trivial_ok == 500 && nontrivial_ok == 500
                               && contradictions == 0);
    }

    void small_cancellation(PaperRegistry const& reg, Row& out) {
      auto const& s = reg.surface();
      Rational const sixth(1, 6);
      auto const g = check_metric_small_cancellation(s.gamma2, sixth);
      auto const z = check_metric_small_cancellation(s.z2, sixth);
      out.row.expected = "surface2 C'(1/6) with max piece 1; z2 fails";
      out.row.measured = fmt::format(
          "surface2 {} (max piece {}); z2 {} (max piece {})",
          g.satisfied ? "holds" : "fails", g.max_piece_length,
          z.satisfied ? "holds" : "fails", z.max_piece_length);
      out.row.values["max_piece_surface2"] = std::int64_t(g.max_piece_length);
      out.row.status
          = verdict(g.satisfied && g.max_piece_length == 1 && !z.satisfied);
    }

    void homomorphisms(PaperRegistry const& reg, Row& out) {
      auto const& s = reg.surface();
      std::size_t phi_ok = 0;
      for (std::size_t g = 0; g < 4; ++g) {
        Word x{Letter(g, 1)};
        phi_ok += abelianize(apply_homomorphism(s.nu, x), s.phi)
                  == -abelianize(x, s.phi);
      }
      bool const nu_rel
          = s.gamma2_ctx.is_trivial(apply_homomorphism(s.nu, s.relator()));
      bool const rho_rel
          = apply_homomorphism(s.retraction, s.relator()).empty();
      std::size_t fixed = 0;
      for (std::size_t g = 0; g < 2; ++g) {
        Word x{Letter(g, 1)};
        fixed += apply_homomorphism(s.retraction,
                                    apply_homomorphism(s.inclusion, x))
                 == x;
      }
      out.row.expected
          = "phi(nu(x)) = -phi(x) on 4 generators; nu(relator) = 1; "
            "rho(relator) = 1; rho(incl(x)) = x on 2 generators";
      out.row.measured = fmt::format(
          "{}/4; {}; {}; {}/2; nu {}", phi_ok, nu_rel ? "trivial" : "nontrivial",
          rho_rel ? "trivial" : "nontrivial", fixed,
          s.nu_is_automorphism ? "automorphism (inverse checked)"
                               : "endomorphism only (inverse not confirmed)");
      out.row.status = verdict(phi_ok == 4 && nu_rel && rho_rel && fixed == 2);
    }

    void retraction_lengths(PaperRegistry const& reg, Row& out) {
      auto const& s = reg.surface();
      auto const& entry = reg.group("surface2");
      SubgroupMetric metric(entry.ctx, entry.gens, 3);
      Letter const a1 = s.alphabet.letter("a1");
      Letter const b2 = s.alphabet.letter("b2");
      Letter const sub[4] = {a1, a1.inverse(), b2, b2.inverse()};

      std::size_t words = 0, mismatches = 0, inconclusive = 0;
      std::vector<std::size_t> count(7, 0);
      std::vector<Word>        level{Word{}};
      for (std::size_t n = 0; n <= 6; ++n) {
        std::vector<Word> next;
        for (Word const& w : level) {
          ++words;
          ++count[n];
          auto o = metric.length(TupleElement{w});
          if (auto const* len = std::get_if<std::size_t>(&o)) {
            mismatches += *len != n;
          } else {
            ++inconclusive;
          }
          if (n < 6) {
            for (Letter l : sub) {
              if (w.empty() || !l.is_inverse_of(w.back())) {
                next.push_back(w * Word{l});
              }
            }
          }
        }
        level = std::move(next);
      }
      std::ostringstream csv;
      csv << "free_length,words\n";
      for (std::size_t n = 0; n <= 6; ++n) {
        csv << n << ',' << count[n] << '\n';
      }
      out.row.expected = "1457 words, Gamma_2 length = free length for all";
      out.row.measured = fmt::format("{} words, {} mismatches, {} inconclusive",
                                     words, mismatches, inconclusive);
      out.row.values["words"] = std::int64_t(words);
      out.row.status = verdict(words == 1457 && mismatches == 0
                               && inconclusive == 0);
      out.attach("retraction_lengths.csv", csv.str());
    }

    void memberships(PaperRegistry const& reg, Row& out) {
      auto const& s  = reg.surface();
      auto const& k2 = reg.k2();
      auto const& k3 = reg.k3();
      auto const& d  = reg.amalgam();
      Alphabet const labels = label_alphabet(d.all);

      std::size_t checked = 0, failed = 0;
      auto member = [&](bool ok) {
        ++checked;
        failed += !ok;
      };
      for (auto const& e : k2.gens.elements) {
        member(k2.contains(e.element));
      }
      for (auto const& e : k3.gens.elements) {
        member(k3.contains(e.element));
      }
      for (auto const& e : d.y_plus.elements) {
        member(k3.contains(e.element) && d.h_member(e.element));
      }
      std::vector<std::size_t> w_len, t_len;
      std::size_t evaluations = 0;
      for (std::int64_t m = 1; m <= 5; ++m) {
        TupleElement const h3 = build_h_m(s, m, 3);
        member(k2.contains(build_h_m(s, m, 2)));
        member(k3.contains(h3));
        Word const         w = build_w_m(labels, m);
        TupleElement const g = evaluate(k3.ctx, d.all, w);
        member(k3.contains(g));
        evaluations += g == k3.ctx.reduce(h3);
        w_len.push_back(w.size());
        t_len.push_back(build_test_word(labels, m).size());
      }
      bool lengths = true;
      for (std::size_t i = 0; i < 5; ++i) {
        lengths = lengths && w_len[i] == 4 * (i + 1)
                  && t_len[i] == 12 * (i + 1);
      }
      out.row.expected = "all memberships hold; w_m = h_m; l(w_m) = 4m; "
                         "l(test word) = 12m (m <= 5)";
      out.row.measured = fmt::format(
          "{} of {} memberships; {}/5 evaluations equal h_m; l(w_m) {}; "
          "l(test) {}",
          checked - failed, checked, evaluations, join(w_len), join(t_len));
      out.row.status = verdict(failed == 0 && evaluations == 5 && lengths);
    }

    void commutation(PaperRegistry const& reg, Row& out) {
      auto const& s   = reg.surface();
      auto const& ctx = reg.k3().ctx;
      auto const& d   = reg.amalgam();
      auto comm = [&](TupleElement const& x, TupleElement const& y) {
        return ctx.multiply(ctx.multiply(x, y),
                            ctx.multiply(ctx.inverse(x), ctx.inverse(y)));
      };
      std::size_t trivial = 0;
      for (std::int64_t m = 1; m <= 3; ++m) {
        TupleElement const h = build_h_m(s, m, 3);
        trivial += ctx.is_trivial(comm(d.u1, h));
        trivial += ctx.is_trivial(comm(d.u2, h));
      }
      out.row.expected = "[u1,h_m] = [u2,h_m] = 1 for m <= 3";
      out.row.measured = fmt::format("{}/6 trivial", trivial);
      out.row.status   = verdict(trivial == 6);
    }

    std::string show(LengthOutcome const& o) {
      if (auto const* n = std::get_if<std::size_t>(&o)) {
        return std::to_string(*n);
      }
      return "inconclusive (" + std::get<Inconclusive>(o).reason + ")";
    }

    void h_length_equality(PaperRegistry const& reg, Row& out) {
      auto const& s  = reg.surface();
      auto const& k2 = reg.k2();
      auto const& d  = reg.amalgam();
      LengthBudget const budget;
      auto const over_y = word_length(k2.ctx, k2.gens, build_h_m(s, 1, 2),
                                      budget, k2.oracle());
      auto const over_yplus = word_length(reg.k3().ctx, d.y_plus,
                                          build_h_m(s, 1, 3), budget,
                                          d.h_member);
      auto const* a = std::get_if<std::size_t>(&over_y);
      auto const* b = std::get_if<std::size_t>(&over_yplus);
      out.row.expected = "|h_1| over Y+ = |h_1| over Y";
      out.row.measured = fmt::format("Y {}, Y+ {}", show(over_y),
                                     show(over_yplus));
      if (a) {
        out.row.values["h1_over_y"] = std::int64_t(*a);
      }
      if (b) {
        out.row.values["h1_over_y_plus"] = std::int64_t(*b);
      }
      out.row.status = !a || !b ? "INCONCLUSIVE" : verdict(*a == *b);
      std::ostringstream csv;
      csv << "generating_set,length\nY," << show(over_y) << "\nY+,"
          << show(over_yplus) << '\n';
      out.attach("h1_lengths.csv", csv.str());
    }

    void completeness(PaperRegistry const& reg, SuiteProfile const& profile,
                      Row& out) {
      auto const& s  = reg.surface();
      auto const& k2 = reg.k2();
      Ball const ambient = ball(k2.ctx, standard_generators(s.alphabet, 2),
                                profile.completeness_radius);
      BallOptions sub;
      sub.oracle = k2.oracle();
      SubgroupMetric metric(k2.ctx, k2.gens, 6, sub);
      LengthBudget budget;
      budget.max_states = 2'000'000'000;
      budget.max_radius = 32;

      std::map<std::size_t, std::size_t> by_length;
      std::size_t members = 0, unreached = 0, required = 0;
      for (std::uint32_t id = 0; id < ambient.table.size(); ++id) {
        TupleElement const g = ambient.table.element(id);
        if (!k2.contains(g)) {
          continue;
        }
        ++members;
        auto const o = metric.length(g, budget);
        if (auto const* n = std::get_if<std::size_t>(&o)) {
          ++by_length[*n];
          required = std::max(required, *n);
        } else {
          ++unreached;
        }
      }
      std::ostringstream csv;
      csv << "y_length,members\n";
      for (auto const& [n, c] : by_length) {
        csv << n << ',' << c << '\n';
      }
      out.row.expected = fmt::format(
          "every kernel element of the radius-{} ambient ball is reached",
          profile.completeness_radius);
      out.row.measured = fmt::format(
          "{} members, {} unreached, required Y-radius {} (cached Y-ball {} "
          "elements)",
          members, unreached, required, metric.identity_ball().table.size());
      out.row.values["members"]         = std::int64_t(members);
      out.row.values["required_radius"] = std::int64_t(required);
      out.row.status = unreached == 0 ? "PASS" : "INCONCLUSIVE";
      out.attach("completeness.csv", csv.str());
    }

    void exponent(Row& out) {
      std::vector<AreaRadiusPair> three(3, AreaRadiusPair::hyperbolic());
      Rational const e = isoperimetric_exponent_bound(three, 2, 3);
      bool rejected = false;
      try {
        isoperimetric_exponent_bound(
            std::vector<AreaRadiusPair>(2, AreaRadiusPair::hyperbolic()), 2, 2);
      } catch (Error const& err) {
        rejected = err.kind() == ErrorKind::TooFewFactors;
      }
      out.row.expected = "6; r = 2 rejected";
      out.row.measured = fmt::format(
          "{}{}; r = 2 {}", e.numerator(),
          e.denominator() == 1 ? "" : "/" + std::to_string(e.denominator()),
          rejected ? "rejected" : "accepted");
      out.row.values["exponent"] = e.denominator() == 1 ? e.numerator() : -1;
      out.row.status = verdict(e == Rational(6) && rejected);
    }

    void distortion_trend(PaperRegistry const& reg, SuiteProfile const& profile,
                          Row& out) {
      auto const& s  = reg.surface();
      auto const& k2 = reg.k2();
      auto const h1 = word_length(k2.ctx, k2.gens, build_h_m(s, 1, 2), {},
                                  k2.oracle());
      auto const* n1 = std::get_if<std::size_t>(&h1);

      // Without the opt-in, a short search bounds |h_2| from below: a
      // radius-limited miss proves every word of that length fails.
      std::size_t const cached = profile.include_m2 ? 6 : 4;
      LengthBudget      budget;
      budget.max_radius = profile.include_m2 ? 40 : 10;
      budget.max_states = profile.include_m2 ? 30'000'000'000ULL : 50'000'000;
      BallOptions sub;
      sub.oracle = k2.oracle();
      SubgroupMetric metric(k2.ctx, k2.gens, cached, sub);
      auto const h2  = metric.length(build_h_m(s, 2, 2), budget);
      auto const* n2 = std::get_if<std::size_t>(&h2);

      std::ostringstream csv;
      csv << "m,length,exact\n";
      if (n1) {
        csv << "1," << *n1 << ",1\n";
        out.row.values["h1"] = std::int64_t(*n1);
      }
      std::string h2_text;
      std::optional<std::size_t> lower;
      if (n2) {
        csv << "2," << *n2 << ",1\n";
        out.row.values["h2"] = std::int64_t(*n2);
        h2_text = std::to_string(*n2);
      } else if (std::get<Inconclusive>(h2).reason == "radius limit reached") {
        lower = budget.max_radius + 1;
        csv << "2,>=" << *lower << ",0\n";
        out.row.values["h2_lower_bound"] = std::int64_t(*lower);
        h2_text = fmt::format(">= {}", *lower);
      } else {
        h2_text = show(h2);
      }
      out.row.expected = "|h_2| > |h_1|, both exact";
      out.row.measured = fmt::format(
          "|h_1| = {}, |h_2| {}{}", n1 ? std::to_string(*n1) : show(h1),
          n2 ? "= " : "", h2_text);
      if (!profile.include_m2 && !n2) {
        out.row.measured += " (exact |h_2| is opt-in)";
      }
      if (!n1) {
        out.row.status = "INCONCLUSIVE";
      } else if (n2) {
        out.row.status = verdict(*n2 > *n1);
      } else if (lower && !profile.include_m2) {
        out.row.status = verdict(*lower > *n1);
      } else {
        out.row.status = "INCONCLUSIVE";
      }
      out.attach("h_lengths.csv", csv.str());
    }

    std::string const& description(int id) {
      static std::vector<std::string> const d = {
          "Z^2 areas of [a^m,b^m], m = 1..3",
          "certificate soundness and area-radius inequality",
          "Dehn solver against the abelianization oracle",
          "small cancellation license",
          "phi o nu = -phi, nu and rho respect the relator",
          "retraction undistortedness up to length 6",
          "kernel memberships and w_m word counts",
          "[u_i, h_m] = 1",
          "|h_1| over Y+ equals |h_1| over Y",
          "Y generates the kernel near the identity",
          "isoperimetric exponent bound",
          "|h_m| over Y grows with m",
      };
      return d.at(static_cast<std::size_t>(id - 1));
    }
  }  // namespace

  ReportRow run_criterion(PaperRegistry const& reg, int id,
                          SuiteProfile const& profile,
                          Attachments*        attachments) {
    if (id < 1 || id > criterion_count) {
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("no criterion {}", id));
    }
    Row out{ReportRow{id, description(id), "", "", "FAIL", 0, {}}, attachments};
    auto const start = std::chrono::steady_clock::now();
    try {
      switch (id) {
        case 1: z2_areas(reg, out); break;
        case 2: certificates(reg, profile, out); break;
        case 3: dehn_solver(reg, profile, out); break;
        case 4: small_cancellation(reg, out); break;
        case 5: homomorphisms(reg, out); break;
        case 6: retraction_lengths(reg, out); break;
        case 7: memberships(reg, out); break;
        case 8: commutation(reg, out); break;
        case 9: h_length_equality(reg, out); break;
        case 10: completeness(reg, profile, out); break;
        case 11: exponent(out); break;
        case 12: distortion_trend(reg, profile, out); break;
      }
    } catch (Error const& e) {
      out.row.status   = "FAIL";
      out.row.measured = fmt::format("{}: {}", to_string(e.kind()), e.what());
    }
    out.row.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return out.row;
  }

  SuiteReport verify_paper_suite(PaperRegistry const& reg,
                                 SuiteProfile const&  profile) {
    SuiteReport report;
    for (int id = 1; id <= criterion_count; ++id) {
      if (!profile.only.empty()
          && std::find(profile.only.begin(), profile.only.end(), id)
                 == profile.only.end()) {
        continue;
      }
      report.rows.push_back(run_criterion(reg, id, profile, &report.attachments));
    }
    return report;
  }

  bool SuiteReport::passed() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](ReportRow const& r) { return r.status == "FAIL"; });
  }

  bool SuiteReport::any_inconclusive() const {
    return std::any_of(rows.begin(), rows.end(), [](ReportRow const& r) {
      return r.status == "INCONCLUSIVE";
    });
  }

  namespace {
    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c;
        if (c == '"') {
          out += '"';
        }
      }
      return out + "\"";
    }
  }  // namespace

  void write_report_csv(std::ostream& out, SuiteReport const& report) {
    out << "id,description,expected,measured,status,seconds\n";
    for (auto const& r : report.rows) {
      out << r.id << ',' << csv_field(r.description) << ','
          << csv_field(r.expected) << ',' << csv_field(r.measured) << ','
          << r.status << ',' << fmt::format("{:.3f}", r.seconds) << '\n';
    }
  }

}  // namespace dehnlab
