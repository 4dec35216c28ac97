#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "dehnlab/error.hpp"
#include "dehnlab/paperlab.hpp"
#include "dehnlab/parse.hpp"
#include "generators.hpp"

using namespace dehnlab;

namespace {
  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
  }

  std::size_t exact(LengthOutcome const& o) {
    REQUIRE(std::holds_alternative<std::size_t>(o));
    return std::get<std::size_t>(o);
  }

  PaperRegistry const& registry() {
    static PaperRegistry reg;
    return reg;
  }
}  // namespace

TEST_CASE("growth of free and abelian groups") {
  auto const& f = registry().group("free2");
  Ball        b = ball(f.ctx, f.gens, 5);
  for (auto const& r : b.growth) {
    std::size_t sphere = r.radius == 0 ? 1 : 4 * std::size_t(std::pow(3, r.radius - 1));
    CHECK(r.sphere == sphere);
  }
  auto const& z = registry().group("z2");
  Ball        zb = ball(z.ctx, z.gens, 6);
  for (auto const& r : zb.growth) {
    CHECK(r.sphere == (r.radius == 0 ? 1 : 4 * r.radius));
    CHECK(r.ball == 2 * r.radius * (r.radius + 1) + 1);
  }
}

TEST_CASE("growth of the genus-2 surface group") {
  // Coefficients of the growth series of the genus-2 surface group.
  std::vector<std::size_t> const spheres{1, 8, 56, 392, 2736};
  auto const& s = registry().group("surface2");
  Ball        b = ball(s.ctx, s.gens, 4);
  REQUIRE(b.growth.size() == spheres.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    total += spheres[i];
    CHECK(b.growth[i] == GrowthRow{i, spheres[i], total});
  }
}

TEST_CASE("geodesics and BFS tree") {
  auto const& k2 = registry().group("k2");
  Ball        b = ball(k2.ctx, k2.gens, 3);
  CHECK(b.growth[1].sphere == 14);
  CHECK(b.growth[2].sphere == 182);
  Alphabet const labels = label_alphabet(k2.gens);
  for (std::uint32_t id = 0; id < b.table.size(); id += 97) {
    std::string text;
    for (auto const& l : b.geodesic(id, k2.gens)) {
      text += l + " ";
    }
    Word w = text.empty() ? Word{} : parse_word(text, labels);
    CHECK(w.size() == b.length[id]);
    CHECK(k2.ctx.equal(evaluate(k2.ctx, k2.gens, w), b.table.element(id)));
  }
  CHECK(kind_of([&] { ball(k2.ctx, k2.gens, 3, BallOptions{10, {}}); })
        == ErrorKind::StateLimit);
  GeneratingSet bad = k2.gens;
  bad.elements.push_back({"x", TupleElement{parse_word("a1", registry().surface().alphabet),
                                            Word{}}});
  CHECK(kind_of([&] { ball(k2.ctx, bad, 1, BallOptions{1000, k2.member}); })
        == ErrorKind::MembershipViolation);
}

TEST_CASE("directed generators drop repeats") {
  auto const&   z = registry().group("z2");
  GeneratingSet g = z.gens;
  g.elements.push_back({"e", TupleElement{Word{}}});
  g.elements.push_back({"a_again", g.elements[0].element});
  auto d = directed_generators(z.ctx, g);
  CHECK(d.size() == 4);
}

TEST_CASE("length searches agree") {
  auto const& k2 = registry().group("k2");
  gen::Rng    rng(51);
  SubgroupMetric metric(k2.ctx, k2.gens, 2);
  for (int i = 0; i < 40; ++i) {
    Word w = gen::raw_word(rng, k2.gens.elements.size(), gen::uniform(rng, 0, 5));
    TupleElement g = evaluate(k2.ctx, k2.gens, w);
    std::size_t  n = exact(word_length(k2.ctx, k2.gens, g));
    CHECK(n <= w.size());
    CHECK(exact(unidirectional_length(k2.ctx, k2.gens, g)) == n);
    CHECK(exact(metric.length(g)) == n);
  }
  auto const& s = registry().group("surface2");
  TupleElement far{parse_word("a1^9", registry().surface().alphabet)};
  CHECK(std::holds_alternative<Inconclusive>(
      word_length(s.ctx, s.gens, far, LengthBudget{1'000'000, 4})));
  CHECK(kind_of([&] {
          word_length(k2.ctx, k2.gens,
                      TupleElement{parse_word("a1", registry().surface().alphabet), Word{}},
                      {}, k2.member);
        })
        == ErrorKind::MembershipViolation);
}

TEST_CASE("h_1 has length 5 over Y") {
  auto const& reg = registry();
  auto const& k2  = reg.group("k2");
  CHECK(exact(word_length(k2.ctx, k2.gens, build_h_m(reg.surface(), 1, 2))) == 5);
  Word const geo = parse_word("da1 q3^-1 da1^-1 q1 q3", label_alphabet(k2.gens));
  CHECK(k2.ctx.equal(evaluate(k2.ctx, k2.gens, geo), build_h_m(reg.surface(), 1, 2)));
}

TEST_CASE("distortion of an index-two subgroup of Z") {
  // <a^2> in Z^2: Delta(n) = floor(n / 2).
  auto const&   z = registry().group("z2");
  Alphabet const ab{"a", "b"};
  GeneratingSet sub{"S", {{"a2", TupleElement{parse_word("a^2", ab)}}}};
  MembershipOracle even = [](TupleElement const& g) {
    auto e = exponent_sums(g[0].letters(), 2);
    return e[1] == 0 && e[0] % 2 == 0;
  };
  auto table = distortion_table(z.ctx, z.gens, sub, even, DistortionOptions{6, 2, {}, {}});
  REQUIRE(table.size() == 7);
  for (auto const& row : table) {
    CHECK(row.delta == row.n / 2);
    CHECK_FALSE(row.partial);
    if (row.n >= 2) {
      // The lexicographically least maximizer is the negative power.
      REQUIRE(row.witness);
      CHECK(*row.witness == TupleElement{power(parse_word("a", ab), -std::int64_t(2 * (row.n / 2)))});
    }
  }
  std::ostringstream csv;
  write_distortion_csv(csv, table, [&](TupleElement const& g) { return to_string(g[0], ab); });
  CHECK(csv.str().rfind("n,delta,witness\n0,0,", 0) == 0);
}

TEST_CASE("log-log slopes") {
  std::vector<std::pair<double, double>> cube;
  for (double n = 1; n <= 6; ++n) {
    cube.emplace_back(n, 5 * n * n * n);
  }
  auto fit = fit_loglog_slope(cube);
  CHECK(fit.slope == Catch::Approx(3.0));
  CHECK(fit.residual == Catch::Approx(0.0).margin(1e-12));
  CHECK(kind_of([] { fit_loglog_slope({{1, 1}}); }) == ErrorKind::DegenerateInput);
  CHECK(kind_of([] { fit_loglog_slope({{2, 1}, {2, 3}}); }) == ErrorKind::DegenerateInput);
  CHECK(kind_of([] { fit_loglog_slope({{1, 1}, {2, 0}}); }) == ErrorKind::DegenerateInput);
}

TEST_CASE("growth CSV") {
  std::ostringstream out;
  write_growth_csv(out, {{0, 1, 1}, {1, 4, 5}});
  CHECK(out.str() == "radius,sphere,ball\n0,1,1\n1,4,5\n");
}
