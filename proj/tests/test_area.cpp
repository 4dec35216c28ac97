#include <catch_amalgamated.hpp>

#include <sstream>

#include "dehnlab/error.hpp"
#include "dehnlab/paperlab.hpp"
#include "dehnlab/parse.hpp"
#include "generators.hpp"

using namespace dehnlab;

namespace {
  Alphabet const ab{"a", "b"};
  Alphabet const surf{"a1", "b1", "a2", "b2"};

  // Twice the signed area enclosed by the lattice path of w.
  std::int64_t shoelace(Word const& w) {
    std::int64_t x = 0, y = 0, twice = 0;
    for (Letter l : w) {
      std::int64_t nx = x, ny = y;
      (l.generator() == 0 ? nx : ny) += l.sign();
      twice += x * ny - nx * y;
      x = nx;
      y = ny;
    }
    return twice;
  }

  AreaCertificate certificate(AreaOutcome const& o) {
    REQUIRE(std::holds_alternative<AreaCertificate>(o));
    return std::get<AreaCertificate>(o);
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
  }
}  // namespace

TEST_CASE("Z^2 commutator areas") {
  auto s = build_surface_data();
  for (std::int64_t m = 1; m <= 3; ++m) {
    Word w = build_commutator_power(parse_word("a", ab), parse_word("b", ab), m);
    auto c = certificate(area_search(s.z2_ctx, w, SearchBudget::defaults_for(w)));
    CHECK(c.area == std::size_t(m * m));
    CHECK(std::abs(signed_lattice_area(w)) == m * m);
    CHECK(validate_certificate(c, s.z2));
    CHECK(area_radius_witness(c, s.z2).holds);
  }
}

TEST_CASE("lattice area matches the shoelace formula") {
  gen::Rng rng(41);
  int      closed = 0;
  while (closed < 300) {
    Word w = gen::raw_word(rng, 2, 2 * gen::uniform(rng, 1, 10));
    auto e = exponent_sums(w.letters(), 2);
    if (e[0] != 0 || e[1] != 0) {
      continue;
    }
    ++closed;
    CHECK(2 * signed_lattice_area(w) == shoelace(w));
    CHECK(twice_signed_area(w.letters(), {{1, 0}, {0, 1}}) == shoelace(w));
  }
  CHECK(kind_of([] { signed_lattice_area(parse_word("a", ab)); }) == ErrorKind::NotClosed);
}

TEST_CASE("search outcomes") {
  auto s = build_surface_data();
  Word a = parse_word("a", ab);
  CHECK(std::holds_alternative<NotNullHomotopic>(
      area_search(s.z2_ctx, a, SearchBudget::defaults_for(a))));
  CHECK(certificate(area_search(s.z2_ctx, Word{}, SearchBudget::defaults_for(Word{})))
            .area == 0);

  Word big = build_commutator_power(parse_word("a", ab), parse_word("b", ab), 3);
  SearchBudget tiny = SearchBudget::defaults_for(big);
  tiny.max_states = 10;
  CHECK(std::holds_alternative<Inconclusive>(area_search(s.z2_ctx, big, tiny)));
  tiny = SearchBudget::defaults_for(big);
  tiny.max_cost = 8;
  CHECK(std::holds_alternative<Inconclusive>(area_search(s.z2_ctx, big, tiny)));

  auto k2 = build_kernel_group(s, 2);
  CHECK(kind_of([&] { area_search(k2.ctx, Word{}, SearchBudget{}); })
        == ErrorKind::InvalidArgument);
}

TEST_CASE("surface certificates") {
  auto     s = build_surface_data();
  gen::Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    Word w = free_reduce(gen::relator_product(rng, s.gamma2, gen::uniform(rng, 1, 2),
                                              gen::uniform(rng, 0, 2)));
    if (w.empty()) {
      continue;
    }
    auto greedy = dehn_greedy_area_upper(s.gamma2_ctx, w);
    CHECK(validate_certificate(greedy, s.gamma2));
    CHECK(area_radius_witness(greedy, s.gamma2).holds);
    if (w.size() <= 12) {
      auto exact = certificate(area_search(s.gamma2_ctx, w, SearchBudget::defaults_for(w)));
      CHECK(validate_certificate(exact, s.gamma2));
      CHECK(exact.area <= greedy.area);
      CHECK(exact.area >= 1);
    }
  }
  CHECK(kind_of([&] { dehn_greedy_area_upper(s.gamma2_ctx, parse_word("a1", surf)); })
        == ErrorKind::NotTrivial);
}

TEST_CASE("certificates are checked and round-trip") {
  auto s = build_surface_data();
  Word w = build_commutator_power(parse_word("a", ab), parse_word("b", ab), 2);
  auto c = certificate(area_search(s.z2_ctx, w, SearchBudget::defaults_for(w)));

  std::stringstream io;
  write_certificate(io, c, ab);
  CHECK(read_certificate(io, ab) == c);

  auto broken = c;
  broken.factors.pop_back();
  CHECK_FALSE(validate_certificate(broken, s.z2));
  CHECK(kind_of([&] { area_radius_witness(broken, s.z2); })
        == ErrorKind::InvalidCertificate);

  std::stringstream junk("word a b\nconj a rel 0 sign +\n");
  CHECK(kind_of([&] { read_certificate(junk, ab); }) == ErrorKind::SyntaxError);
}

TEST_CASE("exponent bound") {
  std::vector<AreaRadiusPair> hyp(3, AreaRadiusPair::hyperbolic());
  CHECK(isoperimetric_exponent_bound(hyp, 2, 3) == Rational(6));
  CHECK(isoperimetric_exponent_bound(hyp, 1, 3) == Rational(4));
  std::vector<AreaRadiusPair> mixed{AreaRadiusPair::hyperbolic(),
                                    AreaRadiusPair(Rational(3), Rational(1)),
                                    AreaRadiusPair(Rational(2), Rational(3, 2))};
  CHECK(isoperimetric_exponent_bound(mixed, 2, 3) == Rational(9));
  CHECK(kind_of([] {
          isoperimetric_exponent_bound(
              std::vector<AreaRadiusPair>(2, AreaRadiusPair::hyperbolic()), 2, 2);
        })
        == ErrorKind::TooFewFactors);
  CHECK(kind_of([&] { isoperimetric_exponent_bound(hyp, 2, 4); })
        == ErrorKind::FactorCountMismatch);
  CHECK(kind_of([] { AreaRadiusPair(Rational(1, 2), Rational(1)); })
        == ErrorKind::InvalidArgument);
}
