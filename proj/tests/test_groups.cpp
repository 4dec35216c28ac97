#include <catch_amalgamated.hpp>

#include <map>

#include "dehnlab/error.hpp"
#include "dehnlab/paperlab.hpp"
#include "dehnlab/parse.hpp"
#include "generators.hpp"

using namespace dehnlab;

namespace {
  Alphabet const surf{"a1", "b1", "a2", "b2"};
  Alphabet const ab{"a", "b"};

  Word w(char const* text, Alphabet const& a = surf) {
    return parse_word(text, a);
  }

  // Longest word read from two different positions of the symmetrized
  // relators: count prefixes by length. A whole relator can be a piece.
  std::size_t counted_max_piece(std::vector<Word> const& relators) {
    std::size_t best = 0;
    std::size_t longest = 0;
    for (auto const& r : relators) {
      longest = std::max(longest, r.size());
    }
    for (std::size_t len = 1; len < longest; ++len) {
      std::map<std::vector<Letter>, int> seen;
      for (auto const& r : relators) {
        if (r.size() < len) {
          continue;
        }
        for (Word const& rr : {r, r.inverse()}) {
          for (std::size_t j = 0; j < rr.size(); ++j) {
            Word s = rr.rotated(j);
            ++seen[std::vector<Letter>(s.begin(), s.begin() + len)];
          }
        }
      }
      for (auto const& [prefix, n] : seen) {
        if (n > 1) {
          best = len;
        }
      }
    }
    return best;
  }

  bool proper_power(Word const& r) {
    for (std::size_t k = 1; k < r.size(); ++k) {
      if (r.rotated(k) == r) {
        return true;
      }
    }
    return false;
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

TEST_CASE("small cancellation of the standard presentations") {
  auto p = make_presentation(surf, {w("[a1,b1][a2,b2]")});
  auto r = check_metric_small_cancellation(p, Rational(1, 6));
  CHECK(r.satisfied);
  CHECK(r.max_piece_length == 1);
  CHECK(certify_small_cancellation(p, Rational(1, 6)).small_cancellation_lambda()
        == Rational(1, 6));

  auto z = make_presentation(ab, {w("[a,b]", ab)});
  CHECK_FALSE(check_metric_small_cancellation(z, Rational(1, 6)).satisfied);
  CHECK(kind_of([&] { certify_small_cancellation(z, Rational(1, 6)); })
        == ErrorKind::StrategyUnlicensed);
  CHECK(kind_of([&] { GroupContext::dehn(z); }) == ErrorKind::StrategyUnlicensed);
}

TEST_CASE("piece lengths agree with prefix counting") {
  gen::Rng rng(21);
  int      tested = 0;
  while (tested < 200) {
    std::vector<Word> rels;
    std::size_t const count = gen::uniform(rng, 1, 2);
    for (std::size_t i = 0; i < count; ++i) {
      rels.push_back(gen::cyclically_reduced_word(rng, 3, gen::uniform(rng, 3, 12)));
    }
    bool skip = false;
    for (auto const& r : rels) {
      skip = skip || proper_power(r);
    }
    if (skip || (count == 2 && (rels[0] == rels[1]))) {
      continue;
    }
    ++tested;
    auto p = make_presentation(Alphabet{"x", "y", "z"}, rels);
    auto report = check_metric_small_cancellation(p, Rational(1, 6));
    CHECK(report.max_piece_length == counted_max_piece(rels));
  }
}

TEST_CASE("presentations reject bad input") {
  CHECK(kind_of([] { make_presentation(ab, {Word{}}); }) == ErrorKind::EmptyRelator);
  CHECK(kind_of([] { make_presentation(ab, {w("a1 b2")}); })
        == ErrorKind::AlphabetMismatch);
}

TEST_CASE("abelian invariants vanish on relators") {
  auto s = build_surface_data();
  auto f = abelian_invariant_functionals(s.z2w);
  REQUIRE(f.size() == 2);
  for (auto const& r : s.z2w.relators()) {
    auto sums = exponent_sums(r.letters(), 4);
    for (auto const& row : f) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        v += row[i] * sums[i];
      }
      CHECK(v == 0);
    }
  }
  CHECK(abelian_invariant_functionals(s.gamma2).size() == 4);
}

TEST_CASE("homomorphisms are checked on relators") {
  auto z2   = make_presentation(ab, {w("[a,b]", ab)});
  auto free = make_presentation(ab, {});
  GroupHom bad(z2, free, {w("a", ab), w("b", ab)});
  CHECK(kind_of([&] { verify_homomorphism(bad, GroupContext::free_group(free)); })
        == ErrorKind::NotWellDefined);
  CHECK_FALSE(bad.verified());
  CHECK(kind_of([&] { GroupHom(z2, free, {w("a", ab)}); })
        == ErrorKind::AlphabetMismatch);

  GroupHom swap(free, free, {w("b", ab), w("a", ab)});
  auto     twice = compose(swap, swap);
  CHECK(apply_homomorphism(twice, w("a b^2 a^-1", ab)) == w("a b^2 a^-1", ab));
}

TEST_CASE("surface data") {
  auto s = build_surface_data();
  CHECK(to_string(apply_homomorphism(s.nu, w("a1")), surf) == "a1 b1 a1^-1 b1^-1 a1^-1");
  CHECK(abelianize(apply_homomorphism(s.nu, w("a1")), s.phi)
        == AbelianVector(std::vector<std::int64_t>{-1, 0}));
  CHECK(s.gamma2_ctx.is_trivial(apply_homomorphism(s.nu, s.relator())));
  CHECK(apply_homomorphism(s.retraction, s.relator()).empty());
  CHECK(s.nu_is_automorphism);
  CHECK(surjective_onto_free_abelian(s.phi));

  // phi o nu = -phi holds on words, not just generators.
  gen::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    Word x = gen::reduced_word(rng, 4, gen::uniform(rng, 0, 12));
    CHECK(abelianize(apply_homomorphism(s.nu, x), s.phi) == -abelianize(x, s.phi));
    Word there = apply_homomorphism(s.nu_inverse, apply_homomorphism(s.nu, x));
    CHECK(s.gamma2_ctx.equal(TupleElement{there}, TupleElement{x}));
  }
}

TEST_CASE("kernel groups") {
  auto s  = build_surface_data();
  auto k2 = build_kernel_group(s, 2);
  auto k3 = build_kernel_group(s, 3);
  CHECK(k2.gens.elements.size() == 8);
  CHECK(k3.gens.elements.size() == 14);
  for (auto const& e : k2.gens.elements) {
    CHECK(coabelian_value(k2.theta, e.element).is_zero());
  }
  // The last lifted relator is the surface relator itself.
  CHECK(k2.gens.elements.back().element == TupleElement{s.relator(), Word{}});
  CHECK(k3.contains(TupleElement{w("a1"), Word{}, w("a1^-1")}));
  CHECK_FALSE(k3.contains(TupleElement{w("a1"), Word{}, Word{}}));
  CHECK(kind_of([&] { k3.contains(TupleElement{w("a1")}); })
        == ErrorKind::FactorCountMismatch);
  CHECK(kind_of([&] { build_kernel_group(s, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("amalgam data") {
  PaperRegistry reg;
  auto const&   d = reg.amalgam();
  auto const&   ctx = reg.k3().ctx;
  CHECK(reg.k3().contains(d.z));
  CHECK(d.h_member(d.z));
  CHECK(d.h_member(ctx.multiply(d.z, d.z)));
  CHECK_FALSE(d.h_member(TupleElement{Word{}, Word{}, w("[a1,b2]")}));
  CHECK_FALSE(d.h_member(d.u1));
  CHECK(d.y_plus.elements.size() == 9);
  CHECK(d.a1_set.elements.size() == 12);
  CHECK(d.a2_set.elements.size() == 10);
  CHECK(ctx.equal(ctx.multiply(d.u1, d.u2),
                  TupleElement{Word{}, apply_homomorphism(reg.surface().nu, w("a1 a2")),
                               w("a1 a2")}));
}
