#include <catch_amalgamated.hpp>

#include <algorithm>

#include "dehnlab/error.hpp"
#include "dehnlab/parse.hpp"
#include "generators.hpp"

using namespace dehnlab;

namespace {
  Alphabet const ab{"a", "b"};
  Alphabet const surf{"a1", "b1", "a2", "b2"};

  Word w(char const* text, Alphabet const& a = ab) {
    return parse_word(text, a);
  }

  // Cancels adjacent inverse pairs until none is left, one pass at a time.
  Word naive_reduce(Word const& x) {
    std::vector<Letter> v(x.begin(), x.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].is_inverse_of(v[i + 1])) {
          v.erase(v.begin() + i, v.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
    return Word(v);
  }

  Word naive_least_rotation(Word const& x) {
    Word best = x;
    for (std::size_t k = 1; k < x.size(); ++k) {
      best = std::min(best, x.rotated(k));
    }
    return best;
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

TEST_CASE("letters pack generator and sign") {
  Letter x(3, -1);
  CHECK(x.generator() == 3);
  CHECK(x.sign() == -1);
  CHECK(x.code() == 6);
  CHECK(x.inverse() == Letter(3, 1));
  CHECK(x.is_inverse_of(Letter(3, 1)));
  CHECK_FALSE(x.is_inverse_of(Letter(2, 1)));
}

TEST_CASE("parser") {
  CHECK(w("[a,b]") == Word{Letter(0, 1), Letter(1, 1), Letter(0, -1), Letter(1, -1)});
  CHECK(w("a^3 a^-1") == w("a a"));
  CHECK(w("e").empty());
  CHECK(w("(a b)^-2") == w("b^-1 a^-1 b^-1 a^-1"));
  CHECK(w("a b b^-1 a^-1").empty());
  CHECK(w("[a1,b1][a2,b2]", surf).size() == 8);
  CHECK(to_string(w("a a a b^-1"), ab) == "a^3 b^-1");
  CHECK(to_string(Word{}, ab) == "e");

  CHECK(kind_of([] { w("a c"); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([] { w("a^"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { w("[a b]"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { w(""); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { w("a^99999999999"); }) == ErrorKind::ExponentOverflow);
  try {
    w("a b )");
  } catch (Error const& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing round-trips through the parser") {
  gen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Word x = gen::reduced_word(rng, 4, gen::uniform(rng, 0, 20));
    CHECK(parse_word(to_string(x, surf), surf) == x);
  }
}

TEST_CASE("free reduction matches pairwise cancellation") {
  gen::Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    Word x = gen::raw_word(rng, 2, gen::uniform(rng, 0, 24));
    Word r = free_reduce(x);
    CHECK(r == naive_reduce(x));
    CHECK(is_freely_reduced(r.letters()));
  }
}

TEST_CASE("inverse and products") {
  gen::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    Word u = gen::reduced_word(rng, 3, gen::uniform(rng, 0, 10));
    Word v = gen::reduced_word(rng, 3, gen::uniform(rng, 0, 10));
    CHECK(u.inverse().inverse() == u);
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(free_reduce(u * u.inverse()).empty());
  }
}

TEST_CASE("least rotation agrees with trying every rotation") {
  gen::Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    Word x = gen::cyclically_reduced_word(rng, 2, gen::uniform(rng, 1, 16));
    Word least = x.rotated(least_rotation_index(x.letters()));
    CHECK(least == naive_least_rotation(x));
    CHECK(CyclicWord::from_cyclically_reduced(x).canonical_rotation() == least);
  }
  // Periodic words pick the first least rotation.
  Word p = w("b a b a");
  CHECK(least_rotation_index(p.letters()) == 1);
}

TEST_CASE("cyclic reduction peels a conjugator") {
  gen::Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    Word x = free_reduce(gen::raw_word(rng, 2, gen::uniform(rng, 0, 16)));
    auto c = cyclic_reduce(x);
    CHECK(is_cyclically_reduced(c.core.canonical_rotation().letters()));
    CHECK(free_reduce(c.conjugator * c.linear_core * c.conjugator.inverse()) == x);
    CHECK(CyclicWord::from_cyclically_reduced(c.linear_core) == c.core);
  }
}

TEST_CASE("powers and commutators") {
  Word a = w("a"), b = w("b");
  CHECK(power(a * b, 3) == w("a b a b a b"));
  CHECK(power(a, -2) == w("a^-2"));
  CHECK(power(a, 0).empty());
  CHECK(commutator(a, b) == w("[a,b]"));
  CHECK(commutator(a, a).empty());
  for (std::int64_t m = 1; m <= 5; ++m) {
    CHECK(build_commutator_power(a, b, m).size() == std::size_t(4 * m));
  }
  CHECK(kind_of([&] { power(a, 10, 5); }) == ErrorKind::ExponentOverflow);
  CHECK(exponent_sums(w("a b a^-3 b").letters(), 2)
        == std::vector<std::int64_t>{-2, 2});
}

TEST_CASE("alphabets") {
  CHECK(surf.index("b2") == 3);
  CHECK(surf.index("c") == surf.size());
  CHECK(surf.letter("a2", -1) == Letter(2, -1));
  CHECK(surf.contains(w("a1 b2", surf)));
  CHECK_FALSE(ab.contains(w("a1 b2", surf)));
  CHECK(kind_of([] { Alphabet{"a", "a"}; }) == ErrorKind::InvalidArgument);
}
