#pragma once

// Seeded random inputs for the property tests.

#include <cstdint>
#include <random>

#include "dehnlab/presentation.hpp"
#include "dehnlab/word.hpp"

namespace gen {

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline dehnlab::Letter letter(Rng& rng, std::size_t rank) {
    return dehnlab::Letter(uniform(rng, 0, rank - 1), uniform(rng, 0, 1) ? 1 : -1);
  }

  // Any word, not necessarily reduced.
  inline dehnlab::Word raw_word(Rng& rng, std::size_t rank, std::size_t n) {
    dehnlab::Word w;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(letter(rng, rank));
    }
    return w;
  }

  inline dehnlab::Word reduced_word(Rng& rng, std::size_t rank, std::size_t n) {
    dehnlab::Word w;
    while (w.size() < n) {
      auto l = letter(rng, rank);
      if (w.empty() || !l.is_inverse_of(w.back())) {
        w.push_back(l);
      }
    }
    return w;
  }

  inline dehnlab::Word cyclically_reduced_word(Rng& rng, std::size_t rank,
                                               std::size_t n) {
    while (true) {
      auto w = reduced_word(rng, rank, n);
      if (n < 2 || !w.front().is_inverse_of(w.back())) {
        return w;
      }
    }
  }

  // Product of k conjugates of relators (or their inverses), conjugators of
  // length at most conj. Not reduced.
  inline dehnlab::Word relator_product(Rng& rng, dehnlab::Presentation const& p,
                                       std::size_t k, std::size_t conj) {
    dehnlab::Word out;
    for (std::size_t i = 0; i < k; ++i) {
      auto u = reduced_word(rng, p.alphabet().size(), uniform(rng, 0, conj));
      auto r = p.relators()[uniform(rng, 0, p.relators().size() - 1)];
      if (uniform(rng, 0, 1)) {
        r = r.inverse();
      }
      out = out * u * r * u.inverse();
    }
    return out;
  }

}  // namespace gen
