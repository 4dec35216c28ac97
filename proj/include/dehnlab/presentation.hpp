#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "dehnlab/word.hpp"

namespace dehnlab {

  using Rational = boost::rational<std::int64_t>;

  // One cyclic shift of r^sign, where r is relator number `relator`.
  // letters == beta^-1 * r^sign * beta with beta the first `rotation` letters
  // of r^sign.
  struct RelatorShift {
    Word        letters;
    std::size_t relator;
    int         sign;
    std::size_t rotation;
  };

  class Presentation {
   public:
    Presentation() = default;

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    bool is_free() const noexcept {
      return _relators.empty();
    }
    // Set only for registry-built presentations of free abelian groups; then
    // each generator has a coordinate vector and a word is trivial iff its
    // summed coordinates vanish.
    bool abelian_exact() const noexcept {
      return _abelian_coordinates.has_value();
    }
    std::vector<std::vector<std::int64_t>> const& abelian_coordinates() const;
    std::size_t abelian_rank() const;

    std::optional<Rational> small_cancellation_lambda() const noexcept {
      return _lambda;
    }
    std::size_t max_relator_length() const noexcept;

    // All cyclic shifts of every relator and its inverse, with duplicate
    // words (from proper powers) removed. The first letter index lists the
    // shifts starting with each letter code.
    std::vector<RelatorShift> const& shifts() const noexcept {
      return _shifts;
    }
    std::vector<std::size_t> const& shifts_starting_with(Letter l) const {
      return _by_first_letter[l.code()];
    }

    friend Presentation make_presentation(Alphabet, std::vector<Word> const&);
    friend Presentation make_trusted_free_abelian_presentation(
        Alphabet, std::vector<Word> const&,
        std::vector<std::vector<std::int64_t>>);
    friend Presentation certify_small_cancellation(Presentation const&,
                                                   Rational lambda);

   private:
    void build_shifts();

    Alphabet                                              _alphabet;
    std::vector<Word>                                     _relators;
    std::optional<std::vector<std::vector<std::int64_t>>> _abelian_coordinates;
    std::optional<Rational>                               _lambda;
    std::vector<RelatorShift>                             _shifts;
    std::vector<std::vector<std::size_t>>                 _by_first_letter;
  };

  // Relators are freely and cyclically reduced on the way in.
  // Throws EmptyRelator / AlphabetMismatch.
  Presentation make_presentation(Alphabet alphabet,
                                 std::vector<Word> const& relators);

  // Registry use only: no check is made that the group really is free
  // abelian of the stated rank.
  Presentation make_trusted_free_abelian_presentation(
      Alphabet alphabet, std::vector<Word> const& relators,
      std::vector<std::vector<std::int64_t>> coordinates);

  struct SmallCancellationReport {
    bool        satisfied;
    std::size_t max_piece_length;
  };

  // Metric condition C'(lambda) by exhaustive piece enumeration.
  SmallCancellationReport check_metric_small_cancellation(Presentation const& p,
                                                          Rational lambda);

  // Returns a copy flagged with lambda if C'(lambda) holds; throws
  // StrategyUnlicensed otherwise.
  Presentation certify_small_cancellation(Presentation const& p,
                                          Rational           lambda);

  // Integer functionals on exponent-sum vectors that vanish on every relator,
  // i.e. a basis of Hom(G, Z) expressed on generators. Their values are
  // invariants of group elements.
  std::vector<std::vector<std::int64_t>>
  abelian_invariant_functionals(Presentation const& p);

}  // namespace dehnlab
