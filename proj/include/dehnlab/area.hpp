#pragma once

// Van Kampen area: exact search with certificates, the greedy Dehn upper
// bound, the lattice-area oracle for Z^2, and area-radius bookkeeping.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dehnlab/context.hpp"
#include "dehnlab/presentation.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

  // One factor u r^sign u^-1, r = presentation.relators()[relator].
  struct AreaFactor {
    Word        conjugator;
    std::size_t relator = 0;
    int         sign    = 1;

    friend bool operator==(AreaFactor const&, AreaFactor const&) = default;
  };

  struct AreaCertificate {
    Word                    word;
    std::size_t             area   = 0;
    std::size_t             radius = 0;
    std::vector<AreaFactor> factors;

    friend bool operator==(AreaCertificate const&,
                           AreaCertificate const&) = default;
  };

  struct SearchBudget {
    std::int64_t max_cost         = 64;
    std::size_t  max_state_length = 16;
    std::size_t  max_states       = 5'000'000;

    // max_state_length = 2 l(w) + 16, other fields at their defaults.
    static SearchBudget defaults_for(Word const& w);
  };

  struct Inconclusive {
    std::string reason;
    std::size_t states = 0;
  };

  struct NotNullHomotopic {
    std::string reason;
  };

  using AreaOutcome = std::variant<AreaCertificate, Inconclusive, NotNullHomotopic>;

  // Exact area by uniform-cost search over cyclic words. A returned
  // certificate has minimum area. Throws InvalidArgument for product contexts.
  AreaOutcome area_search(GroupContext const& ctx, Word const& w,
                          SearchBudget const& budget);

  bool validate_certificate(AreaCertificate const& c, Presentation const& p);

  // Signed area enclosed by the lattice path of w, generator 0 stepping in x
  // and generator 1 in y. Throws NotClosed if the path does not close and
  // InvalidArgument if w uses another generator.
  std::int64_t signed_lattice_area(Word const& w);

  // Twice the signed area of the path whose steps are the given coordinate
  // vectors (one 2-vector per generator). Throws NotClosed.
  std::int64_t
  twice_signed_area(std::span<Letter const>                       w,
                    std::vector<std::vector<std::int64_t>> const& coords);

  // One factor per Dehn replacement; throws NotTrivial if reduction stalls.
  AreaCertificate dehn_greedy_area_upper(GroupContext const& ctx,
                                         Word const&         w);

  struct AreaRadiusWitness {
    std::size_t area;
    std::size_t radius;
    std::size_t bound;  // C * area + l(word), C = max relator length
    bool        holds;
  };

  // Throws InvalidCertificate if c does not validate against p.
  AreaRadiusWitness area_radius_witness(AreaCertificate const& c,
                                        Presentation const&    p);

  // Polynomial degrees of an area-radius pair.
  class AreaRadiusPair {
   public:
    // Throws InvalidArgument unless both exponents are at least 1.
    AreaRadiusPair(Rational alpha_exponent, Rational rho_exponent);

    static AreaRadiusPair hyperbolic() {
      return AreaRadiusPair(Rational(1), Rational(1));
    }

    Rational alpha_exponent() const noexcept {
      return _alpha;
    }
    Rational rho_exponent() const noexcept {
      return _rho;
    }

   private:
    Rational _alpha;
    Rational _rho;
  };

  // Exponent of rho^(2m) alpha for a coabelian subgroup of rank m in a
  // product of r factors. Throws TooFewFactors if r < 3 and
  // FactorCountMismatch if the pair count differs from r.
  Rational isoperimetric_exponent_bound(std::vector<AreaRadiusPair> const& pairs,
                                        std::size_t rank_m, std::size_t r);

  void write_certificate(std::ostream& out, AreaCertificate const& c,
                         Alphabet const& alphabet);
  // Throws SyntaxError on malformed input.
  AreaCertificate read_certificate(std::istream& in, Alphabet const& alphabet);

}  // namespace dehnlab
