#pragma once

#include <cstdint>
#include <vector>

#include "dehnlab/presentation.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

  class GroupContext;

  // Element of Z^n.
  class AbelianVector {
   public:
    AbelianVector() = default;
    explicit AbelianVector(std::size_t dimension) : _v(dimension, 0) {}
    explicit AbelianVector(std::vector<std::int64_t> v) : _v(std::move(v)) {}

    std::size_t dimension() const noexcept {
      return _v.size();
    }
    std::int64_t operator[](std::size_t i) const {
      return _v.at(i);
    }
    std::vector<std::int64_t> const& values() const noexcept {
      return _v;
    }
    bool is_zero() const noexcept;

    AbelianVector& operator+=(AbelianVector const& other);
    AbelianVector& operator-=(AbelianVector const& other);
    friend AbelianVector operator+(AbelianVector a, AbelianVector const& b) {
      return a += b;
    }
    friend AbelianVector operator-(AbelianVector a, AbelianVector const& b) {
      return a -= b;
    }
    AbelianVector operator-() const;

    friend bool operator==(AbelianVector const&, AbelianVector const&) = default;

   private:
    std::vector<std::int64_t> _v;
  };

  // A generator-to-word map between presentations. `verified` is set only by
  // verify_homomorphism.
  class GroupHom {
   public:
    GroupHom() = default;
    // Throws AlphabetMismatch if the image count or image letters do not fit.
    GroupHom(Presentation source, Presentation target, std::vector<Word> images);

    Presentation const& source() const noexcept {
      return _source;
    }
    Presentation const& target() const noexcept {
      return _target;
    }
    std::vector<Word> const& images() const noexcept {
      return _images;
    }
    Word const& image(std::size_t generator) const {
      return _images.at(generator);
    }
    bool verified() const noexcept {
      return _verified;
    }

    friend GroupHom verify_homomorphism(GroupHom const&, GroupContext const&);

   private:
    Presentation      _source;
    Presentation      _target;
    std::vector<Word> _images;
    bool              _verified = false;
  };

  // Substitutes images letterwise and freely reduces.
  Word apply_homomorphism(GroupHom const& h, Word const& w);

  // Checks that every source relator maps to a trivial word of the target;
  // throws NotWellDefined naming the first failing relator.
  GroupHom verify_homomorphism(GroupHom const& h, GroupContext const& target);

  GroupHom identity_homomorphism(Presentation const& p);

  // outer o inner. Unverified; verify separately.
  GroupHom compose(GroupHom const& outer, GroupHom const& inner);

  // x -> image(x)^-1. For a free abelian target this is -h.
  GroupHom negate(GroupHom const& h);

  // Exponent-sum image of w under a homomorphism to a free abelian group.
  AbelianVector abelianize(Word const& w, GroupHom const& to_free_abelian);

  // Whether the images of the generators span Z^rank over the integers.
  bool surjective_onto_free_abelian(GroupHom const& h);

}  // namespace dehnlab
