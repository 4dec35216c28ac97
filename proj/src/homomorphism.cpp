#include "dehnlab/homomorphism.hpp"

#include <algorithm>
#include <cstdlib>

#include "dehnlab/context.hpp"
#include "dehnlab/error.hpp"
#include "dehnlab/parse.hpp"

namespace dehnlab {

  bool AbelianVector::is_zero() const noexcept {
    return std::all_of(_v.begin(), _v.end(), [](auto x) { return x == 0; });
  }

  AbelianVector& AbelianVector::operator+=(AbelianVector const& other) {
    if (other._v.size() != _v.size()) {
      throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
    }
    for (std::size_t i = 0; i < _v.size(); ++i) {
      _v[i] += other._v[i];
    }
    return *this;
  }

  AbelianVector& AbelianVector::operator-=(AbelianVector const& other) {
    return *this += -other;
  }

  AbelianVector AbelianVector::operator-() const {
    AbelianVector out = *this;
    for (auto& x : out._v) {
      x = -x;
    }
    return out;
  }

  GroupHom::GroupHom(Presentation source, Presentation target,
                     std::vector<Word> images)
      : _source(std::move(source)),
        _target(std::move(target)),
        _images(std::move(images)) {
    if (_images.size() != _source.alphabet().size()) {
      throw Error(ErrorKind::AlphabetMismatch,
                  "one image per source generator required");
    }
    for (auto& w : _images) {
      if (!_target.alphabet().contains(w)) {
        throw Error(ErrorKind::AlphabetMismatch,
                    "image uses a generator outside the target alphabet");
      }
      w = free_reduce(w);
    }
  }

  Word apply_homomorphism(GroupHom const& h, Word const& w) {
    std::vector<Letter> out;
    for (Letter l : w) {
      Word const& img = h.image(l.generator());
      if (l.sign() > 0) {
        for (Letter x : img) {
          if (!out.empty() && out.back().is_inverse_of(x)) {
            out.pop_back();
          } else {
            out.push_back(x);
          }
        }
      } else {
        for (auto it = img.end(); it != img.begin();) {
          Letter x = (--it)->inverse();
          if (!out.empty() && out.back().is_inverse_of(x)) {
            out.pop_back();
          } else {
            out.push_back(x);
          }
        }
      }
    }
    return Word(std::move(out));
  }

  GroupHom verify_homomorphism(GroupHom const& h, GroupContext const& target) {
    for (auto const& r : h.source().relators()) {
      if (!target.is_trivial(apply_homomorphism(h, r))) {
        throw Error(ErrorKind::NotWellDefined,
                    "relator " + to_string(r, h.source().alphabet())
                        + " does not map to the identity");
      }
    }
    GroupHom out  = h;
    out._verified = true;
    return out;
  }

  GroupHom identity_homomorphism(Presentation const& p) {
    std::vector<Word> images;
    for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
      images.push_back(Word{Letter(i, 1)});
    }
    return GroupHom(p, p, std::move(images));
  }

  GroupHom compose(GroupHom const& outer, GroupHom const& inner) {
    if (!(outer.source().alphabet() == inner.target().alphabet())) {
      throw Error(ErrorKind::AlphabetMismatch,
                  "composition of homomorphisms with mismatched alphabets");
    }
    std::vector<Word> images;
    for (auto const& w : inner.images()) {
      images.push_back(apply_homomorphism(outer, w));
    }
    return GroupHom(inner.source(), outer.target(), std::move(images));
  }

  GroupHom negate(GroupHom const& h) {
    std::vector<Word> images;
    for (auto const& w : h.images()) {
      images.push_back(w.inverse());
    }
    return GroupHom(h.source(), h.target(), std::move(images));
  }

  AbelianVector abelianize(Word const& w, GroupHom const& to_free_abelian) {
    auto const& coords = to_free_abelian.target().abelian_coordinates();
    auto const  rank   = to_free_abelian.target().abelian_rank();
    // Image vector of each source generator, then sum along w.
    std::vector<AbelianVector> gen(to_free_abelian.images().size(),
                                   AbelianVector(rank));
    for (std::size_t g = 0; g < gen.size(); ++g) {
      std::vector<std::int64_t> v(rank, 0);
      for (Letter l : to_free_abelian.image(g)) {
        for (std::size_t k = 0; k < rank; ++k) {
          v[k] += l.sign() * coords[l.generator()][k];
        }
      }
      gen[g] = AbelianVector(std::move(v));
    }
    AbelianVector out(rank);
    for (Letter l : w) {
      if (l.sign() > 0) {
        out += gen.at(l.generator());
      } else {
        out -= gen.at(l.generator());
      }
    }
    return out;
  }

  bool surjective_onto_free_abelian(GroupHom const& h) {
    auto const  rank = h.target().abelian_rank();
    auto const& src  = h.source();
    // Columns are generator images; integer column operations reduce the
    // matrix to lower echelon form. Surjective iff every row gets a pivot of
    // absolute value 1.
    std::vector<std::vector<std::int64_t>> cols;
    for (std::size_t g = 0; g < src.alphabet().size(); ++g) {
      Word x = Word{Letter(g, 1)};
      cols.push_back(abelianize(x, h).values());
    }
    std::size_t next = 0;
    for (std::size_t row = 0; row < rank; ++row) {
      // Euclid on the entries of this row among the remaining columns.
      while (true) {
        std::size_t best = cols.size();
        for (std::size_t c = next; c < cols.size(); ++c) {
          if (cols[c][row] != 0
              && (best == cols.size()
                  || std::llabs(cols[c][row]) < std::llabs(cols[best][row]))) {
            best = c;
          }
        }
        if (best == cols.size()) {
          return false;
        }
        std::swap(cols[best], cols[next]);
        bool done = true;
        for (std::size_t c = next + 1; c < cols.size(); ++c) {
          if (cols[c][row] != 0) {
            std::int64_t q = cols[c][row] / cols[next][row];
            for (std::size_t k = 0; k < rank; ++k) {
              cols[c][k] -= q * cols[next][k];
            }
            if (cols[c][row] != 0) {
              done = false;
            }
          }
        }
        if (done) {
          break;
        }
      }
      if (std::llabs(cols[next][row]) != 1) {
        return false;
      }
      ++next;
    }
    return true;
  }

}  // namespace dehnlab
