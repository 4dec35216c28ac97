#pragma once

// Free-group word algebra.
//
// A Letter is a signed generator index packed into one integer so that
// inversion is a single xor and letters hash trivially. A Word is a plain
// sequence of letters; it is only reduced when a function says so.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dehnlab {

  class Letter {
   public:
    using code_type = std::uint16_t;

    static constexpr std::size_t max_generators = 1u << 15;

    constexpr Letter() noexcept = default;

    constexpr Letter(std::size_t generator, int sign) noexcept
        : _code(static_cast<code_type>(2 * generator + (sign > 0 ? 1 : 0))) {}

    static constexpr Letter from_code(code_type code) noexcept {
      Letter l;
      l._code = code;
      return l;
    }

    constexpr std::size_t generator() const noexcept {
      return _code >> 1;
    }
    constexpr int sign() const noexcept {
      return (_code & 1) ? 1 : -1;
    }
    constexpr code_type code() const noexcept {
      return _code;
    }
    constexpr Letter inverse() const noexcept {
      return from_code(_code ^ 1);
    }
    constexpr bool is_inverse_of(Letter other) const noexcept {
      return (_code ^ 1) == other._code;
    }

    // Orders by (generator, sign) with -1 before +1.
    friend constexpr auto operator<=>(Letter, Letter) = default;

   private:
    code_type _code = 1;
  };

  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    Word(std::span<Letter const> letters)
        : _letters(letters.begin(), letters.end()) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    Letter front() const {
      return _letters.front();
    }
    Letter back() const {
      return _letters.back();
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::vector<Letter> const& vector() const noexcept {
      return _letters;
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }
    void append(std::span<Letter const> other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
    }
    void reserve(std::size_t n) {
      _letters.reserve(n);
    }

    // Formal inverse: reversed and letterwise inverted.
    Word inverse() const;

    // Subword [pos, pos + len).
    Word subword(std::size_t pos, std::size_t len) const;

    // Rotation starting at position k (k < size, or 0 for the empty word).
    Word rotated(std::size_t k) const;

    // Concatenation in the free monoid; no cancellation.
    friend Word operator*(Word const& u, Word const& v);

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& u, Word const& v) {
      return u._letters <=> v._letters;
    }

   private:
    std::vector<Letter> _letters;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
    std::size_t operator()(std::span<Letter const> w) const noexcept;
  };

  // Names of generators. The name "e" is reserved for the empty word.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    Alphabet(std::initializer_list<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(std::size_t generator) const {
      return _names.at(generator);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // Index of a generator, or size() when the name is unknown.
    std::size_t index(std::string_view name) const;
    bool contains(Word const& w) const noexcept;

    Letter letter(std::string_view name, int sign = 1) const;

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a._names == b._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  // A cyclically reduced word stored as its lexicographically least rotation.
  class CyclicWord {
   public:
    CyclicWord() = default;

    // w must be freely and cyclically reduced.
    static CyclicWord from_cyclically_reduced(Word const& w);

    Word const& canonical_rotation() const noexcept {
      return _canonical;
    }
    std::size_t size() const noexcept {
      return _canonical.size();
    }
    bool empty() const noexcept {
      return _canonical.empty();
    }

    friend bool operator==(CyclicWord const&, CyclicWord const&) = default;
    friend std::strong_ordering operator<=>(CyclicWord const& u,
                                            CyclicWord const& v) {
      return u._canonical <=> v._canonical;
    }

   private:
    Word _canonical;
  };

  Word free_reduce(Word const& w);
  Word free_reduce(std::span<Letter const> w);
  bool is_freely_reduced(std::span<Letter const> w) noexcept;
  bool is_cyclically_reduced(std::span<Letter const> w) noexcept;

  // Index k such that rotating w by k gives the least rotation. Ties (for
  // periodic words) resolve to the smallest such k.
  std::size_t least_rotation_index(std::span<Letter const> w);

  struct CyclicReduction {
    CyclicWord core;
    // w is freely equal to conjugator * linear_core * conjugator^-1, where
    // linear_core is the rotation of core produced by peeling (before the
    // canonical rotation is applied).
    Word conjugator;
    Word linear_core;
  };

  CyclicReduction cyclic_reduce(Word const& w);

  // Default cap on any single exponent and on words produced by powering.
  inline constexpr std::int64_t default_exponent_cap = 1'000'000;

  Word power(Word const& w, std::int64_t n,
             std::int64_t cap = default_exponent_cap);

  // [x, y] = x y x^-1 y^-1, freely reduced.
  Word commutator(Word const& x, Word const& y);

  // free_reduce([x^m, y^m]).
  Word build_commutator_power(Word const& x, Word const& y, std::int64_t m,
                              std::int64_t cap = default_exponent_cap);

  // Exponent sum of each generator.
  std::vector<std::int64_t> exponent_sums(std::span<Letter const> w,
                                          std::size_t alphabet_size);

}  // namespace dehnlab

template <>
struct std::hash<dehnlab::Word> {
  std::size_t operator()(dehnlab::Word const& w) const noexcept {
    return dehnlab::WordHash{}(w);
  }
};
