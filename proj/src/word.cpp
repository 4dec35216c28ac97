#include "dehnlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "dehnlab/error.hpp"

namespace dehnlab {

  Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(_letters.begin() + pos,
                                    _letters.begin() + pos + len));
  }

  Word Word::rotated(std::size_t k) const {
    if (_letters.empty()) {
      return *this;
    }
    k %= _letters.size();
    std::vector<Letter> out;
    out.reserve(_letters.size());
    out.insert(out.end(), _letters.begin() + k, _letters.end());
    out.insert(out.end(), _letters.begin(), _letters.begin() + k);
    return Word(std::move(out));
  }

  Word operator*(Word const& u, Word const& v) {
    std::vector<Letter> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u._letters.begin(), u._letters.end());
    out.insert(out.end(), v._letters.begin(), v._letters.end());
    return Word(std::move(out));
  }

  std::size_t WordHash::operator()(std::span<Letter const> w) const noexcept {
    // FNV-1a over the letter codes followed by a final avalanche.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w) {
      h ^= l.code();
      h *= 0x100000001b3ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    return (*this)(w.letters());
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool valid_identifier(std::string const& s) {
      if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c));
      });
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    if (_names.size() > Letter::max_generators) {
      throw Error(ErrorKind::InvalidArgument, "too many generators");
    }
    for (std::size_t i = 0; i < _names.size(); ++i) {
      auto const& n = _names[i];
      if (!valid_identifier(n) || n == "e") {
        throw Error(ErrorKind::InvalidArgument,
                    "invalid generator name \"" + n + "\"");
      }
      if (!_index.emplace(n, i).second) {
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate generator name \"" + n + "\"");
      }
    }
  }

  Alphabet::Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t Alphabet::index(std::string_view name) const {
    auto it = _index.find(std::string(name));
    return it == _index.end() ? _names.size() : it->second;
  }

  bool Alphabet::contains(Word const& w) const noexcept {
    return std::all_of(w.begin(), w.end(), [this](Letter l) {
      return l.generator() < _names.size();
    });
  }

  Letter Alphabet::letter(std::string_view name, int sign) const {
    auto i = index(name);
    if (i == _names.size()) {
      throw Error(ErrorKind::UnknownGenerator, std::string(name));
    }
    return Letter(i, sign);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(std::span<Letter const> w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w) {
      if (!out.empty() && out.back().is_inverse_of(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  Word free_reduce(Word const& w) {
    return free_reduce(w.letters());
  }

  bool is_freely_reduced(std::span<Letter const> w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i - 1].is_inverse_of(w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(std::span<Letter const> w) noexcept {
    return is_freely_reduced(w)
           && (w.size() < 2 || !w.front().is_inverse_of(w.back()));
  }

  std::size_t least_rotation_index(std::span<Letter const> w) {
    // Booth's algorithm.
    std::size_t const n = w.size();
    if (n == 0) {
      return 0;
    }
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t                 k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
      Letter const   sj = w[j % n];
      std::ptrdiff_t i  = fail[j - k - 1];
      while (i != -1 && sj != w[(k + i + 1) % n]) {
        if (sj < w[(k + i + 1) % n]) {
          k = j - i - 1;
        }
        i = fail[i];
      }
      if (sj != w[(k + i + 1) % n]) {  // i == -1
        if (sj < w[k % n]) {
          k = j;
        }
        fail[j - k] = -1;
      } else {
        fail[j - k] = i + 1;
      }
    }
    return k % n;
  }

  CyclicWord CyclicWord::from_cyclically_reduced(Word const& w) {
    CyclicWord c;
    c._canonical = w.rotated(least_rotation_index(w.letters()));
    return c;
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    Word        r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i].is_inverse_of(r[j - 1])) {
      ++i;
      --j;
    }
    CyclicReduction out;
    out.conjugator  = r.subword(0, i);
    out.linear_core = r.subword(i, j - i);
    out.core        = CyclicWord::from_cyclically_reduced(out.linear_core);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  Word power(Word const& w, std::int64_t n, std::int64_t cap) {
    if (n > cap || n < -cap) {
      throw Error(ErrorKind::ExponentOverflow,
                  "exponent " + std::to_string(n) + " exceeds cap "
                      + std::to_string(cap));
    }
    if (n == 0) {
      return Word();
    }
    Word base = n < 0 ? w.inverse() : w;
    auto k    = static_cast<std::uint64_t>(n < 0 ? -n : n);
    if (!base.empty() && k > static_cast<std::uint64_t>(cap) * 16 / base.size()) {
      throw Error(ErrorKind::ExponentOverflow,
                  "power would exceed " + std::to_string(cap * 16)
                      + " letters");
    }
    // Only the cyclically reduced core needs repeating.
    auto                c = cyclic_reduce(base);
    std::vector<Letter> out;
    out.reserve(2 * c.conjugator.size() + k * c.linear_core.size());
    out.insert(out.end(), c.conjugator.begin(), c.conjugator.end());
    for (std::uint64_t i = 0; i < k; ++i) {
      out.insert(out.end(), c.linear_core.begin(), c.linear_core.end());
    }
    Word inv = c.conjugator.inverse();
    out.insert(out.end(), inv.begin(), inv.end());
    return Word(std::move(out));
  }

  Word commutator(Word const& x, Word const& y) {
    return free_reduce(x * y * x.inverse() * y.inverse());
  }

  Word build_commutator_power(Word const& x, Word const& y, std::int64_t m,
                              std::int64_t cap) {
    return commutator(power(x, m, cap), power(y, m, cap));
  }

  std::vector<std::int64_t> exponent_sums(std::span<Letter const> w,
                                          std::size_t alphabet_size) {
    std::vector<std::int64_t> out(alphabet_size, 0);
    for (Letter l : w) {
      out.at(l.generator()) += l.sign();
    }
    return out;
  }

}  // namespace dehnlab
