#include "dehnlab/parse.hpp"

#include <cctype>
#include <limits>

#include "dehnlab/error.hpp"

namespace dehnlab {

  namespace {

    class Parser {
     public:
      Parser(std::string_view text, Alphabet const& alphabet,
             ParseOptions const& options)
          : _text(text), _alphabet(alphabet), _options(options) {}

      Word parse() {
        skip_space();
        if (_pos == _text.size()) {
          throw Error(ErrorKind::SyntaxError, "empty expression", _pos);
        }
        Word w = word();
        skip_space();
        if (_pos != _text.size()) {
          throw Error(ErrorKind::SyntaxError,
                      "unexpected '" + std::string(1, _text[_pos]) + "'",
                      _pos);
        }
        return w;
      }

     private:
      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool at_atom_start() {
        skip_space();
        if (_pos == _text.size()) {
          return false;
        }
        char c = _text[_pos];
        return c == '(' || c == '['
               || std::isalpha(static_cast<unsigned char>(c));
      }

      Word word() {
        Word w;
        if (!at_atom_start()) {
          throw Error(ErrorKind::SyntaxError, "expected a term", _pos);
        }
        while (at_atom_start()) {
          w = free_reduce(w * term());
        }
        return w;
      }

      Word term() {
        Word a = atom();
        skip_space();
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          skip_space();
          std::size_t  start = _pos;
          std::int64_t n     = integer();
          if (n > _options.exponent_cap || n < -_options.exponent_cap) {
            throw Error(ErrorKind::ExponentOverflow,
                        "exponent exceeds cap "
                            + std::to_string(_options.exponent_cap),
                        start);
          }
          return power(a, n, _options.exponent_cap);
        }
        return a;
      }

      std::int64_t integer() {
        bool negative = false;
        if (_pos < _text.size() && _text[_pos] == '-') {
          negative = true;
          ++_pos;
        }
        std::size_t start = _pos;
        // Accumulate with saturation; anything this large overflows the cap.
        std::int64_t value = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          if (value < std::numeric_limits<std::int64_t>::max() / 20) {
            value = value * 10 + (_text[_pos] - '0');
          }
          ++_pos;
        }
        if (_pos == start) {
          throw Error(ErrorKind::SyntaxError, "expected an integer", _pos);
        }
        return negative ? -value : value;
      }

      Word atom() {
        skip_space();
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          Word w = word();
          expect(')');
          return w;
        }
        if (c == '[') {
          ++_pos;
          Word x = word();
          expect(',');
          Word y = word();
          expect(']');
          return commutator(x, y);
        }
        std::size_t start = _pos;
        while (_pos < _text.size()
               && std::isalnum(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        std::string_view name = _text.substr(start, _pos - start);
        if (name == "e") {
          return Word();
        }
        std::size_t g = _alphabet.index(name);
        if (g == _alphabet.size()) {
          throw Error(ErrorKind::UnknownGenerator,
                      "\"" + std::string(name) + "\"", start);
        }
        return Word{Letter(g, 1)};
      }

      void expect(char c) {
        skip_space();
        if (_pos == _text.size() || _text[_pos] != c) {
          throw Error(ErrorKind::SyntaxError,
                      std::string("expected '") + c + "'", _pos);
        }
        ++_pos;
      }

      std::string_view    _text;
      Alphabet const&     _alphabet;
      ParseOptions const& _options;
      std::size_t         _pos = 0;
    };

  }  // namespace

  Word parse_word(std::string_view text, Alphabet const& alphabet,
                  ParseOptions const& options) {
    return Parser(text, alphabet, options).parse();
  }

  std::string to_string(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += alphabet.name(w[i].generator());
      long run = static_cast<long>(j - i) * w[i].sign();
      if (run != 1) {
        out += '^';
        out += std::to_string(run);
      }
      i = j;
    }
    return out;
  }

}  // namespace dehnlab
