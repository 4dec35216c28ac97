#pragma once

// Text syntax for words:
//
//   word  := term { term } ;
//   term  := atom [ "^" int ] ;
//   atom  := ident | "(" word ")" | "[" word "," word "]" | "e" ;
//   ident := letter { letter | digit } ;   int := ["-"] digit { digit } ;
//
// "e" is the empty word and "[x,y]" means x y x^-1 y^-1.

#include <cstdint>
#include <string>
#include <string_view>

#include "dehnlab/word.hpp"

namespace dehnlab {

  struct ParseOptions {
    std::int64_t exponent_cap = default_exponent_cap;
  };

  // Returns the freely reduced word denoted by text.
  Word parse_word(std::string_view text, Alphabet const& alphabet,
                  ParseOptions const& options = {});

  // Prints w in the grammar above, collapsing runs into powers. The empty
  // word prints as "e".
  std::string to_string(Word const& w, Alphabet const& alphabet);

}  // namespace dehnlab
