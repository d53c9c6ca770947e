#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cockcroft/integer.hpp"

namespace cockcroft {

/// Ordered list of generator names. The position of a name is the generator
/// index used by every other module.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t rank() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Splits "x,y,z" (commas and/or whitespace) into an alphabet.
AlphabetPtr parse_alphabet(std::string_view list);

struct Syllable {
  std::size_t gen = 0;
  Integer exp;

  bool operator==(const Syllable&) const = default;
};

class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch() : std::invalid_argument("words are over different alphabets") {}
};

/// Freely reduced element of the free group on an alphabet, stored as
/// syllables g^e with adjacent generators distinct and e != 0.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);

  static Word generator(AlphabetPtr alphabet, std::size_t gen, Integer exp = 1);
  /// Freely reduces the given syllable sequence.
  static Word from_syllables(AlphabetPtr alphabet, std::span<const Syllable> syllables);
  /// Letters are signed generator numbers: +(g+1) for g, -(g+1) for g^-1.
  static Word from_letters(AlphabetPtr alphabet, std::span<const int> letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Syllable> syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  /// Number of letters, i.e. the sum of |exponent| over syllables.
  Integer letter_length() const;
  /// Letter sequence; throws std::length_error above `limit` letters.
  std::vector<int> letters(std::size_t limit = 1u << 24) const;

  /// Renders in the word grammar, e.g. "x^2 y x^-1"; the identity is "1".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Syllable> syllables_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, const Integer& e);
/// [u,v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);
/// g u g^-1.
Word conjugate(const Word& u, const Word& by);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// u = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& u);

struct Root {
  Word q;
  Integer e;
};

/// u = q^e with e maximal. Throws std::invalid_argument on the identity.
Root root_decompose(const Word& u);

Integer exponent_sum(const Word& u, std::size_t gen);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the word grammar:
///   word   := factor { factor }
///   factor := atom [ '^' int ]
///   atom   := ident | '(' word ')' | '[' word ',' word ']' | '1'
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

}  // namespace cockcroft
