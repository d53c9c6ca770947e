#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cockcroft/intlin.hpp"
#include "cockcroft/magnus.hpp"
#include "cockcroft/word.hpp"

namespace cockcroft {

/// All Lyndon words of length `degree` over letters 0..rank-1, in lexicographic order.
std::vector<Monomial> lyndon_words(std::size_t rank, std::size_t degree);

/// Witt necklace count: number of Lyndon words of the given length.
Integer witt_number(std::size_t rank, std::size_t degree);

/// Bracketed Lie monomial attached to a Lyndon word by its standard
/// factorization w = uv with v the longest proper Lyndon suffix.
struct LieBracket {
  Monomial word;
  std::string render(const Alphabet& alphabet) const;
  /// Expansion of the bracket as an associative polynomial, [a,b] = ab - ba.
  Polynomial expand() const;
};

LieBracket standard_bracketing(const Monomial& lyndon_word);

/// Element of the degree-n free Lie ring in Lyndon coordinates; represents a
/// class in F_n/F_{n+1}. Zero coordinates are omitted.
class LieVector {
 public:
  LieVector(std::size_t degree, std::size_t rank) : degree_(degree), rank_(rank) {}

  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  const std::map<Monomial, Integer>& coords() const { return coords_; }
  Integer coordinate(const Monomial& lyndon_word) const;
  void set(const Monomial& lyndon_word, const Integer& value);

  bool is_zero() const { return coords_.empty(); }
  LieVector scaled(const Integer& factor) const;

  /// Dense coordinates in lyndon_words(rank, degree) order.
  std::vector<Integer> dense() const;

  /// "c*[x,[y,z]] + ..." rendering; "0" for the zero vector.
  std::string render(const Alphabet& alphabet) const;

  bool operator==(const LieVector&) const = default;

 private:
  std::size_t degree_;
  std::size_t rank_;
  std::map<Monomial, Integer> coords_;
};

/// Lyndon basis of a fixed degree with the expansions needed to extract
/// coordinates from a homogeneous Lie polynomial.
class LyndonBasis {
 public:
  LyndonBasis(std::size_t rank, std::size_t degree);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Monomial>& words() const { return words_; }
  const Polynomial& expansion(std::size_t i) const { return expansions_.at(i); }

  /// Solves the unitriangular system expressing a homogeneous Lie polynomial
  /// in bracketed Lyndon words. Throws std::domain_error when the input is
  /// not a Lie element.
  LieVector coordinates(const Polynomial& homogeneous) const;

 private:
  std::size_t rank_;
  std::size_t degree_;
  std::vector<Monomial> words_;
  std::vector<Polynomial> expansions_;
};

/// Raised when a class is requested below the word's weight.
class WeightBelowDegree : public std::invalid_argument {
 public:
  WeightBelowDegree(std::size_t weight, std::size_t degree);
  std::size_t weight() const { return weight_; }

 private:
  std::size_t weight_;
};

/// Class of w in F_n/F_{n+1}; zero iff w lies in F_{n+1}.
LieVector leading_lie_class(const Word& w, std::size_t degree);
LieVector leading_lie_class(const Word& w, const LyndonBasis& basis);

/// A relator whose weight is below the requested degree.
class RelatorWeightError : public WeightBelowDegree {
 public:
  RelatorWeightError(std::size_t relator_index, std::size_t weight, std::size_t degree);
  std::size_t relator_index() const { return index_; }

 private:
  std::size_t index_;
};

/// One row per relator: its class in F_n/F_{n+1} over lyndon_words(rank, n).
IntMatrix relator_class_matrix(const std::vector<Word>& relators, std::size_t rank, std::size_t degree);

}  // namespace cockcroft
