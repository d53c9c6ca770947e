#pragma once

#include <cstddef>
#include <map>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "cockcroft/integer.hpp"
#include "cockcroft/word.hpp"

namespace cockcroft {

/// Noncommutative monomial X_{g1} X_{g2} ... as a sequence of generator indices.
using Monomial = std::vector<std::size_t>;

/// Orders monomials by degree, then lexicographically.
struct ShortLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Polynomial = std::map<Monomial, Integer, ShortLex>;

/// Integer noncommutative power series truncated above a degree bound.
/// Zero coefficients are never stored.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t degree_bound);

  static TruncatedSeries one(std::size_t degree_bound);
  /// (1 + X_gen)^exp, expanded by generalized binomial coefficients.
  static TruncatedSeries generator_power(std::size_t degree_bound, std::size_t gen, const Integer& exp);

  std::size_t degree_bound() const { return degree_bound_; }
  const Polynomial& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;

  /// Adds c to the coefficient of m; terms above the bound are dropped.
  void add_term(const Monomial& m, const Integer& c);

  /// Homogeneous component of the given degree.
  Polynomial component(std::size_t degree) const;

  /// Smallest degree >= 1 carrying a nonzero coefficient, 0 if there is none.
  std::size_t min_positive_degree() const;

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::size_t degree_bound_;
  Polynomial terms_;
};

/// Magnus embedding g -> 1 + X_g truncated at degree `degree_bound`.
TruncatedSeries magnus_expand(const Word& w, std::size_t degree_bound);

struct IdentityWeight {
  bool operator==(const IdentityWeight&) const = default;
};
struct Weight {
  std::size_t n;
  bool operator==(const Weight&) const = default;
};
struct ExceedsBound {
  std::size_t bound;
  bool operator==(const ExceedsBound&) const = default;
};

/// Lower central series weight: the n with w in F_n but not F_{n+1}.
using WeightResult = std::variant<IdentityWeight, Weight, ExceedsBound>;

class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

WeightResult lcs_weight(const Word& w, std::size_t max_degree, std::stop_token stop = {});

std::string describe(const WeightResult& weight);

/// Renders "2*xy - yx" style term lists; monomial letters use alphabet names.
std::string render_monomial(const Monomial& m, const Alphabet& alphabet);

}  // namespace cockcroft
