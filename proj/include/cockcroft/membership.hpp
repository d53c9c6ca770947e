#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "cockcroft/integer.hpp"
#include "cockcroft/word.hpp"

namespace cockcroft {

struct WitnessFactor {
  Word conjugator;
  std::size_t relator = 0;
  int exponent = 1;  // +1 or -1
};

/// mu = prod_i g_i r_i^(e_i) g_i^-1, certifying membership in the normal closure.
struct Witness {
  std::vector<WitnessFactor> factors;
};

/// Product of the conjugated relator powers, freely reduced.
Word witness_product(const Witness& w, const std::vector<Word>& relators, const AlphabetPtr& alphabet);

/// True iff the witness multiplies out to mu. Throws std::out_of_range on a bad
/// relator index and std::invalid_argument on an exponent other than +-1.
bool check_witness(const Word& mu, const Witness& w, const std::vector<Word>& relators);

/// Signed count of each relator's occurrences, one entry per relator index.
std::map<std::size_t, Integer> exponent_balance(const Witness& w, const std::vector<Word>& relators);

/// One search step: a cyclic permutation of relator^(+-1), rotated left by
/// `shift` letters, inserted before letter `position` of the current word.
struct Insertion {
  std::size_t position = 0;
  std::size_t relator = 0;
  std::size_t shift = 0;
  bool inverse = false;
};

struct SearchBounds {
  std::optional<std::size_t> max_length;  // default 2|mu| + longest relator
  std::optional<std::size_t> max_steps;   // default 1'000'000 states
};

struct SearchStats {
  std::size_t states = 0;
  std::size_t max_length = 0;
  std::size_t max_steps = 0;
};

struct Verified {
  Witness witness;
};

struct SearchProved {
  std::vector<Insertion> trace;
  SearchStats stats;
};

struct Unknown {
  std::string reason;
  SearchStats stats;
};

using MembershipEvidence = std::variant<Verified, SearchProved, Unknown>;

/// Applies a trace to mu and returns the final word.
Word replay_trace(const Word& mu, const std::vector<Insertion>& trace, const std::vector<Word>& relators);

/// Converts a trace that reduces mu to the identity into a witness for mu.
Witness trace_to_witness(const Word& mu, const std::vector<Insertion>& trace,
                         const std::vector<Word>& relators);

/// True iff the evidence soundly establishes mu in the normal closure of relators.
bool evidence_valid(const Word& mu, const MembershipEvidence& evidence, const std::vector<Word>& relators);

/// Bounded semi-decision for membership of mu in the normal closure of the
/// relators. Never reports membership falsely; Unknown claims nothing.
MembershipEvidence search_membership(const Word& mu, const std::vector<Word>& relators,
                                     const SearchBounds& bounds = {}, std::stop_token stop = {});

}  // namespace cockcroft
