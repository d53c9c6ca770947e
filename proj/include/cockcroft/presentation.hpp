#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cockcroft/intlin.hpp"
#include "cockcroft/word.hpp"

namespace cockcroft {

/// Split of relator indices into the r-part and the s-part.
struct Partition {
  std::vector<std::size_t> r;
  std::vector<std::size_t> s;
};

/// Finite presentation (x : u) with an optional split u = r ∪ s.
class Presentation {
 public:
  Presentation(AlphabetPtr alphabet, std::vector<Word> relators,
               std::optional<Partition> partition = std::nullopt);

  /// Builds (x : r, s) with the r relators first.
  static Presentation split(AlphabetPtr alphabet, std::vector<Word> r, std::vector<Word> s);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::optional<Partition>& partition() const { return partition_; }

  std::vector<Word> r_relators() const;
  std::vector<Word> s_relators() const;

  /// Text form accepted by parse_presentation.
  std::string to_text() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
  std::optional<Partition> partition_;
};

/// Parses lines "gens: x y z", "r: <word>", "s: <word>"; '#' lines are comments.
/// A document with only r-lines has no partition.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

/// Entry (i, j) is the exponent sum of generator j in relator i.
IntMatrix exponent_matrix(const Presentation& p);

struct HomologyReport {
  std::size_t h1_free_rank = 0;
  std::vector<Integer> h1_torsion;  // invariant factors >= 2
  std::size_t h2_free_rank = 0;
};

/// Cellular H_1 and H_2 of the model two-complex.
HomologyReport complex_homology(const Presentation& p);

std::string describe_h1(const HomologyReport& h);

struct CockcroftCertificate;

struct EfficiencyReport {
  long generators_minus_relators = 0;
  long h1_rank_minus_h2_generators = 0;
  std::size_t h1_free_rank = 0;
  std::size_t h2_generators = 0;
  bool efficient = false;
};

/// Deficiency against rank H_1 - d(H_2 G), where H_2 G is identified with
/// H_2 K through the Cockcroft certificate.
EfficiencyReport efficiency_report(const Presentation& p, const CockcroftCertificate* cert);

}  // namespace cockcroft
