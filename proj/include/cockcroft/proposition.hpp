#pragma once

#include <cstddef>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "cockcroft/intlin.hpp"
#include "cockcroft/lyndon.hpp"
#include "cockcroft/magnus.hpp"
#include "cockcroft/membership.hpp"
#include "cockcroft/presentation.hpp"

namespace cockcroft {

inline constexpr std::size_t kDefaultMaxDegree = 8;

struct Conclusions {
  bool intersection_in_commutators = false;  // R ∩ S ⊆ [R,F] ∩ [S,F]
  bool intersection_in_next_term = false;    // R ∩ S ⊆ F_{n+1}
  bool model_cockcroft = false;
};

/// Verified hypotheses of the criterion for (x : r, s): every relator has the
/// same lower central weight n and their classes in F_n/F_{n+1} are linearly
/// independent.
struct CockcroftCertificate {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> relator_weights;
  std::vector<Monomial> basis;  // Lyndon words indexing the class matrix columns
  IntMatrix class_matrix;
  bool independent = false;
  Conclusions conclusions;
};

struct UnequalWeights {
  std::vector<std::size_t> weights;
};
struct Dependent {
  std::vector<Integer> dependency;  // nonzero lambda with lambda * class_matrix = 0
  IntMatrix class_matrix;
  std::size_t n = 0;
};
struct WeightExceedsBound {
  std::size_t relator = 0;
  std::size_t bound = 0;
};

using PropositionFailure = std::variant<UnequalWeights, Dependent, WeightExceedsBound>;
using PropositionResult = std::variant<CockcroftCertificate, PropositionFailure>;

std::string failure_kind(const PropositionFailure& f);

/// Checks both hypotheses; requires a presentation with a partition.
PropositionResult proposition_check(const Presentation& p, std::size_t max_degree = kDefaultMaxDegree,
                                    std::stop_token stop = {});

/// Image under e_m of an element of R ∩ S, computed in F_m/F_{m+1}.
struct ENImage {
  std::size_t target_degree = 0;
  LieVector vector{0, 0};
  /// F_m/[R,S]F_{m+1} = F_m/F_{m+1} is guaranteed (2n >= m + 1).
  bool target_exact = false;
};

class DetectionError : public std::invalid_argument {
 public:
  enum class Kind {
    DegreeNotAboveCertificate,
    WeightBelowDegree,
    IdentityInput,
    MissingEvidence,
    InvalidEvidence,
    WeightContradiction,
    WeightExceedsBound,
  };
  DetectionError(Kind kind, const std::string& message) : std::invalid_argument(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string kind_name(DetectionError::Kind kind);

/// Caller asserts mu ∈ R ∩ S. Requires m > cert.n and mu ∈ F_m.
ENImage e_class(const Word& mu, std::size_t m, const CockcroftCertificate& cert);

struct H3Detection {
  std::size_t weight = 0;
  ENImage image;
  bool detected = false;
};

/// Validates membership evidence for mu in R and in S, then evaluates e_m at
/// m = weight(mu). Detection means a nonzero image in an exact target.
H3Detection detect_h3(const Word& mu, const Presentation& p, const CockcroftCertificate& cert,
                      const MembershipEvidence& in_r, const MembershipEvidence& in_s,
                      std::size_t max_degree = kDefaultMaxDegree);

}  // namespace cockcroft
