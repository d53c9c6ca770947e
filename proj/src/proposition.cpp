#include "cockcroft/proposition.hpp"

namespace cockcroft {

std::string failure_kind(const PropositionFailure& f) {
  if (std::holds_alternative<UnequalWeights>(f)) return "unequal_weights";
  if (std::holds_alternative<Dependent>(f)) return "dependent";
  return "weight_exceeds_bound";
}

std::string kind_name(DetectionError::Kind kind) {
  switch (kind) {
    case DetectionError::Kind::DegreeNotAboveCertificate: return "degree_not_above_certificate";
    case DetectionError::Kind::WeightBelowDegree: return "weight_below_degree";
    case DetectionError::Kind::IdentityInput: return "identity_input";
    case DetectionError::Kind::MissingEvidence: return "missing_evidence";
    case DetectionError::Kind::InvalidEvidence: return "invalid_evidence";
    case DetectionError::Kind::WeightContradiction: return "weight_contradiction";
    case DetectionError::Kind::WeightExceedsBound: return "weight_exceeds_bound";
  }
  return "unknown";
}

PropositionResult proposition_check(const Presentation& p, std::size_t max_degree, std::stop_token stop) {
  if (!p.partition()) throw std::invalid_argument("proposition_check needs relators split into r and s");
  std::vector<std::size_t> weights;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    auto w = lcs_weight(p.relators()[i], max_degree, stop);
    if (std::holds_alternative<ExceedsBound>(w)) return PropositionFailure{WeightExceedsBound{i, max_degree}};
    // Presentation relators are never the identity.
    weights.push_back(std::get<Weight>(w).n);
  }
  const std::size_t n = weights.front();
  for (auto w : weights) {
    if (w != n) return PropositionFailure{UnequalWeights{weights}};
  }
  if (stop.stop_requested()) throw Cancelled();
  const auto rank_k = p.alphabet()->rank();
  IntMatrix classes = relator_class_matrix(p.relators(), rank_k, n);
  if (auto dep = row_dependency(classes)) return PropositionFailure{Dependent{*dep, classes, n}};

  CockcroftCertificate cert;
  cert.n = n;
  cert.rank = rank_k;
  cert.relator_weights = std::move(weights);
  cert.basis = lyndon_words(rank_k, n);
  cert.class_matrix = std::move(classes);
  cert.independent = true;
  cert.conclusions = {true, true, true};
  return cert;
}

ENImage e_class(const Word& mu, std::size_t m, const CockcroftCertificate& cert) {
  if (m <= cert.n) {
    throw DetectionError(DetectionError::Kind::DegreeNotAboveCertificate,
                         "target degree " + std::to_string(m) + " must exceed certificate degree " +
                             std::to_string(cert.n));
  }
  if (mu.alphabet()->rank() != cert.rank) throw AlphabetMismatch();
  ENImage image{m, LieVector(m, cert.rank), 2 * cert.n >= m + 1};
  try {
    image.vector = leading_lie_class(mu, m);
  } catch (const WeightBelowDegree& e) {
    throw DetectionError(DetectionError::Kind::WeightBelowDegree, e.what());
  }
  return image;
}

H3Detection detect_h3(const Word& mu, const Presentation& p, const CockcroftCertificate& cert,
                      const MembershipEvidence& in_r, const MembershipEvidence& in_s,
                      std::size_t max_degree) {
  using Kind = DetectionError::Kind;
  if (mu.is_identity()) throw DetectionError(Kind::IdentityInput, "the identity carries no detection");
  const std::pair<const MembershipEvidence*, std::vector<Word>> parts[] = {
      {&in_r, p.r_relators()}, {&in_s, p.s_relators()}};
  const char* names[] = {"R", "S"};
  for (std::size_t i = 0; i < 2; ++i) {
    if (std::holds_alternative<Unknown>(*parts[i].first)) {
      throw DetectionError(Kind::MissingEvidence, std::string("no evidence that the word lies in ") + names[i]);
    }
    if (!evidence_valid(mu, *parts[i].first, parts[i].second)) {
      throw DetectionError(Kind::InvalidEvidence, std::string("evidence for ") + names[i] + " does not check");
    }
  }
  auto w = lcs_weight(mu, max_degree);
  if (std::holds_alternative<ExceedsBound>(w)) {
    throw DetectionError(Kind::WeightExceedsBound, "weight exceeds degree bound " + std::to_string(max_degree));
  }
  const std::size_t weight = std::get<Weight>(w).n;
  if (weight < cert.n + 1) {
    throw DetectionError(Kind::WeightContradiction,
                         "element of R ∩ S has weight " + std::to_string(weight) +
                             " <= certificate degree; the certificate is inconsistent");
  }
  H3Detection out;
  out.weight = weight;
  out.image = e_class(mu, weight, cert);
  out.detected = !out.image.vector.is_zero() && out.image.target_exact;
  return out;
}

}  // namespace cockcroft
