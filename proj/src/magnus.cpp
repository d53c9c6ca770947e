#include "cockcroft/magnus.hpp"

#include <sstream>

namespace cockcroft {

namespace {

// Generalized binomial coefficient C(a, k) for any integer a.
Integer binomial(const Integer& a, std::size_t k) {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= a - static_cast<unsigned long>(i);
    den *= static_cast<unsigned long>(i + 1);
  }
  return num / den;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t degree_bound) : degree_bound_(degree_bound) {}

TruncatedSeries TruncatedSeries::one(std::size_t degree_bound) {
  TruncatedSeries s(degree_bound);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::generator_power(std::size_t degree_bound, std::size_t gen,
                                                 const Integer& exp) {
  TruncatedSeries s(degree_bound);
  Monomial m;
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    s.add_term(m, binomial(exp, k));
    m.push_back(gen);
  }
  return s;
}

Integer TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Integer& c) {
  if (m.size() > degree_bound_ || c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial TruncatedSeries::component(std::size_t degree) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.size() == degree) out.emplace(m, c);
  }
  return out;
}

std::size_t TruncatedSeries::min_positive_degree() const {
  // ShortLex order: the first nonconstant key has the least degree.
  for (const auto& [m, c] : terms_) {
    if (!m.empty()) return m.size();
  }
  return 0;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t bound = std::min(a.degree_bound_, b.degree_bound_);
  TruncatedSeries out(bound);
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.size() > bound) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.size() + mb.size() > bound) break;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

TruncatedSeries magnus_expand(const Word& w, std::size_t degree_bound) {
  if (degree_bound == 0) throw std::invalid_argument("magnus_expand: degree bound must be positive");
  TruncatedSeries result = TruncatedSeries::one(degree_bound);
  for (const auto& s : w.syllables()) {
    // Right multiplication by (1 + X_g)^e only appends powers of X_g.
    TruncatedSeries next(degree_bound);
    std::vector<Integer> binom;
    binom.reserve(degree_bound + 1);
    for (std::size_t k = 0; k <= degree_bound; ++k) {
      binom.push_back(binomial(s.exp, k));
    }
    for (const auto& [m, c] : result.terms()) {
      Monomial ext = m;
      for (std::size_t k = 0; m.size() + k <= degree_bound; ++k) {
        next.add_term(ext, c * binom[k]);
        ext.push_back(s.gen);
      }
    }
    result = std::move(next);
  }
  return result;
}

WeightResult lcs_weight(const Word& w, std::size_t max_degree, std::stop_token stop) {
  if (max_degree == 0) throw std::invalid_argument("lcs_weight: degree bound must be positive");
  if (w.is_identity()) return IdentityWeight{};
  // Low-degree parts of a truncated expansion do not depend on the bound, so
  // grow the bound and stop at the first nonzero degree.
  for (std::size_t d = 1; d <= max_degree; ++d) {
    if (stop.stop_requested()) throw Cancelled();
    auto degree = magnus_expand(w, d).min_positive_degree();
    if (degree != 0) return Weight{degree};
  }
  return ExceedsBound{max_degree};
}

std::string describe(const WeightResult& weight) {
  if (std::holds_alternative<IdentityWeight>(weight)) return "identity";
  if (auto* n = std::get_if<Weight>(&weight)) return std::to_string(n->n);
  return "exceeds " + std::to_string(std::get<ExceedsBound>(weight).bound);
}

std::string render_monomial(const Monomial& m, const Alphabet& alphabet) {
  if (m.empty()) return "1";
  bool single = true;
  for (const auto& n : alphabet.names()) single = single && n.size() == 1;
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0 && !single) os << '*';
    os << alphabet.name(m[i]);
  }
  return os.str();
}

}  // namespace cockcroft
