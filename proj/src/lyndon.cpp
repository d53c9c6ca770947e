#include "cockcroft/lyndon.hpp"

#include <algorithm>
#include <sstream>

namespace cockcroft {

namespace {

bool is_lyndon(std::span<const std::size_t> w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto suffix = w.subspan(i);
    if (!std::lexicographical_compare(w.begin(), w.end(), suffix.begin(), suffix.end())) return false;
  }
  return true;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      auto [it, inserted] = out.emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Polynomial lie_bracket(const Polynomial& a, const Polynomial& b) {
  Polynomial out = multiply(a, b);
  for (const auto& [m, c] : multiply(b, a)) {
    auto [it, inserted] = out.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::size_t standard_split(const Monomial& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (is_lyndon(std::span<const std::size_t>(w).subspan(i))) return i;
  }
  return w.size();
}

std::string render_bracket(const Monomial& w, const Alphabet& alphabet) {
  if (w.size() == 1) return alphabet.name(w[0]);
  auto k = standard_split(w);
  Monomial u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  Monomial v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  return "[" + render_bracket(u, alphabet) + "," + render_bracket(v, alphabet) + "]";
}

Polynomial expand_bracket(const Monomial& w) {
  if (w.size() == 1) return Polynomial{{w, Integer(1)}};
  auto k = standard_split(w);
  Monomial u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  Monomial v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  return lie_bracket(expand_bracket(u), expand_bracket(v));
}

}  // namespace

std::vector<Monomial> lyndon_words(std::size_t rank, std::size_t degree) {
  if (rank == 0 || degree == 0) throw std::invalid_argument("lyndon_words: rank and degree must be positive");
  std::vector<Monomial> out;
  // Duval's generation of Lyndon words of length <= degree in lexicographic order.
  Monomial w{0};
  while (!w.empty()) {
    if (w.size() == degree) out.push_back(w);
    const std::size_t period = w.size();
    while (w.size() < degree) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == rank - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

Integer witt_number(std::size_t rank, std::size_t degree) {
  // (1/n) * sum_{d | n} mu(d) k^(n/d)
  auto mobius = [](std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  Integer total = 0;
  for (std::size_t d = 1; d <= degree; ++d) {
    if (degree % d) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), rank, degree / d);
    total += mobius(d) * p;
  }
  return total / static_cast<unsigned long>(degree);
}

std::string LieBracket::render(const Alphabet& alphabet) const { return render_bracket(word, alphabet); }

Polynomial LieBracket::expand() const { return expand_bracket(word); }

LieBracket standard_bracketing(const Monomial& lyndon_word) {
  if (!is_lyndon(lyndon_word)) throw std::invalid_argument("not a Lyndon word");
  return LieBracket{lyndon_word};
}

Integer LieVector::coordinate(const Monomial& lyndon_word) const {
  auto it = coords_.find(lyndon_word);
  return it == coords_.end() ? Integer(0) : it->second;
}

void LieVector::set(const Monomial& lyndon_word, const Integer& value) {
  if (lyndon_word.size() != degree_) throw std::invalid_argument("Lyndon word has the wrong degree");
  if (value == 0) {
    coords_.erase(lyndon_word);
  } else {
    coords_[lyndon_word] = value;
  }
}

LieVector LieVector::scaled(const Integer& factor) const {
  LieVector out(degree_, rank_);
  for (const auto& [w, c] : coords_) out.set(w, c * factor);
  return out;
}

std::vector<Integer> LieVector::dense() const {
  std::vector<Integer> out;
  for (const auto& w : lyndon_words(rank_, degree_)) out.push_back(coordinate(w));
  return out;
}

std::string LieVector::render(const Alphabet& alphabet) const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coords_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << '*';
    os << render_bracket(w, alphabet);
  }
  return os.str();
}

LyndonBasis::LyndonBasis(std::size_t rank, std::size_t degree)
    : rank_(rank), degree_(degree), words_(lyndon_words(rank, degree)) {
  expansions_.reserve(words_.size());
  for (const auto& w : words_) expansions_.push_back(expand_bracket(w));
}

LieVector LyndonBasis::coordinates(const Polynomial& homogeneous) const {
  Polynomial rest = homogeneous;
  LieVector out(degree_, rank_);
  // The expansion of a bracketed Lyndon word w is w plus lexicographically
  // larger monomials, so the system is unitriangular in lex order.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto it = rest.find(words_[i]);
    if (it == rest.end()) continue;
    Integer c = it->second;
    out.set(words_[i], c);
    for (const auto& [m, e] : expansions_[i]) {
      auto [jt, inserted] = rest.emplace(m, -c * e);
      if (!inserted) {
        jt->second -= c * e;
        if (jt->second == 0) rest.erase(jt);
      }
    }
  }
  if (!rest.empty()) throw std::domain_error("polynomial is not a homogeneous Lie element");
  return out;
}

WeightBelowDegree::WeightBelowDegree(std::size_t weight, std::size_t degree)
    : std::invalid_argument("word has weight " + std::to_string(weight) + " < degree " +
                            std::to_string(degree)),
      weight_(weight) {}

LieVector leading_lie_class(const Word& w, std::size_t degree) {
  return leading_lie_class(w, LyndonBasis(w.alphabet()->rank(), degree));
}

LieVector leading_lie_class(const Word& w, const LyndonBasis& basis) {
  if (w.alphabet()->rank() != basis.rank()) throw AlphabetMismatch();
  auto series = magnus_expand(w, basis.degree());
  auto low = series.min_positive_degree();
  if (low != 0 && low < basis.degree()) throw WeightBelowDegree(low, basis.degree());
  return basis.coordinates(series.component(basis.degree()));
}

RelatorWeightError::RelatorWeightError(std::size_t relator_index, std::size_t weight,
                                       std::size_t degree)
    : WeightBelowDegree(weight, degree), index_(relator_index) {}

IntMatrix relator_class_matrix(const std::vector<Word>& relators, std::size_t rank,
                               std::size_t degree) {
  LyndonBasis basis(rank, degree);
  IntMatrix m(0, basis.words().size());
  for (std::size_t i = 0; i < relators.size(); ++i) {
    try {
      m.append_row(leading_lie_class(relators[i], basis).dense());
    } catch (const WeightBelowDegree& e) {
      throw RelatorWeightError(i, e.weight(), degree);
    }
  }
  return m;
}

}  // namespace cockcroft
