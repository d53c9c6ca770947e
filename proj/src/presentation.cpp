#include "cockcroft/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cockcroft/proposition.hpp"

namespace cockcroft {

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Word> relators,
                           std::optional<Partition> partition)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)), partition_(std::move(partition)) {
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (*relators_[i].alphabet() != *alphabet_) throw AlphabetMismatch();
    if (relators_[i].is_identity()) {
      throw std::invalid_argument("relator " + std::to_string(i) + " reduces to the identity");
    }
  }
  if (partition_) {
    if (partition_->r.empty() || partition_->s.empty()) {
      throw std::invalid_argument("both parts of a partition must be nonempty");
    }
    std::set<std::size_t> seen;
    for (const auto* part : {&partition_->r, &partition_->s}) {
      for (auto i : *part) {
        if (i >= relators_.size()) throw std::invalid_argument("partition index out of range");
        if (!seen.insert(i).second) throw std::invalid_argument("partition parts overlap");
      }
    }
    if (seen.size() != relators_.size()) throw std::invalid_argument("partition does not cover all relators");
  }
}

Presentation Presentation::split(AlphabetPtr alphabet, std::vector<Word> r, std::vector<Word> s) {
  Partition part;
  std::vector<Word> all;
  for (auto& w : r) {
    part.r.push_back(all.size());
    all.push_back(std::move(w));
  }
  for (auto& w : s) {
    part.s.push_back(all.size());
    all.push_back(std::move(w));
  }
  return Presentation(std::move(alphabet), std::move(all), std::move(part));
}

std::vector<Word> Presentation::r_relators() const {
  if (!partition_) return relators_;
  std::vector<Word> out;
  for (auto i : partition_->r) out.push_back(relators_[i]);
  return out;
}

std::vector<Word> Presentation::s_relators() const {
  std::vector<Word> out;
  if (!partition_) return out;
  for (auto i : partition_->s) out.push_back(relators_[i]);
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : alphabet_->names()) os << ' ' << n;
  os << '\n';
  std::vector<char> tag(relators_.size(), 'r');
  if (partition_) {
    for (auto i : partition_->s) tag[i] = 's';
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    os << tag[i] << ": " << relators_[i].to_string() << '\n';
  }
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  AlphabetPtr alphabet;
  std::vector<Word> r, s;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string str) {
    auto b = str.find_first_not_of(" \t\r");
    auto e = str.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : str.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    auto where = "line " + std::to_string(line_no) + ": ";
    if (colon == std::string::npos) throw std::invalid_argument(where + "expected 'key: value'");
    auto key = trim(line.substr(0, colon));
    auto value = line.substr(colon + 1);
    if (key == "gens") {
      if (alphabet) throw std::invalid_argument(where + "duplicate gens line");
      alphabet = parse_alphabet(value);
      continue;
    }
    if (key != "r" && key != "s") throw std::invalid_argument(where + "unknown key '" + key + "'");
    if (!alphabet) throw std::invalid_argument(where + "relator before gens line");
    try {
      (key == "r" ? r : s).push_back(parse_word(value, alphabet));
    } catch (const ParseError& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  if (!alphabet) throw std::invalid_argument("presentation has no gens line");
  if (s.empty()) return Presentation(alphabet, std::move(r));
  return Presentation::split(alphabet, std::move(r), std::move(s));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

IntMatrix exponent_matrix(const Presentation& p) {
  const auto k = p.alphabet()->rank();
  IntMatrix m(p.relators().size(), k);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = exponent_sum(p.relators()[i], j);
  }
  return m;
}

HomologyReport complex_homology(const Presentation& p) {
  // The boundary d2: Z^relators -> Z^generators is the transposed exponent
  // matrix and d1 = 0, so H_1 = coker d2 and H_2 = ker d2.
  auto snf = smith_normal_form(exponent_matrix(p));
  HomologyReport h;
  h.h1_free_rank = p.alphabet()->rank() - snf.rank;
  for (const auto& d : snf.invariant_factors) {
    if (d > 1) h.h1_torsion.push_back(d);
  }
  h.h2_free_rank = p.relators().size() - snf.rank;
  return h;
}

std::string describe_h1(const HomologyReport& h) {
  std::vector<std::string> parts;
  if (h.h1_free_rank == 1) parts.push_back("Z");
  if (h.h1_free_rank > 1) parts.push_back("Z^" + std::to_string(h.h1_free_rank));
  for (const auto& d : h.h1_torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

EfficiencyReport efficiency_report(const Presentation& p, const CockcroftCertificate* cert) {
  if (cert == nullptr) {
    throw std::invalid_argument("efficiency report requires a Cockcroft certificate");
  }
  if (!cert->conclusions.model_cockcroft) {
    throw std::invalid_argument("certificate does not establish the Cockcroft property");
  }
  if (cert->relator_weights.size() != p.relators().size() || cert->rank != p.alphabet()->rank()) {
    throw std::invalid_argument("certificate was issued for a different presentation");
  }
  auto h = complex_homology(p);
  EfficiencyReport r;
  r.h1_free_rank = h.h1_free_rank;
  r.h2_generators = h.h2_free_rank;
  r.generators_minus_relators =
      static_cast<long>(p.alphabet()->rank()) - static_cast<long>(p.relators().size());
  r.h1_rank_minus_h2_generators = static_cast<long>(h.h1_free_rank) - static_cast<long>(h.h2_free_rank);
  r.efficient = r.generators_minus_relators == r.h1_rank_minus_h2_generators;
  return r;
}

}  // namespace cockcroft
