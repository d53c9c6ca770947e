#include "cockcroft/membership.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "cockcroft/intlin.hpp"
#include "cockcroft/magnus.hpp"

namespace cockcroft {

namespace {

using Letters = std::vector<int>;

Letters inverse_letters(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Letters rotate_left(const Letters& w, std::size_t shift) {
  Letters out(w.begin() + static_cast<std::ptrdiff_t>(shift), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift));
  return out;
}

void reduce_into(Letters& stack, int letter) {
  if (!stack.empty() && stack.back() == -letter) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

// Free reduction of w[0:pos] + piece + w[pos:], with w already reduced.
Letters insert_reduced(const Letters& w, std::size_t pos, const Letters& piece) {
  Letters out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.reserve(w.size() + piece.size());
  for (int l : piece) reduce_into(out, l);
  for (std::size_t i = pos; i < w.size(); ++i) reduce_into(out, w[i]);
  return out;
}

Letters relator_piece(const std::vector<Word>& relators, const Insertion& ins) {
  if (ins.relator >= relators.size()) throw std::out_of_range("relator index out of range");
  Letters rho = relators[ins.relator].letters();
  if (ins.inverse) rho = inverse_letters(rho);
  if (ins.shift >= std::max<std::size_t>(rho.size(), 1)) throw std::out_of_range("cyclic shift out of range");
  return rotate_left(rho, ins.shift);
}

std::string key_of(const Letters& w) {
  std::string key;
  key.reserve(w.size());
  for (int l : w) key.push_back(static_cast<char>(l));
  return key;
}

}  // namespace

Word witness_product(const Witness& w, const std::vector<Word>& relators, const AlphabetPtr& alphabet) {
  Word product(alphabet);
  for (const auto& f : w.factors) {
    if (f.relator >= relators.size()) throw std::out_of_range("relator index out of range");
    if (f.exponent != 1 && f.exponent != -1) throw std::invalid_argument("witness exponents must be +1 or -1");
    Word r = f.exponent == 1 ? relators[f.relator] : invert(relators[f.relator]);
    product = multiply(product, conjugate(r, f.conjugator));
  }
  return product;
}

bool check_witness(const Word& mu, const Witness& w, const std::vector<Word>& relators) {
  return witness_product(w, relators, mu.alphabet()) == mu;
}

std::map<std::size_t, Integer> exponent_balance(const Witness& w, const std::vector<Word>& relators) {
  std::map<std::size_t, Integer> balance;
  for (std::size_t i = 0; i < relators.size(); ++i) balance[i] = 0;
  for (const auto& f : w.factors) balance[f.relator] += f.exponent;
  return balance;
}

Word replay_trace(const Word& mu, const std::vector<Insertion>& trace, const std::vector<Word>& relators) {
  Letters w = mu.letters();
  for (const auto& ins : trace) {
    if (ins.position > w.size()) throw std::out_of_range("insertion position out of range");
    w = insert_reduced(w, ins.position, relator_piece(relators, ins));
  }
  return Word::from_letters(mu.alphabet(), w);
}

Witness trace_to_witness(const Word& mu, const std::vector<Insertion>& trace,
                         const std::vector<Word>& relators) {
  // Inserting c = s^-1 rho s (rho = r^eps rotated by |s|) before position p
  // of w = pq left-multiplies w by g rho g^-1 with g = p s^-1. Undoing the
  // steps in order expresses mu as the product of the inverse factors.
  Witness out;
  Letters w = mu.letters();
  const auto& alphabet = mu.alphabet();
  for (const auto& ins : trace) {
    if (ins.position > w.size()) throw std::out_of_range("insertion position out of range");
    Letters rho = relators.at(ins.relator).letters();
    if (ins.inverse) rho = inverse_letters(rho);
    Letters prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(ins.position));
    Letters s(rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(ins.shift));
    Letters g = prefix;
    for (int l : inverse_letters(s)) g.push_back(l);
    out.factors.push_back({Word::from_letters(alphabet, g), ins.relator, ins.inverse ? 1 : -1});
    w = insert_reduced(w, ins.position, rotate_left(rho, ins.shift));
  }
  if (!w.empty()) throw std::invalid_argument("trace does not reduce the word to the identity");
  return out;
}

bool evidence_valid(const Word& mu, const MembershipEvidence& evidence, const std::vector<Word>& relators) {
  if (const auto* v = std::get_if<Verified>(&evidence)) return check_witness(mu, v->witness, relators);
  if (const auto* s = std::get_if<SearchProved>(&evidence)) {
    return replay_trace(mu, s->trace, relators).is_identity();
  }
  return false;
}

MembershipEvidence search_membership(const Word& mu, const std::vector<Word>& relators,
                                     const SearchBounds& bounds, std::stop_token stop) {
  SearchStats stats;
  const auto& alphabet = mu.alphabet();
  if (alphabet->rank() > 100) return Unknown{"alphabet too large for letter search", stats};
  if (mu.is_identity()) return SearchProved{{}, stats};
  if (relators.empty()) return Unknown{"no relators: only the identity is in the normal closure", stats};

  // Abelian pre-check: the exponent-sum vector of mu must lie in the lattice
  // spanned by the relators' exponent-sum vectors.
  IntMatrix abel(relators.size(), alphabet->rank());
  std::vector<Integer> target(alphabet->rank());
  for (std::size_t j = 0; j < alphabet->rank(); ++j) {
    target[j] = exponent_sum(mu, j);
    for (std::size_t i = 0; i < relators.size(); ++i) abel(i, j) = exponent_sum(relators[i], j);
  }
  if (!in_row_lattice(abel, target)) {
    return Unknown{"abelian obstruction: exponent sums of the word are not a combination of the relators'",
                   stats};
  }

  std::size_t longest = 0;
  for (const auto& r : relators) {
    if (r.letter_length() > 4096) return Unknown{"relator too long for letter search", stats};
    longest = std::max<std::size_t>(longest, r.letter_length().get_ui());
  }
  if (mu.letter_length() > 4096) return Unknown{"word too long for letter search", stats};
  const std::size_t mu_length = mu.letter_length().get_ui();
  stats.max_length = bounds.max_length.value_or(2 * mu_length + longest);
  stats.max_steps = bounds.max_steps.value_or(1'000'000);
  if (stats.max_length == 0 || stats.max_steps == 0) throw std::invalid_argument("search bounds must be positive");

  // Distinct cyclic pieces with the first insertion that produces each.
  std::vector<std::pair<Letters, Insertion>> pieces;
  {
    std::unordered_map<std::string, bool> seen;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      for (bool inverse : {false, true}) {
        Letters rho = relators[i].letters();
        if (inverse) rho = inverse_letters(rho);
        for (std::size_t shift = 0; shift < rho.size(); ++shift) {
          Letters c = rotate_left(rho, shift);
          if (seen.emplace(key_of(c), true).second) pieces.push_back({c, {0, i, shift, inverse}});
        }
      }
    }
  }

  struct Node {
    Letters word;
    std::size_t parent;
    Insertion via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> visited;
  // Shortest words first; ties in discovery order.
  using Entry = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  Letters start = mu.letters();
  nodes.push_back({start, 0, {}});
  visited.emplace(key_of(start), 0);
  frontier.push({start.size(), 0});

  auto trace_to = [&](std::size_t id) {
    std::vector<Insertion> trace;
    while (id != 0) {
      trace.push_back(nodes[id].via);
      id = nodes[id].parent;
    }
    std::reverse(trace.begin(), trace.end());
    return trace;
  };

  while (!frontier.empty()) {
    auto [length, id] = frontier.top();
    frontier.pop();
    if (stop.stop_requested()) throw Cancelled();
    const Letters current = nodes[id].word;
    for (std::size_t pos = 0; pos <= current.size(); ++pos) {
      for (const auto& [piece, ins] : pieces) {
        Letters next = insert_reduced(current, pos, piece);
        if (next.size() > stats.max_length) continue;
        auto [it, inserted] = visited.emplace(key_of(next), nodes.size());
        if (!inserted) continue;
        Insertion step = ins;
        step.position = pos;
        nodes.push_back({std::move(next), id, step});
        stats.states = nodes.size();
        if (nodes.back().word.empty()) return SearchProved{trace_to(nodes.size() - 1), stats};
        if (nodes.size() >= stats.max_steps) {
          return Unknown{"state budget exhausted", stats};
        }
        frontier.push({nodes.back().word.size(), nodes.size() - 1});
      }
    }
  }
  return Unknown{"search space within the length bound exhausted", stats};
}

}  // namespace cockcroft
