#include "cockcroft/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cockcroft {

namespace {

bool valid_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void push_syllable(std::vector<Syllable>& stack, std::size_t gen, const Integer& exp) {
  if (exp == 0) return;
  if (!stack.empty() && stack.back().gen == gen) {
    stack.back().exp += exp;
    if (stack.back().exp == 0) stack.pop_back();
    return;
  }
  stack.push_back({gen, exp});
}

void check_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet() && *u.alphabet() != *v.alphabet()) {
    throw AlphabetMismatch();
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must have at least one generator");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_ident(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

AlphabetPtr parse_alphabet(std::string_view list) {
  std::vector<std::string> names;
  std::string current;
  for (char c : list) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) names.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(std::move(current));
  return make_alphabet(std::move(names));
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
}

Word Word::generator(AlphabetPtr alphabet, std::size_t gen, Integer exp) {
  Syllable s{gen, std::move(exp)};
  return from_syllables(std::move(alphabet), std::span<const Syllable>(&s, 1));
}

Word Word::from_syllables(AlphabetPtr alphabet, std::span<const Syllable> syllables) {
  Word w(std::move(alphabet));
  for (const auto& s : syllables) {
    if (s.gen >= w.alphabet_->rank()) throw std::out_of_range("generator index out of range");
    push_syllable(w.syllables_, s.gen, s.exp);
  }
  return w;
}

Word Word::from_letters(AlphabetPtr alphabet, std::span<const int> letters) {
  Word w(std::move(alphabet));
  for (int l : letters) {
    if (l == 0) throw std::invalid_argument("zero is not a letter");
    auto gen = static_cast<std::size_t>(std::abs(l) - 1);
    if (gen >= w.alphabet_->rank()) throw std::out_of_range("generator index out of range");
    push_syllable(w.syllables_, gen, Integer(l > 0 ? 1 : -1));
  }
  return w;
}

Integer Word::letter_length() const {
  Integer total = 0;
  for (const auto& s : syllables_) total += abs(s.exp);
  return total;
}

std::vector<int> Word::letters(std::size_t limit) const {
  if (letter_length() > Integer(static_cast<unsigned long>(limit))) {
    throw std::length_error("word too long to expand into letters");
  }
  std::vector<int> out;
  for (const auto& s : syllables_) {
    int letter = static_cast<int>(s.gen) + 1;
    if (s.exp < 0) letter = -letter;
    auto count = Integer(abs(s.exp)).get_ui();
    out.insert(out.end(), count, letter);
  }
  return out;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) os << ' ';
    first = false;
    os << alphabet_->name(s.gen);
    if (s.exp != 1) os << '^' << s.exp.get_str();
  }
  return os.str();
}

bool operator==(const Word& a, const Word& b) {
  if (a.alphabet_ != b.alphabet_ && *a.alphabet_ != *b.alphabet_) return false;
  return a.syllables_ == b.syllables_;
}

Word multiply(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  std::vector<Syllable> out(u.syllables().begin(), u.syllables().end());
  for (const auto& s : v.syllables()) push_syllable(out, s.gen, s.exp);
  return Word::from_syllables(u.alphabet(), out);
}

Word invert(const Word& u) {
  std::vector<Syllable> out;
  out.reserve(u.syllables().size());
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return Word::from_syllables(u.alphabet(), out);
}

Word power(const Word& u, const Integer& e) {
  if (e == 0 || u.is_identity()) return Word(u.alphabet());
  // Conjugate a cyclically reduced core so large exponents stay cheap when
  // the core is a single syllable.
  auto [core, conj] = cyclic_reduce(u);
  Word base = e > 0 ? core : invert(core);
  Integer n = abs(e);
  Word result(u.alphabet());
  if (core.syllables().size() == 1) {
    result = Word::generator(u.alphabet(), base.syllables()[0].gen, base.syllables()[0].exp * n);
  } else {
    // Square-and-multiply; cyclically reduced cores never cancel against themselves.
    Word acc = base;
    while (n > 0) {
      if (mpz_odd_p(n.get_mpz_t())) result = multiply(result, acc);
      n >>= 1;
      if (n > 0) acc = multiply(acc, acc);
    }
  }
  return conjugate(result, conj);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word conjugate(const Word& u, const Word& by) { return multiply(multiply(by, u), invert(by)); }

CyclicReduction cyclic_reduce(const Word& u) {
  auto syl = u.syllables();
  std::size_t lo = 0;
  std::size_t hi = syl.size();
  std::vector<Syllable> conj;
  std::vector<Syllable> middle;
  Integer first_exp, last_exp;
  // Peel matching g^a ... g^b pairs from both ends.
  while (hi - lo >= 2 && syl[lo].gen == syl[hi - 1].gen) {
    const Integer& a = syl[lo].exp;
    const Integer& b = syl[hi - 1].exp;
    if ((a > 0) == (b > 0)) break;
    if (abs(a) == abs(b)) {
      conj.push_back(syl[lo]);
      ++lo;
      --hi;
      continue;
    }
    // Partial cancellation: g^a M g^b with opposite signs.
    Integer c = abs(a) < abs(b) ? a : Integer(-b);
    conj.push_back({syl[lo].gen, c});
    std::vector<Syllable> core_syl(syl.begin() + lo, syl.begin() + hi);
    core_syl.front().exp -= c;
    core_syl.back().exp += c;
    return {Word::from_syllables(u.alphabet(), core_syl),
            Word::from_syllables(u.alphabet(), conj)};
  }
  std::vector<Syllable> core_syl(syl.begin() + lo, syl.begin() + hi);
  return {Word::from_syllables(u.alphabet(), core_syl), Word::from_syllables(u.alphabet(), conj)};
}

Root root_decompose(const Word& u) {
  if (u.is_identity()) throw std::invalid_argument("root_decompose: identity has no root");
  auto [core, conj] = cyclic_reduce(u);
  auto syl = std::vector<Syllable>(core.syllables().begin(), core.syllables().end());
  if (syl.size() == 1) {
    Integer e = abs(syl[0].exp);
    Word q = Word::generator(u.alphabet(), syl[0].gen, syl[0].exp > 0 ? 1 : -1);
    return {conjugate(q, conj), e};
  }
  // Rotate g^a M g^b to M g^(a+b) so the cyclic word has no merged syllable
  // across the seam; syllable periods then coincide with letter periods.
  if (syl.front().gen == syl.back().gen) {
    Syllable head = syl.front();
    syl.erase(syl.begin());
    syl.back().exp += head.exp;
    conj = multiply(conj, Word::generator(u.alphabet(), head.gen, head.exp));
  }
  const std::size_t s = syl.size();
  std::size_t period = s;
  for (std::size_t p = 1; p < s; ++p) {
    if (s % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < s && periodic; ++i) periodic = syl[i] == syl[i + p];
    if (periodic) {
      period = p;
      break;
    }
  }
  Word q = Word::from_syllables(u.alphabet(), std::span<const Syllable>(syl.data(), period));
  return {conjugate(q, conj), Integer(static_cast<unsigned long>(s / period))};
}

Integer exponent_sum(const Word& u, std::size_t gen) {
  if (gen >= u.alphabet()->rank()) throw std::out_of_range("generator index out of range");
  Integer total = 0;
  for (const auto& s : u.syllables()) {
    if (s.gen == gen) total += s.exp;
  }
  return total;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const AlphabetPtr& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word word() {
    if (!at_atom_start()) {
      fail(pos_ >= text_.size() ? "unexpected end of input" : "expected a factor");
    }
    Word w = factor();
    while (at_atom_start()) w = multiply(w, factor());
    return w;
  }

  Word factor() {
    Word a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      a = power(a, integer());
    }
    return a;
  }

  Integer integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = digits;
      fail("expected an integer exponent");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word atom() {
    skip_space();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    if (c == '1') {
      ++pos_;
      return Word(alphabet_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    auto index = alphabet_->index_of(name);
    if (!index) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    return Word::generator(alphabet_, *index);
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  return WordParser(text, alphabet).parse();
}

}  // namespace cockcroft
