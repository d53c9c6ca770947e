#include "cockcroft/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "cockcroft/intlin.hpp"
#include "cockcroft/lyndon.hpp"
#include "cockcroft/magnus.hpp"
#include "cockcroft/membership.hpp"
#include "cockcroft/presentation.hpp"
#include "cockcroft/proposition.hpp"
#include "cockcroft/word.hpp"

namespace cockcroft::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A command ran to completion with a negative outcome that still carries data.
struct Failure {
  std::string status;
  std::string message;
  Json payload;
};

std::string str(std::size_t v) { return std::to_string(v); }

Json integer_list(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json index_list(const std::vector<std::size_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(str(v));
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(integer_list(m.row(i)));
  return out;
}

Json series_terms(const TruncatedSeries& s, const Alphabet& alphabet) {
  Json terms = Json::object();
  for (const auto& [m, c] : s.terms()) {
    if (!m.empty()) terms[render_monomial(m, alphabet)] = c.get_str();
  }
  return terms;
}

Json lie_json(const LieVector& v, const Alphabet& alphabet) {
  Json coords = Json::object();
  for (const auto& [w, c] : v.coords()) coords[render_monomial(w, alphabet)] = c.get_str();
  return Json{{"degree", str(v.degree())},
              {"coords", coords},
              {"dense", integer_list(v.dense())},
              {"render", v.render(alphabet)}};
}

Json basis_json(const std::vector<Monomial>& words, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& w : words) {
    out.push_back({{"word", render_monomial(w, alphabet)}, {"bracket", LieBracket{w}.render(alphabet)}});
  }
  return out;
}

Json certificate_json(const CockcroftCertificate& cert, const Presentation& p) {
  Json j;
  j["n"] = str(cert.n);
  j["relator_weights"] = index_list(cert.relator_weights);
  j["basis"] = basis_json(cert.basis, *p.alphabet());
  j["class_matrix"] = matrix_json(cert.class_matrix);
  j["independent"] = cert.independent;
  j["conclusions"] = {{"intersection_in_commutators", cert.conclusions.intersection_in_commutators},
                      {"intersection_in_next_term", cert.conclusions.intersection_in_next_term},
                      {"model_cockcroft", cert.conclusions.model_cockcroft}};
  return j;
}

Json failure_json(const PropositionFailure& f, const Presentation& p) {
  Json j{{"kind", failure_kind(f)}};
  if (const auto* u = std::get_if<UnequalWeights>(&f)) {
    j["weights"] = index_list(u->weights);
  } else if (const auto* d = std::get_if<Dependent>(&f)) {
    j["n"] = str(d->n);
    j["basis"] = basis_json(lyndon_words(p.alphabet()->rank(), d->n), *p.alphabet());
    j["class_matrix"] = matrix_json(d->class_matrix);
    j["dependency"] = integer_list(d->dependency);
  } else {
    const auto& b = std::get<WeightExceedsBound>(f);
    j["relator"] = str(b.relator);
    j["bound"] = str(b.bound);
  }
  return j;
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["gens"] = p.alphabet()->names();
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(r.to_string());
  j["relators"] = rels;
  if (p.partition()) j["partition"] = {{"r", index_list(p.partition()->r)}, {"s", index_list(p.partition()->s)}};
  return j;
}

Json homology_json(const HomologyReport& h) {
  return Json{{"h1", {{"free_rank", str(h.h1_free_rank)}, {"torsion", integer_list(h.h1_torsion)},
                      {"text", describe_h1(h)}}},
              {"h2_free_rank", str(h.h2_free_rank)}};
}

Json efficiency_json(const EfficiencyReport& e) {
  return Json{{"generators_minus_relators", std::to_string(e.generators_minus_relators)},
              {"h1_free_rank", str(e.h1_free_rank)},
              {"h2_generators", str(e.h2_generators)},
              {"h1_rank_minus_h2_generators", std::to_string(e.h1_rank_minus_h2_generators)},
              {"efficient", e.efficient}};
}

Json witness_json(const Witness& w) {
  Json out = Json::array();
  for (const auto& f : w.factors) {
    out.push_back({{"conjugator", f.conjugator.to_string()},
                   {"relator", str(f.relator)},
                   {"exponent", std::to_string(f.exponent)}});
  }
  return out;
}

Json balance_json(const std::map<std::size_t, Integer>& balance) {
  Json out = Json::object();
  for (const auto& [i, n] : balance) out[str(i)] = n.get_str();
  return out;
}

bool balance_zero(const std::map<std::size_t, Integer>& balance) {
  for (const auto& [i, n] : balance) {
    if (n != 0) return false;
  }
  return true;
}

Json evidence_json(const MembershipEvidence& ev, const Word& mu, const std::vector<Word>& relators) {
  Json j;
  if (const auto* proved = std::get_if<SearchProved>(&ev)) {
    j["evidence"] = "search_proved";
    Json trace = Json::array();
    for (const auto& ins : proved->trace) {
      trace.push_back({{"position", str(ins.position)},
                       {"relator", str(ins.relator)},
                       {"shift", str(ins.shift)},
                       {"inverse", ins.inverse}});
    }
    j["trace"] = trace;
    j["states"] = str(proved->stats.states);
    auto witness = trace_to_witness(mu, proved->trace, relators);
    auto balance = exponent_balance(witness, relators);
    j["witness"] = witness_json(witness);
    j["witness_valid"] = check_witness(mu, witness, relators);
    j["exponent_balance"] = balance_json(balance);
    j["balance_zero"] = balance_zero(balance);
  } else if (const auto* v = std::get_if<Verified>(&ev)) {
    j["evidence"] = "verified";
    j["witness"] = witness_json(v->witness);
    j["witness_valid"] = check_witness(mu, v->witness, relators);
    j["exponent_balance"] = balance_json(exponent_balance(v->witness, relators));
  } else {
    const auto& u = std::get<Unknown>(ev);
    j["evidence"] = "unknown";
    j["reason"] = u.reason;
    j["states"] = str(u.stats.states);
  }
  return j;
}

Json detection_json(const H3Detection& d, const Alphabet& alphabet) {
  return Json{{"weight", str(d.weight)},
              {"target_degree", str(d.image.target_degree)},
              {"vector", lie_json(d.image.vector, alphabet)},
              {"target_exact", d.image.target_exact},
              {"detected", d.detected}};
}

struct Options {
  std::string gens;
  std::string word;
  std::string file;
  std::size_t degree = 0;
  std::size_t dmax = kDefaultMaxDegree;
  std::string bounds;
  std::string matrix;
  std::string part = "all";
  std::string witness;
  std::string a = "1", b = "1", c = "1";
};

AlphabetPtr require_gens(const Options& o) {
  if (o.gens.empty()) throw UsageError("--gens is required");
  return parse_alphabet(o.gens);
}

Word require_word(const Options& o, const AlphabetPtr& alphabet) {
  if (o.word.empty()) throw UsageError("--word is required");
  return parse_word(o.word, alphabet);
}

std::size_t require_degree(const Options& o) {
  if (o.degree == 0) throw UsageError("--degree must be a positive integer");
  return o.degree;
}

Presentation require_presentation(const Options& o) {
  if (o.file.empty()) throw UsageError("--file is required");
  return load_presentation(o.file);
}

std::vector<Word> select_part(const Presentation& p, const std::string& part) {
  if (part == "all") return p.relators();
  if (part == "r") {
    if (!p.partition()) throw UsageError("presentation has no r/s split");
    return p.r_relators();
  }
  if (part == "s") {
    if (!p.partition()) throw UsageError("presentation has no r/s split");
    return p.s_relators();
  }
  throw UsageError("--part must be r, s or all");
}

SearchBounds parse_bounds(const std::string& text) {
  SearchBounds b;
  if (text.empty()) return b;
  auto comma = text.find(',');
  try {
    auto first = text.substr(0, comma);
    if (!first.empty()) b.max_length = std::stoul(first);
    if (comma != std::string::npos && comma + 1 < text.size()) b.max_steps = std::stoul(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("--bounds expects MAX_LENGTH,MAX_STEPS");
  }
  if ((b.max_length && *b.max_length == 0) || (b.max_steps && *b.max_steps == 0)) {
    throw UsageError("--bounds values must be positive");
  }
  return b;
}

IntMatrix parse_matrix(const std::string& text) {
  IntMatrix m;
  std::stringstream rows(text);
  std::string row;
  bool any = false;
  while (std::getline(rows, row, ';')) {
    std::vector<Integer> entries;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      auto b = cell.find_first_not_of(" \t");
      auto e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw UsageError("empty matrix entry");
      Integer v;
      if (v.set_str(cell.substr(b, e - b + 1), 10) != 0) throw UsageError("bad matrix entry '" + cell + "'");
      entries.push_back(v);
    }
    if (!any) m = IntMatrix(0, entries.size());
    any = true;
    if (entries.size() != m.cols()) throw UsageError("matrix rows must have equal length");
    m.append_row(entries);
  }
  if (!any) throw UsageError("--matrix is required, e.g. \"1,2;3,4\"");
  return m;
}

Integer parse_nonzero(const std::string& name, const std::string& text) {
  Integer v;
  if (v.set_str(text, 10) != 0) throw UsageError("--" + name + " must be an integer");
  if (v == 0) throw UsageError("--" + name + " must be nonzero");
  return v;
}

Json cmd_expand(const Options& o) {
  auto alphabet = require_gens(o);
  auto w = require_word(o, alphabet);
  auto d = require_degree(o);
  auto s = magnus_expand(w, d);
  return Json{{"word", w.to_string()}, {"degree", str(d)}, {"constant", s.coefficient({}).get_str()},
              {"terms", series_terms(s, *alphabet)}};
}

Json cmd_weight(const Options& o) {
  auto alphabet = require_gens(o);
  auto w = require_word(o, alphabet);
  auto result = lcs_weight(w, o.dmax);
  Json j{{"word", w.to_string()}, {"dmax", str(o.dmax)}};
  if (std::holds_alternative<IdentityWeight>(result)) {
    j["weight"] = "identity";
  } else if (const auto* n = std::get_if<Weight>(&result)) {
    j["weight"] = str(n->n);
  } else {
    j["weight"] = "exceeds_bound";
  }
  return j;
}

Json cmd_class(const Options& o) {
  auto alphabet = require_gens(o);
  auto w = require_word(o, alphabet);
  auto d = require_degree(o);
  LyndonBasis basis(alphabet->rank(), d);
  try {
    auto v = leading_lie_class(w, basis);
    return Json{{"word", w.to_string()}, {"basis", basis_json(basis.words(), *alphabet)},
                {"class", lie_json(v, *alphabet)}, {"in_next_term", v.is_zero()}};
  } catch (const WeightBelowDegree& e) {
    throw Failure{"weight_below_degree", e.what(),
                  Json{{"word", w.to_string()}, {"weight", str(e.weight())}, {"degree", str(d)}}};
  }
}

Json cmd_lyndon(const Options& o) {
  auto alphabet = require_gens(o);
  auto d = require_degree(o);
  auto words = lyndon_words(alphabet->rank(), d);
  return Json{{"rank", str(alphabet->rank())}, {"degree", str(d)}, {"count", str(words.size())},
              {"words", basis_json(words, *alphabet)}};
}

Json cmd_snf(const Options& o) {
  auto m = parse_matrix(o.matrix);
  auto snf = smith_normal_form(m);
  return Json{{"rows", str(m.rows())}, {"cols", str(m.cols())},
              {"invariant_factors", integer_list(snf.invariant_factors)}, {"rank", str(snf.rank)},
              {"U", matrix_json(snf.U)}, {"V", matrix_json(snf.V)}};
}

Json cmd_homology(const Options& o) {
  auto p = require_presentation(o);
  return Json{{"presentation", presentation_json(p)}, {"exponent_matrix", matrix_json(exponent_matrix(p))},
              {"homology", homology_json(complex_homology(p))}};
}

CockcroftCertificate certify(const Presentation& p, std::size_t dmax) {
  auto result = proposition_check(p, dmax);
  if (auto* f = std::get_if<PropositionFailure>(&result)) {
    throw Failure{failure_kind(*f), "proposition hypotheses fail: " + failure_kind(*f),
                  Json{{"presentation", presentation_json(p)}, {"failure", failure_json(*f, p)}}};
  }
  return std::get<CockcroftCertificate>(result);
}

Json cmd_cockcroft(const Options& o) {
  auto p = require_presentation(o);
  auto cert = certify(p, o.dmax);
  return Json{{"presentation", presentation_json(p)},
              {"certificate", certificate_json(cert, p)},
              {"homology", homology_json(complex_homology(p))},
              {"h2g_isomorphic_to_h2k", true},
              {"efficiency", efficiency_json(efficiency_report(p, &cert))}};
}

Json cmd_member(const Options& o) {
  auto p = require_presentation(o);
  auto mu = require_word(o, p.alphabet());
  auto relators = select_part(p, o.part);
  auto ev = search_membership(mu, relators, parse_bounds(o.bounds));
  Json j{{"word", mu.to_string()}, {"part", o.part}};
  j.update(evidence_json(ev, mu, relators));
  if (std::holds_alternative<Unknown>(ev)) throw Failure{"unknown", std::get<Unknown>(ev).reason, j};
  return j;
}

Witness load_witness(const std::string& path, const AlphabetPtr& alphabet) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open witness file '" + path + "'");
  auto doc = nlohmann::json::parse(in);
  const auto& factors = doc.is_array() ? doc : doc.at("factors");
  auto as_long = [](const nlohmann::json& v) {
    return v.is_string() ? std::stol(v.get<std::string>()) : v.get<long>();
  };
  Witness w;
  for (const auto& f : factors) {
    long rel = as_long(f.at("relator"));
    if (rel < 0) throw std::out_of_range("relator index out of range");
    w.factors.push_back({parse_word(f.at("conjugator").get<std::string>(), alphabet),
                         static_cast<std::size_t>(rel), static_cast<int>(as_long(f.at("exponent")))});
  }
  return w;
}

Json cmd_witness_check(const Options& o) {
  auto p = require_presentation(o);
  auto mu = require_word(o, p.alphabet());
  if (o.witness.empty()) throw UsageError("--witness is required");
  auto relators = select_part(p, o.part);
  auto w = load_witness(o.witness, p.alphabet());
  bool valid = check_witness(mu, w, relators);
  Json j{{"word", mu.to_string()},
         {"part", o.part},
         {"product", witness_product(w, relators, p.alphabet()).to_string()},
         {"valid", valid},
         {"exponent_balance", balance_json(exponent_balance(w, relators))}};
  if (!valid) throw Failure{"invalid_witness", "witness does not multiply out to the word", j};
  return j;
}

Json cmd_e_class(const Options& o) {
  auto p = require_presentation(o);
  auto mu = require_word(o, p.alphabet());
  auto m = require_degree(o);
  auto cert = certify(p, o.dmax);
  try {
    auto image = e_class(mu, m, cert);
    return Json{{"word", mu.to_string()},
                {"certificate", certificate_json(cert, p)},
                {"image", {{"target_degree", str(image.target_degree)},
                           {"vector", lie_json(image.vector, *p.alphabet())},
                           {"target_exact", image.target_exact}}}};
  } catch (const DetectionError& e) {
    throw Failure{kind_name(e.kind()), e.what(), Json{{"word", mu.to_string()}}};
  }
}

// Shared pipeline of both demos: certificate, membership search in R and S,
// detection, and the scalar law against the parameter-one base vector.
Json run_demo(const Presentation& p, const Word& mu, const Word& base_mu, const Integer& scalar,
              const std::string& reference, std::size_t expected_n, std::size_t dmax) {
  const auto& alphabet = *p.alphabet();
  auto cert = certify(p, dmax);
  Json j;
  j["presentation"] = presentation_json(p);
  j["certificate"] = certificate_json(cert, p);
  j["certificate_degree_expected"] = str(expected_n);
  j["mu"] = mu.to_string();

  auto r_rel = p.r_relators();
  auto s_rel = p.s_relators();
  auto in_r = search_membership(mu, r_rel);
  auto in_s = search_membership(mu, s_rel);
  j["membership"] = {{"R", evidence_json(in_r, mu, r_rel)}, {"S", evidence_json(in_s, mu, s_rel)}};
  if (std::holds_alternative<Unknown>(in_r) || std::holds_alternative<Unknown>(in_s)) {
    throw Failure{"membership_unknown", "bounded search did not prove membership in both R and S", j};
  }

  H3Detection detection;
  try {
    detection = detect_h3(mu, p, cert, in_r, in_s, dmax);
  } catch (const DetectionError& e) {
    throw Failure{kind_name(e.kind()), e.what(), j};
  }
  j["detection"] = detection_json(detection, alphabet);

  const auto m = detection.image.target_degree;
  auto base = leading_lie_class(base_mu, m);
  auto ref = leading_lie_class(parse_word(reference, p.alphabet()), m);
  j["base_vector"] = lie_json(base, alphabet);
  j["scalar"] = scalar.get_str();
  j["scalar_law_holds"] = detection.image.vector == base.scaled(scalar);
  j["reference_commutator"] = reference;
  j["reference_class"] = lie_json(ref, alphabet);
  j["matches_reference_power"] = detection.image.vector == ref.scaled(scalar);
  if (cert.n != expected_n) throw Failure{"unexpected_degree", "certificate degree differs from expected", j};
  return j;
}

Word example1_mu(const AlphabetPtr& A, const Integer& a, const Integer& b, const Integer& c) {
  // x^a z^c x^-a y^b x^a y^-b z^-c y^b x^-a y^-b
  const std::vector<Syllable> syl = {{0, a}, {2, c}, {0, -a}, {1, b}, {0, a},
                                     {1, -b}, {2, -c}, {1, b}, {0, -a}, {1, -b}};
  return Word::from_syllables(A, syl);
}

Json cmd_demo1(const Options& o) {
  auto a = parse_nonzero("a", o.a);
  auto b = parse_nonzero("b", o.b);
  auto c = parse_nonzero("c", o.c);
  auto A = make_alphabet({"x", "y", "z"});
  auto g = [&](std::size_t i, const Integer& e) { return Word::generator(A, i, e); };
  auto p = Presentation::split(A, {commutator(g(0, a), g(1, 1))},
                               {commutator(g(1, b), g(2, 1)), commutator(g(2, c), g(0, 1))});
  auto j = run_demo(p, example1_mu(A, a, b, c), example1_mu(A, 1, 1, 1), a * b * c, "[[x,y],z]", 2, o.dmax);
  Json out{{"parameters", {{"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}}}};
  out.update(j);
  return out;
}

Word example2_mu(const AlphabetPtr& A, const Integer& c) {
  // [x,y^c] x y^c x^-1 [y^c,x] x [x,y^c] y^-c [y^c,x] x^-1
  auto x = Word::generator(A, 0);
  auto yc = Word::generator(A, 1, c);
  auto C = commutator(x, yc);
  auto Ci = commutator(yc, x);
  Word mu(A);
  for (const auto& w : {C, x, yc, invert(x), Ci, x, C, invert(yc), Ci, invert(x)}) mu = multiply(mu, w);
  return mu;
}

Json cmd_demo2(const Options& o) {
  auto c = parse_nonzero("c", o.c);
  auto A = make_alphabet({"x", "y"});
  auto x = Word::generator(A, 0);
  auto y = Word::generator(A, 1);
  auto C = commutator(x, Word::generator(A, 1, c));
  auto p = Presentation::split(A, {commutator(x, C)}, {commutator(y, C)});
  auto j = run_demo(p, example2_mu(A, c), example2_mu(A, 1), c * c, "[y,[x,[x,y]]]", 3, o.dmax);
  Json out{{"parameters", {{"c", c.get_str()}}}};
  out.update(j);
  return out;
}

}  // namespace

Json CommandResult::to_json() const {
  return Json{{"command", command}, {"status", status}, {"payload", payload}};
}

std::string CommandResult::render() const { return pretty ? to_json().dump(2) : to_json().dump(); }

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  for (std::size_t i = 0; i < args.size(); ++i) result.command += (i ? " " : "") + args[i];

  Options o;
  bool json_flag = false;
  bool pretty_flag = false;
  CLI::App app{"Commutator calculus for Cockcroft certificates of group presentations", "cockcroft"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_common = [&](CLI::App* sub) {
    auto* fmt = sub->add_flag("--json", json_flag, "Compact single-line JSON");
    sub->add_flag("--pretty", pretty_flag, "Indented JSON (default)")->excludes(fmt);
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--gens", o.gens, "Comma-separated generator names");
    sub->add_option("--word", o.word, "Word in the expression grammar");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("--file", o.file, "Presentation file"); };

  auto* expand = app.add_subcommand("expand", "Truncated Magnus expansion of a word");
  add_word(expand);
  expand->add_option("--degree", o.degree, "Truncation degree");
  auto* weight = app.add_subcommand("weight", "Lower central series weight of a word");
  add_word(weight);
  weight->add_option("--dmax", o.dmax, "Degree bound")->check(CLI::PositiveNumber);
  auto* cls = app.add_subcommand("class", "Class of a word in F_n/F_{n+1} in Lyndon coordinates");
  add_word(cls);
  cls->add_option("--degree", o.degree, "Degree n");
  auto* lyndon = app.add_subcommand("lyndon-basis", "Lyndon words with standard bracketings");
  lyndon->add_option("--gens", o.gens, "Comma-separated generator names");
  lyndon->add_option("--degree", o.degree, "Degree");
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','");
  auto* homology = app.add_subcommand("homology", "H_1 and H_2 of the model two-complex");
  add_file(homology);
  auto* check = app.add_subcommand("cockcroft-check", "Certify the Cockcroft property of (x : r, s)");
  add_file(check);
  check->add_option("--dmax", o.dmax, "Degree bound")->check(CLI::PositiveNumber);
  auto* member = app.add_subcommand("member", "Bounded search for normal-closure membership");
  add_file(member);
  member->add_option("--word", o.word, "Word in the expression grammar");
  member->add_option("--part", o.part, "Relator set: r, s or all");
  member->add_option("--bounds", o.bounds, "MAX_LENGTH,MAX_STEPS");
  auto* wcheck = app.add_subcommand("witness-check", "Check a product-of-conjugates witness");
  add_file(wcheck);
  wcheck->add_option("--word", o.word, "Word in the expression grammar");
  wcheck->add_option("--witness", o.witness, "Witness JSON file");
  wcheck->add_option("--part", o.part, "Relator set: r, s or all");
  auto* eclass = app.add_subcommand("e-class", "Image of an element of R ∩ S under e_m");
  add_file(eclass);
  eclass->add_option("--word", o.word, "Word in the expression grammar");
  eclass->add_option("--degree", o.degree, "Target degree m");
  eclass->add_option("--dmax", o.dmax, "Degree bound")->check(CLI::PositiveNumber);
  auto* demo = app.add_subcommand("demo", "Reproduce the worked examples end to end");
  demo->require_subcommand(1);
  auto* ex1 = demo->add_subcommand("example1", "r = {[x^a,y]}, s = {[y^b,z],[z^c,x]}");
  ex1->add_option("--a", o.a, "Nonzero integer a");
  ex1->add_option("--b", o.b, "Nonzero integer b");
  ex1->add_option("--c", o.c, "Nonzero integer c");
  auto* ex2 = demo->add_subcommand("example2", "r = {[x,[x,y^c]]}, s = {[y,[x,y^c]]}");
  ex2->add_option("--c", o.c, "Nonzero integer c");
  for (auto* sub : {expand, weight, cls, lyndon, snf, homology, check, member, wcheck, eclass, ex1, ex2}) {
    add_common(sub);
  }

  auto usage = [&](const std::string& message) {
    result.status = "usage_error";
    result.exit_code = 2;
    result.diagnostic = message;
    return result;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.text = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }
  result.pretty = !json_flag;

  try {
    if (*expand) result.payload = cmd_expand(o);
    else if (*weight) result.payload = cmd_weight(o);
    else if (*cls) result.payload = cmd_class(o);
    else if (*lyndon) result.payload = cmd_lyndon(o);
    else if (*snf) result.payload = cmd_snf(o);
    else if (*homology) result.payload = cmd_homology(o);
    else if (*check) result.payload = cmd_cockcroft(o);
    else if (*member) result.payload = cmd_member(o);
    else if (*wcheck) result.payload = cmd_witness_check(o);
    else if (*eclass) result.payload = cmd_e_class(o);
    else if (*ex1) result.payload = cmd_demo1(o);
    else if (*ex2) result.payload = cmd_demo2(o);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Failure& f) {
    result.status = f.status;
    result.payload = f.payload;
    result.exit_code = 1;
    result.diagnostic = f.message;
  } catch (const std::exception& e) {
    result.status = "input_error";
    result.payload = Json{{"message", e.what()}};
    result.exit_code = 1;
    result.diagnostic = e.what();
  }
  return result;
}

}  // namespace cockcroft::cli
