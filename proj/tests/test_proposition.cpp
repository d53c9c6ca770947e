#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cockcroft/proposition.hpp"
#include "oracles.hpp"

using namespace cockcroft;

namespace {

const AlphabetPtr XY = make_alphabet({"x", "y"});
const AlphabetPtr XYZ = make_alphabet({"x", "y", "z"});

std::string pw(const Integer& e) { return e.get_str(); }

Presentation example1(const Integer& a, const Integer& b, const Integer& c) {
  auto P = [&](const std::string& t) { return parse_word(t, XYZ); };
  return Presentation::split(XYZ, {P("[x^" + pw(a) + ",y]")},
                             {P("[y^" + pw(b) + ",z]"), P("[z^" + pw(c) + ",x]")});
}

Word example1_mu(const Integer& a, const Integer& b, const Integer& c) {
  std::string xa = "x^" + pw(a), xA = "x^" + pw(-a), yb = "y^" + pw(b), yB = "y^" + pw(-b);
  std::string zc = "z^" + pw(c), zC = "z^" + pw(-c);
  return parse_word(xa + " " + zc + " " + xA + " " + yb + " " + xa + " " + yB + " " + zC + " " + yb + " " + xA +
                        " " + yB,
                    XYZ);
}

Presentation example2(const Integer& c) {
  std::string C = "[x,y^" + pw(c) + "]";
  return Presentation::split(XY, {parse_word("[x," + C + "]", XY)}, {parse_word("[y," + C + "]", XY)});
}

Word example2_mu(const Integer& c) {
  std::string yc = "y^" + pw(c), yC = "y^" + pw(-c);
  std::string C = "[x," + yc + "]", Ci = "[" + yc + ",x]";
  return parse_word(C + " x " + yc + " x^-1 " + Ci + " x " + C + " " + yC + " " + Ci + " x^-1", XY);
}

CockcroftCertificate certify(const Presentation& p, std::size_t max_degree = kDefaultMaxDegree) {
  auto result = proposition_check(p, max_degree);
  REQUIRE(std::holds_alternative<CockcroftCertificate>(result));
  return std::get<CockcroftCertificate>(result);
}

// Degree-m component of the Magnus image, from the dense oracle.
oracle::Series component(const Word& w, std::size_t m) {
  oracle::Series out;
  for (const auto& [mono, c] : oracle::magnus(w.letters(), m)) {
    if (mono.size() == m) out[mono] = c;
  }
  return out;
}

oracle::Series scaled(oracle::Series s, const Integer& k) {
  for (auto it = s.begin(); it != s.end();) {
    it->second *= k;
    it = it->second == 0 ? s.erase(it) : std::next(it);
  }
  return s;
}

}  // namespace

TEST_CASE("first worked example is certified at degree 2") {
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 3, 5}, {-1, 2, -3}}) {
    auto cert = certify(example1(a, b, c));
    CHECK(cert.n == 2);
    CHECK(cert.rank == 3);
    CHECK(cert.independent);
    CHECK(cert.relator_weights == std::vector<std::size_t>{2, 2, 2});
    CHECK(cert.conclusions.intersection_in_commutators);
    CHECK(cert.conclusions.intersection_in_next_term);
    CHECK(cert.conclusions.model_cockcroft);
    CHECK(oracle::rational_rank(cert.class_matrix) == 3);
  }
  auto cert = certify(example1(1, 1, 1));
  CHECK(cert.class_matrix == IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
}

TEST_CASE("second worked example is certified at degree 3") {
  for (int c : {1, 2, -3}) {
    auto cert = certify(example2(c));
    CHECK(cert.n == 3);
    CHECK(cert.independent);
    CHECK(cert.class_matrix.rows() == 2);
    CHECK(cert.class_matrix.cols() == 2);
    CHECK(oracle::rational_rank(cert.class_matrix) == 2);
  }
}

TEST_CASE("failures of the hypotheses") {
  auto P = [](const std::string& t) { return parse_word(t, XY); };

  auto dep = proposition_check(Presentation::split(XY, {P("[x,y]")}, {P("[x,y^2]")}));
  REQUIRE(std::holds_alternative<PropositionFailure>(dep));
  auto& f = std::get<PropositionFailure>(dep);
  CHECK(failure_kind(f) == "dependent");
  auto& d = std::get<Dependent>(f);
  CHECK(d.n == 2);
  REQUIRE(d.dependency.size() == 2);
  CHECK(std::any_of(d.dependency.begin(), d.dependency.end(), [](const Integer& v) { return v != 0; }));
  for (std::size_t j = 0; j < d.class_matrix.cols(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < 2; ++i) sum += d.dependency[i] * d.class_matrix(i, j);
    CHECK(sum == 0);
  }

  auto uneq = proposition_check(Presentation::split(XY, {P("x")}, {P("[x,y]")}));
  REQUIRE(std::holds_alternative<PropositionFailure>(uneq));
  CHECK(failure_kind(std::get<PropositionFailure>(uneq)) == "unequal_weights");
  CHECK(std::get<UnequalWeights>(std::get<PropositionFailure>(uneq)).weights == std::vector<std::size_t>{1, 2});

  auto deep = proposition_check(Presentation::split(XY, {P("[x,[x,[x,y]]]")}, {P("[y,[x,[x,y]]]")}), 3);
  REQUIRE(std::holds_alternative<PropositionFailure>(deep));
  CHECK(failure_kind(std::get<PropositionFailure>(deep)) == "weight_exceeds_bound");
  CHECK(std::get<WeightExceedsBound>(std::get<PropositionFailure>(deep)).bound == 3);

  CHECK_THROWS(proposition_check(Presentation(XY, {P("[x,y]")})));
}

TEST_CASE("e_class on the first worked example") {
  // The image is abc times the class of [[x,y],z]; compared on the dense
  // Magnus oracle rather than through the Lyndon coordinates.
  auto ref = parse_word("[[x,y],z]", XYZ);
  for (int a : {1, 2, -1}) {
    for (int b : {1, 3}) {
      for (int c : {1, -2, 5}) {
        auto cert = certify(example1(a, b, c));
        auto mu = example1_mu(a, b, c);
        auto image = e_class(mu, 3, cert);
        CHECK(image.target_degree == 3);
        CHECK(image.target_exact);
        CHECK_FALSE(image.vector.is_zero());
        CHECK(component(mu, 3) == scaled(component(ref, 3), Integer(a * b * c)));
        CHECK(image.vector == leading_lie_class(ref, 3).scaled(a * b * c));
      }
    }
  }
}

TEST_CASE("e_class on the second worked example") {
  auto ref = parse_word("[y,[x,[x,y]]]", XY);
  for (int c : {1, 2, 3, -1}) {
    auto cert = certify(example2(c));
    auto mu = example2_mu(c);
    auto image = e_class(mu, 4, cert);
    CHECK(image.target_exact);
    CHECK(component(mu, 4) == scaled(component(ref, 4), Integer(c * c)));
    CHECK(image.vector == leading_lie_class(ref, 4).scaled(c * c));
    std::string coeff = c * c == 1 ? "-" : "-" + std::to_string(c * c) + "*";
    CHECK(image.vector.render(*XY) == coeff + "[x,[[x,y],y]]");
  }
  CHECK(component(parse_word("[y,[x,[x,y]]]", XY), 4) == component(parse_word("[x,[y,[x,y]]]", XY), 4));
}

TEST_CASE("e_class argument errors") {
  auto cert = certify(example1(1, 1, 1));
  auto kind_of = [&](const Word& mu, std::size_t m) {
    try {
      e_class(mu, m, cert);
    } catch (const DetectionError& e) {
      return e.kind();
    }
    FAIL("no error");
    return DetectionError::Kind::IdentityInput;
  };
  CHECK(kind_of(example1_mu(1, 1, 1), 2) == DetectionError::Kind::DegreeNotAboveCertificate);
  CHECK(kind_of(parse_word("[x,y]", XYZ), 3) == DetectionError::Kind::WeightBelowDegree);
  // Above degree 2n - 1 the quotient by [R,S] is no longer guaranteed to vanish.
  CHECK(e_class(parse_word("[[x,y],[y,z]]", XYZ), 4, cert).target_exact == false);
  CHECK(e_class(example1_mu(1, 1, 1), 3, cert).target_exact);
}

TEST_CASE("detect_h3 validates its evidence") {
  auto p = example1(1, 1, 1);
  auto cert = certify(p);
  auto mu = example1_mu(1, 1, 1);
  auto in_r = search_membership(mu, p.r_relators());
  auto in_s = search_membership(mu, p.s_relators());
  REQUIRE(std::holds_alternative<SearchProved>(in_r));
  REQUIRE(std::holds_alternative<SearchProved>(in_s));

  auto det = detect_h3(mu, p, cert, in_r, in_s);
  CHECK(det.detected);
  CHECK(det.weight == 3);
  CHECK(det.image.vector == leading_lie_class(parse_word("[[x,y],z]", XYZ), 3));

  auto kind_of = [&](const Word& w, const MembershipEvidence& r, const MembershipEvidence& s) {
    try {
      detect_h3(w, p, cert, r, s);
    } catch (const DetectionError& e) {
      return kind_name(e.kind());
    }
    return std::string("none");
  };
  CHECK(kind_of(mu, in_r, Unknown{"not searched", {}}) == "missing_evidence");
  CHECK(kind_of(Word(XYZ), in_r, in_s) == "identity_input");
  Witness bogus{{{Word(XYZ), 0, 1}}};
  CHECK(kind_of(mu, Verified{bogus}, in_s) == "invalid_evidence");
  CHECK(kind_of(mu, in_r, in_s) == "none");
}

TEST_CASE("certificate soundness on search-mined members of R and S") {
  // Commutators of conjugates of an r-relator and an s-relator lie in [R,S],
  // so their weight must be at least 2n and their e-image exact.
  std::mt19937 rng(7);
  auto p = example1(1, 1, 1);
  auto cert = certify(p);
  auto rs = p.r_relators();
  auto ss = p.s_relators();
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_word(rng, XYZ, 3);
    auto h = oracle::random_word(rng, XYZ, 3);
    auto mu = commutator(conjugate(rs[0], g), conjugate(ss[trial % 2], h));
    if (mu.is_identity()) continue;
    auto w = lcs_weight(mu, 8);
    REQUIRE(std::holds_alternative<Weight>(w));
    CHECK(std::get<Weight>(w).n >= 2 * cert.n);
    CHECK(e_class(mu, cert.n + 1, cert).vector.is_zero());
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("certificate is invariant under relabelling the parts") {
  auto P = [](const std::string& t) { return parse_word(t, XYZ); };
  auto r = std::vector<Word>{P("[x^2,y]")};
  auto s = std::vector<Word>{P("[y^3,z]"), P("[z^5,x]")};
  auto base = certify(Presentation::split(XYZ, r, s));
  auto swapped = certify(Presentation::split(XYZ, s, r));
  auto permuted = certify(Presentation::split(XYZ, r, {s[1], s[0]}));
  for (const auto& other : {swapped, permuted}) {
    CHECK(other.n == base.n);
    CHECK(other.independent == base.independent);
    CHECK(other.conclusions.model_cockcroft == base.conclusions.model_cockcroft);
    CHECK(oracle::rational_rank(other.class_matrix) == oracle::rational_rank(base.class_matrix));
  }
}
