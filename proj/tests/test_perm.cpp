#include <doctest.h>

#include <random>
#include <set>

#include "lsiso/errors.hpp"
#include "lsiso/perm.hpp"
#include "oracle.hpp"

using namespace lsiso;

TEST_CASE("parse_cycles") {
  auto c = parse_cycles("(123456)", 6);
  for (int i = 1; i <= 6; ++i) CHECK(c(i) == i % 6 + 1);
  CHECK(parse_cycles("", 4).is_identity());
  auto n = parse_cycles("(12)(34)(56)(78)", 8);
  CHECK(n.images() == std::vector<int>{2, 1, 4, 3, 6, 5, 8, 7});
  CHECK(parse_cycles("(1 10)(2,3)", 10)(10) == 1);
  CHECK(parse_cycles("(2,3)", 10)(3) == 2);
  CHECK_THROWS_AS(parse_cycles("(17)", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("(121)", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("(12)(23)", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("(12", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("12)", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("((12))", 6), ParseError);
}

TEST_CASE("cycle notation round trip") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    int d = 1 + t % 12;
    auto p = oracle::random_permutation(rng, d);
    CHECK(parse_cycles(p.str() == "(1)" ? "" : p.str(), d) == p);
  }
  CHECK(Permutation(3).str() == "(1)");
}

TEST_CASE("compose, inverse, apply") {
  auto a = parse_cycles("(12)", 3), b = parse_cycles("(23)", 3);
  CHECK(compose(a, b) == parse_cycles("(123)", 3));
  auto s = parse_cycles("(135)(246)", 6);
  CHECK(apply(s, 1) == 3);
  CHECK(compose(s, inverse(s)).is_identity());
  CHECK_THROWS_AS(compose(a, Permutation(4)), DomainError);
  CHECK_THROWS_AS(apply(a, 4), DomainError);
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(parse_cycles("(123456)", 6)).partition.str() == "6");
  auto ct = cycle_type(parse_cycles("(12)(34)(56)(78)", 8));
  CHECK(ct.partition.str() == "2^4");
  CHECK(ct.counts[1] == 4);
  CHECK(cycle_type(Permutation(4)).partition.str() == "1^4");
}

TEST_CASE("generate") {
  auto D6 = generate({parse_cycles("(123456)", 6), parse_cycles("(13)(46)", 6)}, 6);
  CHECK(D6.order() == 12);
  std::set<std::string> listed{"(1)", "(123456)", "(135)(246)", "(14)(25)(36)", "(153)(264)", "(165432)",
                               "(13)(46)", "(15)(24)", "(26)(35)", "(12)(36)(45)", "(14)(23)(56)", "(16)(25)(34)"};
  std::set<std::string> got;
  for (auto& e : D6.elements()) got.insert(e.str());
  CHECK(got == listed);
  CHECK(generate({parse_cycles("(1234)", 4), parse_cycles("(13)", 4)}, 4).order() == 8);
  CHECK(generate({}, 5).order() == 1);
  CHECK(symmetric_group(5).order() == 120);
  CHECK_THROWS_AS(generate({parse_cycles("(12)", 3), parse_cycles("(123)", 3)}, 3, 5), CapExceeded);
  CHECK(std::is_sorted(D6.elements().begin(), D6.elements().end()));
}

TEST_CASE("closure and Lagrange on random groups") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    int d = 2 + t % 5;
    auto W = oracle::random_subgroup(rng, d);
    if (W.order() > 200) continue;
    CHECK(factorial(d) % W.order() == 0);
    for (auto& a : W.elements()) {
      CHECK(W.contains(inverse(a)));
      for (auto& b : W.elements()) CHECK(W.contains(compose(a, b)));
    }
    for (auto& g : W.generators()) CHECK(W.contains(g));
  }
}

TEST_CASE("conjugacy classes") {
  auto K = generate({parse_cycles("(12)(34)", 4), parse_cycles("(13)(24)", 4)}, 4);
  CHECK(conjugacy_classes(K).size() == 4);
  CHECK(conjugacy_classes(trivial_group(3)).size() == 1);
  auto D6 = generate({parse_cycles("(123456)", 6), parse_cycles("(13)(46)", 6)}, 6);
  auto cls = conjugacy_classes(D6);
  CHECK(cls.size() == 6);
  CHECK(cls.front().representative.is_identity());
  // against brute-force conjugation
  std::size_t total = 0;
  for (auto& c : cls) {
    std::set<Permutation> orbit;
    for (auto& g : D6.elements()) orbit.insert(compose(compose(g, c.representative), inverse(g)));
    CHECK(orbit == std::set<Permutation>(c.members.begin(), c.members.end()));
    for (auto& m : c.members) CHECK(cycle_type(m).partition == c.cycle_type.partition);
    total += c.members.size();
  }
  CHECK(total == 12);
}

TEST_CASE("elements_of_cycle_type") {
  auto N = generate({parse_cycles("(12)(34)(56)(78)", 8), parse_cycles("(13)(24)(57)(68)", 8)}, 8);
  CHECK(elements_of_cycle_type(N, Partition({2, 2, 2, 2})).size() == 3);
  auto id = elements_of_cycle_type(N, Partition(std::vector<int>(8, 1)));
  REQUIRE(id.size() == 1);
  CHECK(id[0].is_identity());
  auto D6 = generate({parse_cycles("(123456)", 6), parse_cycles("(13)(46)", 6)}, 6);
  auto six = elements_of_cycle_type(D6, Partition({6}));
  REQUIRE(six.size() == 2);
  CHECK(six[0].str() == "(123456)");
  CHECK(six[1].str() == "(165432)");
}

TEST_CASE("young_subgroup") {
  auto Y = young_subgroup(Partition({4, 2}), 6);
  CHECK(Y.order() == 48);
  for (auto& y : Y.elements())
    for (int i = 1; i <= 4; ++i) CHECK(y(i) <= 4);
  CHECK(young_subgroup(Partition({1, 1, 1}), 3).order() == 1);
  CHECK(young_subgroup(Partition({5}), 5).order() == 120);
  CHECK(young_subgroup(Partition({3, 3, 2}), 8).order() == 72);
}

TEST_CASE("one_dim_characters") {
  auto K = generate({parse_cycles("(12)(34)", 4), parse_cycles("(13)(24)", 4)}, 4);
  auto chars = one_dim_characters(K);
  REQUIRE(chars.size() == 4);
  CHECK(chars[0].is_unit());
  std::set<std::string> kernels;
  for (auto& c : chars) {
    std::string k;
    for (auto& p : c.kernel()) k += p.str();
    kernels.insert(k);
  }
  CHECK(kernels.count("(1)(12)(34)"));
  CHECK(kernels.count("(1)(13)(24)"));
  CHECK(kernels.count("(1)(14)(23)"));
  auto triv = one_dim_characters(trivial_group(3));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].is_unit());
  auto D6 = generate({parse_cycles("(123456)", 6), parse_cycles("(13)(46)", 6)}, 6);
  auto dc = one_dim_characters(D6);
  CHECK(dc.size() == 4);
  for (auto& c : dc) CHECK(c.order() <= 2);
  auto C5 = generate({parse_cycles("(12345)", 5)}, 5);
  auto cc = one_dim_characters(C5);
  CHECK(cc.size() == 5);
  CHECK(cc.back().order() == 5);
}

TEST_CASE("character properties against the commutator subgroup") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    int d = 2 + t % 5;
    auto W = oracle::random_subgroup(rng, d);
    if (W.order() > 100) continue;
    auto chars = one_dim_characters(W);
    CHECK(chars.size() == W.order() / oracle::commutator_subgroup(W).order());
    for (auto& c : chars) {
      CHECK(c.exponent(Permutation(d)) == 0);
      for (auto& a : W.elements())
        for (auto& b : W.elements())
          CHECK(c.exponent(compose(a, b)) == (c.exponent(a) + c.exponent(b)) % c.order());
      for (auto& cl : W.classes())
        for (auto& m : cl.members) CHECK(c.exponent(m) == c.exponent(cl.representative));
    }
  }
}

TEST_CASE("sign_product_character") {
  auto u = sign_product_character(Partition({2, 2}), {false, false});
  CHECK(u.is_unit());
  auto th = sign_product_character(Partition({2, 2}), {true, false});
  CHECK(th.exponent(parse_cycles("(12)", 4)) == 1);
  CHECK(th.exponent(parse_cycles("(34)", 4)) == 0);
  auto t33 = sign_product_character(Partition({3, 3}), {true, true});
  CHECK(t33.exponent(parse_cycles("(123)(456)", 6)) == 0);
  CHECK(t33.exponent(parse_cycles("(12)(456)", 6)) == 1);
  CHECK_THROWS_AS(sign_product_character(Partition({2, 2}), {true}), DomainError);
}

TEST_CASE("chi_e") {
  auto S3 = symmetric_group(3);
  auto A3 = generate({parse_cycles("(123)", 3)}, 3);
  auto e = chi_e(S3, A3);
  for (auto& s : S3.elements()) CHECK(e.exponent(s) == sign_exponent(s));
  auto K = generate({parse_cycles("(12)(34)", 4), parse_cycles("(13)(24)", 4)}, 4);
  auto D4 = generate({parse_cycles("(1234)", 4), parse_cycles("(13)", 4)}, 4);
  auto ce = chi_e(D4, K);
  std::set<std::string> minus;
  for (auto& s : D4.elements())
    if (ce.exponent(s)) minus.insert(s.str());
  CHECK(minus == std::set<std::string>{"(13)", "(24)", "(1234)", "(1432)"});
  auto C2 = generate({parse_cycles("(12)", 3)}, 3);
  CHECK_THROWS_AS(chi_e(S3, C2), DomainError);
  CHECK_THROWS_AS(chi_e(S3, S3), DomainError);
}
