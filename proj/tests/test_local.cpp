#include <gtest/gtest.h>

#include <random>

#include "curvetwist/two_lines.hpp"

using namespace curvetwist;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

AffineMap map_of(const char* p0, const char* p1, const char* p2) { return {{P(p0), P(p1), P(p2)}}; }

std::vector<Rational> values(const std::vector<RationalFunction>& v) { return constant_values(v); }

const std::vector<int> kExpectedMultiplicity = {1, 2, 2, 3, 4, 1, 2, 2};
const std::vector<int> kExpectedCase = {1, 2, 3, 4, 5, 6, 7, 7};

AffineMap random_degree2_map(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  auto lin = [&] {
    Polynomial p = P("x") * Rational(c(rng)) + P("y") * Rational(c(rng)) + P("x^2") * Rational(c(rng)) +
                   P("y^2") * Rational(c(rng));
    return p;
  };
  return {{P("1 + x^2 + y^2") + P("x") * Rational(c(rng)) * Rational(1, 4), lin(), lin()}};
}

}  // namespace

TEST(ContactSequence, Examples) {
  auto ex5 = map_of("1 + x^2 + y^2", "2*x + y", "4*x^2 + y^2");
  auto d = values(contact_sequence(ex5, Branch::X));
  EXPECT_EQ(d.at(0), 0);
  EXPECT_EQ(d.at(1), 2);
  auto e = values(contact_sequence(ex5, Branch::Y));
  EXPECT_EQ(e.at(0), 0);
  EXPECT_EQ(e.at(1), 2);
  EXPECT_EQ(d, e);

  auto ex1 = map_of("1 + x^2 + y^2", "2*x + 4*y", "2*x^2 + 3*x + y^2");
  EXPECT_EQ(values(contact_sequence(ex1, Branch::X, 1)).at(0), Rational(3, 2));
  EXPECT_EQ(values(contact_sequence(ex1, Branch::Y, 1)).at(0), 0);
}

TEST(ContactSequence, Errors) {
  EXPECT_THROW(contact_sequence(map_of("x^2 + y^2", "x + y", "x^2"), Branch::X), DomainError);
  EXPECT_THROW(contact_sequence(map_of("1 + x^2", "x^2 + y", "x"), Branch::X), DomainError);
  EXPECT_THROW(contact_sequence(map_of("1", "x", "y"), Branch::X, 4), DomainError);
}

TEST(ContactSequence, InvariantUnderRescaling) {
  std::mt19937 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    AffineMap m = random_degree2_map(rng);
    Rational lambda(trial - 15 == 0 ? 7 : trial - 15, 3);
    lambda.canonicalize();
    for (Branch b : {Branch::X, Branch::Y}) {
      try {
        auto base = values(contact_sequence(m, b));
        EXPECT_EQ(values(contact_sequence(m.scaled(lambda), b)), base);
        ++checked;
      } catch (const DomainError&) {
      }
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(IntersectionMultiplicity, Examples) {
  EXPECT_EQ(intersection_multiplicity_origin(map_of("1 + x^2 + y^2", "2*x + 4*y", "2*x^2 + 3*x + y^2")), 1);
  EXPECT_EQ(intersection_multiplicity_origin(map_of("1 + x^2 + y^2", "3/2*x + 2*y", "3*x^2 + y^2")), 2);
  EXPECT_EQ(intersection_multiplicity_origin(map_of("1 + x^2 + y^2", "2*x + y", "4*x^2 + y^2")), 4);
}

TEST(IntersectionMultiplicity, AppendixMapsMatchTheirTables) {
  auto examples = fixtures::appendix();
  auto tables = fixtures::tables();
  ASSERT_EQ(examples.size(), 8u);
  for (std::size_t i = 0; i < examples.size(); ++i) {
    int m = intersection_multiplicity_origin(AffineMap{examples[i].map});
    EXPECT_EQ(m, kExpectedMultiplicity[i]) << examples[i].id;
    // the origin's local factor is a conjugate of s_k^(2m)
    bool found = false;
    for (const auto& w : tables.at(examples[i].table).factorization.factors) found = found || w.exponent_sum() == 2 * m;
    EXPECT_TRUE(found) << examples[i].id;
  }
}

TEST(SymbolicConditions, ProportionalToPrintedExpressions) {
  auto s = symbolic_conditions_degree2();
  auto printed = fixtures::conditions();
  for (int i = 0; i < 3; ++i) {
    RationalFunction p(printed.conditions[i]);
    EXPECT_TRUE(proportional_up_to_monomials(s.differences[i], p)) << i << ": " << s.differences[i];
    EXPECT_TRUE(proportional_up_to_monomials(s.reduced[i], reduce_like(s, p, i))) << i;
  }
  EXPECT_TRUE(proportional(s.numerators[0], printed.conditions[0]));
  // exact ratios with the earlier conditions eliminated
  auto ratio = [&](int i) { return s.reduced[i] / reduce_like(s, RationalFunction(printed.conditions[i]), i); };
  EXPECT_TRUE(proportional_up_to_monomials(ratio(1), RationalFunction(P("1"), Polynomial::parse("b01^3*b10^3", degree2_symbols()))));
  EXPECT_TRUE(proportional_up_to_monomials(ratio(2), RationalFunction(P("1"), Polynomial::parse("b01^5*b10^5", degree2_symbols()))));
}

TEST(SymbolicConditions, VanishingPatternOnAppendixMaps) {
  auto s = symbolic_conditions_degree2();
  auto printed = fixtures::conditions();
  for (const auto& ex : fixtures::appendix()) {
    AffineMap m{ex.map};
    auto coeffs = degree2_coefficients(m);
    auto r = contact_report(m);
    for (int i = 0; i < 3; ++i) {
      Rational value = s.differences[i].substitute_values(coeffs).constant_value();
      EXPECT_EQ(value, r.d[i] - r.e[i]) << ex.id << " i=" << i + 1;
      bool vanishes = printed.conditions[i].evaluate_all(coeffs) == 0;
      EXPECT_EQ(vanishes, r.d[i] == r.e[i]) << ex.id << " i=" << i + 1;
    }
  }
}

TEST(ClassifyTwoLines, Examples) {
  auto ex1 = classify_two_lines(map_of("1 + x^2 + y^2", "2*x + 4*y", "2*x^2 + 3*x + y^2"));
  EXPECT_EQ(ex1.case_id, 1);
  EXPECT_EQ(ex1.real_multiplicities(), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(ex1.reference_table, "4m1");
  EXPECT_EQ(ex1.reference.size(), 8u);

  auto ex5 = classify_two_lines(map_of("1 + x^2 + y^2", "2*x + y", "4*x^2 + y^2"));
  EXPECT_EQ(ex5.case_id, 5);
  EXPECT_EQ(ex5.reference_table, "1m4");

  auto ex7 = classify_two_lines(map_of("1 + x^2 + y^2", "3*x + y + 2*x^2 - y^2", "3*x + y - 2*x^2 + y^2"));
  EXPECT_EQ(ex7.case_id, 7);
  EXPECT_EQ(ex7.real_multiplicities(), (std::vector<int>{2}));
  EXPECT_EQ(ex7.complex_multiplicities, (std::vector<int>{1, 1}));
  EXPECT_EQ(ex7.reference_variants, (std::vector<std::string>{"1m2-a", "1m2-b"}));
}

TEST(ClassifyTwoLines, AppendixCasesAndOriginConsistency) {
  auto examples = fixtures::appendix();
  auto tables = fixtures::tables();
  for (std::size_t i = 0; i < examples.size(); ++i) {
    auto c = classify_two_lines(AffineMap{examples[i].map});
    EXPECT_EQ(c.case_id, kExpectedCase[i]) << examples[i].id;
    EXPECT_TRUE(c.origin_consistent()) << examples[i].id;
    EXPECT_EQ(c.origin_multiplicity, kExpectedMultiplicity[i]);
    EXPECT_NE(std::find(c.reference_variants.begin(), c.reference_variants.end(), examples[i].table),
              c.reference_variants.end())
        << examples[i].id;
    EXPECT_EQ(c.reference.factors, tables.at(c.reference_table).factorization.factors);
    for (int k = 0; k < 2; ++k) {
      int matches = 0;
      for (const auto& f : examples[i].image_factors) matches += proportional(dehomogenize(c.conics[k]), f);
      EXPECT_EQ(matches, 1);
    }
    // every real point lies on both conics
    for (const auto& p : c.real_points) {
      if (!p.exact_x) continue;
      for (const auto& conic : c.conics)
        EXPECT_EQ(dehomogenize(conic).evaluate_all({{"x", *p.exact_x}, {"y", *p.exact_y}}), 0);
    }
  }
}

TEST(ClassifyTwoLines, MultiplicitiesSumToFour) {
  std::mt19937 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    AffineMap m = random_degree2_map(rng);
    TwoLinesClassification c;
    try {
      c = classify_two_lines(m);
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    int total = 0;
    for (int x : c.real_multiplicities()) total += x;
    for (int x : c.complex_multiplicities) total += x;
    EXPECT_EQ(total, 4);
    EXPECT_EQ(c.resultant.total_degree(), 4);
    EXPECT_TRUE(c.origin_consistent());
  }
  EXPECT_GT(checked, 20);
}

TEST(ClassifyTwoLines, Errors) {
  // x-axis image is a line
  EXPECT_THROW(classify_two_lines(map_of("1 + x^2 + y^2", "x", "x + y^2")), Error);
  EXPECT_EQ(case_from_real_multiplicities({3}), 0);
  EXPECT_EQ(case_from_real_multiplicities({2, 1, 1}), 2);
}
