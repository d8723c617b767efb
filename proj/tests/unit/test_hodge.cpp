#include <gtest/gtest.h>

#include "corpus.hpp"
#include "wonderful/hodge.hpp"
#include "wonderful/kclass.hpp"

namespace wonderful {
namespace {

const HodgePolynomial xy = HodgePolynomial::monomial(1, 1);
const HodgePolynomial one(1);

bool symmetric(const HodgePolynomial& h) {
  for (const auto& [e, c] : h.terms()) {
    if (h.coefficient(e.second, e.first) != c) return false;
  }
  return true;
}

TEST(HodgeTargets, Builtins) {
  EXPECT_EQ(hodge_projective(2), one + xy + xy * xy);
  EXPECT_EQ(hodge_affine(3), xy.pow(3));
  EXPECT_EQ(hodge_projective(0), one);
}

TEST(RealizeHodge, Examples) {
  const KPolynomial T = KPolynomial::first_var(), L = KPolynomial::second_var();
  const HodgePolynomial p1 = one + xy;
  EXPECT_EQ(realize_hodge(T * T + T * L, p1), p1 * p1 + p1 * xy);
  EXPECT_EQ(realize_hodge(KPolynomial(1), hodge_projective(5)), one);
  EXPECT_EQ(realize_hodge(T - KPolynomial(1), hodge_projective(2)), xy + xy * xy);
}

TEST(WonderfulHodge, Examples) {
  const HodgePolynomial p2 = hodge_projective(2);
  EXPECT_EQ(wonderful_hodge(builtin_graph("complete:2"), 2, p2), p2 * p2 + p2 * xy);
  const HodgePolynomial p1 = hodge_projective(1);
  EXPECT_EQ(wonderful_hodge(builtin_graph("complete:3"), 1, p1), p1.pow(3) + p1 * xy);
  // a point target is evaluated formally
  const Graph k2 = builtin_graph("complete:2");
  EXPECT_EQ(wonderful_hodge(k2, 2, one), one + xy);
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(wonderful_hodge(builtin_graph("complete:2"), 2, hodge_projective(2))),
            BigInt(12));
  EXPECT_EQ(euler_characteristic(realize_hodge(conf_class(builtin_graph("complete:3")),
                                               hodge_projective(1))),
            BigInt(0));
  EXPECT_EQ(euler_characteristic(one), BigInt(1));
}

TEST(WonderfulHodge, FactorsThroughTheGrothendieckClass) {
  for (const auto& ng : testing::standard_corpus()) {
    for (int d : {1, 2, 3, 4}) {
      const KPolynomial k = wonderful_class(ng.graph, d).wonderful_class;
      std::vector<HodgePolynomial> targets{hodge_projective(1), hodge_projective(2),
                                           hodge_projective(d)};
      for (long long u : {2, 3, 7}) targets.push_back(one + HodgePolynomial(u) * xy);
      for (const auto& eX : targets) {
        EXPECT_EQ(wonderful_hodge(ng.graph, d, eX), realize_hodge(k, eX))
            << ng.name << " d=" << d << " eX=" << eX.to_string();
      }
    }
  }
}

TEST(WonderfulHodge, EulerMatchesClassAtProjectiveTarget) {
  for (const auto& ng : testing::standard_corpus()) {
    for (int d = 1; d <= 4; ++d) {
      const KPolynomial k = wonderful_class(ng.graph, d).wonderful_class;
      EXPECT_EQ(euler_characteristic(realize_hodge(k, hodge_projective(d))), k.evaluate(d + 1, 1))
          << ng.name;
    }
  }
}

TEST(WonderfulHodge, SymmetryIsPreserved) {
  const HodgePolynomial asym = one + HodgePolynomial::monomial(1, 0) + xy;
  ASSERT_FALSE(symmetric(asym));
  for (const auto& ng : testing::standard_corpus()) {
    for (int d = 1; d <= 3; ++d) {
      EXPECT_TRUE(symmetric(wonderful_hodge(ng.graph, d, hodge_projective(d)))) << ng.name;
      EXPECT_TRUE(symmetric(wonderful_hodge(ng.graph, d, hodge_affine(d)))) << ng.name;
    }
  }
}

TEST(VerifyHodgeIdentity, FactorizationAndIndexing) {
  const auto k2 = verify_hodge_identity(builtin_graph("complete:2"), 2, hodge_projective(2));
  EXPECT_TRUE(k2.required_passed());
  const auto k3 = verify_hodge_identity(builtin_graph("complete:3"), 2, hodge_projective(1));
  EXPECT_TRUE(k3.required_passed());
  bool literal_failed = false;
  for (const auto& c : k3.checks) {
    if (c.variant == IdentityVariant::NestIndexed) {
      EXPECT_FALSE(c.required);
      literal_failed = literal_failed || !c.passed();
    }
  }
  EXPECT_TRUE(literal_failed);
}

}  // namespace
}  // namespace wonderful
