#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace polymat;
using namespace fixtures;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::empty_input;
}

std::vector<std::size_t> block_sizes(const HypergraphProfile& p) {
  std::vector<std::size_t> out;
  for (const auto& b : p.blocks.blocks()) out.push_back(b.size());
  return out;
}

} // namespace

TEST(Profile, SixThree) {
  const auto p = hypergraph_profile(hyper_6_3());
  EXPECT_EQ(p.degree, 3u);
  EXPECT_EQ(p.block_count, 3u);
  EXPECT_EQ(p.block_size, 2u);
  EXPECT_TRUE(p.complete);
  EXPECT_TRUE(p.balanced);
}

TEST(Profile, NineThree) {
  const auto p = hypergraph_profile(hyper_9_3());
  EXPECT_EQ(p.degree, 3u);
  EXPECT_EQ(p.block_count, 3u);
  EXPECT_EQ(p.block_size, 3u);
  EXPECT_TRUE(p.complete && p.balanced);
}

TEST(Profile, SixTwo) {
  const auto p = hypergraph_profile(hyper_6_2());
  EXPECT_EQ(p.degree, 2u);
  EXPECT_EQ(p.block_count, 3u);
  EXPECT_EQ(p.block_size, 2u);
  EXPECT_TRUE(p.complete && p.balanced);
}

TEST(Profile, CompleteButUnbalanced) {
  const auto I = ideal("x1*x2, x1*x3", 3);
  const auto p = hypergraph_profile(I);
  EXPECT_EQ(block_sizes(p), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(p.complete);
  EXPECT_FALSE(p.balanced);
  EXPECT_FALSE(p.block_size);
  EXPECT_FALSE(is_unmixed(I));
}

TEST(Profile, IncompleteWhenATransversalIsMissing) {
  // Four singleton blocks, and x2*x3*x4 is missing.
  const auto I = ideal("x1*x2*x3, x1*x2*x4, x1*x3*x4", 4);
  ASSERT_TRUE(is_matroidal(I));
  const auto p = hypergraph_profile(I);
  EXPECT_EQ(p.block_count, 4u);
  EXPECT_TRUE(p.balanced);
  EXPECT_FALSE(p.complete);
  EXPECT_FALSE(is_unmixed(I));
}

TEST(Profile, PartitionWithADoubleBlock) {
  // x3*x4 divides no generator, so x3 and x4 share a block.
  const auto I = ideal("x1*x2, x1*x3, x1*x4, x2*x3, x2*x4", 4);
  ASSERT_TRUE(is_matroidal(I));
  const auto p = hypergraph_profile(I);
  EXPECT_EQ(block_sizes(p), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_TRUE(p.complete);
  EXPECT_FALSE(p.balanced);
}

TEST(Profile, Errors) {
  EXPECT_EQ(code_of([] { hypergraph_profile(e1()); }), errc::not_matroidal);
  EXPECT_EQ(code_of([] { hypergraph_profile(ideal("x1*x2", 3)); }), errc::not_fully_supported);
}

TEST(Classify, E1IsCaseTwo) {
  const auto c = classify_unmixed_polymatroidal(e1());
  ASSERT_TRUE(std::holds_alternative<PrimePowerProduct>(c));
  EXPECT_EQ(case_label(c), "ii");
  EXPECT_EQ(tag(c), "prime-power-product");
  EXPECT_EQ(std::get<PrimePowerProduct>(c).factors,
            (std::vector<PrimePowerComponent>{{prime({1, 2}), 2}, {prime({3, 4}), 1}}));
  EXPECT_EQ(reconstruct(c, 4), e1());
}

TEST(Classify, E2IsCaseThree) {
  const auto c = classify_unmixed_polymatroidal(e2());
  ASSERT_TRUE(std::holds_alternative<PrimePowerTimesMatroidal>(c));
  EXPECT_EQ(case_label(c), "iii");
  const auto& cert = std::get<PrimePowerTimesMatroidal>(c);
  EXPECT_EQ(cert.factors, (std::vector<PrimePowerComponent>{{prime({1, 2}), 2}}));
  EXPECT_EQ(cert.matroidal_factor, e2_tail());
  EXPECT_EQ(cert.factors[0].exponent + *equigenerated_degree(cert.matroidal_factor), 4u);
  EXPECT_EQ(reconstruct(c, 5), e2());
}

TEST(Classify, MixedWitness) {
  const auto c = classify_unmixed_polymatroidal(ideal("x1^2, x1*x2", 2));
  ASSERT_TRUE(std::holds_alternative<NotUnmixed>(c));
  const auto& w = std::get<NotUnmixed>(c);
  EXPECT_EQ(w.lower, prime({1}));
  EXPECT_EQ(w.higher, prime({1, 2}));
  EXPECT_EQ(case_label(c), "");
  EXPECT_FALSE(reconstruct(c, 2));
}

TEST(Classify, MaximalPower) {
  const auto c = classify_unmixed_polymatroidal(maximal_ideal_power(3, 2));
  ASSERT_TRUE(std::holds_alternative<MaximalPower>(c));
  EXPECT_EQ(std::get<MaximalPower>(c).degree, 2u);
  EXPECT_EQ(case_label(c), "i");
}

TEST(Classify, DegreeOneIsPrimePowerProduct) {
  const auto c = classify_unmixed_polymatroidal(ideal("x1, x2, x3", 3));
  ASSERT_TRUE(std::holds_alternative<PrimePowerProduct>(c));
  EXPECT_EQ(std::get<PrimePowerProduct>(c).factors, (std::vector<PrimePowerComponent>{{prime({1, 2, 3}), 1}}));
}

TEST(Classify, UnmixedMatroidalSingleComponent) {
  const auto c = classify_unmixed_polymatroidal(hyper_6_2());
  ASSERT_TRUE(std::holds_alternative<UnmixedMatroidal>(c));
  const auto& cert = std::get<UnmixedMatroidal>(c);
  EXPECT_EQ(case_label(c), "iv");
  ASSERT_EQ(cert.components.size(), 1u);
  EXPECT_EQ(cert.components[0].variables.size(), 6u);
  EXPECT_EQ(cert.components[0].profile.block_size, 2u);
  EXPECT_EQ(reconstruct(c, 6), hyper_6_2());
}

TEST(Classify, ProductOfDisjointPrimesSplitsPerPrime) {
  // (x1,x2)(x3,x4)(x5,x6): its associated primes are the three factors.
  const auto c = classify_unmixed_polymatroidal(hyper_6_3());
  ASSERT_TRUE(std::holds_alternative<UnmixedMatroidal>(c));
  const auto& cert = std::get<UnmixedMatroidal>(c);
  EXPECT_TRUE(cert.profile.complete && cert.profile.balanced);
  ASSERT_EQ(cert.components.size(), 3u);
  for (const auto& comp : cert.components) EXPECT_EQ(comp.profile.degree, 1u);
  EXPECT_EQ(reconstruct(c, 6), hyper_6_3());
}

TEST(Classify, UnmixedMatroidalOnDisjointSupports) {
  const auto I = multiply(ideal("x1*x2, x1*x3, x2*x3", 5), ideal("x4, x5", 5));
  const auto c = classify_unmixed_polymatroidal(I);
  ASSERT_TRUE(std::holds_alternative<UnmixedMatroidal>(c));
  const auto& cert = std::get<UnmixedMatroidal>(c);
  EXPECT_FALSE(cert.profile.complete && cert.profile.balanced);
  ASSERT_EQ(cert.components.size(), 2u);
  EXPECT_EQ(cert.components[0].variables, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(cert.components[1].variables, (std::vector<std::size_t>{3, 4}));
  for (const auto& comp : cert.components) EXPECT_TRUE(comp.profile.complete && comp.profile.balanced);
  EXPECT_EQ(reconstruct(c, 5), I);
}

TEST(Classify, Errors) {
  EXPECT_EQ(code_of([] { classify_unmixed_polymatroidal(ideal("x1^2, x2^2", 2)); }), errc::not_polymatroidal);
  EXPECT_EQ(code_of([] { classify_unmixed_polymatroidal(ideal("x1*x2", 3)); }), errc::not_fully_supported);
}

TEST(Classify, DegreeTwoUnmixedIsMatroidalOrMaximal) {
  PolymatroidalSampler sampler(41, {2, 5, 2, 80});
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto I = sampler.next_fully_supported();
    if (equigenerated_degree(I) != 2u) continue;
    const auto c = classify_unmixed_polymatroidal(I);
    if (std::holds_alternative<NotUnmixed>(c)) continue;
    ++seen;
    EXPECT_TRUE(std::holds_alternative<UnmixedMatroidal>(c) || std::holds_alternative<MaximalPower>(c))
        << format_ideal(I);
  }
  EXPECT_GT(seen, 0);
}

TEST(CohenMacaulay, Examples) {
  EXPECT_TRUE(is_cohen_macaulay(maximal_ideal_power(3, 2)));
  EXPECT_EQ(cm_shape(maximal_ideal_power(3, 2)), CmShape::veronese);
  EXPECT_TRUE(is_cohen_macaulay(ideal("x1*x2, x1*x3, x2*x3", 3)));
  EXPECT_EQ(cm_shape(ideal("x1*x2, x1*x3, x2*x3", 3)), CmShape::squarefree_veronese);
  EXPECT_FALSE(is_cohen_macaulay(e1()));
  EXPECT_EQ(cm_shape(ideal("x1^2*x2", 2)), CmShape::principal);
}

TEST(CohenMacaulay, AmbiguousVeroneseTypeFlag) {
  // Caps (2,1,1): a squarefree Veronese type reading would differ here.
  const auto I = construct_veronese_type({2, {2, 1, 1}}, 3);
  EXPECT_TRUE(is_ambiguous_squarefree_veronese_type(I));
  EXPECT_FALSE(is_ambiguous_squarefree_veronese_type(squarefree_veronese(4, 2)));
  EXPECT_FALSE(is_ambiguous_squarefree_veronese_type(maximal_ideal_power(3, 2)));
  EXPECT_EQ(veronese_type_caps(I), (std::vector<unsigned>{2, 1, 1}));
  EXPECT_FALSE(veronese_type_caps(e1()));
}

TEST(CohenMacaulay, RejectsNonPolymatroidal) {
  EXPECT_EQ(code_of([] { is_cohen_macaulay(ideal("x1^2, x2^2", 2)); }), errc::not_polymatroidal);
}

TEST(CodimOne, Examples) {
  EXPECT_TRUE(is_connected_in_codim_one(ideal("x1*x2, x1*x3, x2*x3", 3)));
  EXPECT_FALSE(is_connected_in_codim_one(e1()));
  EXPECT_TRUE(is_connected_in_codim_one(power(ideal("x1, x2", 2), 3)));
  // Only (x1) is minimal here; the embedded prime does not count.
  EXPECT_TRUE(is_connected_in_codim_one(ideal("x1^2, x1*x2", 2)));
  EXPECT_TRUE(is_connected_in_codim_one(ideal("x1*x2, x3*x4", 4)));
  EXPECT_FALSE(is_connected_in_codim_one(ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4)));
}

TEST(CodimOne, MatchesCohenMacaulayOnFixtures) {
  for (const auto& I : {e1(), e2(), hyper_6_3(), hyper_6_2(), squarefree_veronese(5, 3), maximal_ideal_power(3, 3)})
    EXPECT_EQ(is_connected_in_codim_one(I), is_cohen_macaulay(I)) << format_ideal(I);
}

TEST(HeightBounds, SixThree) {
  const auto r = height_bounds_report(hyper_6_3());
  EXPECT_EQ(r.lower_numerator, 2u);
  EXPECT_EQ(r.lower_denominator, 1u);
  EXPECT_EQ(r.upper, 4u);
  EXPECT_EQ(r.actual, 2u);
  EXPECT_EQ(r.predicted, 2u);
  EXPECT_TRUE(r.lower_equality);
  EXPECT_TRUE(r.is_disjoint_prime_product);
  EXPECT_FALSE(r.upper_equality);
  EXPECT_TRUE(r.within_bounds() && r.tags_consistent());
}

TEST(HeightBounds, SixTwo) {
  const auto r = height_bounds_report(hyper_6_2());
  EXPECT_EQ(r.actual, 4u);
  EXPECT_EQ(r.predicted, 4u);
  EXPECT_EQ(r.upper, 5u);
  EXPECT_EQ(r.lower_numerator, 3u);
  EXPECT_FALSE(r.lower_equality || r.upper_equality);
}

TEST(HeightBounds, SquarefreeVeroneseMeetsUpperBound) {
  const auto I = squarefree_veronese(4, 2);
  const auto r = height_bounds_report(I);
  EXPECT_EQ(r.actual, 3u);
  EXPECT_TRUE(r.upper_equality);
  EXPECT_TRUE(r.is_squarefree_veronese);
  for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(support(colon(I, Monomial::variable(4, x))).size(), 3u);
}

TEST(HeightBounds, RationalLowerBound) {
  const auto r = height_bounds_report(squarefree_veronese(5, 2));
  EXPECT_EQ(r.lower_numerator, 5u);
  EXPECT_EQ(r.lower_denominator, 2u);
}

TEST(HeightBounds, Errors) {
  EXPECT_EQ(code_of([] { height_bounds_report(e1()); }), errc::not_matroidal);
  EXPECT_EQ(code_of([] { height_bounds_report(ideal("x1*x2, x1*x3", 3)); }), errc::mixed);
}
