#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

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

BlockPartition blocks_of(std::initializer_list<std::initializer_list<std::size_t>> one_based) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : one_based) {
    out.emplace_back();
    for (auto v : b) out.back().push_back(v - 1);
  }
  return BlockPartition(std::move(out));
}

} // namespace

TEST(Polymatroidal, Examples) {
  EXPECT_TRUE(is_polymatroidal(e1()));
  EXPECT_FALSE(is_polymatroidal(ideal("x1^2, x2^2", 2)));
  for (unsigned d = 1; d <= 3; ++d) EXPECT_TRUE(is_polymatroidal(maximal_ideal_power(4, d)));
}

TEST(Polymatroidal, ExchangeWitness) {
  const auto v = find_exchange_violation(ideal("x1^2, x2^2", 2));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->u, mono("x1^2", 2));
  EXPECT_EQ(v->v, mono("x2^2", 2));
  EXPECT_EQ(v->i, 0u);
  EXPECT_FALSE(find_exchange_violation(e1()));
}

TEST(Polymatroidal, MixedDegreesAreNot) { EXPECT_FALSE(is_polymatroidal(ideal("x1, x2^2", 2))); }

TEST(Polymatroidal, RejectsZero) { EXPECT_EQ(code_of([] { is_polymatroidal(MonomialIdeal(2)); }), errc::not_proper); }

TEST(Matroidal, Examples) {
  EXPECT_TRUE(is_matroidal(ideal("x3*x4, x3*x5, x4*x5", 5)));
  EXPECT_FALSE(is_matroidal(e1()));
  EXPECT_TRUE(is_matroidal(hyper_9_3()));
  EXPECT_EQ(hyper_9_3().size(), 27u);
}

TEST(VeroneseType, Examples) {
  EXPECT_EQ(construct_veronese_type({2, {1, 1, 1, 1}}, 4), squarefree_veronese(4, 2));
  EXPECT_EQ(construct_veronese_type({2, {2, 1, 1}}, 3), ideal("x1^2, x1*x2, x1*x3, x2*x3", 3));
  EXPECT_EQ(construct_veronese_type({3, {3, 3, 3, 3}}, 4), power(ideal("x1, x2, x3, x4", 4), 3));
}

TEST(VeroneseType, Errors) {
  EXPECT_EQ(code_of([] { construct_veronese_type({3, {1, 1}}, 2); }), errc::empty_family);
  EXPECT_EQ(code_of([] { construct_veronese_type({2, {1, 1}}, 3); }), errc::invalid_ambient);
}

TEST(VeroneseType, MembershipMatchesCaps) {
  // Every degree-d monomial is a generator iff its exponents respect the caps.
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 3; ++d) {
      std::vector<unsigned> caps(n, 1);
      for (;;) {
        unsigned total = 0;
        for (auto c : caps) total += c;
        if (total >= d) {
          const auto I = construct_veronese_type({d, caps}, n);
          std::vector<std::size_t> all(n);
          std::iota(all.begin(), all.end(), 0);
          for (const auto& m : monomials_of_degree(all, d, n)) {
            bool fits = true;
            for (std::size_t j = 0; j < n; ++j) fits = fits && m[j] <= caps[j];
            EXPECT_EQ(I.is_minimal_generator(m), fits);
          }
          EXPECT_TRUE(is_polymatroidal(I));
        }
        std::size_t j = 0;
        while (j < n && caps[j] == d) caps[j++] = 1;
        if (j == n) break;
        ++caps[j];
      }
    }
}

TEST(Multipartite, Examples) {
  EXPECT_EQ(construct_multipartite_edge_ideal(blocks_of({{1, 2}, {3, 4}, {5, 6}}), 3), hyper_6_3());
  EXPECT_EQ(hyper_6_3().size(), 8u);
  EXPECT_EQ(construct_multipartite_edge_ideal(blocks_of({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 3), hyper_9_3());
  EXPECT_EQ(construct_multipartite_edge_ideal(blocks_of({{1}, {2}, {3}}), 2), ideal("x1*x2, x1*x3, x2*x3", 3));
  EXPECT_EQ(construct_multipartite_edge_ideal(blocks_of({{1, 2}, {3, 4}, {5, 6}}), 2), hyper_6_2());
  EXPECT_EQ(hyper_6_2().size(), 12u);
}

TEST(Multipartite, Errors) {
  EXPECT_EQ(code_of([] { construct_multipartite_edge_ideal(blocks_of({{1, 2}, {3}}), 3); }),
            errc::degree_too_large);
  EXPECT_EQ(code_of([] { blocks_of({{1, 2}, {2, 3}}); }), errc::invalid_partition);
  EXPECT_EQ(code_of([] { blocks_of({{1}, {3}}); }), errc::invalid_partition);
}

TEST(PrimePowerProduct, Examples) {
  const PrimePowerComponent e1_factors[] = {{prime({1, 2}), 2}, {prime({3, 4}), 1}};
  EXPECT_EQ(construct_prime_power_product(e1_factors, std::nullopt, 4), e1());
  const PrimePowerComponent e2_factors[] = {{prime({1, 2}), 2}};
  EXPECT_EQ(construct_prime_power_product(e2_factors, e2_tail(), 5), e2());
  const PrimePowerComponent principal[] = {{prime({1}), 1}};
  EXPECT_EQ(construct_prime_power_product(principal, std::nullopt, 1), ideal("x1", 1));
}

TEST(PrimePowerProduct, SupportOverlap) {
  const PrimePowerComponent overlapping[] = {{prime({1, 2}), 1}, {prime({2, 3}), 1}};
  EXPECT_EQ(code_of([&] { construct_prime_power_product(overlapping, std::nullopt, 3); }),
            errc::support_overlap);
  const PrimePowerComponent with_tail[] = {{prime({3, 4}), 1}};
  EXPECT_EQ(code_of([&] { construct_prime_power_product(with_tail, e2_tail(), 5); }), errc::support_overlap);
}

TEST(Blocks, Examples) {
  EXPECT_EQ(colon_equivalence_blocks(hyper_6_3()), blocks_of({{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(colon_equivalence_blocks(squarefree_veronese(3, 2)), blocks_of({{1}, {2}, {3}}));
  EXPECT_EQ(colon_equivalence_blocks(hyper_6_2()), blocks_of({{1, 2}, {3, 4}, {5, 6}}));
}

TEST(Blocks, Errors) {
  EXPECT_EQ(code_of([] { colon_equivalence_blocks(e1()); }), errc::not_matroidal);
  EXPECT_EQ(code_of([] { colon_equivalence_blocks(ideal("x1*x2", 3)); }), errc::not_fully_supported);
}

TEST(Blocks, DegreeOneIsOneBlock) {
  EXPECT_EQ(colon_equivalence_blocks(ideal("x1, x2, x3", 3)), blocks_of({{1, 2, 3}}));
}

TEST(PolymatroidProperties, ClosureUnderProductAndColon) {
  PolymatroidalSampler sampler(31, {2, 5, 3, 80});
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = sampler.random_ambient();
    const auto I = sampler.next(n);
    const auto J = sampler.next(n);
    EXPECT_TRUE(is_polymatroidal(multiply(I, J))) << format_ideal(I) << " | " << format_ideal(J);
    const auto u = sampler.random_monomial(n, 2);
    const auto Q = colon(I, u);
    if (Q.is_proper_nonzero()) {
      EXPECT_TRUE(is_polymatroidal(Q)) << format_ideal(I);
    }
    for (auto x : support(I)) {
      const auto V = colon(I, Monomial::variable(n, x));
      if (V.is_proper_nonzero()) {
        EXPECT_EQ(*equigenerated_degree(V) + 1, *equigenerated_degree(I));
      }
    }
  }
}

TEST(PolymatroidProperties, ColonFixturesFromTheWorkedExamples) {
  EXPECT_TRUE(is_polymatroidal(e2()));
  const auto Q = colon(e1(), mono("x3", 4));
  EXPECT_TRUE(is_polymatroidal(Q));
  EXPECT_EQ(equigenerated_degree(Q), 2u);
  EXPECT_TRUE(is_polymatroidal(colon(e1(), Monomial(4))));
}

TEST(PolymatroidProperties, ColonEqualityIffNoCommonGenerator) {
  for (const auto& I : {hyper_6_3(), hyper_9_3(), hyper_6_2(), e2_tail(), ideal("x1*x2, x1*x3", 3)}) {
    const auto n = I.ambient();
    const auto sup = support(I);
    const auto blocks = colon_equivalence_blocks(restrict_to_support(I));
    for (std::size_t a = 0; a < sup.size(); ++a)
      for (std::size_t b = a + 1; b < sup.size(); ++b) {
        const auto x = Monomial::variable(n, sup[a]);
        const auto y = Monomial::variable(n, sup[b]);
        const bool none = std::none_of(I.generators().begin(), I.generators().end(),
                                       [&](const Monomial& g) { return (x * y).divides(g); });
        EXPECT_EQ(colon(I, x) == colon(I, y), none);
        EXPECT_EQ(blocks.block_of(a) == blocks.block_of(b), none);
      }
  }
}

TEST(PolymatroidProperties, ColonSupportSizeConstantOnConnectedUnmixed) {
  for (const auto& I : {hyper_6_3(), hyper_9_3(), hyper_6_2(), squarefree_veronese(5, 2)}) {
    const auto n = I.ambient();
    const auto s0 = support(colon(I, Monomial::variable(n, 0))).size();
    for (std::size_t x = 1; x < n; ++x) EXPECT_EQ(support(colon(I, Monomial::variable(n, x))).size(), s0);
  }
}

TEST(PolymatroidProperties, ColonSupportSizeVariesOnDisjointProduct) {
  // Unmixed (all four primes have height 2) yet not constant: sizes 4 and 3.
  const auto I = multiply(embed(squarefree_veronese(3, 2), std::vector<std::size_t>{0, 1, 2}, 5),
                          ideal("x4, x5", 5));
  ASSERT_TRUE(is_matroidal(I));
  ASSERT_TRUE(is_unmixed(I));
  EXPECT_EQ(support(colon(I, mono("x1", 5))).size(), 4u);
  EXPECT_EQ(support(colon(I, mono("x4", 5))).size(), 3u);
}
