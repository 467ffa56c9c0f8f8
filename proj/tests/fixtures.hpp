#pragma once

#include <polymat/polymat.hpp>

#include <string_view>
#include <vector>

namespace fixtures {

using namespace polymat;

inline MonomialIdeal ideal(std::string_view text, std::size_t n) { return parse_ideal(text, n); }
inline Monomial mono(std::string_view text, std::size_t n) { return parse_monomial(text, n); }

inline MonomialIdeal e1() {
  return ideal("x1^2*x3, x1^2*x4, x2^2*x3, x2^2*x4, x1*x2*x3, x1*x2*x4", 4);
}

inline MonomialIdeal e2_tail() { return ideal("x3*x4, x3*x5, x4*x5", 5); }

inline MonomialIdeal e2() { return multiply(ideal("x1^2, x1*x2, x2^2", 5), e2_tail()); }

/// Complete 3-uniform 3-partite on {x1,x2},{x3,x4},{x5,x6}: 8 generators.
inline MonomialIdeal hyper_6_3() {
  return ideal("x1*x3*x5, x1*x3*x6, x1*x4*x5, x1*x4*x6, x2*x3*x5, x2*x3*x6, x2*x4*x5, x2*x4*x6", 6);
}

/// Complete 3-uniform 3-partite on three blocks of 3: 27 generators.
inline MonomialIdeal hyper_9_3() {
  std::vector<Monomial> gens;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 3; b < 6; ++b)
      for (std::size_t c = 6; c < 9; ++c) {
        const std::size_t vars[] = {a, b, c};
        gens.push_back(Monomial::product_of(9, vars));
      }
  return minimalize(std::move(gens), 9);
}

/// Complete 2-uniform 3-partite on {x1,x2},{x3,x4},{x5,x6}: 12 generators.
inline MonomialIdeal hyper_6_2() {
  return ideal("x1*x3, x1*x4, x1*x5, x1*x6, x2*x3, x2*x4, x2*x5, x2*x6, x3*x5, x3*x6, x4*x5, x4*x6", 6);
}

inline VariablePrime prime(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> vars;
  for (auto v : one_based) vars.push_back(v - 1);
  return VariablePrime(std::move(vars));
}

} // namespace fixtures
