#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"

namespace polymat {

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Monomial> generators, std::size_t ambient);

/// A monomial ideal held as its minimal generating set G(I), sorted in the
/// graded order of Monomial. Equal ideals compare equal.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t ambient = 0) : ambient_(ambient) {}

  MonomialIdeal(std::size_t ambient, std::initializer_list<Monomial> generators)
      : MonomialIdeal(minimalize(std::vector<Monomial>(generators), ambient)) {}

  static MonomialIdeal unit(std::size_t ambient) {
    MonomialIdeal I(ambient);
    I.generators_.emplace_back(ambient);
    return I;
  }

  /// The prime generated by the listed variables.
  static MonomialIdeal from_prime(const VariablePrime& p, std::size_t ambient) {
    std::vector<Monomial> gens;
    for (auto v : p.variables()) gens.push_back(Monomial::variable(ambient, v));
    return minimalize(std::move(gens), ambient);
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::span<const Monomial> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const Monomial& operator[](std::size_t i) const noexcept { return generators_[i]; }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept { return generators_.size() == 1 && generators_[0].is_one(); }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  bool is_squarefree() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
  }

  bool contains(const Monomial& w) const {
    if (w.ambient() != ambient_) throw error(errc::invalid_ambient, "monomial ambient mismatch");
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Monomial& g) { return g.divides(w); });
  }

  /// J is a subideal of this ideal.
  bool contains(const MonomialIdeal& J) const {
    return std::all_of(J.generators_.begin(), J.generators_.end(),
                       [&](const Monomial& g) { return contains(g); });
  }

  /// Exact test for g in G(I), using the canonical order.
  bool is_minimal_generator(const Monomial& g) const {
    return std::binary_search(generators_.begin(), generators_.end(), g);
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimalize(std::vector<Monomial> generators, std::size_t ambient);

  std::size_t ambient_;
  std::vector<Monomial> generators_;
};

/// Reduces a generating list to G(I): the divisibility antichain of the
/// list, in canonical order.
inline MonomialIdeal minimalize(std::vector<Monomial> generators, std::size_t ambient) {
  for (const auto& g : generators)
    if (g.ambient() != ambient)
      throw error(errc::invalid_ambient, "generator has " + std::to_string(g.ambient()) +
                                             " exponents, expected " + std::to_string(ambient));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  MonomialIdeal I(ambient);
  for (auto& g : generators) {
    // Kept generators have degree <= deg g, so only they can divide g.
    bool redundant = std::any_of(I.generators_.begin(), I.generators_.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) I.generators_.push_back(std::move(g));
  }
  return I;
}

inline void require_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient())
    throw error(errc::invalid_ambient, "ideals in " + std::to_string(I.ambient()) + " and " +
                                           std::to_string(J.ambient()) + " variables");
}

/// (I : u), generated by g / gcd(g, u) for g in G(I).
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
  if (u.ambient() != I.ambient())
    throw error(errc::invalid_ambient, "colon by a monomial of the wrong ambient");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(quotient(g, detail::gcd(g, u)));
  return minimalize(std::move(gens), I.ambient());
}

inline MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return minimalize(std::move(gens), I.ambient());
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(detail::lcm(a, b));
  return minimalize(std::move(gens), I.ambient());
}

/// I + J.
inline MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Monomial> gens(I.generators().begin(), I.generators().end());
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(std::move(gens), I.ambient());
}

inline MonomialIdeal power(const MonomialIdeal& I, unsigned exponent) {
  auto out = MonomialIdeal::unit(I.ambient());
  for (unsigned k = 0; k < exponent; ++k) out = multiply(out, I);
  return out;
}

/// supp(I): variables dividing some minimal generator, ascending.
inline std::vector<std::size_t> support(const MonomialIdeal& I) {
  std::vector<bool> seen(I.ambient(), false);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < I.ambient(); ++i)
      if (g[i] != 0) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> support(const Monomial& u) { return u.support(); }

inline bool is_fully_supported(const MonomialIdeal& I) {
  return support(I).size() == I.ambient();
}

/// d when every minimal generator has degree d; nullopt when degrees differ.
inline std::optional<unsigned> equigenerated_degree(const MonomialIdeal& I) {
  if (I.is_zero()) throw error(errc::empty_ideal, "the zero ideal has no generation degree");
  // Canonical order sorts by degree first.
  unsigned lo = I.generators().front().degree();
  unsigned hi = I.generators().back().degree();
  if (lo != hi) return std::nullopt;
  return lo;
}

/// All monomials of the given degree in the listed variables.
inline std::vector<Monomial> monomials_of_degree(std::span<const std::size_t> variables,
                                                 unsigned degree, std::size_t ambient) {
  std::vector<Monomial> out;
  std::vector<Monomial::exponent_type> e(ambient, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == variables.size()) {
      e[variables[pos]] = static_cast<Monomial::exponent_type>(remaining);
      out.emplace_back(e);
      e[variables[pos]] = 0;
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[variables[pos]] = static_cast<Monomial::exponent_type>(k);
      self(self, pos + 1, remaining - k);
    }
    e[variables[pos]] = 0;
  };
  if (variables.empty()) {
    if (degree == 0) out.emplace_back(ambient);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

/// p^a for a variable prime p.
inline MonomialIdeal prime_power(const VariablePrime& p, unsigned exponent, std::size_t ambient) {
  for (auto v : p.variables())
    if (v >= ambient) throw error(errc::index_out_of_range, "prime variable outside ambient");
  return minimalize(monomials_of_degree(p.variables(), exponent, ambient), ambient);
}

/// Moves an ideal in |vars| variables into an ambient of n variables,
/// sending variable k to vars[k].
inline MonomialIdeal embed(const MonomialIdeal& I, std::span<const std::size_t> vars,
                           std::size_t ambient) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Monomial::exponent_type> e(ambient, 0);
    for (std::size_t k = 0; k < vars.size(); ++k) e[vars[k]] = g[k];
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), ambient);
}

/// Re-indexes I onto its support: the result lives in |supp(I)| variables,
/// with variable k of the result standing for support(I)[k].
inline MonomialIdeal restrict_to_support(const MonomialIdeal& I) {
  auto supp = support(I);
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Monomial::exponent_type> e(supp.size());
    for (std::size_t k = 0; k < supp.size(); ++k) e[k] = g[supp[k]];
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), supp.size());
}

} // namespace polymat
