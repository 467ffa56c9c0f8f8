#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"

namespace polymat {

/// An irreducible monomial ideal (x_{i_1}^{e_1}, ..., x_{i_r}^{e_r}).
class IrreducibleComponent {
public:
  using entry = std::pair<std::size_t, unsigned>;

  IrreducibleComponent() = default;

  explicit IrreducibleComponent(std::vector<entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    if (entries_.empty()) throw error(errc::empty_ideal, "irreducible component without generators");
  }

  std::span<const entry> entries() const noexcept { return entries_; }

  VariablePrime radical() const {
    std::vector<std::size_t> vars;
    for (auto& [v, e] : entries_) vars.push_back(v);
    return VariablePrime(std::move(vars));
  }

  MonomialIdeal as_ideal(std::size_t ambient) const {
    std::vector<Monomial> gens;
    for (auto& [v, e] : entries_)
      gens.push_back(Monomial::variable(ambient, v, static_cast<Monomial::exponent_type>(e)));
    return minimalize(std::move(gens), ambient);
  }

  /// Containment of ideals: each x_v^e of this lies in other.
  bool is_subset_of(const IrreducibleComponent& other) const {
    for (auto& [v, e] : entries_) {
      auto it = std::lower_bound(other.entries_.begin(), other.entries_.end(), entry{v, 0});
      if (it == other.entries_.end() || it->first != v || it->second > e) return false;
    }
    return true;
  }

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;

private:
  std::vector<entry> entries_;
};

/// One p^a term of a prime-power intersection.
struct PrimePowerComponent {
  VariablePrime prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePowerComponent&, const PrimePowerComponent&) = default;
};

/// I written as the intersection of p^{a_p} over p in Ass(I).
struct PrimePowerDecomposition {
  std::vector<PrimePowerComponent> components;
};

namespace detail {

inline void require_proper(const MonomialIdeal& I) {
  if (I.is_zero()) throw error(errc::not_proper, "the zero ideal");
  if (I.is_unit()) throw error(errc::not_proper, "the unit ideal");
}

struct IdealLess {
  bool operator()(const MonomialIdeal& a, const MonomialIdeal& b) const {
    return std::lexicographical_compare(a.generators().begin(), a.generators().end(),
                                        b.generators().begin(), b.generators().end());
  }
};

inline void split_ideal(const MonomialIdeal& I, std::set<MonomialIdeal, IdealLess>& seen,
                        std::vector<IrreducibleComponent>& out) {
  if (!seen.insert(I).second) return;
  const auto gens = I.generators();
  auto pivot = std::find_if(gens.begin(), gens.end(),
                            [](const Monomial& g) { return !g.is_pure_power(); });
  if (pivot == gens.end()) {
    std::vector<IrreducibleComponent::entry> entries;
    for (const auto& g : gens) {
      auto v = g.support().front();
      entries.emplace_back(v, g[v]);
    }
    out.emplace_back(std::move(entries));
    return;
  }
  const auto n = I.ambient();
  auto v = pivot->support().front();
  auto pure = Monomial::variable(n, v, (*pivot)[v]);
  auto rest = quotient(*pivot, pure);
  split_ideal(add(I, minimalize(std::vector<Monomial>{pure}, n)), seen, out);
  split_ideal(add(I, minimalize(std::vector<Monomial>{rest}, n)), seen, out);
}

} // namespace detail

/// Irredundant irreducible decomposition, obtained by splitting a mixed
/// generator x^a * m into (I + x^a) and (I + m) until only pure powers remain.
/// Components come back sorted.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  detail::require_proper(I);
  std::set<MonomialIdeal, detail::IdealLess> seen;
  std::vector<IrreducibleComponent> raw;
  detail::split_ideal(I, seen, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // A component containing another one adds nothing to the intersection.
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
      redundant = j != i && raw[j].is_subset_of(raw[i]);
    if (!redundant) out.push_back(raw[i]);
  }
  return out;
}

/// Ass(I): radicals of the irredundant irreducible components, sorted.
inline std::vector<VariablePrime> associated_primes(const MonomialIdeal& I) {
  std::vector<VariablePrime> out;
  for (const auto& c : irreducible_decomposition(I)) out.push_back(c.radical());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Inclusion-minimal members of a prime list.
inline std::vector<VariablePrime> minimal_elements(const std::vector<VariablePrime>& primes) {
  std::vector<VariablePrime> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](const VariablePrime& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

inline std::vector<VariablePrime> minimal_primes(const MonomialIdeal& I) {
  return minimal_elements(associated_primes(I));
}

inline std::size_t height(const std::vector<VariablePrime>& ass) {
  std::size_t h = ass.front().height();
  for (const auto& p : ass) h = std::min(h, p.height());
  return h;
}

inline std::size_t height(const MonomialIdeal& I) { return height(associated_primes(I)); }

inline bool is_unmixed(const std::vector<VariablePrime>& ass) {
  return std::all_of(ass.begin(), ass.end(),
                     [&](const VariablePrime& p) { return p.height() == ass.front().height(); });
}

inline bool is_unmixed(const MonomialIdeal& I) { return is_unmixed(associated_primes(I)); }

/// Intersection of p^a over the listed components.
inline MonomialIdeal intersect_prime_powers(std::span<const PrimePowerComponent> components,
                                            std::size_t ambient) {
  auto out = MonomialIdeal::unit(ambient);
  for (const auto& c : components) out = intersect(out, prime_power(c.prime, c.exponent, ambient));
  return out;
}

/// Writes I as the intersection of p^{a_p} over Ass(I), with a_p the least
/// p-degree of a minimal generator. Any valid exponent choice is bounded by
/// this one, so a mismatch means I has no such decomposition.
inline PrimePowerDecomposition prime_power_decomposition(const MonomialIdeal& I) {
  PrimePowerDecomposition out;
  for (auto& p : associated_primes(I)) {
    unsigned a = p.degree_of(I.generators().front());
    for (const auto& g : I.generators()) a = std::min(a, p.degree_of(g));
    out.components.push_back({std::move(p), a});
  }
  if (intersect_prime_powers(out.components, I.ambient()) != I)
    throw error(errc::verification_failed,
                "the intersection of prime powers over Ass(I) differs from I");
  return out;
}

/// Oracle for Ass(I): collects every colon (I : u) that is generated by
/// variables, as u ranges over the divisors of lcm(G(I)) outside I.
inline std::vector<VariablePrime> brute_force_ass(const MonomialIdeal& I,
                                                  std::uint64_t divisor_cap = 2'000'000) {
  detail::require_proper(I);
  const auto n = I.ambient();
  auto top = Monomial(n);
  for (const auto& g : I.generators()) top = detail::lcm(top, g);

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= std::uint64_t(top[i]) + 1;
    if (count > divisor_cap)
      throw error(errc::oracle_budget_exceeded,
                  "divisor lattice larger than " + std::to_string(divisor_cap));
  }

  std::set<VariablePrime> found;
  std::vector<Monomial::exponent_type> e(n, 0);
  for (std::uint64_t step = 0; step < count; ++step) {
    Monomial u(e);
    if (!I.contains(u)) {
      auto Q = colon(I, u);
      bool prime = std::all_of(Q.generators().begin(), Q.generators().end(),
                               [](const Monomial& g) { return g.degree() == 1; });
      if (prime) {
        std::vector<std::size_t> vars;
        for (const auto& g : Q.generators()) vars.push_back(g.support().front());
        found.insert(VariablePrime(std::move(vars)));
      }
    }
    // Mixed-radix increment over the box below lcm(G(I)).
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < top[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
  }
  return {found.begin(), found.end()};
}

} // namespace polymat
