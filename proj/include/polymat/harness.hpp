#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "polymatroid.hpp"
#include "sampler.hpp"

namespace polymat {

/// Candidate-set budget for exhaustive runs, overridable through POLYMAT_BUDGET.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("POLYMAT_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 20;
}

struct EnumerationSpec {
  std::size_t ambient = 3;
  unsigned degree = 2;
  bool fully_supported = true;
  std::optional<std::size_t> cap;
  std::uint64_t budget = default_budget();
};

struct Counterexample {
  MonomialIdeal ideal;
  std::string claim;
};

struct VerificationReport {
  std::string claim;
  std::optional<std::uint64_t> seed;
  std::size_t universe_size = 0;
  std::size_t matroidal_count = 0;
  std::size_t unmixed_count = 0;
  /// Instances checked, per claim tag.
  std::map<std::string, std::size_t> checks;
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }

  /// Records one instance of a claim, and a counterexample when it fails.
  void expect(bool holds, const std::string& tag, const MonomialIdeal& I) {
    ++checks[tag];
    if (!holds) counterexamples.push_back({I, tag});
  }

  void merge(const VerificationReport& other) {
    universe_size += other.universe_size;
    matroidal_count += other.matroidal_count;
    unmixed_count += other.unmixed_count;
    for (auto& [k, v] : other.checks) checks[k] += v;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                           other.counterexamples.end());
  }
};

namespace detail {

inline std::uint64_t candidate_set_count(std::size_t n, unsigned d) { return binomial(n, d); }

inline void require_budget(const EnumerationSpec& spec) {
  if (spec.degree == 0 || spec.degree > spec.ambient)
    throw error(errc::degree_too_large, "degree must lie in 1..n");
  if (spec.ambient > 16) throw error(errc::budget_exceeded, "ambient above 16");
  const auto c = candidate_set_count(spec.ambient, spec.degree);
  if (c >= 63 || (std::uint64_t{1} << c) > spec.budget)
    throw error(errc::budget_exceeded, "2^" + std::to_string(c) + " candidate sets exceed budget " +
                                           std::to_string(spec.budget));
}

} // namespace detail

/// Streams every matroidal ideal of degree d in n variables: each nonempty
/// family of d-subsets of [n], in ranked bitmask order, that satisfies the
/// basis exchange property (and covers [n] when fully_supported is set).
/// Returns the number of ideals emitted.
inline std::size_t enumerate_matroidal(const EnumerationSpec& spec,
                                       const std::function<void(const MonomialIdeal&)>& visit) {
  detail::require_budget(spec);
  const auto n = spec.ambient;
  const auto d = spec.degree;

  std::vector<std::uint32_t> sets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (static_cast<unsigned>(std::popcount(mask)) == d) sets.push_back(mask);
  // Lexicographic on the sorted index lists: the set owning the least
  // differing element comes first.
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    const auto diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  });
  std::vector<int> rank_of(std::size_t{1} << n, -1);
  for (std::size_t r = 0; r < sets.size(); ++r) rank_of[sets[r]] = static_cast<int>(r);

  const std::uint32_t full = (1u << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << sets.size();
  std::vector<std::uint32_t> bases;
  std::size_t emitted = 0;

  for (std::uint64_t family = 1; family < total; ++family) {
    bases.clear();
    std::uint32_t covered = 0;
    for (std::uint64_t rest = family; rest; rest &= rest - 1) {
      auto b = sets[static_cast<std::size_t>(std::countr_zero(rest))];
      bases.push_back(b);
      covered |= b;
    }
    if (spec.fully_supported && covered != full) continue;

    auto in_family = [&](std::uint32_t mask) {
      auto r = rank_of[mask];
      return r >= 0 && ((family >> r) & 1u);
    };
    bool exchange = true;
    for (std::size_t a = 0; a < bases.size() && exchange; ++a) {
      for (std::size_t b = 0; b < bases.size() && exchange; ++b) {
        const auto A = bases[a], B = bases[b];
        for (auto out = A & ~B; out && exchange; out &= out - 1) {
          const auto i = out & (~out + 1);
          bool found = false;
          for (auto in = B & ~A; in && !found; in &= in - 1)
            found = in_family((A ^ i) | (in & (~in + 1)));
          exchange = found;
        }
      }
    }
    if (!exchange) continue;

    std::vector<Monomial> gens;
    for (auto b : bases) {
      std::vector<Monomial::exponent_type> e(n, 0);
      for (std::size_t v = 0; v < n; ++v) e[v] = (b >> v) & 1u;
      gens.emplace_back(std::move(e));
    }
    visit(minimalize(std::move(gens), n));
    if (++emitted == spec.cap) break;
  }
  return emitted;
}

inline std::vector<MonomialIdeal> enumerate_matroidal(const EnumerationSpec& spec) {
  std::vector<MonomialIdeal> out;
  enumerate_matroidal(spec, [&](const MonomialIdeal& I) { out.push_back(I); });
  return out;
}

/// Unmixed matroidal ideals are exactly the complete balanced multipartite
/// edge ideals; checked on every enumerated ideal.
inline VerificationReport verify_hypergraph_characterization(const EnumerationSpec& spec) {
  VerificationReport r;
  r.claim = "unmixed-iff-complete-balanced";
  enumerate_matroidal(spec, [&](const MonomialIdeal& I) {
    ++r.universe_size;
    r.expect(is_matroidal(I), "enumeration-soundness", I);
    ++r.matroidal_count;
    const bool unmixed = is_unmixed(I);
    if (unmixed) ++r.unmixed_count;
    if (!spec.fully_supported && !is_fully_supported(I)) return;
    auto profile = hypergraph_profile(I);
    r.expect(unmixed == (profile.complete && profile.balanced), r.claim, I);
  });
  return r;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> colon_supports(const MonomialIdeal& I) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < I.ambient(); ++x)
    out.push_back(support(colon(I, Monomial::variable(I.ambient(), x))));
  return out;
}

/// Block-structure and corollary checks for one fully supported matroidal ideal.
inline void check_matroidal_corollaries(const MonomialIdeal& I, VerificationReport& r) {
  const auto n = I.ambient();
  const unsigned d = *equigenerated_degree(I);
  const auto ass = associated_primes(I);
  const bool unmixed = is_unmixed(ass);
  const bool sqf_veronese = is_squarefree_veronese(I);
  const auto supps = colon_supports(I);

  r.expect(minimal_elements(ass) == ass, "no-embedded-primes", I);

  if (d >= 2) {
    const auto blocks = colon_equivalence_blocks(I);
    bool lemma = true, partition = true;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const auto xy = Monomial::variable(n, x) * Monomial::variable(n, y);
        const bool divides_none = std::none_of(I.generators().begin(), I.generators().end(),
                                               [&](const Monomial& g) { return xy.divides(g); });
        const bool same_colon = colon(I, Monomial::variable(n, x)) == colon(I, Monomial::variable(n, y));
        lemma = lemma && divides_none == same_colon;
        partition = partition && divides_none == (blocks.block_of(x) == blocks.block_of(y));
      }
    }
    r.expect(lemma, "colon-equality-iff-no-common-generator", I);
    r.expect(partition && blocks.block_count() >= d, "block-partition", I);

    bool dichotomy = true, union_all = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> u;
        std::set_union(supps[i].begin(), supps[i].end(), supps[j].begin(), supps[j].end(),
                       std::back_inserter(u));
        dichotomy = dichotomy && (supps[i] == supps[j] || u.size() == n);
        if (i != j) union_all = union_all && u.size() == n;
      }
    r.expect(dichotomy, "colon-support-dichotomy", I);
    r.expect(union_all == sqf_veronese, "support-union-iff-squarefree-veronese", I);
  }

  r.expect(is_connected_in_codim_one(I) == sqf_veronese, "codim-one-iff-squarefree-veronese", I);
  if (!unmixed) return;

  const bool cm = is_cohen_macaulay(I);
  r.expect(is_connected_in_codim_one(I) == cm, "codim-one-iff-cm", I);

  bool constant = std::all_of(supps.begin(), supps.end(),
                              [&](const auto& s) { return s.size() == supps.front().size(); });
  r.expect(constant, "constant-colon-support-size", I);

  const bool some_full = std::any_of(supps.begin(), supps.end(), [&](const auto& s) { return s.size() + 1 == n; });
  const bool all_full = std::all_of(supps.begin(), supps.end(), [&](const auto& s) { return s.size() + 1 == n; });
  r.expect(some_full == sqf_veronese && all_full == sqf_veronese,
           "colon-support-n-minus-one-iff-squarefree-veronese", I);

  const auto report = height_bounds_report(I);
  r.expect(report.within_bounds() && report.tags_consistent(), "height-bounds", I);

  auto profile = hypergraph_profile(I);
  const auto h = height(ass);
  bool predicted = profile.block_size &&
                   profile.block_count * *profile.block_size == n &&
                   h == *profile.block_size * (profile.block_count - d + 1) &&
                   h == n - *profile.block_size * (d - 1) && report.predicted == h;
  r.expect(predicted, "height-from-profile", I);

  if (d >= 2) {
    bool same = true;
    for (std::size_t x = 0; x < n; ++x) {
      auto Q = colon(I, Monomial::variable(n, x));
      if (Q.is_proper_nonzero()) same = same && height(Q) == h && is_unmixed(Q);
    }
    r.expect(same, "colon-preserves-height", I);
  }
}

} // namespace detail

/// Consequence sweep over an enumerated universe: colon-support constancy,
/// height bounds with their equality cases, block structure, and the
/// codimension-one connectivity characterizations.
inline VerificationReport verify_corollaries(const EnumerationSpec& spec) {
  VerificationReport r;
  r.claim = "matroidal-corollaries";
  enumerate_matroidal(spec, [&](const MonomialIdeal& I) {
    ++r.universe_size;
    ++r.matroidal_count;
    if (is_unmixed(I)) ++r.unmixed_count;
    if (is_fully_supported(I)) detail::check_matroidal_corollaries(I, r);
  });
  return r;
}

/// Associated primes from the decomposition agree with the colon oracle.
inline VerificationReport cross_check_ass(const EnumerationSpec& spec) {
  VerificationReport r;
  r.claim = "ass-equals-oracle";
  enumerate_matroidal(spec, [&](const MonomialIdeal& I) {
    ++r.universe_size;
    ++r.matroidal_count;
    const auto ass = associated_primes(I);
    if (is_unmixed(ass)) ++r.unmixed_count;
    r.expect(ass == brute_force_ass(I), r.claim, I);
  });
  return r;
}

/// Same comparison on seeded samples that are not squarefree.
inline VerificationReport cross_check_ass_samples(std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.claim = "ass-equals-oracle";
  r.seed = seed;
  PolymatroidalSampler sampler(seed, {2, 5, 4, 150});
  while (r.universe_size < samples) {
    auto I = sampler.next(sampler.random_ambient());
    if (I.is_squarefree()) continue;
    ++r.universe_size;
    const auto ass = associated_primes(I);
    if (is_unmixed(ass)) ++r.unmixed_count;
    r.expect(ass == brute_force_ass(I), r.claim, I);
  }
  return r;
}

/// Every seeded sample has an exact prime-power intersection over Ass(I).
inline VerificationReport verify_prime_power_decomposition(std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.claim = "prime-power-decomposition-exact";
  r.seed = seed;
  PolymatroidalSampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto I = sampler.next(sampler.random_ambient());
    ++r.universe_size;
    if (I.is_squarefree()) ++r.matroidal_count;
    bool exact = true;
    try {
      auto ppd = prime_power_decomposition(I);
      exact = intersect_prime_powers(ppd.components, I.ambient()) == I;
    } catch (const error& e) {
      if (e.code() != errc::verification_failed) throw;
      exact = false;
    }
    r.expect(exact, r.claim, I);
  }
  return r;
}

/// The worked structure examples, followed by sampled ideals in
/// verify_structure_theorem.
inline std::vector<MonomialIdeal> structure_fixtures() {
  auto x = [](std::size_t n, std::initializer_list<std::size_t> vars) {
    return MonomialIdeal::from_prime(VariablePrime(vars), n);
  };
  auto squared_12 = [&](std::size_t n) { return power(x(n, {0, 1}), 2); };
  auto e1 = multiply(squared_12(4), x(4, {2, 3}));
  const std::vector<std::size_t> last_three{2, 3, 4};
  auto e2 = multiply(squared_12(5), embed(squarefree_veronese(3, 2), last_three, 5));
  auto mixed = multiply(x(2, {0}), x(2, {0, 1}));
  return {e1, e2, mixed};
}

namespace detail {

/// Checks a structure certificate against its defining conditions.
inline bool certificate_conditions_hold(const Classification& c, const MonomialIdeal& I) {
  const unsigned d = *equigenerated_degree(I);
  auto factors_ok = [&](std::span<const PrimePowerComponent> fs, std::size_t h, unsigned& sum) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].prime.height() != h) return false;
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (!fs[i].prime.disjoint_from(fs[j].prime)) return false;
      sum += fs[i].exponent;
    }
    return true;
  };
  if (auto* p = std::get_if<PrimePowerProduct>(&c)) {
    unsigned sum = 0;
    return factors_ok(p->factors, p->factors.front().prime.height(), sum) && sum == d;
  }
  if (auto* p = std::get_if<PrimePowerTimesMatroidal>(&c)) {
    unsigned sum = 0;
    const auto h = height(p->matroidal_factor);
    if (!factors_ok(p->factors, h, sum)) return false;
    auto js = support(p->matroidal_factor);
    for (const auto& f : p->factors)
      for (auto v : f.prime.variables())
        if (std::binary_search(js.begin(), js.end(), v)) return false;
    return is_matroidal(p->matroidal_factor) && is_unmixed(p->matroidal_factor) &&
           sum + *equigenerated_degree(p->matroidal_factor) == d;
  }
  if (auto* p = std::get_if<UnmixedMatroidal>(&c)) {
    std::vector<bool> used(I.ambient(), false);
    for (const auto& comp : p->components) {
      if (!comp.profile.complete || !comp.profile.balanced) return false;
      for (auto v : comp.variables) {
        if (used[v]) return false;
        used[v] = true;
      }
    }
    return is_matroidal(I);
  }
  if (auto* p = std::get_if<MaximalPower>(&c)) return p->degree == d;
  return false;
}

inline void check_structure(const MonomialIdeal& I, VerificationReport& r) {
  ++r.universe_size;
  if (I.is_squarefree()) ++r.matroidal_count;
  const bool unmixed = is_unmixed(I);
  Classification c;
  try {
    c = classify_unmixed_polymatroidal(I);
  } catch (const error& e) {
    if (e.code() != errc::classification_incomplete && e.code() != errc::verification_failed) throw;
    r.expect(false, "classification-complete", I);
    return;
  }
  const bool said_unmixed = !std::holds_alternative<NotUnmixed>(c);
  r.expect(said_unmixed == unmixed, "unmixed-detection", I);
  if (!said_unmixed) return;
  ++r.unmixed_count;
  ++r.checks[std::string("case-") + std::string(case_label(c))];
  r.expect(reconstruct(c, I.ambient()) == I, "certificate-reconstructs", I);
  r.expect(certificate_conditions_hold(c, I), "certificate-conditions", I);
  if (*equigenerated_degree(I) == 2)
    r.expect(std::holds_alternative<UnmixedMatroidal>(c) || std::holds_alternative<MaximalPower>(c),
             "degree-two-matroidal-or-maximal", I);
  r.expect(is_connected_in_codim_one(I) == is_cohen_macaulay(I), "codim-one-iff-cm", I);
}

} // namespace detail

/// Classifies the worked fixtures and seeded fully supported samples with
/// n <= max_ambient and degree <= max_degree; each unmixed one must certify
/// exactly one structure case that rebuilds the input.
inline VerificationReport verify_structure_theorem(std::size_t max_ambient, unsigned max_degree,
                                                   std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.claim = "unmixed-structure-cases";
  r.seed = seed;
  for (const auto& I : structure_fixtures()) detail::check_structure(I, r);
  PolymatroidalSampler sampler(seed, {1, max_ambient, max_degree, 150});
  for (std::size_t s = 0; s < samples; ++s) detail::check_structure(sampler.next_fully_supported(), r);
  return r;
}

/// Products and colons of seeded polymatroidal ideals stay polymatroidal, and
/// colon by a variable of the support lowers the degree by one.
inline VerificationReport verify_closure_properties(std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.claim = "closure-under-product-and-colon";
  r.seed = seed;
  PolymatroidalSampler sampler(seed, {2, 5, 3, 80});
  for (std::size_t s = 0; s < samples; ++s) {
    const auto n = sampler.random_ambient();
    auto I = sampler.next(n);
    auto J = sampler.next(n);
    r.universe_size += 2;
    r.expect(is_polymatroidal(multiply(I, J)), "product-polymatroidal", I);

    auto u = sampler.random_monomial(n, 3);
    auto Q = colon(I, u);
    if (Q.is_proper_nonzero()) r.expect(is_polymatroidal(Q), "colon-polymatroidal", I);
    else ++r.checks["colon-not-proper"];

    auto supp = support(I);
    auto x = Monomial::variable(n, supp[sampler.uniform(0, supp.size() - 1)]);
    auto Qx = colon(I, x);
    if (Qx.is_proper_nonzero()) {
      r.expect(is_polymatroidal(Qx), "colon-polymatroidal", I);
      r.expect(*equigenerated_degree(Qx) + 1 == *equigenerated_degree(I), "variable-colon-degree", I);
    }
  }
  return r;
}

/// On every Veronese type ideal with n <= max_ambient, d <= max_degree and
/// caps in 1..d: unmixed iff Cohen-Macaulay.
inline VerificationReport verify_veronese_type_cm(std::size_t max_ambient, unsigned max_degree) {
  VerificationReport r;
  r.claim = "veronese-type-unmixed-iff-cm";
  for (std::size_t n = 1; n <= max_ambient; ++n) {
    for (unsigned d = 1; d <= max_degree; ++d) {
      std::vector<unsigned> caps(n, 1);
      for (;;) {
        unsigned total = 0;
        for (auto a : caps) total += a;
        if (total >= d) {
          auto I = construct_veronese_type({d, caps}, n);
          ++r.universe_size;
          const bool unmixed = is_unmixed(I);
          if (unmixed) ++r.unmixed_count;
          r.expect(unmixed == is_cohen_macaulay(I), r.claim, I);
        }
        std::size_t k = 0;
        while (k < n && caps[k] == d) caps[k++] = 1;
        if (k == n) break;
        ++caps[k];
      }
    }
  }
  return r;
}

/// Connectivity in codimension one against Cohen-Macaulayness on seeded
/// unmixed fully supported samples.
inline VerificationReport verify_codim_one_cm(std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.claim = "codim-one-iff-cm";
  r.seed = seed;
  PolymatroidalSampler sampler(seed, {1, 6, 4, 150});
  std::size_t attempts = 0;
  while (r.unmixed_count < samples && attempts++ < samples * 50) {
    auto I = sampler.next_fully_supported();
    ++r.universe_size;
    if (!is_unmixed(I)) continue;
    ++r.unmixed_count;
    r.expect(is_connected_in_codim_one(I) == is_cohen_macaulay(I), r.claim, I);
  }
  return r;
}

} // namespace polymat
