#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "decomposition.hpp"
#include "harness.hpp"
#include "io.hpp"

namespace polymat {

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr int report_schema_version = 1;

enum class ReportFormat { human, structured };

namespace detail {

inline nlohmann::json prime_json(const VariablePrime& p) {
  auto vars = nlohmann::json::array();
  for (auto v : p.variables()) vars.push_back(format_variable(v));
  return vars;
}

inline nlohmann::json factors_json(std::span<const PrimePowerComponent> factors) {
  auto out = nlohmann::json::array();
  for (const auto& f : factors) out.push_back(nlohmann::json::array({prime_json(f.prime), f.exponent}));
  return out;
}

inline nlohmann::json profile_json(const HypergraphProfile& p) {
  auto blocks = nlohmann::json::array();
  for (const auto& b : p.blocks.blocks()) {
    auto vars = nlohmann::json::array();
    for (auto v : b) vars.push_back(format_variable(v));
    blocks.push_back(vars);
  }
  return {{"degree", p.degree},
          {"block_count", p.block_count},
          {"block_size", p.block_size ? nlohmann::json(*p.block_size) : nlohmann::json(nullptr)},
          {"blocks", blocks},
          {"complete", p.complete},
          {"balanced", p.balanced}};
}

inline std::string factors_text(std::span<const PrimePowerComponent> factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += format_prime(f.prime);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

inline nlohmann::json envelope(std::string_view command, const MonomialIdeal& I) {
  return {{"schema", "polymat.report"},
          {"schema_version", report_schema_version},
          {"tool_version", tool_version},
          {"command", command},
          {"ambient", I.ambient()},
          {"input_canonical", format_ideal(I)}};
}

inline nlohmann::json primes_json(const std::vector<VariablePrime>& primes) {
  auto out = nlohmann::json::array();
  for (const auto& p : primes) out.push_back(prime_json(p));
  return out;
}

} // namespace detail

/// Structured classification report. ass_primes and heights list Ass(I) with
/// the height of each prime; checks records cross-check flags.
inline nlohmann::json classification_json(const MonomialIdeal& I, const Classification& c) {
  auto j = detail::envelope("classify", I);
  const auto ass = associated_primes(I);
  j["tag"] = tag(c);
  j["case"] = case_label(c);
  j["ass_primes"] = detail::primes_json(ass);
  auto heights = nlohmann::json::array();
  for (const auto& p : ass) heights.push_back(p.height());
  j["heights"] = heights;
  j["profile"] = nullptr;

  nlohmann::json cert;
  if (auto* mp = std::get_if<MaximalPower>(&c)) {
    cert = {{"degree", mp->degree}};
  } else if (auto* ppp = std::get_if<PrimePowerProduct>(&c)) {
    cert = {{"factors", detail::factors_json(ppp->factors)}};
  } else if (auto* ppm = std::get_if<PrimePowerTimesMatroidal>(&c)) {
    cert = {{"factors", detail::factors_json(ppm->factors)},
            {"matroidal_factor", format_ideal(ppm->matroidal_factor)}};
  } else if (auto* um = std::get_if<UnmixedMatroidal>(&c)) {
    auto comps = nlohmann::json::array();
    for (const auto& comp : um->components) {
      auto vars = nlohmann::json::array();
      for (auto v : comp.variables) vars.push_back(format_variable(v));
      comps.push_back({{"variables", vars}, {"profile", detail::profile_json(comp.profile)}});
    }
    cert = {{"profile", detail::profile_json(um->profile)}, {"components", comps}};
    j["profile"] = detail::profile_json(um->profile);
  } else if (auto* nu = std::get_if<NotUnmixed>(&c)) {
    cert = {{"witness",
             nlohmann::json::array({{{"prime", detail::prime_json(nu->lower)}, {"height", nu->lower.height()}},
                                    {{"prime", detail::prime_json(nu->higher)}, {"height", nu->higher.height()}}})}};
  }
  j["certificate"] = cert;

  const bool unmixed = !std::holds_alternative<NotUnmixed>(c);
  auto rebuilt = reconstruct(c, I.ambient());
  j["checks"] = {{"unmixed", unmixed},
                 {"reconstructs", rebuilt ? nlohmann::json(*rebuilt == I) : nlohmann::json(nullptr)},
                 {"cohen_macaulay", is_cohen_macaulay(I)},
                 {"connected_in_codim_one", is_connected_in_codim_one(I)}};
  return j;
}

inline std::string classification_text(const MonomialIdeal& I, const Classification& c) {
  std::ostringstream os;
  os << "I = (" << format_ideal(I) << ")\n";
  if (auto* nu = std::get_if<NotUnmixed>(&c)) {
    os << "not unmixed: " << format_prime(nu->lower) << " has height " << nu->lower.height()
       << " but " << format_prime(nu->higher) << " has height " << nu->higher.height() << "\n";
    return os.str();
  }
  os << "unmixed polymatroidal: ";
  if (auto* mp = std::get_if<MaximalPower>(&c)) {
    os << "I = m^" << mp->degree;
  } else if (auto* ppp = std::get_if<PrimePowerProduct>(&c)) {
    os << "I = " << detail::factors_text(ppp->factors);
  } else if (auto* ppm = std::get_if<PrimePowerTimesMatroidal>(&c)) {
    os << "I = " << detail::factors_text(ppm->factors) << " * (" << format_ideal(ppm->matroidal_factor)
       << ")";
  } else if (auto* um = std::get_if<UnmixedMatroidal>(&c)) {
    auto describe = [&](const HypergraphProfile& p) {
      os << "the edge ideal of the complete " << p.degree << "-uniform " << p.block_count
         << "-partite hypergraph, " << p.block_size.value_or(0) << "-balanced";
    };
    if (um->profile.complete && um->profile.balanced) {
      os << "I is ";
      describe(um->profile);
    } else {
      os << "I is a product over disjoint supports of";
      for (std::size_t i = 0; i < um->components.size(); ++i) {
        const auto& comp = um->components[i];
        os << (i ? ";" : "") << " on {";
        for (std::size_t k = 0; k < comp.variables.size(); ++k)
          os << (k ? "," : "") << format_variable(comp.variables[k]);
        os << "} ";
        describe(comp.profile);
      }
    }
  }
  os << " as structure case (" << case_label(c) << ")\n";
  return os.str();
}

inline nlohmann::json verification_json(const VerificationReport& r) {
  nlohmann::json j = {{"schema", "polymat.verification"},
                      {"schema_version", report_schema_version},
                      {"tool_version", tool_version},
                      {"claim", r.claim},
                      {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
                      {"universe_size", r.universe_size},
                      {"matroidal_count", r.matroidal_count},
                      {"unmixed_count", r.unmixed_count},
                      {"checks", r.checks}};
  auto ce = nlohmann::json::array();
  for (const auto& c : r.counterexamples)
    ce.push_back({{"claim", c.claim}, {"ambient", c.ideal.ambient()}, {"generators", format_ideal(c.ideal)}});
  j["counterexamples"] = ce;
  return j;
}

inline std::string verification_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "claim: " << r.claim << "\n";
  if (r.seed) os << "seed: " << *r.seed << "\n";
  os << "universe: " << r.universe_size << "\n"
     << "matroidal: " << r.matroidal_count << "\n"
     << "unmixed: " << r.unmixed_count << "\n";
  for (const auto& [tag, count] : r.checks) os << "checked " << tag << ": " << count << "\n";
  os << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples)
    os << "  [" << c.claim << "] n=" << c.ideal.ambient() << ": " << format_ideal(c.ideal) << "\n";
  return os.str();
}

inline nlohmann::json irreducible_json(const MonomialIdeal& I, const std::vector<IrreducibleComponent>& comps) {
  auto j = detail::envelope("decompose", I);
  j["tag"] = "irreducible";
  auto arr = nlohmann::json::array();
  std::vector<VariablePrime> ass;
  for (const auto& c : comps) {
    arr.push_back(format_ideal(c.as_ideal(I.ambient())));
    ass.push_back(c.radical());
  }
  std::sort(ass.begin(), ass.end());
  ass.erase(std::unique(ass.begin(), ass.end()), ass.end());
  j["components"] = arr;
  j["ass_primes"] = detail::primes_json(ass);
  return j;
}

inline nlohmann::json prime_power_json(const MonomialIdeal& I, const PrimePowerDecomposition& d) {
  auto j = detail::envelope("decompose", I);
  j["tag"] = "prime-power";
  j["components"] = detail::factors_json(d.components);
  std::vector<VariablePrime> ass;
  for (const auto& c : d.components) ass.push_back(c.prime);
  j["ass_primes"] = detail::primes_json(ass);
  return j;
}

inline std::string irreducible_text(const MonomialIdeal& I, const std::vector<IrreducibleComponent>& comps) {
  std::ostringstream os;
  os << "I = (" << format_ideal(I) << ")\n";
  for (std::size_t i = 0; i < comps.size(); ++i)
    os << (i == 0 ? "  = " : "  ∩ ") << "(" << format_ideal(comps[i].as_ideal(I.ambient())) << ")\n";
  return os.str();
}

inline std::string prime_power_text(const MonomialIdeal& I, const PrimePowerDecomposition& d) {
  std::ostringstream os;
  os << "I = (" << format_ideal(I) << ")\n  = ";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (i) os << " ∩ ";
    os << format_prime(d.components[i].prime);
    if (d.components[i].exponent != 1) os << "^" << d.components[i].exponent;
  }
  os << "\n";
  return os.str();
}

} // namespace polymat
