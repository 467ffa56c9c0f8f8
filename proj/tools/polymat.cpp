#include <CLI11.hpp>
#include <json.hpp>

#include <polymat/polymat.hpp>
#include <polymat/report.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace polymat;
using nlohmann::json;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string format = "human";
  std::optional<std::size_t> vars;
  std::string file;
  std::string inline_ideal;
};

struct Outcome {
  int code = exit_holds;
  std::string text;
};

bool structured(const Options& o) { return o.format == "json"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

IdealDocument load_ideal(const Options& o) {
  std::string text;
  std::string provenance;
  if (!o.inline_ideal.empty()) {
    text = o.inline_ideal;
    provenance = "--ideal";
  } else if (o.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    provenance = "<stdin>";
  } else if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw error(errc::empty_input, "cannot read " + o.file);
    text.assign(std::istreambuf_iterator<char>(in), {});
    provenance = o.file;
  } else {
    throw error(errc::empty_input, "give an ideal file, '-' for stdin, or --ideal");
  }
  auto doc = parse_ideal_document(text, o.vars);
  doc.provenance = provenance;
  if (doc.ambient_inferred)
    std::cerr << "warning: ambient inferred as n=" << doc.ideal.ambient()
              << " from the largest variable index; pass --vars to fix it\n";
  return doc;
}

// "(x1,x2)^2" or "(x1,x2)".
PrimePowerComponent parse_factor(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto close = s.find(')');
  if (s.empty() || s.front() != '(' || close == std::string::npos)
    throw error(errc::syntax_error, "factor must look like (x1,x2)^a: " + raw);
  std::vector<std::size_t> vars;
  std::stringstream inner(s.substr(1, close - 1));
  for (std::string item; std::getline(inner, item, ',');) {
    if (item.size() < 2 || item[0] != 'x') throw error(errc::syntax_error, "bad variable in " + raw);
    const auto k = std::stoul(item.substr(1));
    if (k == 0) throw error(errc::index_out_of_range, "variables are numbered from x1");
    vars.push_back(k - 1);
  }
  unsigned a = 1;
  if (close + 1 < s.size()) {
    if (s[close + 1] != '^' || close + 2 >= s.size())
      throw error(errc::syntax_error, "expected ^exponent after " + s.substr(0, close + 1));
    a = static_cast<unsigned>(std::stoul(s.substr(close + 2)));
  }
  return {VariablePrime(std::move(vars)), a};
}

// "x1,x2,x3".
std::vector<std::size_t> parse_block(const std::string& raw) {
  std::vector<std::size_t> out;
  std::stringstream in(raw);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.size() < 2 || item[0] != 'x') throw error(errc::syntax_error, "bad block variable: " + item);
    const auto k = std::stoul(item.substr(1));
    if (k == 0) throw error(errc::index_out_of_range, "variables are numbered from x1");
    out.push_back(k - 1);
  }
  return out;
}

std::string primes_text(const std::vector<VariablePrime>& primes) {
  std::string out;
  for (const auto& p : primes) out += (out.empty() ? "" : ", ") + format_prime(p);
  return out;
}

Outcome run_check(const Options& o, const std::string& property) {
  const auto I = load_ideal(o).ideal;
  json j = detail::envelope("check", I);
  j["property"] = property;
  std::ostringstream os;
  os << "I = (" << format_ideal(I) << ")\n";
  bool holds = false;

  if (property == "polymatroidal" || property == "matroidal") {
    detail::require_proper(I);
    const auto d = equigenerated_degree(I);
    holds = d.has_value();
    if (!d) {
      os << "not generated in a single degree: " << format_monomial(I.generators().front()) << " and "
         << format_monomial(I.generators().back()) << "\n";
      j["witness"] = {{"reason", "not-equigenerated"},
                      {"generators", {format_monomial(I.generators().front()),
                                      format_monomial(I.generators().back())}}};
    }
    if (holds && property == "matroidal") {
      auto it = std::find_if(I.generators().begin(), I.generators().end(),
                             [](const Monomial& g) { return !g.is_squarefree(); });
      if (it != I.generators().end()) {
        holds = false;
        os << "generator " << format_monomial(*it) << " is not squarefree\n";
        j["witness"] = {{"reason", "not-squarefree"}, {"generator", format_monomial(*it)}};
      }
    }
    if (holds) {
      if (auto v = find_exchange_violation(I)) {
        holds = false;
        os << "exchange fails: u = " << format_monomial(v->u) << ", v = " << format_monomial(v->v)
           << ", i = " << format_variable(v->i) << "\n";
        j["witness"] = {{"reason", "exchange"},
                        {"u", format_monomial(v->u)},
                        {"v", format_monomial(v->v)},
                        {"i", format_variable(v->i)}};
      }
    }
  } else if (property == "unmixed") {
    const auto ass = associated_primes(I);
    holds = is_unmixed(ass);
    os << "Ass(I) = {" << primes_text(ass) << "}\n";
    j["ass_primes"] = detail::primes_json(ass);
    if (!holds) {
      os << format_prime(ass.front()) << " has height " << ass.front().height() << " but "
         << format_prime(ass.back()) << " has height " << ass.back().height() << "\n";
      j["witness"] = {{"lower", detail::prime_json(ass.front())}, {"higher", detail::prime_json(ass.back())}};
    }
  } else if (property == "cm") {
    const auto shape = cm_shape(I);
    holds = shape != CmShape::none;
    const bool ambiguous = is_ambiguous_squarefree_veronese_type(I);
    os << "shape: " << to_string(shape) << "\n";
    if (ambiguous)
      os << "note: squarefree Veronese type but not squarefree Veronese; the two readings of the "
            "CM list disagree here\n";
    j["shape"] = to_string(shape);
    j["ambiguous_squarefree_veronese_type"] = ambiguous;
  } else if (property == "codim1") {
    const auto mins = minimal_primes(I);
    holds = is_connected_in_codim_one(I);
    os << "Min(I) = {" << primes_text(mins) << "}\n";
    j["minimal_primes"] = detail::primes_json(mins);
  }

  os << property << ": " << (holds ? "holds" : "fails") << "\n";
  j["holds"] = holds;
  return {holds ? exit_holds : exit_fails, structured(o) ? dump(j) : os.str()};
}

Outcome run_classify(const Options& o) {
  const auto I = load_ideal(o).ideal;
  const auto c = classify_unmixed_polymatroidal(I);
  const int code = std::holds_alternative<NotUnmixed>(c) ? exit_fails : exit_holds;
  return {code, structured(o) ? dump(classification_json(I, c)) : classification_text(I, c)};
}

Outcome run_decompose(const Options& o, bool prime_power) {
  const auto I = load_ideal(o).ideal;
  if (prime_power) {
    const auto d = prime_power_decomposition(I);
    return {exit_holds, structured(o) ? dump(prime_power_json(I, d)) : prime_power_text(I, d)};
  }
  const auto comps = irreducible_decomposition(I);
  return {exit_holds, structured(o) ? dump(irreducible_json(I, comps)) : irreducible_text(I, comps)};
}

Outcome run_colon(const Options& o, const std::string& by) {
  const auto I = load_ideal(o).ideal;
  const auto u = parse_monomial(by, I.ambient());
  const auto Q = colon(I, u);
  if (structured(o)) {
    json j = detail::envelope("colon", I);
    j["by"] = format_monomial(u);
    j["result"] = format_ideal(Q);
    return {exit_holds, dump(j)};
  }
  return {exit_holds, "(I : " + format_monomial(u) + ") = (" + format_ideal(Q) + ")\n"};
}

Outcome emit_constructed(const Options& o, const std::string& kind, const MonomialIdeal& I) {
  if (structured(o)) {
    json j = detail::envelope("construct", I);
    j["kind"] = kind;
    j["generator_count"] = I.size();
    return {exit_holds, dump(j)};
  }
  return {exit_holds, format_ideal(I) + "\n"};
}

std::size_t ambient_for(const Options& o, std::size_t needed) {
  if (!o.vars) return needed;
  if (*o.vars < needed) throw error(errc::index_out_of_range, "--vars is smaller than the variables used");
  return *o.vars;
}

Outcome run_enumerate(const Options& o, std::size_t n, unsigned d, bool fully_supported) {
  EnumerationSpec spec;
  spec.ambient = n;
  spec.degree = d;
  spec.fully_supported = fully_supported;
  std::ostringstream os;
  auto ideals = json::array();
  const auto count = enumerate_matroidal(spec, [&](const MonomialIdeal& I) {
    if (structured(o))
      ideals.push_back(format_ideal(I));
    else
      os << format_ideal(I) << "\n";
  });
  if (structured(o)) {
    json j = {{"schema", "polymat.enumeration"},
              {"schema_version", report_schema_version},
              {"tool_version", tool_version},
              {"ambient", n},
              {"degree", d},
              {"fully_supported", fully_supported},
              {"count", count},
              {"ideals", ideals}};
    return {exit_holds, dump(j)};
  }
  std::cerr << count << " matroidal ideals\n";
  return {exit_holds, os.str()};
}

Outcome run_verify(const Options& o, const std::string& claim, std::size_t n, unsigned d,
                   std::size_t samples, std::uint64_t seed) {
  EnumerationSpec spec;
  spec.ambient = n;
  spec.degree = d;
  VerificationReport r;
  if (claim == "t1") {
    r = verify_hypergraph_characterization(spec);
  } else if (claim == "t3") {
    r = verify_structure_theorem(n, d, samples, seed);
  } else if (claim == "closure") {
    r = verify_closure_properties(samples, seed);
  } else if (claim == "ass") {
    r = cross_check_ass(spec);
    if (samples > 0) {
      r.merge(cross_check_ass_samples(samples, seed));
      r.seed = seed;
    }
  } else {
    r = verify_corollaries(spec);
  }
  return {r.ok() ? exit_holds : exit_fails, structured(o) ? dump(verification_json(r)) : verification_text(r)};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideal toolkit: decompositions, polymatroidal tests and classification."};
  app.footer(
      "Ideals are comma or newline separated monomials such as x1^2*x3, read from a file, '-' for "
      "stdin, or --ideal.\n"
      "Exit status: 0 property holds or no counterexample, 1 property fails, 2 usage or parse error.\n"
      "Environment: POLYMAT_BUDGET caps the number of candidate generator sets an exhaustive "
      "enumeration may scan (default 1048576).");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--vars", o.vars, "Number of variables n (default: largest index present)")
      ->check(CLI::PositiveNumber);
  app.set_version_flag("--version", std::string(tool_version));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Ideal file, or - for stdin");
    sub->add_option("--ideal", o.inline_ideal, "Ideal given inline instead of a file");
  };

  std::string property;
  auto* check = app.add_subcommand("check", "Test one property of an ideal");
  add_input(check);
  check->add_option("--property", property, "Property to test")
      ->required()
      ->check(CLI::IsMember({"polymatroidal", "matroidal", "unmixed", "cm", "codim1"}));

  auto* classify = app.add_subcommand("classify", "Structure case of an unmixed polymatroidal ideal");
  add_input(classify);

  bool irreducible = false;
  bool prime_power = false;
  auto* decompose = app.add_subcommand("decompose", "Irreducible or prime power decomposition");
  add_input(decompose);
  auto* irr_flag = decompose->add_flag("--irreducible", irreducible, "Irreducible components (default)");
  decompose->add_flag("--prime-power", prime_power, "Intersection of powers of associated primes")
      ->excludes(irr_flag);

  std::string by;
  auto* colon_cmd = app.add_subcommand("colon", "Colon ideal (I : u)");
  add_input(colon_cmd);
  colon_cmd->add_option("--by", by, "Monomial u, for example x1*x2^2 or 1")->required();

  auto* construct = app.add_subcommand("construct", "Build a standard polymatroidal ideal");
  construct->require_subcommand(1);
  unsigned degree = 0;
  std::vector<unsigned> caps;
  auto* veronese = construct->add_subcommand("veronese", "Veronese type ideal I_(d; a_1..a_n)");
  veronese->add_option("--degree,-d", degree, "Degree d")->required();
  veronese->add_option("--caps", caps, "Caps a_1,...,a_n")->required()->delimiter(',');
  std::vector<std::string> blocks;
  auto* multipartite =
      construct->add_subcommand("multipartite", "Edge ideal of a complete uniform multipartite hypergraph");
  multipartite->add_option("--block", blocks, "Block of variables such as x1,x2; repeat per block")
      ->required();
  multipartite->add_option("--degree,-d", degree, "Edge size d")->required();
  std::vector<std::string> factors;
  std::string tail;
  auto* product = construct->add_subcommand("product", "Product of disjoint prime powers and an optional tail");
  product->add_option("--factor", factors, "Prime power such as (x1,x2)^2; repeat per factor");
  product->add_option("--tail", tail, "Extra factor as an ideal, for example x3*x4,x3*x5");

  std::size_t n = 0;
  unsigned d = 0;
  bool fully_supported = false;
  auto* enumerate = app.add_subcommand("enumerate", "List all matroidal ideals of degree d in n variables");
  enumerate->add_option("--n", n, "Number of variables")->required();
  enumerate->add_option("--d", d, "Degree")->required();
  enumerate->add_flag("--fully-supported", fully_supported, "Only ideals using every variable");

  std::string claim;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Check a theorem against enumeration or seeded samples");
  verify->add_option("claim", claim, "t1, t3, closure, ass or corollaries")
      ->required()
      ->check(CLI::IsMember({"t1", "t3", "closure", "ass", "corollaries"}));
  verify->add_option("--n", n, "Number of variables (bound for t3)");
  verify->add_option("--d", d, "Degree (bound for t3)");
  verify->add_option("--samples", samples, "Seeded samples");
  verify->add_option("--seed", seed, "Sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    Outcome out;
    if (check->parsed()) {
      out = run_check(o, property);
    } else if (classify->parsed()) {
      out = run_classify(o);
    } else if (decompose->parsed()) {
      out = run_decompose(o, prime_power);
    } else if (colon_cmd->parsed()) {
      out = run_colon(o, by);
    } else if (veronese->parsed()) {
      out = emit_constructed(o, "veronese", construct_veronese_type({degree, caps}, ambient_for(o, caps.size())));
    } else if (multipartite->parsed()) {
      std::vector<std::vector<std::size_t>> parsed;
      std::size_t needed = 0;
      for (const auto& b : blocks) {
        parsed.push_back(parse_block(b));
        for (auto v : parsed.back()) needed = std::max(needed, v + 1);
      }
      if (o.vars && *o.vars != needed)
        throw error(errc::invalid_partition, "blocks must cover exactly x1..x" + std::to_string(*o.vars));
      out = emit_constructed(o, "multipartite",
                             construct_multipartite_edge_ideal(BlockPartition(std::move(parsed)), degree));
    } else if (product->parsed()) {
      std::vector<PrimePowerComponent> parsed;
      std::size_t needed = 0;
      for (const auto& f : factors) {
        parsed.push_back(parse_factor(f));
        for (auto v : parsed.back().prime.variables()) needed = std::max(needed, v + 1);
      }
      std::optional<MonomialIdeal> tail_ideal;
      if (!tail.empty()) {
        auto doc = parse_ideal_document(tail);
        needed = std::max(needed, doc.ideal.ambient());
        tail_ideal = doc.ideal;
      }
      const auto ambient = ambient_for(o, needed);
      if (tail_ideal) tail_ideal = parse_ideal(tail, ambient);
      if (parsed.empty() && !tail_ideal) throw error(errc::empty_input, "give at least one --factor or --tail");
      out = emit_constructed(o, "product", construct_prime_power_product(parsed, tail_ideal, ambient));
    } else if (enumerate->parsed()) {
      out = run_enumerate(o, n, d, fully_supported);
    } else if (verify->parsed()) {
      if (claim != "closure" && (n == 0 || d == 0)) {
        std::cerr << "error: verify " << claim << " needs --n and --d\n";
        return exit_usage;
      }
      out = run_verify(o, claim, n, d, samples, seed);
    }
    std::cout << out.text << std::flush;
    return out.code;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::not_proper:
      case errc::not_polymatroidal:
      case errc::not_matroidal:
      case errc::not_fully_supported:
      case errc::mixed:
      case errc::verification_failed:
      case errc::classification_incomplete:
        return exit_fails;
      default:
        return exit_usage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
