#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace polymat {

/// A monomial x_1^{b_1} ... x_n^{b_n} stored as its exponent vector over a
/// fixed ambient variable count n. Variables are indexed from 0 internally.
class Monomial {
public:
  using exponent_type = std::uint16_t;

  Monomial() = default;

  /// The unit monomial 1 in n variables.
  explicit Monomial(std::size_t ambient) : exponents_(ambient, 0) {}

  explicit Monomial(std::vector<exponent_type> exponents)
      : exponents_(std::move(exponents)) {
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0u);
  }

  Monomial(std::initializer_list<exponent_type> exponents)
      : Monomial(std::vector<exponent_type>(exponents)) {}

  static Monomial variable(std::size_t ambient, std::size_t index, exponent_type power = 1) {
    if (index >= ambient)
      throw error(errc::index_out_of_range,
                  "variable x" + std::to_string(index + 1) + " in " + std::to_string(ambient) +
                      " variables");
    Monomial m(ambient);
    m.exponents_[index] = power;
    m.degree_ = power;
    return m;
  }

  /// Squarefree monomial on the listed variables.
  static Monomial product_of(std::size_t ambient, std::span<const std::size_t> variables) {
    Monomial m(ambient);
    for (auto v : variables) {
      if (v >= ambient)
        throw error(errc::index_out_of_range, "variable index outside ambient");
      if (m.exponents_[v] == 0) {
        m.exponents_[v] = 1;
        ++m.degree_;
      }
    }
    return m;
  }

  std::size_t ambient() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  exponent_type operator[](std::size_t i) const noexcept { return exponents_[i]; }
  std::span<const exponent_type> exponents() const noexcept { return exponents_; }

  bool is_one() const noexcept { return degree_ == 0; }

  bool is_squarefree() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e <= 1; });
  }

  /// True for x_i^a with a >= 1.
  bool is_pure_power() const noexcept {
    return std::count_if(exponents_.begin(), exponents_.end(), [](auto e) { return e > 0; }) == 1;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] != 0) out.push_back(i);
    return out;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    Monomial out(a.ambient());
    for (std::size_t i = 0; i < a.ambient(); ++i)
      out.exponents_[i] = static_cast<exponent_type>(a.exponents_[i] + b.exponents_[i]);
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  /// a / b, assuming b divides a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    Monomial out(a.ambient());
    for (std::size_t i = 0; i < a.ambient(); ++i)
      out.exponents_[i] = static_cast<exponent_type>(a.exponents_[i] - b.exponents_[i]);
    out.degree_ = a.degree_ - b.degree_;
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exponents_ == b.exponents_;
  }

  /// Graded order: total degree first, then x_1 > x_2 > ... lexicographically,
  /// so that x1^2 < x1*x2 < x2^2 within one degree when listing ascending.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(b.exponents_.begin(), b.exponents_.end(),
                                                  a.exponents_.begin(), a.exponents_.end());
  }

  static void check_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.ambient() != b.ambient())
      throw error(errc::invalid_ambient, "monomials in " + std::to_string(a.ambient()) + " and " +
                                             std::to_string(b.ambient()) + " variables");
  }

private:
  std::vector<exponent_type> exponents_;
  unsigned degree_ = 0;
};

namespace detail {

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial::check_same_ambient(a, b);
  std::vector<Monomial::exponent_type> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial::check_same_ambient(a, b);
  std::vector<Monomial::exponent_type> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

} // namespace detail

/// A prime ideal generated by a nonempty set of variables.
class VariablePrime {
public:
  VariablePrime() = default;

  explicit VariablePrime(std::vector<std::size_t> variables) : variables_(std::move(variables)) {
    std::sort(variables_.begin(), variables_.end());
    variables_.erase(std::unique(variables_.begin(), variables_.end()), variables_.end());
    if (variables_.empty())
      throw error(errc::empty_ideal, "a variable prime needs at least one variable");
  }

  VariablePrime(std::initializer_list<std::size_t> variables)
      : VariablePrime(std::vector<std::size_t>(variables)) {}

  std::span<const std::size_t> variables() const noexcept { return variables_; }
  std::size_t height() const noexcept { return variables_.size(); }

  bool contains(std::size_t variable) const noexcept {
    return std::binary_search(variables_.begin(), variables_.end(), variable);
  }

  bool is_subset_of(const VariablePrime& other) const {
    return std::includes(other.variables_.begin(), other.variables_.end(), variables_.begin(),
                         variables_.end());
  }

  bool disjoint_from(const VariablePrime& other) const {
    std::vector<std::size_t> common;
    std::set_intersection(variables_.begin(), variables_.end(), other.variables_.begin(),
                          other.variables_.end(), std::back_inserter(common));
    return common.empty();
  }

  /// Sum of the exponents of g on this prime's variables.
  unsigned degree_of(const Monomial& g) const {
    unsigned s = 0;
    for (auto v : variables_) s += g[v];
    return s;
  }

  friend bool operator==(const VariablePrime&, const VariablePrime&) = default;

  /// Height first, then lexicographic on the sorted variable list.
  friend std::strong_ordering operator<=>(const VariablePrime& a, const VariablePrime& b) {
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.variables_.begin(), a.variables_.end(),
                                                  b.variables_.begin(), b.variables_.end());
  }

private:
  std::vector<std::size_t> variables_;
};

} // namespace polymat
