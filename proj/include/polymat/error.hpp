#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polymat {

enum class errc {
  invalid_ambient,
  empty_ideal,
  not_proper,
  verification_failed,
  oracle_budget_exceeded,
  not_polymatroidal,
  not_matroidal,
  not_fully_supported,
  empty_family,
  degree_too_large,
  support_overlap,
  invalid_partition,
  classification_incomplete,
  mixed,
  budget_exceeded,
  syntax_error,
  index_out_of_range,
  empty_input,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_ambient: return "InvalidAmbient";
    case errc::empty_ideal: return "EmptyIdeal";
    case errc::not_proper: return "NotProper";
    case errc::verification_failed: return "VerificationFailed";
    case errc::oracle_budget_exceeded: return "OracleBudgetExceeded";
    case errc::not_polymatroidal: return "NotPolymatroidal";
    case errc::not_matroidal: return "NotMatroidal";
    case errc::not_fully_supported: return "NotFullySupported";
    case errc::empty_family: return "EmptyFamily";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::support_overlap: return "SupportOverlap";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::classification_incomplete: return "ClassificationIncomplete";
    case errc::mixed: return "Mixed";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::syntax_error: return "SyntaxError";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_input: return "EmptyInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

/// Parse failures additionally record where in the input they happened (1-based).
class syntax_error : public error {
public:
  syntax_error(const std::string& what, std::size_t line, std::size_t column)
      : error(errc::syntax_error, what + " at line " + std::to_string(line) + ", column " +
                                      std::to_string(column)),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace polymat
