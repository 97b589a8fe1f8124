#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "foxcalc/linalg.hpp"
#include "foxcalc/nilpotent.hpp"

namespace foxcalc {

enum class Format { Text, Json };

using StringMatrix = std::vector<std::vector<std::string>>;

struct TorsionValue {
  std::string value;
  std::string up_to;
};

/// Ordered key/value result document; renders as `key: value` text or JSON.
class Report {
 public:
  using Value = std::variant<std::string, bool, long long, std::vector<std::string>, StringMatrix, TorsionValue>;

  explicit Report(std::string command) : command_(std::move(command)) {}

  void set(const std::string& key, Value v);
  void add_diagnostic(std::string message) { diagnostics_.push_back(std::move(message)); }

  const std::string& command() const noexcept { return command_; }
  const std::vector<std::pair<std::string, Value>>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

  std::string emit(Format format) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, Value>> entries_;
  std::vector<std::string> diagnostics_;
};

StringMatrix matrix_strings(const FreeMatrix& m, const std::vector<std::string>& names = {});
StringMatrix matrix_strings(const LaurentMatrix& m, const std::vector<std::string>& names = {});
StringMatrix matrix_strings(const FractionMatrix& m, const std::vector<std::string>& names = {});
StringMatrix matrix_strings(const IntMatrix& m);

/// Reads the "matrix" member of a JSON report back into printed entries.
StringMatrix parse_report_matrix(std::string_view json_text);

}  // namespace foxcalc
