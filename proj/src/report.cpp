#include "foxcalc/report.hpp"

#include <json.hpp>

namespace foxcalc {

using ordered_json = nlohmann::ordered_json;

void Report::set(const std::string& key, Value v) {
  for (auto& [k, old] : entries_)
    if (k == key) {
      old = std::move(v);
      return;
    }
  entries_.emplace_back(key, std::move(v));
}

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

ordered_json to_json(const Report::Value& v) {
  return std::visit(Overloaded{
                        [](const std::string& s) { return ordered_json(s); },
                        [](bool b) { return ordered_json(b); },
                        [](long long x) { return ordered_json(x); },
                        [](const std::vector<std::string>& xs) { return ordered_json(xs); },
                        [](const StringMatrix& m) { return ordered_json(m); },
                        [](const TorsionValue& t) { return ordered_json{{"value", t.value}, {"up_to", t.up_to}}; },
                    },
                    v);
}

std::string to_text(const std::string& key, const Report::Value& v) {
  return std::visit(Overloaded{
                        [&](const std::string& s) { return (key == "value" ? s : key + ": " + s) + "\n"; },
                        [&](bool b) { return key + ": " + (b ? "true" : "false") + "\n"; },
                        [&](long long x) { return key + ": " + std::to_string(x) + "\n"; },
                        [&](const std::vector<std::string>& xs) {
                          std::string out = key + ":\n";
                          for (const auto& x : xs) out += "  " + x + "\n";
                          return out;
                        },
                        [&](const StringMatrix& m) {
                          std::string out = key + ":\n";
                          for (const auto& row : m) {
                            out += "  [";
                            for (std::size_t j = 0; j < row.size(); ++j) out += (j ? ", " : "") + row[j];
                            out += "]\n";
                          }
                          return out;
                        },
                        [&](const TorsionValue& t) { return key + ": " + t.value + " (up to " + t.up_to + ")\n"; },
                    },
                    v);
}

}  // namespace

std::string Report::emit(Format format) const {
  if (format == Format::Json) {
    ordered_json doc;
    doc["command"] = command_;
    for (const auto& [k, v] : entries_) doc[k] = to_json(v);
    doc["diagnostics"] = diagnostics_;
    return doc.dump() + "\n";
  }
  std::string out;
  for (const auto& [k, v] : entries_) out += to_text(k, v);
  for (const auto& d : diagnostics_) out += "diagnostic: " + d + "\n";
  return out;
}

namespace {

template <class M, class F>
StringMatrix strings_of(const M& m, F&& f) {
  StringMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(f(m(i, j)));
  return out;
}

}  // namespace

StringMatrix matrix_strings(const FreeMatrix& m, const std::vector<std::string>& names) {
  return strings_of(m, [&](const FreeRingElement& e) { return to_string(e, names); });
}

StringMatrix matrix_strings(const LaurentMatrix& m, const std::vector<std::string>& names) {
  return strings_of(m, [&](const LaurentPolynomial& e) { return to_string(e, names); });
}

StringMatrix matrix_strings(const FractionMatrix& m, const std::vector<std::string>& names) {
  return strings_of(m, [&](const LaurentFraction& e) { return to_string(e, names); });
}

StringMatrix matrix_strings(const IntMatrix& m) {
  return strings_of(m, [](Coefficient c) { return std::to_string(c); });
}

StringMatrix parse_report_matrix(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("malformed JSON report: ") + e.what(), e.byte);
  }
  if (!doc.contains("matrix")) throw ParseError("report has no matrix member", 0);
  try {
    return doc.at("matrix").get<StringMatrix>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("matrix member has the wrong shape: ") + e.what(), 0);
  }
}

}  // namespace foxcalc
