#include "document.hpp"

#include <sstream>

namespace flagforge::cli {

std::vector<std::string> variable_names(int nvars, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

Json polynomial_document(const Polynomial& p, const std::string& var_prefix) {
  Json doc;
  doc["variables"] = variable_names(p.nvars(), var_prefix);
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = e;
    term["coef"] = c.get_str();
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

Polynomial polynomial_from_document(const Json& doc) {
  const auto& vars = doc.at("variables");
  if (!vars.is_array() || vars.empty()) {
    throw std::invalid_argument("document needs a nonempty variable list");
  }
  Polynomial p(static_cast<int>(vars.size()));
  for (const auto& term : doc.at("terms")) {
    Exponents e = term.at("exp").get<Exponents>();
    Int c(term.at("coef").get<std::string>());
    if (c == 0) throw std::invalid_argument("document carries a zero term");
    p.add_term(e, c);
  }
  return p;
}

std::string polynomial_csv(const Polynomial& p, const std::string& var_prefix) {
  std::ostringstream os;
  for (const std::string& name : variable_names(p.nvars(), var_prefix)) {
    os << name << ",";
  }
  os << "coef\n";
  for (const auto& [e, c] : p.terms()) {
    for (int x : e) os << x << ",";
    os << c.get_str() << "\n";
  }
  return os.str();
}

}  // namespace flagforge::cli
