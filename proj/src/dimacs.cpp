#include <cstdlib>
#include <sstream>

#include "horn/encoder.hpp"
#include "horn/error.hpp"

namespace horn {

std::string emit_dimacs(const Cnf& formula, std::span<const std::string> comments) {
  std::string out;
  for (const auto& c : comments) out += "c " + c + '\n';
  out += "p cnf " + std::to_string(formula.var_count) + ' ' +
         std::to_string(formula.clauses.size()) + '\n';
  for (const auto& clause : formula.clauses) {
    for (Literal lit : clause) out += std::to_string(lit) + ' ';
    out += "0\n";
  }
  return out;
}

std::string emit_dimacs(const CnfInstance& instance) {
  const std::string header = "variant=" + std::string(variant_name(instance.variant)) +
                             " n=" + std::to_string(instance.n);
  return emit_dimacs(instance.formula, std::span(&header, 1));
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Cnf out;
  Clause current;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c') continue;
    if (line[first] == '%') break;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    std::istringstream fields(line);
    if (line[first] == 'p') {
      std::string p, fmt;
      long long vars = -1, clauses = -1;
      fields >> p >> fmt >> vars >> clauses;
      if (have_header || fmt != "cnf" || vars < 0 || clauses < 0) {
        throw InputError(where() + "malformed problem line");
      }
      have_header = true;
      out.var_count = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw InputError(where() + "clause before 'p cnf' header");
    std::string token;
    while (fields >> token) {
      char* end = nullptr;
      const long long lit = std::strtoll(token.c_str(), &end, 10);
      if (*end != '\0') throw InputError(where() + "bad literal '" + token + "'");
      if (lit == 0) {
        out.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > out.var_count) {
        throw InputError(where() + "literal " + token + " exceeds declared variable count");
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw InputError("missing 'p cnf' header");
  if (!current.empty()) out.clauses.push_back(std::move(current));
  if (out.clauses.size() != declared_clauses) {
    throw InputError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(out.clauses.size()));
  }
  return out;
}

}  // namespace horn
