#include "cascor/sat_core.hpp"

#include "cascor/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace cascor {

Literal Literal::from_dimacs(int lit) {
  if (lit == 0)
    throw InputError("literal 0 is not a variable");
  return Literal{static_cast<std::uint32_t>(std::abs(lit)), lit < 0};
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty())
    throw InputError("empty clause");
  std::set<std::uint32_t> seen;
  for (const Literal &lit : literals_) {
    if (lit.var == 0)
      throw InputError("variable index 0 in clause");
    if (!seen.insert(lit.var).second)
      throw InputError("variable " + std::to_string(lit.var) + " repeated in clause");
  }
}

Assignment Assignment::from_bitstring(std::string_view bits) {
  std::vector<bool> values;
  values.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw InputError("assignment bitstring contains '" + std::string(1, c) + "'");
    values.push_back(c == '1');
  }
  return Assignment(std::move(values));
}

std::string Assignment::to_bitstring() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i])
      out[i] = '1';
  return out;
}

Cnf::Cnf(std::uint32_t numVars, std::vector<Clause> clauses)
    : numVars_(numVars), clauses_(std::move(clauses)) {
  for (const Clause &clause : clauses_)
    for (const Literal &lit : clause.literals())
      if (lit.var > numVars_)
        throw InputError("variable " + std::to_string(lit.var) + " exceeds n=" +
                         std::to_string(numVars_));
}

std::vector<std::uint32_t> Cnf::occurring_vars() const {
  std::vector<bool> present(numVars_ + 1, false);
  for (const Clause &clause : clauses_)
    for (const Literal &lit : clause.literals())
      present[lit.var] = true;
  std::vector<std::uint32_t> vars;
  for (std::uint32_t v = 1; v <= numVars_; ++v)
    if (present[v])
      vars.push_back(v);
  return vars;
}

//===----------------------------------------------------------------------===//
// DIMACS
//===----------------------------------------------------------------------===//

namespace {

long long parse_integer(std::string_view token, std::size_t lineNo) {
  long long value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  if (!token.empty() && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw InputError("line " + std::to_string(lineNo) + ": non-integer token '" +
                     std::string(token) + "'");
  return value;
}

} // namespace

Cnf parse_dimacs(std::istream &in) {
  bool haveHeader = false;
  long long numVars = 0;
  long long numClauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> current;

  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token))
      continue;
    if (token == "c")
      continue;
    if (token[0] == 'c' && token.size() > 1 && !std::isdigit(static_cast<unsigned char>(token[1])))
      continue;
    if (token == "%")
      break;
    if (token == "p") {
      if (haveHeader)
        throw InputError("line " + std::to_string(lineNo) + ": duplicate header");
      std::string format, vars, count, extra;
      if (!(tokens >> format >> vars >> count) || format != "cnf" || (tokens >> extra))
        throw InputError("line " + std::to_string(lineNo) + ": malformed header");
      numVars = parse_integer(vars, lineNo);
      numClauses = parse_integer(count, lineNo);
      if (numVars < 0 || numClauses < 0 ||
          numVars > std::numeric_limits<int>::max())
        throw InputError("line " + std::to_string(lineNo) + ": header counts out of range");
      haveHeader = true;
      continue;
    }
    if (!haveHeader)
      throw InputError("line " + std::to_string(lineNo) + ": clause before header");

    do {
      long long lit = parse_integer(token, lineNo);
      if (lit == 0) {
        if (current.empty())
          throw InputError("line " + std::to_string(lineNo) + ": empty clause");
        clauses.emplace_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(lit) > numVars)
        throw InputError("line " + std::to_string(lineNo) + ": variable " +
                         std::to_string(std::llabs(lit)) + " exceeds n=" +
                         std::to_string(numVars));
      current.push_back(Literal::from_dimacs(static_cast<int>(lit)));
    } while (tokens >> token);
  }

  if (!haveHeader)
    throw InputError("missing 'p cnf' header");
  if (!current.empty())
    throw InputError("last clause is not terminated by 0");
  if (static_cast<long long>(clauses.size()) != numClauses)
    throw InputError("header declares " + std::to_string(numClauses) + " clauses, found " +
                     std::to_string(clauses.size()));
  return Cnf(static_cast<std::uint32_t>(numVars), std::move(clauses));
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string emit_dimacs(const Cnf &cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars() << ' ' << cnf.clauses().size() << '\n';
  for (const Clause &clause : cnf.clauses()) {
    for (const Literal &lit : clause.literals())
      out << lit.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const Cnf &cnf, const Assignment &a) {
  if (a.size() != cnf.num_vars())
    throw InputError("assignment has " + std::to_string(a.size()) + " bits, formula has " +
                     std::to_string(cnf.num_vars()) + " variables");
  return std::all_of(cnf.clauses().begin(), cnf.clauses().end(), [&](const Clause &clause) {
    return std::any_of(clause.literals().begin(), clause.literals().end(),
                       [&](const Literal &lit) { return lit.satisfied_by(a.value(lit.var)); });
  });
}

} // namespace cascor
