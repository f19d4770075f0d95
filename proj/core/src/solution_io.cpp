#include "oneloop/solution_io.hpp"

#include <sstream>

namespace oneloop {

namespace {

std::vector<NFElem> parse_element_list(const FieldPtr& field,
                                       const std::string& text) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected a bracketed value list");
  std::string inner = text.substr(open + 1, close - open - 1);
  std::vector<NFElem> out;
  std::string cur;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") == std::string::npos)
      throw ParseError("empty entry in value list");
    out.push_back(parse_element(field, cur));
    cur.clear();
  };
  for (char ch : inner) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) flush();
  return out;
}

}  // namespace

SolutionFile parse_solution(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  SolutionFile sol;
  while (std::getline(is, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("field", 0) == 0) {
      sol.field = NumberField::parse_header(line);
    } else if (line.rfind("c", 0) == 0 &&
               line.find('=') != std::string::npos &&
               line.find('=') < line.find('[')) {
      if (!sol.field)
        throw ParseError("the field header must come before the values");
      sol.c = parse_element_list(sol.field, line.substr(line.find('=') + 1));
    } else if (line.rfind("theta", 0) == 0) {
      if (!sol.field)
        throw ParseError("the field header must come before the values");
      sol.theta =
          parse_element_list(sol.field, line.substr(line.find('=') + 1));
    } else {
      throw ParseError("unrecognized solution line: " + line);
    }
  }
  if (!sol.field) throw ParseError("solution file lacks a field header");
  if (sol.c.empty()) throw ParseError("solution file lacks a 'c = [...]' line");
  return sol;
}

std::string solution_to_string(const SolutionFile& s) {
  std::ostringstream os;
  os << s.field->header() << "\n";
  os << "c = [";
  for (size_t i = 0; i < s.c.size(); ++i) {
    if (i) os << ", ";
    os << s.c[i].str();
  }
  os << "]\n";
  if (s.theta) {
    os << "theta = [";
    for (size_t i = 0; i < s.theta->size(); ++i) {
      if (i) os << ", ";
      os << (*s.theta)[i].str();
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace oneloop
