#include "boss/ci_facts.hpp"

#include <algorithm>
#include <cctype>

#include "boss/error.hpp"

namespace boss {

Node FactList::index_of(std::string_view name) const {
  for (Node i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("unknown variable '" + std::string(name) + "'");
}

void FactList::add(Node x, Node y, NodeSet z) {
  if (x < 0 || y < 0 || x >= size() || y >= size()) throw InputError("variable out of range");
  if (x == y) throw InputError("fact relates a variable to itself");
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  for (Node v : z) {
    if (v < 0 || v >= size()) throw InputError("variable out of range");
    if (v == x || v == y) throw InputError("conditioning set contains a related variable");
  }
  lookup_.emplace(std::min(x, y), std::max(x, y), z);
  facts_.push_back({x, y, std::move(z)});
}

bool FactList::contains(Node x, Node y, const NodeSet& z) const {
  return lookup_.count({std::min(x, y), std::max(x, y), z}) > 0;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct RawFact {
  std::size_t line;
  std::string x, y;
  std::vector<std::string> z;
};

std::vector<RawFact> tokenize(std::string_view text) {
  std::vector<RawFact> out;
  std::size_t start = 0, line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;

    const std::size_t sep = line.find("_||_");
    if (sep == std::string::npos) throw ParseError(line_no, "missing '_||_' in '" + line + "'");
    RawFact f{line_no, trim(std::string_view(line).substr(0, sep)), {}, {}};
    std::string rest = line.substr(sep + 4);
    const std::size_t bar = rest.find('|');
    f.y = trim(std::string_view(rest).substr(0, bar));
    if (bar != std::string::npos) {
      const std::string cond = rest.substr(bar + 1);
      std::size_t s = 0;
      while (true) {
        const std::size_t comma = cond.find(',', s);
        std::string tok = trim(std::string_view(cond).substr(
            s, comma == std::string::npos ? std::string::npos : comma - s));
        if (tok.empty()) throw ParseError(line_no, "empty conditioning variable");
        f.z.push_back(std::move(tok));
        if (comma == std::string::npos) break;
        s = comma + 1;
      }
    }
    if (f.x.empty() || f.y.empty()) throw ParseError(line_no, "missing variable in '" + line + "'");
    for (const auto* tok : {&f.x, &f.y}) {
      if (tok->find_first_of(" \t,|") != std::string::npos) {
        throw ParseError(line_no, "malformed variable '" + *tok + "'");
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

FactList build(const std::vector<RawFact>& raw, std::vector<std::string> names) {
  FactList facts(std::move(names));
  for (const auto& f : raw) {
    try {
      NodeSet z;
      for (const auto& t : f.z) z.push_back(facts.index_of(t));
      facts.add(facts.index_of(f.x), facts.index_of(f.y), std::move(z));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(f.line, e.what());
    }
  }
  return facts;
}

}  // namespace

FactList parse_fact_text(std::string_view text) {
  const auto raw = tokenize(text);
  std::vector<std::string> names;
  auto note = [&](const std::string& t) {
    if (std::find(names.begin(), names.end(), t) == names.end()) names.push_back(t);
  };
  for (const auto& f : raw) {
    note(f.x);
    note(f.y);
    for (const auto& t : f.z) note(t);
  }
  if (std::all_of(names.begin(), names.end(), is_integer)) {
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      return std::stoll(a) < std::stoll(b);
    });
  }
  return build(raw, std::move(names));
}

FactList parse_fact_text(std::string_view text, std::vector<std::string> names) {
  return build(tokenize(text), std::move(names));
}

std::string format_fact_text(const FactList& facts) {
  std::string out;
  for (const auto& f : facts.facts()) {
    out += facts.names()[f.x] + " _||_ " + facts.names()[f.y];
    for (std::size_t i = 0; i < f.z.size(); ++i) {
      out += (i == 0 ? " | " : ", ");
      out += facts.names()[f.z[i]];
    }
    out += '\n';
  }
  return out;
}

}  // namespace boss
