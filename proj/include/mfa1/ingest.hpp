#pragma once

// External weight-multiplicity tables: a TSV format carrying the dominant
// character of a single irreducible module, validated on load.  Used as the
// IrreducibleCharacter source when the built-in solvers are inconclusive.
//
// Format (UTF-8, LF):
//   #group <family> <rank> <lambda as comma-separated ints> <p; 0 = char 0>
//   <mu as comma-separated ints> TAB <multiplicity>
//   ...

#include "mfa1/charalg.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace mfa1 {

struct IngestedTable {
  GroupType type{Family::A, 1};
  Weight lambda;
  Int p = 0;  // 0 encodes characteristic zero
  std::vector<std::pair<Weight, BigInt>> rows;

  Character to_character(const RootSystem& rs) const {
    if (!(rs.type == type)) throw ingest_error("ingested table is for " + type.name());
    Character ch;
    ch.rs = &rs;
    for (const auto& [w, m] : rows) ch.mult[w] = m;
    return ch;
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline Weight parse_coords(const std::string& s, int rank, int lineno) {
  std::vector<Int> c;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty())
        throw ingest_error("line " + std::to_string(lineno) + ": empty coordinate");
      try {
        c.push_back(std::stol(cur));
      } catch (const std::exception&) {
        throw ingest_error("line " + std::to_string(lineno) + ": bad coordinate '" + cur + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (rank >= 0 && static_cast<int>(c.size()) != rank)
    throw ingest_error("line " + std::to_string(lineno) + ": expected " + std::to_string(rank) +
                       " coordinates");
  return Weight(std::move(c));
}

}  // namespace detail

inline IngestedTable ingest(std::istream& in) {
  IngestedTable tab;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  RootSystem rs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      auto tok = detail::split_ws(line);
      if (tok.size() != 5 || tok[0] != "#group")
        throw ingest_error("line " + std::to_string(lineno) +
                           ": expected header '#group <family> <rank> <lambda> <p>'");
      if (tok[1].size() != 1)
        throw ingest_error("line " + std::to_string(lineno) + ": bad family '" + tok[1] + "'");
      tab.type.family = family_from_letter(tok[1][0]);
      tab.type.rank = std::stoi(tok[2]);
      if (!tab.type.valid())
        throw ingest_error("line " + std::to_string(lineno) + ": invalid rank for family");
      tab.lambda = detail::parse_coords(tok[3], tab.type.rank, lineno);
      tab.p = std::stol(tok[4]);
      if (tab.p < 0) throw ingest_error("line " + std::to_string(lineno) + ": negative p");
      if (!tab.lambda.dominant())
        throw ingest_error("line " + std::to_string(lineno) + ": highest weight not dominant");
      rs = build(tab.type);
      have_header = true;
      continue;
    }
    auto sep = line.find('\t');
    if (sep == std::string::npos)
      throw ingest_error("line " + std::to_string(lineno) + ": expected '<coords>\\t<mult>'");
    Weight mu = detail::parse_coords(line.substr(0, sep), tab.type.rank, lineno);
    std::string ms = line.substr(sep + 1);
    BigInt mult;
    try {
      mult = BigInt(ms);
    } catch (const std::exception&) {
      throw ingest_error("line " + std::to_string(lineno) + ": bad multiplicity '" + ms + "'");
    }
    if (mult <= 0)
      throw ingest_error("line " + std::to_string(lineno) + ": multiplicity must be positive");
    if (!mu.dominant())
      throw ingest_error("line " + std::to_string(lineno) + ": row weight not dominant");
    if (!root_coords_diff(rs, tab.lambda, mu))
      throw ingest_error("line " + std::to_string(lineno) +
                         ": row weight not below the highest weight");
    for (const auto& [w, m] : tab.rows)
      if (w == mu) throw ingest_error("line " + std::to_string(lineno) + ": duplicate row");
    tab.rows.push_back({mu, mult});
  }
  if (!have_header) throw ingest_error("missing '#group' header");
  bool have_top = false;
  for (const auto& [w, m] : tab.rows)
    if (w == tab.lambda) {
      have_top = true;
      if (m != 1) throw ingest_error("highest weight must have multiplicity 1");
    }
  if (!have_top) throw ingest_error("highest weight row missing");
  return tab;
}

inline IngestedTable ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ingest_error("cannot open '" + path + "'");
  return ingest(in);
}

inline std::string to_tsv(const GroupType& type, const Weight& lambda, Int p,
                          const Character& ch) {
  std::ostringstream out;
  auto coords = [](const Weight& w) {
    std::string s;
    for (int i = 0; i < w.rank(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i]);
    }
    return s;
  };
  out << "#group " << family_letter(type.family) << " " << type.rank << " " << coords(lambda)
      << " " << p << "\n";
  for (const auto& [w, m] : ch.mult) out << coords(w) << "\t" << m.get_str() << "\n";
  return out.str();
}

}  // namespace mfa1
