#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "valuta/decomposition.hpp"
#include "valuta/families.hpp"
#include "valuta/invariants.hpp"
#include "valuta/matroid.hpp"
#include "valuta/poly.hpp"

namespace valuta {

// ---------------------------------------------------------------------------
// .mtx matroid text format
// ---------------------------------------------------------------------------
// Optional '#' comment lines, a header `n=<int> k=<int>`, then one basis per
// line as ascending space-separated element labels.  The empty basis (k=0)
// is implied by the header and carries no basis lines.

inline std::string to_mtx(const Matroid& m) {
  std::ostringstream out;
  out << "n=" << m.size() << " k=" << m.rank() << "\n";
  for (Mask b : m.bases()) {  // bases() is already sorted by mask
    bool first = true;
    for (int e : elements_of(b)) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    if (b != 0) out << "\n";
  }
  return out.str();
}

inline Matroid parse_mtx(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, k = -1;
  std::vector<Mask> bases;
  bool saw_header = false;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (!saw_header) {
      if (std::sscanf(line.c_str() + start, "n=%d k=%d", &n, &k) != 2)
        throw ParseError("io", "expected header 'n=<int> k=<int>', got: " +
                                   line);
      if (n < 0 || k < 0 || k > n)
        throw ParseError("io", "header needs 0 <= k <= n");
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    Mask b = 0;
    int e;
    while (ls >> e) {
      if (e < 1 || e > n)
        throw ParseError("io", "element " + std::to_string(e) +
                                   " outside 1.." + std::to_string(n));
      if (b & bit_of(e))
        throw ParseError("io", "repeated element in basis line: " + line);
      b |= bit_of(e);
    }
    if (!ls.eof())
      throw ParseError("io", "malformed basis line: " + line);
    if (popcount(b) != k)
      throw ParseError("io", "basis line has " +
                                 std::to_string(popcount(b)) +
                                 " elements, expected k=" + std::to_string(k));
    bases.push_back(b);
  }
  if (!saw_header) throw ParseError("io", "missing 'n=... k=...' header");
  if (k == 0 && bases.empty()) bases.push_back(0);
  return Matroid::from_bases(n, std::move(bases));
}

inline Matroid load_mtx(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mtx(buf.str());
}

// ---------------------------------------------------------------------------
// Descriptor grammar: uniform:k,n  cuspidal:r,k,h,n  minimal:k,n
//                     sum:(d1)+(d2)+...
// ---------------------------------------------------------------------------

inline std::string to_string(const MatroidDescriptor& d) {
  using Kind = MatroidDescriptor::Kind;
  switch (d.kind) {
    case Kind::uniform:
      return "uniform:" + std::to_string(d.k) + "," + std::to_string(d.n);
    case Kind::cuspidal:
      return "cuspidal:" + std::to_string(d.r) + "," + std::to_string(d.k) +
             "," + std::to_string(d.h) + "," + std::to_string(d.n);
    case Kind::minimal:
      return "minimal:" + std::to_string(d.k) + "," + std::to_string(d.n);
    case Kind::sum: {
      std::string out = "sum:";
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (i) out += "+";
        out += "(" + to_string(d.parts[i]) + ")";
      }
      return out;
    }
  }
  return "?";
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& body,
                                       std::size_t expect,
                                       const std::string& what) {
  std::vector<int> out;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("io", "bad integer '" + item + "' in " + what);
    }
  }
  if (out.size() != expect)
    throw ParseError("io", what + " needs " + std::to_string(expect) +
                               " comma-separated integers");
  return out;
}

}  // namespace detail

inline MatroidDescriptor parse_descriptor(const std::string& text) {
  const std::string s = text;
  auto starts_with = [&](const char* prefix) {
    return s.rfind(prefix, 0) == 0;
  };
  if (starts_with("uniform:")) {
    auto v = detail::parse_int_list(s.substr(8), 2, "uniform");
    return MatroidDescriptor::uniform(v[0], v[1]);
  }
  if (starts_with("cuspidal:")) {
    auto v = detail::parse_int_list(s.substr(9), 4, "cuspidal");
    return MatroidDescriptor::cuspidal(v[0], v[1], v[2], v[3]);
  }
  if (starts_with("minimal:")) {
    auto v = detail::parse_int_list(s.substr(8), 2, "minimal");
    return MatroidDescriptor::minimal(v[0], v[1]);
  }
  if (starts_with("sum:")) {
    std::vector<MatroidDescriptor> parts;
    std::size_t i = 4;
    while (i < s.size()) {
      if (s[i] != '(')
        throw ParseError("io", "expected '(' in sum descriptor: " + s);
      int depth = 1;
      std::size_t j = i + 1;
      while (j < s.size() && depth > 0) {
        if (s[j] == '(') ++depth;
        if (s[j] == ')') --depth;
        ++j;
      }
      if (depth != 0)
        throw ParseError("io", "unbalanced parentheses in: " + s);
      parts.push_back(parse_descriptor(s.substr(i + 1, j - i - 2)));
      i = j;
      if (i < s.size()) {
        if (s[i] != '+')
          throw ParseError("io", "expected '+' between sum parts: " + s);
        ++i;
      }
    }
    if (parts.empty())
      throw ParseError("io", "empty sum descriptor: " + s);
    return MatroidDescriptor::sum(std::move(parts));
  }
  throw ParseError("io", "unrecognized descriptor: " + s);
}

inline bool looks_like_descriptor(const std::string& s) {
  return s.rfind("uniform:", 0) == 0 || s.rfind("cuspidal:", 0) == 0 ||
         s.rfind("minimal:", 0) == 0 || s.rfind("sum:", 0) == 0;
}

// ---------------------------------------------------------------------------
// Polynomial text / JSON
// ---------------------------------------------------------------------------

/// Terms in graded-lex descending order, e.g. `x^2*y + x*y^2 - 2*x`.
inline std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const auto [i, j] = m;
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool has_vars = i > 0 || j > 0;
    if (abs_c != 1 || !has_vars) {
      out << abs_c.get_str();
      if (has_vars) out << "*";
    }
    if (i >= 1) {
      out << "x";
      if (i > 1) out << "^" << i;
      if (j >= 1) out << "*";
    }
    if (j >= 1) {
      out << "y";
      if (j > 1) out << "^" << j;
    }
  }
  return out.str();
}

/// JSON form: array of [i, j, c] triples in graded-lex descending order.
inline nlohmann::json to_json(const BivarPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    if (!c.fits_slong_p())
      throw InvalidArgument("io", "coefficient too large for JSON output");
    arr.push_back({m.first, m.second, c.get_si()});
  }
  return arr;
}

// ---------------------------------------------------------------------------
// G-invariant text / JSON
// ---------------------------------------------------------------------------

/// JSON form: array of ["0/1-string", coeff], sorted by bitstring descending.
inline nlohmann::json to_json(const GInvariantVector& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [s, c] : g.coeffs)
    arr.push_back({GInvariantVector::sequence_string(s, g.n), c});
  return arr;
}

inline std::string to_string(const GInvariantVector& g) {
  std::ostringstream out;
  for (const auto& [s, c] : g.coeffs)
    out << GInvariantVector::sequence_string(s, g.n) << " " << c << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// ClassReport JSON (witness minors embedded as .mtx fragments)
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const ClassReport& r, const Matroid& m) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["elementary_split"] = r.elementary_split;
  j["class_N"] = r.class_n;
  j["class_U"] = r.class_u;
  j["class_T"] = r.class_t;
  j["schubert"] = r.schubert;
  j["sparse_paving"] = r.sparse_paving;
  j["paving"] = r.paving;
  j["connected"] = r.connected;
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [test, w] : r.witnesses) {
    nlohmann::json entry;
    entry["contract"] = elements_of(w.contract);
    entry["delete"] = elements_of(w.erase);
    entry["minor"] = to_mtx(m.contract_delete(w.contract, w.erase));
    witnesses[test] = entry;
  }
  j["witnesses"] = witnesses;
  return j;
}

// ---------------------------------------------------------------------------
// Decomposition JSON / text
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json j;
  j["basis"] = to_string(d.basis);
  j["n"] = d.n;
  j["k"] = d.k;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [desc, coeff] : d.terms)
    terms.push_back({to_string(desc), coeff});
  j["terms"] = terms;
  return j;
}

inline std::string to_string(const Decomposition& d) {
  std::ostringstream out;
  for (const auto& [desc, coeff] : d.terms) {
    out << (coeff >= 0 ? "+" : "-") << std::abs(coeff) << " * "
        << to_string(desc) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RankTable text / CSV / JSON
// ---------------------------------------------------------------------------

inline std::string to_aligned_text(const RankTable& t) {
  std::ostringstream out;
  out << "family      n   k   t_rank  g_rank\n";
  for (const auto& row : t.rows) {
    out << row.family;
    for (std::size_t i = row.family.size(); i < 12; ++i) out << ' ';
    std::string n = std::to_string(row.n), k = std::to_string(row.k);
    out << n;
    for (std::size_t i = n.size(); i < 4; ++i) out << ' ';
    out << k;
    for (std::size_t i = k.size(); i < 4; ++i) out << ' ';
    std::string tr = row.t_rank ? std::to_string(*row.t_rank) : "-";
    out << tr;
    for (std::size_t i = tr.size(); i < 8; ++i) out << ' ';
    out << (row.g_rank ? std::to_string(*row.g_rank) : "-") << "\n";
  }
  return out.str();
}

inline std::string to_csv(const RankTable& t) {
  std::ostringstream out;
  out << "family,n,k,t_rank,g_rank\n";
  for (const auto& row : t.rows) {
    out << row.family << "," << row.n << "," << row.k << ",";
    if (row.t_rank) out << *row.t_rank;
    out << ",";
    if (row.g_rank) out << *row.g_rank;
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json to_json(const RankTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json j;
    j["family"] = row.family;
    j["n"] = row.n;
    j["k"] = row.k;
    if (row.t_rank) j["t_rank"] = *row.t_rank;
    if (row.g_rank) j["g_rank"] = *row.g_rank;
    arr.push_back(j);
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Unified input: .mtx path or descriptor string
// ---------------------------------------------------------------------------

inline Matroid load_input(const std::string& input) {
  if (looks_like_descriptor(input)) return realize(parse_descriptor(input));
  std::ifstream probe(input);
  if (probe.good()) return load_mtx(input);
  throw ParseError("io", "input is neither a readable file nor a descriptor: " +
                             input);
}

}  // namespace valuta
