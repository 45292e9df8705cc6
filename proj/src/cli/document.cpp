#include "nis2/cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nis2::cli {

using gf::Elem;
using gf::Vector;
using liesuper::Parity;
using nlohmann::ordered_json;

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned get_uint(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<unsigned>();
}

template <std::size_t N>
std::vector<std::array<unsigned, N>> get_entries(const ordered_json& j, const char* key) {
  std::vector<std::array<unsigned, N>> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != N)
      throw InputError(std::string("each \"") + key + "\" entry must have " + std::to_string(N) + " integers");
    std::array<unsigned, N> a{};
    for (std::size_t t = 0; t < N; ++t) {
      if (!e[t].is_number_unsigned()) throw InputError(std::string("\"") + key + "\" entries must be non-negative integers");
      a[t] = e[t].get<unsigned>();
    }
    out.push_back(a);
  }
  return out;
}

template <std::size_t N>
void write_entries(std::ostringstream& os, const char* key, std::vector<std::array<unsigned, N>> entries) {
  std::sort(entries.begin(), entries.end());
  os << "  \"" << key << "\": [";
  for (std::size_t r = 0; r < entries.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t t = 0; t < N; ++t) os << (t ? ", " : "") << entries[r][t];
    os << ']';
  }
  os << (entries.empty() ? "]" : "\n  ]");
}

Parity parity_of(const AlgebraDocument& d, unsigned i) { return i < d.dim_even ? Parity::Even : Parity::Odd; }

void check_document(const AlgebraDocument& d) {
  const std::size_t n = d.dim_even + d.dim_odd;
  if (!is_prime(d.p) || d.p > 251) throw InputError("p must be a prime below 256");
  if (n > 256) throw InputError("dimension above 256 is not supported");
  if (!d.labels.empty() && d.labels.size() != n) throw InputError("\"labels\" must name every basis vector");
  std::set<std::string> seen_labels(d.labels.begin(), d.labels.end());
  if (seen_labels.size() != d.labels.size()) throw InputError("labels must be distinct");
  std::set<std::array<unsigned, 3>> seen;
  for (const auto& [i, j, k, c] : d.bracket) {
    if (i >= n || j >= n || k >= n) throw InputError("bracket index out of range");
    if (i >= j) throw InputError("bracket entries need i < j (diagonal and i > j are implied)");
    if (c >= d.p) throw InputError("bracket coefficient not reduced mod p");
    if (!seen.insert({i, j, k}).second) throw InputError("duplicate bracket entry");
    if (c && parity_of(d, k) != parity_of(d, i) + parity_of(d, j))
      throw InputError("bracket entry [" + std::to_string(i) + "," + std::to_string(j) + "] -> " + std::to_string(k) +
                       " violates parity");
  }
  seen.clear();
  for (const auto& [i, k, c] : d.squaring) {
    if (i >= n || k >= n) throw InputError("squaring index out of range");
    if (i < d.dim_even) throw InputError("squaring entries are for odd basis vectors only");
    if (k >= d.dim_even && c) throw InputError("squares of odd vectors must be even");
    if (c >= d.p) throw InputError("squaring coefficient not reduced mod p");
    if (!seen.insert({i, k, 0}).second) throw InputError("duplicate squaring entry");
  }
  if (d.p_structure) {
    seen.clear();
    for (const auto& [i, k, c] : *d.p_structure) {
      if (i >= d.dim_even || k >= d.dim_even) throw InputError("pStructure entries must use even indices");
      if (c >= d.p) throw InputError("pStructure coefficient not reduced mod p");
      if (!seen.insert({i, k, 0}).second) throw InputError("duplicate pStructure entry");
    }
  }
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document must be a JSON object");
  static const std::set<std::string> known{"p", "dimEven", "dimOdd", "labels", "bracket", "squaring", "pStructure"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw InputError("unknown key \"" + key + "\"");
  AlgebraDocument d;
  d.p = get_uint(j, "p");
  d.dim_even = get_uint(j, "dimEven");
  d.dim_odd = get_uint(j, "dimOdd");
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("\"labels\" must be an array of strings");
      d.labels.push_back(l.get<std::string>());
    }
  }
  d.bracket = get_entries<4>(j, "bracket");
  d.squaring = get_entries<3>(j, "squaring");
  if (j.contains("pStructure")) d.p_structure = get_entries<3>(j, "pStructure");
  check_document(d);
  return d;
}

std::string serialize_document(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"p\": " << doc.p << ",\n  \"dimEven\": " << doc.dim_even << ",\n  \"dimOdd\": " << doc.dim_odd;
  if (!doc.labels.empty()) {
    os << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < doc.labels.size(); ++i) os << (i ? ", " : "") << ordered_json(doc.labels[i]).dump();
    os << ']';
  }
  os << ",\n";
  write_entries(os, "bracket", doc.bracket);
  os << ",\n";
  write_entries(os, "squaring", doc.squaring);
  if (doc.p_structure) {
    os << ",\n";
    write_entries(os, "pStructure", *doc.p_structure);
  }
  os << "\n}\n";
  return os.str();
}

liesuper::SuperAlgebra to_algebra(const AlgebraDocument& doc, std::optional<unsigned> field_override) {
  check_document(doc);
  const unsigned p = field_override.value_or(doc.p);
  if (!is_prime(p) || p > 251) throw InputError("--field must be a prime below 256");
  const gf::Field f(p);
  const std::size_t n = doc.dim_even + doc.dim_odd;
  liesuper::SuperAlgebra g(f, doc.dim_even, doc.dim_odd);
  std::map<std::pair<unsigned, unsigned>, Vector> br;
  for (const auto& [i, j, k, c] : doc.bracket) {
    auto& v = br.try_emplace({i, j}, Vector(n, 0)).first->second;
    v[k] = f.reduce(long(c));
  }
  for (const auto& [ij, v] : br) g.set_bracket_pair(ij.first, ij.second, v);
  std::map<unsigned, Vector> sq;
  for (const auto& [i, k, c] : doc.squaring) sq.try_emplace(i, Vector(n, 0)).first->second[k] = f.reduce(long(c));
  for (const auto& [i, v] : sq) {
    if (g.has_squaring_table()) g.set_square(i, v);
    else g.set_bracket(i, i, gf::scale(f, 2, v));
  }
  if (!doc.labels.empty()) g.set_labels(doc.labels);
  return g;
}

std::optional<restricted::PStructure> to_p_structure(const AlgebraDocument& doc, const liesuper::SuperAlgebra& g) {
  if (!doc.p_structure) return std::nullopt;
  restricted::PStructure ps;
  ps.p_map.assign(g.dim_even(), Vector(g.dim(), 0));
  for (const auto& [i, k, c] : *doc.p_structure) ps.p_map[i][k] = g.field().reduce(long(c));
  return ps;
}

AlgebraDocument to_document(const liesuper::SuperAlgebra& g, const std::optional<restricted::PStructure>& ps) {
  AlgebraDocument d;
  d.p = g.p();
  d.dim_even = g.dim_even();
  d.dim_odd = g.dim_odd();
  d.labels = g.labels();
  const std::size_t n = g.dim();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      for (unsigned k = 0; k < n; ++k)
        if (const Elem c = g.bracket_coeff(i, j, k)) d.bracket.push_back({i, j, k, unsigned(c)});
  for (unsigned i = unsigned(g.dim_even()); i < n; ++i) {
    const Vector s = g.square(gf::unit_vector(n, i));
    for (unsigned k = 0; k < n; ++k)
      if (s[k]) d.squaring.push_back({i, k, unsigned(s[k])});
  }
  if (ps) {
    d.p_structure.emplace();
    for (unsigned i = 0; i < ps->p_map.size(); ++i)
      for (unsigned k = 0; k < n; ++k)
        if (ps->p_map[i][k]) d.p_structure->push_back({i, k, unsigned(ps->p_map[i][k])});
  }
  return d;
}

build::AssocSuperAlgebra parse_assoc(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document must be a JSON object");
  const unsigned p = get_uint(j, "p");
  if (!is_prime(p) || p > 251) throw InputError("p must be a prime below 256");
  const std::size_t de = get_uint(j, "dimEven"), dodd = get_uint(j, "dimOdd"), n = de + dodd;
  const unsigned unit = get_uint(j, "unit");
  const gf::Field f(p);
  std::vector<Vector> mult(n * n, Vector(n, 0));
  for (const auto& [a, b, k, c] : get_entries<4>(j, "mult")) {
    if (a >= n || b >= n || k >= n || c >= p) throw InputError("mult entry out of range");
    mult[a * n + b][k] = f.reduce(long(c));
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  try {
    return build::AssocSuperAlgebra(f, de, dodd, unit, std::move(mult), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("associative algebra rejected: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace nis2::cli
