#include "tropmat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tropmat {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' || c == '[';
  }
  return false;
}

Mask mask_from_list(const json& arr, int n, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array");
  Mask s = 0;
  for (const auto& e : arr) {
    if (!e.is_number_integer())
      throw ParseError(std::string(what) + ": expected integer elements");
    const int v = e.get<int>();
    if (v < 1 || v > n)
      throw ParseError(std::string(what) + ": element " + std::to_string(v) +
                       " outside 1.." + std::to_string(n));
    s |= bit(v);
  }
  return s;
}

json list_from_mask(Mask s) {
  json arr = json::array();
  for (int e : elements_of(s)) arr.push_back(e);
  return arr;
}

Mask mask_from_token(const std::string& tok, int n) {
  if (tok == "-") return 0;
  Mask s = 0;
  // Digit concatenation is only unambiguous up to 9 elements; beyond that
  // every token is a comma list (possibly a single number).
  if (n > 9 || tok.find(',') != std::string::npos) {
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) {
      int v = 0;
      try {
        v = std::stoi(part);
      } catch (...) {
        throw ParseError("bad basis token: " + tok);
      }
      if (v < 1 || v > n) throw ParseError("element out of range in: " + tok);
      s |= bit(v);
    }
    return s;
  }
  for (char c : tok) {
    if (c < '1' || c > '9') throw ParseError("bad basis token: " + tok);
    const int v = c - '0';
    if (v > n) throw ParseError("element out of range in: " + tok);
    s |= bit(v);
  }
  return s;
}

}  // namespace

Matroid parse_matroid(const std::string& text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    if (!j.contains("n") || !j.contains("bases"))
      throw ParseError("matroid JSON needs \"n\" and \"bases\"");
    const int n = j.at("n").get<int>();
    if (n < 0 || n > 32) throw ParseError("ground size out of range");
    std::vector<Mask> bases;
    for (const auto& b : j.at("bases")) bases.push_back(mask_from_list(b, n, "basis"));
    const Matroid m = Matroid::from_bases(n, std::move(bases));
    if (j.contains("rank") && j.at("rank").get<int>() != m.rank())
      throw ParseError("declared rank disagrees with the basis family");
    return m;
  }
  std::stringstream ss(text);
  std::string line;
  int n = -1, d = -1;
  while (std::getline(ss, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (std::sscanf(line.c_str(), "n=%d d=%d", &n, &d) != 2 || n < 0 || d < 0)
    throw ParseError("expected header line `n=<n> d=<d>`");
  std::vector<Mask> bases;
  std::string tok;
  while (ss >> tok) bases.push_back(mask_from_token(tok, n));
  const Matroid m = Matroid::from_bases(n, std::move(bases));
  if (m.rank() != d) throw ParseError("declared rank disagrees with the basis family");
  return m;
}

std::string matroid_to_json(const Matroid& m) {
  json j;
  j["n"] = m.n();
  j["rank"] = m.rank();
  json bases = json::array();
  for (Mask b : m.bases()) bases.push_back(list_from_mask(b));
  j["bases"] = bases;
  return j.dump();
}

std::string matroid_to_terse(const Matroid& m) {
  std::ostringstream os;
  os << "n=" << m.n() << " d=" << m.rank() << "\n";
  bool first = true;
  for (Mask b : m.bases()) {
    if (!first) os << " ";
    first = false;
    if (b == 0) {
      os << "-";
      continue;
    }
    bool inner_first = true;
    for (int e : elements_of(b)) {
      if (m.n() > 9 && !inner_first) os << ",";
      inner_first = false;
      os << e;
    }
  }
  os << "\n";
  return os.str();
}

SetSystem parse_set_system(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("n") || !j.contains("sets"))
    throw ParseError("set system JSON needs \"n\" and \"sets\"");
  SetSystem s{j.at("n").get<int>(), {}};
  for (const auto& a : j.at("sets")) s.sets.push_back(mask_from_list(a, s.n, "set"));
  return s;
}

namespace {

Mask row_from_string(const std::string& line, int expected_cols) {
  if (expected_cols >= 0 && static_cast<int>(line.size()) != expected_cols)
    throw ParseError("ragged matrix row: " + line);
  Mask row = 0;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '1')
      row |= bit(static_cast<int>(i) + 1);
    else if (line[i] != '0')
      throw ParseError("matrix rows must be over '0'/'1': " + line);
  }
  return row;
}

}  // namespace

BMatrix parse_bmatrix(const std::string& text) {
  BMatrix a{0, 0, {}};
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    a.rows = j.at("rows").get<int>();
    a.cols = j.at("cols").get<int>();
    for (const auto& row : j.at("data"))
      a.row.push_back(row_from_string(row.get<std::string>(), a.cols));
    if (static_cast<int>(a.row.size()) != a.rows)
      throw ParseError("matrix row count disagrees with \"rows\"");
    return a;
  }
  std::stringstream ss(text);
  std::string line;
  int cols = -1;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (cols < 0) cols = static_cast<int>(line.size());
    a.row.push_back(row_from_string(line, cols));
  }
  if (a.row.empty()) throw ParseError("empty matrix");
  a.rows = static_cast<int>(a.row.size());
  a.cols = cols;
  return a;
}

std::string bmatrix_to_text(const BMatrix& a) {
  std::ostringstream os;
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 1; j <= a.cols; ++j) os << (contains(a.row[i], j) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

std::string bmatrix_rows_string(const BMatrix& a) {
  std::ostringstream os;
  for (int i = 0; i < a.rows; ++i) {
    if (i) os << " / ";
    for (int j = 1; j <= a.cols; ++j) os << (contains(a.row[i], j) ? '1' : '0');
  }
  return os.str();
}

Multivector parse_multivector(const std::string& text) {
  const json j = parse_json(text);
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  std::vector<Mask> terms;
  for (const auto& t : j.at("terms")) terms.push_back(mask_from_list(t, n, "term"));
  return multivector(n, d, std::move(terms));
}

std::string multivector_to_json(const Multivector& v) {
  json j;
  j["n"] = v.n;
  j["d"] = v.degree;
  json terms = json::array();
  for (Mask t : v.terms) terms.push_back(list_from_mask(t));
  j["terms"] = terms;
  return j.dump();
}

bool looks_multivalued(const std::string& text) {
  const json j = parse_json(text);
  const auto& images = j.at("images");
  return !images.empty() && images.front().is_array();
}

PointedMap parse_pointed_map(const std::string& text) {
  const json j = parse_json(text);
  PointedMap f{j.at("source_n").get<int>(), j.at("target_n").get<int>(), {}};
  for (const auto& img : j.at("images")) {
    const int v = img.get<int>();
    if (v < 0 || v > f.target_n)
      throw ParseError("image " + std::to_string(v) + " outside 0.." +
                       std::to_string(f.target_n));
    f.images.push_back(v);
  }
  if (static_cast<int>(f.images.size()) != f.source_n)
    throw ParseError("image list length disagrees with source_n");
  return f;
}

MultiMap parse_multimap(const std::string& text) {
  const json j = parse_json(text);
  const auto& images = j.at("images");
  const int source_n = j.contains("source_n") ? j.at("source_n").get<int>()
                                              : static_cast<int>(images.size());
  int target_n = j.contains("target_n") ? j.at("target_n").get<int>() : 0;
  if (!j.contains("target_n"))
    for (const auto& img : images)
      for (const auto& e : img) target_n = std::max(target_n, e.get<int>());
  MultiMap f{source_n, target_n, {}};
  for (const auto& img : images)
    f.images.push_back(mask_from_list(img, target_n, "image"));
  if (static_cast<int>(f.images.size()) != source_n)
    throw ParseError("image list length disagrees with source_n");
  return f;
}

namespace {

std::string flat_label(Mask f) {
  if (f == 0) return "{}";
  std::string out = "{";
  for (int e : elements_of(f)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(e);
  }
  return out + "}";
}

// Cover pairs (a < b with nothing between) of the flat lattice.
std::vector<std::pair<int, int>> cover_edges(const std::vector<Mask>& fl) {
  std::vector<std::pair<int, int>> out;
  for (size_t a = 0; a < fl.size(); ++a)
    for (size_t b = 0; b < fl.size(); ++b) {
      if (a == b || (fl[a] & ~fl[b])) continue;
      bool covered = true;
      for (size_t c = 0; c < fl.size() && covered; ++c)
        if (c != a && c != b && (fl[a] & ~fl[c]) == 0 && (fl[c] & ~fl[b]) == 0)
          covered = false;
      if (covered) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

}  // namespace

std::string lattice_to_dot(const Matroid& m) {
  const auto fl = flats(m);
  std::ostringstream os;
  os << "digraph flats {\n  rankdir=BT;\n";
  for (size_t i = 0; i < fl.size(); ++i)
    os << "  f" << i << " [label=\"" << flat_label(fl[i]) << "\"];\n";
  for (const auto& [a, b] : cover_edges(fl))
    os << "  f" << a << " -> f" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_json(const Matroid& m) {
  const auto fl = flats(m);
  json j;
  json nodes = json::array();
  for (Mask f : fl) nodes.push_back(list_from_mask(f));
  j["nodes"] = nodes;
  json edges = json::array();
  for (const auto& [a, b] : cover_edges(fl)) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  return j.dump();
}

std::string fiber_report_to_json(const FiberReport& report) {
  json j;
  j["plucker"] = json::parse(multivector_to_json(report.plucker));
  j["fiber_size"] = report.fiber.size();
  j["maximal"] = bmatrix_rows_string(report.maximal);
  json mins = json::array();
  for (const BMatrix& a : report.minimals) mins.push_back(bmatrix_rows_string(a));
  j["minimals"] = mins;
  return j.dump();
}

std::string suite_report_to_json(const SuiteReport& report) {
  json j;
  j["suite"] = report.suite;
  j["tested"] = report.tested;
  j["failures"] = report.failures;
  j["ms"] = report.ms;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
}

}  // namespace tropmat
