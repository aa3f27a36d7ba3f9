#include "adk/io.hpp"

#include <fstream>
#include <sstream>

namespace adk {

json adinkra_to_json(const Adinkra& a) {
  json j;
  j["schema_version"] = 1;
  if (!a.metadata.name.empty() || !a.metadata.description.empty()) {
    json m;
    if (!a.metadata.name.empty()) m["name"] = a.metadata.name;
    if (!a.metadata.description.empty()) m["description"] = a.metadata.description;
    j["metadata"] = m;
  }
  j["signature"] = {{"n_lambda", a.sig.n_lambda}, {"n_mu", a.sig.n_mu}, {"n_rho", a.sig.n_rho}};
  j["vertices"] = json::array();
  for (auto& v : a.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"parity", v.parity == Parity::Boson ? "boson" : "fermion"},
                             {"height", v.height}});
  j["edges"] = json::array();
  for (auto& e : a.edges) {
    json je = {{"u", e.u}, {"v", e.v}, {"color", e.color}, {"dash", e.dash}};
    if (a.sig.color_is_waved(e.color)) je["arrow"] = e.arrow;
    j["edges"].push_back(je);
  }
  return j;
}

Adinkra adinkra_from_json(const json& j) {
  Adinkra a;
  if (!j.contains("signature") || !j.contains("vertices") || !j.contains("edges"))
    throw std::runtime_error("document missing signature/vertices/edges");
  const json& s = j.at("signature");
  a.sig = VariableSet{s.value("n_lambda", 0), s.value("n_mu", 0), s.value("n_rho", 0)};
  if (j.contains("metadata")) {
    a.metadata.name = j["metadata"].value("name", "");
    a.metadata.description = j["metadata"].value("description", "");
  }
  for (auto& jv : j.at("vertices")) {
    std::string par = jv.value("parity", "boson");
    if (par != "boson" && par != "fermion")
      throw std::runtime_error("vertex parity must be 'boson' or 'fermion'");
    a.vertices.push_back(
        {jv.at("id").get<std::string>(), par == "boson" ? Parity::Boson : Parity::Fermion,
         jv.at("height").get<int>()});
  }
  for (auto& je : j.at("edges"))
    a.edges.push_back({je.at("u").get<std::string>(), je.at("v").get<std::string>(),
                       je.at("color").get<int>(), je.value("dash", 1), je.value("arrow", 1)});
  return a;
}

Adinkra load_adinkra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return adinkra_from_json(j);
}

void save_adinkra(const Adinkra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << adinkra_to_json(a).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Polynomial parsing
// ---------------------------------------------------------------------------

namespace {

int var_index_by_name(const VariableSet& sig, const std::string& name) {
  for (int v = 0; v < sig.n_vars(); ++v)
    if (sig.var_name(v) == name) return v;
  throw std::runtime_error("unknown variable name: " + name);
}

}  // namespace

Poly parse_poly(const std::string& text, const VariableSet& sig) {
  const int nv = sig.n_vars();
  Poly out(nv);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) return out;
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::runtime_error("expected + or - in polynomial: " + text);
    }
    first = false;
    Rational coeff = sign;
    Monomial mono(nv, 0);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
        size_t start = i;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
          ++i;
        coeff *= Rational(text.substr(start, i - start));
        coeff.canonicalize();
        have_factor = true;
      } else if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i]))))
          ++i;
        int v = var_index_by_name(sig, text.substr(start, i - start));
        int exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          size_t s2 = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          exp = std::stoi(text.substr(s2, i - s2));
        }
        mono[v] = static_cast<std::uint8_t>(mono[v] + exp);
        have_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) throw std::runtime_error("empty term in polynomial: " + text);
    out.add_term(mono, coeff);
    skip_ws();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complex / MF / profile serialization
// ---------------------------------------------------------------------------

namespace {

json matrix_to_json(const PolyMatrix& m, const VariableSet& sig) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string(sig));
    rows.push_back(row);
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

}  // namespace

json complex_to_json(const FreeComplex& c) {
  json j;
  j["schema_version"] = 1;
  j["signature"] = {{"n_lambda", c.sig.n_lambda}, {"n_mu", c.sig.n_mu}, {"n_rho", c.sig.n_rho}};
  j["ring"] = c.ring == RingTag::R ? "R" : "RmodQ";
  j["levels"] = json::array();
  for (int i = 0; i <= c.length(); ++i)
    j["levels"].push_back({{"homological_degree", -i},
                           {"labels", c.labels[i]},
                           {"shifts", c.shifts[i]}});
  j["differentials"] = json::array();
  for (int i = 1; i <= c.length(); ++i) {
    json d = matrix_to_json(c.d[i], c.sig);
    d["from_degree"] = -i;
    j["differentials"].push_back(d);
  }
  return j;
}

json mf_to_json(const MatrixFactorization& mf) {
  json j;
  j["schema_version"] = 1;
  j["signature"] = {
      {"n_lambda", mf.sig.n_lambda}, {"n_mu", mf.sig.n_mu}, {"n_rho", mf.sig.n_rho}};
  j["rank"] = mf.rank();
  j["psi"] = matrix_to_json(mf.psi, mf.sig);
  j["phi"] = matrix_to_json(mf.phi, mf.sig);
  return j;
}

json profile_to_json(const HilbertProfile& p) {
  json j;
  j["max_degree"] = p.max_degree;
  json rows = json::object();
  int max_level = 0;
  for (auto& [key, v] : p.dims) max_level = std::max(max_level, key.first);
  for (int i = 0; i <= max_level; ++i) rows[std::to_string(-i)] = p.row(i);
  j["dims"] = rows;
  return j;
}

std::string profile_to_csv(const HilbertProfile& p, int levels) {
  std::ostringstream os;
  os << "homological_degree";
  for (int t = 0; t <= p.max_degree; ++t) os << ",d" << t;
  os << "\n";
  for (int i = 0; i < levels; ++i) {
    os << -i;
    for (int t = 0; t <= p.max_degree; ++t) os << "," << p.at(i, t);
    os << "\n";
  }
  return os.str();
}

ChainMap chain_map_from_json(const json& j, const FreeComplex& source,
                             const FreeComplex& target) {
  ChainMap cm;
  cm.source = source;
  cm.target = target;
  cm.shift = j.value("shift", 0);
  cm.f.assign(source.length() + 1, PolyMatrix(0, 0, source.sig.n_vars()));
  for (auto& [key, val] : j.at("components").items()) {
    int i = std::abs(std::stoi(key));  // accept "2" or "-2" for source level -2
    int tlev = i - cm.shift;
    int rows = (tlev >= 0 && tlev <= target.length())
                   ? static_cast<int>(target.labels[tlev].size())
                   : 0;
    int cols = (i <= source.length()) ? static_cast<int>(source.labels[i].size()) : 0;
    PolyMatrix m(rows, cols, source.sig.n_vars());
    if (static_cast<int>(val.size()) != rows)
      throw std::runtime_error("chain map component " + key + ": wrong row count");
    for (int r = 0; r < rows; ++r) {
      if (static_cast<int>(val[r].size()) != cols)
        throw std::runtime_error("chain map component " + key + ": wrong column count");
      for (int c = 0; c < cols; ++c)
        m.at(r, c) = parse_poly(val[r][c].get<std::string>(), source.sig);
    }
    cm.f[i] = m;
  }
  return cm;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

std::string to_dot(const Adinkra& a) {
  static const char* palette[] = {"black",  "red",    "blue",   "darkgreen", "orange",
                                  "purple", "brown",  "cyan3",  "magenta",   "gold3",
                                  "gray40", "salmon", "navy",   "olive",     "teal",
                                  "maroon"};
  std::ostringstream os;
  os << "graph adinkra {\n  rankdir=BT;\n  node [fontsize=10];\n";
  auto lv = a.levels();
  for (auto& [h, ids] : lv) {
    os << "  { rank=same;";
    for (auto& id : ids) os << " \"" << id << "\";";
    os << " }\n";
  }
  for (auto& v : a.vertices)
    os << "  \"" << v.id << "\" [shape=" << (v.parity == Parity::Boson ? "circle" : "box")
       << "];\n";
  for (auto& e : a.edges) {
    os << "  \"" << e.u << "\" -- \"" << e.v << "\" [color="
       << palette[(e.color - 1) % 16] << ", style=" << (e.dash < 0 ? "dashed" : "solid");
    if (a.sig.color_is_waved(e.color)) {
      // arrowhead encodes the arrow direction: u is the higher endpoint in
      // the edge as exported, so 'forward' points down when arrow = -1
      int hu = a.vertex(e.u).height, hv = a.vertex(e.v).height;
      bool u_higher = hu > hv;
      bool points_to_v = (e.arrow == -1) == u_higher;
      os << ", label=\"~\", dir=" << (points_to_v ? "forward" : "back");
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace adk
