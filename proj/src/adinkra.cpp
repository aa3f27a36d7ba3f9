#include "adk/adinkra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "adk/complexes.hpp"

namespace adk {

int Adinkra::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

const Vertex& Adinkra::vertex(const std::string& id) const {
  int i = vertex_index(id);
  if (i < 0) throw std::runtime_error("unknown vertex id: " + id);
  return vertices[i];
}

int Adinkra::min_height() const {
  if (vertices.empty()) throw std::runtime_error("empty Adinkra");
  int h = vertices[0].height;
  for (auto& v : vertices) h = std::min(h, v.height);
  return h;
}

int Adinkra::max_height() const {
  int h = vertices[0].height;
  for (auto& v : vertices) h = std::max(h, v.height);
  return h;
}

std::map<int, std::vector<std::string>> Adinkra::levels() const {
  std::map<int, std::vector<std::string>> lv;
  for (auto& v : vertices) lv[v.height].push_back(v.id);
  return lv;
}

std::string RankSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < ranks.size(); ++i) os << (i ? "," : "") << ranks[i];
  os << ")";
  return os.str();
}

RankSequence rank_sequence(const Adinkra& a) {
  RankSequence rs;
  rs.base_height = a.min_height();
  rs.ranks.assign(a.max_height() - rs.base_height + 1, 0);
  for (auto& v : a.vertices) rs.ranks[v.height - rs.base_height]++;
  return rs;
}

namespace {

// Structural (graph-level) checks shared by validate and validate_q.
ValidationReport structural_checks(const Adinkra& a, bool allow_waved) {
  ValidationReport rep;
  if (a.vertices.empty()) {
    rep.fail("no vertices");
    return rep;
  }
  std::map<std::string, int> idx;
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    auto [it, fresh] = idx.emplace(a.vertices[i].id, static_cast<int>(i));
    if (!fresh) rep.fail("duplicate vertex id: " + a.vertices[i].id);
  }
  if (!allow_waved && (a.sig.n_mu > 0 || a.sig.n_rho > 0))
    rep.fail("signature has mu/rho variables; use validate_q");
  std::set<std::tuple<std::string, std::string, int>> seen;
  std::map<std::pair<std::string, int>, int> color_deg;
  for (auto& e : a.edges) {
    auto iu = idx.find(e.u), iv = idx.find(e.v);
    if (iu == idx.end()) {
      rep.fail("edge references unknown vertex: " + e.u);
      continue;
    }
    if (iv == idx.end()) {
      rep.fail("edge references unknown vertex: " + e.v);
      continue;
    }
    if (e.u == e.v) {
      rep.fail("self-loop at " + e.u);
      continue;
    }
    if (e.color < 1 || e.color > a.sig.n_colors()) {
      rep.fail("edge " + e.u + "-" + e.v + ": color " + std::to_string(e.color) +
               " out of range 1.." + std::to_string(a.sig.n_colors()));
      continue;
    }
    auto key = std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v), e.color);
    if (!seen.insert(key).second)
      rep.fail("duplicate edge " + e.u + "-" + e.v + " color " + std::to_string(e.color));
    const Vertex& vu = a.vertices[iu->second];
    const Vertex& vv = a.vertices[iv->second];
    if (vu.parity == vv.parity)
      rep.fail("edge " + e.u + "-" + e.v + " joins equal parities (not bipartite)");
    if (std::abs(vu.height - vv.height) != 1)
      rep.fail("edge " + e.u + "-" + e.v + " is not unimodular (heights " +
               std::to_string(vu.height) + "," + std::to_string(vv.height) + ")");
    if (!a.sig.color_is_waved(e.color) && e.arrow != 1)
      rep.fail("edge " + e.u + "-" + e.v + ": arrow must point up on non-waved color " +
               std::to_string(e.color));
    if (e.dash != 1 && e.dash != -1)
      rep.fail("edge " + e.u + "-" + e.v + ": dash must be +1 or -1");
    color_deg[{e.u, e.color}]++;
    color_deg[{e.v, e.color}]++;
  }
  for (auto& v : a.vertices)
    for (int c = 1; c <= a.sig.n_colors(); ++c) {
      int deg = 0;
      auto it = color_deg.find({v.id, c});
      if (it != color_deg.end()) deg = it->second;
      if (deg != 1)
        rep.fail("vertex " + v.id + " has " + std::to_string(deg) + " edges of color " +
                 std::to_string(c) + " (want exactly 1)");
    }
  return rep;
}

// For pure-lambda signatures: every 2-color 4-cycle must carry an odd number
// of dashed edges.  Used as a diagnostic when the algebraic check fails.
void report_bad_cycles(const Adinkra& a, ValidationReport& rep) {
  int nc = a.sig.n_colors();
  // adjacency: vertex -> color -> (neighbor, dash)
  std::map<std::pair<std::string, int>, std::pair<std::string, int>> adj;
  for (auto& e : a.edges) {
    adj[{e.u, e.color}] = {e.v, e.dash};
    adj[{e.v, e.color}] = {e.u, e.dash};
  }
  std::set<std::set<std::string>> seen;
  for (auto& v : a.vertices)
    for (int i = 1; i <= nc; ++i)
      for (int j = i + 1; j <= nc; ++j) {
        auto a1 = adj.find({v.id, i});
        if (a1 == adj.end()) continue;
        auto a2 = adj.find({a1->second.first, j});
        if (a2 == adj.end()) continue;
        auto a3 = adj.find({a2->second.first, i});
        if (a3 == adj.end()) continue;
        auto a4 = adj.find({a3->second.first, j});
        if (a4 == adj.end() || a4->second.first != v.id) continue;
        std::set<std::string> cyc{v.id, a1->second.first, a2->second.first, a3->second.first};
        if (cyc.size() != 4 || !seen.insert(cyc).second) continue;
        int dashed = (a1->second.second < 0) + (a2->second.second < 0) + (a3->second.second < 0) +
                     (a4->second.second < 0);
        if (dashed % 2 == 0)
          rep.fail("2-color (" + std::to_string(i) + "," + std::to_string(j) + ") 4-cycle at {" +
                   v.id + "," + a1->second.first + "," + a2->second.first + "," +
                   a3->second.first + "} has even dashing parity");
      }
}

ValidationReport validate_impl(const Adinkra& a, bool allow_waved) {
  ValidationReport rep = structural_checks(a, allow_waved);
  if (!rep.ok) return rep;
  // algebraic dashing/arrow condition via the associated complex
  FreeComplex c = complex_of(a);
  if (!c.differential_squares_to_zero()) rep.fail("d*d != 0 for the associated complex");
  LaplacianReport lap = check_laplacian(c);
  if (!lap.ok) rep.fail("(d+d^+)^2 != q*id: " + lap.detail);
  if (!rep.ok && a.sig.n_mu == 0 && a.sig.n_rho == 0) report_bad_cycles(a, rep);
  return rep;
}

}  // namespace

ValidationReport validate(const Adinkra& a) { return validate_impl(a, false); }
ValidationReport validate_q(const Adinkra& a) { return validate_impl(a, true); }

Adinkra valise_of(const Adinkra& a) {
  Adinkra r = a;
  for (auto& v : r.vertices) v.height = ((v.height % 2) + 2) % 2;
  r.metadata.name = a.metadata.name.empty() ? "" : a.metadata.name + " (valise)";
  return r;
}

bool is_valise(const Adinkra& a) { return a.max_height() - a.min_height() == 1; }

namespace {

// True iff every neighbor of v is strictly above (below) it.
bool all_neighbors(const Adinkra& a, const std::string& v, bool above) {
  int h = a.vertex(v).height;
  for (auto& e : a.edges) {
    if (e.u != v && e.v != v) continue;
    const std::string& w = (e.u == v) ? e.v : e.u;
    int hw = a.vertex(w).height;
    if (above ? (hw <= h) : (hw >= h)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> raisable_vertices(const Adinkra& a) {
  std::vector<std::string> out;
  for (auto& v : a.vertices)
    if (all_neighbors(a, v.id, true)) out.push_back(v.id);
  return out;
}

std::vector<std::string> lowerable_vertices(const Adinkra& a) {
  std::vector<std::string> out;
  for (auto& v : a.vertices)
    if (all_neighbors(a, v.id, false)) out.push_back(v.id);
  return out;
}

Adinkra raise_vertex(const Adinkra& a, const std::string& v) {
  if (!all_neighbors(a, v, true)) {
    for (auto& e : a.edges)
      if ((e.u == v || e.v == v) &&
          a.vertex(e.u == v ? e.v : e.u).height <= a.vertex(v).height)
        throw std::runtime_error("vertex " + v + " is not raisable: blocked by edge " + e.u +
                                 "-" + e.v + " (color " + std::to_string(e.color) + ")");
    throw std::runtime_error("vertex " + v + " is not raisable");
  }
  Adinkra r = a;
  r.vertices[r.vertex_index(v)].height += 2;
  return r;
}

Adinkra lower_vertex(const Adinkra& a, const std::string& v) {
  if (!all_neighbors(a, v, false)) throw std::runtime_error("vertex " + v + " is not lowerable");
  Adinkra r = a;
  r.vertices[r.vertex_index(v)].height -= 2;
  return r;
}

std::set<RankSequence> enumerate_rank_sequences(const Adinkra& start, int height_cap) {
  if (height_cap < 2) throw std::runtime_error("height_cap must be >= 2");
  const size_t nv = start.vertices.size();
  // state = heights per vertex (document order), normalized to min 0
  auto normalize = [&](std::vector<int> h) {
    int mn = *std::min_element(h.begin(), h.end());
    for (auto& x : h) x -= mn;
    return h;
  };
  auto spread_ok = [&](const std::vector<int>& h) {
    int mn = *std::min_element(h.begin(), h.end());
    int mx = *std::max_element(h.begin(), h.end());
    return mx - mn + 1 <= height_cap;
  };
  // neighbor lists by vertex index
  std::vector<std::vector<int>> nbr(nv);
  for (auto& e : start.edges) {
    int iu = start.vertex_index(e.u), iv = start.vertex_index(e.v);
    nbr[iu].push_back(iv);
    nbr[iv].push_back(iu);
  }
  std::vector<int> h0(nv);
  for (size_t i = 0; i < nv; ++i) h0[i] = start.vertices[i].height;
  h0 = normalize(h0);
  if (!spread_ok(h0)) throw std::runtime_error("starting Adinkra exceeds the height cap");
  std::set<std::vector<int>> seen{h0};
  std::deque<std::vector<int>> queue{h0};
  std::set<RankSequence> out;
  auto seq_of = [&](const std::vector<int>& h) {
    int mx = *std::max_element(h.begin(), h.end());
    RankSequence rs;
    rs.ranks.assign(mx + 1, 0);
    for (int x : h) rs.ranks[x]++;
    return rs;
  };
  while (!queue.empty()) {
    std::vector<int> h = queue.front();
    queue.pop_front();
    out.insert(seq_of(h));
    for (size_t i = 0; i < nv; ++i)
      for (int dir : {+2, -2}) {
        bool ok = true;
        for (int j : nbr[i]) {
          if (dir > 0 ? h[j] <= h[i] : h[j] >= h[i]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::vector<int> h2 = h;
        h2[i] += dir;
        h2 = normalize(h2);
        if (!spread_ok(h2) || seen.count(h2)) continue;
        seen.insert(h2);
        queue.push_back(h2);
      }
  }
  return out;
}

Adinkra koszul_adinkra(int n) {
  if (n < 1) throw std::runtime_error("koszul_adinkra: N must be >= 1");
  Adinkra a;
  a.sig = VariableSet{n, 0, 0};
  a.metadata.name = "koszul-N" + std::to_string(n);
  // subsets of {1..n} in increasing cardinality, lexicographic within
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  auto name_of = [](const std::vector<int>& s) {
    std::string nm = "s";
    for (int i : s) nm += std::to_string(i);
    return nm;
  };
  for (auto& s : subsets)
    a.vertices.push_back(
        {name_of(s), s.size() % 2 ? Parity::Fermion : Parity::Boson, static_cast<int>(s.size())});
  for (auto& s : subsets)
    for (int i = 1; i <= n; ++i) {
      if (std::find(s.begin(), s.end(), i) != s.end()) continue;
      std::vector<int> t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), i), i);
      int below = static_cast<int>(std::count_if(s.begin(), s.end(), [&](int j) { return j < i; }));
      a.edges.push_back({name_of(t), name_of(s), i, below % 2 ? -1 : 1, 1});
    }
  return a;
}

Adinkra graph_tensor(const Adinkra& a1, const Adinkra& a2) {
  Adinkra r;
  r.sig = VariableSet{a1.sig.n_lambda + a2.sig.n_lambda, a1.sig.n_mu + a2.sig.n_mu,
                      a1.sig.n_rho + a2.sig.n_rho};
  r.metadata.name = a1.metadata.name + "*" + a2.metadata.name;
  // color remapping into the combined layout (lambdas first, then mus, then
  // rho pairs; first factor before second within each kind)
  auto remap = [&](const VariableSet& s, bool second, int color) {
    int l1 = a1.sig.n_lambda, l2 = a2.sig.n_lambda;
    int m1 = a1.sig.n_mu, m2 = a2.sig.n_mu;
    int r1 = a1.sig.n_rho;
    if (color <= s.n_lambda) return color + (second ? l1 : 0);
    if (color <= s.n_lambda + s.n_mu)
      return (color - s.n_lambda) + l1 + l2 + (second ? m1 : 0);
    return (color - s.n_lambda - s.n_mu) + l1 + l2 + m1 + m2 + (second ? r1 : 0);
  };
  for (auto& v1 : a1.vertices)
    for (auto& v2 : a2.vertices)
      r.vertices.push_back({v1.id + "*" + v2.id,
                            (static_cast<int>(v1.parity) + static_cast<int>(v2.parity)) % 2
                                ? Parity::Fermion
                                : Parity::Boson,
                            v1.height + v2.height});
  for (auto& e : a1.edges)
    for (auto& v2 : a2.vertices)
      r.edges.push_back(
          {e.u + "*" + v2.id, e.v + "*" + v2.id, remap(a1.sig, false, e.color), e.dash, e.arrow});
  for (auto& v1 : a1.vertices) {
    int sign = v1.parity == Parity::Fermion ? -1 : 1;  // Koszul sign rule
    for (auto& e : a2.edges)
      r.edges.push_back({v1.id + "*" + e.u, v1.id + "*" + e.v, remap(a2.sig, true, e.color),
                         e.dash * sign, e.arrow});
  }
  return r;
}

MultipletAction multiplet_action(const Adinkra& a) {
  if (a.sig.n_mu > 0 || a.sig.n_rho > 0)
    throw std::runtime_error("multiplet_action requires a lambda-only signature");
  MultipletAction ma;
  const int n = static_cast<int>(a.vertices.size());
  for (auto& v : a.vertices) ma.basis.push_back(v.id);
  Poly H = Poly::variable(1, 0);
  for (int c = 1; c <= a.sig.n_colors(); ++c) {
    PolyMatrix q(n, n, 1);
    for (auto& e : a.edges) {
      if (e.color != c) continue;
      int iu = a.vertex_index(e.u), iv = a.vertex_index(e.v);
      int lo = a.vertices[iu].height < a.vertices[iv].height ? iu : iv;
      int hi = lo == iu ? iv : iu;
      // Q_i sends the lower vertex up with coefficient (dash), and the higher
      // one down with coefficient (dash * H)
      q.at(hi, lo) = q.at(hi, lo) + Poly::constant(1, e.dash);
      q.at(lo, hi) = q.at(lo, hi) + H.scaled(e.dash);
    }
    ma.q.push_back(std::move(q));
  }
  return ma;
}

RainbowResult rainbow(const Adinkra& a) {
  int n_colors = a.sig.n_colors();
  if (a.sig.n_mu > 0 || a.sig.n_rho > 0 || n_colors % 2 != 0)
    throw std::runtime_error("rainbow requires a lambda-only signature with N even");
  MultipletAction ma = multiplet_action(a);
  PolyMatrix gamma = ma.q[n_colors - 1];
  for (int c = n_colors - 2; c >= 0; --c) gamma = gamma * ma.q[c];
  // closes iff gamma = diag(eps_v * H^{N/2})
  Monomial hm(1, 0);
  hm[0] = static_cast<std::uint8_t>(n_colors / 2);
  Poly hpow = Poly::monomial_term(1, hm, 1);
  RainbowResult rr;
  rr.closes = true;
  for (int j = 0; j < gamma.cols && rr.closes; ++j)
    for (int i = 0; i < gamma.rows; ++i) {
      if (i == j) {
        auto ratio = multiple_of(gamma.at(i, i), hpow);
        if (!ratio || (*ratio != 1 && *ratio != -1)) {
          rr.closes = false;
          break;
        }
        if (a.vertices[i].parity == Parity::Boson)
          rr.boson_eigenvalue[a.vertices[i].id] = *ratio > 0 ? 1 : -1;
      } else if (!gamma.at(i, j).is_zero()) {
        rr.closes = false;
        break;
      }
    }
  if (!rr.closes) rr.boson_eigenvalue.clear();
  return rr;
}

long long zero_modes(const Adinkra& a) {
  long long count = 0;
  for (auto& v : a.vertices)
    if (all_neighbors(a, v.id, true)) count++;
  return count;
}

}  // namespace adk
