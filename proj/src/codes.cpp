#include "adk/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace adk {

namespace {

int wt(std::uint32_t x) { return std::popcount(x); }

// Row-echelon basis over GF(2), as (value, pivot bit) pairs sorted by
// descending pivot.
std::vector<std::pair<std::uint32_t, int>> echelon(const std::vector<std::uint32_t>& gens) {
  std::vector<std::pair<std::uint32_t, int>> basis;
  for (std::uint32_t g : gens) {
    std::uint32_t x = g;
    for (auto& [b, p] : basis)
      if ((x >> p) & 1) x ^= b;
    if (x) {
      int p = 31 - std::countl_zero(x);
      basis.emplace_back(x, p);
      std::sort(basis.begin(), basis.end(),
                [](const auto& a, const auto& b) { return a.second > b.second; });
    }
  }
  return basis;
}

std::uint32_t reduce(std::uint32_t x, const std::vector<std::pair<std::uint32_t, int>>& basis) {
  for (auto& [b, p] : basis)
    if ((x >> p) & 1) x ^= b;
  return x;
}

void check_guard(const BinaryCode& c, int limit) {
  if (c.length < 1 || c.length > limit)
    throw std::runtime_error("code length " + std::to_string(c.length) + " outside guard 1.." +
                             std::to_string(limit));
}

}  // namespace

int BinaryCode::dimension() const { return static_cast<int>(echelon(gens).size()); }

bool is_doubly_even(const BinaryCode& c) {
  check_guard(c, 20);
  auto basis = echelon(c.gens);
  // enumerate the span
  std::vector<std::uint32_t> words{0};
  for (auto& [b, p] : basis) {
    size_t n = words.size();
    for (size_t i = 0; i < n; ++i) words.push_back(words[i] ^ b);
  }
  for (std::uint32_t w : words)
    if (wt(w) % 4 != 0) return false;
  return true;
}

RankSequence coset_rank_sequence(const BinaryCode& c) {
  check_guard(c, 20);
  auto basis = echelon(c.gens);
  std::map<std::uint32_t, int> minw;
  const std::uint32_t total = 1u << c.length;
  for (std::uint32_t x = 0; x < total; ++x) {
    std::uint32_t r = reduce(x, basis);
    auto [it, fresh] = minw.emplace(r, wt(x));
    if (!fresh && wt(x) < it->second) it->second = wt(x);
  }
  int maxw = 0;
  for (auto& [r, w] : minw) maxw = std::max(maxw, w);
  RankSequence rs;
  rs.ranks.assign(maxw + 1, 0);
  for (auto& [r, w] : minw) rs.ranks[w]++;
  return rs;
}

Adinkra code_to_adinkra(const BinaryCode& c) {
  check_guard(c, 12);
  if (!is_doubly_even(c)) throw std::runtime_error("code_to_adinkra: code is not doubly even");
  const int n = c.length;
  auto basis = echelon(c.gens);
  // cosets with minimal weights
  std::map<std::uint32_t, int> minw;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    std::uint32_t r = reduce(x, basis);
    auto [it, fresh] = minw.emplace(r, wt(x));
    if (!fresh && wt(x) < it->second) it->second = wt(x);
  }
  // deterministic coset order: by (min weight, representative value)
  std::vector<std::uint32_t> reps;
  for (auto& [r, w] : minw) reps.push_back(r);
  std::sort(reps.begin(), reps.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::make_pair(minw[a], a) < std::make_pair(minw[b], b);
  });
  std::map<std::uint32_t, int> rep_index;
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

  auto id_of = [&](std::uint32_t r) {
    std::string s = "c";
    for (int i = 1; i <= n; ++i) s += ((r >> (n - i)) & 1) ? '1' : '0';
    return s;
  };

  Adinkra a;
  a.sig = VariableSet{n, 0, 0};
  a.metadata.name = c.name.empty() ? "code-adinkra" : c.name;
  for (std::uint32_t r : reps)
    a.vertices.push_back({id_of(r), wt(r) % 2 ? Parity::Fermion : Parity::Boson, minw[r]});

  // undirected colored edges, each once, ordered by (color, coset order)
  struct E {
    int x, y, color;  // coset indices
  };
  std::vector<E> edges;
  std::set<std::tuple<int, int, int>> seen;
  for (int color = 1; color <= n; ++color)
    for (size_t xi = 0; xi < reps.size(); ++xi) {
      std::uint32_t other = reduce(reps[xi] ^ (1u << (n - color)), basis);
      int yi = rep_index[other];
      int lo = std::min<int>(static_cast<int>(xi), yi), hi = std::max<int>(static_cast<int>(xi), yi);
      if (seen.insert({color, lo, hi}).second) edges.push_back({lo, hi, color});
    }
  std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
    return std::tie(a.color, a.x, a.y) < std::tie(b.color, b.x, b.y);
  });
  std::map<std::tuple<int, int, int>, int> edge_order;
  for (size_t i = 0; i < edges.size(); ++i)
    edge_order[{edges[i].color, edges[i].x, edges[i].y}] = static_cast<int>(i);

  // 2-color 4-cycles: from each coset x and color pair (i, j), the cycle
  // x, x+ei, x+ei+ej, x+ej.  Each must carry an odd number of dashed edges.
  auto edge_key = [&](int xi, int yi, int color) {
    return std::make_tuple(color, std::min(xi, yi), std::max(xi, yi));
  };
  struct Cycle {
    std::vector<int> edge_ids;  // four edge order-indices
    int last;                   // max of edge_ids: the trigger edge
  };
  std::vector<Cycle> cycles;
  std::set<std::set<int>> cycle_seen;
  for (size_t xi = 0; xi < reps.size(); ++xi)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::uint32_t x = reps[xi];
        int a1 = rep_index[reduce(x ^ (1u << (n - i)), basis)];
        int a2 = rep_index[reduce(x ^ (1u << (n - i)) ^ (1u << (n - j)), basis)];
        int a3 = rep_index[reduce(x ^ (1u << (n - j)), basis)];
        std::vector<int> ids = {edge_order[edge_key(static_cast<int>(xi), a1, i)],
                                edge_order[edge_key(a1, a2, j)],
                                edge_order[edge_key(a2, a3, i)],
                                edge_order[edge_key(a3, static_cast<int>(xi), j)]};
        std::set<int> key(ids.begin(), ids.end());
        if (key.size() != 4 || !cycle_seen.insert(key).second) continue;
        Cycle cy;
        cy.edge_ids = ids;
        cy.last = *std::max_element(ids.begin(), ids.end());
        cycles.push_back(cy);
      }
  std::vector<std::vector<int>> cycles_by_last(edges.size());
  for (size_t ci = 0; ci < cycles.size(); ++ci)
    cycles_by_last[cycles[ci].last].push_back(static_cast<int>(ci));

  // first-fail backtracking in edge order
  std::vector<int> dash(edges.size(), 0);
  auto consistent = [&](size_t k) {
    for (int ci : cycles_by_last[k]) {
      int dashed = 0;
      for (int eid : cycles[ci].edge_ids) dashed += dash[eid] < 0;
      if (dashed % 2 == 0) return false;
    }
    return true;
  };
  size_t k = 0;
  std::vector<int> tried(edges.size(), 0);
  while (k < edges.size()) {
    bool advanced = false;
    for (int choice = tried[k]; choice < 2; ++choice) {
      dash[k] = choice == 0 ? 1 : -1;
      tried[k] = choice + 1;
      if (consistent(k)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++k;
      if (k < edges.size()) tried[k] = 0;
    } else {
      if (k == 0) throw std::runtime_error("code_to_adinkra: dashing search exhausted");
      tried[k] = 0;
      dash[k] = 0;
      --k;
    }
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    const E& e = edges[i];
    // source (u) = higher coset
    int hx = minw[reps[e.x]], hy = minw[reps[e.y]];
    std::string u = id_of(reps[hx > hy ? e.x : e.y]);
    std::string v = id_of(reps[hx > hy ? e.y : e.x]);
    a.edges.push_back({u, v, e.color, dash[i], 1});
  }
  ValidationReport rep = validate(a);
  if (!rep.ok)
    throw std::runtime_error("code_to_adinkra: result fails validation: " + rep.violations[0]);
  return a;
}

BinaryCode code_sum(const BinaryCode& a, const BinaryCode& b) {
  BinaryCode r;
  r.length = a.length + b.length;
  if (r.length > 31) throw std::runtime_error("code_sum: combined length too large");
  for (std::uint32_t g : a.gens) r.gens.push_back(g << b.length);
  for (std::uint32_t g : b.gens) r.gens.push_back(g);
  r.name = (a.name.empty() ? "?" : a.name) + "+" + (b.name.empty() ? "?" : b.name);
  return r;
}

BinaryCode parse_code(const std::string& text) {
  BinaryCode c;
  std::istringstream is(text);
  std::string line;
  int explicit_len = -1;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line[0] == '#') continue;
    if (line.rfind("length=", 0) == 0) {
      explicit_len = std::stoi(line.substr(7));
      continue;
    }
    std::uint32_t g = 0;
    for (char ch : line) {
      if (ch != '0' && ch != '1')
        throw std::runtime_error("parse_code: invalid character in generator line: " + line);
      g = (g << 1) | (ch == '1');
    }
    if (c.length == 0)
      c.length = static_cast<int>(line.size());
    else if (static_cast<int>(line.size()) != c.length)
      throw std::runtime_error("parse_code: generator lengths differ");
    c.gens.push_back(g);
  }
  if (explicit_len > 0) {
    if (c.length != 0 && c.length != explicit_len)
      throw std::runtime_error("parse_code: length= conflicts with generator width");
    c.length = explicit_len;
  }
  if (c.length == 0) throw std::runtime_error("parse_code: no generators and no length=");
  return c;
}

std::string code_to_text(const BinaryCode& c) {
  std::ostringstream os;
  os << "length=" << c.length << "\n";
  for (std::uint32_t g : c.gens) {
    for (int i = 1; i <= c.length; ++i) os << (((g >> (c.length - i)) & 1) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

namespace {

BinaryCode make(const std::string& name, int len, std::vector<std::string> rows) {
  BinaryCode c;
  c.name = name;
  c.length = len;
  for (auto& r : rows) {
    std::uint32_t g = 0;
    for (char ch : r) g = (g << 1) | (ch == '1');
    c.gens.push_back(g);
  }
  return c;
}

// e7: shorten e8 on the last coordinate (keep words ending in 0, drop it).
BinaryCode shorten_last(const BinaryCode& c, const std::string& name) {
  auto basis = echelon(c.gens);
  std::vector<std::uint32_t> words{0};
  for (auto& [b, p] : basis) {
    size_t n = words.size();
    for (size_t i = 0; i < n; ++i) words.push_back(words[i] ^ b);
  }
  std::vector<std::uint32_t> kept;
  for (std::uint32_t w : words)
    if ((w & 1) == 0) kept.push_back(w >> 1);
  auto nb = echelon(kept);
  BinaryCode r;
  r.name = name;
  r.length = c.length - 1;
  for (auto& [b, p] : nb) r.gens.push_back(b);
  return r;
}

}  // namespace

std::optional<BinaryCode> builtin_code(const std::string& name) {
  auto plus = name.find('+');
  if (plus != std::string::npos) {
    auto a = builtin_code(name.substr(0, plus));
    auto b = builtin_code(name.substr(plus + 1));
    if (!a || !b) return std::nullopt;
    BinaryCode r = code_sum(*a, *b);
    r.name = name;
    return r;
  }
  if (name == "t1") return make("t1", 1, {});
  if (name == "t2") return make("t2", 2, {});
  if (name == "d4") return make("d4", 4, {"1111"});
  if (name == "d6") return make("d6", 6, {"111100", "001111"});
  if (name == "d10")
    return make("d10", 10, {"1111000000", "0011110000", "0000111100", "0000001111"});
  if (name == "e8") return make("e8", 8, {"11110000", "00111100", "00001111", "10101010"});
  if (name == "e7") return shorten_last(*builtin_code("e8"), "e7");
  if (name == "e16") {
    std::vector<std::string> rows;
    for (int i = 0; i < 7; ++i) {
      std::string r(16, '0');
      for (int k = 0; k < 4; ++k) r[2 * i + k] = '1';
      rows.push_back(r);
    }
    rows.push_back("1010101010101010");
    return make("e16", 16, rows);
  }
  return std::nullopt;
}

}  // namespace adk
