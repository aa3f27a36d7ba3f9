#pragma once
// Decorated-graph data model for Adinkras and their q-generalizations, axiom
// validators, and graph-level operations (rank sequences, valise, vertex
// raising/lowering, Koszul and tensor constructions, multiplet action,
// rainbow check, zero modes).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adk/exactalg.hpp"

namespace adk {

enum class Parity { Boson = 0, Fermion = 1 };

struct Vertex {
  std::string id;
  Parity parity = Parity::Boson;
  int height = 0;
};

struct Edge {
  std::string u, v;
  int color = 1;   // 1-based color index
  int dash = 1;    // +1 solid, -1 dashed
  int arrow = 1;   // +1 up, -1 down; meaningful only on waved (rho) colors
};

struct Metadata {
  std::string name;
  std::string description;
};

struct Adinkra {
  VariableSet sig;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  Metadata metadata;

  int vertex_index(const std::string& id) const;  // -1 if unknown
  const Vertex& vertex(const std::string& id) const;
  int min_height() const;
  int max_height() const;
  // vertex ids per height, ascending heights, insertion order within height
  std::map<int, std::vector<std::string>> levels() const;
};

struct RankSequence {
  int base_height = 0;
  std::vector<long long> ranks;
  bool operator==(const RankSequence& o) const { return ranks == o.ranks; }
  bool operator<(const RankSequence& o) const { return ranks < o.ranks; }
  std::string to_string() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(const std::string& msg) {
    ok = false;
    violations.push_back(msg);
  }
};

// Graph axioms + the algebraic dashing/arrow condition (d^2 = 0 and
// (d+d^t)^2 = q*id via the associated complex).  validate() requires a
// lambda-only signature; validate_q() allows the general case.
ValidationReport validate(const Adinkra& a);
ValidationReport validate_q(const Adinkra& a);

RankSequence rank_sequence(const Adinkra& a);

// Heights replaced by height mod 2.
Adinkra valise_of(const Adinkra& a);
bool is_valise(const Adinkra& a);

std::vector<std::string> raisable_vertices(const Adinkra& a);
std::vector<std::string> lowerable_vertices(const Adinkra& a);
Adinkra raise_vertex(const Adinkra& a, const std::string& v);  // throws if not raisable
Adinkra lower_vertex(const Adinkra& a, const std::string& v);

// All rank sequences reachable from the given Adinkra by raise/lower moves
// with total height spread (number of occupied levels) <= height_cap.
std::set<RankSequence> enumerate_rank_sequences(const Adinkra& valise, int height_cap);

// Koszul Adinkra: vertices = subsets of {1..N}, height |S|, edge of color i
// between S and S+{i} with dash (-1)^{#{j in S : j < i}}.
Adinkra koszul_adinkra(int n);

// Product graph; a2's colors are shifted above a1's, and a2-edge dashes are
// twisted by the parity of the a1 vertex (Koszul sign rule).
Adinkra graph_tensor(const Adinkra& a1, const Adinkra& a2);

// Q_i action matrices over k[H] on the vertex basis; represented as
// polynomials in a single variable H.  Vertex order = document order.
struct MultipletAction {
  std::vector<std::string> basis;
  std::vector<PolyMatrix> q;  // one per color, nvars = 1 (the variable H)
};
MultipletAction multiplet_action(const Adinkra& a);

struct RainbowResult {
  bool closes = false;
  std::map<std::string, int> boson_eigenvalue;  // only when closes
};
// gamma = Q_N ... Q_1; closes iff gamma is diagonal with entries
// (+-1) * H^{N/2}.  Requires a lambda-only signature with N even.
RainbowResult rainbow(const Adinkra& a);

// Vertices all of whose incident edges go up (no edge with the vertex as
// source); equals dim ker of the minimal-degree slice of d.
long long zero_modes(const Adinkra& a);

}  // namespace adk
