#pragma once
// JSON document formats, polynomial parsing/printing, DOT export, and CSV
// profiles.

#include <nlohmann/json.hpp>
#include <string>

#include "adk/adinkra.hpp"
#include "adk/cohomology.hpp"
#include "adk/complexes.hpp"

namespace adk {

using nlohmann::json;

// AdinkraDocument schema (schema_version 1):
// {
//   "schema_version": 1,
//   "metadata": {"name": "...", "description": "..."},        (optional)
//   "signature": {"n_lambda": N, "n_mu": M, "n_rho": R},
//   "vertices": [{"id": "...", "parity": "boson"|"fermion", "height": h}],
//   "edges": [{"u": "...", "v": "...", "color": c,
//              "dash": 1|-1, "arrow": 1|-1}]                  (arrow optional, default 1)
// }
json adinkra_to_json(const Adinkra& a);
Adinkra adinkra_from_json(const json& j);
Adinkra load_adinkra(const std::string& path);
void save_adinkra(const Adinkra& a, const std::string& path);

// Linear/low-degree polynomial text: terms like "l1", "-l2", "3/2*mu1",
// "rho1*rhos2", joined with + and -.
Poly parse_poly(const std::string& text, const VariableSet& sig);

json complex_to_json(const FreeComplex& c);
json mf_to_json(const MatrixFactorization& mf);
json profile_to_json(const HilbertProfile& p);
std::string profile_to_csv(const HilbertProfile& p, int levels);

// ChainMapDocument: {"schema_version":1, "shift": s,
//   "components": {"0": [["poly", ...], ...], "1": ..., ...}}  (keys = source
// homological level i; entry [r][c] maps source level i to target level
// i - s).  Source/target complexes are supplied by the caller.
ChainMap chain_map_from_json(const json& j, const FreeComplex& source,
                             const FreeComplex& target);

// Graphviz DOT: dashed style for dash = -1, pen colors per color index,
// waved edges labeled "~" with an arrowhead, vertex shape by parity, same
// rank per height.
std::string to_dot(const Adinkra& a);

}  // namespace adk
