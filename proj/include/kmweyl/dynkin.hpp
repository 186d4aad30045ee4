#ifndef KMWEYL_DYNKIN_HPP
#define KMWEYL_DYNKIN_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmweyl/exact.hpp"
#include "kmweyl/numeric.hpp"

namespace kmweyl {

/// Simply-laced Dynkin diagram on integer node labels.
struct DynkinDiagram {
    int n = 0; ///< series rank (A_n); 0 for custom diagrams
    int m = 0; ///< number of over-extension nodes
    std::vector<int> labels;                 // ascending
    std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted

    int rank() const { return static_cast<int>(labels.size()); }
    int index_of(int label) const;
    bool adjacent(int a, int b) const;
};

/// Extended A-series diagram (A_n)_{-m}: affine (n+1)-cycle on nodes 0..n
/// with the chain -1, ..., -m hanging off node 0. Rejects n < 2 (the A_1
/// affinization carries a double bond and is out of scope).
DynkinDiagram build_extended_A(int n, int m);

/// Plain path diagram on labels 1..n (the finite series).
DynkinDiagram build_finite_A(int n);

/// Symmetric Cartan matrix K_ii = 2, K_ij = -1 iff {i,j} is an edge,
/// indexed in ascending label order.
struct CartanMatrix {
    std::vector<int> labels;
    IntMatrix k;

    int rank() const { return k.size(); }
    int index_of(int label) const;
    const Int& entry(int label_i, int label_j) const;
};

CartanMatrix cartan_matrix(const DynkinDiagram& d);

enum class Colour { minus, plus };

struct Bicolouration {
    std::map<int, Colour> colour;
};

/// Proper 2-colouring if the diagram is bipartite. Deterministic: the
/// smallest label of each connected component is coloured minus.
std::optional<Bicolouration> bicolour(const DynkinDiagram& d);

/// All eigenpairs of the Cartan matrix, ascending by eigenvalue.
std::vector<EigenPair> cartan_eigen(const CartanMatrix& k);

/// {"n":..,"m":..,"labels":[...],"edges":[[a,b],...]} serialization.
std::string diagram_to_json(const DynkinDiagram& d);
DynkinDiagram diagram_from_json(const std::string& text);

} // namespace kmweyl

#endif
