#include "kmweyl/dynkin.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>

namespace kmweyl {

int DynkinDiagram::index_of(int label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw UnknownLabel("unknown node label " + std::to_string(label));
    return static_cast<int>(it - labels.begin());
}

bool DynkinDiagram::adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

namespace {

void normalize_edges(std::vector<std::pair<int, int>>& edges) {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

} // namespace

DynkinDiagram build_extended_A(int n, int m) {
    if (n < 2) throw ValidationError("build_extended_A: n must be >= 2");
    if (m < 0) throw ValidationError("build_extended_A: m must be >= 0");
    DynkinDiagram d;
    d.n = n;
    d.m = m;
    for (int l = -m; l <= n; ++l) d.labels.push_back(l);
    for (int i = 0; i < n; ++i) d.edges.emplace_back(i, i + 1);
    d.edges.emplace_back(0, n);
    for (int k = 1; k <= m; ++k) d.edges.emplace_back(-k, -k + 1);
    normalize_edges(d.edges);
    return d;
}

DynkinDiagram build_finite_A(int n) {
    if (n < 1) throw ValidationError("build_finite_A: n must be >= 1");
    DynkinDiagram d;
    d.n = n;
    d.m = 0;
    for (int l = 1; l <= n; ++l) d.labels.push_back(l);
    for (int l = 1; l < n; ++l) d.edges.emplace_back(l, l + 1);
    normalize_edges(d.edges);
    return d;
}

int CartanMatrix::index_of(int label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw UnknownLabel("unknown node label " + std::to_string(label));
    return static_cast<int>(it - labels.begin());
}

const Int& CartanMatrix::entry(int label_i, int label_j) const {
    return k.at(index_of(label_i), index_of(label_j));
}

CartanMatrix cartan_matrix(const DynkinDiagram& d) {
    CartanMatrix c;
    c.labels = d.labels;
    c.k = IntMatrix(d.rank());
    for (int i = 0; i < d.rank(); ++i) c.k.at(i, i) = 2;
    for (const auto& [a, b] : d.edges) {
        const int i = d.index_of(a), j = d.index_of(b);
        c.k.at(i, j) = -1;
        c.k.at(j, i) = -1;
    }
    return c;
}

std::optional<Bicolouration> bicolour(const DynkinDiagram& d) {
    Bicolouration bc;
    for (int start : d.labels) {
        if (bc.colour.count(start)) continue;
        bc.colour[start] = Colour::minus; // smallest label of the component
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : d.labels) {
                if (!d.adjacent(u, v)) continue;
                const Colour want =
                    bc.colour[u] == Colour::minus ? Colour::plus : Colour::minus;
                const auto it = bc.colour.find(v);
                if (it == bc.colour.end()) {
                    bc.colour[v] = want;
                    queue.push_back(v);
                } else if (it->second != want) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    return bc;
}

std::vector<EigenPair> cartan_eigen(const CartanMatrix& k) {
    const int n = k.rank();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(k.k.at(i, j));
    return jacobi_eigen(a);
}

std::string diagram_to_json(const DynkinDiagram& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["m"] = d.m;
    j["labels"] = d.labels;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : d.edges) edges.push_back({a, b});
    return j.dump();
}

DynkinDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DynkinDiagram d;
    d.n = j.at("n").get<int>();
    d.m = j.at("m").get<int>();
    d.labels = j.at("labels").get<std::vector<int>>();
    std::sort(d.labels.begin(), d.labels.end());
    for (const auto& e : j.at("edges"))
        d.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    normalize_edges(d.edges);
    for (const auto& [a, b] : d.edges) {
        d.index_of(a);
        d.index_of(b);
    }
    return d;
}

} // namespace kmweyl
