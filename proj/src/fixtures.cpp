#include "strata/fixtures.hpp"

#include <algorithm>
#include <queue>

namespace strata {
namespace fixtures {

std::vector<int> coherent_orientation(int n, const std::vector<Simplex>& facets) {
    std::map<Simplex, std::vector<std::pair<std::size_t, int>>> cofaces;
    for (std::size_t idx = 0; idx < facets.size(); ++idx) {
        const Simplex& f = facets[idx];
        for (std::size_t i = 0; i < f.size(); ++i) {
            Simplex face = f;
            face.erase(face.begin() + i);
            cofaces[face].push_back({idx, (i % 2 == 0) ? 1 : -1});
        }
    }
    std::vector<int> orient(facets.size(), 0);
    for (std::size_t seed = 0; seed < facets.size(); ++seed) {
        if (orient[seed] != 0) continue;
        orient[seed] = 1;
        std::queue<std::size_t> queue;
        queue.push(seed);
        while (!queue.empty()) {
            std::size_t a = queue.front();
            queue.pop();
            const Simplex& f = facets[a];
            for (std::size_t i = 0; i < f.size(); ++i) {
                Simplex face = f;
                face.erase(face.begin() + i);
                const auto& cf = cofaces.at(face);
                if (cf.size() != 2) throw std::runtime_error("coherent_orientation: not a closed pseudomanifold");
                for (const auto& [b, bsign] : cf) {
                    if (b == a) continue;
                    int asign = (i % 2 == 0) ? 1 : -1;
                    int needed = -orient[a] * asign * bsign;  // induced orientations cancel
                    if (orient[b] == 0) {
                        orient[b] = needed;
                        queue.push(b);
                    } else if (orient[b] != needed) {
                        throw std::runtime_error("coherent_orientation: complex is not orientable");
                    }
                }
            }
        }
    }
    (void)n;
    return orient;
}

std::shared_ptr<StratifiedComplex> boundary_simplex(int d) {
    // facets: all d-element subsets of {0..d+1}
    std::vector<Simplex> facets;
    std::vector<int> orientations;
    for (int skip = 0; skip <= d + 1; ++skip) {
        Simplex f;
        for (int v = 0; v <= d + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
        orientations.push_back(skip % 2 == 0 ? 1 : -1);
    }
    // standard-simplex coordinates in Q^(d+2)
    std::vector<std::vector<Rat>> coords(d + 2, std::vector<Rat>(d + 2, Rat(0)));
    for (int v = 0; v <= d + 1; ++v) coords[v][v] = Rat(1);
    return std::make_shared<StratifiedComplex>("boundary-simplex-" + std::to_string(d + 1), d,
                                               d + 2, facets, orientations,
                                               std::map<Simplex, int>{}, coords);
}

std::shared_ptr<StratifiedComplex> torus7() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        Simplex a{i, (i + 1) % 7, (i + 3) % 7};
        Simplex b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        facets.push_back(a);
        facets.push_back(b);
    }
    std::sort(facets.begin(), facets.end());
    auto orient = coherent_orientation(2, facets);
    return std::make_shared<StratifiedComplex>("torus7", 2, 7, facets, orient);
}

std::shared_ptr<StratifiedComplex> suspension(const StratifiedComplex& X,
                                              const std::string& name) {
    const int north = X.vertex_count();
    const int south = X.vertex_count() + 1;
    std::vector<Simplex> facets;
    std::vector<int> orientations;
    for (const auto& f : X.facets()) {
        Simplex up = f, down = f;
        up.push_back(north);
        down.push_back(south);
        // cone-off with the apex appended last: boundary(f * apex) =
        // (boundary f) * apex + (-1)^(dim f + 1) f, so the two halves cancel
        // along the equator with opposite apex signs
        facets.push_back(up);
        orientations.push_back(X.orientation(f));
        facets.push_back(down);
        orientations.push_back(-X.orientation(f));
    }
    std::map<Simplex, int> depths;
    depths[Simplex{north}] = 0;
    depths[Simplex{south}] = 0;
    return std::make_shared<StratifiedComplex>(name, X.n() + 1, X.vertex_count() + 2, facets,
                                               orientations, depths);
}

std::shared_ptr<StratifiedComplex> suspended_torus() {
    return suspension(*torus7(), "sigma-t2");
}

}  // namespace fixtures
}  // namespace strata
