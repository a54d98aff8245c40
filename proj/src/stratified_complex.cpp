#include "strata/stratified_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace strata {

std::string simplex_to_string(const Simplex& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << ']';
    return os.str();
}

std::string ValidationReport::to_text() const {
    if (violations.empty()) return "ok\n";
    std::ostringstream os;
    for (const auto& v : violations) os << "violation: " << v << '\n';
    return os.str();
}

namespace {

// all nonempty subsets, as sorted simplices
void for_each_face(const Simplex& s, const std::function<void(const Simplex&)>& f) {
    const std::size_t m = s.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        f(face);
    }
}

}  // namespace

StratifiedComplex::StratifiedComplex(std::string name, int n, int vertex_count,
                                     std::vector<Simplex> facets, std::vector<int> orientations,
                                     std::map<Simplex, int> depth_overrides,
                                     std::vector<std::vector<Rat>> coords)
    : name_(std::move(name)), n_(n), vertex_count_(vertex_count), coords_(std::move(coords)) {
    if (n_ < 0) throw std::invalid_argument("StratifiedComplex: negative dimension");
    if (facets.size() != orientations.size())
        throw std::invalid_argument("StratifiedComplex: facet/orientation count mismatch");
    by_dim_.resize(n_ + 1);

    std::set<Simplex> facet_set;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        Simplex f = facets[i];
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("StratifiedComplex: repeated vertex in facet");
        for (int v : f)
            if (v < 0 || v >= vertex_count_)
                throw std::invalid_argument("StratifiedComplex: vertex id out of range");
        if (static_cast<int>(f.size()) > n_ + 1)
            throw std::invalid_argument("StratifiedComplex: facet dimension exceeds n");
        if (!facet_set.insert(f).second)
            throw std::invalid_argument("StratifiedComplex: duplicate facet");
        facet_orientation_[f] = orientations[i];
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());

    std::set<Simplex> all;
    for (const auto& f : facets_) for_each_face(f, [&](const Simplex& s) { all.insert(s); });
    for (const auto& s : all) {
        by_dim_[s.size() - 1].push_back(s);
        depth_[s] = n_;
    }
    for (const auto& [s, d] : depth_overrides) {
        auto it = depth_.find(s);
        if (it == depth_.end())
            throw std::invalid_argument("StratifiedComplex: depth override for unknown simplex " +
                                        simplex_to_string(s));
        it->second = d;
    }
    std::set<int> depths;
    for (const auto& [s, d] : depth_) depths.insert(d);
    realized_depths_.assign(depths.begin(), depths.end());

    if (!coords_.empty()) {
        if (static_cast<int>(coords_.size()) != vertex_count_)
            throw std::invalid_argument("StratifiedComplex: coordinate count mismatch");
        for (const auto& c : coords_)
            if (c.size() != coords_[0].size())
                throw std::invalid_argument("StratifiedComplex: non-uniform coordinate dimension");
    }
}

int StratifiedComplex::orientation(const Simplex& facet) const {
    auto it = facet_orientation_.find(facet);
    if (it == facet_orientation_.end())
        throw UnknownSimplex("orientation: not a facet: " + simplex_to_string(facet));
    return it->second;
}

bool StratifiedComplex::has_simplex(const Simplex& s) const { return depth_.count(s) > 0; }

int StratifiedComplex::depth(const Simplex& s) const {
    auto it = depth_.find(s);
    if (it == depth_.end())
        throw UnknownSimplex("depth: unknown simplex " + simplex_to_string(s));
    return it->second;
}

const std::vector<Simplex>& StratifiedComplex::simplices(int d) const {
    static const std::vector<Simplex> empty;
    if (d < 0 || d > n_) return empty;
    return by_dim_[d];
}

std::size_t StratifiedComplex::simplex_count() const { return depth_.size(); }

int StratifiedComplex::skeleton_intersection_dim(const Simplex& s, int m) const {
    if (!has_simplex(s))
        throw UnknownSimplex("skeleton_intersection_dim: unknown simplex " + simplex_to_string(s));
    int best = -1;
    for_each_face(s, [&](const Simplex& face) {
        if (depth_.at(face) <= m) best = std::max(best, static_cast<int>(face.size()) - 1);
    });
    return best;
}

int StratifiedComplex::open_stratum_dim(const Simplex& s, int d) const {
    if (!has_simplex(s))
        throw UnknownSimplex("open_stratum_dim: unknown simplex " + simplex_to_string(s));
    int best = -1;
    for_each_face(s, [&](const Simplex& face) {
        if (depth_.at(face) == d) best = std::max(best, static_cast<int>(face.size()) - 1);
    });
    return best;
}

ValidationReport StratifiedComplex::validate() const {
    ValidationReport rep;
    auto note = [&](const std::string& msg) { rep.violations.push_back(msg); };

    // purity: every simplex is a face of an n-simplex
    for (const auto& f : facets_)
        if (static_cast<int>(f.size()) != n_ + 1)
            note("purity: maximal simplex " + simplex_to_string(f) + " has dimension " +
                 std::to_string(static_cast<int>(f.size()) - 1) + " < " + std::to_string(n_));

    for (const auto& [s, d] : depth_) {
        int dim = static_cast<int>(s.size()) - 1;
        if (d < 0 || d > n_)
            note("depth range: " + simplex_to_string(s) + " has depth " + std::to_string(d));
        if (d < dim)
            note("depth below dimension: " + simplex_to_string(s) + " has depth " +
                 std::to_string(d) + " < dim " + std::to_string(dim));
        if (d == n_ - 1)
            note("codimension-1 stratum: " + simplex_to_string(s) + " has depth n-1; the singular set must have codimension >= 2");
        // monotone under faces: each codimension-1 face
        if (dim >= 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                if (depth_.at(face) > d)
                    note("depth not closed: face " + simplex_to_string(face) + " of " +
                         simplex_to_string(s) + " has larger depth");
            }
    }

    // closed pseudomanifold: every (n-1)-simplex has exactly two n-cofaces,
    // with cancelling induced orientations
    if (n_ >= 1) {
        std::map<Simplex, std::vector<std::pair<Simplex, int>>> cofaces;
        for (const auto& f : facets_) {
            if (static_cast<int>(f.size()) != n_ + 1) continue;
            for (std::size_t i = 0; i < f.size(); ++i) {
                Simplex face = f;
                face.erase(face.begin() + i);
                int sign = (i % 2 == 0) ? 1 : -1;
                cofaces[face].push_back({f, sign});
            }
        }
        for (const auto& [face, cf] : cofaces) {
            if (cf.size() != 2) {
                note("pseudomanifold: " + simplex_to_string(face) + " has " +
                     std::to_string(cf.size()) + " cofaces (expected 2)");
                continue;
            }
            int induced = cf[0].second * facet_orientation_.at(cf[0].first) +
                          cf[1].second * facet_orientation_.at(cf[1].first);
            if (induced != 0)
                note("orientation: induced orientations on " + simplex_to_string(face) +
                     " do not cancel");
        }
    }
    validated_ = rep.ok();
    return rep;
}

bool StratifiedComplex::validated() const {
    if (!validated_.has_value()) validate();
    return *validated_;
}

Simplex common_face(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int combinatorial_intersection_dim(const std::vector<Simplex>& simplices) {
    if (simplices.empty()) throw std::invalid_argument("intersection of empty family");
    Simplex acc = simplices[0];
    for (std::size_t i = 1; i < simplices.size() && !acc.empty(); ++i)
        acc = common_face(acc, simplices[i]);
    return static_cast<int>(acc.size()) - 1;
}

namespace {

int boundary_sign(const Simplex& simplex, const Simplex& face) {
    // face = simplex minus one vertex; sign (-1)^position
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        Simplex f = simplex;
        f.erase(f.begin() + i);
        if (f == face) return (i % 2 == 0) ? 1 : -1;
    }
    throw std::logic_error("boundary_sign: not a codimension-1 face");
}

}  // namespace

Subdivision barycentric_subdivide(const StratifiedComplex& X) {
    if (!X.validated()) throw NotValidated("barycentric_subdivide: complex fails validation");
    const int n = X.n();

    // barycenter ids by (dimension descending, simplex lex): every flag,
    // sorted by id, runs from its top element down
    Subdivision out;
    int next = 0;
    for (int d = n; d >= 0; --d)
        for (const auto& s : X.simplices(d)) out.barycenter[s] = next++;

    std::vector<std::vector<Rat>> coords;
    if (X.has_coords()) {
        coords.resize(next);
        for (int d = n; d >= 0; --d)
            for (const auto& s : X.simplices(d)) {
                std::vector<Rat> c(X.coords()[0].size(), Rat(0));
                for (int v : s)
                    for (std::size_t j = 0; j < c.size(); ++j) c[j] += X.coords()[v][j];
                for (auto& x : c) x /= Rat(static_cast<int>(s.size()));
                coords[out.barycenter.at(s)] = std::move(c);
            }
    }

    // subdivision operator on one simplex: sd(s) = b_s . sd(boundary s),
    // apex prepended (its id is smallest in the flag)
    std::function<std::vector<std::pair<Simplex, int>>(const Simplex&)> sd =
        [&](const Simplex& s) -> std::vector<std::pair<Simplex, int>> {
        std::vector<std::pair<Simplex, int>> pieces;
        const int b = out.barycenter.at(s);
        if (s.size() == 1) {
            pieces.push_back({Simplex{b}, 1});
            return pieces;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + i);
            int sign = (i % 2 == 0) ? 1 : -1;
            for (auto [piece, psign] : sd(face)) {
                piece.insert(piece.begin(), b);
                pieces.push_back({std::move(piece), sign * psign});
            }
        }
        return pieces;
    };

    std::vector<Simplex> facets;
    std::vector<int> orientations;
    std::map<Simplex, int> depths;
    for (const auto& f : X.facets()) {
        auto pieces = sd(f);
        out.facet_pieces[f] = pieces;
        for (const auto& [piece, sign] : pieces) {
            facets.push_back(piece);
            orientations.push_back(sign * X.orientation(f));
        }
    }
    // depth of a flag simplex = depth of its top (smallest-id) element;
    // assign for all faces of all facets
    std::map<int, Simplex> original;  // barycenter id -> original simplex
    for (const auto& [s, b] : out.barycenter) original[b] = s;
    std::set<Simplex> all;
    for (const auto& f : facets)
        for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (1u << i)) face.push_back(f[i]);
            all.insert(face);
        }
    for (const auto& s : all) depths[s] = X.depth(original.at(s.front()));

    out.complex = std::make_shared<StratifiedComplex>(X.name() + "-sd", n, next, facets,
                                                      orientations, depths, coords);
    return out;
}

ProductComplex::ProductComplex(std::string name, int n, int vertex_count,
                               std::vector<Simplex> facets, std::vector<int> orientations,
                               std::map<Simplex, int> depths, const StratifiedComplex* base, int k,
                               std::vector<std::vector<int>> tuples)
    : StratifiedComplex(std::move(name), n, vertex_count, std::move(facets),
                        std::move(orientations), std::move(depths)),
      base_(base),
      k_(k),
      tuples_(std::move(tuples)) {
    for (std::size_t i = 0; i < tuples_.size(); ++i) tuple_index_[tuples_[i]] = static_cast<int>(i);
}

int ProductComplex::vertex_of_tuple(const std::vector<int>& t) const {
    auto it = tuple_index_.find(t);
    if (it == tuple_index_.end()) throw UnknownSimplex("vertex_of_tuple: unknown tuple");
    return it->second;
}

Simplex ProductComplex::carrier(const Simplex& s, int i) const {
    std::set<int> verts;
    for (int v : s) verts.insert(tuples_[v][i]);
    return Simplex(verts.begin(), verts.end());
}

std::vector<int> ProductComplex::stratum_tuple(const Simplex& s) const {
    std::vector<int> t(k_);
    for (int i = 0; i < k_; ++i) t[i] = base_->depth(carrier(s, i));
    return t;
}

namespace {

// monotone staircase paths through a product of simplices; each word w with
// d_i occurrences of letter i gives one facet, signed by inversion parity
void enumerate_paths(const std::vector<Simplex>& cells, std::vector<int>& pos,
                     std::vector<int>& word, std::vector<std::vector<int>>& vertices,
                     const std::function<void(const std::vector<std::vector<int>>&, int)>& emit) {
    bool done = true;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (pos[i] + 1 < static_cast<int>(cells[i].size())) done = false;
    if (done) {
        int inv = 0;
        for (std::size_t a = 0; a < word.size(); ++a)
            for (std::size_t b = a + 1; b < word.size(); ++b)
                if (word[a] > word[b]) ++inv;
        emit(vertices, (inv % 2 == 0) ? 1 : -1);
        return;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (pos[i] + 1 >= static_cast<int>(cells[i].size())) continue;
        ++pos[i];
        word.push_back(static_cast<int>(i));
        std::vector<int> v(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) v[j] = cells[j][pos[j]];
        vertices.push_back(std::move(v));
        enumerate_paths(cells, pos, word, vertices, emit);
        vertices.pop_back();
        word.pop_back();
        --pos[i];
    }
}

}  // namespace

std::shared_ptr<ProductComplex> product_complex(const StratifiedComplex& X, int k,
                                                std::size_t max_facets) {
    if (!X.validated()) throw NotValidated("product_complex: base fails validation");
    if (k < 1) throw std::invalid_argument("product_complex: k must be >= 1");

    // predicted facet count: facets^k * (nk)! / (n!)^k
    std::size_t count = 1;
    for (int i = 0; i < k; ++i) count *= X.facets().size();
    {
        // multinomial via incremental binomials
        std::size_t multi = 1;
        int total = 0;
        for (int f = 0; f < k; ++f)
            for (int i = 1; i <= X.n(); ++i) {
                ++total;
                multi = multi * total / i;  // exact: product of binomials
            }
        if (count > max_facets / std::max<std::size_t>(multi, 1))
            throw SizeLimit("product_complex: facet count exceeds limit");
        count *= multi;
        if (count > max_facets) throw SizeLimit("product_complex: facet count exceeds limit");
    }

    std::vector<std::vector<int>> tuples;
    {
        std::vector<int> t(k, 0);
        while (true) {
            tuples.push_back(t);
            int i = k - 1;
            while (i >= 0 && t[i] + 1 >= X.vertex_count()) --i;
            if (i < 0) break;
            ++t[i];
            for (int j = i + 1; j < k; ++j) t[j] = 0;
        }
    }
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);

    std::vector<Simplex> facets;
    std::vector<int> orientations;
    std::vector<Simplex> cells(k);
    std::function<void(int, int)> rec = [&](int slot, int orient) {
        if (slot == k) {
            std::vector<int> pos(k, 0);
            std::vector<int> word;
            std::vector<std::vector<int>> verts;
            std::vector<int> v0(k);
            for (int j = 0; j < k; ++j) v0[j] = cells[j][0];
            verts.push_back(v0);
            enumerate_paths(cells, pos, word, verts,
                            [&](const std::vector<std::vector<int>>& path, int sign) {
                                Simplex s;
                                for (const auto& t : path) s.push_back(index.at(t));
                                facets.push_back(std::move(s));
                                orientations.push_back(orient * sign);
                            });
            return;
        }
        for (const auto& f : X.facets()) {
            cells[slot] = f;
            rec(slot + 1, orient * X.orientation(f));
        }
    };
    rec(0, 1);

    // depth of every face: sum of carrier depths
    std::set<Simplex> all;
    for (const auto& f : facets)
        for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (1u << i)) face.push_back(f[i]);
            all.insert(face);
        }
    std::map<Simplex, int> depths;
    for (const auto& s : all) {
        int d = 0;
        for (int i = 0; i < k; ++i) {
            std::set<int> verts;
            for (int v : s) verts.insert(tuples[v][i]);
            Simplex carrier(verts.begin(), verts.end());
            if (!X.has_simplex(carrier))
                throw std::logic_error("product_complex: carrier is not a simplex of the base");
            d += X.depth(carrier);
        }
        depths[s] = d;
    }

    return std::make_shared<ProductComplex>(X.name() + "(" + std::to_string(k) + ")",
                                            X.n() * k, static_cast<int>(tuples.size()), facets,
                                            orientations, depths, &X, k, tuples);
}

}  // namespace strata
