#include "chev/reps.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <tuple>

#include "json.hpp"

namespace chev {

// ---------------------------------------------------------------- lattices

std::vector<IVec> hermite_normal_form(std::vector<IVec> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                std::int64_t q = rows[r][c] / rows[top][c];
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
                if (rows[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (auto& x : rows[top]) x = -x;
        const std::int64_t p = rows[top][c];
        for (std::size_t r = 0; r < top; ++r) {
            std::int64_t q = rows[r][c] / p;
            if (rows[r][c] - q * p < 0) --q;
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

namespace {

std::size_t pivot_col(const IVec& row) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k]) return k;
    return row.size();
}

std::vector<IVec> cartan_rows(const RootSystem& rs) {
    std::vector<IVec> rows;
    for (int i = 0; i < rs.rank(); ++i) rows.push_back(rs.root_labels(rs.simple(i)));
    return rows;
}

}  // namespace

WeightLattice::WeightLattice(const RootSystem& rs, const std::vector<IVec>& generators) {
    basis_ = hermite_normal_form(generators);
    for (const IVec& r : cartan_rows(rs))
        if (!contains(r)) throw RepresentationError("weight lattice does not contain the root lattice");
    if (basis_.size() != static_cast<std::size_t>(rs.rank()))
        throw RepresentationError("weight lattice does not have full rank");
    const auto root = hermite_normal_form(cartan_rows(rs));
    if (basis_ == root)
        tag_ = Tag::Adjoint;
    else if (index_in_full() == 1)
        tag_ = Tag::SimplyConnected;
    else
        tag_ = Tag::Intermediate;
}

WeightLattice WeightLattice::root_lattice(const RootSystem& rs) { return WeightLattice(rs, cartan_rows(rs)); }

WeightLattice WeightLattice::full_lattice(const RootSystem& rs) {
    std::vector<IVec> rows;
    for (int i = 0; i < rs.rank(); ++i) {
        IVec e(rs.rank(), 0);
        e[i] = 1;
        rows.push_back(e);
    }
    return WeightLattice(rs, rows);
}

std::string WeightLattice::tag_name() const {
    switch (tag_) {
        case Tag::Adjoint:
            return "adjoint";
        case Tag::SimplyConnected:
            return "simply-connected";
        case Tag::Intermediate:
            return "intermediate";
    }
    return "";
}

std::optional<IVec> WeightLattice::coordinates(const IVec& w) const {
    IVec rest = w;
    IVec out(basis_.size(), 0);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        std::size_t c = pivot_col(basis_[r]);
        if (rest[c] % basis_[r][c] != 0) return std::nullopt;
        std::int64_t q = rest[c] / basis_[r][c];
        out[r] = q;
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= q * basis_[r][k];
    }
    for (auto x : rest)
        if (x) return std::nullopt;
    return out;
}

bool WeightLattice::contains(const IVec& w) const { return coordinates(w).has_value(); }

bool WeightLattice::contains_lattice(const WeightLattice& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const IVec& v) { return contains(v); });
}

std::int64_t WeightLattice::index_in_full() const {
    std::int64_t idx = 1;
    for (const IVec& r : basis_) idx *= r[pivot_col(r)];
    return idx;
}

// ---------------------------------------------------------- weight diagrams

bool is_microweight(const RootSystem& rs, int k) {
    if (k < 0 || k >= rs.rank()) return false;
    IVec w(rs.rank(), 0);
    w[k] = 1;
    for (std::size_t r = 0; r < rs.size(); ++r) {
        std::int64_t p = rs.weight_pairing(w, r);
        if (p < -1 || p > 1) return false;
    }
    return true;
}

WeightDiagram build_weight_diagram(std::shared_ptr<const RootSystem> rs, int k) {
    if (!is_microweight(*rs, k))
        throw RepresentationError("w" + std::to_string(k + 1) + " is not a microweight of " + rs->name());
    const int l = rs->rank();
    WeightDiagram d;
    d.roots = rs;
    d.fundamental = k;
    IVec top(l, 0);
    top[k] = 1;
    std::map<IVec, std::size_t> index{{top, 0}};
    d.vertices.push_back(top);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (int i = 0; i < l; ++i) {
            if (d.vertices[v][i] != 1) continue;
            IVec mu = d.vertices[v];
            const IVec& a = rs->root_labels(rs->simple(i));
            for (int j = 0; j < l; ++j) mu[j] -= a[j];
            auto [it, fresh] = index.emplace(mu, d.vertices.size());
            if (fresh) {
                d.vertices.push_back(mu);
                queue.push_back(it->second);
            }
            d.edges.push_back({v, it->second, i, 1});
        }
    }
    const std::size_t n = d.vertices.size();
    d.down_.assign(n * l, kNoVertex);
    d.up_.assign(n * l, kNoVertex);
    for (const auto& e : d.edges) {
        d.down_[e.upper * l + e.label] = e.lower;
        d.up_[e.lower * l + e.label] = e.upper;
    }
    return d;
}

std::optional<std::size_t> WeightDiagram::vertex(const IVec& labels) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == labels) return v;
    return std::nullopt;
}

std::optional<std::size_t> WeightDiagram::descend(std::size_t v, int label) const {
    std::size_t u = down_[v * roots->rank() + label];
    if (u == kNoVertex) return std::nullopt;
    return u;
}

std::optional<std::size_t> WeightDiagram::ascend(std::size_t v, int label) const {
    std::size_t u = up_[v * roots->rank() + label];
    if (u == kNoVertex) return std::nullopt;
    return u;
}

std::size_t WeightDiagram::edge_count(int label) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.label == label; }));
}

std::size_t WeightDiagram::diameter() const {
    const std::size_t n = vertices.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) {
        adj[e.upper].push_back(e.lower);
        adj[e.lower].push_back(e.upper);
    }
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, kNoVertex);
        std::deque<std::size_t> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            best = std::max(best, dist[v]);
            for (std::size_t u : adj[v])
                if (dist[u] == kNoVertex) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
    }
    return best;
}

std::string WeightDiagram::to_json() const {
    nlohmann::ordered_json j;
    j["system"] = roots->name();
    j["highest_weight"] = "w" + std::to_string(fundamental + 1);
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < vertices.size(); ++v)
        j["vertices"].push_back({{"index", v}, {"weight", vertices[v]}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : edges)
        j["edges"].push_back({{"from", e.lower}, {"to", e.upper}, {"label", e.label + 1}, {"sign", e.sign}});
    return j.dump(2);
}

// ----------------------------------------------------------- representations

bool Representation::square_zero() const {
    return std::all_of(divided.begin(), divided.end(), [](const auto& d) { return d.size() <= 2; });
}

IntMat Representation::image(std::size_t u) const {
    if (basis->is_root_vector(u)) return X[basis->root_of(u)];
    return H[u];
}

std::optional<std::string> Representation::check_brackets() const {
    const std::size_t d = basis->dim();
    std::vector<IntMat> img;
    for (std::size_t u = 0; u < d; ++u) img.push_back(image(u));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = u + 1; v < d; ++v) {
            IntMat lhs = commutator(img[u], img[v]);
            IntMat rhs(dim);
            for (auto [w, c] : basis->bracket(u, v)) rhs = rhs + img[w] * c;
            if (!(lhs == rhs))
                return "[" + basis->basis_label(u) + ", " + basis->basis_label(v) + "] is not reproduced in " + name;
        }
    return std::nullopt;
}

std::optional<std::string> Representation::check_weight_grading() const {
    const RootSystem& R = roots();
    for (std::size_t r = 0; r < R.size(); ++r) {
        const IVec a = R.root_labels(r);
        for (std::size_t col = 0; col < dim; ++col)
            for (std::size_t row = 0; row < dim; ++row) {
                if (X[r](row, col) == 0) continue;
                for (int i = 0; i < R.rank(); ++i)
                    if (weights[row][i] != weights[col][i] + a[i])
                        return "x[" + R.root_name(r) + "] moves basis vector " + std::to_string(col) +
                               " off its weight line";
            }
    }
    return std::nullopt;
}

namespace {

void finish(Representation& rep) {
    const RootSystem& R = rep.roots();
    const int l = R.rank();
    rep.dim = rep.X[0].n();
    rep.H.clear();
    for (int i = 0; i < l; ++i) rep.H.push_back(commutator(rep.X[R.simple(i)], rep.X[R.neg(R.simple(i))]));
    rep.weights.assign(rep.dim, IVec(l, 0));
    for (int i = 0; i < l; ++i)
        for (std::size_t a = 0; a < rep.dim; ++a)
            for (std::size_t b = 0; b < rep.dim; ++b) {
                if (a == b)
                    rep.weights[a][i] = rep.H[i](a, a);
                else if (rep.H[i](a, b) != 0)
                    throw RepresentationError(rep.name + ": torus does not act diagonally");
            }
    rep.divided.assign(R.size(), {});
    for (std::size_t r = 0; r < R.size(); ++r) {
        auto& seq = rep.divided[r];
        seq.push_back(IntMat::identity(rep.dim));
        for (std::int64_t k = 1;; ++k) {
            IntMat next = seq.back() * rep.X[r];
            if (next.is_zero()) break;
            auto q = next.divide_exact(k);
            if (!q) throw RepresentationError(rep.name + ": divided power of x[" + R.root_name(r) + "] not integral");
            seq.push_back(*q);
            if (k > static_cast<std::int64_t>(rep.dim)) throw RepresentationError(rep.name + ": root matrix not nilpotent");
        }
    }
    std::vector<IVec> ws = rep.weights;
    rep.lattice = WeightLattice(R, ws);
    if (auto err = rep.check_weight_grading()) throw RepresentationError(*err);
}

}  // namespace

Representation representation_from_simple(std::shared_ptr<const ChevalleyBasis> cb, std::string name,
                                          const std::vector<IntMat>& simple) {
    const RootSystem& R = cb->roots();
    Representation rep;
    rep.basis = cb;
    rep.name = std::move(name);
    if (simple.size() != static_cast<std::size_t>(R.rank())) throw RepresentationError("need one matrix per simple root");
    const std::size_t n = simple[0].n();
    rep.X.assign(R.size(), IntMat(n));
    std::vector<char> have(R.size(), 0);
    for (int i = 0; i < R.rank(); ++i) {
        rep.X[R.simple(i)] = simple[i];
        rep.X[R.neg(R.simple(i))] = simple[i].transpose();
        have[R.simple(i)] = have[R.neg(R.simple(i))] = 1;
    }
    // Positive roots in height order: x_{a_i + b} = [x_{a_i}, x_b] / N_{a_i, b}.
    for (std::size_t r = 0; r < R.num_positive(); ++r) {
        if (have[r]) continue;
        for (int i = 0; i < R.rank(); ++i) {
            IVec c = R.coeffs(r);
            c[i] -= 1;
            auto b = R.find_by_coeffs(c);
            if (!b || !R.is_positive(*b) || !have[*b]) continue;
            std::size_t ai = R.simple(i);
            for (auto [src_a, src_b, dst] : {std::tuple{ai, *b, r}, std::tuple{R.neg(ai), R.neg(*b), R.neg(r)}}) {
                auto q = commutator(rep.X[src_a], rep.X[src_b]).divide_exact(cb->N(src_a, src_b));
                if (!q) throw RepresentationError(rep.name + ": bracket not divisible by its structure constant");
                rep.X[dst] = *q;
                have[dst] = 1;
            }
            break;
        }
        if (!have[r]) throw RepresentationError("root " + R.root_name(r) + " unreachable from simple roots");
    }
    finish(rep);
    if (auto err = rep.check_brackets()) throw RepresentationError(*err);
    return rep;
}

Representation adjoint_representation(std::shared_ptr<const ChevalleyBasis> cb) {
    Representation rep;
    rep.basis = cb;
    rep.name = "adjoint";
    const RootSystem& R = cb->roots();
    for (std::size_t r = 0; r < R.size(); ++r) rep.X.push_back(cb->ad(cb->x_index(r)));
    finish(rep);
    // Bracket fidelity of ad is the Jacobi identity, checked when the basis was built.
    return rep;
}

namespace {

IntMat unit_sum(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> terms) {
    IntMat m(n);
    for (auto [i, j, s] : terms) m(i - 1, j - 1) += s;  // 1-based
    return m;
}

void require(const RootSystem& R, Family f, int min_rank, const char* what) {
    if (R.family() != f || R.rank() < min_rank)
        throw RepresentationError(std::string(what) + " is not defined for " + R.name());
}

}  // namespace

Representation standard_rep_A(std::shared_ptr<const ChevalleyBasis> cb) {
    const RootSystem& R = cb->roots();
    require(R, Family::A, 2, "standard representation of type A");
    const std::size_t l = R.rank(), n = l + 1;
    std::vector<IntMat> simple;
    for (std::size_t i = 1; i <= l; ++i) simple.push_back(unit_sum(n, {{i, i + 1, 1}}));
    return representation_from_simple(cb, "standard", simple);
}

Representation universal_rep_C(std::shared_ptr<const ChevalleyBasis> cb) {
    const RootSystem& R = cb->roots();
    require(R, Family::C, 2, "universal representation of type C");
    const std::size_t l = R.rank(), n = 2 * l;
    std::vector<IntMat> simple;
    for (std::size_t i = 1; i < l; ++i) simple.push_back(unit_sum(n, {{i, i + 1, 1}, {l + i + 1, l + i, -1}}));
    simple.push_back(unit_sum(n, {{l, 2 * l, 1}}));
    return representation_from_simple(cb, "universal", simple);
}

Representation standard_rep_D(std::shared_ptr<const ChevalleyBasis> cb) {
    const RootSystem& R = cb->roots();
    require(R, Family::D, 4, "standard representation of type D");
    const std::size_t l = R.rank(), n = 2 * l;
    std::vector<IntMat> simple;
    for (std::size_t i = 1; i < l; ++i) simple.push_back(unit_sum(n, {{i, i + 1, 1}, {l + i + 1, l + i, -1}}));
    simple.push_back(unit_sum(n, {{l - 1, 2 * l, 1}, {l, 2 * l - 1, -1}}));
    return representation_from_simple(cb, "standard", simple);
}

Representation rep_from_diagram(std::shared_ptr<const ChevalleyBasis> cb, const WeightDiagram& d) {
    const RootSystem& R = cb->roots();
    if (R.name() != d.roots->name()) throw RepresentationError("diagram belongs to another root system");
    const std::size_t n = d.vertices.size();
    std::vector<IntMat> simple(R.rank(), IntMat(n));
    // Matrix entries are (target, source): x_{a_i} raises lower -> upper.
    for (const auto& e : d.edges) simple[e.label](e.upper, e.lower) += e.sign;
    Representation rep = representation_from_simple(cb, "w" + std::to_string(d.fundamental + 1), simple);
    rep.diagram = d;
    return rep;
}

Representation make_representation(std::shared_ptr<const ChevalleyBasis> cb, const std::string& tag) {
    const RootSystem& R = cb->roots();
    if (tag == "adjoint") return adjoint_representation(cb);
    if (tag == "standard") {
        switch (R.family()) {
            case Family::A:
                return standard_rep_A(cb);
            case Family::C:
                return universal_rep_C(cb);
            case Family::D:
                return standard_rep_D(cb);
            default:
                throw RepresentationError("no standard representation in the catalogue for " + R.name());
        }
    }
    if (tag == "universal") return universal_rep_C(cb);
    if (tag.size() >= 2 && tag[0] == 'w') {
        int k = 0;
        for (std::size_t i = 1; i < tag.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tag[i]))) throw RepresentationError("bad weight tag '" + tag + "'");
            k = k * 10 + (tag[i] - '0');
        }
        if (k < 1 || k > R.rank()) throw RepresentationError("weight index out of range in '" + tag + "'");
        return rep_from_diagram(cb, build_weight_diagram(cb->roots_ptr(), k - 1));
    }
    if (tag == "sc") {
        switch (R.family()) {
            case Family::A:
                return standard_rep_A(cb);
            case Family::C:
                return universal_rep_C(cb);
            case Family::F:
            case Family::G:
                return adjoint_representation(cb);
            default:
                break;
        }
        if (R.family() == Family::E && R.rank() == 8) return adjoint_representation(cb);
        for (int k = 0; k < R.rank(); ++k) {
            if (!is_microweight(R, k)) continue;
            Representation rep = rep_from_diagram(cb, build_weight_diagram(cb->roots_ptr(), k));
            if (rep.lattice.tag() == WeightLattice::Tag::SimplyConnected) return rep;
        }
        throw RepresentationError("no simply-connected representation with one highest weight in the catalogue for " +
                                  R.name());
    }
    throw RepresentationError("unknown representation tag '" + tag + "'");
}

}  // namespace chev
