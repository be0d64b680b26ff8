#include "chev/autos.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <random>
#include <unordered_map>

namespace chev {

using nlohmann::ordered_json;

Mat image_by_additivity(const Ring& r, const std::vector<Mat>& basis_images, Elem t) {
    std::vector<std::uint64_t> c(r.additive_rank());
    r.impl().additive_coords(t, c.data());
    Mat out = Mat::identity(r, basis_images.at(0).n());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::uint64_t k = 0; k < c[j]; ++k) out = out * basis_images[j];
    return out;
}

// ------------------------------------------------------------------ graph

GraphAction::GraphAction(const ChevalleyGroup& g) : g_(&g) {
    const RootSystem& rs = g.roots();
    for (const auto& p : rs.diagram_automorphisms()) {
        simple_perms_.push_back(p);
        perms_.push_back(rs.extend_diagram_automorphism(p));
        signs_.push_back(g.rep().basis->graph_signs(perms_.back()));
    }
}

IdempotentSystem GraphAction::pure(std::size_t i) const {
    IdempotentSystem e(perms_.size(), 0);
    e.at(i) = g_->ring().one();
    return e;
}

std::vector<IdempotentSystem> GraphAction::variants() const {
    std::vector<IdempotentSystem> out;
    for (std::size_t i = 0; i < perms_.size(); ++i) out.push_back(pure(i));
    for (auto& e : find_idempotent_systems(g_->ring(), perms_.size()))
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return out;
}

void GraphAction::validate(const IdempotentSystem& eps) const {
    if (eps.size() != perms_.size())
        throw AutomorphismError("graph factor needs " + std::to_string(perms_.size()) + " idempotents, got " +
                                std::to_string(eps.size()));
    for (Elem e : eps)
        if (e >= g_->ring().size()) throw AutomorphismError("idempotent code out of range");
    if (!is_idempotent_system(g_->ring(), eps))
        throw AutomorphismError("graph factor coefficients are not orthogonal idempotents summing to 1");
}

Mat GraphAction::apply(const IdempotentSystem& eps, std::size_t root, Elem t) const {
    const Ring& R = g_->ring();
    if (eps.empty()) return g_->x(root, t);
    Mat m = Mat::identity(R, g_->dim());
    for (std::size_t i = 0; i < perms_.size(); ++i) {
        if (eps[i] == R.zero()) continue;
        Elem s = R.mul(R.mul(eps[i], R.from_int(signs_[i][root])), t);
        m = m * g_->x(perms_[i][root], s);
    }
    return m;
}

std::string GraphAction::describe(const IdempotentSystem& eps) const {
    auto name = [&](std::size_t i) {
        if (i == 0) return std::string("id");
        std::string s = "sigma[";
        for (std::size_t k = 0; k < simple_perms_[i].size(); ++k)
            s += (k ? "," : "") + std::to_string(simple_perms_[i][k] + 1);
        return s + "]";
    };
    const Ring& R = g_->ring();
    if (eps.empty()) return "id";
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (eps[i] == R.one()) return name(i);
    std::string s;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i] == R.zero()) continue;
        if (!s.empty()) s += " + ";
        s += R.format(eps[i]) + "*" + name(i);
    }
    return s;
}

// ------------------------------------------------------------ standard maps

namespace {

// Conjugation by y with the pullback S -> R precomputed.
struct InnerApplier {
    Mat y, y_inv;
    std::vector<std::int64_t> preimage;  // S code -> R code or -1
    const Ring* base;

    explicit InnerApplier(const InnerFactor& f) : y(f.y), y_inv(f.y.inv()), base(&f.into.src) {
        preimage.assign(f.into.dst.size(), -1);
        for (Elem a = 0; a < f.into.table.size(); ++a) preimage[f.into.table[a]] = a;
        if (!f.into.dst.same_as(f.y.ring())) throw AutomorphismError("inner factor: y is not over the target of the embedding");
    }
    Mat operator()(const Mat& m, const RingHom& into) const {
        Mat c = y * m.map(into) * y_inv;
        Mat out(*base, m.n());
        for (std::size_t k = 0; k < c.data().size(); ++k) {
            std::int64_t p = preimage[c.data()[k]];
            if (p < 0)
                throw AutomorphismError("conjugate has entry " + c.ring().format(c.data()[k]) + " outside " + base->spec());
            out.data()[k] = static_cast<Elem>(p);
        }
        return out;
    }
};

struct Composer {
    const ChevalleyGroup& g;
    const GraphAction& graph;
    const StandardAutomorphism& phi;
    std::optional<InnerApplier> inner;

    Composer(const ChevalleyGroup& g_, const GraphAction& gr, const StandardAutomorphism& p) : g(g_), graph(gr), phi(p) {
        if (phi.inner) inner.emplace(*phi.inner);
    }
    Mat operator()(std::size_t root, Elem t) const {
        Mat m = graph.apply(phi.graph, root, t);
        if (inner) m = (*inner)(m, phi.inner->into);
        if (phi.ring) m = m.map(*phi.ring);
        if (!phi.central.empty()) m = image_by_additivity(g.ring(), phi.central[root], t) * m;
        return m;
    }
};

}  // namespace

Mat apply_ring_auto(const RingHom& rho, const Mat& m) {
    if (!rho.src.same_as(m.ring()) || !rho.dst.same_as(m.ring()))
        throw AutomorphismError("ring map is not an endomorphism of the matrix ring");
    if (!rho.bijective() || !rho.preserves_structure()) throw AutomorphismError("ring map is not an automorphism");
    return m.map(rho);
}

Mat apply_graph_auto(const GraphAction& graph, const IdempotentSystem& eps, std::size_t root, Elem t) {
    if (!eps.empty()) graph.validate(eps);
    return graph.apply(eps, root, t);
}

Mat apply_inner(const InnerFactor& f, const Mat& m) { return InnerApplier(f)(m, f.into); }

Mat apply_central(const Mat& tau_value, const Mat& m) { return tau_value * m; }

Mat apply_standard(const ChevalleyGroup& g, const GraphAction& graph, const StandardAutomorphism& phi,
                   std::size_t root, Elem t) {
    return Composer(g, graph, phi)(root, t);
}

std::optional<std::string> check_standard(const ChevalleyGroup& g, const GraphAction& graph,
                                          const StandardAutomorphism& phi) {
    const Ring& R = g.ring();
    if (phi.ring) {
        if (!phi.ring->src.same_as(R) || !phi.ring->dst.same_as(R)) return "ring factor is not a map R -> R";
        if (!phi.ring->bijective() || !phi.ring->preserves_structure()) return "ring factor is not a ring automorphism";
    }
    if (!phi.graph.empty()) {
        try {
            graph.validate(phi.graph);
        } catch (const AutomorphismError& e) {
            return std::string(e.what());
        }
    }
    if (phi.inner) {
        auto v = normalization_check(phi.inner->y, g, phi.inner->into);
        if (!v.passed) return "inner factor does not normalize: " + v.witnesses.front();
    }
    if (!phi.central.empty()) {
        auto gens = g.elementary_generators();
        for (const auto& per_root : phi.central)
            for (const Mat& z : per_root)
                for (const Mat& s : gens)
                    if (z * s != s * z) return "central factor value does not commute with the generators";
    }
    return std::nullopt;
}

std::vector<Mat> center_elements(const ChevalleyGroup& g, std::size_t budget) {
    auto chars = g.all_characters(budget);
    if (!chars) throw UnsupportedError("torus too large to enumerate within budget");
    const RootSystem& rs = g.roots();
    std::vector<Mat> out;
    for (const auto& chi : *chars) {
        bool trivial = true;
        for (int i = 0; i < rs.rank() && trivial; ++i) trivial = g.chi_root_value(chi, rs.simple(i)) == g.ring().one();
        if (!trivial) continue;
        Mat z = g.torus(chi);
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    }
    return out;
}

bool central_values_consistent(const ChevalleyGroup& g, const CentralValues& v) {
    const Ring& R = g.ring();
    const RootSystem& rs = g.roots();
    const auto basis = R.additive_basis();
    const auto orders = R.additive_orders();
    for (const auto& row : v)
        for (std::size_t b = 0; b < row.size(); ++b) {
            Mat p = Mat::identity(R, g.dim());
            for (std::uint64_t k = 0; k < orders[b]; ++k) p = p * row[b];
            if (!p.is_identity()) return false;
        }
    std::vector<Elem> sample = R.size() <= 64 ? R.elements() : basis;
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) {
            if (a == b || rs.neg(a) == b || commutator_roots(rs, a, b).empty()) continue;
            const auto terms = commutator_constants(g.rep(), a, b).terms;
            // tau kills commutators, so the product of tau over the right-hand side must be 1
            for (Elem s : sample)
                for (Elem u : sample) {
                    Mat prod = Mat::identity(R, g.dim());
                    for (const auto& t : terms) {
                        Elem val = R.mul(R.from_int(t.c), R.mul(R.pow(s, t.i), R.pow(u, t.j)));
                        prod = prod * image_by_additivity(R, v[t.root], val);
                    }
                    if (!prod.is_identity()) return false;
                }
        }
    return true;
}

std::optional<std::vector<CentralValues>> central_homomorphisms(const ChevalleyGroup& g, std::size_t budget) {
    const Ring& R = g.ring();
    const RootSystem& rs = g.roots();
    const auto center = center_elements(g);
    const auto orders = R.additive_orders();
    const auto basis = R.additive_basis();
    const std::size_t nr = rs.size(), nb = basis.size();
    auto power = [&](const Mat& m, std::uint64_t e) {
        Mat out = Mat::identity(R, m.n());
        for (std::uint64_t k = 0; k < e; ++k) out = out * m;
        return out;
    };
    std::vector<std::vector<std::size_t>> options(nb);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t z = 0; z < center.size(); ++z)
            if (power(center[z], orders[b]).is_identity()) options[b].push_back(z);
    double count = 1;
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t b = 0; b < nb; ++b) count *= static_cast<double>(options[b].size());
    if (count > static_cast<double>(budget)) return std::nullopt;

    std::vector<CentralValues> out;
    std::vector<std::size_t> pick(nr * nb, 0);
    for (;;) {
        CentralValues v(nr, std::vector<Mat>(nb, Mat(R, 1)));
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t b = 0; b < nb; ++b) v[r][b] = center[options[b][pick[r * nb + b]]];
        bool ok = central_values_consistent(g, v);
        if (ok) {
            bool trivial = true;
            for (const auto& row : v)
                for (const Mat& m : row) trivial = trivial && m.is_identity();
            out.push_back(trivial ? CentralValues{} : v);
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == options[k % nb].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

// ------------------------------------------------------------ presentations

AutomorphismPresentation present(const ChevalleyGroup& g, const GraphAction& graph, const StandardAutomorphism& phi) {
    Composer c(g, graph, phi);
    const auto basis = g.ring().additive_basis();
    AutomorphismPresentation p;
    p.images.resize(g.roots().size());
    for (std::size_t r = 0; r < g.roots().size(); ++r)
        for (Elem b : basis) p.images[r].push_back(c(r, b));
    return p;
}

AutomorphismPresentation identity_presentation(const ChevalleyGroup& g) {
    GraphAction graph(g);
    return present(g, graph, StandardAutomorphism{});
}

std::optional<std::string> screen_presentation(const ChevalleyGroup& g, const AutomorphismPresentation& p) {
    const Ring& R = g.ring();
    const auto orders = R.additive_orders();
    if (p.images.size() != g.roots().size()) return "presentation does not cover every root";
    for (std::size_t r = 0; r < p.images.size(); ++r) {
        if (p.images[r].size() != orders.size())
            return "presentation for " + g.roots().root_name(r) + " does not cover the additive basis";
        for (std::size_t b = 0; b < orders.size(); ++b) {
            const Mat& m = p.images[r][b];
            if (!m.ring().same_as(R) || m.n() != g.dim()) return "image of " + g.roots().root_name(r) + " has the wrong shape";
            if (!R.is_unit(m.det())) return "image of " + g.roots().root_name(r) + " is not invertible";
            Mat pw = Mat::identity(R, m.n());
            for (std::uint64_t k = 0; k < orders[b]; ++k) pw = pw * m;
            if (!pw.is_identity()) return "image of " + g.roots().root_name(r) + " breaks additivity (wrong order)";
        }
    }
    return std::nullopt;
}

namespace {

ordered_json matrix_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.ring().format(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::unordered_map<std::string, Elem> element_names(const Ring& r) {
    std::unordered_map<std::string, Elem> out;
    for (Elem a : r.elements()) out.emplace(r.format(a), a);
    return out;
}

Elem parse_element(const std::unordered_map<std::string, Elem>& names, const Ring& r, const ordered_json& j) {
    std::string key;
    if (j.is_string())
        key = j.get<std::string>();
    else if (j.is_number_integer())
        return r.from_int(j.get<std::int64_t>());
    else
        throw AutomorphismError("ring element must be a string or integer");
    key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char c) { return std::isspace(c); }), key.end());
    for (const auto& [name, e] : names) {
        std::string n = name;
        n.erase(std::remove_if(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c); }), n.end());
        if (n == key) return e;
    }
    try {
        std::size_t used = 0;
        long long v = std::stoll(key, &used);
        if (used == key.size()) return r.from_int(v);
    } catch (const std::exception&) {
    }
    throw AutomorphismError("cannot read '" + j.get<std::string>() + "' as an element of " + r.spec());
}

}  // namespace

ordered_json presentation_to_json(const ChevalleyGroup& g, const AutomorphismPresentation& p) {
    ordered_json out = ordered_json::array();
    const auto basis = g.ring().additive_basis();
    for (std::size_t r = 0; r < p.images.size(); ++r)
        for (std::size_t b = 0; b < p.images[r].size(); ++b) {
            ordered_json e;
            e["root"] = g.roots().root_name(r);
            e["param"] = g.ring().format(basis[b]);
            e["image"] = matrix_json(p.images[r][b]);
            out.push_back(e);
        }
    return out;
}

AutomorphismPresentation presentation_from_json(const ChevalleyGroup& g, const ordered_json& j) {
    const Ring& R = g.ring();
    const RootSystem& rs = g.roots();
    const auto basis = R.additive_basis();
    const auto names = element_names(R);
    if (!j.is_array()) throw AutomorphismError("presentation must be a JSON list of {root, param, image}");
    std::vector<std::vector<std::optional<Mat>>> slots(rs.size(), std::vector<std::optional<Mat>>(basis.size()));
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("root") || !e.contains("param") || !e.contains("image"))
            throw AutomorphismError("presentation entry needs root, param and image");
        std::size_t root;
        try {
            root = rs.parse_root(e["root"].get<std::string>());
        } catch (const std::exception& ex) {
            throw AutomorphismError("bad root in presentation: " + std::string(ex.what()));
        }
        Elem t = parse_element(names, R, e["param"]);
        auto it = std::find(basis.begin(), basis.end(), t);
        if (it == basis.end())
            throw AutomorphismError("param " + R.format(t) + " is not in the additive basis of " + R.spec());
        const auto& rows = e["image"];
        if (!rows.is_array() || rows.size() != g.dim()) throw AutomorphismError("image must be a square list of rows");
        Mat m(R, g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (!rows[i].is_array() || rows[i].size() != g.dim()) throw AutomorphismError("image must be a square list of rows");
            for (std::size_t k = 0; k < g.dim(); ++k) m(i, k) = parse_element(names, R, rows[i][k]);
        }
        slots[root][static_cast<std::size_t>(it - basis.begin())] = m;
    }
    AutomorphismPresentation p;
    p.images.resize(rs.size());
    for (std::size_t r = 0; r < rs.size(); ++r)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (!slots[r][b])
                throw AutomorphismError("presentation misses x[" + rs.root_name(r) + "](" + R.format(basis[b]) + ")");
            p.images[r].push_back(*slots[r][b]);
        }
    return p;
}

// ---------------------------------------------------------------- conjugator

ConjugatorResult conjugator_solve(const std::vector<std::pair<Mat, Mat>>& pairs, const ConjugatorOptions& opt) {
    if (pairs.empty()) throw std::invalid_argument("conjugator_solve needs at least one pair");
    const Ring& R = pairs[0].first.ring();
    const std::size_t n = pairs[0].first.n();
    const auto basis = R.additive_basis();
    MatrixModule mm(R, n);
    const std::uint64_t e = R.additive_exponent();

    // unknown d = (i, j, k): y = basis[k] E_ij
    std::vector<Mat> units;
    std::vector<ZnVector> images;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (Elem b : basis) {
                Mat u(R, n);
                u(i, j) = b;
                ZnVector v;
                for (const auto& [a, c] : pairs) {
                    ZnVector part = mm.encode(u * a - c * u);
                    v.insert(v.end(), part.begin(), part.end());
                }
                units.push_back(u);
                images.push_back(std::move(v));
            }
    ConjugatorResult res;
    ZnSubmodule kernel(e, units.size());
    for (auto& k : zn_kernel(images, e)) kernel.insert(k);
    auto rows = kernel.basis();
    auto orders = kernel.row_orders();
    res.kernel_generators = rows.size();
    if (rows.empty()) {
        res.status = ConjugatorStatus::NoSolution;
        return res;
    }
    auto assemble = [&](const std::vector<std::uint64_t>& coeffs) {
        Mat y(R, n);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (coeffs[r] == 0) continue;
            for (std::size_t d = 0; d < units.size(); ++d) {
                std::uint64_t c = (coeffs[r] * rows[r][d]) % e;
                if (c) y = y + units[d].scaled(R.from_int(static_cast<std::int64_t>(c)));
            }
        }
        return y;
    };
    auto accept = [&](const Mat& y) {
        if (!R.is_unit(y.det())) return false;
        res.status = ConjugatorStatus::Found;
        res.y = y;
        return true;
    };
    double total = 1;
    for (auto o : orders) total *= static_cast<double>(o);
    std::vector<std::uint64_t> c(rows.size(), 0);
    // single generators first
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::fill(c.begin(), c.end(), 0);
        c[r] = 1;
        if (accept(assemble(c))) return res;
    }
    if (total <= static_cast<double>(opt.random_tries)) {
        std::fill(c.begin(), c.end(), 0);
        for (;;) {
            std::size_t k = 0;
            while (k < c.size() && ++c[k] == orders[k]) c[k++] = 0;
            if (k == c.size()) break;
            if (accept(assemble(c))) return res;
        }
        res.status = ConjugatorStatus::NoSolution;
        return res;
    }
    std::mt19937_64 rng(opt.seed);
    for (std::size_t t = 0; t < opt.random_tries; ++t) {
        for (std::size_t r = 0; r < c.size(); ++r) c[r] = rng() % orders[r];
        if (accept(assemble(c))) return res;
    }
    res.status = ConjugatorStatus::BudgetExhausted;
    return res;
}

InnerFactor normalize_determinant(const Mat& y) {
    const Ring& R = y.ring();
    Elem target = R.inv(y.det());
    const auto n = static_cast<std::int64_t>(y.n());
    for (Elem l : R.units())
        if (R.pow(l, n) == target) return InnerFactor{y.scaled(l), identity_hom(R)};
    Ring S = make_root_extension(R, target, static_cast<unsigned>(n), "z");
    RingHom into = base_embedding(S);
    Elem l = poly_from_coeffs(S, {S.zero(), S.one()});
    Mat out = y.map(into).scaled(l);
    if (out.det() != S.one()) throw std::logic_error("determinant normalization failed");
    return InnerFactor{out, into};
}

// ------------------------------------------------------------- decomposition

std::string decomposition_status_name(DecompositionStatus s) {
    switch (s) {
        case DecompositionStatus::Standard: return "standard";
        case DecompositionStatus::OutOfScope: return "out of theorem scope";
        case DecompositionStatus::Undecided: return "undecided";
        case DecompositionStatus::NonStandard: return "non-standard witness";
    }
    return "?";
}

std::vector<std::string> hypothesis_violations(const RootSystem& rs, const Ring& r) {
    std::vector<std::string> out;
    bool need2 = false, need3 = false;
    switch (rs.family()) {
        case Family::A: need2 = rs.rank() == 2; break;
        case Family::B:
        case Family::C:
        case Family::F: need2 = true; break;
        case Family::G: need2 = need3 = true; break;
        default: break;
    }
    if (need2 && !r.is_unit(r.from_int(2))) out.push_back("1/2");
    if (need3 && !r.is_unit(r.from_int(3))) out.push_back("1/3");
    return out;
}

namespace {

// Images with central discrepancies removed: x_c(t) is rebuilt from a
// commutator [x_a(s), x_b(u)] whose other factors are already clean.
struct CleanResult {
    std::vector<std::optional<std::vector<Mat>>> images;
    std::vector<std::string> log;
};

CleanResult remove_central_discrepancies(const ChevalleyGroup& g, const AutomorphismPresentation& phi) {
    const Ring& R = g.ring();
    const RootSystem& rs = g.roots();
    const auto basis = R.additive_basis();
    const std::size_t nr = rs.size();
    CleanResult out;
    out.images.resize(nr);
    std::map<std::pair<std::size_t, std::size_t>, CommutatorFormula> formulas;
    auto formula = [&](std::size_t a, std::size_t b) -> const CommutatorFormula& {
        auto it = formulas.find({a, b});
        if (it == formulas.end()) it = formulas.emplace(std::pair{a, b}, commutator_constants(g.rep(), a, b)).first;
        return it->second;
    };
    auto raw = [&](std::size_t r, Elem t) { return image_by_additivity(R, phi.images[r], t); };
    auto clean = [&](std::size_t r, Elem t) { return image_by_additivity(R, *out.images[r], t); };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < nr; ++c) {
            if (out.images[c]) continue;
            bool done = false;
            for (std::size_t a = 0; a < nr && !done; ++a)
                for (std::size_t b = 0; b < nr && !done; ++b) {
                    if (a == b || rs.neg(a) == b) continue;
                    auto roots = commutator_roots(rs, a, b);
                    auto hit = std::find_if(roots.begin(), roots.end(), [&](const auto& t) { return t.root == c; });
                    if (hit == roots.end() || (hit->i != 1 && hit->j != 1)) continue;
                    bool others_clean = std::all_of(roots.begin(), roots.end(),
                                                    [&](const auto& t) { return t.root == c || out.images[t.root].has_value(); });
                    if (!others_clean) continue;
                    const auto& f = formula(a, b);
                    std::size_t pos = 0;
                    while (f.terms[pos].root != c) ++pos;
                    const auto& term = f.terms[pos];
                    auto cinv = R.inverse(R.from_int(term.c));
                    if (!cinv) continue;
                    std::vector<Mat> imgs;
                    for (Elem t : basis) {
                        Elem s = R.one(), u = R.one();
                        (term.i == 1 ? s : u) = R.mul(t, *cinv);
                        Mat A = raw(a, s), B = raw(b, u);
                        Mat comm = group_commutator(A, A.inv(), B, B.inv());
                        Mat left = Mat::identity(R, g.dim()), right = left;
                        for (std::size_t q = 0; q < f.terms.size(); ++q) {
                            if (q == pos) continue;
                            const auto& o = f.terms[q];
                            Elem v = R.mul(R.from_int(o.c), R.mul(R.pow(s, o.i), R.pow(u, o.j)));
                            (q < pos ? left : right) = (q < pos ? left : right) * clean(o.root, v);
                        }
                        imgs.push_back(left.inv() * comm * right.inv());
                    }
                    out.images[c] = std::move(imgs);
                    out.log.push_back("x[" + rs.root_name(c) + "] rebuilt from [x[" + rs.root_name(a) + "], x[" +
                                      rs.root_name(b) + "]] (" + f.format(rs) + ")");
                    done = progress = true;
                }
        }
    }
    return out;
}

ordered_json hom_json(const RingHom& h) {
    ordered_json m = ordered_json::object();
    for (Elem a = 0; a < h.table.size(); ++a) m[h.src.format(a)] = h.dst.format(h.table[a]);
    return m;
}

}  // namespace

DecompositionResult decompose(const ChevalleyGroup& g, const AutomorphismPresentation& phi, const DecomposeOptions& opt) {
    DecompositionResult res;
    const Ring& R = g.ring();
    const RootSystem& rs = g.roots();
    const auto basis = R.additive_basis();
    GraphAction graph(g);
    auto& T = res.transcript;
    T.push_back("group: " + g.describe());

    res.violations = hypothesis_violations(rs, R);
    if (!res.violations.empty()) {
        std::string need;
        for (const auto& v : res.violations) need += (need.empty() ? "" : ", ") + v;
        if (!opt.override_gate) {
            res.status = DecompositionStatus::OutOfScope;
            T.push_back("hypotheses fail: " + rs.name() + " needs " + need + " in " + R.spec());
            return res;
        }
        T.push_back("hypotheses fail (" + need + " not in " + R.spec() + "); gate overridden");
    }
    if (auto bad = screen_presentation(g, phi)) throw AutomorphismError("presentation rejected: " + *bad);

    // (1) center
    const auto center = center_elements(g, opt.center_budget);
    T.push_back("center of G: " + std::to_string(center.size()) + " element(s)");

    // (2) central discrepancies
    std::vector<std::vector<Mat>> cleaned(rs.size());
    if (center.size() == 1) {
        cleaned = phi.images;
        T.push_back("trivial center: images taken as given");
    } else {
        auto cr = remove_central_discrepancies(g, phi);
        for (auto& l : cr.log) T.push_back(l);
        for (std::size_t r = 0; r < rs.size(); ++r) {
            if (cr.images[r]) {
                cleaned[r] = *cr.images[r];
                continue;
            }
            if (!opt.override_gate) {
                res.status = DecompositionStatus::Undecided;
                T.push_back("no commutator rebuilds x[" + rs.root_name(r) + "]");
                return res;
            }
            T.push_back("x[" + rs.root_name(r) + "] kept as given (no commutator rebuild)");
            cleaned[r] = phi.images[r];
        }
    }
    CentralValues central(rs.size());
    bool central_trivial = true;
    for (std::size_t r = 0; r < rs.size(); ++r)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Mat z = phi.images[r][b] * cleaned[r][b].inv();
            if (std::find(center.begin(), center.end(), z) == center.end()) {
                res.status = DecompositionStatus::NonStandard;
                T.push_back("phi(x[" + rs.root_name(r) + "](" + R.format(basis[b]) +
                            ")) differs from its commutator rebuild by a non-central factor");
                return res;
            }
            central_trivial = central_trivial && z.is_identity();
            central[r].push_back(z);
        }
    if (!central_trivial && !central_values_consistent(g, central)) {
        res.status = DecompositionStatus::NonStandard;
        T.push_back("central discrepancies do not extend to a homomorphism into the center");
        return res;
    }
    T.push_back(central_trivial ? "central discrepancies: none" : "central discrepancies form a homomorphism into the center");

    // (3) graph x ring search with a linear conjugator solve
    const auto autos = ring_automorphisms(R);
    const auto variants = graph.variants();
    T.push_back("search: " + std::to_string(variants.size()) + " graph variant(s) x " + std::to_string(autos.size()) +
                " ring automorphism(s)");
    bool exhausted = false;
    std::optional<Mat> y;
    for (const auto& eps : variants)
        for (std::size_t ri = 0; ri < autos.size(); ++ri) {
            RingHom inv = inverse_hom(autos[ri]);
            std::vector<std::pair<Mat, Mat>> pairs;
            bool similar = true;
            for (std::size_t r = 0; r < rs.size() && similar; ++r)
                for (std::size_t b = 0; b < basis.size() && similar; ++b) {
                    Mat a = graph.apply(eps, r, basis[b]);
                    Mat c = cleaned[r][b].map(inv);
                    similar = a.charpoly() == c.charpoly();
                    pairs.emplace_back(std::move(a), std::move(c));
                }
            if (!similar) continue;
            auto sol = conjugator_solve(pairs, {opt.random_tries, opt.seed});
            if (sol.status == ConjugatorStatus::BudgetExhausted) exhausted = true;
            if (sol.status != ConjugatorStatus::Found) continue;
            res.candidates.push_back({eps, ri});
            T.push_back("candidate: graph " + graph.describe(eps) + ", ring automorphism #" + std::to_string(ri));
            if (!y) y = sol.y;
        }
    if (!y) {
        res.status = exhausted ? DecompositionStatus::Undecided : DecompositionStatus::NonStandard;
        T.push_back(exhausted ? "conjugator search budget exhausted"
                              : "no graph/ring pair admits a conjugator: the map is not standard");
        return res;
    }

    StandardAutomorphism f;
    const auto& chosen = res.candidates.front();
    if (chosen.graph != graph.pure(0)) f.graph = chosen.graph;
    if (chosen.ring_index != 0) f.ring = autos[chosen.ring_index];
    f.inner = normalize_determinant(*y);
    if (!f.inner->into.dst.same_as(R)) {
        res.extension = f.inner->into.dst.spec();
        T.push_back("det(y) has no " + std::to_string(g.dim()) + "-th root in " + R.spec() + "; y rescaled over " +
                    *res.extension);
    }
    if (!central_trivial) f.central = central;

    // (4) residual and normalization
    auto nv = normalization_check(f.inner->y, g, f.inner->into);
    if (!nv.passed) {
        res.status = DecompositionStatus::NonStandard;
        T.push_back("conjugator fails the normalization check: " + nv.witnesses.front());
        return res;
    }
    T.push_back("y normalizes pi(L) and E over " + R.spec());
    StandardAutomorphism core = f;
    core.central.clear();
    bool residual_identity = present(g, graph, core).images == cleaned;
    T.push_back(residual_identity ? "residual fixes every x_a(t) on the presented generators"
                                  : "residual moves some x_a(t)");

    // (5) full verification
    res.factors = f;
    res.verified = residual_identity && present(g, graph, f).images == phi.images;
    res.status = res.verified ? DecompositionStatus::Standard : DecompositionStatus::NonStandard;
    T.push_back(res.verified ? "composite equals phi on every presented generator"
                             : "composite differs from phi on some generator");
    return res;
}

ordered_json decomposition_to_json(const ChevalleyGroup& g, const GraphAction& graph, const DecompositionResult& r) {
    const Ring& R = g.ring();
    ordered_json j;
    j["status"] = decomposition_status_name(r.status);
    j["system"] = g.roots().name();
    j["ring"] = R.spec();
    j["representation"] = g.rep().name;
    j["violations"] = r.violations;
    const auto autos = r.candidates.empty() ? std::vector<RingHom>{} : ring_automorphisms(R);
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.candidates) {
        ordered_json e;
        e["graph"] = graph.describe(c.graph);
        e["ring_automorphism"] = c.ring_index;
        cands.push_back(e);
    }
    j["candidates"] = cands;
    if (r.factors) {
        const auto& f = *r.factors;
        ordered_json fj;
        ordered_json gj;
        gj["description"] = graph.describe(f.graph);
        ordered_json eps = ordered_json::array();
        for (Elem e : (f.graph.empty() ? graph.pure(0) : f.graph)) eps.push_back(R.format(e));
        gj["idempotents"] = eps;
        fj["graph"] = gj;
        if (f.inner) {
            ordered_json ij;
            ij["ring"] = f.inner->into.dst.spec();
            ij["y"] = matrix_json(f.inner->y);
            fj["inner"] = ij;
        }
        fj["ring"] = f.ring ? hom_json(*f.ring) : ordered_json("identity");
        if (f.central.empty()) {
            fj["central"] = "trivial";
        } else {
            ordered_json cj = ordered_json::array();
            const auto basis = R.additive_basis();
            for (std::size_t root = 0; root < f.central.size(); ++root)
                for (std::size_t b = 0; b < f.central[root].size(); ++b) {
                    ordered_json e;
                    e["root"] = g.roots().root_name(root);
                    e["param"] = R.format(basis[b]);
                    e["value"] = matrix_json(f.central[root][b]);
                    cj.push_back(e);
                }
            fj["central"] = cj;
        }
        j["factors"] = fj;
    } else {
        j["factors"] = nullptr;
    }
    j["extension"] = r.extension ? ordered_json(*r.extension) : ordered_json(nullptr);
    j["verified"] = r.verified;
    j["transcript"] = r.transcript;
    return j;
}

// ------------------------------------------------------------------ random

Mat root_lattice_torus(const ChevalleyGroup& g, const std::vector<Elem>& simple_values) {
    const RootSystem& rs = g.roots();
    const Ring& R = g.ring();
    const std::size_t n = g.dim();
    const int l = rs.rank();
    if (simple_values.size() != static_cast<std::size_t>(l)) throw std::invalid_argument("one value per simple root");
    std::vector<std::optional<IVec>> off(n);
    off[0] = IVec(l, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (int i = 0; i < l; ++i) {
            const IntMat& X = g.rep().X[rs.simple(i)];
            for (std::size_t k = 0; k < n; ++k) {
                // X e_j has weight wt(j) + a_i; X e_k landing on e_j means wt(k) = wt(j) - a_i
                for (int dir : {1, -1}) {
                    std::int64_t entry = dir == 1 ? X(k, j) : X(j, k);
                    if (entry == 0 || off[k]) continue;
                    IVec v = *off[j];
                    v[i] += dir;
                    off[k] = v;
                    queue.push_back(k);
                }
            }
        }
    }
    Mat d(R, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!off[j]) throw std::logic_error("representation is not connected by the simple root elements");
        Elem v = R.one();
        for (int i = 0; i < l; ++i) v = R.mul(v, R.pow(simple_values[i], (*off[j])[i]));
        d(j, j) = v;
    }
    return d;
}

StandardAutomorphism random_standard_automorphism(const ChevalleyGroup& g, const GraphAction& graph, std::uint64_t seed,
                                                  std::size_t word_length) {
    std::mt19937_64 rng(seed);
    const Ring& R = g.ring();
    StandardAutomorphism phi;
    const auto variants = graph.variants();
    std::size_t vi = rng() % variants.size();
    if (vi != 0) phi.graph = variants[vi];
    const auto autos = ring_automorphisms(R);
    std::size_t ri = rng() % autos.size();
    if (ri != 0) phi.ring = autos[ri];
    auto homs = central_homomorphisms(g);
    if (homs && !homs->empty()) phi.central = (*homs)[rng() % homs->size()];

    const auto units = R.units();
    const auto elems = R.elements();
    std::vector<Elem> vals;
    for (int i = 0; i < g.roots().rank(); ++i) vals.push_back(units[rng() % units.size()]);
    Mat y = root_lattice_torus(g, vals);
    for (std::size_t k = 0; k < word_length; ++k) y = y * g.x(rng() % g.roots().size(), elems[rng() % elems.size()]);
    phi.inner = InnerFactor{y, identity_hom(R)};
    return phi;
}

}  // namespace chev
