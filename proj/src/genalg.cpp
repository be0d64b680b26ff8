#include "chev/genalg.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace chev {

MatrixModule::MatrixModule(Ring ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), rank_(ring_.additive_rank()),
      module_(ring_.additive_exponent(), n * n * ring_.additive_rank()) {
    if (ring_.additive_exponent() == 0) throw UnsupportedError("no additive coordinates for " + ring_.spec());
}

ZnVector MatrixModule::encode(const Mat& m) const {
    ZnVector v(n_ * n_ * rank_);
    std::vector<std::uint64_t> c(rank_);
    for (std::size_t k = 0; k < n_ * n_; ++k) {
        ring_.exponent_coords(m.data()[k], c.data());
        for (std::size_t j = 0; j < rank_; ++j) v[k * rank_ + j] = static_cast<std::uint32_t>(c[j]);
    }
    return v;
}

Mat MatrixModule::decode(const ZnVector& v) const {
    Mat m(ring_, n_);
    std::vector<std::uint64_t> c(rank_);
    for (std::size_t k = 0; k < n_ * n_; ++k) {
        for (std::size_t j = 0; j < rank_; ++j) c[j] = v[k * rank_ + j];
        m.data()[k] = ring_.from_exponent_coords(c.data());
    }
    return m;
}

bool MatrixModule::insert_scaled(const Mat& m) {
    bool grew = false;
    for (Elem b : ring_.additive_basis()) grew = module_.insert(encode(m.scaled(b))) || grew;
    return grew;
}

Mat recover_lie_generator(const Mat& x, const Representation& rep, RecoveryMode mode) {
    const Ring& R = x.ring();
    Mat y = x - Mat::identity(R, x.n());
    if (mode == RecoveryMode::SquareZero) {
        if (!rep.square_zero()) throw std::invalid_argument("square-zero recovery needs pi(X_a)^2 = 0 for all roots");
        return y;
    }
    auto half = R.inverse(R.from_int(2));
    if (!half) throw std::invalid_argument("half recovery needs 1/2 in " + R.spec());
    for (std::size_t r = 0; r < rep.divided.size(); ++r)
        if (rep.degree(r) > 2) throw std::invalid_argument("half recovery needs pi(X_a)^3 = 0 (excludes G2)");
    return y - (y * y).scaled(*half);
}

AlgebraClosure algebra_closure(const std::vector<Mat>& gens, bool adjoin_identity, std::size_t budget) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one matrix");
    const Ring& R = gens[0].ring();
    const std::size_t n = gens[0].n();
    MatrixModule span(R, n);
    AlgebraClosure out;
    out.identity_adjoined = adjoin_identity;
    std::deque<Mat> queue(gens.begin(), gens.end());
    if (adjoin_identity) queue.push_back(Mat::identity(R, n));
    const auto basis = R.additive_basis();
    std::size_t work = 0;
    out.complete = true;
    while (!queue.empty()) {
        if (++work > budget) {
            out.complete = false;
            break;
        }
        Mat m = std::move(queue.front());
        queue.pop_front();
        if (!span.insert(m)) continue;
        out.spanning.push_back(m);
        for (Elem b : basis)
            if (b != R.one()) queue.push_back(m.scaled(b));
        for (const Mat& s : out.spanning) {
            queue.push_back(m * s);
            if (&s != &out.spanning.back()) queue.push_back(s * m);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat e(R, n);
            e(i, j) = R.one();
            if (span.contains(e)) ++out.units_reached;
        }
    out.full_matrix_ring = out.units_reached == n * n;
    if (out.complete) {
        for (const Mat& a : out.spanning) {
            for (Elem b : basis)
                if (!span.contains(a.scaled(b))) out.closure_defect = "span is not closed under scaling";
            for (const Mat& c : out.spanning)
                if (!span.contains(a * c)) {
                    out.closure_defect = "span is not closed under products";
                    break;
                }
            if (out.closure_defect) break;
        }
    }
    return out;
}

// ------------------------------------------------------------ certificates

namespace {

std::optional<std::size_t> move(const WeightDiagram& d, std::size_t v, int label, bool up) {
    return up ? d.ascend(v, label) : d.descend(v, label);
}

std::optional<std::size_t> walk(const WeightDiagram& d, std::size_t v, const std::vector<int>& labels,
                                std::size_t first, bool up) {
    std::optional<std::size_t> cur = v;
    for (std::size_t k = first; k < labels.size() && cur; ++k) cur = move(d, *cur, labels[k], up);
    return cur;
}

std::size_t count_starts(const WeightDiagram& d, const std::vector<int>& labels, std::size_t first, bool up) {
    std::size_t n = 0;
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        if (walk(d, v, labels, first, up)) ++n;
    return n;
}

}  // namespace

std::optional<PathCertificate> certificate_for_labels(const WeightDiagram& d, std::size_t gamma,
                                                      const std::vector<int>& labels, bool ascending) {
    if (labels.empty() || gamma >= d.vertices.size()) return std::nullopt;
    auto nb = d.descend(gamma, labels[0]);
    if (!nb) return std::nullopt;
    std::size_t start = ascending ? *nb : gamma;
    auto end = walk(d, start, labels, 0, ascending);
    if (!end) return std::nullopt;
    PathCertificate c;
    c.from = gamma;
    c.neighbor = *nb;
    c.to = *end;
    c.ascending = ascending;
    c.labels = labels;
    c.full_starts = count_starts(d, labels, 0, ascending);
    c.tail_starts = labels.size() == 1 ? 1 : count_starts(d, labels, 1, ascending);
    return c;
}

std::optional<PathCertificate> find_path_certificate(const WeightDiagram& d, std::size_t gamma, int label,
                                                     std::size_t max_len) {
    auto nb = d.descend(gamma, label);
    if (!nb) throw std::invalid_argument("no edge with that label below the vertex");
    if (max_len == 0) max_len = 2 * d.diameter();
    const int l = d.roots->rank();
    for (std::size_t k = 0; k + 1 <= max_len; ++k)
        for (bool up : {false, true}) {
            // Tails continue from the far end of the first edge, labels ascending.
            std::vector<int> labels{label};
            std::optional<PathCertificate> found;
            std::function<void(std::size_t)> dfs = [&](std::size_t v) {
                if (labels.size() == k + 1) {
                    auto c = certificate_for_labels(d, gamma, labels, up);
                    if (c && c->full_starts == 1 && c->tail_starts == 1) found = c;
                    return;
                }
                for (int i = 0; i < l && !found; ++i)
                    if (auto u = move(d, v, i, up)) {
                        labels.push_back(i);
                        dfs(*u);
                        labels.pop_back();
                    }
            };
            dfs(up ? gamma : *nb);
            if (found) return found;
        }
    return std::nullopt;
}

std::optional<std::string> check_certificate(const WeightDiagram& d, const PathCertificate& c) {
    if (c.labels.empty()) return "empty label sequence";
    // Recount from the raw edge list.
    auto step = [&](std::size_t v, int label) -> std::optional<std::size_t> {
        std::optional<std::size_t> hit;
        for (const auto& e : d.edges) {
            std::size_t from = c.ascending ? e.lower : e.upper, to = c.ascending ? e.upper : e.lower;
            if (from == v && e.label == label) {
                if (hit) return std::nullopt;
                hit = to;
            }
        }
        return hit;
    };
    auto count = [&](std::size_t first, std::optional<std::size_t>* only) {
        std::size_t n = 0;
        for (std::size_t v = 0; v < d.vertices.size(); ++v) {
            std::optional<std::size_t> cur = v;
            for (std::size_t k = first; k < c.labels.size() && cur; ++k) cur = step(*cur, c.labels[k]);
            if (cur) {
                ++n;
                *only = v;
            }
        }
        return n;
    };
    const std::size_t head = c.ascending ? c.neighbor : c.from, second = c.ascending ? c.from : c.neighbor;
    if (step(head, c.labels[0]) != second) return "the first edge does not join the stated vertices";
    std::optional<std::size_t> start;
    if (count(0, &start) != 1) return "the full label sequence occurs at more than one vertex (or none)";
    if (*start != head) return "the full label sequence does not start at the stated vertex";
    if (c.labels.size() > 1) {
        std::optional<std::size_t> tail_start;
        if (count(1, &tail_start) != 1) return "the tail label sequence occurs at more than one vertex";
        if (*tail_start != second) return "the tail label sequence does not start at the far end of the first edge";
    }
    return std::nullopt;
}

IntMat matrix_unit_from_certificate(const Representation& rep, const PathCertificate& c) {
    const RootSystem& R = rep.roots();
    auto X = [&](int i, bool lower) -> const IntMat& { return rep.X[lower ? R.neg(R.simple(i)) : R.simple(i)]; };
    IntMat p = IntMat::identity(rep.dim);
    const std::size_t k = c.labels.size();
    if (!c.ascending) {
        for (std::size_t j = 0; j < k; ++j) p = p * X(c.labels[j], false);
        for (std::size_t j = k; j-- > 1;) p = p * X(c.labels[j], true);
    } else {
        for (std::size_t j = 1; j < k; ++j) p = p * X(c.labels[j], true);
        for (std::size_t j = k; j-- > 0;) p = p * X(c.labels[j], false);
    }
    if (p.nonzero_count() != 1) throw std::logic_error("certificate product is not a single matrix unit");
    std::int64_t e = p(c.from, c.neighbor);
    if (e != 1 && e != -1) throw std::logic_error("certificate product does not sit at (gamma, gamma - a)");
    return e == 1 ? p : -p;
}

// ----------------------------------------------------------- normalization

NormalizationVerdict normalization_check(const Mat& y, const ChevalleyGroup& g, const RingHom& into) {
    NormalizationVerdict v;
    const Ring& S = into.dst;
    const std::size_t n = g.dim();
    auto y_inv = y.inverse();
    if (!y_inv) {
        v.passed = false;
        v.witnesses.push_back("matrix is not invertible");
        return v;
    }
    MatrixModule lie(S, n);
    const auto& cb = *g.rep().basis;
    std::vector<Mat> images;
    for (std::size_t u = 0; u < cb.dim(); ++u) {
        Mat m = g.lie(u).map(into);
        images.push_back(m);
        for (Elem b : g.ring().additive_basis()) lie.insert(m.scaled(into(b)));
    }
    for (std::size_t u = 0; u < cb.dim(); ++u)
        if (!lie.contains(y * images[u] * *y_inv)) {
            v.passed = false;
            v.witnesses.push_back("conjugate of " + cb.basis_label(u) + " leaves pi(L_R)");
        }
    std::set<Elem> base_image(into.table.begin(), into.table.end());
    for (std::size_t r = 0; r < g.roots().size(); ++r)
        for (Elem t : g.ring().additive_basis()) {
            Mat c = y * g.x(r, t).map(into) * *y_inv;
            for (Elem e : c.data())
                if (!base_image.count(e)) {
                    v.passed = false;
                    v.witnesses.push_back("conjugate of x[" + g.roots().root_name(r) + "](" + g.ring().format(t) +
                                          ") has entries outside the base ring");
                    break;
                }
        }
    return v;
}

}  // namespace chev
