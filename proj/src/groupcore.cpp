#include "chev/groupcore.hpp"

#include <deque>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chev/poly2.hpp"

namespace chev {

// ------------------------------------------------------------------ group

ChevalleyGroup::ChevalleyGroup(std::shared_ptr<const Representation> rep, Ring ring)
    : rep_(std::move(rep)), ring_(std::move(ring)) {
    const RootSystem& R = roots();
    for (std::size_t r = 0; r < R.size(); ++r) {
        std::vector<Mat> seq;
        for (const IntMat& d : rep_->divided[r]) seq.push_back(Mat::from_int(ring_, d));
        divided_.push_back(std::move(seq));
        pi_.push_back(Mat::from_int(ring_, rep_->X[r]));
    }
    for (const IVec& wt : rep_->weights) {
        auto c = rep_->lattice.coordinates(wt);
        if (!c) throw RepresentationError("weight outside its own lattice");
        weight_coords_.push_back(*c);
    }
}

std::string ChevalleyGroup::describe() const {
    return roots().name() + " " + rep_->name + " (" + rep_->lattice.tag_name() + ") over " + ring_.spec();
}

Mat ChevalleyGroup::lie(std::size_t u) const { return Mat::from_int(ring_, rep_->image(u)); }

Mat ChevalleyGroup::x(std::size_t root, Elem t) const {
    const auto& seq = divided_[root];
    Mat out = seq[0];
    Elem tk = ring_.one();
    for (std::size_t k = 1; k < seq.size(); ++k) {
        tk = ring_.mul(tk, t);
        if (tk == ring_.zero()) break;
        out = out + seq[k].scaled(tk);
    }
    return out;
}

Mat ChevalleyGroup::w(std::size_t root, Elem t) const {
    auto inv = ring_.inverse(t);
    if (!inv) throw RingError("w_a(t) needs an invertible t, got " + ring_.format(t));
    Mat xa = x(root, t);
    return xa * x(roots().neg(root), ring_.neg(*inv)) * xa;
}

Mat ChevalleyGroup::h(std::size_t root, Elem t) const {
    // w_a(1)^{-1} = w_a(-1)
    return w(root, t) * w(root, ring_.neg(ring_.one()));
}

Mat ChevalleyGroup::torus(const TorusCharacter& chi) const {
    Mat d(ring_, dim());
    for (std::size_t v = 0; v < dim(); ++v) {
        Elem e = ring_.one();
        for (std::size_t j = 0; j < chi.values.size(); ++j)
            if (weight_coords_[v][j]) e = ring_.mul(e, ring_.pow(chi.values[j], weight_coords_[v][j]));
        d(v, v) = e;
    }
    return d;
}

TorusCharacter ChevalleyGroup::chi_root(std::size_t root, Elem u) const {
    if (!ring_.is_unit(u)) throw RingError("character value must be a unit");
    TorusCharacter chi;
    for (const IVec& b : rep_->lattice.basis()) chi.values.push_back(ring_.pow(u, roots().weight_pairing(b, root)));
    return chi;
}

Elem ChevalleyGroup::chi_weight(const TorusCharacter& chi, const IVec& labels) const {
    auto c = rep_->lattice.coordinates(labels);
    if (!c) throw RepresentationError("weight is not in the lattice of the representation");
    Elem e = ring_.one();
    for (std::size_t j = 0; j < c->size(); ++j)
        if ((*c)[j]) e = ring_.mul(e, ring_.pow(chi.values[j], (*c)[j]));
    return e;
}

Elem ChevalleyGroup::chi_root_value(const TorusCharacter& chi, std::size_t root) const {
    return chi_weight(chi, roots().root_labels(root));
}

std::optional<std::vector<TorusCharacter>> ChevalleyGroup::all_characters(std::size_t budget) const {
    const auto units = ring_.units();
    const std::size_t k = character_rank();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= units.size();
        if (total > budget) return std::nullopt;
    }
    std::vector<TorusCharacter> out;
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t n = 0; n < total; ++n) {
        TorusCharacter chi;
        for (std::size_t i = 0; i < k; ++i) chi.values.push_back(units[idx[i]]);
        out.push_back(std::move(chi));
        for (std::size_t i = k; i-- > 0;) {
            if (++idx[i] < units.size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

std::optional<TorusCharacter> ChevalleyGroup::character_of(const Mat& d, std::size_t budget) const {
    if (!d.is_diagonal()) return std::nullopt;
    auto chars = all_characters(budget);
    if (!chars) throw UnsupportedError("torus too large to enumerate within budget");
    for (const auto& chi : *chars)
        if (torus(chi) == d) return chi;
    return std::nullopt;
}

std::vector<Mat> ChevalleyGroup::elementary_generators() const {
    std::vector<Mat> gens;
    for (std::size_t r = 0; r < roots().size(); ++r)
        for (Elem t : ring_.additive_basis()) gens.push_back(x(r, t));
    return gens;
}

std::vector<Mat> ChevalleyGroup::subgroup_generators(char which) const {
    const RootSystem& R = roots();
    std::vector<Mat> gens;
    switch (which) {
        case 'U':
        case 'V':
            for (std::size_t r = 0; r < R.num_positive(); ++r)
                for (Elem t : ring_.additive_basis()) gens.push_back(x(which == 'U' ? r : R.neg(r), t));
            break;
        case 'H':
            for (std::size_t r = 0; r < R.size(); ++r)
                for (Elem t : ring_.units()) gens.push_back(h(r, t));
            break;
        case 'N':
            for (std::size_t r = 0; r < R.size(); ++r)
                for (Elem t : ring_.units()) gens.push_back(w(r, t));
            break;
        default:
            throw std::invalid_argument(std::string("unknown subgroup '") + which + "', expected U, V, H or N");
    }
    return gens;
}

Mat diagonal_inverse(const Mat& d) {
    Mat r(d.ring(), d.n());
    for (std::size_t i = 0; i < d.n(); ++i) r(i, i) = d.ring().inv(d(i, i));
    return r;
}

// --------------------------------------------------------------- closure

std::size_t GroupClosure::KeyHash::operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : v) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

GroupClosure::GroupClosure(const std::vector<Mat>& generators, std::size_t budget) : gens_(generators) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    ring_ = generators[0].ring();
    n_ = generators[0].n();
    Mat id = Mat::identity(ring_, n_);
    elements_.push_back(id.data());
    index_.emplace(id.data(), 0);
    complete_ = true;
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        Mat g(ring_, n_, elements_[head]);
        for (const Mat& s : gens_) {
            Mat p = g * s;
            if (index_.count(p.data())) continue;
            if (elements_.size() >= budget) {
                complete_ = false;
                return;
            }
            index_.emplace(p.data(), elements_.size());
            elements_.push_back(p.data());
        }
    }
}

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::Member:
            return "member";
        case Membership::NonMember:
            return "non-member";
        case Membership::Undecided:
            return "undecided";
    }
    return "";
}

FullGroup::FullGroup(const ChevalleyGroup& group, std::size_t budget)
    : group_(group), closure_(group.elementary_generators(), budget), budget_(budget) {}

Membership FullGroup::in_elementary(const Mat& g) const {
    if (closure_.contains(g)) return Membership::Member;
    return closure_.complete() ? Membership::NonMember : Membership::Undecided;
}

Membership FullGroup::contains(const Mat& g) const {
    if (g.det() != g.ring().one()) return Membership::NonMember;
    auto chars = group_.all_characters(budget_);
    if (!chars) return closure_.contains(g) ? Membership::Member : Membership::Undecided;
    for (const auto& chi : *chars)
        if (closure_.contains(diagonal_inverse(group_.torus(chi)) * g)) return Membership::Member;
    return closure_.complete() ? Membership::NonMember : Membership::Undecided;
}

std::optional<std::vector<Mat>> FullGroup::center_bruteforce() const {
    if (!closure_.complete()) return std::nullopt;
    std::vector<Mat> out;
    for (std::size_t i = 0; i < closure_.size(); ++i) {
        Mat z = closure_.element(i);
        bool central = true;
        for (const Mat& s : closure_.generators())
            if (z * s != s * z) {
                central = false;
                break;
            }
        if (central) out.push_back(z);
    }
    return out;
}

std::vector<Mat> FullGroup::center_from_torus() const {
    auto chars = group_.all_characters(budget_);
    if (!chars) throw UnsupportedError("torus too large to enumerate within budget");
    const RootSystem& R = group_.roots();
    const Ring& ring = group_.ring();
    std::vector<Mat> out;
    for (const auto& chi : *chars) {
        bool trivial = true;
        for (int i = 0; i < R.rank() && trivial; ++i) trivial = group_.chi_root_value(chi, R.simple(i)) == ring.one();
        if (!trivial) continue;
        Mat z = group_.torus(chi);
        for (const Mat& s : closure_.generators())
            if (z * s != s * z) throw std::logic_error("torus element trivial on simple roots is not central");
        out.push_back(z);
    }
    return out;
}

// ---------------------------------------------------- commutator constants

namespace {

IntMat int_root_element(const Representation& rep, std::size_t root, std::int64_t s) {
    const auto& seq = rep.divided[root];
    IntMat out = seq[0];
    std::int64_t sk = 1;
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (__builtin_mul_overflow(sk, s, &sk)) throw std::overflow_error("overflow in root element");
        out = out + seq[k] * sk;
    }
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int k = 0; k < e; ++k)
        if (__builtin_mul_overflow(r, b, &r)) throw std::overflow_error("overflow in power");
    return r;
}

// c with k == c * x, or nullopt.
std::optional<std::int64_t> proportional(const IntMat& k, const IntMat& x) {
    std::optional<std::int64_t> c;
    for (std::size_t i = 0; i < x.data().size(); ++i) {
        std::int64_t xv = x.data()[i], kv = k.data()[i];
        if (xv == 0) {
            if (kv != 0) return std::nullopt;
            continue;
        }
        if (kv % xv != 0) return std::nullopt;
        if (c && *c != kv / xv) return std::nullopt;
        c = kv / xv;
    }
    return c ? c : std::optional<std::int64_t>(0);
}

}  // namespace

std::vector<CommutatorTerm> commutator_roots(const RootSystem& rs, std::size_t a, std::size_t b) {
    std::vector<CommutatorTerm> out;
    for (int s = 2; s <= 5; ++s)
        for (int i = 1; i < s; ++i) {
            int j = s - i;
            IVec v = rs.coords(a);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = i * rs.coords(a)[k] + j * rs.coords(b)[k];
            if (auto r = rs.find(v)) out.push_back({*r, i, j, 0});
        }
    return out;
}

std::string CommutatorFormula::format(const RootSystem& rs) const {
    std::ostringstream os;
    os << "[x[" << rs.root_name(alpha) << "](t), x[" << rs.root_name(beta) << "](u)] = ";
    if (terms.empty()) return os.str() + "1";
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " * ";
        first = false;
        os << "x[" << rs.root_name(t.root) << "](" << Poly2::monomial(t.c, t.i, t.j).format() << ")";
    }
    return os.str();
}

CommutatorFormula commutator_constants(const Representation& rep, std::size_t a, std::size_t b) {
    const RootSystem& rs = rep.roots();
    if (rs.neg(a) == b) throw std::invalid_argument("commutator constants need a + b != 0");
    CommutatorFormula f{a, b, commutator_roots(rs, a, b)};
    PolyMat m = PolyMat::exp_series(rep.divided[a], 1, 1, 0) * PolyMat::exp_series(rep.divided[b], 1, 0, 1) *
                PolyMat::exp_series(rep.divided[a], -1, 1, 0) * PolyMat::exp_series(rep.divided[b], -1, 0, 1);
    for (auto& term : f.terms) {
        auto c = proportional(m.coefficient(term.i, term.j), rep.X[term.root]);
        if (!c)
            throw std::logic_error("commutator of " + rs.root_name(a) + ", " + rs.root_name(b) +
                                   " is not a product of root elements in the fixed order");
        term.c = *c;
        m = PolyMat::exp_series(rep.divided[term.root], -*c, term.i, term.j) * m;
    }
    if (!m.is_identity())
        throw std::logic_error("commutator residue of " + rs.root_name(a) + ", " + rs.root_name(b) + " is not trivial");
    std::erase_if(f.terms, [](const CommutatorTerm& t) { return t.c == 0; });
    return f;
}

bool check_commutator_formula(const Representation& rep, const CommutatorFormula& f,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
    for (auto [t, u] : points) {
        IntMat lhs = int_root_element(rep, f.alpha, t) * int_root_element(rep, f.beta, u) *
                     int_root_element(rep, f.alpha, -t) * int_root_element(rep, f.beta, -u);
        IntMat rhs = IntMat::identity(rep.dim);
        for (const auto& term : f.terms)
            rhs = rhs * int_root_element(rep, term.root, term.c * ipow(t, term.i) * ipow(u, term.j));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::int64_t reflection_sign(const Representation& rep, std::size_t a, std::size_t b) {
    const RootSystem& rs = rep.roots();
    auto w = [&](std::int64_t s) {
        IntMat xa = int_root_element(rep, a, s);
        return xa * int_root_element(rep, rs.neg(a), -s) * xa;  // s = +-1 so 1/s = s
    };
    IntMat conj = w(1) * rep.X[b] * w(-1);
    auto c = proportional(conj, rep.X[rs.reflect(a, b)]);
    if (!c || (*c != 1 && *c != -1)) throw std::logic_error("w_a does not permute root vectors up to sign");
    return *c;
}

// ------------------------------------------------------------- relations

std::vector<std::string> all_relation_ids() { return {"R1", "R2", "R3", "R4", "R5", "R6", "e4"}; }

namespace {

class CaseRunner {
  public:
    CaseRunner(RelationReport& rep, const SamplingPolicy& p) : report_(rep), policy_(p) {}

    void run(const std::vector<std::size_t>& dims, const std::function<std::optional<std::string>(const std::vector<std::size_t>&)>& check) {
        std::size_t total = 1;
        bool overflow = false;
        for (auto d : dims) {
            if (d == 0) total = 0;
            if (total && d > (static_cast<std::size_t>(-1) / total)) overflow = true;
            total *= d;
        }
        if (total == 0) {
            report_.exhaustive = true;
            return;
        }
        std::vector<std::size_t> idx(dims.size(), 0);
        if (policy_.exhaustive || (!overflow && total <= policy_.budget)) {
            report_.exhaustive = true;
            for (std::size_t n = 0; n < total; ++n) {
                record(check(idx), idx);
                for (std::size_t i = dims.size(); i-- > 0;) {
                    if (++idx[i] < dims[i]) break;
                    idx[i] = 0;
                }
            }
        } else {
            std::mt19937_64 rng(policy_.seed);
            for (std::size_t n = 0; n < policy_.samples; ++n) {
                for (std::size_t i = 0; i < dims.size(); ++i) idx[i] = rng() % dims[i];
                record(check(idx), idx);
            }
        }
    }

  private:
    void record(const std::optional<std::string>& fail, const std::vector<std::size_t>&) {
        ++report_.cases;
        if (!fail) return;
        ++report_.failure_count;
        if (report_.failures.size() < 20) report_.failures.push_back(*fail);
    }
    RelationReport& report_;
    const SamplingPolicy& policy_;
};

}  // namespace

RelationReport verify_relation(const ChevalleyGroup& g, const std::string& id, const SamplingPolicy& policy) {
    const RootSystem& R = g.roots();
    const Ring& ring = g.ring();
    RelationReport report;
    report.relation = id;
    report.system = R.name();
    report.ring = ring.spec();
    report.rep = g.rep().name;
    const auto elems = ring.elements();
    const auto units = ring.units();
    const std::size_t nr = R.size();

    std::vector<std::vector<Mat>> xs(nr);
    auto X = [&](std::size_t r, Elem t) -> const Mat& {
        if (xs[r].empty()) {
            for (Elem s : elems) xs[r].push_back(g.x(r, s));
        }
        return xs[r][t];
    };
    auto name = [&](std::size_t r) { return R.root_name(r); };
    auto fmt = [&](Elem e) { return ring.format(e); };

    CaseRunner run(report, policy);
    if (id == "R1") {
        run.run({nr, elems.size(), elems.size()}, [&](const auto& i) -> std::optional<std::string> {
            Elem t = elems[i[1]], u = elems[i[2]];
            if (X(i[0], t) * X(i[0], u) == X(i[0], ring.add(t, u))) return std::nullopt;
            return "x[" + name(i[0]) + "](" + fmt(t) + ") x(" + fmt(u) + ") != x(" + fmt(ring.add(t, u)) + ")";
        });
    } else if (id == "R2") {
        std::map<std::pair<std::size_t, std::size_t>, CommutatorFormula> formulas;
        for (std::size_t a = 0; a < nr; ++a)
            for (std::size_t b = 0; b < nr; ++b)
                if (R.neg(a) != b) formulas.emplace(std::pair{a, b}, commutator_constants(g.rep(), a, b));
        run.run({nr, nr, elems.size(), elems.size()}, [&](const auto& i) -> std::optional<std::string> {
            std::size_t a = i[0], b = i[1];
            if (R.neg(a) == b) return std::nullopt;
            Elem t = elems[i[2]], u = elems[i[3]];
            Mat lhs = X(a, t) * X(b, u) * X(a, ring.neg(t)) * X(b, ring.neg(u));
            Mat rhs = Mat::identity(ring, g.dim());
            for (const auto& term : formulas.at({a, b}).terms) {
                Elem s = ring.mul(ring.from_int(term.c), ring.mul(ring.pow(t, term.i), ring.pow(u, term.j)));
                rhs = rhs * X(term.root, s);
            }
            if (lhs == rhs) return std::nullopt;
            return "[x[" + name(a) + "](" + fmt(t) + "), x[" + name(b) + "](" + fmt(u) + ")] differs from the commutator formula";
        });
    } else if (id == "R3") {
        // w_a is w_a(1) by definition; checked: w_a(t)^{-1} = w_a(-t) and w_{-a}(t) = w_a(-1/t).
        run.run({nr, units.size()}, [&](const auto& i) -> std::optional<std::string> {
            std::size_t a = i[0];
            Elem t = units[i[1]];
            Mat wt = g.w(a, t);
            if (!(wt * g.w(a, ring.neg(t))).is_identity())
                return "w[" + name(a) + "](" + fmt(t) + ") w(-t) != 1";
            if (g.w(R.neg(a), t) != g.w(a, ring.neg(ring.inv(t))))
                return "w[-" + name(a) + "](" + fmt(t) + ") != w[" + name(a) + "](-1/t)";
            return std::nullopt;
        });
    } else if (id == "R4") {
        std::vector<Mat> wa, wa_inv;
        for (std::size_t a = 0; a < nr; ++a) {
            wa.push_back(g.w(a, ring.one()));
            wa_inv.push_back(g.w(a, ring.neg(ring.one())));
        }
        run.run({nr, nr, units.size()}, [&](const auto& i) -> std::optional<std::string> {
            std::size_t a = i[0], b = i[1];
            Elem t = units[i[2]];
            if (wa[a] * g.h(b, t) * wa_inv[a] == g.h(R.reflect(a, b), t)) return std::nullopt;
            return "w[" + name(a) + "] h[" + name(b) + "](" + fmt(t) + ") w^-1 != h[" + name(R.reflect(a, b)) + "]";
        });
    } else if (id == "R5") {
        std::vector<Mat> wa, wa_inv;
        for (std::size_t a = 0; a < nr; ++a) {
            wa.push_back(g.w(a, ring.one()));
            wa_inv.push_back(g.w(a, ring.neg(ring.one())));
        }
        std::vector<std::int64_t> sign(nr * nr);
        for (std::size_t a = 0; a < nr; ++a)
            for (std::size_t b = 0; b < nr; ++b) sign[a * nr + b] = reflection_sign(g.rep(), a, b);
        run.run({nr, nr, units.size()}, [&](const auto& i) -> std::optional<std::string> {
            std::size_t a = i[0], b = i[1];
            Elem t = units[i[2]];
            Elem ct = ring.mul(ring.from_int(sign[a * nr + b]), t);
            if (wa[a] * X(b, t) * wa_inv[a] == X(R.reflect(a, b), ct)) return std::nullopt;
            return "w[" + name(a) + "] x[" + name(b) + "](" + fmt(t) + ") w^-1 != x[" + name(R.reflect(a, b)) + "](" +
                   fmt(ct) + ")";
        });
    } else if (id == "R6") {
        run.run({nr, nr, units.size(), elems.size()}, [&](const auto& i) -> std::optional<std::string> {
            std::size_t a = i[0], b = i[1];
            Elem t = units[i[2]], u = elems[i[3]];
            Mat ha = g.h(a, t);
            Elem s = ring.mul(ring.pow(t, R.pairing(b, a)), u);
            if (ha * X(b, u) * diagonal_inverse(ha) == X(b, s)) return std::nullopt;
            return "h[" + name(a) + "](" + fmt(t) + ") x[" + name(b) + "](" + fmt(u) + ") h^-1 != x(" + fmt(s) + ")";
        });
    } else if (id == "e4") {
        auto chars = g.all_characters(policy.budget);
        std::vector<TorusCharacter> pool;
        if (chars) {
            pool = *chars;
        } else {
            std::mt19937_64 rng(policy.seed ^ 0x9e3779b97f4a7c15ull);
            for (std::size_t n = 0; n < policy.samples; ++n) {
                TorusCharacter chi;
                for (std::size_t j = 0; j < g.character_rank(); ++j) chi.values.push_back(units[rng() % units.size()]);
                pool.push_back(chi);
            }
        }
        run.run({pool.size(), nr, elems.size()}, [&](const auto& i) -> std::optional<std::string> {
            const TorusCharacter& chi = pool[i[0]];
            std::size_t b = i[1];
            Elem xi = elems[i[2]];
            Mat hc = g.torus(chi);
            Elem s = ring.mul(g.chi_root_value(chi, b), xi);
            if (hc * X(b, xi) * diagonal_inverse(hc) == X(b, s)) return std::nullopt;
            return "h(chi) x[" + name(b) + "](" + fmt(xi) + ") h(chi)^-1 != x(" + fmt(s) + ")";
        });
    } else {
        throw std::invalid_argument("unknown relation '" + id + "'");
    }
    return report;
}

}  // namespace chev
