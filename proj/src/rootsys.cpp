#include "chev/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace chev {

namespace {

IVec unit(int dim, int i, std::int64_t v = 1) {
    IVec e(dim, 0);
    e[i] = v;
    return e;
}

IVec sub(IVec a, const IVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

IVec add(IVec a, const IVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

IVec scale(IVec a, std::int64_t s) {
    for (auto& x : a) x *= s;
    return a;
}

std::int64_t dot(const IVec& a, const IVec& b) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Simple roots in scaled coordinates; returns scale.
int simple_roots(Family f, int l, std::vector<IVec>& out) {
    out.clear();
    switch (f) {
        case Family::A:
            for (int i = 0; i < l; ++i) out.push_back(sub(unit(l + 1, i), unit(l + 1, i + 1)));
            return 1;
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 0; i + 1 < l; ++i) out.push_back(sub(unit(l, i), unit(l, i + 1)));
            if (f == Family::B) out.push_back(unit(l, l - 1));
            if (f == Family::C) out.push_back(unit(l, l - 1, 2));
            if (f == Family::D) out.push_back(add(unit(l, l - 2), unit(l, l - 1)));
            return 1;
        case Family::G:
            out.push_back({1, -1, 0});
            out.push_back({-2, 1, 1});
            return 1;
        case Family::F:
            // Doubled: e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2.
            out.push_back({0, 2, -2, 0});
            out.push_back({0, 0, 2, -2});
            out.push_back({0, 0, 0, 2});
            out.push_back({1, -1, -1, -1});
            return 2;
        case Family::E: {
            // Doubled E8 simple roots; E6, E7 use the first l of them.
            std::vector<IVec> e8 = {
                {1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0},  {-2, 2, 0, 0, 0, 0, 0, 0},
                {0, -2, 2, 0, 0, 0, 0, 0},      {0, 0, -2, 2, 0, 0, 0, 0}, {0, 0, 0, -2, 2, 0, 0, 0},
                {0, 0, 0, 0, -2, 2, 0, 0},      {0, 0, 0, 0, 0, -2, 2, 0}};
            out.assign(e8.begin(), e8.begin() + l);
            return 2;
        }
    }
    return 1;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::pair<Family, int> parse_system_name(const std::string& name) {
    if (name.size() < 2) throw RootSystemError("system name must look like A2, B3, G2: '" + name + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    const std::string letters = "ABCDEFG";
    auto pos = letters.find(c);
    if (pos == std::string::npos) throw RootSystemError("unknown family '" + std::string(1, name[0]) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw RootSystemError("bad rank in system name '" + name + "'");
        rank = rank * 10 + (name[i] - '0');
        if (rank > 64) throw RootSystemError("rank too large in '" + name + "'");
    }
    return {static_cast<Family>(pos), rank};
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
    bool valid = rank > 1;
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::C:
            break;
        case Family::D:
            valid = valid && rank >= 4;
            break;
        case Family::E:
            valid = valid && rank >= 6 && rank <= 8;
            break;
        case Family::F:
            valid = valid && rank == 4;
            break;
        case Family::G:
            valid = valid && rank == 2;
            break;
    }
    if (!valid)
        throw RootSystemError(std::string(1, family_letter(family)) + std::to_string(rank) +
                              " is not an indecomposable root system of rank > 1");

    std::vector<IVec> simple;
    scale_ = simple_roots(family, rank, simple);

    // Close the simple roots under simple reflections, tracking coefficients.
    std::map<IVec, IVec> found;  // coords -> coeffs
    std::deque<IVec> queue;
    for (int i = 0; i < rank; ++i) {
        found[simple[i]] = unit(rank, i);
        queue.push_back(simple[i]);
    }
    while (!queue.empty()) {
        IVec r = queue.front();
        queue.pop_front();
        IVec c = found[r];
        for (int i = 0; i < rank; ++i) {
            std::int64_t num = 2 * dot(r, simple[i]), den = dot(simple[i], simple[i]);
            if (num % den != 0) throw RootSystemError("non-integral pairing during closure");
            std::int64_t p = num / den;
            IVec w = sub(r, scale(simple[i], p));
            if (found.count(w)) continue;
            found[w] = sub(c, scale(unit(rank, i), p));
            queue.push_back(w);
        }
    }
    std::vector<std::pair<IVec, IVec>> positive;  // (coeffs, coords)
    for (const auto& [coords, c] : found) {
        bool pos = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
        bool neg = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x <= 0; });
        if (!pos && !neg) throw RootSystemError("root with mixed-sign coefficients");
        if (pos) positive.emplace_back(c, coords);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
        auto hx = std::accumulate(x.first.begin(), x.first.end(), std::int64_t{0});
        auto hy = std::accumulate(y.first.begin(), y.first.end(), std::int64_t{0});
        if (hx != hy) return hx < hy;
        return x.first > y.first;
    });
    for (const auto& [c, coords] : positive) {
        coeffs_.push_back(c);
        roots_.push_back(coords);
    }
    for (const auto& [c, coords] : positive) {
        coeffs_.push_back(scale(c, -1));
        roots_.push_back(scale(coords, -1));
    }
    if (roots_.size() != found.size()) throw RootSystemError("root closure is not symmetric");
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        index_[roots_[i]] = i;
        coeff_index_[coeffs_[i]] = i;
    }
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::int64_t RootSystem::height(std::size_t i) const {
    return std::accumulate(coeffs_[i].begin(), coeffs_[i].end(), std::int64_t{0});
}

std::optional<std::size_t> RootSystem::find(const IVec& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> RootSystem::find_by_coeffs(const IVec& c) const {
    auto it = coeff_index_.find(c);
    if (it == coeff_index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t RootSystem::inner(std::size_t i, std::size_t j) const { return dot(roots_.at(i), roots_.at(j)); }

std::int64_t RootSystem::pairing(std::size_t a, std::size_t b) const {
    std::int64_t num = 2 * inner(a, b), den = inner(b, b);
    if (num % den != 0) throw RootSystemError("non-integral pairing");
    return num / den;
}

bool RootSystem::is_long(std::size_t i) const {
    std::int64_t mx = 0;
    for (std::size_t k = 0; k < num_positive(); ++k) mx = std::max(mx, inner(k, k));
    return inner(i, i) == mx;
}

bool RootSystem::simply_laced() const {
    for (std::size_t k = 0; k < num_positive(); ++k)
        if (inner(k, k) != inner(0, 0)) return false;
    return true;
}

std::optional<std::size_t> RootSystem::sum(std::size_t a, std::size_t b) const { return find(add(roots_[a], roots_[b])); }

std::size_t RootSystem::reflect(std::size_t a, std::size_t b) const {
    auto r = find(sub(roots_[b], scale(roots_[a], pairing(b, a))));
    if (!r) throw RootSystemError("reflection left the root system");
    return *r;
}

IVec RootSystem::coroot_coeffs(std::size_t i) const {
    IVec out(rank_);
    std::int64_t len = inner(i, i);
    for (int k = 0; k < rank_; ++k) {
        std::int64_t num = coeffs_[i][k] * inner(simple(k), simple(k));
        if (num % len != 0) throw RootSystemError("non-integral coroot coefficient");
        out[k] = num / len;
    }
    return out;
}

std::int64_t RootSystem::weight_pairing(const IVec& labels, std::size_t root) const {
    IVec c = coroot_coeffs(root);
    std::int64_t s = 0;
    for (int k = 0; k < rank_; ++k) s += c[k] * labels[k];
    return s;
}

IVec RootSystem::root_labels(std::size_t i) const {
    IVec out(rank_);
    for (int k = 0; k < rank_; ++k) out[k] = pairing(i, simple(k));
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> RootSystem::embed_A2_triple(std::size_t a) const {
    const std::int64_t len = inner(a, a);
    for (std::size_t b = 0; b < size(); ++b) {
        if (inner(b, b) != len) continue;
        auto c = find(sub(roots_[a], roots_[b]));
        if (!c || inner(*c, *c) != len) continue;
        std::vector<std::size_t> set = {a, b, *c, neg(a), neg(b), neg(*c)};
        bool closed = true;
        for (auto x : set)
            for (auto y : set) {
                auto s = sum(x, y);
                if (s && std::find(set.begin(), set.end(), *s) == set.end()) closed = false;
            }
        if (closed) return std::make_pair(b, *c);
    }
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> RootSystem::weyl_orbits() const {
    std::vector<int> orbit(size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < size(); ++s) {
        if (orbit[s] >= 0) continue;
        std::vector<std::size_t> members{s};
        orbit[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            for (std::size_t a = 0; a < size(); ++a) {
                std::size_t r = reflect(a, members[k]);
                if (orbit[r] < 0) {
                    orbit[r] = static_cast<int>(out.size());
                    members.push_back(r);
                }
            }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::uint64_t RootSystem::weyl_group_order() const {
    // |W_S| = |W_S . w_k| * |W_{S - k}| with w_k the k-th fundamental weight.
    auto rec = [&](auto&& self, std::vector<int> subset) -> std::uint64_t {
        if (subset.empty()) return 1;
        int k = subset.front();
        IVec start(rank_, 0);
        start[k] = 1;
        std::set<IVec> seen{start};
        std::deque<IVec> queue{start};
        while (!queue.empty()) {
            IVec lam = queue.front();
            queue.pop_front();
            for (int i : subset) {
                if (lam[i] == 0) continue;
                IVec mu = lam;
                for (int j = 0; j < rank_; ++j) mu[j] -= lam[i] * cartan(i, j);
                if (seen.insert(mu).second) queue.push_back(mu);
            }
        }
        subset.erase(subset.begin());
        return seen.size() * self(self, subset);
    };
    std::vector<int> all(rank_);
    std::iota(all.begin(), all.end(), 0);
    return rec(rec, all);
}

std::vector<std::vector<int>> RootSystem::diagram_automorphisms() const {
    std::vector<int> perm(rank_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < rank_ && ok; ++i)
            for (int j = 0; j < rank_ && ok; ++j) ok = cartan(i, j) == cartan(perm[i], perm[j]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::size_t> RootSystem::extend_diagram_automorphism(const std::vector<int>& perm) const {
    std::vector<std::size_t> out(size());
    for (std::size_t r = 0; r < size(); ++r) {
        IVec c(rank_, 0);
        for (int i = 0; i < rank_; ++i) c[perm[i]] = coeffs_[r][i];
        auto idx = find_by_coeffs(c);
        if (!idx) throw RootSystemError("permutation is not a diagram automorphism");
        out[r] = *idx;
    }
    return out;
}

std::string RootSystem::root_name(std::size_t i) const {
    std::string s;
    for (int k = 0; k < rank_; ++k) {
        std::int64_t c = coeffs_[i][k];
        if (c == 0) continue;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a) + "*";
        s += "a" + std::to_string(k + 1);
    }
    return s;
}

std::size_t RootSystem::parse_root(const std::string& text) const {
    IVec c(rank_, 0);
    std::size_t i = 0;
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto fail = [&]() -> std::size_t { throw RootSystemError("cannot parse root '" + text + "' in " + name()); };
    if (t.empty()) fail();
    while (i < t.size()) {
        std::int64_t sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail();
        }
        std::int64_t mult = 1;
        if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            mult = 0;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) mult = mult * 10 + (t[i++] - '0');
            if (i < t.size() && t[i] == '*') ++i;
        }
        if (i >= t.size() || t[i] != 'a') fail();
        ++i;
        int k = 0;
        if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) fail();
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) k = k * 10 + (t[i++] - '0');
        if (k < 1 || k > rank_) fail();
        c[k - 1] += sign * mult;
    }
    auto idx = find_by_coeffs(c);
    if (!idx) throw RootSystemError("'" + text + "' is not a root of " + name());
    return *idx;
}

std::string RootSystem::format_coords(std::size_t i) const {
    std::string s = "(";
    for (std::size_t k = 0; k < roots_[i].size(); ++k) {
        if (k) s += ",";
        std::int64_t v = roots_[i][k];
        if (scale_ == 1 || v % scale_ == 0)
            s += std::to_string(v / scale_);
        else
            s += std::to_string(v) + "/" + std::to_string(scale_);
    }
    return s + ")";
}

}  // namespace chev
