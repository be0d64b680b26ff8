#pragma once

// Elementary Chevalley groups E_pi(Phi, R) as matrix groups over a finite
// ring: root elements x_a(t), w_a(t), h_a(t), torus elements h(chi), the
// Steinberg relations, commutator constants, and closure-based membership.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/reps.hpp"

namespace chev {

/// chi in Hom(Lambda_pi, R*), stored by its values on the lattice basis.
struct TorusCharacter {
    std::vector<Elem> values;
    bool operator==(const TorusCharacter& o) const { return values == o.values; }
};

class ChevalleyGroup {
  public:
    ChevalleyGroup(std::shared_ptr<const Representation> rep, Ring ring);

    const Representation& rep() const { return *rep_; }
    std::shared_ptr<const Representation> rep_ptr() const { return rep_; }
    const RootSystem& roots() const { return rep_->roots(); }
    const Ring& ring() const { return ring_; }
    std::size_t dim() const { return rep_->dim; }
    std::string describe() const;

    /// pi(x_a) reduced into R.
    const Mat& pi(std::size_t root) const { return pi_[root]; }
    /// pi(u) for a Lie algebra basis index, reduced into R.
    Mat lie(std::size_t basis_index) const;

    Mat x(std::size_t root, Elem t) const;
    /// w_a(t) = x_a(t) x_{-a}(-1/t) x_a(t); t must be a unit.
    Mat w(std::size_t root, Elem t) const;
    /// h_a(t) = w_a(t) w_a(1)^{-1}.
    Mat h(std::size_t root, Elem t) const;

    std::size_t character_rank() const { return rep_->lattice.basis().size(); }
    Mat torus(const TorusCharacter& chi) const;
    /// chi_{a,u}: lambda -> u^{<lambda, a>}.
    TorusCharacter chi_root(std::size_t root, Elem u) const;
    Elem chi_weight(const TorusCharacter& chi, const IVec& labels) const;
    Elem chi_root_value(const TorusCharacter& chi, std::size_t root) const;
    /// Every character, or nullopt when |R*|^rank exceeds the budget.
    std::optional<std::vector<TorusCharacter>> all_characters(std::size_t budget) const;
    /// chi with h(chi) = d, searching all characters within the budget.
    std::optional<TorusCharacter> character_of(const Mat& d, std::size_t budget) const;

    /// x_a(t) for all roots and t over an additive generating set of R.
    std::vector<Mat> elementary_generators() const;
    /// Generators of U (positive roots), V (negative), H (h_a(t)), N (w_a(t)).
    std::vector<Mat> subgroup_generators(char which) const;

  private:
    std::shared_ptr<const Representation> rep_;
    Ring ring_;
    std::vector<std::vector<Mat>> divided_;
    std::vector<Mat> pi_;
    std::vector<IVec> weight_coords_;  // lattice coordinates of each basis weight
};

Mat diagonal_inverse(const Mat& d);

/// Closure of a finite set of invertible matrices under multiplication.
class GroupClosure {
  public:
    GroupClosure(const std::vector<Mat>& generators, std::size_t budget);

    bool complete() const { return complete_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Mat& m) const { return index_.count(m.data()) > 0; }
    Mat element(std::size_t i) const { return Mat(ring_, n_, elements_[i]); }
    const std::vector<Mat>& generators() const { return gens_; }

  private:
    struct KeyHash {
        std::size_t operator()(const std::vector<Elem>& v) const;
    };
    Ring ring_;
    std::size_t n_ = 0;
    std::vector<Mat> gens_;
    std::vector<std::vector<Elem>> elements_;
    std::unordered_map<std::vector<Elem>, std::size_t, KeyHash> index_;
    bool complete_ = false;
};

enum class Membership { Member, NonMember, Undecided };
std::string membership_name(Membership m);

/// G = T E over a finite (hence semilocal) ring.
class FullGroup {
  public:
    FullGroup(const ChevalleyGroup& group, std::size_t budget);

    const ChevalleyGroup& group() const { return group_; }
    const GroupClosure& elementary() const { return closure_; }
    Membership in_elementary(const Mat& g) const;
    Membership contains(const Mat& g) const;
    /// Z(E) by filtering E against its generators (needs a complete closure).
    std::optional<std::vector<Mat>> center_bruteforce() const;
    /// Torus elements h(chi) with chi = 1 on the simple roots, i.e. Z(G).
    std::vector<Mat> center_from_torus() const;

  private:
    ChevalleyGroup group_;
    GroupClosure closure_;
    std::size_t budget_;
};

// ---- commutator constants --------------------------------------------------

struct CommutatorTerm {
    std::size_t root;  // i a + j b
    int i = 0, j = 0;
    std::int64_t c = 0;
};

/// [x_a(t), x_b(u)] = prod x_{ia+jb}(c_ij t^i u^j), product ordered by i+j then i.
struct CommutatorFormula {
    std::size_t alpha = 0, beta = 0;
    std::vector<CommutatorTerm> terms;
    std::string format(const RootSystem& rs) const;
};

/// Roots i a + j b (i, j >= 1) in the product order.
std::vector<CommutatorTerm> commutator_roots(const RootSystem& rs, std::size_t a, std::size_t b);
/// Symbolic expansion over Z[t, u]; a + b != 0.
CommutatorFormula commutator_constants(const Representation& rep, std::size_t a, std::size_t b);
/// Re-check a formula at integer specializations of (t, u).
bool check_commutator_formula(const Representation& rep, const CommutatorFormula& f,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>& points);

// ---- relations ---------------------------------------------------------------

struct SamplingPolicy {
    bool exhaustive = false;    // force full enumeration
    std::size_t budget = 200000;  // largest case count enumerated without being forced
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

struct RelationReport {
    std::string relation;
    std::string system;
    std::string ring;
    std::string rep;
    bool exhaustive = false;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // first few witnesses
    bool passed() const { return failure_count == 0; }
};

/// Relation ids: R1..R6, e4.
std::vector<std::string> all_relation_ids();
RelationReport verify_relation(const ChevalleyGroup& g, const std::string& id, const SamplingPolicy& policy);

/// Sign c(a, b) with w_a x_b(t) w_a^{-1} = x_{w_a b}(c t), computed over Z.
std::int64_t reflection_sign(const Representation& rep, std::size_t a, std::size_t b);

}  // namespace chev
