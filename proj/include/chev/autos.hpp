#pragma once

// Standard automorphisms of E_pi(Phi, R) (central, ring, inner, graph with
// idempotent mixing) acting on root elements, and the decomposition engine
// that splits a presented automorphism into such factors.
//
// Composition order used throughout:
//     phi(x) = tau(x) * rho( y * Lambda(x) * y^-1 )
// i.e. graph first, then conjugation by y, then the ring map entrywise, then
// the central factor. Since i_y o Lambda = Lambda o i_{Lambda^-1(y)}, this is
// the same class of maps as ring o graph o inner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chev/genalg.hpp"
#include "chev/ideals.hpp"
#include "json.hpp"

namespace chev {

class AutomorphismError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// x_a(t) with t expanded in the additive basis from the per-basis images.
Mat image_by_additivity(const Ring& r, const std::vector<Mat>& basis_images, Elem t);

// ---- graph automorphisms --------------------------------------------------------

/// Lambda = eps_1 delta_1 + ... + eps_k delta_k over all diagram symmetries
/// delta_i of Phi (identity first), eps an idempotent system of length k.
class GraphAction {
  public:
    explicit GraphAction(const ChevalleyGroup& g);

    std::size_t symmetry_count() const { return perms_.size(); }
    const std::vector<int>& simple_perm(std::size_t i) const { return simple_perms_[i]; }
    const std::vector<std::size_t>& root_perm(std::size_t i) const { return perms_[i]; }
    const std::vector<std::int64_t>& signs(std::size_t i) const { return signs_[i]; }

    /// eps concentrated on symmetry i (plain delta_i).
    IdempotentSystem pure(std::size_t i) const;
    /// Every idempotent system of length k; plain symmetries first (identity first).
    std::vector<IdempotentSystem> variants() const;
    /// Throws AutomorphismError unless eps is a valid system of the right length.
    void validate(const IdempotentSystem& eps) const;

    /// Lambda(x_a(t)) = prod_i x_{delta_i a}(eps_i e_i(a) t).
    Mat apply(const IdempotentSystem& eps, std::size_t root, Elem t) const;
    std::string describe(const IdempotentSystem& eps) const;

  private:
    const ChevalleyGroup* g_;
    std::vector<std::vector<int>> simple_perms_;
    std::vector<std::vector<std::size_t>> perms_;
    std::vector<std::vector<std::int64_t>> signs_;
};

// ---- standard automorphisms ------------------------------------------------------

/// Conjugation by y over an extension S of R (into: R -> S).
struct InnerFactor {
    Mat y;
    RingHom into;
};

/// Values of tau on the presented generators (central matrices over R);
/// empty means trivial.
using CentralValues = std::vector<std::vector<Mat>>;  // [root][basis index]

struct StandardAutomorphism {
    IdempotentSystem graph;           // empty = identity
    std::optional<InnerFactor> inner;  // absent = identity
    std::optional<RingHom> ring;       // absent = identity
    CentralValues central;             // empty = trivial
};

/// Entrywise ring map; throws unless rho is a bijective ring endomorphism of g's ring.
Mat apply_ring_auto(const RingHom& rho, const Mat& m);
/// Lambda on a root element.
Mat apply_graph_auto(const GraphAction& graph, const IdempotentSystem& eps, std::size_t root, Elem t);
/// y m y^-1 pulled back into R; throws AutomorphismError (with the entry) if it leaves R.
Mat apply_inner(const InnerFactor& f, const Mat& m);
/// tau(x) x.
Mat apply_central(const Mat& tau_value, const Mat& m);

/// Image of x_a(t) under the composite, in the order documented above.
Mat apply_standard(const ChevalleyGroup& g, const GraphAction& graph, const StandardAutomorphism& phi,
                   std::size_t root, Elem t);

/// Witnessed validity: ring map bijective, graph system valid, inner factor
/// normalizes (genalg check), central values commute with every generator.
std::optional<std::string> check_standard(const ChevalleyGroup& g, const GraphAction& graph,
                                          const StandardAutomorphism& phi);

/// Z(G) as the torus elements trivial on roots (scalars for irreducible pi).
std::vector<Mat> center_elements(const ChevalleyGroup& g, std::size_t budget = 1000000);

/// Values respect additivity and send every commutator-formula right-hand
/// side to 1 (so they define a homomorphism from the Steinberg group).
bool central_values_consistent(const ChevalleyGroup& g, const CentralValues& v);
/// All homomorphisms E -> Z(G) given on the presented generators, found by
/// enumerating generator values compatible with additivity and the
/// commutator relations; nullopt if the candidate count exceeds the budget.
std::optional<std::vector<CentralValues>> central_homomorphisms(const ChevalleyGroup& g, std::size_t budget = 200000);

// ---- presentations -----------------------------------------------------------------

/// images[root][b] = phi(x_root(additive_basis()[b])).
struct AutomorphismPresentation {
    std::vector<std::vector<Mat>> images;
};

AutomorphismPresentation present(const ChevalleyGroup& g, const GraphAction& graph, const StandardAutomorphism& phi);
AutomorphismPresentation identity_presentation(const ChevalleyGroup& g);
/// Sanity screen: sizes, invertibility, x(b)^order = 1. First problem or nullopt.
std::optional<std::string> screen_presentation(const ChevalleyGroup& g, const AutomorphismPresentation& p);

/// JSON list of {root, param, image}; entries are formatted ring elements.
nlohmann::ordered_json presentation_to_json(const ChevalleyGroup& g, const AutomorphismPresentation& p);
/// Throws AutomorphismError on unknown roots, params outside the basis,
/// unparsable entries or missing generators.
AutomorphismPresentation presentation_from_json(const ChevalleyGroup& g, const nlohmann::ordered_json& j);

// ---- conjugator ---------------------------------------------------------------------

struct ConjugatorOptions {
    std::size_t random_tries = 2000;
    std::uint64_t seed = 1;
};

enum class ConjugatorStatus { Found, NoSolution, BudgetExhausted };

struct ConjugatorResult {
    ConjugatorStatus status = ConjugatorStatus::NoSolution;
    std::optional<Mat> y;  // invertible over R
    std::size_t kernel_generators = 0;
};

/// Invertible y over R with y a_i = b_i y for all pairs, by solving the
/// linear system in the additive coordinates of M_N(R) and then searching
/// the solution module for an invertible element.
ConjugatorResult conjugator_solve(const std::vector<std::pair<Mat, Mat>>& pairs, const ConjugatorOptions& opt = {});

/// Rescales an invertible y to determinant 1, adjoining an N-th root of
/// det(y)^-1 when R has none.
InnerFactor normalize_determinant(const Mat& y);

// ---- decomposition ---------------------------------------------------------------------

struct DecomposeOptions {
    bool override_gate = false;  // run outside the theorem's hypotheses
    std::uint64_t seed = 1;
    std::size_t random_tries = 2000;
    std::size_t center_budget = 1000000;
};

enum class DecompositionStatus { Standard, OutOfScope, Undecided, NonStandard };
std::string decomposition_status_name(DecompositionStatus s);

/// Missing invertibility hypotheses for (Phi, R), e.g. "1/2"; empty when satisfied.
std::vector<std::string> hypothesis_violations(const RootSystem& rs, const Ring& r);

struct DecompositionCandidate {
    IdempotentSystem graph;
    std::size_t ring_index = 0;  // into ring_automorphisms(R)
};

struct DecompositionResult {
    DecompositionStatus status = DecompositionStatus::Undecided;
    std::vector<std::string> violations;
    std::vector<DecompositionCandidate> candidates;  // every (graph, ring) pair admitting a conjugator
    std::optional<StandardAutomorphism> factors;
    std::optional<std::string> extension;  // spec of the ring y lives over, when not R
    bool verified = false;                 // composite equals phi on every presented generator
    std::vector<std::string> transcript;
};

DecompositionResult decompose(const ChevalleyGroup& g, const AutomorphismPresentation& phi,
                              const DecomposeOptions& opt = {});

nlohmann::ordered_json decomposition_to_json(const ChevalleyGroup& g, const GraphAction& graph,
                                             const DecompositionResult& r);

/// Seeded random standard automorphism: random graph variant, ring
/// automorphism, central homomorphism, and y = (adjoint-type torus element) *
/// (word in elementary generators).
StandardAutomorphism random_standard_automorphism(const ChevalleyGroup& g, const GraphAction& graph,
                                                  std::uint64_t seed, std::size_t word_length = 8);

/// Diagonal d with d x_a(t) d^-1 = x_a(c(a) t), c the character of the root
/// lattice taking the given values on the simple roots.
Mat root_lattice_torus(const ChevalleyGroup& g, const std::vector<Elem>& simple_values);

}  // namespace chev
