#pragma once

// Weight lattices and integral representations of Chevalley bases: adjoint,
// the classical A/C/D matrix realizations, and microweight representations
// built from weight diagrams.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chev/chevbasis.hpp"
#include "chev/matrix.hpp"

namespace chev {

class RepresentationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sublattice of the weight lattice in Dynkin-label coordinates
/// (Z^l = lattice of weights, Cartan rows span the root lattice).
class WeightLattice {
  public:
    enum class Tag { Adjoint, SimplyConnected, Intermediate };

    WeightLattice() = default;
    WeightLattice(const RootSystem& rs, const std::vector<IVec>& generators);
    static WeightLattice root_lattice(const RootSystem& rs);
    static WeightLattice full_lattice(const RootSystem& rs);

    const std::vector<IVec>& basis() const { return basis_; }
    Tag tag() const { return tag_; }
    std::string tag_name() const;
    bool contains(const IVec& w) const;
    /// Integer coordinates of w in basis(), if w is in the lattice.
    std::optional<IVec> coordinates(const IVec& w) const;
    bool contains_lattice(const WeightLattice& other) const;
    /// Index in the full weight lattice.
    std::int64_t index_in_full() const;

  private:
    std::vector<IVec> basis_;  // Hermite normal form rows
    Tag tag_ = Tag::Intermediate;
};

/// Integer rows in Hermite normal form (positive pivots, zero rows dropped).
std::vector<IVec> hermite_normal_form(std::vector<IVec> rows);

struct WeightDiagram {
    struct Edge {
        std::size_t upper;  // vertex index with the larger weight
        std::size_t lower;  // upper - a_label
        int label;          // 0-based simple root index
        int sign;           // coefficient of the matrix unit in pi(X_{a_label})
    };

    std::shared_ptr<const RootSystem> roots;
    int fundamental = 0;               // 0-based index of the highest weight
    std::vector<IVec> vertices;        // Dynkin labels, breadth-first from the highest weight
    std::vector<Edge> edges;

    std::optional<std::size_t> vertex(const IVec& labels) const;
    /// Vertex reached from v by subtracting simple root `label`, if any.
    std::optional<std::size_t> descend(std::size_t v, int label) const;
    std::optional<std::size_t> ascend(std::size_t v, int label) const;
    std::size_t edge_count(int label) const;
    /// Longest shortest path (undirected).
    std::size_t diameter() const;
    std::string to_json() const;

    // adjacency: down_[v * rank + i] = vertex v - a_i or npos
    std::vector<std::size_t> down_, up_;
};

inline constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);

/// Whether the fundamental weight w_k (0-based) is minuscule.
bool is_microweight(const RootSystem& rs, int k);
WeightDiagram build_weight_diagram(std::shared_ptr<const RootSystem> rs, int k);

class Representation {
  public:
    std::shared_ptr<const ChevalleyBasis> basis;
    std::string name;
    std::size_t dim = 0;
    std::vector<IntMat> X;                     // pi(x_a) per root index
    std::vector<IntMat> H;                     // pi(h_i) per simple index
    std::vector<std::vector<IntMat>> divided;  // divided[r][k] = pi(x_r)^k / k!, k = 0..deg
    std::vector<IVec> weights;                 // Dynkin labels of each basis vector
    WeightLattice lattice;
    std::optional<WeightDiagram> diagram;

    const RootSystem& roots() const { return basis->roots(); }
    /// Largest k with a nonzero divided power.
    std::size_t degree(std::size_t root) const { return divided[root].size() - 1; }
    bool square_zero() const;
    /// pi of a basis element of the Lie algebra.
    IntMat image(std::size_t basis_index) const;
    /// First bracket discrepancy against the structure constants, or nullopt.
    std::optional<std::string> check_brackets() const;
    /// First basis vector sent outside the expected weight line, or nullopt.
    std::optional<std::string> check_weight_grading() const;
};

/// Representation determined by pi(x_{a_i}) for simple roots (negative simple
/// roots act by the transposes). All other root matrices come from brackets.
Representation representation_from_simple(std::shared_ptr<const ChevalleyBasis> cb, std::string name,
                                          const std::vector<IntMat>& simple);

Representation adjoint_representation(std::shared_ptr<const ChevalleyBasis> cb);
Representation standard_rep_A(std::shared_ptr<const ChevalleyBasis> cb);
Representation universal_rep_C(std::shared_ptr<const ChevalleyBasis> cb);
Representation standard_rep_D(std::shared_ptr<const ChevalleyBasis> cb);
Representation rep_from_diagram(std::shared_ptr<const ChevalleyBasis> cb, const WeightDiagram& d);

/// Catalogue lookup: "adjoint", "standard", "universal", "sc", or "w<k>".
Representation make_representation(std::shared_ptr<const ChevalleyBasis> cb, const std::string& tag);

}  // namespace chev
