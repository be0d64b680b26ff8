#pragma once

// Irreducible root systems of rank > 1 in fixed integer coordinate
// realizations. Roots are addressed by index: positive roots 0..m-1 sorted
// by height and then by simple-root coefficients (descending lexicographic,
// so a1 precedes a2), negatives m..2m-1 with index m+k holding -(root k).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chev {

using IVec = std::vector<std::int64_t>;

class RootSystemError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
/// "B2" -> (B, 2).
std::pair<Family, int> parse_system_name(const std::string& name);

class RootSystem {
  public:
    RootSystem(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const;

    std::size_t size() const { return roots_.size(); }
    std::size_t num_positive() const { return roots_.size() / 2; }
    bool is_positive(std::size_t i) const { return i < num_positive(); }
    std::size_t neg(std::size_t i) const { return is_positive(i) ? i + num_positive() : i - num_positive(); }
    /// Index of the simple root a_{k+1} (0-based k).
    std::size_t simple(int k) const { return static_cast<std::size_t>(k); }

    /// Coordinates in the ambient realization, multiplied by coord_scale().
    const IVec& coords(std::size_t i) const { return roots_[i]; }
    int coord_scale() const { return scale_; }
    /// Coefficients in the simple roots.
    const IVec& coeffs(std::size_t i) const { return coeffs_[i]; }
    std::int64_t height(std::size_t i) const;

    std::optional<std::size_t> find(const IVec& coords) const;
    std::optional<std::size_t> find_by_coeffs(const IVec& coeffs) const;

    /// Scaled inner product (scale^2 times the Euclidean one).
    std::int64_t inner(std::size_t i, std::size_t j) const;
    /// <a, b> = 2 (a, b) / (b, b), exact.
    std::int64_t pairing(std::size_t a, std::size_t b) const;
    std::int64_t cartan(int i, int j) const { return pairing(simple(i), simple(j)); }
    bool is_long(std::size_t i) const;
    /// Whether all roots have one length.
    bool simply_laced() const;

    std::optional<std::size_t> sum(std::size_t a, std::size_t b) const;
    /// w_a(b) = b - <b, a> a.
    std::size_t reflect(std::size_t a, std::size_t b) const;

    /// Coefficients of the coroot a^v in the simple coroots.
    IVec coroot_coeffs(std::size_t i) const;
    /// <lambda, a^v> for a weight given by Dynkin labels.
    std::int64_t weight_pairing(const IVec& dynkin_labels, std::size_t root) const;
    /// Dynkin labels of a root: (<a, a_i^v>)_i.
    IVec root_labels(std::size_t i) const;

    /// Pair (b, c) with b + c = a spanning an A2 subsystem (all three roots of
    /// one length), if any; deterministic first in index order.
    std::optional<std::pair<std::size_t, std::size_t>> embed_A2_triple(std::size_t a) const;

    /// Weyl orbits of roots (under reflections in all roots).
    std::vector<std::vector<std::size_t>> weyl_orbits() const;
    /// Order of the Weyl group (via orbit-stabilizer on a chamber vector).
    std::uint64_t weyl_group_order() const;

    /// Permutations of the simple roots preserving the Cartan matrix, identity first.
    std::vector<std::vector<int>> diagram_automorphisms() const;
    /// Root permutation induced by a diagram automorphism.
    std::vector<std::size_t> extend_diagram_automorphism(const std::vector<int>& perm) const;

    std::string root_name(std::size_t i) const;
    std::size_t parse_root(const std::string& name) const;
    std::string format_coords(std::size_t i) const;

  private:
    Family family_;
    int rank_;
    int scale_ = 1;
    std::vector<IVec> roots_;
    std::vector<IVec> coeffs_;
    std::map<IVec, std::size_t> index_;
    std::map<IVec, std::size_t> coeff_index_;
};

}  // namespace chev
