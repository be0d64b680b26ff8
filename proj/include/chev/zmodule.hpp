#pragma once

// Submodules of (Z/m)^d kept in Howell form: an echelon basis whose leading
// entries divide m and which also contains the annihilator multiples, so that
// greedy left-to-right reduction decides membership, and the rows with
// leading column >= j generate every element vanishing on the first j columns.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace chev {

using ZnVector = std::vector<std::uint32_t>;

class ZnSubmodule {
  public:
    ZnSubmodule(std::uint64_t modulus, std::size_t dim);

    std::uint64_t modulus() const { return m_; }
    std::size_t dim() const { return dim_; }

    /// Adds v to the generating set; true when the submodule grew.
    bool insert(ZnVector v);
    bool contains(ZnVector v) const;
    /// Greedy reduction residue (zero iff contained).
    ZnVector reduce(ZnVector v) const;

    /// Howell basis rows in pivot order.
    std::vector<ZnVector> basis() const;
    /// Basis rows whose first `prefix` entries vanish, restricted to the
    /// remaining columns. They generate the elements vanishing on the prefix.
    std::vector<ZnVector> suffix_rows(std::size_t prefix) const;
    /// Order of each cyclic piece: the submodule has prod(orders) elements.
    std::vector<std::uint64_t> row_orders() const;
    /// Whether the submodule is all of (Z/m)^d.
    bool is_full() const;

  private:
    void reduce_step(ZnVector& v, std::size_t col, const ZnVector& row) const;
    void make_monic(ZnVector& v, std::size_t col) const;

    std::uint64_t m_;
    std::size_t dim_;
    std::vector<std::optional<ZnVector>> pivots_;
};

/// Generators of {x : sum_i x_i images[i] = 0 } inside (Z/m)^k, k = images.size().
std::vector<ZnVector> zn_kernel(const std::vector<ZnVector>& images, std::uint64_t m);

/// One solution x of sum_i x_i images[i] = target, if any.
std::optional<ZnVector> zn_solve(const std::vector<ZnVector>& images, const ZnVector& target, std::uint64_t m);

}  // namespace chev
