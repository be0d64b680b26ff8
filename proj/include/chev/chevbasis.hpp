#pragma once

// Chevalley basis {h_1..h_l} u {x_a : a in roots} of the simple Lie algebra
// over Z, with structure constants N_{a,b} fixed by making every extraspecial
// pair positive, and the adjoint representation / Killing form derived from it.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/rootsys.hpp"

namespace chev {

/// Sparse integer combination of basis elements: (basis index, coefficient).
using LieVec = std::vector<std::pair<std::size_t, std::int64_t>>;

class ChevalleyBasis {
  public:
    explicit ChevalleyBasis(std::shared_ptr<const RootSystem> roots);

    const RootSystem& roots() const { return *roots_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
    std::size_t dim() const { return static_cast<std::size_t>(rank_) + roots_->size(); }
    std::size_t h_index(int i) const { return static_cast<std::size_t>(i); }
    std::size_t x_index(std::size_t root) const { return static_cast<std::size_t>(rank_) + root; }
    bool is_root_vector(std::size_t u) const { return u >= static_cast<std::size_t>(rank_); }
    std::size_t root_of(std::size_t u) const { return u - static_cast<std::size_t>(rank_); }
    std::string basis_label(std::size_t u) const;

    /// N_{a,b}: [x_a, x_b] = N_{a,b} x_{a+b} (zero when a+b is not a root).
    std::int64_t N(std::size_t a, std::size_t b) const { return n_[a * roots_->size() + b]; }
    /// Largest p with b - p a a root.
    std::int64_t string_p(std::size_t a, std::size_t b) const;
    /// Extraspecial pair of a positive non-simple root.
    std::pair<std::size_t, std::size_t> extraspecial_pair(std::size_t root) const;

    /// [u, v] for basis indices.
    LieVec bracket(std::size_t u, std::size_t v) const;
    /// Coefficients of h_a = [x_a, x_{-a}] on h_1..h_l.
    IVec coroot_h(std::size_t root) const { return roots_->coroot_coeffs(root); }

    /// First violated Jacobi/antisymmetry triple, or nullopt.
    std::optional<std::string> check_jacobi() const;

    /// Matrix of ad(basis u) in the basis order.
    IntMat ad(std::size_t u) const;
    /// kappa(u, v) = trace(ad u ad v) on basis elements.
    IntMat killing_form() const;

    /// Signs e(a) making x_a -> e(a) x_{perm a} a Lie automorphism, with
    /// e = 1 on simple roots and their negatives.
    std::vector<std::int64_t> graph_signs(const std::vector<std::size_t>& root_perm) const;

  private:
    std::shared_ptr<const RootSystem> roots_;
    int rank_;
    std::vector<std::int64_t> n_;
};

}  // namespace chev
