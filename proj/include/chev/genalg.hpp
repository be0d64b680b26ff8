#pragma once

// Generation results for representations over a finite ring: recovering
// pi(X_a) from x_a(1), closing matrices to the algebra they generate,
// matrix-unit certificates from weight-diagram paths, and checking that a
// conjugating matrix normalizes pi(L_R).

#include <optional>
#include <string>
#include <vector>

#include "chev/groupcore.hpp"
#include "chev/zmodule.hpp"

namespace chev {

/// Additive subgroup of M_n(R), encoded in the exponent coordinates of R.
class MatrixModule {
  public:
    MatrixModule(Ring ring, std::size_t n);

    const Ring& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    ZnVector encode(const Mat& m) const;
    Mat decode(const ZnVector& v) const;
    bool insert(const Mat& m) { return module_.insert(encode(m)); }
    bool contains(const Mat& m) const { return module_.contains(encode(m)); }
    /// Inserts r m for r over an additive generating set of R.
    bool insert_scaled(const Mat& m);
    const ZnSubmodule& module() const { return module_; }

  private:
    Ring ring_;
    std::size_t n_;
    std::size_t rank_;
    ZnSubmodule module_;
};

enum class RecoveryMode { Half, SquareZero };

/// pi(X_a) from x = x_a(1): x - 1 - (x - 1)^2 / 2 or x - 1.
Mat recover_lie_generator(const Mat& x, const Representation& rep, RecoveryMode mode);

struct AlgebraClosure {
    std::vector<Mat> spanning;     // matrices that enlarged the additive span
    bool identity_adjoined = false;
    bool complete = false;         // false when the work budget ran out
    bool full_matrix_ring = false; // all n^2 matrix units reached
    std::size_t units_reached = 0;
    std::optional<std::string> closure_defect;  // post-hoc product check
};

AlgebraClosure algebra_closure(const std::vector<Mat>& gens, bool adjoin_identity, std::size_t budget = 2000000);

// ---- weight-diagram certificates ----------------------------------------------

/// Certificate for the matrix unit E(gamma, gamma - a_{i0}).
///
/// Descending: the path labelled i0..ik runs down from gamma and occurs
/// nowhere else, and the tail i1..ik runs down only from gamma - a_{i0}.
/// Then X_{i0}..X_{ik} X_{-ik}..X_{-i1} = +-E(gamma, gamma - a_{i0}).
///
/// Ascending (for edges near the bottom): the path labelled i0..ik runs up
/// from gamma - a_{i0} and occurs nowhere else, and the tail runs up only
/// from gamma. Then X_{-i1}..X_{-ik} X_{ik}..X_{i0} gives the same unit.
struct PathCertificate {
    std::size_t from = 0;      // gamma, the upper vertex
    std::size_t neighbor = 0;  // gamma - a_{i0}
    std::size_t to = 0;        // end of the full path
    bool ascending = false;
    std::vector<int> labels;      // i0, ..., ik (0-based)
    std::size_t full_starts = 0;  // vertices carrying a path labelled i0..ik
    std::size_t tail_starts = 0;  // vertices carrying a path labelled i1..ik
};

/// Shortest certificate for the matrix unit between gamma and gamma - a_label;
/// within a length descending before ascending, then lexicographic.
/// max_len = 0 means 2 * diameter.
std::optional<PathCertificate> find_path_certificate(const WeightDiagram& d, std::size_t gamma, int label,
                                                     std::size_t max_len = 0);
/// Certificate data for a label sequence at gamma (no uniqueness checks).
std::optional<PathCertificate> certificate_for_labels(const WeightDiagram& d, std::size_t gamma,
                                                      const std::vector<int>& labels, bool ascending = false);
/// Independent recount by walking the edge list; first violated condition or nullopt.
std::optional<std::string> check_certificate(const WeightDiagram& d, const PathCertificate& c);
/// The certificate's product, normalized to a +1 entry; throws unless it is a single matrix unit.
IntMat matrix_unit_from_certificate(const Representation& rep, const PathCertificate& c);

// ---- normalization ------------------------------------------------------------

struct NormalizationVerdict {
    bool passed = true;
    std::vector<std::string> witnesses;
};

/// y over S (with R -> S given by `into`) normalizes pi(L_R), and conjugates
/// the elementary generators over R back into matrices with entries in R.
NormalizationVerdict normalization_check(const Mat& y, const ChevalleyGroup& g, const RingHom& into);

}  // namespace chev
