#pragma once

#include "nb/cell_complex.hpp"

#include <optional>

namespace nb {

// Nerve of a region family, enumerated up to a cardinality cap. Faces are
// sorted index vectors; each per-cardinality list is in lexicographic order.
struct Nerve {
    int n = 0;
    int max_card = 0;
    bool truncated = false; // some (max_card+1)-wise intersection is nonempty
    std::vector<std::vector<std::vector<int>>> faces_by_card; // index = cardinality

    // Number of faces of dimension k (cardinality k+1). Returns 0 beyond the
    // cap when the enumeration is complete; CapTooLow when truncated.
    long long f(int k) const;
    std::vector<long long> f_vector() const; // f_0 .. f_{max_card-1}
    bool has_face(const std::vector<int>& sigma) const;
};

Nerve compute_nerve(const RegionFamily& family, int max_card);

// Number of k-dimensional faces contained in at least one (k+1)-dimensional
// face. Needs cardinality k+2 available (CapTooLow when truncated earlier).
long long f_ind(const Nerve& nerve, int k);

// Cells of the intersection of the sets indexed by sigma (nonempty sorted
// index list; ParameterRange otherwise).
std::vector<int> intersection_cells(const RegionFamily& family,
                                    const std::vector<int>& sigma);

// Components of that intersection in the family's complex.
int component_count(const RegionFamily& family, const std::vector<int>& sigma);

struct HypothesisReport {
    int k = 0;
    int b = 1;
    bool level_k_plus_1_empty = true; // no (k+2)-wise intersections
    bool components_ok = true;        // <= b components at cardinalities k, k+1
    std::vector<std::vector<int>> cardinality_violations;
    struct ComponentViolation {
        std::vector<int> sigma;
        int components;
    };
    std::vector<ComponentViolation> component_violations;
    long long single_point_count = 0; // intersections that are a single 0-cell
    bool pass = false;
};

// Checks the two standing hypotheses of the planar bounds at level (k, b).
// Parameter domain: k >= 2 for b = 1, k > 2b for b >= 2 (ParameterRange).
HypothesisReport check_intersection_hypotheses(const RegionFamily& family, int k, int b);

// Exact binomial-sum upper bound for f_k of a d-collapsible-type complex on
// n vertices with no faces of dimension >= d+r; valid for d <= k <= d+r-1
// (ParameterRange otherwise).
Int kalai_eckhoff_bound(int n, int d, int r, int k);

// Multiplier of the planar nerve bound: (4k+1)/(4k^2-7k+1) for b = 1,
// b/(k-2b) for b >= 2. Same parameter domain as the hypotheses check.
Rat planar_bound_constant(int k, int b);

struct BoundReport {
    int k = 0;
    int b = 1;
    std::optional<int> chi;
    std::vector<long long> f; // available prefix of the f-vector
    long long f_k = 0;
    long long f_ind_k_minus_1 = 0;
    Rat constant;             // multiplier on f^ind in the governing branch
    Rat additive;             // additive part of the governing branch
    Rat rhs;
    std::optional<Rat> alt_rhs; // value of the non-governing branch (b=1, chi)
    std::string constant_kind;  // "paper" or "proof-derived"
    bool satisfied = false;
    Rat margin;               // rhs - f_k
};

// Evaluates f_k <= bound(f^ind_{k-1}) exactly. Planar when chi is absent;
// the Euler-characteristic variant when present (chi <= 2, ParameterRange
// otherwise). The b >= 2 surface constant follows the proof chain
// (b*f_ind - 3*chi)/(k-2b) and is labelled "proof-derived"; the b = 1
// variant takes the better of the two proof branches.
BoundReport check_bound(const Nerve& nerve, int k, int b, std::optional<int> chi);

} // namespace nb
