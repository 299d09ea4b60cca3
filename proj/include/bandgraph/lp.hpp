#ifndef BANDGRAPH_LP_HPP
#define BANDGRAPH_LP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bandgraph/graph.hpp"
#include "bandgraph/scalar.hpp"

namespace bandgraph {

/// Sign choices (sigma, tau) in {+1,-1} for a_i - a_j and c_i - c_j, one per
/// vertex pair in lexicographic order. Canonical form fixes the first pair
/// to (+,+), quotienting out the order-4 global flip group.
struct SignCase {
    std::vector<int8_t> sigma;
    std::vector<int8_t> tau;

    size_t pair_total() const { return sigma.size(); }

    /// 4^(m-1) canonical cases, m = n(n-1)/2.
    static uint64_t case_count(int n);

    /// Deterministic enumeration: index digits in base 4, most significant
    /// digit drives the second pair; digit 0..3 -> (+,+),(+,-),(-,+),(-,-).
    static SignCase from_index(int n, uint64_t index);
    uint64_t to_index() const;

    /// Compact form "++,+-,--,..." over pairs in lexicographic order.
    std::string str() const;
    static SignCase parse(std::string_view text);

    friend bool operator==(const SignCase&, const SignCase&) = default;
};

/// Splits [0, case_count) into k near-equal contiguous chunks.
std::vector<std::pair<uint64_t, uint64_t>> split_case_range(uint64_t total, unsigned k);

/// Linear program: maximize one designated variable subject to rows
/// `coeffs . x <= rhs` over free variables. Boundedness comes from explicit
/// box rows, which build_margin_lp always emits.
struct LinearProgram {
    struct Row {
        std::vector<Scalar> coeffs;
        Scalar rhs;
        std::string label;
    };

    std::vector<std::string> vars;
    int objective = -1;
    std::vector<Row> rows;

    /// Plain-text dump, one constraint per line: `<coeff>*<var> ... <= <rhs>`.
    std::string dump() const;
};

/// The max-margin program for (G, R) under a sign case: maximize delta s.t.
///   sigma_ij (a_i - a_j) >= 0,  tau_ij (c_i - c_j) >= 0          (all pairs)
///   sigma_ij (a_i - a_j) - tau_ij (c_i - c_j) >= 0               (edges)
///   sigma_ij (a_i - a_j) >= delta                                (edges)
///   tau_ij (c_i - c_j) - R sigma_ij (a_i - a_j) >= delta         (non-edges)
///   -box <= a_i, c_i <= box,  0 <= delta <= box
/// The sign case is strictly realizable iff the optimum delta* is positive.
LinearProgram build_margin_lp(const Graph& g, const Scalar& R, const SignCase& sc,
                              const Scalar& box);

/// Same constraints restricted to the first `prefix_pairs` lexicographic
/// pairs, over the variables those pairs touch (plus delta). Used by the
/// branch-and-prune search: constraints only accumulate along a branch, so
/// delta* = 0 on a prefix kills every completion.
LinearProgram build_margin_lp_prefix(const Graph& g, const Scalar& R, const SignCase& sc,
                                     const Scalar& box, size_t prefix_pairs);

}  // namespace bandgraph

#endif
