#pragma once

#include <map>
#include <vector>

#include "arrangetop/arrangement.hpp"
#include "arrangetop/matrix.hpp"

namespace arrangetop {

/// A degree-1 class on the complement, given by one exact coordinate per
/// line; the coordinates must sum to zero.
struct WeightVector {
    std::vector<CycNumber> a; // length d

    CycNumber sum() const;
};

/// Degree <= 2 part of the Orlik-Solomon algebra of the cone arrangement,
/// together with the quotient that computes the cohomology of the
/// projective complement. Degree-2 basis elements are indexed per lattice
/// point: for a point with incident lines i0 < i1 < ... the classes
/// e_{i0, i_j} (j >= 1) form a basis of the point's summand.
class OSAlgebra {
public:
    explicit OSAlgebra(const Arrangement& a);

    const Arrangement& arrangement() const { return *arr_; }
    size_t dim1() const { return d_; }               // ambient A^1 of the cone
    size_t b1() const { return d_ - 1; }             // b_1 of the projective complement
    size_t dim2_cone() const { return basis2_size_; }
    size_t dim2_projective() const { return dim2_proj_; } // b_2 of the complement

    /// e_i wedge e_j in the cone degree-2 basis (i, j 1-based, i != j).
    /// Returned as a sparse list of (basis index, rational coefficient).
    std::vector<std::pair<size_t, Rational>> wedge(int i, int j) const;

    /// Image of a wedge x in the degree-2 part of the projective complement:
    /// coordinates after reduction modulo omega_0 ^ A^1.
    std::vector<CycNumber> project(std::vector<CycNumber> v2cone) const;

    /// dim H^1 of the complex (A^0 -> A^1 -> A^2)(M) with differential a /\.
    int resonance_dim(const WeightVector& w) const;

private:
    const Arrangement* arr_;
    size_t d_;
    size_t basis2_size_;
    size_t dim2_proj_;
    // per lattice point: offset of its basis block and its incident list
    std::vector<size_t> point_offset_;
    // reduced echelon rows spanning omega_0 ^ A^1, with pivot columns
    std::vector<std::vector<Rational>> w_rows_;
    std::vector<size_t> w_pivots_;
};

/// A partition of a sub-arrangement into k >= 3 blocks; valid nets satisfy:
/// every point meeting two distinct blocks meets exactly one line of each
/// block. Exponents other than 1 can be carried but are refused by the
/// pencil lift.
struct NetPartition {
    std::vector<std::vector<int>> blocks; // sorted 1-based indices, blocks in lex order
    std::map<int, int> exponents;         // per line, default 1

    int exponent(int line) const;
    std::vector<int> support() const; // sorted union of blocks
    size_t k() const { return blocks.size(); }
};

struct ResonanceComponent {
    enum class Kind { Local, Global };
    Kind kind;
    int point_index = -1;             // lattice point (0-based) for local components
    NetPartition net;                 // for global components
    std::vector<int> support;         // sorted 1-based line indices
    size_t dimension = 0;
    std::vector<WeightVector> basis;
};

OSAlgebra build_os(const Arrangement& a);

/// One component per lattice point of multiplicity >= 3, ordered by point
/// index; dimension m_p - 1.
std::vector<ResonanceComponent> local_components(const Arrangement& a);

/// All partitions of sub-arrangements into k in [3, max_k] blocks
/// satisfying the net axiom, deduplicated up to block order and reported in
/// lexicographic block order.
std::vector<NetPartition> net_search(const Arrangement& a, int max_k);

/// True when the partition satisfies the net axiom on its support.
bool net_axiom_holds(const Arrangement& a, const NetPartition& net);

/// Weight-space basis of the component attached to a net (dimension k - 1).
std::vector<WeightVector> net_weight_basis(const Arrangement& a, const NetPartition& net);

/// Local + global components in deterministic order.
std::vector<ResonanceComponent> resonance_components(const Arrangement& a, int max_k);

} // namespace arrangetop
