#pragma once

#include <vector>

#include "fwps/exact.hpp"
#include "fwps/uf_partition.hpp"
#include "fwps/weight_system.hpp"

namespace fwps {

/// Full-dimensional lattice simplex conv(v_0,...,v_d) in Z^d with the origin
/// strictly interior. Construction computes the signed maximal minors of the
/// vertex matrix; they must all be nonzero with one common sign, which covers
/// both full-dimensionality and interiority at once. Their absolute values
/// are the weights q_i = |det(v_j ; j != i)|.
///
/// Vertices need not be primitive: non-primitive input is flagged via
/// all_vertices_primitive(), not rejected.
class LatticeSimplex {
public:
    explicit LatticeSimplex(std::vector<std::vector<Int>> vertices);

    int dim() const { return dim_; }
    const std::vector<std::vector<Int>>& vertices() const { return vertices_; }
    const std::vector<Int>& raw_weights() const { return weights_; }
    bool all_vertices_primitive() const { return all_primitive_; }

private:
    int dim_;
    std::vector<std::vector<Int>> vertices_;
    std::vector<Int> weights_;
    bool all_primitive_;
};

/// The (unreduced) weight system Q_P; its gcd is the factor lambda_P.
WeightSystem weights_of_simplex(const LatticeSimplex& p);
Int simplex_factor(const LatticeSimplex& p);

/// The d+1 facet normals u_{F_i} of the dual simplex, u_{F_i} being the
/// unique rational linear form with <u_{F_i}, v_j> = -1 for all j != i.
class DualSimplex {
public:
    explicit DualSimplex(std::vector<std::vector<Rat>> normals);

    int dim() const { return static_cast<int>(normals_.size()) - 1; }
    const std::vector<std::vector<Rat>>& normals() const { return normals_; }

private:
    std::vector<std::vector<Rat>> normals_;
};

DualSimplex dual_simplex(const LatticeSimplex& p);

/// Smallest k >= 1 such that k * P^* has integral vertices: the lcm of all
/// denominators appearing in the facet normals.
Int gorenstein_index(const DualSimplex& dual);
Int gorenstein_index(const LatticeSimplex& p);

/// Normalized volume of the dual simplex, |det(u_1 - u_0, ..., u_d - u_0)|,
/// which equals the anticanonical degree of the associated variety.
Rat degree_geometric(const DualSimplex& dual);
Rat degree_geometric(const LatticeSimplex& p);

/// The uf-partition (iota*|Q_P|/q_0, ..., iota*|Q_P|/q_d) of the geometric
/// index iota. Integrality of the entries and the identities
/// reduce_ufp(A(P)) = a_of_q(Q_P) and iota*|Q_P| = lambda_P * t_{A(P)} are
/// checked internally; a violation signals a bug.
UfPartition ufp_of_simplex(const LatticeSimplex& p);

/// Both sides of lambda_P * Vol(iota * P^*) = prod(a_i)/lcm(a_i), exactly.
struct VolumeFormulaReport {
    Rat lhs;
    Rat rhs;
    bool equal;
};
VolumeFormulaReport check_volume_formula(const LatticeSimplex& p);

/// Lattice simplex with weight system exactly q (in order), built from the
/// columns of kernel_complement(q). Requires q reduced and well-formed.
LatticeSimplex simplex_from_weights(const WeightSystem& q);

/// Vertex text format used by the CLI: "1,0;-1,2;-1,-2".
std::vector<std::vector<Int>> parse_vertices(const std::string& text);
std::string format_vertices(const std::vector<std::vector<Int>>& vertices);

} // namespace fwps
