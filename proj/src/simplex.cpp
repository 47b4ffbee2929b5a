#include "fwps/simplex.hpp"

#include <sstream>

namespace fwps {

namespace {

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g == 1;
}

// Matrix whose rows are the vertices v_j, j != skip, in increasing j.
IntMatrix vertex_rows_omitting(const std::vector<std::vector<Int>>& vertices, int skip) {
    int d = static_cast<int>(vertices.size()) - 1;
    IntMatrix m(d, d);
    for (int j = 0, r = 0; j <= d; ++j) {
        if (j == skip) continue;
        for (int c = 0; c < d; ++c) m.at(r, c) = vertices[j][c];
        ++r;
    }
    return m;
}

} // namespace

LatticeSimplex::LatticeSimplex(std::vector<std::vector<Int>> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw std::invalid_argument("simplex needs at least two vertices");
    dim_ = static_cast<int>(vertices_.size()) - 1;
    for (const auto& v : vertices_)
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("expected d+1 vertices with d coordinates each");

    // Signed cofactors of the d x (d+1) vertex-column matrix span its kernel:
    // sum_i (-1)^i det(v_j ; j != i) v_i = 0. The origin is strictly interior
    // iff these coefficients are all nonzero with a common sign.
    std::vector<Int> cof(dim_ + 1);
    int sign_seen = 0;
    for (int i = 0; i <= dim_; ++i) {
        Int m = det_exact(vertex_rows_omitting(vertices_, i));
        if (i % 2) m = -m;
        int s = sgn(m);
        if (s == 0) throw std::invalid_argument("degenerate simplex");
        if (sign_seen == 0) sign_seen = s;
        else if (s != sign_seen) throw std::invalid_argument("origin not strictly interior");
        cof[i] = std::move(m);
    }
    weights_.reserve(dim_ + 1);
    for (Int& m : cof) weights_.push_back(abs(m));

    all_primitive_ = true;
    for (const auto& v : vertices_)
        if (!is_primitive(v)) { all_primitive_ = false; break; }
}

WeightSystem weights_of_simplex(const LatticeSimplex& p) {
    return WeightSystem(p.raw_weights());
}

Int simplex_factor(const LatticeSimplex& p) {
    return gcd_many(p.raw_weights());
}

DualSimplex::DualSimplex(std::vector<std::vector<Rat>> normals) : normals_(std::move(normals)) {
    if (normals_.size() < 2) throw std::invalid_argument("dual simplex needs at least two normals");
}

DualSimplex dual_simplex(const LatticeSimplex& p) {
    int d = p.dim();
    std::vector<Int> rhs(d, Int(-1));
    std::vector<std::vector<Rat>> normals;
    normals.reserve(d + 1);
    for (int i = 0; i <= d; ++i) {
        std::vector<Rat> u = solve_exact(vertex_rows_omitting(p.vertices(), i), rhs);
        // <u_{F_i}, v_i> > -1 is forced by interiority; recheck as a guard
        Rat pairing(0);
        for (int c = 0; c < d; ++c) pairing += u[c] * Rat(p.vertices()[i][c]);
        if (!(pairing > Rat(-1))) throw std::logic_error("facet normal check failed");
        normals.push_back(std::move(u));
    }
    return DualSimplex(std::move(normals));
}

Int gorenstein_index(const DualSimplex& dual) {
    Int k = 1;
    for (const auto& u : dual.normals())
        for (const Rat& c : u)
            mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), c.get_den().get_mpz_t());
    return k;
}

Int gorenstein_index(const LatticeSimplex& p) {
    return gorenstein_index(dual_simplex(p));
}

Rat degree_geometric(const DualSimplex& dual) {
    int d = dual.dim();
    // scale the edge matrix to integers, then one fraction-free determinant
    std::vector<std::vector<Rat>> edges(d, std::vector<Rat>(d));
    Int den = 1;
    for (int i = 1; i <= d; ++i)
        for (int c = 0; c < d; ++c) {
            edges[i - 1][c] = dual.normals()[i][c] - dual.normals()[0][c];
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), edges[i - 1][c].get_den().get_mpz_t());
        }
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < d; ++c) {
            Rat scaled = edges[i][c] * Rat(den);
            m.at(i, c) = scaled.get_num(); // denominator is 1 by choice of den
        }
    Int den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), d);
    return make_rat(abs(det_exact(m)), den_pow);
}

Rat degree_geometric(const LatticeSimplex& p) {
    return degree_geometric(dual_simplex(p));
}

UfPartition ufp_of_simplex(const LatticeSimplex& p) {
    Int iota = gorenstein_index(p);
    WeightSystem q = weights_of_simplex(p);
    Int scaled = iota * total_weight(q);
    std::vector<Int> parts;
    parts.reserve(q.size());
    for (const Int& w : q.weights()) {
        if (!mpz_divisible_p(scaled.get_mpz_t(), w.get_mpz_t()))
            throw std::logic_error("iota*|Q| not divisible by a weight");
        Int part;
        mpz_divexact(part.get_mpz_t(), scaled.get_mpz_t(), w.get_mpz_t());
        parts.push_back(std::move(part));
    }
    UfPartition a(iota, std::move(parts));
    if (!(reduce_ufp(a) == a_of_q(q)))
        throw std::logic_error("reduced simplex partition disagrees with a_of_q");
    if (scaled != simplex_factor(p) * total_weight_t(a))
        throw std::logic_error("iota*|Q| != lambda * t_A");
    return a;
}

VolumeFormulaReport check_volume_formula(const LatticeSimplex& p) {
    DualSimplex dual = dual_simplex(p);
    Int iota = gorenstein_index(dual);
    Int iota_pow;
    mpz_pow_ui(iota_pow.get_mpz_t(), iota.get_mpz_t(), p.dim());
    Rat lhs = Rat(simplex_factor(p) * iota_pow) * degree_geometric(dual);
    UfPartition a = ufp_of_simplex(p);
    Int prod = 1;
    for (const Int& part : a.parts()) prod *= part;
    Rat rhs = make_rat(prod, total_weight_t(a));
    return VolumeFormulaReport{lhs, rhs, lhs == rhs};
}

LatticeSimplex simplex_from_weights(const WeightSystem& q) {
    if (!is_reduced(q)) throw std::invalid_argument("weight system not reduced");
    if (!is_well_formed(q)) throw std::invalid_argument("weight system not well-formed");
    IntMatrix b = kernel_complement(q.weights());
    std::vector<std::vector<Int>> vertices(q.size(), std::vector<Int>(q.dim()));
    for (int i = 0; i < q.size(); ++i)
        for (int r = 0; r < q.dim(); ++r) vertices[i][r] = b.at(r, i);
    LatticeSimplex p(std::move(vertices));
    if (p.raw_weights() != q.weights())
        throw std::logic_error("constructed simplex has wrong weight system");
    if (!p.all_vertices_primitive())
        throw std::logic_error("constructed simplex has non-primitive vertices");
    return p;
}

std::vector<std::vector<Int>> parse_vertices(const std::string& text) {
    std::vector<std::vector<Int>> vertices;
    std::stringstream outer(text);
    std::string vertex;
    while (std::getline(outer, vertex, ';')) {
        std::vector<Int> coords;
        std::stringstream inner(vertex);
        std::string coord;
        while (std::getline(inner, coord, ',')) {
            size_t b = coord.find_first_not_of(" \t");
            size_t e = coord.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("empty coordinate");
            try {
                coords.emplace_back(coord.substr(b, e - b + 1));
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("malformed coordinate: " + coord);
            }
        }
        if (coords.empty()) throw std::invalid_argument("empty vertex");
        vertices.push_back(std::move(coords));
    }
    if (vertices.empty()) throw std::invalid_argument("no vertices");
    return vertices;
}

std::string format_vertices(const std::vector<std::vector<Int>>& vertices) {
    std::string s;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ";";
        for (size_t c = 0; c < vertices[i].size(); ++c) {
            if (c) s += ",";
            s += vertices[i][c].get_str();
        }
    }
    return s;
}

} // namespace fwps
