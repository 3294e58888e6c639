#ifndef COMPLEXFORGE_GRID_HPP
#define COMPLEXFORGE_GRID_HPP

#include "complexforge/errors.hpp"
#include "complexforge/fa_toolbox.hpp"
#include "complexforge/rational_linalg.hpp"

#include <Eigen/Dense>

#include <array>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace complexforge::grid {

struct VoxelDomain {
    int nx = 0, ny = 0, nz = 0;
    std::vector<char> occupancy; // x-fastest

    bool occupied(int x, int y, int z) const {
        if (x < 0 || y < 0 || z < 0 || x >= nx || y >= ny || z >= nz) return false;
        return occupancy[static_cast<std::size_t>(x + nx * (y + ny * z))] != 0;
    }
    void set(int x, int y, int z, bool v) {
        occupancy[static_cast<std::size_t>(x + nx * (y + ny * z))] = v ? 1 : 0;
    }

    bool any_occupied() const {
        for (char c : occupancy)
            if (c) return true;
        return false;
    }

    static VoxelDomain solid(int nx, int ny, int nz) {
        VoxelDomain d;
        d.nx = nx;
        d.ny = ny;
        d.nz = nz;
        d.occupancy.assign(static_cast<std::size_t>(nx) * ny * nz, 1);
        return d;
    }

    VoxelDomain mirrored(int axis) const {
        VoxelDomain m = *this;
        for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y)
                for (int x = 0; x < nx; ++x) {
                    int c[3] = {x, y, z};
                    const int n[3] = {nx, ny, nz};
                    c[axis] = n[axis] - 1 - c[axis];
                    m.set(c[0], c[1], c[2], occupied(x, y, z));
                }
        return m;
    }
};

/// Voxel file: "nx ny nz", then nz blocks of ny lines of nx chars in {0,1},
/// blocks separated by blank lines.
inline VoxelDomain parse_voxel_domain(std::istream& in) {
    VoxelDomain d;
    std::string header;
    if (!std::getline(in, header)) throw ParseError("voxel file: empty input");
    std::istringstream hs(header);
    if (!(hs >> d.nx >> d.ny >> d.nz) || d.nx <= 0 || d.ny <= 0 || d.nz <= 0)
        throw ParseError("voxel file: bad dimension line");
    d.occupancy.assign(static_cast<std::size_t>(d.nx) * d.ny * d.nz, 0);
    std::string line;
    for (int z = 0; z < d.nz; ++z)
        for (int y = 0; y < d.ny; ++y) {
            do {
                if (!std::getline(in, line)) throw ParseError("voxel file: truncated");
            } while (line.empty());
            if (static_cast<int>(line.size()) < d.nx) throw ParseError("voxel file: short row");
            for (int x = 0; x < d.nx; ++x) {
                const char c = line[static_cast<std::size_t>(x)];
                if (c != '0' && c != '1') throw ParseError("voxel file: expected 0/1");
                d.set(x, y, z, c == '1');
            }
        }
    if (!d.any_occupied()) throw EmptyDomain("voxel file: no occupied voxel");
    return d;
}

inline std::string format_voxel_domain(const VoxelDomain& d) {
    std::ostringstream out;
    out << d.nx << " " << d.ny << " " << d.nz << "\n";
    for (int z = 0; z < d.nz; ++z) {
        for (int y = 0; y < d.ny; ++y) {
            for (int x = 0; x < d.nx; ++x) out << (d.occupied(x, y, z) ? '1' : '0');
            out << "\n";
        }
        if (z + 1 < d.nz) out << "\n";
    }
    return out.str();
}

enum class BcMode { natural, full_dirichlet };

/// One elementary cube: anchor position and extent bits per axis;
/// dimension = number of set extent bits.
struct Cell {
    std::array<int, 3> pos;
    std::array<int, 3> ext;

    friend bool operator<(const Cell& a, const Cell& b) {
        return std::tie(a.pos, a.ext) < std::tie(b.pos, b.ext);
    }
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cubical cell complex with integer incidence matrices. D[k] maps
/// k-cochains to (k+1)-cochains, rows indexed by (k+1)-cells.
struct CubicalComplex {
    BcMode bc = BcMode::natural;
    std::array<std::vector<Cell>, 4> cells;          // per dimension
    std::array<Eigen::MatrixXi, 3> incidence;        // D0, D1, D2

    std::size_t count(int dim) const { return cells[static_cast<std::size_t>(dim)].size(); }

    long euler_characteristic() const {
        long chi = 0;
        for (int k = 0; k < 4; ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
        return chi;
    }
};

namespace detail {

/// Voxels whose closure contains the cell, enumerated over the infinite grid.
inline std::vector<std::array<int, 3>> adjacent_voxels(const Cell& c) {
    std::vector<std::array<int, 3>> out;
    std::array<std::array<int, 2>, 3> choices;
    std::array<int, 3> counts;
    for (int i = 0; i < 3; ++i) {
        if (c.ext[static_cast<std::size_t>(i)]) {
            choices[static_cast<std::size_t>(i)] = {c.pos[static_cast<std::size_t>(i)], 0};
            counts[static_cast<std::size_t>(i)] = 1;
        } else {
            choices[static_cast<std::size_t>(i)] = {c.pos[static_cast<std::size_t>(i)] - 1,
                                                    c.pos[static_cast<std::size_t>(i)]};
            counts[static_cast<std::size_t>(i)] = 2;
        }
    }
    for (int a = 0; a < counts[0]; ++a)
        for (int b = 0; b < counts[1]; ++b)
            for (int g = 0; g < counts[2]; ++g)
                out.push_back({choices[0][static_cast<std::size_t>(a)],
                               choices[1][static_cast<std::size_t>(b)],
                               choices[2][static_cast<std::size_t>(g)]});
    return out;
}

inline bool cell_included(const VoxelDomain& d, const Cell& c, BcMode bc) {
    bool any = false, all = true;
    for (const auto& v : adjacent_voxels(c)) {
        const bool occ = d.occupied(v[0], v[1], v[2]);
        any = any || occ;
        all = all && occ;
    }
    return bc == BcMode::natural ? any : all;
}

/// Signed faces from the interval product rule
/// (boundary of [p,p+1] is {p+1} - {p}).
inline std::vector<std::pair<Cell, int>> boundary(const Cell& c) {
    std::vector<std::pair<Cell, int>> faces;
    int bits_before = 0;
    for (int i = 0; i < 3; ++i) {
        if (!c.ext[static_cast<std::size_t>(i)]) continue;
        const int sign = (bits_before % 2 == 0) ? 1 : -1;
        Cell head = c, tail = c;
        head.ext[static_cast<std::size_t>(i)] = 0;
        tail.ext[static_cast<std::size_t>(i)] = 0;
        head.pos[static_cast<std::size_t>(i)] += 1;
        faces.emplace_back(head, sign);
        faces.emplace_back(tail, -sign);
        ++bits_before;
    }
    return faces;
}

} // namespace detail

/// Enumerates cells (axis-lexicographic, deterministic) and assembles the
/// integer incidence matrices; D1 D0 = 0 and D2 D1 = 0 exactly.
inline CubicalComplex build_cubical_complex(const VoxelDomain& domain,
                                            BcMode bc = BcMode::natural) {
    if (!domain.any_occupied()) throw EmptyDomain("build_cubical_complex: empty domain");
    CubicalComplex cx;
    cx.bc = bc;

    std::array<std::map<Cell, int>, 4> index;
    for (int z = 0; z <= domain.nz; ++z)
        for (int y = 0; y <= domain.ny; ++y)
            for (int x = 0; x <= domain.nx; ++x)
                for (int ex = 0; ex < 2; ++ex)
                    for (int ey = 0; ey < 2; ++ey)
                        for (int ez = 0; ez < 2; ++ez) {
                            Cell c{{x, y, z}, {ex, ey, ez}};
                            if (x + ex > domain.nx || y + ey > domain.ny || z + ez > domain.nz)
                                continue;
                            if (!detail::cell_included(domain, c, bc)) continue;
                            const int dim = ex + ey + ez;
                            auto& dimcells = cx.cells[static_cast<std::size_t>(dim)];
                            index[static_cast<std::size_t>(dim)].emplace(c,
                                                                         static_cast<int>(dimcells.size()));
                            dimcells.push_back(c);
                        }

    for (int k = 0; k < 3; ++k) {
        const auto& hi = cx.cells[static_cast<std::size_t>(k) + 1];
        const auto& lo_index = index[static_cast<std::size_t>(k)];
        Eigen::MatrixXi d = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(hi.size()),
                                                  static_cast<Eigen::Index>(cx.count(k)));
        for (std::size_t r = 0; r < hi.size(); ++r)
            for (const auto& [face, sign] : detail::boundary(hi[r])) {
                auto it = lo_index.find(face);
                // faces outside the complex carry the boundary condition
                if (it == lo_index.end()) continue;
                d(static_cast<Eigen::Index>(r), it->second) = sign;
            }
        cx.incidence[static_cast<std::size_t>(k)] = std::move(d);
    }
    return cx;
}

inline RationalMatrix to_rational(const Eigen::MatrixXi& m) {
    RationalMatrix r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(m(i, j));
    return r;
}

/// b_k = dim N(D_k) - rank D_{k-1}, exact rational rank.
inline std::array<std::size_t, 4> betti_numbers(const CubicalComplex& cx) {
    std::array<std::size_t, 3> rank{};
    for (int k = 0; k < 3; ++k)
        rank[static_cast<std::size_t>(k)] =
            rational_rank(to_rational(cx.incidence[static_cast<std::size_t>(k)]));
    std::array<std::size_t, 4> betti{};
    for (int k = 0; k < 4; ++k) {
        const std::size_t rk = (k < 3) ? rank[static_cast<std::size_t>(k)] : 0;
        const std::size_t rkm1 = (k > 0) ? rank[static_cast<std::size_t>(k) - 1] : 0;
        betti[static_cast<std::size_t>(k)] = cx.count(k) - rk - rkm1;
    }
    return betti;
}

/// The fa_toolbox pair (D_{k-1}, D_k) of a complex, identity mass matrices.
inline fa::ComplexPair level_pair(const CubicalComplex& cx, int k) {
    const Eigen::Index n = static_cast<Eigen::Index>(cx.count(k));
    if (n == 0) throw DegenerateComplex("level " + std::to_string(k) + " has no cells");
    Eigen::MatrixXd d_prev = Eigen::MatrixXd::Zero(n, 0);
    if (k > 0) d_prev = cx.incidence[static_cast<std::size_t>(k) - 1].cast<double>();
    Eigen::MatrixXd d_k = Eigen::MatrixXd::Zero(0, n);
    if (k < 3) d_k = cx.incidence[static_cast<std::size_t>(k)].cast<double>();
    return fa::ComplexPair(fa::LinearOp::euclidean(std::move(d_prev)),
                           fa::LinearOp::euclidean(std::move(d_k)));
}

enum class HarmonicKind { dirichlet, neumann };

/// Discrete harmonic k-fields. Neumann fields live in the natural complex
/// at level k; Dirichlet fields in the relative (full-boundary-condition)
/// complex at level 3-k, which is the cochain realization matching
/// dim = b_k for both kinds.
inline std::vector<Eigen::VectorXd> dirichlet_neumann_fields(const VoxelDomain& domain, int k,
                                                             HarmonicKind kind) {
    if (k < 1 || k > 2) throw DegenerateComplex("harmonic fields defined for k in {1,2}");
    if (kind == HarmonicKind::neumann) {
        const CubicalComplex cx = build_cubical_complex(domain, BcMode::natural);
        return fa::harmonic_basis(level_pair(cx, k));
    }
    const CubicalComplex cx = build_cubical_complex(domain, BcMode::full_dirichlet);
    return fa::harmonic_basis(level_pair(cx, 3 - k));
}

struct TopologyReport {
    std::array<std::size_t, 4> betti{};
    std::size_t dirichlet_dim = 0;            // level-2 Dirichlet fields (= b2)
    std::size_t neumann_dim = 0;              // level-1 Neumann fields (= b1)
    std::size_t elasticity_dirichlet_dim = 0; // 6 x dirichlet_dim
    std::size_t elasticity_neumann_dim = 0;   // 6 x neumann_dim
    bool topologically_trivial = false;       // boundary connected, no handles
    long euler_characteristic = 0;
    long euler_from_betti = 0;
};

inline constexpr std::size_t kRigidMotionDim = 6;

inline TopologyReport elasticity_dims(const VoxelDomain& domain) {
    TopologyReport rep;
    const CubicalComplex cx = build_cubical_complex(domain, BcMode::natural);
    rep.betti = betti_numbers(cx);
    rep.euler_characteristic = cx.euler_characteristic();
    rep.euler_from_betti = static_cast<long>(rep.betti[0]) - static_cast<long>(rep.betti[1]) +
                           static_cast<long>(rep.betti[2]) - static_cast<long>(rep.betti[3]);
    rep.neumann_dim = rep.betti[1];
    rep.dirichlet_dim = rep.betti[2];
    rep.elasticity_neumann_dim = kRigidMotionDim * rep.neumann_dim;
    rep.elasticity_dirichlet_dim = kRigidMotionDim * rep.dirichlet_dim;
    rep.topologically_trivial = rep.betti[1] == 0 && rep.betti[2] == 0;
    return rep;
}

/// Friedrichs/Poincare constant of the level-k coboundary.
inline double poincare_constant_grid(const VoxelDomain& domain, int k,
                                     BcMode bc = BcMode::natural) {
    if (k < 0 || k > 2) throw DegenerateComplex("poincare constant defined for k in {0,1,2}");
    const CubicalComplex cx = build_cubical_complex(domain, bc);
    const auto& d = cx.incidence[static_cast<std::size_t>(k)];
    if (d.size() == 0) throw ZeroOperator("level-" + std::to_string(k) + " incidence map is empty");
    return fa::friedrichs_constant(fa::LinearOp::euclidean(d.cast<double>())).constant;
}

} // namespace complexforge::grid

#endif
