#ifndef COMPLEXFORGE_FA_TOOLBOX_HPP
#define COMPLEXFORGE_FA_TOOLBOX_HPP

#include "complexforge/errors.hpp"

#include <Eigen/Dense>

#include <random>
#include <string>
#include <vector>

namespace complexforge::fa {

struct Tolerances {
    double complex_rel = 1e-10; // acceptance threshold for A1 A0 = 0
    double rank_rel = 1e-10;    // singular values below rank_rel * sigma_max count as zero
    double orth_rel = 1e-10;    // orthogonality / reconstruction checks
    double range_rel = 1e-10;   // membership of y in R(A)
};

/// Finite-dimensional Hilbert space: dimension plus SPD Gram matrix.
class InnerProductSpace {
  public:
    explicit InnerProductSpace(Eigen::Index dim)
        : gram_(Eigen::MatrixXd::Identity(dim, dim)), chol_(gram_) {}

    InnerProductSpace(Eigen::MatrixXd gram) : gram_(std::move(gram)), chol_(gram_) {
        if (gram_.rows() != gram_.cols() || !gram_.isApprox(gram_.transpose(), 1e-12))
            throw SingularGram("gram matrix must be symmetric");
        if (chol_.info() != Eigen::Success)
            throw SingularGram("gram matrix is not positive definite");
    }

    Eigen::Index dim() const { return gram_.rows(); }
    const Eigen::MatrixXd& gram() const { return gram_; }

    /// lower Cholesky factor, gram = L L^T
    Eigen::MatrixXd chol_l() const { return chol_.matrixL(); }

    double inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
        return a.dot(gram_ * b);
    }
    double norm(const Eigen::VectorXd& a) const { return std::sqrt(std::max(0.0, inner(a, a))); }

    /// coordinates -> Euclidean frame (y = L^T x)
    Eigen::VectorXd to_frame(const Eigen::VectorXd& x) const {
        return chol_.matrixL().transpose() * x;
    }
    /// Euclidean frame -> coordinates (x = L^{-T} y)
    Eigen::VectorXd from_frame(const Eigen::VectorXd& y) const {
        return chol_.matrixU().solve(y);
    }

  private:
    Eigen::MatrixXd gram_;
    Eigen::LLT<Eigen::MatrixXd> chol_;
};

struct LinearOp {
    Eigen::MatrixXd matrix;
    InnerProductSpace domain;
    InnerProductSpace codomain;

    LinearOp(Eigen::MatrixXd m, InnerProductSpace dom, InnerProductSpace cod)
        : matrix(std::move(m)), domain(std::move(dom)), codomain(std::move(cod)) {
        if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
            throw ShapeMismatch("operator matrix shape does not match its spaces");
    }

    /// convenience: Euclidean inner products on both sides
    static LinearOp euclidean(Eigen::MatrixXd m) {
        InnerProductSpace dom(m.cols()), cod(m.rows());
        return LinearOp(std::move(m), std::move(dom), std::move(cod));
    }

    /// representation in the Cholesky-transformed Euclidean frame
    Eigen::MatrixXd frame_matrix() const {
        // B = Lcod^T A Ldom^{-T}
        Eigen::MatrixXd rhs = codomain.chol_l().transpose() * matrix;
        // solve X Ldom^T = rhs  =>  X = rhs * Ldom^{-T}
        Eigen::MatrixXd ldom_t = domain.chol_l().transpose();
        return ldom_t.triangularView<Eigen::Upper>()
            .solve<Eigen::OnTheRight>(rhs);
    }
};

/// Hilbert-space adjoint: A* = G_dom^{-1} A^T G_cod, spaces swapped.
inline LinearOp adjoint(const LinearOp& op) {
    Eigen::MatrixXd at = op.matrix.transpose() * op.codomain.gram();
    Eigen::LLT<Eigen::MatrixXd> dom_chol(op.domain.gram());
    Eigen::MatrixXd m = dom_chol.solve(at);
    return LinearOp(std::move(m), op.codomain, op.domain);
}

/// Two successive operators with vanishing composition.
struct ComplexPair {
    LinearOp a0; // H0 -> H1
    LinearOp a1; // H1 -> H2

    ComplexPair(LinearOp op0, LinearOp op1) : a0(std::move(op0)), a1(std::move(op1)) {
        if (a0.matrix.rows() != a1.matrix.cols())
            throw ShapeMismatch("a1 domain dimension must equal a0 codomain dimension");
    }
};

/// ||A1 A0||_F / (||A1||_F ||A0||_F + eps); a pair is an accepted complex
/// iff this is <= complex_rel.
inline double check_complex(const ComplexPair& pair) {
    const double num = (pair.a1.matrix * pair.a0.matrix).norm();
    const double den = pair.a1.matrix.norm() * pair.a0.matrix.norm() + 1e-300;
    return num / den;
}

inline void require_complex(const ComplexPair& pair, const Tolerances& tol = {}) {
    const double r = check_complex(pair);
    if (r > tol.complex_rel)
        throw ComplexViolation("complex property violated: relative residual " + std::to_string(r));
}

namespace detail {

inline Eigen::Index svd_rank(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd, double rank_rel) {
    if (svd.singularValues().size() == 0) return 0;
    const double cut = rank_rel * svd.singularValues()(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cut) ++r;
    return r;
}

/// orthogonal projector onto the column span of m (Euclidean frame)
inline Eigen::MatrixXd range_projector(const Eigen::MatrixXd& m, double rank_rel) {
    if (m.size() == 0) return Eigen::MatrixXd::Zero(m.rows(), m.rows());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const Eigen::Index r = svd_rank(svd, rank_rel);
    const Eigen::MatrixXd u = svd.matrixU().leftCols(r);
    return u * u.transpose();
}

} // namespace detail

/// Gram-orthonormal basis of the harmonic space N(a1) ∩ N(a0*);
/// dimension cross-checked against rank-nullity.
inline std::vector<Eigen::VectorXd> harmonic_basis(const ComplexPair& pair,
                                                   const Tolerances& tol = {}) {
    require_complex(pair, tol);
    const Eigen::MatrixXd b0 = pair.a0.frame_matrix();
    const Eigen::MatrixXd b1 = pair.a1.frame_matrix();
    const Eigen::Index n1 = b0.rows();

    Eigen::MatrixXd stacked(b1.rows() + b0.cols(), n1);
    stacked.topRows(b1.rows()) = b1;
    stacked.bottomRows(b0.cols()) = b0.transpose();

    std::vector<Eigen::VectorXd> basis;
    if (stacked.rows() == 0 || stacked.size() == 0) {
        for (Eigen::Index i = 0; i < n1; ++i)
            basis.push_back(pair.a0.codomain.from_frame(Eigen::VectorXd::Unit(n1, i)));
    } else {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
        Eigen::Index rank = 0;
        const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol.rank_rel * smax && smax > 0) ++rank;
        for (Eigen::Index i = rank; i < n1; ++i)
            basis.push_back(pair.a0.codomain.from_frame(svd.matrixV().col(i)));
    }

    // rank-nullity consistency
    auto mat_rank = [&](const Eigen::MatrixXd& m) -> Eigen::Index {
        if (m.size() == 0) return 0;
        Eigen::JacobiSVD<Eigen::MatrixXd> s(m);
        return detail::svd_rank(s, tol.rank_rel);
    };
    const Eigen::Index expect = n1 - mat_rank(b0) - mat_rank(b1);
    if (static_cast<Eigen::Index>(basis.size()) != expect)
        throw ComplexViolation("harmonic dimension disagrees with rank-nullity count");
    return basis;
}

struct HelmholtzSplit {
    Eigen::VectorXd range_a0;
    Eigen::VectorXd harmonic;
    Eigen::VectorXd range_a1_adjoint;
    double residual_norm = 0.0;
};

/// x = P_{R(a0)} x + harmonic + P_{R(a1*)} x, pairwise gram-orthogonal.
inline HelmholtzSplit helmholtz_split(const ComplexPair& pair, const Eigen::VectorXd& x,
                                      const Tolerances& tol = {}) {
    require_complex(pair, tol);
    if (x.size() != pair.a0.matrix.rows())
        throw ShapeMismatch("helmholtz_split: vector dimension mismatch");
    const auto& h1 = pair.a0.codomain;
    const Eigen::VectorXd xf = h1.to_frame(x);
    const Eigen::MatrixXd b0 = pair.a0.frame_matrix();
    const Eigen::MatrixXd b1t = pair.a1.frame_matrix().transpose();

    const Eigen::VectorXd p0 = detail::range_projector(b0, tol.rank_rel) * xf;
    const Eigen::VectorXd p2 = detail::range_projector(b1t, tol.rank_rel) * xf;
    const Eigen::VectorXd h = xf - p0 - p2;

    HelmholtzSplit split;
    split.range_a0 = h1.from_frame(p0);
    split.harmonic = h1.from_frame(h);
    split.range_a1_adjoint = h1.from_frame(p2);
    split.residual_norm =
        h1.norm(x - split.range_a0 - split.harmonic - split.range_a1_adjoint);
    return split;
}

/// Minimal-gram-norm p with A p = y; the inverse of the reduced operator.
inline Eigen::VectorXd geometric_potential(const LinearOp& op, const Eigen::VectorXd& y,
                                           const Tolerances& tol = {}) {
    if (y.size() != op.matrix.rows())
        throw ShapeMismatch("geometric_potential: vector dimension mismatch");
    const Eigen::VectorXd yf = op.codomain.to_frame(y);
    const Eigen::MatrixXd b = op.frame_matrix();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::Index r = detail::svd_rank(svd, tol.rank_rel);
    Eigen::VectorXd pf = Eigen::VectorXd::Zero(b.cols());
    for (Eigen::Index i = 0; i < r; ++i)
        pf += (svd.matrixU().col(i).dot(yf) / svd.singularValues()(i)) * svd.matrixV().col(i);
    const double res = (b * pf - yf).norm();
    if (res > tol.range_rel * (yf.norm() + 1e-300))
        throw NotInRange("geometric_potential: y is not in the range of A");
    return op.domain.from_frame(pf);
}

struct FriedrichsResult {
    double constant = 0.0;      // 1 / smallest nonzero singular value
    Eigen::VectorXd extremal;   // attaining vector in N(A)^perp (original coords)
};

/// Smallest c with ||x|| <= c ||A x|| on N(A)^perp.
inline FriedrichsResult friedrichs_constant(const LinearOp& op, const Tolerances& tol = {}) {
    const Eigen::MatrixXd b = op.frame_matrix();
    if (b.size() == 0) throw ZeroOperator("friedrichs_constant: empty operator");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinV);
    const Eigen::Index r = detail::svd_rank(svd, tol.rank_rel);
    if (r == 0) throw ZeroOperator("friedrichs_constant: zero operator");
    FriedrichsResult out;
    out.constant = 1.0 / svd.singularValues()(r - 1);
    out.extremal = op.domain.from_frame(svd.matrixV().col(r - 1));
    return out;
}

/// Gram-orthonormal basis of N(A)^perp ... handy for sampling in tests.
inline Eigen::MatrixXd kernel_complement_frame(const LinearOp& op, const Tolerances& tol = {}) {
    const Eigen::MatrixXd b = op.frame_matrix();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullV);
    const Eigen::Index r = detail::svd_rank(svd, tol.rank_rel);
    return svd.matrixV().leftCols(r);
}

struct RegularDecompositionReport {
    int samples = 0;
    double max_reconstruction_residual = 0.0; // ||x - q1 x - a0 q0 x|| / ||x||
    double max_adjointness_error = 0.0;       // |<x, a0 p0> - <a0* x, p0>| scaled
    double q1_empirical_norm = 0.0;
    double q0_empirical_norm = 0.0;
    bool passed = false;
};

/// Checks x = q1 x + a0 q0 x on random samples and reports the empirical
/// boundedness constants of the supplied decomposition operators.
inline RegularDecompositionReport verify_regular_decomposition(const ComplexPair& pair,
                                                               const Eigen::MatrixXd& q1,
                                                               const Eigen::MatrixXd& q0,
                                                               int samples = 100,
                                                               std::uint64_t seed = 0,
                                                               const Tolerances& tol = {}) {
    const Eigen::Index n1 = pair.a0.matrix.rows();
    if (q1.rows() != n1 || q1.cols() != n1 || q0.cols() != n1 ||
        q0.rows() != pair.a0.matrix.cols())
        throw ShapeMismatch("verify_regular_decomposition: operator shapes");

    const auto& h1 = pair.a0.codomain;
    const auto& h0 = pair.a0.domain;
    const LinearOp a0_star = adjoint(pair.a0);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    RegularDecompositionReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd x(n1);
        for (Eigen::Index i = 0; i < n1; ++i) x(i) = gauss(rng);
        const double xn = h1.norm(x) + 1e-300;
        const Eigen::VectorXd p1 = q1 * x;
        const Eigen::VectorXd p0 = q0 * x;
        const double res = h1.norm(x - p1 - pair.a0.matrix * p0) / xn;
        rep.max_reconstruction_residual = std::max(rep.max_reconstruction_residual, res);
        rep.q1_empirical_norm = std::max(rep.q1_empirical_norm, h1.norm(p1) / xn);
        rep.q0_empirical_norm = std::max(rep.q0_empirical_norm, h0.norm(p0) / xn);
        // <x, a0 p0>_{H1} = <a0* x, p0>_{H0}
        const double lhs = h1.inner(x, pair.a0.matrix * p0);
        const double rhs = h0.inner(a0_star.matrix * x, p0);
        const double scale = xn * (h0.norm(p0) + 1e-300);
        rep.max_adjointness_error =
            std::max(rep.max_adjointness_error, std::abs(lhs - rhs) / scale);
    }
    rep.passed = rep.max_reconstruction_residual <= tol.orth_rel &&
                 rep.max_adjointness_error <= tol.orth_rel;
    return rep;
}

} // namespace complexforge::fa

#endif
