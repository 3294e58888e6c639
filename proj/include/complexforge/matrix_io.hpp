#ifndef COMPLEXFORGE_MATRIX_IO_HPP
#define COMPLEXFORGE_MATRIX_IO_HPP

#include "complexforge/errors.hpp"

#include <Eigen/Dense>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace complexforge {

/// Matrix Market coordinate format, "matrix coordinate real general".
inline Eigen::MatrixXd read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw ParseError("matrix market: missing header");
    if (line.find("coordinate") == std::string::npos)
        throw ParseError("matrix market: only coordinate format is supported");
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '%') break;
    std::istringstream sizes(line);
    long rows = -1, cols = -1, nnz = -1;
    sizes >> rows >> cols >> nnz;
    if (rows < 0 || cols < 0 || nnz < 0) throw ParseError("matrix market: bad size line");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
    for (long k = 0; k < nnz; ++k) {
        long i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) throw ParseError("matrix market: truncated entries");
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw ParseError("matrix market: index out of range");
        m(i - 1, j - 1) = v;
    }
    return m;
}

inline void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& m) {
    long nnz = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0) ++nnz;
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.rows() << " " << m.cols() << " " << nnz << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0) out << (i + 1) << " " << (j + 1) << " " << m(i, j) << "\n";
}

/// Whitespace-separated decimal vector.
inline Eigen::VectorXd read_vector_text(std::istream& in) {
    std::vector<double> vals;
    double v;
    while (in >> v) vals.push_back(v);
    Eigen::VectorXd x(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) x(static_cast<Eigen::Index>(i)) = vals[i];
    return x;
}

} // namespace complexforge

#endif
