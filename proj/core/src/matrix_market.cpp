#include "lanfa/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lanfa {

namespace {

constexpr Index kDensifyLimit = 2000;

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '%')
            continue;
        return line;
    }
    throw ValidationError("matrix market: unexpected end of file");
}

} // namespace

SymmetricOperator read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("matrix market: cannot open '" + path + "'");

    std::string header;
    if (!std::getline(in, header))
        throw ValidationError("matrix market: empty file '" + path + "'");
    if (!header.empty() && header.back() == '\r')
        header.pop_back();

    std::istringstream hs(lowercase(header));
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix")
        throw ValidationError("matrix market: unsupported header '" + header + "'");

    if (format == "coordinate" && field == "real" && symmetry == "symmetric") {
        std::istringstream sizes(next_data_line(in));
        Index rows = 0, cols = 0;
        long long nnz = 0;
        sizes >> rows >> cols >> nnz;
        if (!sizes || rows <= 0 || rows != cols || nnz < 0)
            throw ValidationError("matrix market: bad size line in '" + path + "'");
        std::vector<CooEntry> entries;
        entries.reserve(static_cast<std::size_t>(nnz));
        for (long long e = 0; e < nnz; ++e) {
            std::istringstream es(next_data_line(in));
            Index i = 0, j = 0;
            double v = 0.0;
            es >> i >> j >> v;
            if (!es)
                throw ValidationError("matrix market: malformed entry line in '" + path + "'");
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw ValidationError("matrix market: index out of range (" + std::to_string(i) +
                                      "," + std::to_string(j) + ") in '" + path + "'");
            entries.push_back({i - 1, j - 1, v});
        }
        if (rows > kDensifyLimit)
            return SymmetricOperator::sparse(rows, std::move(entries));
        Matrix m = Matrix::Zero(rows, rows);
        for (const auto& e : entries) {
            m(e.row, e.col) += e.value;
            if (e.row != e.col)
                m(e.col, e.row) += e.value;
        }
        return SymmetricOperator::dense(std::move(m));
    }

    if (format == "array" && field == "real" && symmetry == "general") {
        std::istringstream sizes(next_data_line(in));
        Index rows = 0, cols = 0;
        sizes >> rows >> cols;
        if (!sizes || rows <= 0 || rows != cols)
            throw ValidationError("matrix market: array payload must be square in '" + path + "'");
        Matrix m(rows, cols);
        // column-major per the exchange format
        for (Index j = 0; j < cols; ++j) {
            for (Index i = 0; i < rows; ++i) {
                std::istringstream vs(next_data_line(in));
                double v = 0.0;
                vs >> v;
                if (!vs)
                    throw ValidationError("matrix market: malformed value line in '" + path + "'");
                m(i, j) = v;
            }
        }
        const double scale = std::max(m.norm(), 1e-300);
        if ((m - m.transpose()).norm() > 1e-12 * scale)
            throw ValidationError("matrix market: dense payload in '" + path +
                                  "' is not symmetric");
        return SymmetricOperator::dense(std::move(m));
    }

    throw ValidationError("matrix market: unsupported header '" + header + "'");
}

void write_matrix_market(const SymmetricOperator& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("matrix market: cannot write '" + path + "'");
    out << "%%MatrixMarket matrix coordinate real symmetric\n";

    const Index n = a.dim();
    std::vector<CooEntry> entries;
    if (a.kind() == OperatorKind::Diagonal) {
        const Vector& d = a.diagonal_spectrum();
        for (Index i = 0; i < n; ++i)
            if (d[i] != 0.0)
                entries.push_back({i, i, d[i]});
    } else {
        const Matrix m = a.to_dense();
        for (Index j = 0; j < n; ++j)
            for (Index i = j; i < n; ++i)
                if (m(i, j) != 0.0)
                    entries.push_back({i, j, m(i, j)});
    }

    out << n << " " << n << " " << entries.size() << "\n";
    char buf[96];
    for (const auto& e : entries) {
        std::snprintf(buf, sizeof buf, "%lld %lld %.17g\n",
                      static_cast<long long>(e.row + 1), static_cast<long long>(e.col + 1),
                      e.value);
        out << buf;
    }
    if (!out)
        throw ValidationError("matrix market: write failed for '" + path + "'");
}

} // namespace lanfa
