#include "ggs/linalg.hpp"

#include <utility>

namespace ggs {

namespace {

// dst += factor * src; fast path for characteristic 2 with log tables
void axpy(const Field& f, Field::Element factor, const std::uint32_t* src, std::uint32_t* dst, std::int64_t len) {
    if (factor.code == 0) return;
    if (f.p() == 2 && f.has_tables()) {
        const std::int64_t go = f.size() - 1;
        const std::int64_t lf = f.log(factor);
        for (std::int64_t j = 0; j < len; ++j) {
            if (src[j] == 0) continue;
            std::int64_t s = lf + f.log(Field::Element{src[j]});
            if (s >= go) s -= go;
            dst[j] ^= f.exp(s).code;
        }
        return;
    }
    for (std::int64_t j = 0; j < len; ++j) {
        Field::Element v = f.add(Field::Element{dst[j]}, f.mul(factor, Field::Element{src[j]}));
        dst[j] = v.code;
    }
}

void scale_row(const Field& f, Field::Element factor, std::uint32_t* row, std::int64_t len) {
    for (std::int64_t j = 0; j < len; ++j) row[j] = f.mul(factor, Field::Element{row[j]}).code;
}

struct Echelon {
    GFMatrix m;
    std::vector<std::int64_t> pivot_cols;  // pivot_cols[i] = column of the pivot in row i
};

Echelon eliminate(const Field& f, GFMatrix m) {
    const std::int64_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> pivots;
    std::int64_t next_row = 0;
    for (std::int64_t col = 0; col < cols && next_row < rows; ++col) {
        std::int64_t pr = -1;
        for (std::int64_t r = next_row; r < rows; ++r) {
            if (m.get(r, col).code != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != next_row) {
            for (std::int64_t j = 0; j < cols; ++j) {
                std::uint32_t tmp = m.row_data(pr)[j];
                m.row_data(pr)[j] = m.row_data(next_row)[j];
                m.row_data(next_row)[j] = tmp;
            }
        }
        Field::Element piv = m.get(next_row, col);
        if (piv != f.one()) scale_row(f, f.inv(piv), m.row_data(next_row), cols);
        for (std::int64_t r = 0; r < rows; ++r) {
            if (r == next_row) continue;
            Field::Element factor = m.get(r, col);
            if (factor.code == 0) continue;
            axpy(f, f.neg(factor), m.row_data(next_row), m.row_data(r), cols);
        }
        pivots.push_back(col);
        ++next_row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::int64_t rank(const Field& f, GFMatrix m) {
    return static_cast<std::int64_t>(eliminate(f, std::move(m)).pivot_cols.size());
}

GFMatrix rref(const Field& f, GFMatrix m) { return eliminate(f, std::move(m)).m; }

GFMatrix row_basis(const Field& f, const GFMatrix& m) {
    Echelon e = eliminate(f, m);
    const std::int64_t k = static_cast<std::int64_t>(e.pivot_cols.size());
    GFMatrix out(k, m.cols());
    for (std::int64_t r = 0; r < k; ++r)
        for (std::int64_t j = 0; j < m.cols(); ++j) out.set(r, j, e.m.get(r, j));
    return out;
}

GFMatrix nullspace(const Field& f, const GFMatrix& m) {
    Echelon e = eliminate(f, m);
    const std::int64_t cols = m.cols();
    const std::int64_t r = static_cast<std::int64_t>(e.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (std::int64_t c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    GFMatrix out(cols - r, cols);
    std::int64_t row_out = 0;
    for (std::int64_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        out.set(row_out, fc, f.one());
        for (std::int64_t i = 0; i < r; ++i) out.set(row_out, e.pivot_cols[static_cast<std::size_t>(i)], f.neg(e.m.get(i, fc)));
        ++row_out;
    }
    return out;
}

Field::Element dot(const Field& f, const std::uint32_t* a, const std::uint32_t* b, std::int64_t len) {
    Field::Element acc = f.zero();
    if (f.p() == 2 && f.has_tables()) {
        const std::int64_t go = f.size() - 1;
        std::uint32_t acc_code = 0;
        for (std::int64_t j = 0; j < len; ++j) {
            if (a[j] == 0 || b[j] == 0) continue;
            std::int64_t s = std::int64_t{f.log(Field::Element{a[j]})} + f.log(Field::Element{b[j]});
            if (s >= go) s -= go;
            acc_code ^= f.exp(s).code;
        }
        return Field::Element{acc_code};
    }
    for (std::int64_t j = 0; j < len; ++j) acc = f.add(acc, f.mul(Field::Element{a[j]}, Field::Element{b[j]}));
    return acc;
}

}  // namespace ggs
