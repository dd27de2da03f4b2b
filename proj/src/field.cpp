#include "torq/field.hpp"

namespace torq {

fmat mat_mul(const fp_field& F, const fmat& A, const fmat& B) {
    if (A.cols != B.rows)
        throw std::logic_error("mat_mul: shape mismatch");
    fmat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            uint32_t v = A.at(i, k);
            if (!v)
                continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
        }
    return C;
}

fmat mat_add(const fp_field& F, const fmat& A, const fmat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::logic_error("mat_add: shape mismatch");
    fmat C = A;
    for (size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.add(C.a[i], B.a[i]);
    return C;
}

fmat mat_sub(const fp_field& F, const fmat& A, const fmat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::logic_error("mat_sub: shape mismatch");
    fmat C = A;
    for (size_t i = 0; i < C.a.size(); ++i)
        C.a[i] = F.sub(C.a[i], B.a[i]);
    return C;
}

fmat mat_scale(const fp_field& F, uint32_t c, const fmat& A) {
    fmat C = A;
    for (auto& v : C.a)
        v = F.mul(v, c);
    return C;
}

fmat mat_transpose(const fmat& A) {
    fmat C(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            C.at(j, i) = A.at(i, j);
    return C;
}

fmat mat_hstack(const fmat& A, const fmat& B) {
    if (A.rows != B.rows)
        throw std::logic_error("mat_hstack: row mismatch");
    fmat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j)
            C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j)
            C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

std::vector<int> rref(const fp_field& F, fmat& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < M.cols; ++j)
                std::swap(M.at(piv, j), M.at(r, j));
        uint32_t inv = F.inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j)
            M.at(r, j) = F.mul(M.at(r, j), inv);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r)
                continue;
            uint32_t f = M.at(i, c);
            if (!f)
                continue;
            for (int j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const fp_field& F, fmat M) { return static_cast<int>(rref(F, M).size()); }

fmat kernel_basis(const fp_field& F, fmat M) {
    std::vector<int> pivots = rref(F, M);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < M.cols; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    fmat K(static_cast<int>(free_cols.size()), M.cols);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        K.at(static_cast<int>(fi), fc) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            K.at(static_cast<int>(fi), pivots[pi]) =
                F.neg(M.at(static_cast<int>(pi), fc));
    }
    return K;
}

bool solve(const fp_field& F, const fmat& A, const std::vector<uint32_t>& b,
           std::vector<uint32_t>& x) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::logic_error("solve: rhs size mismatch");
    fmat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j)
            aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i] % F.p;
    }
    std::vector<int> pivots = rref(F, aug);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        if (pivots[pi] == A.cols)
            return false;  // inconsistent
    x.assign(A.cols, 0);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[pivots[pi]] = aug.at(static_cast<int>(pi), A.cols);
    return true;
}

bool solve_mat(const fp_field& F, const fmat& A, const fmat& B, fmat& X) {
    if (B.rows != A.rows)
        throw std::logic_error("solve_mat: shape mismatch");
    fmat aug = mat_hstack(A, B);
    std::vector<int> pivots = rref(F, aug);
    for (int c : pivots)
        if (c >= A.cols)
            return false;
    X = fmat(A.cols, B.cols);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (int j = 0; j < B.cols; ++j)
            X.at(pivots[pi], j) = aug.at(static_cast<int>(pi), A.cols + j);
    return true;
}

fmat mat_inverse(const fp_field& F, const fmat& A) {
    if (A.rows != A.cols)
        throw std::logic_error("mat_inverse: not square");
    fmat X;
    if (!solve_mat(F, A, fmat::identity(A.rows), X) || rank(F, A) != A.rows)
        throw std::domain_error("mat_inverse: singular matrix");
    return X;
}

std::vector<uint32_t> row_space::reduce(std::vector<uint32_t> v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t c = v[pivots[i]];
        if (!c)
            continue;
        for (int j = 0; j < cols; ++j)
            v[j] = F->sub(v[j], F->mul(c, rows[i][j]));
    }
    return v;
}

bool row_space::contains(const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> r = reduce(v);
    for (uint32_t c : r)
        if (c)
            return false;
    return true;
}

bool row_space::add(std::vector<uint32_t> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < cols; ++j)
        if (v[j]) {
            piv = j;
            break;
        }
    if (piv < 0)
        return false;
    uint32_t inv = F->inv(v[piv]);
    for (int j = 0; j < cols; ++j)
        v[j] = F->mul(v[j], inv);
    // keep earlier rows reduced against the new one
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t c = rows[i][piv];
        if (!c)
            continue;
        for (int j = 0; j < cols; ++j)
            rows[i][j] = F->sub(rows[i][j], F->mul(c, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
}

}  // namespace torq
