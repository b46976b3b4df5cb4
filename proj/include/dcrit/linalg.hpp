#pragma once

#include <map>
#include <vector>

#include "dcrit/rational.hpp"

namespace dcrit {

using SparseVec = std::map<int, Rat>; // index -> nonzero coefficient

// Column-major sparse matrix over Q.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> columns; // columns[j]: row -> coeff

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), columns(static_cast<size_t>(c)) {}

    void set(int r, int c, const Rat& v);
    void add(int r, int c, const Rat& v);
    bool is_zero() const;
};

SparseMat mat_mul(const SparseMat& a, const SparseMat& b);

// Maintains a row basis in reduced row-echelon form. Deterministic: pivots
// are the smallest indices, rows normalized to leading coefficient 1.
class RrefReducer {
public:
    explicit RrefReducer(int dim) : dim_(dim) {}

    // Reduces v against the current basis; returns the residue.
    SparseVec reduce(SparseVec v) const;

    // Adds v to the span. Returns true if v was independent.
    bool add(const SparseVec& v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    int dim_;
    std::map<int, SparseVec> rows_; // pivot column -> normalized row
};

struct EliminationResult {
    int rank = 0;
    std::vector<SparseVec> kernel; // basis of ker(M) in K^cols, deterministic order
};

// Exact kernel and rank by pivoted rational elimination with a
// deterministic pivot order (first nonzero row per column).
EliminationResult kernel_and_rank(const SparseMat& m);

} // namespace dcrit
