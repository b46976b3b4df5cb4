#include "dcrit/linalg.hpp"

#include <stdexcept>

namespace dcrit {

void SparseMat::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMat::set");
    if (v == 0)
        columns[static_cast<size_t>(c)].erase(r);
    else
        columns[static_cast<size_t>(c)][r] = v;
}

void SparseMat::add(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMat::add");
    auto& col = columns[static_cast<size_t>(c)];
    auto it = col.find(r);
    if (it == col.end()) {
        if (v != 0) col[r] = v;
    } else {
        it->second += v;
        if (it->second == 0) col.erase(it);
    }
}

bool SparseMat::is_zero() const {
    for (const auto& c : columns)
        if (!c.empty()) return false;
    return true;
}

SparseMat mat_mul(const SparseMat& a, const SparseMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul shape mismatch");
    SparseMat out(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        for (const auto& [k, bv] : b.columns[static_cast<size_t>(j)]) {
            for (const auto& [i, av] : a.columns[static_cast<size_t>(k)]) {
                Rat v = av * bv;
                out.add(i, j, v);
            }
        }
    }
    return out;
}

SparseVec RrefReducer::reduce(SparseVec v) const {
    SparseVec out;
    while (!v.empty()) {
        int lead = v.begin()->first;
        Rat val = v.begin()->second;
        v.erase(v.begin());
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            out[lead] = val;
            continue;
        }
        // Eliminate: entries produced here sit at indices > lead, so they
        // are still ahead of the scan.
        for (const auto& [i, c] : it->second) {
            if (i == lead) continue;
            Rat delta = val * c;
            auto vit = v.find(i);
            if (vit == v.end()) {
                v[i] = -delta;
            } else {
                vit->second -= delta;
                if (vit->second == 0) v.erase(vit);
            }
        }
    }
    return out;
}

bool RrefReducer::add(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    int pivot = r.begin()->first;
    Rat lead = r.begin()->second;
    SparseVec norm;
    for (const auto& [i, c] : r) {
        Rat nc = c / lead;
        norm[i] = nc;
    }
    // Back-substitute into existing rows to keep the reduced form.
    for (auto& [p, row] : rows_) {
        auto it = row.find(pivot);
        if (it == row.end()) continue;
        Rat f = it->second;
        for (const auto& [i, c] : norm) {
            Rat delta = f * c;
            auto rit = row.find(i);
            if (rit == row.end()) {
                row[i] = -delta;
            } else {
                rit->second -= delta;
                if (rit->second == 0) row.erase(rit);
            }
        }
    }
    rows_[pivot] = std::move(norm);
    return true;
}

EliminationResult kernel_and_rank(const SparseMat& m) {
    // Row-reduce m; track the reduced rows by pivot column.
    // Rows are assembled from the column-major storage once.
    std::vector<SparseVec> rows(static_cast<size_t>(m.rows));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[static_cast<size_t>(j)])
            rows[static_cast<size_t>(i)][j] = v;

    std::map<int, SparseVec> echelon; // pivot column -> row
    std::vector<bool> used(static_cast<size_t>(m.rows), false);
    for (int col = 0; col < m.cols; ++col) {
        int pivot_row = -1;
        for (int i = 0; i < m.rows; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            auto it = rows[static_cast<size_t>(i)].find(col);
            if (it != rows[static_cast<size_t>(i)].end()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        used[static_cast<size_t>(pivot_row)] = true;
        SparseVec& prow = rows[static_cast<size_t>(pivot_row)];
        Rat lead = prow[col];
        SparseVec norm;
        for (const auto& [j, v] : prow) {
            Rat nv = v / lead;
            norm[j] = nv;
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == pivot_row) continue;
            auto& row = rows[static_cast<size_t>(i)];
            auto it = row.find(col);
            if (it == row.end()) continue;
            Rat f = it->second;
            for (const auto& [j, v] : norm) {
                Rat delta = f * v;
                auto rit = row.find(j);
                if (rit == row.end()) {
                    row[j] = -delta;
                } else {
                    rit->second -= delta;
                    if (rit->second == 0) row.erase(rit);
                }
            }
        }
        echelon[col] = std::move(norm);
    }

    EliminationResult out;
    out.rank = static_cast<int>(echelon.size());
    for (int col = 0; col < m.cols; ++col) {
        if (echelon.count(col)) continue;
        SparseVec k;
        k[col] = Rat(1);
        for (const auto& [p, row] : echelon) {
            auto it = row.find(col);
            if (it != row.end()) k[p] = -it->second;
        }
        out.kernel.push_back(std::move(k));
    }
    return out;
}

} // namespace dcrit
