// Copyright 2026 The qframe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qf/stdlib/matrix.hpp"

#include <algorithm>
#include <limits>

namespace qf {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Complex v = a(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ar = 0; ar < a.rows_; ++ar) {
        for (std::size_t ac = 0; ac < a.cols_; ++ac) {
            for (std::size_t br = 0; br < b.rows_; ++br) {
                for (std::size_t bc = 0; bc < b.cols_; ++bc) {
                    out(ar * b.rows_ + br, ac * b.cols_ + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

double maxAbsDiff(const CMatrix &a, const CMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        worst = std::max(worst, std::abs(a.data_[i] - b.data_[i]));
    }
    return worst;
}

} // namespace qf
