// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_MATRIX_HPP
#define RISBEAM_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace risbeam {

/// Dense row-major 2-D array. Just storage with bounds implied by the owner;
/// all numerics in this library are explicit loops over cells or angles.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    std::vector<T>& storage() { return data_; }
    const std::vector<T>& storage() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

} // namespace risbeam

#endif
