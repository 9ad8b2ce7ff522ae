#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace grpolab {

// Sparse vector over tabular-policy coordinates: one fixed-width row of
// reals per context key. Absent keys are implicitly zero rows. std::map keeps
// iteration (and therefore accumulation and dump order) deterministic.
class SparseVec {
public:
    using Table = std::map<std::string, std::vector<double>>;

    SparseVec() = default;
    explicit SparseVec(std::size_t row_width) : row_width_(row_width) {}

    std::size_t row_width() const { return row_width_; }
    bool empty() const { return rows_.empty(); }
    std::size_t size() const { return rows_.size(); }

    const Table& rows() const { return rows_; }

    std::vector<double>& row(const std::string& key) {
        auto it = rows_.find(key);
        if (it == rows_.end()) {
            it = rows_.emplace(key, std::vector<double>(row_width_, 0.0)).first;
        }
        return it->second;
    }

    const std::vector<double>* find(const std::string& key) const {
        auto it = rows_.find(key);
        return it == rows_.end() ? nullptr : &it->second;
    }

    // this += coeff * (unit vector at [key][index])
    void add_at(const std::string& key, std::size_t index, double coeff) {
        row(key)[index] += coeff;
    }

    // this += coeff * other
    void axpy(const SparseVec& other, double coeff) {
        for (const auto& [key, vals] : other.rows_) {
            auto& dst = row(key);
            for (std::size_t i = 0; i < vals.size(); ++i) dst[i] += coeff * vals[i];
        }
    }

    void scale(double c) {
        for (auto& [key, vals] : rows_) {
            for (double& v : vals) v *= c;
        }
    }

    double l2_norm() const {
        double acc = 0.0;
        for (const auto& [key, vals] : rows_) {
            for (double v : vals) acc += v * v;
        }
        return std::sqrt(acc);
    }

    double linf_norm() const {
        double m = 0.0;
        for (const auto& [key, vals] : rows_) {
            for (double v : vals) m = std::max(m, std::abs(v));
        }
        return m;
    }

    bool all_finite() const {
        for (const auto& [key, vals] : rows_) {
            for (double v : vals) {
                if (!std::isfinite(v)) return false;
            }
        }
        return true;
    }

private:
    std::size_t row_width_ = 0;
    Table rows_;
};

} // namespace grpolab
