#pragma once
#include <utility>

#include <stdexcept>
#include <vector>

namespace ckq {

/// Dense square matrix over any ring-like entry type (size never exceeds
/// N^2 x N^2 for N <= 7, so dense is the right shape).
template <class T>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), e_(size_t(n) * n) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int size() const { return n_; }
    T& at(int i, int k) { return e_[size_t(i) * n_ + k]; }
    const T& at(int i, int k) const { return e_[size_t(i) * n_ + k]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Mat: size mismatch");
        Mat out(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                T acc = out.at(i, k);
                for (int m = 0; m < a.n_; ++m) acc += a.at(i, m) * b.at(m, k);
                out.at(i, k) = acc;
            }
        return out;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Mat: size mismatch");
        Mat out(a.n_);
        for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
        return out;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Mat: size mismatch");
        Mat out(a.n_);
        for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
        return out;
    }

    Mat transpose() const {
        Mat out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) out.at(k, i) = at(i, k);
        return out;
    }

    template <class F>
    auto map(F f) const -> Mat<decltype(f(std::declval<const T&>()))> {
        Mat<decltype(f(std::declval<const T&>()))> out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) out.at(i, k) = f(at(i, k));
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

private:
    int n_ = 0;
    std::vector<T> e_;
};

}  // namespace ckq
