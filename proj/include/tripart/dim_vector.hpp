#ifndef TRIPART_DIM_VECTOR_HPP
#define TRIPART_DIM_VECTOR_HPP

#include <cstddef>
#include <vector>

namespace tripart {

/// Values indexed by dimension p = -1 .. max_dim.
template <class T>
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(int max_dim, const T& init = T{})
        : values_(static_cast<std::size_t>(max_dim + 2), init) {}

    int min_dim() const noexcept { return -1; }
    int max_dim() const noexcept { return static_cast<int>(values_.size()) - 2; }
    bool contains(int p) const noexcept { return p >= -1 && p <= max_dim(); }

    T& operator[](int p) { return values_[static_cast<std::size_t>(p + 1)]; }
    const T& operator[](int p) const { return values_[static_cast<std::size_t>(p + 1)]; }

    /// Value at p, or `fallback` outside -1 .. max_dim.
    T value_or(int p, const T& fallback) const { return contains(p) ? (*this)[p] : fallback; }

    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    std::vector<T> values_;
};

} // namespace tripart

#endif
