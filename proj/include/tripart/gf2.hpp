#ifndef TRIPART_GF2_HPP
#define TRIPART_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tripart {

using Index = std::size_t;

/// Optional index; an empty value stands for the "no entry" sentinel that
/// Low and Left return on a zero column or row.
using MaybeIndex = std::optional<Index>;

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Dynamically sized vector over Z/2. Doubles as a chain or cochain on the
/// cells of a complex.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);
    static BitVector from_indices(std::size_t size, std::span<const Index> ones);

    std::size_t size() const noexcept { return size_; }
    void resize(std::size_t size);

    bool test(Index i) const;
    void set(Index i, bool value = true);
    void flip(Index i);

    /// In-place addition; `other` may be shorter than this vector.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool none() const noexcept;
    bool any() const noexcept { return !none(); }
    std::size_t count() const noexcept;
    MaybeIndex highest() const noexcept;
    MaybeIndex lowest() const noexcept;
    /// Largest set index strictly below `bound`.
    MaybeIndex highest_below(Index bound) const noexcept;

    /// Parity of the intersection with `other`.
    bool dot(const BitVector& other) const noexcept;

    std::vector<Index> ones() const;

    std::span<const Word> words() const noexcept { return words_; }

    friend bool operator==(const BitVector& a, const BitVector& b) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept;
};

/// Dense square integer matrix; only produced by int_product.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    long long& operator()(Index i, Index j) { return data_[i * n_ + j]; }
    long long operator()(Index i, Index j) const { return data_[i * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<long long> data_;
};

/// Square bit-packed 0/1 matrix, stored column-major. Row operations touch
/// every column; algorithms that need fast row access work on the
/// anti-transpose instead.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(std::size_t n);

    static Gf2Matrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    bool get(Index i, Index j) const;
    void set(Index i, Index j, bool value = true);

    /// column dst += column src
    void col_add(Index src, Index dst);
    /// row dst += row src
    void row_add(Index src, Index dst);

    /// Largest row index with a 1 in column j.
    MaybeIndex low(Index j) const;
    /// Smallest column index with a 1 in row i.
    MaybeIndex left(Index i) const;
    /// Largest row index strictly below `bound` with a 1 in column j.
    MaybeIndex prev_in_column(Index j, Index bound) const;

    bool column_is_zero(Index j) const;
    bool row_is_zero(Index i) const;

    BitVector column(Index j) const;
    BitVector row(Index i) const;
    std::vector<Index> column_ones(Index j) const;
    std::vector<Index> row_ones(Index i) const;
    std::span<const Word> column_words(Index j) const;

    /// Returns M x over Z/2.
    BitVector apply(const BitVector& x) const;
    /// Returns M^T x over Z/2.
    BitVector transpose_apply(const BitVector& x) const;

    Gf2Matrix transpose() const;
    /// Reflection across the minor diagonal: result[i,j] = this[n-1-j, n-1-i].
    /// Maps upper-triangular matrices to upper-triangular matrices.
    Gf2Matrix anti_transpose() const;

    std::size_t count_nonzero() const noexcept;
    bool is_upper_triangular() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    void check_index(Index i, const char* what) const;
    Word* col_ptr(Index j) { return bits_.data() + j * words_per_col_; }
    const Word* col_ptr(Index j) const { return bits_.data() + j * words_per_col_; }

    std::size_t n_ = 0;
    std::size_t words_per_col_ = 0;
    std::vector<Word> bits_;
};

/// Product over Z/2.
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);

/// Product of two 0/1 matrices computed over the integers, so 1 + 1 = 2.
IntMatrix int_product(const Gf2Matrix& a, const Gf2Matrix& b);

} // namespace tripart

#endif
