#include "tripart/gf2.hpp"

#include "tripart/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tripart {

namespace {

inline Word bit_mask(Index i) { return Word{1} << (i % kWordBits); }

MaybeIndex highest_in(const Word* words, std::size_t n_words) {
    for (std::size_t w = n_words; w-- > 0;) {
        if (words[w] != 0)
            return w * kWordBits + (kWordBits - 1 - std::countl_zero(words[w]));
    }
    return std::nullopt;
}

} // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::from_indices(std::size_t size, std::span<const Index> ones) {
    BitVector v(size);
    for (Index i : ones)
        v.flip(i);
    return v;
}

void BitVector::resize(std::size_t size) {
    if (size < size_) {
        for (Index i = size; i < std::min(size_, words_for(size) * kWordBits); ++i)
            words_[i / kWordBits] &= ~bit_mask(i);
    }
    size_ = size;
    words_.resize(words_for(size), 0);
}

bool BitVector::test(Index i) const {
    if (i >= size_)
        throw Error(ErrorCode::IndexOutOfRange, "bit index " + std::to_string(i) + " out of range");
    return (words_[i / kWordBits] & bit_mask(i)) != 0;
}

void BitVector::set(Index i, bool value) {
    if (i >= size_)
        throw Error(ErrorCode::IndexOutOfRange, "bit index " + std::to_string(i) + " out of range");
    if (value)
        words_[i / kWordBits] |= bit_mask(i);
    else
        words_[i / kWordBits] &= ~bit_mask(i);
}

void BitVector::flip(Index i) {
    if (i >= size_)
        throw Error(ErrorCode::IndexOutOfRange, "bit index " + std::to_string(i) + " out of range");
    words_[i / kWordBits] ^= bit_mask(i);
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ > size_)
        throw Error(ErrorCode::SizeMismatch, "cannot add a longer bit vector in place");
    for (std::size_t w = 0; w < other.words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

MaybeIndex BitVector::highest() const noexcept { return highest_in(words_.data(), words_.size()); }

MaybeIndex BitVector::lowest() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0)
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
}

MaybeIndex BitVector::highest_below(Index bound) const noexcept {
    bound = std::min(bound, size_);
    if (bound == 0)
        return std::nullopt;
    const Index last = bound - 1;
    const std::size_t w = last / kWordBits;
    const std::size_t shift = kWordBits - 1 - last % kWordBits;
    const Word head = (words_[w] << shift) >> shift;
    if (head != 0)
        return w * kWordBits + (kWordBits - 1 - std::countl_zero(head));
    return highest_in(words_.data(), w);
}

bool BitVector::dot(const BitVector& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    Word acc = 0;
    for (std::size_t w = 0; w < n; ++w)
        acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

std::vector<Index> BitVector::ones() const {
    std::vector<Index> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (Word w : v.words())
        h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Gf2Matrix::Gf2Matrix(std::size_t n) : n_(n), words_per_col_(words_for(n)), bits_(n * words_for(n), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (Index i = 0; i < n; ++i)
        m.col_ptr(i)[i / kWordBits] |= bit_mask(i);
    return m;
}

void Gf2Matrix::check_index(Index i, const char* what) const {
    if (i >= n_)
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(what) + " index " + std::to_string(i) + " out of range for size " +
                        std::to_string(n_));
}

bool Gf2Matrix::get(Index i, Index j) const {
    check_index(i, "row");
    check_index(j, "column");
    return (col_ptr(j)[i / kWordBits] & bit_mask(i)) != 0;
}

void Gf2Matrix::set(Index i, Index j, bool value) {
    check_index(i, "row");
    check_index(j, "column");
    Word& w = col_ptr(j)[i / kWordBits];
    if (value)
        w |= bit_mask(i);
    else
        w &= ~bit_mask(i);
}

void Gf2Matrix::col_add(Index src, Index dst) {
    check_index(src, "column");
    check_index(dst, "column");
    if (src == dst)
        throw Error(ErrorCode::IndexOutOfRange, "col_add requires distinct columns");
    const Word* s = col_ptr(src);
    Word* d = col_ptr(dst);
    for (std::size_t w = 0; w < words_per_col_; ++w)
        d[w] ^= s[w];
}

void Gf2Matrix::row_add(Index src, Index dst) {
    check_index(src, "row");
    check_index(dst, "row");
    if (src == dst)
        throw Error(ErrorCode::IndexOutOfRange, "row_add requires distinct rows");
    const std::size_t sw = src / kWordBits;
    const std::size_t dw = dst / kWordBits;
    const Word sm = bit_mask(src);
    const Word dm = bit_mask(dst);
    for (Index j = 0; j < n_; ++j) {
        Word* col = col_ptr(j);
        if (col[sw] & sm)
            col[dw] ^= dm;
    }
}

MaybeIndex Gf2Matrix::low(Index j) const {
    check_index(j, "column");
    return highest_in(col_ptr(j), words_per_col_);
}

MaybeIndex Gf2Matrix::prev_in_column(Index j, Index bound) const {
    check_index(j, "column");
    if (bound == 0)
        return std::nullopt;
    bound = std::min(bound, n_);
    const Word* col = col_ptr(j);
    const Index last = bound - 1;
    std::size_t w = last / kWordBits;
    const std::size_t shift = kWordBits - 1 - last % kWordBits;
    Word head = (col[w] << shift) >> shift;
    if (head != 0)
        return w * kWordBits + (kWordBits - 1 - std::countl_zero(head));
    return highest_in(col, w);
}

MaybeIndex Gf2Matrix::left(Index i) const {
    check_index(i, "row");
    const std::size_t w = i / kWordBits;
    const Word m = bit_mask(i);
    for (Index j = 0; j < n_; ++j) {
        if (col_ptr(j)[w] & m)
            return j;
    }
    return std::nullopt;
}

bool Gf2Matrix::column_is_zero(Index j) const { return !low(j).has_value(); }

bool Gf2Matrix::row_is_zero(Index i) const { return !left(i).has_value(); }

BitVector Gf2Matrix::column(Index j) const {
    check_index(j, "column");
    BitVector v(n_);
    for (Index i : column_ones(j))
        v.set(i);
    return v;
}

BitVector Gf2Matrix::row(Index i) const {
    BitVector v(n_);
    for (Index j : row_ones(i))
        v.set(j);
    return v;
}

std::vector<Index> Gf2Matrix::column_ones(Index j) const {
    check_index(j, "column");
    std::vector<Index> out;
    const Word* col = col_ptr(j);
    for (std::size_t w = 0; w < words_per_col_; ++w) {
        Word bits = col[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Index> Gf2Matrix::row_ones(Index i) const {
    check_index(i, "row");
    std::vector<Index> out;
    const std::size_t w = i / kWordBits;
    const Word m = bit_mask(i);
    for (Index j = 0; j < n_; ++j) {
        if (col_ptr(j)[w] & m)
            out.push_back(j);
    }
    return out;
}

std::span<const Word> Gf2Matrix::column_words(Index j) const {
    check_index(j, "column");
    return {col_ptr(j), words_per_col_};
}

BitVector Gf2Matrix::apply(const BitVector& x) const {
    if (x.size() != n_)
        throw Error(ErrorCode::SizeMismatch, "vector length does not match matrix size");
    std::vector<Word> acc(words_per_col_, 0);
    for (Index j : x.ones()) {
        const Word* col = col_ptr(j);
        for (std::size_t w = 0; w < words_per_col_; ++w)
            acc[w] ^= col[w];
    }
    BitVector y(n_);
    for (std::size_t w = 0; w < words_per_col_; ++w) {
        Word bits = acc[w];
        while (bits != 0) {
            y.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return y;
}

BitVector Gf2Matrix::transpose_apply(const BitVector& x) const {
    if (x.size() != n_)
        throw Error(ErrorCode::SizeMismatch, "vector length does not match matrix size");
    BitVector y(n_);
    const auto xw = x.words();
    for (Index j = 0; j < n_; ++j) {
        const Word* col = col_ptr(j);
        Word acc = 0;
        for (std::size_t w = 0; w < words_per_col_; ++w)
            acc ^= col[w] & xw[w];
        if (std::popcount(acc) & 1)
            y.set(j);
    }
    return y;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(n_);
    for (Index j = 0; j < n_; ++j) {
        for (Index i : column_ones(j))
            t.col_ptr(i)[j / kWordBits] |= bit_mask(j);
    }
    return t;
}

Gf2Matrix Gf2Matrix::anti_transpose() const {
    Gf2Matrix t(n_);
    for (Index j = 0; j < n_; ++j) {
        for (Index i : column_ones(j)) {
            // this[i,j] lands at t[n-1-j, n-1-i]
            const Index ti = n_ - 1 - j;
            const Index tj = n_ - 1 - i;
            t.col_ptr(tj)[ti / kWordBits] |= bit_mask(ti);
        }
    }
    return t;
}

std::size_t Gf2Matrix::count_nonzero() const noexcept {
    std::size_t c = 0;
    for (Word w : bits_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Gf2Matrix::is_upper_triangular() const {
    for (Index j = 0; j < n_; ++j) {
        const MaybeIndex l = low(j);
        if (l && *l > j)
            return false;
    }
    return true;
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
    const std::size_t n = a.size();
    Gf2Matrix c(n);
    for (Index j = 0; j < n; ++j) {
        const BitVector col = a.apply(b.column(j));
        for (Index i : col.ones())
            c.set(i, j);
    }
    return c;
}

IntMatrix int_product(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
    const std::size_t n = a.size();
    IntMatrix c(n);
    for (Index j = 0; j < n; ++j) {
        for (Index k : b.column_ones(j)) {
            for (Index i : a.column_ones(k))
                c(i, j) += 1;
        }
    }
    return c;
}

} // namespace tripart
