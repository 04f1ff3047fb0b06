#include "tripart/complex.hpp"

#include "tripart/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace tripart {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Splits into lines with comments removed; yields (1-based line, content).
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            out.emplace_back(line_no, line);
    }
    return out;
}

std::vector<long long> parse_integers(std::string_view s, std::size_t line) {
    std::vector<long long> out;
    while (true) {
        s = trim(s);
        if (s.empty())
            break;
        const auto end = s.find_first_of(" \t");
        const std::string_view token = s.substr(0, end);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(token) + "'", line);
        out.push_back(value);
        if (end == std::string_view::npos)
            break;
        s = s.substr(end);
    }
    return out;
}

std::string location(std::size_t line) { return line ? " (line " + std::to_string(line) + ")" : std::string{}; }

} // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::NonMonotonic: return "NON_MONOTONIC";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::DdZeroViolation: return "DDZERO_VIOLATION";
    case ErrorCode::MissingFace: return "MISSING_FACE";
    case ErrorCode::DuplicateCell: return "DUPLICATE_CELL";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::OrderingMismatch: return "ORDERING_MISMATCH";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::InconsistentInputs: return "INCONSISTENT_INPUTS";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message + location(line)), code_(code),
      line_(line) {}

OrderedComplex::OrderedComplex() : OrderedComplex(std::vector<Cell>{Cell{0, -1, {}}}) {}

OrderedComplex::OrderedComplex(std::vector<Cell> cells) {
    if (cells.empty() || cells[0].dim != -1 || cells[0].id != 0 || !cells[0].faces.empty())
        throw Error(ErrorCode::DimMismatch, "cell 0 must be the empty cell");
    ComplexBuilder builder;
    for (Index i = 1; i < cells.size(); ++i) {
        if (cells[i].id != i)
            throw Error(ErrorCode::OrderingMismatch, "cell id " + std::to_string(cells[i].id) +
                                                         " at position " + std::to_string(i));
        builder.add(cells[i].dim, cells[i].faces);
    }
    cells_ = std::move(cells);
    for (auto& c : cells_)
        std::sort(c.faces.begin(), c.faces.end());
    for (const auto& c : cells_)
        max_dim_ = std::max(max_dim_, c.dim);
    counts_ = DimVector<std::size_t>(max_dim_, 0);
    for (const auto& c : cells_)
        ++counts_[c.dim];
}

std::vector<Index> OrderedComplex::cells_of_dim(int p) const {
    std::vector<Index> out;
    for (const auto& c : cells_) {
        if (c.dim == p)
            out.push_back(c.id);
    }
    return out;
}

ComplexBuilder::ComplexBuilder() : cells_{Cell{0, -1, {}}} {}

Index ComplexBuilder::add(int dim, std::vector<Index> faces, std::size_t line) {
    const Index id = cells_.size();
    if (dim < 0)
        throw Error(ErrorCode::Parse, "cell dimension must be nonnegative", line);
    std::sort(faces.begin(), faces.end());
    if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
        throw Error(ErrorCode::Parse, "face listed twice", line);
    for (Index f : faces) {
        if (f >= id)
            throw Error(ErrorCode::NonMonotonic,
                        "face " + std::to_string(external_index(f)) + " does not precede cell " +
                            std::to_string(external_index(id)),
                        line);
        if (cells_[f].dim != dim - 1)
            throw Error(ErrorCode::DimMismatch,
                        "face " + std::to_string(external_index(f)) + " has dimension " +
                            std::to_string(cells_[f].dim) + ", expected " + std::to_string(dim - 1),
                        line);
    }
    if (dim == 0 && faces.size() != 1)
        throw Error(ErrorCode::DimMismatch, "a vertex has the empty cell as its only face", line);

    // Over Z/2 the boundary of the boundary must vanish: every (dim-2)-cell
    // occurs in an even number of the faces.
    std::map<Index, int> parity;
    for (Index f : faces) {
        for (Index g : cells_[f].faces)
            parity[g] ^= 1;
    }
    for (const auto& [g, odd] : parity) {
        if (odd)
            throw Error(ErrorCode::DdZeroViolation,
                        "cell " + std::to_string(external_index(g)) +
                            " occurs in an odd number of faces of cell " + std::to_string(external_index(id)),
                        line);
    }
    cells_.push_back(Cell{id, dim, std::move(faces)});
    return id;
}

OrderedComplex ComplexBuilder::build() && { return OrderedComplex(std::move(cells_)); }

OrderedComplex from_boundary_format(std::string_view text) {
    ComplexBuilder builder;
    for (const auto& [line_no, line] : content_lines(text)) {
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw Error(ErrorCode::Parse, "missing ':' after the cell dimension", line_no);
        const auto dims = parse_integers(line.substr(0, colon), line_no);
        if (dims.size() != 1)
            throw Error(ErrorCode::Parse, "expected exactly one dimension before ':'", line_no);
        if (dims[0] < 0)
            throw Error(ErrorCode::Parse, "cell dimension must be nonnegative", line_no);
        std::vector<Index> faces;
        if (dims[0] == 0)
            faces.push_back(0);
        for (long long f : parse_integers(line.substr(colon + 1), line_no)) {
            if (f < 0)
                throw Error(ErrorCode::Parse, "face indices must be nonnegative", line_no);
            faces.push_back(static_cast<Index>(f) + 1);
        }
        builder.add(static_cast<int>(dims[0]), std::move(faces), line_no);
    }
    return std::move(builder).build();
}

OrderedComplex from_simplicial_format(std::string_view text, bool complete) {
    using Simplex = std::vector<long long>;
    ComplexBuilder builder;
    std::map<Simplex, Index> index_of;

    auto insert = [&](auto&& self, const Simplex& s, std::size_t line) -> Index {
        std::vector<Index> faces;
        if (s.size() == 1) {
            faces.push_back(0);
        } else {
            std::vector<Simplex> facets;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex f;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    if (k != drop)
                        f.push_back(s[k]);
                }
                facets.push_back(std::move(f));
            }
            std::sort(facets.begin(), facets.end());
            for (const auto& f : facets) {
                if (auto it = index_of.find(f); it != index_of.end()) {
                    faces.push_back(it->second);
                    continue;
                }
                if (!complete) {
                    std::ostringstream os;
                    os << "face {";
                    for (std::size_t k = 0; k < f.size(); ++k)
                        os << (k ? " " : "") << f[k];
                    os << "} is not listed before its coface";
                    throw Error(ErrorCode::MissingFace, os.str(), line);
                }
                faces.push_back(self(self, f, line));
            }
        }
        const Index id = builder.add(static_cast<int>(s.size()) - 1, std::move(faces), line);
        index_of.emplace(s, id);
        return id;
    };

    for (const auto& [line_no, line] : content_lines(text)) {
        const Simplex s = parse_integers(line, line_no);
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0)
                throw Error(ErrorCode::Parse, "vertex labels must be nonnegative", line_no);
            if (k > 0 && s[k] <= s[k - 1])
                throw Error(ErrorCode::Parse, "vertex labels must be strictly increasing", line_no);
        }
        if (index_of.contains(s))
            throw Error(ErrorCode::DuplicateCell, "simplex already present", line_no);
        insert(insert, s, line_no);
    }
    return std::move(builder).build();
}

std::string to_boundary_format(const OrderedComplex& k) {
    std::ostringstream os;
    for (Index i = 1; i < k.size(); ++i) {
        const Cell& c = k.cell(i);
        os << c.dim << " :";
        if (c.dim > 0) {
            for (Index f : c.faces)
                os << ' ' << external_index(f);
        }
        os << '\n';
    }
    return os.str();
}

Gf2Matrix boundary_matrix(const OrderedComplex& k) {
    Gf2Matrix d(k.size());
    for (const auto& c : k.cells()) {
        for (Index f : c.faces)
            d.set(f, c.id);
    }
    return d;
}

long long reduced_euler_characteristic(const OrderedComplex& k) {
    long long chi = 0;
    for (int p = -1; p <= k.dim(); ++p) {
        const auto n = static_cast<long long>(k.count(p));
        chi += (p % 2 == 0) ? n : -n;
    }
    return chi;
}

OrderedComplex prefix(const OrderedComplex& k, Index ell) {
    if (ell >= k.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "prefix end " + std::to_string(ell) + " out of range for " + std::to_string(k.size()) + " cells");
    return OrderedComplex(std::vector<Cell>(k.cells().begin(), k.cells().begin() + static_cast<std::ptrdiff_t>(ell + 1)));
}

OrderedComplex reordered(const OrderedComplex& k, std::span<const Index> order) {
    const std::size_t n = k.size();
    if (order.size() != n)
        throw Error(ErrorCode::SizeMismatch, "ordering length does not match the cell count");
    std::vector<Index> position(n, n);
    for (Index t = 0; t < n; ++t) {
        if (order[t] >= n || position[order[t]] != n)
            throw Error(ErrorCode::OrderingMismatch, "ordering is not a permutation");
        position[order[t]] = t;
    }
    if (order[0] != 0)
        throw Error(ErrorCode::OrderingMismatch, "the empty cell must come first");
    std::vector<Cell> cells;
    cells.reserve(n);
    for (Index t = 0; t < n; ++t) {
        const Cell& old = k.cell(order[t]);
        Cell c{t, old.dim, {}};
        for (Index f : old.faces)
            c.faces.push_back(position[f]);
        std::sort(c.faces.begin(), c.faces.end());
        cells.push_back(std::move(c));
    }
    return OrderedComplex(std::move(cells));
}

Chain boundary_of(const Gf2Matrix& boundary, const Chain& c) {
    const BitVector x = BitVector::from_indices(boundary.size(), c.cells);
    return Chain{c.dim - 1, boundary.apply(x).ones()};
}

Chain coboundary_of(const Gf2Matrix& boundary, const Chain& c) {
    const BitVector x = BitVector::from_indices(boundary.size(), c.cells);
    return Chain{c.dim + 1, boundary.transpose_apply(x).ones()};
}

} // namespace tripart
