#include "tripart/tripartition.hpp"

#include "tripart/error.hpp"

#include <algorithm>
#include <string>

namespace tripart {

namespace {

TriPartition from_roles(std::vector<Role> roles, const std::vector<int>& dims) {
    int max_dim = -1;
    for (int d : dims)
        max_dim = std::max(max_dim, d);
    TriPartition tp{std::move(roles), DimVector<DimPartition>(max_dim)};
    for (Index c = 0; c < dims.size(); ++c) {
        DimPartition& part = tp.parts[dims[c]];
        switch (tp.role[c]) {
        case Role::Tree: part.tree.push_back(c); break;
        case Role::Cotree: part.cotree.push_back(c); break;
        case Role::Leftover: part.leftover.push_back(c); break;
        }
    }
    return tp;
}

std::vector<int> dims_of(const OrderedComplex& k) {
    std::vector<int> dims;
    dims.reserve(k.size());
    for (const auto& c : k.cells())
        dims.push_back(c.dim);
    return dims;
}

} // namespace

std::string_view to_string(Role role) {
    switch (role) {
    case Role::Tree: return "tree";
    case Role::Cotree: return "cotree";
    case Role::Leftover: return "leftover";
    }
    return "unknown";
}

TriPartition tri_partition(const OrderedComplex& k) { return tri_partition(reduce(k), k); }

TriPartition tri_partition(const Reductions& r, const OrderedComplex& k) {
    const std::size_t n = k.size();
    if (r.column.R.size() != n || r.row.Q.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "reductions do not match the complex size");
    std::vector<Role> roles(n, Role::Leftover);
    for (Index c = 0; c < n; ++c) {
        const bool in_tree = r.column.low[c].has_value();
        const bool in_cotree = r.row.left[c].has_value();
        if (in_tree && in_cotree)
            throw std::logic_error("cell " + std::to_string(c) + " has both a non-zero column and a non-zero row");
        if (in_tree)
            roles[c] = Role::Tree;
        else if (in_cotree)
            roles[c] = Role::Cotree;
    }
    return from_roles(std::move(roles), dims_of(k));
}

IncrementalTriPartition::IncrementalTriPartition() { add(Cell{0, -1, {}}); }

void IncrementalTriPartition::add(const Cell& cell) {
    const Index id = size();
    if (cell.id != id)
        throw Error(ErrorCode::OrderingMismatch,
                    "expected cell " + std::to_string(id) + ", got cell " + std::to_string(cell.id));
    for (Index f : cell.faces) {
        if (f >= id)
            throw Error(ErrorCode::NonMonotonic, "face " + std::to_string(f) + " does not precede the cell");
        if (dims_[f] != cell.dim - 1)
            throw Error(ErrorCode::DimMismatch, "face " + std::to_string(f) + " has the wrong dimension");
    }

    BitVector r = BitVector::from_indices(id + 1, cell.faces);
    BitVector u(id + 1);
    u.set(id);
    for (MaybeIndex row = r.highest(); row; row = r.highest_below(*row)) {
        if (const MaybeIndex l = pivot_of_[*row]) {
            r ^= r_[*l];
            u ^= u_[*l];
        }
    }

    dims_.push_back(cell.dim);
    pivot_of_.emplace_back();
    const MaybeIndex low = r.highest();
    lows_.push_back(low);
    r_.push_back(std::move(r));
    u_.push_back(std::move(u));
    if (!low) {
        // birth: a new p-cycle
        roles_.push_back(Role::Leftover);
        return;
    }
    // death: the class born at Low gets killed and its cell moves to the cotree
    roles_.push_back(Role::Tree);
    pivot_of_[*low] = id;
    if (roles_[*low] != Role::Leftover)
        throw std::logic_error("killed cell " + std::to_string(*low) + " was not a leftover cell");
    roles_[*low] = Role::Cotree;
}

TriPartition IncrementalTriPartition::partition() const { return from_roles(roles_, dims_); }

PersistenceDiagram persistence_diagram(const OrderedComplex& k) {
    return persistence_diagram(exhaustive_column_reduce(boundary_matrix(k)), k);
}

PersistenceDiagram persistence_diagram(const ColumnReduction& cr, const OrderedComplex& k) {
    const std::size_t n = k.size();
    if (cr.R.size() != n)
        throw Error(ErrorCode::InconsistentInputs, "reduction does not match the complex size");
    PersistenceDiagram diagram{n, {}, {}};
    std::vector<bool> paired(n, false);
    for (const auto& [i, j] : cr.pairs) {
        diagram.finite.push_back(DiagramPoint{k.dim(i), i, j});
        paired[i] = true;
    }
    for (Index c = 0; c < n; ++c) {
        if (!cr.low[c] && !paired[c])
            diagram.essential.push_back(DiagramPoint{k.dim(c), c, std::nullopt});
    }
    std::sort(diagram.finite.begin(), diagram.finite.end(),
              [](const DiagramPoint& a, const DiagramPoint& b) { return a.birth < b.birth; });
    return diagram;
}

long long betti_of_prefix(const PersistenceDiagram& diagram, Index ell, int p) {
    if (ell >= diagram.cell_count)
        throw Error(ErrorCode::IndexOutOfRange, "prefix end " + std::to_string(ell) + " out of range");
    long long count = 0;
    for (const auto& pt : diagram.finite) {
        if (pt.dim == p && pt.birth <= ell && ell < *pt.death)
            ++count;
    }
    for (const auto& pt : diagram.essential) {
        if (pt.dim == p && pt.birth <= ell)
            ++count;
    }
    return count;
}

long long relative_cohomology_rank(const PersistenceDiagram& diagram, std::size_t prefix_size, int p) {
    if (prefix_size > diagram.cell_count)
        throw Error(ErrorCode::IndexOutOfRange, "prefix size " + std::to_string(prefix_size) + " out of range");
    long long count = 0;
    for (const auto& pt : diagram.finite) {
        if (pt.dim == p - 1 && pt.birth < prefix_size && prefix_size <= *pt.death)
            ++count;
    }
    for (const auto& pt : diagram.essential) {
        if (pt.dim == p && pt.birth >= prefix_size)
            ++count;
    }
    return count;
}

} // namespace tripart
