#include "render.hpp"

#include <sstream>

namespace tripart::tools {

namespace {

std::string dim_key(int p) { return "p=" + std::to_string(p); }

Json part_json(const DimPartition& part) {
    return Json{{"tree", members_json(part.tree)},
                {"cotree", members_json(part.cotree)},
                {"leftover", members_json(part.leftover)}};
}

Json point_json(const DiagramPoint& pt) {
    Json j{{"dim", pt.dim}, {"birth", external_index(pt.birth)}};
    j["death"] = pt.death ? Json(external_index(*pt.death)) : Json(nullptr);
    return j;
}

Json element_json(const BasisElement& e) {
    return Json{{"kind", std::string(to_string(e.kind))}, {"members", members_json(e.payload.cells)}};
}

} // namespace

std::string members_text(const std::vector<Index>& cells) {
    std::string s;
    for (std::size_t t = 0; t < cells.size(); ++t)
        s += (t ? " " : "") + std::to_string(external_index(cells[t]));
    return s;
}

Json members_json(const std::vector<Index>& cells) {
    Json a = Json::array();
    for (Index c : cells)
        a.push_back(external_index(c));
    return a;
}

std::string tripartition_text(const TriPartition& tp, const OrderedComplex& k, std::optional<int> dim) {
    std::ostringstream os;
    for (int p = -1; p <= k.dim(); ++p) {
        if (dim && p != *dim)
            continue;
        const DimPartition part = tp.at(p);
        os << dim_key(p) << " tree: " << members_text(part.tree) << '\n';
        os << dim_key(p) << " cotree: " << members_text(part.cotree) << '\n';
        os << dim_key(p) << " leftover: " << members_text(part.leftover) << '\n';
    }
    return os.str();
}

Json tripartition_json(const TriPartition& tp, const OrderedComplex& k, std::optional<int> dim) {
    Json j;
    j["cells"] = k.size() - 1;
    for (int p = 0; p <= k.dim(); ++p) {
        if (!dim || p == *dim)
            j[dim_key(p)] = part_json(tp.at(p));
    }
    if (!dim || *dim == -1)
        j["augmentation"] = Json{{dim_key(-1), part_json(tp.at(-1))}};
    return j;
}

std::string diagram_text(const PersistenceDiagram& d) {
    std::ostringstream os;
    for (const auto* points : {&d.finite, &d.essential}) {
        for (const DiagramPoint& pt : *points) {
            os << pt.dim << ' ' << external_index(pt.birth) << ' ';
            if (pt.death)
                os << external_index(*pt.death);
            else
                os << "inf";
            os << '\n';
        }
    }
    return os.str();
}

Json diagram_json(const PersistenceDiagram& d) {
    Json points = Json::array();
    Json augmentation = Json::array();
    for (const auto* list : {&d.finite, &d.essential}) {
        for (const DiagramPoint& pt : *list)
            (pt.dim < 0 ? augmentation : points).push_back(point_json(pt));
    }
    return Json{{"points", points}, {"augmentation", Json{{"points", augmentation}}}};
}

std::string bases_text(const CanonicalBasisSet& bs, std::optional<int> dim) {
    std::ostringstream os;
    for (Index c = 0; c < bs.size(); ++c) {
        if (dim && bs.dims[c] != *dim)
            continue;
        for (const BasisElement* e : {&bs.homology[c], &bs.cohomology[c]})
            os << external_index(c) << ' ' << to_string(e->kind) << ": " << members_text(e->payload.cells) << '\n';
    }
    return os.str();
}

Json bases_json(const CanonicalBasisSet& bs, std::optional<int> dim) {
    Json cells = Json::array();
    Json augmentation = Json::array();
    for (Index c = 0; c < bs.size(); ++c) {
        if (dim && bs.dims[c] != *dim)
            continue;
        Json j{{"cell", external_index(c)},
               {"dim", bs.dims[c]},
               {"role", std::string(to_string(bs.roles[c]))},
               {"homology", element_json(bs.homology[c])},
               {"cohomology", element_json(bs.cohomology[c])}};
        (bs.dims[c] < 0 ? augmentation : cells).push_back(std::move(j));
    }
    Json j{{"cells", cells}};
    if (!dim || *dim == -1)
        j["augmentation"] = Json{{"cells", augmentation}};
    return j;
}

std::string dims_text(const DimVector<long long>& values) {
    std::ostringstream os;
    for (int p = values.min_dim(); p <= values.max_dim(); ++p)
        os << p << ' ' << values[p] << '\n';
    return os.str();
}

Json dims_json(const DimVector<long long>& values) {
    Json j = Json::object();
    for (int p = 0; p <= values.max_dim(); ++p)
        j[std::to_string(p)] = values[p];
    j["augmentation"] = Json{{"-1", values[-1]}};
    return j;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    if (r.skipped)
        os << "SKIP " << r.name << ": " << r.detail << '\n';
    else if (r.pass)
        os << "PASS " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    else
        os << "FAIL " << r.name << ": " << r.detail << '\n';
    if (!r.pass) {
        for (const Chain& c : r.witness)
            os << "  witness " << c.dim << ": " << members_text(c.cells) << '\n';
    }
    return os.str();
}

Json report_json(const Report& r) {
    Json j{{"name", r.name}, {"status", r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL")}};
    if (!r.detail.empty())
        j["detail"] = r.detail;
    if (r.rank >= 0)
        j["rank"] = r.rank;
    if (!r.pass) {
        Json w = Json::array();
        for (const Chain& c : r.witness)
            w.push_back(Json{{"dim", c.dim}, {"members", members_json(c.cells)}});
        j["witness"] = w;
    }
    return j;
}

std::string verify_text(const check::VerifyResult& v) {
    std::ostringstream os;
    os << "random complexes: " << v.random_complexes << '\n';
    for (const auto& s : v.suites) {
        os << (s.pass() ? "PASS " : "FAIL ") << check::to_string(s.suite) << " (" << s.checks << " checks, "
           << s.skipped << " skipped)\n";
        for (const Report& r : s.failures)
            os << "  " << report_text(r);
    }
    os << (v.pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

Json verify_json(const check::VerifyResult& v) {
    Json suites = Json::array();
    for (const auto& s : v.suites) {
        Json failures = Json::array();
        for (const Report& r : s.failures)
            failures.push_back(report_json(r));
        suites.push_back(Json{{"suite", std::string(check::to_string(s.suite))},
                              {"status", s.pass() ? "PASS" : "FAIL"},
                              {"checks", s.checks},
                              {"skipped", s.skipped},
                              {"failures", failures}});
    }
    return Json{{"status", v.pass() ? "PASS" : "FAIL"}, {"random_complexes", v.random_complexes}, {"suites", suites}};
}

} // namespace tripart::tools
