#ifndef TRIPART_TOOLS_RENDER_HPP
#define TRIPART_TOOLS_RENDER_HPP

#include "tripart/bases.hpp"
#include "tripart/check/suites.hpp"
#include "tripart/complex.hpp"
#include "tripart/report.hpp"
#include "tripart/tripartition.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tripart::tools {

using Json = nlohmann::ordered_json;

/// External indices, space separated.
std::string members_text(const std::vector<Index>& cells);
Json members_json(const std::vector<Index>& cells);

/// With `dim` set, only that dimension is shown.
std::string tripartition_text(const TriPartition& tp, const OrderedComplex& k, std::optional<int> dim = {});
Json tripartition_json(const TriPartition& tp, const OrderedComplex& k, std::optional<int> dim = {});

std::string diagram_text(const PersistenceDiagram& d);
Json diagram_json(const PersistenceDiagram& d);

std::string bases_text(const CanonicalBasisSet& bs, std::optional<int> dim = {});
Json bases_json(const CanonicalBasisSet& bs, std::optional<int> dim = {});

/// One `p value` line per dimension from -1.
std::string dims_text(const DimVector<long long>& values);
/// Dimension keys from 0; dimension -1 goes under "augmentation".
Json dims_json(const DimVector<long long>& values);

/// `PASS name` / `FAIL name: detail` plus witness lines in the dump notation.
std::string report_text(const Report& r);
Json report_json(const Report& r);

std::string verify_text(const check::VerifyResult& v);
Json verify_json(const check::VerifyResult& v);

} // namespace tripart::tools

#endif
