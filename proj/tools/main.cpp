#include "render.hpp"

#include "tripart/bases.hpp"
#include "tripart/check/suites.hpp"
#include "tripart/error.hpp"
#include "tripart/matroid.hpp"
#include "tripart/reduction.hpp"
#include "tripart/tripartition.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace tripart;
using tools::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
    std::string input;
    std::string format; // empty: infer from the extension
    bool complete = false;
    bool json = false;
    std::string output;
    std::optional<int> dim;
    std::uint64_t seed = 0;
    std::string level = "quick";
    std::size_t cap = 16;
    std::size_t ordering_cap = 5040;
    std::optional<std::size_t> prefix;
    std::optional<std::size_t> relative;
    bool check = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OrderedComplex load(const RunConfig& cfg) {
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in)
        throw InputError(cfg.input + ": cannot read file");
    std::ostringstream text;
    text << in.rdbuf();
    std::string format = cfg.format;
    if (format.empty()) {
        const auto ends_with = [&](std::string_view ext) {
            return cfg.input.size() >= ext.size() && cfg.input.compare(cfg.input.size() - ext.size(), ext.size(), ext) == 0;
        };
        format = ends_with(".bnd") ? "boundary" : "simplicial";
    }
    try {
        if (format == "boundary")
            return from_boundary_format(text.str());
        return from_simplicial_format(text.str(), cfg.complete);
    } catch (const Error& e) {
        throw InputError(cfg.input + ": " + e.what());
    }
}

void check_dim(const RunConfig& cfg, const OrderedComplex& k) {
    if (cfg.dim && (*cfg.dim < -1 || *cfg.dim > k.dim()))
        throw InputError("dimension " + std::to_string(*cfg.dim) + " outside -1.." + std::to_string(k.dim()));
}

class Output {
public:
    explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

    void text(const std::string& s) { text_ += s; }
    Json& json() { return json_; }

    void flush() {
        std::string body = cfg_.json ? json_.dump(2) + "\n" : text_;
        if (cfg_.output.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream out(cfg_.output, std::ios::binary);
        if (!out)
            throw InputError(cfg_.output + ": cannot write file");
        out << body;
    }

private:
    const RunConfig& cfg_;
    std::string text_;
    Json json_ = Json::object();
};

int cmd_tripartition(const RunConfig& cfg) {
    const OrderedComplex k = load(cfg);
    check_dim(cfg, k);
    const TriPartition tp = tri_partition(k);
    Output out(cfg);
    out.text(tools::tripartition_text(tp, k, cfg.dim));
    out.json() = tools::tripartition_json(tp, k, cfg.dim);
    out.flush();
    return kOk;
}

int cmd_diagram(const RunConfig& cfg) {
    const OrderedComplex k = load(cfg);
    check_dim(cfg, k);
    const PersistenceDiagram d = persistence_diagram(k);
    Output out(cfg);
    PersistenceDiagram shown = d;
    if (cfg.dim) {
        std::erase_if(shown.finite, [&](const DiagramPoint& pt) { return pt.dim != *cfg.dim; });
        std::erase_if(shown.essential, [&](const DiagramPoint& pt) { return pt.dim != *cfg.dim; });
    }
    out.text(tools::diagram_text(shown));
    out.json() = tools::diagram_json(shown);
    if (cfg.prefix) {
        if (*cfg.prefix >= k.size() - 1)
            throw InputError("prefix cell " + std::to_string(*cfg.prefix) + " out of range");
        DimVector<long long> b(k.dim(), 0);
        for (int p = -1; p <= k.dim(); ++p)
            b[p] = betti_of_prefix(d, *cfg.prefix + 1, p);
        out.text("prefix " + std::to_string(*cfg.prefix) + " betti\n" + tools::dims_text(b));
        out.json()["prefix"] = Json{{"cell", *cfg.prefix}, {"betti", tools::dims_json(b)}};
    }
    if (cfg.relative) {
        if (*cfg.relative > k.size() - 1)
            throw InputError("relative prefix size " + std::to_string(*cfg.relative) + " out of range");
        // L holds the empty cell and the first `relative` listed cells.
        const std::size_t s = *cfg.relative + 1;
        DimVector<long long> b(k.dim(), 0);
        for (int p = -1; p <= k.dim(); ++p)
            b[p] = relative_cohomology_rank(d, s, p);
        out.text("relative " + std::to_string(*cfg.relative) + " cohomology\n" + tools::dims_text(b));
        out.json()["relative"] = Json{{"cells", *cfg.relative}, {"cohomology", tools::dims_json(b)}};
    }
    out.flush();
    return kOk;
}

int cmd_bases(const RunConfig& cfg) {
    const OrderedComplex k = load(cfg);
    check_dim(cfg, k);
    const Reductions r = reduce(k);
    const TriPartition tp = tri_partition(r, k);
    const CanonicalBasisSet bs = extract_bases(r.column, r.row, tp);
    Output out(cfg);
    out.text(tools::bases_text(bs, cfg.dim));
    out.json() = tools::bases_json(bs, cfg.dim);
    bool pass = true;
    if (cfg.check) {
        std::vector<Report> reports = check::check_bases(k, cfg.cap);
        for (Report& rep : check::check_intersection(k))
            reports.push_back(std::move(rep));
        Json list = Json::array();
        for (const Report& rep : reports) {
            pass = pass && rep.pass;
            out.text(tools::report_text(rep));
            list.push_back(tools::report_json(rep));
        }
        out.json()["reports"] = list;
    }
    out.flush();
    return pass ? kOk : kVerifyFailed;
}

int cmd_betti(const RunConfig& cfg) {
    const OrderedComplex k = load(cfg);
    check_dim(cfg, k);
    const Reductions r = reduce(k);
    const BirthDeathTable t = classify(r.column, r.row, k);
    DimVector<long long> betti = betti_numbers(t);
    DimVector<long long> cobetti = relative_cohomology_ranks(t);
    Output out(cfg);
    if (cfg.dim) {
        out.text(std::to_string(*cfg.dim) + ' ' + std::to_string(betti[*cfg.dim]) + '\n');
        out.json() = Json{{"dim", *cfg.dim}, {"betti", betti[*cfg.dim]}, {"cohomology", cobetti[*cfg.dim]}};
    } else {
        out.text(tools::dims_text(betti));
        out.json() = Json{{"betti", tools::dims_json(betti)},
                          {"cohomology", tools::dims_json(cobetti)},
                          {"euler", reduced_euler_characteristic(k)}};
    }
    out.flush();
    return kOk;
}

unsigned thread_count() {
    const char* env = std::getenv("TRIPART_THREADS");
    if (!env || !*env)
        return 1;
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (*end != '\0' || n == 0 || n > 256)
        throw InputError("TRIPART_THREADS must be a positive integer");
    return static_cast<unsigned>(n);
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.level != "quick" && cfg.level != "full")
        throw InputError("level must be quick or full");
    const bool full = cfg.level == "full";
    Output out(cfg);
    if (!cfg.input.empty()) {
        const OrderedComplex k = load(cfg);
        check::CaseOptions options;
        options.uniqueness_orders = full ? 20 : 0;
        options.matroid_max_cells = full ? 7 : 5;
        options.enumeration_cap = cfg.cap;
        check::Rng rng(cfg.seed);
        bool pass = true;
        Json list = Json::array();
        for (const check::Check& ch : check::check_complex(k, options, rng)) {
            pass = pass && ch.report.pass;
            Report shown = ch.report;
            shown.name = std::string(check::to_string(ch.suite)) + ": " + shown.name;
            out.text(tools::report_text(shown));
            list.push_back(tools::report_json(shown));
        }
        out.text(pass ? "PASS\n" : "FAIL\n");
        out.json() = Json{{"status", pass ? "PASS" : "FAIL"}, {"reports", list}};
        out.flush();
        return pass ? kOk : kVerifyFailed;
    }
    const check::VerifyResult result = check::run_verification({cfg.seed, full, thread_count()});
    out.text(tools::verify_text(result));
    out.json() = tools::verify_json(result);
    out.flush();
    return result.pass() ? kOk : kVerifyFailed;
}

int cmd_matroid(const RunConfig& cfg) {
    const OrderedComplex k = load(cfg);
    check_dim(cfg, k);
    Output out(cfg);
    Json dims = Json::object();
    bool pass = true;
    const int lo = cfg.dim ? *cfg.dim : -1;
    const int hi = cfg.dim ? *cfg.dim : k.dim();
    for (int p = lo; p <= hi; ++p) {
        const std::string key = "p=" + std::to_string(p);
        const std::size_t n = k.count(p);
        std::size_t orderings = 1;
        for (std::size_t t = 2; t <= n && orderings <= cfg.ordering_cap; ++t)
            orderings *= t;
        if (!cfg.dim && (n > cfg.cap || orderings > cfg.ordering_cap)) {
            out.text(key + " SKIP: " + std::to_string(n) + " cells exceed the caps\n");
            dims[key] = Json{{"status", "SKIP"}, {"cells", n}};
            continue;
        }
        Json families = Json::object();
        const std::pair<const char*, SetFamily> list[] = {
            {"trees", enumerate_trees(k, p, cfg.cap)},
            {"cotrees", enumerate_cotrees(k, p, cfg.cap)},
            {"leftovers", enumerate_leftovers(k, p, cfg.ordering_cap)},
        };
        for (const auto& [name, family] : list) {
            Report rep = check_matroid(family);
            rep.name = key + " " + name;
            pass = pass && rep.pass;
            out.text(tools::report_text(rep));
            families[name] = tools::report_json(rep);
        }
        dims[key] = families;
    }
    out.json() = Json{{"status", pass ? "PASS" : "FAIL"}, {"dims", dims}};
    out.flush();
    return pass ? kOk : kVerifyFailed;
}

void add_input_options(CLI::App* sub, RunConfig& cfg, bool input_required) {
    auto* in = sub->add_option("input", cfg.input, "complex file (.bnd boundary format, otherwise simplicial)");
    if (input_required)
        in->required();
    sub->add_option("--format", cfg.format, "input format")->check(CLI::IsMember({"boundary", "simplicial"}));
    sub->add_flag("--complete", cfg.complete, "insert missing faces of simplices");
    auto* json = sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_flag("--text", "text output (default)")->excludes(json);
    sub->add_option("--output,-o", cfg.output, "write output to a file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tri-partitions, canonical bases and persistence of ordered complexes over Z/2"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* tri = app.add_subcommand("tripartition", "maximal tree, maximal cotree and leftover per dimension");
    add_input_options(tri, cfg, true);
    tri->add_option("--dim", cfg.dim, "only this dimension");

    auto* dia = app.add_subcommand("diagram", "index persistence diagram");
    add_input_options(dia, cfg, true);
    dia->add_option("--dim", cfg.dim, "only points of this dimension");
    dia->add_option("--prefix", cfg.prefix, "Betti numbers of the prefix ending at this cell");
    dia->add_option("--relative", cfg.relative, "relative cohomology against the first N cells");

    auto* bas = app.add_subcommand("bases", "canonical cycles, chains, cocycles and cochains");
    add_input_options(bas, cfg, true);
    bas->add_option("--dim", cfg.dim, "only cells of this dimension");
    bas->add_flag("--check", cfg.check, "verify the canonical bases and the intersection matrix");
    bas->add_option("--cap", cfg.cap, "tree/cotree size limit for enumeration checks");

    auto* bet = app.add_subcommand("betti", "reduced Betti numbers");
    add_input_options(bet, cfg, true);
    bet->add_option("--dim", cfg.dim, "only this dimension");

    auto* ver = app.add_subcommand("verify", "run the invariant suites");
    add_input_options(ver, cfg, false);
    ver->add_option("--seed", cfg.seed, "seed for random complexes");
    ver->add_option("--level", cfg.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--cap", cfg.cap, "tree/cotree size limit for enumeration checks");

    auto* mat = app.add_subcommand("matroid", "exchange check of tree, cotree and leftover families");
    add_input_options(mat, cfg, true);
    mat->add_option("--dim", cfg.dim, "only this dimension; caps then become errors");
    mat->add_option("--cap", cfg.cap, "largest ground set for tree and cotree enumeration");
    mat->add_option("--ordering-cap", cfg.ordering_cap, "largest number of orderings for leftovers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*tri)
            return cmd_tripartition(cfg);
        if (*dia)
            return cmd_diagram(cfg);
        if (*bas)
            return cmd_bases(cfg);
        if (*bet)
            return cmd_betti(cfg);
        if (*ver)
            return cmd_verify(cfg);
        if (*mat)
            return cmd_matroid(cfg);
    } catch (const InputError& e) {
        std::cerr << "tripart: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "tripart: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
