// cloven: verifier for the cellular model of regularized Strebel moduli
// spaces. Subcommands: verify, batch, cells, nerve.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cloven/enumerate.hpp"
#include "cloven/nerve.hpp"
#include "cloven/report.hpp"

using namespace cloven;
using ordered_json = nlohmann::ordered_json;

namespace {

int default_guard() {
    if (const char* env = std::getenv("CLOVEN_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return kDefaultMaxLeaves;
}

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    os << text;
    return 0;
}

std::string cells_text(const Arity& arity, const std::map<std::string, PlanarTreeCell>& cells,
                       bool list_keys) {
    std::map<int, std::vector<std::string>> by_degree;
    for (const auto& [key, cell] : cells)
        by_degree[syzygy_degree(cell, arity)].push_back(key);
    std::ostringstream os;
    os << "arity " << arity.to_string() << ": " << cells.size() << " cells\n";
    for (const auto& [s, keys] : by_degree) {
        os << "s=" << s << ": " << keys.size() << "\n";
        if (list_keys)
            for (const auto& k : keys)
                os << "  " << k << "\n";
    }
    return os.str();
}

std::string cells_json(const Arity& arity, const std::map<std::string, PlanarTreeCell>& cells) {
    std::map<int, std::vector<std::string>> by_degree;
    for (const auto& [key, cell] : cells)
        by_degree[syzygy_degree(cell, arity)].push_back(key);
    ordered_json j;
    j["schema"] = "cloven-cells/1";
    j["arity"] = {{"k", arity.k}, {"inputs", arity.inputs}};
    j["total"] = cells.size();
    ordered_json degs = ordered_json::array();
    for (const auto& [s, keys] : by_degree)
        degs.push_back({{"syzygy", s}, {"count", keys.size()}, {"keys", keys}});
    j["degrees"] = degs;
    return j.dump(2) + "\n";
}

std::string nerve_text(const NerveComplex& nerve, const HomologySummary& h) {
    std::ostringstream os;
    os << "arity " << nerve.arity.to_string() << ": " << nerve.vertices.size()
       << " valid classes, " << nerve.simplex_count() << " simplices, dim " << nerve.dim()
       << "\n";
    os << "vertices:";
    for (const auto& v : nerve.vertices)
        os << " " << v.to_string();
    os << "\n" << nerve.facet_listing();
    os << "betti:";
    for (long long b : h.betti)
        os << " " << b;
    os << "\n";
    return os.str();
}

std::string nerve_json(const NerveComplex& nerve, const HomologySummary& h) {
    ordered_json j;
    j["schema"] = "cloven-nerve/1";
    j["arity"] = {{"k", nerve.arity.k}, {"inputs", nerve.arity.inputs}};
    ordered_json verts = ordered_json::array();
    for (const auto& v : nerve.vertices)
        verts.push_back({v.a, v.b});
    j["vertices"] = verts;
    j["dim"] = nerve.dim();
    j["simplex_count"] = nerve.simplex_count();
    j["facets"] = nerve.facets();
    j["betti"] = h.betti;
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for the cellular chain-complex model of regularized "
                 "Strebel moduli spaces"};
    app.require_subcommand(1);

    int k = 0;
    std::vector<int> inputs;
    int max_leaves_batch = 6, k_min = 2, k_max = -1;
    int guard = default_guard();
    int jobs = 1;
    bool list_keys = false;
    std::string out_path, format = "text";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("--max-n", guard, "size guard on total leaves N");
        cmd->add_option("--jobs", jobs, "worker pool width")->check(CLI::PositiveNumber);
    };
    auto add_arity = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "number of outputs")->required()->check(CLI::Range(2, 64));
        cmd->add_option("--inputs", inputs, "input counts i_1,...,i_k")
            ->required()
            ->delimiter(',');
    };

    CLI::App* verify = app.add_subcommand("verify", "verify one arity end to end");
    add_arity(verify);
    add_common(verify);

    CLI::App* batch_cmd = app.add_subcommand("batch", "sweep all arities up to a leaf bound");
    batch_cmd->add_option("--max-leaves", max_leaves_batch, "largest total leaf count N")
        ->required();
    batch_cmd->add_option("--k-min", k_min, "smallest k");
    batch_cmd->add_option("--k-max", k_max, "largest k (default: unbounded)");
    add_common(batch_cmd);

    CLI::App* cells_cmd = app.add_subcommand("cells", "enumerate the cells of one arity");
    add_arity(cells_cmd);
    cells_cmd->add_flag("--list-keys", list_keys, "print every canonical cell key");
    add_common(cells_cmd);

    CLI::App* nerve_cmd = app.add_subcommand("nerve", "nerve of the cut classes of one arity");
    add_arity(nerve_cmd);
    add_common(nerve_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool structured = format == "structured";
    try {
        if (verify->parsed()) {
            Arity arity(k, inputs);
            VerificationReport r = verify_arity(arity, guard);
            int rc = write_out(structured ? report_to_json(r) : report_to_text(r), out_path);
            if (rc != 0)
                return rc;
            if (!r.computed) {
                std::cerr << r.error << "\n";
                return 2;
            }
            if (!r.all_pass()) {
                std::cerr << "check failed: " << r.failure_witness << "\n";
                return 1;
            }
            return 0;
        }
        if (batch_cmd->parsed()) {
            auto entries = batch(max_leaves_batch, k_min, k_max, guard, jobs);
            int rc =
                write_out(structured ? batch_to_json(entries) : batch_to_text(entries), out_path);
            if (rc != 0)
                return rc;
            bool math_fail = false, error = false;
            for (const auto& e : entries) {
                if (!e.report.has_value())
                    continue;
                if (!e.report->computed)
                    error = true;
                else if (!e.report->all_pass()) {
                    math_fail = true;
                    std::cerr << "arity " << e.arity.to_string()
                              << " failed: " << e.report->failure_witness << "\n";
                }
            }
            return math_fail ? 1 : (error ? 2 : 0);
        }
        if (cells_cmd->parsed()) {
            Arity arity(k, inputs);
            auto cells = enumerate_cells(arity, guard);
            return write_out(structured ? cells_json(arity, cells)
                                        : cells_text(arity, cells, list_keys),
                             out_path);
        }
        // nerve
        Arity arity(k, inputs);
        NerveComplex nerve = build_nerve(arity, guard);
        HomologySummary h = nerve_homology(nerve);
        return write_out(structured ? nerve_json(nerve, h) : nerve_text(nerve, h), out_path);
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return 1;
    }
}
