#include "cloven/report.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace cloven {

using ordered_json = nlohmann::ordered_json;

bool VerificationReport::all_pass() const {
    return computed && d_squared_zero && full_contractible && y_concentrated_degree_zero &&
           clov_bouquet_shape && clov_torsion_free && nerve_matches_clov && les_consistent &&
           (!k2_rank_formula.has_value() || *k2_rank_formula) && subfamilies_acyclic &&
           nerve_dimension_bound;
}

namespace {

bool is_point_homology(const HomologySummary& h) {
    if (!h.torsion_free())
        return false;
    for (size_t s = 0; s < h.betti.size(); ++s)
        if (h.betti[s] != (s == 0 ? 1 : 0))
            return false;
    return !h.betti.empty();
}

bool bouquet_shape(const HomologySummary& clov, int k) {
    for (int s = 0; s < static_cast<int>(clov.betti.size()); ++s) {
        if (s == k - 2)
            continue;  // the sphere degree; any free rank is allowed
        long long want = (s == 0 && k >= 3) ? 1 : 0;
        if (clov.betti[s] != want)
            return false;
    }
    if (k >= 3 && clov.betti_at(0) != 1)
        return false;
    return true;
}

// Acyclic in the sense the nerve argument needs: a single free class in the
// lowest occupied degree and nothing anywhere else.
bool is_acyclic(const HomologySummary& h, int bottom) {
    if (!h.torsion_free() || bottom < 0)
        return false;
    for (int s = 0; s < static_cast<int>(h.betti.size()); ++s)
        if (h.betti[s] != (s == bottom ? 1 : 0))
            return false;
    return true;
}

void note_failure(VerificationReport& r, bool ok, const std::string& witness) {
    if (!ok && r.failure_witness.empty())
        r.failure_witness = witness;
}

ordered_json homology_json(const HomologySummary& h) {
    ordered_json j;
    j["tag"] = h.tag;
    j["basis"] = h.basis_sizes;
    j["betti"] = h.betti;
    ordered_json tors = ordered_json::array();
    for (const auto& degree : h.torsion) {
        ordered_json t = ordered_json::array();
        for (const BigInt& f : degree)
            t.push_back(f.str());
        tors.push_back(t);
    }
    j["torsion"] = tors;
    j["euler"] = h.euler;
    return j;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

ordered_json report_json_object(const VerificationReport& r) {
    ordered_json j;
    j["schema"] = "cloven-report/1";
    j["arity"] = {{"k", r.arity.k}, {"inputs", r.arity.inputs}};
    j["computed"] = r.computed;
    if (!r.computed) {
        j["error"] = r.error;
        return j;
    }
    j["census"] = r.census;
    j["homology"] = {{"full", homology_json(r.full_cohomology)},
                     {"y_part", homology_json(r.y_cohomology)},
                     {"clov", homology_json(r.clov_chain)},
                     {"nerve", homology_json(r.nerve_chain)}};
    ordered_json checks;
    checks["d_squared_zero"] = r.d_squared_zero;
    checks["full_contractible"] = r.full_contractible;
    checks["y_concentrated_degree_zero"] = r.y_concentrated_degree_zero;
    checks["clov_bouquet_shape"] = r.clov_bouquet_shape;
    checks["clov_torsion_free"] = r.clov_torsion_free;
    checks["nerve_matches_clov"] = r.nerve_matches_clov;
    checks["les_consistent"] = r.les_consistent;
    if (r.k2_rank_formula.has_value())
        checks["k2_rank_formula"] = *r.k2_rank_formula;
    checks["subfamilies_acyclic"] = r.subfamilies_acyclic;
    checks["nerve_dimension_bound"] = r.nerve_dimension_bound;
    j["checks"] = checks;
    j["clov_top_rank"] = r.clov_top_rank;
    j["matrix_hashes"] = {{"full", hex64(r.full_hash)},
                          {"y_part", hex64(r.y_hash)},
                          {"clov", hex64(r.clov_hash)}};
    j["all_pass"] = r.all_pass();
    if (!r.failure_witness.empty())
        j["failure_witness"] = r.failure_witness;
    return j;
}

}  // namespace

VerificationReport verify_arity(const Arity& arity, int max_leaves) {
    VerificationReport r;
    r.arity = arity;
    const auto t0 = std::chrono::steady_clock::now();
    std::string stage = "enumerate";
    try {
        CellComplex full = build_full_complex(arity, max_leaves);
        stage = "split";
        auto [y, clov] = split_y_and_clov(full);
        r.census.resize(full.degree_count());
        for (int s = 0; s < full.degree_count(); ++s)
            r.census[s] = full.size_at(s);
        r.d_squared_zero =
            d_squared_is_zero(full) && d_squared_is_zero(y) && d_squared_is_zero(clov);
        note_failure(r, r.d_squared_zero, "delta^2 != 0");
        r.full_hash = complex_hash(full);
        r.y_hash = complex_hash(y);
        r.clov_hash = complex_hash(clov);

        stage = "homology";
        r.full_cohomology = cohomology(full);
        r.y_cohomology = cohomology(y);
        HomologySummary clov_coh = cohomology(clov);
        r.clov_chain = clov_coh;  // same Betti numbers; torsion shifts a degree
        r.clov_chain.tag = tag_name(clov.tag) + "/chain";
        for (size_t s = 0; s < r.clov_chain.torsion.size(); ++s)
            r.clov_chain.torsion[s] = s + 1 < r.clov_chain.torsion.size()
                                          ? clov_coh.torsion[s + 1]
                                          : std::vector<BigInt>{};

        r.full_contractible = is_point_homology(r.full_cohomology);
        note_failure(r, r.full_contractible, "full cohomology is not that of a point");

        r.y_concentrated_degree_zero = r.y_cohomology.torsion_free();
        for (size_t s = 1; s < r.y_cohomology.betti.size(); ++s)
            if (r.y_cohomology.betti[s] != 0)
                r.y_concentrated_degree_zero = false;
        note_failure(r, r.y_concentrated_degree_zero,
                     "Y-part cohomology not concentrated in degree zero");

        r.clov_torsion_free = r.clov_chain.torsion_free() && clov_coh.torsion_free();
        note_failure(r, r.clov_torsion_free, "torsion in Clov homology");
        r.clov_bouquet_shape = bouquet_shape(r.clov_chain, arity.k);
        note_failure(r, r.clov_bouquet_shape, "Clov homology is not a bouquet of spheres");
        r.clov_top_rank = r.clov_chain.betti_at(arity.k - 2);

        LesResult les = les_consistency(r.y_cohomology, r.clov_chain, r.full_cohomology, arity.k);
        r.les_consistent = les.pass;
        note_failure(r, les.pass, "LES identity: " + les.witness);

        if (arity.k == 2) {
            long long product = static_cast<long long>(arity.inputs[0] + 1) *
                                static_cast<long long>(arity.inputs[1] + 1);
            r.k2_rank_formula = r.clov_chain.betti_at(0) == product &&
                                r.y_cohomology.betti_at(0) == product - 1;
            note_failure(r, *r.k2_rank_formula, "k=2 rank formula violated");
        }

        stage = "nerve";
        NerveComplex nerve = build_nerve(arity, max_leaves);
        r.nerve_chain = nerve_homology(nerve);
        r.nerve_dimension_bound = nerve.dim() <= arity.k - 2;
        note_failure(r, r.nerve_dimension_bound, "nerve has a simplex of dimension > k-2");
        r.nerve_matches_clov = true;
        int degrees = static_cast<int>(
            std::max(r.nerve_chain.betti.size(), r.clov_chain.betti.size()));
        for (int s = 0; s < degrees; ++s)
            if (r.nerve_chain.betti_at(s) != r.clov_chain.betti_at(s))
                r.nerve_matches_clov = false;
        if (!r.nerve_chain.torsion_free())
            r.nerve_matches_clov = false;
        note_failure(r, r.nerve_matches_clov, "nerve Betti numbers differ from Clov");

        stage = "subfamilies";
        r.subfamilies_acyclic = true;
        SubfamilyExtractor extractor(full);
        for (const auto& level : nerve.simplices) {
            for (const auto& simplex : level) {
                std::vector<CutClass> family;
                for (int idx : simplex)
                    family.push_back(nerve.vertices[idx]);
                CellComplex sub = extractor.extract(family);
                if (sub.empty() || !is_acyclic(chain_homology(sub), sub.bottom_degree())) {
                    r.subfamilies_acyclic = false;
                    std::string names;
                    for (const auto& c : family)
                        names += c.to_string();
                    note_failure(r, false, "subfamily " + names + " not acyclic");
                }
            }
        }

        r.computed = true;
    } catch (const resource_error& e) {
        r.error = std::string("resource error at stage ") + stage + ": " + e.what();
    } catch (const std::logic_error& e) {
        r.error = std::string("internal check failed at stage ") + stage + ": " + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

std::vector<Arity> arity_grid(int max_total_leaves, int k_min, int k_max) {
    std::vector<Arity> out;
    if (k_max < 0)
        k_max = max_total_leaves;
    std::vector<int> inputs;
    auto emit = [&](auto&& self, int k, int remaining, int pos) -> void {
        if (pos == k - 1) {
            inputs.push_back(remaining);
            out.emplace_back(k, inputs);
            inputs.pop_back();
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            inputs.push_back(v);
            self(self, k, remaining - v, pos + 1);
            inputs.pop_back();
        }
    };
    for (int n = 2; n <= max_total_leaves; ++n)
        for (int k = std::max(2, k_min); k <= std::min(k_max, n); ++k)
            emit(emit, k, n - k, 0);
    return out;
}

namespace {
std::vector<int> canonical_rotation(const Arity& a) {
    std::vector<int> best = a.inputs;
    for (int s = 1; s < a.k; ++s) {
        std::vector<int> rot = a.rotated(s).inputs;
        if (rot < best)
            best = rot;
    }
    return best;
}
}  // namespace

std::vector<BatchEntry> batch(int max_total_leaves, int k_min, int k_max, int max_leaves,
                              int jobs) {
    std::vector<Arity> grid = arity_grid(max_total_leaves, k_min, k_max);
    std::vector<BatchEntry> entries(grid.size());
    std::vector<int> compute_slots;
    for (size_t i = 0; i < grid.size(); ++i) {
        entries[i].arity = grid[i];
        std::vector<int> canon = canonical_rotation(grid[i]);
        if (canon != grid[i].inputs) {
            entries[i].is_rotation = true;
            entries[i].rotation_of = Arity(grid[i].k, canon);
            // rotation invariance is re-verified on the small sample
            if (grid[i].total_leaves() <= 6)
                compute_slots.push_back(static_cast<int>(i));
        } else {
            compute_slots.push_back(static_cast<int>(i));
        }
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t t = next.fetch_add(1);
            if (t >= compute_slots.size())
                return;
            int slot = compute_slots[t];
            entries[slot].report = verify_arity(entries[slot].arity, max_leaves);
        }
    };
    int width = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < width; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    // Cross-check: a rotated arity must reproduce its representative's tables.
    for (auto& e : entries) {
        if (!e.is_rotation || !e.report.has_value())
            continue;
        for (const auto& canon_entry : entries) {
            if (canon_entry.is_rotation || !(canon_entry.arity == e.rotation_of))
                continue;
            if (!canon_entry.report.has_value() || !e.report->computed ||
                !canon_entry.report->computed)
                break;
            if (e.report->census != canon_entry.report->census ||
                e.report->full_cohomology.betti != canon_entry.report->full_cohomology.betti ||
                e.report->clov_chain.betti != canon_entry.report->clov_chain.betti ||
                e.report->y_cohomology.betti != canon_entry.report->y_cohomology.betti) {
                e.report->computed = false;
                e.report->error = "rotation invariance violated against " +
                                  e.rotation_of.to_string();
            }
            break;
        }
    }
    return entries;
}

std::string report_to_json(const VerificationReport& r) {
    return report_json_object(r).dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "arity " << r.arity.to_string() << "\n";
    if (!r.computed) {
        os << "  ERROR: " << r.error << "\n";
        return os.str();
    }
    os << "  census by syzygy degree:";
    for (size_t s = 0; s < r.census.size(); ++s)
        os << " s=" << s << ":" << r.census[s];
    os << "\n";
    auto table = [&](const char* name, const HomologySummary& h) {
        os << "  " << name << " betti:";
        for (long long b : h.betti)
            os << " " << b;
        if (!h.torsion_free())
            os << "  (torsion present)";
        os << "\n";
    };
    table("full cohomology ", r.full_cohomology);
    table("Y-part cohomology", r.y_cohomology);
    table("Clov chain       ", r.clov_chain);
    table("nerve chain      ", r.nerve_chain);
    os << "  rank H^{k-2}(Clov) = " << r.clov_top_rank << "\n";
    ordered_json checks = report_json_object(r)["checks"];
    for (auto it = checks.begin(); it != checks.end(); ++it)
        os << "  [" << (it.value().get<bool>() ? "pass" : "FAIL") << "] " << it.key() << "\n";
    if (!r.failure_witness.empty())
        os << "  witness: " << r.failure_witness << "\n";
    os << "  all_pass: " << (r.all_pass() ? "true" : "false") << "  (" << std::fixed
       << std::setprecision(1) << r.elapsed_ms << " ms)\n";
    return os.str();
}

std::string batch_to_json(const std::vector<BatchEntry>& entries) {
    ordered_json j;
    j["schema"] = "cloven-batch/1";
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json item;
        item["arity"] = {{"k", e.arity.k}, {"inputs", e.arity.inputs}};
        item["rotation_of"] =
            e.is_rotation ? ordered_json(e.rotation_of.inputs) : ordered_json(nullptr);
        if (e.report.has_value())
            item["report"] = report_json_object(*e.report);
        list.push_back(item);
    }
    j["entries"] = list;
    return j.dump(2) + "\n";
}

std::string batch_to_text(const std::vector<BatchEntry>& entries) {
    std::ostringstream os;
    int failures = 0;
    for (const auto& e : entries) {
        if (e.is_rotation) {
            os << "arity " << e.arity.to_string() << "  (rotation of "
               << e.rotation_of.to_string() << ")\n";
            if (e.report.has_value())
                os << report_to_text(*e.report);
            continue;
        }
        os << report_to_text(*e.report);
        if (!e.report->all_pass())
            ++failures;
    }
    os << "batch: " << entries.size() << " arities, " << failures << " failing\n";
    return os.str();
}

}  // namespace cloven
