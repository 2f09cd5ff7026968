#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cloven/homology.hpp"
#include "cloven/nerve.hpp"

namespace cloven {

// Machine-readable certificate for one arity: cell census, homology tables
// and the boolean outcome of every theorem-derived check.
struct VerificationReport {
    Arity arity;
    bool computed = false;   // false when a resource/internal error occurred
    std::string error;       // error text with the stage reached

    std::vector<long long> census;  // cells per syzygy degree

    HomologySummary full_cohomology;
    HomologySummary y_cohomology;        // degrees are s_Y = s - (k-1)
    HomologySummary clov_chain;
    HomologySummary nerve_chain;

    bool d_squared_zero = false;
    bool full_contractible = false;
    bool y_concentrated_degree_zero = false;
    bool clov_bouquet_shape = false;
    bool clov_torsion_free = false;
    bool nerve_matches_clov = false;
    bool les_consistent = false;
    std::optional<bool> k2_rank_formula;  // only set when k == 2
    bool subfamilies_acyclic = false;
    bool nerve_dimension_bound = false;

    long long clov_top_rank = 0;  // observed rank of H^{k-2}(Clov)
    std::string failure_witness;  // minimal witness of the first failed check

    std::uint64_t full_hash = 0, y_hash = 0, clov_hash = 0;
    double elapsed_ms = 0.0;      // excluded from the structured certificate

    bool all_pass() const;
};

// Runs the whole pipeline: enumerate -> complexes -> homology -> nerve ->
// cross-checks. Resource errors are captured in the report.
VerificationReport verify_arity(const Arity& arity, int max_leaves = kDefaultMaxLeaves);

// One entry of a batch sweep; rotations of earlier arities are flagged and
// carry no recomputed report.
struct BatchEntry {
    Arity arity;
    bool is_rotation = false;
    Arity rotation_of;  // canonical representative when is_rotation
    std::optional<VerificationReport> report;
};

// Reports for every arity with k in [k_min, k_max], i_a >= 0 and
// N <= max_total_leaves, deduplicated up to cyclic rotation of the input
// blocks. Rotation invariance is re-verified on the sample with N <= 6.
std::vector<BatchEntry> batch(int max_total_leaves, int k_min = 2, int k_max = -1,
                              int max_leaves = kDefaultMaxLeaves, int jobs = 1);

// All arities of the sweep in deterministic order.
std::vector<Arity> arity_grid(int max_total_leaves, int k_min = 2, int k_max = -1);

// Structured (certificate) and text renderings. The structured form is the
// document of record; text is derived from it.
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);
std::string batch_to_json(const std::vector<BatchEntry>& entries);
std::string batch_to_text(const std::vector<BatchEntry>& entries);

}  // namespace cloven
