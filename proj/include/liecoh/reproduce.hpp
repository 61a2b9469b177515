#pragma once

#include <string>
#include <vector>

namespace liecoh {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;  // per-item failure notes
};

struct ReproduceResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    std::string report_json;  // deterministic report document
};

/// Runs the full verification suite over the bundled corpus: coboundary
/// identity, Z^1/Der cross-checks, rank certificates, completability
/// verdicts, H^2 growth for the whole r_h series (k = 4 and k = 6, up to
/// dimension 17), filiform certificates, the brute-force oracle comparison
/// at small dimension, pinned fixtures, and a determinism check. `jobs` caps
/// the per-algebra worker fan-out; the report is byte-identical for every
/// jobs value.
ReproduceResult reproduce_paper(unsigned jobs = 1);

}  // namespace liecoh
