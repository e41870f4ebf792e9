#pragma once

#include <string>
#include <vector>

#include "cutrank/group.hpp"
#include "cutrank/metacyclic.hpp"

namespace cutrank {

/// A classified presentation retained by the rank filter (rank 0 or 1).
struct AtlasRow {
    MetacyclicParams params;
    int order = 0;
    int rank = 0;
};

struct ClassifyOptions {
    int cap = kDefaultOrderCap;
    int workers = 0; // 0 = hardware concurrency
    long long iso_budget = kDefaultIsoBudget;
    bool deterministic = false; // force sequential candidate order
};

/**
 * The split metacyclic search space: n from the φ(n)-candidate table
 * (φ(n) in {2,4,6,8,10,12,16,18,24}), t in {2,3,4,5,6,8,12}, l over the
 * divisors of n and r over residues satisfying the presentation constraints.
 * Abelian candidates (r = 1) are included, as is the cyclic degenerate
 * (n, 1, n, 1). Ordered lexicographically by (n, t, l, r).
 */
std::vector<MetacyclicParams> candidate_space();

/// Slack re-derivation of the space: every n with φ(n) <= 48, keeping only
/// actions with φ(n)/ord_n(r) <= 4. Confirms the φ(n) table misses nothing.
std::vector<MetacyclicParams> candidate_space_wide();

struct ClassifyResult {
    std::vector<AtlasRow> rows;              // rank <= 1, sorted by params
    std::vector<MetacyclicParams> skipped;   // order exceeded the cap
};

/// Constructs every candidate (word arithmetic) and keeps rows whose
/// class-partition rank is at most 1. Candidate classification is
/// embarrassingly parallel; output order is independent of worker count.
ClassifyResult classify_space(const std::vector<MetacyclicParams>& candidates,
                              const ClassifyOptions& options = {});

/// Isomorphism class of retained rows; rep is the lexicographically least
/// member tuple.
struct AtlasClass {
    AtlasRow rep;
    std::vector<MetacyclicParams> members;
    bool abelian = false;
    GroupFingerprint fp;
};

/// Groups rows by fingerprint and partitions each bucket with the
/// backtracking isomorphism test. Budget exhaustion is a hard failure.
std::vector<AtlasClass> deduplicate(const std::vector<AtlasRow>& rows,
                                    const ClassifyOptions& options = {});

// --- fixtures ------------------------------------------------------------------

struct FixtureRow {
    MetacyclicParams params;
    int order = 0;
    int rank = 0;
    std::string gap_id; // opaque annotation, never computed against
};

struct FixtureTables {
    std::vector<FixtureRow> table_rank0; // 46 rows
    std::vector<FixtureRow> table_rank1; // 29 rows

    std::vector<FixtureRow> all() const;
};

/// The embedded fixture tables (also shipped as data/metacyclic_fixtures.csv).
FixtureTables builtin_fixtures();

/// The embedded tables in CSV form: n,l,r,t,order,rank,gap_id_annotation.
std::string fixtures_csv();

/// Load replacement fixtures; throws Error(Errc::Parse) on malformed input.
FixtureTables load_fixtures_csv(const std::string& path);

// --- verification -----------------------------------------------------------------

struct VerifyReport {
    struct Match {
        FixtureRow fixture;
        MetacyclicParams atlas_rep;
    };
    struct RankMismatch {
        FixtureRow fixture;
        int observed_rank = 0;
    };
    std::vector<Match> matched;
    std::vector<RankMismatch> rank_mismatch;
    std::vector<FixtureRow> unmatched_fixture;
    std::vector<FixtureRow> duplicate_match;  // fixture hit an already-matched class
    std::vector<AtlasRow> unmatched_atlas;    // nonabelian classes no fixture matched
    std::vector<AtlasRow> degenerate_classes; // abelian classes, reported separately
    int matched_rank0 = 0;
    int matched_rank1 = 0;

    bool perfect() const {
        return rank_mismatch.empty() && unmatched_fixture.empty() && duplicate_match.empty() &&
               unmatched_atlas.empty();
    }
};

/// Checks that every fixture row validates, has the claimed oracle rank and
/// is isomorphic to exactly one atlas class, and that every nonabelian atlas
/// class is matched by exactly one fixture row.
VerifyReport verify_tables(const std::vector<AtlasClass>& classes, const FixtureTables& fixtures,
                           const ClassifyOptions& options = {});

/// Convenience pipeline: candidate_space -> classify -> deduplicate -> verify.
VerifyReport run_atlas_verification(const FixtureTables& fixtures,
                                    const ClassifyOptions& options = {});

} // namespace cutrank
