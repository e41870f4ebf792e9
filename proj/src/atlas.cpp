#include "cutrank/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "cutrank/csv.hpp"
#include "cutrank/error.hpp"
#include "cutrank/numtheory.hpp"
#include "cutrank/rank.hpp"

namespace cutrank {

namespace {

// φ(n) -> admissible n, as used by the enumeration
const std::vector<std::pair<int, std::vector<int>>> kPhiTable = {
    {2, {3, 4, 6}},
    {4, {5, 8, 10, 12}},
    {6, {7, 14, 9, 18}},
    {8, {16, 24, 15, 30, 20}},
    {10, {11, 22}},
    {12, {13, 26, 21, 42, 28, 36}},
    {16, {17, 34, 32, 48, 60, 40}},
    {18, {19, 27, 38, 54}},
    {24, {35, 56, 70, 84, 45, 72, 90, 39, 52, 78}},
};

const std::vector<int> kQuotientT = {2, 3, 4, 5, 6, 8, 12};

void emit_candidates_for_n(int n, bool dirichlet_filter, std::vector<MetacyclicParams>& out) {
    // cyclic degenerate: t = 1 forces b = 1, hence l = n and r = 1
    out.push_back(MetacyclicParams{n, 1, n, 1});

    std::vector<int> order_of(n + 1, 0);
    for (int r = 1; r <= n; ++r) {
        if (std::gcd(r, n) == 1) order_of[r] = nt::mult_order_mod(r, n);
    }
    int phi = nt::totient(n);
    auto divs = nt::divisors(n);
    for (int t : kQuotientT) {
        for (int l : divs) {
            for (int r = 1; r <= n; ++r) {
                if (order_of[r] == 0) continue;
                if ((long long)l * r % n != l % n) continue;
                if (t % order_of[r] != 0) continue;
                if (dirichlet_filter && phi > 4 * order_of[r]) continue;
                out.push_back(MetacyclicParams{n, t, l, r});
            }
        }
    }
}

} // namespace

std::vector<MetacyclicParams> candidate_space() {
    std::vector<int> ns;
    for (const auto& [phi, values] : kPhiTable) ns.insert(ns.end(), values.begin(), values.end());
    std::sort(ns.begin(), ns.end());

    std::vector<MetacyclicParams> out;
    for (int n : ns) emit_candidates_for_n(n, false, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MetacyclicParams> candidate_space_wide() {
    std::vector<MetacyclicParams> out;
    for (int n = 3; n <= 300; ++n) {
        if (nt::totient(n) > 48) continue;
        emit_candidates_for_n(n, true, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassifyResult classify_space(const std::vector<MetacyclicParams>& candidates,
                              const ClassifyOptions& options) {
    int workers = options.deterministic ? 1 : options.workers;
    if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<int>(workers, std::max<std::size_t>(candidates.size(), 1));

    std::vector<std::vector<AtlasRow>> rows_per_worker(workers);
    std::vector<std::vector<MetacyclicParams>> skipped_per_worker(workers);
    std::atomic<std::size_t> next{0};

    auto work = [&](int w) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= candidates.size()) break;
            const MetacyclicParams& p = candidates[i];
            if ((long long)p.n * p.t > options.cap) {
                skipped_per_worker[w].push_back(p);
                continue;
            }
            FiniteGroup g = FiniteGroup::split_metacyclic(p, options.cap);
            ClassPartition cp = class_partition(g);
            int rank = cp.n_R - cp.n_Q;
            if (rank <= 1) rows_per_worker[w].push_back(AtlasRow{p, g.order(), rank});
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    ClassifyResult result;
    for (auto& rows : rows_per_worker)
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    for (auto& skipped : skipped_per_worker)
        result.skipped.insert(result.skipped.end(), skipped.begin(), skipped.end());
    std::sort(result.rows.begin(), result.rows.end(),
              [](const AtlasRow& a, const AtlasRow& b) { return a.params < b.params; });
    std::sort(result.skipped.begin(), result.skipped.end());
    return result;
}

std::vector<AtlasClass> deduplicate(const std::vector<AtlasRow>& rows,
                                    const ClassifyOptions& options) {
    std::vector<AtlasRow> sorted = rows;
    std::sort(sorted.begin(), sorted.end(),
              [](const AtlasRow& a, const AtlasRow& b) { return a.params < b.params; });

    std::vector<AtlasClass> classes;
    std::vector<FiniteGroup> rep_groups;
    std::map<std::pair<int, std::string>, std::vector<std::size_t>> buckets; // (rank, fp) -> class ids

    for (const AtlasRow& row : sorted) {
        FiniteGroup g = FiniteGroup::split_metacyclic(row.params, options.cap);
        GroupFingerprint fp = fingerprint(g);
        auto key = std::make_pair(row.rank, fp.to_string());
        std::size_t found = classes.size();
        for (std::size_t ci : buckets[key]) {
            IsoResult iso = is_isomorphic(g, rep_groups[ci], options.iso_budget);
            if (iso.verdict == IsoVerdict::Undecided) {
                throw Error(Errc::Internal, "deduplicate: isomorphism budget exhausted on " +
                                                to_string(row.params));
            }
            if (iso.verdict == IsoVerdict::Isomorphic) {
                found = ci;
                break;
            }
        }
        if (found == classes.size()) {
            AtlasClass cls;
            cls.rep = row; // first-seen member is the lexicographically least
            cls.members = {row.params};
            cls.abelian = g.is_abelian();
            cls.fp = fp;
            buckets[key].push_back(classes.size());
            classes.push_back(std::move(cls));
            rep_groups.push_back(std::move(g));
        } else {
            classes[found].members.push_back(row.params);
        }
    }
    return classes;
}

// --- fixtures ------------------------------------------------------------------

namespace {

// columns: n,l,r,t,order,rank,gap_id_annotation
const char* const kFixtureCsv =
    "n,l,r,t,order,rank,gap_id_annotation\n"
    "3,3,2,2,6,0,\"[6,1]\"\n"
    "4,4,3,2,8,0,\"[8,3]\"\n"
    "4,2,3,2,8,0,\"[8,4]\"\n"
    "3,3,2,4,12,0,\"[12,1]\"\n"
    "6,6,5,2,12,0,\"[12,4]\"\n"
    "4,4,3,4,16,0,\"[16,4]\"\n"
    "4,2,3,4,16,0,\"[16,6]\"\n"
    "8,4,3,2,16,0,\"[16,8]\"\n"
    "3,3,2,6,18,0,\"[18,3]\"\n"
    "5,5,2,4,20,0,\"[20,3]\"\n"
    "7,7,2,3,21,0,\"[21,1]\"\n"
    "12,6,5,2,24,0,\"[24,5]\"\n"
    "6,6,5,4,24,0,\"[24,7]\"\n"
    "4,4,3,6,24,0,\"[24,10]\"\n"
    "4,2,3,6,24,0,\"[24,11]\"\n"
    "9,3,4,3,27,0,\"[27,4]\"\n"
    "8,4,5,4,32,0,\"[32,4]\"\n"
    "8,8,3,4,32,0,\"[32,13]\"\n"
    "6,6,5,6,36,0,\"[36,12]\"\n"
    "10,10,3,4,40,0,\"[40,12]\"\n"
    "7,7,3,6,42,0,\"[42,1]\"\n"
    "7,7,2,6,42,0,\"[42,2]\"\n"
    "12,12,5,4,48,0,\"[48,11]\"\n"
    "9,9,2,6,54,0,\"[54,6]\"\n"
    "9,3,4,6,54,0,\"[54,11]\"\n"
    "15,15,2,4,60,0,\"[60,7]\"\n"
    "16,4,5,4,64,0,\"[64,28]\"\n"
    "16,8,3,4,64,0,\"[64,46]\"\n"
    "12,12,7,6,72,0,\"[72,37]\"\n"
    "12,6,7,6,72,0,\"[72,38]\"\n"
    "20,10,3,4,80,0,\"[80,29]\"\n"
    "20,20,13,4,80,0,\"[80,30]\"\n"
    "20,20,3,4,80,0,\"[80,31]\"\n"
    "14,14,3,6,84,0,\"[84,7]\"\n"
    "14,14,9,6,84,0,\"[84,9]\"\n"
    "18,18,5,6,108,0,\"[108,26]\"\n"
    "18,6,7,6,108,0,\"[108,31]\"\n"
    "30,30,17,4,120,0,\"[120,41]\"\n"
    "21,21,10,6,126,0,\"[126,7]\"\n"
    "21,21,2,6,126,0,\"[126,8]\"\n"
    "28,28,11,6,168,0,\"[168,20]\"\n"
    "28,14,11,6,168,0,\"[168,21]\"\n"
    "36,12,7,6,216,0,\"[216,78]\"\n"
    "36,6,7,6,216,0,\"[216,81]\"\n"
    "42,42,19,6,252,0,\"[252,28]\"\n"
    "42,42,11,6,252,0,\"[252,29]\"\n"
    "5,5,4,2,10,1,\"[10,1]\"\n"
    "8,8,7,2,16,1,\"[16,7]\"\n"
    "8,4,7,2,16,1,\"[16,9]\"\n"
    "3,3,2,8,24,1,\"[24,1]\"\n"
    "12,6,11,2,24,1,\"[24,4]\"\n"
    "12,12,11,2,24,1,\"[24,6]\"\n"
    "8,4,3,4,32,1,\"[32,15]\"\n"
    "3,3,2,12,36,1,\"[36,6]\"\n"
    "13,13,3,3,39,1,\"[39,1]\"\n"
    "5,5,2,8,40,1,\"[40,3]\"\n"
    "24,6,5,2,48,1,\"[48,5]\"\n"
    "12,6,11,4,48,1,\"[48,10]\"\n"
    "8,4,3,6,48,1,\"[48,26]\"\n"
    "11,11,3,5,55,1,\"[55,1]\"\n"
    "5,5,2,12,60,1,\"[60,6]\"\n"
    "21,21,4,3,63,1,\"[63,3]\"\n"
    "13,13,4,6,78,1,\"[78,1]\"\n"
    "7,7,3,12,84,1,\"[84,1]\"\n"
    "9,9,2,12,108,1,\"[108,9]\"\n"
    "15,15,2,8,120,1,\"[120,7]\"\n"
    "21,21,5,6,126,1,\"[126,9]\"\n"
    "13,13,2,12,156,1,\"[156,7]\"\n"
    "40,20,13,4,160,1,\"[160,67]\"\n"
    "40,40,3,4,160,1,\"[160,68]\"\n"
    "28,14,3,6,168,1,\"[168,7]\"\n"
    "28,28,3,6,168,1,\"[168,9]\"\n"
    "60,60,17,4,240,1,\"[240,120]\"\n"
    "35,35,3,12,420,1,\"[420,15]\"\n"
    "39,39,2,12,468,1,\"[468,30]\"\n";

FixtureTables parse_fixture_csv(std::istream& in) {
    FixtureTables tables;
    std::string line;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            if (!fields.empty() && fields[0] == "n") continue; // header row
        }
        if (fields.size() != 7)
            throw Error(Errc::Parse,
                        "fixtures: line " + std::to_string(line_no) + ": expected 7 columns");
        FixtureRow row;
        try {
            row.params.n = std::stoi(fields[0]);
            row.params.l = std::stoi(fields[1]);
            row.params.r = std::stoi(fields[2]);
            row.params.t = std::stoi(fields[3]);
            row.order = std::stoi(fields[4]);
            row.rank = std::stoi(fields[5]);
        } catch (const std::exception&) {
            throw Error(Errc::Parse, "fixtures: line " + std::to_string(line_no) + ": bad number");
        }
        row.gap_id = fields[6];
        auto violations = param_violations(row.params.n, row.params.t, row.params.l, row.params.r);
        if (!violations.empty())
            throw Error(Errc::Parse, "fixtures: line " + std::to_string(line_no) +
                                         ": invalid parameters " + to_string(row.params));
        if (row.order != row.params.n * row.params.t)
            throw Error(Errc::Parse,
                        "fixtures: line " + std::to_string(line_no) + ": order != n*t");
        if (row.rank == 0) tables.table_rank0.push_back(std::move(row));
        else if (row.rank == 1) tables.table_rank1.push_back(std::move(row));
        else
            throw Error(Errc::Parse, "fixtures: line " + std::to_string(line_no) +
                                         ": rank must be 0 or 1");
    }
    return tables;
}

} // namespace

std::vector<FixtureRow> FixtureTables::all() const {
    std::vector<FixtureRow> rows = table_rank0;
    rows.insert(rows.end(), table_rank1.begin(), table_rank1.end());
    return rows;
}

std::string fixtures_csv() { return kFixtureCsv; }

FixtureTables builtin_fixtures() {
    std::istringstream in(kFixtureCsv);
    return parse_fixture_csv(in);
}

FixtureTables load_fixtures_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "fixtures: cannot open " + path);
    return parse_fixture_csv(in);
}

// --- verification -----------------------------------------------------------------

VerifyReport verify_tables(const std::vector<AtlasClass>& classes, const FixtureTables& fixtures,
                           const ClassifyOptions& options) {
    VerifyReport report;
    std::vector<int> match_count(classes.size(), 0);

    // member tuple -> class index
    std::map<MetacyclicParams, std::size_t> member_index;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (const auto& m : classes[c].members) member_index.emplace(m, c);
    }

    for (const FixtureRow& fixture : fixtures.all()) {
        FiniteGroup g = FiniteGroup::split_metacyclic(fixture.params, options.cap);
        int observed = rank_ferraz(g).rank;
        if (observed != fixture.rank) {
            report.rank_mismatch.push_back({fixture, observed});
            continue;
        }

        std::size_t found = classes.size();
        if (auto it = member_index.find(fixture.params); it != member_index.end()) {
            found = it->second;
        } else {
            // fixture tuple not enumerated (e.g. filtered space): fall back to
            // an isomorphism scan over classes of equal rank and fingerprint
            GroupFingerprint fp = fingerprint(g);
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (classes[c].rep.rank != fixture.rank || classes[c].fp != fp) continue;
                FiniteGroup rep = FiniteGroup::split_metacyclic(classes[c].rep.params, options.cap);
                IsoResult iso = is_isomorphic(g, rep, options.iso_budget);
                if (iso.verdict == IsoVerdict::Undecided)
                    throw Error(Errc::Internal, "verify_tables: isomorphism budget exhausted on " +
                                                    to_string(fixture.params));
                if (iso.verdict == IsoVerdict::Isomorphic) {
                    found = c;
                    break;
                }
            }
        }
        if (found == classes.size()) {
            report.unmatched_fixture.push_back(fixture);
            continue;
        }
        if (match_count[found]++ > 0) {
            report.duplicate_match.push_back(fixture);
            continue;
        }
        report.matched.push_back({fixture, classes[found].rep.params});
        if (fixture.rank == 0) ++report.matched_rank0;
        else ++report.matched_rank1;
    }

    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].abelian) {
            report.degenerate_classes.push_back(classes[c].rep);
        } else if (match_count[c] == 0) {
            report.unmatched_atlas.push_back(classes[c].rep);
        }
    }
    return report;
}

VerifyReport run_atlas_verification(const FixtureTables& fixtures, const ClassifyOptions& options) {
    auto candidates = candidate_space();
    auto classified = classify_space(candidates, options);
    auto classes = deduplicate(classified.rows, options);
    return verify_tables(classes, fixtures, options);
}

} // namespace cutrank
