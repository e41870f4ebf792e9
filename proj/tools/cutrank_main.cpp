// cutrank — exact cut/ecut classification of small finite groups.
//
// Subcommands: rank, classes, shoda, atlas. Output is deterministic: fixed
// field order, no timestamps. Exit codes: 0 success, 1 verification mismatch,
// 2 parse error, 3 cap exceeded, 4 unsupported family, 5 internal
// inconsistency.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutrank/atlas.hpp"
#include "cutrank/csv.hpp"
#include "cutrank/error.hpp"
#include "cutrank/group_spec.hpp"
#include "cutrank/numtheory.hpp"
#include "cutrank/power_classes.hpp"
#include "cutrank/rank.hpp"
#include "cutrank/shoda.hpp"

using json = nlohmann::ordered_json;
using namespace cutrank;

namespace {

struct GlobalOptions {
    std::string format = "json";
    int cap = kDefaultOrderCap;
    int workers = 0;
    long long iso_budget = kDefaultIsoBudget;
    bool deterministic = false;
};

ClassifyOptions to_classify_options(const GlobalOptions& g) {
    return ClassifyOptions{g.cap, g.workers, g.iso_budget, g.deterministic};
}

FiniteGroup load_group(const std::string& spec, const std::string& cayley_path, int cap) {
    if (!cayley_path.empty()) return group_from_cayley_csv_file(cayley_path, cap);
    return parse_group_spec(spec, cap);
}

std::string contribution_string(const ShodaPair& pair) {
    if (pair.contrib_den == 1) return std::to_string(pair.contrib_num);
    return std::to_string(pair.contrib_num) + "/" + std::to_string(pair.contrib_den);
}

json witness_json(const FiniteGroup& g, const EcutWitness& w) {
    json obj;
    obj["verdict"] = ecut_verdict_name(w.verdict);
    if (w.verdict == EcutVerdict::SingleSplitQClass) {
        obj["q_class"] = w.q_block;
        obj["q_class_names"] = json::array();
        for (int x : w.q_block) obj["q_class_names"].push_back(g.element_name(x));
        obj["r_classes"] = {w.r_blocks[0], w.r_blocks[1]};
    }
    return obj;
}

int cmd_rank(const GlobalOptions& opts, const std::string& spec, const std::string& cayley) {
    FiniteGroup g = load_group(spec, cayley, opts.cap);
    ClassPartition cp = class_partition(g);
    RankReport report = rank_ferraz(g, cp);

    if (opts.format == "csv") {
        std::cout << "order,n_C,n_R,n_Q,rank,verdict\n"
                  << g.order() << "," << report.n_C << "," << report.n_R << "," << report.n_Q
                  << "," << report.rank << "," << cut_verdict_name(report.verdict) << "\n";
    } else if (opts.format == "text") {
        std::cout << "order   " << g.order() << "\n"
                  << "n_C     " << report.n_C << "\n"
                  << "n_R     " << report.n_R << "\n"
                  << "n_Q     " << report.n_Q << "\n"
                  << "rank    " << report.rank << "\n"
                  << "verdict " << cut_verdict_name(report.verdict) << "\n";
    } else {
        json out;
        out["spec"] = cayley.empty() ? spec : "cayley:" + cayley;
        out["order"] = g.order();
        out["n_C"] = report.n_C;
        out["n_R"] = report.n_R;
        out["n_Q"] = report.n_Q;
        out["rank"] = report.rank;
        out["verdict"] = cut_verdict_name(report.verdict);
        if (report.witness && report.witness->verdict == EcutVerdict::SingleSplitQClass) {
            out["witness"] = witness_json(g, *report.witness);
        }
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_classes(const GlobalOptions& opts, const std::string& spec, const std::string& cayley) {
    FiniteGroup g = load_group(spec, cayley, opts.cap);
    ClassPartition cp = class_partition(g);

    struct Row {
        int cls;
        int rep;
        int size;
        int order;
        std::string tag;
        bool real;
        int r_block;
        int q_block;
    };
    std::vector<Row> rows;
    for (int c = 0; c < cp.conj.count(); ++c) {
        int rep = cp.conj.blocks[c][0];
        ElementClassification ec = classify_element(g, cp.conj, rep);
        rows.push_back(Row{c, rep, (int)cp.conj.blocks[c].size(), g.element_order(rep),
                           rationality_name(ec.tag), ec.is_real, cp.r_classes.block_of[rep],
                           cp.q_classes.block_of[rep]});
    }

    if (opts.format == "csv") {
        std::cout << "class,representative,size,element_order,rationality,real,r_block,q_block\n";
        for (const auto& row : rows) {
            std::cout << row.cls << "," << csv_quote(g.element_name(row.rep)) << "," << row.size
                      << "," << row.order << "," << row.tag << "," << (row.real ? 1 : 0) << ","
                      << row.r_block << "," << row.q_block << "\n";
        }
    } else if (opts.format == "text") {
        for (const auto& row : rows) {
            std::cout << "class " << row.cls << ": rep " << g.element_name(row.rep) << " size "
                      << row.size << " order " << row.order << " " << row.tag
                      << (row.real ? " real" : "") << " r-block " << row.r_block << " q-block "
                      << row.q_block << "\n";
        }
    } else {
        json out;
        out["spec"] = cayley.empty() ? spec : "cayley:" + cayley;
        out["order"] = g.order();
        out["n_C"] = cp.n_C;
        out["n_R"] = cp.n_R;
        out["n_Q"] = cp.n_Q;
        out["rank"] = cp.n_R - cp.n_Q;
        out["classes"] = json::array();
        for (const auto& row : rows) {
            json c;
            c["class"] = row.cls;
            c["representative"] = g.element_name(row.rep);
            c["rep_index"] = row.rep;
            c["size"] = row.size;
            c["element_order"] = row.order;
            c["rationality"] = row.tag;
            c["real"] = row.real;
            c["r_block"] = row.r_block;
            c["q_block"] = row.q_block;
            out["classes"].push_back(std::move(c));
        }
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

struct ParsedMetacyclic {
    int n = 0, t = 0, l = 0, r = 0;
};

std::optional<ParsedMetacyclic> parse_m_spec(const std::string& stripped) {
    if (stripped.size() < 4 || stripped[0] != 'M' || stripped[1] != '(') return std::nullopt;
    ParsedMetacyclic p;
    int consumed = 0;
    if (std::sscanf(stripped.c_str(), "M(%d,%d,%d,%d)%n", &p.n, &p.t, &p.l, &p.r, &consumed) != 4 ||
        consumed != (int)stripped.size())
        return std::nullopt;
    return p;
}

/// Strict "<letter><digits>" spec; rejects trailing input such as products.
std::optional<int> parse_family_int(const std::string& stripped, char letter) {
    if (stripped.size() < 2 || stripped[0] != letter) return std::nullopt;
    int value = 0;
    for (std::size_t i = 1; i < stripped.size(); ++i) {
        if (!std::isdigit((unsigned char)stripped[i])) return std::nullopt;
        value = value * 10 + (stripped[i] - '0');
        if (value > 100000) return std::nullopt;
    }
    return value;
}

int cmd_shoda(const GlobalOptions& opts, const std::string& spec, const std::string& family_flag) {
    std::string stripped;
    for (char c : spec)
        if (!std::isspace((unsigned char)c)) stripped.push_back(c);
    if (stripped.empty()) throw Error(Errc::Parse, "shoda: empty group spec");

    std::string family = family_flag;
    if (family == "auto") {
        switch (stripped[0]) {
        case 'C': family = "cyclic"; break;
        case 'D': family = "dihedral"; break;
        case 'Q': family = "quaternion"; break;
        case 'M': family = "metacyclic-pq"; break;
        default:
            throw Error(Errc::UnsupportedFamily, "shoda: no pair-set family for spec " + spec);
        }
    }

    FamilyShoda fam = [&]() -> FamilyShoda {
        if (family == "cyclic") {
            auto n = parse_family_int(stripped, 'C');
            if (!n) throw Error(Errc::UnsupportedFamily, "shoda: spec is not C<n>");
            if (*n < 1) throw Error(Errc::Parse, "shoda: bad cyclic order");
            return shoda_pairs_cyclic(*n);
        }
        if (family == "dihedral") {
            auto order = parse_family_int(stripped, 'D');
            if (!order) throw Error(Errc::UnsupportedFamily, "shoda: spec is not D<2n>");
            if (*order % 2 != 0 || *order < 6)
                throw Error(Errc::Parse, "shoda: dihedral spec needs an even order >= 6");
            return shoda_pairs_dihedral(*order / 2);
        }
        if (family == "quaternion") {
            auto order = parse_family_int(stripped, 'Q');
            if (!order) throw Error(Errc::UnsupportedFamily, "shoda: spec is not Q<4m>");
            if (*order % 4 != 0 || *order < 8)
                throw Error(Errc::Parse, "shoda: quaternion spec needs an order divisible by 4, >= 8");
            return shoda_pairs_quaternion(*order / 4);
        }
        if (family == "metacyclic-pq") {
            auto parsed = parse_m_spec(stripped);
            if (!parsed) throw Error(Errc::UnsupportedFamily, "shoda: spec is not M(n,t,l,r)");
            auto qf = nt::factorize(parsed->n);
            auto pf = nt::factorize(parsed->t);
            if (qf.size() != 1 || pf.size() != 1 || qf[0].first == pf[0].first ||
                parsed->l != parsed->n || std::gcd(parsed->r, parsed->n) != 1 ||
                nt::mult_order_mod(parsed->r, parsed->n) != parsed->t) {
                throw Error(Errc::UnsupportedFamily,
                            "shoda: M spec is not a faithful prime-power metacyclic group");
            }
            return shoda_pairs_metacyclic_pq(pf[0].first, pf[0].second, qf[0].first, qf[0].second,
                                             parsed->r);
        }
        throw Error(Errc::UnsupportedFamily, "shoda: unknown family " + family);
    }();

    RankReport shoda_rank = rank_from_pairs(fam.group, fam.pairs);
    RankReport oracle = rank_ferraz(fam.group);
    bool crosscheck_ok = shoda_rank.rank == oracle.rank;

    if (opts.format == "csv") {
        std::cout << "H_order,K_order,index_HK,index_NH,k,h_rep,contribution\n";
        for (const auto& pair : fam.pairs) {
            std::cout << pair.h.order() << "," << pair.k.order() << "," << pair.index_hk << ","
                      << pair.index_nh << "," << pair.k_invariant << ","
                      << csv_quote(fam.group.element_name(pair.h_rep)) << ","
                      << csv_quote(contribution_string(pair)) << "\n";
        }
        std::cout << "rank," << shoda_rank.rank << ",oracle," << oracle.rank << ",crosscheck,"
                  << (crosscheck_ok ? "ok" : "MISMATCH") << "\n";
    } else if (opts.format == "text") {
        for (std::size_t i = 0; i < fam.pairs.size(); ++i) {
            const auto& pair = fam.pairs[i];
            std::cout << "pair " << i << ": |H|=" << pair.h.order() << " |K|=" << pair.k.order()
                      << " [H:K]=" << pair.index_hk << " [N:H]=" << pair.index_nh
                      << " k=" << pair.k_invariant << " h=" << fam.group.element_name(pair.h_rep)
                      << " contribution " << contribution_string(pair) << "\n";
        }
        std::cout << "rank " << shoda_rank.rank << " (" << cut_verdict_name(shoda_rank.verdict)
                  << "), oracle " << oracle.rank << ", crosscheck "
                  << (crosscheck_ok ? "ok" : "MISMATCH") << "\n";
    } else {
        json out;
        out["spec"] = spec;
        out["family"] = family;
        out["order"] = fam.group.order();
        out["pairs"] = json::array();
        for (const auto& pair : fam.pairs) {
            json p;
            p["H_order"] = pair.h.order();
            p["K_order"] = pair.k.order();
            p["index_HK"] = pair.index_hk;
            p["index_NH"] = pair.index_nh;
            p["k"] = pair.k_invariant;
            p["h_rep"] = fam.group.element_name(pair.h_rep);
            p["contribution"] = contribution_string(pair);
            out["pairs"].push_back(std::move(p));
        }
        out["rank"] = shoda_rank.rank;
        out["verdict"] = cut_verdict_name(shoda_rank.verdict);
        out["oracle_rank"] = oracle.rank;
        out["crosscheck"] = crosscheck_ok ? "ok" : "MISMATCH";
        std::cout << out.dump(2) << "\n";
    }
    if (!crosscheck_ok)
        throw Error(Errc::Internal, "shoda: pair-set rank disagrees with the oracle");
    return 0;
}

json fixture_json(const FixtureRow& f) {
    json obj;
    obj["n"] = f.params.n;
    obj["l"] = f.params.l;
    obj["r"] = f.params.r;
    obj["t"] = f.params.t;
    obj["order"] = f.order;
    obj["rank"] = f.rank;
    obj["gap_id"] = f.gap_id;
    return obj;
}

json atlas_row_json(const AtlasRow& row) {
    json obj;
    obj["n"] = row.params.n;
    obj["t"] = row.params.t;
    obj["l"] = row.params.l;
    obj["r"] = row.params.r;
    obj["order"] = row.order;
    obj["rank"] = row.rank;
    return obj;
}

int cmd_atlas(const GlobalOptions& opts, const std::string& mode, const std::string& fixtures_path,
              bool wide) {
    ClassifyOptions copts = to_classify_options(opts);
    auto candidates = wide ? candidate_space_wide() : candidate_space();
    auto classified = classify_space(candidates, copts);
    auto classes = deduplicate(classified.rows, copts);

    if (mode == "enumerate") {
        if (opts.format == "json") {
            json out;
            out["classes"] = json::array();
            out["degenerate_classes"] = json::array();
            for (const auto& cls : classes) {
                json row = atlas_row_json(cls.rep);
                row["presentations"] = (int)cls.members.size();
                if (cls.abelian) out["degenerate_classes"].push_back(std::move(row));
                else out["classes"].push_back(std::move(row));
            }
            std::cout << out.dump(2) << "\n";
        } else { // csv and text share the tabular shape
            std::cout << "n,t,l,r,order,rank\n";
            for (const auto& cls : classes) {
                if (cls.abelian) continue;
                std::cout << cls.rep.params.n << "," << cls.rep.params.t << "," << cls.rep.params.l
                          << "," << cls.rep.params.r << "," << cls.rep.order << "," << cls.rep.rank
                          << "\n";
            }
        }
        return 0;
    }

    if (mode != "verify") throw Error(Errc::Parse, "atlas: mode must be enumerate or verify");

    FixtureTables fixtures =
        fixtures_path.empty() ? builtin_fixtures() : load_fixtures_csv(fixtures_path);
    VerifyReport report = verify_tables(classes, fixtures, copts);

    json out;
    out["fixtures"] = (int)fixtures.all().size();
    out["matched"] = json::array();
    for (const auto& m : report.matched) {
        json row = fixture_json(m.fixture);
        json rep;
        rep["n"] = m.atlas_rep.n;
        rep["t"] = m.atlas_rep.t;
        rep["l"] = m.atlas_rep.l;
        rep["r"] = m.atlas_rep.r;
        row["atlas_class"] = std::move(rep);
        out["matched"].push_back(std::move(row));
    }
    out["rank_mismatch"] = json::array();
    for (const auto& m : report.rank_mismatch) {
        json row = fixture_json(m.fixture);
        row["observed_rank"] = m.observed_rank;
        out["rank_mismatch"].push_back(std::move(row));
    }
    out["unmatched_fixture"] = json::array();
    for (const auto& f : report.unmatched_fixture) out["unmatched_fixture"].push_back(fixture_json(f));
    out["unmatched_atlas"] = json::array();
    for (const auto& row : report.unmatched_atlas) out["unmatched_atlas"].push_back(atlas_row_json(row));
    out["degenerate_classes"] = json::array();
    for (const auto& row : report.degenerate_classes)
        out["degenerate_classes"].push_back(atlas_row_json(row));
    json summary;
    summary["matched"] = (int)report.matched.size();
    summary["matched_rank0"] = report.matched_rank0;
    summary["matched_rank1"] = report.matched_rank1;
    summary["perfect"] = report.perfect();
    out["summary"] = std::move(summary);
    std::cout << out.dump(2) << "\n";
    return report.perfect() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cutrank: central-unit rank and cut/ecut classification of finite groups"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted after the subcommand too

    GlobalOptions opts;
    if (const char* env_cap = std::getenv("CUTRANK_CAP")) opts.cap = std::atoi(env_cap);

    app.add_option("--format", opts.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--cap", opts.cap, "Order cap for constructed groups")->capture_default_str();
    app.add_option("--workers", opts.workers, "Worker threads (0 = hardware concurrency)");
    app.add_option("--iso-budget", opts.iso_budget, "Node budget for isomorphism search");
    app.add_flag("--deterministic", opts.deterministic, "Force sequential candidate order");

    std::string spec, cayley, family = "auto", fixtures_path, atlas_mode;
    bool wide = false;

    CLI::App* rank_cmd = app.add_subcommand("rank", "Class counts, rank and cut/ecut verdict");
    rank_cmd->add_option("spec", spec, "Group spec, e.g. C12, D10, Q8, M(5,4,5,2), C2xA[4,2]");
    rank_cmd->add_option("--cayley", cayley, "Load the group from a Cayley-table CSV file");

    CLI::App* classes_cmd = app.add_subcommand("classes", "Per-class rationality table");
    classes_cmd->add_option("spec", spec, "Group spec");
    classes_cmd->add_option("--cayley", cayley, "Load the group from a Cayley-table CSV file");

    CLI::App* shoda_cmd = app.add_subcommand("shoda", "Family Shoda pairs and the rank they sum to");
    shoda_cmd->add_option("spec", spec, "Group spec of a supported family")->required();
    shoda_cmd->add_option("--family", family, "cyclic, dihedral, quaternion, metacyclic-pq or auto")
        ->check(CLI::IsMember({"auto", "cyclic", "dihedral", "quaternion", "metacyclic-pq"}));

    CLI::App* atlas_cmd = app.add_subcommand("atlas", "Split metacyclic classification sweep");
    atlas_cmd->add_option("mode", atlas_mode, "enumerate or verify")->required();
    atlas_cmd->add_option("--fixtures", fixtures_path, "Replacement fixture CSV for verify");
    atlas_cmd->add_flag("--wide", wide, "Use the slack candidate space (every n with phi(n) <= 48)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (rank_cmd->parsed()) {
            if (spec.empty() && cayley.empty())
                throw Error(Errc::Parse, "rank: a group spec or --cayley file is required");
            return cmd_rank(opts, spec, cayley);
        }
        if (classes_cmd->parsed()) {
            if (spec.empty() && cayley.empty())
                throw Error(Errc::Parse, "classes: a group spec or --cayley file is required");
            return cmd_classes(opts, spec, cayley);
        }
        if (shoda_cmd->parsed()) return cmd_shoda(opts, spec, family);
        if (atlas_cmd->parsed()) return cmd_atlas(opts, atlas_mode, fixtures_path, wide);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)e.code();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
