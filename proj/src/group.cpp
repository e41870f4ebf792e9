#include "cutrank/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "cutrank/error.hpp"
#include "cutrank/numtheory.hpp"

namespace cutrank {

namespace {

std::vector<int> greedy_generators(const FiniteGroup& g);

} // namespace

// --- construction -----------------------------------------------------------

void FiniteGroup::set_word(const MetacyclicParams& p) {
    word_ = p;
    wn_ = p.n;
    wt_ = p.t;
    wl_ = p.l % p.n;
    order_ = p.n * p.t;
    order_factors_ = nt::factorize(order_);

    rpow_.resize(wt_);
    rpow_[0] = 1 % wn_;
    for (int j = 1; j < wt_; ++j) rpow_[j] = (int)((long long)rpow_[j - 1] * p.r % wn_);

    // inverse of a^i b^j is a^{(-i - l*c) r^-j} b^{(t-j) mod t}, c = [j > 0]
    int o = nt::mult_order_mod(p.r, p.n);
    long long rinv = nt::pow_mod(p.r, o - 1, p.n);
    std::vector<long long> rinvpow(wt_);
    rinvpow[0] = 1 % wn_;
    for (int j = 1; j < wt_; ++j) rinvpow[j] = rinvpow[j - 1] * rinv % wn_;

    inv_.resize(order_);
    for (int j = 0; j < wt_; ++j) {
        int jp = (wt_ - j) % wt_;
        int c = j > 0 ? 1 : 0;
        for (int i = 0; i < wn_; ++i) {
            long long ii = ((-(long long)i - (long long)wl_ * c) % wn_ + wn_) % wn_;
            inv_[j * wn_ + i] = jp * wn_ + (int)(ii * rinvpow[j] % wn_);
        }
    }

    generators_.clear();
    if (wn_ > 1) generators_.push_back(1);   // a
    if (wt_ > 1) generators_.push_back(wn_); // b
}

void FiniteGroup::finish_table_init() {
    order_factors_ = nt::factorize(order_);
    inv_.assign(order_, -1);
    for (int g = 0; g < order_; ++g) {
        for (int h = 0; h < order_; ++h) {
            if (mul(g, h) == 0) {
                inv_[g] = h;
                break;
            }
        }
        if (inv_[g] < 0) throw std::logic_error("group table has no inverse for an element");
    }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    FiniteGroup g;
    g.set_word(MetacyclicParams{n, 1, n, 1});
    return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
    FiniteGroup g;
    g.set_word(MetacyclicParams{n, 2, n, n - 1});
    return g;
}

FiniteGroup FiniteGroup::generalized_quaternion(int m) {
    if (m < 2) throw std::invalid_argument("generalized_quaternion: m must be >= 2");
    FiniteGroup g;
    g.set_word(MetacyclicParams{2 * m, 2, m, 2 * m - 1});
    return g;
}

FiniteGroup FiniteGroup::split_metacyclic(const MetacyclicParams& params, int cap) {
    auto violations = param_violations(params.n, params.t, params.l, params.r);
    if (!violations.empty()) {
        validate_params(params.n, params.t, params.l, params.r); // throws with the full list
    }
    long long order = (long long)params.n * params.t;
    if (order > cap) {
        throw Error(Errc::CapExceeded, "split_metacyclic: order " + std::to_string(order) +
                                           " exceeds cap " + std::to_string(cap));
    }
    FiniteGroup g;
    g.set_word(params);
    return g;
}

FiniteGroup FiniteGroup::split_metacyclic(int n, int t, int l, int r, int cap) {
    return split_metacyclic(MetacyclicParams{n, t, l, r}, cap);
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& factors) {
    auto inv_factors = nt::invariant_factors(factors);
    if (inv_factors.empty()) return trivial();
    FiniteGroup g = cyclic(inv_factors[0]);
    for (std::size_t i = 1; i < inv_factors.size(); ++i) {
        g = direct_product(g, cyclic(inv_factors[i]));
    }
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b, int cap) {
    long long order = (long long)a.order() * b.order();
    if (order > cap) {
        throw Error(Errc::CapExceeded, "direct_product: order " + std::to_string(order) +
                                           " exceeds cap " + std::to_string(cap));
    }
    FiniteGroup g;
    g.order_ = (int)order;
    g.table_.resize((std::size_t)order * order);
    int nb = b.order();
    for (int g1 = 0; g1 < a.order(); ++g1) {
        for (int h1 = 0; h1 < nb; ++h1) {
            std::size_t row = (std::size_t)(g1 * nb + h1) * order;
            for (int g2 = 0; g2 < a.order(); ++g2) {
                int ga = a.mul(g1, g2) * nb;
                for (int h2 = 0; h2 < nb; ++h2) {
                    g.table_[row + g2 * nb + h2] = (uint16_t)(ga + b.mul(h1, h2));
                }
            }
        }
    }
    g.finish_table_init();
    for (int x : a.generators()) g.generators_.push_back(x * nb);
    for (int y : b.generators()) g.generators_.push_back(y);
    return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table, int cap) {
    int n = (int)table.size();
    if (n < 1) throw Error(Errc::Parse, "cayley table: empty");
    if (n > cap) {
        throw Error(Errc::CapExceeded,
                    "cayley table: order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    for (const auto& row : table) {
        if ((int)row.size() != n) throw Error(Errc::Parse, "cayley table: not square");
        for (int v : row) {
            if (v < 0 || v >= n) throw Error(Errc::Parse, "cayley table: entry out of range");
        }
    }
    // identity at index 0
    for (int g = 0; g < n; ++g) {
        if (table[0][g] != g || table[g][0] != g) {
            throw Error(Errc::Parse, "cayley table: index 0 is not a two-sided identity");
        }
    }
    // latin square
    for (int g = 0; g < n; ++g) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int h = 0; h < n; ++h) {
            if (seen_row[table[g][h]]++) throw Error(Errc::Parse, "cayley table: row not a permutation");
            if (seen_col[table[h][g]]++) throw Error(Errc::Parse, "cayley table: column not a permutation");
        }
    }
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table_[(std::size_t)a * n + b] = (uint16_t)table[a][b];
    g.finish_table_init();
    // associativity: exhaustive for small orders, strided sample above
    try {
        g.validate_axioms(256);
    } catch (const std::logic_error& e) {
        throw Error(Errc::Parse, std::string("cayley table: ") + e.what());
    }
    g.generators_ = greedy_generators(g);
    return g;
}

FiniteGroup FiniteGroup::with_table() const {
    if (!table_.empty()) return *this;
    FiniteGroup g;
    g.order_ = order_;
    g.word_ = word_;
    g.table_.resize((std::size_t)order_ * order_);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) g.table_[(std::size_t)a * order_ + b] = (uint16_t)mul(a, b);
    g.finish_table_init();
    g.generators_ = generators_;
    return g;
}

// --- element arithmetic -------------------------------------------------------

int FiniteGroup::power(int g, long long e) const {
    if (e < 0) throw std::invalid_argument("power: exponent must be >= 0");
    int result = 0;
    int base = g;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteGroup::element_order(int g) const {
    int d = order_;
    for (auto [p, k] : order_factors_) {
        for (int i = 0; i < k && d % p == 0 && power(g, d / p) == 0; ++i) d /= p;
    }
    return d;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> orders(order_);
    for (int g = 0; g < order_; ++g) orders[g] = element_order(g);
    return orders;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int g = 0; g < order_; ++g) e = std::lcm(e, (long long)element_order(g));
    return (int)e;
}

bool FiniteGroup::is_abelian() const {
    if (word_) return word_->r % word_->n == 1 % word_->n;
    for (int g = 1; g < order_; ++g)
        for (int h = g + 1; h < order_; ++h)
            if (mul(g, h) != mul(h, g)) return false;
    return true;
}

void FiniteGroup::validate_axioms(int assoc_limit) const {
    for (int g = 0; g < order_; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g) throw std::logic_error("identity is not neutral");
        if (mul(g, inv_[g]) != 0 || mul(inv_[g], g) != 0) throw std::logic_error("inverse fails");
        for (int h = 0; h < order_; ++h) {
            int v = mul(g, h);
            if (v < 0 || v >= order_) throw std::logic_error("product out of range");
        }
    }
    if (order_ <= assoc_limit) {
        for (int g = 0; g < order_; ++g)
            for (int h = 0; h < order_; ++h)
                for (int k = 0; k < order_; ++k)
                    if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                        throw std::logic_error("associativity fails");
    } else {
        // deterministic strided sample
        int stride = std::max(1, order_ / 64);
        for (int g = 0; g < order_; g += stride)
            for (int h = 0; h < order_; ++h)
                for (int k = 0; k < order_; k += stride)
                    if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                        throw std::logic_error("associativity fails");
    }
}

std::string FiniteGroup::element_name(int g) const {
    if (g == 0) return "e";
    if (word_) {
        int i = g % wn_, j = g / wn_;
        std::ostringstream oss;
        if (i == 1) oss << "a";
        else if (i > 1) oss << "a^" << i;
        if (j > 0) {
            if (i > 0) oss << " ";
            if (j == 1) oss << "b";
            else oss << "b^" << j;
        }
        return oss.str();
    }
    return "g" + std::to_string(g);
}

// --- subgroups ---------------------------------------------------------------

bool Subgroup::contains(int g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup s;
    s.elems.resize(g.order());
    std::iota(s.elems.begin(), s.elems.end(), 0);
    return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int s : seed) {
            int y = g.mul(x, s);
            if (!in[y]) {
                in[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return Subgroup{std::move(queue)};
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
    if (h.elems.empty() || h.elems[0] != 0) return false;
    for (int x : h.elems) {
        if (x < 0 || x >= g.order()) return false;
        for (int y : h.elems)
            if (!h.contains(g.mul(x, y))) return false;
    }
    return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& k) {
    Subgroup n;
    for (int x = 0; x < g.order(); ++x) {
        bool normalizes = true;
        for (int e : k.elems) {
            if (!k.contains(g.conjugate(x, e))) {
                normalizes = false;
                break;
            }
        }
        if (normalizes) n.elems.push_back(x);
    }
    return n;
}

Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s) {
    Subgroup c;
    for (int x = 0; x < g.order(); ++x) {
        bool commutes = true;
        for (int e : s) {
            if (g.mul(x, e) != g.mul(e, x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) c.elems.push_back(x);
    }
    return c;
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, g.generators()); }

bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
    for (int x : ambient.elems)
        for (int e : h.elems)
            if (!h.contains(g.conjugate(x, e))) return false;
    return true;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> commutators;
    for (int x = 0; x < g.order(); ++x) {
        for (int y = x + 1; y < g.order(); ++y) {
            int c = g.mul(g.mul(x, y), g.inv(g.mul(y, x)));
            if (!in[c]) {
                in[c] = 1;
                commutators.push_back(c);
            }
        }
    }
    return subgroup_closure(g, commutators);
}

std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_subgroup(g, n)) throw std::invalid_argument("quotient: N is not a subgroup");
    for (int x : g.generators())
        for (int e : n.elems)
            if (!n.contains(g.conjugate(x, e)))
                throw std::invalid_argument("quotient: N is not normal");

    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        int cid = (int)reps.size();
        reps.push_back(x);
        for (int e : n.elems) coset_of[g.mul(x, e)] = cid;
    }

    int q = (int)reps.size();
    FiniteGroup quo;
    quo.order_ = q;
    quo.table_.resize((std::size_t)q * q);
    for (int c1 = 0; c1 < q; ++c1)
        for (int c2 = 0; c2 < q; ++c2)
            quo.table_[(std::size_t)c1 * q + c2] = (uint16_t)coset_of[g.mul(reps[c1], reps[c2])];
    quo.finish_table_init();
    for (int x : g.generators()) {
        int img = coset_of[x];
        if (img != 0 && std::find(quo.generators_.begin(), quo.generators_.end(), img) ==
                            quo.generators_.end()) {
            quo.generators_.push_back(img);
        }
    }
    return {std::move(quo), std::move(coset_of)};
}

std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
    if (!is_subgroup(g, h)) throw std::invalid_argument("subgroup_as_group: not a subgroup");
    const auto& embed = h.elems;
    auto pos = [&](int parent) {
        return (int)(std::lower_bound(embed.begin(), embed.end(), parent) - embed.begin());
    };
    int n = (int)embed.size();
    FiniteGroup sub;
    sub.order_ = n;
    sub.table_.resize((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            sub.table_[(std::size_t)a * n + b] = (uint16_t)pos(g.mul(embed[a], embed[b]));
    sub.finish_table_init();
    sub.generators_ = greedy_generators(sub);
    return {std::move(sub), embed};
}

// --- conjugacy classes ---------------------------------------------------------

Partition conjugacy_classes(const FiniteGroup& g) {
    Partition part;
    part.block_of.assign(g.order(), -1);
    const auto& gens = g.generators();
    for (int x = 0; x < g.order(); ++x) {
        if (part.block_of[x] >= 0) continue;
        int id = (int)part.blocks.size();
        std::vector<int> orbit{x};
        part.block_of[x] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            int y = orbit[head];
            for (int s : gens) {
                int z = g.conjugate(s, y);
                if (part.block_of[z] < 0) {
                    part.block_of[z] = id;
                    orbit.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        part.blocks.push_back(std::move(orbit));
    }
    return part;
}

// --- isomorphism -----------------------------------------------------------------

namespace {

std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    Subgroup closure = trivial_subgroup();
    while (closure.order() < g.order()) {
        int best = -1, best_order = 0;
        for (int x = 0; x < g.order(); ++x) {
            if (closure.contains(x)) continue;
            int o = g.element_order(x);
            if (o > best_order) {
                best = x;
                best_order = o;
            }
        }
        gens.push_back(best);
        closure = subgroup_closure(g, gens);
    }
    return gens;
}

/// Generating sequence sorted by decreasing element order (greedy picks the
/// maximal order at each step, so it already is; kept explicit for clarity).
std::vector<int> generating_sequence(const FiniteGroup& g) { return greedy_generators(g); }

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct ElementProfile {
    int order;
    int class_size;
    int r_size;
    int q_size;
    auto operator<=>(const ElementProfile&) const = default;
};

struct IsoContext {
    Partition classes;
    std::vector<ElementProfile> profiles;
    std::vector<int> gens; // decreasing element order
};

IsoContext build_iso_context(const FiniteGroup& g) {
    IsoContext ctx;
    ctx.classes = conjugacy_classes(g);
    int nc = ctx.classes.count();

    std::vector<int> rep_order(nc);
    for (int c = 0; c < nc; ++c) rep_order[c] = g.element_order(ctx.classes.blocks[c][0]);

    // merge classes under inversion, then under coprime power maps
    DisjointSets rsets(nc);
    for (int c = 0; c < nc; ++c)
        rsets.unite(c, ctx.classes.block_of[g.inv(ctx.classes.blocks[c][0])]);
    DisjointSets qsets(nc);
    for (int c = 0; c < nc; ++c) {
        int rep = ctx.classes.blocks[c][0];
        int d = rep_order[c];
        for (int j = 2; j < d; ++j) {
            if (std::gcd(j, d) == 1) qsets.unite(c, ctx.classes.block_of[g.power(rep, j)]);
        }
    }
    std::vector<int> rsize(nc, 0), qsize(nc, 0);
    for (int c = 0; c < nc; ++c) {
        int sz = (int)ctx.classes.blocks[c].size();
        rsize[rsets.find(c)] += sz;
        qsize[qsets.find(c)] += sz;
    }
    ctx.profiles.resize(g.order());
    for (int x = 0; x < g.order(); ++x) {
        int c = ctx.classes.block_of[x];
        ctx.profiles[x] = ElementProfile{rep_order[c], (int)ctx.classes.blocks[c].size(),
                                         rsize[rsets.find(c)], qsize[qsets.find(c)]};
    }
    ctx.gens = generating_sequence(g);
    return ctx;
}

enum class SearchState { Found, Exhausted, Budget };

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    const IsoContext& cg;
    const IsoContext& ch;
    long long budget;
    std::vector<std::vector<int>> candidates; // per generator slot
    std::vector<int> images;
    std::vector<int> fmap, rmap;

    IsoSearch(const FiniteGroup& g_, const FiniteGroup& h_, const IsoContext& cg_,
              const IsoContext& ch_, long long budget_)
        : g(g_), h(h_), cg(cg_), ch(ch_), budget(budget_) {
        candidates.resize(cg.gens.size());
        for (std::size_t i = 0; i < cg.gens.size(); ++i) {
            const auto& want = cg.profiles[cg.gens[i]];
            for (int y = 0; y < h.order(); ++y)
                if (ch.profiles[y] == want) candidates[i].push_back(y);
        }
        images.assign(cg.gens.size(), -1);
    }

    // Verify the partial map on the subgroup generated by the first k
    // generators; a full-depth success is a complete verified isomorphism.
    SearchState closure_check(std::size_t k) {
        fmap.assign(g.order(), -1);
        rmap.assign(h.order(), -1);
        fmap[0] = 0;
        rmap[0] = 0;
        std::vector<int> queue{0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (std::size_t i = 0; i < k; ++i) {
                if (--budget < 0) return SearchState::Budget;
                int y = g.mul(x, cg.gens[i]);
                int fy = h.mul(fmap[x], images[i]);
                if (fmap[y] < 0) {
                    if (rmap[fy] >= 0) return SearchState::Exhausted; // not injective
                    fmap[y] = fy;
                    rmap[fy] = y;
                    queue.push_back(y);
                } else if (fmap[y] != fy) {
                    return SearchState::Exhausted; // inconsistent
                }
            }
        }
        return SearchState::Found;
    }

    SearchState search(std::size_t depth) {
        if (depth == cg.gens.size()) {
            return SearchState::Found; // closure at this depth already verified
        }
        for (int cand : candidates[depth]) {
            if (--budget < 0) return SearchState::Budget;
            images[depth] = cand;
            SearchState partial = closure_check(depth + 1);
            if (partial == SearchState::Budget) return partial;
            if (partial == SearchState::Found) {
                SearchState deeper = search(depth + 1);
                if (deeper != SearchState::Exhausted) return deeper;
            }
        }
        images[depth] = -1;
        return SearchState::Exhausted;
    }
};

} // namespace

GroupFingerprint fingerprint(const FiniteGroup& g) {
    GroupFingerprint fp;
    fp.order = g.order();

    std::map<int, int> hist;
    for (int x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
    fp.order_histogram.assign(hist.begin(), hist.end());

    Partition classes = conjugacy_classes(g);
    fp.class_sizes.reserve(classes.count());
    int central = 0;
    for (const auto& block : classes.blocks) {
        fp.class_sizes.push_back((int)block.size());
        if (block.size() == 1) ++central;
    }
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
    fp.center_order = central;

    Subgroup derived = derived_subgroup(g);
    fp.derived_order = derived.order();
    auto [ab, proj] = quotient(g, derived);
    fp.abelianization = abelian_invariants(ab);
    return fp;
}

std::string GroupFingerprint::to_string() const {
    std::ostringstream oss;
    oss << "|G|=" << order << " orders[";
    for (auto [o, c] : order_histogram) oss << o << ":" << c << " ";
    oss << "] classes[";
    for (int s : class_sizes) oss << s << " ";
    oss << "] Z=" << center_order << " G'=" << derived_order << " ab[";
    for (int f : abelianization) oss << f << " ";
    oss << "]";
    return oss.str();
}

std::vector<int> abelian_invariants(const FiniteGroup& g) {
    if (!g.is_abelian()) throw std::logic_error("abelian_invariants: group is not abelian");
    auto orders = g.element_orders();

    std::map<int, std::vector<int>> partitions; // prime -> partition, descending
    for (auto [p, e] : nt::factorize(g.order())) {
        // c_k = #elements of p-power order dividing p^k; s_k = log_p(c_k)
        std::vector<int> s{0};
        for (int k = 1;; ++k) {
            long long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            int count = 0;
            for (int o : orders) {
                if (pk % o == 0) ++count; // o divides p^k iff o is a p-power <= p^k
            }
            int logc = 0;
            long long v = 1;
            while (v < count) {
                v *= p;
                ++logc;
            }
            if (v != count) throw std::logic_error("abelian_invariants: element counts not a p-power");
            s.push_back(logc);
            if (logc == s[k - 1]) break; // stabilised
        }
        std::vector<int> conj; // conj[k-1] = #parts >= k
        for (std::size_t k = 1; k < s.size(); ++k)
            if (s[k] > s[k - 1]) conj.push_back(s[k] - s[k - 1]);
        // transpose the conjugate partition
        std::vector<int> parts;
        for (int i = 1; i <= (conj.empty() ? 0 : conj[0]); ++i) {
            int lambda = 0;
            for (std::size_t k = 0; k < conj.size(); ++k)
                if (conj[k] >= i) lambda = (int)k + 1;
            parts.push_back(lambda);
        }
        if (!parts.empty()) partitions[p] = std::move(parts);
    }

    std::size_t width = 0;
    for (const auto& [p, parts] : partitions) width = std::max(width, parts.size());
    std::vector<int> factors(width, 1);
    for (const auto& [p, parts] : partitions) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            long long v = 1;
            for (int i = 0; i < parts[k]; ++i) v *= p;
            factors[k] = (int)(factors[k] * v);
        }
    }
    return factors;
}

IsoResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, long long node_budget) {
    IsoResult result{IsoVerdict::NonIsomorphic, std::nullopt, 0};
    if (g.order() != h.order()) return result;
    if (fingerprint(g) != fingerprint(h)) return result;

    if (g.order() == 1) {
        result.verdict = IsoVerdict::Isomorphic;
        result.iso = Isomorphism{{0}};
        return result;
    }

    IsoContext cg = build_iso_context(g);
    IsoContext ch = build_iso_context(h);
    IsoSearch search(g, h, cg, ch, node_budget);
    SearchState state = search.search(0);
    result.nodes_used = node_budget - search.budget;
    if (state == SearchState::Budget) {
        result.verdict = IsoVerdict::Undecided;
        return result;
    }
    if (state == SearchState::Exhausted) {
        result.verdict = IsoVerdict::NonIsomorphic;
        return result;
    }
    // the closure check that admitted the last generator image already built
    // the full map; verify it on all pairs before handing it out
    Isomorphism iso{search.fmap};
    for (int x = 0; x < g.order(); ++x) {
        for (int y = 0; y < g.order(); ++y) {
            if (iso.map[g.mul(x, y)] != h.mul(iso.map[x], iso.map[y]))
                throw Error(Errc::Internal, "is_isomorphic: produced map is not a homomorphism");
        }
    }
    result.verdict = IsoVerdict::Isomorphic;
    result.iso = std::move(iso);
    return result;
}

} // namespace cutrank
