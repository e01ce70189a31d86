#include "wigner/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wigner {

namespace {

void check_path_lengths(int k1, int k2, int cap) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("path lengths must be >= 1");
    if (k1 + k2 > cap)
        throw std::invalid_argument("size cap exceeded: k1 + k2 <= " + std::to_string(cap));
}

// Visit every restricted-growth string over n_elems elements with exactly
// target_blocks blocks.
template <typename F>
void for_each_rgs(int n_elems, int target_blocks, F&& visit) {
    if (target_blocks < 1 || target_blocks > n_elems) return;
    std::vector<int> rgs(n_elems, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n_elems) {
            if (used == target_blocks) visit(rgs);
            return;
        }
        int remaining = n_elems - pos;
        int top = std::min(used, target_blocks - 1);
        for (int label = 0; label <= top; ++label) {
            int next_used = std::max(used, label + 1);
            if (target_blocks - next_used <= remaining - 1) {
                rgs[pos] = label;
                rec(pos + 1, next_used);
            }
        }
    };
    rec(0, 0);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PartitionTerm make_term(int k1, int k2, const std::vector<int>& rgs) {
    PartitionTerm t;
    t.k1 = k1;
    t.k2 = k2;
    t.block_of = rgs;
    t.block_count = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    t.endpoints_share_block = rgs[0] == rgs[k1];

    auto record = [&](int from, int to, int path) {
        int a = std::min(from, to), b = std::max(from, to);
        for (auto& e : t.edges) {
            if (e.a == a && e.b == b) {
                if (path == 1)
                    (from <= to ? e.fwd1 : e.rev1) += 1;
                else
                    (from <= to ? e.fwd2 : e.rev2) += 1;
                return;
            }
        }
        EdgeTraversal e;
        e.a = a;
        e.b = b;
        if (path == 1)
            (from <= to ? e.fwd1 : e.rev1) = 1;
        else
            (from <= to ? e.fwd2 : e.rev2) = 1;
        t.edges.push_back(e);
    };

    for (int m = 0; m < k1; ++m)
        record(rgs[m], rgs[(m + 1) % k1], 1);
    for (int m = 0; m < k2; ++m)
        record(rgs[k1 + m], rgs[k1 + (m + 1) % k2], 2);

    UnionFind uf(t.block_count);
    for (const auto& e : t.edges) uf.unite(e.a, e.b);
    int components = 0;
    for (int v = 0; v < t.block_count; ++v)
        if (uf.find(v) == v) ++components;
    int distinct_edges = static_cast<int>(t.edges.size());
    if (components == 1 && distinct_edges == t.block_count - 1)
        t.graph_class = GraphClass::Tree;
    else if (components == 1 && distinct_edges == t.block_count)
        t.graph_class = GraphClass::Bracelet;
    else
        t.graph_class = GraphClass::Other;
    return t;
}

std::string PartitionTerm::blocks_string() const {
    std::ostringstream os;
    for (int b = 0; b < block_count; ++b) {
        os << "{";
        bool first = true;
        for (int x = 0; x < k1 + k2; ++x) {
            if (block_of[x] != b) continue;
            if (!first) os << " ";
            first = false;
            if (x < k1)
                os << "1." << x;
            else
                os << "2." << (x - k1);
        }
        os << "}";
    }
    return os.str();
}

std::vector<PartitionTerm> enumerate_terms(int k1, int k2) {
    check_path_lengths(k1, k2, 12);
    std::vector<PartitionTerm> out;
    if ((k1 + k2) % 2 != 0) return out;  // odd case: no admissible block count
    for_each_rgs(k1 + k2, (k1 + k2) / 2,
                 [&](const std::vector<int>& rgs) { out.push_back(make_term(k1, k2, rgs)); });
    return out;
}

Rat s_weight(const PartitionTerm& term, const Rat& s1, const Rat& s2) {
    Rat prod = 1;
    for (int b = 0; b < term.block_count; ++b) {
        Rat blockmin = 1;
        if (term.block_of[0] == b) blockmin = rat_min(blockmin, s1);
        if (term.block_of[term.k1] == b) blockmin = rat_min(blockmin, s2);
        prod *= blockmin;
    }
    return prod;
}

namespace {

MomentValue edge_moment(const AtomSpec& diag, const AtomSpec& off, const EdgeTraversal& e,
                        int fwd, int rev) {
    if (e.is_loop()) return diag.moment(fwd + rev, 0);
    if (off.is_complex) return off.moment(fwd, rev);
    return off.moment(fwd + rev, 0);
}

MomentValue path_expectation(const PartitionTerm& term, const AtomSpec& diag,
                             const AtomSpec& off, int path) {
    MomentValue prod = Rat(1);
    for (const auto& e : term.edges) {
        int fwd = path == 1 ? e.fwd1 : e.fwd2;
        int rev = path == 1 ? e.rev1 : e.rev2;
        if (fwd + rev == 0) continue;
        prod *= edge_moment(diag, off, e, fwd, rev);
        if (prod.finite && prod.value == 0) return prod;
    }
    return prod;
}

}  // namespace

MomentValue expectation_factor(const PartitionTerm& term, const AtomSpec& diag,
                               const AtomSpec& off) {
    MomentValue joint = Rat(1);
    for (const auto& e : term.edges) {
        joint *= edge_moment(diag, off, e, e.fwd1 + e.fwd2, e.rev1 + e.rev2);
        if (joint.finite && joint.value == 0) break;
    }
    MomentValue p1 = path_expectation(term, diag, off, 1);
    MomentValue p2 = path_expectation(term, diag, off, 2);
    return joint - p1 * p2;
}

MomentValue limit_cov_centered(int k1, int k2, const Rat& s1, const Rat& s2,
                               const AtomSpec& diag, const AtomSpec& off) {
    check_path_lengths(k1, k2, 12);
    if (s1 < 0 || s1 > 1 || s2 < 0 || s2 > 1)
        throw std::invalid_argument("limit_cov_centered: s in [0,1]");
    if ((k1 + k2) % 2 != 0) return Rat(0);
    MomentValue acc = Rat(0);
    bool diverged = false;
    for_each_rgs(k1 + k2, (k1 + k2) / 2, [&](const std::vector<int>& rgs) {
        if (diverged) return;
        PartitionTerm term = make_term(k1, k2, rgs);
        Rat w = s_weight(term, s1, s2);
        if (w == 0) return;  // zero asymptotic index count; term absent
        MomentValue f = expectation_factor(term, diag, off);
        if (!f.finite) {
            diverged = true;
            return;
        }
        acc.value += w * f.value;
    });
    if (diverged) return MomentValue::infinite();
    return acc;
}

MomentValue limit_cov(int k1, int k2, const Rat& s1, const Rat& s2, const AtomSpec& diag,
                      const AtomSpec& off) {
    MomentValue c_ss = limit_cov_centered(k1, k2, s1, s2, diag, off);
    MomentValue c_s1 = limit_cov_centered(k1, k2, s1, Rat(1), diag, off);
    MomentValue c_1s = limit_cov_centered(k1, k2, Rat(1), s2, diag, off);
    MomentValue c_11 = limit_cov_centered(k1, k2, Rat(1), Rat(1), diag, off);
    if (!(c_ss.finite && c_s1.finite && c_1s.finite && c_11.finite))
        return MomentValue::infinite();
    return Rat(c_ss.value - s2 * c_s1.value - s1 * c_1s.value + s1 * s2 * c_11.value);
}

namespace {

template <typename T>
T wick_rec(const std::vector<std::vector<T>>& cov, std::vector<int>& free) {
    if (free.empty()) return T(1);
    int first = free[0];
    T total(0);
    for (std::size_t j = 1; j < free.size(); ++j) {
        int partner = free[j];
        std::vector<int> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t t = 1; t < free.size(); ++t)
            if (t != j) rest.push_back(free[t]);
        total += cov[first][partner] * wick_rec(cov, rest);
    }
    return total;
}

template <typename T>
T wick_impl(const std::vector<std::vector<T>>& cov) {
    int p = static_cast<int>(cov.size());
    for (const auto& row : cov)
        if (static_cast<int>(row.size()) != p)
            throw std::invalid_argument("wick_moment: square covariance table expected");
    if (p % 2 != 0) return T(0);
    std::vector<int> all(p);
    for (int i = 0; i < p; ++i) all[i] = i;
    return wick_rec(cov, all);
}

}  // namespace

double wick_moment(const std::vector<std::vector<double>>& cov) { return wick_impl(cov); }
Rat wick_moment_exact(const std::vector<std::vector<Rat>>& cov) { return wick_impl(cov); }

// ---------------------------------------------------------------------------
// Brute-force pre-limit covariance.
// ---------------------------------------------------------------------------

MomentValue finite_n_cov(int n, int k1, int k2, const Rat& s1, const Rat& s2,
                         const AtomSpec& diag, const AtomSpec& off) {
    check_path_lengths(k1, k2, 8);
    if (n < 1 || n > 6) throw std::invalid_argument("finite_n_cov: n <= 6");
    if (s1 < 0 || s1 > 1 || s2 < 0 || s2 > 1)
        throw std::invalid_argument("finite_n_cov: s in [0,1]");

    const int K = k1 + k2;
    const long m1 = rat_floor_scaled(n, s1);
    const long m2 = rat_floor_scaled(n, s2);
    if (m1 == 0 || m2 == 0) return Rat(0);

    std::vector<int> cap(K, n);
    cap[0] = static_cast<int>(m1);
    cap[k1] = static_cast<int>(m2);

    // Every index tuple is visited once; tuples sharing an equality pattern
    // (the same restricted-growth relabeling) share the same moment factor,
    // so only the factor computation is memoized -- the counting itself is
    // the raw enumeration.
    std::unordered_map<std::uint32_t, long long> pattern_count;
    std::vector<int> idx(K, 0);
    std::vector<int> relabel(n, -1);
    for (;;) {
        relabel.assign(n, -1);
        std::uint32_t key = 0;
        int used = 0;
        for (int pos = 0; pos < K; ++pos) {
            int v = idx[pos];
            if (relabel[v] < 0) relabel[v] = used++;
            key = key * 9 + static_cast<std::uint32_t>(relabel[v] + 1);
        }
        ++pattern_count[key];

        int pos = K - 1;
        while (pos >= 0) {
            if (++idx[pos] < cap[pos]) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    MomentValue acc = Rat(0);
    std::vector<int> rgs(K);
    for (const auto& [key, count] : pattern_count) {
        std::uint32_t k = key;
        for (int pos = K - 1; pos >= 0; --pos) {
            rgs[pos] = static_cast<int>(k % 9) - 1;
            k /= 9;
        }
        PartitionTerm term = make_term(k1, k2, rgs);
        MomentValue f = expectation_factor(term, diag, off);
        if (!f.finite) return MomentValue::infinite();
        acc.value += Rat(count) * f.value;
    }

    if (K % 2 != 0) {
        if (acc.value != 0)
            throw std::domain_error(
                "finite_n_cov: odd k1+k2 with a nonvanishing sum has no exact rational value "
                "(scaling n^{-(k1+k2)/2} is irrational)");
        return Rat(0);
    }
    return Rat(acc.value / rat_pow(Rat(n), K / 2));
}

MomentValue finite_n_cov_tstat(int n, int k1, int k2, const Rat& s1, const Rat& s2,
                               const AtomSpec& diag, const AtomSpec& off) {
    const Rat one(1);
    MomentValue c_ss = finite_n_cov(n, k1, k2, s1, s2, diag, off);
    MomentValue c_s1 = finite_n_cov(n, k1, k2, s1, one, diag, off);
    MomentValue c_1s = finite_n_cov(n, k1, k2, one, s2, diag, off);
    MomentValue c_11 = finite_n_cov(n, k1, k2, one, one, diag, off);
    if (!(c_ss.finite && c_s1.finite && c_1s.finite && c_11.finite))
        return MomentValue::infinite();
    Rat w1 = Rat(rat_floor_scaled(n, s1), n);
    Rat w2 = Rat(rat_floor_scaled(n, s2), n);
    return Rat(c_ss.value - w2 * c_s1.value - w1 * c_1s.value + w1 * w2 * c_11.value);
}

// ---------------------------------------------------------------------------
// Weingarten calculus on S2.
// ---------------------------------------------------------------------------

Rat weingarten(HaarGroup group, PairPerm perm, int n) {
    if (n < 3) throw std::invalid_argument("weingarten: n >= 3 required");
    Rat nn(n);
    if (group == HaarGroup::Orthogonal) {
        Rat den = nn * (nn - 1) * (nn + 2);
        return perm == PairPerm::Identity ? Rat((nn + 1) / den) : Rat(-1 / den);
    }
    Rat den = nn * nn - 1;
    return perm == PairPerm::Identity ? Rat(1 / den) : Rat(-1 / (nn * den));
}

Rat haar_pair_moment(int i1, int j1, int i2, int j2, int n, HaarGroup group) {
    if (n < 3) throw std::invalid_argument("haar_pair_moment: n >= 3 required");
    for (int v : {i1, j1, i2, j2})
        if (v < 1 || v > n) throw std::invalid_argument("haar_pair_moment: index out of range");

    if (group == HaarGroup::Unitary) {
        // E[ u_{i1 j1} u_{i2 j2} conj(u_{i1' j1'}) conj(u_{i2' j2'}) ]
        //   = sum_{sigma,tau in S2} delta_i(sigma) delta_j(tau) Wg(tau sigma^{-1})
        // with (i', j') = (i, j).  sigma = id is always compatible; the swap
        // needs the two rows (resp. columns) equal.
        const int rows[2] = {i1, i2};
        const int cols[2] = {j1, j2};
        Rat total = 0;
        for (int sigma = 0; sigma < 2; ++sigma) {
            if (sigma == 1 && rows[0] != rows[1]) continue;
            for (int tau = 0; tau < 2; ++tau) {
                if (tau == 1 && cols[0] != cols[1]) continue;
                total += weingarten(HaarGroup::Unitary,
                                    sigma == tau ? PairPerm::Identity : PairPerm::Transposition,
                                    n);
            }
        }
        return total;
    }

    // Orthogonal: E[prod_{k=1..4} u_{x_k y_k}] summed over pairings of the
    // four slots; two distinct pairings of four slots always combine into a
    // single 4-cycle, i.e. the transposition coset type.
    const int x[4] = {i1, i1, i2, i2};
    const int y[4] = {j1, j1, j2, j2};
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    auto compatible = [](const int* v, const int* p) {
        return v[p[0]] == v[p[1]] && v[p[2]] == v[p[3]];
    };
    Rat total = 0;
    for (int a = 0; a < 3; ++a) {
        if (!compatible(x, pairings[a])) continue;
        for (int b = 0; b < 3; ++b) {
            if (!compatible(y, pairings[b])) continue;
            total += weingarten(HaarGroup::Orthogonal,
                                a == b ? PairPerm::Identity : PairPerm::Transposition, n);
        }
    }
    return total;
}

}  // namespace wigner
