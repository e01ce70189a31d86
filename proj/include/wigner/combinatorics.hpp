#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wigner/atoms.hpp"
#include "wigner/rational.hpp"

namespace wigner {

// ---------------------------------------------------------------------------
// Exact engine for the limiting covariances of the trace statistics
// T_n(s, k) = sum_{i<=ns} ((X^k)_ii - Tr X^k / n).
//
// Index set: the two closed trace-expansion paths share one identified
// endpoint each, so E has k1 + k2 elements: 0..k1-1 for path one (element 0
// is its endpoint) and k1..k1+k2-1 for path two (element k1 its endpoint).
// Path one walks (0, 1, ..., k1-1, 0); path two (k1, ..., k1+k2-1, k1).
//
// A term is a set partition of E into exactly (k1+k2)/2 blocks.  Partitions
// with more blocks carry an unbounded index count but a vanishing moment
// factor, and partitions with fewer vanish under the n^{-(k1+k2)/2} scaling;
// the brute-force finite_n_cov below enumerates raw index tuples with no
// block-count filter at all and guards this cut.
// ---------------------------------------------------------------------------

enum class GraphClass { Tree, Bracelet, Other };

// One traversal record per distinct edge of the block multigraph G_pi.
// a <= b are block labels; a == b is a loop (a diagonal matrix entry).
// fwd counts steps a->b, rev counts b->a, split by path.
struct EdgeTraversal {
    int a = 0, b = 0;
    int fwd1 = 0, rev1 = 0;
    int fwd2 = 0, rev2 = 0;

    bool is_loop() const { return a == b; }
    int total() const { return fwd1 + rev1 + fwd2 + rev2; }
    int path_total(int path) const { return path == 1 ? fwd1 + rev1 : fwd2 + rev2; }
};

struct PartitionTerm {
    int k1 = 0, k2 = 0;
    std::vector<int> block_of;  // restricted-growth labels, size k1 + k2
    int block_count = 0;
    std::vector<EdgeTraversal> edges;
    bool endpoints_share_block = false;  // block_of[0] == block_of[k1]
    GraphClass graph_class = GraphClass::Other;

    std::string blocks_string() const;  // "{1.0 2.0}{1.1 2.1}" style
};

// Structure of the partition given by restricted-growth labels (any block
// count; the public enumeration restricts to (k1+k2)/2).
PartitionTerm make_term(int k1, int k2, const std::vector<int>& rgs);

// All partitions of E into exactly (k1+k2)/2 blocks.  Odd k1+k2 has no such
// partition and returns empty.  Caps: k1, k2 >= 1, k1 + k2 <= 12.
std::vector<PartitionTerm> enumerate_terms(int k1, int k2);

// s_pi = prod over blocks of min_x s(x), where s(endpoint of path l) = s_l
// and s(x) = 1 elsewhere.  For two paths this is min(s1,s2) when the two
// endpoints share a block and s1*s2 otherwise.
Rat s_weight(const PartitionTerm& term, const Rat& s1, const Rat& s2);

// E[X1 X2] - E[X1] E[X2] where X_l is the product of matrix entries along
// path l.  Loops draw on the diagonal spec; off-diagonal steps a->b with
// a < b contribute x_ab and b -> a contribute conj(x_ab), so a complex spec
// is queried as moment(#forward, #backward).  Centering and independence of
// the entries make the factor vanish automatically for single-visit edges
// and for disjoint path supports.
MomentValue expectation_factor(const PartitionTerm& term, const AtomSpec& diag,
                               const AtomSpec& off);

// lim_n E[centered T(s1,k1) centered T(s2,k2)] with expectation centering:
// sum over terms of s_weight * factor, in exact rational arithmetic.
MomentValue limit_cov_centered(int k1, int k2, const Rat& s1, const Rat& s2,
                               const AtomSpec& diag, const AtomSpec& off);

// Covariance of the trace-centered statistics, recombined from the centered
// one: C(s1,s2) - s2 C(s1,1) - s1 C(1,s2) + s1 s2 C(1,1).
MomentValue limit_cov(int k1, int k2, const Rat& s1, const Rat& s2, const AtomSpec& diag,
                      const AtomSpec& off);

// Gaussian moment from pair covariances: sum over perfect matchings of
// products cov[l][l'].  Odd dimension gives 0.
double wick_moment(const std::vector<std::vector<double>>& cov);
Rat wick_moment_exact(const std::vector<std::vector<Rat>>& cov);

// Exact pre-limit covariance E[centered T(s1,k1) centered T(s2,k2)] at finite
// n by direct enumeration of all index tuples in {1..n}^E (no partition
// filter).  Caps: n <= 6, k1 + k2 <= 8.  An odd k1 + k2 is only exact when
// the sum vanishes (symmetric atoms); a nonvanishing odd case would need an
// n^{-1/2} factor and is reported as an error instead of approximated.
MomentValue finite_n_cov(int n, int k1, int k2, const Rat& s1, const Rat& s2,
                         const AtomSpec& diag, const AtomSpec& off);

// Same, recombined to the trace-centered statistics with the exact finite-n
// weights floor(n s)/n.
MomentValue finite_n_cov_tstat(int n, int k1, int k2, const Rat& s1, const Rat& s2,
                               const AtomSpec& diag, const AtomSpec& off);

// ---------------------------------------------------------------------------
// Second-order Weingarten calculus for Haar orthogonal / unitary matrices.
// ---------------------------------------------------------------------------

enum class HaarGroup { Orthogonal, Unitary };
enum class PairPerm { Identity, Transposition };

// Weingarten function on S2.  Orthogonal values need n >= 3.
//   Wg_O(id) = (n+1)/(n(n-1)(n+2)),  Wg_O((12)) = -1/(n(n-1)(n+2))
//   Wg_U(id) = 1/(n^2-1),            Wg_U((12)) = -1/(n(n^2-1))
Rat weingarten(HaarGroup group, PairPerm perm, int n);

// E[ |u_{i1,j1}|^2 |u_{i2,j2}|^2 ] for a Haar matrix, assembled from the
// Weingarten sums for whichever index pattern (distinct / shared row /
// shared column / same cell) applies.  Indices are 1-based, n >= 3.
Rat haar_pair_moment(int i1, int j1, int i2, int j2, int n, HaarGroup group);

}  // namespace wigner
