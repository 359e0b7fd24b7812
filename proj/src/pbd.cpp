#include "loopdec/pbd.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "loopdec/lattice.hpp"
#include "loopdec/verifier.hpp"

namespace loopdec {

PbdParams pbd_parameters(const std::vector<int>& K) {
    if (K.empty()) fail("EmptyK", "the block-size set must be nonempty");
    PbdParams p{0, 0};
    for (int k : K) {
        if (k < 2) fail("InvalidParameter", "block sizes must be at least 2");
        p.alpha = std::gcd(p.alpha, static_cast<long long>(k - 1));
        p.beta = std::gcd(p.beta, static_cast<long long>(k) * (k - 1));
    }
    return p;
}

PbdReport verify_pbd(const Pbd& p) {
    if (p.v < 0) fail("MalformedInput", "negative point count");
    std::vector<std::vector<long long>> cover(p.v, std::vector<long long>(p.v, 0));
    for (const auto& blk : p.blocks) {
        std::set<int> seen;
        for (int x : blk) {
            if (x < 0 || x >= p.v) fail("MalformedInput", "point out of range");
            if (!seen.insert(x).second) fail("MalformedInput", "repeated point in a block");
        }
        for (size_t i = 0; i < blk.size(); i++)
            for (size_t j = i + 1; j < blk.size(); j++) {
                int a = std::min(blk[i], blk[j]), b = std::max(blk[i], blk[j]);
                cover[a][b]++;
            }
    }
    PbdReport rep;
    for (int a = 0; a < p.v; a++)
        for (int b = a + 1; b < p.v; b++)
            if (cover[a][b] != 1) rep.defects.push_back({a, b, cover[a][b]});
    rep.pass = rep.defects.empty();
    return rep;
}

namespace {

Pbd checked(Pbd p, const char* name) {
    if (!verify_pbd(p).pass)
        fail("VerificationFailed", std::string(name) + " fixture failed validation");
    return p;
}

} // namespace

Pbd pbd_single_block(int v) {
    if (v < 2) fail("InvalidParameter", "single-block designs need v >= 2");
    Pbd p;
    p.v = v;
    p.blocks.push_back(std::vector<int>(v));
    std::iota(p.blocks[0].begin(), p.blocks[0].end(), 0);
    return checked(std::move(p), "single-block");
}

Pbd pbd_fano() {
    Pbd p;
    p.v = 7;
    p.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    return checked(std::move(p), "7-point triple system");
}

Pbd pbd_triple_9() {
    Pbd p;
    p.v = 9;
    p.blocks = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                {0, 4, 8}, {1, 5, 6}, {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}};
    return checked(std::move(p), "9-point triple system");
}

Decomposition compose(const Pbd& p, const std::map<int, Decomposition>& parts) {
    if (!verify_pbd(p).pass)
        fail("InvalidParameter", "the point set is not pairwise balanced");
    if (parts.empty()) fail("MissingPart", "no ingredient decompositions given");

    const LoopedGraph& g = parts.begin()->second.graph;
    const long long lambda = parts.begin()->second.host.lambda;
    for (const auto& [k, part] : parts) {
        if (part.graph != g || part.host.lambda != lambda ||
            part.host.v != k || part.host.mu != compute_mu(g, k, lambda) ||
            !verify_decomposition(part).pass)
            fail("PartNotVerified",
                 "ingredient for size " + std::to_string(k) +
                     " is not a verified decomposition of the shared block graph");
    }

    Decomposition out;
    out.graph = g;
    out.host = host_for(g, p.v, lambda);

    // Loop totals must agree before pasting: at each point, the loops the
    // ingredients deposit, summed over the blocks through it, must equal the
    // host's mu at v.
    std::vector<std::vector<long long>> loop_sum(p.v,
                                                 std::vector<long long>(g.c, 0));
    for (const auto& blk : p.blocks) {
        auto it = parts.find(static_cast<int>(blk.size()));
        if (it == parts.end())
            fail("MissingPart",
                 "no ingredient for block size " + std::to_string(blk.size()));
        for (int x : blk)
            for (int i = 0; i < g.c; i++)
                loop_sum[x][i] += it->second.host.mu[i];
    }
    for (int x = 0; x < p.v; x++)
        for (int i = 0; i < g.c; i++)
            if (loop_sum[x][i] != out.host.mu[i])
                fail("LoopSumMismatch",
                     "loops at point " + std::to_string(x) + ", color " +
                         std::to_string(i) + " sum to " +
                         std::to_string(loop_sum[x][i]) + ", host wants " +
                         std::to_string(out.host.mu[i]));

    for (const auto& blk : p.blocks) {
        std::vector<int> pts = blk;
        std::sort(pts.begin(), pts.end());
        const Decomposition& part = parts.at(static_cast<int>(blk.size()));
        for (const auto& b : part.blocks) {
            SignedBlock nb;
            nb.sign = b.sign;
            nb.map.reserve(b.map.size());
            for (int x : b.map) nb.map.push_back(pts[x]);
            out.blocks.push_back(std::move(nb));
        }
    }

    if (!verify_decomposition(out).pass)
        fail("VerificationFailed", "composite failed verification; this is a bug");
    return out;
}

} // namespace loopdec
