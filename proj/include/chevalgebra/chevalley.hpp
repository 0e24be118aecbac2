#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalgebra/rootsys.hpp"

namespace chevalgebra {

// Chevalley structure constants c_{alpha,beta} in [e_alpha, e_beta] =
// c_{alpha,beta} e_{alpha+beta}, the derived orthogonal-pair signs
// f_{alpha,beta}, and the canonical pair (alpha_lambda, beta_lambda) for each
// lambda in Lambda_0.
//
// The signs come from the asymmetry cocycle on the root lattice: with
// eps(alpha_i, alpha_j) = kappa(alpha_i, alpha_j) mod 2 for i < j, 1 for
// i = j, 0 for i > j (extended bilinearly), the table
//   c_{alpha,beta} = s(alpha) s(beta) s(alpha+beta) (-1)^eps(alpha,beta),
// with s = -1 exactly on negative roots, satisfies the Chevalley identities
// together with [e_alpha, e_{-alpha}] = h_alpha. This is validated rather
// than trusted: build() sweeps the pair identities and jacobi_sweep() checks
// every root triple.
class StructConstants {
public:
    const RootSystem* rs = nullptr;
    const WeightSets* ws = nullptr;

    static StructConstants build(const RootSystem& rs, const WeightSets& ws) {
        StructConstants sc;
        sc.rs = &rs;
        sc.ws = &ws;
        const int n = rs.size(), rk = rs.rank;

        std::vector<std::vector<int8_t>> eps_simple(rk, std::vector<int8_t>(rk));
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < rk; ++j) {
                if (i < j)
                    eps_simple[i][j] = int8_t(((kappa(rs.simple_roots[i], rs.simple_roots[j]) % 2) + 2) % 2);
                else
                    eps_simple[i][j] = int8_t(i == j ? 1 : 0);
            }
        auto eps = [&](int a, int b) {
            int s = 0;
            for (int i = 0; i < rk; ++i) {
                if (rs.simple_coords[a][i] % 2 == 0) continue;
                for (int j = 0; j < rk; ++j)
                    if (rs.simple_coords[b][j] % 2 != 0) s += eps_simple[i][j];
            }
            return s % 2;
        };

        sc.c_.assign(n, std::vector<int8_t>(n, 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (rs.sum_index[a][b] < 0) continue;
                int sign = eps(a, b) ? -1 : 1;
                if (!rs.is_positive(a)) sign = -sign;
                if (!rs.is_positive(b)) sign = -sign;
                if (!rs.is_positive(rs.sum_index[a][b])) sign = -sign;
                sc.c_[a][b] = int8_t(sign);
            }

        // Pair identities from the Chevalley relations.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int s = rs.sum_index[a][b];
                if (s < 0) continue;
                if (sc.c_[a][b] != -sc.c_[b][a])
                    sc.fail("antisymmetry", a, b);
                if (sc.c_[a][b] != -sc.c_[rs.neg[a]][rs.neg[b]])
                    sc.fail("opposite-sign", a, b);
                int g = rs.neg[s];  // a + b + g = 0
                if (sc.c_[a][b] != sc.c_[b][g] || sc.c_[b][g] != sc.c_[g][a])
                    sc.fail("cyclic identity", a, b);
            }

        // Canonical pair for each lambda in Lambda_0: the lexicographically
        // least ordered pair under the global root ordering.
        const auto& lam0 = ws.lambda0();
        sc.rep_.resize(lam0.size());
        for (size_t li = 0; li < lam0.size(); ++li) {
            const auto& prs = ws.pairs.at(lam0[li]);
            int best = -1;
            for (auto [x, y] : prs) {
                if (best < 0 || x < best) best = x;
                if (y < best) best = y;
            }
            int partner = rs.index_of(lat_sub(lam0[li], rs.roots[best]));
            if (partner < 0) throw std::logic_error("canonical pair: partner not a root");
            sc.rep_[li] = {best, partner};
        }
        return sc;
    }

    // c_{alpha,beta} for root indices; 0 when alpha+beta is not a root.
    int c(int a, int b) const { return c_[a][b]; }

    std::pair<int, int> canonical_pair(int lambda0_idx) const { return rep_[lambda0_idx]; }

    std::pair<int, int> canonical_pair(const LatVec& w) const {
        int li = ws->lambda0_index(w);
        if (li < 0) throw std::invalid_argument("canonical_pair: weight not in Lambda_0");
        return rep_[li];
    }

    // f_{alpha,beta} for orthogonal roots alpha, beta.
    int f_sign(int a, int b) const {
        if (rs->kappa_rr(a, b) != 0)
            throw std::invalid_argument("f_sign: roots not orthogonal");
        LatVec w = lat_add(rs->roots[a], rs->roots[b]);
        auto [al, bl] = canonical_pair(w);
        if ((a == al && b == bl) || (a == bl && b == al)) return 1;
        int ca = c(a, rs->neg[al]);
        int cb = c(b, rs->neg[bl]);
        if (ca == 0 || cb == 0) throw std::logic_error("f_sign: expected root differences");
        return -ca * cb;  // -c_{a,-alpha_l} / c_{b,-beta_l}, both in {+-1}
    }

    // Full Jacobi sweep over root triples for the bracket table
    //   [e_a, e_b] = c_{a,b} e_{a+b},  [e_a, e_{-a}] = h_a,  [h, e_b] = kappa(h, beta) e_b.
    // Throws naming the violating triple. Cost is |Phi|^3 small-integer ops.
    void jacobi_sweep() const {
        const int n = rs->size();
        const int amb = rs->ambient;
        std::vector<int64_t> hacc(amb);
        // Accumulate one bracket path [[e_a, e_b], e_g] into root/Cartan parts.
        std::vector<int64_t> racc;
        auto run = [&](int a, int b, int g, int sign_all, std::vector<int64_t>& racc_local) {
            // [e_a, e_b]
            if (b == rs->neg[a]) {
                // h_a, then [h_a, e_g] = kappa(a, g) e_g
                racc_local[g] += sign_all * rs->kappa_rr(a, g);
                return;
            }
            int s = rs->sum_index[a][b];
            if (s < 0) return;
            int cs = c_[a][b];
            if (g == rs->neg[s]) {
                // c_{a,b} h_s
                for (int t = 0; t < amb; ++t) hacc[t] += sign_all * cs * rs->roots[s][t];
                return;
            }
            int s2 = rs->sum_index[s][g];
            if (s2 < 0) return;
            racc_local[s2] += sign_all * cs * c_[s][g];
        };
        racc.assign(n, 0);
        std::vector<int> touched;
        touched.reserve(8);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int g = b + 1; g < n; ++g) {
                    for (int t = 0; t < amb; ++t) hacc[t] = 0;
                    // J(a,b,g) = [[a,b],g] + [[b,g],a] + [[g,a],b]
                    run(a, b, g, 1, racc);
                    run(b, g, a, 1, racc);
                    run(g, a, b, 1, racc);
                    bool ok = true;
                    for (int t = 0; t < amb; ++t)
                        if (hacc[t]) { ok = false; break; }
                    // Candidate root indices touched by the three paths.
                    auto probe = [&](int x, int y, int z) {
                        if (y == rs->neg[x]) { touched.push_back(z); return; }
                        int s = rs->sum_index[x][y];
                        if (s < 0) return;
                        int s2 = rs->sum_index[s][z];
                        if (s2 >= 0) touched.push_back(s2);
                    };
                    touched.clear();
                    probe(a, b, g);
                    probe(b, g, a);
                    probe(g, a, b);
                    for (int t : touched)
                        if (racc[t]) ok = false;
                    if (!ok)
                        fail("Jacobi identity", a, b, g);
                    for (int t : touched) racc[t] = 0;
                }
    }

private:
    std::vector<std::vector<int8_t>> c_;
    std::vector<std::pair<int, int>> rep_;

    [[noreturn]] void fail(const char* what, int a, int b, int g = -1) const {
        auto show = [&](int i) {
            std::string s = "(";
            for (size_t t = 0; t < rs->roots[i].size(); ++t)
                s += (t ? "," : "") + std::to_string(rs->roots[i][t]);
            return s + ")/2";
        };
        std::string msg = std::string("structure constants: ") + what +
                          " violated at roots " + show(a) + ", " + show(b);
        if (g >= 0) msg += ", " + show(g);
        throw std::logic_error(msg);
    }
};

}  // namespace chevalgebra
