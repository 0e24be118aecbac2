#pragma once

#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chevalgebra/rootsys.hpp"

namespace chevalgebra {

// Formal character: weight -> multiplicity, weights in doubled ambient
// coordinates. std::map keys keep serialization deterministic.
struct FormalCharacter {
    std::map<LatVec, Int> terms;

    Int total_dimension() const {
        Int s = 0;
        for (const auto& [w, m] : terms) s += m;
        return s;
    }

    bool operator==(const FormalCharacter& o) const { return terms == o.terms; }

    FormalCharacter operator-(const FormalCharacter& o) const {
        FormalCharacter out = *this;
        for (const auto& [w, m] : o.terms) {
            auto it = out.terms.find(w);
            if (it == out.terms.end() || it->second < m)
                throw std::logic_error("character difference has a negative multiplicity");
            it->second -= m;
            if (it->second == 0) out.terms.erase(it);
        }
        return out;
    }
};

inline LatVec half_sum_positive_roots(const RootSystem& rs) {
    LatVec rho(rs.ambient, 0);
    for (int p = 0; p < rs.num_positive; ++p)
        for (int t = 0; t < rs.ambient; ++t) rho[t] += rs.roots[p][t];
    for (auto& x : rho) {
        if (x % 2 != 0) throw std::logic_error("rho not representable in doubled coordinates");
        x /= 2;
    }
    return rho;
}

// Character of the symmetric square of the Lie algebra.
inline FormalCharacter char_S2(const RootSystem& rs, const WeightSets& ws) {
    FormalCharacter ch;
    int n = rs.rank;
    LatVec zero(rs.ambient, 0);
    ch.terms[zero] = Int(n * (n + 1) / 2 + ws.n_of(zero));
    for (int a = 0; a < rs.size(); ++a)
        ch.terms[rs.roots[a]] = Int(ws.n_of(rs.roots[a]) + n);
    for (const auto& w : ws.lambda[2]) ch.terms[w] = Int(ws.n_of(w));
    for (const auto& w : ws.lambda[3]) ch.terms[w] = 1;
    for (const auto& w : ws.lambda[4]) ch.terms[w] = 1;
    return ch;
}

// Closed form for the character of the submodule generated by the doubled
// highest root inside the symmetric square.
inline FormalCharacter char_V_closed(const RootSystem& rs, const WeightSets& ws) {
    FormalCharacter ch;
    LatVec zero(rs.ambient, 0);
    ch.terms[zero] = Int(ws.n_of(zero));
    for (int a = 0; a < rs.size(); ++a)
        ch.terms[rs.roots[a]] = Int(ws.n_of(rs.roots[a]) + 1);
    for (const auto& w : ws.lambda[2]) {
        Int m = Int(ws.n_of(w) - 1);
        if (m > 0) ch.terms[w] = m;
    }
    for (const auto& w : ws.lambda[3]) ch.terms[w] = 1;
    for (const auto& w : ws.lambda[4]) ch.terms[w] = 1;
    return ch;
}

// Character of the complement algebra: n(n+1)/2 at 0, (n-1) at each root, 1 on
// each sum of two orthogonal roots.
inline FormalCharacter char_A(const RootSystem& rs, const WeightSets& ws) {
    FormalCharacter ch;
    int n = rs.rank;
    ch.terms[LatVec(rs.ambient, 0)] = Int(n * (n + 1) / 2);
    for (int a = 0; a < rs.size(); ++a) ch.terms[rs.roots[a]] = Int(n - 1);
    for (const auto& w : ws.lambda[2]) ch.terms[w] = 1;
    return ch;
}

// Multiplicities of the irreducible highest weight module via Freudenthal's
// recursion, descending through the dominant weights and spreading over Weyl
// orbits. The default highest weight of interest is twice the highest root.
class FreudenthalChar {
public:
    static FormalCharacter compute(const RootSystem& rs, const LatVec& highest) {
        for (int s : rs.simple_indices)
            if (kappa(highest, rs.roots[s]) < 0)
                throw std::invalid_argument("freudenthal: highest weight not dominant");

        LatVec rho = half_sum_positive_roots(rs);
        Rat top_norm = kappa_q(lat_add(highest, rho), lat_add(highest, rho));

        auto dominant_rep = [&](LatVec w) {
            for (;;) {
                bool moved = false;
                for (int s : rs.simple_indices) {
                    if (kappa(w, rs.roots[s]) < 0) {
                        w = reflect(rs.roots[s], w);
                        moved = true;
                    }
                }
                if (!moved) return w;
            }
        };

        // All weights of the module: BFS downward by simple-root steps,
        // keeping w iff its dominant representative still lies under the
        // highest weight in the root order.
        auto below = [&](const LatVec& w) {
            RatVec c = rs.to_simple(lat_sub(highest, w));
            for (const auto& x : c) {
                if (!is_integer(x)) return false;
                if (sgn(x) < 0) return false;
            }
            return true;
        };
        std::unordered_map<LatVec, char, LatVecHash> is_weight;
        std::deque<LatVec> queue{highest};
        is_weight[highest] = 1;
        while (!queue.empty()) {
            LatVec w = queue.front();
            queue.pop_front();
            for (int s : rs.simple_indices) {
                LatVec nw = lat_sub(w, rs.roots[s]);
                if (is_weight.count(nw)) continue;
                if (!below(dominant_rep(nw))) continue;
                is_weight[nw] = 1;
                queue.push_back(nw);
            }
        }

        // Dominant weights ordered by decreasing height of highest - w.
        std::vector<std::pair<int64_t, LatVec>> dominants;
        for (const auto& [w, _] : is_weight) {
            bool dom = true;
            for (int s : rs.simple_indices)
                if (kappa(w, rs.roots[s]) < 0) { dom = false; break; }
            if (!dom) continue;
            RatVec c = rs.to_simple(lat_sub(highest, w));
            int64_t height = 0;
            for (const auto& x : c) height += x.get_num().get_si();
            dominants.push_back({height, w});
        }
        std::sort(dominants.begin(), dominants.end());

        std::unordered_map<LatVec, Int, LatVecHash> mult;
        auto mult_of = [&](const LatVec& w) -> Int {
            auto it = mult.find(dominant_rep(w));
            return it == mult.end() ? Int(0) : it->second;
        };

        for (const auto& [height, w] : dominants) {
            if (height == 0) {
                mult[w] = 1;
                continue;
            }
            Rat rhs;
            for (int p = 0; p < rs.num_positive; ++p) {
                LatVec step = w;
                for (int i = 1;; ++i) {
                    step = lat_add(step, rs.roots[p]);
                    // weights along a root string form an unbroken interval
                    if (!is_weight.count(dominant_rep(step))) break;
                    Int m = mult_of(step);
                    if (m == 0)
                        throw std::logic_error("freudenthal: missing multiplicity above");
                    rhs += kappa_q(step, rs.roots[p]) * Rat(m);
                }
            }
            rhs *= 2;
            Rat denom = top_norm - kappa_q(lat_add(w, rho), lat_add(w, rho));
            if (is_zero(denom))
                throw std::logic_error("freudenthal: zero denominator at a needed weight");
            Rat m = rhs / denom;
            if (!is_integer(m) || sgn(m) < 0)
                throw std::logic_error("freudenthal: non-integral multiplicity");
            if (sgn(m) > 0) mult[w] = Int(m.get_num());
        }

        FormalCharacter ch;
        for (const auto& [w, _] : is_weight) {
            Int m = mult_of(w);
            if (m > 0) ch.terms[w] = m;
        }
        return ch;
    }
};

inline FormalCharacter freudenthal_char(const RootSystem& rs) {
    LatVec hi = highest_root(rs);
    return FreudenthalChar::compute(rs, lat_add(hi, hi));
}

}  // namespace chevalgebra
