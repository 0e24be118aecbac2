#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chevalgebra/linalg.hpp"
#include "chevalgebra/rational.hpp"

namespace chevalgebra {

// Lattice vectors are stored with doubled coordinates in the ambient Euclidean
// model, so that the half-integer E-type roots stay integral. With this
// convention kappa(x, y) = dot(doubled x, doubled y) / 4, always an integer on
// the lattices we touch.
using LatVec = std::vector<int64_t>;

struct LatVecHash {
    size_t operator()(const LatVec& v) const {
        size_t h = 1469598103934665603ull;
        for (int64_t x : v) {
            h ^= size_t(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline LatVec lat_add(const LatVec& a, const LatVec& b) {
    LatVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline LatVec lat_sub(const LatVec& a, const LatVec& b) {
    LatVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline LatVec lat_neg(const LatVec& a) {
    LatVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

inline bool lat_is_zero(const LatVec& a) {
    for (int64_t x : a)
        if (x) return false;
    return true;
}

// kappa on lattice vectors (doubled coordinates). Exact; asserts integrality.
inline int64_t kappa(const LatVec& a, const LatVec& b) {
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    if (s % 4 != 0) throw std::logic_error("kappa: non-integral pairing");
    return s / 4;
}

inline Rat kappa_q(const LatVec& a, const LatVec& b) {
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return rat(s, 4);
}

// Reflection of v across the root alpha: v - kappa(v, alpha) alpha.
inline LatVec reflect(const LatVec& alpha, const LatVec& v) {
    int64_t k = kappa(v, alpha);
    LatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] - k * alpha[i];
    return out;
}

enum class TypeLabel { A, D, E };

inline char type_char(TypeLabel t) {
    switch (t) {
        case TypeLabel::A: return 'A';
        case TypeLabel::D: return 'D';
        default: return 'E';
    }
}

inline TypeLabel type_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return TypeLabel::A;
        case 'D': case 'd': return TypeLabel::D;
        case 'E': case 'e': return TypeLabel::E;
        default: throw std::invalid_argument("unknown type label; use A, D or E");
    }
}

class RootSystem {
public:
    TypeLabel type;
    int rank = 0;
    int ambient = 0;  // ambient coordinate dimension (rank+1 for A, rank for D, 8 for E)

    // Roots ordered lexicographically on doubled coordinates, positive roots
    // first. This ordering is the global tiebreaker for every canonical
    // choice downstream.
    std::vector<LatVec> roots;
    int num_positive = 0;

    std::vector<LatVec> simple_roots;               // node order of the Dynkin diagram
    std::vector<int> simple_indices;                // index of each simple root in `roots`
    RatMatrix cartan;                               // kappa(alpha_i, alpha_j)
    RatMatrix cartan_inv;
    std::vector<std::vector<int64_t>> simple_coords;  // root expansion over simple roots
    std::vector<int> neg;                           // index of -alpha
    std::vector<std::vector<int8_t>> kappa_table;   // kappa between roots
    std::vector<std::vector<int32_t>> sum_index;    // index of alpha+beta, or -1
    int highest = -1;                               // index of the highest root

    int size() const { return int(roots.size()); }

    int index_of(const LatVec& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }

    bool is_positive(int i) const { return i < num_positive; }

    int kappa_rr(int i, int j) const { return kappa_table[i][j]; }

    // Simple-basis coordinates of an arbitrary ambient vector (doubled
    // coords), i.e. the kappa-orthogonal projection onto the span of the
    // roots expressed over the simple roots.
    RatVec to_simple(const LatVec& v) const {
        RatVec t(rank);
        for (int j = 0; j < rank; ++j) t[j] = kappa_q(v, simple_roots[j]);
        return cartan_inv.apply(t);
    }

    Rat kappa_simple(const RatVec& u, const RatVec& v) const {
        RatVec kv = cartan.apply(v);
        Rat s;
        for (int i = 0; i < rank; ++i)
            if (!is_zero(u[i])) s += u[i] * kv[i];
        return s;
    }

    static RootSystem build(TypeLabel type, int rank);
    static RootSystem build(char type, int rank) { return build(type_from_char(type), rank); }

private:
    std::unordered_map<LatVec, int, LatVecHash> index_;

    void finish();
};

inline RootSystem RootSystem::build(TypeLabel type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    std::vector<LatVec> all;
    auto bad_rank = [&](const char* range) {
        throw std::invalid_argument(std::string("unsupported rank for type ") +
                                    type_char(type) + ": admitted ranges are A: n >= 3, "
                                    "D: n >= 4, E: n in {6,7,8} (" + range + ")");
    };
    switch (type) {
        case TypeLabel::A: {
            if (rank < 3) bad_rank("A needs n >= 3");
            rs.ambient = rank + 1;
            for (int i = 0; i <= rank; ++i)
                for (int j = 0; j <= rank; ++j) {
                    if (i == j) continue;
                    LatVec v(rs.ambient, 0);
                    v[i] = 2;
                    v[j] = -2;
                    all.push_back(v);
                }
            for (int i = 1; i <= rank; ++i) {
                LatVec v(rs.ambient, 0);
                v[i - 1] = 2;
                v[i] = -2;
                rs.simple_roots.push_back(v);
            }
            break;
        }
        case TypeLabel::D: {
            if (rank < 4) bad_rank("D needs n >= 4");
            rs.ambient = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            LatVec v(rs.ambient, 0);
                            v[i] = 2 * si;
                            v[j] = 2 * sj;
                            all.push_back(v);
                        }
            for (int i = 1; i < rank; ++i) {
                LatVec v(rs.ambient, 0);
                v[i - 1] = 2;
                v[i] = -2;
                rs.simple_roots.push_back(v);
            }
            LatVec v(rs.ambient, 0);
            v[rank - 2] = 2;
            v[rank - 1] = 2;
            rs.simple_roots.push_back(v);
            break;
        }
        case TypeLabel::E: {
            if (rank < 6 || rank > 8) bad_rank("E needs n in {6,7,8}");
            rs.ambient = 8;
            std::vector<LatVec> e8;
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            LatVec v(8, 0);
                            v[i] = 2 * si;
                            v[j] = 2 * sj;
                            e8.push_back(v);
                        }
            for (int mask = 0; mask < 256; ++mask) {
                int minus = __builtin_popcount(mask);
                if (minus % 2 == 0) continue;  // product of signs must be -1
                LatVec v(8);
                for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
                e8.push_back(v);
            }
            auto in_e7 = [](const LatVec& v) { return v[6] == v[7]; };
            auto in_e6 = [&](const LatVec& v) {
                if (!in_e7(v)) return false;
                int64_t s = 0;
                for (int i = 0; i < 6; ++i) s += v[i];
                return s == 0;
            };
            for (const auto& v : e8) {
                if (rank == 8 || (rank == 7 && in_e7(v)) || (rank == 6 && in_e6(v)))
                    all.push_back(v);
            }
            LatVec a1 = {-1, -1, -1, -1, -1, 1, 1, 1};
            LatVec a2 = {-1, -1, -1, 1, 1, 1, 1, 1};
            auto pm = [](int i, int j, int si, int sj) {
                LatVec v(8, 0);
                v[i] = 2 * si;
                v[j] = 2 * sj;
                return v;
            };
            if (rank == 8) {
                rs.simple_roots = {a1, pm(4, 5, 1, 1), pm(4, 5, 1, -1), pm(3, 4, 1, -1),
                                   pm(2, 3, 1, -1), pm(1, 2, 1, -1), pm(0, 1, 1, -1),
                                   pm(0, 7, -1, -1)};
            } else if (rank == 7) {
                rs.simple_roots = {a1, pm(4, 5, 1, 1), pm(4, 5, 1, -1), pm(3, 4, 1, -1),
                                   pm(2, 3, 1, -1), pm(1, 2, 1, -1), pm(0, 1, 1, -1)};
            } else {
                rs.simple_roots = {pm(0, 1, 1, -1), a2, pm(1, 2, 1, -1),
                                   pm(2, 3, 1, -1), pm(3, 4, 1, -1), pm(4, 5, 1, -1)};
            }
            break;
        }
    }
    rs.roots = std::move(all);
    rs.finish();
    return rs;
}

inline void RootSystem::finish() {
    cartan = RatMatrix(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            cartan(i, j) = Rat(kappa(simple_roots[i], simple_roots[j]));
    cartan_inv = inverse(cartan);

    // Positivity: a root is positive iff its simple-root expansion has
    // non-negative coefficients.
    auto expand = [&](const LatVec& v) {
        RatVec c = to_simple(v);
        std::vector<int64_t> out(rank);
        for (int i = 0; i < rank; ++i) {
            if (!is_integer(c[i])) throw std::logic_error("root expansion not integral");
            out[i] = int64_t(c[i].get_num().get_si());
        }
        return out;
    };
    std::vector<std::pair<LatVec, std::vector<int64_t>>> pos, negs;
    for (auto& v : roots) {
        auto c = expand(v);
        bool positive = false;
        for (int i = 0; i < rank; ++i)
            if (c[i] != 0) { positive = c[i] > 0; break; }
        (positive ? pos : negs).push_back({v, c});
    }
    auto lex = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(pos.begin(), pos.end(), lex);
    std::sort(negs.begin(), negs.end(), lex);
    num_positive = int(pos.size());
    roots.clear();
    simple_coords.clear();
    for (auto& p : pos) { roots.push_back(p.first); simple_coords.push_back(p.second); }
    for (auto& p : negs) { roots.push_back(p.first); simple_coords.push_back(p.second); }

    const int n = size();
    index_.clear();
    for (int i = 0; i < n; ++i) index_[roots[i]] = i;
    simple_indices.clear();
    for (const auto& s : simple_roots) simple_indices.push_back(index_.at(s));

    neg.assign(n, -1);
    kappa_table.assign(n, std::vector<int8_t>(n));
    sum_index.assign(n, std::vector<int32_t>(n, -1));
    for (int i = 0; i < n; ++i) {
        neg[i] = index_.at(lat_neg(roots[i]));
        for (int j = 0; j < n; ++j) {
            kappa_table[i][j] = int8_t(kappa(roots[i], roots[j]));
            auto it = index_.find(lat_add(roots[i], roots[j]));
            if (it != index_.end()) sum_index[i][j] = it->second;
        }
    }

    // Highest root: the unique dominant root (kappa >= 0 with every simple root).
    highest = -1;
    for (int i = 0; i < n; ++i) {
        bool dom = true;
        for (int s : simple_indices)
            if (kappa_table[i][s] < 0) { dom = false; break; }
        if (dom) {
            if (highest >= 0) throw std::logic_error("multiple dominant roots");
            highest = i;
        }
    }
    if (highest < 0) throw std::logic_error("no dominant root found");
}

inline LatVec highest_root(const RootSystem& rs) { return rs.roots[rs.highest]; }

// Weight sets Lambda_i = { alpha + beta : kappa(alpha, beta) = i } together
// with the unordered pair lists N_lambda and counts n_lambda.
class WeightSets {
public:
    // lambda[i + 2] is the sorted list of weights in Lambda_i.
    std::array<std::vector<LatVec>, 5> lambda;
    // pairs keyed by weight: unordered root-index pairs {a, b} with a <= b.
    std::unordered_map<LatVec, std::vector<std::pair<int, int>>, LatVecHash> pairs;

    static WeightSets build(const RootSystem& rs) {
        WeightSets ws;
        ws.rs_ = &rs;
        const int n = rs.size();
        std::unordered_map<LatVec, int, LatVecHash> klass;
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                int k = rs.kappa_rr(a, b);
                LatVec sum = lat_add(rs.roots[a], rs.roots[b]);
                ws.pairs[sum].push_back({a, b});
                auto it = klass.find(sum);
                if (it == klass.end())
                    klass[sum] = k;
                else if (it->second != k)
                    throw std::logic_error("weight in two Lambda classes");
            }
        for (auto& [w, k] : klass) ws.lambda[k + 2].push_back(w);
        for (auto& l : ws.lambda) std::sort(l.begin(), l.end());
        for (size_t i = 0; i < ws.lambda[2 + 0].size(); ++i)
            ws.lam0_index_[ws.lambda[2][i]] = int(i);
        return ws;
    }

    int n_of(const LatVec& w) const {
        auto it = pairs.find(w);
        return it == pairs.end() ? 0 : int(it->second.size());
    }

    // n_lambda for a root (Lambda_{-1} member): pairs of roots summing to it.
    int n_of_root(int root_idx) const { return n_of(rs_->roots[root_idx]); }

    const std::vector<LatVec>& lambda0() const { return lambda[2]; }

    int lambda0_index(const LatVec& w) const {
        auto it = lam0_index_.find(w);
        return it == lam0_index_.end() ? -1 : it->second;
    }

    // r = 2 n_omega: the number of positive roots not orthogonal to (and
    // distinct from) any fixed root.
    int r_constant() const { return 2 * n_of(highest_root(*rs_)); }

private:
    const RootSystem* rs_ = nullptr;
    std::unordered_map<LatVec, int, LatVecHash> lam0_index_;
};

}  // namespace chevalgebra
