#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalgebra/chevalley.hpp"
#include "chevalgebra/linalg.hpp"
#include "chevalgebra/rootsys.hpp"

namespace chevalgebra {

// Element of the zero weight algebra S_0 = J + Z. The J part is the operator
// picture: a kappa-symmetric matrix on the Cartan subalgebra in the
// simple-coroot basis. The Z part is indexed by positive roots, z_alpha =
// z_{-alpha} being enforced by the indexing.
struct S0Elem {
    RatMatrix j;  // n x n
    RatVec z;     // one coefficient per positive root

    S0Elem() = default;
    S0Elem(int n, int npos) : j(n, n), z(npos) {}
};

// The zero weight algebra: the Jordan product and trace form on S_0, the
// orthogonal projection pi away from span{v_alpha = 2z_alpha - j_alpha}, the
// transported diamond product on J, the intersection-parameter route to pi,
// and the Weyl group action.
class ZeroSub {
public:
    const RootSystem* rs = nullptr;
    const WeightSets* ws = nullptr;
    int n = 0;     // rank
    int nJ = 0;    // dim J = n(n+1)/2
    int npos = 0;  // positive roots
    int dim = 0;   // dim S_0

    static ZeroSub build(const RootSystem& rs, const WeightSets& ws) {
        ZeroSub zs;
        zs.rs = &rs;
        zs.ws = &ws;
        zs.n = rs.rank;
        zs.nJ = rs.rank * (rs.rank + 1) / 2;
        zs.npos = rs.num_positive;
        zs.dim = zs.nJ + zs.npos;

        zs.jbasis_.reserve(zs.nJ);
        for (int i = 0; i < zs.n; ++i)
            for (int j = i; j < zs.n; ++j) zs.jbasis_.push_back(zs.jmat_pair_unit(i, j));

        // Gram of the trace form on S_0: block tr(M_i M_j) on J, (1/2) I on Z.
        zs.gram_ = RatMatrix(zs.dim, zs.dim);
        for (int a = 0; a < zs.nJ; ++a)
            for (int b = a; b < zs.nJ; ++b) {
                Rat t = (zs.jbasis_[a] * zs.jbasis_[b]).trace();
                zs.gram_(a, b) = t;
                zs.gram_(b, a) = t;
            }
        for (int p = 0; p < zs.npos; ++p) zs.gram_(zs.nJ + p, zs.nJ + p) = rat(1, 2);

        // Basis of the complement-defining subspace: v_beta = 2 z_beta - j_beta.
        zs.vrows_ = RatMatrix(zs.npos, zs.dim);
        for (int p = 0; p < zs.npos; ++p) {
            RatVec jc = zs.jcoords_of_mat(zs.jmat_root(p));
            for (int c = 0; c < zs.nJ; ++c) zs.vrows_(p, c) = -jc[c];
            zs.vrows_(p, zs.nJ + p) = 2;
        }
        RatMatrix vg = zs.vrows_ * zs.gram_;
        RatMatrix gram_vv = vg * zs.vrows_.transposed();
        RatMatrix gram_vv_inv;
        try {
            gram_vv_inv = inverse(gram_vv);
        } catch (const std::invalid_argument&) {
            throw std::logic_error("zero-weight projection: form degenerate on span{v_alpha}");
        }
        zs.wmat_ = gram_vv_inv * vg;
        zs.build_fast_path(gram_vv_inv);

        zs.pi_of_jroot_.resize(zs.npos);
        for (int p = 0; p < zs.npos; ++p)
            zs.pi_of_jroot_[p] = zs.pi(zs.j_elem(zs.jmat_root(p)));
        zs.pi_of_jbasis_.resize(zs.nJ);
        for (int c = 0; c < zs.nJ; ++c)
            zs.pi_of_jbasis_[c] = zs.pi(zs.j_elem(zs.jbasis_[c]));
        return zs;
    }

    // ----- J matrices ------------------------------------------------------

    // j_alpha as operator on the Cartan subalgebra, simple-coroot coordinates.
    RatMatrix jmat_root(int root_idx) const {
        RatVec c(n);
        for (int i = 0; i < n; ++i) c[i] = Rat(rs->simple_coords[root_idx][i]);
        return rank_one(c, c);
    }

    // zeta(u v) for Cartan vectors u, v given in simple-coroot coordinates.
    RatMatrix jmat_pair(const RatVec& u, const RatVec& v) const {
        RatMatrix m = rank_one(u, v);
        RatMatrix mt = rank_one(v, u);
        return (m + mt) * rat(1, 2);
    }

    // zeta applied to ambient-coordinate vectors (projects onto the span of
    // the roots first, which is what restriction to the Cartan does).
    RatMatrix jmat_pair_ambient(const LatVec& u, const LatVec& v) const {
        return jmat_pair(rs->to_simple(u), rs->to_simple(v));
    }

    // Coefficients over the basis h_i h_j (i <= j) of a J-operator matrix.
    RatVec jcoords_of_mat(const RatMatrix& m) const {
        RatMatrix c = m * rs->cartan_inv;
        RatVec t(nJ);
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++k) t[k] = i == j ? c(i, i) : c(i, j) + c(j, i);
        return t;
    }

    RatMatrix mat_of_jcoords(const RatVec& t) const {
        RatMatrix c(n, n);
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++k) {
                if (i == j) c(i, i) = t[k];
                else { c(i, j) = t[k] / 2; c(j, i) = t[k] / 2; }
            }
        return c * rs->cartan;
    }

    bool is_kappa_symmetric(const RatMatrix& m) const {
        return (rs->cartan * m).is_symmetric();
    }

    // ----- Jordan product and trace form on S_0 ----------------------------

    S0Elem j_elem(const RatMatrix& m) const {
        S0Elem e(n, npos);
        e.j = m;
        return e;
    }

    S0Elem v_elem(int pos_idx) const {
        S0Elem e(n, npos);
        e.j = jmat_root(pos_idx) * rat(-1);
        e.z[pos_idx] = 2;
        return e;
    }

    S0Elem bullet(const S0Elem& a, const S0Elem& b) const {
        S0Elem out(n, npos);
        out.j = (a.j * b.j + b.j * a.j) * rat(1, 2);
        for (int p = 0; p < npos; ++p) out.z[p] = a.z[p] * b.z[p] / 2;
        return out;
    }

    Rat form_B(const S0Elem& a, const S0Elem& b) const {
        Rat s = (a.j * b.j).trace();
        for (int p = 0; p < npos; ++p)
            if (!is_zero(a.z[p])) s += a.z[p] * b.z[p] / 2;
        return s;
    }

    // ----- the projection pi ------------------------------------------------

    RatVec coords_of(const S0Elem& e) const {
        RatVec v = jcoords_of_mat(e.j);
        v.insert(v.end(), e.z.begin(), e.z.end());
        return v;
    }

    S0Elem elem_of(const RatVec& v) const {
        S0Elem e(n, npos);
        RatVec t(v.begin(), v.begin() + nJ);
        e.j = mat_of_jcoords(t);
        for (int p = 0; p < npos; ++p) e.z[p] = v[nJ + p];
        return e;
    }

    RatVec pi_coords(const RatVec& v) const {
        RatVec c = wmat_.apply(v);
        RatVec out = v;
        for (int p = 0; p < npos; ++p) {
            if (is_zero(c[p])) continue;
            for (int t = 0; t < dim; ++t)
                if (!is_zero(vrows_(p, t))) out[t] -= c[p] * vrows_(p, t);
        }
        return out;
    }

    S0Elem pi(const S0Elem& e) const { return elem_of(pi_coords(coords_of(e))); }

    const S0Elem& pi_of_jroot(int root_idx) const {
        return pi_of_jroot_[rs->is_positive(root_idx) ? root_idx : rs->neg[root_idx]];
    }

    // Inverse of pi restricted to J, available on the image of pi:
    // recover j from s = pi(j) via j = s.j + sum (s.z_beta / 2) j_beta.
    RatMatrix pi_inv_J(const S0Elem& s) const {
        RatMatrix m = s.j;
        for (int p = 0; p < npos; ++p)
            if (!is_zero(s.z[p])) m = m + jmat_root(p) * (s.z[p] / 2);
        return m;
    }

    // ----- transported product and form on J --------------------------------

    RatMatrix diamond(const RatMatrix& a, const RatMatrix& b) const {
        return diamond_scaled(pi_scaled(to_scaled(a)), pi_scaled(to_scaled(b)));
    }

    // diamond with the left factor a J-basis element (projection cached)
    RatMatrix diamond_basis_left(int k, const RatMatrix& b) const {
        return diamond_scaled(pi_scaled_jbasis_[k], pi_scaled(to_scaled(b)));
    }

    RatMatrix diamond_basis(int k1, int k2) const {
        return diamond_scaled(pi_scaled_jbasis_[k1], pi_scaled_jbasis_[k2]);
    }

    Rat form_B_A(const RatMatrix& a, const RatMatrix& b) const {
        // B(pi a, pi b) = B(a, pi b); a has no z part, so only the j part of
        // pi(b) contributes.
        S0Elem pb = elem_of(pi_jmat_coords(b));
        return (a * pb.j).trace();
    }

    // ----- Weyl group action -------------------------------------------------

    // Reflection s_alpha on Cartan vectors in simple-coroot coordinates.
    RatMatrix reflection_matrix(int root_idx) const {
        return RatMatrix::identity(n) - jmat_root(root_idx);
    }

    // Positive-root relabeling beta -> |s_alpha(beta)|.
    std::vector<int> reflection_pos_perm(int root_idx) const {
        std::vector<int> perm(npos);
        for (int p = 0; p < npos; ++p) {
            int im = rs->index_of(reflect(rs->roots[root_idx], rs->roots[p]));
            perm[p] = rs->is_positive(im) ? im : rs->neg[im];
        }
        return perm;
    }

    S0Elem reflect_elem(int root_idx, const S0Elem& e) const {
        S0Elem out(n, npos);
        RatMatrix r = reflection_matrix(root_idx);
        out.j = r * e.j * r;
        auto perm = reflection_pos_perm(root_idx);
        for (int p = 0; p < npos; ++p) out.z[perm[p]] = e.z[p];
        return out;
    }

    // Word of simple reflections applied left to right.
    S0Elem weyl_act(const std::vector<int>& word, const S0Elem& e) const {
        S0Elem cur = e;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = reflect_elem(rs->simple_indices[*it], cur);
        return cur;
    }

    // ----- intersection-parameter route to pi --------------------------------

    struct MuData {
        int orbits = 0;
        std::vector<std::vector<int16_t>> orbit_of;  // npos x npos
        std::vector<Rat> mu;
        std::vector<Rat> b;  // B(j_x, j_y) per orbit
    };

    MuData mu_system_solve() const {
        MuData md;
        md.orbit_of.assign(npos, std::vector<int16_t>(npos, -1));
        std::vector<std::vector<int>> perms;
        for (int k = 0; k < n; ++k) perms.push_back(reflection_pos_perm(rs->simple_indices[k]));
        std::vector<std::pair<int, int>> reps;
        auto sweep_orbit = [&](int sa, int sb) {
            int id = md.orbits++;
            reps.push_back({sa, sb});
            std::deque<std::pair<int, int>> q{{sa, sb}};
            md.orbit_of[sa][sb] = int16_t(id);
            while (!q.empty()) {
                auto [x, y] = q.front();
                q.pop_front();
                for (const auto& perm : perms) {
                    int nx = perm[x], ny = perm[y];
                    if (md.orbit_of[nx][ny] < 0) {
                        md.orbit_of[nx][ny] = int16_t(id);
                        q.push_back({nx, ny});
                    }
                }
            }
        };
        sweep_orbit(0, 0);  // diagonal first
        for (int a = 0; a < npos; ++a)
            for (int b = 0; b < npos; ++b)
                if (md.orbit_of[a][b] < 0) sweep_orbit(a, b);
        const int d = md.orbits;

        md.b.resize(d);
        for (int i = 0; i < d; ++i) {
            auto [x, y] = reps[i];
            md.b[i] = Rat(int64_t(rs->kappa_rr(x, y)) * rs->kappa_rr(x, y));
        }
        for (int a = 0; a < npos; ++a)
            for (int b = 0; b < npos; ++b) {
                int64_t k2 = int64_t(rs->kappa_rr(a, b)) * rs->kappa_rr(a, b);
                if (md.b[md.orbit_of[a][b]] != Rat(k2))
                    throw std::logic_error("mu system: B not constant on a pair orbit");
            }

        // sum_{i,j} p_ij^k b_j mu_i = b_k - 2 mu_k, one equation per orbit.
        RatMatrix A(d, d);
        RatVec rhs(d);
        for (int k = 0; k < d; ++k) {
            auto [x, z] = reps[k];
            // column weights: sum_j p_ij^k b_j = sum over y in orbit i wrt x of b_{orbit(y,z)}
            for (int y = 0; y < npos; ++y) {
                int i = md.orbit_of[x][y];
                A(k, i) += md.b[md.orbit_of[y][z]];
            }
            A(k, k) += 2;
            rhs[k] = md.b[k];
        }
        auto sol = solve(A, rhs);
        if (!sol.consistent || !sol.kernel.empty())
            throw std::logic_error("mu system: singular (orbit counting bug)");
        md.mu = sol.particular;
        return md;
    }

    // pi(j_alpha) reconstructed from the mu constants.
    S0Elem pi_from_mu(const MuData& md, int root_idx) const {
        int a = rs->is_positive(root_idx) ? root_idx : rs->neg[root_idx];
        S0Elem e(n, npos);
        e.j = jmat_root(a);
        for (int b = 0; b < npos; ++b) {
            const Rat& m = md.mu[md.orbit_of[a][b]];
            if (is_zero(m)) continue;
            e.j = e.j + jmat_root(b) * (-m);
            e.z[b] += 2 * m;
        }
        return e;
    }

    // ----- integer-scaled fast path for the diamond product -----------------
    //
    // The projection needs only the pairings B(s, v_gamma) = z_gamma(s)
    // - tr(M_s M_gamma), which are integral against integer data; a single
    // tracked denominator keeps the whole product pipeline in big-integer
    // arithmetic.

    struct ScaledS0 {
        std::vector<Int> j;  // n*n row major
        std::vector<Int> z;  // npos
        Int den = 1;
    };

    ScaledS0 to_scaled(const RatMatrix& m) const {
        ScaledS0 s;
        s.j.resize(size_t(n) * n);
        s.z.assign(npos, Int(0));
        Int den = 1;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Int& d = m(i, k).get_den();
                den = lcm(den, d);
            }
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                s.j[size_t(i) * n + k] = m(i, k).get_num() * (den / m(i, k).get_den());
        s.den = den;
        return s;
    }

    void reduce_scaled(ScaledS0& s) const {
        Int g = s.den;
        for (const Int& x : s.j) {
            if (x != 0) g = gcd(g, x);
            if (g == 1) return;
        }
        for (const Int& x : s.z) {
            if (x != 0) g = gcd(g, x);
            if (g == 1) return;
        }
        if (g == 1 || g == 0) return;
        for (Int& x : s.j) x /= g;
        for (Int& x : s.z) x /= g;
        s.den /= g;
    }

    ScaledS0 pi_scaled(const ScaledS0& s) const {
        // pairings t_gamma = z_gamma - tr(M_s M_gamma), numerators over s.den
        std::vector<Int> t(npos);
        for (int p = 0; p < npos; ++p) {
            Int tr = 0;
            const auto& mg = mj_int_[p];
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    if (mg[size_t(k) * n + i] != 0) tr += s.j[size_t(i) * n + k] * mg[size_t(k) * n + i];
            t[p] = s.z[p] - tr;
        }
        // c = Ginv t over den s.den * ginv_den_
        std::vector<Int> c(npos);
        for (int p = 0; p < npos; ++p) {
            Int acc = 0;
            const Int* row = &ginv_num_[size_t(p) * npos];
            for (int q = 0; q < npos; ++q)
                if (row[q] != 0 && t[q] != 0) acc += row[q] * t[q];
            c[p] = acc;
        }
        // pi(s) = s - sum c_g v_g with v_g = 2 z_g - j_g
        ScaledS0 out;
        out.den = s.den * ginv_den_;
        out.j.resize(size_t(n) * n);
        for (size_t i = 0; i < out.j.size(); ++i) out.j[i] = s.j[i] * ginv_den_;
        out.z.resize(npos);
        for (int p = 0; p < npos; ++p) out.z[p] = s.z[p] * ginv_den_ - 2 * c[p];
        for (int p = 0; p < npos; ++p) {
            if (c[p] == 0) continue;
            const auto& mg = mj_int_[p];
            for (size_t i = 0; i < out.j.size(); ++i)
                if (mg[i] != 0) out.j[i] += c[p] * mg[i];
        }
        reduce_scaled(out);
        return out;
    }

    ScaledS0 bullet_scaled(const ScaledS0& a, const ScaledS0& b) const {
        ScaledS0 out;
        out.den = 2 * a.den * b.den;
        out.j.assign(size_t(n) * n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Int& av = a.j[size_t(i) * n + k];
                const Int& bv = b.j[size_t(i) * n + k];
                if (av != 0)
                    for (int l = 0; l < n; ++l)
                        if (b.j[size_t(k) * n + l] != 0)
                            out.j[size_t(i) * n + l] += av * b.j[size_t(k) * n + l];
                if (bv != 0)
                    for (int l = 0; l < n; ++l)
                        if (a.j[size_t(k) * n + l] != 0)
                            out.j[size_t(i) * n + l] += bv * a.j[size_t(k) * n + l];
            }
        out.z.resize(npos);
        for (int p = 0; p < npos; ++p) out.z[p] = a.z[p] * b.z[p];
        reduce_scaled(out);
        return out;
    }

    RatMatrix diamond_scaled(const ScaledS0& pa, const ScaledS0& pb) const {
        ScaledS0 pp = pi_scaled(bullet_scaled(pa, pb));
        // j = pp.j + sum (z_p / 2) j_p, over denominator 2 pp.den
        std::vector<Int> jj(pp.j.size());
        for (size_t i = 0; i < jj.size(); ++i) jj[i] = 2 * pp.j[i];
        for (int p = 0; p < npos; ++p) {
            if (pp.z[p] == 0) continue;
            const auto& mg = mj_int_[p];
            for (size_t i = 0; i < jj.size(); ++i)
                if (mg[i] != 0) jj[i] += pp.z[p] * mg[i];
        }
        Int den = 2 * pp.den;
        RatMatrix out(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) out(i, k) = rat(jj[size_t(i) * n + k], den);
        return out;
    }

    void build_fast_path(const RatMatrix& ginv) {
        mj_int_.resize(npos);
        for (int p = 0; p < npos; ++p) {
            RatMatrix m = jmat_root(p);
            mj_int_[p].resize(size_t(n) * n);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (!is_integer(m(i, k))) throw std::logic_error("j matrix not integral");
                    mj_int_[p][size_t(i) * n + k] = m(i, k).get_num();
                }
        }
        ginv_den_ = 1;
        for (int p = 0; p < npos; ++p)
            for (int q = 0; q < npos; ++q) ginv_den_ = lcm(ginv_den_, ginv(p, q).get_den());
        ginv_num_.resize(size_t(npos) * npos);
        for (int p = 0; p < npos; ++p)
            for (int q = 0; q < npos; ++q)
                ginv_num_[size_t(p) * npos + q] =
                    ginv(p, q).get_num() * (ginv_den_ / ginv(p, q).get_den());
        pi_scaled_jbasis_.resize(nJ);
        for (int k = 0; k < nJ; ++k)
            pi_scaled_jbasis_[k] = pi_scaled(to_scaled(jbasis_[k]));
    }

    std::vector<std::vector<Int>> mj_int_;
    std::vector<Int> ginv_num_;
    Int ginv_den_ = 1;
    std::vector<ScaledS0> pi_scaled_jbasis_;

private:
    std::vector<RatMatrix> jbasis_;
    RatMatrix gram_;   // trace form on S_0 coordinates
    RatMatrix vrows_;  // v_beta coordinates, one row per positive root
    RatMatrix wmat_;   // gram_vv^{-1} V G; pi(s) = s - V^T (wmat s)
    std::vector<S0Elem> pi_of_jroot_;
    std::vector<S0Elem> pi_of_jbasis_;

    RatMatrix rank_one(const RatVec& u, const RatVec& v) const {
        // column u times row (K v)^T
        RatVec kv = rs->cartan.apply(v);
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            if (is_zero(u[i])) continue;
            for (int j = 0; j < n; ++j)
                if (!is_zero(kv[j])) m(i, j) = u[i] * kv[j];
        }
        return m;
    }

    RatMatrix jmat_pair_unit(int i, int j) const {
        RatVec u(n), v(n);
        u[i] = 1;
        v[j] = 1;
        return jmat_pair(u, v);
    }

    RatVec pi_jmat_coords(const RatMatrix& m) const {
        RatVec v = jcoords_of_mat(m);
        v.resize(dim);
        return pi_coords(v);
    }

public:
    const RatMatrix& jbasis_mat(int k) const { return jbasis_[k]; }
    const S0Elem& pi_of_jbasis(int k) const { return pi_of_jbasis_[k]; }
};

}  // namespace chevalgebra
