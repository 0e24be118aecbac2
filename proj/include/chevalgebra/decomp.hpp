#pragma once

#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "chevalgebra/corealg.hpp"
#include "chevalgebra/fusionlaw.hpp"

namespace chevalgebra {

// Weight blocks: basis indices grouped by weight. Block 0 is the zero-weight
// (J) block, then one block per root, then one per Lambda_0 line. All
// decompositions we build have weight-homogeneous part bases, so membership
// and component questions reduce to small per-block linear algebra.
class BlockLayout {
public:
    explicit BlockLayout(const Algebra& alg) : alg_(&alg) {}

    int block_of(int idx) const {
        switch (alg_->kind(idx)) {
            case Algebra::Kind::J: return 0;
            case Algebra::Kind::H: return 1 + alg_->hperp_root(idx);
            default: return 1 + alg_->nroots + alg_->xpart_lam(idx);
        }
    }
    int block_dim(int block) const {
        if (block == 0) return alg_->nJ;
        return block <= alg_->nroots ? alg_->n - 1 : 1;
    }
    int pos_in_block(int idx) const {
        switch (alg_->kind(idx)) {
            case Algebra::Kind::J: return idx;
            case Algebra::Kind::H: return alg_->hperp_k(idx);
            default: return 0;
        }
    }
    int global_index(int block, int pos) const {
        if (block == 0) return pos;
        if (block <= alg_->nroots) return alg_->hperp_index(block - 1, pos);
        return alg_->xpart_index(block - 1 - alg_->nroots);
    }

    // Splits an element into dense per-block coordinate vectors.
    std::map<int, RatVec> split(const AlgElem& e) const {
        std::map<int, RatVec> out;
        for (const auto& [i, v] : e.terms) {
            int b = block_of(i);
            auto it = out.find(b);
            if (it == out.end()) it = out.emplace(b, RatVec(block_dim(b))).first;
            it->second[pos_in_block(i)] = v;
        }
        return out;
    }

private:
    const Algebra* alg_;
};

// One labeled part of a decomposition: a weight-homogeneous echelonized basis
// kept per block.
struct Part {
    std::string label;
    std::map<int, Echelon> blocks;

    int dimension() const {
        int d = 0;
        for (const auto& [b, e] : blocks) d += e.rank();
        return d;
    }
};

struct Decomposition {
    std::string name;
    std::vector<Part> parts;

    int part_index(const std::string& label) const {
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i].label == label) return int(i);
        throw std::invalid_argument("decomposition " + name + ": no part " + label);
    }

    std::vector<int> dimensions() const {
        std::vector<int> d;
        for (const auto& p : parts) d.push_back(p.dimension());
        return d;
    }
};

struct FusionCell {
    int x, y;
    std::vector<std::string> allowed, observed;
    long pairs = 0;
    bool ok = true;
    std::string witness;  // first violating product, when any
};
struct FusionReport {
    std::string decomposition, law, mode;
    uint64_t seed = 0;
    std::vector<FusionCell> cells;
    bool ok = true;
    long total_pairs = 0;
};
struct FusionOptions {
    bool sampled = false;
    int pairs_per_cell = 50;
    int support = 4;
    uint64_t seed = 20240229;
};

// Worker cap from the environment; sweeps produce identical output for any
// value because cells are assembled in index order.
inline int thread_cap() {
    if (const char* env = std::getenv("CHEVALGEBRA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

template <class Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

// Builds parts, closures, component solvers and the fusion verifier on top of
// an algebra context.
class DecompEngine {
public:
    explicit DecompEngine(std::shared_ptr<const Algebra> alg)
        : alg_(std::move(alg)), layout_(*alg_) {}

    const Algebra& alg() const { return *alg_; }
    const BlockLayout& layout() const { return layout_; }

    // ----- part plumbing -----------------------------------------------------

    void insert(Part& part, const AlgElem& e) const {
        auto split = layout_.split(e);
        if (split.size() > 1)
            throw std::logic_error("part basis vector is not weight homogeneous");
        for (auto& [b, v] : split) {
            auto it = part.blocks.find(b);
            if (it == part.blocks.end())
                it = part.blocks.emplace(b, Echelon(layout_.block_dim(b))).first;
            it->second.insert(std::move(v));
        }
    }

    bool contains(const Part& part, const AlgElem& e) const {
        for (auto& [b, v] : layout_.split(e)) {
            auto it = part.blocks.find(b);
            if (it == part.blocks.end() || !it->second.contains(v)) return false;
        }
        return true;
    }

    std::vector<AlgElem> part_basis(const Part& part) const {
        std::vector<AlgElem> out;
        for (const auto& [b, ech] : part.blocks)
            for (const auto& row : ech.rows()) {
                ElemAcc acc;
                for (int p = 0; p < layout_.block_dim(b); ++p)
                    acc.add(layout_.global_index(b, p), row[p]);
                out.push_back(acc.take());
            }
        return out;
    }

    // Closes the span of `seed` under the action of the given generators.
    Part close_under(std::string label, const std::vector<AlgElem>& seed,
                     const std::vector<int>& generator_roots) const {
        Part part;
        part.label = std::move(label);
        std::deque<AlgElem> queue;
        auto push = [&](const AlgElem& e) {
            if (e.is_zero()) return;
            auto split = layout_.split(e);
            if (split.size() > 1) throw std::logic_error("closure: inhomogeneous vector");
            auto& [b, v] = *split.begin();
            auto it = part.blocks.find(b);
            if (it == part.blocks.end())
                it = part.blocks.emplace(b, Echelon(layout_.block_dim(b))).first;
            RatVec w = v;
            if (!it->second.insert(std::move(w))) return;
            // re-read the reduced row: use the original vector for acting
            queue.push_back(e);
        };
        for (const auto& e : seed) push(e);
        while (!queue.empty()) {
            AlgElem e = std::move(queue.front());
            queue.pop_front();
            for (int g : generator_roots) push(alg_->act(g, e));
        }
        return part;
    }

    // ----- component solver ----------------------------------------------------

    // Per block: inverse of the matrix whose columns are all parts' block
    // rows; solving gives the unique decomposition of any vector. Also
    // certifies that the parts are independent and jointly spanning.
    struct ComponentSolver {
        std::map<int, RatMatrix> inv;           // block -> inverse of column matrix
        std::map<int, std::vector<int>> owner;  // block -> part of each column
        int covered_dim = 0;                    // total dimension spanned by the parts
    };

    ComponentSolver component_solver(const Decomposition& dec) const {
        ComponentSolver cs;
        std::map<int, std::vector<std::pair<int, const RatVec*>>> cols;
        for (size_t p = 0; p < dec.parts.size(); ++p)
            for (const auto& [b, ech] : dec.parts[p].blocks)
                for (const auto& row : ech.rows()) cols[b].push_back({int(p), &row});
        for (auto& [b, list] : cols) {
            int d = layout_.block_dim(b);
            if (int(list.size()) != d)
                throw std::logic_error("decomposition " + dec.name + ": block of dimension " +
                                       std::to_string(d) + " covered by " +
                                       std::to_string(list.size()) + " part vectors");
            RatMatrix m(d, d);
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r) m(r, c) = (*list[c].second)[r];
            cs.inv.emplace(b, inverse(m));
            std::vector<int> own;
            for (auto& [p, row] : list) own.push_back(p);
            cs.owner.emplace(b, std::move(own));
        }
        for (auto& [b, list] : cols) cs.covered_dim += int(list.size());
        return cs;
    }

    // Labels of the parts with a nonzero component in e.
    std::vector<int> observed_parts(const ComponentSolver& cs, const Decomposition& dec,
                                    const AlgElem& e) const {
        std::vector<char> seen(dec.parts.size(), 0);
        for (auto& [b, v] : layout_.split(e)) {
            auto invit = cs.inv.find(b);
            if (invit == cs.inv.end())
                throw std::logic_error("component: vector leaves the span of the decomposition");
            const RatMatrix& inv = invit->second;
            RatVec c = inv.apply(v);
            const auto& own = cs.owner.at(b);
            for (size_t i = 0; i < c.size(); ++i)
                if (!is_zero(c[i])) seen[own[i]] = 1;
        }
        std::vector<int> out;
        for (size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) out.push_back(int(i));
        return out;
    }

    // Component of e inside one part (exact projection along the others).
    AlgElem component(const ComponentSolver& cs, const Decomposition& dec, const AlgElem& e,
                      int part) const {
        ElemAcc acc;
        for (auto& [b, v] : layout_.split(e)) {
            RatVec c = cs.inv.at(b).apply(v);
            const auto& own = cs.owner.at(b);
            const auto& ech = dec.parts[part].blocks;
            auto it = ech.find(b);
            if (it == ech.end()) continue;
            // columns owned by `part` appear in echelon row order
            int local = 0;
            for (size_t i = 0; i < c.size(); ++i) {
                if (own[i] != part) continue;
                const RatVec& row = it->second.rows()[local++];
                if (!is_zero(c[i]))
                    for (int p = 0; p < layout_.block_dim(b); ++p)
                        acc.add(layout_.global_index(b, p), c[i] * row[p]);
            }
        }
        return acc.take();
    }

    // ----- fusion verification ---------------------------------------------------

    FusionReport verify_fusion(const Decomposition& dec, const FusionLaw& law,
                               FusionOptions opt = FusionOptions()) const {
        if (dec.parts.size() != law.labels.size())
            throw std::invalid_argument("verify_fusion: label count mismatch");
        for (size_t i = 0; i < dec.parts.size(); ++i)
            if (dec.parts[i].label != law.labels[i])
                throw std::invalid_argument("verify_fusion: label order mismatch");
        ComponentSolver cs = component_solver(dec);
        FusionReport rep;
        rep.decomposition = dec.name;
        rep.law = law.name;
        rep.mode = opt.sampled ? "sampled" : "full";
        rep.seed = opt.seed;

        std::vector<std::vector<AlgElem>> bases;
        for (const auto& p : dec.parts) bases.push_back(part_basis(p));

        std::vector<std::pair<int, int>> cells;
        for (size_t x = 0; x < dec.parts.size(); ++x)
            for (size_t y = x; y < dec.parts.size(); ++y) cells.push_back({int(x), int(y)});
        rep.cells.resize(cells.size());
        // per-cell deterministic sampling streams; the memo caches tolerate
        // concurrent fill
        parallel_for(int(cells.size()), [&](int ci) {
            auto [x, y] = cells[ci];
            FusionCell cell;
            cell.x = x;
            cell.y = y;
            for (int z : law.table[x][y]) cell.allowed.push_back(law.labels[z]);
            std::vector<char> seen(dec.parts.size(), 0);
            auto check_pair = [&](const AlgElem& u, const AlgElem& v) {
                AlgElem prod = alg_->mul(u, v);
                long pair_id = cell.pairs++;
                for (int p : observed_parts(cs, dec, prod)) {
                    seen[p] = 1;
                    if (!law.table[x][y].count(p) && cell.ok) {
                        cell.ok = false;
                        cell.witness = "pair " + std::to_string(pair_id) + " of parts (" +
                                       dec.parts[x].label + "," + dec.parts[y].label +
                                       ") has a component in part " + dec.parts[p].label;
                    }
                }
            };
            if (!opt.sampled) {
                for (const auto& u : bases[x])
                    for (const auto& v : bases[y]) check_pair(u, v);
            } else {
                std::mt19937_64 cell_rng(opt.seed ^ (0x9e3779b97f4a7c15ull * (ci + 1)));
                auto sample = [&](const std::vector<AlgElem>& basis) {
                    std::uniform_int_distribution<int> di(0, int(basis.size()) - 1);
                    std::uniform_int_distribution<int> dc(1, 3);
                    ElemAcc acc;
                    for (int s = 0; s < opt.support; ++s) {
                        int cval = dc(cell_rng);
                        acc.add(basis[di(cell_rng)], rat(cell_rng() & 1 ? cval : -cval));
                    }
                    return acc.take();
                };
                for (int t = 0; t < opt.pairs_per_cell; ++t) {
                    if (bases[x].empty() || bases[y].empty()) break;
                    check_pair(sample(bases[x]), sample(bases[y]));
                }
            }
            for (size_t p = 0; p < seen.size(); ++p)
                if (seen[p]) cell.observed.push_back(law.labels[p]);
            rep.cells[ci] = std::move(cell);
        });
        for (const auto& cell : rep.cells) {
            rep.total_pairs += cell.pairs;
            if (!cell.ok) rep.ok = false;
        }
        return rep;
    }

    // Removes the B-components along the given parts from every basis vector
    // of `p` (the parts must carry a non-degenerate restriction of the form).
    Part refine_against(const Part& p, const std::vector<const Part*>& others) const {
        // The form restricted to a single part can vanish (conjugate parts
        // pair with each other), so project onto the joint span of `others`.
        std::vector<AlgElem> basis;
        for (const Part* o : others)
            for (AlgElem& e : part_basis(*o)) basis.push_back(std::move(e));
        int k = int(basis.size());
        RatMatrix g(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) g(i, j) = alg_->form(basis[i], basis[j]);
        RatMatrix ginv = inverse(g);
        Part out;
        out.label = p.label;
        for (const AlgElem& v : part_basis(p)) {
            RatVec rhs(k);
            for (int i = 0; i < k; ++i) rhs[i] = alg_->form(v, basis[i]);
            RatVec c = ginv.apply(rhs);
            AlgElem cur = v;
            for (int i = 0; i < k; ++i)
                if (!is_zero(c[i])) cur = cur - basis[i] * c[i];
            if (!cur.is_zero()) insert(out, cur);
        }
        return out;
    }

    // ----- reflection transport ---------------------------------------------------

    // Image of a basis generator span under the reflection s_r. This is a
    // span-level operation (per-generator signs are immaterial for spans; on
    // the J part it is the honest Weyl action by conjugation).
    AlgElem reflect_span_elem(int r, const AlgElem& e) const {
        const auto& rs = alg_->rs;
        RatMatrix refl = alg_->zs.reflection_matrix(r);
        ElemAcc acc;
        // J component transported as a whole
        bool has_j = false;
        for (const auto& [i, v] : e.terms)
            if (alg_->kind(i) == Algebra::Kind::J) has_j = true;
        if (has_j) {
            RatVec t(alg_->nJ);
            for (const auto& [i, v] : e.terms)
                if (alg_->kind(i) == Algebra::Kind::J) t[i] = v;
            RatMatrix m = alg_->zs.mat_of_jcoords(t);
            acc.add(alg_->elem_from_jmat(refl * m * refl), rat(1));
        }
        for (const auto& [i, v] : e.terms) {
            switch (alg_->kind(i)) {
                case Algebra::Kind::J: break;
                case Algebra::Kind::H: {
                    int b = alg_->hperp_root(i);
                    int wb = rs.index_of(reflect(rs.roots[r], rs.roots[b]));
                    RatVec h = hperp_row(b, alg_->hperp_k(i));
                    acc.add(alg_->elem_hperp(wb, refl.apply(h)), v);
                    break;
                }
                default: {
                    int lam = alg_->xpart_lam(i);
                    LatVec img = reflect(rs.roots[r], alg_->ws.lambda0()[lam]);
                    acc.add(alg_->elem_x(alg_->ws.lambda0_index(img)), v);
                }
            }
        }
        return acc.take();
    }

    // Word of root reflections sending the highest root to target (BFS).
    std::vector<int> word_from_highest(int target_root) const {
        const auto& rs = alg_->rs;
        if (target_root == rs.highest) return {};
        std::vector<int> parent_gen(rs.size(), -1), parent(rs.size(), -1);
        std::deque<int> queue{rs.highest};
        std::vector<char> vis(rs.size(), 0);
        vis[rs.highest] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            if (cur == target_root) break;
            for (int k = 0; k < rs.rank; ++k) {
                int g = rs.simple_indices[k];
                int img = rs.index_of(reflect(rs.roots[g], rs.roots[cur]));
                if (!vis[img]) {
                    vis[img] = 1;
                    parent[img] = cur;
                    parent_gen[img] = g;
                    queue.push_back(img);
                }
            }
        }
        if (!vis[target_root]) throw std::logic_error("transport: root unreachable");
        std::vector<int> word;
        for (int cur = target_root; cur != rs.highest; cur = parent[cur])
            word.push_back(parent_gen[cur]);
        // word applied outermost-first maps highest -> target
        return word;
    }

    Part transport_part(const Part& src, const std::vector<int>& word) const {
        Part out;
        out.label = src.label;
        for (const AlgElem& row : part_basis(src)) {
            AlgElem img = row;
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                img = reflect_span_elem(*it, img);
            insert(out, img);
        }
        return out;
    }

private:
    std::shared_ptr<const Algebra> alg_;
    BlockLayout layout_;

    RatVec hperp_row(int root, int k) const { return alg_->hperp_basis_row(root, k); }
};

}  // namespace chevalgebra
