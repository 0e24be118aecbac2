#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chevalgebra/characters.hpp"
#include "chevalgebra/decomp_tables.hpp"
#include "chevalgebra/e8axial.hpp"

namespace chevalgebra {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

// Exact verification jobs shared by the CLI and the acceptance suite. The
// algebra contexts (and their memo caches) are cached per process.
class Verify {
public:
    static std::shared_ptr<const Algebra> algebra(char t, int n) {
        static std::map<std::pair<char, int>, std::shared_ptr<const Algebra>> cache;
        auto key = std::make_pair(t, n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, Algebra::make(t, n)).first;
        return it->second;
    }

    static CheckResult run(const std::string& name, const std::function<std::string()>& body) {
        CheckResult res;
        res.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            res.detail = body();
            res.ok = true;
        } catch (const std::exception& e) {
            res.ok = false;
            res.detail = e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }

    static void require(bool cond, const std::string& msg) {
        if (!cond) throw std::runtime_error(msg);
    }

    // criterion 1: pair identities (checked at build) plus the Jacobi sweep
    static CheckResult struct_constants(char t, int n) {
        std::ostringstream name;
        name << "structure constants " << t << n;
        return run(name.str(), [&] {
            auto rs = RootSystem::build(t, n);
            auto ws = WeightSets::build(rs);
            auto sc = StructConstants::build(rs, ws);
            sc.jacobi_sweep();
            return std::to_string(rs.size()) + " roots, full Jacobi sweep clean";
        });
    }

    // criterion 2: commutativity and form associativity over all basis triples
    static CheckResult frobenius_full(char t, int n) {
        std::ostringstream name;
        name << "Frobenius axioms (all basis triples) " << t << n;
        return run(name.str(), [&] {
            auto alg = algebra(t, n);
            int dim = alg->dim;
            std::vector<std::vector<AlgElem>> prod(dim);
            for (int i = 0; i < dim; ++i) {
                prod[i].resize(dim);
                for (int j = 0; j < dim; ++j) prod[i][j] = alg->mul_basis(i, j);
            }
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j)
                    require(prod[i][j] == prod[j][i], "commutativity failed");
            long triples = 0;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    for (int k = 0; k < dim; ++k) {
                        Rat lhs = alg->form(prod[i][j], alg->basis_elem(k));
                        Rat rhs = alg->form(alg->basis_elem(i), prod[j][k]);
                        if (lhs != rhs)
                            throw std::runtime_error("form associativity failed at (" +
                                                     std::to_string(i) + "," + std::to_string(j) +
                                                     "," + std::to_string(k) + ")");
                        ++triples;
                    }
            return std::to_string(triples) + " triples exact";
        });
    }

    static CheckResult frobenius_sampled(char t, int n, int count, uint64_t seed) {
        std::ostringstream name;
        name << "Frobenius axioms (" << count << " random basis triples) " << t << n;
        return run(name.str(), [&] {
            auto alg = algebra(t, n);
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<int> d(0, alg->dim - 1);
            for (int trial = 0; trial < count; ++trial) {
                int i = d(rng), j = d(rng), k = d(rng);
                const AlgElem& ij = alg->mul_basis(i, j);
                require(ij == alg->mul_basis(j, i), "commutativity failed");
                Rat lhs = alg->form(ij, alg->basis_elem(k));
                Rat rhs = alg->form(alg->basis_elem(i), alg->mul_basis(j, k));
                require(lhs == rhs, "form associativity failed");
            }
            return "seed " + std::to_string(seed);
        });
    }

    // criterion 3: bracket compatibility of the action, derivation property,
    // invariance of the form
    static CheckResult equivariance(char t, int n, bool full, int samples, uint64_t seed) {
        std::ostringstream name;
        name << "equivariance " << t << n << (full ? " (full)" : " (sampled)");
        return run(name.str(), [&] {
            auto alg = algebra(t, n);
            const auto& rs = alg->rs;
            std::mt19937_64 rng(seed);
            auto commutator_check = [&](int a, int b, int idx) {
                AlgElem lhs =
                    alg->act(a, alg->act_basis(b, idx)) - alg->act(b, alg->act_basis(a, idx));
                AlgElem rhs;
                if (b == rs.neg[a]) rhs = alg->act_cartan_root(a, alg->basis_elem(idx));
                else if (rs.sum_index[a][b] >= 0)
                    rhs = alg->act_basis(rs.sum_index[a][b], idx) * Rat(alg->sc.c(a, b));
                require(lhs == rhs, "bracket compatibility failed");
            };
            long checks = 0;
            if (full) {
                for (int a = 0; a < rs.size(); ++a)
                    for (int b = 0; b < rs.size(); ++b)
                        for (int idx = 0; idx < alg->dim; ++idx) {
                            commutator_check(a, b, idx);
                            ++checks;
                        }
            } else {
                std::uniform_int_distribution<int> dr(0, rs.size() - 1), di(0, alg->dim - 1);
                for (int trial = 0; trial < samples; ++trial) {
                    commutator_check(dr(rng), dr(rng), di(rng));
                    ++checks;
                }
            }
            for (int trial = 0; trial < samples / 4 + 10; ++trial) {
                std::uniform_int_distribution<int> dr(0, rs.size() - 1);
                int a = dr(rng);
                AlgElem x = alg->random_elem(rng, 4), y = alg->random_elem(rng, 4);
                require(alg->act(a, alg->mul(x, y)) ==
                            alg->mul(alg->act(a, x), y) + alg->mul(x, alg->act(a, y)),
                        "derivation property failed");
                require(is_zero(alg->form(alg->act(a, x), y) + alg->form(x, alg->act(a, y))),
                        "form invariance failed");
            }
            return std::to_string(checks) + " bracket checks";
        });
    }

    // criterion 4: Freudenthal recursion against the closed character
    static CheckResult characters_match(char t, int n) {
        std::ostringstream name;
        name << "Freudenthal vs closed character " << t << n;
        return run(name.str(), [&] {
            auto rs = RootSystem::build(t, n);
            auto ws = WeightSets::build(rs);
            auto fr = freudenthal_char(rs);
            require(fr == char_V_closed(rs, ws), "character mismatch");
            require(char_S2(rs, ws) - char_V_closed(rs, ws) == char_A(rs, ws),
                    "character difference mismatch");
            return "multiset equality, dim " + fr.total_dimension().get_str();
        });
    }

    // criterion 6: the unit acts as identity on the whole basis
    static CheckResult unit_check(char t, int n) {
        std::ostringstream name;
        name << "unit " << t << n;
        return run(name.str(), [&] {
            auto alg = algebra(t, n);
            AlgElem one = alg->unit();
            RatMatrix expect = RatMatrix::identity(alg->n) * rat(6 + alg->ws.r_constant(), 2);
            require(alg->jmat_of_elem(one) == expect, "unit is not ((6+r)/2) id");
            for (int idx = 0; idx < alg->dim; ++idx)
                require(alg->mul(one, alg->basis_elem(idx)) == alg->basis_elem(idx),
                        "unit failed on basis index " + std::to_string(idx));
            Rat r2 = Rat(2 * alg->ws.n_of(highest_root(alg->rs)));
            require(Rat(alg->ws.r_constant()) == r2, "r != 2 n_omega");
            return "r = " + rat_to_string(r2) + ", 1 * e_i = e_i on " +
                   std::to_string(alg->dim) + " basis vectors";
        });
    }

    // supporting checks for the zero weight layer (used by verify-all)
    static CheckResult zerosub_checks(char t, int n) {
        std::ostringstream name;
        name << "zero-weight projection " << t << n;
        return run(name.str(), [&] {
            auto alg = algebra(t, n);
            const auto& zs = alg->zs;
            for (int p = 0; p < zs.npos; ++p) {
                RatVec pv = zs.pi_coords(zs.coords_of(zs.v_elem(p)));
                for (const auto& x : pv) require(is_zero(x), "pi does not kill v_alpha");
            }
            auto md = zs.mu_system_solve();
            for (int p = 0; p < zs.npos; ++p)
                require(zs.coords_of(zs.pi_from_mu(md, p)) == zs.coords_of(zs.pi_of_jroot(p)),
                        "mu route disagrees with the Gram projection");
            return std::to_string(md.orbits) + " pair orbits, mu route matches Gram route";
        });
    }
};

}  // namespace chevalgebra
