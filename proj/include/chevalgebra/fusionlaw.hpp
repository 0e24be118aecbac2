#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalgebra/rootsys.hpp"

namespace chevalgebra {

// Finite fusion law: a label set X and a map X x X -> subsets of X. The
// tables below carry the labels of the decomposition they govern (letters for
// global decompositions, numbers for local ones).
struct FusionLaw {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::set<int>>> table;
    std::optional<int> unit;
    std::optional<std::vector<int>> grading;  // Z/2Z degree per label

    int label_index(const std::string& l) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return int(i);
        throw std::invalid_argument("fusion law " + name + ": unknown label " + l);
    }

    bool symmetric() const {
        for (size_t x = 0; x < labels.size(); ++x)
            for (size_t y = 0; y < labels.size(); ++y)
                if (table[x][y] != table[y][x]) return false;
        return true;
    }

    // xi(x * y) must land inside {xi(x) + xi(y)}.
    bool grading_consistent() const {
        if (!grading) return true;
        for (size_t x = 0; x < labels.size(); ++x)
            for (size_t y = 0; y < labels.size(); ++y) {
                int g = ((*grading)[x] + (*grading)[y]) % 2;
                for (int z : table[x][y])
                    if ((*grading)[z] != g) return false;
            }
        return true;
    }
};

namespace detail {
// Table text format: per row "x: y1 -> z z ..., y2 -> ..." is overkill here;
// we build laws from triplet lists instead.
inline FusionLaw make_law(std::string name, std::vector<std::string> labels,
                          const std::vector<std::tuple<const char*, const char*, const char*>>& cells,
                          std::optional<const char*> unit = std::nullopt) {
    FusionLaw law;
    law.name = std::move(name);
    law.labels = std::move(labels);
    size_t k = law.labels.size();
    law.table.assign(k, std::vector<std::set<int>>(k));
    for (const auto& [x, y, zs] : cells) {
        int xi = law.label_index(x), yi = law.label_index(y);
        std::set<int> out;
        std::string cur;
        std::string s = std::string(zs) + " ";
        for (char c : s) {
            if (c == ' ') {
                if (!cur.empty()) out.insert(law.label_index(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        law.table[xi][yi] = out;
        law.table[yi][xi] = out;
    }
    if (unit) law.unit = law.label_index(*unit);
    if (!law.symmetric()) throw std::logic_error("fusion law " + law.name + " not symmetric");
    return law;
}
}  // namespace detail

// ----- zero weight laws ------------------------------------------------------

inline FusionLaw zero_global_law(TypeLabel t, int n) {
    using detail::make_law;
    switch (t) {
        case TypeLabel::A: {
            // entries marked for exclusion vanish at n = 3
            bool small = n == 3;
            return make_law("zero-global-A", {"a", "b", "c"},
                            {{"a", "a", "a"},
                             {"a", "b", "b"},
                             {"a", "c", "c"},
                             {"b", "b", "a b c"},
                             {"b", "c", small ? "b" : "b c"},
                             {"c", "c", small ? "a c" : "a b c"}},
                            "a");
        }
        case TypeLabel::D: {
            if (n == 4)
                return make_law("zero-global-D4", {"a", "b", "c", "d"},
                                {{"a", "a", "a"}, {"a", "b", "b"}, {"a", "c", "c"}, {"a", "d", "d"},
                                 {"b", "b", "a b"}, {"b", "c", "d"}, {"b", "d", "c"},
                                 {"c", "c", "a c"}, {"c", "d", "b"}, {"d", "d", "a d"}},
                                "a");
            return make_law("zero-global-D", {"a", "b", "c"},
                            {{"a", "a", "a"}, {"a", "b", "b"}, {"a", "c", "c"},
                             {"b", "b", "a b"}, {"b", "c", "c"}, {"c", "c", "a b c"}},
                            "a");
        }
        default:
            return make_law("zero-global-E", {"a", "b"},
                            {{"a", "a", "a"}, {"a", "b", "b"}, {"b", "b", "a b"}}, "a");
    }
}

inline FusionLaw zero_local_law(TypeLabel t, int n) {
    using detail::make_law;
    switch (t) {
        case TypeLabel::A: {
            // Entries involving part 3 vanish for n in {3,4} (the part is
            // empty there); a few more entries vanish at n = 3.
            bool no3 = n <= 4;
            bool small = n == 3;
            std::vector<std::string> store;
            store.reserve(16);
            auto cell = [&](std::string base, const char* dag = "", const char* ddag = "") {
                if (!no3 && *dag) base += (base.empty() ? "" : " ") + std::string(dag);
                if (!small && *ddag) base += (base.empty() ? "" : " ") + std::string(ddag);
                store.push_back(std::move(base));
                return store.back().c_str();
            };
            std::vector<std::tuple<const char*, const char*, const char*>> cells = {
                {"1", "1", "1"},
                {"1", "2", "2"},
                {"1", "3", cell("", "3")},
                {"1", "4", "4"},
                {"1", "5", "5"},
                {"2", "2", cell("1", "3", "2")},
                {"2", "3", cell("", "2 3")},
                {"2", "4", "5"},
                {"2", "5", cell("4", "", "5")},
                {"3", "3", cell("", "1 2 3")},
                {"3", "4", ""},
                {"3", "5", cell("", "5")},
                {"4", "4", "1"},
                {"4", "5", "2"},
                {"5", "5", cell("1", "3", "2")}};
            return make_law("zero-local-A", {"1", "2", "3", "4", "5"}, cells, "1");
        }
        case TypeLabel::D: {
            if (n <= 6)
                throw std::invalid_argument(
                    "zero-weight local law for D is tabulated for n > 6 only "
                    "(components are not isotypic below)");
            return make_law("zero-local-D", {"1", "2", "3", "4", "5", "6"},
                            {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"},
                             {"1", "4", "4"}, {"1", "5", "5"}, {"1", "6", "6"},
                             {"2", "2", "1 2"}, {"2", "3", "3"}, {"2", "4", "4"},
                             {"2", "5", "5"}, {"2", "6", ""},
                             {"3", "3", "1 2 3"}, {"3", "4", "4"}, {"3", "5", "5"},
                             {"3", "6", ""},
                             {"4", "4", "1 2 3"}, {"4", "5", "6"}, {"4", "6", "5"},
                             {"5", "5", "1 2 3"}, {"5", "6", "4"},
                             {"6", "6", "1"}},
                            "1");
        }
        default: {
            if (n == 6)
                return make_law("zero-local-E6", {"1", "2", "3", "5"},
                                {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"}, {"1", "5", "5"},
                                 {"2", "2", "1 2 3"}, {"2", "3", "2 3"}, {"2", "5", "5"},
                                 {"3", "3", "1 2 3"}, {"3", "5", "5"},
                                 {"5", "5", "1 2 3"}},
                                "1");
            if (n == 7)
                return make_law("zero-local-E7", {"1", "2", "3", "5"},
                                {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"}, {"1", "5", "5"},
                                 {"2", "2", "1 2"}, {"2", "3", "3"}, {"2", "5", "5"},
                                 {"3", "3", "1 2 3"}, {"3", "5", "5"},
                                 {"5", "5", "1 2 3"}},
                                "1");
            return make_law("zero-local-E8", {"1", "3", "5"},
                            {{"1", "1", "1"}, {"1", "3", "3"}, {"1", "5", "5"},
                             {"3", "3", "1 3"}, {"3", "5", "5"}, {"5", "5", "1 3"}},
                            "1");
        }
    }
}

// ----- full algebra laws ------------------------------------------------------

inline FusionLaw full_global_law(TypeLabel t, int n) {
    using detail::make_law;
    switch (t) {
        case TypeLabel::A:
            if (n <= 3) throw std::invalid_argument("full global law for A is tabulated for n > 3");
            return make_law("global-A", {"a", "b", "c"},
                            {{"a", "a", "a"}, {"a", "b", "b"}, {"a", "c", "c"},
                             {"b", "b", "a b c"}, {"b", "c", "b c"}, {"c", "c", "a b c"}},
                            "a");
        case TypeLabel::D:
            if (n <= 5) throw std::invalid_argument("full global law for D is tabulated for n > 5");
            return make_law("global-D", {"a", "b", "c"},
                            {{"a", "a", "a"}, {"a", "b", "b"}, {"a", "c", "c"},
                             {"b", "b", "a b"}, {"b", "c", "c"}, {"c", "c", "a b c"}},
                            "a");
        default:
            return make_law("global-E", {"a", "b"},
                            {{"a", "a", "a"}, {"a", "b", "b"}, {"b", "b", "a b"}}, "a");
    }
}

inline FusionLaw full_local_law(TypeLabel t, int n) {
    using detail::make_law;
    switch (t) {
        case TypeLabel::A: {
            if (n <= 5) throw std::invalid_argument("full local law for A is tabulated for n > 5");
            bool seven = n == 7;  // the 6*6 and 7*7 cells carry content only at n = 7
            return make_law(
                "local-A", {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"},
                {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"}, {"1", "4", "4"},
                 {"1", "5", "5"}, {"1", "6", "6"}, {"1", "7", "7"}, {"1", "8", "8"},
                 {"1", "9", "9"}, {"1", "10", "10"}, {"1", "11", "11"},
                 {"2", "2", "1 2 3"}, {"2", "3", "2 3"}, {"2", "4", "5"}, {"2", "5", "4 5"},
                 {"2", "6", "6"}, {"2", "7", "7"}, {"2", "8", "8 10"}, {"2", "9", "9 11"},
                 {"2", "10", "8 10"}, {"2", "11", "9 11"},
                 {"3", "3", "1 2 3"}, {"3", "4", ""}, {"3", "5", "5"}, {"3", "6", "6"},
                 {"3", "7", "7"}, {"3", "8", "10"}, {"3", "9", "11"}, {"3", "10", "8 10"},
                 {"3", "11", "9 11"},
                 {"4", "4", "1 4"}, {"4", "5", "2 5"}, {"4", "6", ""}, {"4", "7", ""},
                 {"4", "8", "8"}, {"4", "9", "9"}, {"4", "10", "10"}, {"4", "11", "11"},
                 {"5", "5", "1 2 3 4 5"}, {"5", "6", ""}, {"5", "7", ""}, {"5", "8", "8 10"},
                 {"5", "9", "9 11"}, {"5", "10", "8 10"}, {"5", "11", "9 11"},
                 {"6", "6", seven ? "7" : ""}, {"6", "7", "1 2 3"}, {"6", "8", ""},
                 {"6", "9", "8 10"}, {"6", "10", ""}, {"6", "11", "8 10"},
                 {"7", "7", seven ? "6" : ""}, {"7", "8", "9 11"}, {"7", "9", ""},
                 {"7", "10", "9 11"}, {"7", "11", ""},
                 {"8", "8", "6"}, {"8", "9", "1 2 4 5"}, {"8", "10", "6"}, {"8", "11", "2 3 5"},
                 {"9", "9", "7"}, {"9", "10", "2 3 5"}, {"9", "11", "7"},
                 {"10", "10", "6"}, {"10", "11", "1 2 3 4 5"},
                 {"11", "11", "7"}},
                "1");
        }
        case TypeLabel::D: {
            if (n <= 7) throw std::invalid_argument("full local law for D is tabulated for n > 7");
            return make_law("local-D", {"1", "2", "3", "4", "5", "6", "7", "8"},
                            {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"}, {"1", "4", "4"},
                             {"1", "5", "5"}, {"1", "6", "6"}, {"1", "7", "7"}, {"1", "8", "8"},
                             {"2", "2", "1 2"}, {"2", "3", "3"}, {"2", "4", "4"}, {"2", "5", "5"},
                             {"2", "6", ""}, {"2", "7", "7"}, {"2", "8", "8"},
                             {"3", "3", "1 2 3"}, {"3", "4", "4"}, {"3", "5", "5"}, {"3", "6", ""},
                             {"3", "7", "8"}, {"3", "8", "7 8"},
                             {"4", "4", "1 2 3 4"}, {"4", "5", "6"}, {"4", "6", "5"},
                             {"4", "7", "7 8"}, {"4", "8", "7 8"},
                             {"5", "5", "1 2 3 5"}, {"5", "6", "4"}, {"5", "7", "7 8"},
                             {"5", "8", "7 8"},
                             {"6", "6", "1 6"}, {"6", "7", "7"}, {"6", "8", "8"},
                             {"7", "7", "1 2 4 5 6"}, {"7", "8", "3 4 5"},
                             {"8", "8", "1 2 3 4 5 6"}},
                            "1");
        }
        default: {
            if (n == 6)
                return make_law("local-E6", {"1", "2", "3", "5", "12", "13", "14"},
                                {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"}, {"1", "5", "5"},
                                 {"1", "12", "12"}, {"1", "13", "13"}, {"1", "14", "14"},
                                 {"2", "2", "1 2 3"}, {"2", "3", "2 3"}, {"2", "5", "5"},
                                 {"2", "12", "12 13 14"}, {"2", "13", "12 13"}, {"2", "14", "12 14"},
                                 {"3", "3", "1 2 3"}, {"3", "5", "5"}, {"3", "12", "12 13 14"},
                                 {"3", "13", "12 13 14"}, {"3", "14", "12 13 14"},
                                 {"5", "5", "1 2 3 5"}, {"5", "12", "12 13 14"},
                                 {"5", "13", "12 13"}, {"5", "14", "12 14"},
                                 {"12", "12", "1 2 3 5"}, {"12", "13", "2 3 5"},
                                 {"12", "14", "2 3 5"},
                                 {"13", "13", "3"}, {"13", "14", "1 2 3 5"},
                                 {"14", "14", "3"}},
                                "1");
            if (n == 7)
                return make_law("local-E7", {"1", "2", "3", "5", "9", "10"},
                                {{"1", "1", "1"}, {"1", "2", "2"}, {"1", "3", "3"}, {"1", "5", "5"},
                                 {"1", "9", "9"}, {"1", "10", "10"},
                                 {"2", "2", "1 2"}, {"2", "3", "3"}, {"2", "5", "5"},
                                 {"2", "9", "10"}, {"2", "10", "9 10"},
                                 {"3", "3", "1 2 3"}, {"3", "5", "5"}, {"3", "9", "9 10"},
                                 {"3", "10", "9 10"},
                                 {"5", "5", "1 2 3 5"}, {"5", "9", "9 10"}, {"5", "10", "9 10"},
                                 {"9", "9", "1 3 5"}, {"9", "10", "2 3 5"},
                                 {"10", "10", "1 2 3 5"}},
                                "1");
            return make_law("local-E8", {"1", "3", "5", "6", "7"},
                            {{"1", "1", "1"}, {"1", "3", "3"}, {"1", "5", "5"}, {"1", "6", "6"},
                             {"1", "7", "7"},
                             {"3", "3", "1 3"}, {"3", "5", "5"}, {"3", "6", "6 7"},
                             {"3", "7", "6 7"},
                             {"5", "5", "1 3 5"}, {"5", "6", "6 7"}, {"5", "7", "6 7"},
                             {"6", "6", "1 3 5"}, {"6", "7", "3 5"},
                             {"7", "7", "1 3 5"}},
                            "1");
        }
    }
}

// The axial law for the E8 one-parameter family: the two idempotent lines
// replace the label-1 pair; the e/e' cell is empty.
inline FusionLaw e8_axial_law() {
    using detail::make_law;
    FusionLaw law = make_law("E8-axial", {"e", "e'", "3", "5", "6", "7"},
                             {{"e", "e", "e"}, {"e", "e'", ""}, {"e", "3", "3"}, {"e", "5", "5"},
                              {"e", "6", "6"}, {"e", "7", "7"},
                              {"e'", "e'", "e'"}, {"e'", "3", "3"}, {"e'", "5", "5"},
                              {"e'", "6", "6"}, {"e'", "7", "7"},
                              {"3", "3", "e e' 3"}, {"3", "5", "5"}, {"3", "6", "6 7"},
                              {"3", "7", "6 7"},
                              {"5", "5", "e e' 3 5"}, {"5", "6", "6 7"}, {"5", "7", "6 7"},
                              {"6", "6", "e e' 3 5"}, {"6", "7", "3 5"},
                              {"7", "7", "e e' 3 5"}},
                             "e");
    law.grading = std::vector<int>{0, 0, 0, 0, 1, 1};
    if (!law.grading_consistent()) throw std::logic_error("E8 axial law grading inconsistent");
    return law;
}

}  // namespace chevalgebra
