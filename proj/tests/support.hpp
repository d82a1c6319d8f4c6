#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jasso/map.hpp"
#include "jasso/token.hpp"

namespace jasso::testing {

inline std::string data_path(const std::string& name) { return std::string(JASSO_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RootedMap figure1() { return parse_map(read_text(data_path("figure1.map"))); }
inline RootedMap theta() { return parse_map(read_text(data_path("theta.map"))); }
inline Word figure1_word() { return tokenize(read_text(data_path("figure1.word"))); }

inline std::vector<std::string> names_of(const RootedMap& m, const std::vector<int>& faces) {
    std::vector<std::string> out;
    for (int f : faces) out.push_back(m.names[f]);
    return out;
}

// Same cyclic sequence: b is a rotation of a.
template <class T>
bool same_cycle(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + r) % a.size()] == b[i];
        if (ok) return true;
    }
    return false;
}

// Number of ordered trees with n nodes, by the first-child / next-sibling
// recurrence over subtree sizes (independent of any word encoding).
inline long long ordered_tree_count(int n) {
    // forest[k]: ordered forests with k nodes in total
    std::vector<long long> forest(n + 1, 0);
    forest[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int first = 1; first <= k; ++first) forest[k] += forest[first - 1] * forest[k - first];
    return n >= 1 ? forest[n - 1] : 0;
}

// Every string over '(' and ')' of length 2n.
inline std::vector<std::string> all_bracket_strings(int n) {
    std::vector<std::string> out;
    for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
        std::string s;
        for (int i = 0; i < 2 * n; ++i) s += (mask >> i) & 1u ? '(' : ')';
        out.push_back(s);
    }
    return out;
}

}  // namespace jasso::testing
