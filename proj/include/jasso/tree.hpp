#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jasso {

// Ordered tree on the elements 0..n-1, given by its ramification functions.
struct Dallajascar {
    std::vector<int> parent;                 // -1 for the root
    std::vector<std::vector<int>> children;  // ordered
    int root = -1;

    int size() const { return static_cast<int>(parent.size()); }
    static Dallajascar from_parents(const std::vector<int>& parent,
                                    const std::vector<std::vector<int>>& children);
};

std::vector<std::string> validate_dallajascar(const Dallajascar& d);

// x is a strict ancestor of y
bool emboite(const Dallajascar& d, int x, int y);
// x and y are not nested and x's branch comes first
bool precede(const Dallajascar& d, int x, int y);
// preorder: -1, 0, 1
int order_cmp(const Dallajascar& d, int x, int y);

// Preorder listing (the visit order of the leftmost substitution).
std::vector<int> preorder(const Dallajascar& d);

// Words over '(' and ')'.
std::string simple_word_of(const Dallajascar& d);

struct PairTable {
    // 0-based positions; pairs[k] = (alpha_k, beta_k) sorted by alpha.
    std::vector<std::pair<int, int>> pairs;
};

struct SimpleWordCheck {
    std::optional<PairTable> table;
    int bad_position = -1;  // first offending position when invalid
    std::string reason;
    bool ok() const { return table.has_value(); }
};

SimpleWordCheck validate_simple_word(const std::string& w);
// Same check over a generic open/close mask.
SimpleWordCheck validate_bracket_mask(const std::vector<bool>& is_open);

Dallajascar dallajascar_of_simple_word(const std::string& w);
Dallajascar dallajascar_of_pairs(const PairTable& t);

// Structural equality of ordered trees (children compared in order).
bool trees_equivalent(const Dallajascar& a, const Dallajascar& b);

}  // namespace jasso
