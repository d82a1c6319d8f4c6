#include "jasso/tree.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <set>
#include <stdexcept>

#include "jasso/map.hpp"

namespace jasso {

Dallajascar Dallajascar::from_parents(const std::vector<int>& parent,
                                      const std::vector<std::vector<int>>& children) {
    Dallajascar d;
    d.parent = parent;
    d.children = children;
    for (int i = 0; i < d.size(); ++i)
        if (parent[i] < 0) d.root = i;
    return d;
}

std::vector<std::string> validate_dallajascar(const Dallajascar& d) {
    std::vector<std::string> v;
    const int n = d.size();
    if (n == 0) return {"i: empty element set"};
    if (static_cast<int>(d.children.size()) != n) return {"ii: children table size mismatch"};

    int roots = 0;
    for (int x = 0; x < n; ++x)
        if (d.parent[x] < 0) ++roots;
    if (d.root < 0 || d.root >= n || d.parent[d.root] >= 0) v.push_back("i: no root with empty parent");
    if (roots != 1) v.push_back("ii: " + std::to_string(roots) + " elements have an empty parent");

    for (int x = 0; x < n; ++x) {
        int y = x;
        for (int step = 0; step <= n && y >= 0; ++step) {
            y = d.parent[y];
            if (y == x) {
                v.push_back("iii: parent cycle through " + std::to_string(x));
                break;
            }
        }
    }

    std::vector<int> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        std::set<int> pre, kids(d.children[x].begin(), d.children[x].end());
        for (int y = 0; y < n; ++y)
            if (d.parent[y] == x) pre.insert(y);
        if (kids.size() != d.children[x].size())
            v.push_back("iv: children of " + std::to_string(x) + " repeat an element");
        if (kids != pre) v.push_back("iv: children of " + std::to_string(x) + " differ from parent preimage");
        for (int c : d.children[x])
            if (c >= 0 && c < n) ++seen[c];
    }
    for (int x = 0; x < n; ++x)
        if (x != d.root && seen[x] != 1) v.push_back("iv: " + std::to_string(x) + " is not covered exactly once");
    return v;
}

bool emboite(const Dallajascar& d, int x, int y) {
    for (int z = d.parent[y]; z >= 0; z = d.parent[z])
        if (z == x) return true;
    return false;
}

namespace {

std::vector<int> path_to_root(const Dallajascar& d, int x) {
    std::vector<int> p;
    for (; x >= 0; x = d.parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

bool precede(const Dallajascar& d, int x, int y) {
    if (x == y || emboite(d, x, y) || emboite(d, y, x)) return false;
    auto px = path_to_root(d, x), py = path_to_root(d, y);
    size_t i = 0;
    while (px[i] == py[i]) ++i;
    const auto& sib = d.children[px[i - 1]];
    auto ix = std::find(sib.begin(), sib.end(), px[i]);
    auto iy = std::find(sib.begin(), sib.end(), py[i]);
    return ix < iy;
}

int order_cmp(const Dallajascar& d, int x, int y) {
    if (x == y) return 0;
    if (emboite(d, x, y) || precede(d, x, y)) return -1;
    return 1;
}

std::vector<int> preorder(const Dallajascar& d) {
    std::vector<int> out;
    std::function<void(int)> go = [&](int x) {
        out.push_back(x);
        for (int c : d.children[x]) go(c);
    };
    if (d.root >= 0) go(d.root);
    return out;
}

std::string simple_word_of(const Dallajascar& d) {
    std::string w;
    std::function<void(int)> go = [&](int x) {
        w += '(';
        for (int c : d.children[x]) go(c);
        w += ')';
    };
    if (d.root >= 0) go(d.root);
    return w;
}

SimpleWordCheck validate_bracket_mask(const std::vector<bool>& is_open) {
    SimpleWordCheck r;
    const int len = static_cast<int>(is_open.size());
    if (len == 0) {
        r.reason = "empty word";
        r.bad_position = 0;
        return r;
    }
    // Repeatedly remove the last opener together with the character right
    // after it, which must be a closer.
    std::list<int> rest;
    for (int i = 0; i < len; ++i) rest.push_back(i);
    std::vector<std::pair<int, int>> pairs;
    while (!rest.empty()) {
        auto last_open = rest.end();
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (is_open[*it]) last_open = it;
        if (last_open == rest.end()) {
            r.reason = "closer without matching opener";
            r.bad_position = rest.front();
            return r;
        }
        auto next = std::next(last_open);
        if (next == rest.end()) {
            r.reason = "opener is never closed";
            r.bad_position = *last_open;
            return r;
        }
        pairs.emplace_back(*last_open, *next);
        rest.erase(next);
        rest.erase(last_open);
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs.front().first != 0 || pairs.front().second != len - 1) {
        r.reason = "first opener does not close the word";
        r.bad_position = pairs.front().second;
        return r;
    }
    r.table = PairTable{std::move(pairs)};
    return r;
}

SimpleWordCheck validate_simple_word(const std::string& w) {
    std::vector<bool> mask;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '(' && w[i] != ')') {
            SimpleWordCheck r;
            r.reason = "unexpected character";
            r.bad_position = static_cast<int>(i);
            return r;
        }
        mask.push_back(w[i] == '(');
    }
    return validate_bracket_mask(mask);
}

Dallajascar dallajascar_of_pairs(const PairTable& t) {
    const int n = static_cast<int>(t.pairs.size());
    std::vector<int> parent(n, -1);
    std::vector<std::vector<int>> children(n);
    for (int k = 1; k < n; ++k) {
        // The tightest enclosing pair: greatest q < k with beta_k < beta_q.
        for (int q = k - 1; q >= 0; --q)
            if (t.pairs[k].second < t.pairs[q].second) {
                parent[k] = q;
                break;
            }
        children[parent[k]].push_back(k);
    }
    return Dallajascar::from_parents(parent, children);
}

Dallajascar dallajascar_of_simple_word(const std::string& w) {
    auto r = validate_simple_word(w);
    if (!r.ok()) throw InputError("invalid simple word: " + r.reason);
    return dallajascar_of_pairs(*r.table);
}

bool trees_equivalent(const Dallajascar& a, const Dallajascar& b) {
    std::function<bool(int, int)> same = [&](int x, int y) {
        const auto& cx = a.children[x];
        const auto& cy = b.children[y];
        if (cx.size() != cy.size()) return false;
        for (size_t i = 0; i < cx.size(); ++i)
            if (!same(cx[i], cy[i])) return false;
        return true;
    };
    return a.size() == b.size() && same(a.root, b.root);
}

}  // namespace jasso
