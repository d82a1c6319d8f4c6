#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace jasso {

// Relations between finite sequences.
template <class T>
bool is_prefix(const std::vector<T>& u, const std::vector<T>& v) {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

template <class T>
bool is_suffix(const std::vector<T>& u, const std::vector<T>& v) {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.end() - u.size());
}

template <class T>
bool is_factor(const std::vector<T>& u, const std::vector<T>& v) {
    return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end() || u.empty();
}

// u is obtained from v by deleting terms.
template <class T>
bool is_subnesile(const std::vector<T>& u, const std::vector<T>& v) {
    size_t i = 0;
    for (size_t j = 0; j < v.size() && i < u.size(); ++j)
        if (u[i] == v[j]) ++i;
    return i == u.size();
}

template <class T>
bool is_simple(const std::vector<T>& u) {
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] == u[j]) return false;
    return true;
}

struct NesileRelations {
    bool prefix, suffix, factor, subnesile, simple;
};

template <class T>
NesileRelations nesile_relations(const std::vector<T>& u, const std::vector<T>& v) {
    return {is_prefix(u, v), is_suffix(u, v), is_factor(u, v), is_subnesile(u, v), is_simple(u)};
}

// Length first, then lexicographic with the given three-way comparison.
template <class T, class Cmp>
std::weak_ordering shortlex(const std::vector<T>& u, const std::vector<T>& v, Cmp cmp) {
    if (u.size() != v.size()) return u.size() < v.size() ? std::weak_ordering::less : std::weak_ordering::greater;
    for (size_t i = 0; i < u.size(); ++i) {
        auto c = cmp(u[i], v[i]);
        if (c != 0) return c;
    }
    return std::weak_ordering::equivalent;
}

template <class T>
std::weak_ordering shortlex(const std::vector<T>& u, const std::vector<T>& v) {
    return shortlex(u, v, [](const T& a, const T& b) { return std::weak_order(a, b); });
}

struct StratinoTerm {
    int value = 1;
    bool shifted = false;

    // n < n# < n+1
    int key() const { return 2 * value + (shifted ? 1 : 0); }
    auto operator<=>(const StratinoTerm& o) const { return key() <=> o.key(); }
    bool operator==(const StratinoTerm& o) const = default;
};

enum class StratinoKind { Empty, Natural, Shifted };

class Stratino {
public:
    Stratino() = default;
    explicit Stratino(std::vector<StratinoTerm> t) : terms_(std::move(t)) {}

    static Stratino parse(const std::string& s);  // "1#,2", "" for the empty stratino
    std::string str() const;

    const std::vector<StratinoTerm>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const StratinoTerm& back() const { return terms_.back(); }

    StratinoKind kind() const;
    bool is_unitary() const { return !empty() && back().value == 1 && !back().shifted; }
    Stratino natural() const;
    Stratino shifted() const;
    Stratino parent() const;  // drops the last term

    Stratino with(int value, bool shifted = false) const;   // appends a term
    Stratino with_last(int value, bool shifted) const;      // replaces the last term

    // Lexicographic, proper prefix smaller.
    std::strong_ordering operator<=>(const Stratino& o) const;
    bool operator==(const Stratino& o) const = default;

private:
    std::vector<StratinoTerm> terms_;
};

// x in DNJ(p)
bool dnj_member(const Stratino& x, size_t p);
// x in D(y) for unitary y
bool d_set_member(const Stratino& x, const Stratino& y);

}  // namespace jasso
