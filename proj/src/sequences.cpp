#include "jasso/sequences.hpp"

#include <sstream>

#include "jasso/map.hpp"

namespace jasso {

Stratino Stratino::parse(const std::string& s) {
    std::vector<StratinoTerm> t;
    if (s.empty() || s == "e" || s == "eps") return Stratino{};
    std::istringstream in(s);
    for (std::string part; std::getline(in, part, ',');) {
        StratinoTerm term;
        if (!part.empty() && part.back() == '#') {
            term.shifted = true;
            part.pop_back();
        }
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad stratino '" + s + "'");
        term.value = std::stoi(part);
        if (term.value < 1) throw InputError("bad stratino '" + s + "'");
        t.push_back(term);
    }
    return Stratino(std::move(t));
}

std::string Stratino::str() const {
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(terms_[i].value);
        if (terms_[i].shifted) out += '#';
    }
    return out;
}

StratinoKind Stratino::kind() const {
    if (empty()) return StratinoKind::Empty;
    return back().shifted ? StratinoKind::Shifted : StratinoKind::Natural;
}

Stratino Stratino::natural() const {
    if (empty()) return *this;
    return with_last(back().value, false);
}

Stratino Stratino::shifted() const {
    if (empty()) return *this;
    return with_last(back().value, true);
}

Stratino Stratino::parent() const {
    auto t = terms_;
    if (!t.empty()) t.pop_back();
    return Stratino(std::move(t));
}

Stratino Stratino::with(int value, bool sh) const {
    auto t = terms_;
    t.push_back({value, sh});
    return Stratino(std::move(t));
}

Stratino Stratino::with_last(int value, bool sh) const {
    auto t = terms_;
    t.back() = {value, sh};
    return Stratino(std::move(t));
}

std::strong_ordering Stratino::operator<=>(const Stratino& o) const {
    const size_t n = std::min(size(), o.size());
    for (size_t i = 0; i < n; ++i) {
        int a = terms_[i].key(), b = o.terms_[i].key();
        if (a != b) return a <=> b;
    }
    return size() <=> o.size();
}

bool dnj_member(const Stratino& x, size_t p) {
    return x.is_unitary() ? x.size() == p + 1 : x.size() == p;
}

bool d_set_member(const Stratino& x, const Stratino& y) {
    if (!y.is_unitary()) return false;
    const Stratino X = y.parent();
    // (X,n) n>=2, (X,n#) n>=1, (X,n,1), (X,n#,1)
    auto under = [&](const Stratino& z) {
        return z.size() == X.size() + 1 &&
               std::equal(X.terms().begin(), X.terms().end(), z.terms().begin());
    };
    if (under(x)) {
        const auto& t = x.back();
        return t.shifted || t.value >= 2;
    }
    if (x.is_unitary() && under(x.parent())) return true;
    return false;
}

}  // namespace jasso
