#include "jasso/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "jasso/rules.hpp"

namespace jasso {

namespace {

// Shape every H(alpha) must have, over one symbol per child pair (S T L G)
// and per monomial (U H B C):
//   (U?(S|TU)*H)? (B|C|L)* (S(S|TU)*H(B|C|L)*)* (S(S|TU)*T?)? G*
// Run as an NFA on bitmasks so dead prefixes are cut as soon as they appear.
// States 12 and 13 enter a mandatory left ramajo with and without its CU.
using States = unsigned;

States closure(States m) {
    // epsilon moves: 0->3, 3->4, 4->7, 7->11, 8->4, 9->11
    for (;;) {
        States n = m;
        if (n & (1u << 0)) n |= 1u << 3;
        if (n & (1u << 3)) n |= 1u << 4;
        if (n & (1u << 4)) n |= 1u << 7;
        if (n & (1u << 7)) n |= 1u << 11;
        if (n & (1u << 8)) n |= 1u << 4;
        if (n & (1u << 9)) n |= 1u << 11;
        if (n == m) return m;
        m = n;
    }
}

States step(States m, char c) {
    States n = 0;
    auto on = [&](int from, char sym, int to) {
        if ((m & (1u << from)) && c == sym) n |= 1u << to;
    };
    on(0, 'U', 1), on(0, 'S', 1), on(0, 'T', 2), on(0, 'H', 3);
    on(1, 'S', 1), on(1, 'T', 2), on(1, 'H', 3);
    on(2, 'U', 1);
    on(12, 'U', 1);
    on(13, 'S', 1), on(13, 'T', 2), on(13, 'H', 3);
    for (char x : {'B', 'C', 'L'}) on(3, x, 3), on(8, x, 8);
    on(4, 'S', 5);
    on(5, 'S', 5), on(5, 'T', 6), on(5, 'H', 8);
    on(6, 'U', 5);
    on(7, 'S', 9);
    on(9, 'S', 9), on(9, 'T', 10), on(9, 'T', 11);
    on(10, 'U', 9);
    on(11, 'G', 11);
    return closure(n);
}

constexpr States kStart = 1u;
bool accepting(States m) { return (m & (1u << 11)) != 0; }

struct Frame {
    Token tok;
    Stratino sigma;
    States shape;
    bool rd = false;    // R tokens after the last CH
    bool rd_t = false;  // ... ending on a TC pair
    bool g = false;     // has a TG child
    int fan = 0;        // TG/TC owner: 0 before BA, 1 inside the fan, 2 after CA
};

// Per stratino row, what later openers of the row need to know.
struct RowState {
    bool any = false;      // an opener already sits in the row
    bool ch = false;       // CH in the row since that opener
    bool pending = false;  // that opener has Rd or G, so it needs a CH-free successor
    bool rd = false, rd_t = false;
};

bool row_binome(const Token& t) { return t.opens(Binome::SN) || t.opens(Binome::LN); }

// Stratino of a child token under a parent with stratino ps; empty when the
// word cannot satisfy the stratino rule there.
Stratino child_sigma(const Stratino& ps, const Token& t) {
    if (ps.empty() || ps.kind() != StratinoKind::Natural) return {};
    const Stratino X = ps.parent();
    const int n = ps.back().value;
    if (t.opens(Binome::TG)) return n >= 2 ? X.with(n).with(1) : Stratino{};
    if (t.opens(Binome::TC) || t.is(Mono::CU)) return X.with(n, true).with(1);
    if (t.opens(Binome::SN) || t.is(Mono::CH)) return X.with(n + 1);
    if (t.opens(Binome::LN))
        return X.kind() == StratinoKind::Shifted ? X.parent().with(X.back().value + 1) : Stratino{};
    if (X.kind() == StratinoKind::Shifted) return X.parent().with(X.back().value + 1);
    if (!X.empty() && !X.is_unitary()) return X.shifted();
    return {};
}

struct WordSearch {
    int pairs;
    EnumStats* stats;
    std::vector<Word>& out;
    Word word;
    std::vector<Frame> stack;
    int openers = 0;
    std::map<Stratino, RowState> rows;
    std::vector<std::pair<Stratino, RowState>> undo;
    const Word* target = nullptr;  // follow only this word's branch

    bool off_target(const Token& t) const {
        return target && (word.size() >= target->size() || !((*target)[word.size()] == t));
    }

    RowState& touch(const Stratino& x) {
        RowState& r = rows[x];
        undo.emplace_back(x, r);
        return r;
    }
    void rollback(size_t mark) {
        while (undo.size() > mark) {
            rows[undo.back().first] = undo.back().second;
            undo.pop_back();
        }
    }

    // Owner of a fan member with stratino s: the TG at (X,n,1) for (X,n#),
    // the TC at (Y,m#,1) for (Y,m+1). Returns its stack index or -1.
    int fan_owner(const Stratino& s) const {
        const auto& last = s.back();
        const Stratino o = last.shifted ? s.with_last(last.value, false).with(1)
                                        : s.with_last(last.value - 1, true).with(1);
        for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i)
            if (stack[i].sigma == o) return stack[i].tok.opens(last.shifted ? Binome::TG : Binome::TC) ? i : -1;
        return -1;
    }

    // Fan words read BA (LN)* CA, or BA CA under a TG.
    static bool fan_step(int& state, char c, bool tg) {
        if (c == 'B' && state == 0) return state = 1, true;
        if (c == 'C' && state == 1) return state = 2, true;
        return c == 'L' && state == 1 && !tg;
    }

    // Start states of a new opener's H: a left ramajo is mandatory exactly
    // when the opener touches a row predecessor whose Rd is not empty.
    States open_row(const Token& t, const Stratino& s) {
        if (!row_binome(t)) return closure(1u << 3);
        RowState& r = touch(s);
        const bool cg = !r.any || r.ch;
        States start = closure(1u << 3);
        if (!cg && r.rd) start = r.rd_t ? 1u << 12 : 1u << 13;
        r = {true, false, false, false, false};
        return start;
    }

    void run() {
        ++stats->nodes;
        const Frame here = stack.back();
        const bool inner = stack.size() > 2;
        if (openers < pairs) {
            for (Binome b : {Binome::TG, Binome::TC, Binome::SN, Binome::LN}) {
                Token t = Token::open(b);
                if (off_target(t)) continue;
                const States next = step(here.shape, t.letter());
                if (!next) continue;
                Stratino s = child_sigma(here.sigma, t);
                if (s.empty()) continue;
                int owner = -1, owner_fan = 0;
                if (b == Binome::LN) {
                    owner = fan_owner(s);
                    if (owner < 0) continue;
                    owner_fan = stack[owner].fan;
                    if (!fan_step(stack[owner].fan, 'L', false)) continue;
                }
                const size_t mark = undo.size();
                Frame& top = stack.back();
                top.shape = next;
                if (b == Binome::TG) top.g = true;
                if (b == Binome::SN || b == Binome::TC) top.rd = true, top.rd_t = b == Binome::TC;
                word.push_back(t);
                stack.push_back({t, s, open_row(t, s)});
                ++openers;
                run();
                --openers;
                stack.pop_back();
                stack.back() = here;
                if (owner >= 0) stack[owner].fan = owner_fan;
                word.pop_back();
                rollback(mark);
            }
        }
        {
            for (Mono m : {Mono::CU, Mono::CH, Mono::BA, Mono::CA}) {
                Token t = Token::monomial(m);
                if (off_target(t)) continue;
                const States next = step(here.shape, t.letter());
                if (!next) continue;
                const Stratino s = child_sigma(here.sigma, t);
                if (s.empty()) continue;
                int owner = -1, owner_fan = 0;
                if (m == Mono::BA || m == Mono::CA) {
                    owner = fan_owner(s);
                    if (owner < 0) continue;
                    owner_fan = stack[owner].fan;
                    if (!fan_step(stack[owner].fan, t.letter(), stack[owner].tok.opens(Binome::TG))) {
                        stack[owner].fan = owner_fan;
                        continue;
                    }
                }
                const size_t mark = undo.size();
                if (m == Mono::CH) {
                    if (rows.count(s) && rows[s].pending) {
                        if (owner >= 0) stack[owner].fan = owner_fan;
                        continue;
                    }
                    touch(s).ch = true;
                }
                Frame& top = stack.back();
                top.shape = next;
                if (m == Mono::CU) top.rd = true, top.rd_t = false;
                if (m == Mono::CH) top.rd = false, top.rd_t = false;
                word.push_back(t);
                run();
                stack.back() = here;
                if (owner >= 0) stack[owner].fan = owner_fan;
                word.pop_back();
                rollback(mark);
            }
        }
        if (inner || openers == pairs) close();
    }

    void close() {
        const Frame f = stack.back();
        if (off_target(Token::close(f.tok.binome)) || !accepting(f.shape)) return;
        if ((f.tok.opens(Binome::TG) || f.tok.opens(Binome::TC)) && f.fan != 2) return;
        const size_t mark = undo.size();
        if (row_binome(f.tok)) {
            RowState& r = touch(f.sigma);
            r.pending = f.rd || f.g;
            r.rd = f.rd;
            r.rd_t = f.rd_t;
        } else if (f.rd || f.g) {
            return;  // always a closing opener
        }
        stack.pop_back();
        word.push_back(Token::close(f.tok.binome));
        if (stack.size() == 1) {
            // mr closed: finish with zc and validate
            bool open_need = false;
            for (auto& [x, r] : rows) open_need = open_need || r.pending;
            if (!open_need) {
                word.push_back(Token::close(Binome::ZC));
                ++stats->candidates;
                if (validate_word(word).ok()) out.push_back(word);
                word.pop_back();
            }
        } else {
            run();
        }
        word.pop_back();
        stack.push_back(f);
        rollback(mark);
    }
};

}  // namespace

namespace {

std::vector<Word> search(int pairs, EnumStats* stats, const Word* target) {
    std::vector<Word> out;
    EnumStats local;
    if (!stats) stats = &local;
    if (pairs < 3) return out;
    WordSearch s{pairs, stats, out, {}, {}, 2, {}, {}, target};
    s.word = {Token::open(Binome::ZC), Token::open(Binome::MR)};
    s.stack = {{Token::open(Binome::ZC), Stratino{}, closure(kStart)},
               {Token::open(Binome::MR), Stratino{}.with(1), closure(1u << 3)}};
    s.run();
    return out;
}

}  // namespace

std::vector<Word> enumerate_words(int pairs, EnumStats* stats) { return search(pairs, stats, nullptr); }

bool search_admits(const Word& w) {
    int pairs = 0;
    for (const Token& t : w) pairs += t.is_open();
    if (w.size() < 2 || !(w[0] == Token::open(Binome::ZC)) || !(w[1] == Token::open(Binome::MR))) return false;
    return search(pairs, nullptr, &w).size() == 1;
}

std::vector<int> DartMap::face_of() const {
    std::vector<int> f(darts(), -1);
    int next = 0;
    for (int d = 0; d < darts(); ++d) {
        if (f[d] >= 0) continue;
        for (int e = d; f[e] < 0; e = sigma[alpha[e]]) f[e] = next;
        ++next;
    }
    return f;
}

DartMap theta_darts() {
    // vertex u holds darts 0,2,4; vertex w holds 1,3,5
    DartMap m;
    m.alpha = {1, 0, 3, 2, 5, 4};
    m.sigma = {2, 5, 4, 1, 0, 3};
    return m;
}

std::vector<int> rooted_code(const DartMap& m, int r) {
    std::vector<int> label(m.darts(), -1), order{r};
    label[r] = 0;
    std::vector<int> code;
    for (size_t i = 0; i < order.size(); ++i) {
        for (int n : {m.alpha[order[i]], m.sigma[order[i]]}) {
            if (label[n] < 0) {
                label[n] = static_cast<int>(order.size());
                order.push_back(n);
            }
            code.push_back(label[n]);
        }
    }
    return code;
}

RootedMap to_rooted_map(const DartMap& m, int root) {
    const auto face = m.face_of();
    // Faces are named in order of discovery from the root dart.
    std::vector<int> order{root}, seen(m.darts(), 0), name(m.darts(), -1);
    seen[root] = 1;
    int faces = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        const int d = order[i];
        if (std::find(name.begin(), name.end(), face[d]) == name.end()) name[faces++] = face[d];
        for (int n : {m.alpha[d], m.sigma[d]})
            if (!seen[n]) seen[n] = 1, order.push_back(n);
    }
    std::vector<int> id(faces);
    for (int i = 0; i < faces; ++i) id[name[i]] = i;
    RootedMap rm;
    for (int i = 0; i < faces; ++i) rm.names.push_back("f" + std::to_string(i));
    rm.bordure.assign(faces, {});
    std::vector<int> anchor(faces, -1);
    for (int d : order)
        if (anchor[id[face[d]]] < 0) anchor[id[face[d]]] = d;
    anchor[id[face[root]]] = root;
    anchor[id[face[m.alpha[root]]]] = m.alpha[root];
    for (int f = 0; f < faces; ++f) {
        int d = anchor[f];
        do {
            rm.bordure[f].push_back(id[face[m.alpha[d]]]);
            d = m.sigma[m.alpha[d]];
        } while (d != anchor[f]);
    }
    rm.root_neg = id[face[root]];
    rm.root_pos = id[face[m.alpha[root]]];
    return rm;
}

namespace {

// New degree-3 vertex on the edge of dart d; returns its three darts
// (toward d's origin, toward the far end, free).
std::array<int, 3> subdivide(DartMap& m, int d) {
    const int n = m.darts(), far = m.alpha[d];
    m.alpha.resize(n + 3);
    m.sigma.resize(n + 3);
    m.alpha[d] = n, m.alpha[n] = d;
    m.alpha[far] = n + 1, m.alpha[n + 1] = far;
    m.sigma[n] = n + 2, m.sigma[n + 2] = n + 1, m.sigma[n + 1] = n;
    return {n, n + 1, n + 2};
}

// Inserts an edge across the face of darts a and b (a may equal b).
DartMap insert_edge(const DartMap& m0, int a, int b) {
    DartMap m = m0;
    std::array<int, 3> x, y;
    if (a == b) {
        y = subdivide(m, a);
        x = subdivide(m, a);
    } else {
        x = subdivide(m, a);
        y = subdivide(m, b);
    }
    m.alpha[x[2]] = y[2];
    m.alpha[y[2]] = x[2];
    return m;
}

std::vector<int> unrooted_code(const DartMap& m) {
    std::vector<int> best;
    for (int r = 0; r < m.darts(); ++r) {
        auto c = rooted_code(m, r);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

}  // namespace

std::vector<RootedMap> generate_maps(int faces) {
    if (faces < 3) return {};
    std::vector<DartMap> level{theta_darts()};
    for (int f = 3; f < faces; ++f) {
        std::map<std::vector<int>, DartMap> next;
        for (const DartMap& m : level) {
            const auto face = m.face_of();
            for (int a = 0; a < m.darts(); ++a)
                for (int b = a; b < m.darts(); ++b) {
                    if (face[a] != face[b]) continue;
                    DartMap g = insert_edge(m, a, b);
                    next.emplace(unrooted_code(g), std::move(g));
                }
        }
        level.clear();
        for (auto& [code, m] : next) level.push_back(std::move(m));
    }
    std::vector<RootedMap> out;
    for (const DartMap& m : level) {
        std::set<std::vector<int>> seen;
        for (int r = 0; r < m.darts(); ++r)
            if (seen.insert(rooted_code(m, r)).second) out.push_back(to_rooted_map(m, r));
    }
    return out;
}

}  // namespace jasso
