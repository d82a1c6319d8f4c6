#include "jasso/encoder.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace jasso {

namespace {

[[noreturn]] void fail(const std::string& what) { throw EncodeError(what); }

std::vector<int> tail(const std::vector<int>& v, size_t from) {
    return from >= v.size() ? std::vector<int>{} : std::vector<int>(v.begin() + from, v.end());
}

void append(std::vector<Item>& out, const std::vector<int>& faces) {
    out.insert(out.end(), faces.begin(), faces.end());
}

void append_items(std::vector<Item>& out, const std::vector<Item>& items) {
    out.insert(out.end(), items.begin(), items.end());
}

}  // namespace

const std::vector<Item>& StratoTable::row(const Stratino& x) const {
    static const std::vector<Item> empty;
    auto it = sigma.find(x);
    return it == sigma.end() ? empty : it->second;
}

std::vector<Stratino> StratoTable::nj() const {
    std::vector<Stratino> out;
    for (auto& [k, v] : sigma)
        if (!v.empty()) out.push_back(k);
    return out;
}

std::string format_items(const RootedMap& m, const std::vector<Item>& items) {
    std::string out = "(";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += is_face(items[i]) ? m.names[items[i]] : mono_name(item_mono(items[i]));
    }
    return out + ")";
}

int stratino_color(const Stratino& row) {
    if (row.empty()) return 0;
    const bool odd_len = row.size() % 2 == 1;
    const bool odd_last = row.back().value % 2 == 1;
    if (odd_len) return odd_last ? 1 : 3;
    return odd_last ? 0 : 2;
}

Layering compute_layering(const RootedMap& m) {
    const int F = m.face_count();
    Layering l;
    l.level.assign(F, -1);
    l.rov_of.assign(F, -1);
    auto adj = adjacency(m);

    std::queue<int> q;
    l.level[m.root_neg] = 0;
    q.push(m.root_neg);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int n : adj[f])
            if (l.level[n] < 0) {
                l.level[n] = l.level[f] + 1;
                q.push(n);
            }
    }
    int top = 0;
    for (int f = 0; f < F; ++f) {
        if (l.level[f] < 0) fail("face " + m.names[f] + " is unreachable from the root face");
        top = std::max(top, l.level[f]);
    }
    l.jasses.assign(top + 1, {});
    for (int f = 0; f < F; ++f) l.jasses[l.level[f]].push_back(f);

    // Rovejasses: connected components inside each layer. Level 0 is its own.
    for (int p = 0; p <= top; ++p) {
        for (int f : l.jasses[p]) {
            if (l.rov_of[f] >= 0) continue;
            Rovejasse v;
            v.level = p;
            const int id = static_cast<int>(l.rovs.size());
            std::vector<int> stack{f};
            l.rov_of[f] = id;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                v.cells.push_back(x);
                for (int n : adj[x])
                    if (l.level[n] == p && l.rov_of[n] < 0) {
                        l.rov_of[n] = id;
                        stack.push_back(n);
                    }
            }
            std::sort(v.cells.begin(), v.cells.end());
            l.rovs.push_back(std::move(v));
        }
    }
    if (top >= 1) {
        std::set<int> first;
        for (int f : l.jasses[1]) first.insert(l.rov_of[f]);
        if (first.size() != 1) fail("the first layer is not connected");
    }

    for (auto& v : l.rovs) {
        if (v.level < 2) continue;
        std::set<int> sup;
        for (int c : v.cells)
            for (int n : adj[c])
                if (l.level[n] == v.level - 1) sup.insert(n);
        v.support.assign(sup.begin(), sup.end());
        // P2: connected support inside one rovejasse of the previous layer.
        std::set<int> seen{v.support.front()};
        std::vector<int> stack{v.support.front()};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int n : adj[x])
                if (sup.count(n) && !seen.count(n)) {
                    seen.insert(n);
                    stack.push_back(n);
                }
        }
        if (seen.size() != sup.size())
            fail("support of the rovejasse containing " + m.names[v.cells.front()] + " is not connected");
        ring_walk(m, l, v);
    }
    return l;
}

void ring_walk(const RootedMap& m, const Layering& l, Rovejasse& v) {
    std::set<int> cells(v.cells.begin(), v.cells.end());
    v.cplus.clear();
    v.cminus.clear();
    for (int a : v.support) {
        const auto& b = m.bordure[a];
        const int L = static_cast<int>(b.size());
        int starts = 0, start = -1;
        for (int i = 0; i < L; ++i) {
            bool in = cells.count(b[i]) > 0;
            bool prev_in = cells.count(b[(i + L - 1) % L]) > 0;
            if (in && !prev_in) {
                ++starts;
                start = i;
            }
        }
        if (starts != 1)
            fail("P3: neighbours of " + m.names[a] + " in the rovejasse of " + m.names[v.cells.front()] +
                 " do not form one run");
        int end = start;
        while (cells.count(b[(end + 1) % L])) end = (end + 1) % L;
        v.cplus[a] = b[(start + L - 1) % L];
        v.cminus[a] = b[(end + 1) % L];
    }
    for (auto& [a, c] : v.cplus)
        if (!std::binary_search(v.support.begin(), v.support.end(), c))
            fail("P3: ring successor of " + m.names[a] + " leaves the support");
    (void)l;
}

CaoulyFan derive_caouly_fan(const Rovejasse& v, FacePair baou, bool mediane) {
    auto [a, b] = baou;
    auto next = [&](int x) {
        auto it = v.cplus.find(x);
        if (it == v.cplus.end()) fail("ring step from a cell outside the support");
        return it->second;
    };
    if (next(a) != b) fail("baou is not a ring step");
    CaoulyFan out;
    if (next(b) == a) {
        out.caouly = {b, a};
        return out;
    }
    std::vector<int> g;
    for (int x = next(b); x != a; x = next(x)) {
        g.push_back(x);
        if (g.size() > v.support.size()) fail("ring does not close");
    }
    const size_t r = g.size();
    if (!mediane) {
        out.caouly = {g[r - 1], a};
        out.fan = g;
    } else if (r == 1) {
        out.caouly = {b, g[0]};
    } else {
        out.caouly = {g[r - 2], g[r - 1]};
        out.fan.assign(g.begin(), g.end() - 1);
    }
    return out;
}

Oriented oriented_boundary(const RootedMap& m, int e, FacePair gh, std::optional<FacePair> dh) {
    const auto& b = m.bordure[e];
    const int L = static_cast<int>(b.size());
    std::vector<int> hits;
    for (int k = 0; k < L; ++k)
        if (b[k] == gh.first && b[(k + 1) % L] == gh.second) hits.push_back(k);
    if (hits.size() != 1)
        fail("gh(" + m.names[e] + ") occurs " + std::to_string(hits.size()) + " times in its bordure");
    Oriented o;
    for (int i = 0; i <= L; ++i) o.rotated.push_back(b[(hits[0] + i) % L]);
    if (!dh) {
        o.br = o.rotated;
        return o;
    }
    std::vector<int> ends;
    for (int j = 2; j <= L; ++j)
        if (o.rotated[j - 1] == dh->first && o.rotated[j] == dh->second) ends.push_back(j);
    if (ends.size() != 1)
        fail("dh(" + m.names[e] + ") occurs " + std::to_string(ends.size()) + " times after gh");
    o.br.assign(o.rotated.begin(), o.rotated.begin() + ends[0] + 1);
    return o;
}

std::vector<Item> project_delta(const std::vector<int>& xi, FacePair baou, FacePair caouly) {
    const size_t u = xi.size() - 1;
    const bool starts = xi.size() >= 2 && FacePair{xi[0], xi[1]} == baou;
    const bool ends = xi.size() >= 2 && FacePair{xi[u - 1], xi[u]} == caouly;
    std::vector<Item> out;
    if (starts) {
        out.push_back(mono_item(Mono::BA));
        for (size_t i = 2; i < (ends ? u : u + 1); ++i) out.push_back(xi[i]);
    } else {
        for (size_t i = 1; i < (ends ? u : u + 1); ++i) out.push_back(xi[i]);
    }
    if (ends) out.push_back(mono_item(Mono::CA));
    return out;
}

namespace {

struct Lateral {
    std::vector<Item> R, T, S;
    std::vector<int> cells;  // faces of S
};

enum class Side { Inner, Right, Left };

class Encoder {
public:
    explicit Encoder(const RootedMap& m) : m_(m) {}

    Encoding run();

private:
    const RootedMap& m_;
    Layering L_;
    std::vector<CellAnnotation> C_;
    std::vector<bool> discovered_;
    StratoTable table_;

    int level(int f) const { return L_.level[f]; }
    Rovejasse& rov(int f) { return L_.rovs[L_.rov_of[f]]; }
    std::string name(int f) const { return m_.names[f]; }

    void place(int f, Binome b, bool med, int parent) {
        auto& c = C_[f];
        if (c.placed) fail("cell " + name(f) + " is assigned twice");
        c.placed = true;
        c.binome = b;
        c.mediane = med;
        c.parent = parent;
    }

    CaoulyFan discover(int zouc, FacePair baou, Binome b, bool med, int parent) {
        const int w = L_.rov_of[zouc];
        if (discovered_[w]) fail("rovejasse of " + name(zouc) + " is reached twice");
        discovered_[w] = true;
        auto& v = L_.rovs[w];
        v.zouc = zouc;
        v.baou = baou;
        auto cf = derive_caouly_fan(v, baou, med);
        v.caouly = cf.caouly;
        v.fan = cf.fan;
        place(zouc, b, med, parent);
        return cf;
    }

    // Fan cells hang off the cell of w that sees (c-(x), x) on its bordure.
    void place_fan(const Rovejasse& w, const std::vector<int>& fan) {
        for (int x : fan) {
            const int y = w.cminus.at(x);
            int owner = -1, hits = 0;
            for (int c : w.cells) {
                auto ext = m_.extended(c);
                for (size_t i = 0; i + 1 < ext.size(); ++i)
                    if (ext[i] == y && ext[i + 1] == x) {
                        if (owner != c) ++hits;
                        owner = c;
                    }
            }
            if (hits != 1) fail("fan cell " + name(x) + " has no unique owner");
            place(x, Binome::LN, false, owner);
        }
    }

    struct Chain {
        std::vector<std::vector<int>> s, t;
    };

    Chain split_chain(const std::vector<int>& block, int lv) {
        Chain c;
        c.s.emplace_back();
        bool in_t = false;
        for (int x : block) {
            if (level(x) == lv) {
                in_t = false;
                c.s.back().push_back(x);
            } else if (level(x) == lv + 1) {
                if (!in_t) {
                    c.t.emplace_back();
                    c.s.emplace_back();
                    in_t = true;
                }
                c.t.back().push_back(x);
            } else {
                fail("lateral block contains " + name(x) + " at an unexpected layer");
            }
        }
        std::set<int> ws;
        for (auto& t : c.t) {
            const int w = L_.rov_of[t.front()];
            for (int x : t)
                if (L_.rov_of[x] != w) fail("lateral block mixes rovejasses at " + name(x));
            if (!ws.insert(w).second) fail("rovejasse of " + name(t.front()) + " appears twice in a block");
        }
        return c;
    }

    Lateral lateral(int e, const std::vector<int>& block, Side side, int next_cell);
    void set_chain_links(const std::vector<int>& cells, int owner_first_gh, int a, int b, int owner_last_dh);
    void pass_a(const Stratino& X);
    bool pass_b(const Stratino& X, int n);
    void check_p4(const Stratino& row);
};

// Marks s-cells, discovers orthogonal rovejasses and assembles R, T, S for
// one lateral block of e.
Lateral Encoder::lateral(int e, const std::vector<int>& block, Side side, int next_cell) {
    Lateral out;
    if (block.empty()) return out;
    Chain ch = split_chain(block, level(e));
    const size_t u = ch.t.size();
    const auto CU = mono_item(Mono::CU), CH = mono_item(Mono::CH);

    for (size_t q = 1; q < u; ++q)
        if (ch.s[q].empty()) fail("empty chain segment in a lateral block of " + name(e));
    if (side != Side::Left && ch.s[0].empty()) fail("lateral block of " + name(e) + " starts off-chain");
    if (side != Side::Right && ch.s[u].empty()) fail("lateral block of " + name(e) + " ends off-chain");

    auto sn = [&](const std::vector<int>& cells) {
        for (int x : cells) place(x, Binome::SN, false, e);
    };

    // The ordinary step for w_q: zouc first in t_q, entry after s_{q-1}.
    auto step = [&](size_t q) -> std::vector<int> {
        const int zouc = ch.t[q - 1].front();
        const int prev = ch.s[q - 1].back();
        auto& w = rov(zouc);
        auto it = w.cplus.find(e);
        if (it == w.cplus.end() || it->second != prev)
            fail("ring step (" + name(e) + "," + name(prev) + ") missing around " + name(zouc));
        auto cf = discover(zouc, {e, prev}, Binome::TC, false, e);
        if (ch.s[q].empty() || cf.caouly != FacePair{ch.s[q].front(), e})
            fail("caouly of the rovejasse of " + name(zouc) + " does not meet the chain");
        place_fan(w, cf.fan);
        return cf.fan;
    };

    if (side == Side::Inner || side == Side::Right) {
        const size_t v = (side == Side::Right && ch.s[u].empty()) ? u - 1 : u;
        sn(ch.s[0]);
        append(out.R, ch.s[0]);
        append(out.S, ch.s[0]);
        for (size_t q = 1; q <= v; ++q) {
            auto fan = step(q);
            auto rest = tail(ch.s[q], 1);
            sn(rest);
            const int zouc = ch.t[q - 1].front();
            out.R.push_back(zouc);
            out.R.push_back(CU);
            append(out.R, rest);
            out.T.push_back(zouc);
            out.T.push_back(CU);
            append(out.S, fan);
            append(out.S, rest);
        }
        if (side == Side::Inner) {
            out.R.push_back(CH);
            out.S.push_back(CH);
        } else if (v == u && u >= 1) {
            C_[out.S.back()].mediane = true;
        } else if (v < u) {
            // The last orthogonal rovejasse is pinched between e and the next cell.
            const int zouc = ch.t[u - 1].back();
            const int prev = ch.s[u - 1].back();
            auto& w = rov(zouc);
            auto it = w.cplus.find(e);
            if (it == w.cplus.end() || it->second != prev)
                fail("ring step (" + name(e) + "," + name(prev) + ") missing around " + name(zouc));
            auto cf = discover(zouc, {e, prev}, Binome::TC, true, e);
            if (cf.caouly.second != next_cell)
                fail("median rovejasse of " + name(zouc) + " does not reach " + name(next_cell));
            place_fan(w, cf.fan);
            out.R.push_back(zouc);
            out.T.push_back(zouc);
            append(out.S, cf.fan);
        }
    } else {
        const size_t v = ch.s[0].empty() ? 2 : 1;
        if (v == 2) {
            if (u == 0) fail("empty left block of " + name(e));
            const auto& w = rov(ch.t[0].front());
            if (!discovered_[L_.rov_of[ch.t[0].front()]] || !C_[w.zouc].mediane)
                fail("left block of " + name(e) + " starts on an unshared rovejasse");
            if (ch.s[1].front() != w.caouly.first)
                fail("left block of " + name(e) + " does not leave the shared rovejasse at its exit");
            out.R.push_back(CU);
            out.T.push_back(CU);
        }
        const size_t first = v - 1;
        auto rest0 = tail(ch.s[first], 1);
        sn(rest0);
        append(out.R, rest0);
        append(out.S, rest0);
        for (size_t q = v; q <= u; ++q) {
            auto fan = step(q);
            auto rest = tail(ch.s[q], 1);
            sn(rest);
            const int zouc = ch.t[q - 1].front();
            out.R.push_back(zouc);
            out.R.push_back(CU);
            append(out.R, rest);
            out.T.push_back(zouc);
            out.T.push_back(CU);
            append(out.S, fan);
            append(out.S, rest);
        }
        out.R.push_back(CH);
        out.S.push_back(CH);
    }
    for (Item x : out.S)
        if (is_face(x)) out.cells.push_back(x);
    return out;
}

// gh/dh along one S-chain; the ends are supplied by the caller (-1 to skip).
void Encoder::set_chain_links(const std::vector<int>& cells, int gh_first, int a, int b, int dh_last) {
    if (cells.empty()) return;
    const size_t g = cells.size();
    if (gh_first >= 0) C_[cells[0]].gh = {gh_first, a};
    if (dh_last >= 0) C_[cells[g - 1]].dh = {b, dh_last};
    for (size_t s = 1; s < g; ++s) C_[cells[s]].gh = {C_[cells[s]].parent, cells[s - 1]};
    for (size_t s = 0; s + 1 < g; ++s) C_[cells[s]].dh = {cells[s + 1], C_[cells[s + 1]].parent};
}

void Encoder::pass_a(const Stratino& X) {
    const Stratino row = X.with(1);
    std::vector<Item> T_row, S_row;
    for (Item it : table_.row(row)) {
        if (!is_face(it)) continue;
        const int e = it;
        auto& ce = C_[e];
        const int lv = level(e);
        const auto& w = rov(e);
        FacePair gh;
        if (lv == 1) {
            gh = {m_.bordure[e][0], m_.bordure[e][1]};
        } else if (!ce.mediane) {
            gh = w.baou;
        } else {
            gh = {w.caouly.second, w.baou.first};
        }
        ce.gh = gh;
        Oriented o;
        if (lv == 1) {
            o.rotated = o.br = m_.extended(e);
        } else {
            o = oriented_boundary(m_, e, gh, std::nullopt);
        }
        const auto& br = o.br;
        ce.dh = {br[br.size() - 2], br.back()};

        // Br = (d0, r1, d1, ..., r_rho, d_rho) against the previous layer.
        std::vector<std::vector<int>> d, r;
        for (size_t i = 0; i < br.size();) {
            const bool low = level(br[i]) == lv - 1;
            std::vector<int> blk;
            while (i < br.size() && (level(br[i]) == lv - 1) == low) blk.push_back(br[i++]);
            (low ? d : r).push_back(std::move(blk));
        }
        if (level(br.front()) != lv - 1 || level(br.back()) != lv - 1)
            fail("boundary of zouc " + name(e) + " does not start and end in the previous layer");
        if (ce.mediane) {
            d[0].erase(d[0].begin());
            if (d[0].empty()) fail("empty first delta block for median zouc " + name(e));
        }
        ce.v = static_cast<int>(r.size());

        auto delta = [&](size_t k) -> std::vector<Item> {
            if (lv == 1) return {};
            return project_delta(d[k], w.baou, w.caouly);
        };
        ce.H = delta(0);
        for (size_t k = 1; k <= r.size(); ++k) {
            auto lat = lateral(e, r[k - 1], Side::Inner, -1);
            set_chain_links(lat.cells, e, d[k - 1].back(), d[k].front(), e);
            append_items(ce.H, lat.R);
            append_items(ce.H, delta(k));
            append_items(ce.T, lat.T);
            append_items(ce.S, lat.S);
        }
        append_items(T_row, ce.T);
        append_items(S_row, ce.S);
    }
    if (!T_row.empty()) table_.sigma[X.with(1, true).with(1)] = T_row;
    if (!S_row.empty()) table_.sigma[X.with(2)] = S_row;
}

bool Encoder::pass_b(const Stratino& X, int n) {
    const Stratino row = X.with(n);
    std::vector<int> es;
    for (Item it : table_.row(row))
        if (is_face(it)) es.push_back(it);
    if (es.empty()) return false;
    const size_t r = es.size();

    struct Local {
        std::vector<std::vector<int>> d;
        Lateral g, dd;
    };
    std::vector<Local> loc(r);
    std::vector<Item> G_row, DG_row, T_row, S_row;
    std::vector<std::vector<Item>> Gs(r), DGs(r);

    for (size_t t = 0; t < r; ++t) {
        const int e = es[t];
        auto& ce = C_[e];
        const int lv = level(e);
        const auto& w = rov(e);
        if (ce.gh == kNoPair || ce.dh == kNoPair) fail("cell " + name(e) + " reached without gh/dh");
        auto o = oriented_boundary(m_, e, ce.gh, ce.dh);
        const auto& br = o.br;

        std::vector<std::vector<int>> d, rr;
        for (size_t i = 0; i < br.size();) {
            const bool low = level(br[i]) == lv - 1;
            std::vector<int> blk;
            while (i < br.size() && (level(br[i]) == lv - 1) == low) blk.push_back(br[i++]);
            (low ? d : rr).push_back(std::move(blk));
        }
        if (level(br.front()) == lv - 1 || level(br.back()) == lv - 1 || d.empty())
            fail("boundary of " + name(e) + " does not straddle the previous layer");
        ce.v = static_cast<int>(d.size()) - 1;
        const auto& xg = rr.front();
        const auto& xd = rr.back();

        std::vector<int> xRg, xRd, xG;
        if (xg.size() >= 2) {
            if (t == 0 || xg[1] != es[t - 1]) fail("left boundary of " + name(e) + " does not meet its predecessor");
            size_t last = 1;
            for (size_t i = 1; i < xg.size(); ++i)
                if (xg[i] == xg[1]) last = i;
            xRg = tail(xg, last + 1);
        }
        if (xd.size() >= 2) {
            const int nb = xd[xd.size() - 2];
            if (t + 1 >= r || nb != es[t + 1]) fail("right boundary of " + name(e) + " does not meet its successor");
            size_t first = 0;
            while (xd[first] != nb) ++first;
            xRd.assign(xd.begin(), xd.begin() + first);
            xG.assign(xd.begin() + first, xd.end() - 1);
        }

        auto delta = [&](size_t k) -> std::vector<Item> {
            if (lv == 1) return {};
            return project_delta(d[k], w.baou, w.caouly);
        };

        // Rg, then the inner blocks, then Rd and G.
        auto lg = lateral(e, xRg, Side::Left, -1);
        std::vector<Item> H = lg.R, T = lg.T, S = lg.S;
        append_items(H, delta(0));
        for (size_t k = 1; k < rr.size() - 1; ++k) {
            auto lat = lateral(e, rr[k], Side::Inner, -1);
            set_chain_links(lat.cells, e, d[k - 1].back(), d[k].front(), e);
            append_items(H, lat.R);
            append_items(H, delta(k));
            append_items(T, lat.T);
            append_items(S, lat.S);
        }
        auto ld = lateral(e, xRd, Side::Right, t + 1 < r ? es[t + 1] : -1);
        append_items(H, ld.R);
        append_items(T, ld.T);
        append_items(S, ld.S);

        if (xG.size() > 1) {
            const int nb = es[t + 1];
            if (xG.front() != nb || xG.back() != nb) fail("pinched block of " + name(e) + " is malformed");
            std::vector<int> cur;
            for (size_t i = 1; i < xG.size(); ++i) {
                if (xG[i] != nb) {
                    cur.push_back(xG[i]);
                    continue;
                }
                if (cur.empty()) fail("empty pinched block of " + name(e));
                const int zouc = cur.front();
                const auto& pw = rov(zouc);
                for (int x : cur)
                    if (L_.rov_of[x] != L_.rov_of[zouc]) fail("pinched block of " + name(e) + " mixes rovejasses");
                if (pw.support != std::vector<int>{std::min(e, nb), std::max(e, nb)})
                    fail("pinched rovejasse of " + name(zouc) + " is not supported by two cells");
                discover(zouc, {e, nb}, Binome::TG, false, e);
                Gs[t].push_back(zouc);
                DGs[t].push_back(mono_item(Mono::BA));
                DGs[t].push_back(mono_item(Mono::CA));
                cur.clear();
            }
        }
        append_items(H, Gs[t]);

        ce.H = std::move(H);
        ce.T = std::move(T);
        ce.S = std::move(S);
        loc[t].d = std::move(d);
        loc[t].g = std::move(lg);
        loc[t].dd = std::move(ld);
    }

    for (size_t t = 0; t < r; ++t) {
        const int e = es[t];
        const auto& d = loc[t].d;
        if (!loc[t].g.cells.empty()) {
            // Junction links use phi of the neighbouring cell, as inside a chain.
            const auto& gc = loc[t].g.cells;
            const auto& pc = loc[t - 1].dd.cells;
            const int a = pc.empty() ? loc[t - 1].d.back().back() : pc.back();
            set_chain_links(gc, C_[gc.front()].parent, a, d.front().front(), e);
        }
        if (!loc[t].dd.cells.empty()) {
            const int next = es[t + 1];
            const auto& nc = loc[t + 1].g.cells;
            const int b = nc.empty() ? loc[t + 1].d.front().front() : nc.front();
            set_chain_links(loc[t].dd.cells, e, d.back().back(), b, nc.empty() ? next : C_[b].parent);
        }
        append_items(G_row, Gs[t]);
        append_items(DG_row, DGs[t]);
        append_items(T_row, C_[e].T);
        append_items(S_row, C_[e].S);
    }
    if (!G_row.empty()) table_.sigma[row.with(1)] = G_row;
    if (!DG_row.empty()) table_.sigma[X.with(n, true)] = DG_row;
    if (!T_row.empty()) table_.sigma[X.with(n, true).with(1)] = T_row;
    if (!S_row.empty()) table_.sigma[X.with(n + 1)] = S_row;
    return true;
}

void Encoder::check_p4(const Stratino& row) {
    const auto& items = table_.row(row);
    std::vector<int> cells;
    std::vector<bool> broken;  // CH between cells[i] and cells[i+1]
    bool ch = false;
    for (Item it : items) {
        if (is_face(it)) {
            if (!cells.empty()) broken.push_back(ch);
            cells.push_back(it);
            ch = false;
        } else if (item_mono(it) == Mono::CH) {
            ch = true;
        }
    }
    auto adj = [&](int a, int b) {
        const auto& bb = m_.bordure[a];
        return std::find(bb.begin(), bb.end(), b) != bb.end();
    };
    for (size_t i = 0; i < cells.size(); ++i) {
        if (level(cells[i]) != static_cast<int>(row.size()))
            fail("P4: cell " + name(cells[i]) + " sits in a row of the wrong layer");
        for (size_t j = i + 1; j < cells.size(); ++j) {
            if (cells[i] == cells[j]) fail("P4: repeated cell " + name(cells[i]));
            const bool touch = adj(cells[i], cells[j]);
            if (j == i + 1 ? touch == broken[i] : touch)
                fail("P4: contact between " + name(cells[i]) + " and " + name(cells[j]) + " in row " + row.str());
        }
    }
}

Encoding Encoder::run() {
    const int F = m_.face_count();
    auto report = validate_map(m_);
    if (!report.ok()) fail("invalid map: " + report.violations.front().detail);
    L_ = compute_layering(m_);
    C_.assign(F, {});
    discovered_.assign(L_.rovs.size(), false);

    const int w0 = m_.root_neg, w1 = m_.root_pos;
    if (level(w1) != 1) fail("root faces are not adjacent");
    place(w0, Binome::ZC, false, -1);
    C_[w0].H = {w1};
    place(w1, Binome::MR, false, w0);
    discovered_[L_.rov_of[w1]] = true;
    rov(w1).zouc = w1;
    table_.sigma[Stratino{}] = {w0};
    table_.sigma[Stratino::parse("1")] = {w1};

    std::deque<Stratino> work{Stratino::parse("1")};
    size_t guard = 0;
    while (!work.empty()) {
        if (++guard > static_cast<size_t>(4 * F + 8)) fail("recursion does not terminate");
        const Stratino Y = work.front();
        work.pop_front();
        const Stratino X = Y.parent();
        pass_a(X);
        const Stratino t1 = X.with(1, true).with(1);
        if (!table_.row(t1).empty()) work.push_back(t1);
        for (int n = 2;; ++n) {
            if (n > F + 2) fail("row iteration does not terminate");
            if (!table_.row(X.with(n)).empty()) check_p4(X.with(n));
            if (!pass_b(X, n)) break;
            const Stratino g = X.with(n).with(1), tt = X.with(n, true).with(1);
            if (!table_.row(g).empty()) work.push_back(g);
            if (!table_.row(tt).empty()) work.push_back(tt);
        }
    }

    std::vector<int> seen(F, 0);
    for (auto& [x, items] : table_.sigma)
        for (Item it : items)
            if (is_face(it)) {
                ++seen[it];
                C_[it].row = x;
            }
    for (int f = 0; f < F; ++f)
        if (seen[f] != 1)
            fail("face " + name(f) + " occurs " + std::to_string(seen[f]) + " times in the stratojasse table");

    Encoding out;
    out.tree.parent.assign(F, -1);
    out.tree.children.assign(F, {});
    out.tree.root = w0;
    for (int f = 0; f < F; ++f) {
        out.tree.parent[f] = C_[f].parent;
        for (Item it : C_[f].H)
            if (is_face(it)) out.tree.children[f].push_back(it);
    }
    auto problems = validate_dallajascar(out.tree);
    if (!problems.empty()) fail("ramification functions are inconsistent: " + problems.front());

    std::function<void(int)> emit = [&](int f) {
        out.visit.push_back(f);
        out.word.push_back(Token::open(C_[f].binome));
        for (Item it : C_[f].H) {
            if (is_face(it)) emit(it);
            else out.word.push_back(Token::monomial(item_mono(it)));
        }
        out.word.push_back(Token::close(C_[f].binome));
    };
    emit(w0);

    out.color.assign(F, 0);
    for (int f = 0; f < F; ++f) out.color[f] = stratino_color(C_[f].row);
    out.layers = std::move(L_);
    out.cells = std::move(C_);
    out.table = std::move(table_);
    return out;
}

}  // namespace

Encoding encode(const RootedMap& m) { return Encoder(m).run(); }

std::vector<std::string> contact_violations(const RootedMap& m, const Encoding& e, bool linked_rows) {
    const int F = m.face_count();
    std::set<std::pair<int, int>> linked;  // consecutive, no CH between
    for (auto& [x, items] : e.table.sigma) {
        // Unitary rows list zoucs of distinct rovejasses of one layer: never linked.
        if (!linked_rows && x.is_unitary()) continue;
        int prev = -1;
        for (Item it : items) {
            if (is_face(it)) {
                if (prev >= 0) linked.insert(std::minmax(prev, it));
                prev = it;
            } else if (item_mono(it) == Mono::CH) {
                prev = -1;
            }
        }
    }
    const auto adj = adjacency(m);
    std::vector<std::string> out;
    for (int f = 0; f < F; ++f)
        for (int g = f + 1; g < F; ++g) {
            if (e.color[f] != e.color[g]) continue;
            const bool touch = std::find(adj[f].begin(), adj[f].end(), g) != adj[f].end();
            if (touch != (linked.count({f, g}) > 0))
                out.push_back(m.names[f] + " and " + m.names[g] + (touch ? " touch" : " do not touch") +
                              " with color c" + std::to_string(e.color[f]));
        }
    return out;
}

}  // namespace jasso
