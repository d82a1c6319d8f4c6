#include "jasso/map.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace jasso {

int RootedMap::find(const std::string& name) const {
    for (int i = 0; i < face_count(); ++i)
        if (names[i] == name) return i;
    return -1;
}

int RootedMap::at(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw InputError("unknown face '" + name + "'");
    return i;
}

std::vector<int> RootedMap::extended(int f) const {
    std::vector<int> out = bordure.at(f);
    if (!out.empty()) out.push_back(out.front());
    return out;
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

}  // namespace

RootedMap parse_map(const std::string& text) {
    RootedMap m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_faces = false, have_root = false;
    std::vector<bool> seen;
    std::vector<std::pair<std::string, std::vector<std::string>>> borders;
    std::string neg, pos;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto words = split_words(line);
        if (words.empty()) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (words[0] == "faces") {
            if (have_faces) throw InputError(where + "duplicate faces line");
            have_faces = true;
            for (size_t i = 1; i < words.size(); ++i) {
                if (m.find(words[i]) >= 0) throw InputError(where + "duplicate face '" + words[i] + "'");
                m.names.push_back(words[i]);
            }
        } else if (words[0] == "border") {
            if (words.size() < 2 || words[1].size() < 2 || words[1].back() != ':')
                throw InputError(where + "expected 'border <id>: ...'");
            std::string id = words[1].substr(0, words[1].size() - 1);
            borders.emplace_back(id, std::vector<std::string>(words.begin() + 2, words.end()));
        } else if (words[0] == "root") {
            if (words.size() != 3) throw InputError(where + "expected 'root <neg> <pos>'");
            if (have_root) throw InputError(where + "duplicate root line");
            have_root = true;
            neg = words[1];
            pos = words[2];
        } else {
            throw InputError(where + "unknown directive '" + words[0] + "'");
        }
    }
    if (!have_faces) throw InputError("missing faces line");
    if (!have_root) throw InputError("missing root line");

    m.bordure.assign(m.names.size(), {});
    seen.assign(m.names.size(), false);
    for (auto& [id, nb] : borders) {
        int f = m.at(id);
        if (seen[f]) throw InputError("duplicate border for '" + id + "'");
        seen[f] = true;
        for (auto& n : nb) m.bordure[f].push_back(m.at(n));
    }
    for (size_t f = 0; f < seen.size(); ++f)
        if (!seen[f]) throw InputError("missing border for '" + m.names[f] + "'");
    m.root_neg = m.at(neg);
    m.root_pos = m.at(pos);
    return m;
}

std::string format_map(const RootedMap& m) {
    std::ostringstream out;
    out << "faces";
    for (auto& n : m.names) out << ' ' << n;
    out << '\n';
    for (int f = 0; f < m.face_count(); ++f) {
        out << "border " << m.names[f] << ':';
        for (int n : m.bordure[f]) out << ' ' << m.names[n];
        out << '\n';
    }
    out << "root " << m.names[m.root_neg] << ' ' << m.names[m.root_pos] << '\n';
    return out.str();
}

MapCounts count_map(const RootedMap& m) {
    MapCounts c;
    c.faces = m.face_count();
    for (auto& b : m.bordure) c.sum += static_cast<int>(b.size());
    c.edges = c.sum / 2;
    c.vertices = c.sum / 3;
    return c;
}

std::vector<std::vector<int>> adjacency(const RootedMap& m) {
    std::vector<std::vector<int>> adj(m.face_count());
    for (int f = 0; f < m.face_count(); ++f) {
        std::set<int> s(m.bordure[f].begin(), m.bordure[f].end());
        adj[f].assign(s.begin(), s.end());
    }
    return adj;
}

MapReport validate_map(const RootedMap& m) {
    MapReport r;
    auto add = [&](std::string rule, std::string detail) {
        r.violations.push_back({std::move(rule), std::move(detail)});
    };
    const int F = m.face_count();
    r.counts = count_map(m);
    if (F == 0) {
        add("faces", "map has no faces");
        return r;
    }

    bool structural = true;
    for (int f = 0; f < F; ++f) {
        const auto& b = m.bordure[f];
        if (b.size() < 2) {
            add("bordure-length", "B(" + m.names[f] + ") has fewer than 2 neighbours");
            structural = false;
        }
        for (int n : b) {
            if (n < 0 || n >= F) {
                add("bordure-face", "B(" + m.names[f] + ") names an unknown face");
                structural = false;
            } else if (n == f) {
                add("bordure-owner", m.names[f] + " appears in its own bordure");
                structural = false;
            }
        }
    }
    if (m.root_neg < 0 || m.root_neg >= F || m.root_pos < 0 || m.root_pos >= F) {
        add("root", "root faces are not faces of the map");
        return r;
    }
    if (!structural) return r;

    const auto& bn = m.bordure[m.root_neg];
    const auto& bp = m.bordure[m.root_pos];
    if (m.root_neg == m.root_pos) add("root", "root faces coincide");
    if (bn.front() != m.root_pos)
        add("root", "B(" + m.names[m.root_neg] + ") does not begin with " + m.names[m.root_pos]);
    if (bp.front() != m.root_neg)
        add("root", "B(" + m.names[m.root_pos] + ") does not begin with " + m.names[m.root_neg]);
    if (bn.front() == m.root_pos && bp.front() == m.root_neg &&
        (bn[1] != bp.back() || bn.back() != bp[1]))
        add("root", "the two root bordures do not start on the same edge");

    // Every vertex (c,a,b) seen from c must be seen as (a,b,c) from a and
    // (b,c,a) from b, with the same multiplicity.
    std::map<std::tuple<int, int, int>, int> corners;
    for (int c = 0; c < F; ++c) {
        auto ext = m.extended(c);
        for (size_t i = 0; i + 1 < ext.size(); ++i) ++corners[{c, ext[i], ext[i + 1]}];
    }
    for (auto& [key, count] : corners) {
        auto [c, a, b] = key;
        auto seen_from = [&](int x, int y, int z) {
            auto it = corners.find({x, y, z});
            return it == corners.end() ? 0 : it->second;
        };
        const int at_a = seen_from(a, b, c), at_b = seen_from(b, c, a);
        if (at_a != count || at_b != count) {
            add("reciprocity", "pair (" + m.names[a] + "," + m.names[b] + ") in B(" + m.names[c] +
                                   ") occurs " + std::to_string(count) + "x but (" + m.names[b] + "," +
                                   m.names[c] + ") in B(" + m.names[a] + ") " + std::to_string(at_a) +
                                   "x and (" + m.names[c] + "," + m.names[a] + ") in B(" + m.names[b] +
                                   ") " + std::to_string(at_b) + "x");
        }
    }

    const auto& k = r.counts;
    if (k.sum % 6 != 0) {
        add("euler", "sum of bordure lengths " + std::to_string(k.sum) + " is not divisible by 6");
    } else if (k.faces - k.edges + k.vertices != 2) {
        add("euler", "F - E + V = " + std::to_string(k.faces - k.edges + k.vertices) + ", expected 2");
    }

    auto adj = adjacency(m);
    std::vector<bool> vis(F, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int n : adj[f])
            if (!vis[n]) {
                vis[n] = true;
                ++reached;
                q.push(n);
            }
    }
    if (reached != F) add("connected", "face graph is not connected");
    return r;
}

std::vector<std::string> extended_bordure(const RootedMap& m, const std::string& face) {
    std::vector<std::string> out;
    for (int f : m.extended(m.at(face))) out.push_back(m.names[f]);
    return out;
}

bool are_equivalent(const RootedMap& a, const RootedMap& b) {
    const int F = a.face_count();
    if (F != b.face_count()) return false;
    std::vector<int> phi(F, -1), inv(F, -1), rot(F, -1);

    std::function<bool()> solve = [&]() -> bool {
        int e = -1;
        for (int f = 0; f < F; ++f)
            if (phi[f] >= 0 && rot[f] < 0) {
                e = f;
                break;
            }
        if (e < 0) {
            for (int f = 0; f < F; ++f)
                if (phi[f] < 0) return false;
            return true;
        }
        const auto& be = a.bordure[e];
        const auto& bf = b.bordure[phi[e]];
        if (be.size() != bf.size()) return false;
        const int L = static_cast<int>(be.size());
        const bool pinned = e == a.root_neg || e == a.root_pos;
        for (int r = 0; r < (pinned ? 1 : L); ++r) {
            std::vector<int> assigned;
            bool good = true;
            for (int i = 0; i < L && good; ++i) {
                int x = be[i], y = bf[(i + r) % L];
                if (phi[x] >= 0) {
                    good = phi[x] == y;
                } else if (inv[y] >= 0) {
                    good = false;
                } else {
                    phi[x] = y;
                    inv[y] = x;
                    assigned.push_back(x);
                }
            }
            if (good) {
                rot[e] = r;
                if (solve()) return true;
                rot[e] = -1;
            }
            for (int x : assigned) {
                inv[phi[x]] = -1;
                phi[x] = -1;
            }
        }
        return false;
    };

    phi[a.root_neg] = b.root_neg;
    inv[b.root_neg] = a.root_neg;
    if (a.root_pos == a.root_neg || b.root_pos == b.root_neg) return false;
    phi[a.root_pos] = b.root_pos;
    inv[b.root_pos] = a.root_pos;
    return solve();
}

RootedMap relabel(const RootedMap& m, const std::vector<int>& perm,
                  const std::vector<std::string>& new_names, const std::vector<int>& rot) {
    const int F = m.face_count();
    RootedMap out;
    out.names = new_names;
    out.bordure.assign(F, {});
    for (int f = 0; f < F; ++f) {
        const auto& b = m.bordure[f];
        const int L = static_cast<int>(b.size());
        const bool pinned = f == m.root_neg || f == m.root_pos;
        const int r = pinned || L == 0 ? 0 : ((rot[f] % L) + L) % L;
        std::vector<int> nb(L);
        for (int i = 0; i < L; ++i) nb[i] = perm[b[(i + r) % L]];
        out.bordure[perm[f]] = std::move(nb);
    }
    out.root_neg = perm[m.root_neg];
    out.root_pos = perm[m.root_pos];
    return out;
}

}  // namespace jasso
