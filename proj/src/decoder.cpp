#include "jasso/decoder.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace jasso {

namespace {

int floordiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::string pt(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

bool is_ancestor(const WordAnalysis& a, int anc, int g) {
    for (int x = a.phi[g]; x; x = a.phi[x])
        if (x == anc) return true;
    return false;
}

const Curve& curve_of(const std::vector<Curve>& curves, int owner) {
    for (auto& c : curves)
        if (c.owner == owner) return c;
    throw DecodeError("no curve for " + std::to_string(owner));
}

// First lower horizontal of c strictly below (x, y0).
Point project_lower(const Curve& c, int x, int y0) {
    std::optional<int> best;
    for (auto& h : c.lower)
        if (h.covers(x) && h.y > y0 && (!best || h.y < *best)) best = h.y;
    if (!best) throw DecodeError("column " + std::to_string(x) + " misses the lower side of curve " +
                                 std::to_string(c.owner));
    return {x, *best};
}

// The curve enclosing a natural row (Z, n): drawn for the opener of (Z, 1)
// that is an ancestor of g.
int enclosing_owner(const WordAnalysis& a, int g) {
    const Stratino unit = a.sigma[g].parent().with(1);
    for (int c : a.row(unit))
        if (a.is_opener(c) && is_ancestor(a, c, g)) return c;
    throw DecodeError("no enclosing curve for " + std::to_string(g));
}

using Edge = std::pair<Point, Point>;  // unit edge, first < second

void add_polyline(std::set<Edge>& edges, const Polyline& l) {
    const size_t n = l.pts.size();
    const size_t m = l.closed ? n : n - 1;
    for (size_t i = 0; i < m; ++i) {
        Point p = l.pts[i], q = l.pts[(i + 1) % n];
        if (p.x != q.x && p.y != q.y)
            throw DecodeError(l.kind + " " + std::to_string(l.owner) + " has a slanted piece " + pt(p) + pt(q));
        const int dx = (q.x > p.x) - (q.x < p.x), dy = (q.y > p.y) - (q.y < p.y);
        for (Point c = p; c != q;) {
            Point d{c.x + dx, c.y + dy};
            edges.insert(std::minmax(c, d));
            c = d;
        }
    }
}

}  // namespace

Ladder build_ladder(const WordAnalysis& a) {
    Ladder l;
    // The blank row of (Z, 1) follows the last row strictly below Z, so the
    // whole family (Z, 1..a_k) with its descendants sits above it.
    auto extends = [](const Stratino& z, const Stratino& y) {
        return y.size() > z.size() && std::equal(z.terms().begin(), z.terms().end(), y.terms().begin(),
                                                 [](auto& p, auto& q) { return p.key() == q.key(); });
    };
    std::map<Stratino, std::vector<Stratino>> closes;  // last row -> unitary rows, innermost first
    for (auto& [x, row] : a.Sigma) {
        if (x.empty() || !x.is_unitary()) continue;
        const Stratino z = x.parent();
        int ak = 1;
        while (a.Sigma.count(z.with(ak + 1))) ++ak;
        l.extent[x] = ak;
        Stratino last = x;
        for (auto& [y, r] : a.Sigma)
            if (extends(z, y)) last = y;
        closes[last].push_back(x);
    }
    for (auto& [x, row] : a.Sigma) {
        l.row_of[x] = static_cast<int>(l.rows.size());
        l.rows.push_back({x, false});
        if (auto it = closes.find(x); it != closes.end()) {
            auto& us = it->second;
            std::sort(us.begin(), us.end(), [](auto& p, auto& q) { return p.size() > q.size(); });
            for (auto& u : us) {
                l.blank_of[u] = static_cast<int>(l.rows.size());
                l.rows.push_back({u, true});
            }
        }
    }
    return l;
}

Table build_table(const WordAnalysis& a, const Ladder& l) {
    Table t;
    for (int g = 1; g <= a.eta; ++g) {
        const Token& tk = a.at(g);
        if (tk.is_close()) {
            if (!(tk.is(Binome::ZC) || tk.is(Binome::MR) || tk.is(Binome::TG))) continue;
            t.row_of[g] = l.row_of.at(a.sigma[a.pairs[a.pair_at[g]].first]);
        } else {
            t.row_of[g] = l.row_of.at(a.sigma[g]);
        }
        t.col_of[g] = static_cast<int>(t.columns.size());
        t.columns.push_back(g);
    }
    return t;
}

std::vector<Curve> build_curves(const WordAnalysis& a, const Ladder& l, const Table& t) {
    std::vector<Curve> out;
    {
        const int al = 2, be = a.eta - 1;
        const int by = l.blank_of.at(a.sigma[al]);
        Point A1 = t.A(al), A2 = t.A(be);
        Curve c;
        c.owner = al;
        c.line = {"curve", al, {A1, {A1.x, by}, {A2.x, by}, A2}, true};
        c.upper = {A1.y, A1.x, A2.x};
        c.lower = {{by, A1.x, A2.x}};
        out.push_back(std::move(c));
    }
    for (int al : a.zouc) {
        const Stratino& unit = a.sigma[al];
        const int by = l.blank_of.at(unit);
        int right;
        if (a.at(al).opens(Binome::TG)) {
            right = a.pairs[a.pair_at[al]].second;
        } else {
            const Seq row = a.row(unit);
            auto it = std::find(row.begin(), row.end(), al);
            if (it + 1 == row.end() || !a.at(*(it + 1)).is(Mono::CU))
                throw DecodeError("tc opener " + std::to_string(al) + " is not followed by cu in its row");
            right = *(it + 1);
        }
        const Seq& f = a.fan.at(al);
        if (f.empty()) throw DecodeError("zouc " + std::to_string(al) + " has an empty fan");
        Point Aa = t.A(al), Ar = t.A(right), Ab = t.A(f.front()), Ac = t.A(f.back());
        Curve c;
        c.owner = al;
        c.line = {"curve", al, {Aa, {Aa.x, by}, {Ab.x, by}, Ab, Ac, {Ac.x, by}, {Ar.x, by}, Ar}, true};
        c.upper = {Aa.y, Aa.x, Ar.x};
        c.lower = {{by, Aa.x, Ab.x}, {Ab.y, Ab.x, Ac.x}, {by, Ac.x, Ar.x}};
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<StratajoSegment> build_segments(const WordAnalysis& a, const Table& t,
                                            const std::vector<Curve>& curves) {
    std::vector<StratajoSegment> out;
    for (const Seq& s : a.stratajos) {
        StratajoSegment seg;
        seg.items = s;
        seg.enclosing = enclosing_owner(a, s.front());
        const Curve& c = curve_of(curves, seg.enclosing);
        Point Af = t.A(s.front()), Al = t.A(s.back());
        Point Bf = project_lower(c, Af.x, Af.y), Bl = project_lower(c, Al.x, Al.y);
        seg.line = {"segment", s.front(), {Bf, Af, Al, Bl}, false};
        seg.top = {Af.y, Af.x, Al.x};
        out.push_back(std::move(seg));
    }
    return out;
}

std::vector<Transversal> build_transversals(const WordAnalysis& a, const Ladder& l, const Table& t,
                                            const std::vector<Curve>& curves,
                                            const std::vector<StratajoSegment>& segs) {
    std::vector<Transversal> out;
    for (size_t si = 0; si < segs.size(); ++si) {
        const auto& seg = segs[si];
        Seq openers;
        for (int g : seg.items)
            if (a.A.count(g)) openers.push_back(g);
        const Stratino xt = a.sigma[seg.items.front()];
        for (size_t i = 1; i < openers.size(); ++i) {
            const int prev = openers[i - 1], cur = openers[i];
            Transversal tr;
            tr.stratajo = static_cast<int>(si);
            tr.index = static_cast<int>(i);
            tr.opener = cur;
            Point start = t.A(cur);
            std::vector<Point> pts{start};
            const auto& dg = a.op.at(prev).DeltaG;
            if (!a.op.at(prev).G.empty()) {
                if (dg.empty()) throw DecodeError("empty fan below " + std::to_string(prev));
                auto it = l.row_of.find(xt.shifted());
                if (it == l.row_of.end()) throw DecodeError("row (" + xt.shifted().str() + ") missing");
                const Point Ab = t.A(dg.front());
                if (Ab.y != it->second) throw DecodeError("fan of G(" + std::to_string(prev) + ") off its row");
                pts.push_back({start.x, it->second});
                pts.push_back(Ab);
                start = Ab;
                tr.through_shifted = true;
            }

            // First horizontal of a curve or stratajo segment below the start.
            std::optional<int> hit_y;
            int hit_kind = 0, hit_owner = 0;
            auto consider = [&](const HSeg& h, int kind, int owner) {
                if (h.covers(start.x) && h.y > start.y && (!hit_y || h.y < *hit_y)) {
                    hit_y = h.y;
                    hit_kind = kind;
                    hit_owner = owner;
                }
            };
            for (auto& c : curves) {
                consider(c.upper, 2, c.owner);
                for (auto& h : c.lower) consider(h, c.owner == seg.enclosing ? 1 : 4, c.owner);
            }
            for (auto& s : segs) consider(s.top, 3, s.items.front());
            if (!hit_y) throw DecodeError("transversal for " + std::to_string(cur) + " hits nothing");

            const Seq& rg = a.op.at(cur).Rg;
            const int expected = rg.empty() ? 1 : a.at(rg.front()).is(Mono::CU) ? 2 : 3;
            bool agrees = hit_kind == expected;
            if (expected == 2) agrees = agrees && a.sigma[hit_owner] == xt.shifted().with(1);
            if (expected == 3) agrees = agrees && a.sigma[hit_owner] == xt.parent().with(xt.back().value + 1);
            if (!agrees)
                throw DecodeError("transversal for " + std::to_string(cur) + " expected case " +
                                  std::to_string(expected) + " but met piece " + std::to_string(hit_owner));
            tr.drop_case = expected;
            pts.push_back({start.x, *hit_y});
            tr.line = {"transversal", cur, std::move(pts), false};
            out.push_back(std::move(tr));
        }
    }
    return out;
}

GeometricMap decode(const WordAnalysis& a) {
    if (a.rule_reached < 4) throw DecodeError("word is not valid");
    GeometricMap g;
    g.ladder = build_ladder(a);
    g.table = build_table(a, g.ladder);
    g.curves = build_curves(a, g.ladder, g.table);
    g.segments = build_segments(a, g.table, g.curves);
    g.transversals = build_transversals(a, g.ladder, g.table, g.curves, g.segments);
    g.width = static_cast<int>(g.table.columns.size());
    g.height = static_cast<int>(g.ladder.rows.size());

    {
        const Curve& root = g.curves.front();
        const Seq s2 = a.row(Stratino{}.with(2));
        if (s2.empty()) throw DecodeError("row (2) is empty");
        const int by = root.lower.front().y;
        const Point Aa = g.table.A(2), Ab = g.table.A(a.eta - 1);
        g.lambda = {"lambda", 2,
                    {{g.table.A(s2.back()).x, by}, {Ab.x, by}, Ab, Aa, {Aa.x, by}, {g.table.A(s2.front()).x, by}},
                    false};
    }

    std::set<Edge> edges;
    for (auto& c : g.curves) add_polyline(edges, c.line);
    for (auto& s : g.segments) add_polyline(edges, s.line);
    for (auto& t : g.transversals) add_polyline(edges, t.line);

    std::map<Point, int> degree;
    for (auto& [p, q] : edges) ++degree[p], ++degree[q];
    for (auto& [p, d] : degree)
        if (d != 2 && d != 3)
            throw DecodeError("point " + pt(p) + " has degree " + std::to_string(d));
    auto has_edge = [&](Point p, Point q) { return edges.count(std::minmax(p, q)) != 0; };

    // Cells from (-1,-1) to (width, height); flood fill.
    const int W = g.width + 2, H = g.height + 2;
    std::vector<int> comp(W * H, -1);
    auto idx = [&](int cx, int cy) { return (cy + 1) * W + (cx + 1); };
    int ncomp = 0;
    for (int cy = -1; cy <= g.height; ++cy)
        for (int cx = -1; cx <= g.width; ++cx) {
            if (comp[idx(cx, cy)] >= 0) continue;
            std::vector<std::pair<int, int>> stack{{cx, cy}};
            comp[idx(cx, cy)] = ncomp;
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                const std::array<std::array<int, 2>, 4> nb{{{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}}};
                for (auto [nx, ny] : nb) {
                    if (nx < -1 || ny < -1 || nx > g.width || ny > g.height) continue;
                    if (comp[idx(nx, ny)] >= 0) continue;
                    bool wall;
                    if (ny == y) {
                        const int ex = std::max(x, nx);
                        wall = has_edge({ex, y}, {ex, y + 1});
                    } else {
                        const int ey = std::max(y, ny);
                        wall = has_edge({x, ey}, {x + 1, ey});
                    }
                    if (wall) continue;
                    comp[idx(nx, ny)] = ncomp;
                    stack.push_back({nx, ny});
                }
            }
            ++ncomp;
        }

    const int F = static_cast<int>(a.pairs.size());
    std::vector<int> face_of_comp(ncomp, -1);
    for (int p = 0; p < F; ++p) {
        const int al = a.pairs[p].first;
        const Point c = g.table.A(al);
        int& slot = face_of_comp[comp[idx(c.x, c.y)]];
        if (slot >= 0)
            throw DecodeError("openers " + std::to_string(a.pairs[slot].first) + " and " + std::to_string(al) +
                              " share a region");
        slot = p;
    }
    if (ncomp != F)
        throw DecodeError(std::to_string(ncomp) + " regions for " + std::to_string(F) + " pairs");
    for (int p = 0; p < F; ++p) g.opener_cell.push_back(g.table.A(a.pairs[p].first));
    auto face_at = [&](int cx, int cy) {
        if (cx < -1 || cy < -1 || cx > g.width || cy > g.height) return 0;
        return face_of_comp[comp[idx(cx, cy)]];
    };
    for (int cy = -1; cy <= g.height; ++cy)
        for (int cx = -1; cx <= g.width; ++cx) g.region[{cx, cy}] = face_at(cx, cy);

    // Directed unit edges with the face on their left (y grows downward).
    struct Dir {
        Point p;
        int dx, dy;
    };
    auto left_face = [&](const Dir& d) {
        return face_at(floordiv(2 * d.p.x + d.dx + d.dy, 2), floordiv(2 * d.p.y + d.dy - d.dx, 2));
    };
    auto right_face = [&](const Dir& d) {
        return face_at(floordiv(2 * d.p.x + d.dx - d.dy, 2), floordiv(2 * d.p.y + d.dy + d.dx, 2));
    };
    std::vector<std::vector<Dir>> by_face(F);
    for (auto& [p, q] : edges) {
        Dir d1{p, q.x - p.x, q.y - p.y}, d2{q, p.x - q.x, p.y - q.y};
        by_face[left_face(d1)].push_back(d1);
        by_face[left_face(d2)].push_back(d2);
    }

    const Point a2 = g.table.A(2);
    const Dir lam_neg{a2, 1, 0}, lam_pos{{a2.x + 1, a2.y}, -1, 0};

    g.map.root_neg = 0;
    g.map.root_pos = 1;
    g.map.bordure.assign(F, {});
    for (int p = 0; p < F; ++p) g.map.names.push_back("w" + std::to_string(p));

    for (int f = 0; f < F; ++f) {
        const auto& mine = by_face[f];
        if (mine.empty()) throw DecodeError("face w" + std::to_string(f) + " has no boundary");
        std::vector<Dir> walk{mine.front()};
        for (;;) {
            const Dir& d = walk.back();
            const Point q{d.p.x + d.dx, d.p.y + d.dy};
            const std::array<std::array<int, 2>, 3> turns{{{d.dy, -d.dx}, {d.dx, d.dy}, {-d.dy, d.dx}}};
            std::optional<Dir> next;
            for (auto [tx, ty] : turns)
                if (has_edge(q, {q.x + tx, q.y + ty})) {
                    next = Dir{q, tx, ty};
                    break;
                }
            if (!next) throw DecodeError("dead end at " + pt(q));
            if (next->p == walk.front().p && next->dx == walk.front().dx && next->dy == walk.front().dy) break;
            walk.push_back(*next);
            if (walk.size() > mine.size()) throw DecodeError("boundary walk of w" + std::to_string(f) + " loops");
        }
        if (walk.size() != mine.size())
            throw DecodeError("face w" + std::to_string(f) + " has a disconnected boundary");

        // Split at junctions into map edges.
        std::vector<size_t> starts;
        for (size_t i = 0; i < walk.size(); ++i)
            if (degree[walk[i].p] == 3) starts.push_back(i);
        if (starts.empty()) throw DecodeError("face w" + std::to_string(f) + " has no vertex");
        auto edge_containing = [&](const Dir& d) -> std::optional<size_t> {
            for (size_t i = 0; i < walk.size(); ++i)
                if (walk[i].p == d.p && walk[i].dx == d.dx && walk[i].dy == d.dy) {
                    size_t k = 0;
                    for (size_t j = 0; j < starts.size(); ++j)
                        if (starts[j] <= i) k = j;
                    if (starts.front() > i) k = starts.size() - 1;
                    return k;
                }
            return std::nullopt;
        };
        size_t first = 0;
        if (f == 0 || f == 1) {
            auto k = edge_containing(f == 0 ? lam_neg : lam_pos);
            if (!k) throw DecodeError("root edge is not on the boundary of w" + std::to_string(f));
            first = *k;
        } else {
            for (size_t j = 1; j < starts.size(); ++j) {
                const Point a1 = walk[starts[j]].p, b1 = walk[starts[first]].p;
                if (std::pair(a1.y, a1.x) < std::pair(b1.y, b1.x)) first = j;
            }
        }
        for (size_t j = 0; j < starts.size(); ++j)
            g.map.bordure[f].push_back(right_face(walk[starts[(first + j) % starts.size()]]));
    }

    auto rep = validate_map(g.map);
    if (!rep.ok())
        throw DecodeError("extracted map is invalid: " + rep.violations.front().rule + ": " +
                          rep.violations.front().detail);
    return g;
}

std::string geometry_dump(const GeometricMap& g) {
    std::ostringstream out;
    for (size_t r = 0; r < g.ladder.rows.size(); ++r) {
        const auto& row = g.ladder.rows[r];
        out << "row " << r << ' ' << (row.blank ? "blank(" + row.x.str() + ")" : "(" + row.x.str() + ")") << '\n';
    }
    out << "columns";
    for (int c : g.table.columns) out << ' ' << c;
    out << '\n';
    auto line = [&](const Polyline& l) {
        out << l.kind << ' ' << l.owner << (l.closed ? " closed" : "");
        for (auto& p : l.pts) out << ' ' << pt(p);
        out << '\n';
    };
    for (auto& c : g.curves) line(c.line);
    for (auto& s : g.segments) line(s.line);
    for (auto& t : g.transversals) line(t.line);
    line(g.lambda);
    return out.str();
}

std::string render_svg(const GeometricMap& g, const std::vector<int>* colors) {
    const int u = 24, m = 2;
    static const char* palette[] = {"#f4d35e", "#9bc1bc", "#ed6a5a", "#5ca4a9"};
    std::ostringstream out;
    const int w = (g.width + 2 * m) * u, h = (g.height + 2 * m) * u;
    auto X = [&](int x) { return (x + m) * u; };
    auto Y = [&](int y) { return (y + m) * u; };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (colors) {
        for (auto& [cell, f] : g.region) {
            if (f == 0 || f >= static_cast<int>(colors->size())) continue;
            out << "<rect x=\"" << X(cell.first) << "\" y=\"" << Y(cell.second) << "\" width=\"" << u
                << "\" height=\"" << u << "\" fill=\"" << palette[(*colors)[f] & 3] << "\"/>\n";
        }
    }
    auto poly = [&](const Polyline& l, const char* stroke, int width) {
        out << "<" << (l.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"" << width << "\" points=\"";
        for (auto& p : l.pts) out << X(p.x) << ',' << Y(p.y) << ' ';
        out << "\"/>\n";
    };
    for (auto& c : g.curves) poly(c.line, "black", 2);
    for (auto& s : g.segments) poly(s.line, "black", 2);
    for (auto& t : g.transversals) poly(t.line, "black", 2);
    poly(g.lambda, "red", 3);
    for (size_t p = 0; p < g.opener_cell.size(); ++p) {
        const Point c = g.opener_cell[p];
        out << "<text x=\"" << X(c.x) + 4 << "\" y=\"" << Y(c.y) + 16
            << "\" font-size=\"11\" font-family=\"monospace\">w" << p << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace jasso
