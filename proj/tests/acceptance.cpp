// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "jasso/decoder.hpp"
#include "jasso/encoder.hpp"
#include "jasso/enumerate.hpp"
#include "jasso/rules.hpp"
#include "jasso/tree.hpp"
#include "support.hpp"

using namespace jasso;
using namespace jasso::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed checks for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::string note;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) failures.push_back(what);
    }
};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

std::set<std::string> name_set(const RootedMap& m, const std::vector<int>& faces) {
    auto v = names_of(m, faces);
    return {v.begin(), v.end()};
}

// ---- corpora ----

struct Corpus {
    std::vector<RootedMap> maps;  // every map used by criteria 4, 5, 7, 8
    std::vector<std::string> labels;
};

RootedMap scrambled(const RootedMap& m, int seed) {
    const int n = m.face_count();
    std::vector<int> perm(n), rot(n);
    std::vector<std::string> names(n);
    for (int f = 0; f < n; ++f) perm[f] = f;
    for (int f = n - 1; f > 0; --f) std::swap(perm[f], perm[(f * 5 + seed) % (f + 1)]);
    for (int f = 0; f < n; ++f) {
        names[f] = "r" + std::to_string(seed) + "_" + std::to_string(f);
        rot[f] = (f + seed) % 4;
    }
    return relabel(m, perm, names, rot);
}

// Base maps with at most 8 faces plus relabeled and re-anchored variants.
Corpus small_corpus() {
    Corpus c;
    auto add = [&](const RootedMap& m, const std::string& label) {
        c.maps.push_back(m);
        c.labels.push_back(label);
    };
    add(theta(), "theta");
    const int take[] = {0, 0, 0, 0, 4, 8, 4, 2, 2};  // by face count
    std::vector<RootedMap> base = {theta()};
    for (int f = 4; f <= 8; ++f) {
        auto all = generate_maps(f);
        for (int i = 0; i < take[f] && i < static_cast<int>(all.size()); ++i) {
            int idx = static_cast<int>((static_cast<long long>(i) * 7919) % all.size());
            add(all[idx], "F" + std::to_string(f) + "#" + std::to_string(idx));
            base.push_back(all[idx]);
        }
    }
    for (size_t i = 0; i < base.size(); i += 2)
        add(scrambled(base[i], static_cast<int>(i) + 1), c.labels[i] + "/relabeled");
    return c;
}

// ---- criterion 1 ----

Check criterion1() {
    Check c;
    auto t0 = Clock::now();
    RootedMap m = figure1();
    Encoding e = encode(m);
    c.note = std::to_string(seconds_since(t0)) + " s";
    c.expect(seconds_since(t0) < 1.0, "runtime >= 1 s");

    c.equal(e.layers.jasses.size(), 3u, "three jasses");
    if (e.layers.jasses.size() == 3) {
        c.equal(name_set(m, e.layers.jasses[0]), std::set<std::string>{"a"}, "j0");
        c.equal(name_set(m, e.layers.jasses[1]), std::set<std::string>{"b", "c", "f", "g", "j"}, "j1");
        c.equal(name_set(m, e.layers.jasses[2]), std::set<std::string>{"d", "e", "h", "i", "k"}, "j2");
    }

    struct RovWant {
        std::string zouc, baou, caouly, fan;
    };
    std::vector<RovWant> want = {{"k", "c g", "g c", ""}, {"d", "b c", "f b", "g f"}, {"i", "g j", "j f", ""}};
    for (auto& w : want) {
        bool found = false;
        for (auto& v : e.layers.rovs) {
            if (v.zouc < 0 || m.names[v.zouc] != w.zouc) continue;
            found = true;
            c.equal(join(names_of(m, {v.baou.first, v.baou.second})), w.baou, "baou of " + w.zouc);
            c.equal(join(names_of(m, {v.caouly.first, v.caouly.second})), w.caouly, "caouly of " + w.zouc);
            c.equal(join(names_of(m, v.fan)), w.fan, "fan of " + w.zouc);
        }
        c.expect(found, "rovejasse with zouc " + w.zouc);
    }

    std::map<std::string, std::string> rows;
    for (auto& [x, items] : e.table.sigma) rows[x.str()] = format_items(m, items);
    std::map<std::string, std::string> want_rows = {
        {"", "(a)"},         {"1", "(b)"},   {"1#,1", "(d,cu)"}, {"1#,2", "(e,ch)"}, {"2", "(c,g,f,ch)"},
        {"2,1", "(k)"},      {"2#", "(ba,ca)"}, {"2#,1", "(i,cu)"}, {"2#,2", "(h,ch)"}, {"3", "(j,ch)"},
    };
    c.equal(rows, want_rows, "sigma rows");

    std::map<int, std::set<std::string>> classes;
    for (int f = 0; f < m.face_count(); ++f) classes[e.color[f]].insert(m.names[f]);
    std::map<int, std::set<std::string>> want_classes = {
        {0, {"a", "d", "k", "i"}}, {1, {"b", "j"}}, {2, {"e", "h"}}, {3, {"c", "g", "f"}}};
    c.equal(classes, want_classes, "coloring classes");

    c.equal(join(names_of(m, e.visit)), std::string("a b c k d g j i h e f"), "visit order");
    c.equal(e.word.size(), 34u, "34 tokens");
    c.equal(e.word, figure1_word(), "word");
    std::vector<int> openers;
    for (size_t i = 0; i < e.word.size(); ++i)
        if (e.word[i].is_open()) openers.push_back(static_cast<int>(i) + 1);
    c.equal(openers, std::vector<int>{1, 2, 3, 4, 9, 11, 12, 14, 15, 22, 23}, "opener positions");

    WordReport r = validate_word(e.word);
    std::map<int, int> beta;
    for (auto& [a, b] : r.analysis.pairs) beta[a] = b;
    std::map<int, int> want_beta = {{1, 34}, {2, 33}, {3, 8}, {4, 7}, {9, 30}, {11, 21}, {12, 13}};
    for (auto [a, b] : want_beta) c.equal(beta[a], b, "beta at opener " + std::to_string(a));
    return c;
}

// ---- criterion 2 ----

Check criterion2() {
    Check c;
    WordReport r = validate_word(figure1_word());
    c.expect(r.ok(), "word validates");
    c.expect(r.inconsistencies.empty(), "no derived-row inconsistencies");
    auto& a = r.analysis;
    c.equal(a.E, Seq{1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 14, 15, 16, 18, 19, 22, 23, 24, 25, 27, 29, 31, 32}, "E(M)");

    std::map<int, std::string> want_sigma = {
        {1, ""},      {2, "1"},     {3, "2"},     {4, "2,1"},   {5, "2#"},    {6, "2#"},    {9, "1#,1"},
        {10, "2"},    {11, "2"},    {12, "3"},    {14, "2#,1"}, {15, "2#,2"}, {16, "3"},    {18, "2#,2"},
        {19, "3"},    {22, "1#,2"}, {23, "2"},    {24, "2#,1"}, {25, "3"},    {27, "2"},    {29, "1#,2"},
        {31, "1#,1"}, {32, "2"}};
    for (auto& [pos, s] : want_sigma)
        c.equal(a.sigma.size() > static_cast<size_t>(pos) ? a.sigma[pos].str() : std::string("?"), s,
                "sigma(" + std::to_string(pos) + ")");

    std::map<std::string, Seq> rows;
    for (auto& [x, s] : a.Sigma) rows[x.str()] = s;
    std::map<std::string, Seq> want_rows = {
        {"", {1}},           {"1", {2}},       {"1#,1", {9, 31}},   {"1#,2", {22, 29}}, {"2", {3, 10, 11, 23, 27, 32}},
        {"2,1", {4}},        {"2#", {5, 6}},   {"2#,1", {14, 24}},  {"2#,2", {15, 18}}, {"3", {12, 16, 19, 25}},
    };
    c.equal(rows, want_rows, "Sigma rows");
    c.equal(a.Cg, std::set<int>{2, 3, 4, 9, 12, 14, 15, 22}, "Cg");
    c.equal(a.Cd, std::set<int>{2, 4, 9, 12, 14, 15, 22, 23}, "Cd");
    c.expect(a.fan.count(9) && a.fan.at(9) == Seq{10, 11, 23, 27}, "fan(9)");
    c.equal(a.zm, std::set<int>{14}, "Zm");
    std::set<Seq> strat(a.stratajos.begin(), a.stratajos.end());
    c.equal(strat, std::set<Seq>{{3, 10, 11, 23, 27, 32}, {12, 16, 19, 25}, {22, 29}, {15, 18}}, "stratajos");
    return c;
}

// ---- criterion 3 ----

Check criterion3() {
    Check c;
    WordReport r = validate_word(figure1_word());
    if (!r.ok()) {
        c.expect(false, "word validates");
        return c;
    }
    GeometricMap g = decode(r.analysis);
    std::vector<std::string> rows;
    for (auto& row : g.ladder.rows) rows.push_back(row.blank ? "'" : "(" + row.x.str() + ")");
    c.equal(join(rows), std::string("() (1) (1#,1) (1#,2) ' (2) (2,1) ' (2#) (2#,1) (2#,2) ' (3) '"), "ladder");

    auto col = [&](int pos) { return g.table.col_of.at(pos); };
    auto xs = [](const Polyline& l) {
        std::set<int> s;
        for (auto& p : l.pts) s.insert(p.x);
        return s;
    };
    std::map<int, std::set<int>> curves;
    for (auto& cv : g.curves) curves[cv.owner] = xs(cv.line);
    std::map<int, std::set<int>> want_curves = {{2, {col(2), col(33)}},
                                                {4, {col(4), col(5), col(6), col(7)}},
                                                {9, {col(9), col(10), col(27), col(31)}},
                                                {14, {col(14), col(16), col(19), col(24)}}};
    c.equal(curves, want_curves, "curves C2 C4 C9 C14");
    for (auto& cv : g.curves) c.expect(cv.line.closed, "curve closed");

    std::map<Seq, std::pair<int, std::set<int>>> segs;
    for (auto& s : g.segments) segs[s.items] = {s.enclosing, xs(s.line)};
    std::map<Seq, std::pair<int, std::set<int>>> want_segs = {
        {{3, 10, 11, 23, 27, 32}, {2, {col(3), col(32)}}},
        {{12, 16, 19, 25}, {2, {col(12), col(25)}}},
        {{22, 29}, {9, {col(22), col(29)}}},
        {{15, 18}, {14, {col(15), col(18)}}}};
    c.equal(segs, want_segs, "segments R(S1..S4)");

    c.equal(g.transversals.size(), 2u, "two transversals");
    if (g.transversals.size() == 2) {
        auto& t1 = g.transversals[0];
        auto& t2 = g.transversals[1];
        c.expect(t1.opener == 11 && t1.index == 1 && t1.drop_case == 1, "phi_1 from 11, first case");
        c.equal(xs(t1.line), std::set<int>{col(11), col(5)}, "phi_1 reaches A5");
        c.expect(t2.opener == 23 && t2.index == 2 && t2.drop_case == 2, "phi_2 from 23, second case");
        c.equal(xs(t2.line), std::set<int>{col(23)}, "phi_2 vertical");
    }

    const std::vector<std::string> rename = {"a", "b", "c", "k", "d", "g", "j", "i", "h", "e", "f"};
    const std::map<std::string, std::vector<std::string>> want_bordures = {
        {"a", {"b", "f", "j", "g", "c"}},    {"b", {"a", "c", "d", "e", "f"}},
        {"c", {"a", "g", "k", "g", "d", "b"}}, {"d", {"c", "g", "e", "b"}},
        {"e", {"g", "f", "b", "d"}},         {"f", {"a", "b", "e", "g", "i", "j"}},
        {"g", {"c", "a", "j", "h", "i", "f", "e", "d", "c", "k"}},
        {"h", {"g", "j", "i"}},              {"i", {"f", "g", "h", "j"}},
        {"j", {"i", "h", "g", "a", "f"}},    {"k", {"c", "g"}}};
    c.equal(g.map.face_count(), 11, "11 faces");
    if (g.map.face_count() == 11) {
        // Root bordures exactly; the others up to the choice of reference vertex.
        for (int p = 0; p < 11; ++p) {
            std::vector<std::string> got;
            for (int f : g.map.bordure[p]) got.push_back(rename[f]);
            const auto& want = want_bordures.at(rename[p]);
            c.expect(p < 2 ? got == want : same_cycle(got, want), "bordure of " + rename[p]);
        }
        c.expect(g.map.root_neg == 0 && g.map.root_pos == 1, "root w0 -> w1");
    }
    return c;
}

// ---- criterion 4 ----

Check criterion4(const Corpus& corpus) {
    Check c;
    auto t0 = Clock::now();
    auto word_identity = [&](const Word& w, const std::string& label) {
        WordReport r = validate_word(w);
        if (!r.ok()) {
            c.expect(false, label + " invalid");
            return;
        }
        try {
            c.equal(encode(decode(r.analysis).map).word, w, label + " token identity");
        } catch (const std::exception& e) {
            c.expect(false, label + ": " + e.what());
        }
    };
    word_identity(figure1_word(), "eleven-face example word");
    word_identity(encode(theta()).word, "theta word");
    int enumerated = 0;
    for (int n = 1; n <= 6; ++n)
        for (auto& w : enumerate_words(n)) {
            word_identity(w, "enumerated " + format_word(w));
            ++enumerated;
        }
    c.expect(enumerated >= 100, "at least 100 enumerated words");

    std::vector<RootedMap> maps = corpus.maps;
    maps.push_back(figure1());
    for (int f = 3; f <= 6; ++f)
        for (auto& m : generate_maps(f)) maps.push_back(m);
    for (auto& m : maps) {
        try {
            Encoding e = encode(m);
            WordReport r = validate_word(e.word);
            c.expect(r.ok() && are_equivalent(m, decode(r.analysis).map), "map round trip " + format_word(e.word));
        } catch (const std::exception& e) {
            c.expect(false, std::string("map round trip: ") + e.what());
        }
    }
    double secs = seconds_since(t0);
    c.expect(secs < 60.0, "runtime >= 60 s");
    std::ostringstream note;
    note << "2 fixed words, " << enumerated << " enumerated words, " << maps.size() << " maps, " << secs << " s";
    c.note = note.str();
    return c;
}

// ---- criterion 5 ----

Check criterion5(const Corpus& corpus) {
    Check c;
    const auto& maps = corpus.maps;
    std::vector<Word> words;
    for (auto& m : maps) words.push_back(encode(m).word);
    int pairs = 0, equal_pairs = 0;
    for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = i; j < maps.size(); ++j) {
            bool by_word = words[i] == words[j];
            bool by_oracle = are_equivalent(maps[i], maps[j]);
            c.expect(by_word == by_oracle, corpus.labels[i] + " vs " + corpus.labels[j]);
            ++pairs;
            equal_pairs += by_oracle;
        }
    c.expect(maps.size() >= 20, "corpus of at least 20 maps");
    c.note = std::to_string(maps.size()) + " maps, " + std::to_string(pairs) + " pairs, " +
             std::to_string(equal_pairs) + " equivalent";
    return c;
}

// ---- criterion 6 ----

// Ordered trees with nodes numbered in preorder: node i attaches to a node on
// the rightmost path of the tree built from 0..i-1.
void ordered_trees(int n, std::vector<int>& parent, std::vector<Dallajascar>& out) {
    int i = static_cast<int>(parent.size());
    if (i == n) {
        std::vector<std::vector<int>> children(n);
        for (int x = 1; x < n; ++x) children[parent[x]].push_back(x);
        out.push_back(Dallajascar::from_parents(parent, children));
        return;
    }
    for (int p = i - 1; p >= 0; p = parent[p]) {
        parent.push_back(p);
        ordered_trees(n, parent, out);
        parent.pop_back();
    }
}

Check criterion6() {
    Check c;
    std::string counts;
    for (int n = 1; n <= 6; ++n) {
        long long words = 0;
        for (auto& w : all_bracket_strings(n)) {
            if (!validate_simple_word(w).ok()) continue;
            ++words;
            c.equal(simple_word_of(dallajascar_of_simple_word(w)), w, "word->tree->word " + w);
        }
        std::vector<int> parent = {-1};
        std::vector<Dallajascar> trees;
        ordered_trees(n, parent, trees);
        for (auto& t : trees) {
            std::string w = simple_word_of(t);
            c.expect(validate_simple_word(w).ok() && trees_equivalent(dallajascar_of_simple_word(w), t),
                     "tree->word->tree at n=" + std::to_string(n));
        }
        c.equal(words, static_cast<long long>(trees.size()), "count at n=" + std::to_string(n));
        counts += (counts.empty() ? "" : " ") + std::to_string(words);
    }
    c.note = "counts n=1..6: " + counts;
    return c;
}

// ---- criterion 7 ----

Check criterion7(const Corpus& corpus) {
    Check c;
    std::vector<RootedMap> maps = corpus.maps;
    maps.push_back(figure1());
    for (int f = 3; f <= 7; ++f)
        for (auto& m : generate_maps(f)) maps.push_back(m);
    for (auto& m : maps) {
        MapReport r = validate_map(m);
        MapCounts k = count_map(m);
        const int F = m.face_count();
        int pairs = 0;
        for (auto& t : encode(m).word) pairs += t.is_open();
        c.expect(r.ok(), "map accepted");
        c.expect(k.sum % 6 == 0, "sum divisible by 6");
        c.equal(k.edges * 2, k.sum, "E = sum/2");
        c.equal(k.vertices * 3, k.sum, "V = sum/3");
        c.equal(F - k.edges + k.vertices, 2, "Euler");
        c.equal(k.edges, 3 * (F - 2), "E = 3(F-2)");
        c.equal(pairs, F, "binomial pairs = F");
    }
    MapCounts k = count_map(figure1());
    c.expect(k.faces == 11 && k.edges == 27 && k.vertices == 18, "eleven-face example 11/27/18");
    c.note = std::to_string(maps.size()) + " maps; eleven-face example F=" + std::to_string(k.faces) +
             " E=" + std::to_string(k.edges) + " V=" + std::to_string(k.vertices);
    return c;
}

// ---- criterion 8 ----

Check criterion8(const Corpus& corpus) {
    Check c;
    std::vector<RootedMap> maps = corpus.maps;
    maps.push_back(figure1());
    for (int f = 3; f <= 8; ++f)
        for (auto& m : generate_maps(f)) maps.push_back(m);
    int literal_failures = 0;
    for (auto& m : maps) {
        Encoding e = encode(m);
        auto bad = contact_violations(m, e);
        c.expect(bad.empty(), format_word(e.word) + ": " + (bad.empty() ? "" : bad.front()));
        literal_failures += !contact_violations(m, e, true).empty();
    }
    c.note = std::to_string(maps.size()) + " maps; unitary rows read as unlinked (a literal reading that links "
             "their cells fails on " + std::to_string(literal_failures) + " maps, see README)";
    return c;
}

}  // namespace

int main() {
    Corpus corpus = small_corpus();
    struct Item {
        int id;
        std::string title;
        std::function<Check()> run;
    };
    std::vector<Item> items = {
        {1, "encoder golden trace", criterion1},
        {2, "validator golden trace", criterion2},
        {3, "decoder golden trace", criterion3},
        {4, "round trips", [&] { return criterion4(corpus); }},
        {5, "word equality vs equivalence oracle", [&] { return criterion5(corpus); }},
        {6, "simple-word bijection", criterion6},
        {7, "counting identities", [&] { return criterion7(corpus); }},
        {8, "coloring contact property", [&] { return criterion8(corpus); }},
    };
    int failed = 0;
    for (auto& it : items) {
        Check c;
        try {
            c = it.run();
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = c.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << it.id << " " << it.title;
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << "\n";
        for (size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    " << c.failures[i] << "\n";
        if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
    }
    return failed ? 1 : 0;
}
