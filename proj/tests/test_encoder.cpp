#include <gtest/gtest.h>

#include <set>

#include "jasso/encoder.hpp"
#include "jasso/enumerate.hpp"
#include "support.hpp"

using namespace jasso;
using namespace jasso::testing;

namespace {

std::set<std::string> as_set(const RootedMap& m, const std::vector<int>& faces) {
    auto v = names_of(m, faces);
    return {v.begin(), v.end()};
}

const Rovejasse& rov_with_zouc(const Encoding& e, int zouc) {
    for (auto& v : e.layers.rovs)
        if (v.zouc == zouc) return v;
    throw std::runtime_error("no rovejasse");
}

}  // namespace

TEST(Encoder, Figure1Layering) {
    RootedMap m = figure1();
    Layering l = compute_layering(m);
    ASSERT_EQ(l.jasses.size(), 3u);
    EXPECT_EQ(as_set(m, l.jasses[0]), (std::set<std::string>{"a"}));
    EXPECT_EQ(as_set(m, l.jasses[1]), (std::set<std::string>{"b", "c", "f", "g", "j"}));
    EXPECT_EQ(as_set(m, l.jasses[2]), (std::set<std::string>{"d", "e", "h", "i", "k"}));
    std::set<std::set<std::string>> rovs, supports;
    for (auto& v : l.rovs)
        if (v.level == 2) {
            rovs.insert(as_set(m, v.cells));
            supports.insert(as_set(m, v.support));
        }
    EXPECT_EQ(rovs, (std::set<std::set<std::string>>{{"k"}, {"d", "e"}, {"h", "i"}}));
    EXPECT_EQ(supports, (std::set<std::set<std::string>>{{"c", "g"}, {"b", "c", "g", "f"}, {"f", "g", "j"}}));
}

TEST(Encoder, ThetaLayering) {
    RootedMap m = theta();
    Layering l = compute_layering(m);
    ASSERT_EQ(l.jasses.size(), 2u);
    EXPECT_EQ(as_set(m, l.jasses[1]), (std::set<std::string>{"y", "z"}));
}

TEST(Encoder, RingWalk) {
    RootedMap m = figure1();
    Encoding e = encode(m);
    auto& v = rov_with_zouc(e, m.at("d"));
    EXPECT_EQ(v.cplus.at(m.at("b")), m.at("c"));
    EXPECT_EQ(v.cplus.at(m.at("c")), m.at("g"));
    EXPECT_EQ(v.cplus.at(m.at("g")), m.at("f"));
    EXPECT_EQ(v.cplus.at(m.at("f")), m.at("b"));
    auto& u = rov_with_zouc(e, m.at("k"));
    EXPECT_EQ(u.cplus.at(m.at("c")), m.at("g"));
    EXPECT_EQ(u.cplus.at(m.at("g")), m.at("c"));
}

TEST(Encoder, CaoulyAndFan) {
    RootedMap m = figure1();
    Encoding e = encode(m);
    auto pair = [&](const char* a, const char* b) { return FacePair{m.at(a), m.at(b)}; };
    auto& v = rov_with_zouc(e, m.at("d"));
    EXPECT_EQ(v.baou, pair("b", "c"));
    auto cf = derive_caouly_fan(v, v.baou, false);
    EXPECT_EQ(cf.caouly, pair("f", "b"));
    EXPECT_EQ(names_of(m, cf.fan), (std::vector<std::string>{"g", "f"}));
    auto& w = rov_with_zouc(e, m.at("i"));
    EXPECT_EQ(w.baou, pair("g", "j"));
    EXPECT_EQ(w.caouly, pair("j", "f"));
    EXPECT_TRUE(w.fan.empty());
    auto& u = rov_with_zouc(e, m.at("k"));
    EXPECT_EQ(u.baou, pair("c", "g"));
    EXPECT_EQ(u.caouly, pair("g", "c"));
    EXPECT_TRUE(u.fan.empty());
}

TEST(Encoder, OrientedBoundary) {
    RootedMap m = figure1();
    auto o = oriented_boundary(m, m.at("c"), {m.at("b"), m.at("a")}, FacePair{m.at("g"), m.at("d")});
    EXPECT_EQ(names_of(m, o.rotated), (std::vector<std::string>{"b", "a", "g", "k", "g", "d", "b"}));
    EXPECT_EQ(names_of(m, o.br), (std::vector<std::string>{"b", "a", "g", "k", "g", "d"}));
    auto j = oriented_boundary(m, m.at("j"), {m.at("g"), m.at("a")}, FacePair{m.at("a"), m.at("f")});
    EXPECT_EQ(names_of(m, j.br), (std::vector<std::string>{"g", "a", "f"}));
}

TEST(Encoder, ProjectDelta) {
    RootedMap m = figure1();
    auto f = [&](const char* s) { return m.at(s); };
    EXPECT_EQ(format_items(m, project_delta({f("b"), f("c"), f("g")}, {f("b"), f("c")}, {f("f"), f("b")})), "(ba,g)");
    EXPECT_EQ(format_items(m, project_delta({f("c"), f("g"), f("c")}, {f("c"), f("g")}, {f("g"), f("c")})), "(ba,ca)");
    EXPECT_EQ(format_items(m, project_delta({f("g"), f("f"), f("b")}, {f("b"), f("c")}, {f("f"), f("b")})), "(f,ca)");
}

TEST(Encoder, Figure1CellTables) {
    RootedMap m = figure1();
    Encoding e = encode(m);
    auto& b = e.cells[m.at("b")];
    EXPECT_EQ(b.v, 1);
    EXPECT_EQ(format_items(m, b.T), "(d,cu)");
    EXPECT_EQ(format_items(m, b.S), "(c,g,f,ch)");
    auto& g = e.cells[m.at("g")];
    EXPECT_EQ(format_items(m, g.H), "(j,i)");
    EXPECT_EQ(format_items(m, g.T), "(i)");
    EXPECT_EQ(format_items(m, g.S), "(j)");
    EXPECT_TRUE(e.cells[m.at("i")].mediane);
    auto& f = e.cells[m.at("f")];
    EXPECT_EQ(format_items(m, f.T), "(cu)");
    EXPECT_EQ(format_items(m, f.S), "(ch)");
    EXPECT_EQ(format_items(m, e.cells[m.at("c")].H), "(k)");
    EXPECT_TRUE(e.cells[m.at("j")].H.empty());
    EXPECT_EQ(e.cells[m.at("k")].binome, Binome::TG);
}

TEST(Encoder, Figure1Rows) {
    RootedMap m = figure1();
    Encoding e = encode(m);
    std::map<std::string, std::string> rows;
    for (auto& [x, items] : e.table.sigma) rows[x.str()] = format_items(m, items);
    std::map<std::string, std::string> want = {
        {"", "(a)"},           {"1", "(b)"},        {"1#,1", "(d,cu)"}, {"1#,2", "(e,ch)"},
        {"2", "(c,g,f,ch)"},   {"2,1", "(k)"},      {"2#", "(ba,ca)"},  {"2#,1", "(i,cu)"},
        {"2#,2", "(h,ch)"},    {"3", "(j,ch)"},
    };
    EXPECT_EQ(rows, want);
}

TEST(Encoder, Figure1FaceTree) {
    RootedMap m = figure1();
    Encoding e = encode(m);
    std::map<std::string, std::string> parent;
    for (int f = 0; f < m.face_count(); ++f)
        if (e.tree.parent[f] >= 0) parent[m.names[f]] = m.names[e.tree.parent[f]];
    std::map<std::string, std::string> want = {{"b", "a"}, {"c", "b"}, {"k", "c"}, {"d", "b"}, {"g", "d"},
                                               {"j", "g"}, {"i", "g"}, {"h", "i"}, {"e", "d"}, {"f", "e"}};
    EXPECT_EQ(parent, want);
}

TEST(Encoder, Figure1WordColoringAndVisit) {
    RootedMap m = figure1();
    Encoding e = encode(m);
    EXPECT_EQ(e.word, figure1_word());
    EXPECT_EQ(e.word.size(), 34u);
    EXPECT_EQ(names_of(m, e.visit),
              (std::vector<std::string>{"a", "b", "c", "k", "d", "g", "j", "i", "h", "e", "f"}));
    std::map<std::string, int> color;
    for (int f = 0; f < m.face_count(); ++f) color[m.names[f]] = e.color[f];
    for (auto f : {"b", "j"}) EXPECT_EQ(color[f], 1) << f;
    for (auto f : {"c", "g", "f"}) EXPECT_EQ(color[f], 3) << f;
    for (auto f : {"a", "d", "k", "i"}) EXPECT_EQ(color[f], 0) << f;
    for (auto f : {"e", "h"}) EXPECT_EQ(color[f], 2) << f;
    int pairs = 0;
    for (auto& t : e.word) pairs += t.is_open();
    EXPECT_EQ(pairs, 11);
}

TEST(Encoder, ThetaWord) {
    Encoding e = encode(theta());
    EXPECT_EQ(format_word(e.word), "zc+ mr+ sn+ sn- ch mr- zc-");
}

TEST(Encoder, DeterministicOutput) {
    RootedMap m = figure1();
    EXPECT_EQ(encode(m).word, encode(m).word);
}

TEST(Encoder, ContactPropertyOnGeneratedMaps) {
    for (int f = 3; f <= 6; ++f)
        for (auto& m : generate_maps(f)) {
            Encoding e = encode(m);
            EXPECT_TRUE(contact_violations(m, e).empty()) << format_map(m);
        }
    RootedMap m = figure1();
    EXPECT_TRUE(contact_violations(m, encode(m)).empty());
}
