// Command-line front end: encode, validate, decode, equiv, color, roundtrip, enumerate.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "jasso/decoder.hpp"
#include "jasso/encoder.hpp"
#include "jasso/enumerate.hpp"
#include "jasso/map.hpp"
#include "jasso/rules.hpp"
#include "jasso/token.hpp"

using namespace jasso;

namespace {

constexpr int kOk = 0, kSemantic = 1, kInput = 2, kSentinel = 3;
constexpr int kEnumerateHardBound = 9;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

// Parses and validates a map; diagnostics go to stderr.
RootedMap load_map(const std::string& path) {
    RootedMap m = parse_map(read_file(path));
    MapReport r = validate_map(m);
    if (!r.ok()) {
        for (auto& v : r.violations) std::cerr << path << ": " << v.rule << ": " << v.detail << "\n";
        throw InputError(path + ": invalid map");
    }
    return m;
}

std::string face_list(const RootedMap& m, const std::vector<int>& faces) {
    std::string s;
    for (int f : faces) s += (s.empty() ? "" : " ") + m.names[f];
    return s;
}

std::vector<std::vector<int>> color_classes(const Encoding& e) {
    std::vector<std::vector<int>> cls(4);
    for (size_t f = 0; f < e.color.size(); ++f) cls[e.color[f]].push_back(static_cast<int>(f));
    return cls;
}

// Decoded face p is the cell of the p-th visited face.
std::vector<int> decoded_colors(const Encoding& e) {
    std::vector<int> c(e.visit.size());
    for (size_t p = 0; p < e.visit.size(); ++p) c[p] = e.color[e.visit[p]];
    return c;
}

void print_report(const RootedMap& m, const Encoding& e) {
    std::cout << "layers\n";
    for (size_t j = 0; j < e.layers.jasses.size(); ++j)
        std::cout << "  j" << j << ": " << face_list(m, e.layers.jasses[j]) << "\n";
    std::cout << "rows\n";
    for (auto& [x, items] : e.table.sigma) std::cout << "  (" << x.str() << ") " << format_items(m, items) << "\n";
    std::cout << "coloring\n";
    auto cls = color_classes(e);
    for (int c = 0; c < 4; ++c) std::cout << "  c" << c << ": " << face_list(m, cls[c]) << "\n";
    std::cout << "visit " << face_list(m, e.visit) << "\n";
}

struct Validated {
    Word word;
    WordReport report;
};

Validated load_word(const std::string& path) {
    Word w = tokenize(read_file(path));
    return {w, validate_word(w)};
}

void print_violations(const WordReport& r) {
    for (auto& v : r.violations) std::cerr << format_violation(v) << "\n";
}

int cmd_encode(const std::string& path, bool report) {
    RootedMap m = load_map(path);
    Encoding e = encode(m);
    std::cout << format_word(e.word) << "\n";
    if (report) print_report(m, e);
    return kOk;
}

int cmd_validate(const std::string& path) {
    auto [w, r] = load_word(path);
    std::cout << "tokens " << w.size() << "\n";
    for (int rule = 1; rule <= 4; ++rule) {
        int n = 0;
        for (auto& v : r.violations)
            if (v.rule == rule) ++n;
        std::string verdict = n ? "fail" : (r.analysis.rule_reached >= rule ? "pass" : "not reached");
        std::cout << "rule " << rule << ": " << verdict << "\n";
        for (auto& v : r.violations)
            if (v.rule == rule) std::cout << "  " << format_violation(v) << "\n";
    }
    for (auto& s : r.inconsistencies) std::cout << "inconsistency: " << s << "\n";
    std::cout << (r.ok() ? "valid" : "invalid") << "\n";
    if (!r.ok()) return kSemantic;
    return r.inconsistencies.empty() ? kOk : kSentinel;
}

int cmd_decode(const std::string& path, const std::string& svg, const std::string& geometry) {
    auto [w, r] = load_word(path);
    if (!r.ok()) {
        print_violations(r);
        std::cerr << "invalid word\n";
        return kSemantic;
    }
    GeometricMap g = decode(r.analysis);
    std::cout << format_map(g.map);
    if (!svg.empty()) write_file(svg, render_svg(g));
    if (!geometry.empty()) write_file(geometry, geometry_dump(g));
    return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, bool oracle) {
    RootedMap ma = load_map(a), mb = load_map(b);
    bool same = encode(ma).word == encode(mb).word;
    std::cout << (same ? "equivalent" : "distinct") << "\n";
    if (oracle) {
        bool o = are_equivalent(ma, mb);
        std::cout << "oracle " << (o ? "equivalent" : "distinct") << (o == same ? " (agrees)" : " (DISAGREES)") << "\n";
        if (o != same) return kSentinel;
    }
    return same ? kOk : kSemantic;
}

int cmd_color(const std::string& path, const std::string& svg) {
    RootedMap m = load_map(path);
    Encoding e = encode(m);
    auto cls = color_classes(e);
    for (int c = 0; c < 4; ++c) std::cout << "c" << c << ": " << face_list(m, cls[c]) << "\n";
    auto bad = contact_violations(m, e);
    for (auto& s : bad) std::cout << "contact violation: " << s << "\n";
    std::cout << "contact property " << (bad.empty() ? "holds" : "fails") << "\n";
    if (!svg.empty()) {
        WordReport r = validate_word(e.word);
        if (!r.ok()) return kSentinel;
        auto colors = decoded_colors(e);
        write_file(svg, render_svg(decode(r.analysis), &colors));
    }
    return bad.empty() ? kOk : kSentinel;
}

int roundtrip_word(const std::string& path) {
    auto [w, r] = load_word(path);
    if (!r.ok()) {
        print_violations(r);
        std::cout << "invalid word\n";
        return kSemantic;
    }
    Word back = encode(decode(r.analysis).map).word;
    if (back == w) {
        std::cout << "identity holds (" << w.size() << " tokens)\n";
        return kOk;
    }
    size_t i = 0;
    while (i < w.size() && i < back.size() && w[i] == back[i]) ++i;
    std::cout << "mismatch at token " << i + 1 << ": "
              << (i < w.size() ? w[i].name() : "<end>") << " vs "
              << (i < back.size() ? back[i].name() : "<end>") << "\n";
    return kSemantic;
}

int roundtrip_map(const std::string& path) {
    RootedMap m = load_map(path);
    Encoding e = encode(m);
    WordReport r = validate_word(e.word);
    if (!r.ok()) {
        print_violations(r);
        std::cout << "encoded word fails validation\n";
        return kSentinel;
    }
    RootedMap back = decode(r.analysis).map;
    if (are_equivalent(m, back)) {
        std::cout << "equivalent after round trip (" << m.face_count() << " faces)\n";
        return kOk;
    }
    // First face whose bordure differs under the visit-order renaming.
    for (size_t p = 0; p < e.visit.size(); ++p) {
        std::vector<int> mapped;
        for (int f : back.bordure[p]) mapped.push_back(e.visit[f]);
        if (mapped != m.bordure[e.visit[p]]) {
            std::cout << "mismatch at face " << m.names[e.visit[p]] << "\n";
            return kSemantic;
        }
    }
    std::cout << "not equivalent after round trip\n";
    return kSemantic;
}

int cmd_enumerate(int max_pairs, bool injective) {
    if (max_pairs < 1 || max_pairs > kEnumerateHardBound)
        throw InputError("max-pairs must lie in 1.." + std::to_string(kEnumerateHardBound));
    bool ok = true;
    std::cout << "pairs count\n";
    for (int n = 1; n <= max_pairs; ++n) {
        auto words = enumerate_words(n);
        std::cout << n << " " << words.size() << "\n";
        if (!injective) continue;
        std::vector<RootedMap> maps;
        for (auto& w : words) {
            WordReport r = validate_word(w);
            if (!r.ok()) return kSentinel;
            maps.push_back(decode(r.analysis).map);
        }
        for (size_t i = 0; i < maps.size(); ++i)
            for (size_t j = i + 1; j < maps.size(); ++j)
                if (are_equivalent(maps[i], maps[j])) {
                    std::cout << "  words " << i << " and " << j << " decode to equivalent maps\n";
                    ok = false;
                }
    }
    if (injective) std::cout << "injectivity " << (ok ? "holds" : "fails") << "\n";
    return ok ? kOk : kSentinel;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codec between rooted cubic planar maps and jassological words"};
    app.require_subcommand(1, 1);

    std::string in, in2, svg, geometry, mode;
    bool report = false, oracle = false, injective = false;
    int max_pairs = 6;

    auto* enc = app.add_subcommand("encode", "Encode a map file into a word");
    enc->add_option("map", in, "map file")->required();
    enc->add_flag("--report", report, "print layers, rows, coloring and visit order");

    auto* val = app.add_subcommand("validate", "Check a word file against rules 1-4");
    val->add_option("word", in, "word file")->required();

    auto* dec = app.add_subcommand("decode", "Decode a word file into a map");
    dec->add_option("word", in, "word file")->required();
    dec->add_option("--svg", svg, "write an SVG drawing");
    dec->add_option("--geometry", geometry, "write the geometry dump");

    auto* eq = app.add_subcommand("equiv", "Decide equivalence of two maps by word equality");
    eq->add_option("first", in, "map file")->required();
    eq->add_option("second", in2, "map file")->required();
    eq->add_flag("--oracle", oracle, "also run the backtracking oracle");

    auto* col = app.add_subcommand("color", "Print the row coloring and check the contact property");
    col->add_option("map", in, "map file")->required();
    col->add_option("--svg", svg, "write a colored SVG drawing");

    auto* rt = app.add_subcommand("roundtrip", "Check decode/encode identities");
    rt->add_option("input", in, "map or word file")->required();
    rt->add_option("--mode", mode, "map or word")->required()->check(CLI::IsMember({"map", "word"}));

    auto* en = app.add_subcommand("enumerate", "Count valid words by number of pairs");
    en->add_option("--max-pairs", max_pairs, "largest pair count (at most 9)");
    en->add_flag("--check-injective", injective, "check decoded maps are pairwise distinct");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*enc) return cmd_encode(in, report);
        if (*val) return cmd_validate(in);
        if (*dec) return cmd_decode(in, svg, geometry);
        if (*eq) return cmd_equiv(in, in2, oracle);
        if (*col) return cmd_color(in, svg);
        if (*rt) return mode == "map" ? roundtrip_map(in) : roundtrip_word(in);
        if (*en) return cmd_enumerate(max_pairs, injective);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const EncodeError& e) {
        std::cerr << "encoder failure: " << e.what() << "\n";
        return kSentinel;
    } catch (const DecodeError& e) {
        std::cerr << "decoder failure: " << e.what() << "\n";
        return kSentinel;
    }
    return kInput;
}
