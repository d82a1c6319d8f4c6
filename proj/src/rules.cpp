#include "jasso/rules.hpp"

#include <algorithm>
#include <regex>

#include "jasso/tree.hpp"

namespace jasso {

namespace {

struct GrammarDef {
    Grammar g;
    const char* name;
    const char* pattern;
};

// Letters: Z M G T S L open, lower case close, U=cu H=ch B=ba C=ca.
const GrammarDef kGrammars[] = {
    {Grammar::Trouglyre, "trouglyre", "(Gg)+"},
    {Grammar::Stougammon, "stougammon", "(Ss)+"},
    {Grammar::Trenagatte, "trenagatte", "(TtU)+"},
    {Grammar::Lounafan, "lounafan", "B(Ll)*C"},
    {Grammar::SimpleLounafan, "simple_lounafan", "BC"},
    {Grammar::Lounagatte, "lounagatte", "(B(Ll)*C)+"},
    {Grammar::Ramajo, "ramajo", "Ss(Ss|TtU)*H"},
    {Grammar::DRamajo, "d_ramajo", "Ss(Ss|TtU)*(Tt)?"},
    {Grammar::GRamajo, "g_ramajo", "U?(Ss|TtU)*H"},
    {Grammar::Stratajo, "stratajo", "Ss(Ss|B(Ll)*C)*H"},
    {Grammar::DStratajo, "d_stratajo", "Ss(Ss|B(Ll)*C)*"},
    {Grammar::GStratajo, "g_stratajo", "(Ss|B(Ll)*C)*H"},
};

const std::regex& grammar_regex(Grammar g) {
    static const std::vector<std::regex> compiled = [] {
        std::vector<std::regex> v;
        for (auto& d : kGrammars) v.emplace_back(d.pattern, std::regex::ECMAScript | std::regex::optimize);
        return v;
    }();
    return compiled[static_cast<int>(g)];
}

Seq filter(const WordAnalysis& a, const Seq& s, auto pred) {
    Seq out;
    for (int x : s)
        if (pred(a.at(x))) out.push_back(x);
    return out;
}

void append(Seq& to, const Seq& from) { to.insert(to.end(), from.begin(), from.end()); }

bool in_R(const Token& t) {
    return t.opens(Binome::TC) || t.opens(Binome::SN) || t.is(Mono::CU) || t.is(Mono::CH);
}

void fail(std::vector<RuleViolation>& out, int rule, int cond, int pos, std::string detail) {
    out.push_back({rule, cond, pos, std::move(detail)});
}

}  // namespace

std::string grammar_name(Grammar g) { return kGrammars[static_cast<int>(g)].name; }

bool matches(Grammar g, const std::string& fragment) {
    return std::regex_match(fragment, grammar_regex(g));
}

std::vector<Grammar> grammar_classify(const std::string& fragment) {
    std::vector<Grammar> out;
    for (auto& d : kGrammars)
        if (matches(d.g, fragment)) out.push_back(d.g);
    return out;
}

std::string WordAnalysis::L(const Seq& s) const {
    std::string out;
    for (int x : s) {
        const Token& t = at(x);
        out += t.letter();
        if (t.is_open()) out += Token::close(t.binome).letter();
    }
    return out;
}

Seq WordAnalysis::row(const Stratino& x) const {
    auto it = Sigma.find(x);
    return it == Sigma.end() ? Seq{} : it->second;
}

Seq WordAnalysis::srow(const Stratino& x) const {
    Seq out;
    for (int g : row(x))
        if (A.count(g)) out.push_back(g);
    return out;
}

std::string format_seq(const Seq& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

std::string format_violation(const RuleViolation& v) {
    std::string out = "rule " + std::to_string(v.rule);
    if (v.condition) out += " condition " + std::to_string(v.condition);
    if (v.position) out += " at " + std::to_string(v.position);
    return out + ": " + v.detail;
}

bool check_rule1(WordAnalysis& a, std::vector<RuleViolation>& out) {
    const size_t before = out.size();
    a.eta = static_cast<int>(a.word.size());
    std::vector<int> bracket_pos;
    std::vector<bool> mask;
    for (int i = 1; i <= a.eta; ++i)
        if (!a.at(i).is_mono()) {
            bracket_pos.push_back(i);
            mask.push_back(a.at(i).is_open());
        }
    const int openers = static_cast<int>(std::count(mask.begin(), mask.end(), true));
    if (openers < 3) fail(out, 1, 1, 0, "only " + std::to_string(openers) + " opening tokens");

    auto check = validate_bracket_mask(mask);
    if (!check.ok()) {
        int pos = check.bad_position >= 0 && check.bad_position < static_cast<int>(bracket_pos.size())
                      ? bracket_pos[check.bad_position]
                      : 0;
        fail(out, 1, 2, pos, check.reason);
        return false;
    }
    a.pairs.clear();
    a.pair_at.assign(a.eta + 1, -1);
    for (auto [o, c] : check.table->pairs) a.pairs.emplace_back(bracket_pos[o], bracket_pos[c]);
    for (size_t p = 0; p < a.pairs.size(); ++p) {
        auto [al, be] = a.pairs[p];
        a.pair_at[al] = a.pair_at[be] = static_cast<int>(p);
        if (a.at(al).binome != a.at(be).binome)
            fail(out, 1, 2, be, a.at(al).name() + " closed by " + a.at(be).name());
    }
    auto& j0 = a.pairs[0];
    if (j0.first != 1 || j0.second != a.eta || !a.at(1).is(Binome::ZC))
        fail(out, 1, 3, j0.first, "the outermost pair must be a zc pair spanning the word");
    if (a.pairs.size() < 2 || a.pairs[1].first != 2 || a.pairs[1].second != a.eta - 1 ||
        !a.at(2).is(Binome::MR))
        fail(out, 1, 4, 2, "an mr pair must span positions 2 to " + std::to_string(a.eta - 1));
    for (size_t p = 2; p < a.pairs.size(); ++p) {
        const Token& t = a.at(a.pairs[p].first);
        if (t.is(Binome::ZC) || t.is(Binome::MR))
            fail(out, 1, 5, a.pairs[p].first, "inner pair of kind " + binome_name(t.binome));
    }
    return out.size() == before;
}

void build_skeleton(WordAnalysis& a) {
    a.E.clear();
    a.phi.assign(a.eta + 1, 0);
    a.H.assign(a.eta + 1, {});
    for (int g = 1; g <= a.eta; ++g)
        if (a.in_E(g)) a.E.push_back(g);
    for (int g : a.E) {
        // Tightest enclosing pair: the latest opener whose pair strictly contains g.
        int best = 0;
        for (auto [al, be] : a.pairs)
            if (al < g && g < be && al > best) best = al;
        a.phi[g] = best;
        if (best) a.H[best].push_back(g);
    }
    a.A.clear();
    for (size_t p = 1; p < a.pairs.size(); ++p) a.A.insert(a.pairs[p].first);
}

bool check_rule2(WordAnalysis& a, std::vector<RuleViolation>& out) {
    const size_t before = out.size();
    a.sigma.assign(a.eta + 1, Stratino{});
    a.Sigma.clear();
    for (int g : a.E) {
        Stratino s;
        if (g == 2) {
            s = Stratino{}.with(1);
        } else if (g > 2) {
            const Stratino& ps = a.sigma[a.phi[g]];
            if (!ps.empty() && ps.kind() == StratinoKind::Natural) {
                const Stratino X = ps.parent();
                const int n = ps.back().value;
                const Token& t = a.at(g);
                if (t.opens(Binome::TG)) {
                    if (n >= 2) s = X.with(n).with(1);
                } else if (t.opens(Binome::TC) || t.is(Mono::CU)) {
                    s = X.with(n, true).with(1);
                } else if (t.opens(Binome::SN) || t.is(Mono::CH)) {
                    s = X.with(n + 1);
                } else if (t.opens(Binome::LN)) {
                    if (X.kind() == StratinoKind::Shifted) s = X.parent().with(X.back().value + 1);
                } else if (t.is(Mono::BA) || t.is(Mono::CA)) {
                    if (X.kind() == StratinoKind::Shifted)
                        s = X.parent().with(X.back().value + 1);
                    else if (!X.empty() && !X.is_unitary())
                        s = X.shifted();
                }
            }
        }
        a.sigma[g] = s;
        a.Sigma[s].push_back(g);
        if (g != 1 && s.empty())
            fail(out, 2, 0, g, a.at(g).name() + " gets the empty stratino");
    }
    return out.size() == before;
}

bool check_rule3(WordAnalysis& a, std::vector<RuleViolation>& out) {
    const size_t before = out.size();
    a.Cg.clear();
    a.Cd.clear();
    a.op.clear();

    for (int al : a.A) {
        const Token& t = a.at(al);
        if (!(t.opens(Binome::SN) || t.opens(Binome::LN))) {
            a.Cg.insert(al);
            a.Cd.insert(al);
            continue;
        }
        const Stratino& X = a.sigma[al];
        const Seq row = a.row(X), srow = a.srow(X);
        auto it = std::find(srow.begin(), srow.end(), al);
        auto ch_between = [&](int lo, int hi) {
            for (int g : row)
                if (lo < g && g < hi && a.at(g).is(Mono::CH)) return true;
            return false;
        };
        if (it == srow.begin() || ch_between(*(it - 1), al)) a.Cg.insert(al);
        if (it + 1 == srow.end() || ch_between(al, *(it + 1))) a.Cd.insert(al);
    }

    for (int al : a.A) {
        OpenerTables o;
        const Seq& H = a.H[al];
        o.G = filter(a, H, [](const Token& t) { return t.opens(Binome::TG); });
        o.R = filter(a, H, in_R);
        int last_ch = -1;
        for (size_t i = 0; i < o.R.size(); ++i)
            if (a.at(o.R[i]).is(Mono::CH)) last_ch = static_cast<int>(i);
        o.Rprime.assign(o.R.begin(), o.R.begin() + (last_ch + 1));
        o.Rd.assign(o.R.begin() + (last_ch + 1), o.R.end());

        a.op[al] = std::move(o);
    }

    // A left ramajo exists only where the predecessor's right ramajo hands
    // over a shared cell; otherwise every block is an inner R_k.
    for (int al : a.A) {
        auto& o = a.op[al];
        std::vector<Seq> blocks;
        Seq cur;
        for (int g : o.Rprime) {
            cur.push_back(g);
            if (a.at(g).is(Mono::CH)) blocks.push_back(std::move(cur)), cur.clear();
        }
        bool left = false;
        if (!a.Cg.count(al)) {
            const Seq srow = a.srow(a.sigma[al]);
            auto it = std::find(srow.begin(), srow.end(), al);
            left = it != srow.begin() && !a.op[*(it - 1)].Rd.empty();
        }
        if (!blocks.empty()) {
            if (!left) {
                o.Rk = blocks;
            } else {
                o.Rg = blocks.front();
                o.Rk.assign(blocks.begin() + 1, blocks.end());
            }
        }
        o.v = static_cast<int>(o.Rk.size());
    }

    for (int al : a.A) {
        const auto& o = a.op[al];
        const Seq& H = a.H[al];
        if (a.Cd.count(al) && (!o.G.empty() || !o.Rd.empty()))
            fail(out, 3, 1, al, "closing opener with G=" + format_seq(o.G) + " Rd=" + format_seq(o.Rd));
        if (!o.Rd.empty() && !matches(Grammar::DRamajo, a.L(o.Rd)))
            fail(out, 3, 2, al, "Rd " + a.L(o.Rd) + " is not a d-ramajo");
        if (!o.Rg.empty() && !matches(Grammar::GRamajo, a.L(o.Rg)))
            fail(out, 3, 3, al, "Rg " + a.L(o.Rg) + " is not a g-ramajo");
        const Seq srow = a.srow(a.sigma[al]);
        auto it = std::find(srow.begin(), srow.end(), al);
        if (it != srow.begin()) {
            std::string r = a.L(a.op[*(it - 1)].Rd) + a.L(o.Rg);
            if (!r.empty() && !matches(Grammar::Ramajo, r))
                fail(out, 3, 4, al, "Rd(" + std::to_string(*(it - 1)) + ") Rg joint " + r + " is not a ramajo");
        }
        for (int k = 0; k < o.v; ++k) {
            if (!matches(Grammar::Ramajo, a.L(o.Rk[k])))
                fail(out, 3, 5, al, "R_" + std::to_string(k + 1) + " " + a.L(o.Rk[k]) + " is not a ramajo");
            if (!is_factor(o.Rk[k], H))
                fail(out, 3, 8, al, "R_" + std::to_string(k + 1) + " is not a factor of H");
        }
        Seq tail = o.Rd;
        append(tail, o.G);
        if (!is_suffix(tail, H)) fail(out, 3, 6, al, "(Rd,G) is not a suffix of H");
        if (!is_prefix(o.Rg, H)) fail(out, 3, 7, al, "Rg is not a prefix of H");
    }
    if (out.size() != before) return false;

    // H = (Rg, D_0, R_1, D_1, ..., R_v, D_v, Rd, G)
    for (int al : a.A) {
        auto& o = a.op[al];
        o.Delta.assign(o.v + 1, {});
        std::map<int, int> part;
        for (int k = 0; k < o.v; ++k)
            for (int g : o.Rk[k]) part[g] = k + 1;
        int k = 0;
        for (int g : a.H[al]) {
            if (auto p = part.find(g); p != part.end()) {
                k = p->second;
            } else if (!in_R(a.at(g)) && !a.at(g).opens(Binome::TG)) {
                o.Delta[k].push_back(g);
            }
        }
    }
    return true;
}

bool check_rule4(WordAnalysis& a, std::vector<RuleViolation>& out) {
    const size_t before = out.size();
    a.zouc.clear();
    a.zm.clear();
    a.fan.clear();
    for (int al : a.A)
        if (a.at(al).opens(Binome::TG) || a.at(al).opens(Binome::TC)) a.zouc.insert(al);

    for (int al : a.zouc) {
        const Stratino up = a.sigma[al].parent();
        const Stratino target = a.at(al).opens(Binome::TG) ? up.shifted() : up.with_last(up.back().value + 1, false);
        Seq f;
        for (int g : a.row(target)) {
            int x = a.phi[g];
            while (x && x != al) x = a.phi[x];
            if (x == al) f.push_back(g);
        }
        a.fan[al] = f;
        const int q = a.phi[al];
        if (a.at(al).opens(Binome::TC) && a.op.count(q) && !a.op[q].Rd.empty() && a.op[q].Rd.back() == al)
            a.zm.insert(al);
    }

    for (int al : a.zouc) {
        const std::string lf = a.L(a.fan[al]);
        if (a.at(al).opens(Binome::TG) && !matches(Grammar::SimpleLounafan, lf))
            fail(out, 4, 1, al, "fan " + format_seq(a.fan[al]) + " reads '" + lf + "', not a simple lounafan");
        if (a.at(al).opens(Binome::TC) && !matches(Grammar::Lounafan, lf))
            fail(out, 4, 2, al, "fan " + format_seq(a.fan[al]) + " reads '" + lf + "', not a lounafan");
        if (!a.zm.count(al)) {
            const Seq& d0 = a.op[al].Delta[0];
            if (d0.empty() || !a.at(d0.front()).is(Mono::BA))
                fail(out, 4, 3, al, "Delta_0 " + format_seq(d0) + " does not start with ba");
        }
    }
    return out.size() == before;
}

void derive_ts(WordAnalysis& a, std::vector<std::string>& bad) {
    for (int al : a.A) {
        auto& o = a.op[al];
        o.DeltaG.clear();
        o.T.clear();
        o.S.clear();
        for (int g : o.G) append(o.DeltaG, a.fan[g]);
        std::vector<const Seq*> parts{&o.Rg};
        for (auto& r : o.Rk) parts.push_back(&r);
        parts.push_back(&o.Rd);
        for (const Seq* p : parts)
            for (int g : *p) {
                const Token& t = a.at(g);
                if (t.opens(Binome::TC) || t.is(Mono::CU)) o.T.push_back(g);
                if (t.opens(Binome::TC))
                    append(o.S, a.fan[g]);
                else if (!t.is(Mono::CU))
                    o.S.push_back(g);
            }
    }

    for (int g : a.E)
        if (g != 1 && !(a.sigma[a.phi[g]] < a.sigma[g]))
            bad.push_back("stratino of " + std::to_string(g) + " does not exceed its parent's");

    a.stratajos.clear();
    for (auto& [x, row] : a.Sigma) {
        if (x.size() < 1 || (x.size() == 1 && x.back().value == 1 && !x.back().shifted)) continue;
        const std::string l = a.L(row);
        const StratinoTerm last = x.back();
        bool good = true;
        if (last.shifted) {
            good = std::regex_match(l, std::regex("(BC)+"));
        } else if (last.value == 1) {
            good = x.terms()[x.size() - 2].shifted ? matches(Grammar::Trenagatte, l) : matches(Grammar::Trouglyre, l);
        } else {
            Seq cur;
            for (int g : row) {
                cur.push_back(g);
                if (a.at(g).is(Mono::CH)) {
                    if (!matches(Grammar::Stratajo, a.L(cur))) good = false;
                    a.stratajos.push_back(std::move(cur));
                    cur.clear();
                }
            }
            if (!cur.empty()) good = false;
        }
        if (!good) bad.push_back("row (" + x.str() + ") reads '" + l + "' and does not factor");
    }
}

WordReport validate_word(const Word& w) {
    WordReport r;
    auto& a = r.analysis;
    a.word = w;
    a.eta = static_cast<int>(w.size());
    if (!check_rule1(a, r.violations)) return r;
    a.rule_reached = 1;
    build_skeleton(a);
    if (!check_rule2(a, r.violations)) return r;
    a.rule_reached = 2;
    if (!check_rule3(a, r.violations)) return r;
    a.rule_reached = 3;
    if (!check_rule4(a, r.violations)) return r;
    a.rule_reached = 4;
    derive_ts(a, r.inconsistencies);
    return r;
}

}  // namespace jasso
