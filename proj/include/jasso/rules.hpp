#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jasso/sequences.hpp"
#include "jasso/token.hpp"

namespace jasso {

enum class Grammar {
    Trouglyre,
    Stougammon,
    Trenagatte,
    Lounafan,
    SimpleLounafan,
    Lounagatte,
    Ramajo,
    DRamajo,
    GRamajo,
    Stratajo,
    DStratajo,
    GStratajo,
};

std::string grammar_name(Grammar g);
// Input is a letter string as produced by letters() or WordAnalysis::L.
bool matches(Grammar g, const std::string& fragment);
std::vector<Grammar> grammar_classify(const std::string& fragment);

// Word positions are 1-based throughout.
using Seq = std::vector<int>;

struct OpenerTables {
    Seq G, R, Rprime, Rd, Rg;
    int v = 0;
    std::vector<Seq> Rk;     // R_1 .. R_v
    std::vector<Seq> Delta;  // Delta_0 .. Delta_v
    Seq DeltaG, T, S;
};

struct WordAnalysis {
    Word word;
    int eta = 0;
    std::vector<std::pair<int, int>> pairs;  // J_p = (alpha_p, beta_p)
    std::vector<int> pair_at;                // position -> p, for openers and closers
    Seq E;
    std::vector<int> phi;   // by position, 0 for the root
    std::vector<Seq> H;     // by position
    std::vector<Stratino> sigma;  // by position
    std::map<Stratino, Seq> Sigma;
    std::set<int> A, Cg, Cd, zouc, zm;
    std::map<int, OpenerTables> op;
    std::map<int, Seq> fan;
    std::vector<Seq> stratajos;

    const Token& at(int pos) const { return word[pos - 1]; }
    bool is_opener(int pos) const { return at(pos).is_open(); }
    bool in_E(int pos) const { return !at(pos).is_close(); }
    // Letters of a sequence: an opener stands for its whole pair.
    std::string L(const Seq& s) const;
    Seq row(const Stratino& x) const;
    Seq srow(const Stratino& x) const;  // openers of the row only
    int rule_reached = 0;
};

struct RuleViolation {
    int rule = 0;
    int condition = 0;
    int position = 0;  // 1-based, 0 when not tied to a position
    std::string detail;
};

struct WordReport {
    WordAnalysis analysis;
    std::vector<RuleViolation> violations;
    std::vector<std::string> inconsistencies;  // derived rows failing to factor
    bool ok() const { return violations.empty(); }
};

// Each stage appends its violations and returns true when it passed.
bool check_rule1(WordAnalysis& a, std::vector<RuleViolation>& out);
void build_skeleton(WordAnalysis& a);
bool check_rule2(WordAnalysis& a, std::vector<RuleViolation>& out);
bool check_rule3(WordAnalysis& a, std::vector<RuleViolation>& out);
bool check_rule4(WordAnalysis& a, std::vector<RuleViolation>& out);
void derive_ts(WordAnalysis& a, std::vector<std::string>& inconsistencies);

WordReport validate_word(const Word& w);

std::string format_seq(const Seq& s);
std::string format_violation(const RuleViolation& v);

}  // namespace jasso
