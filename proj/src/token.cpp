#include "jasso/token.hpp"

#include <sstream>

#include "jasso/map.hpp"

namespace jasso {

namespace {

constexpr const char* kBinomeNames[] = {"zc", "mr", "tg", "tc", "sn", "ln"};
constexpr const char* kMonoNames[] = {"cu", "ch", "ba", "ca"};
constexpr char kOpenLetters[] = {'Z', 'M', 'G', 'T', 'S', 'L'};
constexpr char kCloseLetters[] = {'z', 'm', 'g', 't', 's', 'l'};
constexpr char kMonoLetters[] = {'U', 'H', 'B', 'C'};

}  // namespace

std::string binome_name(Binome b) { return kBinomeNames[static_cast<int>(b)]; }
std::string mono_name(Mono m) { return kMonoNames[static_cast<int>(m)]; }

std::string Token::name() const {
    if (is_mono()) return mono_name(mono);
    return binome_name(binome) + (is_open() ? "+" : "-");
}

char Token::letter() const {
    if (is_mono()) return kMonoLetters[static_cast<int>(mono)];
    return (is_open() ? kOpenLetters : kCloseLetters)[static_cast<int>(binome)];
}

TokenFamily family(const Token& t) {
    if (t.is_mono()) {
        switch (t.mono) {
            case Mono::CU: return TokenFamily::Zouc;
            case Mono::CH: return TokenFamily::Stoun;
            default: return TokenFamily::Loun;
        }
    }
    switch (t.binome) {
        case Binome::SN: return TokenFamily::Stoun;
        case Binome::LN: return TokenFamily::Loun;
        default: return TokenFamily::Zouc;
    }
}

Word tokenize(const std::string& text) {
    Word w;
    std::istringstream lines(text);
    int index = 0;
    for (std::string line; std::getline(lines, line);) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream in(line);
        for (std::string s; in >> s;) {
            ++index;
            bool found = false;
            for (int b = 0; b < 6 && !found; ++b) {
                std::string base = kBinomeNames[b];
                if (s == base + "+") w.push_back(Token::open(static_cast<Binome>(b))), found = true;
                else if (s == base + "-") w.push_back(Token::close(static_cast<Binome>(b))), found = true;
            }
            for (int m = 0; m < 4 && !found; ++m)
                if (s == kMonoNames[m]) w.push_back(Token::monomial(static_cast<Mono>(m))), found = true;
            if (!found) throw InputError("unknown token '" + s + "' at position " + std::to_string(index));
        }
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].name();
    }
    return out;
}

std::string letters(const Word& w) {
    std::string out;
    for (auto& t : w) out += t.letter();
    return out;
}

}  // namespace jasso
