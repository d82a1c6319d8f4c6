#pragma once

#include <string>
#include <vector>

namespace jasso {

enum class Binome { ZC, MR, TG, TC, SN, LN };
enum class Mono { CU, CH, BA, CA };

// One of the 16 tokens: an opener or closer of a binome, or a monomial.
struct Token {
    enum class Shape { Open, Close, Mono } shape = Shape::Mono;
    Binome binome = Binome::ZC;
    Mono mono = Mono::CU;

    static Token open(Binome b) { return {Shape::Open, b, Mono::CU}; }
    static Token close(Binome b) { return {Shape::Close, b, Mono::CU}; }
    static Token monomial(Mono m) { return {Shape::Mono, Binome::ZC, m}; }

    bool is_open() const { return shape == Shape::Open; }
    bool is_close() const { return shape == Shape::Close; }
    bool is_mono() const { return shape == Shape::Mono; }
    bool is(Binome b) const { return !is_mono() && binome == b; }
    bool is(Mono m) const { return is_mono() && mono == m; }
    bool opens(Binome b) const { return is_open() && binome == b; }

    std::string name() const;
    // One letter per token, used to match fragment grammars.
    char letter() const;

    bool operator==(const Token& o) const {
        return shape == o.shape && (is_mono() ? mono == o.mono : binome == o.binome);
    }
};

using Word = std::vector<Token>;

enum class TokenFamily { Zouc, Stoun, Loun };
TokenFamily family(const Token& t);

std::string binome_name(Binome b);
std::string mono_name(Mono m);


// Throws InputError naming the offending token position.
Word tokenize(const std::string& text);
std::string format_word(const Word& w);
std::string letters(const Word& w);

}  // namespace jasso
