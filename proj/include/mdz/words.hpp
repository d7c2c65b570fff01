#pragma once

#include <mdz/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdz {

// Letters of the three-letter alphabet. The same type serves the dual
// (superscript) alphabet; the pairing between the two sides is coefficient
// extraction, since words form an orthonormal basis.
enum class Letter : std::int8_t { X0 = 0, X1 = 1, XM1 = -1 };

// A word is a finite letter sequence; weight = length, depth = number of
// non-X0 letters.
using Word = std::vector<Letter>;

inline std::size_t weight(const Word& w) { return w.size(); }

inline std::size_t depth(const Word& w) {
    std::size_t d = 0;
    for (Letter l : w)
        if (l != Letter::X0) ++d;
    return d;
}

// "0.1.-1" token syntax; the empty word prints as "".
inline std::string word_str(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << '.';
        os << static_cast<int>(w[i]);
    }
    return os.str();
}

inline Word word_parse(const std::string& s) {
    Word w;
    if (s.empty()) return w;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '.')) {
        if (tok == "0") w.push_back(Letter::X0);
        else if (tok == "1") w.push_back(Letter::X1);
        else if (tok == "-1") w.push_back(Letter::XM1);
        else throw std::invalid_argument("bad letter token: " + tok);
    }
    return w;
}

// Builds e^{sign} (e0)^{zeros} ... blocks: convenience for the standard
// letter-gap shape  e^{s1}(e0)^{g1} e^{s2}(e0)^{g2} ...
inline Word block_word(const std::vector<int>& signs, const std::vector<int>& gaps) {
    if (signs.size() != gaps.size()) throw std::invalid_argument("block_word shape mismatch");
    Word w;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        w.push_back(signs[i] > 0 ? Letter::X1 : Letter::XM1);
        for (int k = 0; k < gaps[i]; ++k) w.push_back(Letter::X0);
    }
    return w;
}

// Finite rational linear combination of words. No zero coefficients are
// stored. Not necessarily homogeneous; graded pieces are taken on demand.
class NcPoly {
public:
    using Terms = std::map<Word, Rational>;

    NcPoly() = default;
    explicit NcPoly(const Word& w) { terms_[w] = 1; }
    NcPoly(const Word& w, const Rational& c) {
        if (c != 0) terms_[w] = c;
    }

    static NcPoly zero() { return NcPoly(); }
    static NcPoly one() { return NcPoly(Word{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
    friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) os << " + ";
            os << rat_str(c) << "*[" << word_str(w) << "]";
            first = false;
        }
        return os.str();
    }

private:
    Terms terms_;
};

// Coefficient of w in a: the dual pairing against the orthonormal word basis.
inline Rational coeff(const NcPoly& a, const Word& w) {
    auto it = a.terms().find(w);
    return it == a.terms().end() ? Rational(0) : it->second;
}

// Bilinear extension of word concatenation.
inline NcPoly concat(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

// (a1...an)* = (-1)^n (an...a1), extended linearly. An involution.
inline NcPoly star(const NcPoly& a) {
    NcPoly out;
    for (const auto& [w, c] : a.terms()) {
        Word r(w.rbegin(), w.rend());
        out.add_term(r, (w.size() % 2 == 0) ? c : -c);
    }
    return out;
}

// Letterwise swap X1 <-> XM1 with X0 fixed. An involution preserving
// weight and depth.
inline NcPoly tau(const NcPoly& a) {
    NcPoly out;
    for (const auto& [w, c] : a.terms()) {
        Word t = w;
        for (Letter& l : t) {
            if (l == Letter::X1) l = Letter::XM1;
            else if (l == Letter::XM1) l = Letter::X1;
        }
        out.add_term(t, c);
    }
    return out;
}

// Terms of exact weight n and depth r.
inline NcPoly graded_part(const NcPoly& a, std::size_t n, std::size_t r) {
    NcPoly out;
    for (const auto& [w, c] : a.terms())
        if (weight(w) == n && depth(w) == r) out.add_term(w, c);
    return out;
}

// All words of the given weight and depth, in a fixed deterministic order.
inline std::vector<Word> all_words(std::size_t wt, std::size_t dep) {
    std::vector<Word> out;
    if (dep > wt) return out;
    // choose gap sizes g0..g_dep >= 0 summing to wt-dep, and a sign per letter
    std::vector<int> gaps(dep + 1, 0);
    std::vector<int> signs(dep, 1);
    const int free_zeros = static_cast<int>(wt - dep);

    auto emit = [&]() {
        Word w;
        w.reserve(wt);
        for (std::size_t i = 0; i < dep; ++i) {
            for (int k = 0; k < gaps[i]; ++k) w.push_back(Letter::X0);
            w.push_back(signs[i] > 0 ? Letter::X1 : Letter::XM1);
        }
        for (int k = 0; k < gaps[dep]; ++k) w.push_back(Letter::X0);
        out.push_back(std::move(w));
    };

    std::function<void(std::size_t, int)> rec_gaps = [&](std::size_t i, int left) {
        if (i == dep) {
            gaps[dep] = left;
            std::function<void(std::size_t)> rec_signs = [&](std::size_t j) {
                if (j == dep) {
                    emit();
                    return;
                }
                signs[j] = 1;
                rec_signs(j + 1);
                signs[j] = -1;
                rec_signs(j + 1);
            };
            rec_signs(0);
            return;
        }
        for (int g = 0; g <= left; ++g) {
            gaps[i] = g;
            rec_gaps(i + 1, left - g);
        }
    };
    rec_gaps(0, free_zeros);
    return out;
}

}  // namespace mdz
