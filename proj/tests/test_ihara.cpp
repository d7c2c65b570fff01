#include <catch2/catch_amalgamated.hpp>

#include <mdz/ihara.hpp>

using namespace mdz;

namespace {
Word W(const std::string& s) { return word_parse(s); }
}

TEST_CASE("sigma_bar generators") {
    CHECK(sigma_bar(0).body == NcPoly(W("-1")));

    // n = 1: -3(e0^2 e-1 - 2 e0 e-1 e0 + e-1 e0^2) + 4(e0^2 e1 - 2 e0 e1 e0 + e1 e0^2)
    NcPoly s3 = sigma_bar(1).body;
    CHECK(coeff(s3, W("0.0.-1")) == -3);
    CHECK(coeff(s3, W("0.-1.0")) == 6);
    CHECK(coeff(s3, W("-1.0.0")) == -3);
    CHECK(coeff(s3, W("0.0.1")) == 4);
    CHECK(coeff(s3, W("0.1.0")) == -8);
    CHECK(coeff(s3, W("1.0.0")) == 4);
    CHECK(s3.size() == 6);

    for (std::size_t n = 0; n <= 5; ++n) {
        NcPoly body = sigma_bar(n).body;
        for (const auto& [w, c] : body.terms()) {
            CHECK(weight(w) == 2 * n + 1);
            CHECK(depth(w) == 1);
        }
    }
}

TEST_CASE("circle action base rules") {
    NcPoly em1(W("-1"));
    // insertion part a e1 + e1 a* plus the trailing e1 a; for a = e_{-1}
    // the -e1 e-1 insertion cancels against the trailing term
    CHECK(circ(em1, W("1")) == NcPoly(W("-1.1")));
    CHECK(circ(em1, W("-1")) ==
          NcPoly(W("1.-1")) - NcPoly(W("-1.1")) + NcPoly(W("-1.-1")));
    // pure-zero tail: a o e0^n = e0^n a
    CHECK(circ(em1, W("0.0")) == NcPoly(W("0.0.-1")));
    CHECK(circ(em1, Word{}) == em1);
}

TEST_CASE("circle action of sigma_bar(0) on one-letter blocks") {
    // sigma1 o (e0^a0 e1 e0^a1) at (a0,a1) = (1,2)
    NcPoly em1(W("-1"));
    NcPoly got = circ(em1, W("0.1.0.0"));
    NcPoly want = NcPoly(W("0.-1.1.0.0")) - NcPoly(W("0.1.-1.0.0")) + NcPoly(W("0.1.0.0.-1"));
    CHECK(got == want);

    NcPoly got2 = circ(em1, W("0.-1.0.0"));
    NcPoly want2 = NcPoly(W("0.1.-1.0.0")) - NcPoly(W("0.-1.1.0.0")) + NcPoly(W("0.-1.0.0.-1"));
    CHECK(got2 == want2);
}

TEST_CASE("circ weight additivity and depth structure") {
    for (std::size_t n = 0; n <= 2; ++n) {
        NcPoly body = sigma_bar(n).body;
        for (const Word& y : all_words(4, 2)) {
            NcPoly im = circ(body, y);
            for (const auto& [w, c] : im.terms()) {
                CHECK(weight(w) == (2 * n + 1) + weight(y));
                CHECK(depth(w) == depth(y) + 1);
            }
            // depth-graded part at depth(y)+1 is the whole output
            CHECK(graded_part(im, (2 * n + 1) + weight(y), depth(y) + 1) == im);
        }
    }
}

TEST_CASE("dbar spot values") {
    // n1 = n2 = 2, derivation weight 1: vanishes
    CHECK(dbar(0, W("1.0.1.0")).is_zero());

    // (n1,n2) = (2,4), 2n = 2: 8 * e1 (e0)^2
    NcPoly got = dbar(1, W("1.0.1.0.0.0"));
    CHECK(got == NcPoly(W("1.0.0"), rat(8)));

    // weight(v) = 2n+1, depth 1: multiple of the empty word (or zero)
    NcPoly b = dbar(1, W("0.0.1"));
    for (const auto& [w, c] : b.terms()) CHECK(w == Word{});
}

TEST_CASE("dbar drops weight by 2n+1 and depth by 1") {
    for (std::size_t n = 0; n <= 1; ++n) {
        for (const Word& v : all_words(2 * n + 4, 2)) {
            NcPoly out = dbar(n, v);
            for (const auto& [w, c] : out.terms()) {
                CHECK(weight(w) == weight(v) - (2 * n + 1));
                CHECK(depth(w) == depth(v) - 1);
            }
        }
    }
}

TEST_CASE("closed forms match dual derivation, small weights") {
    // the full sweep to weight 30 runs in the acceptance suite
    for (long N = 4; N <= 14; N += 2) {
        for (long n1 = 1; n1 <= N - 1; ++n1) {
            long n2 = N - n1;
            if (n2 < 1) continue;
            Parity par = (n1 % 2 == 0 && n2 % 2 == 0) ? Parity::Even
                         : (n1 % 2 == 1 && n2 % 2 == 1) ? Parity::Odd
                                                        : Parity::Even;
            if ((n1 % 2) != (n2 % 2)) continue;  // mixed parity not covered
            for (std::size_t n = 0; 2 * static_cast<long>(n) + 2 <= N; ++n) {
                for (int e1 : {1, -1})
                    for (int e2 : {1, -1}) {
                        Word v = block_word({e1, e2},
                                            {static_cast<int>(n1 - 1), static_cast<int>(n2 - 1)});
                        CAPTURE(N, n1, n2, n, e1, e2);
                        CHECK(dbar(n, v) == closed_dbar_depth2(par, e1, e2, n1, n2, n));
                    }
            }
        }
    }
}

TEST_CASE("closed form rejects unsupported cases") {
    CHECK_THROWS(closed_dbar_depth2(Parity::Even, 1, 1, 3, 5, 1));
    CHECK_THROWS(closed_dbar_depth2(Parity::Odd, 1, 1, 2, 4, 1));
    CHECK_THROWS(closed_dbar_depth2(Parity::Odd, 2, 1, 3, 5, 1));
    CHECK_THROWS(closed_dbar_depth2(Parity::Odd, 1, 1, 3, 1, 5));
}
