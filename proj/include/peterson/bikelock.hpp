#pragma once

#include "peterson/combinatorics.hpp"

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace peterson::bikelock {

/// Parameters of one instance of the binomial identity. Valid instances
/// have m, n >= 0 and w + x == y + z; w, x, y, z may be negative, in which
/// case both sides vanish.
struct Params {
    long m = 0, n = 0, w = 0, x = 0, y = 0, z = 0;

    bool balanced() const { return w + x == y + z; }
    long width() const { return w + m + n; }
    std::string str() const;
};

/// Two-row matrix over the letter alphabet: top row drawn from
/// "OPQRST-" and bottom row from "UC-", equal widths.
struct LetterMatrix {
    std::string top, bottom;
    bool operator==(const LetterMatrix&) const = default;
    std::string str() const { return top + "|" + bottom; }
};

/// Four-row matrix over "01*", all rows of equal width.
struct BitMatrix {
    std::array<std::string, 4> rows;
    bool operator==(const BitMatrix&) const = default;
    std::string str() const;
};

/// Product of the four binomials (the closed side counted by the bit
/// matrices).
BigInt lhs_count(const Params& p);

/// Double sum of binomial times six-part multinomial (the side counted by
/// the letter matrices).
BigInt rhs_count(const Params& p);

/// Streams every letter matrix of the family for p. The visitor receives
/// a reference to a reused buffer; copy it to keep it.
void for_each_S(const Params& p, const std::function<void(const LetterMatrix&)>& fn);

/// Streams every bit matrix of the family for p, same buffer contract.
void for_each_V(const Params& p, const std::function<void(const BitMatrix&)>& fn);

/// Materialized variants; meant for desk-size parameters.
std::vector<LetterMatrix> enumerate_S(const Params& p);
std::vector<BitMatrix> enumerate_V(const Params& p);

/// The composite right-shift move on letter matrices: columns are scanned
/// left to right; a column headed by O shifts the bottom row, a column
/// with U under anything but O shifts the top row, each cyclically within
/// the columns from that point rightward.
LetterMatrix bl_minus(const LetterMatrix& m);

/// The composite right-shift move on bit matrices; the column pattern
/// decides which rows rotate.
BitMatrix bl_star(const BitMatrix& m);

/// Pushes the letters of each row back to the left, placeholders last.
/// Inverts bl_minus on its image.
LetterMatrix left_align(const LetterMatrix& m);

/// Membership test for the image of bl_minus: only the seven legal column
/// shapes, no placeholder column directly followed by an O column, and
/// letter counts matching the family tables for some admissible (i, j).
bool characterize_S_image(const Params& p, const LetterMatrix& m);

/// Membership test for the image of bl_star, analogous: seven legal
/// column patterns, one forbidden adjacency, row counts as tabulated.
bool characterize_V_image(const Params& p, const BitMatrix& m);

/// The column-by-column translation from shifted bit matrices to shifted
/// letter matrices. Throws std::invalid_argument on a column outside the
/// seven legal patterns.
LetterMatrix column_correspondence(const BitMatrix& m);

/// Outcome of checking one parameter point. The four counts must agree;
/// when the bijection sweep runs it checks that bl_minus and bl_star are
/// injective with exactly the characterized images and that the column
/// translation matches them up one to one.
struct Certificate {
    Params params;
    BigInt lhs, rhs, s_count, v_count;
    bool counts_equal = false;
    bool vacuous = false;
    bool bijection_checked = false;
    bool bijection_ok = false;
    std::string failure;
    double elapsed_ms = 0;
    std::vector<std::pair<BitMatrix, LetterMatrix>> pairing;
};

/// Runs the full check at one parameter point. Throws
/// std::invalid_argument unless m, n >= 0 and the params are balanced.
/// The bijection sweep requires width() <= 12 (the packed representation
/// used for the set comparisons); with_trace additionally records the
/// matched pairs, which is only sensible for small counts.
Certificate verify_identity(const Params& p, bool check_bijection, bool with_trace = false);

} // namespace peterson::bikelock
