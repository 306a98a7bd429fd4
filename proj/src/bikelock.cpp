#include "peterson/bikelock.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace peterson::bikelock {

namespace {

// Letter-side symbols get small codes so a column packs into 5 bits:
// top symbol times 3 plus bottom symbol.
int top_code(char ch) {
    switch (ch) {
    case 'O': return 0;
    case 'P': return 1;
    case 'Q': return 2;
    case 'R': return 3;
    case 'S': return 4;
    case 'T': return 5;
    case '-': return 6;
    default: return -1;
    }
}

int bottom_code(char ch) {
    switch (ch) {
    case 'U': return 0;
    case 'C': return 1;
    case '-': return 2;
    default: return -1;
    }
}

int letter_column_code(char t, char b) {
    int tc = top_code(t), bc = bottom_code(b);
    if (tc < 0 || bc < 0) return -1;
    return tc * 3 + bc;
}

constexpr int kColDashU = 6 * 3 + 0; // ('-','U')
constexpr int kColODash = 0 * 3 + 2; // ('O','-')

// The seven legal letter columns, keyed by packed code.
bool legal_letter_column(int code) {
    switch (code) {
    case kColDashU:
    case kColODash:
    case 1 * 3 + 1: // P over C
    case 2 * 3 + 1: // Q over C
    case 3 * 3 + 1: // R over C
    case 4 * 3 + 1: // S over C
    case 5 * 3 + 1: // T over C
        return true;
    default: return false;
    }
}

int bit_code(char ch) {
    switch (ch) {
    case '0': return 0;
    case '1': return 1;
    case '*': return 2;
    default: return -1;
    }
}

int bit_column_code(char r0, char r1, char r2, char r3) {
    int a = bit_code(r0), b = bit_code(r1), c = bit_code(r2), d = bit_code(r3);
    if (a < 0 || b < 0 || c < 0 || d < 0) return -1;
    return ((a * 3 + b) * 3 + c) * 3 + d;
}

int pattern_code(const char* pat) { return bit_column_code(pat[0], pat[1], pat[2], pat[3]); }

// Which rows the bit-side move rotates, per column pattern.
std::array<std::uint8_t, 81> build_star_rows() {
    std::array<std::uint8_t, 81> t{};
    auto set = [&](const char* pat, std::uint8_t rows) { t[pattern_code(pat)] = rows; };
    set("0110", 0b0001);
    set("1110", 0b0001);
    set("1*00", 0b0001);
    set("1001", 0b0010);
    set("1101", 0b0010);
    set("*100", 0b0010);
    set("0101", 0b0100);
    set("0111", 0b0100);
    set("001*", 0b0100);
    set("1010", 0b1000);
    set("1011", 0b1000);
    set("00*1", 0b1000);
    set("1000", 0b0011);
    set("0100", 0b0011);
    set("1100", 0b0011);
    set("0000", 0b1100);
    set("0010", 0b1100);
    set("0001", 0b1100);
    set("0011", 0b1100);
    return t;
}

const std::array<std::uint8_t, 81>& star_rows() {
    static const std::array<std::uint8_t, 81> t = build_star_rows();
    return t;
}

// The seven legal bit columns and their letter translations.
struct BitColumnType {
    const char* pattern;
    char top, bottom;
};

constexpr BitColumnType kBitColumns[7] = {
    {"*110", 'T', 'C'}, {"1*01", 'S', 'C'}, {"01*1", 'P', 'C'}, {"101*", 'Q', 'C'},
    {"**00", '-', 'U'}, {"00**", 'O', '-'}, {"1111", 'R', 'C'},
};

// code -> packed letter-column code, or -1 when the column is illegal.
std::array<int, 81> build_bit_to_letter() {
    std::array<int, 81> t;
    t.fill(-1);
    for (const auto& col : kBitColumns)
        t[pattern_code(col.pattern)] = letter_column_code(col.top, col.bottom);
    return t;
}

const std::array<int, 81>& bit_to_letter() {
    static const std::array<int, 81> t = build_bit_to_letter();
    return t;
}

const int kColStarStar = pattern_code("**00");
const int kColZeroStar = pattern_code("00**");

struct LetterCounts {
    long o, p, q, r, s, t, u, c;
    bool admissible() const {
        return o >= 0 && p >= 0 && q >= 0 && r >= 0 && s >= 0 && t >= 0 && u >= 0 && c >= 0;
    }
};

LetterCounts letter_counts(const Params& p, long i, long j) {
    return {p.m - i,         i, p.y - p.x + i, p.x - i - j,
            p.z - p.x + j,   j, p.n - j,       p.w + i + j};
}

struct BitRowCounts {
    long ones, zeros, stars;
    bool admissible() const { return ones >= 0 && zeros >= 0 && stars >= 0; }
};

std::array<BitRowCounts, 4> bit_row_counts(const Params& p) {
    return {{{p.w, p.m, p.n},
             {p.x, p.y - p.x + p.m, p.z - p.x + p.n},
             {p.y, p.z - p.x + p.n, p.m},
             {p.z, p.n, p.y - p.x + p.m}}};
}

void require_valid(const Params& p) {
    if (p.m < 0 || p.n < 0)
        throw std::invalid_argument("identity parameters need m, n >= 0, got " + p.str());
    if (!p.balanced())
        throw std::invalid_argument("identity parameters need w + x == y + z, got " + p.str());
}

void rotate_right(std::string& row, size_t from) {
    if (row.size() - from >= 2) std::rotate(row.begin() + from, row.end() - 1, row.end());
}

void bl_minus_inplace(LetterMatrix& m) {
    for (size_t k = 0; k < m.top.size(); ++k) {
        if (m.top[k] == 'O')
            rotate_right(m.bottom, k);
        else if (m.bottom[k] == 'U')
            rotate_right(m.top, k);
    }
}

void bl_star_inplace(BitMatrix& m) {
    for (size_t k = 0; k < m.rows[0].size(); ++k) {
        int code = bit_column_code(m.rows[0][k], m.rows[1][k], m.rows[2][k], m.rows[3][k]);
        std::uint8_t rows = code >= 0 ? star_rows()[static_cast<size_t>(code)] : 0;
        for (int r = 0; r < 4; ++r)
            if (rows >> r & 1) rotate_right(m.rows[static_cast<size_t>(r)], k);
    }
}

} // namespace

std::string Params::str() const {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " w=" + std::to_string(w) +
           " x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z);
}

std::string BitMatrix::str() const {
    return rows[0] + "|" + rows[1] + "|" + rows[2] + "|" + rows[3];
}

BigInt lhs_count(const Params& p) {
    return binomial(p.w + p.m, p.w) * binomial(p.y + p.m, p.x) * binomial(p.w + p.n, p.y) *
           binomial(p.z + p.n, p.z);
}

BigInt rhs_count(const Params& p) {
    BigInt total = 0;
    for (long i = 0; i <= p.m; ++i)
        for (long j = 0; j <= p.n; ++j)
            total += binomial(p.w + i + p.n, p.w + i + j) *
                     multinomial(p.w + p.m + j,
                                 {i, j, p.m - i, p.x - i - j, p.z - p.x + j, p.y - p.x + i});
    return total;
}

void for_each_S(const Params& p, const std::function<void(const LetterMatrix&)>& fn) {
    require_valid(p);
    if (p.width() < 0) return;
    const size_t width = static_cast<size_t>(p.width());
    for (long i = 0; i <= p.m; ++i) {
        for (long j = 0; j <= p.n; ++j) {
            const LetterCounts k = letter_counts(p, i, j);
            if (!k.admissible()) continue;
            std::string top_letters = std::string(static_cast<size_t>(k.o), 'O') +
                                      std::string(static_cast<size_t>(k.p), 'P') +
                                      std::string(static_cast<size_t>(k.q), 'Q') +
                                      std::string(static_cast<size_t>(k.r), 'R') +
                                      std::string(static_cast<size_t>(k.s), 'S') +
                                      std::string(static_cast<size_t>(k.t), 'T');
            std::string bottom_letters = std::string(static_cast<size_t>(k.c), 'C') +
                                         std::string(static_cast<size_t>(k.u), 'U');
            std::sort(top_letters.begin(), top_letters.end());
            std::sort(bottom_letters.begin(), bottom_letters.end());
            LetterMatrix buf;
            buf.top = top_letters + std::string(width - top_letters.size(), '-');
            buf.bottom = bottom_letters + std::string(width - bottom_letters.size(), '-');
            do {
                std::copy(top_letters.begin(), top_letters.end(), buf.top.begin());
                do {
                    std::copy(bottom_letters.begin(), bottom_letters.end(), buf.bottom.begin());
                    fn(buf);
                } while (std::next_permutation(bottom_letters.begin(), bottom_letters.end()));
            } while (std::next_permutation(top_letters.begin(), top_letters.end()));
        }
    }
}

void for_each_V(const Params& p, const std::function<void(const BitMatrix&)>& fn) {
    require_valid(p);
    if (p.width() < 0) return;
    const size_t width = static_cast<size_t>(p.width());
    const auto counts = bit_row_counts(p);
    std::array<std::string, 4> numbers;
    BitMatrix buf;
    for (int r = 0; r < 4; ++r) {
        if (!counts[static_cast<size_t>(r)].admissible()) return;
        const auto& k = counts[static_cast<size_t>(r)];
        numbers[static_cast<size_t>(r)] = std::string(static_cast<size_t>(k.zeros), '0') +
                                          std::string(static_cast<size_t>(k.ones), '1');
        buf.rows[static_cast<size_t>(r)] =
            numbers[static_cast<size_t>(r)] +
            std::string(width - numbers[static_cast<size_t>(r)].size(), '*');
    }
    auto level = [&](auto&& self, int r) -> void {
        std::string& digits = numbers[static_cast<size_t>(r)];
        do {
            std::copy(digits.begin(), digits.end(), buf.rows[static_cast<size_t>(r)].begin());
            if (r == 3)
                fn(buf);
            else
                self(self, r + 1);
        } while (std::next_permutation(digits.begin(), digits.end()));
    };
    level(level, 0);
}

std::vector<LetterMatrix> enumerate_S(const Params& p) {
    std::vector<LetterMatrix> out;
    for_each_S(p, [&](const LetterMatrix& m) { out.push_back(m); });
    return out;
}

std::vector<BitMatrix> enumerate_V(const Params& p) {
    std::vector<BitMatrix> out;
    for_each_V(p, [&](const BitMatrix& m) { out.push_back(m); });
    return out;
}

LetterMatrix bl_minus(const LetterMatrix& m) {
    if (m.top.size() != m.bottom.size())
        throw std::invalid_argument("letter matrix with ragged rows");
    LetterMatrix out = m;
    bl_minus_inplace(out);
    return out;
}

BitMatrix bl_star(const BitMatrix& m) {
    for (int r = 1; r < 4; ++r)
        if (m.rows[static_cast<size_t>(r)].size() != m.rows[0].size())
            throw std::invalid_argument("bit matrix with ragged rows");
    BitMatrix out = m;
    bl_star_inplace(out);
    return out;
}

LetterMatrix left_align(const LetterMatrix& m) {
    LetterMatrix out;
    auto pull = [](const std::string& row) {
        std::string r;
        for (char ch : row)
            if (ch != '-') r += ch;
        r.resize(row.size(), '-');
        return r;
    };
    out.top = pull(m.top);
    out.bottom = pull(m.bottom);
    return out;
}

bool characterize_S_image(const Params& p, const LetterMatrix& m) {
    if (m.top.size() != m.bottom.size()) return false;
    if (static_cast<long>(m.top.size()) != p.width()) return false;
    long tally[7 * 3] = {};
    int prev = -1;
    for (size_t k = 0; k < m.top.size(); ++k) {
        int code = letter_column_code(m.top[k], m.bottom[k]);
        if (code < 0 || !legal_letter_column(code)) return false;
        if (prev == kColDashU && code == kColODash) return false;
        ++tally[code];
        prev = code;
    }
    const long i = tally[1 * 3 + 1]; // P columns
    const long j = tally[5 * 3 + 1]; // T columns
    const LetterCounts k = letter_counts(p, i, j);
    if (!k.admissible()) return false;
    return tally[kColODash] == k.o && tally[2 * 3 + 1] == k.q && tally[3 * 3 + 1] == k.r &&
           tally[4 * 3 + 1] == k.s && tally[kColDashU] == k.u;
}

bool characterize_V_image(const Params& p, const BitMatrix& m) {
    for (int r = 1; r < 4; ++r)
        if (m.rows[static_cast<size_t>(r)].size() != m.rows[0].size()) return false;
    if (static_cast<long>(m.rows[0].size()) != p.width()) return false;
    int prev = -1;
    for (size_t k = 0; k < m.rows[0].size(); ++k) {
        int code = bit_column_code(m.rows[0][k], m.rows[1][k], m.rows[2][k], m.rows[3][k]);
        if (code < 0 || bit_to_letter()[static_cast<size_t>(code)] < 0) return false;
        if (prev == kColStarStar && code == kColZeroStar) return false;
        prev = code;
    }
    const auto counts = bit_row_counts(p);
    for (int r = 0; r < 4; ++r) {
        const std::string& row = m.rows[static_cast<size_t>(r)];
        long ones = std::count(row.begin(), row.end(), '1');
        long zeros = std::count(row.begin(), row.end(), '0');
        long stars = std::count(row.begin(), row.end(), '*');
        const auto& k = counts[static_cast<size_t>(r)];
        if (ones != k.ones || zeros != k.zeros || stars != k.stars) return false;
    }
    return true;
}

LetterMatrix column_correspondence(const BitMatrix& m) {
    LetterMatrix out;
    out.top.reserve(m.rows[0].size());
    out.bottom.reserve(m.rows[0].size());
    for (size_t k = 0; k < m.rows[0].size(); ++k) {
        int code = bit_column_code(m.rows[0][k], m.rows[1][k], m.rows[2][k], m.rows[3][k]);
        int letter = code >= 0 ? bit_to_letter()[static_cast<size_t>(code)] : -1;
        if (letter < 0)
            throw std::invalid_argument("bit matrix column " + std::to_string(k + 1) +
                                        " has no letter translation in " + m.str());
        out.top += "OPQRST-"[letter / 3];
        out.bottom += "UC-"[letter % 3];
    }
    return out;
}

namespace {

std::uint64_t pack_letter_matrix(const LetterMatrix& m) {
    std::uint64_t acc = 0;
    for (size_t k = 0; k < m.top.size(); ++k)
        acc = acc << 5 | static_cast<std::uint64_t>(letter_column_code(m.top[k], m.bottom[k]));
    return acc;
}

std::pair<std::uint64_t, std::uint64_t> pack_bit_matrix(const BitMatrix& m) {
    std::pair<std::uint64_t, std::uint64_t> acc{0, 0};
    for (size_t k = 0; k < m.rows[0].size(); ++k) {
        std::uint64_t byte = 0;
        for (int r = 0; r < 4; ++r)
            byte = byte << 2 |
                   static_cast<std::uint64_t>(bit_code(m.rows[static_cast<size_t>(r)][k]));
        (k < 6 ? acc.first : acc.second) = (k < 6 ? acc.first : acc.second) << 8 | byte;
    }
    return acc;
}

// Letter translation of a shifted bit matrix, packed without building the
// intermediate LetterMatrix. Returns false on an untranslatable column.
bool pack_translated(const BitMatrix& m, std::uint64_t& out) {
    std::uint64_t acc = 0;
    for (size_t k = 0; k < m.rows[0].size(); ++k) {
        int code = bit_column_code(m.rows[0][k], m.rows[1][k], m.rows[2][k], m.rows[3][k]);
        int letter = code >= 0 ? bit_to_letter()[static_cast<size_t>(code)] : -1;
        if (letter < 0) return false;
        acc = acc << 5 | static_cast<std::uint64_t>(letter);
    }
    out = acc;
    return true;
}

// All matrices satisfying the image characterizations, generated column
// multiset by column multiset. `codes` carries one entry per column type;
// arrangements violating the (before, after) adjacency ban are skipped.
template <typename Packed, typename PackFn>
void arrangements(std::vector<int> codes, int before, int after, const PackFn& pack,
                  std::vector<Packed>& out) {
    std::sort(codes.begin(), codes.end());
    do {
        bool ok = true;
        for (size_t k = 0; k + 1 < codes.size(); ++k)
            if (codes[k] == before && codes[k + 1] == after) {
                ok = false;
                break;
            }
        if (ok) out.push_back(pack(codes));
    } while (std::next_permutation(codes.begin(), codes.end()));
}

std::vector<std::uint64_t> characterized_letter_matrices(const Params& p) {
    std::vector<std::uint64_t> out;
    for (long i = 0; i <= p.m; ++i) {
        for (long j = 0; j <= p.n; ++j) {
            const LetterCounts k = letter_counts(p, i, j);
            if (!k.admissible()) continue;
            std::vector<int> codes;
            auto add = [&](long count, int code) {
                codes.insert(codes.end(), static_cast<size_t>(count), code);
            };
            add(k.o, kColODash);
            add(k.p, 1 * 3 + 1);
            add(k.q, 2 * 3 + 1);
            add(k.r, 3 * 3 + 1);
            add(k.s, 4 * 3 + 1);
            add(k.t, 5 * 3 + 1);
            add(k.u, kColDashU);
            arrangements<std::uint64_t>(
                std::move(codes), kColDashU, kColODash,
                [](const std::vector<int>& cs) {
                    std::uint64_t acc = 0;
                    for (int c : cs) acc = acc << 5 | static_cast<std::uint64_t>(c);
                    return acc;
                },
                out);
        }
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
characterized_bit_matrices(const Params& p) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const int codes7[7] = {pattern_code("*110"), pattern_code("1*01"), pattern_code("01*1"),
                           pattern_code("101*"), pattern_code("**00"), pattern_code("00**"),
                           pattern_code("1111")};
    for (long i = 0; i <= p.m; ++i) {
        for (long j = 0; j <= p.n; ++j) {
            const LetterCounts k = letter_counts(p, i, j);
            if (!k.admissible()) continue;
            // Same multiplicities as the letter side, routed through the
            // column translation.
            const long mult[7] = {k.t, k.s, k.p, k.q, k.u, k.o, k.r};
            std::vector<int> codes;
            for (int t = 0; t < 7; ++t)
                codes.insert(codes.end(), static_cast<size_t>(mult[t]), codes7[t]);
            arrangements<std::pair<std::uint64_t, std::uint64_t>>(
                std::move(codes), kColStarStar, kColZeroStar,
                [](const std::vector<int>& cs) {
                    std::pair<std::uint64_t, std::uint64_t> acc{0, 0};
                    for (size_t k2 = 0; k2 < cs.size(); ++k2) {
                        int code = cs[k2];
                        std::uint64_t byte = 0;
                        for (int shift = 3; shift >= 0; --shift) {
                            // base-3 digits back out of the packed code
                            int digit = code;
                            for (int s = 0; s < shift; ++s) digit /= 3;
                            byte = byte << 2 | static_cast<std::uint64_t>(digit % 3);
                        }
                        (k2 < 6 ? acc.first : acc.second) =
                            (k2 < 6 ? acc.first : acc.second) << 8 | byte;
                    }
                    return acc;
                },
                out);
        }
    }
    return out;
}

struct SweepState {
    bool ok = true;
    std::string failure;
    void fail(std::string msg) {
        if (ok) {
            ok = false;
            failure = std::move(msg);
        }
    }
};

template <typename Vec>
void check_injective_and_matching(SweepState& state, Vec& got, Vec expected, const char* who) {
    std::sort(got.begin(), got.end());
    if (std::adjacent_find(got.begin(), got.end()) != got.end())
        state.fail(std::string(who) + " is not injective");
    std::sort(expected.begin(), expected.end());
    if (got != expected)
        state.fail(std::string(who) + " image differs from its characterization");
}

} // namespace

Certificate verify_identity(const Params& p, bool check_bijection, bool with_trace) {
    require_valid(p);
    const auto t0 = std::chrono::steady_clock::now();

    Certificate cert;
    cert.params = p;
    cert.lhs = lhs_count(p);
    cert.rhs = rhs_count(p);

    std::uint64_t s_count = 0, v_count = 0;
    for_each_S(p, [&](const LetterMatrix&) { ++s_count; });
    for_each_V(p, [&](const BitMatrix&) { ++v_count; });
    cert.s_count = s_count;
    cert.v_count = v_count;
    cert.counts_equal =
        cert.lhs == cert.rhs && cert.lhs == cert.s_count && cert.lhs == cert.v_count;
    cert.vacuous = cert.counts_equal && cert.lhs == 0;
    SweepState state;
    if (!cert.counts_equal)
        state.fail("counts disagree: lhs=" + cert.lhs.str() + " rhs=" + cert.rhs.str() +
                   " |S|=" + cert.s_count.str() + " |V|=" + cert.v_count.str());

    if (check_bijection) {
        if (p.width() > 12)
            throw std::invalid_argument("bijection sweep supports width up to 12, got " +
                                        std::to_string(p.width()));
        cert.bijection_checked = true;

        std::vector<std::uint64_t> shifted_letters;
        {
            LetterMatrix scratch;
            for_each_S(p, [&](const LetterMatrix& m) {
                scratch = m;
                bl_minus_inplace(scratch);
                if (state.ok && !characterize_S_image(p, scratch))
                    state.fail("shifted letter matrix fails the image test: " + m.str() +
                               " -> " + scratch.str());
                shifted_letters.push_back(pack_letter_matrix(scratch));
            });
            check_injective_and_matching(state, shifted_letters,
                                         characterized_letter_matrices(p), "letter-side shift");
        }

        std::vector<std::uint64_t> translated;
        {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> shifted_bits;
            BitMatrix scratch;
            for_each_V(p, [&](const BitMatrix& m) {
                scratch = m;
                bl_star_inplace(scratch);
                if (state.ok && !characterize_V_image(p, scratch))
                    state.fail("shifted bit matrix fails the image test: " + m.str() + " -> " +
                               scratch.str());
                shifted_bits.push_back(pack_bit_matrix(scratch));
                std::uint64_t t = 0;
                if (pack_translated(scratch, t))
                    translated.push_back(t);
                else if (state.ok)
                    state.fail("shifted bit matrix has no letter translation: " + scratch.str());
            });
            check_injective_and_matching(state, shifted_bits, characterized_bit_matrices(p),
                                         "bit-side shift");
        }

        std::sort(translated.begin(), translated.end());
        std::sort(shifted_letters.begin(), shifted_letters.end());
        if (translated != shifted_letters)
            state.fail("column translation does not pair the two shifted families");

        cert.bijection_ok = state.ok;

        if (with_trace && state.ok) {
            for_each_V(p, [&](const BitMatrix& m) {
                cert.pairing.emplace_back(m, left_align(column_correspondence(bl_star(m))));
            });
        }
    }

    cert.failure = state.failure;
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                t0)
                          .count();
    return cert;
}

} // namespace peterson::bikelock
