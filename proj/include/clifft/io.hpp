#pragma once

#include <charconv>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "clifft/multivector.hpp"
#include "clifft/rep_matrix.hpp"

namespace clifft {

// Line-oriented text formats.
//
//   multivector                         matrix
//   algebra cl(n,n) | ccl(2n)           dim 4
//   n 2                                 basis right | left
//   scalar real | complex               scalar real | complex
//   term 0b0011 1.5 [im]                row a b c d ...
//   ...                                 ... dim rows ...
//   end                                 end
//
// Masks are accepted in decimal or 0b binary and always emitted in binary;
// numbers are emitted with 17 significant digits so re-parsing is exact.

// Syntactic problems: unreadable numbers, unknown directives.  Exit code 2
// at the command line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Semantic problems: sizes, bases or scalar domains that do not fit
// together.  Exit code 3 at the command line.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using MultivectorValue = std::variant<Multivector<double>, Multivector<std::complex<double>>>;
using MatrixValue = std::variant<RepMatrix<double>, RepMatrix<std::complex<double>>>;

enum class DocKind { multivector, matrix };

namespace iodetail {

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_mask(BladeMask mask, int n) {
    std::string s = "0b";
    for (int bit = 2 * n - 1; bit >= 0; --bit) s += ((mask >> bit) & 1) ? '1' : '0';
    if (n == 0) s += '0';
    return s;
}

inline double parse_number(const std::string& token, const char* field) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ParseError(std::string("malformed ") + field + " '" + token + "'");
    return v;
}

inline BladeMask parse_mask(const std::string& token) {
    BladeMask mask = 0;
    if (token.size() > 2 && token[0] == '0' && (token[1] == 'b' || token[1] == 'B')) {
        for (std::size_t i = 2; i < token.size(); ++i) {
            if (token[i] != '0' && token[i] != '1') throw ParseError("malformed term mask '" + token + "'");
            mask = (mask << 1) | BladeMask(token[i] - '0');
        }
        return mask;
    }
    const auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), mask);
    if (ec != std::errc{} || p != token.data() + token.size())
        throw ParseError("malformed term mask '" + token + "'");
    return mask;
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

struct LineReader {
    std::istringstream in;
    explicit LineReader(const std::string& text) : in(text) {}

    // Next non-blank line as tokens; empty vector when input is exhausted.
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            auto tokens = tokenize(line);
            if (!tokens.empty()) return tokens;
        }
        return {};
    }
};

}  // namespace iodetail

inline DocKind peek_doc_kind(const std::string& text) {
    iodetail::LineReader reader(text);
    const auto first = reader.next();
    if (first.empty()) throw ParseError("empty input");
    if (first[0] == "multivector") return DocKind::multivector;
    if (first[0] == "matrix") return DocKind::matrix;
    throw ParseError("unknown document tag '" + first[0] + "'");
}

inline MultivectorValue parse_multivector(const std::string& text) {
    iodetail::LineReader reader(text);
    auto line = reader.next();
    if (line.empty() || line[0] != "multivector") throw ParseError("expected 'multivector' header");

    std::optional<AlgebraKind> kind;
    std::optional<int> n;
    std::optional<bool> complex_scalar;
    struct Term {
        BladeMask mask;
        double re, im;
    };
    std::vector<Term> terms;
    bool closed = false;

    while (!(line = reader.next()).empty()) {
        const std::string& key = line[0];
        if (key == "algebra" && line.size() == 2) {
            if (line[1] == "cl(n,n)")
                kind = AlgebraKind::split;
            else if (line[1] == "ccl(2n)")
                kind = AlgebraKind::complex_full;
            else
                throw ParseError("malformed algebra '" + line[1] + "'");
        } else if (key == "n" && line.size() == 2) {
            const double v = iodetail::parse_number(line[1], "n");
            if (v != double(int(v))) throw ParseError("malformed n '" + line[1] + "'");
            if (v < 0 || v > 15) throw MismatchError("n out of supported range");
            n = int(v);
        } else if (key == "scalar" && line.size() == 2) {
            if (line[1] == "real")
                complex_scalar = false;
            else if (line[1] == "complex")
                complex_scalar = true;
            else
                throw ParseError("malformed scalar '" + line[1] + "'");
        } else if (key == "term") {
            if (line.size() != 3 && line.size() != 4) throw ParseError("malformed term line");
            Term t{iodetail::parse_mask(line[1]), iodetail::parse_number(line[2], "term value"), 0.0};
            if (line.size() == 4) t.im = iodetail::parse_number(line[3], "term value");
            terms.push_back(t);
        } else if (key == "end" && line.size() == 1) {
            closed = true;
            break;
        } else {
            throw ParseError("unknown directive '" + key + "'");
        }
    }
    if (!closed) throw ParseError("missing 'end'");
    if (!kind) throw ParseError("missing algebra field");
    if (!n) throw ParseError("missing n field");
    if (!complex_scalar) throw ParseError("missing scalar field");
    if (*kind == AlgebraKind::complex_full && !*complex_scalar)
        throw MismatchError("algebra ccl(2n) requires scalar complex");

    const std::size_t size = std::size_t{1} << (2 * *n);
    std::vector<std::uint8_t> seen(size, 0);
    for (const auto& t : terms) {
        if (t.mask >= size)
            throw MismatchError("term mask " + iodetail::format_mask(t.mask, *n) + " exceeds algebra dimension");
        if (seen[t.mask])
            throw ParseError("duplicate term mask " + iodetail::format_mask(t.mask, *n));
        seen[t.mask] = 1;
        if (!*complex_scalar && t.im != 0.0) throw MismatchError("imaginary part in a real-scalar file");
    }

    if (*complex_scalar) {
        Multivector<std::complex<double>> mv(*n, *kind);
        for (const auto& t : terms) mv.at(t.mask) = std::complex<double>(t.re, t.im);
        return mv;
    }
    Multivector<double> mv(*n, *kind);
    for (const auto& t : terms) mv.at(t.mask) = t.re;
    return mv;
}

inline MatrixValue parse_matrix(const std::string& text) {
    iodetail::LineReader reader(text);
    auto line = reader.next();
    if (line.empty() || line[0] != "matrix") throw ParseError("expected 'matrix' header");

    std::optional<std::size_t> dim;
    std::optional<SpinorBasis> basis;
    std::optional<bool> complex_scalar;
    std::vector<std::vector<double>> rows;
    bool closed = false;

    while (!(line = reader.next()).empty()) {
        const std::string& key = line[0];
        if (key == "dim" && line.size() == 2) {
            const double v = iodetail::parse_number(line[1], "dim");
            if (v < 1 || v != double(std::size_t(v)) || (std::size_t(v) & (std::size_t(v) - 1)) != 0)
                throw MismatchError("dim must be a power of two");
            dim = std::size_t(v);
        } else if (key == "basis" && line.size() == 2) {
            if (line[1] == "right")
                basis = SpinorBasis::right;
            else if (line[1] == "left")
                basis = SpinorBasis::left;
            else
                throw ParseError("malformed basis '" + line[1] + "'");
        } else if (key == "scalar" && line.size() == 2) {
            if (line[1] == "real")
                complex_scalar = false;
            else if (line[1] == "complex")
                complex_scalar = true;
            else
                throw ParseError("malformed scalar '" + line[1] + "'");
        } else if (key == "row") {
            std::vector<double> row;
            for (std::size_t i = 1; i < line.size(); ++i)
                row.push_back(iodetail::parse_number(line[i], "row entry"));
            rows.push_back(std::move(row));
        } else if (key == "end" && line.size() == 1) {
            closed = true;
            break;
        } else {
            throw ParseError("unknown directive '" + key + "'");
        }
    }
    if (!closed) throw ParseError("missing 'end'");
    if (!dim) throw ParseError("missing dim field");
    if (!basis) throw ParseError("missing basis field");
    if (!complex_scalar) throw ParseError("missing scalar field");
    if (rows.size() != *dim) throw MismatchError("row count does not match dim");
    const std::size_t per_row = *complex_scalar ? 2 * *dim : *dim;
    for (const auto& row : rows)
        if (row.size() != per_row) throw MismatchError("row length does not match dim");

    if (*complex_scalar) {
        RepMatrix<std::complex<double>> m(*dim, *basis);
        for (std::size_t r = 0; r < *dim; ++r)
            for (std::size_t c = 0; c < *dim; ++c) m(r, c) = {rows[r][2 * c], rows[r][2 * c + 1]};
        return m;
    }
    RepMatrix<double> m(*dim, *basis);
    for (std::size_t r = 0; r < *dim; ++r)
        for (std::size_t c = 0; c < *dim; ++c) m(r, c) = rows[r][c];
    return m;
}

namespace iodetail {

inline void emit_term_values(std::ostream& os, double v) { os << ' ' << format_number(v); }
inline void emit_term_values(std::ostream& os, std::complex<double> v) {
    os << ' ' << format_number(v.real()) << ' ' << format_number(v.imag());
}

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(std::complex<double> v) { return v == std::complex<double>{}; }

}  // namespace iodetail

template <Scalar S>
void emit_multivector(std::ostream& os, const Multivector<S>& mv) {
    os << "multivector\n";
    os << "algebra " << (mv.kind() == AlgebraKind::split ? "cl(n,n)" : "ccl(2n)") << "\n";
    os << "n " << mv.n() << "\n";
    os << "scalar " << (scalar_traits<S>::is_complex ? "complex" : "real") << "\n";
    for (std::size_t m = 0; m < mv.size(); ++m) {
        if (iodetail::is_zero(mv[m])) continue;
        os << "term " << iodetail::format_mask(m, mv.n());
        iodetail::emit_term_values(os, mv[m]);
        os << "\n";
    }
    os << "end\n";
}

template <Scalar S>
void emit_matrix(std::ostream& os, const RepMatrix<S>& m) {
    os << "matrix\n";
    os << "dim " << m.dim() << "\n";
    os << "basis " << (m.basis() == SpinorBasis::right ? "right" : "left") << "\n";
    os << "scalar " << (scalar_traits<S>::is_complex ? "complex" : "real") << "\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        os << "row";
        for (std::size_t c = 0; c < m.dim(); ++c) iodetail::emit_term_values(os, m(r, c));
        os << "\n";
    }
    os << "end\n";
}

}  // namespace clifft
