#include "ldi/codefile.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace ldi {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string &what) {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::int64_t parse_int(const Token &tok, std::size_t line) {
    std::int64_t v = 0;
    std::string_view digits = tok.text;
    if (digits.size() > 1 && digits[0] == '+' && digits[1] != '-') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        syntax_error(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    }
    return v;
}

bool starts_row(std::string_view tok) {
    return !tok.empty() && (tok[0] == '-' || tok[0] == '+' || tok[0] == '|' || (tok[0] >= '0' && tok[0] <= '9'));
}

}  // namespace

CodeSpec parse_code_file(std::string_view text) {
    std::map<std::string, std::int64_t, std::less<>> header;
    bool unbounded = false;
    std::vector<std::vector<std::int64_t>> rows;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (starts_row(toks[0].text)) {
            std::vector<std::int64_t> row;
            for (const auto &t : toks) {
                if (t.text == "|") continue;
                row.push_back(parse_int(t, line_no));
            }
            rows.push_back(std::move(row));
            continue;
        }
        if (!rows.empty()) syntax_error(line_no, toks[0].column, "header line after matrix rows");

        const std::string_view key = toks[0].text;
        if (key == "entries") {
            if (toks.size() != 2 || toks[1].text != "unbounded") {
                syntax_error(line_no, toks[0].column, "expected 'entries unbounded'");
            }
            unbounded = true;
            continue;
        }
        if (key != "q" && key != "n" && key != "k" && key != "c" && key != "d") {
            syntax_error(line_no, toks[0].column, "unknown header '" + std::string(key) + "'");
        }
        if (toks.size() != 2) syntax_error(line_no, toks[0].column, "header '" + std::string(key) + "' takes one value");
        if (header.contains(key)) syntax_error(line_no, toks[0].column, "duplicate header '" + std::string(key) + "'");
        const std::int64_t v = parse_int(toks[1], line_no);
        if (v < 0) syntax_error(line_no, toks[1].column, "header values must be non-negative");
        header.emplace(std::string(key), v);
    }

    for (const char *required : {"q", "n", "k"}) {
        if (!header.contains(required)) syntax_error(line_no, 1, std::string("missing header '") + required + "'");
    }
    const std::int64_t qv = header.at("q"), n = header.at("n"), k = header.at("k");
    if (!is_prime(qv)) throw Error(ErrorKind::NonPrimeModulus, "q = " + std::to_string(qv) + " is not prime");
    if (k == 0 || rows.empty()) syntax_error(line_no, 1, "a code file needs at least one generator row");
    if (n == 0) syntax_error(line_no, 1, "n must be positive");
    if (static_cast<std::int64_t>(rows.size()) != k) {
        throw Error(ErrorKind::HeaderMismatch,
                    "header declares k = " + std::to_string(k) + " but the body has " + std::to_string(rows.size()) +
                        " rows");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<std::int64_t>(rows[r].size()) != 2 * n) {
            throw Error(ErrorKind::HeaderMismatch, "row " + std::to_string(r + 1) + " has " +
                                                       std::to_string(rows[r].size()) + " entries, expected 2n = " +
                                                       std::to_string(2 * n));
        }
    }
    if (k > 2 * n) throw Error(ErrorKind::HeaderMismatch, "k exceeds 2n");

    DeclaredParams declared;
    declared.k = k;
    if (auto it = header.find("c"); it != header.end()) declared.c = it->second;
    if (auto it = header.find("d"); it != header.end()) declared.d = it->second;
    return CodeSpec(PrimeModulus(qv), static_cast<std::size_t>(n), IntMatrix::from_rows(rows), unbounded, declared);
}

std::string format_code_file(const CodeSpec &c, const std::vector<std::string> &comments) {
    std::ostringstream out;
    for (const auto &line : comments) out << "# " << line << '\n';
    out << "q " << c.q().value() << '\n' << "n " << c.n() << '\n' << "k " << c.k() << '\n';
    if (c.declared().c) out << "c " << *c.declared().c << '\n';
    if (c.declared().d) out << "d " << *c.declared().d << '\n';
    if (c.unbounded_entries()) out << "entries unbounded\n";
    const IntMatrix &g = c.generators();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t col = 0; col < g.cols(); ++col) {
            if (col == c.n()) out << " |";
            if (col != 0) out << ' ';
            out << g(r, col);
        }
        out << '\n';
    }
    return out.str();
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::DimensionMismatch, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

RatesReport rates(std::size_t n, std::size_t k, std::size_t c) {
    const auto sn = static_cast<std::int64_t>(n), sk = static_cast<std::int64_t>(k), sc = static_cast<std::int64_t>(c);
    RatesReport r;
    r.n = n;
    r.k = k;
    r.c = c;
    r.entanglement_assisted = Rational(sn + sc - sk, sn);
    r.tradeoff_rate = r.entanglement_assisted;
    r.tradeoff_entanglement = Rational(sc, sn);
    r.catalytic = Rational(sn - sk, sn);
    return r;
}

}  // namespace ldi
