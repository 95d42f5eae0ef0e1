#include "alpwave/io.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace alpwave {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string rational_str(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

[[noreturn]] void bad_value(const std::string& s) {
    throw std::invalid_argument("cannot parse exact value '" + s + "'");
}

/// One term of the grammar: [-]num[/den][*sqrt(m)] or [-]sqrt(m).
ExactScalar parse_term(std::string s) {
    s = trimmed(s);
    if (s.empty()) bad_value(s);
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        s = trimmed(s.substr(1));
    }
    Rational rat = 1;
    std::string surd_part;
    const std::size_t star = s.find('*');
    if (star != std::string::npos) {
        surd_part = trimmed(s.substr(star + 1));
        s = trimmed(s.substr(0, star));
    } else if (s.rfind("sqrt(", 0) == 0) {
        surd_part = s;
        s = "";
    }
    if (!s.empty()) {
        if (s.find_first_not_of("0123456789/") != std::string::npos) bad_value(s);
        try {
            rat = Rational(s);
        } catch (...) {
            bad_value(s);
        }
    }
    Int surd = 1;
    if (!surd_part.empty()) {
        if (surd_part.rfind("sqrt(", 0) != 0 || surd_part.back() != ')') bad_value(surd_part);
        const std::string inner = surd_part.substr(5, surd_part.size() - 6);
        if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
            bad_value(surd_part);
        surd = Int(inner);
    }
    if (neg) rat = -rat;
    return ExactScalar(rat, surd);
}

}  // namespace

std::string to_string(const ExactScalar& v) {
    if (v.is_zero()) return "0";
    if (v.is_rational()) return rational_str(v.rational_part());
    const Rational& r = v.rational_part();
    const std::string root = "sqrt(" + v.surd().str() + ")";
    if (r == 1) return root;
    if (r == -1) return "-" + root;
    return rational_str(r) + "*" + root;
}

std::string to_string(const SurdSum& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [surd, rat] : v.terms()) {
        const ExactScalar term(rat < 0 ? Rational(-rat) : rat, surd);
        if (out.empty()) {
            out = (rat < 0 ? "-" : "") + to_string(term);
        } else {
            out += (rat < 0 ? " - " : " + ") + to_string(term);
        }
    }
    return out;
}

ExactScalar parse_exact_scalar(const std::string& s) { return parse_term(s); }

SurdSum parse_surd_sum(const std::string& s) {
    SurdSum sum;
    std::string rest = trimmed(s);
    if (rest.empty()) bad_value(s);
    bool negate = false;
    while (!rest.empty()) {
        // next top-level " + " / " - " separator (a leading '-' binds to the term)
        std::size_t cut = std::string::npos;
        for (std::size_t k = 1; k + 1 < rest.size(); ++k)
            if (rest[k - 1] == ' ' && (rest[k] == '+' || rest[k] == '-') && rest[k + 1] == ' ') {
                cut = k;
                break;
            }
        const std::string piece = cut == std::string::npos ? rest : rest.substr(0, cut - 1);
        ExactScalar term = parse_term(piece);
        sum += negate ? -term : term;
        if (cut == std::string::npos) break;
        negate = rest[cut] == '-';
        rest = trimmed(rest.substr(cut + 1));
        if (rest.empty()) bad_value(s);
    }
    return sum;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string matrix_to_csv(const Matrix<ExactScalar>& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += to_string(m.at(r, c));
        }
        out += "]\n";
    }
    return out;
}

Matrix<ExactScalar> matrix_from_csv(const std::string& text) {
    std::vector<std::vector<ExactScalar>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        if (line.front() != '[' || line.back() != ']')
            throw std::invalid_argument("matrix row must be bracketed: " + line);
        line = line.substr(1, line.size() - 2);
        std::vector<ExactScalar> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t comma = line.find(',', pos);
            row.push_back(parse_term(line.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    Matrix<ExactScalar> m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::string matrix_to_json(const Matrix<ExactScalar>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

Matrix<ExactScalar> matrix_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const auto& rows = doc.at("rows");
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    Matrix<ExactScalar> m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = parse_term(rows[r][c].get<std::string>());
    return m;
}

namespace {

struct CsvRow {
    std::vector<long> keys;
    std::string value;
};

std::vector<CsvRow> read_csv(std::istream& is, const std::string& header, std::size_t nkeys) {
    std::string line;
    if (!std::getline(is, line) || trimmed(line) != header)
        throw std::invalid_argument("expected header '" + header + "'");
    std::vector<CsvRow> rows;
    while (std::getline(is, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        CsvRow row;
        std::size_t pos = 0;
        for (std::size_t k = 0; k < nkeys; ++k) {
            const std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) throw std::invalid_argument("short row: " + line);
            row.keys.push_back(std::stol(trimmed(line.substr(pos, comma - pos))));
            pos = comma + 1;
        }
        row.value = trimmed(line.substr(pos));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_exact(const std::vector<CsvRow>& rows) {
    for (const auto& r : rows) {
        try {
            parse_surd_sum(r.value);
        } catch (...) {
            return false;
        }
    }
    return true;
}

double value_as_double(const std::string& s) {
    try {
        return parse_surd_sum(s).to_double();
    } catch (...) {
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (trimmed(s.substr(used)).size()) throw std::invalid_argument("bad value: " + s);
    return v;
}

}  // namespace

void write_signal(std::ostream& os, const Signal& sig) {
    os << "cell,degree,value\n";
    for (std::size_t l = 0; l < sig.cells.size(); ++l)
        for (long j = 0; j <= sig.n; ++j)
            os << l << "," << j << "," << to_string(sig.cells[l][j]) << "\n";
}

void write_signal(std::ostream& os, const SignalF& sig) {
    os << "cell,degree,value\n";
    for (std::size_t l = 0; l < sig.cells.size(); ++l)
        for (long j = 0; j <= sig.n; ++j)
            os << l << "," << j << "," << format_double(sig.cells[l][j]) << "\n";
}

bool read_signal(std::istream& is, long n, long levels, Signal& exact, SignalF& approx) {
    const auto rows = read_csv(is, "cell,degree,value", 2);
    const long cells = 1L << levels;
    if (rows.size() != static_cast<std::size_t>(cells * (n + 1)))
        throw std::invalid_argument("signal size does not match --n/--levels");
    const bool is_exact = all_exact(rows);
    exact = Signal{};
    approx = SignalF{};
    auto& tgt_n = is_exact ? exact.n : approx.n;
    tgt_n = n;
    (is_exact ? exact.levels : approx.levels) = levels;
    if (is_exact)
        exact.cells.assign(cells, std::vector<SurdSum>(n + 1));
    else
        approx.cells.assign(cells, std::vector<double>(n + 1, 0.0));
    for (const auto& r : rows) {
        const long l = r.keys[0], j = r.keys[1];
        if (l < 0 || l >= cells || j < 0 || j > n)
            throw std::invalid_argument("signal row out of range");
        if (is_exact)
            exact.cells[l][j] = parse_surd_sum(r.value);
        else
            approx.cells[l][j] = value_as_double(r.value);
    }
    return is_exact;
}

namespace {

template <class S, class Fmt>
void write_coeffs_impl(std::ostream& os, const BasicCoeffs<S>& co, Fmt fmt) {
    os << "level,shift,degree,value\n";
    for (long j = 0; j <= co.n; ++j) os << "-1,0," << j << "," << fmt(co.scaling0[j]) << "\n";
    for (long k = 0; k < co.levels; ++k)
        for (std::size_t i = 0; i < co.detail[k].size(); ++i)
            for (long j = 0; j <= co.n; ++j)
                os << k << "," << i << "," << j << "," << fmt(co.detail[k][i][j]) << "\n";
}

template <class S>
void size_coeffs(BasicCoeffs<S>& co, long n, long levels) {
    co.n = n;
    co.levels = levels;
    co.scaling0.assign(n + 1, S{});
    co.detail.resize(levels);
    for (long k = 0; k < levels; ++k)
        co.detail[k].assign(1L << k, std::vector<S>(n + 1, S{}));
}

}  // namespace

void write_coeffs(std::ostream& os, const Coeffs& co) {
    write_coeffs_impl(os, co, [](const SurdSum& v) { return to_string(v); });
}

void write_coeffs(std::ostream& os, const CoeffsF& co) {
    write_coeffs_impl(os, co, [](double v) { return format_double(v); });
}

bool read_coeffs(std::istream& is, long n, long levels, Coeffs& exact, CoeffsF& approx) {
    const auto rows = read_csv(is, "level,shift,degree,value", 3);
    if (rows.size() != static_cast<std::size_t>((1L << levels) * (n + 1)))
        throw std::invalid_argument("coefficient count does not match --n/--levels");
    const bool is_exact = all_exact(rows);
    exact = Coeffs{};
    approx = CoeffsF{};
    if (is_exact)
        size_coeffs(exact, n, levels);
    else
        size_coeffs(approx, n, levels);
    for (const auto& r : rows) {
        const long k = r.keys[0], i = r.keys[1], j = r.keys[2];
        const bool root = k == -1;
        if ((!root && (k < 0 || k >= levels || i < 0 || i >= (1L << k))) || (root && i != 0) ||
            j < 0 || j > n)
            throw std::invalid_argument("coefficient row out of range");
        if (is_exact) {
            (root ? exact.scaling0[j] : exact.detail[k][i][j]) = parse_surd_sum(r.value);
        } else {
            (root ? approx.scaling0[j] : approx.detail[k][i][j]) = value_as_double(r.value);
        }
    }
    return is_exact;
}

}  // namespace alpwave
