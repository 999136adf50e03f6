#include "accinfo/io.hpp"

#include <charconv>
#include <climits>
#include <json.hpp>
#include <utility>

namespace accinfo {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trimmed(std::string_view s) {
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Validates the shape of a real literal (sign, digits, optional fraction and
// exponent) before handing it to from_chars. `base` offsets error positions
// into the caller's token.
double parse_real(std::string_view s, std::size_t base) {
    if (s.empty()) throw ParseError("expected a number", 0, base);
    std::size_t i = 0;
    const bool plus = s[0] == '+';
    if (s[0] == '+' || s[0] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++digits;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i, ++digits;
    }
    if (digits == 0) throw ParseError("expected a number", 0, base + i);
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i])) ++i, ++exp_digits;
        if (exp_digits == 0) {
            throw ParseError("malformed exponent", 0, base + i);
        }
    }
    if (i != s.size()) {
        throw ParseError(std::string("unexpected character '") + s[i] + "'",
                         0, base + i);
    }

    const char* first = s.data() + (plus ? 1 : 0);
    double value = 0.0;
    const auto res = std::from_chars(first, s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ParseError("number out of range", 0, base);
    }
    return value;
}

std::string fmt_sci17(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

std::string fmt_shortest(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

Complex parse_complex(std::string_view token) {
    // Error offsets are relative to `token` as given.
    std::size_t lead = 0;
    while (lead < token.size() && is_space(token[lead])) ++lead;
    std::string_view body = trimmed(token);
    if (body.empty()) throw ParseError("empty entry", 0, 0);

    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == 'i') {
            throw ParseError("imaginary unit must be upper-case I", 0,
                             lead + i);
        }
    }
    const std::size_t unit = body.find('I');
    if (unit != std::string_view::npos && unit != body.size() - 1) {
        throw ParseError("imaginary unit must end the entry", 0, lead + unit);
    }

    if (unit == std::string_view::npos) {
        return Complex(parse_real(body, lead), 0.0);
    }

    std::string_view coef = body.substr(0, body.size() - 1);
    if (coef.empty() || coef == "+") return Complex(0.0, 1.0);
    if (coef == "-") return Complex(0.0, -1.0);

    // Split an optional real part from the imaginary coefficient at a sign
    // that does not belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < coef.size(); ++i) {
        if ((coef[i] == '+' || coef[i] == '-') && coef[i - 1] != 'e' &&
            coef[i - 1] != 'E') {
            if (split != std::string_view::npos) {
                throw ParseError("malformed complex entry", 0, lead + i);
            }
            split = i;
        }
    }
    if (split == std::string_view::npos) {
        return Complex(0.0, parse_real(coef, lead));
    }

    const double re = parse_real(coef.substr(0, split), lead);
    std::string_view imag = coef.substr(split);
    double im;
    if (imag == "+") {
        im = 1.0;
    } else if (imag == "-") {
        im = -1.0;
    } else {
        im = parse_real(imag, lead + split);
    }
    return Complex(re, im);
}

namespace {

CMatrix parse_matrix_line(std::string_view line, std::size_t line_no) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && is_space(line[i])) ++i;
    };
    auto fail = [&](const std::string& reason, std::size_t off) {
        throw ParseError(reason, line_no, off);
    };

    skip_ws();
    if (i >= line.size() || line[i] != '{') fail("expected '{'", i);
    ++i;

    std::vector<std::vector<Complex>> rows;
    while (true) {
        skip_ws();
        if (i >= line.size() || line[i] != '{') {
            fail("expected '{' to open a row", i);
        }
        ++i;
        std::vector<Complex> row;
        while (true) {
            skip_ws();
            const std::size_t start = i;
            while (i < line.size() && line[i] != ',' && line[i] != '}') {
                if (line[i] == '{') fail("unexpected '{' inside an entry", i);
                ++i;
            }
            if (i >= line.size()) fail("unbalanced braces", line.size());
            try {
                row.push_back(parse_complex(line.substr(start, i - start)));
            } catch (const ParseError& pe) {
                throw ParseError(pe.reason(), line_no, start + pe.offset());
            }
            if (line[i] == ',') {
                ++i;
                continue;
            }
            ++i;  // closing '}' of the row
            break;
        }
        rows.push_back(std::move(row));
        skip_ws();
        if (i < line.size() && line[i] == ',') {
            ++i;
            continue;
        }
        if (i < line.size() && line[i] == '}') {
            ++i;
            break;
        }
        if (i >= line.size()) fail("unbalanced braces", line.size());
        fail("expected ',' or '}'", i);
    }
    skip_ws();
    if (i != line.size()) fail("trailing characters after matrix", i);

    const std::size_t cols = rows[0].size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            fail("ragged rows: row " + std::to_string(r + 1) + " has " +
                     std::to_string(rows[r].size()) + " entries, expected " +
                     std::to_string(cols),
                 0);
        }
    }
    if (rows.size() != cols) {
        fail("matrix is not square (" + std::to_string(rows.size()) + "x" +
                 std::to_string(cols) + ")",
             0);
    }

    CMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r][c];
        }
    }
    return m;
}

long long parse_header_int(std::string_view line, std::size_t line_no,
                           const char* which) {
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
        throw ParseError(std::string("expected `name = integer` header for ") +
                             which,
                         line_no, 0);
    }
    const std::string_view value = trimmed(line.substr(eq + 1));
    if (value.empty()) {
        throw ParseError(std::string("missing value for ") + which, line_no,
                         eq + 1);
    }
    long long v = 0;
    const auto res =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw ParseError(std::string("malformed integer value for ") + which,
                         line_no, eq + 1);
    }
    if (v < 1 || v > INT_MAX) {
        throw ParseError(std::string(which) + " must be a positive integer",
                         line_no, eq + 1);
    }
    return v;
}

}  // namespace

CMatrix parse_matrix(std::string_view line) { return parse_matrix_line(line, 0); }

ImportFile parse_import(std::string_view text) {
    // Non-blank lines with their 1-based numbers; blank lines are skipped
    // wherever they appear.
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        const std::string_view content = text.substr(pos, end - pos);
        if (!trimmed(content).empty()) lines.emplace_back(line_no, content);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    const std::size_t last_line = line_no;

    auto header = [&](std::size_t idx, const char* which) {
        if (idx >= lines.size()) {
            throw ParseError(std::string("missing header line for ") + which,
                             last_line + 1, 0);
        }
        return parse_header_int(lines[idx].second, lines[idx].first, which);
    };
    ImportFile f;
    f.dim = static_cast<int>(header(0, "N"));
    f.num_ops = static_cast<int>(header(1, "J"));
    f.k_init = static_cast<int>(header(2, "K"));

    const std::size_t found = lines.size() - std::min<std::size_t>(3, lines.size());
    if (found != static_cast<std::size_t>(f.num_ops)) {
        const std::size_t where =
            found > static_cast<std::size_t>(f.num_ops)
                ? lines[3 + static_cast<std::size_t>(f.num_ops)].first
                : last_line + 1;
        throw CountMismatch("expected " + std::to_string(f.num_ops) +
                                " operator lines, found " +
                                std::to_string(found),
                            where, 0);
    }

    f.ops.reserve(static_cast<std::size_t>(f.num_ops));
    for (std::size_t m = 3; m < lines.size(); ++m) {
        CMatrix op = parse_matrix_line(lines[m].second, lines[m].first);
        if (op.rows() != f.dim) {
            throw DimensionMismatch(
                "line " + std::to_string(lines[m].first) + ": operator has dimension " +
                std::to_string(op.rows()) + ", expected " +
                std::to_string(f.dim));
        }
        f.ops.push_back(std::move(op));
    }
    return f;
}

std::string format_complex(Complex z) {
    std::string s = fmt_sci17(z.real());
    const double im = z.imag();
    if (im != 0.0) {
        if (im < 0.0) {
            s += '-';
            s += fmt_sci17(-im);
        } else {
            s += '+';
            s += fmt_sci17(im);
        }
        s += 'I';
    }
    return s;
}

std::string format_matrix(const CMatrix& m) {
    std::string s = "{";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r > 0) s += ',';
        s += '{';
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) s += ',';
            s += format_complex(m(r, c));
        }
        s += '}';
    }
    s += '}';
    return s;
}

std::string write_import(const ImportFile& f) {
    std::string out;
    out += "N = " + std::to_string(f.dim) + "\n";
    out += "J = " + std::to_string(f.num_ops) + "\n";
    out += "K = " + std::to_string(f.k_init) + "\n";
    for (const CMatrix& op : f.ops) {
        out += format_matrix(op);
        out += '\n';
    }
    return out;
}

std::string write_output(const RunReport& report, const Ensemble& e,
                         const OptimizerConfig& cfg) {
    std::string out;
    out += "J = " + std::to_string(e.size()) + "\n";
    out += "K = " + std::to_string(report.final_povm.size()) + "\n";
    out += "N = " + std::to_string(e.dim) + "\n";
    out += "steepest_prob = " + fmt_shortest(cfg.steepest_prob) + "\n";
    out += "tolerance = " + fmt_shortest(cfg.tolerance) + "\n";
    out += "mt19937_64_seed = " + std::to_string(cfg.seed) + "\n";
    out += "\n";
    for (double mi : report.mi_trace) {
        out += fmt_sci17(mi);
        out += '\n';
    }
    out += "\n";
    for (const CMatrix& op : e.ops) {
        out += format_matrix(op);
        out += '\n';
    }
    out += "\n";
    for (int k = 0; k < report.final_povm.size(); ++k) {
        out += format_matrix(report.final_povm.outcome(k));
        out += '\n';
    }
    out += "\n";
    for (int k = 0; k < report.reduced_povm.size(); ++k) {
        out += format_matrix(report.reduced_povm.outcome(k));
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json matrix_to_json(const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string write_json_report(const RunReport& report, const Ensemble& e) {
    nlohmann::json j;
    j["config"] = {
        {"steepest_prob", report.config_echo.steepest_prob},
        {"tolerance", report.config_echo.tolerance},
        {"seed", report.config_echo.seed},
        {"max_iterations", report.config_echo.max_iterations},
        {"restarts", report.config_echo.restarts},
        {"line_search",
         {{"bracket_max", report.config_echo.line_search.bracket_max},
          {"shrink_tol", report.config_echo.line_search.shrink_tol},
          {"max_evals", report.config_echo.line_search.max_evals}}},
    };
    j["rng"] = "mt19937_64+box_muller";
    j["dim"] = e.dim;
    j["iterations"] = report.iterations;
    j["converged"] = report.converged;
    j["mi_trace"] = report.mi_trace;
    j["accessible_information"] = report.final_mi();

    nlohmann::json ops = nlohmann::json::array();
    for (const CMatrix& op : e.ops) ops.push_back(matrix_to_json(op));
    j["operators"] = std::move(ops);

    nlohmann::json final_povm = nlohmann::json::array();
    for (int k = 0; k < report.final_povm.size(); ++k) {
        final_povm.push_back(matrix_to_json(report.final_povm.outcome(k)));
    }
    j["final_povm"] = std::move(final_povm);

    nlohmann::json reduced = nlohmann::json::array();
    for (int k = 0; k < report.reduced_povm.size(); ++k) {
        reduced.push_back(matrix_to_json(report.reduced_povm.outcome(k)));
    }
    j["reduced_povm"] = std::move(reduced);

    return j.dump(2) + "\n";
}

}  // namespace accinfo
