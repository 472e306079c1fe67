#include "nlie/format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace nlie {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

long parse_int(std::string_view s, std::size_t line, const char* what) {
    s = trim(s);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError(line, std::string("expected integer for ") + what);
    return v;
}

/// "key = value" splitter; returns empty value when '=' is missing.
std::pair<std::string_view, std::string_view> split_eq(std::string_view s) {
    auto pos = s.find('=');
    if (pos == std::string_view::npos) return {trim(s), {}};
    return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

Vec parse_value(std::string_view rhs, int dim, const Field& field, std::size_t line) {
    Vec v(dim);
    std::size_t pos = 0;
    std::string term;
    auto flush = [&](std::string_view t) {
        t = trim(t);
        if (t.empty()) throw FormatError(line, "empty term in bracket value");
        auto star = t.find('*');
        if (star == std::string_view::npos) throw FormatError(line, "term must look like <coeff>*x<j>");
        std::string_view coeff = trim(t.substr(0, star));
        std::string_view var = trim(t.substr(star + 1));
        if (var.size() < 2 || var[0] != 'x') throw FormatError(line, "expected basis label x<j>");
        long j = parse_int(var.substr(1), line, "basis index");
        if (j < 1 || j > dim) throw FormatError(line, "index out of range: x" + std::to_string(j));
        Scalar c;
        try {
            c = field.parse(coeff);
        } catch (const std::exception& e) {
            throw FormatError(line, std::string("non-field scalar literal '") + std::string(coeff) +
                                        "': " + e.what());
        }
        v[j - 1] += c;
    };
    // split on '+' at top level; signs live inside coefficients
    std::size_t start = 0;
    std::string_view rest = rhs;
    while (pos <= rest.size()) {
        if (pos == rest.size() || rest[pos] == '+') {
            flush(rest.substr(start, pos - start));
            start = pos + 1;
        }
        ++pos;
    }
    return v;
}

}  // namespace

NLieAlgebra parse_algebra(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t lineno = 0, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            ++lineno;
            std::string_view raw = trim(text.substr(start, i - start));
            if (!raw.empty() && raw[0] != '#') lines.emplace_back(lineno, raw);
            start = i + 1;
        }
    }
    if (lines.size() < 2) throw FormatError(lines.empty() ? 1 : lines.back().first, "missing n/dim header");

    auto [k0, v0] = split_eq(lines[0].second);
    if (k0 != "n") throw FormatError(lines[0].first, "first line must be 'n = <int>'");
    long n = parse_int(v0, lines[0].first, "n");
    auto [k1, v1] = split_eq(lines[1].second);
    if (k1 != "dim") throw FormatError(lines[1].first, "second line must be 'dim = <int>'");
    long dim = parse_int(v1, lines[1].first, "dim");

    std::size_t next = 2;
    Field field = Field::Q();
    if (next < lines.size()) {
        auto [k, v] = split_eq(lines[next].second);
        if (k == "field") {
            if (v == "Q") {
                field = Field::Q();
            } else if (v.substr(0, 3) == "Fp:") {
                long p = parse_int(v.substr(3), lines[next].first, "prime");
                try {
                    field = Field::Fp(static_cast<std::uint64_t>(p));
                } catch (const std::exception& e) {
                    throw FormatError(lines[next].first, e.what());
                }
            } else {
                throw FormatError(lines[next].first, "field must be Q or Fp:<prime>");
            }
            ++next;
        }
    }

    NLieAlgebra L(static_cast<int>(n), static_cast<int>(dim), field);
    for (; next < lines.size(); ++next) {
        auto [lno, body] = lines[next];
        if (body.empty() || body[0] != '[')
            throw FormatError(lno, "expected bracket line '[i1,...,in] = ...'");
        auto close = body.find(']');
        if (close == std::string_view::npos) throw FormatError(lno, "missing ']'");
        std::string_view idx_part = body.substr(1, close - 1);
        std::vector<int> idx;
        std::size_t p = 0, s = 0;
        for (; p <= idx_part.size(); ++p) {
            if (p == idx_part.size() || idx_part[p] == ',') {
                long j = parse_int(idx_part.substr(s, p - s), lno, "bracket index");
                idx.push_back(static_cast<int>(j - 1));
                s = p + 1;
            }
        }
        if (static_cast<long>(idx.size()) != n)
            throw FormatError(lno, "arity mismatch: bracket lists " + std::to_string(idx.size()) +
                                       " indices but n = " + std::to_string(n));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0 || idx[i] >= dim)
                throw FormatError(lno, "index out of range in bracket key");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw FormatError(lno, "bracket indices must be strictly increasing");
        }
        auto eq = body.find('=', close);
        if (eq == std::string_view::npos) throw FormatError(lno, "missing '=' after bracket");
        Vec value = parse_value(trim(body.substr(eq + 1)), static_cast<int>(dim), field, lno);
        try {
            L.set_bracket(std::move(idx), std::move(value));
        } catch (const std::invalid_argument& e) {
            throw FormatError(lno, e.what());
        }
    }
    return L;
}

std::string serialize_algebra(const NLieAlgebra& L) {
    std::ostringstream out;
    out << "n = " << L.arity() << "\n";
    out << "dim = " << L.dim() << "\n";
    out << "field = " << L.field().str() << "\n";
    for (const auto& [idx, val] : L.table()) {
        out << "[";
        for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i] + 1;
        out << "] = ";
        bool first = true;
        for (std::size_t j = 0; j < val.size(); ++j) {
            if (val[j].is_zero()) continue;
            if (!first) out << " + ";
            out << val[j].str() << "*x" << j + 1;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace nlie
