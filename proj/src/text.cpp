#include "quatring/text.hpp"

#include <algorithm>
#include <cctype>

namespace quatring {

namespace {

constexpr i64 kCoordBound = i64{1} << 30;

void append_term(std::string& out, i64 coeff, char unit) {
    if (coeff == 0) return;
    bool neg = coeff < 0;
    i64 mag = neg ? -coeff : coeff;
    if (out.empty()) {
        if (neg) out += '-';
    } else {
        out += neg ? '-' : '+';
    }
    if (unit == 0) {
        out += std::to_string(mag);
    } else {
        if (mag != 1) out += std::to_string(mag);
        out += unit;
    }
}

std::string format_sum(i64 n0, i64 n1, i64 n2, i64 n3) {
    std::string out;
    append_term(out, n0, 0);
    append_term(out, n1, 'i');
    append_term(out, n2, 'j');
    append_term(out, n3, 'k');
    if (out.empty()) out = "0";
    return out;
}

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;  // 0-based; reported positions are pos+1

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos + 1);
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos + 1); }
};

i64 parse_uint(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        c.fail("expected a digit");
    i64 v = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        v = v * 10 + (c.s[c.pos] - '0');
        if (v > kCoordBound) c.fail("coordinate exceeds 2^30");
        ++c.pos;
    }
    return v;
}

int unit_index(char ch) {
    switch (ch) {
        case 'i': return 1;
        case 'j': return 2;
        case 'k': return 3;
        default: return -1;
    }
}

// sign? term (('+'|'-') term)* accumulated into coords.
void parse_sum(Cursor& c, i64 coords[4], char terminator) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
        c.take();
        sign = (ch == '-') ? -1 : 1;
    }
    while (true) {
        c.skip_ws();
        std::size_t term_pos = c.pos + 1;
        ch = c.peek();
        int idx;
        i64 mag;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mag = parse_uint(c);
            idx = unit_index(c.peek());
            if (idx > 0)
                c.take();
            else
                idx = 0;
        } else if ((idx = unit_index(ch)) > 0) {
            c.take();
            mag = 1;
        } else {
            throw ParseError("expected a term", term_pos);
        }
        coords[idx] = add_ck(coords[idx], sign > 0 ? mag : -mag);
        if (abs_ck(coords[idx]) > kCoordBound)
            throw ParseError("coordinate exceeds 2^30", term_pos);
        ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = (ch == '-') ? -1 : 1;
            continue;
        }
        if (ch == terminator || (terminator == '\0' && c.done())) return;
        c.fail("unexpected character");
    }
}

}  // namespace

std::string format_quat(const Quat& q) {
    if (q.raw_den() == 1)
        return format_sum(q.raw_num(0), q.raw_num(1), q.raw_num(2), q.raw_num(3));
    return "(" + format_sum(q.raw_num(0), q.raw_num(1), q.raw_num(2), q.raw_num(3)) + ")/" +
           std::to_string(q.raw_den());
}

Quat parse_quat(const std::string& text) {
    Cursor c{text};
    if (c.done()) c.fail("empty quaternion literal");

    int outer_sign = 1;
    std::size_t start = c.pos;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
        c.take();
        outer_sign = (ch == '-') ? -1 : 1;
        ch = c.peek();
    }

    i64 coords[4] = {0, 0, 0, 0};
    i64 den = 1;
    if (ch == '(') {
        std::size_t paren_pos = c.pos + 1;
        c.take();
        parse_sum(c, coords, ')');
        c.take();  // ')'
        if (c.peek() != '/') c.fail("expected '/' after parenthesized sum");
        c.take();
        std::size_t den_pos = c.pos + 1;
        den = parse_uint(c);
        if (den != 2) throw ParseError("only /2 denominators are supported", den_pos);
        for (i64 v : coords)
            if (!(v & 1))
                throw ParseError("half coordinates require all four numerators odd", paren_pos);
    } else {
        c.pos = start;  // the sign is re-read as part of the sum
        outer_sign = 1;
        parse_sum(c, coords, '\0');
    }
    if (!c.done()) c.fail("trailing characters after quaternion literal");
    if (outer_sign < 0)
        for (auto& v : coords) v = neg_ck(v);
    return Quat::scaled_ints(coords[0], coords[1], coords[2], coords[3], den);
}

std::vector<std::string> split_set_payload(const std::string& payload) {
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        std::size_t a = cur.find_first_not_of(" \t\r");
        if (a == std::string::npos) {
            cur.clear();
            return;
        }
        std::size_t b = cur.find_last_not_of(" \t\r");
        tokens.push_back(cur.substr(a, b - a + 1));
        cur.clear();
    };
    for (char ch : payload) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == ',' && depth == 0) || ch == '\n') {
            flush();
            continue;
        }
        cur += ch;
    }
    flush();
    return tokens;
}

ParsedSet parse_set_tokens(const std::vector<std::string>& tokens, Ring ring) {
    ParsedSet out;
    std::size_t index = 0;
    for (const std::string& tok : tokens) {
        ++index;
        Quat q;
        try {
            q = parse_quat(tok);
        } catch (const ParseError& e) {
            throw ParseError("token " + std::to_string(index) + " ('" + tok + "'): " + e.what(),
                             index);
        }
        if (!q.in(ring))
            throw ParseError("token " + std::to_string(index) + " ('" + tok + "') is not in " +
                                 ring_name(ring),
                             index);
        out.elements.push_back(q);
    }
    std::sort(out.elements.begin(), out.elements.end(), CanonicalLess{});
    auto last = std::unique(out.elements.begin(), out.elements.end());
    out.duplicates = static_cast<std::size_t>(out.elements.end() - last);
    out.elements.erase(last, out.elements.end());
    return out;
}

std::string format_quat_list(const std::vector<Quat>& elems) {
    std::string out;
    for (std::size_t t = 0; t < elems.size(); ++t) {
        if (t) out += ", ";
        out += format_quat(elems[t]);
    }
    return out;
}

}  // namespace quatring
