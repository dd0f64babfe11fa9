#include "lacm/notation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace lacm {

namespace {

DivisorClass parse_json_class(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad class JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("l") || !j.contains("e")) {
        throw ParseError("class JSON must be {\"l\": c0, \"e\": [c1..c6]}");
    }
    if (!j["l"].is_number_integer()) throw ParseError("class JSON: \"l\" must be an integer");
    if (!j["e"].is_array() || j["e"].size() != 6) {
        throw ParseError("class JSON: \"e\" must be an array of 6 integers");
    }
    DivisorClass d;
    d.c[0] = j["l"].get<std::int64_t>();
    for (int i = 0; i < 6; ++i) {
        if (!j["e"][i].is_number_integer()) {
            throw ParseError("class JSON: \"e\" must be an array of 6 integers");
        }
        d.c[i + 1] = j["e"][i].get<std::int64_t>();
    }
    return d;
}

// notation string: signed terms  [k][*]l  or  [k][*]e<i>  or plain "0"
DivisorClass parse_notation(std::string_view text) {
    DivisorClass d;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty class string");
    std::size_t tail = text.size();
    while (tail > pos && std::isspace(static_cast<unsigned char>(text[tail - 1]))) --tail;
    if (text.substr(pos, tail - pos) == "0") return d;

    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        const std::size_t tok_start = pos;
        std::int64_t sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' before \"" + std::string(text.substr(pos)) + "\"");
        }
        first = false;

        std::int64_t coeff = 1;
        bool have_digits = false;
        std::int64_t num = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            have_digits = true;
            num = num * 10 + (text[pos] - '0');
            if (num > kInputCoeffBound) {
                throw ParseError("coefficient exceeds input bound in \"" +
                                 std::string(text.substr(tok_start, pos + 1 - tok_start)) + "\"");
            }
            ++pos;
        }
        if (have_digits) coeff = num;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos >= text.size()) {
            throw ParseError("dangling coefficient \"" +
                             std::string(text.substr(tok_start)) + "\"");
        }
        if (text[pos] == 'l' || text[pos] == 'L') {
            ++pos;
            d.c[0] += sign * coeff;
        } else if (text[pos] == 'e' || text[pos] == 'E') {
            ++pos;
            if (pos >= text.size() || text[pos] < '1' || text[pos] > '6') {
                throw ParseError("expected e1..e6 in \"" +
                                 std::string(text.substr(tok_start)) + "\"");
            }
            const int idx = text[pos] - '0';
            ++pos;
            d.c[idx] += sign * coeff;
        } else {
            throw ParseError("unexpected token \"" + std::string(text.substr(pos)) + "\"");
        }
    }
    return d;
}

void append_term(std::string& out, std::int64_t coeff, const std::string& sym) {
    if (coeff == 0) return;
    if (out.empty()) {
        if (coeff < 0) out += "-";
    } else {
        out += (coeff < 0) ? " - " : " + ";
    }
    const std::int64_t a = std::abs(coeff);
    if (a != 1) out += std::to_string(a);
    out += sym;
}

}  // namespace

DivisorClass parse_class(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    DivisorClass d = (i < text.size() && text[i] == '{') ? parse_json_class(text)
                                                         : parse_notation(text);
    require_coeff_bound(d);
    return d;
}

nlohmann::json class_to_json(const DivisorClass& d) {
    nlohmann::json j;
    j["l"] = d.c[0];
    j["e"] = {d.c[1], d.c[2], d.c[3], d.c[4], d.c[5], d.c[6]};
    return j;
}

std::string class_to_string(const DivisorClass& d) {
    std::string out;
    append_term(out, d.c[0], "l");
    for (int i = 1; i <= 6; ++i) append_term(out, d.c[i], "e" + std::to_string(i));
    return out.empty() ? "0" : out;
}

DivisorClass orbit_rep_class(const DivisorClass& d) {
    // b_i = -c_i nonincreasing, i.e. c_i nondecreasing
    DivisorClass r = canonical_rep(d);
    std::reverse(r.c.begin() + 1, r.c.end());
    return r;
}

std::string orbit_rep_string(const DivisorClass& d) {
    return class_to_string(orbit_rep_class(d));
}

}  // namespace lacm
