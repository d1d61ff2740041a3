// io.hpp — Deterministic text formatting, angle parsing for CLI flags,
// and small file helpers. No locale dependence anywhere.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptsim {

// Fixed `%.15g` rendering: stable across runs, >= 12 significant digits.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 into 0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::string(buf);
}

namespace detail {

inline double parse_double_strict(const std::string& text, const char* what) {
    if (text.empty())
        throw std::invalid_argument(std::string(what) + ": empty number");
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + text.size())
        throw std::invalid_argument(std::string(what) + ": bad number '" + text + "'");
    return v;
}

} // namespace detail

// Angles arrive either as literal radians ("0.75", "-1e-3") or as multiples
// of pi written "<factor>pi", where the factor is empty/sign-only ("pi",
// "-pi"), a decimal ("-0.4844pi"), or a rational ("-31/64pi").
inline double parse_angle(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_angle: empty string");
    const bool has_pi = text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0;
    if (!has_pi) return detail::parse_double_strict(text, "parse_angle");

    std::string head = text.substr(0, text.size() - 2);
    double factor = 1.0;
    if (head.empty() || head == "+") {
        factor = 1.0;
    } else if (head == "-") {
        factor = -1.0;
    } else if (const auto slash = head.find('/'); slash != std::string::npos) {
        const double num = detail::parse_double_strict(head.substr(0, slash), "parse_angle");
        const double den = detail::parse_double_strict(head.substr(slash + 1), "parse_angle");
        if (den == 0.0) throw std::invalid_argument("parse_angle: zero denominator");
        factor = num / den;
    } else {
        factor = detail::parse_double_strict(head, "parse_angle");
    }
    return factor * std::numbers::pi;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

} // namespace ptsim
