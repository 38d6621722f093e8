#include "rhzeta/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rhzeta/errors.hpp"

namespace rhz::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

void write_array(std::ostream& os, const std::vector<double>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_real(v[i]);
    os << ']';
}

}  // namespace

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw InvalidParameter("not a number: '" + std::string(text) + "'");
    }
    return v;
}

void write_tridiagonal_csv(std::ostream& os, const SymmetricTridiagonal& tri) {
    os << "index,B,J_next\n";
    for (std::size_t i = 0; i < tri.order(); ++i) {
        os << i << ',' << format_real(tri.diagonal[i]) << ',';
        if (i < tri.offdiagonal.size()) os << format_real(tri.offdiagonal[i]);
        os << '\n';
    }
}

void write_tridiagonal_json(std::ostream& os, const SymmetricTridiagonal& tri) {
    os << "{\n  \"n\": " << tri.order() << ",\n  \"diagonal\": ";
    write_array(os, tri.diagonal);
    os << ",\n  \"offdiagonal\": ";
    write_array(os, tri.offdiagonal);
    os << "\n}\n";
}

SymmetricTridiagonal read_tridiagonal_csv(std::istream& is) {
    SymmetricTridiagonal tri;
    std::string line;
    bool header_seen = false;
    bool closed = false;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string_view l = trim(line);
        if (l.empty() || l.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (l != "index,B,J_next") throw InvalidParameter("expected header 'index,B,J_next'");
            continue;
        }
        if (closed) throw InvalidParameter("row after the final (coupling-free) row at line " + std::to_string(lineno));
        const auto cols = split(l, ',');
        if (cols.size() != 3) throw InvalidParameter("expected 3 columns at line " + std::to_string(lineno));
        if (static_cast<std::size_t>(parse_real(cols[0])) != tri.diagonal.size()) {
            throw InvalidParameter("row indices must be consecutive from 0 (line " + std::to_string(lineno) + ")");
        }
        tri.diagonal.push_back(parse_real(cols[1]));
        if (cols[2].empty()) {
            closed = true;
        } else {
            tri.offdiagonal.push_back(parse_real(cols[2]));
        }
    }
    if (tri.diagonal.empty() || !closed) throw InvalidParameter("tridiagonal CSV is empty or truncated");
    return tri;
}

void write_spin_chain_csv(std::ostream& os, const SpinChainParams& spin) {
    os << "index,J,B\n";
    for (std::size_t i = 0; i < spin.fields.size(); ++i) {
        os << i << ',';
        if (i < spin.couplings.size()) os << format_real(spin.couplings[i]);
        os << ',' << format_real(spin.fields[i]) << '\n';
    }
}

void write_waveguide_json(std::ostream& os, const WaveguideDesign& w) {
    const auto& f = w.fab;
    os << "{\n  \"fabrication\": {\"kappa\": " << format_real(f.kappa) << ", \"alpha\": " << format_real(f.alpha)
       << ", \"radius\": " << format_real(f.radius) << ", \"lambda_bar\": " << format_real(f.lambda_bar)
       << ", \"n_s\": " << format_real(f.n_s) << ", \"e0\": " << format_real(f.e0) << "},\n";
    os << "  \"energy_offset\": " << format_real(w.energy_offset) << ",\n";
    os << "  \"guides\": [";
    for (std::size_t i = 0; i < w.x.size(); ++i) {
        os << (i ? ",\n" : "\n") << "    {\"index\": " << i << ", \"x\": " << format_real(w.x[i])
           << ", \"y\": " << format_real(w.y[i]) << ", \"detuning\": " << format_real(w.detunings[i]) << '}';
    }
    os << "\n  ],\n  \"bonds\": [";
    for (std::size_t k = 0; k < w.spacings.size(); ++k) {
        os << (k ? ",\n" : "\n") << "    {\"index\": " << k << ", \"d\": " << format_real(w.spacings[k])
           << ", \"theta\": " << format_real(w.angles[k]) << ", \"J\": " << format_real(w.couplings[k]) << '}';
    }
    os << (w.spacings.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace rhz::io
