#include "heisfree/heisenberg.hpp"

#include <vector>

namespace heisfree {

const char* to_string(VectorClass c) {
    switch (c) {
        case VectorClass::Positive: return "Positive";
        case VectorClass::Negative: return "Negative";
        case VectorClass::Null: return "Null";
    }
    return "?";
}

const char* to_string(SiegelClass c) {
    switch (c) {
        case SiegelClass::Interior: return "Interior";
        case SiegelClass::Boundary: return "Boundary";
        case SiegelClass::Exterior: return "Exterior";
    }
    return "?";
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(text.substr(start));
            return parts;
        }
        parts.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Matrix3<ExactComplex> parse_matrix3(std::string_view text) {
    const auto rows = split(text, ';');
    if (rows.size() != 3) throw std::invalid_argument("matrix: expected 3 rows");
    Matrix3<ExactComplex> g;
    for (int i = 0; i < 3; ++i) {
        const auto entries = split(rows[static_cast<size_t>(i)], ',');
        if (entries.size() != 3) throw std::invalid_argument("matrix: expected 3 entries per row");
        for (int j = 0; j < 3; ++j)
            g(i, j) = parse_exact_complex(entries[static_cast<size_t>(j)]);
    }
    return g;
}

Vector3<ExactComplex> parse_vector3(std::string_view text) {
    const auto rows = split(text, ';');
    if (rows.size() != 3) throw std::invalid_argument("vector: expected 3 entries");
    return {parse_exact_complex(rows[0]), parse_exact_complex(rows[1]),
            parse_exact_complex(rows[2])};
}

std::string to_string(const HeisPoint<ExactComplex>& p) {
    return "(" + to_string(p.zeta) + "; " + to_string(p.nu) + ")";
}

HeisPoint<ExactComplex> parse_heis_point(std::string_view text) {
    // "(zeta; nu)" -- strip the outer parens, split at the top-level ';'
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos || text[first] != '(' || text[last] != ')')
        throw std::invalid_argument("heis point: expected '(zeta; nu)'");
    std::string_view inner = text.substr(first + 1, last - first - 1);
    int depth = 0;
    size_t sep = std::string_view::npos;
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '(') ++depth;
        else if (inner[i] == ')') --depth;
        else if (inner[i] == ';' && depth == 0) { sep = i; break; }
    }
    if (sep == std::string_view::npos)
        throw std::invalid_argument("heis point: missing ';'");
    return {parse_exact_complex(inner.substr(0, sep)),
            parse_exact_scalar(inner.substr(sep + 1))};
}

}  // namespace heisfree
