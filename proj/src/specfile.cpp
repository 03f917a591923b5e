#include "ambitoric/specfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ambitoric {

namespace {

struct Line {
    int number;
    std::string key;
    std::vector<std::pair<int, std::string>> tokens; // (column, token)
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) continue;
        auto colon = line.find(':', i);
        if (colon == std::string::npos)
            throw parse_error("expected 'key: values'", lineno, static_cast<int>(i) + 1);
        std::string key = line.substr(i, colon - i);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        Line l{lineno, key, {}};
        std::size_t j = colon + 1;
        while (j < line.size()) {
            while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j >= line.size()) break;
            std::size_t start = j;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            l.tokens.push_back({static_cast<int>(start) + 1, line.substr(start, j - start)});
        }
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<Rational> parse_rationals(const Line& l, std::size_t expected) {
    if (l.tokens.size() != expected)
        throw parse_error("key '" + l.key + "' expects " + std::to_string(expected) +
                              " coefficients, got " + std::to_string(l.tokens.size()),
                          l.number, l.tokens.empty() ? 1 : l.tokens[0].first);
    std::vector<Rational> out;
    for (const auto& [col, tok] : l.tokens) {
        auto r = Rational::parse(tok);
        if (!r) throw parse_error("malformed rational literal '" + tok + "'", l.number, col);
        out.push_back(*r);
    }
    return out;
}

} // namespace

AmbitoricSpec parse_spec_text(const std::string& text) {
    auto lines = tokenize(text);
    std::optional<FormType> type;
    std::optional<QuadraticForm> q, p;
    std::optional<BinaryForm> A, B;
    for (const auto& l : lines) {
        if (l.key == "type") {
            if (l.tokens.size() != 1)
                throw parse_error("type expects one value", l.number, 1);
            type = form_type_by_name(l.tokens[0].second);
            if (!type)
                throw parse_error("unknown type '" + l.tokens[0].second + "'", l.number,
                                  l.tokens[0].first);
        } else if (l.key == "q") {
            auto c = parse_rationals(l, 3);
            q = QuadraticForm{c[0], c[1], c[2]};
        } else if (l.key == "p") {
            auto c = parse_rationals(l, 3);
            p = QuadraticForm{c[0], c[1], c[2]};
        } else if (l.key == "A" || l.key == "B") {
            auto c = parse_rationals(l, 5);
            BinaryForm f = BinaryForm::from_descending(4, c);
            (l.key == "A" ? A : B) = f;
        } else {
            throw parse_error("unknown key '" + l.key + "'", l.number, 1);
        }
    }
    if (!type) throw parse_error("missing mandatory key 'type'");
    if (!A) throw parse_error("missing mandatory key 'A'");
    if (!B) throw parse_error("missing mandatory key 'B'");
    if (*type == FormType::general && !q)
        throw parse_error("general type requires the key 'q'");
    if (*type != FormType::general && q)
        throw parse_error("named types carry their canonical q; drop the 'q' line");
    AmbitoricSpec s;
    s.type = *type;
    s.q = (*type == FormType::general) ? *q : AmbitoricSpec::canonical_q(*type);
    s.A = *A;
    s.B = *B;
    s.p = p;
    s.validate(); // malformed/degenerate input surfaces with its own error type
    return s;
}

AmbitoricSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

std::string serialize_spec(const AmbitoricSpec& spec) {
    std::ostringstream os;
    os << "type: " << form_type_name(spec.type) << "\n";
    if (spec.type == FormType::general)
        os << "q: " << spec.q.q0 << " " << spec.q.q1 << " " << spec.q.q2 << "\n";
    auto dump = [&](const char* key, const BinaryForm& f) {
        os << key << ":";
        for (const auto& c : f.descending_coefficients()) os << " " << c.str();
        os << "\n";
    };
    dump("A", spec.A);
    dump("B", spec.B);
    if (spec.p) os << "p: " << spec.p->q0 << " " << spec.p->q1 << " " << spec.p->q2 << "\n";
    return os.str();
}

} // namespace ambitoric
