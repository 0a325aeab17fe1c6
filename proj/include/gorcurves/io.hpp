/*
   Copyright 2026 The gorcurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GORCURVES_IO_HPP
#define GORCURVES_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalogue.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "resolution.hpp"
#include "verifier.hpp"

namespace gorcurves {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kCharacteristicEnv = "GORCURVES_CHAR";

/// Characteristic from GORCURVES_CHAR if set and valid, else 32003.
inline std::uint32_t default_characteristic() {
    const char* env = std::getenv(kCharacteristicEnv);
    if (!env || !*env) return kDefaultCharacteristic;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v > 0x7fffffffUL) throw ContractError(std::string(kCharacteristicEnv) + " is not a number");
    Field check(static_cast<std::uint32_t>(v));
    return check.characteristic();
}

namespace detail {

// Recursive-descent parser for  expr := [sign] term (sign term)*,
// term := factor ('*' factor)*,  factor := integer | variable ['^' integer].
class PolynomialParser {
   public:
    PolynomialParser(const std::string& text, const RingPtr& ring, int line) : s_(text), ring_(ring), line_(line) {}

    Polynomial parse() {
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        Polynomial acc(ring_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            Polynomial t = term();
            acc = negative ? acc - t : acc + t;
            skip();
            if (pos_ == s_.size()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
            negative = c == '-';
            ++pos_;
        }
        return acc;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, static_cast<std::size_t>(line_), pos_ + 1);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return s_[pos_]; }

    std::uint64_t integer() {
        std::uint64_t v = 0;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    Polynomial factor() {
        skip();
        if (pos_ == s_.size()) fail("expected a term after operator");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = integer();
            return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->field().characteristic()));
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail(std::string("unexpected '") + c + "'");
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        const std::ptrdiff_t idx = ring_->index_of(name);
        if (idx < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        unsigned power = 1;
        skip();
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            skip();
            const std::uint64_t e = integer();
            if (e > kMaxExponent) fail("exponent overflow");
            power = static_cast<unsigned>(e);
        }
        return Polynomial::monomial(ring_, Monomial::variable(static_cast<std::size_t>(idx), power));
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip();
            if (pos_ == s_.size() || peek() != '*') break;
            ++pos_;
            const Polynomial f = factor();
            try {
                acc = acc * f;
            } catch (const std::overflow_error&) {
                fail("exponent overflow");
            }
        }
        // Two factors next to each other without '*'.
        skip();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("missing '*' between factors");
        return acc;
    }

    const std::string& s_;
    RingPtr ring_;
    int line_;
    std::size_t pos_ = 0;
};

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line = 1) {
    return detail::PolynomialParser(text, ring, line).parse();
}

/**
 * @brief Text form of an ideal: a ring header, one generator per line, and
 * optional metadata carried in `#@ key: value` comment lines.
 */
struct IdealDocument {
    RingPtr ring;
    std::vector<Polynomial> generators;
    std::map<std::string, std::string> metadata;

    Ideal ideal() const { return Ideal(ring, generators); }

    friend bool operator==(const IdealDocument& a, const IdealDocument& b) {
        return a.ring->same_as(*b.ring) && a.generators == b.generators && a.metadata == b.metadata;
    }
};

inline std::string ring_header(const Ring& ring) {
    std::string vars;
    bool standard = true;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (ring.name(i) != "x" + std::to_string(i)) standard = false;
    if (standard) {
        vars = "x0..x" + std::to_string(ring.size() - 1);
    } else {
        for (std::size_t i = 0; i < ring.size(); ++i) vars += (i ? "," : "") + ring.name(i);
    }
    if (!ring.order().is_grevlex()) throw ContractError("only grevlex rings are serialized");
    return "ring " + vars + " char " + std::to_string(ring.field().characteristic()) + " order grevlex";
}

inline RingPtr parse_ring_header(const std::string& line, int line_no) {
    std::istringstream in(line);
    std::string word, vars, key, order = "grevlex";
    std::uint32_t p = default_characteristic();
    auto fail = [&](const std::string& what) -> void { throw ParseError(what, static_cast<std::size_t>(line_no), 1); };
    in >> word >> vars;
    if (word != "ring" || vars.empty()) fail("expected 'ring <variables> char <p> order grevlex'");
    while (in >> key) {
        std::string value;
        if (!(in >> value)) fail("missing value for '" + key + "'");
        if (key == "char") {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(value, &used);
                if (used != value.size() || v > 0x7fffffffUL) throw std::invalid_argument("p");
                p = static_cast<std::uint32_t>(v);
            } catch (const std::exception&) {
                fail("bad characteristic '" + value + "'");
            }
        } else if (key == "order") {
            order = value;
        } else {
            fail("unknown ring attribute '" + key + "'");
        }
    }
    if (order != "grevlex") fail("unsupported monomial order '" + order + "'");
    std::vector<std::string> names;
    if (auto dots = vars.find(".."); dots != std::string::npos) {
        const std::string a = vars.substr(0, dots), b = vars.substr(dots + 2);
        std::size_t pa = a.find_first_of("0123456789"), pb = b.find_first_of("0123456789");
        if (pa == std::string::npos || pb == std::string::npos || a.substr(0, pa) != b.substr(0, pb))
            fail("bad variable range '" + vars + "'");
        const int lo = std::stoi(a.substr(pa)), hi = std::stoi(b.substr(pb));
        if (lo > hi) fail("bad variable range '" + vars + "'");
        for (int i = lo; i <= hi; ++i) names.push_back(a.substr(0, pa) + std::to_string(i));
    } else {
        std::string name;
        std::istringstream vs(vars);
        while (std::getline(vs, name, ',')) names.push_back(name);
    }
    try {
        return Ring::make(names, Field(p));
    } catch (const ContractError& e) {
        fail(e.what());
    }
    return nullptr;
}

inline std::string render_document(const IdealDocument& doc) {
    std::ostringstream os;
    for (const auto& [k, v] : doc.metadata) os << "#@ " << k << ": " << v << "\n";
    os << ring_header(*doc.ring) << "\n";
    for (const auto& g : doc.generators) os << g.to_string() << "\n";
    return os.str();
}

inline IdealDocument parse_document(const std::string& text) {
    IdealDocument doc;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.rfind("#@", 0) == 0) {
            const std::string body = detail::trim(line.substr(2));
            const auto colon = body.find(':');
            if (colon == std::string::npos) throw ParseError("metadata line without ':'", line_no, 1);
            doc.metadata[detail::trim(body.substr(0, colon))] = detail::trim(body.substr(colon + 1));
            continue;
        }
        if (line[0] == '#') continue;
        if (!doc.ring) {
            doc.ring = parse_ring_header(line, line_no);
            continue;
        }
        const std::string expr = line.substr(0, line.find('#'));
        doc.generators.push_back(parse_polynomial(expr, doc.ring, line_no));
    }
    if (!doc.ring) throw ParseError("missing ring header", line_no, 1);
    return doc;
}

inline IdealDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

/// The union ideal of a bundle with its provenance as metadata.
inline IdealDocument bundle_document(const CurveBundle& B) {
    IdealDocument doc{B.ring, minimal_generators(B.union_ideal), {}};
    doc.metadata["type"] = to_string(B.type);
    doc.metadata["seed"] = std::to_string(B.seed);
    doc.metadata["attempt"] = std::to_string(B.attempt);
    doc.metadata["degree"] = std::to_string(B.expected.total_degree);
    doc.metadata["genus"] = std::to_string(B.expected.total_genus);
    std::string comps;
    for (std::size_t i = 0; i < B.expected.degrees.size(); ++i)
        comps += (i ? " " : "") + std::string("(") + std::to_string(B.expected.degrees[i]) + "," +
                 std::to_string(B.expected.genera[i]) + ")";
    doc.metadata["components"] = comps;
    doc.metadata["double_points"] = std::to_string(B.expected.double_points);
    return doc;
}

/// Fixed-width grid with '-' for zeros, row labels 0..R and a column header.
inline std::string render_betti(const BettiTable& b) {
    std::size_t width = 1;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.columns(); ++c) width = std::max(width, std::to_string(b.at(r, c)).size());
    const std::size_t label = std::to_string(b.rows() == 0 ? 0 : b.rows() - 1).size();
    std::ostringstream os;
    os << std::string(label, ' ') << " |";
    for (std::size_t c = 0; c < b.columns(); ++c) os << ' ' << std::setw(static_cast<int>(width)) << c;
    os << "\n" << std::string(label + 1, '-') << '+' << std::string(b.columns() * (width + 1), '-') << "\n";
    for (std::size_t r = 0; r < b.rows(); ++r) {
        os << std::setw(static_cast<int>(label)) << r << " |";
        for (std::size_t c = 0; c < b.columns(); ++c) {
            os << ' ' << std::setw(static_cast<int>(width));
            if (b.at(r, c) == 0)
                os << '-';
            else
                os << b.at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json betti_to_json(const BettiTable& b) {
    return {{"format_version", kFormatVersion}, {"kind", "betti"}, {"grid", b.grid()}};
}

inline BettiTable betti_from_json(const nlohmann::json& j) {
    if (j.value("format_version", 0) != kFormatVersion || j.value("kind", "") != "betti")
        throw InputError("not a Betti table document of format version " + std::to_string(kFormatVersion));
    return BettiTable(j.at("grid").get<std::vector<std::vector<std::int64_t>>>());
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"note", c.note},
                          {"mandatory", c.mandatory},
                          {"probabilistic", c.probabilistic}});
    return {{"format_version", kFormatVersion},
            {"kind", "report"},
            {"subject", r.subject},
            {"passed", r.passed()},
            {"checks", checks}};
}

inline std::string render_report(const VerificationReport& r) {
    std::ostringstream os;
    os << r.subject << "\n";
    for (const auto& c : r.checks) {
        os << (c.passed ? "  ok    " : (c.mandatory ? "  FAIL  " : "  --    ")) << c.name << ": " << c.computed;
        if (!c.passed) os << " (expected " << c.expected << ")";
        if (c.probabilistic) os << " [probabilistic]";
        os << "\n";
    }
    os << (r.passed() ? "verdict: pass" : "verdict: FAIL") << "\n";
    return os.str();
}

}  // namespace gorcurves

#endif  // GORCURVES_IO_HPP
