#include "jetcomplex/systemfile.hpp"

#include "jetcomplex/cauchyfueter.hpp"
#include "jetcomplex/wfamily.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace jetcomplex {

using nlohmann::json;

namespace {

int name_index(const std::vector<std::string>& names, const std::string& s) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
    return -1;
}

void require_unique(const std::vector<std::string>& names, const char* what) {
    for (size_t a = 0; a < names.size(); ++a)
        for (size_t b = a + 1; b < names.size(); ++b)
            if (names[a] == names[b]) throw ParseError(std::string(what) + " '" + names[a] + "' declared twice");
}

ParsedSystem parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (doc.contains("schema_version") && !doc["schema_version"].is_string())
        throw ParseError("schema_version must be a string");

    ParsedSystem out{PDESystem(0, 1, 1), {}, {}, {}};
    try {
        out.variable_names = doc.at("variables").get<std::vector<std::string>>();
        out.unknown_names = doc.at("unknowns").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("missing or malformed 'variables'/'unknowns': ") + e.what());
    }
    if (out.variable_names.empty()) throw ParseError("at least one variable required");
    if (out.unknown_names.empty()) throw ParseError("at least one unknown required");
    require_unique(out.variable_names, "variable");
    require_unique(out.unknown_names, "unknown");

    if (!doc.contains("equations") || !doc["equations"].is_array())
        throw ParseError("'equations' must be an array");
    const json& eqs = doc["equations"];

    PDESystem sys(static_cast<int>(eqs.size()), static_cast<int>(out.unknown_names.size()),
                  static_cast<int>(out.variable_names.size()));
    for (size_t e = 0; e < eqs.size(); ++e) {
        std::string where = "equation " + std::to_string(e + 1);
        if (!eqs[e].is_object() || !eqs[e].contains("terms") || !eqs[e]["terms"].is_array())
            throw ParseError(where + ": expected an object with a 'terms' array");
        const json& terms = eqs[e]["terms"];
        if (terms.empty()) throw ParseError(where + ": empty equation (no terms)");
        for (size_t t = 0; t < terms.size(); ++t) {
            std::string twhere = where + ", term " + std::to_string(t + 1);
            const json& term = terms[t];
            if (!term.is_object()) throw ParseError(twhere + ": expected an object");
            std::string u, v, c;
            try {
                u = term.at("unknown").get<std::string>();
                v = term.at("variable").get<std::string>();
                c = term.at("coeff").is_string() ? term.at("coeff").get<std::string>()
                                                 : term.at("coeff").dump();
            } catch (const json::exception& ex) {
                throw ParseError(twhere + ": " + ex.what());
            }
            int ui = name_index(out.unknown_names, u);
            if (ui < 0) throw ParseError(twhere + ": unknown name '" + u + "' not declared");
            int vi = name_index(out.variable_names, v);
            if (vi < 0) throw ParseError(twhere + ": variable name '" + v + "' not declared");
            Rational coeff;
            try {
                coeff = Rational::parse(c);
            } catch (const std::exception& ex) {
                throw ParseError(twhere + ": malformed coefficient '" + c + "': " + ex.what());
            }
            sys.set_coeff(static_cast<int>(e), ui, vi,
                          sys.coeff(static_cast<int>(e), ui, vi) + coeff);
        }
    }
    try {
        sys.validate();
    } catch (const std::exception& ex) {
        throw ParseError(ex.what());
    }
    if (doc.contains("label") && doc["label"].is_string()) sys.set_label(doc["label"].get<std::string>());
    out.system = std::move(sys);
    for (size_t e = 0; e < eqs.size(); ++e) out.equation_names.push_back("E" + std::to_string(e + 1));
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw ParseError("unbalanced '(' in pair list: " + text);
        std::string body = text.substr(pos + 1, close - pos - 1);
        size_t comma = body.find(',');
        if (comma == std::string::npos) throw ParseError("pair without comma: (" + body + ")");
        try {
            int a = std::stoi(body.substr(0, comma));
            int b = std::stoi(body.substr(comma + 1));
            pairs.push_back({a, b});
        } catch (const std::exception&) {
            throw ParseError("malformed pair: (" + body + ")");
        }
        pos = close + 1;
    }
    if (pairs.empty()) throw ParseError("no (j0,j) pairs found in: " + text);
    return pairs;
}

ParsedSystem builtin_cauchy_fueter() {
    ParsedSystem out{cf_system(), cf::variable_names(), {"phi0", "phi1"}, {}};
    for (int i = 0; i < 4; ++i) out.equation_names.push_back("E" + std::to_string(i));
    return out;
}

ParsedSystem builtin_wfamily(int n, int m, const std::vector<std::pair<int, int>>& pairs) {
    WSystem w = [&] {
        try {
            return make_wsystem(n, m, pairs);
        } catch (const std::exception& ex) {
            throw ParseError(ex.what());
        }
    }();
    ParsedSystem out{w.base, w.variable_names(), {"phi0", "phi1"}, w.equation_names()};
    out.system.set_label("wfamily");
    return out;
}

ParsedSystem parse_system_text(const std::string& text) {
    // builtin aliases first
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) || !trimmed.empty()) trimmed += ch;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();

    if (trimmed == "cauchy-fueter") return builtin_cauchy_fueter();
    if (trimmed.rfind("wfamily:", 0) == 0) {
        std::string rest = trimmed.substr(8);
        size_t c1 = rest.find(',');
        size_t c2 = c1 == std::string::npos ? std::string::npos : rest.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("wfamily alias needs 'wfamily:n,m,[(j0,j),...]'");
        int n = 0, m = 0;
        try {
            n = std::stoi(rest.substr(0, c1));
            m = std::stoi(rest.substr(c1 + 1, c2 - c1 - 1));
        } catch (const std::exception&) {
            throw ParseError("wfamily alias: malformed n or m in '" + rest + "'");
        }
        return builtin_wfamily(n, m, parse_pair_list(rest.substr(c2 + 1)));
    }
    return parse_json(text);
}

ParsedSystem parse_system_source(const std::string& arg) {
    std::ifstream in(arg);
    if (in.good()) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_system_text(ss.str());
    }
    return parse_system_text(arg);
}

std::string print_system(const ParsedSystem& s) {
    json doc;
    doc["schema_version"] = "1";
    if (!s.system.label().empty()) doc["label"] = s.system.label();
    doc["variables"] = s.variable_names;
    doc["unknowns"] = s.unknown_names;
    json eqs = json::array();
    for (int e = 0; e < s.system.equations(); ++e) {
        json terms = json::array();
        for (int i = 0; i < s.system.unknowns(); ++i)
            for (int j = 0; j < s.system.variables(); ++j) {
                const Rational& c = s.system.coeff(e, i, j);
                if (c.is_zero()) continue;
                terms.push_back({{"unknown", s.unknown_names[static_cast<size_t>(i)]},
                                 {"variable", s.variable_names[static_cast<size_t>(j)]},
                                 {"coeff", c.str()}});
            }
        eqs.push_back({{"terms", terms}});
    }
    doc["equations"] = eqs;
    return doc.dump(2);
}

}  // namespace jetcomplex
