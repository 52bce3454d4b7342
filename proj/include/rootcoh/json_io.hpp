#pragma once

// JSON (de)serialisation for chains, cochains and reports, plus the DOT
// rendering of degree-2 chain graphs. All output is deterministic: ordered
// keys, canonical generator order.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rootcoh/cochain.hpp"
#include "rootcoh/cohomology.hpp"
#include "rootcoh/lie_model.hpp"

namespace rootcoh {

using Json = nlohmann::ordered_json;

inline Json coeffs_to_json(const Coeffs& c)
{
    Json a = Json::array();
    for (int64_t x : c) a.push_back(x);
    return a;
}

inline Json root_to_json(const RootSystem& rs, int id)
{
    return coeffs_to_json(rs.root(id).coeffs);
}

inline Json chain_to_json(const RootSystem& rs, const Chain& c)
{
    Json a = Json::array();
    for (int id : c.entries()) a.push_back(root_to_json(rs, id));
    return a;
}

inline int root_from_json(const RootSystem& rs, const Json& j)
{
    if (!j.is_array() || static_cast<int>(j.size()) != rs.rank())
        throw MalformedInput("a root must be an array of " + std::to_string(rs.rank()) +
                             " integers");
    Coeffs c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw MalformedInput("root coordinates must be integers");
        c.push_back(x.get<int64_t>());
    }
    auto id = rs.find(c);
    if (!id) throw MalformedInput("not a root of " + rs.name() + ": " + j.dump());
    return *id;
}

inline Chain chain_from_json(const RootSystem& rs, const Json& j)
{
    if (!j.is_array() || j.empty()) throw MalformedInput("a chain must be a nonempty array of roots");
    std::vector<int> e;
    for (const auto& r : j) e.push_back(root_from_json(rs, r));
    if (!is_valid_chain(rs, std::span<const int>(e)))
        throw MalformedInput("not a chain generator: " + j.dump());
    return Chain(std::move(e));
}

inline Json monomial_to_json(const Monomial& m, const VariableTable& vars)
{
    Json j = Json::object();
    for (size_t i = 0; i < vars.size(); ++i)
        j[vars.name(i)] = m.exp(i);
    return j;
}

inline Monomial monomial_from_json(const Json& j, const VariableTable& vars)
{
    Monomial m = Monomial::identity(vars.size());
    if (!j.is_object()) throw MalformedInput("a monomial must be an object of exponents");
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = vars.find(it.key());
        if (idx < 0) throw MalformedInput("unknown variable " + it.key());
        if (!it.value().is_number_integer())
            throw MalformedInput("exponent of " + it.key() + " must be an integer");
        m.exp(static_cast<size_t>(idx)) = it.value().get<int64_t>();
    }
    return m;
}

inline Json cochain_to_json(const RootSystem& rs, const Cochain& w)
{
    Json j = Json::object();
    j["root_system"] = rs.name();
    j["degree"] = w.degree();
    j["variables"] = w.variables().names();
    Json vals = Json::array();
    for (const auto& [c, m] : w.values()) {
        Json e = Json::object();
        e["chain"] = chain_to_json(rs, c);
        e["monomial"] = monomial_to_json(m, w.variables());
        vals.push_back(std::move(e));
    }
    j["values"] = std::move(vals);
    return j;
}

// Loads a cochain; if the file names a root system it must match `rs`.
// With "symmetric_closure": true the file may list one orientation per
// unordered pair and the loader fills the reversal (with its sign).
inline Cochain cochain_from_json(const RootSystem& rs, const Json& j)
{
    if (!j.is_object()) throw MalformedInput("cochain file must be a JSON object");
    if (j.contains("root_system")) {
        std::string n = j.at("root_system").get<std::string>();
        if (n != rs.name())
            throw MalformedInput("cochain is over " + n + ", requested " + rs.name());
    }
    if (!j.contains("degree") || !j.at("degree").is_number_integer())
        throw MalformedInput("cochain file needs an integer \"degree\"");
    int degree = j.at("degree").get<int>();
    if (degree < 1) throw MalformedInput("cochain degree must be >= 1");
    std::vector<std::string> names;
    if (j.contains("variables"))
        for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());
    VariableTable vars(names);
    Cochain w(degree, vars);
    bool closure = j.value("symmetric_closure", false);
    if (j.contains("values")) {
        for (const auto& e : j.at("values")) {
            Chain c = chain_from_json(rs, e.at("chain"));
            if (c.degree() != degree) throw MalformedInput("chain degree mismatch in values");
            Monomial m = monomial_from_json(e.at("monomial"), vars);
            if (!w.value(c).is_identity() && w.value(c) != m)
                throw MalformedInput("conflicting values for " + e.at("chain").dump());
            w.set(c, m);
        }
    }
    if (closure) {
        Cochain filled = w;
        int64_t sign = reversal_sign(degree);
        for (const auto& [c, m] : w.values()) {
            Chain r = c.reversed();
            Monomial expect = m.scaled(sign);
            Monomial have = filled.value(r);
            if (have.is_identity())
                filled.set(r, expect);
            else if (have != expect)
                throw MalformedInput("symmetric_closure conflict at a listed pair");
        }
        return filled;
    }
    return w;
}

inline Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw MalformedInput("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Json chainsum_to_json(const RootSystem& rs, const ChainSum& s)
{
    Json a = Json::array();
    for (const auto& [c, k] : s.terms()) {
        Json e = Json::object();
        e["coeff"] = k;
        e["chain"] = chain_to_json(rs, c);
        a.push_back(std::move(e));
    }
    return a;
}

// xi file: object keyed by Bourbaki index, values monomial objects.
inline std::map<int, Monomial> xi_from_json(const RootSystem& rs, const Json& j,
                                            const VariableTable& vars)
{
    if (!j.is_object()) throw MalformedInput("xi file must be an object keyed by simple-root index");
    std::map<int, Monomial> xi;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = 0;
        try {
            idx = std::stoi(it.key());
        } catch (...) {
            throw MalformedInput("xi keys must be simple-root indices, got " + it.key());
        }
        if (idx < 1 || idx > rs.rank())
            throw MalformedInput("xi index out of range: " + it.key());
        xi.emplace(idx, monomial_from_json(it.value(), vars));
    }
    return xi;
}

// ---------------------------------------------------------------------------
// DOT rendering of the degree-2 generators, optionally coloured by a 2-form.

inline std::string dot_t2(const RootSystem& rs, const std::optional<Cochain>& w,
                          int degree_cap = kDefaultDegreeCap)
{
    static const char* palette[] = {"gray50", "red",    "blue",   "green3", "orange",
                                    "purple", "brown",  "cyan3",  "magenta", "black"};
    constexpr size_t npal = sizeof(palette) / sizeof(palette[0]);

    auto node = [&](int id) {
        std::string s = "\"[";
        const Coeffs& c = rs.root(id).coeffs;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]\"";
    };

    std::vector<Chain> gens = enumerate_chains(rs, 2, std::max(degree_cap, 2));
    std::map<Monomial, size_t> colour;
    if (w) {
        std::set<Monomial> values;
        for (const Chain& c : gens) values.insert(w->value(c));
        size_t i = 0;
        for (const Monomial& m : values) colour[m] = i++ % npal;
    }

    std::ostringstream out;
    out << "digraph T2_" << rs.name() << " {\n";
    if (w) {
        out << "  label=\"";
        bool first = true;
        for (const auto& [m, i] : colour) {
            if (!first) out << "; ";
            out << m.str(w->variables()) << ": " << palette[i];
            first = false;
        }
        out << "\";\n";
    }
    for (int id = 0; id < rs.num_roots(); ++id)
        out << "  " << node(id) << ";\n";
    for (const Chain& c : gens) {
        out << "  " << node(c.at(0)) << " -> " << node(c.at(1));
        if (w) out << " [color=" << palette[colour.at(w->value(c))] << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rootcoh
