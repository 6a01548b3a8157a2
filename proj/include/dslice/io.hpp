#pragma once

// JSON file formats and structured reports.

#include "boundary.hpp"
#include "builtins.hpp"
#include "foxcalc.hpp"
#include "seifert.hpp"
#include "signature.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace dslice {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Matrices: {"name": ..., "epsilon": -1, "rows": [[...], ...]}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix int_matrix_from_json(const json& rows) {
    if (!rows.is_array()) throw Error("matrix rows must be a JSON array");
    const std::size_t n = rows.size();
    const std::size_t cols = n ? rows.at(0).size() : 0;
    IntMatrix m(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols) throw Error("matrix rows must have equal length");
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& v = rows[i][j];
            if (v.is_number_integer()) m(i, j) = Integer(v.get<std::int64_t>());
            else if (v.is_string()) m(i, j) = Integer(v.get<std::string>());
            else throw Error("matrix entries must be integers");
        }
    }
    return m;
}

inline json matrix_to_json(const std::string& name, const SeifertMatrix& m) {
    return {{"name", name}, {"epsilon", m.epsilon()}, {"rows", int_matrix_to_json(m.psi())}};
}

inline NamedMatrix matrix_from_json(const json& j) {
    if (!j.contains("rows")) throw Error("matrix file: missing 'rows'");
    return {j.value("name", std::string()), SeifertMatrix(int_matrix_from_json(j.at("rows")), j.value("epsilon", -1))};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("invalid JSON in '" + path + "': " + e.what());
    }
}

/// Resolves a built-in name, an inline literal `[[..],[..]]`, or a matrix file path;
/// `a#b#c` forms the connected sum. `epsilon` overrides the stored sign when nonzero.
inline SeifertMatrix resolve_matrix(const std::string& spec, int epsilon = 0) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, '#');) parts.push_back(part);
    if (parts.empty()) throw Error("empty matrix specification");
    std::optional<SeifertMatrix> acc;
    for (const auto& part : parts) {
        SeifertMatrix m;
        if (builtin_matrices().count(part)) {
            m = builtin_matrix(part);
        } else if (!part.empty() && part.front() == '[') {
            try {
                m = SeifertMatrix(int_matrix_from_json(json::parse(part)), -1);
            } catch (const json::exception& e) {
                throw Error("invalid inline matrix '" + part + "': " + e.what());
            }
        } else {
            std::ifstream probe(part);
            if (!probe) throw Error("unknown matrix '" + part + "' (not a built-in, literal or readable file)");
            m = matrix_from_json(read_json_file(part)).matrix;
        }
        if (epsilon != 0) m = SeifertMatrix(m.psi(), epsilon);
        acc = acc ? connected_sum(*acc, m) : m;
    }
    return *acc;
}

// ---------------------------------------------------------------------------
// Presentations

inline json presentation_to_json(const Presentation& p) {
    json j;
    j["generators"] = p.generators();
    json rels = json::array();
    for (const auto& r : p.relators()) {
        json jr{{"name", r.name}};
        if (r.word) jr["word"] = to_string(*r.word);
        else jr["omits"] = r.omitted_generators;
        rels.push_back(jr);
    }
    j["relators"] = rels;
    json images = json::object();
    for (const auto& [g, img] : p.abelianization().images()) images[g] = to_string(img);
    j["abelianization"] = images;
    if (p.longitude()) j["longitude"] = to_string(*p.longitude());
    if (p.distinguished_generator()) j["distinguished"] = *p.distinguished_generator();
    return j;
}

inline Presentation presentation_from_json(const json& j) {
    try {
        auto generators = j.at("generators").get<std::vector<std::string>>();
        std::set<std::string> names(generators.begin(), generators.end());
        std::vector<Relator> relators;
        for (const auto& jr : j.at("relators")) {
            Relator r;
            r.name = jr.value("name", "r" + std::to_string(relators.size() + 1));
            if (jr.contains("word")) r.word = parse_word(jr.at("word").get<std::string>(), &names);
            else if (jr.contains("omits")) r.omitted_generators = jr.at("omits").get<std::set<std::string>>();
            else throw Error("relator " + r.name + " needs 'word' or 'omits'");
            relators.push_back(std::move(r));
        }
        AbelianizationMap ab;
        for (const auto& [g, img] : j.at("abelianization").items()) ab.set(g, parse_laurent(img.get<std::string>()));
        std::optional<GroupWord> longitude;
        if (j.contains("longitude")) longitude = parse_word(j.at("longitude").get<std::string>(), &names);
        std::optional<std::string> distinguished;
        if (j.contains("distinguished")) distinguished = j.at("distinguished").get<std::string>();
        return Presentation(std::move(generators), std::move(relators), std::move(ab), std::move(longitude),
                            std::move(distinguished));
    } catch (const json::exception& e) {
        throw Error(std::string("invalid presentation: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const ObstructionReport& r) {
    json gens = json::array();
    for (const auto& g : r.generators_specialized) gens.push_back(to_string(g));
    json j{{"verdict", to_string(r.verdict)},
           {"variable", r.variable},
           {"target", to_string(r.target)},
           {"generators_specialized", gens},
           {"gcd", to_string(r.gcd)}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline ObstructionReport obstruction_report_from_json(const json& j) {
    ObstructionReport r;
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.variable = j.at("variable").get<std::string>();
    r.target = parse_laurent(j.at("target").get<std::string>());
    for (const auto& g : j.at("generators_specialized")) r.generators_specialized.push_back(parse_laurent(g.get<std::string>()));
    r.gcd = parse_laurent(j.at("gcd").get<std::string>());
    if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
    return r;
}

inline json to_json(const HyperbolicCertificate& c) {
    json pts = json::array();
    for (const auto& w : c.tested_points) pts.push_back(to_string(w));
    json j{{"verdict", to_string(c.verdict)}, {"tested_points", pts}};
    if (c.witness) j["witness"] = {{"omega", to_string(c.witness->first)}, {"signature", c.witness->second}};
    return j;
}

inline HyperbolicCertificate hyperbolic_certificate_from_json(const json& j) {
    HyperbolicCertificate c;
    const auto v = j.at("verdict").get<std::string>();
    if (v == "Violated") c.verdict = HyperbolicVerdict::Violated;
    else if (v == "VanishesOnTestSet") c.verdict = HyperbolicVerdict::VanishesOnTestSet;
    else throw Error("unknown hyperbolic verdict '" + v + "'");
    for (const auto& p : j.at("tested_points")) c.tested_points.push_back(parse_root_of_unity(p.get<std::string>()));
    if (j.contains("witness"))
        c.witness = {parse_root_of_unity(j["witness"].at("omega").get<std::string>()),
                     j["witness"].at("signature").get<int>()};
    return c;
}

inline json to_json(const DsBound& b) {
    json j{{"bound", b.bound}};
    if (b.witness) j["witness"] = {{"omega", to_string(*b.witness)}, {"signature", b.witness_signature}};
    return j;
}

inline DsBound ds_bound_from_json(const json& j) {
    DsBound b;
    b.bound = j.at("bound").get<int>();
    if (j.contains("witness")) {
        b.witness = parse_root_of_unity(j["witness"].at("omega").get<std::string>());
        b.witness_signature = j["witness"].at("signature").get<int>();
    }
    return b;
}

inline json to_json(const SignatureProfile& p) {
    json arcs = json::array(), jumps = json::array();
    for (const auto& a : p.arcs)
        arcs.push_back({{"from", to_string(a.from)}, {"to", to_string(a.to)}, {"sample", to_string(a.sample)},
                        {"value", a.value}});
    for (const auto& jp : p.jumps) {
        json e{{"exact", jp.exact}, {"bracket_lo", to_string(jp.bracket_lo)}, {"bracket_hi", to_string(jp.bracket_hi)},
               {"approx_turn", jp.approx_turn}};
        if (jp.point) e["point"] = to_string(*jp.point);
        if (jp.value) e["value"] = *jp.value;
        jumps.push_back(e);
    }
    std::vector<std::string> alex;
    for (const auto& c : p.alexander.coeffs()) alex.push_back(to_string(c));
    return {{"alexander", alex}, {"resolution", p.resolution}, {"arcs", arcs}, {"jumps", jumps}};
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

inline SignatureProfile signature_profile_from_json(const json& j) {
    SignatureProfile p;
    std::vector<Rational> alex;
    for (const auto& c : j.at("alexander")) alex.push_back(parse_rational(c.get<std::string>()));
    p.alexander = RationalPoly(std::move(alex));
    p.resolution = j.at("resolution").get<long>();
    for (const auto& a : j.at("arcs"))
        p.arcs.push_back({parse_rational(a.at("from").get<std::string>()), parse_rational(a.at("to").get<std::string>()),
                          parse_root_of_unity(a.at("sample").get<std::string>()), a.at("value").get<int>()});
    for (const auto& e : j.at("jumps")) {
        ProfileJump jp;
        jp.exact = e.at("exact").get<bool>();
        jp.bracket_lo = parse_rational(e.at("bracket_lo").get<std::string>());
        jp.bracket_hi = parse_rational(e.at("bracket_hi").get<std::string>());
        jp.approx_turn = e.at("approx_turn").get<double>();
        if (e.contains("point")) jp.point = parse_root_of_unity(e.at("point").get<std::string>());
        if (e.contains("value")) jp.value = e.at("value").get<int>();
        p.jumps.push_back(jp);
    }
    return p;
}

inline json sublattice_to_json(const Sublattice& l) {
    json cols = json::array();
    for (std::size_t j = 0; j < l.rank(); ++j) {
        json v = json::array();
        for (std::size_t i = 0; i < l.ambient_dimension(); ++i) v.push_back(to_int64(l.basis()(i, j)));
        cols.push_back(v);
    }
    return {{"ambient", l.ambient_dimension()}, {"basis", cols}};
}

inline Sublattice sublattice_from_json(const json& j) {
    std::vector<std::vector<Integer>> vecs;
    for (const auto& v : j.at("basis")) {
        std::vector<Integer> col;
        for (const auto& x : v) col.emplace_back(x.get<std::int64_t>());
        vecs.push_back(std::move(col));
    }
    return Sublattice::from_vectors(j.at("ambient").get<std::size_t>(), vecs);
}

}  // namespace dslice
