#ifndef COMPLEXFORGE_FIELD_JSON_HPP
#define COMPLEXFORGE_FIELD_JSON_HPP

#include "complexforge/errors.hpp"
#include "complexforge/identities.hpp"
#include "complexforge/poly.hpp"

#include <json.hpp>

#include <string>

namespace complexforge {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json term_entry(const Json& pos, const Monomial& m, const Rational& c) {
    Json e;
    e["pos"] = pos;
    e["monomial"] = {m.exp[0], m.exp[1], m.exp[2]};
    e["coeff"] = rational_to_string(c);
    return e;
}

inline void append_terms(Json& entries, const Json& pos, const PolyScalarField& f) {
    for (const auto& [m, c] : f.terms()) entries.push_back(term_entry(pos, m, c));
}

} // namespace detail

/// Canonical serialization: position-major, then graded-lex monomial order.
inline Json field_to_json(const PolyScalarField& f) {
    Json j;
    j["kind"] = "scalar";
    j["entries"] = Json::array();
    detail::append_terms(j["entries"], Json::array(), f);
    return j;
}

inline Json field_to_json(const PolyVectorField& v) {
    Json j;
    j["kind"] = "vector";
    j["entries"] = Json::array();
    for (int i = 0; i < 3; ++i) detail::append_terms(j["entries"], Json::array({i}), v[i]);
    return j;
}

inline Json field_to_json(const PolyTensorField& t) {
    Json j;
    j["kind"] = "tensor";
    j["entries"] = Json::array();
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            detail::append_terms(j["entries"], Json::array({i, k}), t(i, k));
    return j;
}

inline Json field_to_json(const FieldValue& f) {
    return std::visit([](const auto& v) { return field_to_json(v); }, f);
}

inline FieldValue field_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const auto& entries = j.at("entries");
        auto read_term = [](const Json& e, Monomial& m, Rational& c) {
            const auto& mono = e.at("monomial");
            for (std::size_t i = 0; i < 3; ++i) m.exp[i] = mono.at(i).get<std::uint32_t>();
            c = parse_rational(e.at("coeff").get<std::string>());
        };
        if (kind == "scalar") {
            PolyScalarField f;
            for (const auto& e : entries) {
                Monomial m;
                Rational c;
                read_term(e, m, c);
                f.add_term(m, c);
            }
            return f;
        }
        if (kind == "vector") {
            PolyVectorField v;
            for (const auto& e : entries) {
                const int i = e.at("pos").at(0).get<int>();
                if (i < 0 || i > 2) throw ParseError("vector pos out of range");
                Monomial m;
                Rational c;
                read_term(e, m, c);
                v[i].add_term(m, c);
            }
            return v;
        }
        if (kind == "tensor") {
            PolyTensorField t;
            for (const auto& e : entries) {
                const int i = e.at("pos").at(0).get<int>();
                const int k = e.at("pos").at(1).get<int>();
                if (i < 0 || i > 2 || k < 0 || k > 2) throw ParseError("tensor pos out of range");
                Monomial m;
                Rational c;
                read_term(e, m, c);
                t(i, k).add_term(m, c);
            }
            return t;
        }
        throw ParseError("unknown field kind '" + kind + "'");
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed field JSON: ") + e.what());
    }
}

inline FieldValue field_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("field JSON does not parse");
    return field_from_json(j);
}

} // namespace complexforge

#endif
