#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "focc/hopf.hpp"

namespace focc {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Field descriptors in documents: {"base": "Q"|"Q(i)", "param": "q"|null}
// ---------------------------------------------------------------------------

struct DocField {
    bool gaussian = false;
    std::string param; // empty: no parameter
};

inline DocField parse_doc_field(const Json& j)
{
    DocField f;
    if (j.contains("field")) {
        const Json& fj = j.at("field");
        std::string base = fj.value("base", "Q");
        if (base == "Q(i)")
            f.gaussian = true;
        else if (base != "Q")
            throw std::invalid_argument("unknown scalar base '" + base + "'");
        if (fj.contains("param") && !fj.at("param").is_null())
            f.param = fj.at("param").template get<std::string>();
    }
    return f;
}

inline Json doc_field_json(const DocField& f)
{
    Json j;
    j["base"] = f.gaussian ? "Q(i)" : "Q";
    if (f.param.empty())
        j["param"] = nullptr;
    else
        j["param"] = f.param;
    return j;
}

// ---------------------------------------------------------------------------
// Coalgebra documents.
// ---------------------------------------------------------------------------

template <ScalarField K>
Coalgebra<K> coalgebra_from_json(const Json& j)
{
    DocField f = parse_doc_field(j);
    FieldDesc fd{f.param};
    Coalgebra<K> C;
    C.field = fd;
    C.labels = j.at("basis").get<std::vector<std::string>>();
    C.n = static_cast<int>(C.labels.size());
    C.coproduct.resize(C.n);
    C.counit.assign(C.n, K(0));
    for (const auto& [label, rows] : j.at("coproduct").items()) {
        int i = C.label_index(label);
        for (const auto& row : rows) {
            int a = C.label_index(row.at(0).template get<std::string>());
            int b = C.label_index(row.at(1).template get<std::string>());
            K c = parse_scalar<K>(row.at(2).template get<std::string>(), fd);
            C.coproduct[i].emplace_back(a, b, c);
        }
    }
    for (const auto& [label, val] : j.at("counit").items())
        C.counit[C.label_index(label)] = parse_scalar<K>(val.template get<std::string>(), fd);
    return C;
}

template <ScalarField K>
Json coalgebra_to_json(const Coalgebra<K>& C, bool gaussian)
{
    Json j;
    j["field"] = doc_field_json({gaussian, C.field.param});
    j["basis"] = C.labels;
    Json cop = Json::object();
    for (int i = 0; i < C.n; ++i) {
        Json rows = Json::array();
        for (const auto& [a, b, c] : C.coproduct[i])
            rows.push_back({C.labels[a], C.labels[b], scalar_str(c, C.field)});
        cop[C.labels[i]] = rows;
    }
    j["coproduct"] = cop;
    Json eps = Json::object();
    for (int i = 0; i < C.n; ++i)
        eps[C.labels[i]] = scalar_str(C.counit[i], C.field);
    j["counit"] = eps;
    return j;
}

// ---------------------------------------------------------------------------
// Hopf documents extend coalgebra documents with product/unit/antipode.
// ---------------------------------------------------------------------------

template <ScalarField K>
HopfAlgebra<K> hopf_from_json(const Json& j)
{
    Coalgebra<K> C = coalgebra_from_json<K>(j);
    FieldDesc fd = C.field;
    auto be = std::make_shared<TableBackend<K>>();
    be->labels = C.labels;
    be->coproduct_table = C.coproduct;
    be->counit_table = C.counit;
    be->antipode_table.resize(C.n);
    be->product.resize(C.n, std::vector<std::optional<SparseVec<K>>>(C.n));
    for (const auto& [label, rows] : j.at("antipode").items()) {
        int i = C.label_index(label);
        for (const auto& row : rows)
            be->antipode_table[i].emplace_back(C.label_index(row.at(0).template get<std::string>()),
                                               parse_scalar<K>(row.at(1).template get<std::string>(), fd));
    }
    bool partial = false;
    for (const auto& [la, cols] : j.at("product").items()) {
        int a = C.label_index(la);
        for (const auto& [lb, rows] : cols.items()) {
            int b = C.label_index(lb);
            SparseVec<K> v;
            for (const auto& row : rows)
                v.emplace_back(C.label_index(row.at(0).template get<std::string>()),
                               parse_scalar<K>(row.at(1).template get<std::string>(), fd));
            be->product[a][b] = std::move(v);
        }
    }
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            partial = partial || !be->product[a][b].has_value();
    be->is_total = !partial;

    HopfAlgebra<K> H;
    H.field = fd;
    H.backend = be;
    H.unit = C.label_index(j.at("unit").template get<std::string>());
    H.truncation = j.value("truncation", 0);
    if (j.contains("generators"))
        for (const auto& g : j.at("generators"))
            H.generators.push_back(C.label_index(g.template get<std::string>()));
    else
        for (int i = 0; i < C.n; ++i)
            if (i != H.unit)
                H.generators.push_back(i);
    return H;
}

template <ScalarField K>
Json hopf_to_json(const HopfAlgebra<K>& H, bool gaussian)
{
    Coalgebra<K> C = H.coalgebra();
    Json j = coalgebra_to_json(C, gaussian);
    j["unit"] = H.label(H.unit);
    Json S = Json::object();
    for (int i = 0; i < H.n(); ++i) {
        Json rows = Json::array();
        for (const auto& [t, c] : H.antipode(i))
            rows.push_back({H.label(t), scalar_str(c, H.field)});
        S[H.label(i)] = rows;
    }
    j["antipode"] = S;
    Json P = Json::object();
    for (int a = 0; a < H.n(); ++a) {
        Json cols = Json::object();
        for (int b = 0; b < H.n(); ++b) {
            auto p = H.mul_chain_sum(
                {{SparseVec<K>{{a, K(1)}}, SparseVec<K>{{b, K(1)}}}});
            if (!p)
                continue; // outside the truncation window
            Json rows = Json::array();
            for (const auto& [t, c] : *p)
                rows.push_back({H.label(t), scalar_str(c, H.field)});
            cols[H.label(b)] = rows;
        }
        P[H.label(a)] = cols;
    }
    j["product"] = P;
    if (H.truncation > 0) {
        j["truncation"] = H.truncation;
        Json deg = Json::object();
        for (int i = 0; i < H.n(); ++i)
            deg[H.label(i)] = H.degree(i);
        j["degree"] = deg;
    }
    Json gens = Json::array();
    for (int g : H.generators)
        gens.push_back(H.label(g));
    j["generators"] = gens;
    return j;
}

// ---------------------------------------------------------------------------
// Vector expressions: `coeff*label (+ ...)`, labels either plain basis labels
// or bracketed tensors `[a(x)b]` (unicode tensor signs accepted).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string normalize_tensor_signs(std::string s)
{
    const std::string uni = "\xE2\x8A\x97"; // the tensor sign
    size_t pos;
    while ((pos = s.find(uni)) != std::string::npos)
        s.replace(pos, uni.size(), "(x)");
    return s;
}

inline std::vector<std::string> split_terms(const std::string& s)
{
    std::vector<std::string> terms;
    int depth = 0;
    std::string cur;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(' || c == '[')
            ++depth;
        if (c == ')' || c == ']')
            --depth;
        if ((c == '+' || c == '-') && depth == 0 && !cur.empty() &&
            cur.find_first_not_of(" \t") != std::string::npos) {
            // do not split inside "^-" exponents or leading signs
            char prev = 0;
            for (size_t p = k; p-- > 0;) {
                if (!std::isspace(static_cast<unsigned char>(s[p]))) {
                    prev = s[p];
                    break;
                }
            }
            if (prev != '^' && prev != '*' && prev != '+' && prev != '-' && prev != '(') {
                terms.push_back(cur);
                cur.clear();
                if (c == '-')
                    cur = "-";
                continue;
            }
        }
        cur += c;
    }
    if (cur.find_first_not_of(" \t-") != std::string::npos || !cur.empty())
        terms.push_back(cur);
    return terms;
}

inline std::pair<std::string, std::string> split_coeff_label(const std::string& term)
{
    // the label is the suffix after the last '*' at depth zero; a missing '*'
    // means the whole term is a label with an optional sign
    int depth = 0;
    int split = -1;
    for (size_t k = 0; k < term.size(); ++k) {
        char c = term[k];
        if (c == '(' || c == '[')
            ++depth;
        if (c == ')' || c == ']')
            --depth;
        if (c == '*' && depth == 0)
            split = static_cast<int>(k);
    }
    auto trim = [](std::string v) {
        size_t a = v.find_first_not_of(" \t");
        size_t b = v.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
    };
    if (split < 0) {
        std::string lbl = trim(term);
        std::string coeff = "1";
        if (!lbl.empty() && lbl[0] == '-') {
            coeff = "-1";
            lbl = trim(lbl.substr(1));
        }
        return {coeff, lbl};
    }
    return {trim(term.substr(0, split)), trim(term.substr(split + 1))};
}

} // namespace detail

// parse a linear combination of basis labels into a dense vector
template <ScalarField K>
Vec<K> parse_vector_expr(const std::string& text, const std::vector<std::string>& labels,
                         const FieldDesc& fd)
{
    std::string s = detail::normalize_tensor_signs(text);
    Vec<K> out(labels.size(), K(0));
    for (const auto& term : detail::split_terms(s)) {
        auto [coeff, label] = detail::split_coeff_label(term);
        if (label.empty())
            throw std::invalid_argument("vector expression: empty label in '" + term + "'");
        // tensor-class labels may arrive without their brackets (some shells
        // and option parsers strip them)
        std::string bracketed = "[" + label + "]";
        int idx = -1;
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label || labels[i] == bracketed) {
                idx = static_cast<int>(i);
                break;
            }
        if (idx < 0)
            throw std::invalid_argument("vector expression: unknown basis label '" + label + "'");
        out[idx] += parse_scalar<K>(coeff, fd);
    }
    return out;
}

// report fragments shared by CLI commands
template <ScalarField K>
Json subspace_json(const Subspace<K>& S, const std::vector<std::string>& labels,
                   const FieldDesc& fd)
{
    Json rows = Json::array();
    for (int r = 0; r < S.dim(); ++r) {
        Json row = Json::array();
        Vec<K> v = S.basis_vector(r);
        for (size_t t = 0; t < v.size(); ++t)
            if (!v[t].is_zero())
                row.push_back({labels[t], scalar_str(v[t], fd)});
        rows.push_back(row);
    }
    return rows;
}

inline Json certificate_json(const Certificate& c)
{
    Json j;
    j["complete"] = c.complete;
    j["truncation"] = c.truncation;
    if (!c.complete)
        j["witness"] = c.witness;
    return j;
}

} // namespace focc
