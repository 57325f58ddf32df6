#include "fpart/json_io.hpp"

#include <cmath>
#include <limits>

#include "fpart/errors.hpp"

namespace fpart {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw invalid_input(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw invalid_input(std::string(what) + ": expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw invalid_input(std::string(what) + ": integer out of range");
    return static_cast<int>(v);
}

}  // namespace

Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw invalid_input("not a decimal integer: \"" + s + "\"");
        return BigInt(s);
    }
    throw invalid_input("expected an integer or a decimal string");
}

Json to_json(const CycInt& v) {
    if (auto r = as_rational_integer(v)) {
        Json j = to_json(*r);
        if (j.is_number_integer()) return j;
    }
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
    return Json{{"order", v.order()}, {"coeffs", std::move(coeffs)}};
}

CycInt cycint_from_json(const Json& j, std::uint32_t order) {
    if (j.is_number_integer() || j.is_string()) return CycInt::integer(order, bigint_from_json(j));
    const Json& o = require(j, "order", "cyclotomic integer");
    if (!o.is_number_unsigned() || o.get<std::uint64_t>() == 0 || o.get<std::uint64_t>() > 1u << 20)
        throw invalid_input("cyclotomic integer: order must be a positive integer");
    const Json& cj = require(j, "coeffs", "cyclotomic integer");
    if (!cj.is_array()) throw invalid_input("cyclotomic integer: coeffs must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& c : cj) coeffs.push_back(bigint_from_json(c));
    CycInt v(static_cast<std::uint32_t>(o.get<std::uint64_t>()), std::move(coeffs));
    return v.order() == order ? v : change_order(v, order);
}

Json to_json(const GroupSpec& group) { return Json{{"orders", group.orders()}}; }

GroupSpec group_from_json(const Json& j) {
    const Json& o = require(j, "orders", "group");
    if (!o.is_array()) throw invalid_input("group: orders must be an array");
    std::vector<int> orders;
    for (const auto& n : o) orders.push_back(int_from_json(n, "group order"));
    return GroupSpec(std::move(orders));
}

Json to_json(const Element& g) { return Json(g.residues); }

Element element_from_json(const GroupSpec& group, const Json& j) {
    Element g;
    if (j.is_number_integer() && group.factors() == 1) {
        g = Element{int_from_json(j, "element")};
    } else if (j.is_array()) {
        for (const auto& x : j) g.residues.push_back(int_from_json(x, "element residue"));
    } else {
        throw invalid_input("element: expected an array of residues");
    }
    group.require_element(g);
    return g;
}

Json to_json(const Code& code) {
    Json gens = Json::array();
    for (const auto& g : code.generators()) gens.push_back(to_json(g));
    Json elems = Json::array();
    for (const auto& g : code.elements()) elems.push_back(to_json(g));
    return Json{{"generators", std::move(gens)}, {"size", code.size()}, {"elements", std::move(elems)}};
}

Code code_from_json(const GroupSpec& group, const Json& j, const Limits& limits) {
    const Json& gj = require(j, "generators", "code");
    if (!gj.is_array()) throw invalid_input("code: generators must be an array");
    std::vector<Element> gens;
    for (const auto& g : gj) gens.push_back(element_from_json(group, g));
    return generate(group, gens, limits);
}

Json to_json(const Partition& partition) {
    Json blocks = Json::array();
    for (const auto& block : partition.blocks()) {
        Json b = Json::array();
        for (const auto& g : block) b.push_back(to_json(g));
        blocks.push_back(std::move(b));
    }
    return Json{{"blocks", std::move(blocks)}};
}

Partition partition_from_json(const GroupSpec& group, const Json& j, const Limits& limits) {
    const Json& bj = require(j, "blocks", "partition");
    if (!bj.is_array()) throw invalid_input("partition: blocks must be an array");
    std::vector<std::vector<Element>> blocks;
    for (const auto& b : bj) {
        if (!b.is_array()) throw invalid_input("partition: each block must be an array");
        auto& block = blocks.emplace_back();
        for (const auto& g : b) block.push_back(element_from_json(group, g));
    }
    return Partition::from_blocks(group, blocks, limits);
}

Json to_json(const KrawtchoukMatrix& k) {
    Json values = Json::array();
    Json approx = Json::array();
    for (std::size_t l = 0; l < k.rows(); ++l) {
        Json row = Json::array();
        Json arow = Json::array();
        for (std::size_t m = 0; m < k.cols(); ++m) {
            row.push_back(to_json(k(l, m)));
            const auto [re, im] = approx_complex(k(l, m));
            // Round away float noise so output is stable.
            auto tidy = [](double x) { return std::abs(x) < 1e-9 ? 0.0 : std::round(x * 1e9) / 1e9; };
            arow.push_back(Json::array({tidy(re), tidy(im)}));
        }
        values.push_back(std::move(row));
        approx.push_back(std::move(arow));
    }
    Json rows = Json::array();
    for (const auto& g : k.row_labels) rows.push_back(to_json(g));
    Json cols = Json::array();
    for (const auto& g : k.col_labels) cols.push_back(to_json(g));
    return Json{{"values", std::move(values)}, {"approx", std::move(approx)}, {"row_labels", std::move(rows)},
                {"col_labels", std::move(cols)}};
}

Json to_json(const Matrix<BigInt>& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix<BigInt> bigint_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw invalid_input("matrix: expected an array of rows");
    std::vector<std::vector<BigInt>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw invalid_input("matrix: each row must be an array");
        auto& row = rows.emplace_back();
        for (const auto& x : r) row.push_back(bigint_from_json(x));
    }
    return from_rows(rows);
}

Json to_json(const Poset& poset) {
    Json cover = Json::array();
    for (const auto& [a, b] : poset.covers()) cover.push_back(Json::array({a + 1, b + 1}));
    return Json{{"n", poset.size()}, {"cover", std::move(cover)}};
}

Poset poset_from_json(const Json& j) {
    const int n = int_from_json(require(j, "n", "poset"), "poset size");
    std::vector<std::pair<int, int>> covers;
    if (j.contains("cover")) {
        const Json& cj = j.at("cover");
        if (!cj.is_array()) throw invalid_input("poset: cover must be an array");
        for (const auto& p : cj) {
            if (!p.is_array() || p.size() != 2) throw invalid_input("poset: each cover must be a pair [a, b]");
            const int a = int_from_json(p[0], "poset element");
            const int b = int_from_json(p[1], "poset element");
            if (a < 1 || a > n || b < 1 || b > n) throw invalid_input("poset: cover element out of range 1..n");
            covers.emplace_back(a - 1, b - 1);
        }
    }
    return Poset::from_covers(n, covers);
}

Json to_json(const LinearEnumerator& e) { return Json(e.counts); }

Json to_json(const ProductEnumerator& e) {
    Json out = Json::array();
    for (const auto& [key, count] : e.counts) out.push_back(Json{{"blocks", key}, {"count", count}});
    return out;
}

Json to_json(const SymmetrizedEnumerator& e) {
    Json out = Json::array();
    for (const auto& [key, count] : e.counts) out.push_back(Json{{"composition", key.counts}, {"count", count}});
    return out;
}

}  // namespace fpart
