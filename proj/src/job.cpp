#include "fpart/job.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fpart/errors.hpp"
#include "fpart/induced.hpp"
#include "fpart/suites.hpp"

namespace fpart {

namespace {

const Json& field(const JobSpec& job, const char* key) {
    if (!job.payload.contains(key)) throw invalid_input(job.command + ": missing \"" + key + "\"");
    return job.payload.at(key);
}

std::size_t size_field(const JobSpec& job, const char* key) {
    const Json& j = field(job, key);
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1 || j.get<std::int64_t>() > 64)
        throw invalid_input(job.command + ": \"" + key + "\" must be an integer in 1..64");
    return j.get<std::size_t>();
}

Json partition_report(const Partition& p) {
    Json j = to_json(p);
    j["count"] = p.block_count();
    j["text"] = to_string(p);
    return j;
}

Json witness_report(const std::optional<DualityWitness>& w) {
    if (!w) return nullptr;
    return Json{{"first", to_json(w->first)}, {"second", to_json(w->second)}, {"detail", w->detail}};
}

Json header(const JobSpec& job) { return Json{{"command", job.command}}; }

bool has_zero_block(const Partition& p) { return p.block_ranks(0).size() == 1; }

Json run_dual(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition p = partition_from_json(g, field(job, "partition"), job.limits);
    const Partition d = dual_partition(p, job.limits);
    Json r = header(job);
    r["group"] = to_json(g);
    r["partition"] = partition_report(p);
    r["dual"] = partition_report(d);
    r["krawtchouk"] = to_json(krawtchouk(p, d, job.limits));
    r["ok"] = true;
    return r;
}

Json run_bidual(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition p = partition_from_json(g, field(job, "partition"), job.limits);
    const Partition d = dual_partition(p, job.limits);
    const Partition dd = dual_partition(d, job.limits);
    Json r = header(job);
    r["group"] = to_json(g);
    r["partition"] = partition_report(p);
    r["dual"] = partition_report(d);
    r["bidual"] = partition_report(dd);
    r["reflexive"] = dd == p;
    r["ok"] = refines(dd, p);
    return r;
}

Json run_reflexive(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition p = partition_from_json(g, field(job, "partition"), job.limits);
    const Partition d = dual_partition(p, job.limits);
    const Partition dd = dual_partition(d, job.limits);
    const bool by_count = p.block_count() == d.block_count();
    Json r = header(job);
    r["group"] = to_json(g);
    r["partition"] = partition_report(p);
    r["reflexive"] = by_count;
    r["blocks"] = p.block_count();
    r["dual_blocks"] = d.block_count();
    r["bidual"] = partition_report(dd);
    r["ok"] = by_count == (dd == p);
    return r;
}

Json run_krawtchouk(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition p = partition_from_json(g, field(job, "partition"), job.limits);
    const bool explicit_side = job.payload.contains("dual_side");
    const Partition q = explicit_side ? partition_from_json(g, job.payload.at("dual_side"), job.limits)
                                      : dual_partition(p, job.limits);
    const KrawtchoukMatrix k = krawtchouk(p, q, job.limits);
    Json r = header(job);
    r["group"] = to_json(g);
    r["partition"] = partition_report(p);
    r["dual_side"] = partition_report(q);
    r["krawtchouk"] = to_json(k);
    r["integral"] = integer_entries(k).has_value();
    bool ok = true;
    if (!explicit_side) {
        const KKCheck kk = kk_product_check(p, job.limits);
        Json pairing = Json::array();
        for (auto m : kk.pairing) pairing.push_back(m);
        r["kk"] = Json{{"pattern_holds", kk.pattern_holds},
                       {"reflexive", kk.reflexive},
                       {"scaled_identity", kk.scaled_identity},
                       {"pairing", std::move(pairing)}};
        ok = kk.pattern_holds && (!kk.reflexive || kk.scaled_identity);
    }
    r["ok"] = ok;
    return r;
}

Json run_macwilliams(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition given = partition_from_json(g, field(job, "partition"), job.limits);
    const Code c = code_from_json(g, field(job, "code"), job.limits);
    const Partition q = dual_partition(given, job.limits);
    const Partition p = dual_partition(q, job.limits);  // equals the input when it is reflexive
    const KrawtchoukMatrix k = krawtchouk(q, p, job.limits);
    const Code d = dual_code(g, c, job.limits);
    const LinearEnumerator a = linear_enumerator(c, p);
    const LinearEnumerator b = macwilliams_transform(a, k, static_cast<std::int64_t>(c.size()));
    const LinearEnumerator direct = linear_enumerator(d, q);
    Json r = header(job);
    r["group"] = to_json(g);
    r["code"] = to_json(c);
    r["dual_code"] = to_json(d);
    r["code_side"] = partition_report(p);
    r["code_side_replaced"] = !(p == given);
    r["dual_side"] = partition_report(q);
    r["A"] = to_json(a);
    r["K"] = to_json(k);
    r["B"] = to_json(b);
    r["B_direct"] = to_json(direct);
    r["verified"] = b == direct;
    r["ok"] = b == direct;
    return r;
}

struct Factors {
    std::vector<GroupSpec> groups;
    std::vector<Partition> parts;
};

Factors read_factors(const JobSpec& job) {
    Factors f;
    if (job.payload.contains("factors")) {
        const Json& fj = job.payload.at("factors");
        if (!fj.is_array() || fj.empty()) throw invalid_input("product: factors must be a non-empty array");
        for (const auto& item : fj) {
            if (!item.is_object() || !item.contains("group") || !item.contains("partition"))
                throw invalid_input("product: each factor needs group and partition");
            f.groups.push_back(group_from_json(item.at("group")));
            f.parts.push_back(partition_from_json(f.groups.back(), item.at("partition"), job.limits));
        }
        return f;
    }
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition p = partition_from_json(g, field(job, "partition"), job.limits);
    const std::size_t n = size_field(job, "n");
    f.groups.assign(n, g);
    f.parts.assign(n, p);
    return f;
}

void check_power_size(const GroupSpec& base, std::size_t n, const Limits& limits) {
    long double size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= static_cast<long double>(base.cardinality());
    if (size > static_cast<long double>(limits.max_group))
        throw guard_exceeded("power group exceeds max_group (" + std::to_string(limits.max_group) + ")");
}

Json run_product(const JobSpec& job) {
    const Factors f = read_factors(job);
    long double size = 1;
    for (const auto& g : f.groups) size *= static_cast<long double>(g.cardinality());
    if (size > static_cast<long double>(job.limits.max_group))
        throw guard_exceeded("product group exceeds max_group (" + std::to_string(job.limits.max_group) + ")");
    const Partition prod = product_partition(f.parts, job.limits);
    const auto witness = check_product_duality(f.parts, job.limits);
    const bool zero_blocks = std::all_of(f.parts.begin(), f.parts.end(), has_zero_block);
    Json r = header(job);
    r["group"] = to_json(prod.group());
    r["partition"] = partition_report(prod);
    r["zero_blocks"] = zero_blocks;
    r["dual_commutes"] = !witness;
    r["witness"] = witness_report(witness);
    r["ok"] = !zero_blocks || !witness;
    return r;
}

Json run_symmetrize(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    const Partition p = partition_from_json(g, field(job, "partition"), job.limits);
    const std::size_t n = size_field(job, "n");
    check_power_size(g, n, job.limits);
    const Partition sym = symmetrized_partition(p, n, job.limits);
    Json keys = Json::array();
    for (const auto& k : symmetrized_block_keys(p, n, job.limits)) keys.push_back(k.counts);
    const auto witness = check_symmetrized_duality(p, n, job.limits);
    const bool zero_block = has_zero_block(p);
    Json r = header(job);
    r["group"] = to_json(sym.group());
    r["partition"] = partition_report(sym);
    r["compositions"] = std::move(keys);
    r["zero_blocks"] = zero_block;
    r["dual_commutes"] = !witness;
    r["witness"] = witness_report(witness);
    r["ok"] = !zero_block || !witness;
    return r;
}

/// A one-factor group with an n-element poset means the n-th power.
GroupSpec poset_group(const JobSpec& job, const Poset& poset) {
    const GroupSpec g = group_from_json(field(job, "group"));
    if (g.factors() == 1 && poset.size() > 1) {
        check_power_size(g, static_cast<std::size_t>(poset.size()), job.limits);
        return power_group(g, static_cast<std::size_t>(poset.size()));
    }
    if (g.factors() != static_cast<std::size_t>(poset.size()))
        throw invalid_input("group needs one factor or one factor per poset element");
    return g;
}

Json shape_report(const std::optional<HierarchicalShape>& shape) {
    if (!shape) return nullptr;
    return Json{{"levels", shape->levels}, {"level_of", shape->level_of}};
}

Json run_poset_partition(const JobSpec& job) {
    const Poset poset = poset_from_json(field(job, "poset"));
    const GroupSpec g = poset_group(job, poset);
    const Partition p = poset_partition(poset, g, job.limits);
    Json weights = Json::array();
    for (std::size_t m = 0; m < p.block_count(); ++m) weights.push_back(poset_weight(poset, g, p.representative(m)));
    Json r = header(job);
    r["poset"] = to_json(poset);
    r["group"] = to_json(g);
    r["partition"] = partition_report(p);
    r["weights"] = std::move(weights);
    r["ok"] = true;
    return r;
}

Json run_poset_krawtchouk(const JobSpec& job) {
    const Poset poset = poset_from_json(field(job, "poset"));
    const GroupSpec g = poset_group(job, poset);
    const auto shape = is_hierarchical(poset);
    if (!shape) throw invalid_input("poset-krawtchouk: the poset is not hierarchical");
    std::vector<int> level_orders(shape->levels.size(), 0);
    for (std::size_t i = 0; i < g.factors(); ++i) {
        int& q = level_orders[static_cast<std::size_t>(shape->level_of[i])];
        if (q != 0 && q != g.orders()[i])
            throw invalid_input("poset-krawtchouk: group orders must agree within each level");
        q = g.orders()[i];
    }
    const Matrix<BigInt> closed = hierarchical_krawtchouk(*shape, level_orders, poset.size());
    const Matrix<BigInt> brute = poset_krawtchouk_brute(poset, g, job.limits);
    Json r = header(job);
    r["poset"] = to_json(poset);
    r["group"] = to_json(g);
    r["shape"] = shape_report(shape);
    r["level_orders"] = level_orders;
    r["closed_form"] = to_json(closed);
    r["brute_force"] = to_json(brute);
    r["match"] = closed == brute;
    r["ok"] = closed == brute;
    return r;
}

Json run_poset_check(const JobSpec& job) {
    const Poset poset = poset_from_json(field(job, "poset"));
    const GroupSpec g = poset_group(job, poset);
    const PosetDualityVerdict v = poset_duality_check(poset, g, job.limits);
    const bool predicted = v.shape.has_value() && v.levels_equal_order;
    Json r = header(job);
    r["poset"] = to_json(poset);
    r["dual_poset"] = to_json(dual_poset(poset));
    r["group"] = to_json(g);
    r["hierarchical"] = v.shape.has_value();
    r["shape"] = shape_report(v.shape);
    r["levels_equal_order"] = v.levels_equal_order;
    r["dual_equals_dual_poset_partition"] = v.equal;
    r["dual_refines_target"] = v.dual_refines_target;
    r["target_refines_dual"] = v.target_refines_dual;
    r["predicted"] = predicted;
    r["ok"] = v.equal == predicted;
    return r;
}

Json run_subgroups(const JobSpec& job) {
    const GroupSpec g = group_from_json(field(job, "group"));
    Json list = Json::array();
    for (const auto& c : all_subgroups(g, job.limits)) {
        Json cj = to_json(c);
        cj["dual"] = to_json(dual_code(g, c, job.limits));
        list.push_back(std::move(cj));
    }
    Json r = header(job);
    r["group"] = to_json(g);
    r["count"] = list.size();
    r["subgroups"] = std::move(list);
    r["ok"] = true;
    return r;
}

Json run_check(const JobSpec& job) {
    const std::string suite = job.payload.value("suite", std::string("all"));
    const Json& sj = job.payload.contains("seed") ? job.payload.at("seed") : Json(1);
    if (!sj.is_number_integer() || sj.get<std::int64_t>() < 0) throw invalid_input("check: seed must be a non-negative integer");
    const auto seed = sj.get<std::uint64_t>();
    Json suites = Json::array();
    std::size_t failures = 0;
    for (const auto& s : run_suites(suite, seed, job.limits)) {
        failures += s.failures;
        suites.push_back(Json{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"messages", s.messages}});
    }
    Json r = header(job);
    r["suite"] = suite;
    r["seed"] = seed;
    r["suites"] = std::move(suites);
    r["failures"] = failures;
    r["ok"] = failures == 0;
    return r;
}

using Handler = Json (*)(const JobSpec&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"dual", run_dual},
        {"bidual", run_bidual},
        {"reflexive", run_reflexive},
        {"krawtchouk", run_krawtchouk},
        {"macwilliams", run_macwilliams},
        {"product", run_product},
        {"symmetrize", run_symmetrize},
        {"poset-partition", run_poset_partition},
        {"poset-krawtchouk", run_poset_krawtchouk},
        {"poset-check", run_poset_check},
        {"subgroups", run_subgroups},
        {"check", run_check},
    };
    return table;
}

bool is_matrix(const Json& j) {
    return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& row) {
               return row.is_array() && std::none_of(row.begin(), row.end(), [](const Json& x) { return x.is_array(); });
           });
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object() && j.contains("order") && j.contains("coeffs")) {
        const auto order = j.at("order").get<std::uint32_t>();
        return to_string(cycint_from_json(j, order));
    }
    return j.dump();
}

void render_matrix(std::ostringstream& out, const std::string& indent, const Json& m) {
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (const auto& row : m) {
        auto& r = cells.emplace_back();
        for (const auto& x : row) {
            r.push_back(scalar_text(x));
            width = std::max(width, r.back().size());
        }
    }
    for (const auto& row : cells) {
        out << indent;
        for (const auto& c : row) out << std::string(width - c.size() + 2, ' ') << c;
        out << '\n';
    }
}

void render(std::ostringstream& out, const std::string& indent, const std::string& key, const Json& value) {
    if (value.is_object() && value.contains("text") && value.contains("blocks")) {
        out << indent << key << ": " << value.at("text").get<std::string>() << "  (" << value.at("count") << " blocks)\n";
    } else if (value.is_object() && value.contains("values")) {
        out << indent << key << ":\n";
        render_matrix(out, indent + "  ", value.at("values"));
    } else if (is_matrix(value) && key != "subgroups" && key != "suites") {
        out << indent << key << ":\n";
        render_matrix(out, indent + "  ", value);
    } else if (value.is_object() && !(value.contains("order") && value.contains("coeffs"))) {
        out << indent << key << ":\n";
        for (const auto& [k, v] : value.items()) render(out, indent + "  ", k, v);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << indent << key << ":\n";
        std::size_t i = 0;
        for (const auto& v : value) render(out, indent + "  ", "[" + std::to_string(i++) + "]", v);
    } else {
        out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

}  // namespace

const std::vector<std::string>& job_commands() {
    static const std::vector<std::string> names{"dual",          "bidual",          "reflexive",        "krawtchouk",
                                                "macwilliams",   "product",         "symmetrize",       "poset-partition",
                                                "poset-krawtchouk", "poset-check",  "subgroups",        "check"};
    return names;
}

JobSpec job_from_json(const Json& j) {
    if (!j.is_object()) throw invalid_input("job: expected a JSON object");
    if (!j.contains("command") || !j.at("command").is_string()) throw invalid_input("job: missing \"command\"");
    JobSpec job;
    job.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.items()) {
        if (k == "command") continue;
        if (k == "max_group" || k == "max_expansion") {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw invalid_input("job: " + k + " must be a non-negative integer");
            (k == "max_group" ? job.limits.max_group : job.limits.max_expansion) = v.get<std::size_t>();
            continue;
        }
        job.payload[k] = v;
    }
    return job;
}

Json run(const JobSpec& job) {
    const auto& table = handlers();
    const auto it = table.find(job.command);
    if (it == table.end()) throw invalid_input("unknown command \"" + job.command + "\"");
    try {
        return it->second(job);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed JSON payload: ") + e.what());
    }
}

std::string render_table(const Json& report) {
    std::ostringstream out;
    for (const auto& [k, v] : report.items()) render(out, "", k, v);
    return out.str();
}

int exit_code(const Json& report) { return report.value("ok", true) ? 0 : 3; }

}  // namespace fpart
