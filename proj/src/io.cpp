// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "incalg/error.hpp"
#include "incalg/fixtures.hpp"
#include "incalg/series.hpp"

namespace incalg {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t hat_samples = 20;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

unsigned long parse_count(std::string_view text, std::string_view what) {
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("expected a non-negative integer in '" + std::string(what) + "'");
    return v;
}

std::string label_of(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("element labels must be strings or integers");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

Json witness_json(const std::optional<Witness>& w, const std::vector<std::string>* keys) {
    if (!w) return nullptr;
    Json out = {{"indices", w->indices}};
    if (keys) {
        Json named = Json::array();
        for (auto i : w->indices) named.push_back(i < keys->size() ? (*keys)[i] : std::to_string(i));
        out["classes"] = named;
    }
    out["lhs"] = w->lhs;
    out["rhs"] = w->rhs;
    return out;
}

Json report_value(const AxiomReport& report, const std::vector<std::string>* keys) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"axiom", c.axiom}, {"ok", c.ok}, {"witness", witness_json(c.witness, keys)}});
    return {{"checks", checks}};
}

Json compat_json(const IntervalRelation& r, const CompatResult& c) {
    Json witness = nullptr;
    if (!c.ok) {
        witness = Json::array();
        for (const auto& tuple : c.witness) {
            Json labels = Json::array();
            for (auto e : tuple) labels.push_back(r.poset().label(e));
            witness.push_back(labels);
        }
    }
    return {{"ok", c.ok}, {"witness", witness}};
}

std::string compat_csv_witness(const IntervalRelation& r, const CompatResult& c) {
    std::string out;
    for (std::size_t t = 0; t < c.witness.size(); ++t) {
        if (t) out += "; ";
        for (std::size_t i = 0; i < c.witness[t].size(); ++i) {
            if (i) out += ' ';
            out += r.poset().label(c.witness[t][i]);
        }
    }
    return out;
}

Json incidence_value(const IncidenceFunction& phi) {
    Json values = Json::object();
    for (std::size_t c = 0; c < phi.size(); ++c) values[phi.relation().cls(c).key] = phi[c].str();
    return {{"relation", std::string(relation_name(phi.relation().kind()))}, {"values", values}};
}

Json operator_value(const LinearOperator& s, const std::vector<std::string>& keys) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < s.dim(); ++j) row.push_back(s.at(i, j).str());
        rows.push_back(row);
    }
    return {{"classes", keys}, {"matrix", rows}};
}

IncidenceFunction random_function(const IntervalRelation& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Rational> values;
    for (std::size_t c = 0; c < r.class_count(); ++c) values.emplace_back(dist(rng));
    return IncidenceFunction(r, std::move(values));
}

AxiomReport bialgebra_checks(const IntervalBialgebra& ib, std::uint64_t seed) {
    const auto& b = ib.bialgebra;
    AxiomReport report = check_algebra(b.algebra);
    report.append(check_coalgebra(b.coalgebra));
    report.append(check_mweak(b));
    report.append(check_strong(b));
    auto product = check_interval_product_condition(ib);
    report.checks.push_back(product);
    if (product.ok) {
        std::mt19937_64 rng(seed);
        AxiomCheck hat_check{"hat_homomorphism", true, std::nullopt};
        for (std::size_t s = 0; s < hat_samples && hat_check.ok; ++s) {
            auto phi = random_function(ib.relation, rng);
            auto psi = random_function(ib.relation, rng);
            hat_check = check_hat_homomorphism(ib, phi, psi);
        }
        report.checks.push_back(hat_check);
    }
    auto s = solve_antipode(b);
    report.checks.push_back(AxiomCheck{"antipode_exists", s.has_value(), s ? std::nullopt
                                                                            : std::optional<Witness>(Witness{{}, "none", "S"})});
    return report;
}

struct Family {
    Poset poset;
    RelationKind kind;
};

std::optional<Family> generator_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string name = spec.substr(0, colon);
    const std::string_view arg = std::string_view(spec).substr(colon + 1);
    if (name == "boolean") return Family{boolean_lattice(static_cast<unsigned>(std::min(parse_count(arg, spec), 64ul))), RelationKind::cardinality};
    if (name == "chain") return Family{chain(static_cast<unsigned>(std::min(parse_count(arg, spec), 1000000ul))), RelationKind::diff};
    if (name == "divisors") return Family{divisor_lattice(parse_count(arg, spec)), RelationKind::ratio};
    if (name == "fan") return Family{antichain_with_zero(static_cast<unsigned>(std::min(parse_count(arg, spec), 100000ul))), RelationKind::points};
    return std::nullopt;
}

std::vector<std::string> basis_names(std::size_t dim, const std::vector<std::string>& names) {
    if (names.size() == dim) return names;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

std::string fixture_demo(const std::string& name, const FiniteBialgebra& b, const std::vector<std::string>& keys,
                         Format fmt) {
    AxiomReport report = check_algebra(b.algebra);
    report.append(check_coalgebra(b.coalgebra));
    report.append(check_mweak(b));
    report.append(check_strong(b));
    auto s = solve_antipode(b);
    if (fmt == Format::json) {
        Json out = {{"demo", name}, {"report", report_value(report, &keys)}};
        out["antipode"] = s ? operator_value(*s, keys) : Json(nullptr);
        return dump(out);
    }
    std::string out = report_csv(report) + "\n";
    out += s ? operator_report(*s, keys, Format::csv) : std::string("antipode\nnone\n");
    return out;
}

std::string interval_demo(const std::string& name, const Family& fam, std::uint64_t seed, Format fmt) {
    auto r = IntervalRelation::builtin(fam.poset, fam.kind);
    auto ib = build_interval_bialgebra(r);
    const auto keys = class_keys(r);
    const auto report = bialgebra_checks(ib, seed);
    const auto mu = mobius(r);
    auto s = solve_antipode(ib.bialgebra);
    const bool equals_hat = s && *s == hat(mu);
    if (fmt == Format::json) {
        Json squares = Json::object();
        for (std::size_t c = 0; c < r.class_count(); ++c) squares[keys[c]] = hopf_square(ib, c).first.str();
        Json out = {{"demo", name},
                    {"relation", std::string(relation_name(fam.kind))},
                    {"report", report_value(report, &keys)},
                    {"mobius", incidence_value(mu)["values"]},
                    {"hopf_square", squares}};
        out["antipode"] = s ? operator_value(*s, keys) : Json(nullptr);
        out["antipode_equals_mobius_hat"] = equals_hat;
        return dump(out);
    }
    std::string out = report_csv(report) + "\n" + incidence_report(mu, Format::csv) + "\nclass_key,hopf_square\n";
    for (std::size_t c = 0; c < r.class_count(); ++c) out += csv_field(keys[c]) + "," + hopf_square(ib, c).first.str() + "\n";
    out += "\n";
    out += s ? operator_report(*s, keys, Format::csv) : std::string("antipode\nnone\n");
    out += std::string("\nantipode_equals_mobius_hat,") + (equals_hat ? "true" : "false") + "\n";
    return out;
}

}  // namespace

Poset poset_from_json(std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw ParseError("poset JSON needs an \"elements\" array");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) labels.push_back(label_of(e));
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) throw ParseError("\"covers\" must be an array of pairs");
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a pair of labels");
            covers.emplace_back(label_of(c[0]), label_of(c[1]));
        }
    }
    return poset_from_covers(labels, covers);
}

Poset poset_from_spec(const std::string& spec) {
    if (auto fam = generator_family(spec)) return std::move(fam->poset);
    if (spec.find(':') != std::string::npos && spec.find('/') == std::string::npos && spec.find('.') == std::string::npos)
        throw ParseError("unknown generator '" + spec + "' (expected boolean:n, chain:n, divisors:N or fan:n)");
    return poset_from_json(read_file(spec));
}

IntervalRelation relation_from_json(const Poset& poset, std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_object()) throw ParseError("relation JSON must be an object");
    if (j.contains("builtin")) {
        if (!j["builtin"].is_string()) throw ParseError("\"builtin\" must be a relation name");
        auto kind = relation_kind_from_name(j["builtin"].get<std::string>());
        if (!kind) throw ParseError("unknown builtin relation '" + j["builtin"].get<std::string>() + "'");
        return IntervalRelation::builtin(poset, *kind);
    }
    if (!j.contains("partition") || !j["partition"].is_array())
        throw ParseError("relation JSON needs \"builtin\" or \"partition\"");
    auto lookup = [&](const Json& l) {
        auto label = label_of(l);
        auto idx = poset.index_of(label);
        if (!idx) throw Error("unknown label '" + label + "'");
        return *idx;
    };
    std::vector<std::vector<Interval>> blocks;
    for (const auto& block : j["partition"]) {
        if (!block.is_array()) throw ParseError("each partition block must be an array of intervals");
        std::vector<Interval> ivs;
        for (const auto& iv : block) {
            if (!iv.is_array() || iv.size() != 2) throw ParseError("intervals are pairs of labels");
            ivs.push_back({lookup(iv[0]), lookup(iv[1])});
        }
        blocks.push_back(std::move(ivs));
    }
    return IntervalRelation::from_partition(poset, blocks);
}

IntervalRelation relation_from_spec(const Poset& poset, const std::string& spec) {
    if (auto kind = relation_kind_from_name(spec)) return IntervalRelation::builtin(poset, *kind);
    std::ifstream probe(spec);
    if (!probe) throw ParseError("unknown relation '" + spec + "' (expected a builtin name or a JSON file)");
    return relation_from_json(poset, read_file(spec));
}

std::vector<std::string> class_keys(const IntervalRelation& r) {
    std::vector<std::string> keys;
    for (const auto& c : r.classes()) keys.push_back(c.key);
    return keys;
}

std::string report_json(const AxiomReport& report, const std::vector<std::string>* keys) {
    return dump(report_value(report, keys));
}

std::string report_csv(const AxiomReport& report) {
    std::string out = "axiom,ok,indices,lhs,rhs\n";
    for (const auto& c : report.checks) {
        out += c.axiom + "," + (c.ok ? "true" : "false") + ",";
        if (c.witness) out += join_indices(c.witness->indices) + "," + csv_field(c.witness->lhs) + "," + csv_field(c.witness->rhs);
        else out += ",,";
        out += "\n";
    }
    return out;
}

std::string poset_report(const Poset& p, Format fmt) {
    auto axioms = check_order_axioms(p.size(), [&] {
        std::vector<bool> leq(p.size() * p.size());
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b) leq[a * p.size() + b] = p.leq(a, b);
        return leq;
    }());
    auto zero = p.minimum();
    std::vector<std::string> atom_labels, extension;
    if (zero)
        for (auto a : atoms(p)) atom_labels.push_back(p.label(a));
    for (auto x : linear_extension(p)) extension.push_back(p.label(x));
    const std::size_t intervals = all_intervals(p).size();
    if (fmt == Format::json) {
        Json covers = Json::array();
        for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
        Json out = {{"elements", p.labels()},
                    {"covers", covers},
                    {"reflexive", axioms.reflexive},
                    {"antisymmetric", axioms.antisymmetric},
                    {"transitive", axioms.transitive},
                    {"intervals", intervals}};
        out["minimum"] = zero ? Json(p.label(*zero)) : Json(nullptr);
        out["atoms"] = zero ? Json(atom_labels) : Json(nullptr);
        out["linear_extension"] = extension;
        return dump(out);
    }
    auto bool_str = [](bool b) { return b ? "true" : "false"; };
    auto joined = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
        return s;
    };
    std::string out = "property,value\n";
    out += "elements," + std::to_string(p.size()) + "\n";
    out += std::string("reflexive,") + bool_str(axioms.reflexive) + "\n";
    out += std::string("antisymmetric,") + bool_str(axioms.antisymmetric) + "\n";
    out += std::string("transitive,") + bool_str(axioms.transitive) + "\n";
    out += "intervals," + std::to_string(intervals) + "\n";
    out += "minimum," + csv_field(zero ? p.label(*zero) : std::string()) + "\n";
    out += "atoms," + csv_field(joined(atom_labels)) + "\n";
    out += "linear_extension," + csv_field(joined(extension)) + "\n";
    return out;
}

std::string verdict_report(const IntervalRelation& r, const CompatibilityVerdict& v, Format fmt) {
    if (fmt == Format::json) {
        Json out = {{"relation", std::string(relation_name(r.kind()))},
                    {"classes", r.class_count()},
                    {"bialgebra_compatible", v.ok()},
                    {"nabla", compat_json(r, v.nabla)},
                    {"delta", compat_json(r, v.delta)},
                    {"unitary", compat_json(r, v.unitary)}};
        return dump(out);
    }
    std::string out = "check,ok,witness\n";
    auto row = [&](const char* name, const CompatResult& c) {
        out += std::string(name) + "," + (c.ok ? "true" : "false") + "," + csv_field(compat_csv_witness(r, c)) + "\n";
    };
    row("nabla", v.nabla);
    row("delta", v.delta);
    row("unitary", v.unitary);
    out += std::string("bialgebra_compatible,") + (v.ok() ? "true" : "false") + ",\n";
    return out;
}

std::string bialgebra_json(const IntervalBialgebra& ib) {
    const auto keys = class_keys(ib.relation);
    const auto& b = ib.bialgebra;
    Json mult = Json::object(), comult = Json::object();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            const auto& prod = b.algebra.product(i, j);
            if (prod.is_zero()) continue;
            Json entry = Json::object();
            for (const auto& [k, c] : prod) entry[keys[k]] = c.str();
            mult[keys[i] + "," + keys[j]] = entry;
        }
    for (std::size_t k = 0; k < b.dim(); ++k) {
        Json entry = Json::object();
        for (const auto& [key, c] : b.coalgebra.comult[k]) entry[keys[key.first] + "," + keys[key.second]] = c.str();
        comult[keys[k]] = entry;
    }
    return dump(Json{{"classes", keys}, {"mult", mult}, {"comult", comult}});
}

std::string incidence_report(const IncidenceFunction& phi, Format fmt) {
    if (fmt == Format::json) return dump(incidence_value(phi));
    std::string out = "class_key,value\n";
    for (std::size_t c = 0; c < phi.size(); ++c) out += csv_field(phi.relation().cls(c).key) + "," + phi[c].str() + "\n";
    return out;
}

std::string series_report(const std::vector<Rational>& coeffs, std::size_t first_index, Format fmt) {
    if (fmt == Format::json) {
        Json out = Json::array();
        for (const auto& c : coeffs) out.push_back(c.str());
        return dump(out);
    }
    std::string out = "n,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += std::to_string(first_index + i) + "," + coeffs[i].str() + "\n";
    return out;
}

std::string classmap_json(const ClassMap& g) {
    Json map = Json::object();
    for (std::size_t c = 0; c < g.map.size(); ++c) map[g.source.cls(c).key] = g.target.cls(g(c)).key;
    return dump(Json{{"map", map}});
}

std::string operator_report(const LinearOperator& s, const std::vector<std::string>& keys, Format fmt) {
    if (fmt == Format::json) return dump(operator_value(s, keys));
    std::string out = "class_key";
    for (const auto& k : keys) out += "," + csv_field(k);
    out += "\n";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out += csv_field(keys[i]);
        for (std::size_t j = 0; j < s.dim(); ++j) out += "," + s.at(i, j).str();
        out += "\n";
    }
    return out;
}

std::string run_poset_check(const std::string& poset_spec, Format fmt) {
    return poset_report(poset_from_spec(poset_spec), fmt);
}

std::string run_relation_check(const std::string& poset_spec, const std::string& relation_spec, Format fmt) {
    auto r = relation_from_spec(poset_from_spec(poset_spec), relation_spec);
    return verdict_report(r, check_compatibility(r), fmt);
}

std::string run_mobius(const std::string& poset_spec, const std::string& relation_spec, Format fmt) {
    auto r = relation_from_spec(poset_from_spec(poset_spec), relation_spec);
    if (!check_delta_compatible(r).ok) throw Error("relation is not delta-compatible; convolution is not defined");
    return incidence_report(mobius(r), fmt);
}

std::string run_antipode(const std::string& poset_spec, const std::string& relation_spec, Format fmt) {
    auto r = relation_from_spec(poset_from_spec(poset_spec), relation_spec);
    auto ib = build_interval_bialgebra(r);
    auto s = solve_antipode(ib.bialgebra);
    if (!s) throw Error("the interval bialgebra has no antipode");
    const auto keys = class_keys(r);
    const bool product = check_interval_product_condition(ib).ok;
    const bool equals_hat = *s == hat(mobius(r));
    if (fmt == Format::json) {
        Json out = operator_value(*s, keys);
        out["interval_product_condition"] = product;
        out["equals_mobius_hat"] = equals_hat;
        return dump(out);
    }
    return operator_report(*s, keys, Format::csv) + "\ninterval_product_condition," + (product ? "true" : "false") +
           "\nequals_mobius_hat," + (equals_hat ? "true" : "false") + "\n";
}

std::string run_bialgebra_verify(const std::string& poset_spec, const std::string& relation_spec, std::uint64_t seed,
                                 Format fmt) {
    auto r = relation_from_spec(poset_from_spec(poset_spec), relation_spec);
    auto ib = build_interval_bialgebra(r);
    const auto report = bialgebra_checks(ib, seed);
    if (fmt == Format::json) {
        const auto keys = class_keys(r);
        return report_json(report, &keys);
    }
    return report_csv(report);
}

std::string run_bernoulli(unsigned n, Format fmt) { return series_report(bernoulli(n), 0, fmt); }

std::string run_classical_mobius(std::size_t max, Format fmt) { return series_report(classical_mobius(max), 1, fmt); }

std::string run_demo(const std::string& name, std::uint64_t seed, Format fmt) {
    if (name == "hamilton") return fixture_demo(name, quaternion_fixture(), {"1", "i", "j", "k"}, fmt);
    if (name.rfind("matrix:", 0) == 0) {
        const auto n = parse_count(std::string_view(name).substr(7), name);
        std::vector<std::string> keys;
        for (unsigned long i = 1; i <= n && n <= 6; ++i)
            for (unsigned long j = 1; j <= n; ++j) keys.push_back("B" + std::to_string(i) + std::to_string(j));
        auto b = matrix_bialgebra(n);
        return fixture_demo(name, b, basis_names(b.dim(), keys), fmt);
    }
    if (name.rfind("squarefree:", 0) == 0) {
        auto res = squarefree_restriction(parse_count(std::string_view(name).substr(11), name));
        if (fmt == Format::json) {
            Json out = {{"demo", name}, {"map", Json::parse(classmap_json(res.map))["map"]},
                        {"report", report_value(res.report, nullptr)}};
            return dump(out);
        }
        std::string out = "source_key,target_key\n";
        for (std::size_t c = 0; c < res.map.map.size(); ++c)
            out += csv_field(res.map.source.cls(c).key) + "," + csv_field(res.map.target.cls(res.map(c)).key) + "\n";
        return out + "\n" + report_csv(res.report);
    }
    if (auto fam = generator_family(name)) return interval_demo(name, *fam, seed, fmt);
    throw ParseError("unknown demo '" + name + "'");
}

}  // namespace incalg
