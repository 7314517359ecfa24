// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_IO_HPP
#define INCALG_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/incidence.hpp"
#include "incalg/interval_bialgebra.hpp"
#include "incalg/morphisms.hpp"
#include "incalg/poset.hpp"
#include "incalg/relation.hpp"

namespace incalg {

enum class Format { csv, json };

/// {"elements": [...], "covers": [[a, b], ...]}. Throws incalg::ParseError on
/// malformed documents and incalg::Error on invalid orders.
Poset poset_from_json(std::string_view text);

/// "boolean:n", "chain:n", "divisors:N", "fan:n", or the path of a poset
/// JSON file.
Poset poset_from_spec(const std::string& spec);

/// {"builtin": "ratio"} or {"partition": [[["a","b"], ...], ...]}.
IntervalRelation relation_from_json(const Poset& poset, std::string_view text);

/// A builtin relation name or the path of a relation JSON file.
IntervalRelation relation_from_spec(const Poset& poset, const std::string& spec);

/// {"checks": [{"axiom", "ok", "witness": {"indices", "lhs", "rhs"} | null}]}.
/// With `keys`, witness indices are also given as class keys.
std::string report_json(const AxiomReport& report, const std::vector<std::string>* keys = nullptr);
/// axiom,ok,indices,lhs,rhs
std::string report_csv(const AxiomReport& report);

std::string poset_report(const Poset& p, Format fmt);
std::string verdict_report(const IntervalRelation& r, const CompatibilityVerdict& v, Format fmt);

/// {"classes", "mult": {"I,J": {"K": "n"}}, "comult": {"K": {"I,J": "n"}}}.
std::string bialgebra_json(const IntervalBialgebra& ib);

/// {"relation", "values": {key: "p/q"}} or CSV class_key,value.
std::string incidence_report(const IncidenceFunction& phi, Format fmt);

/// JSON array of "p/q", or CSV n,coefficient starting at `first_index`.
std::string series_report(const std::vector<Rational>& coeffs, std::size_t first_index, Format fmt);

/// {"map": {source key: target key}}
std::string classmap_json(const ClassMap& g);

std::string operator_report(const LinearOperator& s, const std::vector<std::string>& keys, Format fmt);

std::vector<std::string> class_keys(const IntervalRelation& r);

// Complete outputs of the command line subcommands.
std::string run_poset_check(const std::string& poset_spec, Format fmt);
std::string run_relation_check(const std::string& poset_spec, const std::string& relation_spec, Format fmt);
std::string run_mobius(const std::string& poset_spec, const std::string& relation_spec, Format fmt);
std::string run_antipode(const std::string& poset_spec, const std::string& relation_spec, Format fmt);
std::string run_bialgebra_verify(const std::string& poset_spec, const std::string& relation_spec,
                                 std::uint64_t seed, Format fmt);
std::string run_bernoulli(unsigned n, Format fmt);
std::string run_classical_mobius(std::size_t max, Format fmt);
/// hamilton, matrix:n, boolean:n, chain:n, divisors:N, fan:n, squarefree:N.
std::string run_demo(const std::string& name, std::uint64_t seed, Format fmt);

}  // namespace incalg

#endif
