// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/incalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "incalg/error.hpp"
#include "incalg/io.hpp"

struct incalg_poset {
    incalg::Poset poset;
};

struct incalg_relation {
    incalg::IntervalRelation relation;
};

namespace {

thread_local std::string last_error;

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int fail(int code, const char* msg) {
    last_error = msg;
    return code;
}

template <class F>
int guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return INCALG_OK;
    } catch (const ArgumentError& e) {
        return fail(INCALG_ERR_ARGUMENT, e.what());
    } catch (const incalg::ParseError& e) {
        return fail(INCALG_ERR_PARSE, e.what());
    } catch (const incalg::Error& e) {
        return fail(INCALG_ERR_DOMAIN, e.what());
    } catch (const incalg::InternalError& e) {
        return fail(INCALG_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(INCALG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(INCALG_ERR_INTERNAL, e.what());
    }
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

incalg::Format format_of(int fmt) {
    if (fmt == INCALG_JSON) return incalg::Format::json;
    if (fmt == INCALG_CSV) return incalg::Format::csv;
    throw ArgumentError("unknown output format");
}

template <class F>
int string_result(char** out, F&& produce) {
    if (!out) return fail(INCALG_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = copy_out(produce()); });
}

}  // namespace

extern "C" {

const char* incalg_version(void) { return "1.0.0"; }

const char* incalg_last_error(void) { return last_error.c_str(); }

void incalg_string_free(char* s) { std::free(s); }

int incalg_poset_open(const char* spec, incalg_poset** out) {
    if (!spec || !out) return fail(INCALG_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new incalg_poset{incalg::poset_from_spec(spec)}; });
}

int incalg_poset_from_json(const char* text, incalg_poset** out) {
    if (!text || !out) return fail(INCALG_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new incalg_poset{incalg::poset_from_json(text)}; });
}

void incalg_poset_free(incalg_poset* p) { delete p; }

size_t incalg_poset_size(const incalg_poset* p) { return p ? p->poset.size() : 0; }

int incalg_relation_open(const incalg_poset* p, const char* spec, incalg_relation** out) {
    if (!p || !spec || !out) return fail(INCALG_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new incalg_relation{incalg::relation_from_spec(p->poset, spec)}; });
}

int incalg_relation_from_json(const incalg_poset* p, const char* text, incalg_relation** out) {
    if (!p || !text || !out) return fail(INCALG_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new incalg_relation{incalg::relation_from_json(p->poset, text)}; });
}

void incalg_relation_free(incalg_relation* r) { delete r; }

size_t incalg_relation_class_count(const incalg_relation* r) { return r ? r->relation.class_count() : 0; }

int incalg_relation_class_key(const incalg_relation* r, size_t index, char** out) {
    if (!r) return fail(INCALG_ERR_ARGUMENT, "null relation");
    return string_result(out, [&] {
        if (index >= r->relation.class_count()) throw incalg::Error("class index out of range");
        return r->relation.cls(index).key;
    });
}

int incalg_relation_compatible(const incalg_relation* r, int* ok) {
    if (!r || !ok) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return guarded([&] { *ok = incalg::check_compatibility(r->relation).ok() ? 1 : 0; });
}

int incalg_relation_verdict(const incalg_relation* r, int fmt, char** out) {
    if (!r) return fail(INCALG_ERR_ARGUMENT, "null relation");
    return string_result(out, [&] {
        return incalg::verdict_report(r->relation, incalg::check_compatibility(r->relation), format_of(fmt));
    });
}

int incalg_relation_mobius(const incalg_relation* r, int fmt, char** out) {
    if (!r) return fail(INCALG_ERR_ARGUMENT, "null relation");
    return string_result(out, [&] {
        if (!incalg::check_delta_compatible(r->relation).ok)
            throw incalg::Error("relation is not delta-compatible; convolution is not defined");
        return incalg::incidence_report(incalg::mobius(r->relation), format_of(fmt));
    });
}

int incalg_relation_mobius_value(const incalg_relation* r, const char* key, char** out) {
    if (!r || !key) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] { return incalg::mobius(r->relation).at_key(key).str(); });
}

int incalg_relation_bialgebra_json(const incalg_relation* r, char** out) {
    if (!r) return fail(INCALG_ERR_ARGUMENT, "null relation");
    return string_result(out, [&] { return incalg::bialgebra_json(incalg::build_interval_bialgebra(r->relation)); });
}

int incalg_poset_check(const char* poset_spec, int fmt, char** out) {
    if (!poset_spec) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] { return incalg::run_poset_check(poset_spec, format_of(fmt)); });
}

int incalg_relation_check(const char* poset_spec, const char* relation_spec, int fmt, char** out) {
    if (!poset_spec || !relation_spec) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] { return incalg::run_relation_check(poset_spec, relation_spec, format_of(fmt)); });
}

int incalg_mobius_table(const char* poset_spec, const char* relation_spec, int fmt, char** out) {
    if (!poset_spec || !relation_spec) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] { return incalg::run_mobius(poset_spec, relation_spec, format_of(fmt)); });
}

int incalg_antipode_table(const char* poset_spec, const char* relation_spec, int fmt, char** out) {
    if (!poset_spec || !relation_spec) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] { return incalg::run_antipode(poset_spec, relation_spec, format_of(fmt)); });
}

int incalg_bialgebra_verify(const char* poset_spec, const char* relation_spec, uint64_t seed, int fmt, char** out) {
    if (!poset_spec || !relation_spec) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] {
        return incalg::run_bialgebra_verify(poset_spec, relation_spec, seed, format_of(fmt));
    });
}

int incalg_bernoulli_table(unsigned n, int fmt, char** out) {
    return string_result(out, [&] { return incalg::run_bernoulli(n, format_of(fmt)); });
}

int incalg_classical_mobius_table(size_t max, int fmt, char** out) {
    return string_result(out, [&] { return incalg::run_classical_mobius(max, format_of(fmt)); });
}

int incalg_demo(const char* name, uint64_t seed, int fmt, char** out) {
    if (!name) return fail(INCALG_ERR_ARGUMENT, "null argument");
    return string_result(out, [&] { return incalg::run_demo(name, seed, format_of(fmt)); });
}

}  // extern "C"
