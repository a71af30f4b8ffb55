// SPDX-License-Identifier: Apache-2.0
#include "qcopt/qcopt.h"

#include <cstring>
#include <new>
#include <string>

#include "qcopt/mapping.hpp"
#include "qcopt/qasm.hpp"
#include "qcopt/semantics.hpp"
#include "qcopt/unitary_opt.hpp"
#include "qcopt/validate.hpp"

struct qcopt_circuit {
    qcopt::Circuit c;
};

namespace {

void set_error(char* errbuf, size_t errlen, const std::string& msg) {
    if (!errbuf || errlen == 0) return;
    const size_t n = std::min(errlen - 1, msg.size());
    std::memcpy(errbuf, msg.data(), n);
    errbuf[n] = '\0';
}

template <typename Fn>
qcopt_status guarded(char* errbuf, size_t errlen, Fn&& fn) {
    try {
        return fn();
    } catch (const qcopt::UnsupportedError& e) {
        set_error(errbuf, errlen, e.what());
        return QCOPT_ERR_UNSUPPORTED;
    } catch (const qcopt::ParseError& e) {
        set_error(errbuf, errlen, e.what());
        return QCOPT_ERR_PARSE;
    } catch (const qcopt::NonUnitaryError& e) {
        set_error(errbuf, errlen, e.what());
        return QCOPT_ERR_NONUNITARY;
    } catch (const std::invalid_argument& e) {
        set_error(errbuf, errlen, e.what());
        const std::string what = e.what();
        return what.find("too large") != std::string::npos ? QCOPT_ERR_TOO_LARGE
                                                           : QCOPT_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        set_error(errbuf, errlen, "out of memory");
        return QCOPT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(errbuf, errlen, e.what());
        const std::string what = e.what();
        return what.find("cannot") != std::string::npos ? QCOPT_ERR_IO : QCOPT_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* qcopt_version(void) {
    return "0.1.0";
}

qcopt_status qcopt_parse_file(const char* path, qcopt_circuit** out, char* errbuf,
                              size_t errlen) {
    if (!path || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        auto circ = qcopt::decompose(qcopt::parse_file(path));
        *out = new qcopt_circuit{std::move(circ)};
        return QCOPT_OK;
    });
}

qcopt_status qcopt_parse_string(const char* text, qcopt_circuit** out, char* errbuf,
                                size_t errlen) {
    if (!text || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        auto circ = qcopt::decompose(qcopt::parse(text));
        *out = new qcopt_circuit{std::move(circ)};
        return QCOPT_OK;
    });
}

void qcopt_circuit_free(qcopt_circuit* c) {
    delete c;
}

unsigned qcopt_circuit_dim(const qcopt_circuit* c) {
    return c ? c->c.dim : 0;
}

uint64_t qcopt_circuit_num_gates(const qcopt_circuit* c) {
    return c ? c->c.gates.size() : 0;
}

int qcopt_circuit_well_typed(const qcopt_circuit* c) {
    return c && qcopt::well_typed(c->c) ? 1 : 0;
}

void qcopt_count_gates(const qcopt_circuit* c, qcopt_gate_counts* out) {
    if (!c || !out) return;
    const auto counts = qcopt::count_gates(c->c);
    out->total = counts.total;
    out->h = counts.h;
    out->x = counts.x;
    out->rz = counts.rz;
    out->cnot = counts.cnot;
    out->t_count = counts.t_count;
    out->other_rz = counts.other_rz;
}

qcopt_status qcopt_emit_file(const qcopt_circuit* c, const char* path, char* errbuf,
                             size_t errlen) {
    if (!c || !path) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        qcopt::emit_file(c->c, path);
        return QCOPT_OK;
    });
}

qcopt_status qcopt_emit_string(const qcopt_circuit* c, char** out, char* errbuf,
                               size_t errlen) {
    if (!c || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        const std::string text = qcopt::emit(c->c);
        char* s = new char[text.size() + 1];
        std::memcpy(s, text.data(), text.size() + 1);
        *out = s;
        return QCOPT_OK;
    });
}

void qcopt_string_free(char* s) {
    delete[] s;
}

qcopt_status qcopt_optimize(const qcopt_circuit* c, const char* schedule,
                            qcopt_circuit** out, char* errbuf, size_t errlen) {
    if (!c || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        auto result = schedule ? qcopt::optimize_with_schedule(c->c, schedule)
                               : qcopt::optimize(c->c);
        *out = new qcopt_circuit{std::move(result)};
        return QCOPT_OK;
    });
}

qcopt_status qcopt_map(const qcopt_circuit* c, const char* arch_spec, qcopt_circuit** out,
                       unsigned* layout_in, unsigned* layout_out, char* errbuf,
                       size_t errlen) {
    if (!c || !arch_spec || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        const auto arch = qcopt::make_architecture(arch_spec);
        const auto initial = qcopt::Layout::identity(c->c.dim);
        auto [mapped, final_layout] = qcopt::map_circuit(c->c, arch, initial);
        if (layout_in)
            for (unsigned q = 0; q < c->c.dim; ++q) layout_in[q] = initial.log_to_phys[q];
        if (layout_out)
            for (unsigned q = 0; q < c->c.dim; ++q) layout_out[q] = final_layout.log_to_phys[q];
        *out = new qcopt_circuit{std::move(mapped)};
        return QCOPT_OK;
    });
}

int qcopt_respects_constraints(const qcopt_circuit* c, const char* arch_spec) {
    if (!c || !arch_spec) return 0;
    try {
        return qcopt::respects_constraints(c->c, qcopt::make_architecture(arch_spec)) ? 1 : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

qcopt_status qcopt_check_equiv(const qcopt_circuit* a, const qcopt_circuit* b,
                               const char* mode, double tol, qcopt_equiv_verdict* out,
                               char* errbuf, size_t errlen) {
    if (!a || !b || !mode || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        qcopt::EquivMode m;
        const std::string mode_str = mode;
        if (mode_str == "matrix") m = qcopt::EquivMode::Matrix;
        else if (mode_str == "phasepoly") m = qcopt::EquivMode::PhasePoly;
        else throw std::invalid_argument("unknown equivalence mode: " + mode_str);

        const auto verdict = qcopt::check_equiv(a->c, b->c, m, tol);
        out->kind = static_cast<int>(verdict.kind);
        out->theta = verdict.theta;
        out->has_witness = verdict.witness.has_value() ? 1 : 0;
        out->witness = verdict.witness.value_or(0);
        out->max_deviation = verdict.max_deviation;
        return QCOPT_OK;
    });
}

qcopt_status qcopt_check_equiv_perm(const qcopt_circuit* a, const qcopt_circuit* b,
                                    const unsigned* perm_in, const unsigned* perm_out,
                                    double tol, int* out, char* errbuf, size_t errlen) {
    if (!a || !b || !perm_in || !perm_out || !out) return QCOPT_ERR_INVALID;
    return guarded(errbuf, errlen, [&] {
        const std::vector<qcopt::Qubit> pin(perm_in, perm_in + a->c.dim);
        const std::vector<qcopt::Qubit> pout(perm_out, perm_out + a->c.dim);
        *out = qcopt::equiv_up_to_permutation(a->c, b->c, pin, pout, tol) ? 1 : 0;
        return QCOPT_OK;
    });
}

} // extern "C"
