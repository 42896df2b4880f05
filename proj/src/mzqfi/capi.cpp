// Copyright 2026 The mzqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzqfi/mzqfi.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <string>

#include "mzqfi/errors.hpp"
#include "mzqfi/figures.hpp"
#include "mzqfi/fock_oracle.hpp"
#include "mzqfi/optimizer.hpp"
#include "mzqfi/quartic.hpp"
#include "mzqfi/scenario.hpp"
#include "mzqfi/verify.hpp"

struct mzqfi_state {
    mzqfi::InputStateSpec spec;
};

struct mzqfi_fock {
    mzqfi::FockVector vec;
};

namespace {

thread_local std::string g_last_error;

mzqfi_status set_error(mzqfi_status s, const std::string &msg) {
    g_last_error = msg;
    return s;
}

template <typename F>
mzqfi_status guarded(F &&body) {
    try {
        g_last_error.clear();
        body();
        return MZQFI_OK;
    } catch (const mzqfi::Error &e) {
        return set_error(static_cast<mzqfi_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc &) {
        return set_error(MZQFI_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return set_error(MZQFI_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(MZQFI_ERR_INTERNAL, "unknown failure");
    }
}

void need(const void *p, const char *what) {
    if (p == nullptr) {
        mzqfi::fail(mzqfi::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mzqfi::PortState to_port(const mzqfi_port &p) {
    using mzqfi::PortState;
    switch (p.kind) {
        case MZQFI_PORT_VACUUM:
            return PortState::vacuum();
        case MZQFI_PORT_COHERENT:
            return PortState::coherent(p.amplitude, p.amplitude_phase);
        case MZQFI_PORT_FOCK:
            return PortState::fock(p.fock_n);
        case MZQFI_PORT_SQUEEZED_VACUUM:
            return PortState::squeezed_vacuum(p.squeeze, p.squeeze_phase);
        case MZQFI_PORT_SQUEEZED_COHERENT:
            return PortState::squeezed_coherent(p.amplitude, p.amplitude_phase, p.squeeze, p.squeeze_phase);
    }
    mzqfi::fail(mzqfi::ErrorCode::InvalidArgument, "unknown port kind");
}

mzqfi::ShorthandCoeffs from_c(const mzqfi_shorthand &s) {
    return {s.v_plus, s.v_minus, s.v_cov, s.a_coeff, s.s_plus, s.s_minus, s.p_coeff};
}

mzqfi_shorthand to_c(const mzqfi::ShorthandCoeffs &s) {
    return {s.v_plus, s.v_minus, s.v_cov, s.a_coeff, s.s_plus, s.s_minus, s.p_coeff};
}

mzqfi_fisher_matrix to_c(const mzqfi::FisherMatrix &m) {
    return {m.f_ss, m.f_dd, m.f_sd};
}

mzqfi_qfi to_c(const mzqfi::QfiBreakdown &q) {
    return {q.f_2p, q.f_i, q.f_i_upper, q.f_ii, to_c(q.matrix)};
}

mzqfi::QfiKind kind_from_c(mzqfi_qfi_kind k) {
    switch (k) {
        case MZQFI_QFI_2P:
            return mzqfi::QfiKind::TwoParam;
        case MZQFI_QFI_I:
            return mzqfi::QfiKind::Asym;
        case MZQFI_QFI_I_UPPER:
            return mzqfi::QfiKind::AsymUpper;
        case MZQFI_QFI_II:
            return mzqfi::QfiKind::Sym;
    }
    mzqfi::fail(mzqfi::ErrorCode::InvalidArgument, "unknown QFI kind");
}

mzqfi_qfi_kind kind_to_c(mzqfi::QfiKind k) {
    switch (k) {
        case mzqfi::QfiKind::TwoParam:
            return MZQFI_QFI_2P;
        case mzqfi::QfiKind::Asym:
            return MZQFI_QFI_I;
        case mzqfi::QfiKind::AsymUpper:
            return MZQFI_QFI_I_UPPER;
        case mzqfi::QfiKind::Sym:
            return MZQFI_QFI_II;
    }
    return MZQFI_QFI_2P;
}

mzqfi_coeff_bundle bundle_to_c(const mzqfi::CoeffBundle &b) {
    mzqfi_coeff_bundle out{};
    out.kind = kind_to_c(b.kind);
    for (int i = 0; i < 5; i++) {
        out.c[i] = b.c[i];
    }
    out.fss_limit = b.fss_limit ? 1 : 0;
    return out;
}

}  // namespace

extern "C" {

const char *mzqfi_version(void) {
    return "0.1.0";
}

const char *mzqfi_status_name(mzqfi_status status) {
    switch (status) {
        case MZQFI_OK:
            return "ok";
        case MZQFI_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case MZQFI_ERR_INTEGRITY:
            return "computation integrity";
        case MZQFI_ERR_DEGENERATE_FSS:
            return "degenerate F_ss";
        case MZQFI_ERR_NON_POSITIVE_FISHER:
            return "non-positive Fisher information";
        case MZQFI_ERR_CUTOFF_TOO_SMALL:
            return "cutoff too small";
        case MZQFI_ERR_ALL_COEFFS_ZERO:
            return "all coefficients zero";
        case MZQFI_ERR_CONFIG:
            return "config error";
        case MZQFI_ERR_VERIFICATION:
            return "verification failure";
        case MZQFI_ERR_IO:
            return "i/o error";
        case MZQFI_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *mzqfi_last_error(void) {
    return g_last_error.c_str();
}

void mzqfi_string_free(char *s) {
    std::free(s);
}

mzqfi_status mzqfi_state_separable(const mzqfi_port *port0, const mzqfi_port *port1, mzqfi_state **out) {
    return guarded([&] {
        need(port0, "port0");
        need(port1, "port1");
        need(out, "out");
        auto spec = mzqfi::InputStateSpec::separable(to_port(*port0), to_port(*port1));
        *out = new mzqfi_state{spec};
    });
}

mzqfi_status mzqfi_state_tmsv(double r, double phase, mzqfi_state **out) {
    return guarded([&] {
        need(out, "out");
        *out = new mzqfi_state{mzqfi::InputStateSpec::tmsv(r, phase)};
    });
}

void mzqfi_state_free(mzqfi_state *state) {
    delete state;
}

mzqfi_status mzqfi_state_shorthand(const mzqfi_state *state, mzqfi_shorthand *out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        *out = to_c(mzqfi::shorthand_for(state->spec));
    });
}

mzqfi_status mzqfi_fisher_matrix_at(const mzqfi_shorthand *sh, double t, mzqfi_fisher_matrix *out) {
    return guarded([&] {
        need(sh, "sh");
        need(out, "out");
        *out = to_c(mzqfi::fisher_matrix(from_c(*sh), t));
    });
}

mzqfi_status mzqfi_qfi_all(const mzqfi_shorthand *sh, double t, mzqfi_qfi *out) {
    return guarded([&] {
        need(sh, "sh");
        need(out, "out");
        *out = to_c(mzqfi::qfi_all(from_c(*sh), t));
    });
}

mzqfi_status mzqfi_coeffs(const mzqfi_shorthand *sh, mzqfi_qfi_kind kind, mzqfi_coeff_bundle *out) {
    return guarded([&] {
        need(sh, "sh");
        need(out, "out");
        *out = bundle_to_c(mzqfi::coeff_bundle(from_c(*sh), kind_from_c(kind)));
    });
}

mzqfi_status mzqfi_qcrb(double f, int64_t repetitions, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = mzqfi::qcrb(f, repetitions);
    });
}

mzqfi_status mzqfi_no_advantage(const mzqfi_shorthand *sh, mzqfi_advantage *out) {
    return guarded([&] {
        need(sh, "sh");
        need(out, "out");
        switch (mzqfi::no_advantage_classify(from_c(*sh))) {
            case mzqfi::Advantage::NoneForFi:
                *out = MZQFI_ADVANTAGE_NONE_FOR_FI;
                break;
            case mzqfi::Advantage::NoneForFii:
                *out = MZQFI_ADVANTAGE_NONE_FOR_FII;
                break;
            case mzqfi::Advantage::Neither:
                *out = MZQFI_ADVANTAGE_NEITHER;
                break;
        }
    });
}

mzqfi_status mzqfi_optimize(const mzqfi_shorthand *sh, mzqfi_qfi_kind kind, mzqfi_opt_report *out) {
    return guarded([&] {
        need(sh, "sh");
        need(out, "out");
        mzqfi::OptimizationReport r = mzqfi::optimize(from_c(*sh), kind_from_c(kind));
        mzqfi_opt_report rep{};
        rep.kind = kind;
        rep.irrelevant = r.irrelevant ? 1 : 0;
        rep.t_opt = r.t_opt;
        rep.f_max = r.f_max;
        std::strncpy(rep.case_label, r.case_label.c_str(), sizeof(rep.case_label) - 1);
        rep.num_candidates = r.candidates.size();
        rep.bundle = bundle_to_c(r.bundle);
        *out = rep;
    });
}

mzqfi_status mzqfi_grid_verify(const mzqfi_shorthand *sh, mzqfi_qfi_kind kind, size_t points, double *t_best,
                               double *f_best, int *unique) {
    return guarded([&] {
        need(sh, "sh");
        need(t_best, "t_best");
        need(f_best, "f_best");
        mzqfi::GridResult g = mzqfi::grid_verify(from_c(*sh), kind_from_c(kind), points);
        *t_best = g.t_best;
        *f_best = g.f_best;
        if (unique != nullptr) {
            *unique = g.unique ? 1 : 0;
        }
    });
}

mzqfi_status mzqfi_solve_quartic(const double coeffs[5], double roots[4], size_t *num_roots) {
    return guarded([&] {
        need(coeffs, "coeffs");
        need(roots, "roots");
        need(num_roots, "num_roots");
        mzqfi::QuarticCoeffs q{coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
        std::vector<double> r = mzqfi::solve_quartic(q);
        size_t n = std::min<size_t>(r.size(), 4);
        for (size_t i = 0; i < n; i++) {
            roots[i] = r[i];
        }
        *num_roots = n;
    });
}

mzqfi_status mzqfi_fock_build(const mzqfi_state *state, int cutoff, mzqfi_fock **out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        int c = cutoff > 0 ? cutoff : mzqfi::suggest_cutoff(state->spec);
        *out = new mzqfi_fock{mzqfi::build_state(state->spec, c)};
    });
}

mzqfi_status mzqfi_fock_apply_bs(const mzqfi_fock *in, double t, mzqfi_fock **out) {
    return guarded([&] {
        need(in, "in");
        need(out, "out");
        *out = new mzqfi_fock{mzqfi::apply_bs_t(in->vec, t)};
    });
}

mzqfi_status mzqfi_fock_apply_phases(const mzqfi_fock *in, double phi1, double phi2, mzqfi_fock **out) {
    return guarded([&] {
        need(in, "in");
        need(out, "out");
        *out = new mzqfi_fock{mzqfi::apply_phases(in->vec, phi1, phi2)};
    });
}

void mzqfi_fock_free(mzqfi_fock *fock) {
    delete fock;
}

mzqfi_status mzqfi_fock_info(const mzqfi_fock *fock, int *cutoff, double *norm, double *truncated_norm) {
    return guarded([&] {
        need(fock, "fock");
        if (cutoff != nullptr) {
            *cutoff = fock->vec.cutoff;
        }
        if (norm != nullptr) {
            *norm = fock->vec.norm();
        }
        if (truncated_norm != nullptr) {
            *truncated_norm = fock->vec.truncated_norm;
        }
    });
}

mzqfi_status mzqfi_fock_amplitude(const mzqfi_fock *fock, int n0, int n1, double *re, double *im) {
    return guarded([&] {
        need(fock, "fock");
        need(re, "re");
        need(im, "im");
        if (n0 < 0 || n1 < 0 || n0 > fock->vec.cutoff || n1 > fock->vec.cutoff) {
            mzqfi::fail(mzqfi::ErrorCode::InvalidArgument, "photon numbers outside the stored grid");
        }
        *re = fock->vec.amp(n0, n1).real();
        *im = fock->vec.amp(n0, n1).imag();
    });
}

mzqfi_status mzqfi_oracle_fisher(const mzqfi_fock *after_bs, mzqfi_fisher_matrix *out) {
    return guarded([&] {
        need(after_bs, "after_bs");
        need(out, "out");
        *out = to_c(mzqfi::oracle_fisher(after_bs->vec));
    });
}

mzqfi_status mzqfi_oracle_qfi(const mzqfi_fock *after_bs, mzqfi_qfi *out) {
    return guarded([&] {
        need(after_bs, "after_bs");
        need(out, "out");
        *out = to_c(mzqfi::oracle_qfi(after_bs->vec));
    });
}

mzqfi_status mzqfi_bs2_check(const mzqfi_state *state, double t, const double *t_primes, size_t n, double phi1,
                             double phi2, double *max_deviation) {
    return guarded([&] {
        need(state, "state");
        need(t_primes, "t_primes");
        need(max_deviation, "max_deviation");
        std::vector<double> tp(t_primes, t_primes + n);
        *max_deviation = mzqfi::bs2_invariance_check(state->spec, t, tp, phi1, phi2).max_deviation;
    });
}

mzqfi_status mzqfi_run_sweep(const char *config_json, char **csv_out) {
    return guarded([&] {
        need(config_json, "config_json");
        need(csv_out, "csv_out");
        mzqfi::ScenarioConfig c = mzqfi::parse_config(config_json);
        *csv_out = dup_string(mzqfi::sweep_csv(c, mzqfi::run_sweep(c)));
    });
}

mzqfi_status mzqfi_run_optimize(const char *config_json, char **csv_out, char **oracle_csv_out) {
    return guarded([&] {
        need(config_json, "config_json");
        need(csv_out, "csv_out");
        mzqfi::ScenarioConfig c = mzqfi::parse_config(config_json);
        mzqfi::OptimizeResult r = mzqfi::run_optimize(c);
        std::string main = mzqfi::optimize_csv(c, r);
        std::string oracle = mzqfi::oracle_check_csv(c, r);
        char *a = dup_string(main);
        if (oracle_csv_out != nullptr) {
            try {
                *oracle_csv_out = dup_string(oracle);
            } catch (...) {
                std::free(a);
                throw;
            }
        }
        *csv_out = a;
    });
}

mzqfi_status mzqfi_run_figure(int id, const char *out_dir, char **files_out) {
    return guarded([&] {
        need(out_dir, "out_dir");
        std::vector<mzqfi::OutputFile> files = mzqfi::run_figure(id);
        std::filesystem::path dir(out_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            mzqfi::fail(mzqfi::ErrorCode::Io, "cannot create directory " + dir.string() + ": " + ec.message());
        }
        std::string names;
        for (const auto &f : files) {
            std::filesystem::path p = dir / f.name;
            std::ofstream out(p, std::ios::binary);
            out << f.content;
            out.close();
            if (!out) {
                mzqfi::fail(mzqfi::ErrorCode::Io, "cannot write " + p.string());
            }
            names += f.name + "\n";
        }
        if (files_out != nullptr) {
            *files_out = dup_string(names);
        }
    });
}

mzqfi_status mzqfi_run_verify(int full, unsigned flags, char **text_out, char **json_out, int *passed) {
    return guarded([&] {
        need(passed, "passed");
        mzqfi::VerifyOptions opt;
        opt.level = full ? mzqfi::VerifyLevel::Full : mzqfi::VerifyLevel::Quick;
        opt.flip_s_plus = (flags & MZQFI_VERIFY_FLIP_S_PLUS) != 0;
        mzqfi::VerifyReport rep = mzqfi::run_verify(opt);
        char *text = text_out != nullptr ? dup_string(rep.text()) : nullptr;
        char *js = nullptr;
        if (json_out != nullptr) {
            try {
                js = dup_string(rep.json());
            } catch (...) {
                std::free(text);
                throw;
            }
        }
        if (text_out != nullptr) {
            *text_out = text;
        }
        if (json_out != nullptr) {
            *json_out = js;
        }
        *passed = rep.passed() ? 1 : 0;
    });
}

}  // extern "C"
