// Copyright 2026 The pqlucas Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqlucas/pqlucas.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "pqlucas/bi_operator.hpp"
#include "pqlucas/bounds.hpp"
#include "pqlucas/lucas.hpp"
#include "pqlucas/oracle.hpp"
#include "pqlucas/series.hpp"

struct pql_series {
  pqlucas::TruncatedSeries value;
};

namespace {

thread_local std::string g_last_error;

pql_status fail(pql_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
pql_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const pqlucas::DegenerateError& e) {
    return fail(PQL_ERR_DEGENERATE, e.what());
  } catch (const pqlucas::SeriesError& e) {
    return fail(PQL_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PQL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PQL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PQL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PQL_ERR_INTERNAL, "unknown error");
  }
}

pql_status null_arg(const char* what) {
  return fail(PQL_ERR_NULL_POINTER, std::string(what) + " is NULL");
}

pql_status emit(pqlucas::TruncatedSeries s, pql_series** out) {
  *out = new pql_series{std::move(s)};
  return PQL_OK;
}

pqlucas::ClassParams to_cpp(const pql_class_params& p) {
  return {p.lambda, p.mu, p.delta, p.alpha};
}

pql_class_params to_c(const pqlucas::ClassParams& p) {
  return {p.lambda, p.mu, p.delta, p.alpha};
}

pqlucas::BoundInputs to_cpp(const pql_bound_inputs& in) {
  return {to_cpp(in.params), in.p, in.q, in.upsilon};
}

pql_bound_inputs to_c(const pqlucas::BoundInputs& in) {
  return {to_c(in.params), in.p, in.q, in.upsilon};
}

pqlucas::FunctionSpec spec_from(const double* a, size_t count) {
  if (count > 0 && a == nullptr) {
    throw std::invalid_argument("coefficient array is NULL");
  }
  pqlucas::FunctionSpec f;
  if (count > 0) f.a.assign(a, a + count);
  return f;
}

pql_bound_report to_c(const pqlucas::BoundReport& r) {
  pql_bound_report out{};
  out.value = r.value;
  out.unbounded = r.unbounded ? 1 : 0;
  out.regime = static_cast<pql_regime>(r.regime);
  out.theta = r.theta;
  out.has_upsilon_x = r.upsilon_x.has_value();
  out.upsilon_x = r.upsilon_x.value_or(0.0);
  out.flags = r.flags;
  out.has_phi = r.phi.has_value();
  out.phi = r.phi.value_or(0.0);
  out.has_thresholds =
      r.consistent_threshold.has_value() && r.stated_threshold.has_value();
  out.consistent_threshold = r.consistent_threshold.value_or(0.0);
  out.stated_threshold = r.stated_threshold.value_or(0.0);
  return out;
}

pql_schwarz_sample to_c(const pqlucas::SchwarzSample& s) {
  return {s.r1, s.r2, s.s1, s.s2};
}

pql_sweep_report to_c(const pqlucas::SweepReport& r) {
  pql_sweep_report out{};
  out.functional = static_cast<pql_functional>(r.functional);
  out.mode = static_cast<pql_constraint_mode>(r.mode);
  out.supremum = r.supremum;
  out.argmax = to_c(r.argmax);
  out.bound = to_c(r.bound);
  out.ratio = r.ratio;
  out.pass = r.pass ? 1 : 0;
  out.points = r.points;
  return out;
}

pqlucas::ConstraintMode mode_from(pql_constraint_mode m) {
  switch (m) {
    case PQL_MODE_PAPER: return pqlucas::ConstraintMode::kPaper;
    case PQL_MODE_SCHWARZ: return pqlucas::ConstraintMode::kSchwarz;
  }
  throw std::invalid_argument("unknown constraint mode");
}

pqlucas::Functional functional_from(pql_functional f) {
  switch (f) {
    case PQL_FUNCTIONAL_ABS_A2: return pqlucas::Functional::kAbsA2;
    case PQL_FUNCTIONAL_ABS_A3: return pqlucas::Functional::kAbsA3;
    case PQL_FUNCTIONAL_FEKETE: return pqlucas::Functional::kFekete;
  }
  throw std::invalid_argument("unknown functional");
}

template <typename Binary>
pql_status binary_series(const pql_series* a, const pql_series* b,
                         pql_series** out, Binary op) {
  if (!a || !b) return null_arg("series argument");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(op(a->value, b->value), out); });
}

}  // namespace

extern "C" {

const char* pql_status_string(pql_status status) {
  switch (status) {
    case PQL_OK: return "ok";
    case PQL_ERR_NULL_POINTER: return "null pointer";
    case PQL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PQL_ERR_DOMAIN: return "domain error";
    case PQL_ERR_DEGENERATE: return "degenerate input";
    case PQL_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PQL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pql_last_error(void) { return g_last_error.c_str(); }

const char* pql_version(void) { return "1.0.0"; }

pql_status pql_series_create(const double* re, const double* im, size_t count,
                             pql_series** out) {
  if (!re) return null_arg("re");
  if (!out) return null_arg("out");
  if (count == 0) {
    return fail(PQL_ERR_INVALID_ARGUMENT, "series needs at least one coefficient");
  }
  return guarded([&] {
    std::vector<pqlucas::Scalar> c(count);
    for (size_t k = 0; k < count; ++k) c[k] = {re[k], im ? im[k] : 0.0};
    return emit(pqlucas::TruncatedSeries(std::move(c)), out);
  });
}

void pql_series_destroy(pql_series* s) { delete s; }

size_t pql_series_order(const pql_series* s) { return s ? s->value.order() : 0; }

pql_status pql_series_coeff(const pql_series* s, size_t k, double* re,
                            double* im) {
  if (!s) return null_arg("series");
  if (k > s->value.order()) {
    return fail(PQL_ERR_INVALID_ARGUMENT, "coefficient index beyond order");
  }
  if (re) *re = s->value[k].real();
  if (im) *im = s->value[k].imag();
  return PQL_OK;
}

pql_status pql_series_real_coeffs(const pql_series* s, double* out,
                                  size_t out_len) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  const size_t n = s->value.order() + 1;
  if (out_len < n) return fail(PQL_ERR_BUFFER_TOO_SMALL, "need order + 1 slots");
  for (size_t k = 0; k < n; ++k) out[k] = s->value[k].real();
  return PQL_OK;
}

pql_status pql_series_add(const pql_series* a, const pql_series* b,
                          pql_series** out) {
  return binary_series(a, b, out, [](const auto& x, const auto& y) {
    return pqlucas::add(x, y);
  });
}

pql_status pql_series_mul(const pql_series* a, const pql_series* b,
                          pql_series** out) {
  return binary_series(a, b, out, [](const auto& x, const auto& y) {
    return pqlucas::mul(x, y);
  });
}

pql_status pql_series_compose(const pql_series* outer, const pql_series* inner,
                              pql_series** out) {
  return binary_series(outer, inner, out, [](const auto& x, const auto& y) {
    return pqlucas::compose(x, y);
  });
}

pql_status pql_series_derivative(const pql_series* s, pql_series** out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(pqlucas::derivative(s->value), out); });
}

pql_status pql_series_pow_real(const pql_series* s, double exponent,
                               pql_series** out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(pqlucas::pow_real(s->value, exponent), out); });
}

pql_status pql_revert_series(const double* a, size_t count, size_t order,
                             pql_series** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    return emit(pqlucas::revert_series(spec_from(a, count), order), out);
  });
}

pql_status pql_alexander_transform(const double* a, size_t count, double* out) {
  if (count > 0 && (!a || !out)) return null_arg("coefficient array");
  return guarded([&] {
    const pqlucas::FunctionSpec t =
        pqlucas::alexander_transform(spec_from(a, count));
    std::copy(t.a.begin(), t.a.end(), out);
    return PQL_OK;
  });
}

double pql_eval_poly(const double* coeffs, size_t count, double x) {
  if (!coeffs) return 0.0;
  return pqlucas::eval_poly({coeffs, count}, x);
}

pql_status pql_lucas_sequence(double p, double q, int max_index, double* out,
                              size_t out_len) {
  if (!out) return null_arg("out");
  if (max_index < 0) return fail(PQL_ERR_INVALID_ARGUMENT, "K must be >= 0");
  if (out_len < static_cast<size_t>(max_index) + 1) {
    return fail(PQL_ERR_BUFFER_TOO_SMALL, "need K + 1 slots");
  }
  return guarded([&] {
    const pqlucas::LucasSequence seq = pqlucas::lucas_sequence(p, q, max_index);
    std::copy(seq.values.begin(), seq.values.end(), out);
    return PQL_OK;
  });
}

pql_status pql_lucas_generating_series(double p, double q, size_t order,
                                       pql_series** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(pqlucas::generating_series(p, q, order), out); });
}

pql_status pql_params_validate(const pql_class_params* params) {
  if (!params) return null_arg("params");
  return guarded([&] {
    to_cpp(*params).validate();
    return PQL_OK;
  });
}

pql_status pql_params_derived(const pql_class_params* params, double* xi,
                              double* c1, double* c2) {
  if (!params) return null_arg("params");
  const pqlucas::ClassParams c = to_cpp(*params);
  if (xi) *xi = c.xi();
  if (c1) *c1 = c.c1();
  if (c2) *c2 = c.c2();
  return PQL_OK;
}

pql_status pql_preset(const char* name, const pql_preset_overrides* overrides,
                      pql_class_params* out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  return guarded([&] {
    pqlucas::PresetOverrides ov;
    if (overrides) {
      if (overrides->has_lambda) ov.lambda = overrides->lambda;
      if (overrides->has_mu) ov.mu = overrides->mu;
      if (overrides->has_delta) ov.delta = overrides->delta;
      if (overrides->has_alpha) ov.alpha = overrides->alpha;
    }
    *out = to_c(pqlucas::preset(name, ov));
    return PQL_OK;
  });
}

pql_status pql_apply_operator(const pql_class_params* params, const double* a,
                              size_t count, size_t order, int inverse_side,
                              pql_series** out) {
  if (!params) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    const pqlucas::ClassParams c = to_cpp(*params);
    c.validate();
    const pqlucas::FunctionSpec f = spec_from(a, count);
    return emit(inverse_side ? pqlucas::apply_operator_inverse_side(c, f, order)
                             : pqlucas::apply_operator(c, f, order),
                out);
  });
}

pql_status pql_coefficient_identities(const pql_class_params* params, double a2,
                                      double a3, pql_identity_report* out) {
  if (!params) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    const pqlucas::ClassParams c = to_cpp(*params);
    c.validate();
    const pqlucas::IdentityResiduals r =
        pqlucas::extract_coefficient_identities(c, pqlucas::FunctionSpec{{a2, a3}});
    for (size_t i = 0; i < 4; ++i) {
      out->pipeline[i] = r.pipeline[i];
      out->closed_form[i] = r.closed_form[i];
      out->residual[i] = r.residual[i];
    }
    out->max_residual = r.max_residual();
    return PQL_OK;
  });
}

pql_disk_grid pql_default_disk_grid(void) {
  const pqlucas::DiskGrid g;
  return {g.r_max, g.radii, g.angles, g.inverse_order};
}

pql_status pql_check_membership(const pql_class_params* params, const double* a,
                                size_t count, const pql_disk_grid* grid,
                                pql_member_mode mode, unsigned threads,
                                pql_membership_report* out) {
  if (!params) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    const pqlucas::ClassParams c = to_cpp(*params);
    c.validate();
    pqlucas::DiskGrid g;
    if (grid) g = {grid->r_max, grid->radii, grid->angles, grid->inverse_order};
    pqlucas::MembershipMode m;
    switch (mode) {
      case PQL_MEMBER_OPERATOR: m = pqlucas::MembershipMode::kOperator; break;
      case PQL_MEMBER_STARLIKE: m = pqlucas::MembershipMode::kStarlike; break;
      case PQL_MEMBER_CONVEX: m = pqlucas::MembershipMode::kConvex; break;
      default: throw std::invalid_argument("unknown membership mode");
    }
    const pqlucas::MembershipReport r = pqlucas::check_membership_realpart(
        c, spec_from(a, count), g, m, threads);
    out->pass = r.pass ? 1 : 0;
    out->min_real_part = r.min_real_part;
    out->min_margin = r.min_margin;
    out->worst_re = r.worst_point.real();
    out->worst_im = r.worst_point.imag();
    out->worst_on_inverse = r.worst_on_inverse ? 1 : 0;
    out->points_checked = r.points_checked;
    out->flagged_points = r.flagged_points;
    return PQL_OK;
  });
}

const char* pql_regime_name(pql_regime regime) {
  return pqlucas::regime_name(static_cast<pqlucas::Regime>(regime)).data();
}

const char* pql_flag_text(unsigned flag) {
  return pqlucas::flag_text(static_cast<pqlucas::BoundFlag>(flag)).data();
}

pql_status pql_bound_a2(const pql_bound_inputs* in, pql_bound_report* out) {
  if (!in) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(pqlucas::bound_a2(to_cpp(*in)));
    return PQL_OK;
  });
}

pql_status pql_bound_a3(const pql_bound_inputs* in, pql_bound_report* out) {
  if (!in) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(pqlucas::bound_a3(to_cpp(*in)));
    return PQL_OK;
  });
}

pql_status pql_phi(const pql_bound_inputs* in, double* out) {
  if (!in) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = pqlucas::phi(to_cpp(*in));
    return PQL_OK;
  });
}

pql_status pql_fekete_szego_bound(const pql_bound_inputs* in,
                                  pql_bound_report* out) {
  if (!in) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(pqlucas::fekete_szego_bound(to_cpp(*in)));
    return PQL_OK;
  });
}

const char* pql_functional_name(pql_functional f) {
  return pqlucas::functional_name(static_cast<pqlucas::Functional>(f)).data();
}

const char* pql_mode_name(pql_constraint_mode m) {
  return pqlucas::mode_name(static_cast<pqlucas::ConstraintMode>(m)).data();
}

pql_status pql_reconstruct(const pql_bound_inputs* in,
                           const pql_schwarz_sample* s, pql_reconstructed* out) {
  if (!in || !s) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    const pqlucas::ReconstructedPair r =
        pqlucas::reconstruct(to_cpp(*in), {s->r1, s->r2, s->s1, s->s2});
    *out = {r.a2_sq, r.a2_abs, r.a3};
    return PQL_OK;
  });
}

pql_status pql_fekete_value(const pql_bound_inputs* in,
                            const pql_schwarz_sample* s, double* out) {
  if (!in || !s) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = pqlucas::fekete_value(to_cpp(*in), {s->r1, s->r2, s->s1, s->s2});
    return PQL_OK;
  });
}

pql_status pql_sweep_max(const pql_bound_inputs* in, pql_functional functional,
                         size_t grid_n, pql_constraint_mode mode,
                         unsigned threads, pql_sweep_report* out) {
  if (!in) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = to_c(pqlucas::sweep_max(to_cpp(*in), functional_from(functional),
                                   grid_n, mode_from(mode), threads));
    return PQL_OK;
  });
}

pql_status pql_verify_bounds(const pql_bound_inputs* in, size_t grid_n,
                             pql_constraint_mode mode, unsigned threads,
                             pql_verify_report* out) {
  if (!in) return null_arg("inputs");
  if (!out) return null_arg("out");
  return guarded([&] {
    const pqlucas::VerifyReport r =
        pqlucas::verify_bounds(to_cpp(*in), grid_n, mode_from(mode), threads);
    out->inputs = to_c(r.inputs);
    for (size_t i = 0; i < 3; ++i) out->sweeps[i] = to_c(r.sweeps[i]);
    out->pass = r.pass ? 1 : 0;
    return PQL_OK;
  });
}

pql_status pql_random_draws(uint64_t seed, size_t count, pql_bound_inputs* out) {
  if (count > 0 && !out) return null_arg("out");
  return guarded([&] {
    const std::vector<pqlucas::BoundInputs> draws =
        pqlucas::random_draws(seed, count);
    std::transform(draws.begin(), draws.end(), out,
                   [](const pqlucas::BoundInputs& in) { return to_c(in); });
    return PQL_OK;
  });
}

}  // extern "C"
