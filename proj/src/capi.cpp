#include "lenfact/lenfact.h"

#include <string>

#include "lenfact/error.hpp"
#include "lenfact/invariants.hpp"
#include "lenfact/report.hpp"

struct lf_monoid {
  lenfact::Presentation p;
};

struct lf_report {
  lenfact::RunResult result;
};

namespace {

thread_local std::string last_error;

lf_status fail(lf_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class F>
lf_status guard(F&& fn) {
  try {
    fn();
    return LF_OK;
  } catch (const lenfact::Error& e) {
    return fail(static_cast<lf_status>(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(LF_INTERNAL, e.what());
  } catch (...) {
    return fail(LF_INTERNAL, "unknown exception");
  }
}

lf_status null_arg(const char* name) { return fail(LF_INVALID_INPUT, std::string(name) + " is NULL"); }

}  // namespace

extern "C" {

const char* lf_version(void) { return "0.1.0"; }

const char* lf_status_name(lf_status status) {
  if (status == LF_OK) return "Ok";
  if (status == LF_INTERNAL) return "Internal";
  if (status >= LF_INVALID_INPUT && status <= LF_ASSERTION_FAILED)
    return lenfact::error_code_name(static_cast<lenfact::ErrorCode>(status));
  return "Unknown";
}

const char* lf_last_error(void) { return last_error.c_str(); }

void lf_options_init(lf_options* options) {
  if (!options) return;
  options->bound = -1;
  options->strategy = nullptr;
  options->format = nullptr;
  options->element = nullptr;
}

lf_status lf_monoid_from_json(const char* json, lf_monoid** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    lenfact::MonoidSpec spec = lenfact::parse_monoid_document(json);
    *out = new lf_monoid{lenfact::normalize_spec(spec)};
  });
}

void lf_monoid_free(lf_monoid* monoid) { delete monoid; }

size_t lf_monoid_atom_count(const lf_monoid* monoid) { return monoid ? monoid->p.size() : 0; }

size_t lf_monoid_dim(const lf_monoid* monoid) { return monoid ? monoid->p.ambient.dim() : 0; }

lf_status lf_monoid_atom(const lf_monoid* monoid, size_t i, int64_t* out, size_t out_len) {
  if (!monoid) return null_arg("monoid");
  if (!out) return null_arg("out");
  if (i >= monoid->p.size()) return fail(LF_INVALID_INPUT, "atom index out of range");
  const auto& a = monoid->p.atoms[i];
  if (out_len < a.size()) return fail(LF_INVALID_INPUT, "output buffer too small");
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[j];
  return LF_OK;
}

lf_status lf_monoid_rank(const lf_monoid* monoid, size_t* out) {
  if (!monoid) return null_arg("monoid");
  if (!out) return null_arg("out");
  return guard([&] { *out = lenfact::gp_rank(monoid->p); });
}

lf_status lf_is_factorial(const lf_monoid* monoid, int* out) {
  if (!monoid) return null_arg("monoid");
  if (!out) return null_arg("out");
  return guard([&] { *out = lenfact::is_factorial(monoid->p); });
}

lf_status lf_is_half_factorial(const lf_monoid* monoid, int* out) {
  if (!monoid) return null_arg("monoid");
  if (!out) return null_arg("out");
  return guard([&] { *out = lenfact::is_half_factorial(monoid->p); });
}

lf_status lf_is_length_factorial(const lf_monoid* monoid, int* out) {
  if (!monoid) return null_arg("monoid");
  if (!out) return null_arg("out");
  return guard([&] { *out = lenfact::is_length_factorial(monoid->p, lenfact::LfStrategy::kKernel).value; });
}

lf_status lf_is_pls(const lf_monoid* monoid, int* out) {
  if (!monoid) return null_arg("monoid");
  if (!out) return null_arg("out");
  return guard([&] {
    lenfact::PureSets s = lenfact::pure_sets(monoid->p);
    *out = !s.purely_long.empty() && !s.purely_short.empty();
  });
}

lf_status lf_factorization_count(const lf_monoid* monoid, const int64_t* x, size_t x_len, size_t* out) {
  if (!monoid) return null_arg("monoid");
  if (!x) return null_arg("x");
  if (!out) return null_arg("out");
  if (x_len != monoid->p.ambient.dim()) return fail(LF_INVALID_INPUT, "element has the wrong dimension");
  return guard([&] {
    lenfact::Vec v(x, x + x_len);
    monoid->p.ambient.canonicalize(v);
    *out = lenfact::factorizations(monoid->p, v).size();
  });
}

lf_status lf_run(const char* command, const char* input, const lf_options* options, lf_report** out) {
  if (!command) return null_arg("command");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    lenfact::RunOptions opt;
    if (options) {
      if (options->bound >= 0) opt.bound = options->bound;
      if (options->strategy) opt.strategy = options->strategy;
      if (options->format) opt.format = options->format;
      if (options->element) opt.element = options->element;
    }
    *out = new lf_report{lenfact::run(command, input ? input : "", opt)};
  });
}

const char* lf_report_text(const lf_report* report) { return report ? report->result.output.c_str() : ""; }

int lf_report_exit_code(const lf_report* report) { return report ? report->result.exit_code : 1; }

void lf_report_free(lf_report* report) { delete report; }

}  // extern "C"
