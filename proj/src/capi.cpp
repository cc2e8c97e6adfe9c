#include "goldfish/goldfish.h"

#include <exception>
#include <new>
#include <string>

#include "goldfish/classic.hpp"
#include "goldfish/config.hpp"
#include "goldfish/equilibria.hpp"
#include "goldfish/io.hpp"
#include "goldfish/oracle.hpp"
#include "goldfish/spectral.hpp"
#include "goldfish/verify.hpp"

struct gf_config_s {
  goldfish::SystemConfig value;
};
struct gf_trajectory_s {
  goldfish::Trajectory value;
};
struct gf_catalog_s {
  goldfish::EquilibriumCatalog value;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_summary;

gf_status status_of(goldfish::ErrorKind kind) {
  using goldfish::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return GF_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse: return GF_ERR_PARSE;
    case ErrorKind::kValidation: return GF_ERR_VALIDATION;
    case ErrorKind::kIo: return GF_ERR_IO;
    case ErrorKind::kUnsupported: return GF_ERR_UNSUPPORTED;
    case ErrorKind::kCollision: return GF_ERR_COLLISION;
    case ErrorKind::kConvergence: return GF_ERR_CONVERGENCE;
    case ErrorKind::kTracking: return GF_ERR_TRACKING;
    case ErrorKind::kIntegration: return GF_ERR_INTEGRATION;
  }
  return GF_ERR_INTERNAL;
}

template <class F>
gf_status guarded(F&& f) {
  try {
    f();
    return GF_OK;
  } catch (const goldfish::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GF_ERR_INTERNAL;
  }
}

template <class T>
T& deref(T* p, const char* what) {
  if (p == nullptr) throw goldfish::InvalidArgument(std::string(what) + " is null");
  return *p;
}

std::string text(const char* s, const char* what) {
  if (s == nullptr) throw goldfish::InvalidArgument(std::string(what) + " is null");
  return s;
}

}  // namespace

extern "C" {

const char* gf_last_error(void) { return last_error.c_str(); }

const char* gf_status_name(gf_status status) {
  switch (status) {
    case GF_OK: return "ok";
    case GF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GF_ERR_PARSE: return "parse error";
    case GF_ERR_VALIDATION: return "validation error";
    case GF_ERR_IO: return "I/O error";
    case GF_ERR_UNSUPPORTED: return "unsupported";
    case GF_ERR_COLLISION: return "collision";
    case GF_ERR_CONVERGENCE: return "no convergence";
    case GF_ERR_TRACKING: return "tracking ambiguity";
    case GF_ERR_INTEGRATION: return "integration failure";
    case GF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int gf_status_is_numerical(gf_status status) {
  return status == GF_ERR_COLLISION || status == GF_ERR_CONVERGENCE || status == GF_ERR_TRACKING ||
         status == GF_ERR_INTEGRATION;
}

gf_status gf_config_load_file(const char* path, gf_config* out) {
  return guarded([&] {
    deref(out, "out");
    *out = new gf_config_s{goldfish::load_config_file(text(path, "path"))};
  });
}

gf_status gf_config_load_string(const char* json, gf_config* out) {
  return guarded([&] {
    deref(out, "out");
    *out = new gf_config_s{goldfish::load_config(text(json, "json"))};
  });
}

void gf_config_destroy(gf_config config) { delete config; }

gf_status gf_config_n(gf_config config, int* n) {
  return guarded([&] { deref(n, "n") = deref(config, "config").value.n; });
}

gf_status gf_config_omega(gf_config config, double* omega) {
  return guarded([&] { deref(omega, "omega") = deref(config, "config").value.omega; });
}

gf_status gf_config_period(gf_config config, double* period) {
  return guarded([&] { deref(period, "period") = goldfish::period(deref(config, "config").value); });
}

gf_status gf_config_t_end(gf_config config, double* t_end) {
  return guarded([&] { deref(t_end, "t_end") = deref(config, "config").value.t_end; });
}

gf_status gf_config_samples(gf_config config, int* samples) {
  return guarded([&] { deref(samples, "samples") = deref(config, "config").value.samples; });
}

gf_simulate_options gf_simulate_defaults(void) { return gf_simulate_options{0.0, 0, 0.0, 0.0, 0}; }

gf_status gf_simulate(gf_config config, gf_method method, const gf_simulate_options* options, gf_trajectory* out) {
  return guarded([&] {
    const goldfish::SystemConfig& c = deref(config, "config").value;
    deref(out, "out");
    const gf_simulate_options opt = options ? *options : gf_simulate_defaults();
    const double t_end = opt.t_end > 0.0 ? opt.t_end : c.t_end;
    const int samples = opt.samples > 0 ? opt.samples : c.samples;
    const std::vector<double> times = goldfish::uniform_times(t_end, samples);
    goldfish::IntegratorOptions ode;
    if (opt.rtol > 0.0) ode.rtol = opt.rtol;
    if (opt.atol > 0.0) ode.atol = opt.atol;

    goldfish::Trajectory result;
    switch (method) {
      case GF_METHOD_SPECTRAL:
        result = goldfish::solve_newgold(c, times,
                                         opt.literal_m ? goldfish::MatrixReading::kPositionDifferences
                                                       : goldfish::MatrixReading::kCoefficientDifferences);
        break;
      case GF_METHOD_ODE:
        result = goldfish::integrate(goldfish::OdeSystem::kNewgold, c.z0, c.v0, c.omega, times, ode);
        break;
      case GF_METHOD_ISOGOLD_ALGEBRAIC: result = goldfish::solve_isogold_path(c, times); break;
      case GF_METHOD_ISOGOLD_ODE:
        result = goldfish::integrate(goldfish::OdeSystem::kIsogold, c.z0, c.v0, c.omega, times, ode);
        break;
      default: throw goldfish::InvalidArgument("unknown method");
    }
    *out = new gf_trajectory_s{std::move(result)};
  });
}

void gf_trajectory_destroy(gf_trajectory trajectory) { delete trajectory; }

gf_status gf_trajectory_shape(gf_trajectory trajectory, size_t* samples, int* bodies) {
  return guarded([&] {
    const goldfish::Trajectory& t = deref(trajectory, "trajectory").value;
    if (samples) *samples = t.size();
    if (bodies) *bodies = t.bodies();
  });
}

gf_status gf_trajectory_time(gf_trajectory trajectory, size_t index, double* t) {
  return guarded([&] {
    const goldfish::Trajectory& tr = deref(trajectory, "trajectory").value;
    if (index >= tr.size()) throw goldfish::InvalidArgument("sample index out of range");
    deref(t, "t") = tr.times[index];
  });
}

gf_status gf_trajectory_position(gf_trajectory trajectory, size_t index, int label, double* re, double* im) {
  return guarded([&] {
    const goldfish::Trajectory& tr = deref(trajectory, "trajectory").value;
    if (index >= tr.size()) throw goldfish::InvalidArgument("sample index out of range");
    if (label < 1 || label > tr.bodies()) throw goldfish::InvalidArgument("label out of range");
    const goldfish::Complex z = tr.samples[index][static_cast<std::size_t>(label - 1)];
    deref(re, "re") = z.real();
    deref(im, "im") = z.imag();
  });
}

gf_status gf_trajectory_closure(gf_trajectory trajectory, int* perm, int* present) {
  return guarded([&] {
    const goldfish::Trajectory& tr = deref(trajectory, "trajectory").value;
    deref(present, "present") = tr.closure_permutation ? 1 : 0;
    if (tr.closure_permutation) {
      deref(perm, "perm");
      for (std::size_t k = 0; k < tr.closure_permutation->size(); ++k) perm[k] = (*tr.closure_permutation)[k] + 1;
    }
  });
}

gf_status gf_trajectory_write(gf_trajectory trajectory, const char* path, gf_format format) {
  return guarded([&] {
    const goldfish::Trajectory& tr = deref(trajectory, "trajectory").value;
    const std::string body = format == GF_FORMAT_JSON ? goldfish::trajectory_to_json(tr) : goldfish::trajectory_to_csv(tr);
    goldfish::write_text_file(text(path, "path"), body);
  });
}

gf_status gf_trajectory_read_csv(const char* path, gf_trajectory* out) {
  return guarded([&] {
    deref(out, "out");
    *out = new gf_trajectory_s{goldfish::trajectory_from_csv(goldfish::read_text_file(text(path, "path")))};
  });
}

gf_status gf_equilibria(int n, gf_catalog* out) {
  return guarded([&] {
    deref(out, "out");
    *out = new gf_catalog_s{goldfish::newgold_equilibria(n)};
  });
}

gf_status gf_catalog_read_json(const char* path, gf_catalog* out) {
  return guarded([&] {
    deref(out, "out");
    *out = new gf_catalog_s{goldfish::catalog_from_json(goldfish::read_text_file(text(path, "path")))};
  });
}

void gf_catalog_destroy(gf_catalog catalog) { delete catalog; }

gf_status gf_catalog_size(gf_catalog catalog, size_t* entries, int* bodies) {
  return guarded([&] {
    const goldfish::EquilibriumCatalog& c = deref(catalog, "catalog").value;
    if (entries) *entries = c.entries.size();
    if (bodies) *bodies = c.entries.empty() ? 0 : static_cast<int>(c.entries.front().configuration.size());
  });
}

gf_status gf_catalog_entry(gf_catalog catalog, size_t index, int* family, int* perm, double* residual, double* z) {
  return guarded([&] {
    const goldfish::EquilibriumCatalog& c = deref(catalog, "catalog").value;
    if (index >= c.entries.size()) throw goldfish::InvalidArgument("catalog index out of range");
    const goldfish::EquilibriumEntry& e = c.entries[index];
    if (family) *family = e.family == goldfish::EquilibriumFamily::kReal ? 0 : 1;
    if (perm) *perm = e.permutation_index;
    if (residual) *residual = e.residual;
    if (z)
      for (std::size_t k = 0; k < e.configuration.size(); ++k) {
        z[2 * k] = e.configuration[k].real();
        z[2 * k + 1] = e.configuration[k].imag();
      }
  });
}

gf_status gf_catalog_write_json(gf_catalog catalog, const char* path) {
  return guarded([&] {
    goldfish::write_text_file(text(path, "path"), goldfish::catalog_to_json(deref(catalog, "catalog").value));
  });
}

gf_status gf_verify(gf_config config, const gf_verify_options* options, gf_verify_report* report) {
  return guarded([&] {
    const goldfish::SystemConfig& c = deref(config, "config").value;
    deref(report, "report");
    goldfish::VerifyOptions opt;
    if (options) {
      if (options->tol > 0.0) opt.tol = options->tol;
      if (options->t_end > 0.0) opt.t_end = options->t_end;
      if (options->ode_tol > 0.0) {
        opt.ode.rtol = options->ode_tol;
        opt.ode.atol = 1e-2 * options->ode_tol;
      }
    }
    const goldfish::VerifyReport r = goldfish::verify(c, opt);
    *report = gf_verify_report{r.period,          r.max_deviation,    r.closure_multiset_error,
                               r.coefficient_order, r.closure_order,  r.closure_error_kT,
                               r.psi_residual,    r.max_displacement, r.passed ? 1 : 0};
    last_summary = r.summary();
  });
}

const char* gf_last_verify_summary(void) { return last_summary.c_str(); }

gf_status gf_plot_trajectory_svg(gf_trajectory trajectory, const char* path, int overlay_equilibria,
                                 int overlay_initial) {
  return guarded([&] {
    const goldfish::Trajectory& tr = deref(trajectory, "trajectory").value;
    const auto markers = goldfish::figure_markers(tr, overlay_equilibria != 0, overlay_initial != 0);
    goldfish::write_text_file(text(path, "path"), goldfish::render_trajectory_svg(tr, markers));
  });
}

gf_status gf_plot_catalog_svg(gf_catalog catalog, const char* path) {
  return guarded([&] {
    goldfish::write_text_file(text(path, "path"), goldfish::render_catalog_svg(deref(catalog, "catalog").value));
  });
}

}  // extern "C"
