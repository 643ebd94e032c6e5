#include "bundlezeta/bundlezeta.h"

#include <cstring>
#include <string>

#include "bundlezeta/verify.hpp"
#include "job.hpp"

struct bz_job {
  bz::io::json doc;
  bz::job::Overrides over;
  std::string command;
};

struct bz_result {
  bz::job::Outcome outcome;
};

struct bz_series {
  bz::GradedSeries s;
};

namespace {

thread_local std::string last_error;

bz_status fail(bz_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

bz_status from_exception() {
  try {
    throw;
  } catch (const bz::SchemaError& e) {
    return fail(BZ_SCHEMA, e.what());
  } catch (const bz::IntegralityError& e) {
    return fail(BZ_INTEGRALITY, e.what());
  } catch (const bz::PreconditionError& e) {
    return fail(BZ_PRECONDITION, e.what());
  } catch (const std::exception& e) {
    return fail(BZ_INTERNAL, e.what());
  } catch (...) {
    return fail(BZ_INTERNAL, "unknown exception");
  }
}

}  // namespace

extern "C" {

const char* bz_version(void) { return BUNDLEZETA_VERSION; }

const char* bz_last_error(void) { return last_error.c_str(); }

const char* bz_command_name(size_t i) {
  const char* const* names = bz::job::command_names();
  for (size_t k = 0; names[k]; ++k)
    if (k == i) return names[k];
  return nullptr;
}

const char* bz_suite_name(size_t i) {
  const auto& names = bz::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

bz_status bz_job_parse(const char* text, bz_job** out) {
  if (!text || !out) return fail(BZ_USAGE, "null argument");
  *out = nullptr;
  try {
    auto* j = new bz_job;
    j->doc = bz::job::parse_document(text);
    if (j->doc.is_object()) {
      auto it = j->doc.find("command");
      if (it != j->doc.end() && it->is_string()) j->command = it->get<std::string>();
    }
    *out = j;
    return BZ_OK;
  } catch (...) {
    return from_exception();
  }
}

const char* bz_job_command(const bz_job* job) { return job && !job->command.empty() ? job->command.c_str() : nullptr; }

bz_status bz_job_set_n(bz_job* job, int n) {
  if (!job) return fail(BZ_USAGE, "null job");
  if (n < 1) return fail(BZ_USAGE, "truncation must be at least 1");
  job->over.n = n;
  return BZ_OK;
}

bz_status bz_job_set_default_n(bz_job* job, int n) {
  if (!job) return fail(BZ_USAGE, "null job");
  if (n < 1) return fail(BZ_USAGE, "truncation must be at least 1");
  job->over.default_n = n;
  return BZ_OK;
}

bz_status bz_job_set_seed(bz_job* job, uint64_t seed) {
  if (!job) return fail(BZ_USAGE, "null job");
  job->over.seed = seed;
  return BZ_OK;
}

bz_status bz_job_set_format(bz_job* job, bz_format format) {
  if (!job) return fail(BZ_USAGE, "null job");
  if (format != BZ_FORMAT_TEXT && format != BZ_FORMAT_JSON) return fail(BZ_USAGE, "unknown format");
  job->over.format = format == BZ_FORMAT_JSON ? bz::job::Format::Json : bz::job::Format::Text;
  return BZ_OK;
}

void bz_job_free(bz_job* job) { delete job; }

bz_status bz_job_run(const bz_job* job, bz_result** out) {
  if (!job || !out) return fail(BZ_USAGE, "null argument");
  *out = nullptr;
  try {
    auto* r = new bz_result;
    try {
      r->outcome = bz::job::run(bz::job::make_job(job->doc, job->over));
    } catch (...) {
      r->outcome.exit_code = from_exception();
      r->outcome.error = bz::job::error_kind(r->outcome.exit_code) + ": " + last_error;
    }
    *out = r;
    if (r->outcome.exit_code == BZ_VERIFY_FAILED) last_error = "verification failed";
    return static_cast<bz_status>(r->outcome.exit_code);
  } catch (...) {
    return from_exception();
  }
}

bz_status bz_result_status(const bz_result* r) { return r ? static_cast<bz_status>(r->outcome.exit_code) : BZ_USAGE; }
const char* bz_result_output(const bz_result* r) { return r ? r->outcome.output.c_str() : ""; }
const char* bz_result_error(const bz_result* r) { return r ? r->outcome.error.c_str() : ""; }
void bz_result_free(bz_result* r) { delete r; }

bz_status bz_zeta_plain(const int64_t* matrix, size_t dim, int n, bz_series** out) {
  if (!matrix || !out) return fail(BZ_USAGE, "null argument");
  *out = nullptr;
  if (n < 1) return fail(BZ_USAGE, "truncation must be at least 1");
  try {
    bz::IntMatrix m(dim, dim);
    for (size_t i = 0; i < dim * dim; ++i) m(i / dim, i % dim) = static_cast<long>(matrix[i]);
    bz::GradedSeries s = bz::zeta_det_route(bz::MonodromySpec::closed(m), bz::ZetaVariant::Plain).expand(n);
    bz::assert_integral(s, "zeta");
    *out = new bz_series{std::move(s)};
    return BZ_OK;
  } catch (...) {
    return from_exception();
  }
}

int bz_series_truncation(const bz_series* s) { return s ? s->s.truncation() : -1; }

bz_status bz_series_coefficient(const bz_series* s, int k, int64_t* out) {
  if (!s || !out) return fail(BZ_USAGE, "null argument");
  if (k < 0 || k > s->s.truncation()) return fail(BZ_USAGE, "degree outside the truncation");
  if (!s->s.group()->trivial()) return fail(BZ_PRECONDITION, "series is not over Z");
  bz::Rational c = s->s[k].coefficient({});
  if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return fail(BZ_INTEGRALITY, "coefficient is not a machine integer");
  *out = c.get_num().get_si();
  return BZ_OK;
}

size_t bz_series_render(const bz_series* s, char* buf, size_t cap) {
  if (!s) return 0;
  std::string r = bz::render(s->s);
  if (buf && cap) {
    size_t k = std::min(cap - 1, r.size());
    std::memcpy(buf, r.data(), k);
    buf[k] = '\0';
  }
  return r.size();
}

void bz_series_free(bz_series* s) { delete s; }

}  // extern "C"
