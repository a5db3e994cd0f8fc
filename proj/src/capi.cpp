#include "galkit/galkit.h"

#include <cstring>
#include <string>

#include "galkit/group_io.hpp"
#include "galkit/suite.hpp"

struct galkit_reports {
  std::vector<galkit::CheckReport> reports;
};

struct galkit_group {
  galkit::PermutationGroup group;
};

namespace {

thread_local std::string last_error;

char *copy_out(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
galkit_status guard(F &&body) {
  last_error.clear();
  try {
    body();
    return GALKIT_OK;
  } catch (const galkit::Error &e) {
    last_error = e.what();
    return static_cast<galkit_status>(e.code());
  } catch (const nlohmann::json::parse_error &e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return GALKIT_PARSE_ERROR;
  } catch (const nlohmann::json::exception &e) {
    last_error = e.what();
    return GALKIT_INVALID_ARGUMENT;
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return GALKIT_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return GALKIT_INTERNAL;
  }
}

galkit_status null_argument(const char *name) {
  last_error = std::string(name) + " is null";
  return GALKIT_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char *galkit_last_error(void) { return last_error.c_str(); }

void galkit_string_free(char *s) { std::free(s); }

galkit_status galkit_check_names(char **out) {
  if (!out) return null_argument("out");
  return guard([&] {
    std::string s;
    for (const auto &n : galkit::check_names()) s += n + "\n";
    *out = copy_out(s);
  });
}

galkit_status galkit_suite_run(const char *config_json, galkit_reports **out) {
  if (!config_json) return null_argument("config_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    auto config = galkit::parse_suite_config(nlohmann::json::parse(config_json));
    *out = new galkit_reports{galkit::run_suite(config)};
  });
}

galkit_status galkit_reports_parse(const char *json, galkit_reports **out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    *out = new galkit_reports{galkit::reports_from_json(nlohmann::json::parse(json))};
  });
}

galkit_status galkit_reports_emit(const galkit_reports *reports, galkit_format format, int timings,
                                  char **out) {
  if (!reports) return null_argument("reports");
  if (!out) return null_argument("out");
  return guard([&] {
    if (format == GALKIT_FORMAT_JSON)
      *out = copy_out(galkit::reports_to_json(reports->reports, timings != 0).dump(2) + "\n");
    else
      *out = copy_out(galkit::render_text(reports->reports, timings != 0));
  });
}

size_t galkit_reports_count(const galkit_reports *reports) {
  return reports ? reports->reports.size() : 0;
}

galkit_check_status galkit_reports_status(const galkit_reports *reports, size_t index) {
  if (!reports || index >= reports->reports.size()) return GALKIT_CHECK_FAIL;
  switch (reports->reports[index].status) {
    case galkit::CheckStatus::pass: return GALKIT_CHECK_PASS;
    case galkit::CheckStatus::skipped: return GALKIT_CHECK_SKIPPED;
    default: return GALKIT_CHECK_FAIL;
  }
}

int galkit_reports_exit_code(const galkit_reports *reports) {
  if (!reports) return 1;
  for (const auto &r : reports->reports)
    if (r.status == galkit::CheckStatus::fail) return 1;
  return 0;
}

void galkit_reports_free(galkit_reports *reports) { delete reports; }

galkit_status galkit_construct(const char *family, const char *params_json, galkit_format format,
                               char **out) {
  if (!family) return null_argument("family");
  if (!out) return null_argument("out");
  return guard([&] {
    auto params = params_json ? nlohmann::json::parse(params_json) : nlohmann::json::object();
    if (!params.is_object()) galkit::fail(galkit::ErrorCode::invalid_argument, "params must be an object");
    auto c = galkit::construct(family, params);
    *out = copy_out(format == GALKIT_FORMAT_JSON ? c.dump(2) + "\n" : galkit::render_construction(c));
  });
}

galkit_status galkit_group_parse(const char *text, size_t degree, galkit_group **out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] { *out = new galkit_group{galkit::parse_group(text, degree)}; });
}

size_t galkit_group_degree(const galkit_group *g) { return g ? g->group.degree() : 0; }

galkit_status galkit_group_order(const galkit_group *g, char **out) {
  if (!g) return null_argument("g");
  if (!out) return null_argument("out");
  return guard([&] { *out = copy_out(g->group.order().str()); });
}

galkit_status galkit_group_to_json(const galkit_group *g, char **out) {
  if (!g) return null_argument("g");
  if (!out) return null_argument("out");
  return guard([&] { *out = copy_out(galkit::group_to_json(g->group).dump()); });
}

void galkit_group_free(galkit_group *g) { delete g; }

}  // extern "C"
