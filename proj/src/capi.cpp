#include "../include/weylkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report.hpp"

using weylkit::Errc;
using weylkit::Json;
using weylkit::RootDatum;

struct wk_datum {
  RootDatum rd;
};

namespace {

thread_local std::string g_last_error;

wk_status status_of(Errc code) {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::InvalidPairing:
    case Errc::QNotPrimePower:
    case Errc::TauNotDatumAutomorphism:
    case Errc::NotComposable:
    case Errc::EndpointMismatch:
    case Errc::NotReflectionSubgroup:
      return WK_ERR_INVALID_ARGUMENT;
    case Errc::ValidationFailure:
    case Errc::NotFiniteType:
    case Errc::UnrecognizedType:
    case Errc::CoprimalityViolation:
    case Errc::NotStableClass:
      return WK_ERR_VALIDATION;
    case Errc::IoError:
      return WK_ERR_IO;
    case Errc::GroupTooLarge:
    case Errc::SearchTooLarge:
      return WK_ERR_COMPUTATION;
    default:
      return WK_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
wk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WK_OK;
  } catch (const weylkit::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return WK_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WK_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

uint32_t wk_version(void) { return 10000; }  // 1.0.0

const char* wk_last_error(void) { return g_last_error.c_str(); }

const char* wk_status_name(wk_status status) {
  switch (status) {
    case WK_OK: return "ok";
    case WK_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case WK_ERR_VALIDATION: return "validation";
    case WK_ERR_COMPUTATION: return "computation";
    case WK_ERR_IO: return "io";
    case WK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void wk_string_free(char* s) { std::free(s); }

wk_status wk_datum_create_builtin(const char* name, wk_datum** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new wk_datum{RootDatum::builtin(name)}; });
}

wk_status wk_datum_create_from_json(const char* json_text, wk_datum** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    Json j = Json::parse(json_text);
    *out = new wk_datum{weylkit::resolve_datum(j)};
  });
}

wk_status wk_datum_create_from_file(const char* path, wk_datum** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new wk_datum{weylkit::resolve_datum(Json(std::string(path)))}; });
}

wk_status wk_datum_dual(const wk_datum* rd, wk_datum** out) {
  if (!rd || !out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new wk_datum{rd->rd.dual()}; });
}

void wk_datum_destroy(wk_datum* rd) { delete rd; }

int wk_datum_rank(const wk_datum* rd) { return rd ? rd->rd.rank() : -1; }

int wk_datum_num_roots(const wk_datum* rd) { return rd ? rd->rd.num_roots() : -1; }

wk_status wk_datum_describe(const wk_datum* rd, char** json_out) {
  if (!rd || !json_out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    Json params;
    params["datum"] = weylkit::datum_file_json(rd->rd);
    *json_out = dup_string(weylkit::render(weylkit::cmd_validate(params)));
  });
}

wk_status wk_datum_to_json(const wk_datum* rd, char** json_out) {
  if (!rd || !json_out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *json_out = dup_string(weylkit::render(weylkit::datum_file_json(rd->rd))); });
}

wk_status wk_command(const char* name, const char* params_json, char** json_out) {
  if (!name || !json_out) {
    g_last_error = "null argument";
    return WK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    Json params = params_json && *params_json ? Json::parse(params_json) : Json::object();
    *json_out = dup_string(weylkit::render(weylkit::run_command(name, params)));
  });
}

}  // extern "C"
