// Implementation of the public C surface: thin exception-to-status bridge
// over the JSON command layer.

#include "shcache/shcache.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "commands.hpp"
#include "errors.hpp"

struct shc_session {
  std::string lastError;
};

namespace {

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

shc_status run_guarded(shc_session* session, const char* command, const char* config_json,
                       char** out_json) {
  if (out_json != nullptr) *out_json = nullptr;
  if (session == nullptr) return SHC_ERR_INVALID_ARGUMENT;
  session->lastError.clear();
  auto fail = [&](shc_status status, const std::string& message) {
    session->lastError = message;
    return status;
  };
  if (command == nullptr || config_json == nullptr || out_json == nullptr)
    return fail(SHC_ERR_INVALID_ARGUMENT, "null argument");

  try {
    const shc::Json config = shc::parse_json_text(config_json);
    const shc::Json result = shc::run_command(command, config);
    char* rendered = duplicate(result.dump(2));
    if (rendered == nullptr) return fail(SHC_ERR_INTERNAL, "out of memory");
    *out_json = rendered;
    return SHC_OK;
  } catch (const shc::resource_limit_error& e) {
    return fail(SHC_ERR_RESOURCE_LIMIT, e.what());
  } catch (const shc::decode_failure& e) {
    return fail(SHC_ERR_DECODE_FAILURE, e.what());
  } catch (const shc::io_error& e) {
    return fail(SHC_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SHC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SHC_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

shc_session* shc_session_create(void) { return new (std::nothrow) shc_session(); }

void shc_session_destroy(shc_session* session) { delete session; }

const char* shc_last_error(const shc_session* session) {
  return session == nullptr ? "" : session->lastError.c_str();
}

const char* shc_status_name(shc_status status) {
  switch (status) {
    case SHC_OK:
      return "SHC_OK";
    case SHC_ERR_INVALID_ARGUMENT:
      return "SHC_ERR_INVALID_ARGUMENT";
    case SHC_ERR_RESOURCE_LIMIT:
      return "SHC_ERR_RESOURCE_LIMIT";
    case SHC_ERR_DECODE_FAILURE:
      return "SHC_ERR_DECODE_FAILURE";
    case SHC_ERR_IO:
      return "SHC_ERR_IO";
    case SHC_ERR_INTERNAL:
      return "SHC_ERR_INTERNAL";
  }
  return "SHC_ERR_UNKNOWN";
}

const char* shc_version_string(void) { return "1.0.0"; }

shc_status shc_allocate(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "allocate", config_json, out_json);
}

shc_status shc_place(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "place", config_json, out_json);
}

shc_status shc_deliver(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "deliver", config_json, out_json);
}

shc_status shc_bound(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "bound", config_json, out_json);
}

shc_status shc_verify(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "verify", config_json, out_json);
}

shc_status shc_mismatch(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "mismatch", config_json, out_json);
}

shc_status shc_simulate(shc_session* session, const char* config_json, char** out_json) {
  return run_guarded(session, "simulate", config_json, out_json);
}

shc_status shc_run(shc_session* session, const char* command, const char* config_json,
                   char** out_json) {
  return run_guarded(session, command, config_json, out_json);
}

void shc_string_free(char* text) { std::free(text); }

}  // extern "C"
