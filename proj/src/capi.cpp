#include "isograss/isograss.h"

#include "isograss/exprparse.hpp"
#include "isograss/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct isograss_space {
  isograss::SpaceId id;
};

struct isograss_presentation {
  isograss::Presentation p;
};

namespace {

thread_local std::string last_error;

isograss_status fail(isograss_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body` and translates exceptions into status codes.
template <class F>
isograss_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const isograss::SpaceError& e) {
    return fail(ISOGRASS_SPACE_SYNTAX, e.what());
  } catch (const isograss::UnsupportedSpace& e) {
    return fail(ISOGRASS_UNSUPPORTED, e.what());
  } catch (const isograss::DimensionMismatch& e) {
    return fail(ISOGRASS_DIMENSION_MISMATCH, e.what());
  } catch (const isograss::ParseError& e) {
    return fail(ISOGRASS_PARSE, e.what());
  } catch (const isograss::UnknownGenerator& e) {
    return fail(ISOGRASS_UNKNOWN_GENERATOR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ISOGRASS_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ISOGRASS_INTERNAL, e.what());
  } catch (...) {
    return fail(ISOGRASS_INTERNAL, "unknown error");
  }
}

isograss_status emit(const isograss::Json& j, char** out) {
  *out = dup(j.dump(2));
  return ISOGRASS_OK;
}

bool null_args(std::initializer_list<const void*> ptrs) {
  for (auto p : ptrs)
    if (!p) return true;
  return false;
}

}  // namespace

extern "C" {

const char* isograss_version(void) { return "1.0.0"; }

const char* isograss_last_error(void) { return last_error.c_str(); }

void isograss_free_string(char* s) { std::free(s); }

isograss_status isograss_space_parse(const char* spec, isograss_space** out) {
  if (null_args({spec, out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new isograss_space{isograss::parse_space(spec)};
    return ISOGRASS_OK;
  });
}

void isograss_space_destroy(isograss_space* space) { delete space; }

isograss_status isograss_space_dimension(const isograss_space* space, int64_t* out) {
  if (null_args({space, out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = isograss::dimension(space->id);
    return ISOGRASS_OK;
  });
}

isograss_status isograss_space_describe(const isograss_space* space, char** json_out) {
  if (null_args({space, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(isograss::space_json(space->id), json_out); });
}

isograss_status isograss_presentation_create(const isograss_space* space,
                                             isograss_presentation** out) {
  if (null_args({space, out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new isograss_presentation{isograss::presentation_for(space->id)};
    return ISOGRASS_OK;
  });
}

void isograss_presentation_destroy(isograss_presentation* p) { delete p; }

isograss_status isograss_presentation_to_json(const isograss_presentation* p, int with_trace,
                                              char** json_out) {
  if (null_args({p, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(isograss::presentation_json(p->p, with_trace != 0), json_out); });
}

isograss_status isograss_complex_summary(const isograss_space* space, char** json_out) {
  if (null_args({space, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto* g = std::get_if<isograss::ComplexGrass>(&space->id);
    if (!g) return fail(ISOGRASS_INVALID_ARGUMENT, "complex summary needs a CG space");
    return emit(isograss::complex_summary_json(*g), json_out);
  });
}

isograss_status isograss_poincare(const isograss_space* space, char** json_out) {
  if (null_args({space, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(isograss::poincare_json(space->id), json_out); });
}

isograss_status isograss_element_height(const isograss_space* space, const char* expression,
                                        size_t cap, char** json_out) {
  if (null_args({space, expression, json_out}))
    return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto j = isograss::height_json(space->id, expression, cap);
    emit(j, json_out);
    if (j["overflow"].get<bool>())
      return fail(ISOGRASS_HEIGHT_OVERFLOW,
                  "element power still nonzero at cap " + std::to_string(j["cap"].get<std::size_t>()));
    return ISOGRASS_OK;
  });
}

isograss_status isograss_element_eval(const isograss_space* space, const char* expression,
                                      char** json_out) {
  if (null_args({space, expression, json_out}))
    return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(isograss::eval_json(space->id, expression), json_out); });
}

isograss_status isograss_verdict(const isograss_space* source, const isograss_space* target,
                                 char** json_out) {
  if (null_args({source, target, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto v = isograss::verdict(source->id, target->id);
    return emit(isograss::verdict_json(source->id, target->id, v), json_out);
  });
}

isograss_status isograss_enumerate(const char* family, int bound, char** json_out) {
  if (null_args({family, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = isograss::parse_family(family);
    if (!f)
      return fail(ISOGRASS_INVALID_ARGUMENT,
                  std::string("unknown family '") + family + "' (IsoIso, IsoReal, RealIso)");
    return emit(isograss::enumeration_json(isograss::enumerate_equal_dim_pairs(*f, bound)), json_out);
  });
}

isograss_status isograss_verify(int bound, int s_max, int* ok_out, char** json_out) {
  if (null_args({ok_out, json_out})) return fail(ISOGRASS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto r = isograss::run_verify(bound, s_max);
    *ok_out = r.ok ? 1 : 0;
    return emit(r.report, json_out);
  });
}

}  // extern "C"
