// Implementation of the C interface over the C++ core.

#include "zolotarev.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "atlas.hpp"
#include "cactus.hpp"
#include "render.hpp"
#include "verify.hpp"

using namespace zolotarev;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

zv_status fail(zv_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
zv_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    return fail(ZV_ERR_USAGE, e.what());
  } catch (const CapabilityError& e) {
    return fail(ZV_ERR_CAPABILITY, e.what());
  } catch (const DomainError& e) {
    return fail(ZV_ERR_DOMAIN, e.what());
  } catch (const ClosureError& e) {
    return fail(ZV_ERR_CLOSURE, e.what());
  } catch (const VerificationError& e) {
    return fail(ZV_ERR_VERIFY, e.what());
  } catch (const std::exception& e) {
    return fail(ZV_ERR_INTERNAL, e.what());
  }
}

}  // namespace

struct zv_enumeration {
  Passport passport;
  std::string filter;
  std::vector<CactusClass> classes;
};

struct zv_atlas {
  Atlas atlas;
};

extern "C" {

const char* zv_status_name(zv_status s) {
  switch (s) {
    case ZV_OK: return "ok";
    case ZV_ERR_USAGE: return "usage";
    case ZV_ERR_CAPABILITY: return "capability";
    case ZV_ERR_DOMAIN: return "domain";
    case ZV_ERR_CLOSURE: return "closure";
    case ZV_ERR_VERIFY: return "verify";
    case ZV_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* zv_last_error(void) { return g_last_error.c_str(); }

void zv_string_free(char* s) { std::free(s); }

zv_status zv_enumerate(int degree, int k, int l, int m, const char* group_filter,
                       int min_aut, zv_enumeration** out) {
  return guarded([&]() -> zv_status {
    if (!out) return fail(ZV_ERR_USAGE, "null output pointer");
    std::string filter = group_filter ? group_filter : "any";
    if (filter != "any" && filter != "symmetric" && filter != "alternating" &&
        filter != "psl27")
      return fail(ZV_ERR_USAGE, "group filter must be any|symmetric|alternating|psl27");
    Passport pp(degree, k, l, m);
    auto classes = enumerate_cacti(pp);
    std::vector<CactusClass> kept;
    for (const auto& c : classes) {
      if (filter != "any" && std::string(c.group.name_str()) != filter) continue;
      if (c.aut_order < min_aut) continue;
      kept.push_back(c);
    }
    std::string desc = filter;
    if (min_aut > 1) desc += "+aut>=" + std::to_string(min_aut);
    *out = new zv_enumeration{pp, desc, std::move(kept)};
    return ZV_OK;
  });
}

void zv_enumeration_free(zv_enumeration* e) { delete e; }

int zv_enumeration_count(const zv_enumeration* e) {
  return e ? static_cast<int>(e->classes.size()) : 0;
}

zv_status zv_enumeration_class_json(const zv_enumeration* e, int index, char** out) {
  return guarded([&]() -> zv_status {
    if (!e || !out) return fail(ZV_ERR_USAGE, "null argument");
    if (index < 0 || index >= static_cast<int>(e->classes.size()))
      return fail(ZV_ERR_USAGE, "class index out of range");
    *out = dup_string(class_json(e->classes[index]));
    return ZV_OK;
  });
}

zv_status zv_enumeration_render(const zv_enumeration* e, const char* format,
                                char** out) {
  return guarded([&]() -> zv_status {
    if (!e || !out || !format) return fail(ZV_ERR_USAGE, "null argument");
    std::string f = format;
    if (f == "text")
      *out = dup_string(enumeration_text(e->classes));
    else if (f == "json")
      *out = dup_string(enumeration_json(e->classes));
    else
      return fail(ZV_ERR_USAGE, "format must be text|json");
    return ZV_OK;
  });
}

zv_status zv_borders_render(const zv_enumeration* e, const char* format, char** out) {
  return guarded([&]() -> zv_status {
    if (!e || !out || !format) return fail(ZV_ERR_USAGE, "null argument");
    std::string f = format;
    if (f == "text")
      *out = dup_string(borders_text(e->classes));
    else if (f == "json")
      *out = dup_string(borders_json(e->classes));
    else
      return fail(ZV_ERR_USAGE, "format must be text|json");
    return ZV_OK;
  });
}

zv_status zv_atlas_build(const zv_enumeration* e, zv_atlas** out) {
  return guarded([&]() -> zv_status {
    if (!e || !out) return fail(ZV_ERR_USAGE, "null argument");
    *out = new zv_atlas{build_atlas(e->classes, e->filter, e->passport)};
    return ZV_OK;
  });
}

void zv_atlas_free(zv_atlas* a) { delete a; }

int zv_atlas_component_count(const zv_atlas* a) {
  return a ? static_cast<int>(a->atlas.components.size()) : 0;
}

zv_status zv_atlas_component_counts(const zv_atlas* a, int component, int* faces,
                                    int* edges, int* vertices, int* chi) {
  return guarded([&]() -> zv_status {
    if (!a) return fail(ZV_ERR_USAGE, "null argument");
    if (component < 0 || component >= static_cast<int>(a->atlas.components.size()))
      return fail(ZV_ERR_USAGE, "component index out of range");
    const auto& c = a->atlas.components[component];
    if (faces) *faces = c.F;
    if (edges) *edges = c.E;
    if (vertices) *vertices = c.V;
    if (chi) *chi = c.chi;
    return ZV_OK;
  });
}

const char* zv_atlas_component_surface(const zv_atlas* a, int component) {
  if (!a || component < 0 ||
      component >= static_cast<int>(a->atlas.components.size()))
    return nullptr;
  return a->atlas.components[component].surface.c_str();
}

zv_status zv_atlas_render(const zv_atlas* a, const char* format, char** out) {
  return guarded([&]() -> zv_status {
    if (!a || !out || !format) return fail(ZV_ERR_USAGE, "null argument");
    std::string f = format;
    if (f == "json")
      *out = dup_string(export_json(a->atlas));
    else if (f == "dot")
      *out = dup_string(export_dot(a->atlas));
    else if (f == "summary")
      *out = dup_string(summary_text(a->atlas));
    else
      return fail(ZV_ERR_USAGE, "format must be json|dot|summary");
    return ZV_OK;
  });
}

zv_status zv_analytic_deg5(double b_re, double b_im, double tol, const char* format,
                           char** out, int* failed) {
  return guarded([&]() -> zv_status {
    if (!out || !format) return fail(ZV_ERR_USAGE, "null argument");
    std::string f = format;
    if (f != "text" && f != "json") return fail(ZV_ERR_USAGE, "format must be text|json");
    *out = dup_string(analytic_deg5_report(Cpx(b_re, b_im), tol, f == "json", failed));
    return ZV_OK;
  });
}

zv_status zv_analytic_deg6(double z_re, double z_im, double tol, const char* format,
                           char** out, int* failed) {
  return guarded([&]() -> zv_status {
    if (!out || !format) return fail(ZV_ERR_USAGE, "null argument");
    std::string f = format;
    if (f != "text" && f != "json") return fail(ZV_ERR_USAGE, "format must be text|json");
    *out = dup_string(analytic_deg6_report(Cpx(z_re, z_im), tol, f == "json", failed));
    return ZV_OK;
  });
}

zv_status zv_analytic_intro(const char* format, char** out, int* failed) {
  return guarded([&]() -> zv_status {
    if (!out || !format) return fail(ZV_ERR_USAGE, "null argument");
    std::string f = format;
    if (f != "text" && f != "json") return fail(ZV_ERR_USAGE, "format must be text|json");
    *out = dup_string(analytic_intro_report(f == "json", failed));
    return ZV_OK;
  });
}

zv_status zv_verify(const char* only, const char* cli_path, char** report,
                    int* failed) {
  return guarded([&]() -> zv_status {
    if (!report) return fail(ZV_ERR_USAGE, "null argument");
    auto criteria = run_acceptance(only ? only : "", cli_path ? cli_path : "");
    *report = dup_string(render_criteria(criteria));
    int nf = 0;
    for (const auto& c : criteria)
      if (!c.pass) ++nf;
    if (failed) *failed = nf;
    return ZV_OK;
  });
}

}  // extern "C"
