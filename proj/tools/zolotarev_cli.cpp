// Command-line front end.  Talks to the library exclusively through the C
// interface in zolotarev.h; exit code 0 on success, 1 on verification or
// consistency failures, 2 on usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zolotarev.h"

namespace {

struct Options {
  int degree = 0;
  std::string passport;
  std::string group = "any";
  int min_aut = 1;
  std::string format;
  std::string output;
  double tol = 1e-6;
  std::string only;
  std::string b_text, z_text;
};

int exit_code_for(zv_status s) { return s == ZV_ERR_USAGE ? 2 : 1; }

int report_error(zv_status s) {
  std::cerr << "error (" << zv_status_name(s) << "): " << zv_last_error() << "\n";
  return exit_code_for(s);
}

bool parse_passport(const std::string& text, int* k, int* l, int* m) {
  return std::sscanf(text.c_str(), "%d,%d,%d", k, l, m) == 3;
}

// Complex literals of the form "a+bi" / "a-bi"; bare "a" or "bi" also accepted.
bool parse_complex(const std::string& text, double* re, double* im) {
  *re = 0;
  *im = 0;
  if (text.empty()) return false;
  if (text.back() == 'i') {
    std::string body = text.substr(0, text.size() - 1);
    // split off a leading real part if there is a sign separating two numbers
    size_t split = std::string::npos;
    for (size_t i = 1; i < body.size(); ++i)
      if ((body[i] == '+' || body[i] == '-') &&
          body[i - 1] != 'e' && body[i - 1] != 'E')
        split = i;
    if (split == std::string::npos) {
      if (body.empty() || body == "+" || body == "-") body += "1";
      return std::sscanf(body.c_str(), "%lf", im) == 1;
    }
    std::string re_part = body.substr(0, split), im_part = body.substr(split);
    if (im_part == "+" || im_part == "-") im_part += "1";
    return std::sscanf(re_part.c_str(), "%lf", re) == 1 &&
           std::sscanf(im_part.c_str(), "%lf", im) == 1;
  }
  return std::sscanf(text.c_str(), "%lf", re) == 1;
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << output << "\n";
    return 1;
  }
  f << text;
  return 0;
}

int with_enumeration(const Options& opt, int (*body)(zv_enumeration*, const Options&)) {
  int k = 0, l = 0, m = 0;
  if (!parse_passport(opt.passport, &k, &l, &m)) {
    std::cerr << "error (usage): --passport expects k,l,m\n";
    return 2;
  }
  zv_enumeration* e = nullptr;
  zv_status s = zv_enumerate(opt.degree, k, l, m, opt.group.c_str(), opt.min_aut, &e);
  if (s != ZV_OK) return report_error(s);
  int rc = body(e, opt);
  zv_enumeration_free(e);
  return rc;
}

int cmd_enumerate(zv_enumeration* e, const Options& opt) {
  char* text = nullptr;
  zv_status s = zv_enumeration_render(e, opt.format.empty() ? "text" : opt.format.c_str(),
                                      &text);
  if (s != ZV_OK) return report_error(s);
  int rc = emit(text, opt.output);
  zv_string_free(text);
  return rc;
}

int cmd_borders(zv_enumeration* e, const Options& opt) {
  char* text = nullptr;
  zv_status s = zv_borders_render(e, opt.format.empty() ? "text" : opt.format.c_str(),
                                  &text);
  if (s != ZV_OK) return report_error(s);
  int rc = emit(text, opt.output);
  zv_string_free(text);
  return rc;
}

int cmd_atlas(zv_enumeration* e, const Options& opt) {
  zv_atlas* a = nullptr;
  zv_status s = zv_atlas_build(e, &a);
  if (s != ZV_OK) return report_error(s);

  int rc = 0;
  std::string fmt = opt.format.empty() ? "summary" : opt.format;
  char* text = nullptr;
  s = zv_atlas_render(a, fmt.c_str(), &text);
  if (s != ZV_OK) {
    rc = report_error(s);
  } else {
    rc = emit(text, opt.output);
    zv_string_free(text);
    if (fmt != "summary" && !opt.output.empty()) {
      // keep the per-component summary on stdout when the document goes to a file
      char* sum = nullptr;
      if (zv_atlas_render(a, "summary", &sum) == ZV_OK) {
        std::cout << sum;
        zv_string_free(sum);
      }
    }
  }
  zv_atlas_free(a);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zolotarev cacti: enumeration, moduli maps and analytic checks"};
  app.require_subcommand(1);

  Options opt;

  auto add_family_flags = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--degree", opt.degree, "polynomial degree")->required();
    sub->add_option("--passport", opt.passport, "k,l,m counts for star,circ,bullet")
        ->required();
    sub->add_option("--group", opt.group, "any|symmetric|alternating|psl27");
    sub->add_option("--min-aut", opt.min_aut, "keep classes with aut order >= N");
    if (with_format) sub->add_option("--format", opt.format, "output format");
    sub->add_option("--output", opt.output, "write to file instead of stdout");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list cactus classes");
  add_family_flags(enumerate, true);

  CLI::App* borders = app.add_subcommand("borders", "list walls and contractions per class");
  add_family_flags(borders, true);

  CLI::App* atlas = app.add_subcommand("atlas", "build the combinatorial moduli map");
  add_family_flags(atlas, true);

  CLI::App* analytic = app.add_subcommand("analytic", "numeric checks of the polynomial families");
  std::string which;
  analytic->add_option("family", which, "deg5|deg6|intro")->required();
  analytic->add_option("--b", opt.b_text, "complex parameter for deg5, e.g. 0.3+0.2i");
  analytic->add_option("--z", opt.z_text, "complex parameter for deg6");
  analytic->add_option("--tol", opt.tol, "tolerance for distinct-value clustering");
  analytic->add_option("--format", opt.format, "text|json");
  analytic->add_option("--output", opt.output, "write to file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run the full reproduction suite");
  verify->add_option("--only", opt.only,
                     "comma list of enumeration,borders,atlas,transform,analytic,determinism");
  verify->add_option("--output", opt.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (enumerate->parsed()) return with_enumeration(opt, cmd_enumerate);
  if (borders->parsed()) return with_enumeration(opt, cmd_borders);
  if (atlas->parsed()) return with_enumeration(opt, cmd_atlas);

  if (analytic->parsed()) {
    const char* fmt = opt.format.empty() ? "text" : opt.format.c_str();
    char* text = nullptr;
    int failed = 0;
    zv_status s = ZV_OK;
    if (which == "deg5") {
      double re, im;
      if (!parse_complex(opt.b_text.empty() ? "0.3+0.2i" : opt.b_text, &re, &im)) {
        std::cerr << "error (usage): --b expects a complex literal like 0.3+0.2i\n";
        return 2;
      }
      s = zv_analytic_deg5(re, im, opt.tol, fmt, &text, &failed);
    } else if (which == "deg6") {
      double re, im;
      if (!parse_complex(opt.z_text.empty() ? "0.9+0.4i" : opt.z_text, &re, &im)) {
        std::cerr << "error (usage): --z expects a complex literal like 0.9+0.4i\n";
        return 2;
      }
      s = zv_analytic_deg6(re, im, opt.tol, fmt, &text, &failed);
    } else if (which == "intro") {
      s = zv_analytic_intro(fmt, &text, &failed);
    } else {
      std::cerr << "error (usage): analytic family must be deg5|deg6|intro\n";
      return 2;
    }
    if (s != ZV_OK) return report_error(s);
    int rc = emit(text, opt.output);
    zv_string_free(text);
    return rc != 0 ? rc : (failed == 0 ? 0 : 1);
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int failed = 0;
    zv_status s = zv_verify(opt.only.empty() ? nullptr : opt.only.c_str(), argv[0],
                            &report, &failed);
    if (s != ZV_OK) return report_error(s);
    int rc = emit(report, opt.output);
    zv_string_free(report);
    return rc != 0 ? rc : (failed == 0 ? 0 : 1);
  }
  return 2;
}
