#pragma once

// Text and JSON renderings of enumerations, border listings and analytic
// reports, shared by the C interface and the command-line tool.

#include <string>
#include <vector>

#include "analytic.hpp"
#include "cactus.hpp"

namespace zolotarev {

std::string enumeration_text(const std::vector<CactusClass>& classes);
std::string enumeration_json(const std::vector<CactusClass>& classes);
std::string class_json(const CactusClass& c);

std::string borders_text(const std::vector<CactusClass>& classes);
std::string borders_json(const std::vector<CactusClass>& classes);

std::string analytic_deg5_report(Cpx b, double tol, bool as_json, int* failed_checks);
std::string analytic_deg6_report(Cpx z, double tol, bool as_json, int* failed_checks);
std::string analytic_intro_report(bool as_json, int* failed_checks);

}  // namespace zolotarev
