#pragma once

// The reproduction verification suite: one entry per acceptance
// criterion, runnable as a whole or filtered by category.

#include <string>
#include <vector>

namespace zolotarev {

struct Criterion {
  int id = 0;
  std::string category;  // enumeration | borders | atlas | transform | analytic | determinism
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the criteria whose category is in `only` (comma-separated; empty means
// all).  `cli_path`, when nonempty, is used by the determinism criterion to
// re-invoke the command-line tool; otherwise the check compares in-process
// renders.
std::vector<Criterion> run_acceptance(const std::string& only = "",
                                      const std::string& cli_path = "");

std::string render_criteria(const std::vector<Criterion>& cs);
bool all_pass(const std::vector<Criterion>& cs);

}  // namespace zolotarev
