// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// its suite checked at least one case, found no violation and finished
// within its time limit.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mdl/properties.hpp"

namespace {

struct Criterion {
  int number;
  double limit_seconds;
  std::function<mdl::PropertyReport()> run;
};

}  // namespace

int main() {
  const mdl::PropertyScale s = mdl::PropertyScale::full();
  const std::vector<Criterion> criteria = {
      {1, 1, [] { return mdl::check_table_totality(); }},
      {2, 60, [&] { return mdl::check_downward_closure(s); }},
      {3, 60, [&] { return mdl::check_empty_team(s); }},
      {4, 120, [&] { return mdl::check_cor_expansion(s); }},
      {5, 300, [&] { return mdl::check_singleton_translation(s); }},
      {6, 120, [&] { return mdl::check_ladner(s); }},
      {7, 600, [&] { return mdl::check_engine_agreement(s); }},
      {8, 120, [&] { return mdl::check_modal_decomposition(s); }},
      {9, 900, [&] { return mdl::check_reductions(s); }},
      {10, 10, [] { return mdl::check_binary_tree_frame(); }},
      {11, 300, [&] { return mdl::check_collapses(s); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    mdl::PropertyReport r = c.run();
    bool in_time = r.seconds < c.limit_seconds;
    bool pass = r.ok() && in_time;
    failures += !pass;
    std::printf("%s %2d %s: %llu cases, %llu violations, %llu inconclusive, %.2f s (limit %.0f s)\n",
                pass ? "PASS" : "FAIL", c.number, r.name.c_str(),
                static_cast<unsigned long long>(r.cases),
                static_cast<unsigned long long>(r.violations),
                static_cast<unsigned long long>(r.inconclusive), r.seconds, c.limit_seconds);
    if (!r.note.empty()) std::printf("        %s\n", r.note.c_str());
    if (r.violations) std::printf("        first violation: %s\n", r.first_violation.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
