// Runs every verification criterion once with the default profile and
// prints one PASS/FAIL line each. Measured values that later runs must
// reproduce are pinned below.

#include <fmt/format.h>

#include <iostream>

#include "dehnlab/paperlab.hpp"

using namespace dehnlab;

namespace {
  struct Fixture {
    int          criterion;
    char const*  name;
    std::int64_t value;
  };

  Fixture const fixtures[] = {
      {1, "area_m1", 1},
      {1, "area_m2", 4},
      {1, "area_m3", 9},
      {2, "certificates_good", 100},
      {4, "max_piece_surface2", 1},
      {6, "words", 1457},
      {9, "h1_over_y", 5},
      {9, "h1_over_y_plus", 5},
      {10, "members", 33},
      {10, "required_radius", 13},
      {11, "exponent", 6},
      {12, "h1", 5},
  };
}  // namespace

int main() {
  PaperRegistry const reg;
  SuiteProfile const  profile;
  int                 failed = 0;
  for (int id = 1; id <= criterion_count; ++id) {
    ReportRow   row  = run_criterion(reg, id, profile);
    bool        pass = row.status == "PASS";
    std::string note = row.status == "INCONCLUSIVE" ? " [inconclusive]" : "";
    for (auto const& f : fixtures) {
      if (f.criterion != id) {
        continue;
      }
      auto it = row.values.find(f.name);
      if (it == row.values.end() || it->second != f.value) {
        pass = false;
        note += fmt::format(" [fixture {} expected {}]", f.name, f.value);
      }
    }
    failed += !pass;
    std::cout << fmt::format("{} criterion {:2}: {} | {} ({:.1f} s){}\n",
                             pass ? "PASS" : "FAIL", id, row.description,
                             row.measured, row.seconds, note)
              << std::flush;
  }
  std::cout << fmt::format("{} of {} criteria passed\n",
                           criterion_count - failed, criterion_count);
  return failed == 0 ? 0 : 1;
}
