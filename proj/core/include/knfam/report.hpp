#ifndef KNFAM_REPORT_HPP
#define KNFAM_REPORT_HPP

#include <string>

namespace knfam {

/* Outcome of a verification sweep.  A failed check records the first
   counterexample; `checked` counts the identities that were evaluated. */
struct Report {
  bool pass = true;
  long long checked = 0;
  std::string witness; // first counterexample, empty when pass
  std::string detail;  // human-readable summary of what was verified

  void fail(const std::string &w) {
    if (pass) {
      pass = false;
      witness = w;
    }
  }
  /* Merge a sub-report, keeping the earliest witness. */
  void absorb(const Report &r) {
    checked += r.checked;
    if (!r.pass && pass) {
      pass = false;
      witness = r.witness;
    }
  }
};

} // namespace knfam

#endif
