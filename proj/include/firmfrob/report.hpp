#ifndef FIRMFROB_REPORT_HPP
#define FIRMFROB_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firmfrob/linalg.hpp"

namespace firmfrob {

enum class Verdict { Pass, Fail, WindowVerified, Refused };

std::string to_string(Verdict v);

/// Where a check failed: the offending basis tuple plus the two sides of the
/// violated identity (when meaningful) and a short explanation.
struct Witness {
  std::vector<int> indices;
  std::optional<Vec> expected;
  std::optional<Vec> actual;
  std::string detail;
};

/// Structured pass/fail record; a Fail always carries a witness.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::string note;  // certificate qualifiers, e.g. the verified subset bound
  double seconds = 0.0;
  // provenance, filled by the shell when the check is file-driven
  std::string input_hash;
  std::uint64_t seed = 0;
  int window = -1;  // -1: not window-restricted

  bool passed() const { return verdict == Verdict::Pass || verdict == Verdict::WindowVerified; }
};

CheckReport pass_report(std::string name);
CheckReport fail_report(std::string name, Witness w);
CheckReport refused_report(std::string name, std::string reason);

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

/// Stamps the elapsed time and returns the report (convenience for the
/// single-exit pattern used by the check functions).
CheckReport timed(CheckReport r, const Stopwatch& sw);

}  // namespace firmfrob

#endif
