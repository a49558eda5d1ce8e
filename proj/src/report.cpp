#include "firmfrob/report.hpp"

namespace firmfrob {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::WindowVerified:
      return "window-verified";
    case Verdict::Refused:
      return "refused";
  }
  return "?";
}

CheckReport pass_report(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  r.verdict = Verdict::Pass;
  return r;
}

CheckReport fail_report(std::string name, Witness w) {
  CheckReport r;
  r.name = std::move(name);
  r.verdict = Verdict::Fail;
  r.witness = std::move(w);
  return r;
}

CheckReport refused_report(std::string name, std::string reason) {
  CheckReport r;
  r.name = std::move(name);
  r.verdict = Verdict::Refused;
  Witness w;
  w.detail = std::move(reason);
  r.witness = std::move(w);
  return r;
}

CheckReport timed(CheckReport r, const Stopwatch& sw) {
  r.seconds = sw.seconds();
  return r;
}

}  // namespace firmfrob
