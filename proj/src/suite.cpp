#include "firmfrob/suite.hpp"

#include <algorithm>

namespace firmfrob {

std::vector<std::string> default_suite_names(const BundleParts& parts) {
  std::vector<std::string> names;
  if (parts.algebra) {
    names.push_back("associativity");
    names.push_back("nondegeneracy");
    names.push_back("firmness");
    if (parts.units) names.push_back("local-units");
  }
  if (parts.coalgebra) names.push_back("coalgebra");
  if (parts.algebra && parts.coalgebra) {
    names.push_back("frobenius");
    names.push_back("casimir");
    names.push_back("induced-compat");
    names.push_back("cofrobenius");
    names.push_back("roundtrip");
    names.push_back("morphisms");
  }
  return names;
}

std::vector<CheckReport> casimir_suite(const FrobeniusBundle& b, bool parallel) {
  std::vector<CheckReport> out;
  OpResult<MultiplierPair> pair = casimir_from_delta(b, parallel);
  CheckReport built = pair.report;
  built.name = "casimir";
  out.push_back(built);
  if (!pair.ok()) return out;

  Stopwatch sw;
  DeltaReconstruction rec =
      delta_from_casimir(b.algebra, *pair.value, b.coalgebra.counit);
  if (!rec.coalgebra) {
    CheckReport r = rec.report;
    r.name = "casimir-roundtrip";
    out.push_back(std::move(r));
    return out;
  }
  if (rec.coalgebra->comultiplication() != b.coalgebra.comultiplication() ||
      rec.coalgebra->counit != b.coalgebra.counit) {
    Witness w;
    w.detail = "reconstructed comultiplication differs from the original";
    out.push_back(timed(fail_report("casimir-roundtrip", std::move(w)), sw));
    return out;
  }
  OpResult<MultiplierPair> again =
      casimir_from_delta(FrobeniusBundle{b.algebra, *rec.coalgebra}, parallel);
  if (!again.ok() || again.value->lambda != pair.value->lambda ||
      again.value->rho != pair.value->rho) {
    Witness w;
    w.detail = "multiplier rebuilt from the reconstructed comultiplication differs";
    out.push_back(timed(fail_report("casimir-roundtrip", std::move(w)), sw));
    return out;
  }
  out.push_back(timed(pass_report("casimir-roundtrip"), sw));
  return out;
}

namespace {

CheckReport missing_part(const std::string& name, const std::string& what) {
  return refused_report(name, "bundle file has no " + what + " part");
}

}  // namespace

std::vector<CheckReport> run_suite(const BundleParts& parts, const std::vector<std::string>& names,
                                   const SuiteOptions& opts) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      auto d = default_suite_names(parts);
      expanded.insert(expanded.end(), d.begin(), d.end());
    } else {
      expanded.push_back(n);
    }
  }

  std::optional<FrobeniusBundle> bundle;
  if (parts.algebra && parts.coalgebra)
    bundle = make_bundle(*parts.algebra, *parts.coalgebra);

  std::vector<CheckReport> out;
  for (const auto& name : expanded) {
    if (name == "associativity") {
      out.push_back(parts.algebra ? check_associativity(*parts.algebra)
                                  : missing_part(name, "algebra"));
    } else if (name == "nondegeneracy") {
      out.push_back(parts.algebra ? check_nondegenerate(*parts.algebra)
                                  : missing_part(name, "algebra"));
    } else if (name == "firmness") {
      out.push_back(parts.algebra ? check_firm_algebra(*parts.algebra).report
                                  : missing_part(name, "algebra"));
    } else if (name == "local-units") {
      if (!parts.algebra) {
        out.push_back(missing_part(name, "algebra"));
      } else if (!parts.units) {
        out.push_back(missing_part(name, "local-unit family"));
      } else {
        LocalUnitFamily fam = *parts.units;
        fam.max_subset_size = opts.max_subset;
        out.push_back(verify_local_units(*parts.algebra, fam));
      }
    } else if (name == "coalgebra") {
      out.push_back(parts.coalgebra ? check_coalgebra(*parts.coalgebra)
                                    : missing_part(name, "coalgebra"));
    } else if (name == "frobenius") {
      out.push_back(bundle ? check_frobenius(*bundle) : missing_part(name, "coalgebra"));
    } else if (name == "casimir") {
      if (!bundle) {
        out.push_back(missing_part(name, "coalgebra"));
      } else {
        auto reps = casimir_suite(*bundle, opts.parallel);
        out.insert(out.end(), reps.begin(), reps.end());
      }
    } else if (name == "section") {
      out.push_back(bundle ? section_check(*bundle, bundle->coalgebra.comultiplication())
                           : missing_part(name, "coalgebra"));
    } else if (name == "roundtrip") {
      if (!bundle) {
        out.push_back(missing_part(name, "coalgebra"));
      } else {
        SampleOptions so;
        so.seed = opts.seed;
        so.random_count = opts.random_samples;
        so.max_dim = opts.max_sample_dim;
        CheckReport r = verify_roundtrips(*bundle, default_samples(*bundle, so));
        r.seed = opts.seed;
        out.push_back(std::move(r));
      }
    } else if (name == "morphisms") {
      if (!bundle) {
        out.push_back(missing_part(name, "coalgebra"));
      } else {
        CheckReport r = morphism_transport_suite(*bundle, opts.seed, opts.morphism_samples);
        r.seed = opts.seed;
        out.push_back(std::move(r));
      }
    } else if (name == "cofrobenius") {
      if (!bundle) {
        out.push_back(missing_part(name, "coalgebra"));
      } else {
        OpResult<CoFrobeniusMaps> maps = cofrobenius_maps(*bundle);
        out.push_back(maps.report);
        if (maps.ok()) {
          Stopwatch sw;
          if (maps.value->right_injective && maps.value->left_injective) {
            out.push_back(timed(pass_report("cofrobenius-injectivity"), sw));
          } else {
            Witness w;
            w.actual = maps.value->right_injective ? maps.value->left_kernel.front()
                                                   : maps.value->right_kernel.front();
            w.detail = maps.value->right_injective ? "theta_L has nonzero kernel"
                                                   : "theta_R has nonzero kernel";
            out.push_back(timed(fail_report("cofrobenius-injectivity", std::move(w)), sw));
          }
          out.push_back(anti_multiplicativity_check(*bundle));
        }
      }
    } else if (name == "induced-compat") {
      if (!bundle) {
        out.push_back(missing_part(name, "coalgebra"));
      } else {
        out.push_back(induced_compat_check(*bundle, regular_comodule(*bundle)));
      }
    } else {
      throw UsageError("unknown check name: " + name);
    }
  }
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed(); });
}

}  // namespace firmfrob
