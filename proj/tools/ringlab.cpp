// ringlab command-line front end.
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringlab/report.hpp"
#include "ringlab/verify.hpp"

namespace {

using namespace ringlab;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

bool looks_like_file(const std::string& s) { return s.ends_with(".json"); }

// A preset, a ring file, or a Dorroh description {"base","bimodule","left_action","right_action"}.
FiniteRing build_input(const std::string& input) {
  if (!looks_like_file(input)) return build_preset(input);
  Json j = read_json_file(input);
  if (j.is_object() && j.contains("base")) return build_dorroh(dorroh_data_from_json(j));
  return ring_from_json(j);
}

std::vector<CatalogEntry> catalog_for(const std::string& which) {
  return which == "default" ? default_catalog() : load_catalog(which);
}

int cmd_build(const std::string& input, const std::string& out) {
  FiniteRing R = build_input(input);
  save_ring(R, out);
  std::cout << R.name() << " order " << R.order() << "\n";
  return kHolds;
}

int cmd_report(const std::string& file, const std::string& format) {
  RingAnalysis A(load_ring(file));
  if (format == "text")
    std::cout << ring_report_text(A);
  else
    std::cout << ring_report(A).dump(2) << "\n";
  return kHolds;
}

Json spectral_json(const RingAnalysis& A, ElementId a, PropertyName p) {
  Json ps = Json::array();
  if (auto flavor = detail::spectral_flavor(p))
    for (auto e : spectral_candidates(A, a, *flavor)) ps.push_back(e.value);
  return ps;
}

int cmd_check(const std::string& file, const std::string& property, const std::optional<std::uint32_t>& element) {
  const PropertyName p = property_from_string(property);
  RingAnalysis A(load_ring(file));
  const FiniteRing& R = A.ring();
  Json out;
  out["ring"] = R.name();
  out["property"] = property;
  if (element) {
    if (*element >= R.order()) throw UsageError("element " + std::to_string(*element) + " out of range");
    const ElementId a(*element);
    auto cert = element_property(A, a, p);
    out["element"] = a.value;
    out["holds"] = cert.has_value();
    if (cert) {
      out["certificate"] = to_json(*cert);
    } else if (detail::spectral_flavor(p)) {
      out["spectral_candidates"] = spectral_json(A, a, p);
    }
    std::cout << out.dump(2) << "\n";
    return cert ? kHolds : kFails;
  }
  auto r = ring_property(A, p);
  out["holds"] = r.holds;
  if (r.holds) {
    if (is_element_level(p)) {
      Json certs = Json::array();
      for (auto a : R.elements()) certs.push_back(to_json(*element_property(A, a, p)));
      out["certificates"] = certs;
    }
  } else {
    out["witness"] = r.witness ? Json(r.witness->value) : Json(nullptr);
    if (r.witness && detail::spectral_flavor(p)) out["spectral_candidates"] = spectral_json(A, *r.witness, p);
    if (!r.detail.empty()) out["detail"] = r.detail;
  }
  std::cout << out.dump(2) << "\n";
  return r.holds ? kHolds : kFails;
}

int cmd_delta(const std::string& file) {
  FiniteRing R = load_ring(file);
  RightIdealLattice L(R);
  DeltaComputation d = delta_routes(L);
  Json out;
  out["ring"] = R.name();
  out["delta"] = to_json(d);
  std::cout << out.dump(2) << "\n";
  return d.agree ? kHolds : kFails;
}

int cmd_verify(const std::string& catalog, const std::string& format, std::size_t max_product) {
  std::vector<CatalogRing> rings;
  try {
    rings = analyze_catalog(catalog_for(catalog));
  } catch (const RingError& e) {
    std::cerr << "catalog load failed: " << e.what() << "\n";
    return kUsage;
  }
  SuiteOptions opt;
  opt.max_product_order = max_product;
  auto results = theorem_suite(rings, opt);
  if (format == "json")
    std::cout << to_json(results).dump(2) << "\n";
  else
    std::cout << theorem_table(results);
  return suite_passes(results) ? kHolds : kFails;
}

int cmd_search(const std::vector<std::string>& hyps, const std::string& concl, const std::string& catalog) {
  std::vector<PropertyName> hp;
  for (const auto& h : hyps) hp.push_back(property_from_string(h));
  const PropertyName cp = property_from_string(concl);
  std::vector<CatalogRing> rings;
  try {
    rings = analyze_catalog(catalog_for(catalog));
  } catch (const RingError& e) {
    std::cerr << "catalog load failed: " << e.what() << "\n";
    return kUsage;
  }
  auto hit = search_counterexample(hp, cp, rings);
  Json out;
  out["hypotheses"] = hyps;
  out["conclusion"] = concl;
  if (hit) {
    out["counterexample"] = {{"ring", hit->ring}, {"element", hit->element ? Json(hit->element->value) : Json(nullptr)}};
  } else {
    out["counterexample"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return hit ? kFails : kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: finite ring analysis"};
  app.require_subcommand(1);

  std::string build_in, build_out;
  auto* build = app.add_subcommand("build", "build a ring from a preset, ring file or Dorroh description");
  build->add_option("input", build_in, "preset (zmod:4, tri:2:zmod:2, ...) or JSON file")->required();
  build->add_option("-o,--output", build_out, "output ring file")->required();

  std::string report_file, report_format = "json";
  auto* report = app.add_subcommand("report", "structural report for a ring file");
  report->add_option("ring", report_file)->required();
  report->add_option("--format", report_format)->check(CLI::IsMember({"json", "text"}));

  std::string check_file, check_prop;
  std::optional<std::uint32_t> check_elem;
  auto* check = app.add_subcommand("check", "decide a property for a ring or one element");
  check->add_option("ring", check_file)->required();
  check->add_option("property", check_prop)->required();
  check->add_option("element", check_elem);

  std::string delta_file;
  auto* delta_cmd = app.add_subcommand("delta", "print the five delta(R) computations");
  delta_cmd->add_option("ring", delta_file)->required();

  std::string verify_catalog = "default", verify_format = "text";
  std::size_t max_product = SuiteOptions{}.max_product_order;
  auto* verify = app.add_subcommand("verify-paper", "check the theorem suite over a catalog");
  verify->add_option("--catalog", verify_catalog, "default, a directory of ring files, or a JSON list");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--max-product-order", max_product);

  std::vector<std::string> hyps;
  std::string concl, search_catalog = "default";
  auto* search = app.add_subcommand("search", "find a catalog ring with all hypotheses but not the conclusion");
  search->add_option("--hyp", hyps);
  search->add_option("--concl", concl)->required();
  search->add_option("--catalog", search_catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(build_in, build_out);
    if (*report) return cmd_report(report_file, report_format);
    if (*check) return cmd_check(check_file, check_prop, check_elem);
    if (*delta_cmd) return cmd_delta(delta_file);
    if (*verify) return cmd_verify(verify_catalog, verify_format, max_product);
    if (*search) return cmd_search(hyps, concl, search_catalog);
  } catch (const ComputationFault& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
