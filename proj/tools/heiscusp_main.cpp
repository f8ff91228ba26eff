#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "heiscusp/cli.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{
      "exact verification of Nil-manifold holonomies in Picard cusp groups"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify", "evaluate standard holonomies over a (k, params, d) sweep");
  int family_num = 0;
  std::string kspec, dspec;
  long p = 0, k1 = 0, k2 = 0;
  bool erratum = false, serial = false, vjson = false;
  int workers = 0;
  verify->add_option("--family", family_num, "family number 1..7")->required();
  auto* opt_k = verify->add_option("--k", kspec, "k values: 2 | 1,2,3 | 1..5");
  auto* opt_p = verify->add_option("--p", p, "quarter-twist p (1 or 3)");
  auto* opt_k1 = verify->add_option("--k1", k1, "third- or sixth-twist k1");
  auto* opt_k2 = verify->add_option("--k2", k2, "third-twist k2");
  auto* opt_d =
      verify->add_option("--d", dspec, "squarefree d values: 3 | 1,2,3 | 1..7");
  verify->add_flag("--erratum", erratum,
                   "reproduce the double half-twist correction");
  verify->add_flag("--serial", serial,
                   "run the sweep single-threaded (reference mode)");
  verify->add_option("--workers", workers,
                     "cap parallel workers (HEISCUSP_WORKERS also applies)");
  verify->add_flag("--json", vjson, "emit the report as JSON");

  auto* classify =
      app.add_subcommand("classify", "classify one holomorphic element");
  std::string element;
  long chint = 0;
  bool cjson = false;
  classify
      ->add_option("element", element,
                   "canonical text, e.g. \"(0; 2*sqrt(3); 1)\"")
      ->required();
  auto* opt_chint = classify->add_option(
      "--d", chint, "field selector when the text leaves d ambiguous");
  classify->add_flag("--json", cjson, "emit the report as JSON");

  auto* obstruct = app.add_subcommand(
      "obstruct", "allowed d and the holomorphy witness chain");
  int ofamily = 0;
  bool ojson = false;
  obstruct->add_option("--family", ofamily, "family number 1..7")->required();
  obstruct->add_flag("--json", ojson, "emit the report as JSON");

  auto* cusp = app.add_subcommand(
      "cusp", "Picard cusp descriptors and the non-arithmetic table");
  long cd = 0;
  bool nonarith = false, cujson = false;
  auto* opt_cd =
      cusp->add_option("--d", cd, "squarefree d of the Picard modular group");
  cusp->add_flag("--nonarith", nonarith,
                 "print the non-arithmetic cusp-group table");
  cusp->add_flag("--json", cujson, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  heiscusp::Report report;
  bool json = false;
  if (verify->parsed()) {
    heiscusp::VerifyOptions opt;
    opt.family = heiscusp::family_from_int(family_num);
    if (opt_k->count()) opt.ks = heiscusp::parse_long_list(kspec);
    if (opt_p->count()) opt.p = p;
    if (opt_k1->count()) opt.k1 = k1;
    if (opt_k2->count()) opt.k2 = k2;
    if (opt_d->count()) opt.ds = heiscusp::parse_long_list(dspec);
    opt.erratum = erratum;
    opt.mode =
        serial ? heiscusp::SweepMode::Serial : heiscusp::SweepMode::Parallel;
    opt.workers = workers;
    report = heiscusp::cmd_verify(opt);
    json = vjson;
  } else if (classify->parsed()) {
    report = heiscusp::cmd_classify(
        element,
        opt_chint->count() ? std::optional<long>(chint) : std::nullopt);
    json = cjson;
  } else if (obstruct->parsed()) {
    report = heiscusp::cmd_obstruct(heiscusp::family_from_int(ofamily));
    json = ojson;
  } else {
    report = heiscusp::cmd_cusp(
        opt_cd->count() ? std::optional<long>(cd) : std::nullopt, nonarith);
    json = cujson;
  }
  std::cout << (json ? heiscusp::to_json(report) : heiscusp::to_text(report));
  return heiscusp::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
