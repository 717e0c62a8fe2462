#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"

#ifndef CLEANSR_DEFAULT_REGISTRY
#define CLEANSR_DEFAULT_REGISTRY "data/expected_mismatches.json"
#endif

namespace {

using cleansr::CleanVariant;
using cleansr::cli::ExportWhich;
using cleansr::cli::Format;

const std::map<std::string, CleanVariant> kVariants = {
    {"cl", CleanVariant::Cl}, {"cl1", CleanVariant::Cl1}, {"cl2", CleanVariant::Cl2}};
const std::map<std::string, CleanVariant> kSrgVariants = {{"cl", CleanVariant::Cl}, {"cl2", CleanVariant::Cl2}};
const std::map<std::string, Format> kGraphFormats = {
    {"text", Format::Text}, {"dot", Format::Dot}, {"json", Format::Json}};
const std::map<std::string, Format> kExportFormats = {{"dot", Format::Dot}, {"json", Format::Json}};
const std::map<std::string, ExportWhich> kExportWhich = {{"cl", ExportWhich::Cl},
                                                         {"cl1", ExportWhich::Cl1},
                                                         {"cl2", ExportWhich::Cl2},
                                                         {"cl-srg", ExportWhich::ClSrg},
                                                         {"cl2-srg", ExportWhich::Cl2Srg}};

void add_oracle_bound(CLI::App* cmd, std::size_t& bound) {
  cmd->add_option("--oracle-bound", bound, "largest graph handed to the brute-force sdim oracle")
      ->envname("CLEANSR_ORACLE_BOUND")
      ->check(CLI::Range(std::size_t{4}, std::size_t{1} << 20))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clean graphs of finite commutative rings: strong resolving graphs and strong metric dimension"};
  app.require_subcommand(1);

  std::string spec;
  CleanVariant variant = CleanVariant::Cl;
  Format format = Format::Text;
  std::size_t oracle_bound = 18;
  int rc = 0;

  auto* info = app.add_subcommand("ring-info", "print the idempotent and unit inventory of a ring");
  info->add_option("spec", spec, "ring spec, e.g. \"Z2 x GF(4)\"")->required();
  info->callback([&] { rc = cleansr::cli::cmd_ring_info(spec, std::cout, std::cerr); });

  auto* graph = app.add_subcommand("graph", "describe Cl(R), Cl1(R) or Cl2(R)");
  graph->add_option("spec", spec, "ring spec")->required();
  graph->add_option("--variant", variant, "cl, cl1 or cl2")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  graph->add_option("--format", format, "text, dot or json")
      ->transform(CLI::CheckedTransformer(kGraphFormats, CLI::ignore_case));
  graph->callback([&] { rc = cleansr::cli::cmd_graph(spec, variant, format, std::cout, std::cerr); });

  auto* srg = app.add_subcommand("srg", "compute the strong resolving graph of Cl(R) or Cl2(R)");
  srg->add_option("spec", spec, "ring spec")->required();
  srg->add_option("--variant", variant, "cl or cl2")
      ->transform(CLI::CheckedTransformer(kSrgVariants, CLI::ignore_case));
  srg->add_option("--format", format, "text, dot or json")
      ->transform(CLI::CheckedTransformer(kGraphFormats, CLI::ignore_case));
  srg->callback([&] { rc = cleansr::cli::cmd_srg(spec, variant, format, std::cout, std::cerr); });

  auto* sdim = app.add_subcommand("sdim", "strong metric dimension of Cl(R) or Cl2(R)");
  sdim->add_option("spec", spec, "ring spec")->required();
  sdim->add_option("--variant", variant, "cl or cl2")
      ->transform(CLI::CheckedTransformer(kSrgVariants, CLI::ignore_case));
  add_oracle_bound(sdim, oracle_bound);
  sdim->callback([&] { rc = cleansr::cli::cmd_sdim(spec, variant, oracle_bound, std::cout, std::cerr); });

  cleansr::cli::VerifyConfig vcfg;
  vcfg.registry_path = CLEANSR_DEFAULT_REGISTRY;
  auto* verify = app.add_subcommand("verify", "check every closed-form claim against computation");
  verify->add_option("--suite", vcfg.suite, "table1, products-small or all (default all)")
      ->check(CLI::IsMember({"table1", "products-small", "all"}));
  verify->add_option("--ring", vcfg.rings, "additional ring spec (repeatable)");
  verify->add_option("--jobs", vcfg.jobs, "worker threads (0 = hardware concurrency)");
  verify->add_option("--out-dir", vcfg.out_dir, "directory for report.json and report.csv")->capture_default_str();
  auto* reg = verify->add_option("--registry", vcfg.registry_path, "expected-mismatch registry (JSON)")
                  ->capture_default_str();
  add_oracle_bound(verify, vcfg.oracle_bound);
  verify->callback([&] {
    vcfg.registry_required = reg->count() > 0;
    rc = cleansr::cli::cmd_verify(vcfg, std::cout, std::cerr);
  });

  ExportWhich which = ExportWhich::Cl;
  Format export_format = Format::Dot;
  std::string output;
  auto* exp = app.add_subcommand("export", "write a graph as DOT or JSON");
  exp->add_option("spec", spec, "ring spec")->required();
  exp->add_option("--which", which, "cl, cl1, cl2, cl-srg or cl2-srg")
      ->transform(CLI::CheckedTransformer(kExportWhich, CLI::ignore_case));
  exp->add_option("--format", export_format, "dot or json")
      ->transform(CLI::CheckedTransformer(kExportFormats, CLI::ignore_case));
  exp->add_option("-o,--output", output, "output file (default stdout)");
  exp->callback([&] {
    if (output.empty()) {
      rc = cleansr::cli::cmd_export(spec, which, export_format, std::cout, std::cerr);
      return;
    }
    std::ofstream file(output);
    if (!file) {
      std::cerr << "error: cannot open " << output << '\n';
      rc = cleansr::cli::kError;
      return;
    }
    rc = cleansr::cli::cmd_export(spec, which, export_format, file, std::cerr);
  });

  auto* cat = app.add_subcommand("catalog", "list the built-in local rings and the product battery");
  cat->callback([&] { rc = cleansr::cli::cmd_catalog(std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cleansr::cli::kError;
  }
  return rc;
}
