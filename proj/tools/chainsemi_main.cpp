// chainsemi: enumerate contraction semigroups on a finite chain, compute
// their (starred) Green's relation classes, and verify the structural
// claims about abundance and regularity against a brute-force oracle.
//
// Exit codes: 0 all requested work passed, 1 a verified claim failed,
// 3 a budget cap was exceeded, 4 an I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainsemi/claims.hpp"
#include "chainsemi/formats.hpp"

namespace {

using namespace chainsemi;

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
    throw Error(errc::io_error, "cannot write " + out_path);
  }
}

Family parse_family(const std::string& name) {
  const auto f = family_from_name(name);
  if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
  return *f;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

struct CommonFlags {
  std::string out_path;
  std::string cache_dir;
  int threads = 0;
  int max_enum_n = 6;
  int max_oracle_n = 4;
  int max_jstar_n = 3;

  void attach(CLI::App* cmd, bool with_budgets = true) {
    cmd->add_option("--out", out_path, "output file (default: standard output)");
    cmd->add_option("--cache-dir", cache_dir, "element cache directory");
    cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    if (with_budgets) {
      cmd->add_option("--max-enum-n", max_enum_n, "enumeration budget cap");
      cmd->add_option("--max-oracle-n", max_oracle_n, "oracle budget cap");
      cmd->add_option("--max-jstar-n", max_jstar_n, "jstar budget cap");
    }
  }

  Config to_config() const {
    Config config;
    config.max_enum_n = max_enum_n;
    config.max_oracle_n = max_oracle_n;
    config.max_jstar_n = max_jstar_n;
    config.threads = threads;
    if (!cache_dir.empty()) config.cache_dir = cache_dir;
    config.validate();
    return config;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"semigroups of partial contractions on a finite chain"};
  app.require_subcommand(1);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate a family");
  std::string enum_family;
  int enum_n = 0;
  std::string enum_format = "json";
  CommonFlags enum_flags;
  enum_cmd->add_option("--family", enum_family, "p|cp|ocp|orcp|ct|oct")->required();
  enum_cmd->add_option("--n", enum_n, "chain size")->required();
  enum_cmd->add_option("--format", enum_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  enum_flags.attach(enum_cmd);

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "relation classes of a family");
  std::string cls_family, cls_relation;
  int cls_n = 0;
  std::string cls_method = "characterization";
  std::string cls_format = "json";
  CommonFlags cls_flags;
  classes_cmd->add_option("--family", cls_family, "p|cp|ocp|orcp|ct|oct")->required();
  classes_cmd->add_option("--n", cls_n, "chain size")->required();
  classes_cmd
      ->add_option("--relation", cls_relation, "l|r|h|d|lstar|rstar|hstar|dstar|jstar")
      ->required();
  classes_cmd->add_option("--method", cls_method, "oracle|characterization")
      ->check(CLI::IsMember({"oracle", "characterization"}));
  classes_cmd->add_option("--format", cls_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cls_flags.attach(classes_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the claim registry");
  std::string verify_claims = "all";
  std::string verify_families = "cp,ocp,orcp";
  int verify_n = 0;
  int verify_n_min = 1, verify_n_max = 4;
  std::string verify_method = "characterization";
  CommonFlags verify_flags;
  verify_cmd->add_option("--claims", verify_claims, "all or a comma list of claim ids");
  verify_cmd->add_option("--family", verify_families, "comma list of families");
  verify_cmd->add_option("--n", verify_n, "single chain size (overrides the range)");
  verify_cmd->add_option("--n-min", verify_n_min, "range start");
  verify_cmd->add_option("--n-max", verify_n_max, "range end");
  verify_cmd->add_option("--method", verify_method, "oracle|characterization|both")
      ->check(CLI::IsMember({"oracle", "characterization", "both"}));
  verify_flags.attach(verify_cmd);

  CLI11_PARSE(app, argc, argv);

  if (enum_cmd->parsed()) {
    const Config config = enum_flags.to_config();
    EnumerationOptions opts{config.max_enum_n, config.threads, config.cache_dir};
    const ElementSet set = enumerate_family(parse_family(enum_family), enum_n, opts);
    write_output(enum_format == "json" ? dump_json(enumeration_json(set))
                                       : enumeration_csv(set),
                 enum_flags.out_path);
    return 0;
  }

  if (classes_cmd->parsed()) {
    const Config config = cls_flags.to_config();
    const auto relation = relation_from_name(cls_relation);
    if (!relation) {
      throw CLI::ValidationError("--relation", "unknown relation '" + cls_relation + "'");
    }
    Workspace ws(config);
    const ElementSet& set = ws.elements(parse_family(cls_family), cls_n);
    RelationClasses classes = [&] {
      switch (*relation) {
        case Relation::L:
        case Relation::R:
        case Relation::H:
        case Relation::D:
          return classic_classes(set, *relation);
        case Relation::Jstar:
          return jstar_classes(set, StarOptions{config.max_oracle_n,
                                                config.max_jstar_n, config.threads});
        default:
          return ws.star(set.family, set.n, *relation,
                         cls_method == "oracle" ? Method::oracle
                                                : Method::characterization);
      }
    }();
    write_output(cls_format == "json" ? dump_json(classes_json(set, classes))
                                      : classes_csv(set, classes),
                 cls_flags.out_path);
    return 0;
  }

  // verify
  const Config config = verify_flags.to_config();
  ClaimRequest request;
  if (verify_claims != "all") request.claim_ids = split_csv(verify_claims);
  for (const std::string& name : split_csv(verify_families)) {
    request.families.push_back(parse_family(name));
  }
  if (verify_n > 0) {
    request.n_min = request.n_max = verify_n;
  } else {
    request.n_min = verify_n_min;
    request.n_max = verify_n_max;
  }
  request.method = verify_method == "oracle" ? Method::oracle : Method::characterization;
  request.compare_methods = verify_method == "both";

  Workspace ws(config);
  const VerificationReport report = run_claims(ws, request);
  std::cout << report_table(report);
  if (!verify_flags.out_path.empty()) {
    write_output(dump_json(report_json(report)), verify_flags.out_path);
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chainsemi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case chainsemi::errc::budget_exceeded: return 3;
      case chainsemi::errc::io_error: return 4;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
