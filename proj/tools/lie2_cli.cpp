#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lie2/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lie2: checkers and constructions for 2-term Lie 2-algebras"};
  app.require_subcommand(1);
  lie2::cli::Options opts;
  app.add_option("--threads", opts.threads, "cap on concurrent checks")->check(CLI::PositiveNumber);
  app.add_option("--limit", opts.limit, "residuals shown per equation");

  std::string file;
  std::vector<std::string> files;
  std::optional<std::string> output, gamma;
  bool ce = false, skew = false;
  int n = 3;

  auto* check = app.add_subcommand("check", "run the checker for the document kind");
  check->add_option("file", file)->required();

  auto* ss = app.add_subcommand("ss", "skew-symmetrize an el2 document");
  ss->add_option("file", file)->required();
  ss->add_option("-o,--output", output);

  auto* coh = app.add_subcommand("cohomology", "HL3 of a lie algebra (trivial k) or representation");
  coh->add_option("files", files, "[lie_algebra] representation")->required();
  coh->add_flag("--ce", ce, "also H3, the ss map and the exact sequence");

  auto* cls = app.add_subcommand("classify", "skeletal model and class of an el2 document");
  cls->add_option("file", file)->required();
  cls->add_option("-o,--output", output, "write the equivalence");

  auto* mc = app.add_subcommand("mc", "Maurer-Cartan residual, optionally writing the twist");
  mc->add_option("file", file)->required();
  mc->add_option("gamma", gamma, "comma-separated L^1 coordinates");
  mc->add_option("-o,--output", output);

  auto* inner = app.add_subcommand("inner-sym", "symmetry Lie 2-algebra of a Maurer-Cartan element");
  inner->add_option("file", file)->required();
  inner->add_option("gamma", gamma, "comma-separated L^1 coordinates");
  inner->add_option("--n", n)->check(CLI::IsMember({2, 3}));
  inner->add_flag("--skew", skew);
  inner->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*check) return lie2::cli::check(file, opts, out, err);
  if (*ss) return lie2::cli::ss(file, output, opts, out, err);
  if (*coh) return lie2::cli::cohomology(files, ce, out, err);
  if (*cls) return lie2::cli::classify(file, output, opts, out, err);
  if (*mc) return lie2::cli::mc(file, gamma, output, out, err);
  return lie2::cli::inner_sym(file, gamma, n, skew, output, opts, out, err);
}
