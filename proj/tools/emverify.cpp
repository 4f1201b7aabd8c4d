// emverify: runs the verification suites and prints a report.
//
//   emverify sym --n-max 12 --primes 2,3
//   emverify lie --families A,C --rank-max 3 --q-list 2,3,4 --format json
//   emverify all --export report.json
//
// Exit status 0 iff no record mismatches and no invariant was violated.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emverify/errors.hpp"
#include "emverify/suites.hpp"

namespace {

std::vector<emverify::LieFamily> parse_families(const std::string& text) {
  std::vector<emverify::LieFamily> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(emverify::parse_lie_family(item));
  if (out.empty()) throw std::invalid_argument("empty family list");
  return out;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  auto out = emverify::parse_int_list(text);
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal positive heights of blocks and defect groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string export_path;
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--export", export_path, "also write the report to this file");

  int n_max = 20;
  std::string primes = "2,3,5";
  auto* sym = app.add_subcommand("sym", "symmetric group blocks against Sylow subgroups of S_pw");
  sym->add_option("--n-max", n_max)->check(CLI::Range(1, 200))->capture_default_str();
  sym->add_option("--primes", primes)->capture_default_str();

  auto* alt = app.add_subcommand("alt", "alternating group blocks");
  alt->add_option("--n-max", n_max)->check(CLI::Range(2, 200))->capture_default_str();
  alt->add_option("--primes", primes)->capture_default_str();

  std::int64_t bound = emverify::kDefaultOracleBound;
  std::string oracle_primes = "2";
  auto* oracle = app.add_subcommand("sylow-oracle", "wreath recursion against the generic engine");
  oracle->add_option("--bound", bound, "largest Sylow order to build")->check(CLI::Range(2, 1 << 16))->capture_default_str();
  oracle->add_option("--primes", oracle_primes)->capture_default_str();

  std::string families = "A,2A,B,C,D,2D,3D4,G2";
  int rank_max = 4;
  std::string q_list = "2,3,4,5,7,8,9";
  auto* lie = app.add_subcommand("lie", "unipotent heights and Sylow engine against m(G,p)");
  lie->add_option("--families", families)->capture_default_str();
  lie->add_option("--rank-max", rank_max)->check(CLI::Range(2, 12))->capture_default_str();
  lie->add_option("--q-list", q_list)->capture_default_str();
  lie->add_option("--bound", bound, "largest Sylow order to build")->check(CLI::Range(2, 1 << 16))->capture_default_str();

  std::string p_list = "3,5,7,11";
  std::int64_t q_max = 50;
  int i_max = 2;
  auto* lemma42 = app.add_subcommand("lemma42", "p-adic valuations of cyclotomic values");
  lemma42->add_option("--p-list", p_list)->capture_default_str();
  lemma42->add_option("--q-max", q_max)->check(CLI::Range(2, 100000))->capture_default_str();
  lemma42->add_option("--i-max", i_max)->check(CLI::Range(1, 6))->capture_default_str();

  std::string y_list = "3,5";
  auto* lemma33 = app.add_subcommand("lemma33", "character degrees of the unitriangular group Y");
  lemma33->add_option("--q", y_list)->capture_default_str();

  auto* all = app.add_subcommand("all", "every suite at its default settings");

  CLI11_PARSE(app, argc, argv);

  emverify::Report report;
  try {
    if (sym->parsed()) report = emverify::run_sym(n_max, parse_list(primes));
    if (alt->parsed()) report = emverify::run_alt(n_max, parse_list(primes));
    if (oracle->parsed()) report = emverify::run_sylow_oracle(bound, parse_list(oracle_primes));
    if (lie->parsed()) report = emverify::run_lie(parse_families(families), rank_max, parse_list(q_list), bound);
    if (lemma42->parsed()) report = emverify::run_lemma42(parse_list(p_list), q_max, i_max);
    if (lemma33->parsed()) report = emverify::run_lemma33(parse_list(y_list), bound);
    if (all->parsed()) report = emverify::run_default_suite();
  } catch (const std::exception& e) {
    std::cerr << "emverify: " << e.what() << '\n';
    return 2;
  }
  report.sort();

  const auto fmt = emverify::parse_format(format);
  emverify::write_report(std::cout, report, fmt);
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) {
      std::cerr << "emverify: cannot write " << export_path << '\n';
      return 2;
    }
    emverify::write_report(out, report, fmt);
  }
  return report.ok() ? 0 : 1;
}
