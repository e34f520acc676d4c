#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schur/checks.hpp"
#include "schur/io.hpp"

namespace {

using namespace schur;

void require_prime(std::uint32_t p) {
  GfField probe(p);  // throws std::invalid_argument on a non-prime modulus
  (void)probe;
}

int emit_report(const Report& rep, const std::string& format) {
  if (format == "pretty") {
    std::cout << "check: " << rep.check << "\n";
    for (const auto& [key, value] : rep.parameters) std::cout << key << ": " << value << "\n";
    std::cout << "cells tested: " << rep.cells_tested << "\n";
    std::cout << "mismatches: " << rep.mismatches.size() << "\n";
    for (const std::string& line : rep.mismatches) std::cout << "  " << line << "\n";
  } else {
    std::cout << to_json(rep).dump(2) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decomposition matrices and mirror checks for classical Schur algebras"};
  app.require_subcommand(1);

  int n = 3, r = 5, m = 0, rmax = 6, jobs = 1;
  std::uint32_t p = 2;
  long long samples = 100;
  std::uint64_t seed = 0;
  std::string format = "json", cache_dir;
  std::vector<int> lambda, index;

  auto add_common = [&](CLI::App* cmd, bool with_r, bool with_m, bool with_p) {
    cmd->add_option("-n,--n", n, "letters (matrix size)")->required()->check(CLI::Range(1, 5));
    if (with_r) cmd->add_option("-r,--r", r, "degree")->required()->check(CLI::Range(0, 12));
    if (with_m) cmd->add_option("-m,--m", m, "box width")->required()->check(CLI::Range(0, 12));
    if (with_p) cmd->add_option("-p,--p", p, "prime modulus (0 = rationals where allowed)")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));
  };

  CLI::App* decomp = app.add_subcommand("decomp", "Print the decomposition matrix D_p(n, r)");
  decomp->add_option("-p,--p", p, "prime modulus")->required();
  decomp->add_option("-n,--n", n, "letters (matrix size)")->required()->check(CLI::Range(1, 5));
  decomp->add_option("-r,--r", r, "degree")->required()->check(CLI::Range(0, 12));
  decomp->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  decomp->add_option("--cache-dir", cache_dir, "cache directory (overrides SCHUR_CACHE_DIR)");
  decomp->add_option("--jobs", jobs, "worker threads for the per-label computations")
      ->check(CLI::Range(1, 64));

  CLI::App* verify = app.add_subcommand("verify", "Run an exhaustive mirror verification");
  verify->require_subcommand(1);
  CLI::App* v_complement =
      verify->add_subcommand("complement", "decomposition numbers across the box complement");
  add_common(v_complement, true, true, true);
  CLI::App* v_hom = verify->add_subcommand("hom-iso", "hom-space transport across the mirror");
  add_common(v_hom, true, true, true);
  CLI::App* v_gram = verify->add_subcommand("gram", "structure-matrix identity at random points");
  add_common(v_gram, false, true, true);
  v_gram->add_option("--samples", samples, "random matrices per shape")->check(CLI::Range(1, 100000));
  v_gram->add_option("--seed", seed, "RNG seed");
  CLI::App* v_endo = verify->add_subcommand("endo", "endomorphism algebra transport");
  add_common(v_endo, true, true, true);
  CLI::App* v_row = verify->add_subcommand("row-removal", "first-row removal for decomposition numbers");
  add_common(v_row, true, false, true);
  CLI::App* v_col =
      verify->add_subcommand("column-removal", "first-column removal for decomposition numbers");
  add_common(v_col, true, false, true);
  CLI::App* v_blm = verify->add_subcommand("blm", "two-step degree-shift chain");
  add_common(v_blm, true, false, false);
  CLI::App* v_mirror = verify->add_subcommand("tableau-mirror", "semistandard mirror bijection");
  v_mirror->add_option("-n,--n", n, "letters")->required()->check(CLI::Range(1, 5));
  v_mirror->add_option("-m,--m", m, "box width")->required()->check(CLI::Range(0, 12));
  v_mirror->add_option("--rmax", rmax, "largest degree to sweep")->required()->check(CLI::Range(0, 12));
  v_mirror->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "pretty"}));
  CLI::App* v_pk = verify->add_subcommand("pkostka", "Young module multiplicities across the mirror");
  add_common(v_pk, true, true, true);

  CLI::App* tableaux = app.add_subcommand("tableaux", "Combinatorial helpers");
  tableaux->require_subcommand(1);
  CLI::App* t_complement = tableaux->add_subcommand("complement", "box complement of a partition");
  t_complement->add_option("--lambda", lambda, "partition parts")->required()->delimiter(',');
  t_complement->add_option("-n,--n", n, "letters")->required()->check(CLI::Range(1, 12));
  t_complement->add_option("-m,--m", m, "box width")->required()->check(CLI::Range(0, 64));
  CLI::App* t_count = tableaux->add_subcommand("count", "number of semistandard fillings");
  t_count->add_option("--lambda", lambda, "partition parts")->required()->delimiter(',');
  t_count->add_option("-n,--n", n, "letters")->required()->check(CLI::Range(1, 12));
  CLI::App* t_sign = tableaux->add_subcommand("sign", "sign of a strictly decreasing word");
  t_sign->add_option("--index", index, "strictly decreasing letters")->required()->delimiter(',');
  t_sign->add_option("-n,--n", n, "letters")->required()->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decomp->parsed()) {
      require_prime(p);
      DecompositionTable t = cached_decomposition_matrix(p, n, r, cache_dir, jobs);
      if (format == "csv")
        std::cout << to_csv(t);
      else if (format == "pretty")
        std::cout << render_pretty(t);
      else
        std::cout << to_json(t).dump(2) << "\n";
      return 0;
    }
    if (verify->parsed()) {
      if (v_complement->parsed()) {
        require_prime(p);
        return emit_report(complement_decomposition_check(n, r, m, p), format);
      }
      if (v_hom->parsed()) {
        if (p) require_prime(p);
        return emit_report(hom_transport_check(n, r, m, p), format);
      }
      if (v_gram->parsed()) {
        if (p) require_prime(p);
        return emit_report(gram_check(n, m, p, samples, seed), format);
      }
      if (v_endo->parsed()) {
        if (p) require_prime(p);
        return emit_report(endo_check(n, r, m, p), format);
      }
      if (v_row->parsed()) {
        require_prime(p);
        return emit_report(row_removal_check(n, r, p), format);
      }
      if (v_col->parsed()) {
        require_prime(p);
        return emit_report(column_removal_check(n, r, p), format);
      }
      if (v_blm->parsed()) return emit_report(blm_check(n, r), format);
      if (v_mirror->parsed()) return emit_report(tableau_mirror_check(n, m, rmax), format);
      if (v_pk->parsed()) {
        require_prime(p);
        return emit_report(pkostka_mirror_check(n, r, m, p), format);
      }
    }
    if (tableaux->parsed()) {
      if (t_complement->parsed()) {
        std::cout << complement_partition(Partition(lambda), n, m).to_string(n) << "\n";
        return 0;
      }
      if (t_count->parsed()) {
        std::cout << count_stab(conjugate(Partition(lambda)), n) << "\n";
        return 0;
      }
      if (t_sign->parsed()) {
        std::cout << sgn_multiindex(MultiIndex(index.begin(), index.end()), n) << "\n";
        return 0;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
