#include "polyfock/decomposition.hpp"
#include "polyfock/kernels.hpp"
#include "polyfock/matrix_model.hpp"
#include "polyfock/parser.hpp"
#include "polyfock/serialize.hpp"
#include "polyfock/spectral.hpp"
#include "polyfock/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit(const pfx::json& j) { std::cout << j.dump(2) << "\n"; }

pfx::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("input: cannot open '" + path + "'");
  pfx::json j;
  try {
    in >> j;
  } catch (const pfx::json::parse_error& e) {
    throw std::invalid_argument("input: " + std::string(e.what()));
  }
  return j;
}

std::vector<unsigned> parse_uint_list(const std::string& csv, const char* what) {
  std::vector<unsigned> out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (cur.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
      out.push_back(static_cast<unsigned>(std::stoul(cur)));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else {
      throw std::invalid_argument(std::string(what) + ": not a number list");
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact poly-Fock calculator"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  pfx::SuiteParams params;
  params.seed = pfx::default_seed();
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--k", params.max_k, "largest mark k exercised");
  verify->add_option("--d", params.max_d, "largest dimension exercised");
  verify->add_option("--max-degree", params.max_degree, "largest polynomial degree sampled");
  verify->add_option("--count", params.sample_count, "random sample count");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "true-level decomposition of a function");
  std::string dec_input;
  std::optional<unsigned> dec_dims;
  decompose->add_option("--input", dec_input, "PFX-JSON function file")->required();
  decompose->add_option("--d", dec_dims, "expected dimension (validated against the file)");

  // project
  auto* project = app.add_subcommand("project", "orthogonal projection onto a true level space");
  std::string proj_input, proj_method = "kernel", proj_multilevel;
  std::optional<unsigned> proj_level;
  project->add_option("--input", proj_input, "PFX-JSON function file")->required();
  project->add_option("--level", proj_level, "level k (d = 1)");
  project->add_option("--multilevel", proj_multilevel, "comma-separated levels k1,..,kd");
  project->add_option("--method", proj_method, "kernel | gram")
      ->check(CLI::IsMember({"kernel", "gram"}));

  // membership
  auto* membership = app.add_subcommand("membership", "membership tests for a function");
  std::string mem_input, mem_m, mem_kvec;
  std::optional<unsigned> mem_k, mem_hom;
  bool mem_quasi = false;
  membership->add_option("--input", mem_input, "PFX-JSON function file")->required();
  membership->add_option("--k", mem_k, "level test via the Euler-Cartan product (d = 1)");
  membership->add_option("--homogeneous", mem_hom, "homogeneous space order k");
  membership->add_flag("--quasi", mem_quasi, "quasi-homogeneous test (needs --m and --kvec)");
  membership->add_option("--m", mem_m, "group sizes m1,..,mn");
  membership->add_option("--kvec", mem_kvec, "group orders k1,..,kn");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum of an operator on a level space");
  unsigned spec_k = 1;
  std::string spec_op;
  spectrum_cmd->add_option("--k", spec_k, "level k")->required();
  spectrum_cmd->add_option("--op", spec_op, "operator expression")->required();

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "reproducing kernel of a true level space");
  unsigned kern_level = 1;
  bool kern_emit = false;
  kernel_cmd->add_option("--level", kern_level, "level k")->required();
  kernel_cmd->add_flag("--emit", kern_emit, "emit the expanded kernel terms too");

  // convert
  auto* convert = app.add_subcommand("convert", "column data <-> zbar-power coefficients");
  std::string conv_dir, conv_input;
  convert->add_option("--direction", conv_dir, "fock-to-poly | poly-to-fock")
      ->required()
      ->check(CLI::IsMember({"fock-to-poly", "poly-to-fock"}));
  convert->add_option("--input", conv_input, "column file {\"k\":..,\"functions\":[..]}")
      ->required();

  // matrices
  auto* matrices = app.add_subcommand("matrices", "sl(2) generator matrices on a level space");
  unsigned mat_k = 1;
  bool mat_float = false;
  matrices->add_option("--k", mat_k, "level k")->required();
  matrices->add_flag("--orthonormal-float", mat_float,
                     "emit the orthonormal-basis matrices (floats with square roots)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (verify->parsed()) {
    pfx::SuiteResult result = pfx::run_suite(suite, params);
    pfx::json checks = pfx::json::array();
    for (const auto& c : result.checks) {
      pfx::json jc{{"id", c.id}, {"pass", c.pass}};
      if (!c.gating) jc["informational"] = true;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    emit(pfx::json{{"suite", result.suite},
                   {"pass", result.pass},
                   {"seed", params.seed},
                   {"checks", checks}});
    return result.pass ? kExitPass : kExitCheckFailure;
  }

  if (decompose->parsed()) {
    pfx::ExpPoly f = pfx::exp_poly_from_json(load_json(dec_input));
    if (dec_dims && *dec_dims != f.dims())
      throw std::invalid_argument("input: file dims " + std::to_string(f.dims()) +
                                  " != --d " + std::to_string(*dec_dims));
    pfx::TrueLevelDecomposition dec =
        f.dims() == 1 ? pfx::true_decompose(f) : pfx::multi_true_decompose(f);
    emit(pfx::decomposition_report(f, dec));
    return kExitPass;
  }

  if (project->parsed()) {
    pfx::ExpPoly f = pfx::exp_poly_from_json(load_json(proj_input));
    pfx::ProjectionMethod method =
        proj_method == "gram" ? pfx::ProjectionMethod::gram : pfx::ProjectionMethod::kernel;
    pfx::ExpPoly out(f.dims());
    pfx::json levels;
    if (proj_level && !proj_multilevel.empty())
      throw std::invalid_argument("usage: pass either --level or --multilevel");
    if (proj_level) {
      out = pfx::project_true(f, *proj_level, method);
      levels = pfx::json::array({*proj_level});
    } else if (!proj_multilevel.empty()) {
      auto ks = parse_uint_list(proj_multilevel, "--multilevel");
      out = pfx::tensor_project(f, ks, method);
      levels = ks;
    } else {
      throw std::invalid_argument("usage: --level or --multilevel is required");
    }
    emit(pfx::json{{"level", levels},
                   {"method", proj_method},
                   {"projection", pfx::to_json(out)},
                   {"normsq", pfx::to_json(pfx::norm_sq(out))}});
    return kExitPass;
  }

  if (membership->parsed()) {
    pfx::ExpPoly f = pfx::exp_poly_from_json(load_json(mem_input));
    pfx::json out;
    if (mem_quasi) {
      if (mem_m.empty() || mem_kvec.empty())
        throw std::invalid_argument("usage: --quasi needs --m and --kvec");
      auto groups = parse_uint_list(mem_m, "--m");
      auto orders = parse_uint_list(mem_kvec, "--kvec");
      out = pfx::json{{"test", "quasi-homogeneous"},
                      {"m", groups},
                      {"k", orders},
                      {"member", pfx::quasi_membership(f, groups, orders)}};
    } else if (mem_hom) {
      out = pfx::json{{"test", "homogeneous"},
                      {"k", *mem_hom},
                      {"member", pfx::homogeneous_membership(f, *mem_hom)}};
    } else if (mem_k) {
      out = pfx::json{{"test", "euler-cartan"},
                      {"k", *mem_k},
                      {"member", pfx::euler_cartan_membership(f, *mem_k)}};
    } else {
      out = pfx::json{{"test", "level"}, {"level", pfx::membership_level(f)}};
    }
    emit(out);
    return kExitPass;
  }

  if (spectrum_cmd->parsed()) {
    pfx::NormalForm op = pfx::parse_operator(spec_op, pfx::Rational((long long)spec_k));
    pfx::SpectrumReport rep = pfx::spectrum(pfx::restrict_to_Fk(op, spec_k));
    pfx::json out = pfx::to_json(rep);
    out["operator"] = pfx::pretty_print(op);
    emit(out);
    return kExitPass;
  }

  if (kernel_cmd->parsed()) {
    pfx::KernelFunc kf = pfx::true_kernel(kern_level);
    pfx::UniPoly factored = pfx::kernel_factor_check(kern_level);
    pfx::json out = pfx::to_json(kf, factored);
    if (!kern_emit) out.erase("expanded");
    emit(out);
    return kExitPass;
  }

  if (convert->parsed()) {
    if (conv_dir == "fock-to-poly") {
      pfx::FockColumn col = pfx::fock_column_from_json(load_json(conv_input));
      std::vector<pfx::ExpPoly> phi = pfx::fock_to_poly(col);
      pfx::json fns = pfx::json::array();
      for (const auto& g : phi) fns.push_back(pfx::to_json(g));
      emit(pfx::json{{"direction", conv_dir}, {"k", col.k}, {"functions", fns}});
    } else {
      pfx::FockColumn in = pfx::fock_column_from_json(load_json(conv_input));
      pfx::FockColumn col = pfx::poly_to_fock(in.functions);
      emit(pfx::json{{"direction", conv_dir}, {"k", col.k},
                     {"functions", [&] {
                        pfx::json fns = pfx::json::array();
                        for (const auto& g : col.functions) fns.push_back(pfx::to_json(g));
                        return fns;
                      }()}});
    }
    return kExitPass;
  }

  if (matrices->parsed()) {
    if (mat_float)
      emit(pfx::matrices_to_json(pfx::orthonormal_matrices_float(mat_k)));
    else
      emit(pfx::matrices_to_json(pfx::model_matrices(mat_k)));
    return kExitPass;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pfx::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    emit(pfx::json{{"error", e.what()}});
    return kExitCheckFailure;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  }
}
