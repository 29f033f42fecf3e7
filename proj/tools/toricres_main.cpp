#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toric/json_io.hpp"
#include "toric/koszul.hpp"

namespace {

using toric::ComplexKind;
using toric::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    toric::fail(toric::ErrorCode::MalformedInput, "cannot read file", path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    toric::fail(toric::ErrorCode::MalformedInput, "invalid JSON",
                path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    toric::fail(toric::ErrorCode::MalformedInput, "cannot write file", path);
  out << text;
}

toric::IntVector parse_degree(const std::string& text, toric::Index rank) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') s += c;
  std::vector<toric::Int> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string piece =
        s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (piece.empty() ||
        piece.find_first_not_of("0123456789", piece[0] == '-' ? 1 : 0) !=
            std::string::npos ||
        (piece[0] == '-' && piece.size() == 1))
      toric::fail(toric::ErrorCode::MalformedInput, "bad degree component",
                  text);
    parts.emplace_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<toric::Index>(parts.size()) != rank)
    toric::fail(toric::ErrorCode::MalformedInput, "degree has the wrong rank",
                text);
  toric::IntVector u(rank);
  for (toric::Index i = 0; i < rank; ++i)
    u[i] = parts[static_cast<std::size_t>(i)];
  return u;
}

ComplexKind kind_from_name(const std::string& name) {
  if (name == "ishida") return ComplexKind::Ishida;
  if (name == "residue") return ComplexKind::Residue;
  if (name == "kernel") return ComplexKind::Kernel;
  toric::fail(toric::ErrorCode::MalformedInput, "unknown complex kind", name);
}

int exit_code_for(toric::ErrorCode code) {
  switch (code) {
    case toric::ErrorCode::MalformedInput:
      return 2;
    case toric::ErrorCode::CrosscheckFailure:
    case toric::ErrorCode::LemmaViolation:
      return 1;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded tables and vanishing checks for toric refinements"};
  app.require_subcommand(1);

  std::string classify_cone;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "print the profile of a cone");
  classify_cmd->add_option("--cone", classify_cone, "cone JSON file")
      ->required();

  std::string resolve_cone, resolve_out;
  bool resolve_strong = false;
  CLI::App* resolve_cmd = app.add_subcommand(
      "resolve", "smooth refinement by repeated stellar subdivision");
  resolve_cmd->add_option("--cone", resolve_cone, "cone JSON file")->required();
  resolve_cmd->add_flag("--strong", resolve_strong,
                        "fail unless every subdivided face is singular");
  resolve_cmd->add_option("-o,--output", resolve_out,
                          "write the fan here instead of stdout");

  std::string coh_cone, coh_fan, coh_kind = "residue", coh_format = "json";
  std::string coh_degree;
  int coh_p = -1;
  long long coh_bound = 4;
  int coh_threads = 1;
  CLI::App* coh_cmd = app.add_subcommand(
      "cohomology", "graded cohomology of the degreewise complexes");
  coh_cmd->add_option("--cone", coh_cone, "cone JSON file")->required();
  coh_cmd->add_option("--fan", coh_fan, "refining fan JSON file")->required();
  coh_cmd->add_option("--kind", coh_kind, "ishida | residue | kernel | p1")
      ->check(CLI::IsMember({"ishida", "residue", "kernel", "p1"}));
  coh_cmd->add_option("--p", coh_p, "form degree (ignored for p1)");
  coh_cmd->add_option("--bound", coh_bound, "pairing bound of the degree box")
      ->check(CLI::NonNegativeNumber);
  coh_cmd->add_option("--degree", coh_degree,
                      "single degree like 1,0,0 instead of the whole box");
  coh_cmd->add_option("--format", coh_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  coh_cmd->add_option("--threads", coh_threads, "worker threads")
      ->check(CLI::PositiveNumber);

  int sweep_n_max = 4;
  CLI::App* sweep_cmd = app.add_subcommand(
      "koszul-sweep",
      "check the binomial bottom dimensions of the marked-index complexes");
  sweep_cmd->add_option("--n-max", sweep_n_max, "largest ambient size")
      ->check(CLI::PositiveNumber);

  std::string verify_cone, verify_fan;
  int verify_p_max = -1;
  long long verify_bound = 4;
  bool verify_experimental = false;
  int verify_threads = 1;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "predict and check vanishing across the whole grid");
  verify_cmd->add_option("--cone", verify_cone, "cone JSON file")->required();
  verify_cmd->add_option("--fan", verify_fan,
                         "refining fan JSON file (default: resolve)");
  verify_cmd->add_option("--p-max", verify_p_max,
                         "largest form degree (default: the rank)");
  verify_cmd
      ->add_option("--bound", verify_bound, "pairing bound of the degree box")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--experimental", verify_experimental,
                       "attach observed values where no rule applies");
  verify_cmd->add_option("--threads", verify_threads, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) {
      toric::Cone cone = toric::cone_from_json(read_json_file(classify_cone),
                                               &std::cerr);
      std::cout << toric::dump_json(toric::profile_to_json(cone));
      return 0;
    }

    if (resolve_cmd->parsed()) {
      toric::Cone cone =
          toric::cone_from_json(read_json_file(resolve_cone), &std::cerr);
      toric::Fan fan = toric::resolve(cone, resolve_strong);
      write_output(resolve_out, toric::dump_json(toric::fan_to_json(fan)));
      return 0;
    }

    if (coh_cmd->parsed()) {
      toric::Cone cone =
          toric::cone_from_json(read_json_file(coh_cone), &std::cerr);
      toric::Fan fan = toric::fan_from_json(read_json_file(coh_fan));
      toric::ComplexContext ctx = toric::make_context(cone, fan);
      if (coh_kind == "p1") {
        if (!coh_degree.empty())
          toric::fail(toric::ErrorCode::MalformedInput,
                      "no single-degree mode for the closed formula");
        if (coh_p >= 0)
          std::cerr << "note: --p is ignored for kind p1\n";
        toric::GradedCohomologyTable table =
            toric::p1_higher_image(ctx, coh_bound, coh_threads);
        std::cout << (coh_format == "table"
                          ? toric::format_table_text(table)
                          : toric::dump_json(toric::table_to_json(table)));
        return 0;
      }
      if (coh_p < 0)
        toric::fail(toric::ErrorCode::MalformedInput,
                    "--p is required for this kind");
      const ComplexKind kind = kind_from_name(coh_kind);
      if (!coh_degree.empty()) {
        const toric::IntVector u =
            parse_degree(coh_degree, cone.ambient_rank());
        toric::FiniteComplex complex =
            toric::assemble_degree_complex(ctx, kind, coh_p, u);
        std::cout << toric::dump_json(toric::complex_to_json(
            complex, kind, coh_p, u, toric::degree_support(ctx, u)));
        return 0;
      }
      toric::GradedCohomologyTable table = toric::graded_cohomology(
          ctx, kind, coh_p, coh_bound, coh_threads);
      std::cout << (coh_format == "table"
                        ? toric::format_table_text(table)
                        : toric::dump_json(toric::table_to_json(table)));
      return 0;
    }

    if (sweep_cmd->parsed()) {
      Json out = Json::object();
      Json entries = Json::array();
      for (const toric::KoszulSweepEntry& e : toric::koszul_sweep(sweep_n_max)) {
        Json rec = Json::object();
        rec["bottom_dim"] = static_cast<long long>(e.bottom_dim);
        rec["k"] = e.k;
        rec["n"] = e.n;
        rec["p"] = e.p;
        entries.push_back(std::move(rec));
      }
      out["entries"] = std::move(entries);
      out["n_max"] = sweep_n_max;
      std::cout << toric::dump_json(out);
      return 0;
    }

    // verify
    toric::Cone cone =
        toric::cone_from_json(read_json_file(verify_cone), &std::cerr);
    toric::Fan fan = verify_fan.empty()
                         ? toric::resolve(cone, true)
                         : toric::fan_from_json(read_json_file(verify_fan));
    toric::ComplexContext ctx = toric::make_context(cone, fan);
    const int p_max = verify_p_max >= 0
                          ? verify_p_max
                          : static_cast<int>(cone.ambient_rank());
    toric::VerificationReport report = toric::verify(
        ctx, p_max, verify_bound, verify_experimental, verify_threads);
    std::cout << toric::dump_json(toric::report_to_json(report));
    return report.ok ? 0 : 1;
  } catch (const toric::Error& e) {
    std::cerr << toric::dump_json(toric::error_to_json(e));
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json j = Json::object();
    j["code"] = "internal";
    j["details"] = "";
    j["error"] = std::string(e.what());
    std::cerr << toric::dump_json(j);
    return 3;
  }
}
