// qit: command line front end.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 algebra not admissible within
// the degree bound, 4 a requested value is unknown at the cutoff,
// 5 operation needs a monomial algebra.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qit/algebra_io.hpp"
#include "qit/classify.hpp"
#include "qit/dim_report.hpp"
#include "qit/export.hpp"
#include "qit/homological.hpp"
#include "qit/it_functions.hpp"
#include "qit/module_expr.hpp"
#include "qit/report.hpp"
#include "qit/representation.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kNotAdmissible = 3;
constexpr int kUnknown = 4;
constexpr int kNotMonomial = 5;

struct Common {
  std::string file;
  std::optional<std::size_t> cutoff;
  std::size_t max_degree = 64;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.file, "algebra file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--cutoff", c.cutoff, "resolution length cutoff (default 2*dim A + 2)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-degree", c.max_degree, "degree bound for the rewriting completion")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

std::size_t cutoff_for(const Common& c, const qit::BoundQuiverAlgebra& a) {
  return c.cutoff.value_or(2 * a.dimension() + 2);
}

int print_homdim(const qit::HomDim& d) {
  std::cout << d.to_string() << '\n';
  return d.is_unknown() ? kUnknown : 0;
}

int write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "qit: cannot write '" << path << "'\n";
    return kUsage;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Igusa-Todorov functions and homological dimensions of bound quiver algebras.\n"
               "Paths compose left to right: a*g means a, then g."};
  app.require_subcommand(1);

  Common common;
  std::string format = "text";
  std::string module_text, from_text, to_text, dot_out, csv_out;
  std::size_t degree = 1;

  auto* analyze = app.add_subcommand("analyze", "full report: classes, Gorenstein profile, dimensions");
  add_common(analyze, common);
  analyze->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}))->capture_default_str();

  auto* phi = app.add_subcommand("phi", "phi(M) over a monomial algebra");
  auto* psi = app.add_subcommand("psi", "psi(M) over a monomial algebra");
  auto* pd = app.add_subcommand("pd", "projective dimension of M");
  auto* id = app.add_subcommand("id", "injective dimension of M");
  for (auto* cmd : {phi, psi, pd, id}) {
    add_common(cmd, common);
    cmd->add_option("--module", module_text, "module expression, e.g. \"S(1)+2*ideal(a*g)\"")->required();
  }

  auto* ext = app.add_subcommand("ext", "dim Ext^k(M, N)");
  add_common(ext, common);
  ext->add_option("--from", from_text, "module expression M")->required();
  ext->add_option("--to", to_text, "module expression N")->required();
  ext->add_option("--degree", degree, "k")->required();

  auto* exp = app.add_subcommand("export", "syzygy graph as DOT or class table as CSV ('-' for stdout)");
  add_common(exp, common);
  auto* target = exp->add_option_group("target", "exactly one of --dot, --csv");
  target->add_option("--dot", dot_out, "DOT output file");
  target->add_option("--csv", csv_out, "CSV output file");
  target->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    const qit::BoundQuiverAlgebra a = qit::load_algebra_file(common.file, common.max_degree);
    const std::size_t cutoff = cutoff_for(common, a);
    const qit::Quiver& q = a.quiver();

    if (analyze->parsed()) {
      const auto flags = qit::classify(a);
      const auto dims = qit::dim_report(a, cutoff);
      const auto report = qit::analysis_report(a, flags, dims, cutoff);
      std::cout << (format == "kv" ? report.render_kv() : report.render_text());
      for (const auto* f : {&dims.findim, &dims.phidim, &dims.psidim, &dims.gldim})
        if (f->status() == qit::FieldStatus::Unknown) return kUnknown;
      return 0;
    }

    if (phi->parsed() || psi->parsed()) {
      const auto m = qit::parse_module_expr(module_text, q);
      if (!a.is_monomial()) throw qit::NotMonomialError();
      qit::IgusaTodorov it(a);
      const auto v = it.k0(m);
      std::cout << (phi->parsed() ? it.phi(v) : it.psi(v)) << '\n';
      return 0;
    }

    if (pd->parsed()) {
      const auto m = qit::module_from_expr(qit::parse_module_expr(module_text, q), a);
      return print_homdim(qit::pd_cutoff(m, a, cutoff));
    }

    if (id->parsed()) {
      const auto op = qit::opposite(a);
      const auto m = qit::module_from_expr(qit::parse_module_expr(module_text, q), a, &op);
      return print_homdim(qit::id_cutoff(m, op, cutoff));
    }

    if (ext->parsed()) {
      const auto op = qit::opposite(a);
      const auto m = qit::module_from_expr(qit::parse_module_expr(from_text, q), a, &op);
      const auto n = qit::module_from_expr(qit::parse_module_expr(to_text, q), a, &op);
      try {
        std::cout << qit::ext_dim(m, n, degree, a) << '\n';
      } catch (const qit::BudgetExceeded&) {
        std::cout << "unknown\n";
        return kUnknown;
      }
      return 0;
    }

    if (exp->parsed()) {
      if (!a.is_monomial()) throw qit::NotMonomialError();
      qit::IgusaTodorov it(a);
      if (!dot_out.empty()) return write_output(dot_out, qit::export_dot(a, it));
      return write_output(csv_out, qit::export_csv(a, it));
    }
  } catch (const qit::ParseError& e) {
    std::cerr << "qit: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const qit::AlgebraError& e) {
    std::cerr << "qit: " << e.what() << '\n';
    return e.kind() == qit::AlgebraError::Kind::InconsistentRelation ? kParse : kNotAdmissible;
  } catch (const qit::NotMonomialError& e) {
    std::cerr << "qit: " << e.what() << '\n';
    return kNotMonomial;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qit: invalid module: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "qit: error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
