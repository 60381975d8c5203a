#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csinv/error.hpp"
#include "csinv/evaluate.hpp"
#include "csinv/lattice.hpp"

namespace csinv::cli {

namespace {

enum class Format { text, structured };

struct Common {
  std::string catalog_path;
  std::string format = "text";
  bool approx = false;

  Format fmt() const { return format == "structured" ? Format::structured : Format::text; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--catalog", c.catalog_path, "Extra block table merged over the built-in catalog");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

Catalog load(const Common& c) {
  Catalog catalog;
  if (!c.catalog_path.empty()) catalog.merge(load_catalog_file(c.catalog_path));
  return catalog;
}

int cmd_eval(const std::string& text, const std::string& witness, bool auto_witness,
             std::optional<int> m, const Common& c, std::ostream& out) {
  const Catalog catalog = load(c);
  EvalOptions opts;
  if (!witness.empty()) opts.witness = split_top_level(witness);
  opts.auto_witness = auto_witness;
  opts.m = m;
  const InvariantReport report = evaluate(text, catalog, opts);
  const RenderOptions ro{c.approx};
  out << (c.fmt() == Format::structured ? render_json(report, ro) : render_text(report, ro));
  return report.conclusive() ? 0 : 2;
}

int cmd_blocks(const Common& c, std::ostream& out) {
  const Catalog catalog = load(c);
  if (c.fmt() == Format::text) {
    out << render_catalog(catalog.entries());
    for (const auto& d : catalog.dissolve_annotations()) {
      out << "# dissolve:";
      for (const auto& p : d.parts) {
        out << ' ' << (p.multiplicity == 1 ? "" : std::to_string(p.multiplicity) + "*")
            << (p.reversed ? "rev(" + p.name + ")" : p.name);
      }
      out << " = " << d.k << " CP2 # " << d.l << " CP2bar\n";
    }
    return 0;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CatalogEntry* e : catalog.entries()) {
    const ManifoldBlock& b = e->block;
    nlohmann::ordered_json j;
    j["name"] = b.name;
    j["b1"] = b.betti.b1;
    j["b_plus"] = b.betti.b_plus;
    j["b_minus"] = b.betti.b_minus;
    j["c1_squared"] = b.c1_squared ? nlohmann::ordered_json(*b.c1_squared) : nullptr;
    j["flags"] = {{"minimal_complex_surface", to_string(b.flags.minimal_complex_surface)},
                  {"symplectic", to_string(b.flags.symplectic)},
                  {"spin", to_string(b.flags.spin)},
                  {"sw_mod2_nonzero", to_string(b.flags.sw_mod2_nonzero)},
                  {"admits_psc", to_string(b.flags.admits_psc)},
                  {"admits_nonneg_scalar", to_string(b.flags.admits_nonneg_scalar)},
                  {"admits_asd_psc", to_string(b.flags.admits_asd_psc)}};
    j["yamabe"] = b.yamabe ? nlohmann::ordered_json(b.yamabe->to_ascii()) : nullptr;
    j["construction"] = e->construction.to_string();
    j["provenance"] = b.provenance;
    arr.push_back(j);
  }
  out << arr.dump(2) << '\n';
  return 0;
}

int cmd_check_quadruple(const std::string& names, const Common& c, std::ostream& out) {
  const Catalog catalog = load(c);
  const QuadrupleWitness w = resolve_witness(split_top_level(names), catalog);
  std::vector<HypothesisCheck> checks = check_quadruple(w, QuadrupleFlavor::arithmetic, "quadruple");
  const auto minimal = check_quadruple(w, QuadrupleFlavor::minimal_complex, "minimal_complex");
  const auto sw = check_quadruple(w, QuadrupleFlavor::sw_almost_complex, "sw_almost_complex");
  const std::size_t base = checks.size();
  checks.insert(checks.end(), minimal.begin() + base, minimal.end());
  checks.insert(checks.end(), sw.begin() + base, sw.end());

  if (c.fmt() == Format::structured) {
    out << render_checks_json(w, checks);
  } else {
    out << "quadruple: " << w.to_string().substr(0, w.to_string().find(", m =")) << "\n";
    out << render_checks_text(checks);
  }
  const bool arithmetic_ok = std::all_of(checks.begin(), checks.begin() + base, [](const auto& h) {
    return h.status == CheckStatus::pass;
  });
  return arithmetic_ok ? 0 : 2;
}

int cmd_diagonalize(const std::string& path, std::size_t max_rank, const Common& c,
                    std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open Gram file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const IntersectionLattice lattice(parse_grid(buf.str()));
  const Diagonalization d = diagonalize_definite(lattice, max_rank);

  if (c.fmt() == Format::structured) {
    nlohmann::ordered_json j;
    j["rank"] = lattice.rank();
    j["determinant"] = lattice.determinant().str();
    j["diagonalizable"] = d.diagonalizable;
    j["coordinate_bounds"] = d.coordinate_bounds;
    j["vectors_examined"] = d.vectors_examined;
    j["norm_minus_one_count"] = d.norm_minus_one.size();
    j["frame_size"] = d.frame_size;
    if (d.diagonalizable) {
      std::vector<std::vector<std::int64_t>> cols;
      for (std::size_t k = 0; k < d.basis.cols(); ++k) cols.push_back(d.basis.column(k));
      j["basis_columns"] = cols;
    } else {
      j["basis_columns"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "gram (rank " << lattice.rank() << ", det " << lattice.determinant() << "):\n"
        << lattice.to_grid();
    out << "search bounds |v_i| <=";
    for (auto b : d.coordinate_bounds) out << ' ' << b;
    out << "; vectors examined: " << d.vectors_examined
        << "; norm -1 vectors: " << d.norm_minus_one.size() << '\n';
    if (d.diagonalizable) {
      out << "diagonalizable: U^T Q U = -I with U =\n" << to_grid(d.basis);
    } else {
      out << "NotDiagonalizable: the exhaustive search found an orthonormal frame of size "
          << d.frame_size << " < " << lattice.rank() << '\n';
    }
  }
  return d.diagonalizable ? 0 : 2;
}

void report_error(const Error& e, const std::string& input, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (const auto* pe = dynamic_cast<const ParseError*>(&e); pe && !input.empty()) {
    err << "  " << input << "\n  " << std::string(std::min(pe->position(), input.size()), ' ')
        << "^\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"csinv: curvature invariants and Einstein obstructions for connected sums"};
  app.require_subcommand(1);

  Common eval_c, blocks_c, quad_c, diag_c;

  std::string expr, witness;
  bool auto_witness = false;
  std::optional<int> m;
  auto* eval = app.add_subcommand("eval", "Evaluate a connected-sum expression");
  eval->add_option("expression", expr, "e.g. '2*DC8 # S4'")->required();
  eval->add_option("--witness", witness, "Four witness blocks, comma separated");
  eval->add_flag("--auto-witness", auto_witness, "Use the suggested witness quadruple");
  eval->add_option("--m", m, "Number of witness blocks present in the expression")
      ->check(CLI::Range(1, 4));
  eval->add_flag("--approx", eval_c.approx, "Append decimal hints (not authoritative)");
  add_common(eval, eval_c);

  auto* blocks = app.add_subcommand("blocks", "List the block catalog");
  add_common(blocks, blocks_c);

  std::string names;
  auto* quad = app.add_subcommand("check-quadruple", "Check the witness hypotheses on four blocks");
  quad->add_option("names", names, "NAME,NAME,NAME,NAME")->required();
  add_common(quad, quad_c);

  std::string gram_path;
  std::size_t max_rank = kDefaultDiagonalizeRank;
  auto* diag = app.add_subcommand("diagonalize", "Diagonalize a negative-definite unimodular form");
  diag->add_option("--gram", gram_path, "Whitespace-separated integer grid")->required();
  diag->add_option("--max-rank", max_rank, "Rank limit for the exhaustive search");
  add_common(diag, diag_c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  std::string input;
  try {
    if (*eval) {
      input = expr;
      return cmd_eval(expr, witness, auto_witness, m, eval_c, out);
    }
    if (*blocks) return cmd_blocks(blocks_c, out);
    if (*quad) return cmd_check_quadruple(names, quad_c, out);
    if (*diag) return cmd_diagonalize(gram_path, max_rank, diag_c, out);
  } catch (const Error& e) {
    report_error(e, input, err);
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace csinv::cli
