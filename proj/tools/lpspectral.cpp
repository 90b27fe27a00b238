#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lps/braid.hpp"
#include "lps/charvariety.hpp"
#include "lps/errors.hpp"
#include "lps/fiberpoly.hpp"
#include "lps/json_io.hpp"
#include "lps/laurent.hpp"
#include "lps/lpmat.hpp"

namespace {

using nlohmann::json;

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Reads the JSON input for a subcommand from --in or from stdin.
json read_json_input(const std::string& path) {
  if (path.empty()) {
    return lps::parse_json_text(slurp(std::cin));
  }
  std::ifstream in(path);
  if (!in) throw lps::ParseError("cannot open input file '" + path + "'");
  return lps::parse_json_text(slurp(in));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<double> parse_xi(const std::string& text) {
  std::vector<double> xs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(piece, &used);
      while (used < piece.size() && piece[used] == ' ') ++used;
      if (used != piece.size()) throw std::invalid_argument(piece);
      xs.push_back(v);
    } catch (const std::exception&) {
      throw lps::ParseError("cannot parse real coordinate '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return xs;
}

void write_plot_files(const lps::ScanReport& report, const std::string& prefix) {
  const int h =
      report.points.empty() ? 0 : report.points.front().character.num_vars();
  {
    std::ofstream dat(prefix + ".dat");
    if (!dat) throw lps::ParseError("cannot open plot data file '" + prefix + ".dat'");
    dat << "#";
    for (int j = 1; j <= h; ++j) dat << " turn_" << j;
    dat << " rho gamma\n";
    dat.precision(12);
    for (const auto& pt : report.points) {
      for (int j = 0; j < h; ++j) dat << pt.character.coord(j).value() << " ";
      dat << pt.rho << " " << pt.gamma << "\n";
    }
  }
  std::ofstream gp(prefix + ".gp");
  if (!gp) throw lps::ParseError("cannot open plot script '" + prefix + ".gp'");
  gp << "# Generic headless plot script: gnuplot " << prefix << ".gp\n"
     << "set terminal dumb size 120,30\n"
     << "set xlabel 'turn_1'\n"
     << "set ylabel 'rho'\n"
     << "plot '" << prefix << ".dat' using 1:" << (h + 1) << " with lines title 'rho'\n";
}

int dispatch(CLI::App& app);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for matrices over integral Laurent polynomial rings"};
  app.require_subcommand(1);

  // pf-check
  auto* pf = app.add_subcommand("pf-check", "Certify Perron-Frobenius primitivity");
  static std::string pf_in;
  pf->add_option("--in", pf_in, "matrix JSON file (default: stdin)");

  // charpoly
  auto* cp = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  static std::string cp_in;
  cp->add_option("--in", cp_in, "matrix JSON file (default: stdin)");

  // specialize
  auto* sp = app.add_subcommand("specialize", "Evaluate a matrix/polynomial at a character");
  static std::string sp_in, sp_char;
  sp->add_option("--in", sp_in, "matrix or u-polynomial JSON file (default: stdin)");
  sp->add_option("--char", sp_char, "character, e.g. \"1/3,0\" or \"0.25\"")->required();

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Eigenvalue moduli at a character");
  static std::string spec_in, spec_char;
  spec->add_option("--in", spec_in, "matrix or u-polynomial JSON file (default: stdin)");
  spec->add_option("--char", spec_char, "character")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Spectral radius over a torus grid");
  static std::string scan_in, scan_csv, scan_plot;
  static int scan_grid = 0;
  static double scan_exclude = 0.0;
  static int scan_jobs = 1;
  scan->add_option("--in", scan_in, "matrix or u-polynomial JSON file (default: stdin)");
  scan->add_option("--grid", scan_grid, "points per dimension (>= 2)")->required();
  scan->add_option("--exclude", scan_exclude,
                   "exclusion radius around the trivial character, in turns (default 0)");
  scan->add_option("--jobs", scan_jobs, "worker threads (default 1; output is identical)");
  scan->add_option("--csv", scan_csv, "write per-point CSV to this path");
  scan->add_option("--plot", scan_plot, "write <prefix>.dat and <prefix>.gp plot files");

  // gap-cert
  auto* gap = app.add_subcommand("gap-cert", "Entrywise gap certificate C at a character");
  static std::string gap_in, gap_char;
  static int gap_power = 1;
  static bool gap_auto = false;
  static int gap_var = 0;
  gap->add_option("--in", gap_in, "matrix JSON file (default: stdin)");
  gap->add_option("--char", gap_char, "character")->required();
  gap->add_option("--power", gap_power, "apply the certificate to M^k (default 1)");
  gap->add_flag("--auto-power", gap_auto,
                "power M to its uniform-spread exponent first (overrides --power)");
  gap->add_option("--var", gap_var, "variable index for --auto-power (default 0)");

  // braid
  auto* braid = app.add_subcommand("braid", "Burau/Gassner matrix of a braid word");
  static std::string braid_word, braid_rep = "burau";
  static int braid_strands = 0;
  braid->add_option("--word", braid_word, "braid word, e.g. \"s1 s2^-1\"")->required();
  braid->add_option("--strands", braid_strands, "strand count n >= 2")->required();
  braid->add_option("--rep", braid_rep, "representation: burau (default) or gassner");

  // teich
  auto* teich = app.add_subcommand("teich", "Teichmuller polynomial from edge/vertex matrices");
  static std::string teich_pe, teich_pv;
  teich->add_option("--pe", teich_pe, "edge transition matrix JSON")->required();
  teich->add_option("--pv", teich_pv, "vertex transition matrix JSON")->required();

  // divides
  auto* div = app.add_subcommand("divides", "Up-to-unit divisibility of u-polynomials");
  static std::string div_a, div_t;
  static unsigned div_seed = 0;
  div->add_option("--a", div_a, "divisor u-polynomial JSON")->required();
  div->add_option("--t", div_t, "dividend u-polynomial JSON")->required();
  div->add_option("--seed", div_seed, "seed for the torsion corroboration sample (default 0)");

  // dilatation
  auto* dil = app.add_subcommand("dilatation", "Largest real root along a positive ray");
  static std::string dil_in, dil_xi;
  dil->add_option("--in", dil_in, "u-polynomial JSON file (default: stdin)");
  dil->add_option("--xi", dil_xi, "real direction, e.g. \"0.693\" or \"1,0\"")->required();

  try {
    app.parse(argc, argv);

    if (pf->parsed()) {
      const lps::NamedMatrix m = lps::matrix_from_json(read_json_input(pf_in));
      emit(lps::pf_report_to_json(lps::primitivity(m.matrix)));
    } else if (cp->parsed()) {
      const lps::NamedMatrix m = lps::matrix_from_json(read_json_input(cp_in));
      emit(lps::upoly_to_json(lps::NamedUPoly{m.variables, lps::char_poly(m.matrix)}));
    } else if (sp->parsed()) {
      const lps::ParsedObject obj = lps::object_from_json(read_json_input(sp_in));
      const lps::Character chi = lps::Character::parse(sp_char);
      json out;
      out["character"] = lps::character_to_json(chi);
      if (obj.kind == lps::ObjectKind::kMatrix) {
        const lps::ComplexMatrix cm = lps::specialize_matrix(obj.matrix.matrix, chi);
        json rows = json::array();
        for (const auto& row : cm) {
          json r = json::array();
          for (const auto& z : row) r.push_back({z.real(), z.imag()});
          rows.push_back(std::move(r));
        }
        out["dim"] = obj.matrix.matrix.dim();
        out["complex_entries"] = std::move(rows);
      } else {
        const lps::ComplexPoly pc = lps::specialize_upoly(obj.poly.poly, chi);
        json cs = json::array();
        for (const auto& z : pc) cs.push_back({z.real(), z.imag()});
        out["complex_coeffs"] = std::move(cs);
      }
      emit(out);
    } else if (spec->parsed()) {
      const lps::ParsedObject obj = lps::object_from_json(read_json_input(spec_in));
      const lps::Character chi = lps::Character::parse(spec_char);
      const lps::SpectrumReport rep = obj.kind == lps::ObjectKind::kMatrix
                                          ? lps::spectrum(obj.matrix.matrix, chi)
                                          : lps::spectrum(obj.poly.poly, chi);
      emit(lps::spectrum_report_to_json(rep));
    } else if (scan->parsed()) {
      const lps::ParsedObject obj = lps::object_from_json(read_json_input(scan_in));
      const lps::ScanReport rep =
          obj.kind == lps::ObjectKind::kMatrix
              ? lps::rho_scan(obj.matrix.matrix, scan_grid, scan_exclude, scan_jobs)
              : lps::rho_scan(obj.poly.poly, scan_grid, scan_exclude, scan_jobs);
      if (!scan_csv.empty()) {
        std::ofstream csv(scan_csv, std::ios::binary);
        if (!csv) throw lps::ParseError("cannot open CSV output '" + scan_csv + "'");
        lps::write_scan_csv(rep, csv);
      }
      if (!scan_plot.empty()) write_plot_files(rep, scan_plot);
      emit(lps::scan_summary_to_json(rep));
    } else if (gap->parsed()) {
      const lps::NamedMatrix m = lps::matrix_from_json(read_json_input(gap_in));
      const lps::Character chi = lps::Character::parse(gap_char);
      int power = gap_power;
      if (gap_auto) power = lps::uniform_spread_exponent(m.matrix, gap_var);
      if (power < 1) throw lps::MathError("gap-cert: power must be >= 1");
      const lps::LaurentMatrix powered =
          power == 1 ? m.matrix : lps::mat_pow(m.matrix, power);
      json out;
      out["C"] = lps::gap_certificate(powered, chi);
      out["power"] = power;
      emit(out);
    } else if (braid->parsed()) {
      const lps::BraidWord w = lps::parse_braid(braid_word, braid_strands);
      if (braid_rep == "burau") {
        emit(lps::matrix_to_json(
            lps::NamedMatrix{lps::default_variable_names(1), lps::reduced_burau(w)}));
      } else if (braid_rep == "gassner") {
        emit(lps::matrix_to_json(lps::NamedMatrix{
            lps::default_variable_names(w.strands), lps::gassner(w)}));
      } else {
        throw lps::ParseError("unknown representation '" + braid_rep +
                              "' (expected burau or gassner)");
      }
    } else if (teich->parsed()) {
      const lps::NamedMatrix pe = lps::matrix_from_json(read_json_input(teich_pe));
      const lps::NamedMatrix pv = lps::matrix_from_json(read_json_input(teich_pv));
      emit(lps::upoly_to_json(
          lps::NamedUPoly{pe.variables, lps::teichmuller(pe.matrix, pv.matrix)}));
    } else if (div->parsed()) {
      const lps::NamedUPoly a = lps::upoly_from_json(read_json_input(div_a));
      const lps::NamedUPoly t = lps::upoly_from_json(read_json_input(div_t));
      const lps::DividesReport rep = lps::divides_up_to_unit(a.poly, t.poly, div_seed);
      emit(lps::divides_report_to_json(rep, a.variables));
    } else if (dil->parsed()) {
      const lps::NamedUPoly p = lps::upoly_from_json(read_json_input(dil_in));
      const std::vector<double> xi = parse_xi(dil_xi);
      json out;
      out["K"] = lps::dilatation(p.poly, xi);
      emit(out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;  // usage error
  } catch (const lps::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const lps::MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return 3;
  } catch (const lps::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
