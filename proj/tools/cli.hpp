#pragma once

// Command-line front end: eval, table, errmap and bench subcommands.
// run() is kept separate from main() so the test suite can drive it with
// string streams.
//
// Exit codes: 0 success, 1 I/O failure, 2 argument error, 3 numeric error
// (domain, overflow, oracle non-convergence).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "faddeeva/faddeeva.hpp"

namespace faddeeva::cli {

enum exit_code : int { ok = 0, io_error = 1, usage_error = 2, numeric_error = 3 };

struct CliConfig {
  std::string subcommand;
  std::string func = "erf";
  double x = 0;
  double y = 0;
  std::string method = "rational";
  int terms = 23;
  double margin = 12;
  double shift = 2;
  std::string output;  // empty: stdout
  std::string format = "tty";
  bool strict_domain = false;

  int table_id = 1;

  double x_min = 1e-3, x_max = 10, y_min = 1e-3, y_max = 10;
  int nx = 10, ny = 10;
  std::string spacing = "linear";
  std::string pair = "rational_vs_reference";
  unsigned threads = 1;

  std::size_t points = 1000000;
  int repeats = 11;
  std::uint64_t seed = 20130814;
};

namespace detail {

class usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + tmp);
    f << text;
    if (!f.flush()) throw std::ios_base::failure("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::ios_base::failure("cannot rename " + tmp + " to " + path);
  }
}

inline void require_finite_arg(double v, const char* name) {
  if (!std::isfinite(v)) throw usage(std::string(name) + " must be finite");
}

inline Method parse_method(const std::string& m) {
  return m == "reference" ? Method::reference : Method::rational;
}

inline analysis::Func parse_func(const std::string& f) {
  if (f == "w") return analysis::Func::w;
  if (f == "erfc") return analysis::Func::erfc;
  return analysis::Func::erf;
}

inline std::string eval(const CliConfig& c, const CoefficientTable& table) {
  require_finite_arg(c.x, "--x");
  require_finite_arg(c.y, "--y");
  const complex z(c.x, c.y);
  const oracle::QuadratureSpec spec;

  complex v;
  if (c.func == "voigt") {
    if (c.y < 0) throw domain_error("voigt needs y >= 0");
    if (c.method == "oracle") {
      v = oracle::w_value(z, spec);
    } else if (c.strict_domain) {
      v = w_half_plane(z, table, parse_method(c.method));
    } else {
      const VoigtValue kl = voigt(c.x, c.y, table, parse_method(c.method));
      v = complex(kl.K, kl.L);
    }
  } else if (c.method == "oracle") {
    v = analysis::evaluate_oracle(parse_func(c.func), z, spec);
  } else {
    v = analysis::evaluate(parse_func(c.func), z, table, parse_method(c.method),
                           c.strict_domain);
  }

  std::ostringstream os;
  if (c.format == "csv") {
    os << (c.func == "voigt" ? "x,y,K,L\n" : "x,y,re,im\n");
    os << format_sci(c.x) << ',' << format_sci(c.y) << ',' << format_sci(v.real())
       << ',' << format_sci(v.imag()) << '\n';
  } else if (c.func == "voigt") {
    os << "K = " << format_sci(v.real()) << ", L = " << format_sci(v.imag()) << '\n';
  } else {
    os << format_complex(v) << '\n';
  }
  return os.str();
}

inline std::string table(const CliConfig& c, const CoefficientTable& t) {
  const auto rows = analysis::reproduce_table(c.table_id, t);
  std::ostringstream os;
  if (c.format == "csv") {
    analysis::write_table_csv(os, rows);
    return os.str();
  }
  const char* part = c.table_id == 1 ? "Re" : "Im";
  os << "Table " << c.table_id << ": " << part << "[erf(x + iy)], N = "
     << t.terms() << ", tau_m = " << format_sci(t.margin())
     << ", sigma = " << format_sci(t.shift()) << '\n';
  os << std::left << std::setw(8) << "x" << std::setw(8) << "y" << std::setw(26)
     << "rational" << std::setw(26) << "reference" << "delta\n";
  for (const auto& r : rows) {
    std::ostringstream xs, ys;
    xs << r.x;
    ys << r.y;
    os << std::left << std::setw(8) << xs.str() << std::setw(8) << ys.str()
       << std::setw(26) << format_sci(r.rational) << std::setw(26)
       << format_sci(r.reference) << format_sci(r.delta) << '\n';
  }
  return os.str();
}

inline std::string errmap(const CliConfig& c, const CoefficientTable& t) {
  analysis::Grid grid;
  grid.x_min = c.x_min;
  grid.x_max = c.x_max;
  grid.y_min = c.y_min;
  grid.y_max = c.y_max;
  grid.nx = c.nx;
  grid.ny = c.ny;
  grid.spacing = c.spacing == "log" ? analysis::Spacing::log : analysis::Spacing::linear;
  for (double v : {grid.x_min, grid.x_max, grid.y_min, grid.y_max}) {
    require_finite_arg(v, "grid bound");
  }
  if (grid.nx < 2 || grid.ny < 2) throw usage("--nx and --ny must be >= 2");
  if (grid.spacing == analysis::Spacing::log &&
      !(grid.x_min > 0 && grid.x_max > 0 && grid.y_min > 0 && grid.y_max > 0)) {
    throw usage("log spacing needs positive grid bounds");
  }
  analysis::ErrorMapOptions opts;
  opts.strict_domain = c.strict_domain;
  opts.threads = c.threads;
  const auto pair = c.pair == "rational_vs_oracle"
                        ? analysis::MethodPair::rational_vs_oracle
                        : analysis::MethodPair::rational_vs_reference;
  const auto map = analysis::error_map(parse_func(c.func), grid, t, pair, opts);

  std::ostringstream os;
  if (c.format == "csv") {
    analysis::write_error_map_csv(os, map);
  } else {
    os << "function: " << c.func << "\npair: " << c.pair
       << "\npoints: " << map.rows.size()
       << "\nmax delta_re: " << format_sci(map.max_delta_re)
       << "\nmax delta_im: " << format_sci(map.max_delta_im) << '\n';
  }
  return os.str();
}

inline std::string bench(const CliConfig& c, const CoefficientTable& t) {
  if (c.points < 10000) throw usage("--points must be >= 10000");
  if (c.repeats < 3 || c.repeats % 2 == 0) {
    throw usage("--repeats must be odd and >= 3");
  }
  const auto r = analysis::benchmark(c.points, c.repeats, t, c.seed);
  std::ostringstream os;
  if (c.format == "csv") {
    os << "points,repeats,seed,checksum_rational,checksum_reference,"
          "median_ns_rational,median_ns_reference,speedup\n"
       << r.points << ',' << r.repeats << ',' << c.seed << ','
       << format_sci(r.checksum_rational) << ',' << format_sci(r.checksum_reference)
       << ',' << r.median_ns_rational << ',' << r.median_ns_reference << ','
       << r.speedup << '\n';
    return os.str();
  }
  os << "points: " << r.points << "\nrepeats: " << r.repeats
     << "\nseed: " << c.seed
     << "\nchecksum_rational: " << format_sci(r.checksum_rational)
     << "\nchecksum_reference: " << format_sci(r.checksum_reference) << '\n';
  os << "\n[timing]\n"
     << "median_ns_rational: " << r.median_ns_rational
     << "\nmedian_ns_reference: " << r.median_ns_reference
     << "\nspeedup: " << r.speedup << '\n';
  if (r.speedup < 1.0) {
    os << "note: the rational form measured slower than the reference form on "
          "this run. Both do N complex divisions per point; the reference adds "
          "one complex exponential, so a ratio below 1 points to timer noise or "
          "frequency scaling rather than the algorithms.\n";
  }
  return os.str();
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CliConfig c;
  CLI::App app{"Complex error function, erf/erfc and Voigt functions via a "
               "shifted Fourier rational approximation"};
  app.name(argv.empty() ? "faddeeva" : argv.front());
  app.require_subcommand(1);

  auto common = [&c](CLI::App* sub, bool with_method) {
    sub->add_option("-N,--terms", c.terms, "number of Fourier terms N")
        ->capture_default_str();
    sub->add_option("--tau-m", c.margin, "margin value tau_m")->capture_default_str();
    sub->add_option("--sigma", c.shift, "shift constant sigma")->capture_default_str();
    sub->add_option("-o,--output", c.output, "write to this file instead of stdout");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"tty", "csv"}))
        ->capture_default_str();
    if (with_method) {
      sub->add_flag("--strict-domain", c.strict_domain,
                    "refuse arguments outside the half-plane of the direct formulas");
    }
  };

  auto* ev = app.add_subcommand("eval", "evaluate one function at x + iy");
  ev->add_option("--func", c.func, "function")
      ->check(CLI::IsMember({"w", "erf", "erfc", "voigt"}))
      ->capture_default_str();
  ev->add_option("--x", c.x, "real part")->required();
  ev->add_option("--y", c.y, "imaginary part")->required();
  ev->add_option("--method", c.method, "evaluator")
      ->check(CLI::IsMember({"rational", "reference", "oracle"}))
      ->capture_default_str();
  common(ev, true);

  auto* tb = app.add_subcommand("table", "reproduce the published erf tables");
  tb->add_option("--id", c.table_id, "1: real parts, 2: imaginary parts")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  common(tb, false);

  auto* em = app.add_subcommand("errmap", "relative-error sweep over a grid");
  em->add_option("--func", c.func, "function")
      ->check(CLI::IsMember({"w", "erf", "erfc"}))
      ->capture_default_str();
  em->add_option("--x-min", c.x_min)->capture_default_str();
  em->add_option("--x-max", c.x_max)->capture_default_str();
  em->add_option("--y-min", c.y_min)->capture_default_str();
  em->add_option("--y-max", c.y_max)->capture_default_str();
  em->add_option("--nx", c.nx)->capture_default_str();
  em->add_option("--ny", c.ny)->capture_default_str();
  em->add_option("--spacing", c.spacing)
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  em->add_option("--pair", c.pair)
      ->check(CLI::IsMember({"rational_vs_reference", "rational_vs_oracle"}))
      ->capture_default_str();
  em->add_option("--threads", c.threads)->check(CLI::Range(1u, 256u))->capture_default_str();
  common(em, true);

  auto* bn = app.add_subcommand("bench", "time the rational form against the reference form");
  bn->add_option("--points", c.points)->capture_default_str();
  bn->add_option("--repeats", c.repeats)->capture_default_str();
  bn->add_option("--seed", c.seed)->capture_default_str();
  common(bn, false);

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(),
                                argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return usage_error;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  c.subcommand = sub;
  try {
    const auto params = make_params(c.terms, c.margin, c.shift);
    const auto table = build_table(params);
    std::string text;
    if (sub == "eval") {
      text = detail::eval(c, table);
    } else if (sub == "table") {
      text = detail::table(c, table);
    } else if (sub == "errmap") {
      text = detail::errmap(c, table);
    } else {
      text = detail::bench(c, table);
    }
    detail::write_output(c.output, text, out);
    return ok;
  } catch (const invalid_params& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const detail::usage& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const faddeeva::error& e) {
    err << "error: " << e.what() << '\n';
    return numeric_error;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return io_error;
  }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace faddeeva::cli
