#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "expriordan/catalog.hpp"
#include "expriordan/format.hpp"
#include "expriordan/orthopoly.hpp"
#include "expriordan/production.hpp"
#include "expriordan/riordan.hpp"

namespace expriordan::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::size_t order = Series::default_order;
  std::string format = "text";
};

// Either a catalog id or an explicit (g, f) pair of coefficient lists.
struct ArraySpec {
  std::string id;
  std::string g;
  std::string f;
  bool egf = false;
  bool inverse = false;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

Series parse_series(const std::string& text, std::size_t order, bool egf) {
  std::vector<Rational> coeffs = parse_list(text);
  if (coeffs.size() > order + 1) {
    throw std::invalid_argument("series '" + text + "' has more coefficients than order " + std::to_string(order));
  }
  return egf ? Series::from_egf(order, coeffs) : Series::from_ogf(order, std::move(coeffs));
}

void add_array_spec(CLI::App& cmd, ArraySpec& spec, bool with_inverse = true) {
  cmd.add_option("id", spec.id, "Catalog id (see `catalog list`)");
  cmd.add_option("--g", spec.g, "Comma-separated coefficients of g");
  cmd.add_option("--f", spec.f, "Comma-separated coefficients of f");
  cmd.add_flag("--egf", spec.egf, "Read --g/--f as EGF coefficients");
  if (with_inverse) cmd.add_flag("--inverse", spec.inverse, "Use the inverse array");
}

std::string spec_name(const ArraySpec& spec) {
  std::string name = spec.id.empty() ? "custom" : spec.id;
  return spec.inverse ? name + "^-1" : name;
}

ExpRiordan make_array(const ArraySpec& spec, std::size_t order) {
  const bool custom = !spec.g.empty() || !spec.f.empty();
  if (custom && !spec.id.empty()) throw std::invalid_argument("give either a catalog id or --g/--f, not both");
  ExpRiordan a = [&] {
    if (custom) {
      if (spec.g.empty() || spec.f.empty()) throw std::invalid_argument("--g and --f must be given together");
      return build(parse_series(spec.g, order, spec.egf), parse_series(spec.f, order, spec.egf));
    }
    if (spec.id.empty()) throw std::invalid_argument("missing catalog id or --g/--f");
    return entry(spec.id).array(order);
  }();
  return spec.inverse ? inverse(a) : a;
}

void write_matrix(std::ostream& out, OutputFormat fmt, const TriMatrix& m, const std::string& name) {
  switch (fmt) {
    case OutputFormat::text: out << matrix_to_text(m); break;
    case OutputFormat::json: out << matrix_to_json(m, name) << '\n'; break;
    case OutputFormat::csv: out << matrix_to_csv(m); break;
  }
}

void write_sequence(std::ostream& out, OutputFormat fmt, std::span<const Rational> seq) {
  switch (fmt) {
    case OutputFormat::text: out << sequence_to_text(seq); break;
    case OutputFormat::json: out << sequence_to_json(seq) << '\n'; break;
    case OutputFormat::csv: out << sequence_to_csv(seq); break;
  }
}

// Moments attached to a catalog entry: the first column of whichever
// orientation (array or inverse) is a moment matrix, i.e. has a tridiagonal
// production matrix. Falls back to the array's first column.
std::vector<Rational> catalog_moments(const CatalogEntry& e, std::size_t count) {
  const std::size_t order = std::max<std::size_t>(count, 12);
  const ExpRiordan a = e.array(order);
  for (const ExpRiordan& candidate : {a, inverse(a)}) {
    if (auto params = tridiagonal_params(production_definitional(candidate))) {
      return moments(recurrence_from(*params, count), count - 1).m;
    }
  }
  std::vector<Rational> col = a.matrix().column(0);
  col.resize(count);
  return col;
}

int cmd_array(const GlobalOptions& g, const ArraySpec& spec, std::ostream& out) {
  const ExpRiordan a = make_array(spec, g.order);
  write_matrix(out, parse_format(g.format), a.matrix(), spec_name(spec));
  return 0;
}

int cmd_produce(const GlobalOptions& g, const ArraySpec& spec, std::ostream& out) {
  const OutputFormat fmt = parse_format(g.format);
  // The block from an order-N array is N x N, so go one order deeper.
  const TriMatrix p = production_definitional(make_array(spec, g.order + 1));
  const auto params = tridiagonal_params(p);
  switch (fmt) {
    case OutputFormat::text:
      out << matrix_to_text(p);
      out << (params ? "tridiagonal: " + params_to_text(*params) : std::string("not tridiagonal")) << '\n';
      break;
    case OutputFormat::json: {
      json doc = json::parse(matrix_to_json(p, spec_name(spec)));
      doc["params"] = params ? json::parse(params_to_json(*params)) : json(nullptr);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv: out << matrix_to_csv(p); break;
  }
  return 0;
}

struct SequenceSpec {
  std::string id;
  std::string seq;
  std::string of = "f";
  std::size_t n = 5;
};

int cmd_hankel(const GlobalOptions& g, const SequenceSpec& spec, std::ostream& out) {
  std::vector<Rational> seq;
  if (!spec.seq.empty()) {
    if (!spec.id.empty()) throw std::invalid_argument("give either a catalog id or --seq, not both");
    seq = parse_list(spec.seq);
  } else {
    if (spec.id.empty()) throw std::invalid_argument("missing catalog id or --seq");
    const CatalogEntry& e = entry(spec.id);
    const std::size_t order = std::max(g.order, 2 * spec.n);
    if (spec.of == "f") {
      seq = e.f_series(order).egf_coefficients();
    } else if (spec.of == "g") {
      seq = e.g_series(order).egf_coefficients();
    } else if (spec.of == "moments") {
      seq = catalog_moments(e, 2 * spec.n + 1);
    } else {
      throw std::invalid_argument("--of must be f, g or moments");
    }
  }
  write_sequence(out, parse_format(g.format), hankel_transform(seq, spec.n));
  return 0;
}

struct MomentSpec {
  std::string id;
  std::string b;
  std::string lambda;
  std::size_t n = 12;
};

int cmd_moments(const GlobalOptions& g, const MomentSpec& spec, std::ostream& out) {
  std::vector<Rational> m;
  if (!spec.b.empty() || !spec.lambda.empty()) {
    if (!spec.id.empty()) throw std::invalid_argument("give either a catalog id or --b/--lambda, not both");
    Recurrence r{parse_list(spec.b), spec.lambda.empty() ? std::vector<Rational>{} : parse_list(spec.lambda)};
    m = moments(r, spec.n).m;
  } else {
    if (spec.id.empty()) throw std::invalid_argument("missing catalog id or --b/--lambda");
    m = catalog_moments(entry(spec.id), spec.n + 1);
  }
  write_sequence(out, parse_format(g.format), m);
  return 0;
}

int cmd_poly(const GlobalOptions& g, const ArraySpec& spec, std::size_t n, std::ostream& out) {
  const ExpRiordan a = make_array(spec, std::max(g.order, n));
  const PolynomialFamily family = row_polynomials(a.matrix().leading(n + 1));
  const OutputFormat fmt = parse_format(g.format);
  switch (fmt) {
    case OutputFormat::text:
      for (std::size_t k = 0; k < family.size(); ++k) out << "P_" << k << "(x) = " << polynomial_to_text(family[k]) << '\n';
      break;
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& p : family.polys) doc.push_back(json::parse(sequence_to_json(p)));
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv: out << matrix_to_csv(a.matrix().leading(n + 1)); break;
  }
  return 0;
}

struct CfSpec {
  std::string id;
  std::string seq;
  std::size_t depth = 4;
};

int cmd_cf(const GlobalOptions& g, const CfSpec& spec, std::ostream& out) {
  std::vector<Rational> m;
  if (!spec.seq.empty()) {
    if (!spec.id.empty()) throw std::invalid_argument("give either a catalog id or --seq, not both");
    m = parse_list(spec.seq);
  } else {
    if (spec.id.empty()) throw std::invalid_argument("missing catalog id or --seq");
    m = catalog_moments(entry(spec.id), 2 * spec.depth + 1);
  }
  const Recurrence r = jfraction(m, spec.depth);
  switch (parse_format(g.format)) {
    case OutputFormat::text:
      out << "b: " << sequence_to_text(r.b);
      out << "lambda: " << sequence_to_text(r.lambda);
      break;
    case OutputFormat::json: out << recurrence_to_json(r) << '\n'; break;
    case OutputFormat::csv:
      out << "k,b,lambda\n";
      for (std::size_t k = 0; k < r.b.size(); ++k) {
        out << k << ',' << to_string(r.b[k]) << ',' << to_string(r.lambda[k]) << '\n';
      }
      break;
  }
  return 0;
}

struct PlotSpec {
  std::string id;
  double t_min = -4.0;
  double t_max = 4.0;
  std::size_t samples = 200;
  std::string kind = "curve";
};

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int cmd_plotdata(const GlobalOptions& g, const PlotSpec& spec, std::ostream& out) {
  const CatalogEntry& e = entry(spec.id);
  if (!(spec.t_min < spec.t_max)) throw std::invalid_argument("--t-min must be less than --t-max");
  if (spec.samples < 2) throw std::invalid_argument("--samples must be at least 2");
  if (spec.kind != "curve" && spec.kind != "parametric") throw std::invalid_argument("--kind must be curve or parametric");
  const bool parametric = spec.kind == "parametric";
  const bool as_json = parse_format(g.format) == OutputFormat::json;

  json rows = json::array();
  if (!as_json) out << (parametric ? "x,y\n" : "t,f,fprime\n");
  for (std::size_t i = 0; i < spec.samples; ++i) {
    const double t = spec.t_min + (spec.t_max - spec.t_min) * static_cast<double>(i) /
                                      static_cast<double>(spec.samples - 1);
    const double f = e.f_eval(t);
    const double fp = e.fprime_eval(t);
    if (as_json) {
      rows.push_back(parametric ? json::array({fp, f}) : json::array({t, f, fp}));
    } else if (parametric) {
      out << real(fp) << ',' << real(f) << '\n';
    } else {
      out << real(t) << ',' << real(f) << ',' << real(fp) << '\n';
    }
  }
  if (as_json) out << rows.dump() << '\n';
  return 0;
}

int cmd_catalog_list(const GlobalOptions& g, std::ostream& out) {
  const OutputFormat fmt = parse_format(g.format);
  json doc = json::array();
  if (fmt == OutputFormat::csv) out << "id,g,f,notes\n";
  for (const auto& e : entries()) {
    if (fmt == OutputFormat::json) {
      doc.push_back({{"id", e.id}, {"g", e.g_text}, {"f", e.f_text}, {"notes", e.notes}});
    } else if (fmt == OutputFormat::csv) {
      out << e.id << ",\"" << e.g_text << "\",\"" << e.f_text << "\"," << "\"" << e.notes << "\"" << '\n';
    } else {
      out << e.id << std::string(10 - std::min<std::size_t>(e.id.size(), 9), ' ') << "[" << e.g_text << ", "
          << e.f_text << "]  " << e.notes << "\n";
    }
  }
  if (fmt == OutputFormat::json) out << doc.dump() << '\n';
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponential Riordan arrays of sigmoid functions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--order", global.order, "Series order N (matrices are (N+1)x(N+1))")->capture_default_str();
  app.add_option("--format", global.format, "Output format: text, json or csv")->capture_default_str();

  ArraySpec array_spec;
  auto* array_cmd = app.add_subcommand("array", "Print the leading block of an exponential Riordan array");
  add_array_spec(*array_cmd, array_spec);

  ArraySpec produce_spec;
  auto* produce_cmd = app.add_subcommand("produce", "Print the production matrix and Jacobi parameters");
  add_array_spec(*produce_cmd, produce_spec);

  SequenceSpec hankel_spec;
  auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform h_0..h_n");
  hankel_cmd->add_option("id", hankel_spec.id, "Catalog id");
  hankel_cmd->add_option("--seq", hankel_spec.seq, "Comma-separated sequence");
  hankel_cmd->add_option("--of", hankel_spec.of, "Expansion used for a catalog id: f, g or moments")
      ->capture_default_str();
  hankel_cmd->add_option("--n", hankel_spec.n, "Largest index n")->capture_default_str();

  MomentSpec moment_spec;
  auto* moments_cmd = app.add_subcommand("moments", "Moments m_0..m_n of the orthogonal family");
  moments_cmd->add_option("id", moment_spec.id, "Catalog id");
  moments_cmd->add_option("--b", moment_spec.b, "Recurrence diagonal b_0,b_1,...");
  moments_cmd->add_option("--lambda", moment_spec.lambda, "Recurrence lambda_1,lambda_2,...");
  moments_cmd->add_option("--n", moment_spec.n, "Largest index n")->capture_default_str();

  ArraySpec poly_spec;
  std::size_t poly_n = 6;
  auto* poly_cmd = app.add_subcommand("poly", "Row polynomials P_0..P_n of an array");
  add_array_spec(*poly_cmd, poly_spec);
  poly_cmd->add_option("--n", poly_n, "Largest degree n")->capture_default_str();

  CfSpec cf_spec;
  auto* cf_cmd = app.add_subcommand("cf", "J-fraction coefficients of a moment sequence");
  cf_cmd->add_option("id", cf_spec.id, "Catalog id");
  cf_cmd->add_option("--seq", cf_spec.seq, "Comma-separated moments m_0,m_1,...");
  cf_cmd->add_option("--depth", cf_spec.depth, "Number of levels")->capture_default_str();

  PlotSpec plot_spec;
  auto* plot_cmd = app.add_subcommand("plotdata", "Sample f and f' for plotting (CSV)");
  plot_cmd->add_option("id", plot_spec.id, "Catalog id")->required();
  plot_cmd->add_option("--t-min", plot_spec.t_min)->capture_default_str();
  plot_cmd->add_option("--t-max", plot_spec.t_max)->capture_default_str();
  plot_cmd->add_option("--samples", plot_spec.samples)->capture_default_str();
  plot_cmd->add_option("--kind", plot_spec.kind, "curve: t,f,f'  parametric: f',f")->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog of sigmoid pairs");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*array_cmd) return cmd_array(global, array_spec, out);
    if (*produce_cmd) return cmd_produce(global, produce_spec, out);
    if (*hankel_cmd) return cmd_hankel(global, hankel_spec, out);
    if (*moments_cmd) return cmd_moments(global, moment_spec, out);
    if (*poly_cmd) return cmd_poly(global, poly_spec, poly_n, out);
    if (*cf_cmd) return cmd_cf(global, cf_spec, out);
    if (*plot_cmd) return cmd_plotdata(global, plot_spec, out);
    if (*list_cmd) return cmd_catalog_list(global, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace expriordan::cli
