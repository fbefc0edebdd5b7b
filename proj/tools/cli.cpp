#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qplane/io.hpp"
#include "qplane/table1.hpp"

namespace qplane::cli {
namespace {

struct Options {
  bool json = false;
  long fit_cap = OrderCaps{}.fit;
  long torsion_cap = OrderCaps{}.torsion;
  std::string field;  // minimal polynomial; the generator is its only letter

  std::string file;
  std::string cubic;
  std::string type;
  std::string alpha;
  std::string ec_point;
  std::string emit;
  std::string lambda;
  std::string op;
  std::string points;
  std::optional<long> cap;
};

std::optional<DeclaredField> declared(const std::string& min_poly) {
  if (min_poly.empty()) return std::nullopt;
  std::set<std::string> names;
  for (std::size_t i = 0; i < min_poly.size();) {
    if (std::isalpha(static_cast<unsigned char>(min_poly[i]))) {
      std::size_t j = i;
      while (j < min_poly.size() && (std::isalnum(static_cast<unsigned char>(min_poly[j])) || min_poly[j] == '_')) ++j;
      names.insert(min_poly.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  if (names.size() != 1) throw InputError("--field must be a polynomial in exactly one generator: " + min_poly);
  return declare_field(*names.begin(), min_poly);
}

ParseContext context_for(const std::optional<DeclaredField>& f) { return xyz_context(f ? &*f : nullptr); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Vec3 parse_triple(const std::string& text, const ParseContext& ctx) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InputError("expected a point \"a,b,c\", got \"" + text + "\"");
  return {parse_scalar(parts[0], ctx), parse_scalar(parts[1], ctx), parse_scalar(parts[2], ctx)};
}

OrderCaps caps_of(const Options& o) { return {o.fit_cap, o.torsion_cap}; }

void print(const Json& j, const Options& o, std::ostream& out) {
  if (o.json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

Json classify_cmd(const Options& o) {
  if (o.cubic.empty() == o.file.empty()) throw InputError("classify takes exactly one of <file> or --cubic");
  if (!o.cubic.empty()) {
    const auto f = declared(o.field);
    return to_json(classify_cubic(parse_form(o.cubic, context_for(f))));
  }
  const AlgebraFile a = read_algebra_file(o.file);
  const PointScheme e = point_scheme(a.algebra);
  if (e.is_plane) {
    CubicClassification c;
    c.type = CubicType::P;
    return to_json(c);
  }
  return to_json(classify_cubic(e.cubic));
}

Json order_cmd(const Options& o) {
  const AlgebraFile a = read_algebra_file(o.file);
  const SigmaSystem s = SigmaSystem::from_algebra(a.algebra);
  const NormResult n = sigma_norm(s, caps_of(o));
  Json j;
  j["type"] = to_string(s.classification().type);
  j["sigma_norm"] = to_json(n);
  j["sigma_order"] = to_json(sigma_order(s, caps_of(o)));
  if (n.witness) j["witness"] = to_json(n.witness->matrix());
  return j;
}

Json verdict_cmd(const Options& o) { return to_json(verdict(read_algebra_file(o.file).algebra, caps_of(o))); }

Json table1_cmd(const Options& o) {
  const Table1Row row = parse_table1_row(o.type);
  const auto f = declared(o.field);
  const ParseContext ctx = context_for(f);
  Table1Params params;
  if (!o.alpha.empty()) params.alpha = parse_scalar(o.alpha, ctx);
  if (!o.ec_point.empty()) params.ec_point = parse_triple(o.ec_point, ctx);
  const Json algebra = algebra_to_json(table1(row, params));
  if (o.emit.empty()) return algebra;
  std::ofstream file(o.emit);
  if (!file) throw InputError("cannot write " + o.emit);
  file << algebra.dump(2) << '\n';
  if (!file) throw InputError("cannot write " + o.emit);
  Json j;
  j["row"] = to_string(row);
  j["written"] = o.emit;
  return j;
}

Json ec_cmd(const Options& o) {
  const auto f = declared(o.field);
  const ParseContext ctx = context_for(f);
  if (o.lambda.empty()) throw InputError("ec needs --lambda");
  const CurvePtr curve = HesseCurve::create(parse_scalar(o.lambda, ctx));
  std::vector<HessePoint> pts;
  if (!o.points.empty())
    for (const auto& p : split(o.points, ';')) pts.emplace_back(curve, ProjPoint(parse_triple(p, ctx)));
  Json j;
  j["lambda"] = curve->lambda().to_string();
  if (o.op == "add") {
    if (pts.size() != 2) throw InputError("--op add needs --points \"p;q\"");
    j["sum"] = to_json(ec_add(pts[0], pts[1]).point());
  } else if (o.op == "order") {
    if (pts.size() != 1) throw InputError("--op order needs exactly one point");
    j["order"] = to_json(point_order(pts[0], o.cap.value_or(o.torsion_cap)));
  } else if (o.op == "torsion3") {
    Json list = Json::array();
    for (const auto& p : three_torsion(curve)) list.push_back(to_json(p.point()));
    j["points"] = list;
  } else {
    throw InputError("--op must be add, order or torsion3");
  }
  return j;
}

Json hessian_cmd(const Options& o) {
  const auto f = declared(o.field);
  const TernaryForm g = parse_form(o.cubic, context_for(f));
  Json j;
  j["hessian"] = hessian(g).to_string();
  j["second_hessian_zero"] = second_hessian_is_zero(g);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Point schemes, automorphism orders and center verdicts for 3-dimensional quantum polynomial algebras",
               "qplane");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of key: value lines");
  app.add_option("--fit-cap", o.fit_cap, "Largest exponent tried when fitting sigma^i")->check(CLI::PositiveNumber);
  app.add_option("--torsion-cap", o.torsion_cap, "Largest point order searched on a Hesse curve")
      ->check(CLI::PositiveNumber);
  app.add_option("--field", o.field, "Minimal polynomial of a number field generator, e.g. \"w^2 + w + 1\"");

  auto* classify = app.add_subcommand("classify", "Classify a cubic, or the point scheme of an algebra file");
  classify->add_option("file", o.file, "Algebra JSON file");
  classify->add_option("--cubic", o.cubic, "Cubic form in x, y, z");

  auto* order = app.add_subcommand("order", "||sigma|| and |sigma| of an algebra file");
  order->add_option("file", o.file, "Algebra JSON file")->required();

  auto* verdict_sc = app.add_subcommand("verdict", "Full report for an algebra file");
  verdict_sc->add_option("file", o.file, "Algebra JSON file")->required();

  auto* table = app.add_subcommand("table1", "Emit a standard algebra of the given type as an algebra file");
  table->add_option("--type", o.type, "P, S1, S3, S', T1, T3, T', NC, CC, TL, WL or EC")->required();
  table->add_option("--alpha", o.alpha, "Row parameter");
  table->add_option("--ec-point", o.ec_point, "EC row point \"a,b,c\"");
  table->add_option("--emit", o.emit, "Write the algebra file here instead of stdout");

  auto* ec = app.add_subcommand("ec", "Group law on x^3 + y^3 + z^3 - lambda*x*y*z");
  ec->add_option("--lambda", o.lambda, "Curve parameter")->required();
  ec->add_option("--op", o.op, "add, order or torsion3")->required();
  ec->add_option("--points", o.points, "\"a,b,c;d,e,f\"");
  ec->add_option("--cap", o.cap, "Order search cap (defaults to --torsion-cap)")->check(CLI::PositiveNumber);

  auto* hess = app.add_subcommand("hessian", "Hessian of a cubic and whether its own Hessian vanishes");
  hess->add_option("--cubic", o.cubic, "Cubic form in x, y, z")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()) << '\n';
    return 1;
  }

  try {
    Json result;
    if (*classify) result = classify_cmd(o);
    else if (*order) result = order_cmd(o);
    else if (*verdict_sc) result = verdict_cmd(o);
    else if (*table) result = table1_cmd(o);
    else if (*ec) result = ec_cmd(o);
    else result = hessian_cmd(o);
    print(result, o, out);
    return 0;
  } catch (const DegreeCapExceeded& e) {
    err << error_json("degree-cap", e.what()) << '\n';
    return 1;
  } catch (const InputError& e) {
    err << error_json("input", e.what()) << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << error_json("invariant", e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()) << '\n';
    return 2;
  }
}

}  // namespace qplane::cli
