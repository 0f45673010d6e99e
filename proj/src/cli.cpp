#include "weylres/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>

#include "weylres/fuzz.hpp"
#include "weylres/parse.hpp"
#include "weylres/resmap.hpp"
#include "weylres/theta.hpp"

namespace weylres {

namespace {

using nlohmann::json;

struct Result {
  std::string text;
  json checks = json::object();
  bool ok = true;
  std::string failure;  // printed instead of text when !ok
};

Result pow_check(const FieldSpec& f, const std::string& input) {
  const Poly g = parse_x_poly(f, input);
  const auto id = power_identity(g);
  const auto parts = p_decompose(g);
  const auto p = static_cast<std::uint64_t>(f.p());
  const bool coefficient_derivative = derivative(g, p - 1) == -parts[p - 1].stretch(p);
  Result r;
  r.checks = {{"brute_force", id.brute_force == id.derivative_form},
              {"coefficient_form", id.brute_force == id.coefficient_form && coefficient_derivative}};
  r.ok = id.holds() && coefficient_derivative;
  const std::string lhs = "(d+" + g.to_string() + ")^" + std::to_string(p);
  r.text = "OK: " + lhs + " = " + id.brute_force.to_string();
  r.failure = "FAIL: " + lhs + " = " + id.brute_force.to_string() + ", formula gives " + id.derivative_form.to_string();
  return r;
}

Result theta_cmd(const FieldSpec& f, const std::string& input) {
  const Poly image = theta(parse_x_poly(f, input));
  Result r;
  r.text = image.to_string();
  r.checks = {{"in_x_p", image.all_exponents_divisible_by(static_cast<std::uint64_t>(f.p()))}};
  r.ok = r.checks["in_x_p"].get<bool>();
  r.failure = "FAIL: theta(" + input + ") = " + r.text + " is not in K[x^p]";
  return r;
}

Result theta_inv_cmd(const FieldSpec& f, const std::string& input) {
  const Poly g = parse_x_poly(f, input);
  const Poly inv = theta_inverse(g);
  const bool oracle = theta_inverse_oracle(g) == inv;
  const bool round_trip = theta(inv) == g;
  Result r;
  r.text = inv.to_string();
  r.checks = {{"oracle", oracle}, {"round_trip", round_trip}};
  r.ok = oracle && round_trip;
  r.failure = "FAIL: theta_inverse(" + g.to_string() + ") = " + r.text + " disagrees with its checks";
  return r;
}

Result res_cmd(const FieldSpec& f, const std::string& input) {
  const WeylAut sigma = parse_weyl_input(f, input);
  const ResResult rr = res(sigma);
  Result r;
  r.text = to_string(rr.image);
  r.checks = {{"jacobian_one", rr.jacobian_value.is_one()}, {"degree_preserved", rr.degree_in == rr.degree_out}};
  return r;
}

Result res_inv_cmd(const FieldSpec& f, const std::string& input) {
  const CenterAut g = parse_center_input(f, input);
  const WeylAut sigma = res_inverse(g);
  const bool round_trip = res(sigma).image == g;
  Result r;
  r.text = to_string(sigma);
  r.checks = {{"round_trip", round_trip}};
  r.ok = round_trip;
  r.failure = "FAIL: res(" + r.text + ") differs from " + to_string(g);
  return r;
}

Result decompose_cmd(const FieldSpec& f, const std::string& input) {
  const CenterAut a = parse_center_input(f, input);
  const AutWord w = decompose(a);
  const bool realizes = realize_center(w) == a;
  Result r;
  r.text = to_string(w);
  r.checks = {{"realizes", realizes}};
  r.ok = realizes;
  r.failure = "FAIL: " + r.text + " does not realize " + to_string(a);
  return r;
}

Result compose_cmd(const FieldSpec& f, const std::string& a, const std::string& b) {
  Result r;
  // The centre reading wins when both inputs are valid on Z (e.g. "s").
  std::optional<parse_error> centre_error;
  try {
    const CenterAut ca = parse_center_input(f, a);
    const CenterAut cb = parse_center_input(f, b);
    r.text = to_string(compose(ca, cb));
    r.checks = {{"target", "Z"}};
    return r;
  } catch (const parse_error& e) {
    centre_error = e;
  }
  try {
    const WeylAut wa = parse_weyl_input(f, a);
    const WeylAut wb = parse_weyl_input(f, b);
    const WeylAut c = compose(wa, wb);
    r.text = to_string(c);
    r.checks = {{"target", "A_1"}, {"weyl_relation", preserves_weyl_relation(c)}};
    r.ok = preserves_weyl_relation(c);
    r.failure = "FAIL: " + r.text + " does not satisfy [d, x] = 1";
    return r;
  } catch (const parse_error&) {
    throw *centre_error;
  }
}

Result jacobian_cmd(const FieldSpec& f, const std::string& input) {
  const CenterAut a = parse_center_input(f, input);
  Result r;
  const ZPoly j = jacobian(a);
  r.text = j.to_string();
  r.checks = {{"in_gamma", in_gamma(a)}};
  return r;
}

Result fuzz_cmd(const FieldSpec& f, const std::string& suite, std::size_t count, std::uint64_t seed) {
  const FuzzReport report = run_fuzz(suite, f, count, seed);
  Result r;
  r.text = report.summary();
  r.failure = r.text;
  r.ok = report.ok();
  r.checks = {{"passed", report.passed}, {"total", report.total}};
  if (report.first_failure) r.checks["first_failure"] = report.first_failure->input;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl algebra A_1 in characteristic p: restriction to the centre and its inverse", "weylres"};
  app.require_subcommand(1);

  std::string field_text = "p=2";
  std::uint64_t seed = 0;
  std::size_t count = 100;
  bool as_json = false;
  app.add_option("--field", field_text, "Field: p=<prime>[,n=<deg>][,mod=<poly in g>]")->capture_default_str();
  app.add_option("--seed", seed, "Seed for fuzz suites")->capture_default_str();
  app.add_option("--count", count, "Number of fuzz cases")->capture_default_str();
  app.add_flag("--json", as_json, "Emit one JSON object instead of plain text");

  std::string input;
  std::string second;
  auto sub = [&](const char* name, const char* help, const char* what) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("input", input, what)->required();
    return s;
  };
  sub("pow-check", "Check (d+f)^p = d^p + f^(p-1) + f^p by brute force", "f in K[x]");
  sub("theta", "theta(f) = f^p + f^(p-1)", "f in K[x]");
  sub("theta-inv", "Closed-form inverse of theta", "g in K[x^p]");
  sub("res", "Restriction of an A_1 automorphism to the centre", "word or (img x ; img d)");
  sub("res-inv", "Inverse of res on automorphisms with Jacobian 1", "word or (img X ; img Y)");
  sub("decompose", "Tame decomposition of an automorphism of K[X,Y]", "word or (img X ; img Y)");
  sub("jacobian", "Jacobian of an endomorphism of K[X,Y]", "word or (img X ; img Y)");
  CLI::App* compose_sub = sub("compose", "a after b, on Z or on A_1", "a");
  compose_sub->add_option("second", second, "b")->required();
  CLI::App* fuzz_sub = app.add_subcommand("fuzz", "Randomized verification suite");
  fuzz_sub->fallthrough();
  fuzz_sub->add_option("suite", input, "Suite name")->required()->check(CLI::IsMember(fuzz_suites()));

  std::vector<std::string> argv_store{"weylres"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string kind = app.get_subcommands().front()->get_name();
  const FieldSpec* field = nullptr;
  Result result;
  try {
    field = &parse_field(field_text);
    if (kind == "pow-check") result = pow_check(*field, input);
    if (kind == "theta") result = theta_cmd(*field, input);
    if (kind == "theta-inv") result = theta_inv_cmd(*field, input);
    if (kind == "res") result = res_cmd(*field, input);
    if (kind == "res-inv") result = res_inv_cmd(*field, input);
    if (kind == "decompose") result = decompose_cmd(*field, input);
    if (kind == "compose") result = compose_cmd(*field, input, second);
    if (kind == "jacobian") result = jacobian_cmd(*field, input);
    if (kind == "fuzz") result = fuzz_cmd(*field, input, count, seed);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const algebra_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (as_json) {
    json j = {{"kind", kind}, {"field", field->to_string()}, {"result", result.ok ? result.text : result.failure},
              {"checks", result.checks}};
    out << j.dump() << '\n';
  } else {
    out << (result.ok ? result.text : result.failure) << '\n';
  }
  return result.ok ? 0 : 1;
}

}  // namespace weylres
