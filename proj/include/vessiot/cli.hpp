#pragma once

// Command-line surface. argv is parsed by CLI11 into a CommandSpec, and
// run_command() turns a spec into output text and an exit status:
//   0  success
//   2  a verification came out false (check returned false, NotASolution, audit failed)
//   1  error; the stable error code is printed ("error: SyntaxError: ...")
//
// With --format record the output is one JSON document carrying
// "format_version".

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vessiot/automorphic.hpp"
#include "vessiot/classical_forms.hpp"
#include "vessiot/darboux.hpp"
#include "vessiot/elliptic.hpp"
#include "vessiot/format.hpp"
#include "vessiot/homspace.hpp"
#include "vessiot/parse.hpp"

namespace vessiot {

enum class OutputFormat { Text, Record };

struct CommandSpec {
  std::vector<std::string> command;           // e.g. {"check", "integral"}
  std::map<std::string, std::string> inputs;  // option name without dashes -> value
  OutputFormat format = OutputFormat::Text;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;  // standard output
  std::string error;   // standard error
};

namespace cli {

using nlohmann::json;

struct Report {
  std::string text;
  json record = json::object();
  bool verified = true;
};

class Inputs {
 public:
  explicit Inputs(const std::map<std::string, std::string>& values) : values_(values) {}

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw Error(ErrorCode::InvalidArgument, "missing --" + key);
    return it->second;
  }

  RatFunc ratfunc(const std::string& key) const { return parse_ratfunc(text(key)); }
  GQ constant(const std::string& key) const { return parse_constant(text(key)); }
  MatK matrix(const std::string& key) const { return parse_matrix(text(key)); }

  std::size_t count(const std::string& key) const {
    const std::string& s = text(key);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-')
      throw Error(ErrorCode::InvalidArgument, "--" + key + " expects a nonnegative integer, got '" + s + "'");
    return v;
  }

  // "p1,p2,...,pn", 1-based.
  std::vector<std::size_t> permutation(const std::string& key) const {
    std::vector<std::size_t> out;
    std::stringstream ss(text(key));
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto b = part.find_first_not_of(' ');
      const auto e = part.find_last_not_of(' ');
      if (b == std::string::npos) throw Error(ErrorCode::InvalidArgument, "empty entry in --" + key);
      const std::string item = part.substr(b, e - b + 1);
      if (item.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "--" + key + " expects indices, got '" + item + "'");
      out.push_back(std::stoul(item));
    }
    return out;
  }

 private:
  const std::map<std::string, std::string>& values_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline MatK field_matrix(const Inputs& in) {
  MatK a = in.matrix("A");
  require_square(a, "automorphic field");
  if (in.has("permute")) a = permute_basis(a, in.permutation("permute"));
  return a;
}

inline Matrix<MPoly<GQ>> symbolic_matrix(const Inputs& in, std::size_t& n) {
  n = in.count("symbolic");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "--symbolic needs n >= 2");
  Matrix<MPoly<GQ>> a = symbolic_field(n);
  if (in.has("permute")) a = permute_basis(a, in.permutation("permute"));
  return a;
}

inline std::string monomial_or_one(const Monomial& m, std::span<const std::string> names) {
  std::string s = detail::monomial_text(m, names);
  return s.empty() ? "1" : s;
}

// Lists the terms where a classical display and the generated system differ.
inline Report audit_report(const classical::SystemAudit& audit, const std::vector<std::string>& names,
                           const std::vector<std::string>& field_names) {
  Report r;
  json diffs = json::array();
  r.text += "audit against the classical display:\n";
  for (const auto& d : audit.differences) {
    const std::string eq = dotted(names[d.equation]);
    const std::string mono = monomial_or_one(d.monomial, names);
    const std::string shown = to_string(d.displayed, field_names);
    const std::string gen = to_string(d.generated, field_names);
    r.text += "  " + eq + ", term " + mono + ": displayed " + shown + ", generated " + gen + "\n";
    diffs.push_back({{"equation", names[d.equation]}, {"monomial", mono}, {"displayed", shown}, {"generated", gen}});
  }
  if (audit.differences.empty()) r.text += "  no differences\n";
  json disp = json::array();
  json gen = json::array();
  for (std::size_t k = 0; k < audit.generated_residuals.size(); ++k) {
    disp.push_back(to_string(audit.displayed_residuals[k]));
    gen.push_back(to_string(audit.generated_residuals[k]));
    r.text += "  residual on witness, " + dotted(names[k]) + ": displayed " + to_string(audit.displayed_residuals[k]) +
              ", generated " + to_string(audit.generated_residuals[k]) + "\n";
  }
  r.text += "  generated system satisfied by witness: " + yes_no(audit.generated_satisfied) + "\n";
  r.record = {{"differences", diffs},
              {"displayed_residuals", disp},
              {"generated_residuals", gen},
              {"generated_satisfied", audit.generated_satisfied}};
  r.verified = audit.generated_satisfied;
  return r;
}

template <class C, class CoeffText>
Report system_report(const PolySystem<C>& sys, CoeffText coeff_text) {
  Report r;
  r.text = format_system(sys, [&](const MPoly<C>& p) { return to_string(p, sys.unknowns, coeff_text); });
  r.record = system_record(sys, coeff_text);
  return r;
}

inline Report generated_system(const Inputs& in, bool flag) {
  const std::size_t m = flag ? 0 : in.count("m");
  if (in.has("symbolic")) {
    std::size_t n = 0;
    const Matrix<MPoly<GQ>> a = symbolic_matrix(in, n);
    const std::vector<std::string> names = symbolic_field_names(n);
    const auto sys = flag ? flag_polynomials(a) : riccati_polynomials(a, m);
    Report r = system_report(sys, [&](const MPoly<GQ>& c) { return to_string(c, names); });
    if (in.has("audit")) {
      if (n != 3 || in.has("permute"))
        throw Error(ErrorCode::InvalidArgument, "--audit applies to the unpermuted rank 3 system");
      const MatK witness = classical::default_witness_rank3();
      const auto audit = flag ? classical::audit_flag_rank3(witness) : classical::audit_riccati_rank3(m, witness);
      const std::vector<std::string> display_names =
          flag ? std::vector<std::string>{"x", "y", "z"}
               : (m == 1 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"ξ", "η"});
      Report a = audit_report(audit, display_names, names);
      r.text += a.text;
      r.record["audit"] = a.record;
      r.verified = a.verified;
    }
    return r;
  }
  if (in.has("audit")) throw Error(ErrorCode::InvalidArgument, "--audit needs --symbolic 3");
  const MatK a = field_matrix(in);
  const auto sys = flag ? flag_polynomials(a) : riccati_polynomials(a, m);
  return system_report(sys, [](const RatFunc& c) { return to_string(c); });
}

inline Report reduction_report(const Reduction& red, const std::string& shape_name, bool shape_ok) {
  Report r;
  r.text = "tau = " + to_string(red.tau.matrix()) + "\n" + "B = " + to_string(red.b.matrix()) + "\n" + shape_name +
           ": " + yes_no(shape_ok) + "\n";
  if (red.diagnostic) r.text += *red.diagnostic + "\n";
  r.record = {{"tau", matrix_record(red.tau.matrix())},
              {"B", matrix_record(red.b.matrix())},
              {shape_name, shape_ok},
              {"solution", red.solution}};
  if (red.diagnostic) r.record["diagnostic"] = *red.diagnostic;
  r.verified = red.solution;
  return r;
}

inline Report reduce_plane(const Inputs& in) {
  const MatK a = field_matrix(in);
  const MatK lam = in.matrix("lambda");
  const std::size_t m = lam.cols();
  const Reduction red = reduce_by_plane(AutomorphicField(a), PlaneCoords(a.rows(), m, lam));
  return reduction_report(red, "block_upper", is_in_subalgebra(red.b, shape::BlockUpper{m}));
}

inline Report reduce_flag(const Inputs& in) {
  const MatK a = field_matrix(in);
  const Reduction red = reduce_by_flag(AutomorphicField(a), FlagCoords(in.matrix("lambda")));
  return reduction_report(red, "upper_triangular", is_in_subalgebra(red.b, shape::UpperTriangular{}));
}

inline Report verdict(bool value) {
  Report r;
  r.text = value ? "true\n" : "false\n";
  r.record = {{"holds", value}};
  r.verified = value;
  return r;
}

inline WeierstrassCurve curve_input(const Inputs& in) { return curve_new(in.constant("g2"), in.constant("g3")); }

inline Report check(const std::string& kind, const Inputs& in) {
  if (kind == "integral") return verdict(check_integral_solution(in.ratfunc("a"), in.ratfunc("b")));
  if (kind == "exponential") return verdict(check_exponential_solution(in.ratfunc("a"), in.ratfunc("b")));
  if (kind == "automorphic")
    return verdict(check_automorphic_solution(AutomorphicField(field_matrix(in)), GroupElement(in.matrix("sigma"))));
  if (kind == "riccati") {
    const MatK a = field_matrix(in);
    const MatK lam = in.matrix("lambda");
    const std::size_t m = lam.cols();
    return verdict(riccati_check_solution(riccati_generate(AutomorphicField(a), m), PlaneCoords(a.rows(), m, lam)));
  }
  if (kind == "flag")
    return verdict(flag_check_solution(flag_generate(AutomorphicField(field_matrix(in))), FlagCoords(in.matrix("lambda"))));
  if (kind == "weierstrass")
    return verdict(check_weierstrass_solution(curve_input(in), in.ratfunc("a"), in.ratfunc("b")));
  throw Error(ErrorCode::InvalidArgument, "unknown check '" + kind + "'");
}

inline Report so3(const Inputs& in) {
  const SO3Field f{in.ratfunc("a"), in.ratfunc("b"), in.ratfunc("c")};
  const RiccatiCoeffs<RatFunc> q = so3_to_riccati(f);
  using P = MPoly<RatFunc>;
  const P x = P::variable(0);
  const P rhs = P(q.q0) + P(q.q1) * x + P(q.q2) * x * x;
  const std::vector<std::string> names{"x"};
  Report r;
  r.text = "ẋ = " + format_rhs(rhs, names) + "\n";
  r.record = {{"q0", to_string(q.q0)},
              {"q1", to_string(q.q1)},
              {"q2", to_string(q.q2)},
              {"sl2", matrix_record(so3_algebra_to_sl2(f))}};
  r.text += "sl2 image = " + to_string(so3_algebra_to_sl2(f)) + "\n";
  if (in.has("point")) {
    const std::vector<RatFunc> coords = parse_list(in.text("point"));
    if (coords.size() != 3) throw Error(ErrorCode::InvalidArgument, "--point expects x0,x1,x2");
    for (const auto& c : coords)
      if (!c.is_constant()) throw Error(ErrorCode::InvalidArgument, "--point expects constants");
    const SpherePoint<GQ> p(coords[0].constant_value(), coords[1].constant_value(), coords[2].constant_value());
    const GQ t0 = in.has("t0") ? in.constant("t0") : GQ(0);
    const PushforwardReport pf = so3_pushforward(f, p, t0);
    r.text += "pushforward at t = " + to_string(t0) + ": chain rule " + to_string(pf.chain_rule) + ", riccati " +
              to_string(pf.riccati) + ", agree: " + yes_no(pf.agree) + "\n";
    r.record["pushforward"] = {
        {"t0", to_string(t0)}, {"chain_rule", to_string(pf.chain_rule)}, {"riccati", to_string(pf.riccati)},
        {"agree", pf.agree}};
    r.verified = pf.agree;
  }
  return r;
}

inline CurvePoint point_input(const Inputs& in, const std::string& key) {
  if (in.text(key) == "inf") return CurvePoint::infinity();
  const std::vector<RatFunc> xy = parse_list(in.text(key));
  if (xy.size() != 2) throw Error(ErrorCode::InvalidArgument, "--" + key + " expects x,y or inf");
  return CurvePoint::affine(xy[0], xy[1]);
}

inline json point_record(const CurvePoint& p) {
  if (p.is_infinity()) return "inf";
  return json::array({to_string(p.x()), to_string(p.y())});
}

inline Report elliptic(const std::string& action, const Inputs& in) {
  const WeierstrassCurve e = curve_input(in);
  Report r;
  if (action == "curve") {
    const InvariantFieldReport f = invariant_field_check(e);
    const std::vector<std::string> names{"x", "y"};
    r.text = "y^2 = 4*x^3 - (" + to_string(e.g2()) + ")*x - (" + to_string(e.g3()) + ")\n" +
             "discriminant = " + to_string(e.discriminant()) + "\n" +
             "v = y*d/dx + (12*x^2 - g2)*d/dy: residual " + to_string(f.displayed_residual, names) + ", tangent: " +
             yes_no(f.displayed_tangent) + "\n" + "v = y*d/dx + (6*x^2 - g2/2)*d/dy: residual " +
             to_string(f.halved_residual, names) + ", tangent: " + yes_no(f.halved_tangent) + "\n";
    r.record = {{"g2", to_string(e.g2())},
                {"g3", to_string(e.g3())},
                {"discriminant", to_string(e.discriminant())},
                {"unhalved_field", {{"residual", to_string(f.displayed_residual, names)}, {"tangent", f.displayed_tangent}}},
                {"halved_field", {{"residual", to_string(f.halved_residual, names)}, {"tangent", f.halved_tangent}}}};
    r.verified = f.halved_tangent;
    return r;
  }
  if (action == "add") {
    const CurvePoint s = chord_tangent_add(e, point_input(in, "P"), point_input(in, "Q"));
    r.text = "P + Q = " + to_string(s) + "\n";
    r.record = {{"sum", point_record(s)}};
    return r;
  }
  if (action == "check") return verdict(check_weierstrass_solution(e, in.ratfunc("a"), in.ratfunc("b")));
  if (action == "addition") {
    const RatFunc a = in.ratfunc("a");
    const RatFunc b = in.ratfunc("b");
    const RatFunc db = in.has("db") ? in.ratfunc("db") : b.derivative();
    const GQ x0 = in.constant("x0");
    const GQ y0 = in.constant("y0");
    const AdditionResult sum = solution_addition(e, a, b, db, x0, y0);
    const CurvePoint got = CurvePoint::affine(sum.xi, sum.eta);
    const CurvePoint oracle =
        chord_tangent_add(e, CurvePoint::affine(b, db / a), CurvePoint::affine(RatFunc(x0), RatFunc(y0)));
    const bool on = on_curve(e, got);
    const bool agree = got == oracle;
    r.text = "xi = " + to_string(sum.xi) + "\n" + "eta = " + to_string(sum.eta) + "\n" +
             "(xi, eta) on curve: " + yes_no(on) + "\n" + "agrees with chord-tangent sum: " + yes_no(agree) + "\n";
    r.record = {{"xi", to_string(sum.xi)}, {"eta", to_string(sum.eta)}, {"on_curve", on}, {"agrees", agree}};
    r.verified = on && agree;
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown elliptic action '" + action + "'");
}

inline Report pendulum(const Inputs& in) {
  const PendulumNormalForm nf = pendulum_normal_form(in.constant("h"));
  const bool ok = nf.audit.identity_holds && nf.audit.matches_closed_form;
  Report r;
  r.text = "g2 = " + to_string(nf.curve.g2()) + "\n" + "g3 = " + to_string(nf.curve.g3()) + "\n" +
           (ok ? "audit OK\n" : "audit FAILED\n");
  r.record = {{"g2", to_string(nf.curve.g2())},
              {"g3", to_string(nf.curve.g3())},
              {"audit", {{"identity_holds", nf.audit.identity_holds},
                         {"matches_closed_form", nf.audit.matches_closed_form}}}};
  r.verified = ok;
  return r;
}

inline Report dispatch(const CommandSpec& spec) {
  const Inputs in(spec.inputs);
  const auto& c = spec.command;
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "no command given");
  const std::string& head = c[0];
  const std::string tail = c.size() > 1 ? c[1] : std::string();
  if (head == "riccati") return generated_system(in, false);
  if (head == "flag") return generated_system(in, true);
  if (head == "reduce-plane") return reduce_plane(in);
  if (head == "reduce-flag") return reduce_flag(in);
  if (head == "check") return check(tail, in);
  if (head == "so3") return so3(in);
  if (head == "elliptic") return elliptic(tail, in);
  if (head == "pendulum") return pendulum(in);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + head + "'");
}

inline std::string command_name(const CommandSpec& spec) {
  std::string name;
  for (const auto& part : spec.command) name += (name.empty() ? "" : " ") + part;
  return name;
}

}  // namespace cli

inline CommandResult run_command(const CommandSpec& spec) {
  using nlohmann::json;
  CommandResult result;
  const bool record = spec.format == OutputFormat::Record;
  try {
    cli::Report r = cli::dispatch(spec);
    result.exit_code = r.verified ? 0 : 2;
    if (record) {
      json doc = {{"format_version", kFormatVersion},
                  {"command", cli::command_name(spec)},
                  {"inputs", spec.inputs},
                  {"result", r.record},
                  {"verified", r.verified}};
      result.output = doc.dump(2) + "\n";
    } else {
      result.output = r.text;
    }
  } catch (const Error& e) {
    result.exit_code = 1;
    const std::string code(code_name(e.code()));
    result.error = "error: " + code + ": " + e.what() + "\n";
    if (record) {
      json doc = {{"format_version", kFormatVersion},
                  {"command", cli::command_name(spec)},
                  {"inputs", spec.inputs},
                  {"error", {{"code", code}, {"message", e.what()}}}};
      result.output = doc.dump(2) + "\n";
    }
  }
  return result;
}

namespace cli {

inline constexpr const char* kGrammarHelp =
    "Expressions over Q(i)(t): integers, 2i, i, t, + - * / ^ and parentheses. "
    "'^' takes a nonnegative integer literal and binds tighter than unary minus (-t^2 = -(t^2)). "
    "Matrices: \"[a, b; c, d]\".";

class Parser {
 public:
  Parser() : app_("Exact Lie-Vessiot and automorphic systems over Q(i)(t).\n" + std::string(kGrammarHelp)) {
    app_.require_subcommand(1);
    app_.set_config("--input", "", "read options from a TOML/INI file");
    app_.add_option("--format", format_, "output format")->check(CLI::IsMember({"text", "record"}));

    auto* riccati = command({"riccati"}, "matrix Riccati system of an automorphic field on m-planes");
    option(riccati, {"riccati"}, "A", "field matrix");
    option(riccati, {"riccati"}, "symbolic", "general n x n field with entries a_ij");
    option(riccati, {"riccati"}, "m", "plane dimension", true);
    option(riccati, {"riccati"}, "permute", "basis permutation p1,...,pn (1-based)");
    flag(riccati, {"riccati"}, "audit", "compare with the classical rank 3 display");

    auto* flag_cmd = command({"flag"}, "flag equation of an automorphic field");
    option(flag_cmd, {"flag"}, "A", "field matrix");
    option(flag_cmd, {"flag"}, "symbolic", "general n x n field with entries a_ij");
    option(flag_cmd, {"flag"}, "permute", "basis permutation p1,...,pn (1-based)");
    flag(flag_cmd, {"flag"}, "audit", "compare with the classical rank 3 display");

    for (const char* name : {"reduce-plane", "reduce-flag"}) {
      auto* sub = command({name}, std::string(name) == "reduce-plane"
                                      ? "gauge to block upper form using a solution of the Riccati system"
                                      : "gauge to upper triangular form using a solution of the flag equation");
      option(sub, {name}, "A", "field matrix", true);
      option(sub, {name}, "lambda", "coordinates of the solution", true);
      option(sub, {name}, "permute", "basis permutation p1,...,pn (1-based)");
    }

    auto* check_cmd = app_.add_subcommand("check", "verify a candidate solution");
    check_cmd->require_subcommand(1);
    const std::vector<std::pair<std::string, std::vector<std::string>>> checks{
        {"integral", {"a", "b"}},           {"exponential", {"a", "b"}}, {"automorphic", {"A", "sigma"}},
        {"riccati", {"A", "lambda"}},       {"flag", {"A", "lambda"}},   {"weierstrass", {"g2", "g3", "a", "b"}}};
    for (const auto& [kind, keys] : checks) {
      auto* sub = check_cmd->add_subcommand(kind, "check a " + kind + " solution");
      sub->callback([this, k = kind] { command_ = {"check", k}; });
      for (const auto& key : keys) option(sub, {"check", kind}, key, key, true);
      if (kind == "automorphic" || kind == "riccati" || kind == "flag")
        option(sub, {"check", kind}, "permute", "basis permutation p1,...,pn (1-based)");
    }

    auto* so3_cmd = command({"so3"}, "Riccati equation induced by an so(3) field (a, b, c)");
    for (const char* key : {"a", "b", "c"}) option(so3_cmd, {"so3"}, key, "field entry", true);
    option(so3_cmd, {"so3"}, "point", "sphere point x0,x1,x2 for the pushforward check");
    option(so3_cmd, {"so3"}, "t0", "time for the pushforward check (default 0)");

    auto* ell = app_.add_subcommand("elliptic", "Weierstrass curves y^2 = 4x^3 - g2 x - g3");
    ell->require_subcommand(1);
    const std::vector<std::pair<std::string, std::vector<std::string>>> actions{
        {"curve", {}}, {"add", {"P", "Q"}}, {"check", {"a", "b"}}, {"addition", {"a", "b", "x0", "y0"}}};
    for (const auto& [action, keys] : actions) {
      auto* sub = ell->add_subcommand(action, "elliptic " + action);
      sub->callback([this, a = action] { command_ = {"elliptic", a}; });
      option(sub, {"elliptic", action}, "g2", "curve invariant", true);
      option(sub, {"elliptic", action}, "g3", "curve invariant", true);
      for (const auto& key : keys) option(sub, {"elliptic", action}, key, key, true);
      if (action == "addition") option(sub, {"elliptic", action}, "db", "derivative of b (default: computed)");
    }

    auto* pend = command({"pendulum"}, "Weierstrass normal form of the pendulum at energy h");
    pend->set_help_flag("--help", "print this help message and exit");
    option(pend, {"pendulum"}, "h", "energy", true);
  }

  // Returns the exit code of a parse failure, or -1 when a spec is ready.
  int parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app_.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app_.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.get_name() << ": " << e.what() << "\n";
      return 1;
    }
    return -1;
  }

  CommandSpec spec() const {
    CommandSpec s;
    s.command = command_;
    s.format = format_ == "record" ? OutputFormat::Record : OutputFormat::Text;
    const auto path = command_;
    for (const auto& b : bindings_) {
      if (b.path != path || b.opt->count() == 0) continue;
      s.inputs[b.key] = b.is_flag ? "true" : *b.value;
    }
    return s;
  }

 private:
  struct Binding {
    std::vector<std::string> path;
    std::string key;
    CLI::Option* opt;
    std::shared_ptr<std::string> value;
    bool is_flag;
  };

  CLI::App* command(std::vector<std::string> path, const std::string& desc) {
    auto* sub = app_.add_subcommand(path[0], desc);
    sub->callback([this, path] { command_ = path; });
    return sub;
  }

  void option(CLI::App* sub, std::vector<std::string> path, const std::string& key, const std::string& desc,
              bool required = false) {
    auto value = std::make_shared<std::string>();
    CLI::Option* opt = sub->add_option("--" + key, *value, desc);
    if (required) opt->required();
    bindings_.push_back({std::move(path), key, opt, std::move(value), false});
  }

  void flag(CLI::App* sub, std::vector<std::string> path, const std::string& key, const std::string& desc) {
    CLI::Option* opt = sub->add_flag("--" + key, desc);
    bindings_.push_back({std::move(path), key, opt, nullptr, true});
  }

  CLI::App app_;
  std::string format_ = "text";
  std::vector<std::string> command_;
  std::vector<Binding> bindings_;
};

}  // namespace cli

// Full command-line entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  cli::Parser parser;
  if (const int code = parser.parse(argc, argv, out, err); code >= 0) return code;
  const CommandResult r = run_command(parser.spec());
  out << r.output;
  err << r.error;
  return r.exit_code;
}

}  // namespace vessiot
