#include "claws/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

#include "claws/conslaw.hpp"
#include "claws/error.hpp"
#include "claws/session.hpp"
#include "claws/symmetry.hpp"
#include "claws/syntax.hpp"

namespace claws {

namespace {

constexpr int kComputed = 0;
constexpr int kVerdictFalse = 1;
constexpr int kUsage = 2;

// Flat, ordered list of named fields; rendered as "key = value" lines or as a
// JSON object with the same keys.
class Report {
 public:
  void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const DiffExpr& e) { add(std::move(key), to_string(e)); }
  void add(std::string key, bool b) { add(std::move(key), std::string(b ? "true" : "false")); }

  void write(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::object();
      for (const auto& [k, v] : fields_) doc[k] = v;
      out << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : fields_) out << k << " = " << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct AnsatzFlags {
  std::optional<int> order;
  std::optional<int> jet_degree;
  std::optional<int> t_degree;
  std::optional<int> x_degree;

  void attach(CLI::App* cmd) {
    cmd->add_option("--order", order, "maximum jet order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--jet-degree", jet_degree, "maximum jet degree")->check(CLI::NonNegativeNumber);
    cmd->add_option("--t-degree", t_degree, "maximum power of t")->check(CLI::NonNegativeNumber);
    cmd->add_option("--x-degree", x_degree, "maximum power of x")->check(CLI::NonNegativeNumber);
  }

  Ansatz resolve(const Ansatz& defaults) const {
    return {order.value_or(defaults.max_order), jet_degree.value_or(defaults.max_jet_degree),
            t_degree.value_or(defaults.max_t_degree), x_degree.value_or(defaults.max_x_degree)};
  }
};

std::string describe(const Ansatz& a) {
  return "order=" + std::to_string(a.max_order) + " jet-degree=" + std::to_string(a.max_jet_degree) +
         " t-degree=" + std::to_string(a.max_t_degree) + " x-degree=" + std::to_string(a.max_x_degree);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Invariant: return "Invariant";
    case Verdict::Homogeneous: return "Homogeneous";
    case Verdict::NotHomogeneous: return "NotHomogeneous";
  }
  return "?";
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (const Rational& v : values) s += (s.empty() ? "" : ", ") + to_string(v);
  return s;
}

// Monic factor in the eigenvalue variable, highest power first; "none" when
// every eigenvalue is rational.
std::string polynomial(const std::vector<Rational>& coeffs) {
  if (coeffs.size() <= 1) return "none";
  std::string s;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    std::string mag = to_string(abs(c));
    std::string power = k == 0 ? "" : (k == 1 ? "lambda" : "lambda^" + std::to_string(k));
    std::string term = k == 0 ? mag : (abs(c) == 1 ? power : mag + "*" + power);
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s;
}

struct Options {
  std::string session_path;
  std::string format = "text";
  std::string T, X, P, Q, tau, xi, eta;
  std::vector<std::string> basis;
  bool strict_off_e = false;
  AnsatzFlags ansatz;
};

void add_basis(Report& report, const std::vector<DiffExpr>& basis) {
  report.add("dimension", std::to_string(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    report.add("basis[" + std::to_string(i) + "]", basis[i]);
}

int dispatch(const std::string& command, const Options& opt, const Session& s, Report& report) {
  const NormalPDE& pde = s.pde;
  report.add("command", command);
  report.add("G", pde.G());

  if (command == "check-conslaw") {
    const ConservedCurrent cur{s.parse(opt.T), s.parse(opt.X)};
    report.add("T", cur.T);
    report.add("X", cur.X);
    report.add("divergence", restrict_to_solutions(divergence(cur), pde));
    const bool ok = verify_conservation_law(cur, pde);
    report.add("verdict", ok);
    return ok ? kComputed : kVerdictFalse;
  }
  if (command == "multiplier-of") {
    const ConservedCurrent cur{s.parse(opt.T), s.parse(opt.X)};
    const DiffExpr Q = multiplier_from_current(cur, pde);
    const DiffExpr on_e = restrict_to_solutions(Q, pde);
    report.add("T", cur.T);
    report.add("X", cur.X);
    report.add("Q", Q);
    report.add("Q_on_solutions", on_e);
    report.add("trivial", on_e.is_zero());
    return kComputed;
  }
  if (command == "multipliers" || command == "symmetries") {
    const Ansatz a = opt.ansatz.resolve(s.ansatz);
    report.add("ansatz", describe(a));
    add_basis(report, command == "multipliers" ? solve_multipliers(pde, a) : solve_symmetries(pde, a));
    return kComputed;
  }
  if (command == "current") {
    const DiffExpr Q = s.parse(opt.Q);
    const ConservedCurrent cur = current_from_multiplier(Q, pde);
    report.add("Q", Q);
    report.add("T", cur.T);
    report.add("X", cur.X);
    return kComputed;
  }

  const bool full = !opt.tau.empty() || !opt.xi.empty() || !opt.eta.empty();
  const SymmetryGen gen =
      full ? SymmetryGen(FullGenerator{opt.tau.empty() ? DiffExpr() : s.parse(opt.tau),
                                       opt.xi.empty() ? DiffExpr() : s.parse(opt.xi),
                                       opt.eta.empty() ? DiffExpr() : s.parse(opt.eta)})
           : SymmetryGen(Characteristic{s.parse(opt.P)});
  const DiffExpr P = characteristic(gen);
  report.add("P", P);

  if (command == "act") {
    if (!opt.Q.empty()) {
      const DiffExpr Q = s.parse(opt.Q);
      const DiffExpr action = act_on_multiplier(P, Q, pde);
      report.add("input.Q", Q);
      report.add("Q", action);
      report.add("Q_on_solutions", restrict_to_solutions(action, pde));
      return kComputed;
    }
    const ConservedCurrent cur{s.parse(opt.T), s.parse(opt.X)};
    const ConservedCurrent image = act_on_current(gen, cur, pde);
    report.add("input.T", cur.T);
    report.add("input.X", cur.X);
    report.add("T", image.T);
    report.add("X", image.X);
    const DiffExpr Q = restrict_to_solutions(multiplier_from_current(image, pde), pde);
    report.add("Q_on_solutions", Q);
    report.add("trivial", Q.is_zero());
    return kComputed;
  }
  if (command == "psi") {
    const DiffExpr Q = s.parse(opt.Q);
    const ConservedCurrent cur = psi_current(P, Q, pde);
    const DiffExpr multiplier = restrict_to_solutions(multiplier_from_current(cur, pde), pde);
    report.add("input.Q", Q);
    report.add("T", cur.T);
    report.add("X", cur.X);
    report.add("Q_on_solutions", multiplier);
    report.add("trivial", multiplier.is_zero());
    return kComputed;
  }
  if (command == "classify") {
    const DiffExpr Q = s.parse(opt.Q);
    const ClassificationResult r =
        classify(P, Q, pde, opt.strict_off_e ? Comparison::OffSolutions : Comparison::OnSolutions);
    report.add("input.Q", Q);
    report.add("comparison", std::string(opt.strict_off_e ? "off-solutions" : "on-solutions"));
    report.add("verdict", verdict_name(r.verdict));
    if (r.verdict != Verdict::NotHomogeneous) report.add("lambda", to_string(r.lambda));
    report.add("Q", r.action_multiplier);
    if (r.verdict == Verdict::NotHomogeneous) report.add("residual", r.residual);
    return r.verdict == Verdict::NotHomogeneous ? kVerdictFalse : kComputed;
  }
  if (command == "action-matrix") {
    std::vector<DiffExpr> basis;
    if (opt.basis.empty()) {
      const Ansatz a = opt.ansatz.resolve(s.ansatz);
      report.add("ansatz", describe(a));
      basis = solve_multipliers(pde, a);
    } else {
      for (const std::string& q : opt.basis) basis.push_back(s.parse(q));
    }
    add_basis(report, basis);
    const ActionMatrix m = action_matrix(P, basis, pde);
    for (std::size_t i = 0; i < m.matrix.rows(); ++i)
      report.add("matrix[" + std::to_string(i) + "]", join(m.matrix.row(i)));
    for (std::size_t k = 0; k < m.homogeneous.size(); ++k) {
      const std::string key = "homogeneous[" + std::to_string(k) + "]";
      report.add(key + ".lambda", to_string(m.homogeneous[k].lambda));
      report.add(key + ".Q", m.homogeneous[k].multiplier);
    }
    report.add("unresolved", polynomial(m.unresolved));
    return kComputed;
  }
  throw Error(ErrorKind::SessionError, "unknown command " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conservation laws, multipliers and symmetries of normal scalar PDEs", "claws"};
  Options opt;
  app.add_option("-s,--session", opt.session_path, "session file describing the equation")
      ->required();
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.require_subcommand(1);

  auto current_flags = [&](CLI::App* cmd, bool required) {
    auto* t = cmd->add_option("--T", opt.T, "conserved density");
    auto* x = cmd->add_option("--X", opt.X, "flux");
    if (required) {
      t->required();
      x->required();
    }
    return std::pair{t, x};
  };
  auto symmetry_flags = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--P", opt.P, "symmetry characteristic");
    auto* tau = cmd->add_option("--tau", opt.tau, "generator component along t");
    auto* xi = cmd->add_option("--xi", opt.xi, "generator component along x");
    auto* eta = cmd->add_option("--eta", opt.eta, "generator component along u");
    p->excludes(tau)->excludes(xi)->excludes(eta);
    return p;
  };

  current_flags(app.add_subcommand("check-conslaw", "verify a conserved current"), true);
  current_flags(app.add_subcommand("multiplier-of", "multiplier of a conserved current"), true);
  opt.ansatz.attach(app.add_subcommand("multipliers", "solve for multipliers in an ansatz"));
  opt.ansatz.attach(app.add_subcommand("symmetries", "solve for symmetry characteristics"));
  app.add_subcommand("current", "conserved current of a multiplier")
      ->add_option("--Q", opt.Q, "multiplier")
      ->required();

  auto* act = app.add_subcommand("act", "symmetry action on a multiplier or a current");
  symmetry_flags(act);
  auto* act_q = act->add_option("--Q", opt.Q, "multiplier");
  auto [act_t, act_x] = current_flags(act, false);
  act_q->excludes(act_t)->excludes(act_x);
  act_t->needs(act_x);
  act_x->needs(act_t);

  auto* psi = app.add_subcommand("psi", "current built from a symmetry and an adjoint-symmetry");
  symmetry_flags(psi)->required();
  psi->add_option("--Q", opt.Q, "adjoint-symmetry")->required();

  auto* cls = app.add_subcommand("classify", "invariance / homogeneity of a conservation law");
  symmetry_flags(cls)->required();
  cls->add_option("--Q", opt.Q, "multiplier")->required();
  cls->add_flag("--strict-off-e", opt.strict_off_e, "compare without restricting to solutions");

  auto* am = app.add_subcommand("action-matrix", "matrix of the symmetry action on multipliers");
  symmetry_flags(am)->required();
  am->add_option("--Q", opt.basis, "basis multiplier (repeatable); default: solve the ansatz");
  opt.ansatz.attach(am);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "act" && opt.Q.empty() && opt.T.empty()) {
    err << "act: give --Q or both --T and --X\n";
    return kUsage;
  }
  if ((command == "act") && opt.P.empty() && opt.tau.empty() && opt.xi.empty() && opt.eta.empty()) {
    err << "act: give --P or the generator components --tau/--xi/--eta\n";
    return kUsage;
  }

  Report report;
  const bool json = opt.format == "json";
  try {
    const Session session = load_session(opt.session_path);
    const int code = dispatch(command, opt, session, report);
    report.write(out, json);
    return code;
  } catch (const Error& e) {
    report.add("error", std::string(e.name()));
    report.write(out, json);
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace claws
