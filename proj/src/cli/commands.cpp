#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "kottwitz/average_coroot.hpp"
#include "kottwitz/cli.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/hodge_newton.hpp"
#include "kottwitz/prop5.hpp"
#include "kottwitz/strata.hpp"
#include "kottwitz/weyl.hpp"
#include "kottwitz/witness.hpp"
#include "report.hpp"

namespace kottwitz::cli {

namespace {

struct Context {
  RunConfig cfg;
  BasedRootDatum d;
  EnumerationOptions opts;
  std::ostream& out;
};

BasedRootDatum resolve_datum(const RunConfig& cfg) {
  if (!cfg.type.empty()) return build_datum(parse_type_label(cfg.type));
  if (!cfg.group.empty()) return build_datum(cfg.group);
  throw InvalidArgument("a group is required (--group, --group-file or --type)");
}

EnumerationOptions resolve_options(const RunConfig& cfg) {
  EnumerationOptions opts;
  opts.exec = cfg.serial ? Exec::Serial : Exec::Parallel;
  if (cfg.denom_bound) opts.denominator_bound = Integer(*cfg.denom_bound);
  if (const char* env = std::getenv("KOTTWITZ_DENOM_BOUND"); env && *env) opts.denominator_bound = parse_integer(env);
  if (opts.denominator_bound && *opts.denominator_bound <= 0) throw InvalidArgument("denominator bound must be positive");
  return opts;
}

Coweight coweight_arg(const Context& c, const std::optional<std::string>& text, const std::string& name) {
  if (!text) throw InvalidArgument("--" + name + " is required");
  Coweight v = parse_rational_list(*text);
  if (v.size() != c.d.rank())
    throw InvalidArgument("--" + name + " needs " + std::to_string(c.d.rank()) + " entries, got " +
                          std::to_string(v.size()));
  return v;
}

Coweight mu_arg(const Context& c) {
  Coweight mu = coweight_arg(c, c.cfg.mu, "mu");
  if (!is_integral(mu)) throw InvalidArgument("--mu must be an integral cocharacter");
  return mu;
}

Pi1Element eps_arg(const Context& c) {
  const Pi1Group& g = c.d.pi1();
  if (!c.cfg.eps) return g.zero();
  IntVector t = parse_integer_list(*c.cfg.eps);
  if (g.torsion_moduli().empty() && std::all_of(t.begin(), t.end(), [](const Integer& x) { return x == 0; }))
    return g.zero();
  if (t.size() != g.torsion_moduli().size())
    throw InvalidArgument("--eps needs " + std::to_string(g.torsion_moduli().size()) + " torsion coordinates");
  return g.make(t, IntVector(g.free_rank()));
}

Pi1Element kappa_arg(const Context& c) {
  const Pi1Group& g = c.d.pi1();
  IntVector x = parse_integer_list(*c.cfg.kappa);
  const size_t nt = g.torsion_moduli().size();
  if (x.size() != nt + g.free_rank())
    throw InvalidArgument("--kappa needs " + std::to_string(nt + g.free_rank()) + " coordinates (torsion, then free)");
  return g.make(IntVector(x.begin(), x.begin() + nt), IntVector(x.begin() + nt, x.end()));
}

// b from --nu/--kappa; the basic class of mu_sharp + eps when --nu is absent.
SigmaClass class_arg(const Context& c, const Coweight& mu, const Pi1Element& eps) {
  Pi1Element kappa = c.cfg.kappa ? kappa_arg(c) : mu_sharp(c.d, mu) + eps;
  if (!c.cfg.nu) return basic_class_from_kappa(c.d, kappa);
  return SigmaClass{coweight_arg(c, c.cfg.nu, "nu"), kappa};
}

std::string kappa_text(const Pi1Element& e) { return e.to_string(); }

std::string levi_text(const BasedRootDatum& d, const Levi& m) {
  return m.size() == d.num_simple() ? "G " + format_levi(m) : format_levi(m);
}

int cmd_enumerate(Context& c) {
  std::string set = c.cfg.set;
  if (c.cfg.delta && set == "B") set = "generalized";
  std::vector<SigmaClass> classes;
  Coweight delta;
  Json head = Json::object();
  std::string title;
  if (set == "B" || set == "A") {
    Coweight mu = mu_arg(c);
    delta = mu_diamond(c.d, mu);
    classes = set == "B" ? enumerate_B_G_mu(c.d, mu, c.opts) : enumerate_A_G_mu(c.d, mu, c.opts);
    head["mu"] = rationals_json(mu);
    title = set + "(" + c.d.type_label() + ", mu=" + format_coweight(mu) + ")";
  } else if (set == "generalized") {
    delta = coweight_arg(c, c.cfg.delta, "delta");
    if (!c.cfg.kappa) throw InvalidArgument("the generalized set needs --kappa");
    Pi1Element e = kappa_arg(c);
    classes = enumerate_generalized(c.d, e, delta, c.opts);
    head["kappa"] = integers_json(e.coords());
    head["delta"] = rationals_json(delta);
    title = "B(" + c.d.type_label() + ", kappa=" + e.to_string() + ", delta=" + format_coweight(delta) + ")";
  } else {
    throw InvalidArgument("--set must be B, A or generalized");
  }
  Json rows = Json::array();
  Table table({"#", "newton", "kappa", "basic", "HN"});
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto& b = classes[i];
    bool basic = is_basic(c.d, b);
    bool dec = is_hn_decomposable(c.d, delta, b).decomposable;
    Json row = class_json(b);
    row["basic"] = basic;
    row["hn_decomposable"] = dec;
    rows.push_back(row);
    table.add({std::to_string(i + 1), format_coweight(b.newton), kappa_text(b.kappa), yes_no(basic),
               dec ? "decomposable" : "indecomposable"});
  }
  if (c.cfg.json) {
    Json out = Json::object();
    out["command"] = "enumerate";
    out["group"] = c.d.type_label();
    out["set"] = set;
    for (auto& [k, v] : head.items()) out[k] = v;
    out["count"] = classes.size();
    out["classes"] = rows;
    c.out << out.dump(2) << "\n";
  } else {
    c.out << title << ": " << classes.size() << (classes.size() == 1 ? " class" : " classes") << "\n";
    table.render(c.out);
  }
  return 0;
}

int cmd_wa_eq_a(Context& c) {
  Coweight mu = mu_arg(c);
  Pi1Element eps = eps_arg(c);
  SigmaClass b = class_arg(c, mu, eps);
  WaReport r = wa_equals_a(c.d, mu, b, eps, c.opts);
  const bool equal = r.verdict == Verdict::Equal;
  // an offending class of G itself carries a witness for the failure
  std::vector<std::pair<SigmaClass, NonbasicWitness>> witnesses;
  if (!equal && r.levi.size() == c.d.num_simple())
    for (const auto& o : r.offending) witnesses.emplace_back(o, find_nonbasic_witness(c.d, mu, o, eps));
  if (c.cfg.json) {
    Json out = Json::object();
    out["command"] = "wa-eq-a";
    out["group"] = c.d.type_label();
    out["mu"] = rationals_json(mu);
    out["b"] = class_json(b);
    out["verdict"] = equal ? "EQUAL" : "NOT EQUAL";
    out["levi"] = levi_json(r.levi);
    out["transferred_levi"] = levi_json(r.transferred_levi);
    out["basic_in_levi"] = r.basic_in_levi;
    Json off = Json::array();
    for (const auto& o : r.offending) off.push_back(class_json(o));
    out["offending"] = off;
    Json wit = Json::array();
    for (const auto& [o, w] : witnesses) {
      Json j = Json::object();
      j["class"] = class_json(o);
      j["beta_tilde"] = w.beta_tilde;
      j["w_mu"] = rationals_json(w.w_mu);
      wit.push_back(j);
    }
    out["witnesses"] = wit;
    out["explanation"] = r.explanation;
    c.out << out.dump(2) << "\n";
  } else {
    c.out << (equal ? "EQUAL" : "NOT EQUAL") << "\n";
    c.out << "  b: " << b.to_string() << "\n";
    c.out << "  levi M: " << levi_text(c.d, r.levi) << " (w0-transported: " << levi_text(c.d, r.transferred_levi)
          << ")\n";
    c.out << "  b basic in M: " << yes_no(r.basic_in_levi) << "\n";
    c.out << "  offending classes: " << (r.offending.empty() ? "none" : std::to_string(r.offending.size())) << "\n";
    for (const auto& o : r.offending) c.out << "    " << o.to_string() << "\n";
    for (const auto& [o, w] : witnesses)
      c.out << "  witness for " << format_coweight(o.newton) << ": beta~=" << w.beta_tilde
            << " w mu=" << format_coweight(w.w_mu) << "\n";
    c.out << "  " << r.explanation << "\n";
  }
  return 0;
}

int cmd_avg_coroot(Context& c) {
  Json coeffs = Json::array();
  Table table({"beta", "n_{beta,gamma} by orbit"});
  Rational best = -1;
  int best_beta = -1;
  Levi best_orbit;
  for (int beta = 0; beta < static_cast<int>(c.d.num_simple()); ++beta) {
    auto row = avg_coroot(c.d, beta);
    Json entries = Json::array();
    std::string text;
    for (const auto& e : row) {
      Json j = Json::object();
      j["orbit"] = levi_json(e.orbit);
      j["value"] = format_rational(e.value);
      entries.push_back(j);
      if (!text.empty()) text += "  ";
      text += format_levi(e.orbit) + ":" + format_rational(e.value);
      if (e.value > best) {
        best = e.value;
        best_beta = beta;
        best_orbit = e.orbit;
      }
    }
    Json j = Json::object();
    j["beta"] = beta;
    j["coefficients"] = entries;
    coeffs.push_back(j);
    table.add({std::to_string(beta), text.empty() ? "-" : text});
  }
  std::vector<Levi> seq;
  std::vector<ISequenceViolation> violations;
  bool have_seq = true;
  try {
    seq = i_sequence(c.d);
    violations = check_i_sequence(c.d, seq);
  } catch (const InvalidArgument&) {
    have_seq = false;
  }
  if (c.cfg.json) {
    Json out = Json::object();
    out["command"] = "avg-coroot";
    out["type"] = c.d.type_label();
    out["coefficients"] = coeffs;
    Json mx = Json::object();
    if (best_beta >= 0) {
      mx["value"] = format_rational(best);
      mx["beta"] = best_beta;
      mx["orbit"] = levi_json(best_orbit);
    }
    out["max"] = mx;
    Json js = Json::array();
    for (const auto& s : seq) js.push_back(levi_json(s));
    out["i_sequence"] = js;
    Json jv = Json::array();
    for (const auto& v : violations) {
      Json j = Json::object();
      j["beta"] = v.beta;
      j["index"] = v.index + 1;
      j["orbit"] = levi_json(v.orbit);
      j["value"] = format_rational(v.value);
      jv.push_back(j);
    }
    out["i_sequence_violations"] = jv;
    c.out << out.dump(2) << "\n";
    return 0;
  }
  c.out << "average coroots for " << c.d.type_label() << " (nodes 0.." << c.d.num_simple() - (c.d.num_simple() > 0)
        << ")\n";
  table.render(c.out);
  if (best_beta >= 0)
    c.out << "max coefficient: " << format_rational(best) << " at beta=" << best_beta << " gamma=" << format_levi(best_orbit)
          << "\n";
  if (have_seq) {
    c.out << "I-sequence:";
    for (size_t i = 0; i < seq.size(); ++i) c.out << (i ? " < " : " ") << format_levi(seq[i]);
    c.out << "\n";
    if (violations.empty()) c.out << "I-sequence check: ok\n";
    for (const auto& v : violations)
      c.out << "I-sequence violation: beta=" << v.beta << " in I_" << v.index + 1 << ", gamma=" << format_levi(v.orbit)
            << " has n=" << format_rational(v.value) << "\n";
  }
  return 0;
}

int cmd_strata(Context& c) {
  Coweight mu = mu_arg(c);
  Pi1Element eps = eps_arg(c);
  SigmaClass b = class_arg(c, mu, eps);
  auto reports = strata_report(c.d, b, mu, c.opts);
  std::vector<CellReport> cells;
  Levi m;
  if (c.cfg.levi) {
    for (const auto& x : parse_integer_list(*c.cfg.levi)) m.push_back(static_cast<int>(x.get_si()));
    std::sort(m.begin(), m.end());
    cells = admissible_cells(c.d, mu, m);
  }
  Json arr = Json::array();
  Table table({"newton", "kappa", "bundle", "status"});
  for (const auto& r : reports) {
    Json j = class_json(r.stratum.cls);
    j["bundle"] = r.stratum.bundle ? Json(r.stratum.bundle->to_string()) : Json(nullptr);
    j["status"] = status_name(r.status);
    arr.push_back(j);
    table.add({format_coweight(r.stratum.cls.newton), kappa_text(r.stratum.cls.kappa),
               r.stratum.bundle ? r.stratum.bundle->display() : "-", status_name(r.status)});
  }
  if (c.cfg.json) {
    if (!c.cfg.levi) {
      c.out << arr.dump(2) << "\n";
      return 0;
    }
    Json out = Json::object();
    out["strata"] = arr;
    Json jc = Json::array();
    for (const auto& cell : cells) {
      Json j = Json::object();
      j["w_mu"] = rationals_json(cell.w_mu);
      j["word"] = cell.word;
      j["passes"] = cell.passes;
      j["w0_coset"] = cell.is_w0_coset;
      jc.push_back(j);
    }
    out["cells"] = jc;
    c.out << out.dump(2) << "\n";
    return 0;
  }
  c.out << "Newton strata for " << c.d.type_label() << ", mu=" << format_coweight(mu) << ", b=" << b.to_string() << ": "
        << reports.size() << "\n";
  table.render(c.out);
  if (c.cfg.levi) {
    c.out << "Schubert cells for M=" << format_levi(m) << ":\n";
    Table ct({"w mu", "length", "passes", "w0 coset"});
    for (const auto& cell : cells)
      ct.add({format_coweight(cell.w_mu), std::to_string(cell.word.size()), yes_no(cell.passes), yes_no(cell.is_w0_coset)});
    ct.render(c.out);
  }
  return 0;
}

int cmd_witness(Context& c) {
  Coweight mu = mu_arg(c);
  Pi1Element eps = eps_arg(c);
  if (!c.cfg.nu) throw InvalidArgument("--nu is required");
  SigmaClass b = class_arg(c, mu, eps);
  NonbasicWitness w = find_nonbasic_witness(c.d, mu, b, eps);
  const auto& cert = w.certificate;
  if (c.cfg.json) {
    Json out = Json::object();
    out["command"] = "witness";
    out["group"] = c.d.type_label();
    out["b"] = class_json(b);
    out["beta_tilde"] = w.beta_tilde;
    out["alpha_tilde"] = levi_json(w.alpha_orbit);
    out["w_mu"] = rationals_json(w.w_mu);
    out["w1_mu"] = rationals_json(w.w1_mu);
    out["n"] = integers_json(w.n);
    out["used_i_sequence"] = w.used_i_sequence;
    Json jc = Json::object();
    jc["positive_pairing"] = cert.positive_pairing;
    jc["levi_dominant"] = cert.levi_dominant;
    jc["eps_lifts"] = cert.eps_lifts;
    jc["kappa_equation"] = cert.kappa_equation;
    jc["nu_inequality"] = cert.nu_inequality;
    jc["membership"] = cert.membership;
    out["certificate"] = jc;
    c.out << out.dump(2) << "\n";
    return 0;
  }
  c.out << "witness for " << b.to_string() << "\n";
  c.out << "  alpha~: orbit " << format_levi(w.alpha_orbit) << " (beta~=" << w.beta_tilde << ")\n";
  c.out << "  w mu:  " << format_coweight(w.w_mu) << "\n";
  c.out << "  w1 mu: " << format_coweight(w.w1_mu) << "\n";
  c.out << "  n:     ";
  for (size_t j = 0; j < w.n.size(); ++j) c.out << (j ? " " : "") << format_levi(w.outside_orbits[j]) << ":" << w.n[j];
  c.out << "\n  choice: " << (w.used_i_sequence ? "I-sequence" : "maximal reflection") << "\n";
  c.out << "  certificate: " << cert.summary() << "\n";
  return 0;
}

int cmd_prop5_scan(Context& c) {
  auto r = prop5_disjunction_scan(c.cfg.scan_bound, c.cfg.serial ? Exec::Serial : Exec::Parallel, c.cfg.check_witnesses);
  if (c.cfg.json) {
    Json out = Json::object();
    out["command"] = "prop5-scan";
    out["bound"] = r.bound;
    out["configurations"] = r.configurations;
    out["skipped"] = r.skipped;
    Json ce = Json::array();
    for (const auto& x : r.counterexamples) ce.push_back(x.to_string());
    out["counterexamples"] = ce;
    if (c.cfg.check_witnesses) out["witness_failures"] = r.witness_failures;
    c.out << out.dump(2) << "\n";
    return 0;
  }
  c.out << r.counterexamples.size() << " counterexamples, " << r.configurations << " configurations\n";
  c.out << "  skipped (outside the valid window): " << r.skipped << "\n";
  if (c.cfg.check_witnesses) c.out << "  witness failures: " << r.witness_failures << "\n";
  for (const auto& x : r.counterexamples) c.out << "  counterexample: " << x.to_string() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kottwitz sets, Hodge-Newton decomposability and weak admissibility"};
  app.require_subcommand(1);
  RunConfig flags;
  std::string config_path, group_file, mu, nu, eps, delta, kappa, levi;
  long denom_bound = 0;

  auto common = [&](CLI::App* sub, bool group_required) {
    sub->add_option("--group", flags.group, "group descriptor <family>:<rank>[:galois=<k>], joined by '+'");
    sub->add_option("--group-file", group_file, "file with type, rank and galois_order keys");
    sub->add_option("--config", config_path, "key = value file; its entries override flags");
    sub->add_flag("--json", flags.json, "machine-readable output");
    sub->add_option("--denom-bound", denom_bound, "Newton point denominator bound");
    sub->add_flag("--serial", flags.serial, "run the serial kernels");
    (void)group_required;
  };
  auto class_opts = [&](CLI::App* sub) {
    sub->add_option("--mu", mu, "cocharacter, comma separated");
    sub->add_option("--nu", nu, "Newton point, comma separated rationals p/q");
    sub->add_option("--kappa", kappa, "Kottwitz point: torsion then free coordinates");
    sub->add_option("--eps", eps, "torsion element of pi_1(G)_Gamma");
  };

  CLI::App* en = app.add_subcommand("enumerate", "list B(G,mu), A(G,mu) or B(G,kappa,delta)");
  common(en, true);
  class_opts(en);
  en->add_option("--delta", delta, "dominant Galois-fixed bound for the generalized set");
  en->add_option("--set", flags.set, "B, A or generalized")->check(CLI::IsMember({"B", "A", "generalized"}));

  CLI::App* wa = app.add_subcommand("wa-eq-a", "decide whether the weakly admissible and admissible loci agree");
  common(wa, true);
  class_opts(wa);

  CLI::App* av = app.add_subcommand("avg-coroot", "average coroot coefficients and the I-sequence check");
  common(av, true);
  av->add_option("--type", flags.type, "type label such as F4, 2E6, 3D4");

  CLI::App* st = app.add_subcommand("strata", "Newton strata of the flag variety for basic b");
  common(st, true);
  class_opts(st);
  st->add_option("--levi", levi, "nodes of a standard Levi: also list Schubert cells");

  CLI::App* wi = app.add_subcommand("witness", "non-basic witness with its certificate");
  common(wi, true);
  class_opts(wi);

  CLI::App* ps = app.add_subcommand("prop5-scan", "check the rank inequality disjunction");
  common(ps, false);
  ps->add_option("--bound", flags.scan_bound, "largest r_i");
  ps->add_flag("--check-witnesses", flags.check_witnesses, "also validate each constructed extension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
  try {
    RunConfig cfg = flags;
    if (given("--mu")) cfg.mu = mu;
    if (given("--nu")) cfg.nu = nu;
    if (given("--eps")) cfg.eps = eps;
    if (given("--kappa")) cfg.kappa = kappa;
    if (given("--delta")) cfg.delta = delta;
    if (given("--levi")) cfg.levi = levi;
    if (given("--denom-bound")) cfg.denom_bound = denom_bound;
    if (!group_file.empty()) cfg.group = read_group_file(group_file, cfg.levi);
    if (!config_path.empty()) apply_config_file(cfg, config_path);

    const std::string name = sub->get_name();
    if (name == "prop5-scan") {
      Context c{cfg, BasedRootDatum(), EnumerationOptions{}, out};
      return cmd_prop5_scan(c);
    }
    Context c{cfg, resolve_datum(cfg), resolve_options(cfg), out};
    if (name == "enumerate") return cmd_enumerate(c);
    if (name == "wa-eq-a") return cmd_wa_eq_a(c);
    if (name == "avg-coroot") return cmd_avg_coroot(c);
    if (name == "strata") return cmd_strata(c);
    if (name == "witness") return cmd_witness(c);
    err << "error: unknown subcommand " << name << "\n";
    return 2;
  } catch (const DenominatorBoundError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const OrbitCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RankDegreeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kottwitz::cli
