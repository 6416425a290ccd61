#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "format.hpp"

namespace gmalie::cli {
namespace {

struct Options {
  std::string command;
  std::string output;
  // gen
  std::string kind = "full-matrix";
  std::size_t r = 3;
  std::size_t a_order = 1;
  std::size_t b_order = 1;
  std::string field = "q";
  // analysis commands
  std::string spec_path;
  std::string map_path;
  std::string theorem = "4.1";
  bool lie = false;
  std::size_t arity = 1;
  std::string basis_dir;
};

/// Checks plus free-form data for one report.
struct Outcome {
  CheckReport checks;
  json data = json::object();
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

struct LoadedSpec {
  json doc;
  FieldSpec field;
};

LoadedSpec load_spec(const std::string& path) {
  auto doc = parse_json(read_file(path), path);
  return {doc, field_of(doc, path)};
}

template <class F>
MoritaContext<F> parse_context(const LoadedSpec& s, const F& f) {
  try {
    return context_from_json(s.doc, f);
  } catch (const json::exception& e) {
    throw ParseError(std::string("spec: ") + e.what());
  }
}

template <class F>
GMAlgebra<F> load_algebra(const LoadedSpec& s, const F& f) {
  auto ctx = parse_context(s, f);
  auto report = validate_context(ctx);
  if (!report.passed()) {
    const Check* c = report.first_failure();
    throw InvalidInput("spec fails validation: " + c->name + ": " + c->witness);
  }
  return assemble(std::move(ctx));
}

template <class F>
json instance_json(const MoritaContext<F>& c) {
  const std::string canonical = context_to_json(c).dump();
  const std::size_t d = c.dim_a() + c.dim_m + c.dim_n + c.dim_b();
  return json{{"field", c.field.spec().to_string()},
              {"dims", json{{"A", c.dim_a()}, {"M", c.dim_m}, {"N", c.dim_n}, {"B", c.dim_b()}, {"G", d}}},
              {"hash", "fnv1a64:" + hex64(fnv1a64(canonical))}};
}

template <class F>
json blocks_json(const GMAlgebra<F>& g, const Vector<F>& x) {
  using B = BlockLayout::Block;
  const F& f = g.field();
  using V = std::span<const typename F::value_type>;
  return json{{"A", vector_json(f, V(g.slice(B::A, x)))},
              {"M", vector_json(f, V(g.slice(B::M, x)))},
              {"N", vector_json(f, V(g.slice(B::N, x)))},
              {"B", vector_json(f, V(g.slice(B::B, x)))}};
}

json hypotheses_json(const HypothesisReport& h) {
  json conds = json::array();
  for (const auto& c : h.conditions) conds.push_back(check_json(c));
  return json{{"set", std::string(to_string(h.set))}, {"all_pass", h.all_pass()}, {"conditions", conds}};
}

// ---------------------------------------------------------------------------

template <class F>
Outcome cmd_validate(const LoadedSpec& s, const F& f, json& instance) {
  auto ctx = parse_context(s, f);
  instance = instance_json(ctx);
  Outcome o;
  o.checks = validate_context(ctx);
  o.data["valid"] = o.checks.passed();
  return o;
}

template <class F>
Outcome cmd_center(const GMAlgebra<F>& g) {
  auto cd = center_data(g);
  Outcome o;
  o.checks = cd.checks;
  o.data["z_g"] = subspace_json(cd.z_g);
  o.data["z_a"] = subspace_json(cd.z_a);
  o.data["z_b"] = subspace_json(cd.z_b);
  o.data["pi_a_image"] = subspace_json(cd.pi_a_image);
  o.data["pi_b_image"] = subspace_json(cd.pi_b_image);
  if (cd.eta) {
    json rows = json::array();
    for (std::size_t r = 0; r < cd.eta->rows(); ++r) rows.push_back(vector_json(g.field(), cd.eta->row(r)));
    o.data["eta"] = rows;
  } else {
    o.data["eta"] = nullptr;
  }
  return o;
}

template <class F>
Outcome cmd_hypotheses(const GMAlgebra<F>& g, const Options& opt) {
  auto set = opt.theorem == "4.3" ? HypothesisSet::ModuleAnnihilator : HypothesisSet::CentralTorsion;
  auto h = check_hypotheses(g, set);
  Outcome o;
  for (const auto& c : h.conditions) o.checks.add(c);
  o.data["hypothesis_set"] = std::string(to_string(set));
  o.data["all_pass"] = h.all_pass();
  return o;
}

template <class F>
Outcome cmd_derivations(const GMAlgebra<F>& g, const Options& opt, const Budget& budget) {
  const auto& alg = g.algebra();
  auto space = opt.lie ? n_lie_derivation_space(alg, opt.arity, budget) : n_derivation_space(alg, opt.arity, budget);
  Outcome o;
  json basis = json::array();
  for (std::size_t k = 0; k < space.basis.size(); ++k) {
    const auto& phi = space.basis[k];
    auto verdict = opt.lie ? is_n_lie_derivation(alg, phi, budget) : is_n_derivation(alg, phi, budget);
    o.checks.add(Check::from_bool("basis[" + std::to_string(k) + "]." + (opt.lie ? "n_lie_derivation" : "n_derivation"),
                                  verdict.answer, verdict.witness));
    if (opt.basis_dir.empty()) {
      basis.push_back(map_to_json(phi));
    } else {
      std::filesystem::create_directories(opt.basis_dir);
      const std::string name = "basis_" + std::to_string(k) + ".json";
      write_atomic((std::filesystem::path(opt.basis_dir) / name).string(), dump(map_to_json(phi)));
      basis.push_back(name);
    }
  }
  o.data["kind"] = opt.lie ? "n-lie-derivation" : "n-derivation";
  o.data["arity"] = opt.arity;
  o.data["dim"] = space.basis.size();
  o.data["unknowns"] = space.unknowns;
  o.data["basis"] = basis;
  if (opt.arity == 1 && !opt.lie) o.data["inner_dim"] = inner_derivation_space(alg).dim();
  return o;
}

template <class F>
Outcome cmd_extremal(const GMAlgebra<F>& g, const Options& opt, const Budget& budget) {
  auto ext = extremal_exists(g);
  Outcome o;
  o.checks.add(Check::from_bool("existence.equivalence", ext.equivalence,
                                "linear solution space (dim " + std::to_string(ext.solution_space.dim()) +
                                    ") differs from the annihilator's off-diagonal part (dim " +
                                    std::to_string(ext.oracle_offdiagonal.dim()) + ")"));
  o.checks.add(Check::from_bool("existence.bracket_identities", ext.bracket_identities.answer,
                                ext.bracket_identities.witness));
  o.data["exists"] = ext.exists;
  if (ext.witness) {
    o.data["witness"] = json{{"m0", vector_json(g.field(), std::span<const typename F::value_type>(ext.witness->first))},
                             {"n0", vector_json(g.field(), std::span<const typename F::value_type>(ext.witness->second))}};
  } else {
    o.data["witness"] = nullptr;
  }
  o.data["solution_space"] = subspace_json(ext.solution_space);
  o.data["oracle_annihilator"] = subspace_json(ext.oracle_annihilator);
  o.data["oracle_offdiagonal"] = subspace_json(ext.oracle_offdiagonal);
  o.data["oracle_diagonal"] = subspace_json(ext.oracle_diagonal);
  const std::size_t n = opt.arity < 1 ? 1 : opt.arity;
  o.data["uniqueness_probe"] = json{{"arity", n}, {"ambiguity_dim", extremal_ambiguity(g, ext, n, budget)}};
  return o;
}

bool theorem_applies(const HypothesisReport& a, const HypothesisReport& b, std::size_t n) {
  return n >= kMinDecompositionArity && (a.all_pass() || b.all_pass());
}

template <class F>
Outcome cmd_decompose(const GMAlgebra<F>& g, const Options& opt, const Budget& budget) {
  auto doc = parse_json(read_file(opt.map_path), opt.map_path);
  auto mf = field_of(doc, opt.map_path);
  if (!(mf == g.field().spec()))
    throw FieldMismatchError("map field " + mf.to_string() + " differs from spec field " + g.field().spec().to_string());
  MultilinearMap<F> phi = [&] {
    try {
      return map_from_json(doc, g.field());
    } catch (const json::exception& e) {
      throw ParseError(opt.map_path + ": " + e.what());
    }
  }();
  if (phi.dim() != g.dim()) throw InvalidInput("map dim " + std::to_string(phi.dim()) + " differs from dim G = " + std::to_string(g.dim()));
  if (phi.arity() != opt.arity)
    throw InvalidInput("map arity " + std::to_string(phi.arity()) + " differs from --arity " + std::to_string(opt.arity));

  Outcome o;
  auto t41 = check_hypotheses(g, HypothesisSet::CentralTorsion);
  auto t43 = check_hypotheses(g, HypothesisSet::ModuleAnnihilator);
  const bool applies = theorem_applies(t41, t43, opt.arity);
  o.data["hypotheses"] = json::array({hypotheses_json(t41), hypotheses_json(t43)});
  o.data["theorem_applies"] = applies;
  try {
    auto r = decompose(g, phi, budget);
    o.checks.add(Check::pass("input.n_lie_derivation"));
    o.checks.add(Check::from_bool("exact_sum", r.exact_sum, "kappa + psi != phi"));
    if (applies) {
      o.checks.add(Check::from_bool("x0_annihilates_commutators", r.x0_annihilates_commutators, r.commutator_witness));
      o.checks.add(Check::from_bool("psi_centrally_valued", r.psi_centrally_valued.answer, r.psi_centrally_valued.witness));
    }
    o.data["x0"] = vector_json(g.field(), std::span<const typename F::value_type>(r.x0));
    o.data["x0_blocks"] = blocks_json(g, r.x0);
    o.data["x0_annihilates_commutators"] = r.x0_annihilates_commutators;
    o.data["psi_centrally_valued"] = json{{"answer", r.psi_centrally_valued.answer}, {"witness", r.psi_centrally_valued.witness}};
    o.data["x0_central_degenerate"] = r.x0_central_degenerate;
    o.data["exact_sum"] = r.exact_sum;
    o.data["kappa"] = map_to_json(r.kappa);
    o.data["psi"] = map_to_json(r.psi);
  } catch (const PreconditionError& e) {
    o.checks.add(Check::fail("input.n_lie_derivation", e.witness()));
  }
  return o;
}

template <class F>
Outcome cmd_verify(const GMAlgebra<F>& g, const Options& opt, const Budget& budget) {
  auto v = verify_theorem_corpus(g, opt.arity, budget);
  Outcome o;
  o.checks = v.checks;
  o.data["hypotheses"] = json::array({hypotheses_json(v.central_torsion), hypotheses_json(v.module_annihilator)});
  o.data["theorem_applies"] = v.theorem_applies;
  o.data["triangular"] = v.triangular;
  o.data["arity"] = opt.arity;
  o.data["space_dim"] = v.space_dim;
  json elems = json::array();
  for (const auto& e : v.elements) {
    json j{{"index", e.index},
           {"x0_blocks", blocks_json(g, e.x0)},
           {"exact_sum", e.exact_sum},
           {"x0_annihilates_commutators", e.x0_annihilates_commutators},
           {"psi_centrally_valued", e.psi_centrally_valued.answer},
           {"x0_central_degenerate", e.x0_central_degenerate}};
    if (e.triangular_form) j["x0_triangular_form"] = *e.triangular_form;
    elems.push_back(std::move(j));
  }
  o.data["elements"] = elems;
  return o;
}

// ---------------------------------------------------------------------------

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty() || opt.output == "-")
    out << text;
  else
    write_atomic(opt.output, text);
}

int run_gen(const Options& opt, std::ostream& out) {
  BuiltinParams p{parse_builtin_kind(opt.kind), opt.r, opt.a_order, opt.b_order};
  auto field = make_field(FieldSpec::parse(opt.field));
  std::string text = std::visit(
      [&](const auto& f) {
        auto ctx = generate_builtin(p, f);
        return dump(context_to_json(ctx));
      },
      field);
  emit(opt, text, out);
  return kExitOk;
}

int run_analysis(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  auto spec = load_spec(opt.spec_path);
  auto budget = Budget::from_environment();
  json instance;
  Outcome o = std::visit(
      [&](const auto& f) -> Outcome {
        if (opt.command == "validate") return cmd_validate(spec, f, instance);
        auto g = load_algebra(spec, f);
        instance = instance_json(g.context());
        if (opt.command == "center") return cmd_center(g);
        if (opt.command == "hypotheses") return cmd_hypotheses(g, opt);
        if (opt.command == "derivations") return cmd_derivations(g, opt, budget);
        if (opt.command == "extremal") return cmd_extremal(g, opt, budget);
        if (opt.command == "decompose") return cmd_decompose(g, opt, budget);
        return cmd_verify(g, opt, budget);
      },
      make_field(spec.field));
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report{{"format", kReportFormat},
              {"command", opt.command},
              {"arguments", std::vector<std::string>(args.begin() + 1, args.end())},
              {"instance", instance},
              {"checks", checks_json(o.checks)},
              {"passed", o.checks.passed()},
              {"data", o.data},
              {"timings", json{{"total_ms", ms}}}};
  emit(opt, dump(report), out);
  return o.checks.passed() ? kExitOk : kExitCheckFailed;
}

constexpr const char* kFooter =
    "Global basis indices are block-ordered A, M, N, B.\n"
    "Environment: GMALIE_TUPLE_BUDGET overrides the basis-tuple budget (default 100000).\n"
    "Exit codes: 0 all checks pass, 1 a check failed, 2 input or parse error, 3 budget exceeded.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"gmalie: exact analysis of generalized matrix algebras and their n-Lie derivations", "gmalie"};
  app.footer(kFooter);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write a builtin Morita context as a spec file");
  gen->add_option("--kind", opt.kind, "full-matrix | upper-triangular | lower-triangular | zero-pairing")
      ->check(CLI::IsMember({"full-matrix", "upper-triangular", "lower-triangular", "zero-pairing"}));
  gen->add_option("--r", opt.r, "order of the full matrix algebra (>= 2)");
  gen->add_option("--a-order", opt.a_order, "A = M_p for the block kinds");
  gen->add_option("--b-order", opt.b_order, "B = M_q for the block kinds");
  gen->add_option("--field", opt.field, "q or gf:<odd prime>");
  gen->add_option("-o,--output", opt.output, "output file (default stdout)");

  auto spec_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("spec", opt.spec_path, "algebra spec file")->required();
    c->add_option("-o,--output", opt.output, "report file (default stdout)");
    return c;
  };
  spec_cmd("validate", "Check every Morita-context axiom");
  spec_cmd("center", "Centers, projections of Z(G) and eta");
  auto* hyp = spec_cmd("hypotheses", "Check the hypotheses of a decomposition theorem");
  hyp->add_option("--theorem", opt.theorem, "4.1 (central torsion set) or 4.3 (module annihilator set)")
      ->check(CLI::IsMember({"4.1", "4.3"}));
  auto* der = spec_cmd("derivations", "Basis of the n-derivations or n-Lie derivations");
  der->add_flag("--lie", opt.lie, "Lie version");
  der->add_option("--arity", opt.arity, "n (default 1)")->check(CLI::Range(1, 16));
  der->add_option("--basis-dir", opt.basis_dir, "write each basis map as a map file into this directory");
  auto* ext = spec_cmd("extremal", "Existence of nonzero extremal n-derivations, with the brute-force annihilator");
  ext->add_option("--arity", opt.arity, "arity used by the uniqueness probe (default 1)")->check(CLI::Range(1, 16));
  auto* dec = spec_cmd("decompose", "Split an n-Lie derivation as kappa + psi");
  dec->add_option("map", opt.map_path, "map file")->required();
  dec->add_option("--arity", opt.arity, "n")->required()->check(CLI::Range(1, 16));
  auto* ver = spec_cmd("verify", "Decompose every basis element of the n-Lie derivation space");
  ver->add_option("--arity", opt.arity, "n")->required()->check(CLI::Range(1, 16));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitInputError;
  }
  for (auto* sub : app.get_subcommands()) opt.command = sub->get_name();

  try {
    if (opt.command == "gen") return run_gen(opt, out);
    return run_analysis(opt, args, out);
  } catch (const BudgetExceededError& e) {
    err << "gmalie: budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const std::exception& e) {
    err << "gmalie: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace gmalie::cli
