// SPDX-License-Identifier: Apache-2.0
//
// luq — command-line surface for the local-unitary equivalence toolkit.
//
// Exit codes: 0 positive decision, 1 negative decision, 2 not-in-class,
// 3 parse error, 4 shape/arity error, 5 internal error, 64 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "luq/class_gate.hpp"
#include "luq/invariants.hpp"
#include "luq/judge.hpp"
#include "luq/statefile.hpp"
#include "luq/zoo.hpp"

namespace {

using namespace luq;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
      return 3;
    case ErrorCode::WrongArity:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DimensionOrder:
    case ErrorCode::BadLabel:
    case ErrorCode::BadSubset:
    case ErrorCode::BadCut:
    case ErrorCode::BadDimensionParity:
    case ErrorCode::BadWeightCount:
    case ErrorCode::BadSpec:
    case ErrorCode::FamilyMismatch:
    case ErrorCode::NotUnitary:
    case ErrorCode::NonOrthogonalBranches:
      return 4;
    default:
      return 5;
  }
}

ClassTag parse_class_tag(const std::string& s) {
  if (s == "gamma0") return ClassTag::Gamma0;
  if (s == "gamma1") return ClassTag::Gamma1;
  if (s == "gamma2") return ClassTag::Gamma2;
  if (s == "gamma3") return ClassTag::Gamma3;
  if (s == "gamma") return ClassTag::Gamma;
  throw Error(ErrorCode::BadSpec, "unknown class tag: " + s);
}

// ---- check -----------------------------------------------------------------

MembershipReport run_gate(const StateVariant& sv, ClassTag tag, double tol) {
  if (tag == ClassTag::Gamma0) {
    const MixedState* m = std::get_if<MixedState>(&sv);
    if (!m || m->arity() != 2) {
      throw Error(ErrorCode::WrongArity, "gamma0 needs a bipartite mixed state");
    }
    return check_gamma0(*m, tol);
  }
  if (tag == ClassTag::Gamma) {
    const MixedState* m = std::get_if<MixedState>(&sv);
    if (!m || m->arity() != 3) {
      throw Error(ErrorCode::WrongArity, "gamma needs a tripartite mixed state");
    }
    return check_gamma_mixed3(*m, tol);
  }
  const PureState* p = std::get_if<PureState>(&sv);
  if (!p || p->arity() != 3) {
    throw Error(ErrorCode::WrongArity,
                "this class needs a tripartite pure state");
  }
  const int pivot = tag == ClassTag::Gamma1 ? 1 : tag == ClassTag::Gamma2 ? 2 : 3;
  return check_gamma_pure3(*p, pivot, tol);
}

int cmd_check(const std::string& input, const std::string& cls, double tol) {
  const StateVariant sv = load_state(input);
  const MembershipReport r = run_gate(sv, parse_class_tag(cls), tol);
  std::cout << "class: " << cls << "\n"
            << "verdict: " << (r.verdict ? "in-class" : "not-in-class") << "\n"
            << "max-commutator: " << fmt17(r.max_commutator_norm) << "\n"
            << "min-rank-margin: " << fmt17(r.min_rank_margin) << "\n";
  if (r.failing_pair) {
    std::cout << "failing-pair: " << r.failing_pair->first << " "
              << r.failing_pair->second << "\n";
  }
  return r.verdict ? 0 : 2;
}

// ---- invariants ------------------------------------------------------------

InvariantSet compute_family(const StateVariant& sv, const std::string& fam) {
  if (fam == "a" || fam == "b") {
    const MixedState* m = std::get_if<MixedState>(&sv);
    if (!m || m->arity() != 2) {
      throw Error(ErrorCode::FamilyMismatch,
                  "families a/b need a bipartite mixed state");
    }
    return invariants_bipartite(
        *m, fam == "a" ? BipartiteVariant::A : BipartiteVariant::B);
  }
  if (fam == "g" || fam == "h") {
    const MixedState* m = std::get_if<MixedState>(&sv);
    if (!m || m->arity() != 3) {
      throw Error(ErrorCode::FamilyMismatch,
                  "families g/h need a tripartite mixed state");
    }
    return invariants_mixed3(
        *m, fam == "g" ? Mixed3Variant::G : Mixed3Variant::H);
  }
  const PureState* p = std::get_if<PureState>(&sv);
  if (!p || p->arity() != 3) {
    throw Error(ErrorCode::FamilyMismatch,
                "families c-f need a tripartite pure state");
  }
  int pivot;
  SideVariant side;
  if (fam == "c") { pivot = 1; side = SideVariant::Left; }
  else if (fam == "d") { pivot = 1; side = SideVariant::Right; }
  else if (fam == "e") { pivot = 2; side = SideVariant::Left; }
  else if (fam == "f") { pivot = 2; side = SideVariant::Right; }
  else if (fam == "c3") { pivot = 3; side = SideVariant::Left; }
  else if (fam == "d3") { pivot = 3; side = SideVariant::Right; }
  else {
    throw Error(ErrorCode::FamilyMismatch, "unknown family: " + fam);
  }
  return invariants_pure3(*p, pivot, side);
}

std::string render_invariants(const InvariantSet& s) {
  std::ostringstream out;
  out << "family: " << s.tag << "\n";
  out << "pivot: " << s.pivot << "\n";
  for (std::size_t g = 0; g < s.global.size(); ++g)
    out << "global[" << g + 1 << "]: " << fmt17(s.global[g]) << "\n";
  for (std::size_t i = 0; i < s.weights.size(); ++i)
    out << "weight[" << i << "]: " << fmt17(s.weights[i]) << "\n";
  for (std::size_t i = 0; i < s.per_branch.size(); ++i)
    for (std::size_t k = 0; k < s.per_branch[i].size(); ++k)
      out << "branch[" << i << "][" << k + 1
          << "]: " << fmt17(s.per_branch[i][k]) << "\n";
  for (std::size_t i = 0; i < s.inner_weights.size(); ++i)
    for (std::size_t j = 0; j < s.inner_weights[i].size(); ++j)
      out << "inner-weight[" << i << "][" << j
          << "]: " << fmt17(s.inner_weights[i][j]) << "\n";
  for (std::size_t i = 0; i < s.per_inner.size(); ++i)
    for (std::size_t j = 0; j < s.per_inner[i].size(); ++j)
      for (std::size_t k = 0; k < s.per_inner[i][j].size(); ++k)
        out << "inner[" << i << "][" << j << "][" << k + 1
            << "]: " << fmt17(s.per_inner[i][j][k]) << "\n";
  return out.str();
}

int cmd_invariants(const std::string& input, const std::string& fam,
                   const std::string& out_path) {
  const StateVariant sv = load_state(input);
  const std::string text = render_invariants(compute_family(sv, fam));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::ParseError, "cannot open for writing: " + out_path);
    }
    out << text;
  }
  return 0;
}

// ---- compare ---------------------------------------------------------------

int cmd_compare(const std::string& in1, const std::string& in2,
                const std::string& cls, double tol, bool witness, int budget,
                std::uint64_t seed) {
  const StateVariant a = load_state(in1);
  const StateVariant b = load_state(in2);
  const ClassTag tag = parse_class_tag(cls);

  Verdict v;
  if (const PureState* pa = std::get_if<PureState>(&a)) {
    const PureState* pb = std::get_if<PureState>(&b);
    if (!pb) {
      throw Error(ErrorCode::DimensionMismatch, "cannot compare pure vs mixed");
    }
    v = decide_equivalence(*pa, *pb, tag, tol);
  } else {
    const MixedState* mb = std::get_if<MixedState>(&b);
    if (!mb) {
      throw Error(ErrorCode::DimensionMismatch, "cannot compare mixed vs pure");
    }
    v = decide_equivalence(std::get<MixedState>(a), *mb, tag, tol);
  }

  std::cout << "class: " << cls << "\n"
            << "decision: " << decision_name(v.decision) << "\n"
            << "evidence: " << fmt17(v.evidence) << "\n";

  if (witness && v.decision != Decision::NotInClass) {
    WitnessResult w;
    if (const PureState* pa = std::get_if<PureState>(&a)) {
      w = find_lu_witness(*pa, std::get<PureState>(b), budget, seed);
    } else {
      w = find_lu_witness(std::get<MixedState>(a), std::get<MixedState>(b),
                          budget, seed);
    }
    std::cout << "witness-found: " << (w.found ? "yes" : "no") << "\n"
              << "witness-overlap: " << fmt17(w.overlap) << "\n"
              << "witness-restarts: " << w.restarts_used << "\n";
    if (w.found && w.factors) {
      for (std::size_t f = 0; f < w.factors->size(); ++f) {
        const ComplexMatrix& u = (*w.factors)[f];
        std::cout << "factor[" << f + 1 << "]:\n";
        for (std::size_t i = 0; i < u.rows(); ++i) {
          for (std::size_t j = 0; j < u.cols(); ++j) {
            std::cout << "  (" << fmt17(u(i, j).real()) << ", "
                      << fmt17(u(i, j).imag()) << ")";
          }
          std::cout << "\n";
        }
      }
    }
  }

  switch (v.decision) {
    case Decision::Equivalent: return 0;
    case Decision::Inequivalent: return 1;
    case Decision::NotInClass: return 2;
    default: return 5;
  }
}

// ---- orbit-test ------------------------------------------------------------

// A degenerate weight cluster makes the underlying eigenbranches
// basis-dependent: per-branch data is then not a function of the state
// and cannot be expected to survive an orbit rotation.
bool has_degenerate_cluster(const std::vector<double>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (std::abs(w[i] - w[i + 1]) <= 1e-8) return true;
  return false;
}

// Keep only the layers that are well-defined functions of the state:
// globals and spectra always; per-branch data only when the spectrum
// that defines the branches is simple.
void strip_unstable(InvariantSet& s) {
  if (has_degenerate_cluster(s.weights)) {
    s.per_branch.clear();
    s.inner_weights.clear();
    s.per_inner.clear();
    return;
  }
  for (const std::vector<double>& iw : s.inner_weights) {
    if (has_degenerate_cluster(iw)) {
      s.per_inner.clear();
      return;
    }
  }
}

std::vector<InvariantSet> families_for(const StateVariant& sv) {
  std::vector<InvariantSet> sets;
  if (const PureState* p = std::get_if<PureState>(&sv)) {
    if (p->arity() == 3) {
      for (int pivot = 1; pivot <= 3; ++pivot) {
        sets.push_back(invariants_pure3(*p, pivot, SideVariant::Left));
        sets.push_back(invariants_pure3(*p, pivot, SideVariant::Right));
      }
    }
  } else {
    const MixedState& m = std::get<MixedState>(sv);
    if (m.arity() == 2) {
      sets.push_back(invariants_bipartite(m, BipartiteVariant::A));
      sets.push_back(invariants_bipartite(m, BipartiteVariant::B));
    } else {
      sets.push_back(invariants_mixed3(m, Mixed3Variant::G));
      sets.push_back(invariants_mixed3(m, Mixed3Variant::H));
    }
  }
  for (InvariantSet& s : sets) strip_unstable(s);
  return sets;
}

// Gate verdicts to track across the orbit. A gate whose defining
// spectrum is degenerate is skipped (entry false): its branch family is
// basis-dependent, so the verdict is not a function of the state.
std::vector<bool> orbit_gates(const StateVariant& sv) {
  std::vector<bool> track;
  if (const PureState* p = std::get_if<PureState>(&sv)) {
    if (p->arity() == 3) {
      for (int pivot = 1; pivot <= 3; ++pivot) {
        auto [tau, fam] = reduced_family_pure3(*p, pivot);
        track.push_back(!has_degenerate_cluster(fam.weights));
      }
    }
  } else {
    const MixedState& m = std::get<MixedState>(sv);
    if (m.arity() == 2) {
      track.push_back(
          !has_degenerate_cluster(reduced_family_bipartite(m).weights));
    } else {
      const Mixed3Hierarchy h = mixed3_hierarchy(m);
      bool ok = !has_degenerate_cluster(h.outer.weights);
      for (const ReducedFamily& f : h.inner)
        ok = ok && !has_degenerate_cluster(f.weights);
      track.push_back(ok);
    }
  }
  return track;
}

std::vector<bool> verdicts_for(const StateVariant& sv,
                               const std::vector<bool>& track) {
  // Orbit verdicts use the headroom tolerance 1e-8: exact-zero
  // commutators pick up rotation noise well below that.
  std::vector<bool> v;
  if (const PureState* p = std::get_if<PureState>(&sv)) {
    if (p->arity() == 3) {
      for (int pivot = 1; pivot <= 3; ++pivot)
        v.push_back(track[pivot - 1] &&
                    check_gamma_pure3(*p, pivot, 1e-8).verdict);
    }
  } else {
    const MixedState& m = std::get<MixedState>(sv);
    if (m.arity() == 2) {
      v.push_back(track[0] && check_gamma0(m, 1e-8).verdict);
    } else {
      v.push_back(track[0] && check_gamma_mixed3(m, 1e-8).verdict);
    }
  }
  return v;
}

int cmd_orbit_test(const std::string& input, int trials, std::uint64_t seed,
                   double tol) {
  const StateVariant sv = load_state(input);
  const std::vector<std::size_t>* dims;
  if (const PureState* p = std::get_if<PureState>(&sv)) {
    dims = &p->dims();
  } else {
    dims = &std::get<MixedState>(sv).dims();
  }

  const std::vector<InvariantSet> base = families_for(sv);
  const std::vector<bool> track = orbit_gates(sv);
  const std::vector<bool> base_verdicts = verdicts_for(sv, track);

  double max_dev = 0.0;
  int flips = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<ComplexMatrix> factors;
    for (std::size_t s = 0; s < dims->size(); ++s)
      factors.push_back(random_unitary(
          (*dims)[s], derive_seed(seed, static_cast<std::uint64_t>(t) * 8 + s)));
    StateVariant moved =
        std::holds_alternative<PureState>(sv)
            ? StateVariant(apply_local_unitary(std::get<PureState>(sv), factors))
            : StateVariant(
                  apply_local_unitary(std::get<MixedState>(sv), factors));
    const std::vector<InvariantSet> now = families_for(moved);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const ComparisonResult r = compare_invariants(base[i], now[i], tol);
      max_dev = std::max(max_dev, r.worst_mismatch);
    }
    const std::vector<bool> verdicts = verdicts_for(moved, track);
    for (std::size_t i = 0; i < verdicts.size(); ++i)
      if (verdicts[i] != base_verdicts[i]) ++flips;
  }

  const bool pass = max_dev <= tol && flips == 0;
  std::cout << "trials: " << trials << "\n";
  if (trials == 0) std::cout << "note: 0 trials, vacuous pass\n";
  std::cout << "max-deviation: " << fmt17(max_dev) << "\n"
            << "verdict-flips: " << flips << "\n"
            << "result: " << (pass ? "pass" : "fail") << "\n";
  return pass ? 0 : 1;
}

// ---- zoo -------------------------------------------------------------------

int cmd_zoo(const std::string& family, std::size_t dim,
            const std::vector<double>& weights, const std::string& out,
            const std::string& out2) {
  FamilySpec spec;
  spec.family = parse_family_id(family);
  spec.local_dim = dim;
  spec.weights = weights;

  std::map<std::string, std::string> meta;
  meta["family"] = family;
  std::string wstr;
  for (double w : weights) wstr += (wstr.empty() ? "" : ",") + fmt17(w);
  meta["weights"] = wstr;

  if (spec.family == FamilyId::TriPPair || spec.family == FamilyId::TriAbcPair) {
    if (out2.empty()) {
      throw Error(ErrorCode::BadSpec,
                  "pair families write two files; --out2 is required");
    }
    auto [first, second] = build_tripartite_pair(spec);
    meta["member"] = "1";
    save_state(out, first, meta);
    meta["member"] = "2";
    save_state(out2, second, meta);
    std::cout << "wrote: " << out << "\nwrote: " << out2 << "\n";
    return 0;
  }

  StateVariant state =
      spec.family == FamilyId::TriMixed
          ? StateVariant(build_tripartite_mixed(spec))
          : StateVariant(build_gamma0(spec));
  save_state(out, state, meta);
  std::cout << "wrote: " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-unitary equivalence toolkit for bipartite and "
               "tripartite quantum states"};
  app.require_subcommand(1);

  std::string input, input2, out_path, out2_path, cls, family;
  double tol = 0.0;
  bool witness = false;
  int trials = 100, budget = 64;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::vector<double> weights;

  CLI::App* check = app.add_subcommand("check", "class membership report");
  check->add_option("input", input)->required();
  check->add_option("--class", cls)->required();
  check->add_option("--tol", tol)->default_val(kDefaultGateTol);

  CLI::App* inv = app.add_subcommand("invariants", "invariant set report");
  inv->add_option("input", input)->required();
  inv->add_option("--family", family)->required();
  inv->add_option("--out", out_path);

  CLI::App* cmp = app.add_subcommand("compare", "equivalence verdict");
  cmp->add_option("input1", input)->required();
  cmp->add_option("input2", input2)->required();
  cmp->add_option("--class", cls)->required();
  cmp->add_option("--tol", tol)->default_val(kDefaultCompareTol);
  cmp->add_flag("--witness", witness);
  cmp->add_option("--budget", budget)->default_val(64);
  cmp->add_option("--seed", seed)->default_val(0);

  CLI::App* orbit = app.add_subcommand("orbit-test", "LU-invariance campaign");
  orbit->add_option("input", input)->required();
  orbit->add_option("--trials", trials)->default_val(100);
  orbit->add_option("--seed", seed)->default_val(0);
  orbit->add_option("--tol", tol)->default_val(kDefaultCompareTol);

  CLI::App* zoo = app.add_subcommand("zoo", "generate a reference-family state");
  zoo->add_option("--family", family)->required();
  zoo->add_option("--dim", dim);
  zoo->add_option("--weights", weights)->required()->delimiter(',');
  zoo->add_option("--out", out_path)->required();
  zoo->add_option("--out2", out2_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (check->parsed()) return cmd_check(input, cls, tol);
    if (inv->parsed()) return cmd_invariants(input, family, out_path);
    if (cmp->parsed())
      return cmd_compare(input, input2, cls, tol, witness, budget, seed);
    if (orbit->parsed()) return cmd_orbit_test(input, trials, seed, tol);
    if (zoo->parsed()) return cmd_zoo(family, dim, weights, out_path, out2_path);
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 64;
}
