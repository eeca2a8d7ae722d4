#include "gq/replay.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "gq/counting.hpp"

namespace gq {

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L3_4: return "L3.4";
    case LemmaId::L3_12: return "L3.12";
    case LemmaId::L3_13: return "L3.13";
    case LemmaId::L3_14: return "L3.14";
    case LemmaId::L3_15: return "L3.15";
    case LemmaId::R3_5: return "R3.5";
  }
  return "?";
}

std::vector<LemmaId> all_lemmas() {
  return {LemmaId::L3_4, LemmaId::L3_12, LemmaId::L3_13, LemmaId::L3_14, LemmaId::L3_15, LemmaId::R3_5};
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
  for (LemmaId id : all_lemmas())
    if (lemma_name(id) == text) return id;
  return std::nullopt;
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Arithmetic: return "ARITHMETIC";
    case StepKind::Geometric: return "GEOMETRIC";
    case StepKind::Note: return "NOTE";
    case StepKind::Conclusion: return "CONCLUSION";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Verified: return "verified";
    case Verdict::Failed: return "FAILED";
    case Verdict::Assumed: return "assumed";
    case Verdict::Noted: return "noted";
  }
  return "?";
}

bool ProofTrace::passed() const {
  if (steps.empty() || steps.back().kind != StepKind::Conclusion) return false;
  return std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) {
    return (s.kind != StepKind::Arithmetic && s.kind != StepKind::Conclusion) || s.verdict == Verdict::Verified;
  });
}

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string show(const RationalVector& row) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < row.size(); ++i) out += (i ? ", " : "") + to_string(row(i));
  return out + ")";
}

class TraceBuilder {
 public:
  TraceBuilder(LemmaId id, std::string claim, const ReplayConstants& constants) : constants_(constants) {
    trace_.id = std::string(lemma_name(id));
    trace_.claim = std::move(claim);
  }

  std::int64_t operator[](const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) throw std::out_of_range("replay constant '" + name + "' is missing");
    return it->second;
  }

  bool check(std::string statement, bool ok, std::string detail = {}) {
    trace_.steps.push_back({StepKind::Arithmetic, ok ? Verdict::Verified : Verdict::Failed, std::move(statement),
                            std::move(detail), std::nullopt});
    all_ok_ = all_ok_ && ok;
    return ok;
  }

  /// Claimed value must equal the computed one.
  bool expect(std::string statement, std::int64_t computed, std::int64_t claimed) {
    return check(std::move(statement), computed == claimed, cat("computed ", computed, ", stated ", claimed));
  }

  void cite(std::string ref, std::string fact, std::string statement) {
    trace_.steps.push_back({StepKind::Geometric, Verdict::Assumed, std::move(statement), {},
                            Citation{std::move(ref), std::move(fact)}});
  }

  void note(std::string statement) {
    trace_.steps.push_back({StepKind::Note, Verdict::Noted, std::move(statement), {}, std::nullopt});
  }

  ProofTrace conclude(std::string statement, bool ok = true) {
    const bool verified = ok && all_ok_;
    trace_.steps.push_back({StepKind::Conclusion, verified ? Verdict::Verified : Verdict::Failed,
                            std::move(statement), verified ? "" : "an arithmetic step did not verify",
                            std::nullopt});
    return std::move(trace_);
  }

  /// Records an exception as a failed step.
  void fail(const std::string& what) { check("replay aborted", false, what); }

 private:
  const ReplayConstants& constants_;
  ProofTrace trace_;
  bool all_ok_ = true;
};

// ---------------------------------------------------------------------------
// Constant tables

const ReplayConstants kSetup = {
    {"v", 325},           {"k", 68},           {"mu", 17},          {"triad", 5},
    {"line_size", 5},     {"lines_per_point", 17},
    {"lambda0", 204},     {"lambda1", 60},     {"lambda2", 15},     {"lambda3", 3},
    {"dlambda0", 60},     {"dlambda1", 15},    {"dlambda2", 3},
    {"a_far", 12},        {"c_near", 12},      {"b_near", 39},
    {"b_near_n0", 24},    {"b_near_n1", 15},   {"box_max", 204},
};

// Counts around s in N_4 and a point a of A_near not adjacent to s.
const ReplayConstants kFourClassBlock = {
    {"s.lines_missing_a_near", 13}, {"s.plain_lines", 10},   {"s.far_points_off_a_near", 16},
    {"s.a.common_in_b", 15},        {"s.a.common_in_b_far", 14}, {"s.far_n1", 10},
    {"s.far_n0", 6},
};

const ReplayConstants kPairLaw = {{"pair.offset", 7}};

const ReplayConstants kRestrictedFamily = {
    {"n5.value", 1},
    {"rf.n0", 28}, {"rf.n1", 75}, {"rf.n2", 80}, {"rf.n3", 20},
    {"rf.n0.n4", 1}, {"rf.n1.n4", -4}, {"rf.n2.n4", 6}, {"rf.n3.n4", -4},
};

const ReplayConstants kDerivedRow = {{"df.m0", 15}, {"df.m0.m3", -1}, {"df.m0.m4", -3}};

ReplayConstants merge(std::initializer_list<const ReplayConstants*> parts, ReplayConstants own) {
  for (const auto* part : parts) own.insert(part->begin(), part->end());
  return own;
}

const std::vector<std::int64_t> lambdas_of(const TraceBuilder& c) {
  return {c["lambda0"], c["lambda1"], c["lambda2"], c["lambda3"]};
}

const std::vector<std::int64_t> derived_lambdas_of(const TraceBuilder& c) {
  return {c["dlambda0"], c["dlambda1"], c["dlambda2"]};
}

std::int64_t as_int(const Rational& x) { return static_cast<std::int64_t>(numerator(x) / denominator(x)); }

// ---------------------------------------------------------------------------
// Shared blocks

void replay_setup(TraceBuilder& t) {
  t.expect("|B| = v − 2 − |A| − |C| − |D| = v − 2 − μ − 2(k − μ) = λ0",
           t["v"] - 2 - t["mu"] - 2 * (t["k"] - t["mu"]), t["lambda0"]);
  for (int i = 0; i < 3; ++i) {
    const auto li = t[cat("lambda", i)], lnext = t[cat("lambda", i + 1)];
    t.check(cat("3-design recursion λ", i, "·(5 − ", i, ") = λ", i + 1, "·(17 − ", i, ") with |A| = μ, block size = triad"),
            li * (t["triad"] - i) == lnext * (t["mu"] - i),
            cat(li * (t["triad"] - i), " vs ", lnext * (t["mu"] - i)));
  }
  for (int i = 0; i < 3; ++i)
    t.expect(cat("derived design: λ′", i, " = λ", i + 1), t[cat("lambda", i + 1)], t[cat("dlambda", i)]);
  t.expect("|A″| = |A| − |A′| = μ − triad", t["mu"] - t["triad"], t["a_far"]);
  t.expect("lines through r missing A = (t + 1) − |A′|; each meets C′ once: |C′| = |D′|",
           t["lines_per_point"] - t["triad"], t["c_near"]);
  t.expect("|B′| = k − |A′| − |C′| − |D′|", t["k"] - t["triad"] - 2 * t["c_near"], t["b_near"]);
  t.expect("|B′∩N0| = |C′|·(line size − 3) (r, C′ point, D′ point on each line)",
           t["c_near"] * (t["line_size"] - 3), t["b_near_n0"]);
  t.expect("|B′∩N1| = |A′|·(line size − 2) (r and an A′ point on each line)",
           t["triad"] * (t["line_size"] - 2), t["b_near_n1"]);
  t.expect("|B′∩N0| + |B′∩N1| = |B′|", t["b_near_n0"] + t["b_near_n1"], t["b_near"]);
  t.expect("integer search box bound = |B| = λ0", t["lambda0"], t["box_max"]);
}

void replay_four_class_counts(TraceBuilder& t) {
  t.cite("L3.7", "s ∈ N4; lines through s split by A″, C′, D′",
         "line types through s ∈ N4 off A′: one each meeting A″, C′, D′ (2 points of B″∖{s} each), the rest 1 point of B″∖{s}");
  t.expect("|Γ(s)∩A″| = |Γ(s)∩C′| = |Γ(s)∩D′| = triad − |Γ(s)∩A′| = 1", t["triad"] - 4, 1);
  t.expect("lines through s missing A′ = (t + 1) − 4", t["lines_per_point"] - 4, t["s.lines_missing_a_near"]);
  t.expect("lines meeting none of A″, C′, D′ = 13 − 3", t["s.lines_missing_a_near"] - 3, t["s.plain_lines"]);
  t.expect("#{x ∈ Γ(s)∩B″ : sx∩A′ = ∅} = 2 + 2 + 2 + plain lines", 3 * 2 + t["s.plain_lines"],
           t["s.far_points_off_a_near"]);
  t.cite("L3.7", "a ∈ A′∖Γ(s): Γ(s)∩Γ(a)∩C = {u}, Γ(s)∩Γ(a)∩D = {v}, Γ(s)∩Γ(a)∩B′ = {w}",
         "the common neighbours of s and a in C, D and B′ are single points");
  t.expect("|Γ(s)∩Γ(a)∩B| = μ − 1 − 1", t["mu"] - 2, t["s.a.common_in_b"]);
  t.expect("|Γ(s)∩Γ(a)∩B″| = 15 − 1", t["s.a.common_in_b"] - 1, t["s.a.common_in_b_far"]);
  t.cite("L3.7", "#{x ∈ Γ(s)∩Γ(a)∩B″ : sx∩A′ ≠ ∅} = 4", "points of Γ(a)∩B″ on lines from s to A′");
  t.expect("#{x ∈ Γ(s)∩B″∩N1 : sx∩A′ = ∅} = 14 − 4", t["s.a.common_in_b_far"] - 4, t["s.far_n1"]);
  t.expect("|Γ(s)∩B″∩N0| = 16 − 10", t["s.far_points_off_a_near"] - t["s.far_n1"], t["s.far_n0"]);
}

void replay_pair_law(TraceBuilder& t) {
  t.expect("pair law |Γ(x)∩Γ(y)∩B| = 7 + k: offset = μ − 2·triad (C and D parts are 5 − k each)",
           t["mu"] - 2 * t["triad"], t["pair.offset"]);
}

void check_shared_a_near(TraceBuilder& t, const std::string& name) {
  t.cite("L3.9", "|Γ(x)∩Γ(y)∩A′| = 3 for distinct x, y ∈ N4",
         "a shared 4-subset of A′ would make n5 = 2 for a triad inside A′");
  t.expect("two 4-subsets of the 5-set A′ sharing < 4 points share exactly 4 + 4 − 5", 2 * 4 - t["triad"], t[name]);
}

AffineSolutionFamily restricted_family(TraceBuilder& t) {
  // n5 ∈ [1, triad − 2]: r ∈ N5, and N5 ⊆ Γ(a1)∩Γ(a2)∩Γ(a3) ∖ {p, q}.
  std::vector<std::int64_t> candidates;
  for (std::int64_t n5 = 1; n5 <= t["triad"] - 2; ++n5)
    if (n5 != 2 && n5 != 3) candidates.push_back(n5);
  t.cite("L3.4", "n5 ≠ 2", "replayed separately");
  t.cite("L3.3", "n5 = 3 for some r ⇔ S ≅ Q(5,4)", "the geometry is assumed not isomorphic to Q(5,4), so n5 ≠ 3");
  t.check("n5 ∈ {1, …, triad − 2} ∖ {2, 3} leaves exactly n5 = " + std::to_string(t["n5.value"]),
          candidates.size() == 1 && candidates.front() == t["n5.value"],
          cat(candidates.size(), " candidate(s)"));

  const auto lambdas = lambdas_of(t);
  const auto system = profile_system(lambdas).with_fixed(5, Rational(t["n5.value"]));
  auto family = solve_counting_system(system, {4});
  t.check("restricted family solves its system identically", family_residual(system, family).cwiseEqual(Rational(0)).all());
  const RationalVector particular = family.particular();
  const RationalVector basis = family.basis(0);
  bool same = true;
  for (int i = 0; i < 4; ++i) {
    same = same && particular(i) == Rational(t[cat("rf.n", i)]);
    same = same && basis(i) == Rational(t[cat("rf.n", i, ".n4")]);
  }
  t.check(cat("(n0, n1, n2, n3) = (", t["rf.n0"], ", ", t["rf.n1"], ", ", t["rf.n2"], ", ", t["rf.n3"], ") + n4·(",
              t["rf.n0.n4"], ", ", t["rf.n1.n4"], ", ", t["rf.n2.n4"], ", ", t["rf.n3.n4"], ")"),
          same, "solved " + show(particular) + " + n4·" + show(basis));
  return family;
}

AffineSolutionFamily derived_family(TraceBuilder& t) {
  const auto lambdas = derived_lambdas_of(t);
  const auto system = derived_system(lambdas);
  auto family = solve_counting_system(system, {3, 4});
  t.check("derived family solves its system identically", family_residual(system, family).cwiseEqual(Rational(0)).all());
  t.check(cat("m0 = ", t["df.m0"], " + (", t["df.m0.m3"], ")·m3 + (", t["df.m0.m4"], ")·m4"),
          family.affine(0, 0) == Rational(t["df.m0"]) && family.affine(0, 1) == Rational(t["df.m0.m3"]) &&
              family.affine(0, 2) == Rational(t["df.m0.m4"]),
          "solved row " + show(family.affine.row(0).transpose()));
  return family;
}

// ---------------------------------------------------------------------------
// Traces

ProofTrace replay_l3_4(const ReplayConstants& constants) {
  TraceBuilder t(LemmaId::L3_4, "n5 ≠ 2 for every r ∈ B", constants);
  try {
    replay_setup(t);
    t.cite("hypothesis", "n5 = " + std::to_string(t["n5.hyp"]), "N5 = {r, s} with r, s non-collinear");
    t.cite("L3.2", "|B′∩N0| = 24, |B′∩N1| = 15", "checked arithmetically in the setup block");
    t.cite("L3.1(2)", "|Γ(s)∩C′| = |Γ(s)∩D′| = 0",
           "each of the lines through s missing A′ carries one new N0 point of B″∖{s}");
    t.expect("new N0 points = lines through s missing A′ = (t + 1) − |A′|", t["lines_per_point"] - t["triad"],
             t["new_n0"]);
    t.expect("n0 ≥ |B′∩N0| + new = 24 + 12", t["b_near_n0"] + t["new_n0"], t["n0.lower"]);

    const auto lambdas = lambdas_of(t);
    const auto system = profile_system(lambdas);
    const auto family = solve_counting_system(system, {0, 1});
    t.check("profile family solves the four counting equations identically",
            family_residual(system, family).cwiseEqual(Rational(0)).all());
    const RationalVector n5_row = family.affine.row(5).transpose();
    t.check(cat("fourth component: ", t["fourth.n0"], "·n0 + n1 = ", t["fourth.rhs"]),
            n5_row(1) == Rational(t["fourth.n0"]) && n5_row(2) == Rational(1) &&
                Rational(t["n5.hyp"]) - n5_row(0) == Rational(t["fourth.rhs"]),
            "n5 = " + show(n5_row) + " · (1, n0, n1)");

    t.check(cat("integer solutions: 4 | ", t["fourth.rhs"], " so n1 = ", t["fourth.n0"], "m and n0 = ", t["m.offset"],
                " − m"),
            t["fourth.n0"] != 0 && t["fourth.rhs"] % t["fourth.n0"] == 0 &&
                t["fourth.rhs"] / t["fourth.n0"] == t["m.offset"]);
    RationalMatrix param(2, 2);
    param << Rational(t["m.offset"]), Rational(-1), Rational(0), Rational(t["fourth.n0"]);
    const RationalMatrix in_m = family.substitute(param);
    t.check("substituting (n0, n1) = (47 − m, 4m) keeps n5 = 2 identically",
            in_m(5, 0) == Rational(t["n5.hyp"]) && in_m(5, 1) == Rational(0),
            "n5 = " + show(in_m.row(5).transpose()));
    t.expect("n0 ≥ 36 ⇒ m ≤ 47 − 36", t["m.offset"] - t["n0.lower"], t["m.upper"]);
    t.check(cat("n3 = ", t["n3.slope"], "m + (", t["n3.offset"], ")"),
            in_m(3, 0) == Rational(t["n3.offset"]) && in_m(3, 1) == Rational(t["n3.slope"]),
            "n3 = " + show(in_m.row(3).transpose()) + " · (1, m)");
    const bool slope_positive = t["n3.slope"] > 0;
    t.check("n3 ≥ 0 bounds m from below (positive slope)", slope_positive);
    if (slope_positive)
      t.expect("n3 ≥ 0 ⇒ m ≥ ⌈50 / 4⌉", ceil_div(-t["n3.offset"], t["n3.slope"]), t["m.lower"]);
    t.check(cat("m ≥ ", t["m.lower"], " contradicts m ≤ ", t["m.upper"]), t["m.lower"] > t["m.upper"]);

    const int n = system.unknown_count();
    const std::vector<LinearConstraint> constraints = {
        LinearConstraint::equal(n, 5, t["n5.hyp"], "n5 = 2"),
        LinearConstraint::at_least(n, 0, t["n0.lower"], "n0 ≥ 36"),
        LinearConstraint::at_least(n, 1, t["b_near_n1"], "n1 ≥ 15"),
    };
    const auto hits = enumerate_feasible_profiles(family, constraints, IntegerBox::uniform(2, 0, t["box_max"]));
    t.check(cat("exhaustive scan of (n0, n1) ∈ [0, ", t["box_max"], "]² under n5 = 2, n0 ≥ 36, n1 ≥ 15"),
            hits.empty(), cat(hits.size(), " feasible profile(s)"));
    return t.conclude("feasible set empty: n5 = 2 is impossible");
  } catch (const std::exception& e) {
    t.fail(e.what());
    return t.conclude("replay did not complete", false);
  }
}

ProofTrace replay_r3_5(const ReplayConstants& constants) {
  TraceBuilder t(LemmaId::R3_5, "n5 ≠ 2 for every triad {p, q, r}", constants);
  t.note("the n5 = 2 argument only uses the counting identities and triad-trace sizes, which do not depend on "
         "which member of the triad plays r; so it applies to every labelling of every triad");
  const ProofTrace base = replay_l3_4(constants);
  t.check("the n5 = 2 replay passes with these constants", base.passed(),
          cat(base.steps.size(), " steps replayed"));
  return t.conclude("n5 ≠ 2 for all triads");
}

ProofTrace replay_l3_12(const ReplayConstants& constants) {
  TraceBuilder t(LemmaId::L3_12, "m4(a) ≤ 1 for every a ∈ A″", constants);
  try {
    replay_setup(t);
    replay_four_class_counts(t);
    replay_pair_law(t);
    t.cite("hypothesis", "m4(a) ≥ 2", "take distinct x, y ∈ M4(a) ⊆ N4; a ∈ Γ(x)∩Γ(y)∩A″");
    check_shared_a_near(t, "shared.a_near");
    t.expect("|Γ(x)∩Γ(y)∩B′| ≤ |Γ(x)∩Γ(y)∩Γ(r)| − |Γ(x)∩Γ(y)∩A′| = triad − 3",
             t["triad"] - t["shared.a_near"], t["shared.b_near.cap"]);
    const std::int64_t far_max = t["triad"] - t["shared.a_near"];
    t.check(cat("1 ≤ |Γ(x)∩Γ(y)∩A″| ≤ |Γ(x)∩Γ(y)∩Γ(p)| − 3 = ", far_max, ", stated value inside"),
            1 <= t["shared.a_far"] && t["shared.a_far"] <= far_max);
    t.cite("L3.12", "|Γ(x)∩Γ(y)∩A″| = 1", "the stated value");
    t.cite("L3.10", "at most 2 points of Γ(x)∩Γ(y)∩B″ lie in N1 ∪ N2", "the rest lie in N0");
    t.expect("k = |Γ(x)∩Γ(y)∩A| = 3 + 1", t["shared.a_near"] + t["shared.a_far"], t["pair.k"]);
    t.expect("|Γ(x)∩Γ(y)∩B| = 7 + k", t["pair.offset"] + t["pair.k"], t["pair.in_b"]);
    t.expect("|Γ(x)∩Γ(y)∩B″| ≥ 11 − 2", t["pair.in_b"] - t["shared.b_near.cap"], t["pair.in_b_far.lower"]);
    t.expect("|Γ(x)∩Γ(y)∩B″∩N0| ≥ 9 − 2", t["pair.in_b_far.lower"] - t["l310.apart"], t["pair.n0.lower"]);
    t.check(cat("|Γ(x)∩B″∩N0| ≥ ", t["pair.n0.lower"], " > ", t["s.far_n0"], " contradicts the four-class count"),
            t["pair.n0.lower"] > t["s.far_n0"]);
    bool every_case = true;
    std::string detail;
    for (std::int64_t j = 1; j <= far_max; ++j) {
      const std::int64_t bound = t["pair.offset"] + t["shared.a_near"] + j - t["shared.b_near.cap"] - t["l310.apart"];
      detail += cat(j == 1 ? "" : ", ", "|A″ part| = ", j, " gives ≥ ", bound);
      every_case = every_case && bound > t["s.far_n0"];
    }
    t.note("the same chain also covers |Γ(x)∩Γ(y)∩A″| = 2");
    t.check("for every admissible |Γ(x)∩Γ(y)∩A″| the N0 count exceeds 6", every_case, detail);
    t.cite("L3.11", "no x, y ∈ N4 with |Γ(x)∩Γ(y)∩A″| = 1", "the chain above is its arithmetic");

    const auto family = derived_family(t);
    const int n = 5;
    const std::vector<LinearConstraint> constraints = {LinearConstraint::at_most(n, 4, t["m4.cap"], "m4 ≤ 1")};
    const auto hits =
        enumerate_feasible_profiles(family, constraints, IntegerBox::uniform(2, 0, t["dlambda0"]));
    t.check("derived profiles with m4 ≤ cap exist", !hits.empty(), cat(hits.size(), " profiles"));
    t.expect("largest m4 without a pair in M4(a) = 2 − 1", 2 - 1, t["m4.cap"]);
    return t.conclude("m4(a) ≤ 1");
  } catch (const std::exception& e) {
    t.fail(e.what());
    return t.conclude("replay did not complete", false);
  }
}

ProofTrace replay_l3_13(const ReplayConstants& constants) {
  TraceBuilder t(LemmaId::L3_13, "m3(a) ≤ 2 for every a ∈ A″", constants);
  try {
    replay_setup(t);
    t.cite("GQ axiom (iii)", "x ∈ M3(a): the line ax has at most one point of B″∩N0",
           "m3 ≤ |B″∩M0(a)|");
    t.cite("L3.13", "|Γ(a)∩B′∩N0| = 10", "also checked exhaustively on Q(5,4) by the bprime-n0-count suite");
    const auto family = derived_family(t);
    t.expect("|B″∩M0(a)| = m0 − 10: constant term", t["df.m0"] - t["a.b_near_n0"], t["b_far_m0.const"]);
    t.check("m4 coefficient of |B″∩M0(a)| is ≤ 0, so |B″∩M0(a)| ≤ 5 − m3", t["df.m0.m4"] <= 0);
    const std::int64_t shrink = 1 - t["df.m0.m3"];
    t.check("m3 ≤ 5 − m3 is a proper upper bound", shrink > 0);
    if (shrink > 0)
      t.expect("m3 ≤ ⌊5 / 2⌋", floor_div(t["b_far_m0.const"], shrink), t["m3.cap"]);

    const int n = 5;
    LinearConstraint room;
    room.coefficients = RationalVector::Constant(n, Rational(0));
    room.coefficients(0) = Rational(1);
    room.coefficients(3) = Rational(-1);
    room.relation = LinearConstraint::Relation::AtLeast;
    room.bound = Rational(t["a.b_near_n0"]);
    room.label = "m0 − 10 ≥ m3";
    const std::vector<LinearConstraint> constraints = {room};
    const auto hits = enumerate_feasible_profiles(family, constraints, IntegerBox::uniform(2, 0, t["dlambda0"]));
    std::int64_t best = -1;
    for (const auto& p : hits) best = std::max(best, p[3]);
    t.check(cat("exhaustive scan over (m3, m4) ∈ [0, ", t["dlambda0"], "]²: largest feasible m3 = ", t["m3.cap"]),
            best == t["m3.cap"], cat(hits.size(), " feasible, max m3 = ", best));
    return t.conclude("m3(a) ≤ 2");
  } catch (const std::exception& e) {
    t.fail(e.what());
    return t.conclude("replay did not complete", false);
  }
}

ProofTrace replay_l3_14(const ReplayConstants& constants) {
  TraceBuilder t(LemmaId::L3_14, "n4 > 0 for every r ∈ B", constants);
  try {
    replay_setup(t);
    const auto family = restricted_family(t);
    t.cite("hypothesis", "n4 = 0", "for some r ∈ B");
    t.expect("n4 = 0 ⇒ n3 = 20", as_int(family.evaluate(RationalVector::Constant(1, Rational(0)))(3)),
             t["n3.at_zero"]);
    t.expect("each x ∈ N3 sees |Γ(x)∩A| − 3 = triad − 3 points of A″", t["triad"] - 3, t["n3.far_neighbours"]);
    t.expect("Σ_{a∈A″} m3(a) = n3 · 2", t["n3.at_zero"] * t["n3.far_neighbours"], t["sum.m3"]);
    t.cite("L3.13", "m3(a) ≤ 2", "replayed separately");
    t.expect("Σ_{a∈A″} m3(a) ≤ |A″| · 2", t["a_far"] * t["m3.cap"], t["sum.cap"]);
    t.check(cat(t["sum.m3"], " > ", t["sum.cap"]), t["sum.m3"] > t["sum.cap"]);
    return t.conclude("contradiction: n4 > 0");
  } catch (const std::exception& e) {
    t.fail(e.what());
    return t.conclude("replay did not complete", false);
  }
}

ProofTrace replay_l3_15(const ReplayConstants& constants) {
  TraceBuilder t(LemmaId::L3_15, "no r ∈ B has n4 > 0", constants);
  try {
    replay_setup(t);
    replay_four_class_counts(t);
    replay_pair_law(t);
    const auto restricted = restricted_family(t);
    const auto derived = derived_family(t);

    t.cite("hypothesis", "n4 > 0", "take s ∈ N4");
    t.expect("n0 ≥ |B′∩N0| + |Γ(s)∩B″∩N0| = 24 + 6", t["b_near_n0"] + t["s.far_n0"], t["n0.lower"]);
    const Rational n0_const = restricted.affine(0, 0), n0_slope = restricted.affine(0, 1);
    const bool slope_ok = n0_slope > 0 && is_integer(n0_const) && is_integer(n0_slope);
    t.check("n0 grows with n4 in the restricted family", slope_ok, "n0 row " + show(restricted.affine.row(0).transpose()));
    if (slope_ok)
      t.expect("n0 = 28 + n4 ≥ 30 ⇒ n4 ≥ 2", ceil_div(t["n0.lower"] - as_int(n0_const), as_int(n0_slope)),
               t["n4.lower"]);

    t.cite("hypothesis", "t ∈ N4 ∖ {s}", "exists since n4 ≥ 2");
    check_shared_a_near(t, "shared.a_near");
    const std::int64_t b_near_max = t["triad"] - t["shared.a_near"];
    t.cite("L3.11", "no x, y ∈ N4 with |Γ(x)∩Γ(y)∩A″| ≥ 1 or |Γ(x)∩Γ(y)∩B′| ≤ 1",
           "the |A″ part| = 2 case falls to the same chain as in the m4 replay");
    t.expect("|Γ(s)∩Γ(t)∩B′| ∈ [0, triad − 3] ∖ [0, 1]: the only value left", b_near_max,
             t["shared.b_near"]);
    t.check("the value left for |Γ(s)∩Γ(t)∩B′| exceeds 1", t["shared.b_near"] > 1 && t["shared.b_near"] <= b_near_max);
    t.expect("|Γ(s)∩Γ(t)∩A″| ∈ [0, triad − 3] ∖ [1, triad − 3]: the only value left", 0, t["shared.a_far"]);
    t.expect("k = |Γ(s)∩Γ(t)∩A| = 3 + 0", t["shared.a_near"] + t["shared.a_far"], t["pair.k"]);
    t.expect("|Γ(s)∩Γ(t)∩B| = 7 + k", t["pair.offset"] + t["pair.k"], t["pair.in_b"]);
    t.expect("|Γ(s)∩Γ(t)∩B″| = 10 − 2", t["pair.in_b"] - t["shared.b_near"], t["pair.in_b_far"]);
    t.expect("|Γ(s)∩Γ(t)∩C| = triad − k; none in C′, so two points of C″", t["triad"] - t["pair.k"], t["pair.in_c"]);
    t.cite("L3.10", "|Γ(s)∩Γ(t)∩B″∩(N1 ∪ N2)| = 1 if sa∩tb ≠ ∅, 2 otherwise",
           "a, b: the points of A′ seen by only one of s, t");
    t.expect("case sa∩tb ≠ ∅: N0 part = 8 − 1", t["pair.in_b_far"] - t["l310.meet"], t["case.meet"]);
    t.expect("case sa∩tb = ∅: N0 part = 8 − 2", t["pair.in_b_far"] - t["l310.apart"], t["case.apart"]);
    t.check(cat("Γ(s)∩Γ(t)∩B″∩N0 ⊆ Γ(s)∩B″∩N0 of size 6 excludes ", t["case.meet"]),
            t["case.meet"] > t["s.far_n0"]);
    t.check("the remaining case fills Γ(s)∩B″∩N0 exactly", t["case.apart"] == t["s.far_n0"],
            cat(t["case.apart"], " vs ", t["s.far_n0"]));
    t.cite("L3.15", "Γ(s)∩B″∩N0 = Γ(x)∩B″∩N0 for all x ∈ N4 ∖ {s}", "equality of 6-sets from the previous step");
    t.expect("three points of N4 would share these common neighbours", t["case.apart"], t["triple.common"]);
    t.check(cat(t["triple.common"], " common neighbours > triad size ", t["triad"], " ⇒ n4 ≤ 2"),
            t["triple.common"] > t["triad"]);
    t.expect("2 ≤ n4 ≤ 2", t["n4.lower"], t["n4.exact"]);
    RationalVector n4_value(1);
    n4_value << Rational(t["n4.exact"]);
    const RationalVector at_two = restricted.evaluate(n4_value);
    t.expect("n4 = 2 ⇒ n0 = 30", as_int(at_two(0)), t["n0.exact"]);
    t.expect("n4 = 2 ⇒ n3 = 12", as_int(at_two(3)), t["n3.exact"]);
    t.expect("|B″∩N0| = n0 − |B′∩N0|", t["n0.exact"] - t["b_near_n0"], t["b_far_n0"]);
    t.check("B″∩N0 = Γ(s)∩B″∩N0 = Γ(t)∩B″∩N0 (sizes agree)", t["b_far_n0"] == t["s.far_n0"]);
    t.note("the double count below is written Σ_{c∈A″} m3(a); it is read as Σ_{c∈A″} m3(c)");
    t.expect("each x ∈ N3 sees triad − 3 points of A″", t["triad"] - 3, t["n3.far_neighbours"]);
    t.expect("Σ_{c∈A″} m3(c) = n3 · 2", t["n3.exact"] * t["n3.far_neighbours"], t["sum.m3"]);
    t.cite("L3.13", "m3(c) ≤ 2", "replayed separately");
    t.check("Σ m3(c) = |A″| · 2 forces m3(c) = 2 for all c", t["sum.m3"] == t["a_far"] * t["m3.cap"],
            cat(t["sum.m3"], " vs ", t["a_far"] * t["m3.cap"]));
    t.expect("m3(c) for every c", t["m3.cap"], t["m3.each"]);
    t.cite("L3.12", "m4(c) ≤ 1", "c the single point of Γ(s)∩A″, s ∈ M4(c) so m4(c) ≥ 1");
    t.check("1 ≤ m4(c) ≤ cap pins m4(c)", t["m4.cap"] >= 1 && t["m4.c"] == t["m4.cap"] && t["m4.c"] == 1,
            cat("m4(c) = ", t["m4.c"], ", cap ", t["m4.cap"]));
    RationalVector free_values(2);
    free_values << Rational(t["m3.each"]), Rational(t["m4.c"]);
    const std::int64_t m0 = as_int(derived.evaluate(free_values)(0));
    t.expect("|B″∩M0(c)| = m0 − |Γ(c)∩B′∩N0| = 15 − m3(c) − 3 − 10", m0 - t["a.b_near_n0"], t["b_far_m0.c"]);
    t.cite("GQ axiom (iii)", "the line sc has a point of B″∩N0", "so |B″∩M0(c)| ≥ 1");
    t.check(cat("|B″∩M0(c)| = ", t["b_far_m0.c"], " < ", t["needed"]), t["b_far_m0.c"] < t["needed"]);
    t.expect("points the line sc needs in B″∩M0(c)", 1, t["needed"]);
    return t.conclude("contradiction: no r ∈ B has n4 > 0");
  } catch (const std::exception& e) {
    t.fail(e.what());
    return t.conclude("replay did not complete", false);
  }
}

}  // namespace

ReplayConstants default_constants(LemmaId id) {
  switch (id) {
    case LemmaId::L3_4:
    case LemmaId::R3_5:
      return merge({&kSetup}, {{"n5.hyp", 2},
                               {"new_n0", 12},
                               {"n0.lower", 36},
                               {"fourth.n0", 4},
                               {"fourth.rhs", 188},
                               {"m.offset", 47},
                               {"m.upper", 11},
                               {"n3.slope", 4},
                               {"n3.offset", -50},
                               {"m.lower", 13}});
    case LemmaId::L3_12:
      return merge({&kSetup, &kFourClassBlock, &kPairLaw, &kDerivedRow}, {{"shared.a_near", 3},
                                                                        {"shared.b_near.cap", 2},
                                                                        {"shared.a_far", 1},
                                                                        {"l310.apart", 2},
                                                                        {"pair.k", 4},
                                                                        {"pair.in_b", 11},
                                                                        {"pair.in_b_far.lower", 9},
                                                                        {"pair.n0.lower", 7},
                                                                        {"m4.cap", 1}});
    case LemmaId::L3_13:
      return merge({&kSetup, &kDerivedRow}, {{"a.b_near_n0", 10}, {"b_far_m0.const", 5}, {"m3.cap", 2}});
    case LemmaId::L3_14:
      return merge({&kSetup, &kRestrictedFamily}, {{"n3.at_zero", 20},
                                                   {"n3.far_neighbours", 2},
                                                   {"sum.m3", 40},
                                                   {"m3.cap", 2},
                                                   {"sum.cap", 24}});
    case LemmaId::L3_15:
      return merge({&kSetup, &kFourClassBlock, &kPairLaw, &kRestrictedFamily, &kDerivedRow},
                   {{"n0.lower", 30},       {"n4.lower", 2},        {"shared.a_near", 3}, {"shared.b_near", 2},
                    {"shared.a_far", 0},    {"pair.k", 3},          {"pair.in_b", 10},    {"pair.in_b_far", 8},
                    {"pair.in_c", 2},       {"l310.meet", 1},       {"l310.apart", 2},    {"case.meet", 7},
                    {"case.apart", 6},      {"triple.common", 6},   {"n4.exact", 2},      {"n0.exact", 30},
                    {"n3.exact", 12},       {"b_far_n0", 6},        {"n3.far_neighbours", 2},
                    {"sum.m3", 24},         {"m3.cap", 2},          {"m3.each", 2},       {"m4.cap", 1},
                    {"m4.c", 1},            {"a.b_near_n0", 10},    {"b_far_m0.c", 0},    {"needed", 1}});
  }
  throw std::invalid_argument("default_constants: unknown lemma");
}

ProofTrace replay_lemma(LemmaId id, const ReplayConstants& constants) {
  switch (id) {
    case LemmaId::L3_4: return replay_l3_4(constants);
    case LemmaId::L3_12: return replay_l3_12(constants);
    case LemmaId::L3_13: return replay_l3_13(constants);
    case LemmaId::L3_14: return replay_l3_14(constants);
    case LemmaId::L3_15: return replay_l3_15(constants);
    case LemmaId::R3_5: return replay_r3_5(constants);
  }
  throw std::invalid_argument("replay_lemma: unknown lemma");
}

ProofTrace replay_lemma(LemmaId id) { return replay_lemma(id, default_constants(id)); }

ProofTrace replay_lemma(std::string_view id) {
  const auto parsed = parse_lemma_id(id);
  if (!parsed) throw std::invalid_argument("unknown lemma id '" + std::string(id) + "'");
  return replay_lemma(*parsed);
}

}  // namespace gq
