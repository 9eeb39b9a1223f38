// Acceptance checks: ten criteria, one PASS/FAIL line each. The whole
// randomized suite runs twice with the same master seed; the final line
// asserts the two reports are byte-identical. Exit status 0 iff all pass.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "meadow/equiv.hpp"
#include "meadow/errors.hpp"
#include "meadow/proofs.hpp"
#include "meadow/rng.hpp"
#include "meadow/smf.hpp"
#include "meadow/syntax.hpp"
#include "meadow/term.hpp"

#include "term_gen.hpp"

using namespace meadow;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMasterSeed = 20260815;
constexpr std::size_t kAcceptanceSmfCap = 20000;

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::set<std::string> equation_vars(const Equation& eq) {
    std::set<std::string> names = vars(eq.lhs);
    for (const auto& v : vars(eq.rhs)) names.insert(v);
    return names;
}

// ---- 1: every axiom holds exactly under random evaluation ------------------

Outcome axiom_validity(std::uint64_t seed) {
    const Registry reg = Registry::with_axioms();
    for (const auto& [name, eq] : reg.rules()) {
        SampleConfig cfg;
        cfg.count = 1000;
        cfg.bound = 50;
        cfg.seed = seed;
        const RandomVerdict v = equiv_random(eq.lhs, eq.rhs, cfg);
        if (v.counterexample)
            return {false, "axiom " + name + " fails over the rationals with lhs=" +
                               v.counterexample->lhs.to_string() +
                               " rhs=" + v.counterexample->rhs.to_string()};
        if (name.rfind("md.", 0) != 0) continue;
        for (std::uint64_t p : {5ull, 7ull}) {
            Rng rng(seed ^ (p << 8));
            for (int i = 0; i < 1000; ++i) {
                std::map<std::string, Zp> env;
                for (const auto& var : equation_vars(eq)) env.emplace(var, rng.zp(p));
                if (!(eval_zp(eq.lhs, p, env) == eval_zp(eq.rhs, p, env)))
                    return {false, "axiom " + name + " fails mod " + std::to_string(p)};
            }
        }
    }
    return {true, "(23 axioms x 1000 rational points; ring axioms also x 1000 points mod 5 "
                  "and mod 7)"};
}

// ---- 2: the sum-of-four-squares instance of x*x^-1 = 1 ---------------------

Outcome four_squares(std::uint64_t seed) {
    const Term l = parse("(1 + x*x + y*y + z*z + u*u) / (1 + x*x + y*y + z*z + u*u)");
    std::vector<std::map<std::string, Rational>> envs;
    envs.push_back({{"x", 0}, {"y", 0}, {"z", 0}, {"u", 0}});
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i)
        envs.push_back({{"x", rng.rational(50)},
                        {"y", rng.rational(50)},
                        {"z", rng.rational(50)},
                        {"u", rng.rational(50)}});
    for (const auto& env : envs) {
        const Rational got = eval_q0(l, env);
        if (got != Rational(1)) return {false, "evaluated to " + got.to_string()};
    }
    return {true, "(1001 rational 4-tuples including all-zero, always exactly 1)"};
}

// ---- 3: normalization is sound and structurally well-formed ----------------

bool well_formed(const Smf& f) {
    if (f.is_ratio()) return f.level() == 0 && f.node_count() == 1;
    const Smf z = f.on_zero();
    const Smf u = f.on_unit();
    return f.level() == 1 + std::max(z.level(), u.level()) &&
           f.node_count() == 1 + z.node_count() + u.node_count() && well_formed(z) &&
           well_formed(u);
}

Outcome normalization_soundness(std::uint64_t seed) {
    Rng rng(seed);
    testing::GenConfig cfg;
    cfg.max_size = 30;
    cfg.max_vars = 3;

    int done = 0;
    int attempts = 0;
    while (done < 500) {
        if (++attempts > 5000) return {false, "term generation stalled"};
        const Term t = testing::gen_term(rng, cfg);
        std::optional<Smf> nf;
        try {
            nf = normalize(t, kAcceptanceSmfCap);
        } catch (const SizeBudgetExceeded&) {
            continue; // oversized normal form; draw a fresh term
        }
        if (!well_formed(*nf)) return {false, "malformed normal form for " + print(t)};
        const std::set<std::string> tv = vars(t);
        const std::set<std::string> fv = smf_vars(*nf);
        if (!std::includes(tv.begin(), tv.end(), fv.begin(), fv.end()))
            return {false, "variables invented while normalizing " + print(t)};
        for (int i = 0; i < 200; ++i) {
            const auto env = testing::gen_env(rng, t, 30);
            if (smf_eval(*nf, env) != eval_q0(t, env))
                return {false, "normal form disagrees with evaluation for " + print(t)};
        }
        ++done;
    }
    return {true, "(500 generated terms, size <= 30, <= 3 variables; 200 evaluation points "
                  "each)"};
}

// ---- 4: the exact univariate decision matches brute force ------------------

Outcome exact_decision(std::uint64_t seed) {
    std::vector<Rational> grid;
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 20; ++d) {
            const Rational q(n, d);
            if (q.num() == n && q.den() == d) grid.push_back(q);
        }

    Rng rng(seed);
    testing::GenConfig cfg;
    cfg.max_size = 16;
    cfg.max_vars = 1;

    int decided = 0;
    int attempts = 0;
    while (decided < 200) {
        if (++attempts > 2000) return {false, "pair generation stalled"};
        const Term a = testing::gen_term(rng, cfg);
        const Term b = testing::gen_term(rng, cfg);
        std::optional<ExactVerdict> v;
        try {
            v = equiv_univariate_exact(a, b, kAcceptanceSmfCap);
        } catch (const SizeBudgetExceeded&) {
            continue;
        }
        ++decided;
        for (const Rational& q : grid) {
            const std::map<std::string, Rational> env{{"x", q}};
            const bool differ = eval_q0(a, env) != eval_q0(b, env);
            const bool listed = v->points.count(q) != 0;
            const bool consistent = v->agree_almost_everywhere ? differ == listed
                                                               : differ == !listed;
            if (!consistent)
                return {false, "verdict for `" + print(a) + "` vs `" + print(b) +
                                   "` is wrong at " + q.to_string()};
        }
    }
    return {true, "(200 decided pairs, verified against every reduced rational with "
                  "numerator and denominator in [-20, 20])"};
}

// ---- 5: landmark verdicts ---------------------------------------------------

Outcome landmark_verdicts(std::uint64_t) {
    struct Case {
        const char* lhs;
        const char* rhs;
        bool ae;
        const char* point;
    };
    const Case cases[] = {
        {"x / x", "1", true, "0"},
        {"(x*x - 1) / (x - 1)", "x + 1", true, "1"},
        {"x", "-x", false, "0"},
    };
    for (const Case& c : cases) {
        const ExactVerdict v = equiv_univariate_exact(parse(c.lhs), parse(c.rhs));
        const std::set<Rational> want{Rational::parse(c.point).value()};
        if (v.agree_almost_everywhere != c.ae || v.points != want)
            return {false, std::string("`") + c.lhs + "` vs `" + c.rhs + "` misjudged"};
    }
    return {true, "(x/x ~ 1 except {0}; (x^2-1)/(x-1) ~ x+1 except {1}; x vs -x agree only "
                  "at {0})"};
}

// ---- 6: the proof corpus checks and mutations are rejected ------------------

Outcome corpus_and_mutations(std::uint64_t seed) {
    Registry reg = Registry::with_axioms();
    CorpusReport report;
    try {
        report = run_corpus(MEADOW_CORPUS_DIR, reg);
    } catch (const Error& e) {
        return {false, std::string("corpus check failed: ") + e.what()};
    }

    for (const char* name :
         {"inv_zero", "neg_neg", "pu_t", "pz_sq", "sign_zero", "sign_one", "eq7", "eq8",
          "eq9", "eq10", "eq11", "eq13", "eq14", "eq15", "eq16", "prop41"})
        if (!reg.has(name)) return {false, std::string("theorem missing from corpus: ") + name};

    // Replay registration order to know which rules each proof may use, then
    // damage one step at a time: flipped direction, edited path, or a swapped
    // rule name. Every damaged proof must be rejected.
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(MEADOW_CORPUS_DIR))
        if (entry.path().extension() == ".eqp") files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });
    std::vector<Proof> proofs;
    std::vector<Registry> before;
    Registry cur = Registry::with_axioms();
    for (const auto& f : files)
        for (Proof& p : load_proof_file(f.string())) {
            before.push_back(cur);
            cur.add(p.name, Equation{p.lhs, p.rhs});
            proofs.push_back(std::move(p));
        }

    Rng rng(seed);
    int made = 0;
    while (made < 100) {
        const std::size_t pi = rng.below(proofs.size());
        const Proof& p = proofs[pi];
        const std::size_t si = rng.below(p.steps.size());
        Proof m = p;
        ProofStep& st = m.steps[si];
        const std::uint64_t kind = rng.below(4);
        if (kind == 0) {
            st.dir = st.dir == Dir::LR ? Dir::RL : Dir::LR;
        } else if (kind == 1) {
            st.path.push_back(0);
        } else if (kind == 2) {
            if (st.path.empty()) continue;
            ++st.path.back();
        } else {
            const auto& rules = before[pi].rules();
            auto it = rules.begin();
            std::advance(it, rng.below(rules.size()));
            if (it->first == st.rule) continue;
            st.rule = it->first;
        }
        if (check_proof(m, before[pi]).verified)
            return {false, "mutated proof still verifies: " + p.name + " step " +
                               std::to_string(si + 1) + " kind " + std::to_string(kind)};
        ++made;
    }

    std::size_t steps = 0;
    for (const auto& e : report.entries) steps += e.steps;
    return {true, "(" + std::to_string(report.entries.size()) + " theorems, " +
                      std::to_string(steps) + " steps; 100 single-step mutations all "
                      "rejected)"};
}

// ---- 7: guard propagation for every operator --------------------------------

Outcome propagation(std::uint64_t seed) {
    const std::pair<Op, const char*> ops[] = {
        {Op::Add, "+"},    {Op::Mul, "*"},     {Op::Neg, "-"},   {Op::Inv, "^-1"},
        {Op::Sign, "s"},   {Op::Floor, "floor"}, {Op::Ceil, "ceil"},
    };
    for (const auto& [op, name] : ops) {
        for (PropagationMode mode : {PropagationMode::Unit, PropagationMode::Zero}) {
            SampleConfig cfg;
            cfg.count = 1000;
            cfg.bound = 50;
            cfg.seed = seed;
            const RandomVerdict v = check_propagation(op, mode, cfg);
            if (v.counterexample)
                return {false, std::string("propagation fails for ") + name + " in " +
                                   (mode == PropagationMode::Unit ? "unit" : "zero") +
                                   " mode"};
        }
    }
    return {true, "(7 operators x 2 modes x 1000 samples, no counterexample)"};
}

// ---- 8: sign, floor, and ceiling semantics ----------------------------------

Outcome sign_floor_semantics(std::uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = rng.rational(60);
        const Rational b = rng.rational(60);
        const Rational sa = sign(a);
        if (sa != Rational(-1) && sa != Rational(0) && sa != Rational(1))
            return {false, "sign out of range at " + a.to_string()};
        if (sign(a * b) != sign(a) * sign(b))
            return {false, "sign not multiplicative at " + a.to_string() + ", " +
                               b.to_string()};
        if (floor(a - Rational(1)) != floor(a) - Rational(1))
            return {false, "floor shift-down fails at " + a.to_string()};
        if (floor(a + Rational(1)) != floor(a) + Rational(1))
            return {false, "floor shift-up fails at " + a.to_string()};
        if (ceil(a) != -floor(-a)) return {false, "ceiling duality fails at " + a.to_string()};

        // A point strictly inside the unit interval must floor to zero.
        const long den = 2 + static_cast<long>(rng.below(40));
        const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den - 1)));
        const Rational interior(num, den);
        if (floor(interior) != Rational(0))
            return {false, "floor nonzero inside (0,1) at " + interior.to_string()};
    }
    return {true, "(1000 samples: sign range and multiplicativity; floor shifts, interior "
                  "flooring, ceiling duality)"};
}

// ---- 9: refutation finds real witnesses --------------------------------------

Outcome refutation_witnesses(std::uint64_t) {
    SampleConfig cfg;
    cfg.count = 200;
    cfg.bound = 100;
    cfg.seed = 2;
    const RandomVerdict v = equiv_random(parse("x * x^-1"), parse("1"), cfg);
    if (!v.counterexample) return {false, "no counterexample for x*x^-1 = 1"};
    const Counterexample& c = *v.counterexample;
    if (c.assignment.at("x") != Rational(0) || c.lhs != Rational(0) || c.rhs != Rational(1))
        return {false, "unexpected witness for x*x^-1 = 1"};

    // Validity over the rationals does not transfer to prime fields: the
    // pseudo-unit of x^2+1 vanishes at x=1 mod 2.
    const Term pu = parse("(x*x + 1) * (x*x + 1)^-1");
    std::map<std::string, Zp> env{{"x", Zp(1, 2)}};
    const Zp got = eval_zp(pu, 2, env);
    if (!(got == Zp(0, 2))) return {false, "mod-2 fragment check did not refute"};
    return {true, "(x*x^-1 = 1 refuted at x=0; one(x^2+1) = 1 refuted mod 2 at x=1)"};
}

std::pair<bool, std::string> run_suite(std::uint64_t master) {
    const std::pair<const char*, Outcome (*)(std::uint64_t)> criteria[] = {
        {"axiom validity", axiom_validity},
        {"four-squares identity", four_squares},
        {"normalization soundness", normalization_soundness},
        {"exact univariate decision", exact_decision},
        {"landmark verdicts", landmark_verdicts},
        {"proof corpus and mutations", corpus_and_mutations},
        {"guard propagation", propagation},
        {"sign and floor semantics", sign_floor_semantics},
        {"refutation witnesses", refutation_witnesses},
    };
    bool all = true;
    std::string out;
    int idx = 0;
    for (const auto& [name, fn] : criteria) {
        ++idx;
        const Outcome o = fn(master + static_cast<std::uint64_t>(idx));
        all = all && o.ok;
        out += std::to_string(idx) + " " + name + ": " + (o.ok ? "PASS " : "FAIL ") +
               o.detail + "\n";
    }
    return {all, out};
}

} // namespace

int main() {
    const auto [ok_first, report_first] = run_suite(kMasterSeed);
    const auto [ok_second, report_second] = run_suite(kMasterSeed);
    const bool identical = ok_first == ok_second && report_first == report_second;

    std::fputs(report_first.c_str(), stdout);
    std::printf("10 determinism: %s (the full randomized suite, run twice with one seed, "
                "reports byte-identically)\n",
                identical ? "PASS" : "FAIL");
    return ok_first && identical ? 0 : 1;
}
