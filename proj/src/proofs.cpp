#include "meadow/proofs.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "meadow/rng.hpp"
#include "meadow/syntax.hpp"

namespace meadow {

namespace {

struct AxiomRow {
    const char* name;
    const char* lhs;
    const char* rhs;
};

// Md: commutative rings extended with a reflexive inverse. Signs: the sign
// operator on top of that. FC: floor and ceiling. one(x)/zero(x) abbreviate
// x*x^-1 and 1 - x*x^-1.
const AxiomRow kAxioms[] = {
    {"md.1", "(x + y) + z", "x + (y + z)"},
    {"md.2", "x + y", "y + x"},
    {"md.3", "x + 0", "x"},
    {"md.4", "x + -x", "0"},
    {"md.5", "(x * y) * z", "x * (y * z)"},
    {"md.6", "x * y", "y * x"},
    {"md.7", "1 * x", "x"},
    {"md.8", "x * (y + z)", "x * y + x * z"},
    {"md.9", "x^-1^-1", "x"},
    {"md.10", "x * (x * x^-1)", "x"},

    {"signs.1", "s(one(x))", "one(x)"},
    {"signs.2", "s(zero(x))", "zero(x)"},
    {"signs.3", "s(-1)", "-1"},
    {"signs.4", "s(x^-1)", "s(x)"},
    {"signs.5", "s(x * y)", "s(x) * s(y)"},
    {"signs.6", "zero(s(x) - s(y)) * (s(x + y) - s(x))", "0"},

    {"fc.1", "one(x) * floor(y)", "one(x) * floor(one(x) * y)"},
    {"fc.2", "zero(x) * floor(y)", "zero(x) * floor(zero(x) * y)"},
    {"fc.3", "floor(x - 1)", "floor(x) - 1"},
    {"fc.4", "floor(x + 1)", "floor(x) + 1"},
    {"fc.5", "floor(0)", "0"},
    {"fc.6", "(zero(1 - s(x)) * zero(1 - s(1 - x))) * floor(x)", "0"},
    {"fc.7", "ceil(x)", "-floor(-x)"},
};

} // namespace

Registry Registry::with_axioms() {
    Registry reg;
    for (const AxiomRow& row : kAxioms) reg.add(row.name, Equation{parse(row.lhs), parse(row.rhs)});
    return reg;
}

const Equation& Registry::at(const std::string& name) const {
    auto it = rules_.find(name);
    if (it == rules_.end()) throw UnknownRule(name);
    return it->second;
}

void Registry::add(const std::string& name, Equation eq) {
    if (!rules_.emplace(name, std::move(eq)).second) throw DuplicateRule(name);
}

Term apply_step(const Term& t, const ProofStep& step, const Registry& reg) {
    const Equation& eq = reg.at(step.rule);
    const Term& from = step.dir == Dir::LR ? eq.lhs : eq.rhs;
    const Term& to = step.dir == Dir::LR ? eq.rhs : eq.lhs;
    Term pattern = substitute(from, step.sub);
    Term redex = subterm_at(t, step.path);
    if (!equal(redex, pattern)) throw RedexMismatch(print(pattern), print(redex), step.path);
    return replace_at(t, step.path, substitute(to, step.sub));
}

CheckResult check_proof(const Proof& p, const Registry& reg) {
    Term cur = p.lhs;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        try {
            cur = apply_step(cur, p.steps[i], reg);
        } catch (const Error& e) {
            return CheckResult{false, i,
                               std::string(e.what()) + "; current term: " + print(cur)};
        }
    }
    if (!equal(cur, p.rhs))
        return CheckResult{false, p.steps.size(),
                           "proof ends at `" + print(cur) + "` but claims `" + print(p.rhs) +
                               "`"};
    return CheckResult{true, 0, ""};
}

namespace {

Term parse_expr(const std::string& text, const std::string& where) {
    try {
        return parse(text);
    } catch (const SyntaxError& e) {
        throw Error(where + ": " + e.what());
    }
}

Path parse_step_path(const std::string& tok, const std::string& where) {
    if (tok == "root") return {};
    Path p;
    std::size_t i = 0;
    while (true) {
        if (i == tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
            throw Error(where + ": malformed path `" + tok + "`");
        int v = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
            v = v * 10 + (tok[i++] - '0');
        p.push_back(v);
        if (i == tok.size()) return p;
        if (tok[i] != '.') throw Error(where + ": malformed path `" + tok + "`");
        ++i;
    }
}

} // namespace

std::vector<Proof> parse_proof_file(std::istream& in, const std::string& filename) {
    std::vector<Proof> out;
    std::optional<Proof> cur;
    bool have_lhs = false;
    bool have_rhs = false;

    std::string line;
    int lineno = 0;
    auto where = [&] { return filename + ":" + std::to_string(lineno); };

    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ss(line);
        std::string kw;
        ss >> kw;

        if (kw == "theorem") {
            if (cur) throw Error(where() + ": `theorem` before `qed`");
            std::string name, extra;
            ss >> name;
            if (name.empty()) throw Error(where() + ": `theorem` needs a name");
            if (ss >> extra) throw Error(where() + ": trailing tokens after theorem name");
            cur = Proof{};
            cur->name = name;
            have_lhs = have_rhs = false;
        } else if (kw == "lhs" || kw == "rhs") {
            if (!cur) throw Error(where() + ": `" + kw + "` outside a theorem");
            bool& seen = kw == "lhs" ? have_lhs : have_rhs;
            if (seen) throw Error(where() + ": duplicate `" + kw + "`");
            if (!cur->steps.empty()) throw Error(where() + ": `" + kw + "` after steps");
            std::string rest;
            std::getline(ss, rest);
            Term t = parse_expr(rest, where());
            (kw == "lhs" ? cur->lhs : cur->rhs) = t;
            seen = true;
        } else if (kw == "step") {
            if (!cur) throw Error(where() + ": `step` outside a theorem");
            if (!have_lhs || !have_rhs) throw Error(where() + ": `step` before lhs/rhs");
            std::string path_tok, rule, dir_tok;
            if (!(ss >> path_tok >> rule >> dir_tok))
                throw Error(where() + ": step needs `<path> <rule> <LR|RL>`");
            ProofStep step;
            step.path = parse_step_path(path_tok, where());
            step.rule = rule;
            if (dir_tok == "LR")
                step.dir = Dir::LR;
            else if (dir_tok == "RL")
                step.dir = Dir::RL;
            else
                throw Error(where() + ": direction must be LR or RL, got `" + dir_tok + "`");
            std::string bind;
            while (ss >> bind) {
                const std::size_t eq = bind.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw Error(where() + ": malformed binding `" + bind + "`");
                const std::string var = bind.substr(0, eq);
                if (step.sub.count(var))
                    throw Error(where() + ": variable `" + var + "` bound twice");
                step.sub.emplace(var, parse_expr(bind.substr(eq + 1), where()));
            }
            cur->steps.push_back(std::move(step));
        } else if (kw == "qed") {
            if (!cur) throw Error(where() + ": `qed` outside a theorem");
            if (!have_lhs || !have_rhs) throw Error(where() + ": `qed` before lhs/rhs");
            std::string extra;
            if (ss >> extra) throw Error(where() + ": trailing tokens after qed");
            out.push_back(std::move(*cur));
            cur.reset();
        } else {
            throw Error(where() + ": unknown directive `" + kw + "`");
        }
    }
    if (cur) throw Error(filename + ": unterminated theorem `" + cur->name + "`");
    return out;
}

std::vector<Proof> load_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open proof file `" + path + "`");
    return parse_proof_file(in, std::filesystem::path(path).filename().string());
}

CorpusFailure::CorpusFailure(const std::string& file_, const std::string& theorem_,
                             std::size_t step_, const std::string& reason)
    : Error(file_ + ": theorem `" + theorem_ + "` fails at step " + std::to_string(step_ + 1) +
            ": " + reason),
      file(file_),
      theorem(theorem_),
      step(step_) {}

CorpusReport run_corpus(const std::string& dir, Registry& reg) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw Error("cannot read corpus directory `" + dir + "`: " + ec.message());

    std::vector<fs::path> files;
    for (const auto& entry : it)
        if (entry.path().extension() == ".eqp") files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    CorpusReport report;
    for (const auto& file : files) {
        for (const Proof& p : load_proof_file(file.string())) {
            const CheckResult r = check_proof(p, reg);
            if (!r.verified)
                throw CorpusFailure(file.filename().string(), p.name, r.failed_step, r.reason);
            reg.add(p.name, Equation{p.lhs, p.rhs});

            CorpusEntry entry;
            entry.file = file.filename().string();
            entry.theorem = p.name;
            entry.steps = p.steps.size();
            std::set<std::string> used;
            for (const ProofStep& s : p.steps) used.insert(s.rule);
            entry.rules.assign(used.begin(), used.end());
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

std::string format_report(const CorpusReport& report) {
    std::string out;
    std::size_t total_steps = 0;
    for (const CorpusEntry& e : report.entries) {
        total_steps += e.steps;
        out += "Verified " + e.theorem + " (" + std::to_string(e.steps) +
               (e.steps == 1 ? " step" : " steps") + "; rules:";
        for (const auto& r : e.rules) out += " " + r;
        out += ") [" + e.file + "]\n";
    }
    out += "total: " + std::to_string(report.entries.size()) + " theorems, " +
           std::to_string(total_steps) + " steps\n";
    return out;
}

RandomVerdict check_propagation(Op symbol, PropagationMode mode, const SampleConfig& cfg) {
    if (arity(symbol) == 0) throw Error("propagation check needs an operator symbol");

    const Term t = Term::var("t");
    const Term r = Term::var("r");
    const Term u = Term::var("u");
    const Term g = mode == PropagationMode::Unit ? pseudo_unit(t) : pseudo_zero(t);

    std::vector<std::pair<Term, Term>> checks;
    auto ctx = [&](const Term& hole) {
        return arity(symbol) == 1 ? std::vector<Term>{Term::make(symbol, {hole})}
                                  : std::vector<Term>{Term::make(symbol, {hole, u}),
                                                      Term::make(symbol, {u, hole})};
    };
    const std::vector<Term> plain = ctx(r);
    const std::vector<Term> guarded = ctx(Term::mul(g, r));
    for (std::size_t i = 0; i < plain.size(); ++i)
        checks.emplace_back(Term::mul(g, plain[i]), Term::mul(g, guarded[i]));

    Rng rng(cfg.seed);
    RandomVerdict verdict;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        std::map<std::string, Rational> env;
        env["t"] = rng.rational(cfg.bound);
        env["r"] = rng.rational(cfg.bound);
        env["u"] = rng.rational(cfg.bound);
        ++verdict.samples;
        for (const auto& [lhs, rhs] : checks) {
            Rational a = eval_q0(lhs, env);
            Rational b = eval_q0(rhs, env);
            if (a != b) {
                verdict.counterexample = Counterexample{env, a, b};
                return verdict;
            }
        }
    }
    return verdict;
}

} // namespace meadow
