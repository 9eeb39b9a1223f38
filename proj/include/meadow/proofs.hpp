#ifndef MEADOW_PROOFS_HPP
#define MEADOW_PROOFS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meadow/equiv.hpp"
#include "meadow/errors.hpp"
#include "meadow/term.hpp"

namespace meadow {

struct Equation {
    Term lhs;
    Term rhs;
};

// Named equations available for rewriting: the built-in axiom tables plus
// any lemmas proved so far. Lemma reuse is what keeps later proofs short.
class Registry {
public:
    static Registry with_axioms();

    bool has(const std::string& name) const { return rules_.count(name) != 0; }
    const Equation& at(const std::string& name) const; // throws UnknownRule
    void add(const std::string& name, Equation eq);    // throws DuplicateRule
    const std::map<std::string, Equation>& rules() const { return rules_; }

private:
    std::map<std::string, Equation> rules_;
};

enum class Dir { LR, RL };

// One rewrite: at `path`, the rule's source side instantiated with `sub`
// must match the subterm exactly; it is replaced by the instantiated target
// side. Variables absent from `sub` map to themselves.
struct ProofStep {
    Path path;
    std::string rule;
    Dir dir = Dir::LR;
    std::map<std::string, Term> sub;
};

struct Proof {
    std::string name;
    Term lhs = Term::zero();
    Term rhs = Term::zero();
    std::vector<ProofStep> steps;
};

Term apply_step(const Term& t, const ProofStep& step, const Registry& reg);

struct CheckResult {
    bool verified = false;
    // 0-based index of the failing step; steps.size() means every step
    // applied but the final term is not the claimed right-hand side.
    std::size_t failed_step = 0;
    std::string reason;
};

CheckResult check_proof(const Proof& p, const Registry& reg);

// Line format, one directive per line, '#' lines and blank lines skipped:
//   theorem <name>
//   lhs <expression>
//   rhs <expression>
//   step <path|root> <rule> <LR|RL> [<var>=<expression> ...]
//   qed
// Paths are dot-separated child indices ("1.0"); binding expressions must
// not contain spaces.
std::vector<Proof> parse_proof_file(std::istream& in, const std::string& filename);
std::vector<Proof> load_proof_file(const std::string& path);

struct CorpusEntry {
    std::string file;
    std::string theorem;
    std::size_t steps = 0;
    std::vector<std::string> rules; // distinct rules used, sorted
};

struct CorpusReport {
    std::vector<CorpusEntry> entries;
};

struct CorpusFailure : Error {
    std::string file;
    std::string theorem;
    std::size_t step;
    CorpusFailure(const std::string& file_, const std::string& theorem_, std::size_t step_,
                  const std::string& reason);
};

// Checks every *.eqp file in `dir` in lexicographic filename order,
// registering each theorem as it is verified. Throws CorpusFailure at the
// first broken proof.
CorpusReport run_corpus(const std::string& dir, Registry& reg);

std::string format_report(const CorpusReport& report);

// Numerical check of the information-propagation law behind normalization:
// for every context C built from one occurrence of `symbol`,
//   1_t * C[r] = 1_t * C[1_t * r]   (unit mode)
//   0_t * C[r] = 0_t * C[0_t * r]   (zero mode)
// sampled over random rationals for t, r and the context's side argument.
enum class PropagationMode { Unit, Zero };
RandomVerdict check_propagation(Op symbol, PropagationMode mode, const SampleConfig& cfg);

} // namespace meadow

#endif
