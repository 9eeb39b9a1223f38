#ifndef MEADOW_TERM_HPP
#define MEADOW_TERM_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "meadow/errors.hpp"
#include "meadow/model.hpp"

namespace meadow {

enum class Op { Zero, One, Var, Add, Mul, Neg, Inv, Sign, Floor, Ceil };

int arity(Op op);
std::string op_name(Op op);

// Immutable term over the meadow signature with sign/floor/ceiling.
// Shared subtrees; copies are O(1).
class Term {
public:
    static Term zero();
    static Term one();
    static Term var(std::string name);
    static Term add(Term a, Term b);
    static Term mul(Term a, Term b);
    static Term neg(Term a);
    static Term inv(Term a);
    static Term sign(Term a);
    static Term floor(Term a);
    static Term ceil(Term a);
    static Term make(Op op, std::vector<Term> kids); // non-Var ops

    Op op() const { return n_->op; }
    const std::string& var_name() const { return n_->name; }
    int arity() const { return static_cast<int>(n_->kids.size()); }
    const Term& child(int i) const { return n_->kids[i]; }

    bool same_node(const Term& o) const { return n_ == o.n_; }

private:
    struct Node {
        Op op;
        std::string name; // Var only
        std::vector<Term> kids;
    };
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

bool equal(const Term& a, const Term& b); // structural
std::size_t term_size(const Term& t);     // node count

// 0 -> 0; n > 0 -> left-nested sum of ones; n < 0 -> neg of numeral(-n)
Term numeral(long n);

Term pseudo_unit(const Term& t); // 1_t = t * t^-1
Term pseudo_zero(const Term& t); // 0_t = 1 - 1_t

std::set<std::string> vars(const Term& t);

// Simultaneous substitution; variables absent from the map stay themselves.
Term substitute(const Term& t, const std::map<std::string, Term>& sub);

Term subterm_at(const Term& t, const Path& p);               // throws InvalidPath
Term replace_at(const Term& t, const Path& p, const Term& r); // throws InvalidPath

using Assignment = std::map<std::string, Scalar>;

// Evaluation under a model. Sign/Floor/Ceil under Z_p throws UnsupportedSymbol;
// a variable missing from the assignment throws UnboundVariable.
Scalar eval(const Term& t, const Model& m, const Assignment& env);

// Q0 / Z_p specializations (used pervasively by the exact machinery).
Rational eval_q0(const Term& t, const std::map<std::string, Rational>& env);
Zp eval_zp(const Term& t, std::uint64_t p, const std::map<std::string, Zp>& env);

} // namespace meadow

#endif
