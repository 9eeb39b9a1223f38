#include "meadow/term.hpp"

#include <cassert>

namespace meadow {

int arity(Op op) {
    switch (op) {
    case Op::Zero:
    case Op::One:
    case Op::Var:
        return 0;
    case Op::Add:
    case Op::Mul:
        return 2;
    default:
        return 1;
    }
}

std::string op_name(Op op) {
    switch (op) {
    case Op::Zero: return "0";
    case Op::One: return "1";
    case Op::Var: return "var";
    case Op::Add: return "+";
    case Op::Mul: return "*";
    case Op::Neg: return "neg";
    case Op::Inv: return "inv";
    case Op::Sign: return "s";
    case Op::Floor: return "floor";
    case Op::Ceil: return "ceil";
    }
    return "?";
}

std::string path_to_string(const Path& p) {
    if (p.empty()) return "root";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s;
}

Term Term::zero() {
    static const Term t(std::make_shared<const Node>(Node{Op::Zero, {}, {}}));
    return t;
}

Term Term::one() {
    static const Term t(std::make_shared<const Node>(Node{Op::One, {}, {}}));
    return t;
}

Term Term::var(std::string name) {
    return Term(std::make_shared<const Node>(Node{Op::Var, std::move(name), {}}));
}

Term Term::make(Op op, std::vector<Term> kids) {
    assert(op != Op::Var);
    assert(static_cast<int>(kids.size()) == meadow::arity(op));
    return Term(std::make_shared<const Node>(Node{op, {}, std::move(kids)}));
}

Term Term::add(Term a, Term b) { return make(Op::Add, {std::move(a), std::move(b)}); }
Term Term::mul(Term a, Term b) { return make(Op::Mul, {std::move(a), std::move(b)}); }
Term Term::neg(Term a) { return make(Op::Neg, {std::move(a)}); }
Term Term::inv(Term a) { return make(Op::Inv, {std::move(a)}); }
Term Term::sign(Term a) { return make(Op::Sign, {std::move(a)}); }
Term Term::floor(Term a) { return make(Op::Floor, {std::move(a)}); }
Term Term::ceil(Term a) { return make(Op::Ceil, {std::move(a)}); }

bool equal(const Term& a, const Term& b) {
    if (a.same_node(b)) return true;
    if (a.op() != b.op()) return false;
    if (a.op() == Op::Var) return a.var_name() == b.var_name();
    for (int i = 0; i < a.arity(); ++i)
        if (!equal(a.child(i), b.child(i))) return false;
    return true;
}

std::size_t term_size(const Term& t) {
    std::size_t n = 1;
    for (int i = 0; i < t.arity(); ++i) n += term_size(t.child(i));
    return n;
}

Term numeral(long n) {
    if (n == 0) return Term::zero();
    if (n < 0) return Term::neg(numeral(-n));
    Term t = Term::one();
    for (long i = 1; i < n; ++i) t = Term::add(t, Term::one());
    return t;
}

Term pseudo_unit(const Term& t) { return Term::mul(t, Term::inv(t)); }

Term pseudo_zero(const Term& t) {
    return Term::add(Term::one(), Term::neg(pseudo_unit(t)));
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
    if (t.op() == Op::Var) {
        out.insert(t.var_name());
        return;
    }
    for (int i = 0; i < t.arity(); ++i) collect_vars(t.child(i), out);
}

} // namespace

std::set<std::string> vars(const Term& t) {
    std::set<std::string> out;
    collect_vars(t, out);
    return out;
}

Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
    if (t.op() == Op::Var) {
        auto it = sub.find(t.var_name());
        return it == sub.end() ? t : it->second;
    }
    if (t.arity() == 0) return t;
    std::vector<Term> kids;
    kids.reserve(t.arity());
    bool changed = false;
    for (int i = 0; i < t.arity(); ++i) {
        kids.push_back(substitute(t.child(i), sub));
        changed = changed || !kids.back().same_node(t.child(i));
    }
    if (!changed) return t;
    return Term::make(t.op(), std::move(kids));
}

Term subterm_at(const Term& t, const Path& p) {
    Term cur = t;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= cur.arity()) throw InvalidPath(p);
        cur = cur.child(p[i]);
    }
    return cur;
}

namespace {

Term replace_rec(const Term& t, const Path& p, std::size_t i, const Term& r) {
    if (i == p.size()) return r;
    if (p[i] < 0 || p[i] >= t.arity()) throw InvalidPath(p);
    std::vector<Term> kids;
    kids.reserve(t.arity());
    for (int k = 0; k < t.arity(); ++k)
        kids.push_back(k == p[i] ? replace_rec(t.child(k), p, i + 1, r) : t.child(k));
    return Term::make(t.op(), std::move(kids));
}

} // namespace

Term replace_at(const Term& t, const Path& p, const Term& r) {
    return replace_rec(t, p, 0, r);
}

Rational eval_q0(const Term& t, const std::map<std::string, Rational>& env) {
    switch (t.op()) {
    case Op::Zero: return Rational(0);
    case Op::One: return Rational(1);
    case Op::Var: {
        auto it = env.find(t.var_name());
        if (it == env.end()) throw UnboundVariable(t.var_name());
        return it->second;
    }
    case Op::Add: return eval_q0(t.child(0), env) + eval_q0(t.child(1), env);
    case Op::Mul: return eval_q0(t.child(0), env) * eval_q0(t.child(1), env);
    case Op::Neg: return -eval_q0(t.child(0), env);
    case Op::Inv: return inv(eval_q0(t.child(0), env));
    case Op::Sign: return sign(eval_q0(t.child(0), env));
    case Op::Floor: return floor(eval_q0(t.child(0), env));
    case Op::Ceil: return ceil(eval_q0(t.child(0), env));
    }
    throw Error("unreachable");
}

Zp eval_zp(const Term& t, std::uint64_t p, const std::map<std::string, Zp>& env) {
    switch (t.op()) {
    case Op::Zero: return Zp(0, p);
    case Op::One: return Zp(1, p);
    case Op::Var: {
        auto it = env.find(t.var_name());
        if (it == env.end()) throw UnboundVariable(t.var_name());
        return it->second;
    }
    case Op::Add: return eval_zp(t.child(0), p, env) + eval_zp(t.child(1), p, env);
    case Op::Mul: return eval_zp(t.child(0), p, env) * eval_zp(t.child(1), p, env);
    case Op::Neg: return -eval_zp(t.child(0), p, env);
    case Op::Inv: return inv(eval_zp(t.child(0), p, env));
    case Op::Sign:
    case Op::Floor:
    case Op::Ceil:
        throw UnsupportedSymbol(op_name(t.op()), "Z_" + std::to_string(p));
    }
    throw Error("unreachable");
}

Scalar eval(const Term& t, const Model& m, const Assignment& env) {
    if (m.kind() == Model::Kind::Q0) {
        std::map<std::string, Rational> q;
        for (const auto& [k, v] : env) {
            if (!std::holds_alternative<Rational>(v))
                throw Error("assignment for " + k + " is not a rational");
            q.emplace(k, std::get<Rational>(v));
        }
        return eval_q0(t, q);
    }
    std::map<std::string, Zp> z;
    for (const auto& [k, v] : env) {
        if (!std::holds_alternative<Zp>(v))
            throw Error("assignment for " + k + " is not a Z_p residue");
        const Zp& r = std::get<Zp>(v);
        if (r.modulus() != m.modulus())
            throw Error("assignment for " + k + " has modulus " +
                        std::to_string(r.modulus()) + ", model expects " +
                        std::to_string(m.modulus()));
        z.emplace(k, r);
    }
    return eval_zp(t, m.modulus(), z);
}

} // namespace meadow
