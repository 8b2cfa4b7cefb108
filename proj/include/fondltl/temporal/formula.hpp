#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fondltl::temporal {

/// A ground proposition such as `vehicleat(l13)`; zero objects renders as
/// the bare name.
struct GroundedSymbol {
    std::string name;
    std::vector<std::string> objects;

    std::string str() const;

    friend bool operator==(const GroundedSymbol&, const GroundedSymbol&) = default;
    friend auto operator<=>(const GroundedSymbol&, const GroundedSymbol&) = default;
};

enum class Op {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    // future
    Next,
    WeakNext,
    Until,
    Release,
    Eventually,
    Always,
    // past
    Yesterday,
    Since,
    Once,
    Historically,
};

bool is_future(Op op);
bool is_past(Op op);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable LTLf/PLTLf syntax tree node. `And`/`Or` are n-ary (≥ 2
/// operands); every other operator has its fixed arity.
class Formula {
public:
    Op op() const { return op_; }
    const GroundedSymbol& symbol() const { return symbol_; }
    const std::vector<FormulaPtr>& operands() const { return operands_; }
    const FormulaPtr& operand(std::size_t i = 0) const { return operands_.at(i); }

    /// Fully parenthesised concrete syntax; reparses to a structurally equal
    /// tree and doubles as a structural identity key.
    const std::string& str() const { return text_; }

    static FormulaPtr make_true();
    static FormulaPtr make_false();
    static FormulaPtr atom(GroundedSymbol s);
    static FormulaPtr unary(Op op, FormulaPtr sub);
    static FormulaPtr binary(Op op, FormulaPtr lhs, FormulaPtr rhs);
    /// n-ary And/Or; a single operand is returned unchanged, zero operands
    /// give the unit (true for And, false for Or).
    static FormulaPtr nary(Op op, std::vector<FormulaPtr> xs);

    Formula(Op op, GroundedSymbol symbol, std::vector<FormulaPtr> operands);

private:
    Op op_;
    GroundedSymbol symbol_;
    std::vector<FormulaPtr> operands_;
    std::string text_;
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

enum class Logic { Propositional, Future, Past, Mixed };

std::string_view to_string(Logic l);

/// Propositional when no temporal operator occurs, Future/Past when only
/// operators of that direction occur, Mixed otherwise.
Logic classify(const FormulaPtr& f);

/// Grounded symbols in order of first textual occurrence, deduplicated.
std::vector<GroundedSymbol> atoms(const FormulaPtr& f);

/// Negation normal form. Implications and equivalences are eliminated and
/// negations pushed to atoms using the finite-trace dualities; past
/// `Yesterday` has no dual in the syntax so `¬Y φ` keeps its negation.
FormulaPtr to_nnf(const FormulaPtr& f);

/// Parses the ASCII concrete syntax:
///   atoms      name | name(o1,...,ok)        (identifiers start lowercase)
///   constants  true | false
///   unary      ! ~ X WX F G Y O H            (prefix)
///   binary     & | -> <-> U R S              (infix)
/// Precedence from loosest: <->, ->, |, &, {U R S}, unary. `->`, U, R and S
/// associate to the right.
FormulaPtr parse_formula(std::string_view text);

}  // namespace fondltl::temporal
