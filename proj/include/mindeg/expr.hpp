#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mindeg/perm_group.hpp"

namespace mindeg {

/// AST for group expressions:
///   expr := term ('x' term)*
///   term := atom | atom 'circ' atom | 'rot(' expr ')' | 'csym(' expr ')'
///   atom := NAME '(' params ')' | NAME
/// Case- and whitespace-insensitive. Named atoms: W(A,n), W(B,n), W(D,n),
/// W(E,6|7|8), W(F,4), W(H,3|4), W(I2,m), Sym(n), Alt(n), C(n),
/// Dihedral(order), Q8, BinT, BinO, BinI, BinD(m), G(m,p,n).
struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
    enum class Kind { Named, Product, CentralProduct, Rotation, CentralizerSym };
    Kind kind = Kind::Named;
    std::string name;              // canonical atom name ("W", "Sym", "Q8", ...)
    std::string family;            // W subfamily ("A".."H", "I2")
    std::vector<unsigned> params;
    ExprPtr left, right;           // Product/CentralProduct: both; Rotation/CentralizerSym: left

    bool operator==(const GroupExpr& o) const;
};

/// Parse; throws std::invalid_argument with the offending position.
ExprPtr parse_expr(const std::string& text);

/// Canonical text form; parse(print(e)) == e.
std::string print_expr(const ExprPtr& e);

/// Construct the permutation group: classical W types get their natural
/// signed/symmetric actions, exceptional W types their root actions.
PermGroup evaluate(const ExprPtr& e);

} // namespace mindeg
