#include "mindeg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mindeg/coxeter.hpp"
#include "mindeg/group_ops.hpp"
#include "mindeg/named_groups.hpp"

namespace mindeg {

bool GroupExpr::operator==(const GroupExpr& o) const {
    if (kind != o.kind || name != o.name || family != o.family || params != o.params) return false;
    auto eq = [](const ExprPtr& a, const ExprPtr& b) {
        if (!a || !b) return !a && !b;
        return *a == *b;
    };
    return eq(left, o.left) && eq(right, o.right);
}

namespace {

struct Parser {
    std::string s; // lowercased, whitespace stripped, with positions into original
    std::vector<std::size_t> pos;
    std::size_t i = 0;

    explicit Parser(const std::string& text) {
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (std::isspace(static_cast<unsigned char>(text[k]))) continue;
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[k]))));
            pos.push_back(k);
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::size_t at = i < pos.size() ? pos[i] : (pos.empty() ? 0 : pos.back() + 1);
        throw std::invalid_argument(what + " at position " + std::to_string(at));
    }

    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i;
    }

    // whitespace is stripped, so adjacent keywords run together ("...xcsym"):
    // match known keywords by prefix instead of splitting on word boundaries
    bool match(const char* kw) {
        std::size_t n = std::char_traits<char>::length(kw);
        if (s.compare(i, n, kw) != 0) return false;
        i += n;
        return true;
    }

    bool lookahead(const char* kw, char then = '\0') const {
        std::size_t n = std::char_traits<char>::length(kw);
        if (s.compare(i, n, kw) != 0) return false;
        return then == '\0' || (i + n < s.size() && s[i + n] == then);
    }

    unsigned number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        unsigned v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + unsigned(s[i] - '0');
            if (v > 1000000) fail("parameter too large");
            ++i;
        }
        return v;
    }

    std::vector<unsigned> params(std::size_t arity) {
        expect('(');
        std::vector<unsigned> out;
        for (std::size_t k = 0; k < arity; ++k) {
            if (k) expect(',');
            out.push_back(number());
        }
        expect(')');
        return out;
    }

    ExprPtr named(std::string canonical, std::string family, std::vector<unsigned> ps) {
        auto e = std::make_shared<GroupExpr>();
        e->kind = GroupExpr::Kind::Named;
        e->name = std::move(canonical);
        e->family = std::move(family);
        e->params = std::move(ps);
        return e;
    }

    ExprPtr atom() {
        if (match("w(")) {
            std::string fam;
            if (match("i2"))
                fam = "I2";
            else if (!eof() && std::isalpha(static_cast<unsigned char>(peek())))
                fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i++])));
            if (fam != "A" && fam != "B" && fam != "D" && fam != "E" && fam != "F" &&
                fam != "H" && fam != "I2")
                fail("unknown Coxeter family");
            expect(',');
            unsigned n = number();
            expect(')');
            if (fam == "A" && n < 1) fail("W(A,n) needs n >= 1");
            if (fam == "B" && n < 1) fail("W(B,n) needs n >= 1");
            if (fam == "D" && n < 2) fail("W(D,n) needs n >= 2");
            if (fam == "E" && (n < 6 || n > 8)) fail("W(E,n) needs n in 6..8");
            if (fam == "F" && n != 4) fail("W(F,n) needs n = 4");
            if (fam == "H" && (n < 3 || n > 4)) fail("W(H,n) needs n in 3..4");
            if (fam == "I2" && n < 1) fail("W(I2,m) needs m >= 1");
            return named("W", fam, {n});
        }
        if (match("sym")) return named("Sym", "", params(1));
        if (match("alt")) {
            auto ps = params(1);
            if (ps[0] < 3) fail("Alt(n) needs n >= 3");
            return named("Alt", "", std::move(ps));
        }
        if (match("dihedral")) {
            auto ps = params(1);
            if (ps[0] < 2 || ps[0] % 2 != 0) fail("Dihedral(order) needs an even order >= 2");
            return named("Dihedral", "", std::move(ps));
        }
        if (match("q8")) return named("Q8", "", {});
        if (match("bint")) return named("BinT", "", {});
        if (match("bino")) return named("BinO", "", {});
        if (match("bini")) return named("BinI", "", {});
        if (match("bind")) {
            auto ps = params(1);
            if (ps[0] < 1) fail("BinD(m) needs m >= 1");
            return named("BinD", "", std::move(ps));
        }
        if (match("g")) {
            auto ps = params(3);
            if (ps[0] < 1 || ps[2] < 1 || ps[1] < 1 || ps[0] % ps[1] != 0)
                fail("G(m,p,n) needs p | m and m, n >= 1");
            return named("G", "", std::move(ps));
        }
        if (match("c")) { // after csym/circ handling; plain cyclic group
            auto ps = params(1);
            if (ps[0] < 1) fail("C(n) needs n >= 1");
            return named("C", "", std::move(ps));
        }
        fail("unknown group name");
    }

    ExprPtr term() {
        bool rot = lookahead("rot", '(');
        if (rot || lookahead("csym", '(')) {
            match(rot ? "rot(" : "csym(");
            ExprPtr inner = expr();
            expect(')');
            auto e = std::make_shared<GroupExpr>();
            e->kind = rot ? GroupExpr::Kind::Rotation : GroupExpr::Kind::CentralizerSym;
            e->left = inner;
            return e;
        }
        ExprPtr a = atom();
        if (match("circ")) {
            ExprPtr b = atom();
            auto e = std::make_shared<GroupExpr>();
            e->kind = GroupExpr::Kind::CentralProduct;
            e->left = a;
            e->right = b;
            return e;
        }
        return a;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (match("x")) {
            auto p = std::make_shared<GroupExpr>();
            p->kind = GroupExpr::Kind::Product;
            p->left = e;
            p->right = term();
            e = p;
        }
        return e;
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expr();
    if (!p.eof()) p.fail("unexpected trailing input");
    return e;
}

std::string print_expr(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("empty expression");
    switch (e->kind) {
    case GroupExpr::Kind::Named: {
        std::string out = e->name;
        if (e->name == "W") {
            out += "(" + e->family;
            for (auto p : e->params) out += "," + std::to_string(p);
            out += ")";
        } else if (!e->params.empty()) {
            out += "(";
            for (std::size_t i = 0; i < e->params.size(); ++i)
                out += (i ? "," : "") + std::to_string(e->params[i]);
            out += ")";
        }
        return out;
    }
    case GroupExpr::Kind::Product:
        return print_expr(e->left) + " x " + print_expr(e->right);
    case GroupExpr::Kind::CentralProduct:
        return print_expr(e->left) + " circ " + print_expr(e->right);
    case GroupExpr::Kind::Rotation:
        return "rot(" + print_expr(e->left) + ")";
    case GroupExpr::Kind::CentralizerSym:
        return "csym(" + print_expr(e->left) + ")";
    }
    throw std::logic_error("unreachable");
}

PermGroup evaluate(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("empty expression");
    switch (e->kind) {
    case GroupExpr::Kind::Named: {
        if (e->name == "W") {
            char f = e->family[0];
            unsigned n = e->params[0];
            if (f == 'A' || f == 'B' || f == 'D' || f == 'I') return natural_classical(f, n);
            return coxeter_group(f, n); // E, F, H: root action
        }
        if (e->name == "Sym") return symmetric_group(e->params[0]);
        if (e->name == "Alt") return alternating_group(e->params[0]);
        if (e->name == "C") return cyclic_regular(e->params[0]);
        if (e->name == "Dihedral") return dihedral_group(e->params[0] / 2);
        if (e->name == "Q8") return q8_signed();
        if (e->name == "BinT") return binary_tetrahedral();
        if (e->name == "BinO") return binary_octahedral();
        if (e->name == "BinI") return binary_icosahedral();
        if (e->name == "BinD") return binary_dihedral(e->params[0]);
        if (e->name == "G") return monomial_group(e->params[0], e->params[1], e->params[2]);
        throw std::logic_error("unhandled named group " + e->name);
    }
    case GroupExpr::Kind::Product:
        return direct_product(evaluate(e->left), evaluate(e->right));
    case GroupExpr::Kind::CentralProduct:
        return central_product(evaluate(e->left), evaluate(e->right));
    case GroupExpr::Kind::Rotation: {
        PermGroup g = evaluate(e->left);
        return rotation_subgroup(g, g.generators());
    }
    case GroupExpr::Kind::CentralizerSym:
        return centralizer_in_sym(evaluate(e->left));
    }
    throw std::logic_error("unreachable");
}

} // namespace mindeg
