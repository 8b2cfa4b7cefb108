#include <cctype>
#include <map>

#include "fondltl/error.hpp"
#include "fondltl/temporal/formula.hpp"

namespace fondltl::temporal {

namespace {

struct Tok {
    enum class Kind { Ident, Op, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    std::size_t at;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Tok> lex(std::string_view s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::Kind::LParen, "(", i++});
        } else if (c == ')') {
            out.push_back({Tok::Kind::RParen, ")", i++});
        } else if (c == ',') {
            out.push_back({Tok::Kind::Comma, ",", i++});
        } else if (s.substr(i, 3) == "<->") {
            out.push_back({Tok::Kind::Op, "<->", i});
            i += 3;
        } else if (s.substr(i, 2) == "->") {
            out.push_back({Tok::Kind::Op, "->", i});
            i += 2;
        } else if (s.substr(i, 2) == "&&" || s.substr(i, 2) == "||") {
            out.push_back({Tok::Kind::Op, std::string(1, c), i});
            i += 2;
        } else if (c == '&' || c == '|' || c == '!' || c == '~') {
            out.push_back({Tok::Kind::Op, std::string(1, c == '~' ? '!' : c), i++});
        } else if (std::isupper(static_cast<unsigned char>(c)) != 0) {
            std::size_t j = i;
            while (j < s.size() && std::isupper(static_cast<unsigned char>(s[j])) != 0) ++j;
            std::string word(s.substr(i, j - i));
            static const char* const ops[] = {"X", "WX", "U", "R", "F", "G", "Y", "S", "O", "H"};
            bool known = false;
            for (const char* op : ops) known = known || word == op;
            if (!known || (j < s.size() && ident_char(s[j]))) {
                throw SyntaxError("unknown operator '" + std::string(s.substr(i, j - i + 1)) + "' at column " +
                                      std::to_string(i + 1),
                                  0);
            }
            out.push_back({Tok::Kind::Op, std::move(word), i});
            i = j;
        } else if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() &&
                   (ident_char(s[j]) || (s[j] == '-' && j + 1 < s.size() && ident_char(s[j + 1])))) {
                ++j;
            }
            std::string word(s.substr(i, j - i));
            for (char& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            out.push_back({Tok::Kind::Ident, std::move(word), i});
            i = j;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "' at column " + std::to_string(i + 1), 0);
        }
    }
    out.push_back({Tok::Kind::End, "<end>", s.size()});
    return out;
}

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : toks_(lex(text)) {}

    FormulaPtr parse() {
        if (toks_.front().kind == Tok::Kind::End) throw SyntaxError("empty formula", 0);
        FormulaPtr f = iff();
        if (peek().kind != Tok::Kind::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> arity_;

    const Tok& peek() const { return toks_[pos_]; }
    bool at_op(const char* op) const { return peek().kind == Tok::Kind::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at column " + std::to_string(peek().at + 1), 0);
    }

    FormulaPtr iff() {
        FormulaPtr lhs = imp();
        while (at_op("<->")) {
            ++pos_;
            lhs = Formula::binary(Op::Iff, lhs, imp());
        }
        return lhs;
    }

    FormulaPtr imp() {
        FormulaPtr lhs = disj();
        if (at_op("->")) {
            ++pos_;
            return Formula::binary(Op::Implies, lhs, imp());
        }
        return lhs;
    }

    FormulaPtr disj() {
        std::vector<FormulaPtr> xs{conj()};
        while (at_op("|")) {
            ++pos_;
            xs.push_back(conj());
        }
        return Formula::nary(Op::Or, std::move(xs));
    }

    FormulaPtr conj() {
        std::vector<FormulaPtr> xs{temporal_binary()};
        while (at_op("&")) {
            ++pos_;
            xs.push_back(temporal_binary());
        }
        return Formula::nary(Op::And, std::move(xs));
    }

    FormulaPtr temporal_binary() {
        FormulaPtr lhs = unary();
        for (auto [name, op] : {std::pair{"U", Op::Until}, std::pair{"R", Op::Release}, std::pair{"S", Op::Since}}) {
            if (at_op(name)) {
                ++pos_;
                return Formula::binary(op, lhs, temporal_binary());
            }
        }
        return lhs;
    }

    FormulaPtr unary() {
        static const std::map<std::string, Op> prefix = {
            {"!", Op::Not},         {"X", Op::Next}, {"WX", Op::WeakNext}, {"F", Op::Eventually},
            {"G", Op::Always},      {"Y", Op::Yesterday}, {"O", Op::Once}, {"H", Op::Historically}};
        if (peek().kind == Tok::Kind::Op) {
            auto it = prefix.find(peek().text);
            if (it == prefix.end()) fail("operator '" + peek().text + "' is missing its left operand");
            ++pos_;
            return Formula::unary(it->second, unary());
        }
        return primary();
    }

    FormulaPtr primary() {
        const Tok& t = peek();
        if (t.kind == Tok::Kind::LParen) {
            ++pos_;
            FormulaPtr f = iff();
            if (peek().kind != Tok::Kind::RParen) fail("expected ')'");
            ++pos_;
            return f;
        }
        if (t.kind != Tok::Kind::Ident) fail("expected an atom, 'true', 'false' or '('");
        if (!std::islower(static_cast<unsigned char>(t.text.front()))) {
            fail("atom names must start with a letter, got '" + t.text + "'");
        }
        ++pos_;
        if (t.text == "true") return Formula::make_true();
        if (t.text == "false") return Formula::make_false();
        GroundedSymbol s{t.text, {}};
        if (peek().kind == Tok::Kind::LParen) {
            ++pos_;
            if (peek().kind == Tok::Kind::RParen) fail("atom '" + s.name + "' has an empty argument list");
            while (true) {
                if (peek().kind != Tok::Kind::Ident) fail("expected an object name");
                s.objects.push_back(peek().text);
                ++pos_;
                if (peek().kind == Tok::Kind::Comma) {
                    ++pos_;
                    continue;
                }
                if (peek().kind != Tok::Kind::RParen) fail("expected ',' or ')' in argument list");
                ++pos_;
                break;
            }
        }
        auto [it, inserted] = arity_.emplace(s.name, s.objects.size());
        if (!inserted && it->second != s.objects.size()) {
            throw SyntaxError("atom '" + s.name + "' used with " + std::to_string(s.objects.size()) +
                                  " and with " + std::to_string(it->second) + " arguments",
                              0);
        }
        return Formula::atom(std::move(s));
    }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

}  // namespace fondltl::temporal
