#include "expr.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qsr::cli {

namespace {

struct Token {
    enum class Type { literal, plus, minus, times, divide, lparen, rparen };
    Type type;
    std::string text;     // literal text, or the full operator token
    std::size_t offset;   // position in the original input
    int ell{0};           // accuracy for divide
};

std::vector<Token> tokenize(std::string_view expr) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < expr.size()) {
        if (std::isspace(static_cast<unsigned char>(expr[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < expr.size() && !std::isspace(static_cast<unsigned char>(expr[i])) &&
               expr[i] != '(' && expr[i] != ')')
            ++i;
        if (start == i) {  // a paren
            out.push_back(Token{expr[start] == '(' ? Token::Type::lparen : Token::Type::rparen,
                                std::string(1, expr[start]), start, 0});
            ++i;
            continue;
        }
        std::string word(expr.substr(start, i - start));
        if (word == "+")
            out.push_back(Token{Token::Type::plus, word, start, 0});
        else if (word == "-")
            out.push_back(Token{Token::Type::minus, word, start, 0});
        else if (word == "*")
            out.push_back(Token{Token::Type::times, word, start, 0});
        else if (word.starts_with("/:")) {
            std::string digits = word.substr(2);
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("division operator needs an accuracy, e.g. /:7", start);
            out.push_back(Token{Token::Type::divide, word, start, std::stoi(digits)});
        } else
            out.push_back(Token{Token::Type::literal, std::move(word), start, 0});
    }
    return out;
}

struct Parser {
    const std::vector<Token>& tokens;
    std::size_t pos{0};
    std::size_t input_size;

    bool done() const { return pos >= tokens.size(); }
    const Token& peek() const { return tokens[pos]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, done() ? input_size : tokens[pos].offset);
    }

    StringState parse_expression() {
        StringState acc = parse_term();
        while (!done() &&
               (peek().type == Token::Type::plus || peek().type == Token::Type::minus)) {
            Token::Type op = peek().type;
            ++pos;
            StringState rhs = parse_term();
            acc = op == Token::Type::plus ? add_A(acc, rhs) : sub_A(acc, rhs);
        }
        return acc;
    }

    StringState parse_term() {
        StringState acc = parse_factor();
        while (!done() &&
               (peek().type == Token::Type::times || peek().type == Token::Type::divide)) {
            Token tok = peek();
            ++pos;
            StringState rhs = parse_factor();
            if (tok.type == Token::Type::times) {
                acc = mul_A(acc, rhs);
            } else {
                if (tok.ell < 1) throw ParseError("division accuracy must be >= 1", tok.offset);
                acc = div_A(acc, rhs, Accuracy(tok.ell));
            }
        }
        return acc;
    }

    StringState parse_factor() {
        if (done()) fail("expected a literal or '('");
        const Token& tok = peek();
        if (tok.type == Token::Type::lparen) {
            ++pos;
            StringState inner = parse_expression();
            if (done() || peek().type != Token::Type::rparen) fail("expected ')'");
            ++pos;
            return inner;
        }
        if (tok.type != Token::Type::literal) fail("expected a literal");
        ++pos;
        try {
            return parse_compact(tok.text);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), tok.offset + e.position);
        }
    }
};

}  // namespace

StringState eval_expression(std::string_view expr) {
    std::vector<Token> tokens = tokenize(expr);
    if (tokens.empty()) throw ParseError("empty expression", 0);
    Parser p{tokens, 0, expr.size()};
    StringState result = p.parse_expression();
    if (!p.done()) p.fail("trailing input");
    return canonicalize(result);
}

}  // namespace qsr::cli
