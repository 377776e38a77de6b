#include "bnet/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "bnet/error.hpp"

namespace bnet {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;  // comment stripped
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
public:
    ExprParser(const Line& line, std::size_t start, const std::unordered_map<std::string, std::size_t>& names)
        : line_(line), pos_(start), names_(names) {}

    BoolExpr parse() {
        BoolExpr e = parse_or();
        skip_ws();
        if (pos_ < line_.text.size()) fail("unexpected '" + std::string(1, line_.text[pos_]) + "'");
        return e;
    }

private:
    BoolExpr parse_or() {
        std::vector<BoolExpr> terms{parse_and()};
        while (accept('|')) terms.push_back(parse_and());
        return BoolExpr::disj(std::move(terms));
    }

    BoolExpr parse_and() {
        std::vector<BoolExpr> factors{parse_not()};
        while (accept('&')) factors.push_back(parse_not());
        return BoolExpr::conj(std::move(factors));
    }

    BoolExpr parse_not() {
        if (accept('!')) return BoolExpr::negate(parse_not());
        return parse_atom();
    }

    BoolExpr parse_atom() {
        skip_ws();
        if (pos_ >= line_.text.size()) fail("expected an operand");
        char c = line_.text[pos_];
        if (c == '(') {
            ++pos_;
            BoolExpr e = parse_or();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < line_.text.size() && ident_char(line_.text[pos_])) fail("invalid literal");
            return BoolExpr::constant(c == '1');
        }
        if (ident_start(c)) {
            std::size_t begin = pos_;
            while (pos_ < line_.text.size() && ident_char(line_.text[pos_])) ++pos_;
            std::string name(line_.text.substr(begin, pos_ - begin));
            auto it = names_.find(name);
            if (it == names_.end()) fail_at(begin, "unknown identifier '" + name + "'");
            return BoolExpr::var(it->second);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < line_.text.size() && line_.text[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        throw ParseError(msg, line_.number, at + 1);
    }

    const Line& line_;
    std::size_t pos_;
    const std::unordered_map<std::string, std::size_t>& names_;
};

}  // namespace

BooleanNetwork parse_network(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        bool blank = true;
        for (char c : raw)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) lines.push_back({number, raw});
        if (end == text.size()) break;
        start = end + 1;
    }
    if (lines.empty()) throw ParseError("empty network: no variable definitions");

    std::vector<std::string> names;
    std::vector<std::size_t> expr_start;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& line : lines) {
        std::size_t pos = 0;
        while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
        if (!ident_start(line.text[pos])) throw ParseError("expected a variable name", line.number, pos + 1);
        std::size_t begin = pos;
        while (pos < line.text.size() && ident_char(line.text[pos])) ++pos;
        std::string name(line.text.substr(begin, pos - begin));
        while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
        if (pos >= line.text.size() || line.text[pos] != ',')
            throw ParseError("expected ',' after variable name", line.number, pos + 1);
        if (!index.emplace(name, names.size()).second)
            throw ParseError("duplicate target '" + name + "'", line.number, begin + 1);
        names.push_back(std::move(name));
        expr_start.push_back(pos + 1);
    }

    std::vector<BoolExpr> funcs;
    funcs.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) funcs.push_back(ExprParser(lines[i], expr_start[i], index).parse());
    return BooleanNetwork(std::move(names), std::move(funcs));
}

BooleanNetwork load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

}  // namespace bnet
