#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "ohg/reaction_io.hpp"

namespace ohg {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCategory::Syntax,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Name, Plus, Colon, Arrow, RevArrow, CatOpen, CatClose, End };

struct Token {
    Tok kind;
    std::string text;
    int column;  // 1-based
    bool space_before;
};

bool is_name_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) || c == '_' || c == '(' || c == ')' || c == ',' || c == '-';
}

bool is_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view describe(Tok t) {
    switch (t) {
        case Tok::Plus: return "'+'";
        case Tok::Colon: return "':'";
        case Tok::Arrow: return "'->'";
        case Tok::RevArrow: return "'<->'";
        case Tok::CatOpen: return "'-['";
        case Tok::CatClose: return "']->'";
        case Tok::End: return "end of line";
        case Tok::Name: return "name";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    bool space = false;
    auto starts = [&](std::string_view op) { return line.substr(i, op.size()) == op; };
    while (i < line.size()) {
        const char c = line[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = true;
            ++i;
            continue;
        }
        Token t{Tok::End, {}, col, space};
        space = false;
        if (c == '+') {
            t.kind = Tok::Plus;
            ++i;
        } else if (c == ':') {
            t.kind = Tok::Colon;
            ++i;
        } else if (starts("<->")) {
            t.kind = Tok::RevArrow;
            i += 3;
        } else if (starts("->")) {
            t.kind = Tok::Arrow;
            i += 2;
        } else if (starts("-[")) {
            t.kind = Tok::CatOpen;
            i += 2;
        } else if (starts("]->")) {
            t.kind = Tok::CatClose;
            i += 3;
        } else if (is_name_char(c)) {
            const std::size_t begin = i;
            while (i < line.size() && is_name_char(line[i]) && !starts("->") && !starts("-[")) ++i;
            t.kind = Tok::Name;
            t.text = std::string(line.substr(begin, i - begin));
        } else {
            throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, {}, static_cast<int>(line.size()) + 1, space});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line_no, std::vector<ParseWarning>& warnings)
        : toks_(std::move(tokens)), line_(line_no), warnings_(warnings) {}

    ReactionRecord parse() {
        ReactionRecord r;
        r.source_line = line_;
        if (peek().kind == Tok::Name && peek(1).kind == Tok::Colon) {
            r.id = take().text;
            take();
        }
        r.educts = side("educt");
        const Token& arrow = take();
        switch (arrow.kind) {
            case Tok::Arrow: r.arrow = ArrowKind::Forward; break;
            case Tok::RevArrow: r.arrow = ArrowKind::Reversible; break;
            case Tok::CatOpen: {
                r.catalyst = name("catalyst");
                expect(Tok::CatClose);
                r.arrow = ArrowKind::Forward;
                break;
            }
            default: fail(arrow, "expected '->', '<->' or '-[catalyst]->', found " + std::string(describe(arrow.kind)));
        }
        r.products = side("product");
        if (peek().kind != Tok::End) {
            fail(peek(), "unexpected " + std::string(describe(peek().kind)) + " after products");
        }
        return r;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& take() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

    void expect(Tok kind) {
        if (peek().kind != kind) {
            fail(peek(), "expected " + std::string(describe(kind)) + ", found " + std::string(describe(peek().kind)));
        }
        take();
    }

    std::string name(const char* role) {
        const Token& t = peek();
        if (t.kind != Tok::Name) {
            if (t.kind == Tok::End) fail(t, std::string("missing ") + role + " name");
            fail(t, "reserved token " + std::string(describe(t.kind)) + " used as " + role + " name");
        }
        return take().text;
    }

    std::vector<std::string> side(const char* role) {
        std::vector<std::string> names;
        const Token& first = peek();
        if (first.kind != Tok::Name) {
            if (first.kind == Tok::Plus) fail(first, std::string("reserved token '+' used as ") + role + " name");
            fail(first, std::string("empty ") + role + " side");
        }
        for (;;) {
            std::string term = name(role);
            const Token& after = peek();
            if (is_digits(term) && after.kind == Tok::Name && after.space_before) {
                warnings_.push_back({line_, after.column,
                                     "stoichiometric coefficient " + term + " before '" + after.text + "' ignored"});
                term = take().text;
            }
            if (std::find(names.begin(), names.end(), term) != names.end()) {
                warnings_.push_back({line_, peek().column, "duplicate " + std::string(role) + " '" + term +
                                                               "' collapsed"});
            } else {
                names.push_back(term);
            }
            if (peek().kind == Tok::Name) fail(peek(), "expected '+' or arrow between names");
            if (peek().kind != Tok::Plus) break;
            take();
        }
        return names;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
    std::vector<ParseWarning>& warnings_;
};

}  // namespace

ParseResult parse_reactions(std::istream& in) {
    ParseResult result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
            continue;
        }
        LineParser parser(tokenize(line, line_no), line_no, result.warnings);
        result.records.push_back(parser.parse());
    }
    return result;
}

ParseResult parse_reactions(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_reactions(in);
}

std::string format_reaction(const ReactionRecord& r) {
    auto join = [](const std::vector<std::string>& names) {
        std::string out;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i > 0) out += " + ";
            out += names[i];
        }
        return out;
    };
    std::string out;
    if (r.id) out += *r.id + ": ";
    out += join(r.educts);
    if (r.catalyst) {
        out += " -[" + *r.catalyst + "]-> ";
    } else {
        out += r.arrow == ArrowKind::Reversible ? " <-> " : " -> ";
    }
    out += join(r.products);
    return out;
}

std::string format_reactions(const std::vector<ReactionRecord>& records) {
    std::string out;
    for (const auto& r : records) out += format_reaction(r) + '\n';
    return out;
}

}  // namespace ohg
