#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crnbinom/network.hpp"

namespace crnbinom {

/// Syntax or structural error in DSL input. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ParseWarning {
    std::size_t line = 0;
    std::string message;
};

struct ParseOptions {
    /// Accept `=>` reactions, giving each a fresh reverse rate constant.
    /// Without this, irreversible input is rejected.
    bool assume_reversible = false;
};

struct ParseResult {
    ReactionNetwork network;
    std::vector<ParseWarning> warnings;
};

namespace detail {

enum class TokenKind { Name, Integer, Plus, RevArrow, IrrArrow, LBracket, RBracket, End };

struct Token {
    TokenKind kind;
    std::size_t column = 0;       // 1-based
    std::string text;
    std::uint64_t value = 0;      // Integer only
};

inline std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;  // comment to end of line
        const std::size_t col = i + 1;
        if (c == '+') {
            tokens.push_back({TokenKind::Plus, col, "+"});
            ++i;
        } else if (c == '[') {
            tokens.push_back({TokenKind::LBracket, col, "["});
            ++i;
        } else if (c == ']') {
            tokens.push_back({TokenKind::RBracket, col, "]"});
            ++i;
        } else if (c == '<') {
            if (line.substr(i, 3) != "<=>")
                throw ParseError(line_no, col, "expected '<=>'");
            tokens.push_back({TokenKind::RevArrow, col, "<=>"});
            i += 3;
        } else if (c == '=') {
            if (line.substr(i, 2) != "=>")
                throw ParseError(line_no, col, "expected '=>' or '<=>'");
            tokens.push_back({TokenKind::IrrArrow, col, "=>"});
            i += 2;
        } else if (c >= '0' && c <= '9') {
            std::uint64_t value = 0;
            std::size_t j = i;
            while (j < line.size() && line[j] >= '0' && line[j] <= '9') {
                value = value * 10 + std::uint64_t(line[j] - '0');
                if (value > 0xFFFFFFFFull)
                    throw ParseError(line_no, col,
                                     "stoichiometric coefficient exceeds 32-bit range");
                ++j;
            }
            tokens.push_back(
                {TokenKind::Integer, col, std::string(line.substr(i, j - i)), value});
            i = j;
        } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t j = i;
            while (j < line.size() &&
                   ((line[j] >= 'a' && line[j] <= 'z') || (line[j] >= 'A' && line[j] <= 'Z') ||
                    (line[j] >= '0' && line[j] <= '9') || line[j] == '_'))
                ++j;
            tokens.push_back({TokenKind::Name, col, std::string(line.substr(i, j - i))});
            i = j;
        } else {
            throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
        }
    }
    tokens.push_back({TokenKind::End, line.size() + 1, ""});
    return tokens;
}

struct RawComplex {
    std::map<std::uint32_t, std::uint64_t> coeffs;  // may exceed 32 bits before the check
    std::size_t column = 0;
};

struct RawArrow {
    bool irreversible = false;
    std::optional<std::string> forward_label;
    std::optional<std::string> backward_label;
    std::size_t column = 0;
};

struct RawChain {
    std::size_t line = 0;
    std::vector<RawComplex> complexes;
    std::vector<RawArrow> arrows;  // arrows.size() == complexes.size() - 1
};

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line_no,
               std::vector<std::string>& species_names,
               std::map<std::string, std::uint32_t>& species_index)
        : tokens_(std::move(tokens)),
          line_(line_no),
          species_names_(species_names),
          species_index_(species_index) {}

    RawChain parse_chain() {
        RawChain chain;
        chain.line = line_;
        chain.complexes.push_back(parse_complex());
        while (peek().kind == TokenKind::RevArrow || peek().kind == TokenKind::IrrArrow)
            chain.arrows.push_back(parse_arrow()), chain.complexes.push_back(parse_complex());
        if (chain.complexes.size() < 2)
            throw ParseError(line_, peek().column, "expected '<=>' after complex");
        expect(TokenKind::End, "unexpected token after chain");
        return chain;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token consume() { return tokens_[pos_++]; }

    Token expect(TokenKind kind, const std::string& message) {
        if (peek().kind != kind) throw ParseError(line_, peek().column, message);
        return consume();
    }

    std::uint32_t species_id(const std::string& name) {
        auto it = species_index_.find(name);
        if (it != species_index_.end()) return it->second;
        const auto id = std::uint32_t(species_names_.size());
        species_names_.push_back(name);
        species_index_.emplace(name, id);
        return id;
    }

    RawComplex parse_complex() {
        RawComplex complex;
        complex.column = peek().column;
        bool first = true;
        while (true) {
            if (peek().kind == TokenKind::Integer) {
                const Token coeff = consume();
                if (peek().kind == TokenKind::Name) {
                    const Token name = consume();
                    add_term(complex, name, coeff.value);
                } else if (coeff.value == 0 && first) {
                    break;  // the literal empty complex "0"
                } else {
                    throw ParseError(line_, peek().column,
                                     "expected species name after coefficient");
                }
            } else if (peek().kind == TokenKind::Name) {
                const Token name = consume();
                add_term(complex, name, 1);
            } else {
                throw ParseError(line_, peek().column, "expected species term");
            }
            first = false;
            if (peek().kind != TokenKind::Plus) break;
            consume();
        }
        return complex;
    }

    void add_term(RawComplex& complex, const Token& name, std::uint64_t coeff) {
        if (coeff == 0) return;  // "0 B" terms are dropped, species not registered
        auto& sum = complex.coeffs[species_id(name.text)];
        sum += coeff;
        if (sum > 0xFFFFFFFFull)
            throw ParseError(line_, name.column,
                             "summed stoichiometric coefficient exceeds 32-bit range");
    }

    RawArrow parse_arrow() {
        RawArrow arrow;
        const Token tok = consume();
        arrow.column = tok.column;
        arrow.irreversible = tok.kind == TokenKind::IrrArrow;
        if (peek().kind == TokenKind::LBracket) {
            consume();
            arrow.forward_label = expect(TokenKind::Name, "expected rate label").text;
            expect(TokenKind::RBracket, "expected ']'");
            if (!arrow.irreversible) {
                expect(TokenKind::LBracket, "expected '[' (backward rate label)");
                arrow.backward_label = expect(TokenKind::Name, "expected rate label").text;
                expect(TokenKind::RBracket, "expected ']'");
            } else if (peek().kind == TokenKind::LBracket) {
                throw ParseError(line_, peek().column,
                                 "irreversible reaction takes a single rate label");
            }
        }
        return arrow;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::vector<std::string>& species_names_;
    std::map<std::string, std::uint32_t>& species_index_;
};

}  // namespace detail

/// Parses one model. Species are ordered by first appearance; reactions go
/// left to right, line by line. Auto rate labels follow the complex ordinals,
/// so a single chain gets k12/k21, k23/k32, ... and one-reaction lines get
/// k{2i+1}{2i+2} for reaction ordinal i.
inline ParseResult parse_network(std::string_view text, const ParseOptions& options = {}) {
    if (text.empty()) throw ParseError(1, 1, "empty input");

    std::vector<std::string> species_names;
    std::map<std::string, std::uint32_t> species_index;
    std::vector<detail::RawChain> chains;

    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++line_no;
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        auto tokens = detail::lex_line(line, line_no);
        if (tokens.front().kind == detail::TokenKind::End) continue;  // blank / comment
        detail::LineParser parser(std::move(tokens), line_no, species_names, species_index);
        chains.push_back(parser.parse_chain());
        if (end == text.size()) break;
    }

    ParseResult result;
    for (std::size_t i = 0; i < species_names.size(); ++i)
        result.network.species.push_back({std::uint32_t(i), species_names[i]});

    std::set<std::string> labels;
    std::uint64_t complex_ordinal = 0;  // global, so auto labels never repeat
    for (const auto& chain : chains) {
        for (std::size_t t = 0; t + 1 < chain.complexes.size(); ++t) {
            const auto& arrow = chain.arrows[t];
            if (arrow.irreversible && !options.assume_reversible)
                throw ParseError(chain.line, arrow.column,
                                 "irreversible reaction; rerun with --assume-reversible "
                                 "to add a free reverse rate constant");
            const std::string lhs = std::to_string(complex_ordinal + t + 1);
            const std::string rhs = std::to_string(complex_ordinal + t + 2);
            ReversibleReaction rx;
            rx.index = std::uint32_t(result.network.reactions.size());
            for (const auto& [s, c] : chain.complexes[t].coeffs)
                rx.reactant.add(s, std::uint32_t(c));
            for (const auto& [s, c] : chain.complexes[t + 1].coeffs)
                rx.product.add(s, std::uint32_t(c));
            rx.forward_label = arrow.forward_label.value_or("k" + lhs + rhs);
            rx.backward_label = arrow.backward_label.value_or("k" + rhs + lhs);
            for (const std::string* l : {&rx.forward_label, &rx.backward_label})
                if (!labels.insert(*l).second)
                    throw ParseError(chain.line, arrow.column,
                                     "rate label '" + *l + "' already used");
            if (rx.degenerate())
                result.warnings.push_back(
                    {chain.line, "reaction " + std::to_string(rx.index + 1) +
                                     " is degenerate (reactant equals product)"});
            result.network.reactions.push_back(std::move(rx));
        }
        complex_ordinal += chain.complexes.size();
    }

    if (result.network.reactions.empty())
        throw ParseError(1, 1, "no reactions found");
    validate(result.network);
    return result;
}

struct BatchModel {
    std::string name;
    ReactionNetwork network;
    std::vector<ParseWarning> warnings;
};

struct BatchError {
    std::string model;
    std::string message;
};

struct BatchResult {
    std::vector<BatchModel> models;
    std::vector<BatchError> errors;
};

namespace detail {

inline bool blank_or_comment(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '#') {  // rest of line is comment
            const auto nl = text.find('\n', i);
            if (nl == std::string_view::npos) return true;
            i = nl;
        } else if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
            return false;
        }
    }
    return true;
}

/// Separator lines look like "=== model-name ===".
inline std::optional<std::string> separator_name(std::string_view line) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    std::string_view t = trim(line);
    if (t.size() < 7 || t.substr(0, 3) != "===" || t.substr(t.size() - 3) != "===")
        return std::nullopt;
    return std::string(trim(t.substr(3, t.size() - 6)));
}

inline void parse_batch_segment(BatchResult& out, const std::string& name,
                                const std::string& body, const ParseOptions& options) {
    try {
        ParseResult parsed = parse_network(body, options);
        out.models.push_back({name, std::move(parsed.network), std::move(parsed.warnings)});
    } catch (const ParseError& e) {
        out.errors.push_back({name, e.what()});
    }
}

}  // namespace detail

/// Multi-model text: models separated by "=== name ===" lines. Text before
/// the first separator, if any, becomes a model named `default_name`.
/// Per-model failures are collected; remaining models still load.
inline BatchResult parse_batch_text(const std::string& text, const std::string& default_name,
                                    const ParseOptions& options = {}) {
    BatchResult result;
    std::string current_name = default_name;
    std::string body;
    bool any_separator = false;
    auto flush = [&]() {
        if (!detail::blank_or_comment(body))
            detail::parse_batch_segment(result, current_name, body, options);
        body.clear();
    };
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view line = std::string_view(text).substr(start, end - start);
        if (auto name = detail::separator_name(line)) {
            flush();
            current_name = *name;
            any_separator = true;
        } else {
            body.append(line);
            body.push_back('\n');
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    flush();
    (void)any_separator;
    return result;
}

/// Batch input: either a directory of `*.crn` files (one model per file,
/// lexicographic filename order) or a single separator-structured file.
inline BatchResult parse_batch(const std::filesystem::path& path,
                               const ParseOptions& options = {}) {
    namespace fs = std::filesystem;
    if (!fs::exists(path))
        throw std::runtime_error("no such file or directory: " + path.string());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + p.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".crn")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end(),
                  [](const fs::path& a, const fs::path& b) {
                      return a.filename().string() < b.filename().string();
                  });
        BatchResult result;
        for (const auto& file : files) {
            const std::string content = slurp(file);
            if (detail::blank_or_comment(content)) continue;
            detail::parse_batch_segment(result, file.stem().string(), content, options);
        }
        return result;
    }
    return parse_batch_text(slurp(path), path.stem().string(), options);
}

}  // namespace crnbinom
