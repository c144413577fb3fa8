#include "gaut/config_text.hpp"

#include "gaut/errors.hpp"

#include <cctype>
#include <charconv>

namespace gaut {

namespace {

using Json = nlohmann::ordered_json;

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    ConfigDocument run()
    {
        ConfigDocument doc;
        std::string table;
        while (true) {
            skipBlank(true);
            if (atEnd())
                break;
            if (peek() == '[') {
                advance();
                skipBlank(false);
                table = bareKey();
                skipBlank(false);
                expect(']');
                if (doc.values.contains(table) && !doc.values[table].is_object())
                    fail("'" + table + "' is already a value");
                if (doc.values.contains(table))
                    fail("table [" + table + "] defined twice");
                doc.values[table] = Json::object();
                endOfLine();
                continue;
            }
            const SourcePosition keyPos = position();
            std::string key = bareKey();
            skipBlank(false);
            expect('=');
            skipBlank(false);
            const SourcePosition valuePos = position();
            Json value = parseValue();
            endOfLine();
            Json& target = table.empty() ? doc.values : doc.values[table];
            if (target.contains(key))
                throw ParseError("duplicate key '" + key + "'", keyPos.line, keyPos.column);
            target[key] = std::move(value);
            doc.positions[table.empty() ? key : table + "." + key] = valuePos;
        }
        return doc;
    }

private:
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }
    SourcePosition position() const { return {line_, column_}; }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'" + (atEnd() ? " before end of input" : ""));
        advance();
    }

    // spaces, tabs and comments; newlines too when requested
    void skipBlank(bool newlines)
    {
        while (!atEnd()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n'))
                advance();
            else if (c == '#')
                while (!atEnd() && peek() != '\n')
                    advance();
            else
                break;
        }
    }

    void endOfLine()
    {
        skipBlank(false);
        if (!atEnd() && peek() != '\n')
            fail("unexpected text after value");
    }

    std::string bareKey()
    {
        std::string key;
        while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
            key += peek();
            advance();
        }
        if (key.empty())
            fail("expected a key");
        return key;
    }

    Json parseValue()
    {
        char c = peek();
        if (c == '"')
            return parseString();
        if (c == '[')
            return parseArray();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
            return parseInteger();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const SourcePosition start = position();
            std::string word = bareKey();
            if (word == "true")
                return true;
            if (word == "false")
                return false;
            throw ParseError("unexpected word '" + word + "'", start.line, start.column);
        }
        fail(atEnd() ? "expected a value before end of input" : "expected a value");
    }

    Json parseString()
    {
        expect('"');
        std::string out;
        while (true) {
            if (atEnd() || peek() == '\n')
                fail("unterminated string");
            char c = peek();
            advance();
            if (c == '"')
                break;
            if (c == '\\') {
                if (atEnd())
                    fail("unterminated string");
                char e = peek();
                advance();
                switch (e) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                default: fail(std::string("unknown escape '\\") + e + "'");
                }
            } else {
                out += c;
            }
        }
        return out;
    }

    Json parseInteger()
    {
        const SourcePosition start = position();
        std::string digits;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-')
                digits += '-';
            advance();
        }
        while (!atEnd() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
            if (peek() != '_')
                digits += peek();
            advance();
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw ParseError("malformed or out-of-range integer", start.line, start.column);
        if (!atEnd() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '.'))
            fail("only integers are supported");
        return value;
    }

    Json parseArray()
    {
        expect('[');
        Json out = Json::array();
        while (true) {
            skipBlank(true);
            if (peek() == ']') {
                advance();
                return out;
            }
            out.push_back(parseValue());
            skipBlank(true);
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == ']') {
                advance();
                return out;
            }
            fail(atEnd() ? "unterminated array" : "expected ',' or ']'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

ConfigDocument parseConfigText(std::string_view text)
{
    return Reader(text).run();
}

} // namespace gaut
