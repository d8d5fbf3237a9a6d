#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace cell::sync {

/// Enumeration-style token carried in a rendezvous offer. Distinct from a
/// plain string so that abstract sensor values and free-form text cannot be
/// confused by structural equality.
struct Token {
    std::string name;

    friend bool operator==(const Token&, const Token&) = default;
    friend auto operator<=>(const Token&, const Token&) = default;
};

/// A value exchanged at a rendezvous: boolean, real, token, string, or a
/// tuple of values. Equality is structural; reals compare exactly (the
/// approximate comparison of sensor values lives in the abstraction layer,
/// not in the engine).
class Value {
  public:
    struct Tuple {
        std::vector<Value> items;

        friend bool operator==(const Tuple&, const Tuple&);
        friend bool operator<(const Tuple&, const Tuple&);
    };

    enum class Kind { Boolean, Real, Symbol, Text, Sequence };

    Value() : v_(false) {}
    Value(bool b) : v_(b) {}
    Value(double r) : v_(r) {}
    Value(Token t) : v_(std::move(t)) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(const char* s) : v_(std::string(s)) {}
    Value(Tuple t) : v_(std::move(t)) {}
    Value(std::vector<Value> items) : v_(Tuple{std::move(items)}) {}

    Kind kind() const { return static_cast<Kind>(v_.index()); }

    bool is_boolean() const { return kind() == Kind::Boolean; }
    bool is_real() const { return kind() == Kind::Real; }
    bool is_symbol() const { return kind() == Kind::Symbol; }
    bool is_text() const { return kind() == Kind::Text; }
    bool is_sequence() const { return kind() == Kind::Sequence; }

    bool boolean() const { return std::get<bool>(v_); }
    double real() const { return std::get<double>(v_); }
    const Token& symbol() const { return std::get<Token>(v_); }
    const std::string& text() const { return std::get<std::string>(v_); }
    const std::vector<Value>& items() const { return std::get<Tuple>(v_).items; }
    std::vector<Value>& items() { return std::get<Tuple>(v_).items; }

    friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
    friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }

    /// Terse rendering used in trace lines: true/false, reals with up to six
    /// significant decimals, tokens bare, strings quoted, tuples in ( ).
    std::string to_string() const;

  private:
    std::variant<bool, double, Token, std::string, Tuple> v_;
};

inline Value token(std::string name) { return Value(Token{std::move(name)}); }

/// Variable environment produced by unifying the offers of one rendezvous.
/// Variable scope is per offer: two offers may reuse a variable name without
/// clashing; the merged map is for trace records only.
using Binding = std::map<std::string, Value>;

} // namespace cell::sync
