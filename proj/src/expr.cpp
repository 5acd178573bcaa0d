#include "powerhg/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <variant>
#include <vector>

#include "powerhg/constructions.hpp"

namespace powerhg {

namespace {

using Arg = std::variant<long long, Graph>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = parse_call();
    skip_spaces();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return g;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string parse_name() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a construction name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Arg parse_arg() {
    skip_spaces();
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      long long value = 0;
      auto [next, ec] =
          std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc()) throw ParseError("malformed integer", pos_);
      pos_ = static_cast<std::size_t>(next - text_.data());
      return value;
    }
    return parse_call();
  }

  Graph parse_call() {
    std::size_t name_at;
    skip_spaces();
    name_at = pos_;
    std::string name = parse_name();
    expect('(');
    std::vector<Arg> args;
    if (!peek_is(')')) {
      args.push_back(parse_arg());
      while (peek_is(',')) {
        expect(',');
        args.push_back(parse_arg());
      }
    }
    expect(')');
    return build(name, std::move(args), name_at);
  }

  static long long want_int(const Arg& a, const std::string& name, std::size_t at) {
    if (const long long* v = std::get_if<long long>(&a)) return *v;
    throw ParseError(name + " takes integer arguments", at);
  }

  static Graph want_graph(const Arg& a, const std::string& name, std::size_t at) {
    if (const Graph* g = std::get_if<Graph>(&a)) return *g;
    throw ParseError(name + " takes a construction as its first argument", at);
  }

  Graph build(const std::string& name, std::vector<Arg> args, std::size_t at) {
    auto arity = [&](std::size_t n) {
      if (args.size() != n) {
        throw ParseError(name + " takes " + std::to_string(n) + " argument(s), got " +
                             std::to_string(args.size()),
                         at);
      }
    };
    try {
      if (name == "cycle") {
        arity(1);
        return cycle(static_cast<int>(want_int(args[0], name, at)));
      }
      if (name == "path") {
        arity(1);
        return path(static_cast<int>(want_int(args[0], name, at)));
      }
      if (name == "complete") {
        arity(1);
        return complete(static_cast<int>(want_int(args[0], name, at)));
      }
      if (name == "complete_bipartite") {
        arity(2);
        return complete_bipartite(static_cast<int>(want_int(args[0], name, at)),
                                  static_cast<int>(want_int(args[1], name, at)));
      }
      if (name == "wedge_cycles") {
        arity(2);
        return wedge_cycles(static_cast<int>(want_int(args[0], name, at)),
                            static_cast<int>(want_int(args[1], name, at)));
      }
      if (name == "corona") {
        arity(1);
        return corona(want_graph(args[0], name, at));
      }
      if (name == "generalized_corona") {
        if (args.size() < 2) {
          throw ParseError("generalized_corona takes a construction plus one pendant count "
                           "per vertex",
                           at);
        }
        Graph g = want_graph(args[0], name, at);
        if (static_cast<int>(args.size()) - 1 != g.order()) {
          throw ParseError("generalized_corona needs exactly " + std::to_string(g.order()) +
                               " pendant counts",
                           at);
        }
        std::vector<int> pendants;
        for (std::size_t i = 1; i < args.size(); ++i) {
          pendants.push_back(static_cast<int>(want_int(args[i], name, at)));
        }
        return generalized_corona(g, pendants);
      }
    } catch (const ParameterError& e) {
      throw ParseError(std::string(e.what()), at);
    }
    throw ParseError("unknown construction '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_construction(std::string_view text) { return Parser(text).parse(); }

}  // namespace powerhg
