#ifndef SPECTRAL_RECIPE_HPP
#define SPECTRAL_RECIPE_HPP

// A small expression language for building graphs:
//
//   expr  := call | atom
//   call  := name '(' arg (',' arg)* ')'
//   arg   := expr | integer
//   atom  := 'catalog:' key | 'g6:' graph6 | key
//
// Functions: complete(n) empty(n) cycle(n) path(n) kpq(p,q)
// multipartite(p1,...) kminus(l) ag3q(q) cone(X) complement(X) line(X)
// tensorJ(X,m) starJ(X,m) cartesian(X,Y) union(X,Y,...) distance(X,k).
// A bare key names a catalog entry.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/families.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"

namespace spectral {

namespace detail {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : s_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "' after recipe", pos_);
    return g;
  }

 private:
  using Arg = std::variant<Graph, std::size_t>;

  struct Located {
    Arg value;
    std::size_t pos;
  };

  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool delimiter(char c) { return c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c)); }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !delimiter(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Graph expr() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) throw ParseError("expected a graph expression", pos_);
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) throw ParseError("expected a graph expression, found a number", pos_);
    const std::string_view w = word();
    if (w.empty()) throw ParseError("expected a graph expression", start);
    if (w.starts_with("g6:")) {
      try {
        return parse_graph6(w.substr(3));
      } catch (const ParseError& e) {
        throw ParseError("bad graph6 literal: " + e.message(), start + 3 + e.position());
      }
    }
    if (w.starts_with("catalog:")) return lookup(w.substr(8), start + 8);
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '(') return call(std::string(w), start);
    return lookup(w, start);
  }

  Graph lookup(std::string_view key, std::size_t at) {
    for (const auto& e : catalog())
      if (e.key == key) return e.build();
    throw InvalidArgument("unknown catalog key '" + std::string(key) + "' at position " + std::to_string(at));
  }

  Located arg() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
        if (v > kMaxOrder) throw CapacityError("recipe integer exceeds " + std::to_string(kMaxOrder));
        ++pos_;
      }
      return {v, at};
    }
    return {expr(), at};
  }

  Graph call(const std::string& name, std::size_t at) {
    ++pos_;  // '('
    std::vector<Located> args;
    for (;;) {
      args.push_back(arg());
      skip_space();
      if (pos_ >= s_.size()) throw ParseError("unterminated argument list of " + name, pos_);
      if (s_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (s_[pos_] != ',') throw ParseError("expected ',' or ')' in arguments of " + name, pos_);
      ++pos_;
    }
    auto arity = [&](std::size_t k) {
      if (args.size() != k) throw ParseError(name + " takes " + std::to_string(k) + " argument(s), got " + std::to_string(args.size()), at);
    };
    auto num = [&](std::size_t i) {
      if (!std::holds_alternative<std::size_t>(args[i].value)) throw ParseError("argument " + std::to_string(i + 1) + " of " + name + " must be an integer", args[i].pos);
      return std::get<std::size_t>(args[i].value);
    };
    auto graph = [&](std::size_t i) -> const Graph& {
      if (!std::holds_alternative<Graph>(args[i].value)) throw ParseError("argument " + std::to_string(i + 1) + " of " + name + " must be a graph", args[i].pos);
      return std::get<Graph>(args[i].value);
    };

    if (name == "complete") return arity(1), complete(num(0));
    if (name == "empty") return arity(1), empty_graph(num(0));
    if (name == "cycle") return arity(1), cycle(num(0));
    if (name == "path") return arity(1), path(num(0));
    if (name == "kpq") return arity(2), complete_bipartite(num(0), num(1));
    if (name == "kminus") return arity(1), k_minus(num(0));
    if (name == "ag3q") return arity(1), ag3q_family(num(0));
    if (name == "cone") return arity(1), cone(graph(0));
    if (name == "complement") return arity(1), complement(graph(0));
    if (name == "line") return arity(1), line_graph(graph(0));
    if (name == "tensorJ") return arity(2), tensor_j(graph(0), num(1));
    if (name == "starJ") return arity(2), star_j(graph(0), num(1));
    if (name == "cartesian") return arity(2), cartesian_product(graph(0), graph(1));
    if (name == "distance") return arity(2), distance_graph(graph(0), num(1));
    if (name == "multipartite") {
      std::vector<std::size_t> parts;
      for (std::size_t i = 0; i < args.size(); ++i) parts.push_back(num(i));
      return complete_multipartite(parts);
    }
    if (name == "union") {
      std::vector<Graph> gs;
      for (std::size_t i = 0; i < args.size(); ++i) gs.push_back(graph(i));
      return disjoint_union(gs);
    }
    throw ParseError("unknown recipe function '" + name + "'", at);
  }
};

}  // namespace detail

/// Builds the graph described by `recipe`. Syntax errors throw ParseError
/// with the offending position; unknown catalog keys throw InvalidArgument.
inline Graph build_recipe(std::string_view recipe) { return detail::RecipeParser(recipe).parse(); }

}  // namespace spectral

#endif  // SPECTRAL_RECIPE_HPP
