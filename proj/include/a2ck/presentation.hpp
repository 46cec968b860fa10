#ifndef A2CK_PRESENTATION_HPP
#define A2CK_PRESENTATION_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "a2ck/errors.hpp"
#include "a2ck/plane.hpp"

namespace a2ck {

// One relation a0*a1*a2 = 1, stored as the ordered triple of generator
// indices. Comparison is lexicographic.
struct Triple {
  int a0 = 0;
  int a1 = 0;
  int a2 = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct WrongArity : SyntaxError {
  WrongArity(std::size_t line, std::size_t got)
      : SyntaxError(line, "relator has " + std::to_string(got) +
                              " generators, expected 3") {}
};

struct UnknownGenerator : SyntaxError {
  UnknownGenerator(std::size_t line, const std::string& name)
      : SyntaxError(line, "unknown generator '" + name + "'") {}
};

struct ClosureCountMismatch : Error {
  explicit ClosureCountMismatch(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct CompletionNotUnique : Error {
  explicit CompletionNotUnique(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct UnknownBuiltin : Error {
  explicit UnknownBuiltin(const std::string& what)
      : Error(ErrorKind::usage, what) {}
};

// Parsed but unchecked content of a presentation file.
struct TrianglePresentation {
  int q = 0;
  std::vector<std::string> names;  // index order = declaration order
  std::vector<Triple> relators;
};

inline std::string triple_str(const Triple& t,
                              const std::vector<std::string>& names) {
  return "(" + names[static_cast<std::size_t>(t.a0)] + ", " +
         names[static_cast<std::size_t>(t.a1)] + ", " +
         names[static_cast<std::size_t>(t.a2)] + ")";
}

// File format, line oriented:
//   # comment
//   q <integer>                     first non-comment line
//   gen <name> ... <name>           exactly q^2+q+1 names
//   rel <name> <name> <name>        one per relation
inline TrianglePresentation parse_presentation(std::istream& in) {
  TrianglePresentation p;
  std::unordered_map<std::string, int> index;
  bool saw_q = false;
  bool saw_gen = false;
  std::size_t lineno = 0;
  std::string raw;

  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;

    if (!saw_q && tok != "q")
      throw SyntaxError(lineno, "expected q header, got '" + tok + "'");

    if (tok == "q") {
      if (saw_q) throw SyntaxError(lineno, "duplicate q line");
      std::string val;
      if (!(ls >> val)) throw SyntaxError(lineno, "q needs a value");
      int v = 0;
      auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
      if (ec != std::errc() || ptr != val.data() + val.size() || v < 0)
        throw SyntaxError(lineno, "q must be a nonnegative integer, got '" +
                                      val + "'");
      std::string extra;
      if (ls >> extra)
        throw SyntaxError(lineno, "trailing tokens after q value");
      p.q = v;
      saw_q = true;
    } else if (tok == "gen") {
      if (saw_gen) throw SyntaxError(lineno, "duplicate gen line");
      std::string name;
      while (ls >> name) {
        if (index.count(name))
          throw SyntaxError(lineno,
                            "generator '" + name + "' declared twice");
        index.emplace(name, static_cast<int>(p.names.size()));
        p.names.push_back(name);
      }
      std::size_t expect =
          static_cast<std::size_t>(p.q) * p.q + p.q + 1;
      if (p.names.size() != expect)
        throw SyntaxError(lineno, "gen lists " +
                                      std::to_string(p.names.size()) +
                                      " names, expected " +
                                      std::to_string(expect));
      saw_gen = true;
    } else if (tok == "rel") {
      if (!saw_gen) throw SyntaxError(lineno, "rel before gen");
      std::vector<std::string> parts;
      std::string name;
      while (ls >> name) parts.push_back(name);
      if (parts.size() != 3) throw WrongArity(lineno, parts.size());
      int g[3];
      for (int i = 0; i < 3; ++i) {
        auto it = index.find(parts[static_cast<std::size_t>(i)]);
        if (it == index.end())
          throw UnknownGenerator(lineno, parts[static_cast<std::size_t>(i)]);
        g[i] = it->second;
      }
      p.relators.push_back({g[0], g[1], g[2]});
    } else {
      throw SyntaxError(lineno, "unknown directive '" + tok + "'");
    }
  }

  if (!saw_q) throw SyntaxError(lineno + 1, "missing q header");
  if (!saw_gen) throw SyntaxError(lineno + 1, "missing gen line");
  return p;
}

inline TrianglePresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

// Deterministic serialization of the parsed content. Two files that parse to
// the same presentation produce the same text here regardless of comments or
// spacing.
inline std::string canonical_text(const TrianglePresentation& p) {
  std::ostringstream out;
  out << "q " << p.q << "\n";
  out << "gen";
  for (const auto& n : p.names) out << " " << n;
  out << "\n";
  for (const auto& r : p.relators)
    out << "rel " << p.names[static_cast<std::size_t>(r.a0)] << " "
        << p.names[static_cast<std::size_t>(r.a1)] << " "
        << p.names[static_cast<std::size_t>(r.a2)] << "\n";
  return out.str();
}

class ValidatedPresentation;
ValidatedPresentation validate(const TrianglePresentation& p);

// A presentation whose rotation closure, completion map and point-line map
// have all been checked. The alphabet is the closure in lexicographic order;
// transition matrices are indexed by it.
class ValidatedPresentation {
public:
  int q() const { return pres_.q; }
  int generator_count() const { return n_; }
  const std::vector<std::string>& names() const { return pres_.names; }
  const std::string& name(int i) const {
    return pres_.names.at(static_cast<std::size_t>(i));
  }
  const TrianglePresentation& presentation() const { return pres_; }
  const std::vector<Triple>& relators() const { return pres_.relators; }
  const std::vector<Triple>& alphabet() const { return alphabet_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  const CombinatorialPlane& plane() const { return plane_; }

  // Index of t in the alphabet, -1 if absent.
  int index_of(const Triple& t) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), t);
    if (it == alphabet_.end() || *it != t) return -1;
    return static_cast<int>(it - alphabet_.begin());
  }

  // The unique z with (x, y, z) in the closure, -1 if no triple starts (x, y).
  int completion(int x, int y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_)
      throw std::out_of_range("generator index");
    return comp_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(y)];
  }

private:
  friend ValidatedPresentation validate(const TrianglePresentation&);

  ValidatedPresentation(TrianglePresentation pres, int n,
                        std::vector<Triple> alphabet, std::vector<int> comp,
                        CombinatorialPlane plane)
      : pres_(std::move(pres)),
        n_(n),
        alphabet_(std::move(alphabet)),
        comp_(std::move(comp)),
        plane_(std::move(plane)) {}

  TrianglePresentation pres_;
  int n_;
  std::vector<Triple> alphabet_;
  std::vector<int> comp_;
  CombinatorialPlane plane_;
};

inline ValidatedPresentation validate(const TrianglePresentation& p) {
  const int n = p.q * p.q + p.q + 1;
  if (p.names.size() != static_cast<std::size_t>(n))
    throw UsageError("presentation has " + std::to_string(p.names.size()) +
                     " generators, expected " + std::to_string(n) +
                     " for order " + std::to_string(p.q));
  for (const auto& r : p.relators)
    for (int g : {r.a0, r.a1, r.a2})
      if (g < 0 || g >= n)
        throw UsageError("relator index " + std::to_string(g) +
                         " out of range");

  std::set<Triple> closure;
  for (const auto& r : p.relators) {
    closure.insert({r.a0, r.a1, r.a2});
    closure.insert({r.a1, r.a2, r.a0});
    closure.insert({r.a2, r.a0, r.a1});
  }

  const std::size_t expect =
      static_cast<std::size_t>(p.q + 1) * static_cast<std::size_t>(n);
  if (closure.size() != expect) {
    std::string msg = "closure has " + std::to_string(closure.size()) +
                      " triples, expected " + std::to_string(expect) +
                      " for order " + std::to_string(p.q);
    for (const auto& r : p.relators)
      if (r.a0 == r.a1 && r.a1 == r.a2)
        msg += "; relator " + triple_str(r, p.names) +
               " is invariant under rotation and contributes one triple";
    throw ClosureCountMismatch(msg);
  }

  std::vector<int> comp(static_cast<std::size_t>(n) * n, -1);
  for (const auto& t : closure) {
    int& slot = comp[static_cast<std::size_t>(t.a0) * n +
                     static_cast<std::size_t>(t.a1)];
    if (slot >= 0 && slot != t.a2)
      throw CompletionNotUnique(
          "triples " + triple_str({t.a0, t.a1, slot}, p.names) + " and " +
          triple_str(t, p.names) + " both complete the pair (" +
          p.names[static_cast<std::size_t>(t.a0)] + ", " +
          p.names[static_cast<std::size_t>(t.a1)] + ")");
    slot = t.a2;
  }

  std::vector<std::vector<int>> lambda(static_cast<std::size_t>(n));
  for (const auto& t : closure)
    lambda[static_cast<std::size_t>(t.a0)].push_back(t.a1);
  auto plane = CombinatorialPlane::from_lambda(p.q, std::move(lambda));

  return ValidatedPresentation(
      p, n, std::vector<Triple>(closure.begin(), closure.end()),
      std::move(comp), std::move(plane));
}

// The two order-2 presentations shipped with the tool.
inline TrianglePresentation builtin(const std::string& name) {
  auto mk = [](std::vector<Triple> rels) {
    TrianglePresentation p;
    p.q = 2;
    for (int i = 0; i < 7; ++i) p.names.push_back("x" + std::to_string(i));
    p.relators = std::move(rels);
    return p;
  };
  if (name == "B.2")
    return mk({{0, 1, 4},
               {0, 2, 1},
               {0, 4, 2},
               {1, 5, 5},
               {2, 3, 3},
               {3, 5, 6},
               {4, 6, 6}});
  if (name == "C.1")
    return mk({{0, 0, 6},
               {0, 2, 3},
               {1, 2, 6},
               {1, 3, 5},
               {1, 5, 4},
               {2, 4, 5},
               {3, 4, 6}});
  throw UnknownBuiltin("unknown builtin presentation '" + name +
                       "', available: B.2, C.1");
}

}  // namespace a2ck

#endif
