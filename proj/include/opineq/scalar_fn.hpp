#ifndef OPINEQ_SCALAR_FN_HPP
#define OPINEQ_SCALAR_FN_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opineq/common.hpp"

namespace opineq {

// Interval domain of a scalar function. Endpoints may be 0 and +inf; openness
// is tracked but order checks use a numeric margin rather than strictness.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  bool contains(double t, double margin = 0.0) const {
    return t >= lo - margin && t <= hi + margin;
  }
};

inline Interval positive_halfline() { return Interval{0.0, std::numeric_limits<double>::infinity(), true, true}; }

// Expression tree over t: constants, the identity, real powers, sums,
// products, quotients and composition. Nodes are immutable and shared.
class ScalarFn {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  enum class Kind { Const, Var, Pow, Add, Mul, Div, Comp };

  struct Node {
    Kind kind;
    double value = 0.0; // Const payload or Pow exponent
    NodePtr a, b;
  };

public:
  ScalarFn() : root_(var_node()), domain_(positive_halfline()) {}

  static ScalarFn constant(double c, Interval dom = positive_halfline()) {
    return ScalarFn(make(Kind::Const, c, nullptr, nullptr), dom);
  }
  static ScalarFn identity(Interval dom = positive_halfline()) {
    return ScalarFn(var_node(), dom);
  }
  // t^p
  static ScalarFn power(double p, Interval dom = positive_halfline()) {
    return ScalarFn(make(Kind::Pow, p, var_node(), nullptr), dom);
  }
  // f^p
  static ScalarFn pow_of(const ScalarFn& f, double p) {
    return ScalarFn(make(Kind::Pow, p, f.root_, nullptr), f.domain_);
  }
  static ScalarFn sum(const ScalarFn& f, const ScalarFn& g) {
    return ScalarFn(make(Kind::Add, 0, f.root_, g.root_), merge(f.domain_, g.domain_));
  }
  static ScalarFn product(const ScalarFn& f, const ScalarFn& g) {
    return ScalarFn(make(Kind::Mul, 0, f.root_, g.root_), merge(f.domain_, g.domain_));
  }
  static ScalarFn quotient(const ScalarFn& f, const ScalarFn& g) {
    return ScalarFn(make(Kind::Div, 0, f.root_, g.root_), merge(f.domain_, g.domain_));
  }
  // f(g(t))
  static ScalarFn compose(const ScalarFn& f, const ScalarFn& g) {
    return ScalarFn(make(Kind::Comp, 0, f.root_, g.root_), g.domain_);
  }

  const Interval& domain() const { return domain_; }
  ScalarFn with_domain(Interval dom) const { return ScalarFn(root_, dom); }

  double eval(double t) const {
    if (!domain_.contains(t, 1e-9 * std::max(1.0, std::abs(t))))
      throw domain_error("scalar function evaluated outside its domain");
    return eval_node(*root_, t);
  }

  // Evaluation without the domain gate, for grid scans that probe endpoints.
  double eval_unchecked(double t) const { return eval_node(*root_, t); }

  // Quotient denominators must not vanish on the domain; checked on a
  // 1024-point grid over the domain truncated to [1e-3, 1e3].
  bool denominators_nonvanishing() const {
    const double lo = std::max(domain_.lo, 1e-3);
    const double hi = std::min(domain_.hi, 1e3);
    if (!(lo < hi)) return true;
    for (int i = 0; i < 1024; ++i) {
      const double t = lo * std::pow(hi / lo, (i + 0.5) / 1024.0);
      if (!check_denominators(*root_, t)) return false;
    }
    return true;
  }

  std::string to_text() const { return print(*root_); }

  // Monomial-sum view: f(t) = sum_i c_i t^{p_i} with all c_i > 0, when the
  // tree is built from positive constants, t, powers, sums, products and
  // quotients-by-monomials. Used for exact operator-convexity windows.
  using Posynomial = std::vector<std::pair<double, double>>; // (coeff, exponent)
  std::optional<Posynomial> as_posynomial() const {
    auto p = posyn(*root_);
    if (p) collect(*p);
    return p;
  }

  static ScalarFn parse(const std::string& text);

private:
  ScalarFn(NodePtr r, Interval dom) : root_(std::move(r)), domain_(dom) {}

  static NodePtr make(Kind k, double v, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->value = v;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  static NodePtr var_node() {
    static const NodePtr v = make(Kind::Var, 0, nullptr, nullptr);
    return v;
  }

  static Interval merge(const Interval& x, const Interval& y) {
    Interval r;
    r.lo = std::max(x.lo, y.lo);
    r.hi = std::min(x.hi, y.hi);
    r.lo_open = x.lo_open || y.lo_open;
    r.hi_open = x.hi_open || y.hi_open;
    return r;
  }

  static double eval_node(const Node& n, double t) {
    switch (n.kind) {
      case Kind::Const: return n.value;
      case Kind::Var: return t;
      case Kind::Pow: return std::pow(eval_node(*n.a, t), n.value);
      case Kind::Add: return eval_node(*n.a, t) + eval_node(*n.b, t);
      case Kind::Mul: return eval_node(*n.a, t) * eval_node(*n.b, t);
      case Kind::Div: return eval_node(*n.a, t) / eval_node(*n.b, t);
      case Kind::Comp: return eval_node(*n.a, eval_node(*n.b, t));
    }
    return 0.0;
  }

  static bool check_denominators(const Node& n, double t) {
    switch (n.kind) {
      case Kind::Const:
      case Kind::Var: return true;
      case Kind::Pow: return check_denominators(*n.a, t);
      case Kind::Add:
      case Kind::Mul:
        return check_denominators(*n.a, t) && check_denominators(*n.b, t);
      case Kind::Div:
        return check_denominators(*n.a, t) && check_denominators(*n.b, t) &&
               std::abs(eval_node(*n.b, t)) > 1e-300;
      case Kind::Comp: return check_denominators(*n.b, t); // outer checked on its own domain
    }
    return true;
  }

  static std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }

  static std::string print(const Node& n) {
    switch (n.kind) {
      case Kind::Const: return "const(" + fmt(n.value) + ")";
      case Kind::Var: return "t";
      case Kind::Pow: return "pow(" + print(*n.a) + "," + fmt(n.value) + ")";
      case Kind::Add: return "add(" + print(*n.a) + "," + print(*n.b) + ")";
      case Kind::Mul: return "mul(" + print(*n.a) + "," + print(*n.b) + ")";
      case Kind::Div: return "div(" + print(*n.a) + "," + print(*n.b) + ")";
      case Kind::Comp: return "comp(" + print(*n.a) + "," + print(*n.b) + ")";
    }
    return "";
  }

  static std::optional<Posynomial> mul_posyn(const Posynomial& x, const Posynomial& y) {
    if (x.size() * y.size() > 64) return std::nullopt;
    Posynomial r;
    for (auto& [cx, px] : x)
      for (auto& [cy, py] : y) r.emplace_back(cx * cy, px + py);
    return r;
  }

  static std::optional<Posynomial> posyn(const Node& n) {
    switch (n.kind) {
      case Kind::Const:
        if (n.value <= 0.0) return std::nullopt;
        return Posynomial{{n.value, 0.0}};
      case Kind::Var: return Posynomial{{1.0, 1.0}};
      case Kind::Pow: {
        auto base = posyn(*n.a);
        if (!base) return std::nullopt;
        if (base->size() == 1)
          return Posynomial{{std::pow((*base)[0].first, n.value), (*base)[0].second * n.value}};
        // small positive integer powers of sums expand exactly
        const double p = n.value;
        if (p == std::floor(p) && p >= 1 && p <= 3) {
          Posynomial acc = *base;
          for (int k = 1; k < static_cast<int>(p); ++k) {
            auto next = mul_posyn(acc, *base);
            if (!next) return std::nullopt;
            acc = *next;
          }
          return acc;
        }
        return std::nullopt;
      }
      case Kind::Add: {
        auto a = posyn(*n.a), b = posyn(*n.b);
        if (!a || !b) return std::nullopt;
        a->insert(a->end(), b->begin(), b->end());
        return a;
      }
      case Kind::Mul: {
        auto a = posyn(*n.a), b = posyn(*n.b);
        if (!a || !b) return std::nullopt;
        return mul_posyn(*a, *b);
      }
      case Kind::Div: {
        auto a = posyn(*n.a), b = posyn(*n.b);
        if (!a || !b || b->size() != 1) return std::nullopt;
        Posynomial r;
        for (auto& [c, p] : *a) r.emplace_back(c / (*b)[0].first, p - (*b)[0].second);
        return r;
      }
      case Kind::Comp: return std::nullopt;
    }
    return std::nullopt;
  }

  static void collect(Posynomial& p) {
    std::sort(p.begin(), p.end(),
              [](auto& x, auto& y) { return x.second < y.second; });
    Posynomial out;
    for (auto& term : p) {
      if (!out.empty() && std::abs(out.back().second - term.second) < 1e-12)
        out.back().first += term.first;
      else
        out.push_back(term);
    }
    p = std::move(out);
  }

  NodePtr root_;
  Interval domain_;
};

// --- text syntax -----------------------------------------------------------
// expr := "t" | "const(" num ")" | "pow(" expr "," num ")"
//       | "add(" expr "," expr ")" | "mul(" expr "," expr ")"
//       | "div(" expr "," expr ")" | "comp(" expr "," expr ")"

namespace detail {

struct FnParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("scalar function parse error at position " + std::to_string(pos) +
                      ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  double number() {
    skip_ws();
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(s.substr(pos), &consumed);
    } catch (const std::exception&) {
      fail("expected a number");
    }
    pos += consumed;
    return v;
  }

  ScalarFn expr() {
    const std::string name = ident();
    if (name == "t") return ScalarFn::identity();
    expect('(');
    if (name == "const") {
      double c = number();
      expect(')');
      return ScalarFn::constant(c);
    }
    if (name == "pow") {
      ScalarFn base = expr();
      expect(',');
      double p = number();
      expect(')');
      return ScalarFn::pow_of(base, p);
    }
    ScalarFn a = expr();
    expect(',');
    ScalarFn b = expr();
    expect(')');
    if (name == "add") return ScalarFn::sum(a, b);
    if (name == "mul") return ScalarFn::product(a, b);
    if (name == "div") return ScalarFn::quotient(a, b);
    if (name == "comp") return ScalarFn::compose(a, b);
    fail("unknown function '" + name + "'");
  }
};

} // namespace detail

inline ScalarFn ScalarFn::parse(const std::string& text) {
  detail::FnParser p{text};
  ScalarFn f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

// --- derived functions ------------------------------------------------------

enum class DeriveKind {
  t_times_f,   // t f(t)
  t_over_f,    // t / f(t)
  f_pow_r,     // f(t)^r
  fg_over_t,   // f(t) g(t) / t
  t_over_fg,   // t / (f(t) g(t))
  reciprocal,  // 1 / f(t)
  f_squared    // f(t)^2
};

inline ScalarFn derive(const ScalarFn& f, DeriveKind kind,
                       const std::optional<ScalarFn>& g = std::nullopt,
                       double r = 1.0) {
  const ScalarFn t = ScalarFn::identity(f.domain());
  switch (kind) {
    case DeriveKind::t_times_f: return ScalarFn::product(t, f);
    case DeriveKind::t_over_f: return ScalarFn::quotient(t, f);
    case DeriveKind::f_pow_r: return ScalarFn::pow_of(f, r);
    case DeriveKind::fg_over_t:
      if (!g) throw parse_error("fg_over_t needs g");
      return ScalarFn::quotient(ScalarFn::product(f, *g), t);
    case DeriveKind::t_over_fg:
      if (!g) throw parse_error("t_over_fg needs g");
      return ScalarFn::quotient(t, ScalarFn::product(f, *g));
    case DeriveKind::reciprocal: return ScalarFn::pow_of(f, -1.0);
    case DeriveKind::f_squared: return ScalarFn::product(f, f);
  }
  throw parse_error("unknown derive kind");
}

// --- exact operator windows for posynomials ---------------------------------
// A positive combination of monomials c t^p is operator convex when every
// exponent lies in [-1,0] or [1,2], operator concave/monotone when every
// exponent lies in [0,1]. Sufficient conditions, used as fast hypothesis
// gates; non-posynomial trees fall back to randomized certification.

inline bool in_window(double p, double lo, double hi) {
  return p >= lo - 1e-12 && p <= hi + 1e-12;
}

inline std::optional<bool> posyn_operator_convex(const ScalarFn& f) {
  auto terms = f.as_posynomial();
  if (!terms) return std::nullopt;
  for (auto& [c, p] : *terms) {
    (void)c;
    if (!(in_window(p, -1.0, 0.0) || in_window(p, 1.0, 2.0))) return false;
  }
  return true;
}

inline std::optional<bool> posyn_operator_concave(const ScalarFn& f) {
  auto terms = f.as_posynomial();
  if (!terms) return std::nullopt;
  for (auto& [c, p] : *terms) {
    (void)c;
    if (!in_window(p, 0.0, 1.0)) return false;
  }
  return true;
}

inline std::optional<bool> posyn_operator_monotone(const ScalarFn& f) {
  return posyn_operator_concave(f); // same window for positive combinations
}

// Ordinary (scalar) convexity on [lo, hi] via second differences on a grid;
// strict when some interior second difference is decisively negative/positive.
struct ScalarShape {
  bool convex = false, concave = false;
  bool strictly_convex = false, strictly_concave = false;
  bool positive = false, at_least_one = false, nondecreasing = false;
};

inline ScalarShape scalar_shape_on(const ScalarFn& f, double lo, double hi,
                                   int grid = 257) {
  ScalarShape s;
  std::vector<double> v(grid);
  for (int i = 0; i < grid; ++i) {
    const double t = lo + (hi - lo) * i / (grid - 1);
    v[i] = f.eval_unchecked(t);
  }
  s.positive = true;
  s.at_least_one = true;
  s.nondecreasing = true;
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  const double tol = 1e-11 * std::max(1.0, scale);
  double min_dd = std::numeric_limits<double>::infinity();
  double max_dd = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    if (!(v[i] > 0.0)) s.positive = false;
    if (v[i] < 1.0 - 1e-12) s.at_least_one = false;
    if (i + 1 < grid && v[i + 1] < v[i] - tol) s.nondecreasing = false;
    if (i + 2 < grid) {
      const double dd = v[i + 2] - 2.0 * v[i + 1] + v[i];
      min_dd = std::min(min_dd, dd);
      max_dd = std::max(max_dd, dd);
    }
  }
  s.convex = min_dd >= -tol;
  s.concave = max_dd <= tol;
  s.strictly_convex = s.convex && min_dd > tol;
  s.strictly_concave = s.concave && max_dd < -tol;
  return s;
}

} // namespace opineq

#endif
