#include "e8check/bundles.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace e8check {

namespace {

// ---------------------------------------------------------------------------
// parser

const std::map<std::string, BundleAtom>& atom_table() {
  static const std::map<std::string, BundleAtom> table = {
      {"TC", BundleAtom::TC},       {"XiC", BundleAtom::XiC},
      {"W1", BundleAtom::W1},       {"W2", BundleAtom::W2},
      {"W3", BundleAtom::W3},       {"Wbar1", BundleAtom::Wbar1},
      {"Wbar2", BundleAtom::Wbar2}, {"Wbar3", BundleAtom::Wbar3},
      {"Delta", BundleAtom::Delta},
  };
  return table;
}

struct Parser {
  const std::string& src;
  size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  [[noreturn]] void fail(size_t at, const std::string& what) const {
    std::ostringstream out;
    out << "parse error at column " << at + 1 << ": " << what << "\n  " << src
        << "\n  " << std::string(at, ' ') << "^";
    throw std::invalid_argument(out.str());
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail(pos, what);
  }

  std::string read_ident() {
    std::string out;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
      out.push_back(src[pos]);
      ++pos;
    }
    return out;
  }

  int read_small_int(const std::string& what) {
    skip_ws();
    const size_t start = pos;
    std::string digits;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      digits.push_back(src[pos]);
      ++pos;
    }
    if (digits.empty() || digits.size() > 2) fail(start, what);
    return std::stoi(digits);
  }

  BundleExpr parse_expr() {
    BundleExpr lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        BundleExpr node;
        node.node = BundleExpr::Node::Sum;
        node.args = {std::move(lhs), parse_term()};
        lhs = std::move(node);
      } else if (eat('-')) {
        BundleExpr node;
        node.node = BundleExpr::Node::Diff;
        node.args = {std::move(lhs), parse_term()};
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  BundleExpr parse_term() {
    BundleExpr lhs = parse_unary();
    while (eat('*')) {
      BundleExpr node;
      node.node = BundleExpr::Node::Tensor;
      node.args = {std::move(lhs), parse_unary()};
      lhs = std::move(node);
    }
    return lhs;
  }

  BundleExpr parse_unary() {
    if (eat('-')) {
      BundleExpr zero;
      zero.node = BundleExpr::Node::Scalar;
      zero.scalar = Rat(0);
      BundleExpr node;
      node.node = BundleExpr::Node::Diff;
      node.args = {std::move(zero), parse_unary()};
      return node;
    }
    return parse_primary();
  }

  BundleExpr parse_primary() {
    skip_ws();
    if (pos >= src.size()) fail(pos, "unexpected end of input");
    const char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        digits.push_back(src[pos]);
        ++pos;
      }
      BundleExpr node;
      node.node = BundleExpr::Node::Scalar;
      node.scalar = Rat(digits);
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos;
      const std::string ident = read_ident();
      if (ident == "wedge" || ident == "sym") {
        expect('(', "expected '(' after '" + ident + "'");
        const size_t order_at = (skip_ws(), pos);
        const int k = read_small_int("expected a small non-negative order");
        if (ident == "wedge" && k > 4) fail(order_at, "wedge orders above 4 are not supported");
        if (ident == "sym" && k > 2) fail(order_at, "sym orders above 2 are not supported");
        expect(',', "expected ',' after the order");
        BundleExpr arg = parse_expr();
        expect(')', "expected ')'");
        BundleExpr node;
        node.node = ident == "wedge" ? BundleExpr::Node::Wedge : BundleExpr::Node::Sym;
        node.k = k;
        node.args = {std::move(arg)};
        return node;
      }
      if (ident == "tilde") {
        expect('(', "expected '(' after 'tilde'");
        BundleExpr arg = parse_expr();
        expect(')', "expected ')'");
        BundleExpr node;
        node.node = BundleExpr::Node::Tilde;
        node.args = {std::move(arg)};
        return node;
      }
      const auto it = atom_table().find(ident);
      if (it == atom_table().end()) fail(start, "unknown name '" + ident + "'");
      BundleExpr node;
      node.node = BundleExpr::Node::Atom;
      node.atom = it->second;
      return node;
    }
    if (c == '(') {
      ++pos;
      BundleExpr inner = parse_expr();
      expect(')', "expected ')'");
      return inner;
    }
    fail(pos, "expected a number, a name, or '('");
  }
};

// ---------------------------------------------------------------------------
// Newton recurrences.  With c_m = psi^m(ch E) the elementary pieces satisfy
// k e_k = sum_{m=1..k} (-1)^{m-1} c_m e_{k-m} and the complete ones
// k h_k = sum_{m=1..k} c_m h_{k-m}.

GradedElem newton_power(const GradedElem& chE, int k, bool alternating) {
  std::vector<GradedElem> acc(static_cast<size_t>(k) + 1);
  acc[0] = GradedElem::from_rat(Rat(1));
  for (int n = 1; n <= k; ++n) {
    GradedElem sum;
    for (int m = 1; m <= n; ++m) {
      GradedElem term = adams(m, chE) * acc[static_cast<size_t>(n - m)];
      if (alternating && m % 2 == 0) {
        sum = sum - term;
      } else {
        sum = sum + term;
      }
    }
    acc[static_cast<size_t>(n)] = sum * Rat(1, n);
  }
  return acc[static_cast<size_t>(k)];
}

}  // namespace

GradedElem wedge_power_ch(const GradedElem& chE, int k) {
  if (k < 0) throw std::invalid_argument("wedge_power_ch: negative order");
  return newton_power(chE, k, /*alternating=*/true);
}

GradedElem sym_power_ch(const GradedElem& chE, int k) {
  if (k < 0) throw std::invalid_argument("sym_power_ch: negative order");
  return newton_power(chE, k, /*alternating=*/false);
}

BundleExpr parse_bundle_expr(const std::string& src) {
  Parser p(src);
  BundleExpr out = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail(p.pos, "unexpected trailing input");
  return out;
}

const char* witten_kind_name(WittenKind kind) {
  switch (kind) {
    case WittenKind::Theta1: return "Theta1";
    case WittenKind::Theta2: return "Theta2";
    case WittenKind::Theta3: return "Theta3";
    case WittenKind::Theta: return "Theta";
    case WittenKind::Phi: return "Phi";
  }
  throw std::logic_error("witten_kind_name: bad kind");
}

GradedSeries eval_at_euler_pair(const EvenRootSeries& f) {
  return qs_map<GradedElem>(f, [](const SPoly& p) { return spoly_eval_at_u2(p); });
}

Context::Context(int ord) : order(ord) {
  if (order < 5) throw std::invalid_argument("Context: order must be at least 5");

  e2 = eisenstein(2, order);
  e4 = eisenstein(4, order);
  e6 = eisenstein(6, order);

  ahat_form = symmetrize_prod_const(spoly_ahat_kernel(), RootGroup::Tangent);
  lhat_form = symmetrize_prod_const(spoly_lhat_kernel(), RootGroup::Tangent);
  cosh_half_u = spoly_eval_at_u2(spoly_cosh_half());
  delta_ch = symmetrize_prod_const(spoly_two_cosh_half(), RootGroup::Tangent);

  tc_ch = GradedElem::from_rat(Rat(12)) + GradedElem::gen(Gen::pX2) +
          GradedElem::gen(Gen::pX4) * Rat(1, 12) + GradedElem::gen(Gen::pX6) * Rat(1, 360);
  const GradedElem u = GradedElem::gen(Gen::U);
  xic_ch = GradedElem::from_rat(Rat(2)) + graded_pow(u, 2) +
           graded_pow(u, 4) * Rat(1, 12) + graded_pow(u, 6) * Rat(1, 360);

  // towers over one root pair, as series in s = x^2
  const EvenRootSeries sym_t = qexp_sym_tower(order);
  const EvenRootSeries wedge_t = qexp_wedge_tower(order);
  const EvenRootSeries wedge_minus = qexp_wedge_tower_half(-1, order);
  const EvenRootSeries wedge_plus = qexp_wedge_tower_half(+1, order);

  witten[static_cast<int>(WittenKind::Theta1)] =
      symmetrize_prod(qs_mul(sym_t, wedge_t), RootGroup::Tangent);
  witten[static_cast<int>(WittenKind::Theta2)] =
      symmetrize_prod(qs_mul(sym_t, wedge_minus), RootGroup::Tangent);
  witten[static_cast<int>(WittenKind::Theta3)] =
      symmetrize_prod(qs_mul(sym_t, wedge_plus), RootGroup::Tangent);
  witten[static_cast<int>(WittenKind::Theta)] =
      qs_mul(symmetrize_prod(sym_t, RootGroup::Tangent),
             eval_at_euler_pair(qs_mul(wedge_t, qs_mul(wedge_minus, wedge_plus))));
  witten[static_cast<int>(WittenKind::Phi)] = symmetrize_prod(
      qs_mul(qs_mul(sym_t, wedge_t), qs_mul(wedge_minus, wedge_plus)), RootGroup::Tangent);

  const ScalarSeries phi_m8 = phi_power(-8, order);
  for (int i = 0; i < 3; ++i) {
    const auto group = static_cast<RootGroup>(static_cast<int>(RootGroup::E8_1) + i);
    GradedSeries hs = qs_mul(promote(theta_const8(ThetaKind::TH1, order)),
                             symmetrize_prod(theta_ratio(ThetaKind::TH1, order), group));
    hs = hs + qs_mul(promote(theta_const8(ThetaKind::TH2, order)),
                     symmetrize_prod(theta_ratio(ThetaKind::TH2, order), group));
    hs = hs + qs_mul(promote(theta_const8(ThetaKind::TH3, order)),
                     symmetrize_prod(theta_ratio(ThetaKind::TH3, order), group));
    halfsum[static_cast<size_t>(i)] = qs_scale(hs, Rat(1, 2));
    v_ch[static_cast<size_t>(i)] =
        qs_mul(halfsum[static_cast<size_t>(i)], promote(phi_m8));
    w_ch[static_cast<size_t>(i)] = v_ch[static_cast<size_t>(i)].c[2];
    wbar_ch[static_cast<size_t>(i)] = v_ch[static_cast<size_t>(i)].c[4];
  }
}

GradedElem ch(const Context& ctx, const BundleExpr& expr) {
  switch (expr.node) {
    case BundleExpr::Node::Scalar:
      return GradedElem::from_rat(expr.scalar);
    case BundleExpr::Node::Atom:
      switch (expr.atom) {
        case BundleAtom::TC: return ctx.tc_ch;
        case BundleAtom::XiC: return ctx.xic_ch;
        case BundleAtom::W1: return ctx.w_ch[0];
        case BundleAtom::W2: return ctx.w_ch[1];
        case BundleAtom::W3: return ctx.w_ch[2];
        case BundleAtom::Wbar1: return ctx.wbar_ch[0];
        case BundleAtom::Wbar2: return ctx.wbar_ch[1];
        case BundleAtom::Wbar3: return ctx.wbar_ch[2];
        case BundleAtom::Delta: return ctx.delta_ch;
      }
      throw std::logic_error("ch: bad atom");
    case BundleExpr::Node::Sum:
      return ch(ctx, expr.args[0]) + ch(ctx, expr.args[1]);
    case BundleExpr::Node::Diff:
      return ch(ctx, expr.args[0]) - ch(ctx, expr.args[1]);
    case BundleExpr::Node::Tensor:
      return ch(ctx, expr.args[0]) * ch(ctx, expr.args[1]);
    case BundleExpr::Node::Wedge:
      if (expr.k < 0 || expr.k > 4) throw std::invalid_argument("ch: wedge order out of range");
      return newton_power(ch(ctx, expr.args[0]), expr.k, /*alternating=*/true);
    case BundleExpr::Node::Sym:
      if (expr.k < 0 || expr.k > 2) throw std::invalid_argument("ch: sym order out of range");
      return newton_power(ch(ctx, expr.args[0]), expr.k, /*alternating=*/false);
    case BundleExpr::Node::Tilde: {
      const GradedElem inner = ch(ctx, expr.args[0]);
      return inner - GradedElem::from_rat(inner.scalar_part());
    }
  }
  throw std::logic_error("ch: bad node");
}

GradedElem ch(const Context& ctx, const std::string& src) {
  return ch(ctx, parse_bundle_expr(src));
}

}  // namespace e8check
