#include "frobsplit/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace frob {

namespace {

void append_atom(std::string& s, const std::string& head, int idx, int n, int rank) {
  if (n == 0) return;
  if (!s.empty()) s += " ";
  s += head;
  if (rank > 1) s += std::to_string(idx + 1);
  if (n != 1) s += "^(" + std::to_string(n) + ")";
}

}  // namespace

std::string render_mono(const PBWMono& m) {
  std::string s;
  const int rank = m.rank();
  for (int i = 0; i < rank; ++i) append_atom(s, "F", i, m.a[i], rank);
  for (int i = 0; i < rank; ++i)
    if (m.b[i]) {
      if (!s.empty()) s += " ";
      s += "[H";
      if (rank > 1) s += std::to_string(i + 1);
      s += ";" + std::to_string(m.b[i]) + "]";
    }
  for (int i = 0; i < rank; ++i) append_atom(s, "E", i, m.c[i], rank);
  return s.empty() ? "1" : s;
}

std::string render_dist(const DistElem& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto it = x.t.rbegin(); it != x.t.rend(); ++it) {
    auto& [m, co] = *it;
    if (!s.empty()) s += " + ";
    if (co != 1 || m.is_one()) {
      s += std::to_string(co);
      if (!m.is_one()) s += " ";
    }
    if (!m.is_one()) s += render_mono(m);
  }
  return s;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("unexpected end of input: " + s);
    return s[i++];
  }
  void expect(char c) {
    char got = take();
    if (got != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in: " + s);
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (start == i || (i - start == 1 && !std::isdigit((unsigned char)s[start])))
      throw std::invalid_argument("expected an integer in: " + s);
    return std::stoll(s.substr(start, i - start));
  }
};

int parse_index(Cursor& c, int rank) {
  // optional 1-based factor index directly after the generator letter
  if (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) {
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
    int idx = std::stoi(c.s.substr(start, c.i - start)) - 1;
    if (idx < 0 || idx >= rank) throw std::invalid_argument("factor index out of range");
    return idx;
  }
  if (rank != 1) throw std::invalid_argument("factor index required for rank > 1");
  return 0;
}

int parse_power(Cursor& c) {
  if (c.peek() != '^') return 1;
  c.expect('^');
  c.expect('(');
  long long n = c.integer();
  c.expect(')');
  if (n < 0) throw std::invalid_argument("negative divided power");
  return int(n);
}

}  // namespace

DistElem parse_dist(const std::string& text, const RootDatum& d) {
  Cursor c{text};
  DistElem out = dist_zero(d);
  bool first = true;
  while (!c.done()) {
    if (!first) c.expect('+');
    first = false;
    DistElem term = dist_one(d);
    bool saw_coeff = false, saw_atom = false;
    if (std::isdigit((unsigned char)c.peek())) {
      term = dist_scale(term, int(c.integer() % d.p));
      saw_coeff = true;
    }
    while (!c.done() && c.peek() != '+') {
      char ch = c.take();
      if (ch == 'E' || ch == 'F') {
        int idx = parse_index(c, d.rank);
        int n = parse_power(c);
        term = multiply(term, ch == 'E' ? gen_E(d, idx, n) : gen_F(d, idx, n));
      } else if (ch == '[') {
        c.expect('H');
        int idx = parse_index(c, d.rank);
        c.expect(';');
        long long n = c.integer();
        c.expect(']');
        if (n < 0) throw std::invalid_argument("negative H-exponent");
        term = multiply(term, gen_H(d, idx, int(n)));
      } else if (ch == '1') {
        // explicit unit
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + ch + "' in: " + text);
      }
      saw_atom = true;
    }
    if (!saw_coeff && !saw_atom) throw std::invalid_argument("empty term in: " + text);
    out = dist_add(out, term);
  }
  return out;
}

std::string render_weight(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

Weight parse_weight(const std::string& text, int rank) {
  Cursor c{text};
  Weight w;
  bool paren = c.peek() == '(';
  if (paren) c.expect('(');
  w.push_back(c.integer());
  while (c.peek() == ',') {
    c.expect(',');
    w.push_back(c.integer());
  }
  if (paren) c.expect(')');
  if (!c.done()) throw std::invalid_argument("trailing input in weight: " + text);
  if (int(w.size()) != rank) throw std::invalid_argument("weight has wrong number of entries");
  return w;
}

namespace {

Weight parse_weight_args(Cursor& c, int rank) {
  Weight w;
  bool paren = c.peek() == '(';
  if (paren) c.expect('(');
  w.push_back(c.integer());
  while (c.peek() == ',') {
    c.expect(',');
    w.push_back(c.integer());
  }
  if (paren) c.expect(')');
  if (int(w.size()) != rank) throw std::invalid_argument("weight has wrong number of entries");
  return w;
}

WtModule parse_expr(Cursor& c, const RootDatum& d) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && (std::isalpha((unsigned char)c.s[c.i]) || c.s[c.i] == '_')) ++c.i;
  std::string head = c.s.substr(start, c.i - start);
  if (head.empty()) throw std::invalid_argument("expected a module expression in: " + c.s);
  if (head == "St") return module_steinberg(d);
  if (head == "triv") return module_trivial(d);
  auto unary = [&](auto fn) {
    c.expect('(');
    WtModule m = parse_expr(c, d);
    c.expect(')');
    return fn(m);
  };
  if (head == "twist") return unary([](const WtModule& m) { return frobenius_twist(m); });
  if (head == "contract") return unary([](const WtModule& m) { return contract_module(m); });
  if (head == "dual") return unary([](const WtModule& m) { return dual_module(m); });
  if (head == "tensor" || head == "sum") {
    c.expect('(');
    WtModule m = parse_expr(c, d);
    c.expect(',');
    WtModule n = parse_expr(c, d);
    c.expect(')');
    return head == "tensor" ? tensor(m, n) : direct_sum(m, n);
  }
  if (head == "delta" || head == "nabla" || head == "L" || head == "line") {
    c.expect('(');
    Weight w = parse_weight_args(c, d.rank);
    c.expect(')');
    if (head == "delta") return module_delta(d, w);
    if (head == "nabla") return module_nabla(d, w);
    if (head == "L") return module_simple(d, w);
    return module_line(d, w);
  }
  throw std::invalid_argument("unknown module constructor: " + head);
}

}  // namespace

WtModule parse_module_expr(const std::string& text, const RootDatum& d) {
  Cursor c{text};
  WtModule m = parse_expr(c, d);
  if (!c.done()) throw std::invalid_argument("trailing input in module expression: " + text);
  return m;
}

}  // namespace frob
