// Copyright 2026 The gmsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gms/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace gms {

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, String, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Token::End, "", line, col};
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        t += advance();
      return {Token::Ident, t, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string t;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E' ||
              ((s_[pos_] == '+' || s_[pos_] == '-') && !t.empty() &&
               (t.back() == 'e' || t.back() == 'E'))))
        t += advance();
      return {Token::Number, t, line, col};
    }
    if (c == '"') {
      advance();
      std::string t;
      while (pos_ < s_.size() && s_[pos_] != '"') t += advance();
      if (pos_ >= s_.size()) throw QasmError("unterminated string", line, col);
      advance();
      return {Token::String, t, line, col};
    }
    advance();
    return {Token::Symbol, std::string(1, c), line, col};
  }

 private:
  char advance() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    for (;;) {
      while (pos_ < s_.size() &&
             std::isspace(static_cast<unsigned char>(s_[pos_])))
        advance();
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && s_[pos_ + 1] == '/') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, const std::string& name)
      : lex_(text), circuit_(0, name) {
    tok_ = lex_.next();
  }

  Circuit run() {
    while (tok_.kind != Token::End) statement();
    if (circuit_.qubit_count == 0)
      throw QasmError("no qreg declared", tok_.line, tok_.col);
    circuit_.validate();
    return circuit_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw QasmError(msg, tok_.line, tok_.col);
  }

  void bump() { tok_ = lex_.next(); }

  bool accept_symbol(const std::string& s) {
    if (tok_.kind == Token::Symbol && tok_.text == s) {
      bump();
      return true;
    }
    return false;
  }

  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s)) fail("expected '" + s + "'");
  }

  std::string expect_ident() {
    if (tok_.kind != Token::Ident) fail("expected identifier");
    std::string t = tok_.text;
    bump();
    return t;
  }

  int expect_int() {
    if (tok_.kind != Token::Number) fail("expected integer");
    for (char c : tok_.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail("expected integer");
    int v = std::atoi(tok_.text.c_str());
    bump();
    return v;
  }

  void skip_to_semicolon() {
    while (tok_.kind != Token::End && !accept_symbol(";")) bump();
  }

  // --- angle expressions -------------------------------------------------

  double expr() {
    double v = term();
    for (;;) {
      if (accept_symbol("+"))
        v += term();
      else if (accept_symbol("-"))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (accept_symbol("*"))
        v *= factor();
      else if (accept_symbol("/")) {
        double d = factor();
        if (d == 0.0) fail("division by zero in angle");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (accept_symbol("-")) return -factor();
    if (accept_symbol("(")) {
      double v = expr();
      expect_symbol(")");
      return v;
    }
    if (tok_.kind == Token::Ident && tok_.text == "pi") {
      bump();
      return M_PI;
    }
    if (tok_.kind == Token::Number) {
      double v = std::strtod(tok_.text.c_str(), nullptr);
      bump();
      return v;
    }
    fail("expected angle expression");
  }

  Phase angle() {
    double v = expr();
    if (auto s = Phase::snap(v)) return *s;
    return Phase::radians(v);
  }

  // --- operands ----------------------------------------------------------

  struct Operand {
    int base;
    int size;    // register width
    int index;   // -1 = whole register
  };

  Operand operand() {
    std::string reg = expect_ident();
    auto it = regs_.find(reg);
    if (it == regs_.end()) fail("unknown register '" + reg + "'");
    Operand op{it->second.first, it->second.second, -1};
    if (accept_symbol("[")) {
      op.index = expect_int();
      expect_symbol("]");
      if (op.index >= op.size) fail("qubit index out of range");
    }
    return op;
  }

  int single_qubit_operand() {
    Operand op = operand();
    if (op.index < 0) fail("register operand needs an index here");
    return op.base + op.index;
  }

  // --- statements ----------------------------------------------------------

  void statement() {
    if (tok_.kind != Token::Ident) fail("expected statement");
    std::string kw = tok_.text;
    if (kw == "OPENQASM") {
      bump();
      skip_to_semicolon();
      return;
    }
    if (kw == "include") {
      bump();
      skip_to_semicolon();
      return;
    }
    if (kw == "barrier") {
      bump();
      skip_to_semicolon();
      return;
    }
    if (kw == "qreg") {
      bump();
      std::string name = expect_ident();
      expect_symbol("[");
      int n = expect_int();
      expect_symbol("]");
      expect_symbol(";");
      if (n <= 0) fail("empty register");
      if (regs_.count(name)) fail("register redeclared");
      regs_[name] = {circuit_.qubit_count, n};
      circuit_.qubit_count += n;
      return;
    }
    for (const char* bad :
         {"measure", "reset", "if", "opaque", "creg", "gate"}) {
      if (kw == bad)
        throw QasmError("unsupported construct '" + kw + "'", tok_.line,
                        tok_.col);
    }
    gate_call(kw);
  }

  void gate_call(const std::string& name) {
    int line = tok_.line, col = tok_.col;
    bump();
    std::vector<Phase> params;
    if (accept_symbol("(")) {
      if (!accept_symbol(")")) {
        params.push_back(angle());
        while (accept_symbol(",")) params.push_back(angle());
        expect_symbol(")");
      }
    }
    if (name == "gms") {
      gms_call(params, line, col);
      return;
    }
    std::vector<Operand> ops;
    ops.push_back(operand());
    while (accept_symbol(",")) ops.push_back(operand());
    expect_symbol(";");
    // Whole-register broadcast is allowed for one-qubit gates only.
    if (ops.size() == 1 && ops[0].index < 0) {
      for (int i = 0; i < ops[0].size; ++i)
        emit_gate(name, params, {ops[0].base + i}, line, col);
      return;
    }
    std::vector<int> qs;
    for (auto& op : ops) {
      if (op.index < 0)
        throw QasmError("register operand needs an index here", line, col);
      qs.push_back(op.base + op.index);
    }
    emit_gate(name, params, qs, line, col);
  }

  void gms_call(const std::vector<Phase>& params, int line, int col) {
    if (params.size() != 1)
      throw QasmError("gms takes exactly one angle", line, col);
    expect_symbol("[");
    std::vector<std::pair<int, int>> pairs;
    for (;;) {
      int a = expect_int();
      expect_symbol("-");
      int b = expect_int();
      pairs.emplace_back(a, b);
      if (!accept_symbol(",")) break;
    }
    expect_symbol("]");
    expect_symbol(";");
    circuit_.add(Gate::global_ms(GmsLayer(params[0], pairs)));
  }

  void check_arity(const std::string& name, const std::vector<Phase>& params,
                   const std::vector<int>& qs, size_t np, size_t nq, int line,
                   int col) {
    if (params.size() != np || qs.size() != nq)
      throw QasmError("wrong arity for '" + name + "'", line, col);
  }

  void emit_gate(const std::string& name, const std::vector<Phase>& params,
                 const std::vector<int>& qs, int line, int col) {
    auto arity = [&](size_t np, size_t nq) {
      check_arity(name, params, qs, np, nq, line, col);
    };
    if (name == "x") {
      arity(0, 1);
      circuit_.add(Gate::x(qs[0]));
    } else if (name == "y") {
      arity(0, 1);
      circuit_.add(Gate::z(qs[0]));
      circuit_.add(Gate::x(qs[0]));
    } else if (name == "z") {
      arity(0, 1);
      circuit_.add(Gate::z(qs[0]));
    } else if (name == "h") {
      arity(0, 1);
      circuit_.add(Gate::h(qs[0]));
    } else if (name == "s") {
      arity(0, 1);
      circuit_.add(Gate::s(qs[0]));
    } else if (name == "sdg") {
      arity(0, 1);
      circuit_.add(Gate::sdg(qs[0]));
    } else if (name == "t") {
      arity(0, 1);
      circuit_.add(Gate::t(qs[0]));
    } else if (name == "tdg") {
      arity(0, 1);
      circuit_.add(Gate::tdg(qs[0]));
    } else if (name == "rx") {
      arity(1, 1);
      circuit_.add(Gate::rx(qs[0], params[0]));
    } else if (name == "rz" || name == "u1") {
      arity(1, 1);
      circuit_.add(Gate::rz(qs[0], params[0]));
    } else if (name == "ry") {
      arity(1, 1);
      circuit_.add(Gate::rz(qs[0], -Phase::half_pi()));
      circuit_.add(Gate::rx(qs[0], params[0]));
      circuit_.add(Gate::rz(qs[0], Phase::half_pi()));
    } else if (name == "u2") {
      arity(2, 1);
      add_u3(qs[0], Phase::half_pi(), params[0], params[1]);
    } else if (name == "u3" || name == "u") {
      arity(3, 1);
      add_u3(qs[0], params[0], params[1], params[2]);
    } else if (name == "r") {
      arity(2, 1);
      circuit_.add(Gate::r(qs[0], params[0], params[1]));
    } else if (name == "cx") {
      arity(0, 2);
      circuit_.add(Gate::cnot(qs[0], qs[1]));
    } else if (name == "cz") {
      arity(0, 2);
      circuit_.add(Gate::cz(qs[0], qs[1]));
    } else if (name == "swap") {
      arity(0, 2);
      circuit_.add(Gate::swap(qs[0], qs[1]));
    } else if (name == "xx") {
      arity(1, 2);
      circuit_.add(Gate::xx(qs[0], qs[1], params[0]));
    } else if (name == "ccx") {
      arity(0, 3);
      add_ccx(qs[0], qs[1], qs[2]);
    } else {
      throw QasmError("unsupported gate '" + name + "'", line, col);
    }
  }

  void add_u3(int q, Phase theta, Phase phi, Phase lambda) {
    // u3(theta, phi, lambda) = RZ(phi) RY(theta) RZ(lambda) up to phase.
    circuit_.add(Gate::rz(q, lambda - Phase::half_pi()));
    circuit_.add(Gate::rx(q, theta));
    circuit_.add(Gate::rz(q, phi + Phase::half_pi()));
  }

  void add_ccx(int a, int b, int c) {
    circuit_.add(Gate::h(c));
    circuit_.add(Gate::cnot(b, c));
    circuit_.add(Gate::tdg(c));
    circuit_.add(Gate::cnot(a, c));
    circuit_.add(Gate::t(c));
    circuit_.add(Gate::cnot(b, c));
    circuit_.add(Gate::tdg(c));
    circuit_.add(Gate::cnot(a, c));
    circuit_.add(Gate::t(b));
    circuit_.add(Gate::t(c));
    circuit_.add(Gate::h(c));
    circuit_.add(Gate::cnot(a, b));
    circuit_.add(Gate::t(a));
    circuit_.add(Gate::tdg(b));
    circuit_.add(Gate::cnot(a, b));
  }

  Lexer lex_;
  Token tok_;
  Circuit circuit_;
  std::map<std::string, std::pair<int, int>> regs_;  // name -> (base, size)
};

}  // namespace

Circuit parse_qasm(const std::string& text, const std::string& name) {
  return Parser(text, name).run();
}

std::string emit_qasmx(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.qubit_count << "];\n";
  auto q1 = [](int q) {
    return "q[" + std::to_string(q) + "];";
  };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        os << "h " << q1(g.q0);
        break;
      case GateKind::RZ:
        os << "rz(" << g.p0.str() << ") " << q1(g.q0);
        break;
      case GateKind::RX:
        os << "rx(" << g.p0.str() << ") " << q1(g.q0);
        break;
      case GateKind::R:
        os << "r(" << g.p0.str() << "," << g.p1.str() << ") " << q1(g.q0);
        break;
      case GateKind::Z:
        os << "z " << q1(g.q0);
        break;
      case GateKind::X:
        os << "x " << q1(g.q0);
        break;
      case GateKind::S:
        os << "s " << q1(g.q0);
        break;
      case GateKind::Sdg:
        os << "sdg " << q1(g.q0);
        break;
      case GateKind::T:
        os << "t " << q1(g.q0);
        break;
      case GateKind::Tdg:
        os << "tdg " << q1(g.q0);
        break;
      case GateKind::CNOT:
        os << "cx q[" << g.q0 << "],q[" << g.q1 << "];";
        break;
      case GateKind::CZ:
        os << "cz q[" << g.q0 << "],q[" << g.q1 << "];";
        break;
      case GateKind::XX:
        os << "xx(" << g.p0.str() << ") q[" << g.q0 << "],q[" << g.q1 << "];";
        break;
      case GateKind::SWAP:
        os << "swap q[" << g.q0 << "],q[" << g.q1 << "];";
        break;
      case GateKind::GMS: {
        os << "gms(" << g.gms.angle.str() << ") [";
        bool first = true;
        for (auto& pr : g.gms.pairs) {
          if (!first) os << ", ";
          first = false;
          os << pr.first << "-" << pr.second;
        }
        os << "];";
        break;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gms
