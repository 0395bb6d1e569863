// Copyright 2026 The dqcc developers
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

#include "dqcc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dqcc/gate.hpp"

namespace dqcc {

ParseError::ParseError(const std::string& msg, int line_no)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

namespace {

constexpr double kPi = 3.14159265358979323846;

enum class Tok { Id, Num, Sym, Str, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double num = 0.0;
  int line = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_'))
        ++j;
      out.push_back({Tok::Id, text.substr(i, j - i), 0.0, line});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                       text[j] == '.'))
        ++j;
      if (j < n && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
          while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          j = k;
        }
      }
      Token t{Tok::Num, text.substr(i, j - i), 0.0, line};
      t.num = std::stod(t.text);
      out.push_back(t);
      i = j;
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && text[j] != '"') ++j;
      if (j == n) throw ParseError("unterminated string", line);
      out.push_back({Tok::Str, text.substr(i + 1, j - i - 1), 0.0, line});
      i = j + 1;
      continue;
    }
    if (c == '-' && i + 1 < n && text[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", 0.0, line});
      i += 2;
      continue;
    }
    if (c == '=' && i + 1 < n && text[i + 1] == '=') {
      out.push_back({Tok::Sym, "==", 0.0, line});
      i += 2;
      continue;
    }
    static const std::string singles = "(){}[];,+-*/^";
    if (singles.find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), 0.0, line});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line);
  }
  out.push_back({Tok::End, "", 0.0, line});
  return out;
}

// Parameter expressions are kept as token slices and evaluated once the
// enclosing macro's arguments are known.
using Expr = std::vector<Token>;
using Env = std::map<std::string, double>;

class ExprEval {
 public:
  ExprEval(const Expr& toks, const Env& env) : toks_(toks), env_(env) {}

  double run() {
    double v = additive();
    if (pos_ != toks_.size()) {
      throw ParseError("trailing tokens in expression", toks_[pos_].line);
    }
    return v;
  }

 private:
  const Token& peek() const {
    static Token end{Tok::End, "", 0.0, 0};
    return pos_ < toks_.size() ? toks_[pos_] : end;
  }
  bool eat_sym(const char* s) {
    if (peek().kind == Tok::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  double additive() {
    double v = term();
    while (true) {
      if (eat_sym("+"))
        v += term();
      else if (eat_sym("-"))
        v -= term();
      else
        return v;
    }
  }
  double term() {
    double v = unary();
    while (true) {
      if (eat_sym("*")) {
        v *= unary();
      } else if (eat_sym("/")) {
        double d = unary();
        if (d == 0.0) throw ParseError("division by zero", peek().line);
        v /= d;
      } else {
        return v;
      }
    }
  }
  double unary() {
    if (eat_sym("-")) return -unary();
    if (eat_sym("+")) return unary();
    return power();
  }
  double power() {
    double base = primary();
    if (eat_sym("^")) return std::pow(base, unary());
    return base;
  }
  double primary() {
    const Token t = peek();
    if (t.kind == Tok::Num) {
      ++pos_;
      return t.num;
    }
    if (t.kind == Tok::Id) {
      ++pos_;
      if (t.text == "pi") return kPi;
      if (eat_sym("(")) {
        double arg = additive();
        if (!eat_sym(")")) throw ParseError("expected ')'", t.line);
        if (t.text == "sin") return std::sin(arg);
        if (t.text == "cos") return std::cos(arg);
        if (t.text == "tan") return std::tan(arg);
        if (t.text == "exp") return std::exp(arg);
        if (t.text == "ln") return std::log(arg);
        if (t.text == "sqrt") return std::sqrt(arg);
        throw ParseError("unknown function '" + t.text + "'", t.line);
      }
      auto it = env_.find(t.text);
      if (it == env_.end())
        throw ParseError("unknown parameter '" + t.text + "'", t.line);
      return it->second;
    }
    if (eat_sym("(")) {
      double v = additive();
      if (!eat_sym(")")) throw ParseError("expected ')'", t.line);
      return v;
    }
    throw ParseError("malformed expression", t.line);
  }

  const Expr& toks_;
  const Env& env_;
  std::size_t pos_ = 0;
};

// One call inside a user gate body: operand names refer to the macro's
// formal qubit arguments.
struct MacroCall {
  std::string name;
  std::vector<Expr> params;
  std::vector<std::string> qubits;
  int line = 0;
};

struct MacroDef {
  std::vector<std::string> params;
  std::vector<std::string> qubits;
  std::vector<MacroCall> body;
};

struct Builtin {
  int nparams = 0;
  int nqubits = 0;
};

const std::map<std::string, Builtin>& builtin_table() {
  static const std::map<std::string, Builtin> table = {
      {"U", {3, 1}},     {"CX", {0, 2}},    {"u3", {3, 1}},
      {"u", {3, 1}},     {"u2", {2, 1}},    {"u1", {1, 1}},
      {"p", {1, 1}},     {"id", {0, 1}},    {"u0", {1, 1}},
      {"x", {0, 1}},     {"y", {0, 1}},     {"z", {0, 1}},
      {"h", {0, 1}},     {"s", {0, 1}},     {"sdg", {0, 1}},
      {"t", {0, 1}},     {"tdg", {0, 1}},   {"sx", {0, 1}},
      {"sxdg", {0, 1}},  {"rx", {1, 1}},    {"ry", {1, 1}},
      {"rz", {1, 1}},    {"cx", {0, 2}},    {"cy", {0, 2}},
      {"cz", {0, 2}},    {"ch", {0, 2}},    {"crx", {1, 2}},
      {"cry", {1, 2}},   {"crz", {1, 2}},   {"cu1", {1, 2}},
      {"cp", {1, 2}},    {"cu3", {3, 2}},   {"swap", {0, 2}},
      {"cswap", {0, 3}}, {"ccx", {0, 3}},   {"rzz", {1, 2}},
  };
  return table;
}

class Parser {
 public:
  Parser(const std::string& text, const FrontendOptions& opts)
      : toks_(lex(text)), opts_(opts) {}

  FrontendResult run() {
    header();
    while (peek().kind != Tok::End) statement();
    result_.circuit.n = next_qubit_;
    return std::move(result_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t p = pos_ + ahead;
    return p < toks_.size() ? toks_[p] : toks_.back();
  }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool check_sym(const char* s) const {
    return peek().kind == Tok::Sym && peek().text == s;
  }
  void expect_sym(const char* s) {
    if (!check_sym(s))
      throw ParseError(std::string("expected '") + s + "'", peek().line);
    ++pos_;
  }
  std::string expect_id() {
    if (peek().kind != Tok::Id)
      throw ParseError("expected identifier", peek().line);
    return advance().text;
  }
  int expect_int() {
    if (peek().kind != Tok::Num || peek().num != std::floor(peek().num))
      throw ParseError("expected integer", peek().line);
    return static_cast<int>(advance().num);
  }

  void header() {
    if (peek().kind == Tok::Id && peek().text == "OPENQASM") {
      int line = advance().line;
      if (peek().kind != Tok::Num || advance().text != "2.0")
        throw ParseError("only OPENQASM 2.0 is supported", line);
      expect_sym(";");
    }
  }

  void statement() {
    const Token t = peek();
    if (t.kind == Tok::Sym && t.text == ";") {  // stray semicolon
      ++pos_;
      return;
    }
    if (t.kind != Tok::Id) throw ParseError("expected statement", t.line);
    if (t.text == "include") {
      ++pos_;
      if (peek().kind != Tok::Str)
        throw ParseError("expected file name", peek().line);
      std::string file = advance().text;
      if (file != "qelib1.inc")
        throw ParseError("cannot include '" + file + "'", t.line);
      expect_sym(";");
      return;
    }
    if (t.text == "qreg") return qreg();
    if (t.text == "creg") return creg();
    if (t.text == "gate") return gate_def();
    if (t.text == "opaque")
      throw ParseError("opaque gates are not supported", t.line);
    if (t.text == "if")
      throw ParseError("classical control is not supported", t.line);
    if (t.text == "reset")
      throw ParseError("reset is not supported", t.line);
    if (t.text == "measure") {
      warn_once_measure();
      skip_to_semicolon();
      return;
    }
    if (t.text == "barrier") {
      warn_once_barrier();
      skip_to_semicolon();
      return;
    }
    application();
  }

  void skip_to_semicolon() {
    while (peek().kind != Tok::End && !check_sym(";")) ++pos_;
    if (check_sym(";")) ++pos_;
  }

  void warn_once_measure() {
    if (!warned_measure_) {
      result_.warnings.push_back("measure statements discarded");
      warned_measure_ = true;
    }
  }
  void warn_once_barrier() {
    if (!warned_barrier_) {
      result_.warnings.push_back("barrier statements discarded");
      warned_barrier_ = true;
    }
  }

  void qreg() {
    int line = advance().line;
    std::string name = expect_id();
    expect_sym("[");
    int size = expect_int();
    expect_sym("]");
    expect_sym(";");
    if (size <= 0) throw ParseError("register size must be positive", line);
    if (qregs_.count(name) || cregs_.count(name))
      throw ParseError("redefinition of register '" + name + "'", line);
    qregs_[name] = {next_qubit_, size};
    next_qubit_ += size;
  }

  void creg() {
    int line = advance().line;
    std::string name = expect_id();
    expect_sym("[");
    int size = expect_int();
    expect_sym("]");
    expect_sym(";");
    if (size <= 0) throw ParseError("register size must be positive", line);
    if (qregs_.count(name) || cregs_.count(name))
      throw ParseError("redefinition of register '" + name + "'", line);
    cregs_.insert(name);
  }

  Expr read_expr() {
    Expr e;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::End) throw ParseError("unterminated expression", t.line);
      if (t.kind == Tok::Sym) {
        if (t.text == "(") ++depth;
        if (t.text == ")") {
          if (depth == 0) break;
          --depth;
        }
        if (depth == 0 && t.text == ",") break;
      }
      e.push_back(advance());
    }
    if (e.empty()) throw ParseError("empty expression", peek().line);
    return e;
  }

  std::vector<Expr> read_param_list() {
    std::vector<Expr> out;
    if (!check_sym("(")) return out;
    ++pos_;
    if (check_sym(")")) {
      ++pos_;
      return out;
    }
    out.push_back(read_expr());
    while (check_sym(",")) {
      ++pos_;
      out.push_back(read_expr());
    }
    expect_sym(")");
    return out;
  }

  void gate_def() {
    int line = advance().line;
    std::string name = expect_id();
    if (builtin_table().count(name) || macros_.count(name))
      throw ParseError("redefinition of gate '" + name + "'", line);
    MacroDef def;
    if (check_sym("(")) {
      ++pos_;
      if (!check_sym(")")) {
        def.params.push_back(expect_id());
        while (check_sym(",")) {
          ++pos_;
          def.params.push_back(expect_id());
        }
      }
      expect_sym(")");
    }
    def.qubits.push_back(expect_id());
    while (check_sym(",")) {
      ++pos_;
      def.qubits.push_back(expect_id());
    }
    expect_sym("{");
    while (!check_sym("}")) {
      if (peek().kind == Tok::End)
        throw ParseError("unterminated gate body", line);
      if (peek().kind == Tok::Id && peek().text == "barrier") {
        ++pos_;
        skip_to_semicolon();
        continue;
      }
      MacroCall call;
      call.line = peek().line;
      call.name = expect_id();
      call.params = read_param_list();
      call.qubits.push_back(expect_id());
      while (check_sym(",")) {
        ++pos_;
        call.qubits.push_back(expect_id());
      }
      expect_sym(";");
      for (const std::string& q : call.qubits) {
        bool known = false;
        for (const std::string& formal : def.qubits) known |= (formal == q);
        if (!known)
          throw ParseError("unknown qubit '" + q + "' in gate body", call.line);
      }
      def.body.push_back(std::move(call));
    }
    ++pos_;  // '}'
    macros_[name] = std::move(def);
  }

  // A top-level operand: whole register (index -1) or one element.
  struct Operand {
    std::string reg;
    int index = -1;
    int line = 0;
  };

  Operand read_operand() {
    Operand op;
    op.line = peek().line;
    op.reg = expect_id();
    if (check_sym("[")) {
      ++pos_;
      op.index = expect_int();
      expect_sym("]");
    }
    return op;
  }

  int resolve(const Operand& op, int broadcast) const {
    auto it = qregs_.find(op.reg);
    if (it == qregs_.end())
      throw ParseError("unknown register '" + op.reg + "'", op.line);
    int idx = op.index >= 0 ? op.index : broadcast;
    if (idx < 0 || idx >= it->second.second)
      throw ParseError("index out of range for '" + op.reg + "'", op.line);
    return it->second.first + idx;
  }

  void application() {
    const Token t = peek();
    std::string name = expect_id();
    std::vector<Expr> params = read_param_list();
    std::vector<Operand> ops;
    ops.push_back(read_operand());
    while (check_sym(",")) {
      ++pos_;
      ops.push_back(read_operand());
    }
    expect_sym(";");

    // Broadcast whole-register operands element-wise.
    int width = 1;
    for (const Operand& op : ops) {
      if (op.index >= 0) continue;
      auto it = qregs_.find(op.reg);
      if (it == qregs_.end())
        throw ParseError("unknown register '" + op.reg + "'", op.line);
      if (width != 1 && it->second.second != width)
        throw ParseError("mismatched register sizes", op.line);
      width = it->second.second;
    }

    Env env;  // top-level expressions may only use constants
    std::vector<double> values;
    values.reserve(params.size());
    for (const Expr& e : params) values.push_back(ExprEval(e, env).run());

    for (int rep = 0; rep < width; ++rep) {
      std::vector<int> qs;
      qs.reserve(ops.size());
      for (const Operand& op : ops) qs.push_back(resolve(op, rep));
      emit(name, values, qs, t.line, 0);
    }
  }

  void check_distinct(const std::vector<int>& qs, int line) const {
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j)
        if (qs[i] == qs[j])
          throw ParseError("duplicate qubit operand", line);
  }

  // Folds into (-pi, pi].
  static double fold_angle(double theta) {
    double f = std::fmod(theta, 2 * kPi);
    if (f > kPi) f -= 2 * kPi;
    if (f <= -kPi) f += 2 * kPi;
    return f;
  }

  bool truncated(const std::string& name, const std::vector<double>& p) const {
    static const std::set<std::string> phase_family = {
        "rz", "p", "u1", "crz", "cu1", "cp", "crx", "cry"};
    if (!phase_family.count(name) || p.size() != 1) return false;
    return std::abs(fold_angle(p[0])) < opts_.truncate_angle;
  }

  void push_single(int q, const ComplexMatrix& u, const std::string& name,
                   std::vector<double> p = {}) {
    result_.circuit.push(single(q, u, name, std::move(p)));
  }
  void push_ctrl(int c, int t, const ComplexMatrix& u, const std::string& name,
                 std::vector<double> p = {}) {
    result_.circuit.push(controlled(c, t, u, name, std::move(p)));
  }

  void emit(const std::string& name, const std::vector<double>& p,
            const std::vector<int>& qs, int line, int depth) {
    if (depth > 64) throw ParseError("gate expansion too deep", line);

    auto bi = builtin_table().find(name);
    if (bi != builtin_table().end()) {
      if (static_cast<int>(p.size()) != bi->second.nparams)
        throw ParseError("wrong parameter count for '" + name + "'", line);
      if (static_cast<int>(qs.size()) != bi->second.nqubits)
        throw ParseError("wrong operand count for '" + name + "'", line);
      check_distinct(qs, line);
      if (truncated(name, p)) return;
      emit_builtin(name, p, qs, line, depth);
      return;
    }

    auto mi = macros_.find(name);
    if (mi == macros_.end())
      throw ParseError("unknown gate '" + name + "'", line);
    const MacroDef& def = mi->second;
    if (p.size() != def.params.size())
      throw ParseError("wrong parameter count for '" + name + "'", line);
    if (qs.size() != def.qubits.size())
      throw ParseError("wrong operand count for '" + name + "'", line);
    check_distinct(qs, line);

    Env env;
    for (std::size_t i = 0; i < p.size(); ++i) env[def.params[i]] = p[i];
    std::map<std::string, int> qmap;
    for (std::size_t i = 0; i < qs.size(); ++i) qmap[def.qubits[i]] = qs[i];

    for (const MacroCall& call : def.body) {
      std::vector<double> values;
      values.reserve(call.params.size());
      for (const Expr& e : call.params) values.push_back(ExprEval(e, env).run());
      std::vector<int> mapped;
      mapped.reserve(call.qubits.size());
      for (const std::string& q : call.qubits) mapped.push_back(qmap.at(q));
      emit(call.name, values, mapped, call.line, depth + 1);
    }
  }

  void emit_builtin(const std::string& name, const std::vector<double>& p,
                    const std::vector<int>& qs, int line, int depth) {
    if (name == "id" || name == "u0") return;
    if (name == "U" || name == "u3" || name == "u") {
      push_single(qs[0], mat_u3(p[0], p[1], p[2]), "u3", p);
    } else if (name == "u2") {
      push_single(qs[0], mat_u3(kPi / 2, p[0], p[1]), "u3",
                  {kPi / 2, p[0], p[1]});
    } else if (name == "u1" || name == "p") {
      push_single(qs[0], mat_phase(p[0]), "u1", p);
    } else if (name == "x") {
      push_single(qs[0], mat_x(), "x");
    } else if (name == "y") {
      push_single(qs[0], mat_y(), "y");
    } else if (name == "z") {
      push_single(qs[0], mat_z(), "z");
    } else if (name == "h") {
      push_single(qs[0], mat_h(), "h");
    } else if (name == "s") {
      push_single(qs[0], mat_s(), "s");
    } else if (name == "sdg") {
      push_single(qs[0], mat_sdg(), "sdg");
    } else if (name == "t") {
      push_single(qs[0], mat_t(), "t");
    } else if (name == "tdg") {
      push_single(qs[0], mat_tdg(), "tdg");
    } else if (name == "sx") {
      push_single(qs[0], mat_sx(), "sx");
    } else if (name == "sxdg") {
      push_single(qs[0], mat_sxdg(), "sxdg");
    } else if (name == "rx") {
      push_single(qs[0], mat_rx(p[0]), "rx", p);
    } else if (name == "ry") {
      push_single(qs[0], mat_ry(p[0]), "ry", p);
    } else if (name == "rz") {
      push_single(qs[0], mat_rz(p[0]), "rz", p);
    } else if (name == "CX" || name == "cx") {
      push_ctrl(qs[0], qs[1], mat_x(), "cx");
    } else if (name == "cy") {
      push_ctrl(qs[0], qs[1], mat_y(), "cy");
    } else if (name == "cz") {
      push_ctrl(qs[0], qs[1], mat_z(), "cz");
    } else if (name == "ch") {
      push_ctrl(qs[0], qs[1], mat_h(), "ch");
    } else if (name == "crx") {
      push_ctrl(qs[0], qs[1], mat_rx(p[0]), "crx", p);
    } else if (name == "cry") {
      push_ctrl(qs[0], qs[1], mat_ry(p[0]), "cry", p);
    } else if (name == "crz") {
      push_ctrl(qs[0], qs[1], mat_rz(p[0]), "crz", p);
    } else if (name == "cu1" || name == "cp") {
      push_ctrl(qs[0], qs[1], mat_phase(p[0]), "cu1", p);
    } else if (name == "cu3") {
      push_ctrl(qs[0], qs[1], mat_u3(p[0], p[1], p[2]), "cu3", p);
    } else if (name == "swap") {
      emit("cx", {}, {qs[0], qs[1]}, line, depth + 1);
      emit("cx", {}, {qs[1], qs[0]}, line, depth + 1);
      emit("cx", {}, {qs[0], qs[1]}, line, depth + 1);
    } else if (name == "rzz") {
      emit("cx", {}, {qs[0], qs[1]}, line, depth + 1);
      emit("u1", {p[0]}, {qs[1]}, line, depth + 1);
      emit("cx", {}, {qs[0], qs[1]}, line, depth + 1);
    } else if (name == "ccx") {
      const int a = qs[0], b = qs[1], c = qs[2];
      emit("h", {}, {c}, line, depth + 1);
      emit("cx", {}, {b, c}, line, depth + 1);
      emit("tdg", {}, {c}, line, depth + 1);
      emit("cx", {}, {a, c}, line, depth + 1);
      emit("t", {}, {c}, line, depth + 1);
      emit("cx", {}, {b, c}, line, depth + 1);
      emit("tdg", {}, {c}, line, depth + 1);
      emit("cx", {}, {a, c}, line, depth + 1);
      emit("t", {}, {b}, line, depth + 1);
      emit("t", {}, {c}, line, depth + 1);
      emit("h", {}, {c}, line, depth + 1);
      emit("cx", {}, {a, b}, line, depth + 1);
      emit("t", {}, {a}, line, depth + 1);
      emit("tdg", {}, {b}, line, depth + 1);
      emit("cx", {}, {a, b}, line, depth + 1);
    } else if (name == "cswap") {
      const int a = qs[0], b = qs[1], c = qs[2];
      emit("cx", {}, {c, b}, line, depth + 1);
      emit("ccx", {}, {a, b, c}, line, depth + 1);
      emit("cx", {}, {c, b}, line, depth + 1);
    } else {
      throw ParseError("unknown gate '" + name + "'", line);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  FrontendOptions opts_;
  FrontendResult result_;
  std::map<std::string, std::pair<int, int>> qregs_;  // name -> (offset, size)
  std::set<std::string> cregs_;
  std::map<std::string, MacroDef> macros_;
  int next_qubit_ = 0;
  bool warned_measure_ = false;
  bool warned_barrier_ = false;
};

}  // namespace

FrontendResult parse_qasm(const std::string& text, const FrontendOptions& opts) {
  Parser parser(text, opts);
  FrontendResult r = parser.run();
  r.circuit.validate();
  return r;
}

FrontendResult parse_qasm_file(const std::string& path,
                               const FrontendOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  FrontendResult r = parse_qasm(buf.str(), opts);
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
    stem = stem.substr(0, dot);
  r.circuit.name = stem;
  return r;
}

}  // namespace dqcc
