// Copyright 2026 The qdd developers
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

#include "qdd/qc/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace qc {

namespace {

enum class TokKind {
  Identifier,
  Number,
  String,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Semicolon,
  Arrow,
  Plus,
  Minus,
  Star,
  Slash,
  End,
};

struct Token {
  TokKind kind{TokKind::End};
  std::string text;
  double value{0.0};
  std::size_t line{1};
  std::size_t column{1};
};

class Lexer {
public:
  explicit Lexer(std::istream& in) : input(in) { advance(); }

  const Token& peek() const { return current; }

  Token next() {
    Token t = current;
    advance();
    return t;
  }

private:
  void advance() {
    skipWhitespaceAndComments();
    current.line = line;
    current.column = column;
    const int c = peekChar();
    if (c == EOF) {
      current.kind = TokKind::End;
      current.text.clear();
      return;
    }
    if (std::isalpha(c) != 0 || c == '_') {
      lexIdentifier();
    } else if (std::isdigit(c) != 0 || c == '.') {
      lexNumber();
    } else if (c == '"') {
      lexString();
    } else {
      lexSymbol();
    }
  }

  void lexIdentifier() {
    current.kind = TokKind::Identifier;
    current.text.clear();
    while (std::isalnum(peekChar()) != 0 || peekChar() == '_') {
      current.text.push_back(static_cast<char>(getChar()));
    }
  }

  void lexNumber() {
    current.kind = TokKind::Number;
    current.text.clear();
    bool seenExp = false;
    while (true) {
      const int c = peekChar();
      if (std::isdigit(c) != 0 || c == '.') {
        current.text.push_back(static_cast<char>(getChar()));
      } else if ((c == 'e' || c == 'E') && !seenExp) {
        seenExp = true;
        current.text.push_back(static_cast<char>(getChar()));
        if (peekChar() == '+' || peekChar() == '-') {
          current.text.push_back(static_cast<char>(getChar()));
        }
      } else {
        break;
      }
    }
    try {
      current.value = std::stod(current.text);
    } catch (const std::exception&) {
      throw ParseError(current.line, current.column,
                       "malformed number '" + current.text + "'");
    }
  }

  void lexString() {
    current.kind = TokKind::String;
    current.text.clear();
    getChar(); // opening quote
    while (true) {
      const int c = getChar();
      if (c == EOF || c == '\n') {
        throw ParseError(current.line, current.column,
                         "unterminated string literal");
      }
      if (c == '"') {
        break;
      }
      current.text.push_back(static_cast<char>(c));
    }
  }

  void lexSymbol() {
    const int c = getChar();
    current.text = std::string(1, static_cast<char>(c));
    switch (c) {
    case '[':
      current.kind = TokKind::LBracket;
      return;
    case ']':
      current.kind = TokKind::RBracket;
      return;
    case '(':
      current.kind = TokKind::LParen;
      return;
    case ')':
      current.kind = TokKind::RParen;
      return;
    case ',':
      current.kind = TokKind::Comma;
      return;
    case ';':
      current.kind = TokKind::Semicolon;
      return;
    case '+':
      current.kind = TokKind::Plus;
      return;
    case '*':
      current.kind = TokKind::Star;
      return;
    case '/':
      current.kind = TokKind::Slash;
      return;
    case '-':
      if (peekChar() == '>') {
        getChar();
        current.kind = TokKind::Arrow;
        current.text = "->";
      } else {
        current.kind = TokKind::Minus;
      }
      return;
    default:
      throw ParseError(line, column - 1,
                       "unexpected character '" +
                           std::string(1, static_cast<char>(c)) + "'");
    }
  }

  void skipWhitespaceAndComments() {
    while (true) {
      const int c = peekChar();
      if (c == EOF) {
        return;
      }
      if (std::isspace(c) != 0) {
        getChar();
        continue;
      }
      if (c == '/') {
        getChar();
        if (peekChar() == '/') {
          while (peekChar() != '\n' && peekChar() != EOF) {
            getChar();
          }
          continue;
        }
        pushedBack = '/';
        return;
      }
      return;
    }
  }

  int peekChar() {
    if (pushedBack != EOF) {
      return pushedBack;
    }
    return input.peek();
  }

  int getChar() {
    int c = EOF;
    if (pushedBack != EOF) {
      c = pushedBack;
      pushedBack = EOF;
    } else {
      c = input.get();
    }
    if (c == '\n') {
      ++line;
      column = 1;
    } else if (c != EOF) {
      ++column;
    }
    return c;
  }

  std::istream& input;
  Token current;
  int pushedBack{EOF};
  std::size_t line{1};
  std::size_t column{1};
};

struct Register {
  std::size_t offset;
  std::size_t size;
};

/// One parsed operand: a whole register or a single element of one.
struct Operand {
  std::size_t offset;
  std::size_t size; // 1 for indexed access
  bool indexed;
  std::size_t line;
  std::size_t column;
};

const std::unordered_map<std::string, OpKind> GATE_NAMES = {
    {"h", OpKind::H},     {"x", OpKind::X},       {"y", OpKind::Y},
    {"z", OpKind::Z},     {"s", OpKind::S},       {"sdg", OpKind::Sdg},
    {"t", OpKind::T},     {"tdg", OpKind::Tdg},   {"rx", OpKind::Rx},
    {"ry", OpKind::Ry},   {"rz", OpKind::Rz},     {"p", OpKind::P},
    {"cx", OpKind::Cx},   {"cz", OpKind::Cz},     {"swap", OpKind::Swap},
};

class Parser {
public:
  explicit Parser(std::istream& in) : lexer(in) {}

  QuantumCircuit parse() {
    parseHeader();
    while (lexer.peek().kind != TokKind::End) {
      parseStatement();
    }
    return std::move(circuit);
  }

private:
  void parseHeader() {
    const auto tok = expect(TokKind::Identifier, "OPENQASM header");
    if (tok.text != "OPENQASM") {
      throw ParseError(tok.line, tok.column, "expected 'OPENQASM 2.0;'");
    }
    const auto version = expect(TokKind::Number, "version number");
    if (version.text != "2.0" && version.text != "2") {
      throw UnsupportedError(version.line, version.column,
                             "OPENQASM version " + version.text);
    }
    expect(TokKind::Semicolon, "';'");
  }

  void parseStatement() {
    const auto tok = lexer.next();
    if (tok.kind != TokKind::Identifier) {
      throw ParseError(tok.line, tok.column,
                       "expected a statement, got '" + tok.text + "'");
    }
    if (tok.text == "include") {
      parseInclude(tok);
    } else if (tok.text == "qreg") {
      parseRegister(tok, /*classical=*/false);
    } else if (tok.text == "creg") {
      parseRegister(tok, /*classical=*/true);
    } else if (tok.text == "barrier") {
      parseBarrier();
    } else if (tok.text == "measure") {
      parseMeasure(tok);
    } else if (const auto it = GATE_NAMES.find(tok.text);
               it != GATE_NAMES.end()) {
      parseGate(tok, it->second);
    } else {
      // anything else that is legal QASM (gate, opaque, if, reset, u3, ...)
      // is outside the subset
      throw UnsupportedError(tok.line, tok.column, tok.text);
    }
  }

  void parseInclude(const Token& at) {
    const auto file = expect(TokKind::String, "include file name");
    if (file.text != "qelib1.inc") {
      throw UnsupportedError(at.line, at.column,
                             "include \"" + file.text + "\"");
    }
    expect(TokKind::Semicolon, "';'");
  }

  void parseRegister(const Token& at, bool classical) {
    if (!circuit.ops.empty()) {
      throw ParseError(at.line, at.column,
                       "register declared after operations");
    }
    const auto name = expect(TokKind::Identifier, "register name");
    expect(TokKind::LBracket, "'['");
    const auto size = expect(TokKind::Number, "register size");
    expect(TokKind::RBracket, "']'");
    expect(TokKind::Semicolon, "';'");
    const auto width = static_cast<std::size_t>(size.value);
    if (width == 0 || size.value != static_cast<double>(width)) {
      throw ParseError(size.line, size.column, "invalid register size");
    }
    auto& table = classical ? cregs : qregs;
    if (qregs.count(name.text) != 0U || cregs.count(name.text) != 0U) {
      throw ParseError(name.line, name.column,
                       "register '" + name.text + "' redeclared");
    }
    if (classical) {
      table[name.text] = {circuit.numClbits, width};
      circuit.numClbits += width;
    } else {
      table[name.text] = {circuit.numQubits, width};
      circuit.numQubits += width;
    }
  }

  Operand parseOperand(bool classical) {
    const auto name = expect(TokKind::Identifier, "register reference");
    const auto& table = classical ? cregs : qregs;
    const auto it = table.find(name.text);
    if (it == table.end()) {
      throw ParseError(name.line, name.column,
                       std::string("unknown ") +
                           (classical ? "classical" : "quantum") +
                           " register '" + name.text + "'");
    }
    Operand op{it->second.offset, it->second.size, false, name.line,
               name.column};
    if (lexer.peek().kind == TokKind::LBracket) {
      lexer.next();
      const auto idx = expect(TokKind::Number, "index");
      expect(TokKind::RBracket, "']'");
      const auto i = static_cast<std::size_t>(idx.value);
      if (i >= it->second.size || idx.value != static_cast<double>(i)) {
        throw ParseError(idx.line, idx.column,
                         "index " + idx.text + " out of range for '" +
                             name.text + "'");
      }
      op.offset += i;
      op.size = 1;
      op.indexed = true;
    }
    return op;
  }

  void parseGate(const Token& at, OpKind kind) {
    double angle = 0.0;
    if (isParameterized(kind)) {
      expect(TokKind::LParen, "'(' before angle");
      angle = parseExpression();
      expect(TokKind::RParen, "')' after angle");
    } else if (lexer.peek().kind == TokKind::LParen) {
      throw ParseError(at.line, at.column,
                       "gate '" + toString(kind) + "' takes no parameters");
    }
    std::vector<Operand> operands;
    operands.push_back(parseOperand(false));
    while (lexer.peek().kind == TokKind::Comma) {
      lexer.next();
      operands.push_back(parseOperand(false));
    }
    expect(TokKind::Semicolon, "';'");

    const std::size_t arity = isTwoQubit(kind) ? 2 : 1;
    if (operands.size() != arity) {
      throw ParseError(at.line, at.column,
                       "gate '" + toString(kind) + "' expects " +
                           std::to_string(arity) + " operand(s), got " +
                           std::to_string(operands.size()));
    }
    const auto width = broadcastWidth(operands, at);
    for (std::size_t i = 0; i < width; ++i) {
      Gate g;
      g.kind = kind;
      g.angle = angle;
      for (const auto& op : operands) {
        g.qubits.push_back(
            static_cast<Qubit>(op.offset + (op.indexed ? 0 : i)));
      }
      appendChecked(g, at);
    }
  }

  void parseBarrier() {
    std::vector<Operand> operands;
    operands.push_back(parseOperand(false));
    while (lexer.peek().kind == TokKind::Comma) {
      lexer.next();
      operands.push_back(parseOperand(false));
    }
    const auto semi = expect(TokKind::Semicolon, "';'");
    Gate g;
    g.kind = OpKind::Barrier;
    for (const auto& op : operands) {
      for (std::size_t i = 0; i < op.size; ++i) {
        g.qubits.push_back(static_cast<Qubit>(op.offset + i));
      }
    }
    appendChecked(g, semi);
  }

  void parseMeasure(const Token& at) {
    const auto src = parseOperand(false);
    expect(TokKind::Arrow, "'->'");
    const auto dst = parseOperand(true);
    expect(TokKind::Semicolon, "';'");
    if (src.size != dst.size) {
      throw ParseError(at.line, at.column,
                       "width mismatch in measure: " +
                           std::to_string(src.size) + " qubit(s) -> " +
                           std::to_string(dst.size) + " clbit(s)");
    }
    for (std::size_t i = 0; i < src.size; ++i) {
      Gate g;
      g.kind = OpKind::Measure;
      g.qubits.push_back(static_cast<Qubit>(src.offset + i));
      g.clbit = static_cast<std::int64_t>(dst.offset + i);
      appendChecked(g, at);
    }
  }

  std::size_t broadcastWidth(const std::vector<Operand>& operands,
                             const Token& at) const {
    std::size_t width = 1;
    for (const auto& op : operands) {
      if (op.indexed) {
        continue;
      }
      if (width == 1) {
        width = op.size;
      } else if (op.size != width) {
        throw ParseError(at.line, at.column,
                         "width mismatch between register operands (" +
                             std::to_string(width) + " vs " +
                             std::to_string(op.size) + ")");
      }
    }
    return width;
  }

  void appendChecked(const Gate& g, const Token& at) {
    if (g.kind != OpKind::Measure && !circuit.ops.empty() &&
        circuit.ops.back().kind == OpKind::Measure) {
      throw UnsupportedError(at.line, at.column, "mid-circuit measurement");
    }
    try {
      circuit.append(g);
    } catch (const CircuitError& e) {
      throw ParseError(at.line, at.column, e.what());
    }
  }

  // expr := term (('+'|'-') term)*
  double parseExpression() {
    double value = parseTerm();
    while (true) {
      const auto kind = lexer.peek().kind;
      if (kind == TokKind::Plus) {
        lexer.next();
        value += parseTerm();
      } else if (kind == TokKind::Minus) {
        lexer.next();
        value -= parseTerm();
      } else {
        return value;
      }
    }
  }

  // term := factor (('*'|'/') factor)*
  double parseTerm() {
    double value = parseFactor();
    while (true) {
      const auto kind = lexer.peek().kind;
      if (kind == TokKind::Star) {
        lexer.next();
        value *= parseFactor();
      } else if (kind == TokKind::Slash) {
        const auto at = lexer.next();
        const double rhs = parseFactor();
        if (rhs == 0.0) {
          throw ParseError(at.line, at.column, "division by zero in angle");
        }
        value /= rhs;
      } else {
        return value;
      }
    }
  }

  // factor := ('-'|'+')* (number | 'pi' | '(' expr ')')
  double parseFactor() {
    const auto tok = lexer.next();
    switch (tok.kind) {
    case TokKind::Minus:
      return -parseFactor();
    case TokKind::Plus:
      return parseFactor();
    case TokKind::Number:
      return tok.value;
    case TokKind::Identifier:
      if (tok.text == "pi") {
        return std::numbers::pi;
      }
      throw ParseError(tok.line, tok.column,
                       "unknown symbol '" + tok.text + "' in angle");
    case TokKind::LParen: {
      const double value = parseExpression();
      expect(TokKind::RParen, "')'");
      return value;
    }
    default:
      throw ParseError(tok.line, tok.column,
                       "unexpected '" + tok.text + "' in angle expression");
    }
  }

  Token expect(TokKind kind, const std::string& what) {
    const auto tok = lexer.next();
    if (tok.kind != kind) {
      throw ParseError(tok.line, tok.column,
                       "expected " + what + ", got '" +
                           (tok.kind == TokKind::End ? "<eof>" : tok.text) +
                           "'");
    }
    return tok;
  }

  Lexer lexer;
  QuantumCircuit circuit;
  std::map<std::string, Register> qregs;
  std::map<std::string, Register> cregs;
};

std::string formatAngle(double angle) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

} // namespace

QuantumCircuit parseQasm(std::istream& in) {
  Parser parser(in);
  return parser.parse();
}

QuantumCircuit parseQasm(const std::string& text) {
  std::istringstream in(text);
  return parseQasm(in);
}

QuantumCircuit parseQasmFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CircuitError("cannot open file '" + path + "'");
  }
  auto circuit = parseQasm(in);
  const auto slash = path.find_last_of('/');
  auto base = slash == std::string::npos ? path : path.substr(slash + 1);
  if (const auto dot = base.find_last_of('.'); dot != std::string::npos) {
    base = base.substr(0, dot);
  }
  circuit.name = base;
  return circuit;
}

void writeQasm(const QuantumCircuit& c, std::ostream& out) {
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.numQubits << "];\n";
  if (c.numClbits > 0) {
    out << "creg c[" << c.numClbits << "];\n";
  }
  for (const auto& g : c.ops) {
    switch (g.kind) {
    case OpKind::Measure:
      out << "measure q[" << g.qubits.front() << "] -> c[" << g.clbit
          << "];\n";
      break;
    case OpKind::Barrier: {
      out << "barrier";
      for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        out << (i == 0 ? " " : ", ") << "q[" << g.qubits[i] << "]";
      }
      out << ";\n";
      break;
    }
    default:
      out << toString(g.kind);
      if (isParameterized(g.kind)) {
        out << "(" << formatAngle(g.angle) << ")";
      }
      for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        out << (i == 0 ? " " : ", ") << "q[" << g.qubits[i] << "]";
      }
      out << ";\n";
      break;
    }
  }
}

std::string writeQasm(const QuantumCircuit& c) {
  std::ostringstream out;
  writeQasm(c, out);
  return out.str();
}

} // namespace qc
