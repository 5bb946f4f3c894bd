// Copyright 2026 The choicetree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choicetree/document.h"

#include <cctype>
#include <map>
#include <utility>

#include "choicetree/error.h"
#include "choicetree/rational.h"

namespace choicetree {

std::optional<std::string> TreeDocument::name_of(const Event& event) const {
  for (const NamedEvent& e : events) {
    if (e.event == event) return e.name;
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kLineWidth = 72;

enum class Tok { kIdent, kNumber, kPunct, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void syntax_error(int line, int col, const std::string& what) {
  throw Error(ErrorKind::kSyntaxError, "line " + std::to_string(line) + ", col " +
                                           std::to_string(col) + ": " + what);
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '\n') {
      out.push_back({Tok::kNewline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '/' && digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      out.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("(),:={}").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), line, col});
      advance(1);
    } else {
      syntax_error(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  bool at(Tok kind, std::string_view text = {}) const {
    return peek().kind == kind && (text.empty() || peek().text == text);
  }
  void skip_newlines() {
    while (at(Tok::kNewline)) next();
  }
  [[noreturn]] void fail(const std::string& what) const {
    syntax_error(peek().line, peek().col, what);
  }
  const Token& expect(Tok kind, std::string_view text, const std::string& what) {
    if (!at(kind, text)) {
      fail("expected " + what + (peek().kind == Tok::kEnd
                                     ? std::string(", found end of input")
                                     : ", found '" + printable(peek()) + "'"));
    }
    return next();
  }
  std::string ident(const std::string& what) {
    return expect(Tok::kIdent, {}, what).text;
  }
  void end_of_statement() {
    if (!at(Tok::kNewline) && !at(Tok::kEnd)) fail("expected end of line");
    next();
  }

 private:
  static std::string printable(const Token& t) {
    return t.kind == Tok::kNewline ? "end of line" : t.text;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unknown(const std::string& kind, const std::string& name) {
  throw Error(ErrorKind::kUnknownReference, "unknown " + kind + " '" + name + "'");
}

[[noreturn]] void duplicate(const std::string& kind, const std::string& name) {
  throw Error(ErrorKind::kDuplicateDefinition,
              kind + " '" + name + "' defined twice");
}

Event parse_labels(Parser& p, const PossibilitySpace& space) {
  std::uint64_t bits = 0;
  if (!p.at(Tok::kIdent)) p.fail("expected at least one state label");
  while (p.at(Tok::kIdent)) {
    const std::string label = p.next().text;
    auto idx = space.index_of(label);
    if (!idx) unknown("state", label);
    bits |= std::uint64_t{1} << *idx;
  }
  return space.from_bits(bits);
}

class ExprParser {
 public:
  ExprParser(Parser& p, const RewardTable& rewards,
             const std::vector<NamedEvent>& events)
      : p_(p), rewards_(rewards), events_(events) {}

  Node parse() {
    if (!p_.at(Tok::kIdent)) p_.fail("expected leaf, decision or chance");
    const std::string head = p_.next().text;
    open();
    if (head == "leaf") {
      const std::string name = p_.ident("reward name");
      auto id = rewards_.find(name);
      if (!id) unknown("reward", name);
      close();
      return leaf(*id);
    }
    if (head == "decision") {
      std::vector<Node> kids;
      do {
        p_.skip_newlines();
        kids.push_back(parse());
      } while (comma());
      close();
      return decision(std::move(kids));
    }
    if (head == "chance") {
      std::vector<ChanceBranch> branches;
      do {
        p_.skip_newlines();
        const std::string name = p_.ident("event name");
        const NamedEvent* ev = find_event(name);
        if (ev == nullptr) unknown("event", name);
        p_.skip_newlines();
        p_.expect(Tok::kPunct, ":", "':'");
        p_.skip_newlines();
        branches.push_back({ev->event, parse()});
      } while (comma());
      close();
      return chance(std::move(branches));
    }
    throw Error(ErrorKind::kSyntaxError, "unknown node kind '" + head + "'");
  }

 private:
  void open() {
    p_.expect(Tok::kPunct, "(", "'('");
    p_.skip_newlines();
  }
  void close() {
    p_.skip_newlines();
    p_.expect(Tok::kPunct, ")", "')'");
  }
  bool comma() {
    p_.skip_newlines();
    if (!p_.at(Tok::kPunct, ",")) return false;
    p_.next();
    return true;
  }
  const NamedEvent* find_event(const std::string& name) const {
    for (const NamedEvent& e : events_) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }

  Parser& p_;
  const RewardTable& rewards_;
  const std::vector<NamedEvent>& events_;
};

std::vector<std::string> header_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size() && text[i] == '#') {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos) j = text.size();
    std::string line(text.substr(i, j - i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    i = j + 1;
  }
  return out;
}

std::string labels_of(const Event& e) {
  std::string out;
  for (std::size_t s : e.states()) {
    if (!out.empty()) out += " ";
    out += e.space().label(s);
  }
  return out;
}

class Printer {
 public:
  Printer(const TreeDocument& doc, std::string& out) : doc_(doc), out_(out) {}

  void emit(const Node& node, std::size_t indent, const std::string& prefix,
            const std::string& suffix) {
    const std::string pad(indent, ' ');
    const std::string flat = inline_text(node);
    if (node.is_leaf() ||
        pad.size() + prefix.size() + flat.size() + suffix.size() <= kLineWidth) {
      out_ += pad + prefix + flat + suffix + "\n";
      return;
    }
    out_ += pad + prefix + (node.is_decision() ? "decision(" : "chance(") + "\n";
    for (std::size_t i = 0; i < node.num_children(); ++i) {
      const std::string child_prefix =
          node.is_chance() ? event_name(node.events()[i]) + ": " : "";
      emit(node.child(i), indent + 2, child_prefix,
           i + 1 < node.num_children() ? "," : "");
    }
    out_ += pad + ")" + suffix + "\n";
  }

 private:
  std::string event_name(const Event& e) const {
    auto name = doc_.name_of(e);
    if (!name) {
      throw Error(ErrorKind::kUnknownReference,
                  "no event declared for " + e.to_string());
    }
    return *name;
  }

  std::string inline_text(const Node& node) const {
    if (node.is_leaf()) return "leaf(" + doc_.rewards.name(node.reward()) + ")";
    std::string out = node.is_decision() ? "decision(" : "chance(";
    for (std::size_t i = 0; i < node.num_children(); ++i) {
      if (i != 0) out += ", ";
      if (node.is_chance()) out += event_name(node.events()[i]) + ": ";
      out += inline_text(node.child(i));
    }
    return out + ")";
  }

  const TreeDocument& doc_;
  std::string& out_;
};

}  // namespace

TreeDocument parse_tree_document(std::string_view text) {
  std::vector<std::string> header = header_lines(text);
  Parser p(lex(text));
  std::optional<PossibilitySpace> space;
  RewardTable rewards;
  std::vector<NamedEvent> events;
  std::optional<std::string> root_name;
  std::optional<Node> root;
  std::map<std::string, bool, std::less<>> event_names;

  auto require_space = [&](const char* what) {
    if (!space) p.fail(std::string(what) + " before omega");
  };

  while (true) {
    p.skip_newlines();
    if (p.at(Tok::kEnd)) break;
    const Token head = p.expect(Tok::kIdent, {}, "a statement");
    if (head.text == "omega") {
      if (space) duplicate("statement", "omega");
      std::vector<std::string> labels;
      if (!p.at(Tok::kIdent)) p.fail("omega needs at least one state label");
      while (p.at(Tok::kIdent)) labels.push_back(p.next().text);
      space.emplace(std::move(labels));
    } else if (head.text == "reward") {
      const std::string name = p.ident("reward name");
      p.expect(Tok::kPunct, "=", "'='");
      const Token& value = p.expect(Tok::kNumber, {}, "a rational utility");
      rewards.add(name, parse_rational(value.text));
    } else if (head.text == "event") {
      require_space("event");
      const std::string name = p.ident("event name");
      p.expect(Tok::kPunct, "=", "'='");
      Event e = parse_labels(p, *space);
      if (!event_names.emplace(name, true).second) duplicate("event", name);
      events.push_back({name, std::move(e)});
    } else if (head.text == "root_event") {
      require_space("root_event");
      const std::string name = p.ident("event name");
      if (root_name) duplicate("statement", "root_event");
      if (!event_names.contains(name)) unknown("event", name);
      root_name = name;
    } else if (head.text == "tree") {
      require_space("tree");
      if (root) duplicate("statement", "tree");
      p.expect(Tok::kPunct, "=", "'='");
      if (p.at(Tok::kNewline) || p.at(Tok::kEnd)) p.fail("empty tree expression");
      root = ExprParser(p, rewards, events).parse();
    } else {
      syntax_error(head.line, head.col, "unknown statement '" + head.text + "'");
    }
    p.end_of_statement();
  }
  if (!space) p.fail("missing omega declaration");
  if (!root) p.fail("missing tree expression");

  Event root_event = space->all();
  if (root_name) {
    for (const NamedEvent& e : events) {
      if (e.name == *root_name) root_event = e.event;
    }
  }
  DecisionTree tree(std::move(*root), root_event);
  return TreeDocument{std::move(header), *space,          std::move(rewards),
                      std::move(events), std::move(root_name), std::move(tree)};
}

std::string serialize_tree_document(const TreeDocument& doc) {
  std::string out;
  for (const std::string& h : doc.header) out += h + "\n";
  if (!doc.header.empty()) out += "\n";
  out += "omega";
  for (const std::string& l : doc.space.labels()) out += " " + l;
  out += "\n\n";
  for (std::uint32_t i = 0; i < doc.rewards.size(); ++i) {
    out += "reward " + doc.rewards.name(RewardId{i}) + " = " +
           format_rational(doc.rewards.utility(RewardId{i})) + "\n";
  }
  if (doc.rewards.size() != 0) out += "\n";
  for (const NamedEvent& e : doc.events) {
    out += "event " + e.name + " = " + labels_of(e.event) + "\n";
  }
  if (doc.root_event_name) out += "root_event " + *doc.root_event_name + "\n";
  if (!doc.events.empty() || doc.root_event_name) out += "\n";
  Printer(doc, out).emit(doc.tree.root(), 0, "tree = ", "");
  return out;
}

TreeDocument make_tree_document(const DecisionTree& tree,
                                const RewardTable& rewards) {
  std::vector<NamedEvent> events;
  auto add = [&](const Event& e) -> std::string {
    for (const NamedEvent& n : events) {
      if (n.event == e) return n.name;
    }
    std::string name = "E";
    for (std::size_t s : e.states()) name += "_" + e.space().label(s);
    events.push_back({name, e});
    return name;
  };
  std::optional<std::string> root_name;
  if (!tree.root_event().is_full()) root_name = add(tree.root_event());
  tree.visit([&](const NodeId&, const Node& node, const Event&) {
    for (const Event& e : node.events()) add(e);
  });
  return TreeDocument{{}, tree.space(), rewards, std::move(events),
                      std::move(root_name), tree};
}

namespace {

MassFunction parse_prob_block(Parser& p, const PossibilitySpace& space,
                              bool braced) {
  std::vector<std::optional<Rational>> masses(space.size());
  while (true) {
    p.skip_newlines();
    if (braced && p.at(Tok::kPunct, "}")) {
      p.next();
      break;
    }
    if (!braced && !p.at(Tok::kIdent, "prob")) break;
    p.expect(Tok::kIdent, "prob", "'prob'");
    const std::string label = p.ident("state label");
    p.expect(Tok::kPunct, "=", "'='");
    const Token& value = p.expect(Tok::kNumber, {}, "a rational probability");
    auto idx = space.index_of(label);
    if (!idx) unknown("state", label);
    if (masses[*idx]) duplicate("probability of state", label);
    masses[*idx] = parse_rational(value.text);
  }
  MassFunction out;
  for (std::size_t s = 0; s < masses.size(); ++s) {
    if (!masses[s]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "no probability given for state '" + space.label(s) + "'");
    }
    out.push_back(*masses[s]);
  }
  return out;
}

}  // namespace

ChoiceContext parse_context(std::string_view text, const PossibilitySpace& space,
                            const RewardTable& rewards) {
  Parser p(lex(text));
  RewardTable utilities = rewards;
  std::optional<MassFunction> probability;
  std::optional<std::vector<MassFunction>> credal;
  while (true) {
    p.skip_newlines();
    if (p.at(Tok::kEnd)) break;
    if (p.at(Tok::kIdent, "prob")) {
      if (probability) duplicate("statement", "prob");
      probability = parse_prob_block(p, space, false);
    } else if (p.at(Tok::kIdent, "credal")) {
      p.next();
      if (credal) duplicate("statement", "credal");
      credal.emplace();
      p.skip_newlines();
      if (!p.at(Tok::kPunct, "{")) p.fail("credal needs at least one { ... } block");
      while (p.at(Tok::kPunct, "{")) {
        p.next();
        credal->push_back(parse_prob_block(p, space, true));
        p.skip_newlines();
      }
    } else if (p.at(Tok::kIdent, "utility")) {
      p.next();
      const std::string name = p.ident("reward name");
      p.expect(Tok::kPunct, "=", "'='");
      const Token& value = p.expect(Tok::kNumber, {}, "a rational utility");
      auto id = utilities.find(name);
      if (!id) unknown("reward", name);
      utilities.set_utility(*id, parse_rational(value.text));
    } else {
      p.fail("expected prob, credal or utility");
    }
  }
  return ChoiceContext(std::move(utilities), std::move(probability),
                       std::move(credal));
}

std::string serialize_context(const ChoiceContext& context,
                              const PossibilitySpace& space) {
  auto block = [&](const MassFunction& p, const std::string& indent) {
    std::string out;
    for (std::size_t s = 0; s < space.size(); ++s) {
      out += indent + "prob " + space.label(s) + " = " + format_rational(p.at(s)) +
             "\n";
    }
    return out;
  };
  std::string out;
  if (context.probability()) out += block(*context.probability(), "");
  if (context.credal()) {
    if (!out.empty()) out += "\n";
    out += "credal";
    for (const MassFunction& p : *context.credal()) {
      out += " {\n" + block(p, "  ") + "}";
    }
    out += "\n";
  }
  return out;
}

}  // namespace choicetree
