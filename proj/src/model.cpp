#include "lpict/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lpict/error.hpp"

namespace lpict::models {

using lts::EventTree;
using lts::StateNode;
using lts::TreeOp;

std::string to_string(EnvironmentKind kind) {
  return kind == EnvironmentKind::Ideal ? "ideal" : "nonideal";
}

const EnvironmentConfig& ProtocolModel::environment(EnvironmentKind kind) const {
  for (const auto& env : environments)
    if (env.kind == kind) return env;
  throw ValidationError(ValidationError::Kind::MissingEnvironment,
                        "model '" + name + "' declares no " + to_string(kind) + " environment");
}

const logic::Valuation& EventAssignment::at(const std::string& state) const {
  auto it = states.find(state);
  if (it == states.end())
    throw ValidationError(ValidationError::Kind::UnknownState,
                          "no event assignment for state '" + state + "'");
  return it->second;
}

bool EventAssignment::operator==(const EventAssignment& other) const {
  return std::equal(states.begin(), states.end(), other.states.begin(), other.states.end(),
                    [](const auto& a, const auto& b) {
                      return a.first == b.first && a.second.values() == b.second.values();
                    });
}

EventAssignment apply_environment(const ProtocolModel& model, const EnvironmentConfig& env) {
  if (env.kind == EnvironmentKind::Ideal && !env.attackers.empty())
    throw ValidationError(ValidationError::Kind::InvalidEnvironment,
                          "an ideal environment has no attackers");
  EventAssignment out;
  for (const auto& state : model.lts.states()) {
    logic::Valuation v;
    for (const auto& event : state.events) {
      bool holds = true;
      for (auto cap : env.attackers)
        if (!event.resists.contains(lts::countered_by(cap))) holds = false;
      v.set(event.name, holds);
    }
    out.states.emplace(state.id, std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string text;
  std::size_t offset;  // into the comment-stripped line
};

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (line[i] == '"') {
      i = line.find('"', i + 1);
      i = i == std::string::npos ? line.size() : i + 1;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    }
    out.push_back({line.substr(start, i - start), start});
  }
  return out;
}

class ModelParser {
 public:
  explicit ModelParser(std::string_view source) {
    std::istringstream in{std::string(source)};
    for (std::string line; std::getline(in, line);) lines_.push_back(strip_comment(line));
  }

  ProtocolModel parse() {
    while (row_ < lines_.size()) {
      const auto tokens = tokenize(lines_[row_]);
      ++row_;
      if (tokens.empty()) continue;
      const std::string& key = tokens[0].text;
      if (key == "protocol") {
        protocol(tokens);
      } else if (key == "state") {
        state(tokens);
      } else if (key == "alias") {
        alias(tokens);
      } else if (key == "transition") {
        transition(tokens);
      } else if (key == "initial") {
        once(initial_, single(tokens, "initial <state>"), "initial");
      } else if (key == "terminal") {
        terminal(tokens);
      } else if (key == "environment") {
        environment(tokens);
      } else {
        fail("unknown keyword '" + key + "'");
      }
    }
    if (!name_) fail("missing 'protocol' declaration");
    if (!initial_) fail("missing 'initial' declaration");
    if (!terminal_) fail("missing 'terminal' declaration");

    ProtocolModel model;
    model.name = *name_;
    model.lts = lts::build_guarded_lts(std::move(states_), std::move(transitions_), *initial_,
                                       *terminal_, terminal_atom_);
    model.environments = std::move(environments_);
    return model;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("model line " + std::to_string(row_) + ": " + msg, row_);
  }

  void once(std::optional<std::string>& slot, std::string value, const char* what) {
    if (slot) fail(std::string("duplicate '") + what + "' declaration");
    slot = std::move(value);
  }

  std::string single(const std::vector<Token>& t, const char* usage) {
    if (t.size() != 2) fail(std::string("expected '") + usage + "'");
    return t[1].text;
  }

  std::string rest_after(const Token& t) const {
    const std::string& line = lines_[row_ - 1];
    std::size_t from = t.offset + t.text.size();
    std::size_t b = line.find_first_not_of(" \t\r", from);
    std::size_t e = line.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : line.substr(b, e - b + 1);
  }

  void protocol(const std::vector<Token>& t) {
    if (t.size() != 2 || t[1].text.size() < 2 || t[1].text.front() != '"' ||
        t[1].text.back() != '"')
      fail("expected 'protocol \"NAME\"'");
    once(name_, t[1].text.substr(1, t[1].text.size() - 2), "protocol");
  }

  void state(const std::vector<Token>& t) {
    if (t.size() == 4 && t[2].text == "{" && t[3].text == "}") {
      add_state(StateNode{t[1].text, {}, std::nullopt, std::nullopt});
      return;
    }
    if (t.size() != 3 || t[2].text != "{") fail("expected 'state <id> {'");
    StateNode node{t[1].text, {}, std::nullopt, std::nullopt};
    std::optional<std::pair<std::size_t, std::vector<Token>>> combine;
    while (true) {
      if (row_ >= lines_.size()) fail("unterminated state block");
      const auto body = tokenize(lines_[row_]);
      ++row_;
      if (body.empty()) continue;
      const std::string& key = body[0].text;
      if (key == "}") {
        if (body.size() != 1) fail("unexpected text after '}'");
        break;
      }
      if (key == "event") {
        if (body.size() < 2 || (body.size() > 2 && body[2].text != "resists"))
          fail("expected 'event <name> [resists <tag>...]'");
        lts::Event event{body[1].text, {}};
        for (std::size_t i = 3; i < body.size(); ++i) {
          auto tag = lts::parse_resist_tag(body[i].text);
          if (!tag) fail("unknown resist tag '" + body[i].text + "'");
          event.resists.insert(*tag);
        }
        node.events.push_back(std::move(event));
      } else if (key == "combine") {
        if (combine) fail("duplicate 'combine' in state " + node.id);
        if (body.size() < 2) fail("expected 'combine <operators or formula>'");
        combine.emplace(row_, body);
      } else if (key == "message") {
        if (node.payload) fail("duplicate 'message' in state " + node.id);
        if (body.size() < 2) fail("a message needs at least one item");
        lts::EventMessage msg;
        for (std::size_t i = 1; i < body.size(); ++i) msg.items.push_back(body[i].text);
        node.payload = std::move(msg);
      } else {
        fail("unknown keyword '" + key + "' in state block");
      }
    }
    if (combine) {
      const std::size_t end = row_;
      row_ = combine->first;
      node.combine = combine_tree(node, combine->second);
      row_ = end;
    }
    add_state(std::move(node));
  }

  EventTree combine_tree(const StateNode& node, const std::vector<Token>& t) {
    const bool operators = std::all_of(t.begin() + 1, t.end(), [](const Token& tok) {
      return tok.text == "and" || tok.text == "or";
    });
    try {
      if (operators) {
        std::vector<TreeOp> ops;
        for (std::size_t i = 1; i < t.size(); ++i)
          ops.push_back(t[i].text == "and" ? TreeOp::And : TreeOp::Or);
        return lts::build_event_tree(node.event_names(), ops);
      }
      return lts::event_tree_from_formula(logic::parse_formula(rest_after(t[0])));
    } catch (const DomainError& e) {
      fail(e.what());
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  void add_state(StateNode node) {
    for (const auto& s : states_)
      if (s.id == node.id) fail("duplicate state id '" + node.id + "'");
    states_.push_back(std::move(node));
  }

  void alias(const std::vector<Token>& t) {
    if (t.size() != 4 || t[2].text != "=") fail("expected 'alias <new> = <existing>'");
    auto it = std::find_if(states_.begin(), states_.end(),
                           [&](const StateNode& s) { return s.id == t[3].text; });
    if (it == states_.end()) fail("alias of undeclared state '" + t[3].text + "'");
    StateNode copy = *it;
    copy.id = t[1].text;
    add_state(std::move(copy));
  }

  void transition(const std::vector<Token>& t) {
    if (t.size() < 4 || t[2].text != "->")
      fail("expected 'transition <from> -> <to> [on <action>] [when <guard>]'");
    lts::GuardedTransition tr{t[1].text, {}, t[3].text, std::nullopt};
    std::size_t i = 4;
    if (i < t.size() && t[i].text == "on") {
      if (i + 1 >= t.size()) fail("'on' needs an action");
      tr.action = t[i + 1].text;
      i += 2;
    }
    if (i < t.size() && t[i].text == "when") {
      const std::string guard = rest_after(t[i]);
      if (guard.empty()) fail("'when' needs a guard formula");
      try {
        tr.guard = logic::parse_formula(guard);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      i = t.size();
    }
    if (i != t.size()) fail("unexpected '" + t[i].text + "' in transition");
    transitions_.push_back(std::move(tr));
  }

  void terminal(const std::vector<Token>& t) {
    if (t.size() == 4 && t[2].text == "as") {
      terminal_atom_ = t[3].text;
    } else if (t.size() != 2) {
      fail("expected 'terminal <state> [as <atom>]'");
    }
    once(terminal_, t[1].text, "terminal");
  }

  void environment(const std::vector<Token>& t) {
    if (t.size() < 2) fail("expected 'environment ideal|nonideal [attackers ...]'");
    EnvironmentConfig env;
    if (t[1].text == "ideal") {
      if (t.size() != 2) fail("an ideal environment takes no attackers");
    } else if (t[1].text == "nonideal") {
      env.kind = EnvironmentKind::Nonideal;
      if (t.size() > 2 && t[2].text != "attackers") fail("expected 'attackers'");
      for (std::size_t i = 3; i < t.size(); ++i) {
        auto cap = lts::parse_capability(t[i].text);
        if (!cap) fail("unknown attacker capability '" + t[i].text + "'");
        env.attackers.insert(*cap);
      }
    } else {
      fail("unknown environment '" + t[1].text + "'");
    }
    for (const auto& e : environments_)
      if (e.kind == env.kind) fail("duplicate " + t[1].text + " environment");
    environments_.push_back(std::move(env));
  }

  std::vector<std::string> lines_;
  std::size_t row_ = 0;  // number of lines consumed; the current line is row_
  std::optional<std::string> name_, initial_, terminal_;
  std::string terminal_atom_;
  std::vector<StateNode> states_;
  std::vector<lts::GuardedTransition> transitions_;
  std::vector<EnvironmentConfig> environments_;
};

// Renders a tree as `and`/`or` operators when the file syntax allows it.
std::optional<std::string> operator_form(const StateNode& s) {
  if (!lts::is_left_deep_plain(*s.combine)) return std::nullopt;
  const auto leaves = lts::leaves(*s.combine);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i]->event() != s.events[i].name) return std::nullopt;
  std::string out;
  for (auto op : lts::left_deep_operators(*s.combine)) out += " " + lts::to_string(op);
  return out;
}

}  // namespace

ProtocolModel load_model(std::string_view source) { return ModelParser(source).parse(); }

ProtocolModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_model(buffer.str());
}

std::string render_model(const ProtocolModel& model) {
  std::ostringstream out;
  out << "protocol \"" << model.name << "\"\n";
  const auto& states = model.lts.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const StateNode& s = states[i];
    auto same = std::find_if(states.begin(), states.begin() + i, [&](const StateNode& o) {
      return o.events == s.events && o.combine == s.combine && o.payload == s.payload;
    });
    if (same != states.begin() + i && !s.events.empty()) {
      out << "alias " << s.id << " = " << same->id << "\n";
      continue;
    }
    if (s.events.empty() && !s.payload) {
      out << "\nstate " << s.id << " { }\n";
      continue;
    }
    out << "\nstate " << s.id << " {\n";
    for (const auto& e : s.events) {
      out << "  event " << e.name;
      if (!e.resists.empty()) {
        out << " resists";
        for (auto tag : e.resists) out << " " << lts::to_string(tag);
      }
      out << "\n";
    }
    if (s.events.size() > 1) {
      if (auto ops = operator_form(s))
        out << "  combine" << *ops << "\n";
      else
        out << "  combine " << logic::to_string(lts::to_formula(*s.combine)) << "\n";
    } else if (s.combine && !(*s.combine == EventTree::leaf(s.events.front().name))) {
      out << "  combine " << logic::to_string(lts::to_formula(*s.combine)) << "\n";
    }
    if (s.payload) {
      out << "  message";
      for (const auto& item : s.payload->items) out << " " << item;
      out << "\n";
    }
    out << "}\n";
  }
  out << "\n";
  for (const auto& t : model.lts.transitions()) {
    out << "transition " << t.from << " -> " << t.to;
    if (!t.action.empty()) out << " on " << t.action;
    if (t.guard) out << " when " << logic::to_string(*t.guard);
    out << "\n";
  }
  out << "initial " << model.lts.initial() << "\n";
  out << "terminal " << model.lts.terminal();
  if (model.lts.terminal_atom() != model.lts.terminal()) out << " as " << model.lts.terminal_atom();
  out << "\n";
  for (const auto& env : model.environments) {
    out << "environment " << to_string(env.kind);
    if (env.kind == EnvironmentKind::Nonideal && !env.attackers.empty()) {
      out << " attackers";
      for (auto cap : env.attackers) out << " " << lts::to_string(cap);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace lpict::models
