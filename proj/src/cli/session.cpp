#include "citor/session.hpp"

#include <algorithm>
#include <sstream>

#include "citor/errors.hpp"
#include "citor/ring.hpp"
#include "token_stream.hpp"

namespace citor {

const char* command_name(CommandKind k) {
  switch (k) {
    case CommandKind::resolve: return "resolve";
    case CommandKind::betti: return "betti";
    case CommandKind::tor: return "tor";
    case CommandKind::ext: return "ext";
    case CommandKind::profile: return "profile";
    case CommandKind::pushforward: return "pushforward";
    case CommandKind::quasilift: return "quasilift";
    case CommandKind::check: return "check";
    case CommandKind::search: return "search";
    case CommandKind::example: return "example";
  }
  return "?";
}

const RingDecl* Session::find_ring(const std::string& name) const {
  for (const auto& r : rings) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const ModuleDecl* Session::find_module(const std::string& name) const {
  for (const auto& m : modules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

using detail::parse_fail;
using detail::Tok;
using detail::Token;
using detail::TokenStream;

const std::map<std::string, CommandKind>& command_words() {
  static const std::map<std::string, CommandKind> words = {
      {"resolve", CommandKind::resolve},       {"betti", CommandKind::betti},
      {"tor", CommandKind::tor},               {"ext", CommandKind::ext},
      {"profile", CommandKind::profile},       {"pushforward", CommandKind::pushforward},
      {"quasilift", CommandKind::quasilift},   {"check", CommandKind::check},
      {"search", CommandKind::search},         {"example", CommandKind::example},
  };
  return words;
}

// Allowed key=value options per positional command.
const std::map<CommandKind, std::vector<std::string>>& option_keys() {
  static const std::map<CommandKind, std::vector<std::string>> keys = {
      {CommandKind::resolve, {"steps", "over"}}, {CommandKind::betti, {"steps"}},
      {CommandKind::tor, {"bound"}},             {CommandKind::ext, {"bound"}},
      {CommandKind::profile, {}},                {CommandKind::pushforward, {}},
      {CommandKind::quasilift, {"split"}},
  };
  return keys;
}

class Parser {
 public:
  Parser(const std::string& text, const Field& field) : ts_(detail::tokenize(text)) { session_.field = field; }

  Session run() {
    while (true) {
      ts_.skip_newlines();
      if (ts_.peek().kind == Tok::end) break;
      statement();
      end_of_statement();
    }
    return std::move(session_);
  }

 private:
  TokenStream ts_;
  Session session_;

  void end_of_statement() {
    const Token& t = ts_.peek();
    if (t.kind != Tok::newline && t.kind != Tok::end) parse_fail(t, "expected end of line");
  }

  void statement() {
    const Token& head = ts_.peek();
    if (head.kind != Tok::ident) parse_fail(head, "expected a declaration or a command");
    if (head.text == "ring") return ring_decl();
    if (head.text == "module") return module_decl();
    auto it = command_words().find(head.text);
    if (it == command_words().end()) parse_fail(head, "unknown statement '" + head.text + "'");
    command(it->second);
  }

  const Token& new_name() {
    const Token& t = ts_.expect_ident();
    if (session_.find_ring(t.text) || session_.find_module(t.text)) {
      parse_fail(t, "name '" + t.text + "' is already declared");
    }
    return t;
  }

  [[noreturn]] static void undeclared(const Token& t, const std::string& what) {
    fail(ErrorKind::undeclared_name, "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                                         ": undeclared " + what + " '" + t.text + "'");
  }

  const RingDecl& ring_ref() {
    const Token& t = ts_.expect_ident();
    const RingDecl* r = session_.find_ring(t.text);
    if (!r) undeclared(t, "ring");
    return *r;
  }

  const ModuleDecl& module_ref() {
    const Token& t = ts_.expect_ident();
    const ModuleDecl* m = session_.find_module(t.text);
    if (!m) undeclared(t, "module");
    return *m;
  }

  // Runs a constructor and tags its errors with the statement position.
  template <class F>
  auto located(const Token& at, F&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::undeclared_name) throw;
      fail(e.kind(), "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + e.what());
    }
  }

  std::string key() {
    const Token& k = ts_.expect_ident();
    ts_.expect_symbol("=");
    return k.text;
  }

  // '[' item (',' item)* ']' or '[]'.
  template <class F>
  void bracket_list(F&& item) {
    ts_.expect_symbol("[");
    if (ts_.accept_symbol("]")) return;
    while (true) {
      item();
      if (ts_.at_symbol(",")) {
        const Token& comma = ts_.next();
        if (ts_.at_symbol("]")) parse_fail(comma, "dangling ','");
        continue;
      }
      ts_.expect_symbol("]");
      return;
    }
  }

  std::vector<Polynomial> poly_list(const SpacePtr& space) {
    std::vector<Polynomial> out;
    bracket_list([&] { out.push_back(detail::parse_poly_expr(ts_, space)); });
    return out;
  }

  int integer() {
    bool neg = ts_.accept_symbol("-");
    const Token& t = ts_.peek();
    if (t.kind != Tok::number) parse_fail(t, "expected an integer");
    ts_.next();
    if (t.text.size() > 9) parse_fail(t, "integer too large");
    int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  std::vector<int> int_list() {
    std::vector<int> out;
    bracket_list([&] { out.push_back(integer()); });
    return out;
  }

  void ring_decl() {
    const Token& kw = ts_.next();
    const Token name = new_name();
    ts_.expect_symbol("=");
    const Token& ctor = ts_.expect_ident();
    if (ctor.text != "quotient") parse_fail(ctor, "expected quotient(...)");
    ts_.expect_symbol("(");
    const Token& vars_key = ts_.peek();
    if (key() != "vars") parse_fail(vars_key, "quotient(...) starts with vars=[...]");
    std::vector<std::string> vars;
    bracket_list([&] {
      const Token& v = ts_.expect_ident();
      for (const auto& seen : vars) {
        if (seen == v.text) parse_fail(v, "repeated variable '" + v.text + "'");
      }
      vars.push_back(v.text);
    });
    if (vars.empty()) parse_fail(vars_key, "a ring needs at least one variable");
    SpacePtr space = make_space(session_.field, vars);
    std::vector<Polynomial> ideal;
    std::optional<std::vector<std::vector<Polynomial>>> primes;
    while (ts_.accept_symbol(",")) {
      const Token& k = ts_.peek();
      std::string kname = key();
      if (kname == "ideal") {
        ideal = poly_list(space);
      } else if (kname == "primes") {
        primes.emplace();
        bracket_list([&] { primes->push_back(poly_list(space)); });
      } else {
        parse_fail(k, "unknown ring option '" + kname + "'");
      }
    }
    ts_.expect_symbol(")");
    RingPtr ring = located(kw, [&] { return make_ring(space, ideal, primes, name.text); });
    session_.rings.push_back({name.text, ring});
  }

  void module_decl() {
    const Token& kw = ts_.next();
    const Token name = new_name();
    ts_.expect_symbol("=");
    const Token& ctor = ts_.expect_ident();
    ts_.expect_symbol("(");
    std::string ring_name;
    std::optional<Module> built;
    if (ctor.text == "coker" || ctor.text == "cyclic" || ctor.text == "free") {
      const RingDecl& r = ring_ref();
      ring_name = r.name;
      const SpacePtr& space = r.ring->space();
      std::optional<std::vector<int>> shifts;
      std::optional<std::vector<std::vector<Polynomial>>> rows;
      std::optional<std::vector<Polynomial>> ideal;
      const Token* matrix_at = nullptr;
      while (ts_.accept_symbol(",")) {
        const Token& k = ts_.peek();
        std::string kname = key();
        if (kname == "shifts" && ctor.text != "cyclic") {
          shifts = int_list();
        } else if (kname == "matrix" && ctor.text == "coker") {
          matrix_at = &k;
          rows.emplace();
          bracket_list([&] { rows->push_back(poly_list(space)); });
        } else if (kname == "ideal" && ctor.text == "cyclic") {
          ideal = poly_list(space);
        } else {
          parse_fail(k, "unknown " + ctor.text + " option '" + kname + "'");
        }
      }
      ts_.expect_symbol(")");
      built = located(kw, [&]() -> Module {
        if (ctor.text == "free") {
          return Module::free(r.ring, shifts.value_or(std::vector<int>{0}), name.text);
        }
        if (ctor.text == "cyclic") {
          if (!ideal) parse_fail(ctor, "cyclic(...) needs ideal=[...]");
          return Module::cyclic(r.ring, *ideal, 0, name.text);
        }
        if (!rows) parse_fail(ctor, "coker(...) needs matrix=[[...]]");
        std::vector<int> sh = shifts.value_or(std::vector<int>(rows->size(), 0));
        if (rows->empty()) return Module::free(r.ring, sh, name.text);
        if (sh.size() != rows->size()) {
          parse_fail(*matrix_at, "matrix has " + std::to_string(rows->size()) + " rows but " +
                                     std::to_string(sh.size()) + " shifts");
        }
        return Module(r.ring, Matrix::from_rows(space, sh, *rows), name.text);
      });
    } else if (ctor.text == "dual") {
      const ModuleDecl& m = module_ref();
      ts_.expect_symbol(")");
      ring_name = m.ring;
      built = located(kw, [&] { return dual(m.module).named(name.text); });
    } else if (ctor.text == "tensor") {
      const Token& at = ts_.peek();
      const ModuleDecl& a = module_ref();
      ts_.expect_symbol(",");
      const ModuleDecl& b = module_ref();
      ts_.expect_symbol(")");
      if (a.ring != b.ring) parse_fail(at, "tensor(...) needs modules over the same ring");
      ring_name = a.ring;
      built = located(kw, [&] { return tensor(a.module, b.module).named(name.text); });
    } else {
      parse_fail(ctor, "unknown module constructor '" + ctor.text + "'");
    }
    session_.modules.push_back({name.text, ring_name, *built});
  }

  std::string value_word() {
    const Token& t = ts_.peek();
    if (t.kind == Tok::newline || t.kind == Tok::end) parse_fail(t, "expected a value");
    if (t.kind == Tok::symbol && t.text == "-") return "-" + std::to_string(-integer());
    ts_.next();
    if (t.kind == Tok::symbol) parse_fail(t, "expected a value");
    return t.text;
  }

  void command(CommandKind kind) {
    const Token& kw = ts_.next();
    Command cmd;
    cmd.kind = kind;
    cmd.line = kw.line;
    cmd.column = kw.column;
    switch (kind) {
      case CommandKind::example:
        cmd.id = ts_.read_glued_word();
        break;
      case CommandKind::check: {
        cmd.id = ts_.read_glued_word();
        const Token& on = ts_.expect_ident();
        if (on.text != "on") parse_fail(on, "expected 'on'");
        ts_.expect_symbol("(");
        std::string ring;
        bool first = true;
        while (first || ts_.accept_symbol(",")) {
          first = false;
          if (ts_.peek(1).kind == Tok::symbol && ts_.peek(1).text == "=") {
            const Token& k = ts_.peek();
            std::string kname = key();
            if (kname != "bound" && kname != "index" && kname != "w") parse_fail(k, "unknown check option");
            cmd.options[kname] = std::to_string(integer());
            continue;
          }
          const ModuleDecl& m = module_ref();
          if (!ring.empty() && m.ring != ring) parse_fail(ts_.peek(), "modules over different rings");
          ring = m.ring;
          cmd.args.push_back(m.name);
        }
        ts_.expect_symbol(")");
        if (cmd.args.empty() || cmd.args.size() > 2) parse_fail(kw, "check takes one or two modules");
        break;
      }
      case CommandKind::search: {
        cmd.id = ts_.read_glued_word();
        const Token& with = ts_.expect_ident();
        if (with.text != "with") parse_fail(with, "expected 'with'");
        ts_.expect_symbol("(");
        bool first = true;
        while (first || ts_.accept_symbol(",")) {
          first = false;
          const Token& k = ts_.peek();
          std::string kname = key();
          if (kname == "ring") {
            cmd.args.push_back(ring_ref().name);
          } else if (kname == "extra") {
            ts_.expect_symbol("(");
            std::string a = module_ref().name;
            ts_.expect_symbol(",");
            std::string b = module_ref().name;
            ts_.expect_symbol(")");
            cmd.pairs.emplace_back(a, b);
          } else if (kname == "samples" || kname == "seed" || kname == "bound" || kname == "generators" ||
                     kname == "relations" || kname == "degree") {
            cmd.options[kname] = std::to_string(integer());
          } else {
            parse_fail(k, "unknown search option '" + kname + "'");
          }
        }
        ts_.expect_symbol(")");
        if (cmd.args.size() != 1) parse_fail(kw, "search needs exactly one ring=NAME");
        for (const auto& [a, b] : cmd.pairs) {
          if (session_.find_module(a)->ring != cmd.args[0] || session_.find_module(b)->ring != cmd.args[0]) {
            parse_fail(kw, "extra modules must live over the search ring");
          }
        }
        break;
      }
      default: {
        const std::size_t arity = (kind == CommandKind::tor || kind == CommandKind::ext) ? 2 : 1;
        for (std::size_t i = 0; i < arity; ++i) cmd.args.push_back(module_ref().name);
        if (arity == 2 && session_.find_module(cmd.args[0])->ring != session_.find_module(cmd.args[1])->ring) {
          parse_fail(kw, std::string(command_name(kind)) + " needs modules over the same ring");
        }
        const auto& allowed = option_keys().at(kind);
        while (ts_.peek().kind == Tok::ident) {
          const Token& k = ts_.peek();
          std::string kname = key();
          if (std::find(allowed.begin(), allowed.end(), kname) == allowed.end()) {
            parse_fail(k, "unknown " + std::string(command_name(kind)) + " option '" + kname + "'");
          }
          if (kname == "over") {
            const Token& v = ts_.expect_ident();
            if (v.text != "quotient" && v.text != "ambient") parse_fail(v, "over= takes quotient or ambient");
            cmd.options[kname] = v.text;
          } else {
            const Token& v = ts_.peek();
            int n = integer();
            if (n < 0) parse_fail(v, "expected a non-negative integer");
            cmd.options[kname] = std::to_string(n);
          }
        }
      }
    }
    session_.commands.push_back(std::move(cmd));
  }
};

std::string poly_list_text(const std::vector<Polynomial>& ps) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + "]";
}

}  // namespace

Session parse_session(const std::string& text, const Field& field) { return Parser(text, field).run(); }

std::string declarations_script(const Session& s) {
  std::ostringstream os;
  for (const auto& r : s.rings) {
    os << "ring " << r.name << " = quotient(vars=[";
    const auto& vars = r.ring->variables();
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
    os << "], ideal=" << poly_list_text(r.ring->generators());
    const auto& primes = r.ring->minimal_primes();
    if (primes) {
      bool declared = false;
      for (const auto& p : *primes) declared = declared || p.certificate != "monomial";
      if (declared) {
        os << ", primes=[";
        for (std::size_t i = 0; i < primes->size(); ++i) os << (i ? ", " : "") << poly_list_text((*primes)[i].generators);
        os << "]";
      }
    }
    os << ")\n";
  }
  for (const auto& m : s.modules) {
    os << "module " << m.name << " = coker(" << m.ring << ", ";
    std::string body = m.module.to_string();
    os << body.substr(body.find('(') + 1) << "\n";
  }
  return os.str();
}

}  // namespace citor
