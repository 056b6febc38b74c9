#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citor/module.hpp"

namespace citor {

inline constexpr const char* tool_version = "0.1.0";

struct Bounds {
  // Resolution length; 0 picks default_steps(ring).
  int steps = 0;
  // Largest Tor/Ext index.
  int tor_bound = 8;
  // Hilbert values are recorded for degree_bound + 1 degrees from the lowest generator.
  int degree_bound = 6;
  std::uint64_t seed = 1;
};

enum class CommandKind { resolve, betti, tor, ext, profile, pushforward, quasilift, check, search, example };

const char* command_name(CommandKind k);

struct Command {
  CommandKind kind = CommandKind::resolve;
  // Positional module names, or the ring name for search.
  std::vector<std::string> args;
  // Theorem, question or example id.
  std::string id;
  std::map<std::string, std::string> options;
  // Module pairs given as extra=(M, N) to search.
  std::vector<std::pair<std::string, std::string>> pairs;
  int line = 0;
  int column = 0;
};

struct RingDecl {
  std::string name;
  RingPtr ring;
};

struct ModuleDecl {
  std::string name;
  std::string ring;
  Module module;
};

struct Session {
  Field field;
  std::vector<RingDecl> rings;
  std::vector<ModuleDecl> modules;
  std::vector<Command> commands;

  const RingDecl* find_ring(const std::string& name) const;
  const ModuleDecl* find_module(const std::string& name) const;
};

// Statements, one per line ('#' comments):
//   ring R = quotient(vars=[x,y], ideal=[x*y], primes=[[x],[y]])
//   module M = coker(R, shifts=[0,0], matrix=[[x, 0], [0, y]])
//   module M = cyclic(R, ideal=[x]) | free(R, shifts=[0]) | dual(M) | tensor(M, N)
//   resolve M steps=6 | betti M | tor M N bound=8 | ext M N | profile M
//   pushforward M | quasilift M split=0
//   check 3.12(2) on (M, N, bound=8, index=1, w=0)
//   search 3.17 with (ring=R, samples=100, seed=1, bound=6, extra=(M, N))
//   example 3.14
// Throws parse_error or undeclared_name with "line L, column C" in the message.
Session parse_session(const std::string& text, const Field& field = Field::default_field());

// Ring and module declarations as a script; derived modules become coker().
std::string declarations_script(const Session& s);

}  // namespace citor
