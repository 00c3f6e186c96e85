#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "semikern/category.hpp"

namespace semikern {

class VectCategory;
class FinabCategory;
class DecoratedCategory;

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// A parsed session file: one category, named objects, named morphisms.
// Line-oriented grammar, '#' starts a comment:
//   category <kind> [p=<prime>]          kind in {vect, finab, lintop, topab}
//   object <name> dims=[d1,...] [open={[v,...];[v,...]}]
//   morphism <name> <src> -> <dst> matrix=[[...],...]
class Session {
public:
  Session();
  ~Session();
  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;

  static Session parse_text(const std::string& text);
  static Session parse_file(const std::string& path);

  bool has_category() const { return cat_ != nullptr; }
  const Category& category() const;

  bool has_object(const std::string& name) const;
  bool has_morphism(const std::string& name) const;
  const Obj& object(const std::string& name) const;          // throws on unknown
  const Mor& morphism(const std::string& name) const;        // throws on unknown

  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& morphism_names() const { return morphism_names_; }

  const std::string& kind() const { return kind_; }
  long long prime() const { return p_; }

  // programmatic construction (used by the counterexample miner to emit
  // replayable witnesses)
  void set_category(const std::string& kind, long long p);
  void add_object(const std::string& name, const Obj& o);
  void add_morphism(const std::string& name, const Mor& m);

  // serialize back to the session grammar
  std::string to_text() const;

private:
  std::string kind_;
  long long p_ = 2;
  std::unique_ptr<VectCategory> vect_;
  std::unique_ptr<FinabCategory> finab_;
  std::unique_ptr<DecoratedCategory> dec_;
  const Category* cat_ = nullptr;
  std::map<std::string, Obj> objects_;
  std::map<std::string, Mor> morphisms_;
  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
};

}  // namespace semikern
