// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reltrs {

/// Thrown for ill-formed terms, contexts and signatures.
class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the term parser; carries a 1-based column.
class ParseError : public SyntaxError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : SyntaxError(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<std::pair<std::string, unsigned>> ops);

  void add(const std::string& name, unsigned arity);
  std::optional<unsigned> arity(std::string_view name) const;
  bool contains(std::string_view name) const { return arity(name).has_value(); }
  std::size_t size() const { return ops_.size(); }
  unsigned max_arity() const;

  /// Operators sorted by name; the position is the operator's index.
  const std::vector<std::pair<std::string, unsigned>>& operators() const {
    return ops_;
  }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::pair<std::string, unsigned>> ops_;
};

/// The arithmetic signature {0/0, S/1, A/2, M/2}.
Signature arithmetic_signature();

/// Immutable first-order term. Copies share structure.
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string op, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  bool is_app() const { return !node_->is_var; }
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  unsigned depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }
  /// Number of subterm occurrences (positions).
  std::size_t size() const { return node_->size; }

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  /// Orders by depth, then variables before applications, then name, then
  /// arguments left to right.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Term> args;
    unsigned depth;
    std::size_t size;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

using Substitution = std::map<std::string, Term>;

/// Reserved nullary symbol marking the hole of a context.
inline constexpr std::string_view kHole = "[]";

/// A term with exactly one occurrence of the hole symbol.
class Context {
 public:
  explicit Context(Term t);
  static Context hole();

  const Term& term() const { return t_; }
  Term plug(const Term& t) const;
  std::string to_string() const { return t_.to_string(); }

  friend bool operator==(const Context&, const Context&) = default;
  friend auto operator<=>(const Context& a, const Context& b) {
    return a.t_ <=> b.t_;
  }

 private:
  Term t_;
};

Term apply_substitution(const Term& t, const Substitution& s);
Term plug(const Context& c, const Term& t);

/// Every (context, subterm) split of t, in pre-order of the hole position.
std::vector<std::pair<Context, Term>> decompose(const Term& t);

/// First-order matching; repeated pattern variables must bind equal terms.
std::optional<Substitution> match_rule(const Term& pattern, const Term& subject);

std::set<std::string> free_vars(const Term& t);

/// Checks arities against the signature and that variables are declared.
void check_well_formed(const Term& t, const Signature& sig,
                       std::span<const std::string> vars);

/// Parses `name(arg,...)` syntax. Identifiers listed in `vars` are variables,
/// everything else must be an operator of `sig`. Whitespace is ignored.
Term parse_term(std::string_view text, const Signature& sig,
                std::span<const std::string> vars);

/// Parses a context: like parse_term but accepts the hole symbol once.
Context parse_context(std::string_view text, const Signature& sig,
                      std::span<const std::string> vars);

/// Thrown when a universe would exceed its size cap.
class UniverseCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using TermId = std::uint32_t;

/// A finite, subterm-closed, densely indexed set of terms. Ids follow the
/// term ordering, so children always have smaller ids than their parents.
class Universe {
 public:
  static constexpr std::size_t kDefaultCap = 2'000'000;

  /// All terms of depth at most `depth`.
  static std::shared_ptr<const Universe> enumerate(
      const Signature& sig, std::vector<std::string> vars, unsigned depth,
      std::size_t cap = kDefaultCap);

  /// Subterm closure of `seeds`, plus all variables and constants.
  static std::shared_ptr<const Universe> closure(
      const Signature& sig, std::vector<std::string> vars,
      std::span<const Term> seeds, std::size_t cap = kDefaultCap);

  std::size_t size() const { return terms_.size(); }
  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& variables() const { return vars_; }
  /// For enumerated universes, every term up to this depth is present.
  std::optional<unsigned> complete_depth() const { return complete_depth_; }
  unsigned max_depth() const { return max_depth_; }

  const Term& term(TermId id) const { return terms_[id]; }
  std::optional<TermId> find(const Term& t) const;
  TermId id_of(const Term& t) const;  // throws if absent
  bool contains(const Term& t) const { return find(t).has_value(); }

  bool is_var(TermId id) const { return sym_[id] < 0; }
  /// Operator index into signature().operators(); requires !is_var(id).
  std::size_t op(TermId id) const { return static_cast<std::size_t>(sym_[id]); }
  /// Variable index into variables(); requires is_var(id).
  std::size_t var_index(TermId id) const {
    return static_cast<std::size_t>(-sym_[id] - 1);
  }
  std::span<const TermId> children(TermId id) const {
    return {child_pool_.data() + child_off_[id], arity_[id]};
  }
  unsigned arity(TermId id) const { return arity_[id]; }
  unsigned depth(TermId id) const { return depth_[id]; }
  /// Bit i set iff variable i occurs in the term.
  std::uint64_t var_mask(TermId id) const { return var_mask_[id]; }

  /// The term o(children...) if it is in the universe.
  std::optional<TermId> lookup_app(std::size_t op,
                                   std::span<const TermId> children) const;
  std::optional<TermId> var_id(std::size_t var_index) const;

  /// Bitset over ids (64 per word) of terms occurring as argument `pos` of
  /// some application of operator `op` in this universe.
  std::span<const std::uint64_t> child_mask(std::size_t op,
                                            std::size_t pos) const {
    return {child_masks_.data() + (op * mask_stride_ + pos) * mask_words_,
            mask_words_};
  }

  std::vector<std::string> labels() const;

 private:
  Universe(Signature sig, std::vector<std::string> vars);
  void add(const Term& t);
  void index_last();
  void finish();
  std::size_t slot_hash(std::int32_t sym, std::span<const TermId> ch) const;

  Signature sig_;
  std::vector<std::string> vars_;
  std::optional<unsigned> complete_depth_;
  unsigned max_depth_ = 0;

  std::vector<Term> terms_;
  std::vector<std::int32_t> sym_;
  std::vector<std::uint32_t> child_off_;
  std::vector<unsigned> arity_;
  std::vector<unsigned> depth_;
  std::vector<std::uint64_t> var_mask_;
  std::vector<TermId> child_pool_;
  std::vector<std::uint32_t> table_;  // open addressing, kEmpty = free
  std::size_t mask_stride_ = 0;
  std::size_t mask_words_ = 0;
  std::vector<std::uint64_t> child_masks_;
};

}  // namespace reltrs
