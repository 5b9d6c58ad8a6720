// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/syntax.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace reltrs {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::initializer_list<std::pair<std::string, unsigned>> ops) {
  for (const auto& [name, arity] : ops) add(name, arity);
}

void Signature::add(const std::string& name, unsigned arity) {
  if (name.empty()) throw SyntaxError("empty operator name");
  if (name == kHole) throw SyntaxError("operator name is reserved: " + name);
  auto it = std::lower_bound(
      ops_.begin(), ops_.end(), name,
      [](const auto& p, const std::string& n) { return p.first < n; });
  if (it != ops_.end() && it->first == name) {
    throw SyntaxError("duplicate operator: " + name);
  }
  ops_.insert(it, {name, arity});
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  auto it = std::lower_bound(
      ops_.begin(), ops_.end(), name,
      [](const auto& p, std::string_view n) { return p.first < n; });
  if (it == ops_.end() || it->first != name) return std::nullopt;
  return static_cast<std::size_t>(it - ops_.begin());
}

std::optional<unsigned> Signature::arity(std::string_view name) const {
  auto i = index_of(name);
  if (!i) return std::nullopt;
  return ops_[*i].second;
}

unsigned Signature::max_arity() const {
  unsigned m = 0;
  for (const auto& op : ops_) m = std::max(m, op.second);
  return m;
}

Signature arithmetic_signature() {
  return Signature{{"0", 0}, {"S", 1}, {"A", 2}, {"M", 2}};
}

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::string name) {
  std::size_t h = mix(std::hash<std::string>{}(name), 1);
  return Term(std::make_shared<const Node>(
      Node{true, std::move(name), {}, 0, 1, h}));
}

Term Term::app(std::string op, std::vector<Term> args) {
  unsigned depth = 0;
  std::size_t size = 1;
  std::size_t h = mix(std::hash<std::string>{}(op), 2);
  for (const Term& a : args) {
    depth = std::max(depth, a.depth() + 1);
    size += a.size();
    h = mix(h, a.hash());
  }
  return Term(std::make_shared<const Node>(
      Node{false, std::move(op), std::move(args), depth, size, h}));
}

std::string Term::to_string() const {
  std::string out;
  std::function<void(const Term&)> rec = [&](const Term& t) {
    out += t.name();
    if (t.arity() == 0) return;
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) out += ',';
      rec(t.args()[i]);
    }
    out += ')';
  };
  rec(*this);
  return out;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.is_var() != b.is_var() ||
      a.depth() != b.depth() || a.name() != b.name() ||
      a.arity() != b.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.args()[i] == b.args()[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  if (a.is_var() != b.is_var()) {
    return a.is_var() ? std::strong_ordering::less
                      : std::strong_ordering::greater;
  }
  if (auto c = a.name().compare(b.name()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  std::size_t n = std::min(a.arity(), b.arity());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  }
  return a.arity() <=> b.arity();
}

// ---------------------------------------------------------------------------
// Contexts, substitution, matching

namespace {

std::size_t count_holes(const Term& t) {
  if (t.is_app() && t.name() == kHole && t.arity() == 0) return 1;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += count_holes(a);
  return n;
}

Term replace_hole(const Term& c, const Term& t) {
  if (c.is_var()) return c;
  if (c.name() == kHole && c.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(c.arity());
  for (const Term& a : c.args()) args.push_back(replace_hole(a, t));
  return Term::app(c.name(), std::move(args));
}

}  // namespace

Context::Context(Term t) : t_(std::move(t)) {
  std::size_t n = count_holes(t_);
  if (n != 1) {
    throw SyntaxError("context must contain exactly one hole, found " +
                      std::to_string(n));
  }
}

Context Context::hole() { return Context(Term::app(std::string(kHole))); }

Term Context::plug(const Term& t) const { return replace_hole(t_, t); }

Term plug(const Context& c, const Term& t) { return c.plug(t); }

Term apply_substitution(const Term& t, const Substitution& s) {
  if (t.is_var()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(apply_substitution(a, s));
  return Term::app(t.name(), std::move(args));
}

std::vector<std::pair<Context, Term>> decompose(const Term& t) {
  std::vector<std::pair<Context, Term>> out;
  out.emplace_back(Context::hole(), t);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    for (auto& [inner, sub] : decompose(t.args()[i])) {
      std::vector<Term> args(t.args().begin(), t.args().end());
      args[i] = inner.term();
      out.emplace_back(Context(Term::app(t.name(), std::move(args))),
                       std::move(sub));
    }
  }
  return out;
}

namespace {

bool match_into(const Term& p, const Term& s, Substitution& sigma) {
  if (p.is_var()) {
    auto [it, inserted] = sigma.emplace(p.name(), s);
    return inserted || it->second == s;
  }
  if (s.is_var() || p.name() != s.name() || p.arity() != s.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (!match_into(p.args()[i], s.args()[i], sigma)) return false;
  }
  return true;
}

}  // namespace

std::optional<Substitution> match_rule(const Term& pattern,
                                       const Term& subject) {
  Substitution sigma;
  if (!match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::function<void(const Term&)> rec = [&](const Term& u) {
    if (u.is_var()) {
      out.insert(u.name());
      return;
    }
    for (const Term& a : u.args()) rec(a);
  };
  rec(t);
  return out;
}

void check_well_formed(const Term& t, const Signature& sig,
                       std::span<const std::string> vars) {
  if (t.is_var()) {
    if (std::find(vars.begin(), vars.end(), t.name()) == vars.end()) {
      throw SyntaxError("undeclared variable: " + t.name());
    }
    return;
  }
  auto ar = sig.arity(t.name());
  if (!ar) throw SyntaxError("unknown operator: " + t.name());
  if (*ar != t.arity()) {
    throw SyntaxError("operator " + t.name() + " expects " +
                      std::to_string(*ar) + " argument(s), got " +
                      std::to_string(t.arity()));
  }
  for (const Term& a : t.args()) check_well_formed(a, sig, vars);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig,
             std::span<const std::string> vars, bool allow_hole)
      : text_(text), sig_(sig), vars_(vars), allow_hole_(allow_hole) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  static bool ident_char(char c) {
    return c != '(' && c != ')' && c != ',' && c != ' ' && c != '\t' &&
           c != '\n' && c != '\r';
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1),
                     pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  Term term() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected identifier");
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    bool has_args = pos_ < text_.size() && text_[pos_] == '(';

    if (name == kHole) {
      if (!allow_hole_) fail("hole symbol not allowed in a term");
      if (has_args) fail("hole takes no arguments");
      return Term::app(name);
    }
    bool is_var =
        std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    if (is_var) {
      if (has_args) fail("variable " + name + " applied to arguments");
      return Term::var(name);
    }
    auto ar = sig_.arity(name);
    if (!ar) {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    std::vector<Term> args;
    if (has_args) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
      } else {
        for (;;) {
          args.push_back(term());
          skip_ws();
          if (pos_ >= text_.size()) fail("unterminated argument list");
          if (text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (text_[pos_] == ')') {
            ++pos_;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
    }
    if (args.size() != *ar) {
      pos_ = start;
      fail("operator " + name + " expects " + std::to_string(*ar) +
           " argument(s), got " + std::to_string(args.size()));
    }
    return Term::app(std::move(name), std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  std::span<const std::string> vars_;
  bool allow_hole_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig,
                std::span<const std::string> vars) {
  return TermParser(text, sig, vars, false).parse();
}

Context parse_context(std::string_view text, const Signature& sig,
                      std::span<const std::string> vars) {
  return Context(TermParser(text, sig, vars, true).parse());
}

// ---------------------------------------------------------------------------
// Universe

namespace {
constexpr std::uint32_t kEmpty = 0xffffffffu;
}

Universe::Universe(Signature sig, std::vector<std::string> vars)
    : sig_(std::move(sig)), vars_(std::move(vars)) {
  if (vars_.size() > 64) throw SyntaxError("at most 64 variables supported");
  for (const auto& v : vars_) {
    if (sig_.contains(v)) {
      throw SyntaxError("variable name clashes with operator: " + v);
    }
  }
  std::set<std::string> uniq(vars_.begin(), vars_.end());
  if (uniq.size() != vars_.size()) throw SyntaxError("duplicate variable");
}

std::size_t Universe::slot_hash(std::int32_t sym,
                                std::span<const TermId> ch) const {
  std::size_t h = mix(0, static_cast<std::size_t>(sym + 1000));
  for (TermId c : ch) h = mix(h, c);
  return h;
}

void Universe::add(const Term& t) {
  terms_.push_back(t);
  child_off_.push_back(static_cast<std::uint32_t>(child_pool_.size()));
  arity_.push_back(static_cast<unsigned>(t.arity()));
  depth_.push_back(t.depth());
  max_depth_ = std::max(max_depth_, t.depth());
  if (t.is_var()) {
    auto it = std::find(vars_.begin(), vars_.end(), t.name());
    if (it == vars_.end()) throw SyntaxError("undeclared variable: " + t.name());
    auto vi = static_cast<std::int32_t>(it - vars_.begin());
    sym_.push_back(-vi - 1);
    var_mask_.push_back(std::uint64_t{1} << vi);
    index_last();
    return;
  }
  auto oi = sig_.index_of(t.name());
  if (!oi || sig_.operators()[*oi].second != t.arity()) {
    throw SyntaxError("term not over the signature: " + t.to_string());
  }
  sym_.push_back(static_cast<std::int32_t>(*oi));
  std::uint64_t mask = 0;
  for (const Term& a : t.args()) {
    auto cid = find(a);
    if (!cid) throw SyntaxError("universe not subterm-closed");
    child_pool_.push_back(*cid);
    mask |= var_mask_[*cid];
  }
  var_mask_.push_back(mask);
  index_last();
}

void Universe::index_last() {
  auto id = static_cast<TermId>(terms_.size() - 1);
  if (table_.size() < 2 * terms_.size()) {
    std::size_t cap = 16;
    while (cap < 4 * terms_.size()) cap <<= 1;
    table_.assign(cap, kEmpty);
    for (TermId j = 0; j < terms_.size(); ++j) {
      std::size_t h = slot_hash(sym_[j], children(j)) & (cap - 1);
      while (table_[h] != kEmpty) h = (h + 1) & (cap - 1);
      table_[h] = j;
    }
  } else {
    std::size_t mask_bits = table_.size() - 1;
    std::size_t h = slot_hash(sym_[id], children(id)) & mask_bits;
    while (table_[h] != kEmpty) h = (h + 1) & mask_bits;
    table_[h] = id;
  }
}


void Universe::finish() {
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (!(terms_[i - 1] < terms_[i])) {
      throw SyntaxError("universe terms out of order");
    }
  }
  mask_stride_ = std::max<std::size_t>(sig_.max_arity(), 1);
  mask_words_ = (terms_.size() + 63) / 64;
  child_masks_.assign(sig_.size() * mask_stride_ * mask_words_, 0);
  for (TermId id = 0; id < terms_.size(); ++id) {
    if (is_var(id)) continue;
    auto ch = children(id);
    for (std::size_t p = 0; p < ch.size(); ++p) {
      child_masks_[(op(id) * mask_stride_ + p) * mask_words_ + ch[p] / 64] |=
          std::uint64_t{1} << (ch[p] % 64);
    }
  }
}

std::optional<TermId> Universe::lookup_app(
    std::size_t op, std::span<const TermId> ch) const {
  if (table_.empty()) return std::nullopt;
  auto sym = static_cast<std::int32_t>(op);
  std::size_t mask_bits = table_.size() - 1;
  std::size_t h = slot_hash(sym, ch) & mask_bits;
  for (;;) {
    TermId id = table_[h];
    if (id == kEmpty) return std::nullopt;
    if (sym_[id] == sym && arity_[id] == ch.size() &&
        std::equal(ch.begin(), ch.end(), children(id).begin())) {
      return id;
    }
    h = (h + 1) & mask_bits;
  }
}

std::optional<TermId> Universe::var_id(std::size_t var_index) const {
  if (table_.empty()) return std::nullopt;
  auto sym = -static_cast<std::int32_t>(var_index) - 1;
  std::size_t mask_bits = table_.size() - 1;
  std::size_t h = slot_hash(sym, {}) & mask_bits;
  for (;;) {
    TermId id = table_[h];
    if (id == kEmpty) return std::nullopt;
    if (sym_[id] == sym) return id;
    h = (h + 1) & mask_bits;
  }
}

std::optional<TermId> Universe::find(const Term& t) const {
  if (t.is_var()) {
    auto it = std::find(vars_.begin(), vars_.end(), t.name());
    if (it == vars_.end()) return std::nullopt;
    return var_id(static_cast<std::size_t>(it - vars_.begin()));
  }
  auto oi = sig_.index_of(t.name());
  if (!oi) return std::nullopt;
  std::vector<TermId> ch;
  ch.reserve(t.arity());
  for (const Term& a : t.args()) {
    auto c = find(a);
    if (!c) return std::nullopt;
    ch.push_back(*c);
  }
  return lookup_app(*oi, ch);
}

TermId Universe::id_of(const Term& t) const {
  auto id = find(t);
  if (!id) throw SyntaxError("term not in universe: " + t.to_string());
  return *id;
}

std::vector<std::string> Universe::labels() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.to_string());
  return out;
}

std::shared_ptr<const Universe> Universe::enumerate(
    const Signature& sig, std::vector<std::string> vars, unsigned depth,
    std::size_t cap) {
  auto u = std::shared_ptr<Universe>(new Universe(sig, std::move(vars)));
  std::vector<std::string> sorted_vars = u->vars_;
  std::sort(sorted_vars.begin(), sorted_vars.end());
  for (const auto& v : sorted_vars) u->add(Term::var(v));
  for (const auto& [name, arity] : sig.operators()) {
    if (arity == 0) u->add(Term::app(name));
  }
  // level_end[d] = number of terms of depth <= d.
  std::vector<std::size_t> level_end{u->size()};
  for (unsigned d = 1; d <= depth; ++d) {
    std::size_t hi = level_end[d - 1];
    // Terms of depth exactly d-1 occupy [lo, hi).
    std::size_t lo = d >= 2 ? level_end[d - 2] : 0;
    double projected = static_cast<double>(u->size());
    for (const auto& [name, arity] : sig.operators()) {
      if (arity == 0) continue;
      projected += std::pow(static_cast<double>(hi), arity) -
                   std::pow(static_cast<double>(lo), arity);
    }
    if (projected > static_cast<double>(cap)) {
      throw UniverseCapExceeded("universe of depth " + std::to_string(depth) +
                                " exceeds cap of " + std::to_string(cap) +
                                " terms");
    }
    if (hi == 0) break;
    for (const auto& [name, arity] : sig.operators()) {
      if (arity == 0) continue;
      std::vector<TermId> idx(arity, 0);
      for (;;) {
        bool at_level = false;
        for (TermId c : idx) at_level = at_level || c >= lo;
        if (at_level) {
          std::vector<Term> args;
          args.reserve(arity);
          for (TermId c : idx) args.push_back(u->terms_[c]);
          u->add(Term::app(name, std::move(args)));
        }
        // Odometer over [0, hi)^arity, last position fastest.
        std::size_t k = arity;
        bool done = true;
        while (k > 0) {
          --k;
          if (++idx[k] < hi) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
        if (done) break;
      }
    }
    level_end.push_back(u->size());
  }
  u->complete_depth_ = depth;
  u->finish();
  return u;
}

std::shared_ptr<const Universe> Universe::closure(
    const Signature& sig, std::vector<std::string> vars,
    std::span<const Term> seeds, std::size_t cap) {
  auto u = std::shared_ptr<Universe>(new Universe(sig, std::move(vars)));
  std::set<Term> all;
  for (const auto& v : u->vars_) all.insert(Term::var(v));
  for (const auto& [name, arity] : sig.operators()) {
    if (arity == 0) all.insert(Term::app(name));
  }
  std::function<void(const Term&)> rec = [&](const Term& t) {
    if (!all.insert(t).second) return;
    if (all.size() > cap) {
      throw UniverseCapExceeded("subterm closure exceeds cap of " +
                                std::to_string(cap) + " terms");
    }
    for (const Term& a : t.args()) rec(a);
  };
  for (const Term& s : seeds) rec(s);
  for (const Term& t : all) u->add(t);
  u->finish();
  return u;
}

}  // namespace reltrs
